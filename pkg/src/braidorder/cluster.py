"""
Cluster seeds, mutation, and surface presets.

Cluster variables are Laurent polynomials in the initial variables
``x1..xm``. Mutation directions are 1-based, matching the usual
``mu_1 .. mu_m`` labelling; arc indices in triangulations are 0-based.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .laurent import InexactDivisionError, LaurentPoly, canonical_text, divide_exact, is_positive

__all__ = [
    "ExchangeMatrix",
    "Seed",
    "Triangulation",
    "MutationTrace",
    "AuditReport",
    "PRESETS",
    "initial_seed",
    "mutate",
    "mutate_matrix",
    "mutate_sequence",
    "matrix_from_triangulation",
    "surface_preset",
    "laurent_audit",
    "positivity_audit",
]

Matrix = tuple[tuple[int, ...], ...]


def _is_skew(m: Matrix) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(m[i][j] == -m[j][i] for i in range(n) for j in range(n))


@dataclass(frozen=True)
class ExchangeMatrix:
    entries: Matrix

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        if not _is_skew(entries):
            raise ValueError(f"exchange matrix {entries} is not skew-symmetric")
        object.__setattr__(self, "entries", entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class Seed:
    variables: tuple[LaurentPoly, ...]
    matrix: ExchangeMatrix

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not isinstance(self.matrix, ExchangeMatrix):
            object.__setattr__(self, "matrix", ExchangeMatrix(self.matrix))
        if len(self.variables) != self.matrix.size:
            raise ValueError(f"{len(self.variables)} variables for a {self.matrix.size}x{self.matrix.size} matrix")

    @property
    def rank(self) -> int:
        return len(self.variables)

    def texts(self) -> list[str]:
        return [canonical_text(v) for v in self.variables]

    def canonical_key(self) -> tuple:
        """Key identifying the unlabelled seed: variables sorted, matrix permuted to match."""
        texts = self.texts()
        order = sorted(range(self.rank), key=lambda i: texts[i])
        m = self.matrix.entries
        return (
            tuple(texts[i] for i in order),
            tuple(tuple(m[i][j] for j in order) for i in order),
        )

    def to_json(self) -> dict:
        return {"variables": self.texts(), "matrix": self.matrix.as_lists()}


def initial_seed(matrix) -> Seed:
    """Seed with cluster ``(x1, ..., xm)`` for a skew-symmetric ``m x m`` matrix."""
    matrix = matrix if isinstance(matrix, ExchangeMatrix) else ExchangeMatrix(matrix)
    names = tuple(f"x{i + 1}" for i in range(matrix.size))
    return Seed(tuple(LaurentPoly.variable(v, names) for v in names), matrix)


def mutate_matrix(b: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation in direction ``k`` (1-based)."""
    m = b.entries
    n = len(m)
    c = k - 1
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == c or j == c:
                out[i][j] = -m[i][j]
            else:
                out[i][j] = m[i][j] + (abs(m[i][c]) * m[c][j] + m[i][c] * abs(m[c][j])) // 2
    return ExchangeMatrix(tuple(tuple(row) for row in out))


def mutate(s: Seed, k: int) -> Seed:
    """Mutate ``s`` in direction ``k`` (1-based).

    The new variable is ``(prod x_i^[b_ik]+ + prod x_i^[-b_ik]+) / x_k``; the
    division must be exact, otherwise ``InexactDivisionError`` propagates.
    """
    if not 1 <= k <= s.rank:
        raise IndexError(f"mutation direction {k} outside 1..{s.rank}")
    c = k - 1
    m = s.matrix.entries
    one = LaurentPoly.constant(1, s.variables[0].variables)
    up, down = one, one
    for i, x in enumerate(s.variables):
        if m[i][c] > 0:
            up = up * x ** m[i][c]
        elif m[i][c] < 0:
            down = down * x ** (-m[i][c])
    new = divide_exact(up + down, s.variables[c])
    variables = list(s.variables)
    variables[c] = new
    return Seed(tuple(variables), mutate_matrix(s.matrix, k))


@dataclass(frozen=True)
class MutationTrace:
    source: str
    directions: tuple[int, ...]
    seeds: tuple[Seed, ...]  # seeds[0] is the start, seeds[i+1] = mutate(seeds[i], directions[i])


def mutate_sequence(s: Seed, directions: Sequence[int], source: str = "matrix") -> MutationTrace:
    seeds = [s]
    for k in directions:
        seeds.append(mutate(seeds[-1], k))
    return MutationTrace(source, tuple(directions), tuple(seeds))


# -- triangulations -------------------------------------------------------------


@dataclass(frozen=True)
class Triangulation:
    """Ideal triangulation; each triangle lists its sides counterclockwise.

    Sides are arc indices ``0..arc_count-1`` or ``None`` for a boundary segment.
    """

    arc_count: int
    triangles: tuple[tuple[int | None, int | None, int | None], ...]

    def __post_init__(self):
        triangles = tuple(tuple(t) for t in self.triangles)
        for t in triangles:
            if len(t) != 3:
                raise ValueError(f"triangle {t} does not have three sides")
            arcs = [a for a in t if a is not None]
            if any(not 0 <= a < self.arc_count for a in arcs):
                raise ValueError(f"triangle {t} uses an arc outside 0..{self.arc_count - 1}")
            if len(set(arcs)) != len(arcs):
                raise ValueError(f"triangle {t} is self-folded")
        object.__setattr__(self, "triangles", triangles)


def matrix_from_triangulation(t: Triangulation) -> ExchangeMatrix:
    m = [[0] * t.arc_count for _ in range(t.arc_count)]
    for tri in t.triangles:
        for s in range(3):
            i, j = tri[s], tri[(s + 1) % 3]
            if i is not None and j is not None:
                m[i][j] += 1
                m[j][i] -= 1
    return ExchangeMatrix(tuple(tuple(row) for row in m))


PRESETS: dict[str, Triangulation] = {
    # once-punctured torus: two triangles, each bounded by the three arcs in the same cyclic order
    "torus-1": Triangulation(3, ((0, 1, 2), (0, 1, 2))),
    # annulus with one marked point per boundary: two bridging arcs, one boundary segment per triangle
    "annulus-2": Triangulation(2, ((0, 1, None), (0, 1, None))),
}


def surface_preset(name: str) -> Seed:
    try:
        triangulation = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; expected one of {sorted(PRESETS)}") from None
    return initial_seed(matrix_from_triangulation(triangulation))


# -- audits -----------------------------------------------------------------------


@dataclass
class AuditReport:
    check: str
    depth: int
    explored: int = 0
    variables: list[str] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "depth": self.depth,
            "explored": self.explored,
            "distinct_variables": len(self.variables),
            "variables": self.variables,
            "failures": self.failures,
            "passed": self.passed,
        }


def _explore(s0: Seed, depth: int, check_positive: bool) -> AuditReport:
    if depth < 0:
        raise ValueError("depth must be >= 0")
    report = AuditReport("positivity" if check_positive else "laurent", depth)
    found: set[str] = set(s0.texts())
    seen = {s0.canonical_key()}
    queue = deque([(s0, (), 0)])
    while queue:
        seed, path, level = queue.popleft()
        report.explored += 1
        if level == depth:
            continue
        for k in range(1, seed.rank + 1):
            if path and path[-1] == k:
                continue
            try:
                child = mutate(seed, k)
            except InexactDivisionError as exc:
                report.failures.append({"sequence": list(path + (k,)), "reason": str(exc)})
                continue
            new = child.variables[k - 1]
            text = canonical_text(new)
            found.add(text)
            if check_positive and not is_positive(new):
                report.failures.append({"sequence": list(path + (k,)), "reason": f"non-positive variable {text}"})
            key = child.canonical_key()
            if key not in seen:
                seen.add(key)
                queue.append((child, path + (k,), level + 1))
    if check_positive:
        for i, v in enumerate(s0.variables):
            if not is_positive(v):
                report.failures.append({"sequence": [], "reason": f"non-positive initial variable {i + 1}"})
    report.variables = sorted(found, key=lambda s: (len(s), s))
    return report


def laurent_audit(s0: Seed, depth: int) -> AuditReport:
    """Mutate breadth-first up to ``depth`` and record any inexact exchange."""
    return _explore(s0, depth, check_positive=False)


def positivity_audit(s0: Seed, depth: int) -> AuditReport:
    """As :func:`laurent_audit`, also requiring positive coefficients throughout."""
    return _explore(s0, depth, check_positive=True)
