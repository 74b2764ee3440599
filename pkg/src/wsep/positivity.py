"""Positivity tests: sample points of the real Grassmannian with positive
maximal minors, direct Pluecker evaluation, and propagation of values along
exchange moves via the three-term exchange relation

    D[I+ij] * D[I+st] = D[I+is] * D[I+jt] + D[I+it] * D[I+sj]   (i<s<j<t)

which is subtraction-free, so positive inputs propagate to positive outputs.
Default arithmetic is exact rational; float mode exists for sweeps and is
checked against a relative tolerance.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from .wscoll import Move, WSCollection, apply_move, find_moves


@dataclass(frozen=True)
class GrassmannPoint:
    """A full-rank k-by-n matrix; rows span the point's subspace."""

    rows: tuple[tuple, ...]

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def __post_init__(self):
        if not self.rows or any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix rows must be non-empty and equal length")
        if all(v == 0 for v in self.plucker_vector().values()):
            raise ValueError("matrix is not of full rank")

    def minor(self, cols: Iterable[int]):
        cols = tuple(cols)
        sub = [[self.rows[r][c - 1] for c in cols] for r in range(self.k)]
        return _det(sub)

    def plucker_vector(self) -> dict[tuple[int, ...], object]:
        return {
            K: self.minor(K) for K in combinations(range(1, self.n + 1), self.k)
        }

    def as_floats(self) -> "GrassmannPoint":
        return GrassmannPoint(tuple(tuple(float(x) for x in r) for r in self.rows))


def _det(mat):
    if len(mat) == 1:
        return mat[0][0]
    total = None
    for c in range(len(mat)):
        sub = [row[:c] + row[c + 1:] for row in mat[1:]]
        term = mat[0][c] * _det(sub)
        if c % 2:
            term = -term
        total = term if total is None else total + term
    return total


def vandermonde_point(nodes: Iterable[Fraction | int], k: int) -> GrassmannPoint:
    """Rows are successive powers of the nodes; with 0 < x_1 < ... < x_n all
    maximal minors are positive (each is a Vandermonde determinant)."""
    xs = [Fraction(x) for x in nodes]
    if any(x <= 0 for x in xs):
        raise ValueError("nodes must be positive")
    if any(xs[i] >= xs[i + 1] for i in range(len(xs) - 1)):
        raise ValueError("nodes must be strictly increasing")
    if k < 1 or k > len(xs):
        raise ValueError("need 1 <= k <= number of nodes")
    return GrassmannPoint(tuple(tuple(x ** i for x in xs) for i in range(k)))


@lru_cache(maxsize=None)
def _move_edges(c: WSCollection) -> tuple[tuple[Move, WSCollection], ...]:
    return tuple((mv, apply_move(c, mv)) for mv in find_moves(c))


@dataclass(frozen=True)
class Propagation:
    ok: bool
    values: dict
    witness: str | None = None


def propagate(
    c: WSCollection,
    vals: Mapping[tuple[int, ...], object],
    mode: str = "exact",
    rel_tol: float = 1e-9,
) -> Propagation:
    """Extend positive values given on the members of c to every k-subset by
    walking the move graph; each move computes the missing diagonal from the
    exchange relation.  Re-derivations of an already-known value must agree
    (exactly, or within rel_tol in float mode)."""
    if c.k not in (2, 3):
        raise ValueError("propagation relies on move-graph connectivity (k in {2,3})")
    if mode not in ("exact", "float"):
        raise ValueError("mode must be 'exact' or 'float'")
    known = {}
    for s in c.sets:
        if s not in vals:
            raise ValueError(f"no value supplied for member {s}")
        v = vals[s]
        if not v > 0:
            raise ValueError(f"value for {s} is not positive")
        known[s] = float(v) if mode == "float" else v

    def close(a, b) -> bool:
        if mode == "exact":
            return a == b
        scale = max(abs(a), abs(b))
        return scale == 0 or abs(a - b) <= rel_tol * scale

    seen = {c}
    queue = deque([c])
    while queue:
        cur = queue.popleft()
        for mv, nxt in _move_edges(cur):
            a = mv.anchor
            side = lambda x, y: tuple(sorted(a + (x, y)))
            numerator = (
                known[side(mv.i, mv.s)] * known[side(mv.j, mv.t)]
                + known[side(mv.i, mv.t)] * known[side(mv.s, mv.j)]
            )
            if known[mv.removes] == 0:
                return Propagation(False, known, f"division by zero at {mv.removes}")
            value = numerator / known[mv.removes]
            if mv.adds in known:
                if not close(known[mv.adds], value):
                    return Propagation(
                        False,
                        known,
                        f"inconsistent re-derivation of {mv.adds}: "
                        f"{known[mv.adds]} vs {value}",
                    )
            else:
                known[mv.adds] = value
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return Propagation(True, known, None)


POSITIVE = "POSITIVE"
NOT_DETERMINED = "NOT-DETERMINED"


@dataclass(frozen=True)
class Verdict:
    verdict: str
    values: dict
    witness: str | None = None


def positivity_test(
    c: WSCollection,
    vals: Mapping[tuple[int, ...], object],
    mode: str = "exact",
    rel_tol: float = 1e-9,
) -> Verdict:
    """POSITIVE when propagation succeeds and every derived coordinate is
    positive; otherwise NOT-DETERMINED with a witness."""
    result = propagate(c, vals, mode=mode, rel_tol=rel_tol)
    if not result.ok:
        return Verdict(NOT_DETERMINED, result.values, result.witness)
    bad = [K for K, v in result.values.items() if not v > 0]
    if bad:
        return Verdict(NOT_DETERMINED, result.values, f"non-positive value at {min(bad)}")
    return Verdict(POSITIVE, result.values, None)


def short_plucker_violations(
    values: Mapping[tuple[int, ...], object], k: int, n: int, rel_tol: float = 0.0
) -> list[tuple]:
    """Quadruples (anchor, i, s, j, t) whose six-term exchange relation fails
    on the given (possibly partial) value assignment."""
    out = []
    universe = range(1, n + 1)
    for anchor in combinations(universe, k - 2):
        rest = [x for x in universe if x not in anchor]
        for i, s, j, t in combinations(rest, 4):
            need = [
                tuple(sorted(anchor + pair))
                for pair in ((i, j), (s, t), (i, s), (j, t), (i, t), (s, j))
            ]
            if any(K not in values for K in need):
                continue
            lhs = values[need[0]] * values[need[1]]
            rhs = values[need[2]] * values[need[3]] + values[need[4]] * values[need[5]]
            if rel_tol == 0.0:
                bad = lhs != rhs
            else:
                scale = max(abs(lhs), abs(rhs))
                bad = scale != 0 and abs(lhs - rhs) > rel_tol * scale
            if bad:
                out.append((anchor, i, s, j, t))
    return out
