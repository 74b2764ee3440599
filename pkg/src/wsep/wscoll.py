"""Maximal weakly separated collections: validation, greedy completion, the
base collection, exchange moves, flip-graph enumeration, dihedral orbits,
height, and the constructive reduction to the base collection for k in {2,3}.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .subsets import (
    Dihedral,
    as_subset,
    check_in_range,
    is_boundary,
    weakly_separated,
)


@dataclass(frozen=True, order=True)
class WSCollection:
    """A collection of k-subsets of [1..n] in canonical (sorted) form."""

    k: int
    n: int
    sets: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(k: int, n: int, sets: Iterable[Iterable[int]]) -> "WSCollection":
        canon = sorted({check_in_range(s, n) for s in sets})
        for s in canon:
            if len(s) != k:
                raise ValueError(f"{s} is not a {k}-subset")
        return WSCollection(k, n, tuple(canon))

    def __contains__(self, s) -> bool:
        return tuple(s) in set(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def member_set(self) -> frozenset:
        return frozenset(self.sets)

    def non_boundary(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s for s in self.sets if not is_boundary(s, self.n))

    def to_json_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "sets": [list(s) for s in self.sets]}

    @staticmethod
    def from_json_dict(d: dict) -> "WSCollection":
        return WSCollection.of(d["k"], d["n"], [tuple(s) for s in d["sets"]])


@dataclass(frozen=True)
class Move:
    """Exchange move inside a maximal collection: swaps the two diagonals
    anchor+{i,j} and anchor+{s,t} of the quadruple i < s < j < t whose four
    side sets anchor+{i,s}, anchor+{s,j}, anchor+{j,t}, anchor+{i,t} are all
    present."""

    anchor: tuple[int, ...]
    i: int
    s: int
    j: int
    t: int
    removes: tuple[int, ...]
    adds: tuple[int, ...]

    def __post_init__(self):
        if not self.i < self.s < self.j < self.t:
            raise ValueError("move quadruple must be strictly increasing")
        diag_ij = as_subset(self.anchor + (self.i, self.j))
        diag_st = as_subset(self.anchor + (self.s, self.t))
        if {self.removes, self.adds} != {diag_ij, diag_st}:
            raise ValueError("removes/adds must be the two diagonals of the quadruple")
        if self.removes == self.adds:
            raise ValueError("degenerate move")

    @property
    def sides(self) -> tuple[tuple[int, ...], ...]:
        a = self.anchor
        return (
            as_subset(a + (self.i, self.s)),
            as_subset(a + (self.s, self.j)),
            as_subset(a + (self.j, self.t)),
            as_subset(a + (self.i, self.t)),
        )

    @staticmethod
    def between(anchor: Iterable[int], removes: Iterable[int], adds: Iterable[int]) -> "Move":
        """Build a move from its anchor and the two diagonals."""
        anchor = as_subset(anchor)
        removes = as_subset(removes)
        adds = as_subset(adds)
        pair_r = sorted(set(removes) - set(anchor))
        pair_a = sorted(set(adds) - set(anchor))
        i, s, j, t = sorted(pair_r + pair_a)
        return Move(anchor, i, s, j, t, removes, adds)

    def inverse(self) -> "Move":
        return Move(self.anchor, self.i, self.s, self.j, self.t, self.adds, self.removes)

    def translate(self, g: Dihedral) -> "Move":
        return Move.between(
            g.apply_subset(self.anchor),
            g.apply_subset(self.removes),
            g.apply_subset(self.adds),
        )

    def to_json_dict(self) -> dict:
        return {
            "anchor": list(self.anchor),
            "quad": [self.i, self.s, self.j, self.t],
            "removes": list(self.removes),
            "adds": list(self.adds),
        }


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple[str, ...] = ()
    crossing_pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()


def validate(c: WSCollection) -> ValidationReport:
    issues = []
    crossings = []
    for s in c.sets:
        if len(s) != c.k:
            issues.append(f"{s} has size {len(s)}, expected {c.k}")
    for a, b in combinations(c.sets, 2):
        if not weakly_separated(a, b):
            crossings.append((a, b))
            issues.append(f"{a} and {b} are not weakly separated")
    return ValidationReport(not issues, tuple(issues), tuple(crossings))


def complete_to_maximal(c: WSCollection) -> WSCollection:
    """Greedy completion in lexicographic order; deterministic, maximal by
    inclusion."""
    report = validate(c)
    if not report.ok:
        raise ValueError(f"cannot complete an invalid collection: {report.issues[0]}")
    chosen = list(c.sets)
    have = set(chosen)
    for cand in combinations(range(1, c.n + 1), c.k):
        if cand in have:
            continue
        if all(weakly_separated(cand, s) for s in chosen):
            chosen.append(cand)
            have.add(cand)
    return WSCollection.of(c.k, c.n, chosen)


def is_maximal(c: WSCollection) -> bool:
    return complete_to_maximal(c) == c


def boundary_sets(k: int, n: int) -> list[tuple[int, ...]]:
    return sorted(
        tuple(sorted((start + d) % n + 1 for d in range(k))) for start in range(n)
    )


def base_collection(k: int, n: int) -> WSCollection:
    """The fan-shaped maximal collection: all boundary subsets together with
    the prefix-plus-run family [1..i] + [j..j+k-i-1]; its size is k(n-k)+1."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    sets = set(boundary_sets(k, n))
    for i in range(1, k):
        for j in range(i + 2, n + i - k + 1):
            sets.add(tuple(range(1, i + 1)) + tuple(range(j, j + k - i)))
    out = WSCollection.of(k, n, sets)
    assert len(out) == k * (n - k) + 1
    return out


def translate(c: WSCollection, g: Dihedral) -> WSCollection:
    if g.n != c.n:
        raise ValueError("dihedral element acts on the wrong polygon")
    return WSCollection.of(c.k, c.n, (g.apply_subset(s) for s in c.sets))


def find_moves(c: WSCollection) -> list[Move]:
    """All exchange moves available in c (which should be maximal): for each
    anchor and quadruple with all four sides present, exactly one diagonal is
    present in a maximal collection, and the move swaps it for the other."""
    members = c.member_set()
    universe = range(1, c.n + 1)
    moves = []
    for anchor in combinations(universe, c.k - 2):
        rest = [x for x in universe if x not in anchor]
        for i, s, j, t in combinations(rest, 4):
            a = anchor
            if not (
                tuple(sorted(a + (i, s))) in members
                and tuple(sorted(a + (s, j))) in members
                and tuple(sorted(a + (j, t))) in members
                and tuple(sorted(a + (i, t))) in members
            ):
                continue
            diag_ij = tuple(sorted(a + (i, j)))
            diag_st = tuple(sorted(a + (s, t)))
            if diag_ij in members:
                moves.append(Move(a, i, s, j, t, diag_ij, diag_st))
            elif diag_st in members:
                moves.append(Move(a, i, s, j, t, diag_st, diag_ij))
    return moves


def diagonal_dichotomy_holds(c: WSCollection) -> bool:
    """Whenever all four sides of a quadruple are present, exactly one of the
    two diagonals is."""
    members = c.member_set()
    universe = range(1, c.n + 1)
    for anchor in combinations(universe, c.k - 2):
        rest = [x for x in universe if x not in anchor]
        for i, s, j, t in combinations(rest, 4):
            a = anchor
            if not all(
                tuple(sorted(a + pair)) in members
                for pair in ((i, s), (s, j), (j, t), (i, t))
            ):
                continue
            if (tuple(sorted(a + (i, j))) in members) == (
                tuple(sorted(a + (s, t))) in members
            ):
                return False
    return True


def apply_move(c: WSCollection, mv: Move) -> WSCollection:
    members = set(c.sets)
    for side in mv.sides:
        if side not in members:
            raise ValueError(f"move side {side} absent from collection")
    if mv.removes not in members:
        raise ValueError(f"move diagonal {mv.removes} absent from collection")
    if mv.adds in members:
        raise ValueError(f"move target {mv.adds} already present")
    members.remove(mv.removes)
    members.add(mv.adds)
    return WSCollection.of(c.k, c.n, members)


def enumerate_component(seed: WSCollection) -> set[WSCollection]:
    """Closure of the seed under all exchange moves (breadth-first)."""
    seen = {seed}
    queue = deque([seed])
    while queue:
        c = queue.popleft()
        for mv in find_moves(c):
            d = apply_move(c, mv)
            if d not in seen:
                seen.add(d)
                queue.append(d)
    return seen


@lru_cache(maxsize=None)
def component_of_base(k: int, n: int) -> frozenset[WSCollection]:
    return frozenset(enumerate_component(base_collection(k, n)))


def dihedral_orbits(cs: Iterable[WSCollection]) -> list[tuple[WSCollection, ...]]:
    """Partition collections into orbits of the polygon-symmetry action.
    Orbits are listed and internally sorted canonically."""
    pool = set(cs)
    if not pool:
        return []
    n = next(iter(pool)).n
    orbits = []
    while pool:
        c = min(pool)
        orbit = {translate(c, g) for g in Dihedral.group(n)} & pool
        pool -= orbit
        orbits.append(tuple(sorted(orbit)))
    return sorted(orbits)


def height(c: WSCollection) -> int:
    """Number of non-boundary member sets containing the top index n."""
    return sum(
        1 for s in c.sets if c.n in s and not is_boundary(s, c.n)
    )


@dataclass(frozen=True)
class Reduction:
    """A certified move path: applying `moves` in order to `pre_translation`
    applied to `start` produces `end` (the base collection).  This
    implementation always reduces by moves alone, so pre_translation is the
    identity."""

    start: WSCollection
    pre_translation: Dihedral
    moves: tuple[Move, ...]
    end: WSCollection
    intermediates: tuple[WSCollection, ...] = field(repr=False, default=())

    def to_json_dict(self) -> dict:
        return {
            "pre_translation": self.pre_translation.to_json_dict(),
            "moves": [m.to_json_dict() for m in self.moves],
            "length": len(self.moves),
            "end": self.end.to_json_dict(),
        }


def _marker(n: int) -> tuple[int, ...]:
    return (1, n - 2, n - 1)


def dihedral_witness(c: WSCollection) -> Dihedral:
    """Some polygon symmetry g with the near-boundary marker {1,n-2,n-1} in
    g.c; exists for every maximal k=3 collection."""
    marker = _marker(c.n)
    for g in Dihedral.group(c.n):
        if marker in translate(c, g):
            return g
    raise ValueError("no dihedral translate contains the near-boundary marker")


def _prefix(k: int) -> tuple[int, ...]:
    # anchor shared by every pinch move: {1} for triples, empty for pairs
    return (1,) if k == 3 else ()


def pinch_index(c: WSCollection, top: int | None = None) -> int:
    """The unique b with both prefix+{b,top-1} and prefix+{b,top} present.

    For k=3 the collection must contain {1,top-2,top-1}.  Found as the
    largest b in [2..top-2] whose prefix+{b,top} is present.
    """
    if c.k not in (2, 3):
        raise ValueError("pinch index defined for k in {2,3} only")
    top = c.n if top is None else top
    pre = _prefix(c.k)
    members = c.member_set()
    if c.k == 3 and tuple(sorted((1, top - 2, top - 1))) not in members:
        raise ValueError(f"collection lacks {{1,{top-2},{top-1}}}")
    lo = 2 if c.k == 3 else 1
    for b in range(top - 2, lo - 1, -1):
        if tuple(sorted(pre + (b, top))) in members:
            partner = tuple(sorted(pre + (b, top - 1)))
            if partner not in members:
                raise ValueError(f"pinch candidate {b} lacks partner {partner}")
            return b
    raise ValueError("no pinch index found")


def _pinch_move(c: WSCollection, top: int) -> Move:
    """The height-decreasing move at the current top index: swap
    prefix+{b,top} for prefix+{a,top-1} where b is the pinch index and a is
    the largest smaller index with prefix+{a,top} present."""
    pre = _prefix(c.k)
    members = c.member_set()
    b = pinch_index(c, top)
    lo = 2 if c.k == 3 else 1
    a = None
    for x in range(b - 1, lo - 1, -1):
        if tuple(sorted(pre + (x, top))) in members:
            a = x
            break
    if a is None:
        raise ValueError("no companion index below the pinch index")
    if tuple(sorted(pre + (a, b))) not in members:
        raise ValueError(f"expected {tuple(sorted(pre + (a, b)))} to be present")
    return Move(
        pre,
        a,
        b,
        top - 1,
        top,
        tuple(sorted(pre + (b, top))),
        tuple(sorted(pre + (a, top - 1))),
    )


def _generator_base_moves(k: int, gen: Dihedral, m: int) -> list[Move]:
    """Moves reducing gen . base(k,m) to base(k,m) for gen a basic rotation
    or reflection, following the inductive two-step (rotation) / one-step
    (reflection) descent to the (m-1)-gon."""
    if m <= k + 1:
        return []
    if k == 2:
        # either generator sends the fan at 1 to the fan at 2
        mv = Move.between((), (2, m), (1, m - 1))
        return [mv] + _generator_base_moves(k, Dihedral(m - 1, gen.rot, gen.refl), m - 1)
    if gen.refl:
        mvs = [Move.between((m - 1,), (2, m - 1, m), (1, m - 2, m - 1))]
    else:
        mvs = [
            Move.between((2,), (2, 3, m), (1, 2, m - 1)),
            Move.between((m - 1,), (2, m - 1, m), (1, m - 2, m - 1)),
        ]
    return mvs + _generator_base_moves(k, Dihedral(m - 1, gen.rot, gen.refl), m - 1)


def _base_translate_moves(k: int, g: Dihedral, m: int) -> list[Move]:
    """Moves reducing g . base(k,m) to base(k,m), peeling one generator at a
    time: g = gen . g2, reduce g2 . base under gen's translation, then finish
    with the generator reduction."""
    if m <= k + 1 or g.is_identity():
        return []
    if g.rot > 0:
        gen = Dihedral.rotation(m)
        g2 = Dihedral(m, g.rot - 1, g.refl)
    else:
        gen = Dihedral.reflection(m)
        g2 = Dihedral.identity(m)
    inner = _base_translate_moves(k, g2, m)
    return [mv.translate(gen) for mv in inner] + _generator_base_moves(k, gen, m)


def _moves_to_base(c: WSCollection) -> list[Move]:
    k, m = c.k, c.n
    if m <= k + 1:
        expected = WSCollection.of(k, m, combinations(range(1, m + 1), k))
        if c != expected:
            raise ValueError("unexpected non-maximal collection at recursion floor")
        return []
    g = dihedral_witness(c) if k == 3 else Dihedral.identity(m)
    d = translate(c, g)
    pinch_moves = []
    while height(d) > 0:
        mv = _pinch_move(d, m)
        d = apply_move(d, mv)
        pinch_moves.append(mv)
    stripped = WSCollection.of(k, m - 1, (s for s in d.sets if m not in s))
    inner = _moves_to_base(stripped)
    ginv = g.inverse()
    tail = _base_translate_moves(k, ginv, m)
    return [mv.translate(ginv) for mv in pinch_moves + inner] + tail


def reduce_to_base(c: WSCollection) -> Reduction:
    """A certified sequence of exchange moves from c to the base collection.

    Every intermediate collection is replayed and validated; raises if the
    path breaks (which would falsify the construction, not the input).
    """
    if c.k not in (2, 3):
        raise ValueError("reduction implemented for k in {2,3} only")
    if not is_maximal(c):
        raise ValueError("reduction requires a maximal collection")
    moves = _moves_to_base(c)
    cur = c
    intermediates = []
    for mv in moves:
        cur = apply_move(cur, mv)
        if not validate(cur).ok:
            raise AssertionError("reduction produced a non-separated collection")
        intermediates.append(cur)
    target = base_collection(c.k, c.n)
    if cur != target:
        raise AssertionError("reduction did not land on the base collection")
    return Reduction(
        start=c,
        pre_translation=Dihedral.identity(c.n),
        moves=tuple(moves),
        end=cur,
        intermediates=tuple(intermediates),
    )


def sizes_histogram(cs: Iterable[WSCollection]) -> dict[int, int]:
    hist: dict[int, int] = {}
    for c in cs:
        hist[len(c)] = hist.get(len(c), 0) + 1
    return dict(sorted(hist.items()))
