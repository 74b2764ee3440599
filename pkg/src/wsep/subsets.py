"""Subset-level combinatorics: weak separation, the Stieffel map, commutation
exponents, the dihedral action on the n-gon, and diameter/boundary notions.

Subsets of [1..n] are handled as sorted tuples of distinct 1-based integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def as_subset(xs: Iterable[int]) -> tuple[int, ...]:
    """Canonical form: strictly increasing tuple; rejects duplicates."""
    t = tuple(sorted(xs))
    if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"duplicate elements in subset {t}")
    if t and t[0] < 1:
        raise ValueError(f"subset elements must be >= 1, got {t}")
    return t


def check_in_range(K: Iterable[int], n: int) -> tuple[int, ...]:
    t = as_subset(K)
    if t and t[-1] > n:
        raise ValueError(f"subset {t} not contained in [1..{n}]")
    return t


def parse_subset(text: str) -> tuple[int, ...]:
    """Comma-separated ascending integers, e.g. "1,3,5"; "" is the empty set."""
    text = text.strip()
    if not text:
        return ()
    return as_subset(int(tok) for tok in text.split(","))


def format_subset(K: Iterable[int]) -> str:
    return ",".join(str(x) for x in K)


def precedes(I: Iterable[int], J: Iterable[int]) -> bool:
    """Every element of I is strictly below every element of J (vacuous if
    either side is empty)."""
    I, J = tuple(I), tuple(J)
    if not I or not J:
        return True
    return max(I) < min(J)


def _side_split(first: frozenset, second: frozenset):
    """Split second-first into the parts below / above first-second.

    Returns (low, high) when the split exhausts the difference -- i.e. when
    the pair satisfies the separation condition with `first` in the large
    role -- else None.  The split is forced: an element strictly inside the
    span of first-second can join neither part.
    """
    d_first = first - second
    d_second = second - first
    if not d_first:
        return ((), tuple(sorted(d_second)))
    lo, hi = min(d_first), max(d_first)
    low = tuple(x for x in sorted(d_second) if x < lo)
    high = tuple(x for x in sorted(d_second) if x > hi)
    if len(low) + len(high) != len(d_second):
        return None
    return (low, high)


def separation_split(I: Iterable[int], J: Iterable[int]):
    """The canonical split of J-I around I-J, or None when no valid split
    exists.  Requires |I| >= |J| to be meaningful as "case one"."""
    return _side_split(frozenset(I), frozenset(J))


def weakly_separated(I: Iterable[int], J: Iterable[int]) -> bool:
    """Weak separation of two subsets of the same ground set [1..n].

    Evaluated via the canonical split; `weakly_separated_by_crossings` is an
    independent second path and the two must agree.
    """
    sI, sJ = frozenset(I), frozenset(J)
    if len(sI) >= len(sJ) and _side_split(sI, sJ) is not None:
        return True
    if len(sJ) >= len(sI) and _side_split(sJ, sI) is not None:
        return True
    return False


def weakly_separated_by_crossings(I: Iterable[int], J: Iterable[int]) -> bool:
    """Weak separation via forbidden crossing patterns.

    For |I| < |J|: no element of I-J sits strictly between two elements of
    J-I.  For |I| = |J|: the merged difference sets must not alternate
    I,J,I,J (equivalently at most 3 blocks), i.e. no crossing chords on the
    n-gon.
    """
    sI, sJ = frozenset(I), frozenset(J)
    if len(sI) > len(sJ):
        sI, sJ = sJ, sI
    dI = sorted(sI - sJ)
    dJ = sorted(sJ - sI)
    if len(sI) < len(sJ):
        if not dJ:
            return True
        return not any(dJ[0] < b < dJ[-1] for b in dI)
    tagged = sorted([(x, 0) for x in dI] + [(x, 1) for x in dJ])
    blocks = 0
    prev = None
    for _, tag in tagged:
        if tag != prev:
            blocks += 1
            prev = tag
    return blocks <= 3


@dataclass(frozen=True)
class MinorIndex:
    """Row/column index pair of a quantum minor in the k-by-m algebra."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    k: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "rows", as_subset(self.rows))
        object.__setattr__(self, "cols", as_subset(self.cols))
        if not self.rows or len(self.rows) != len(self.cols):
            raise ValueError("row and column sets must be non-empty of equal size")
        if self.rows[-1] > self.k:
            raise ValueError(f"row set {self.rows} exceeds k={self.k}")
        if self.cols[-1] > self.m:
            raise ValueError(f"column set {self.cols} exceeds m={self.m}")

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_json_dict(self) -> dict:
        return {"A": list(self.rows), "B": list(self.cols), "k": self.k, "m": self.m}

    @staticmethod
    def from_json_dict(d: dict) -> "MinorIndex":
        return MinorIndex(tuple(d["A"]), tuple(d["B"]), d["k"], d["m"])


def stieffel_subset(mi: MinorIndex) -> tuple[int, ...]:
    """The k-subset of [1..k+m] attached to a minor index: shift the column
    set up by k and fill with the complement of the reversed row set."""
    w0 = {mi.k + 1 - a for a in mi.rows}
    kept = [x for x in range(1, mi.k + 1) if x not in w0]
    return tuple(sorted(kept + [b + mi.k for b in mi.cols]))


def plucker_exponent(I: Iterable[int], J: Iterable[int]) -> int | None:
    """Commutation exponent of two equal-size Pluecker index sets: |high| -
    |low| of the canonical split when I takes the large role, the negated
    swap otherwise; None when the pair is not weakly separated."""
    sI, sJ = frozenset(I), frozenset(J)
    if len(sI) != len(sJ):
        raise ValueError("plucker_exponent needs equal-size subsets")
    split = _side_split(sI, sJ)
    if split is not None:
        low, high = split
        return len(high) - len(low)
    split = _side_split(sJ, sI)
    if split is not None:
        low, high = split
        return -(len(high) - len(low))
    return None


def minor_exponent(p: MinorIndex, r: MinorIndex) -> int | None:
    """Commutation exponent of two quantum minors, or None when they do not
    quasi-commute.  Antisymmetric by construction."""
    if (p.k, p.m) != (r.k, r.m):
        raise ValueError("minor indices must share the same algebra dimensions")
    I = frozenset(stieffel_subset(p))
    J = frozenset(stieffel_subset(r))
    split = _side_split(I, J)
    if split is not None:
        low, high = split
        return len(high) - len(low) + p.size - r.size
    split = _side_split(J, I)
    if split is not None:
        low, high = split
        return -(len(high) - len(low) + r.size - p.size)
    return None


@dataclass(frozen=True)
class Dihedral:
    """Symmetry of the n-gon in (rotation, reflection) normal form.

    An element acts as rot steps of the basic rotation after an optional
    basic reflection: g = rho^rot * sigma^refl, where rho sends x to x+1
    (mod n) and sigma swaps 1,2 and sends x >= 3 to n+3-x.
    """

    n: int
    rot: int = 0
    refl: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "rot", self.rot % self.n)

    @staticmethod
    def identity(n: int) -> "Dihedral":
        return Dihedral(n)

    @staticmethod
    def rotation(n: int, steps: int = 1) -> "Dihedral":
        return Dihedral(n, steps, False)

    @staticmethod
    def reflection(n: int) -> "Dihedral":
        return Dihedral(n, 0, True)

    @staticmethod
    def group(n: int):
        for refl in (False, True):
            for rot in range(n):
                yield Dihedral(n, rot, refl)

    def apply(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"index {x} outside [1..{self.n}]")
        if self.refl:
            if x == 1:
                x = 2
            elif x == 2:
                x = 1
            else:
                x = self.n + 3 - x
        return (x - 1 + self.rot) % self.n + 1

    def apply_subset(self, K: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.apply(x) for x in K))

    def __mul__(self, other: "Dihedral") -> "Dihedral":
        """Composition self o other (apply other first)."""
        if self.n != other.n:
            raise ValueError("dihedral elements act on different polygons")
        rot = (self.rot + (-other.rot if self.refl else other.rot)) % self.n
        return Dihedral(self.n, rot, self.refl != other.refl)

    def inverse(self) -> "Dihedral":
        if self.refl:
            return Dihedral(self.n, self.rot, True)
        return Dihedral(self.n, -self.rot % self.n, False)

    def is_identity(self) -> bool:
        return self.rot == 0 and not self.refl

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rot": self.rot, "refl": self.refl}


def diameter(K: Iterable[int], n: int) -> int:
    """Minimal length of a cyclic interval of [1..n] containing K."""
    t = check_in_range(K, n)
    if not t:
        raise ValueError("diameter of the empty set is undefined")
    best_gap = max(
        (t[(i + 1) % len(t)] - t[i] - 1) % n for i in range(len(t))
    )
    return n - best_gap


def is_boundary(K: Iterable[int], n: int) -> bool:
    """K consists of |K| cyclically consecutive indices."""
    t = check_in_range(K, n)
    return diameter(t, n) == len(t)
