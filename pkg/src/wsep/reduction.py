"""Recursive generation of the k=3 collections: projecting a collection on
[1..n] down to [1..n-1] together with its pinch index, the admissible lift
index set, the inverse lift, and the full recursive generator.
"""

from __future__ import annotations

from itertools import combinations

from .subsets import Dihedral, as_subset, precedes
from .wscoll import WSCollection, dihedral_orbits, pinch_index, translate, validate


def _require_k3(c: WSCollection):
    if c.k != 3:
        raise ValueError("reduction machinery is defined for k=3 collections")


def project(c: WSCollection) -> WSCollection:
    """Drop the top index: sets containing both n-1 and n vanish, sets
    containing n alone trade n for n-1, the rest are kept.  The image is a
    maximal collection on [1..n-1] of size |c| - 3."""
    _require_k3(c)
    n = c.n
    if (1, n - 2, n - 1) not in c:
        raise ValueError(f"projection requires {{1,{n-2},{n-1}}} in the collection")
    images = set()
    for s in c.sets:
        if n in s:
            if n - 1 in s:
                continue
            images.add(as_subset(tuple(x for x in s if x != n) + (n - 1,)))
        else:
            images.add(s)
    out = WSCollection.of(3, n - 1, images)
    if len(out) != len(c) - 3:
        raise AssertionError("projection changed the size by an unexpected amount")
    return out


def pinch_point(c: WSCollection) -> int:
    """The unique b with {1,b,n-1} and {1,b,n} both present (k=3)."""
    _require_k3(c)
    return pinch_index(c)


def f_set(b_coll: WSCollection) -> set[int]:
    """Admissible lift indices of a maximal collection on [1..top]: b with
    {1,b,top} present such that {1,b}-{s,t} wholly precedes {s,t}-{1,b} for
    every member {s,t,top} with 1 < s < t."""
    _require_k3(b_coll)
    top = b_coll.n
    members = b_coll.member_set()
    inner_pairs = [
        (s[0], s[1]) for s in b_coll.sets if s[2] == top and s[0] > 1
    ]
    out = set()
    for b in range(2, top):
        if tuple(sorted((1, b, top))) not in members:
            continue
        lb = {1, b}
        if all(
            precedes(lb - {s, t}, {s, t} - lb) for (s, t) in inner_pairs
        ):
            out.add(b)
    return out


def lift(b_coll: WSCollection, b: int) -> WSCollection:
    """Inverse of projection: relabel the admissible members through the new
    top index n = top+1 and adjoin the three sets {1,b,n-1}, {1,n-1,n},
    {n-2,n-1,n}.  Requires b in the admissible index set."""
    _require_k3(b_coll)
    if b not in f_set(b_coll):
        raise ValueError(f"index {b} is not an admissible lift index")
    n = b_coll.n + 1
    lb = {1, b}
    lifted = set()
    for s in b_coll.sets:
        if n - 1 in s and precedes(set(s) - {1, b, n - 1}, lb - set(s)):
            lifted.add(as_subset(tuple(x for x in s if x != n - 1) + (n,)))
        else:
            lifted.add(s)
    lifted.update(
        {
            tuple(sorted((1, b, n - 1))),
            tuple(sorted((1, n - 1, n))),
            tuple(sorted((n - 2, n - 1, n))),
        }
    )
    out = WSCollection.of(3, n, lifted)
    if len(out) != len(b_coll) + 3:
        raise AssertionError("lift changed the size by an unexpected amount")
    if not validate(out).ok:
        raise AssertionError("lift produced a non-separated collection")
    if (1, n - 2, n - 1) not in out:
        raise AssertionError("lift lost the near-boundary marker")
    return out


def w3_floor() -> WSCollection:
    """The unique maximal collection on four indices: all 3-subsets."""
    return WSCollection.of(3, 4, combinations(range(1, 5), 3))


def generate_w3(n: int) -> set[WSCollection]:
    """All maximal k=3 collections on [1..n], built recursively: lift every
    (collection, admissible index) pair one level up, then close under the
    polygon symmetries."""
    if n < 4:
        raise ValueError("need n >= 4")
    current = {w3_floor()}
    for _ in range(5, n + 1):
        lifted = set()
        for b_coll in current:
            for b in sorted(f_set(b_coll)):
                lifted.add(lift(b_coll, b))
        closed = set()
        top = next(iter(lifted)).n
        for c in lifted:
            for g in Dihedral.group(top):
                closed.add(translate(c, g))
        current = closed
    return current


def orbit_count_w3(n: int) -> int:
    return len(dihedral_orbits(generate_w3(n)))
