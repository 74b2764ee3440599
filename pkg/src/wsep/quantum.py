"""Exact symbolic oracle for the quantized k-by-m matrix algebra.

Elements are noncommutative polynomials in generators x[i,j] with Laurent
coefficients, kept in normal form: monomials are words sorted by (row, col).
An out-of-order adjacent pair x[s,t] x[i,j] rewrites by the defining
commutation relations of the algebra:

    s=i, t>j  or  s>i, t=j :  q * x[i,j] x[s,t]
    s>i, t<j               :  x[i,j] x[s,t]
    s>i, t>j               :  x[i,j] x[s,t] + (q - q^-1) x[i,t] x[s,j]

Each step decreases the word lexicographically at its leading position, so
rewriting terminates; confluence is exercised by randomized-strategy tests.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable

from .laurent import Laurent, ONE, Q, Q_MINUS_Q_INV, ZERO
from .subsets import MinorIndex, as_subset, check_in_range, stieffel_subset

Gen = tuple[int, int]
Word = tuple[Gen, ...]


def _check_word(word: Iterable[Gen], k: int, m: int) -> Word:
    w = tuple(word)
    for (i, j) in w:
        if not (1 <= i <= k and 1 <= j <= m):
            raise ValueError(f"generator x[{i},{j}] outside the {k}x{m} algebra")
    return w


def inversion_positions(word: Word) -> list[int]:
    return [p for p in range(len(word) - 1) if word[p] > word[p + 1]]


def normalize_word(
    k: int,
    m: int,
    word: Iterable[Gen],
    coeff: Laurent = ONE,
    pick: Callable[[list[int]], int] | None = None,
) -> dict[Word, Laurent]:
    """Rewrite coeff * word into normal form, returning monomial -> Laurent.

    `pick` selects which inversion to rewrite next (given the list of
    inversion positions); the default takes the leftmost.  Any strategy must
    produce the same normal form.
    """
    word = _check_word(word, k, m)
    out: dict[Word, Laurent] = {}
    stack: list[tuple[Word, Laurent]] = [(word, coeff)]
    while stack:
        w, c = stack.pop()
        invs = inversion_positions(w)
        if not invs:
            acc = out.get(w, ZERO) + c
            if acc:
                out[w] = acc
            elif w in out:
                del out[w]
            continue
        p = invs[0] if pick is None else invs[pick(invs)]
        (s, t), (i, j) = w[p], w[p + 1]
        swapped = w[:p] + ((i, j), (s, t)) + w[p + 2:]
        if s == i or t == j:
            stack.append((swapped, c * Q))
        elif t < j:
            stack.append((swapped, c))
        else:
            stack.append((swapped, c))
            stack.append((w[:p] + ((i, t), (s, j)) + w[p + 2:], c * Q_MINUS_Q_INV))
    return out


class NCPoly:
    """Noncommutative polynomial over Z[q,q^-1] in normal form."""

    __slots__ = ("k", "m", "_t")

    def __init__(self, k: int, m: int, terms: dict[Word, Laurent] | None = None):
        self.k = k
        self.m = m
        self._t = {w: c for w, c in (terms or {}).items() if c}

    @staticmethod
    def zero(k: int, m: int) -> "NCPoly":
        return NCPoly(k, m)

    @staticmethod
    def one(k: int, m: int) -> "NCPoly":
        return NCPoly(k, m, {(): ONE})

    @staticmethod
    def scalar(k: int, m: int, c: Laurent) -> "NCPoly":
        return NCPoly(k, m, {(): c})

    @staticmethod
    def generator(k: int, m: int, i: int, j: int) -> "NCPoly":
        return NCPoly(k, m, {_check_word([(i, j)], k, m): ONE})

    @staticmethod
    def from_word(k: int, m: int, word: Iterable[Gen], coeff: Laurent = ONE) -> "NCPoly":
        return NCPoly(k, m, normalize_word(k, m, word, coeff))

    def terms(self) -> dict[Word, Laurent]:
        return dict(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def _check_dims(self, other: "NCPoly"):
        if (self.k, self.m) != (other.k, other.m):
            raise ValueError("polynomials live in different algebras")

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._check_dims(other)
        t = dict(self._t)
        for w, c in other._t.items():
            acc = t.get(w, ZERO) + c
            if acc:
                t[w] = acc
            elif w in t:
                del t[w]
        return NCPoly(self.k, self.m, t)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.k, self.m, {w: -c for w, c in self._t.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        self._check_dims(other)
        t: dict[Word, Laurent] = {}
        for w1, c1 in self._t.items():
            for w2, c2 in other._t.items():
                for w, c in normalize_word(self.k, self.m, w1 + w2, c1 * c2).items():
                    acc = t.get(w, ZERO) + c
                    if acc:
                        t[w] = acc
                    elif w in t:
                        del t[w]
        return NCPoly(self.k, self.m, t)

    def scale(self, c: Laurent) -> "NCPoly":
        return NCPoly(self.k, self.m, {w: v * c for w, v in self._t.items()})

    def pow(self, e: int) -> "NCPoly":
        if e < 0:
            raise ValueError("negative powers unsupported")
        acc = NCPoly.one(self.k, self.m)
        for _ in range(e):
            acc = acc * self
        return acc

    def at_one(self) -> dict[Word, int]:
        """Specialize q -> 1 (the underlying commutative values per monomial)."""
        return {w: c.at_one() for w, c in self._t.items() if c.at_one()}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCPoly)
            and (self.k, self.m) == (other.k, other.m)
            and self._t == other._t
        )

    def __hash__(self):
        return hash((self.k, self.m, tuple(sorted(self._t.items(), key=lambda kv: kv[0]))))

    def __str__(self) -> str:
        if not self._t:
            return "0"
        chunks = []
        for w in sorted(self._t):
            c = str(self._t[w])
            if (" + " in c) or (" - " in c):
                c = f"({c})"
            mono = " ".join(f"x[{i},{j}]" for i, j in w)
            chunks.append(f"{c} * {mono}" if mono else c)
        text = chunks[0]
        for chunk in chunks[1:]:
            if chunk.startswith("-"):
                text += " - " + chunk[1:]
            else:
                text += " + " + chunk
        return text

    def __repr__(self) -> str:
        return f"NCPoly({self.k}x{self.m}: {self})"


def quantum_minor(mi: MinorIndex) -> NCPoly:
    """Sum over column permutations of (-q)^(-inversions) times the row-sorted
    word; row-sorted words are already in normal form."""
    l = mi.size
    terms: dict[Word, Laurent] = {}
    for sigma in permutations(range(l)):
        inv = sum(1 for a in range(l) for b in range(a + 1, l) if sigma[a] > sigma[b])
        word = tuple((mi.rows[r], mi.cols[sigma[r]]) for r in range(l))
        terms[word] = Laurent.term((-1) ** inv, -inv)
    return NCPoly(mi.k, mi.m, terms)


def quasi_commutation_exponent(p: NCPoly, r: NCPoly) -> int | None:
    """c with r*p == q^c * (p*r), detected coefficient-wise; None otherwise."""
    if p.is_zero() or r.is_zero():
        raise ValueError("quasi-commutation is undefined for zero inputs")
    pr = (p * r)._t
    rp = (r * p)._t
    if pr.keys() != rp.keys():
        return None
    c = None
    for w, a in pr.items():
        d = rp[w].shift_ratio(a)
        if d is None:
            return None
        if c is None:
            c = d
        elif c != d:
            return None
    return c


def plucker_realize(K: Iterable[int], k: int, n: int) -> NCPoly:
    """The coordinate labelled by the k-subset K of [1..n], realized as the
    maximal quantum minor on rows [1..k] and columns K."""
    K = check_in_range(K, n)
    if len(K) != k:
        raise ValueError(f"need a {k}-subset, got {K}")
    return quantum_minor(MinorIndex(tuple(range(1, k + 1)), K, k, n))


def qplucker_relation_holds(I: Iterable[int], J: Iterable[int], k: int, n: int) -> bool:
    """The defining exchange relation on a (k+1)-subset I and (k-1)-subset J:
    the signed sum of products over i in I-J vanishes in the realization."""
    I = check_in_range(I, n)
    J = check_in_range(J, n)
    if len(I) != k + 1 or len(J) != k - 1:
        raise ValueError("need a (k+1)-subset and a (k-1)-subset")
    acc = NCPoly.zero(k, n)
    for i in I:
        if i in J:
            continue
        inv_i = sum(1 for x in I if i > x)
        inv_j = sum(1 for x in J if i > x)
        e = inv_i - inv_j
        left = plucker_realize(tuple(x for x in I if x != i), k, n)
        right = plucker_realize(as_subset(J + (i,)), k, n)
        acc = acc + (left * right).scale(Laurent.term((-1) ** e, e))
    return acc.is_zero()


@lru_cache(maxsize=None)
def embedding_images(k: int, m: int) -> dict[Gen, NCPoly]:
    """Images of the x[i,j] under the coordinate embedding into the k-by-(k+m)
    algebra: each generator maps to the realized coordinate of its singleton
    Stieffel subset."""
    n = k + m
    return {
        (i, j): plucker_realize(stieffel_subset(MinorIndex((i,), (j,), k, m)), k, n)
        for i in range(1, k + 1)
        for j in range(1, m + 1)
    }


@lru_cache(maxsize=None)
def embedding_respects_relations(k: int, m: int) -> bool:
    """The generator images satisfy the same commutation relations pairwise."""
    phi = embedding_images(k, m)
    gens = sorted(phi)
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            (i, j), (s, t) = gens[a], gens[b]
            lhs = phi[(s, t)] * phi[(i, j)]
            if s == i or t == j:
                rhs = (phi[(i, j)] * phi[(s, t)]).scale(Q)
            elif t < j:
                rhs = phi[(i, j)] * phi[(s, t)]
            else:
                rhs = phi[(i, j)] * phi[(s, t)] + (
                    phi[(i, t)] * phi[(s, j)]
                ).scale(Q_MINUS_Q_INV)
            if lhs != rhs:
                return False
    return True


def verify_embedding(mi: MinorIndex, max_total: int = 8) -> bool:
    """Check the minor-level embedding identity: the image of the minor equals
    q^(l choose 2) * D^(l-1) * (realized coordinate of its Stieffel subset),
    where D is the realized coordinate of [1..k]; also checks the generator
    images satisfy the defining relations.  Symbolic expansion grows steeply,
    so k+m is capped at a configurable desk-scale bound."""
    if mi.k + mi.m > max_total:
        raise ValueError(f"k+m = {mi.k + mi.m} exceeds the bound {max_total}")
    if not embedding_respects_relations(mi.k, mi.m):
        return False
    k, m, l = mi.k, mi.m, mi.size
    n = k + m
    phi = embedding_images(k, m)
    lhs = NCPoly.zero(k, n)
    for sigma in permutations(range(l)):
        inv = sum(1 for a in range(l) for b in range(a + 1, l) if sigma[a] > sigma[b])
        term = NCPoly.scalar(k, n, Laurent.term((-1) ** inv, -inv))
        for r in range(l):
            term = term * phi[(mi.rows[r], mi.cols[sigma[r]])]
        lhs = lhs + term
    delta = plucker_realize(tuple(range(1, k + 1)), k, n)
    rhs = delta.pow(l - 1) * plucker_realize(stieffel_subset(mi), k, n)
    rhs = rhs.scale(Laurent.term(1, l * (l - 1) // 2))
    return lhs == rhs
