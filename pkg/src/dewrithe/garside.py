"""Left-greedy Garside normal form: a decision procedure for braid equality.

Every braid on ``n`` strands factors uniquely as ``Delta^k f1 ... fr`` where
``Delta`` is the positive half twist, each ``fi`` is a permutation braid (a
positive braid in which every pair of strands crosses at most once, hence
determined by its permutation), no ``fi`` is the identity or ``Delta``, and
each adjacent pair is left-weighted: ``fi`` already contains every generator
that could start ``f(i+1)``.  Two words are equal in the braid group iff these
data coincide, which reduces braid equality to tuple comparison and makes
normal forms hashable.

Negative letters are handled by the rewrite ``sigma_i^-1 = Delta^-1 * (Delta *
sigma_i^-1)``: the parenthesized element is a permutation braid, and the
``Delta^-1`` moves to the front past existing factors via the flip
automorphism (conjugation by ``Delta``, which mirrors generator indices).

Factors are stored as permutations and lifted to words only on demand; the
lift of a permutation ``p`` is positive with one crossing per inversion.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import braids
from .braids import BraidWord, Permutation, _cached_transposition
from .errors import ParseError


@functools.lru_cache(maxsize=None)
def half_twist_permutation(n: int) -> Permutation:
    """The order-reversing permutation, underlying the half twist."""
    return Permutation(tuple(range(n - 1, -1, -1))) if n > 0 else Permutation(())


def half_twist(n: int) -> BraidWord:
    """The positive word (s1..s_{n-1})(s1..s_{n-2})...(s1) with writhe n(n-1)/2."""
    if n < 1:
        raise ValueError("half twist needs at least one strand")
    letters: list[int] = []
    for run in range(n - 1, 0, -1):
        letters.extend(range(1, run + 1))
    return BraidWord(n, tuple(letters))


def permutation_braid_lift(p: Permutation) -> BraidWord:
    """The unique positive braid in which pairs cross iff ``p`` inverts them."""
    return BraidWord(p.size, braids._positive_lift_letters(p))


@dataclass(frozen=True)
class PermutationBraid:
    """A simple factor: the positive braid determined by one permutation."""

    permutation: Permutation

    @property
    def strands(self) -> int:
        return self.permutation.size

    def inversions(self) -> int:
        return self.permutation.inversions()

    def word(self) -> BraidWord:
        return permutation_braid_lift(self.permutation)

    def is_identity(self) -> bool:
        return self.permutation.is_identity()

    def is_half_twist(self) -> bool:
        return self.permutation == half_twist_permutation(self.strands)

    def __str__(self) -> str:
        return str(self.permutation)


@dataclass(frozen=True)
class GarsideNormalForm:
    """Canonical data ``Delta^infimum . factors`` deciding braid equality."""

    strands: int
    infimum: int
    factors: tuple[PermutationBraid, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return format_normal_form(self)


def _starting_set(p: Permutation) -> set[int]:
    """Generators that can begin a positive word for ``p`` (descents of p)."""
    img = p.image
    return {i for i in range(1, p.size) if img[i - 1] > img[i]}


def _finishing_set(p: Permutation) -> set[int]:
    """Generators that can end a positive word for ``p``."""
    return _starting_set(p.inverse())


def _flip(p: Permutation) -> Permutation:
    """Conjugation by the half twist; mirrors generator indices."""
    w0 = half_twist_permutation(p.size).image
    return Permutation(tuple(w0[p.image[w0[j]]] for j in range(p.size)))


def _left_weight_pair(x: Permutation, y: Permutation) -> tuple[Permutation, Permutation]:
    """Slide crossings from ``y`` into ``x`` until the pair is left-weighted."""
    n = x.size
    while True:
        movable = _starting_set(y) - _finishing_set(x)
        if not movable:
            return x, y
        t = _cached_transposition(n, min(movable))
        x = x.then(t)
        y = t.then(y)


def _normalize(n: int, factors: list[Permutation]) -> tuple[int, list[Permutation]]:
    """Left-weight a factor list; returns absorbed half-twist power and factors."""
    w0 = half_twist_permutation(n)
    factors = [f for f in factors if not f.is_identity()]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            x, y = _left_weight_pair(factors[i], factors[i + 1])
            if x != factors[i]:
                factors[i], factors[i + 1] = x, y
                changed = True
        if changed:
            factors = [f for f in factors if not f.is_identity()]
    delta_power = 0
    while factors and factors[0] == w0:
        delta_power += 1
        factors.pop(0)
    return delta_power, factors


def normal_form(w: BraidWord) -> GarsideNormalForm:
    """Compute the left-greedy normal form of a word.

    The writhe bookkeeping identity holds on the result: ``writhe(w) ==
    infimum * n(n-1)/2 + sum of factor inversion counts``.
    """
    w = braids.free_reduce(w)
    n = w.strands
    infimum = 0
    factors: list[Permutation] = []
    w0 = half_twist_permutation(n)
    for e in w.letters:
        if e > 0:
            t = _cached_transposition(n, e)
            # extend the last factor while it stays a permutation braid
            if factors and e not in _finishing_set(factors[-1]):
                factors[-1] = factors[-1].then(t)
            else:
                factors.append(t)
        else:
            infimum -= 1
            factors = [_flip(f) for f in factors]
            # remainder of the half twist after removing a final sigma_|e|
            t = _cached_transposition(n, -e)
            factors.append(w0.then(t))
    absorbed, factors = _normalize(n, factors)
    return GarsideNormalForm(
        n, infimum + absorbed, tuple(PermutationBraid(f) for f in factors)
    )


def to_braid_word(nf: GarsideNormalForm) -> BraidWord:
    """Rebuild a word representing the normal form's braid."""
    n = nf.strands
    if nf.infimum >= 0:
        prefix = BraidWord(n)
        for _ in range(nf.infimum):
            prefix = braids.concat(prefix, half_twist(n)) if n >= 1 else prefix
    else:
        prefix = BraidWord(n)
        for _ in range(-nf.infimum):
            prefix = braids.concat(prefix, braids.inverse(half_twist(n)))
    word = prefix
    for factor in nf.factors:
        word = braids.concat(word, factor.word())
    return word


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    """Whether two words represent the same braid group element."""
    if u.strands != v.strands:
        raise ValueError(f"strand counts differ: {u.strands} vs {v.strands}")
    return normal_form(u) == normal_form(v)


def dewrithed_conjugation_check(beta: BraidWord) -> bool:
    """Verify that the block braiding conjugates right strand-adding to left.

    Checks ``c(n,1) . beta_right == beta_left . c(n,1)`` on ``n + 1`` strands,
    where ``beta_right``/``beta_left`` add an unbraided strand on either side.
    The identity holds for every braid; it is the defining compatibility for
    the writhe-zero (dewrithed) subcategory.
    """
    n = beta.strands
    c = braids.braiding_element(n, 1)
    lhs = braids.concat(c, braids.add_strand_right(beta))
    rhs = braids.concat(braids.add_strand_left(beta), c)
    return braids_equal(lhs, rhs)


def format_normal_form(nf: GarsideNormalForm) -> str:
    parts = [f"Δ^{nf.infimum}"]
    parts.extend(str(f) for f in nf.factors)
    return " | ".join(parts)


def parse_normal_form(text: str, strands: int | None = None) -> GarsideNormalForm:
    """Parse ``Δ^k | [..] | [..]``; ``strands`` is required when no factor is given."""
    chunks = [c.strip() for c in text.strip().split("|")]
    head = chunks[0]
    if head.startswith("Δ^"):
        power_tok = head[2:]
    elif head.startswith("D^"):
        power_tok = head[2:]
    else:
        raise ParseError(f"expected half-twist power, got {head!r}")
    try:
        infimum = int(power_tok)
    except ValueError:
        raise ParseError(f"bad half-twist power {power_tok!r}") from None
    factors = []
    for chunk in chunks[1:]:
        if not (chunk.startswith("[") and chunk.endswith("]")):
            raise ParseError(f"bad factor {chunk!r}")
        try:
            values = tuple(int(tok) - 1 for tok in chunk[1:-1].split())
        except ValueError:
            raise ParseError(f"bad factor {chunk!r}") from None
        try:
            factors.append(Permutation(values))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if factors:
        n = factors[0].size
        if strands is not None and strands != n:
            raise ParseError(f"factor size {n} contradicts strands={strands}")
    elif strands is not None:
        n = strands
    else:
        raise ParseError("strand count needed to parse a factorless normal form")
    nf = GarsideNormalForm(n, infimum, tuple(PermutationBraid(f) for f in factors))
    _validate_normal_form(nf)
    return nf


def _validate_normal_form(nf: GarsideNormalForm) -> None:
    w0 = half_twist_permutation(nf.strands)
    perms = [f.permutation for f in nf.factors]
    for p in perms:
        if p.size != nf.strands:
            raise ParseError("factor size mismatch")
        if p.is_identity() or p == w0:
            raise ParseError("factors may not be the identity or the half twist")
    for a, b in zip(perms, perms[1:]):
        if _starting_set(b) - _finishing_set(a):
            raise ParseError("factors are not left-weighted")
