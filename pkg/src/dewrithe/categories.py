"""Finite models of the braid groupoid's abelianization and its braiding.

Objects are non-negative integers (strand counts); after abelianizing, the
morphisms ``p -> p`` form a copy of the integers recording total writhe, and
there are no morphisms between distinct objects.  The braiding on the block
sum ``p + q`` abelianizes to the integer ``p * q``, and the two hexagon
diagrams for that braiding commute because integer addition does.

``perm_functor`` is the composite functor to coordinate shuffles: a braid word
goes to the matrix of its underlying permutation, with side-by-side placement
landing in block-diagonal sums.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import braids
from .braids import BraidWord, PermutationMatrix


@dataclass(frozen=True)
class AbMorphism:
    """An integer-valued endomorphism ``source -> target`` with source == target."""

    source: int
    target: int
    value: int

    def __post_init__(self) -> None:
        if self.source < 0 or self.target < 0:
            raise ValueError("objects are non-negative integers")
        if self.source != self.target:
            raise ValueError(
                f"no morphisms between distinct objects: {self.source} != {self.target}"
            )


def abelianize(w: BraidWord) -> AbMorphism:
    """Send a braid word to its writhe, viewed as an endomorphism of n."""
    return AbMorphism(w.strands, w.strands, braids.writhe(w))


def ab_compose(f: AbMorphism, g: AbMorphism) -> AbMorphism:
    """Composition: addition of values at a fixed object."""
    if f.source != g.source:
        raise ValueError(f"object mismatch: {f.source} vs {g.source}")
    return AbMorphism(f.source, f.target, f.value + g.value)


def ab_tensor(f: AbMorphism, g: AbMorphism) -> AbMorphism:
    """Monoidal product: addition on objects and on values."""
    return AbMorphism(f.source + g.source, f.target + g.target, f.value + g.value)


def ab_braiding(p: int, q: int) -> AbMorphism:
    """The braiding on the sum ``p + q``: the integer ``p * q``."""
    return AbMorphism(p + q, p + q, p * q)


@dataclass(frozen=True)
class HexagonInstance:
    """One hexagon diagram at objects (p, q, r): the two composite path sums."""

    p: int
    q: int
    r: int
    path_a: int
    path_b: int

    @property
    def commutes(self) -> bool:
        return self.path_a == self.path_b


def hexagon_check(p: int, q: int, r: int) -> tuple[HexagonInstance, HexagonInstance]:
    """Evaluate both hexagon diagrams for the abelianized braiding.

    Associators contribute 0.  First diagram: braid p past q, then p past r,
    against braiding p past the block q + r.  Second diagram: braid r under
    in two steps against one braiding of the block p + q past r.
    """
    first = HexagonInstance(p, q, r, 0 + q * r + p * (r + q), p * q + (q + p) * r + 0)
    second = HexagonInstance(p, q, r, q * r + 0 + p * r, 0 + (p + q) * r + 0)
    return first, second


def perm_functor(w: BraidWord) -> PermutationMatrix:
    """Matrix of the underlying permutation; constant on braid-equal words."""
    return braids.permutation_matrix(braids.underlying_permutation(w))
