"""Words in Artin's braid generators and their elementary invariants.

A braid on ``n`` strands is a :class:`BraidWord`: the strand count together
with a sequence of nonzero letters, where the letter ``i > 0`` is the
generator sigma_i exchanging the strands at positions ``i`` and ``i + 1`` by a
counterclockwise half turn and ``-i`` is its clockwise inverse.  Positions are
numbered ``1..n`` from the left, and words act in temporal order: the first
letter happens first.  Consequently the underlying permutation of a word sends
each start position to the final position of its strand.

Strand counts are part of the data.  Words on different strand counts never
concatenate; use :func:`tensor` to place braids side by side instead.

Text format: ``Bn: e1 e2 ...`` with signed integer letters, e.g. ``B3: 1 2 -1``
(the identity braid on three strands is ``B3:``).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import ParseError


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., n-1}``; ``image[i]`` is where position i ends."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a bijection on 0..{len(self.image) - 1}: {self.image}")

    @property
    def size(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        """Swap of positions ``i`` and ``i + 1`` (1-based generator index)."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"transposition index {i} out of range for size {n}")
        image = list(range(n))
        image[i - 1], image[i] = image[i], image[i - 1]
        return cls(tuple(image))

    def apply(self, i: int) -> int:
        return self.image[i]

    def then(self, other: Permutation) -> Permutation:
        """Composite acting by ``self`` first, then ``other``."""
        if other.size != self.size:
            raise ValueError("size mismatch in permutation composition")
        return Permutation(tuple(other.image[v] for v in self.image))

    def inverse(self) -> Permutation:
        image = [0] * self.size
        for i, v in enumerate(self.image):
            image[v] = i
        return Permutation(tuple(image))

    def inversions(self) -> int:
        img = self.image
        n = len(img)
        return sum(1 for i in range(n) for j in range(i + 1, n) if img[i] > img[j])

    def sign(self) -> int:
        """Parity of the permutation, computed from its cycle structure."""
        seen = [False] * self.size
        sign = 1
        for start in range(self.size):
            if seen[start]:
                continue
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = self.image[i]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image))

    def one_line(self) -> tuple[int, ...]:
        """Images in 1-based positions, the display convention."""
        return tuple(v + 1 for v in self.image)

    def __str__(self) -> str:
        return "[" + " ".join(str(v) for v in self.one_line()) + "]"


@dataclass(frozen=True)
class PermutationMatrix:
    """0/1 matrix with a single 1 per row and column; entry [p(i)][i] is 1."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n or any(v not in (0, 1) for v in row) or sum(row) != 1:
                raise ValueError("rows must be length-n 0/1 vectors with a single 1")
        for c in range(n):
            if sum(row[c] for row in self.entries) != 1:
                raise ValueError(f"column {c} does not contain exactly one 1")

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def from_permutation(cls, p: Permutation) -> PermutationMatrix:
        n = p.size
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[p.image[i]][i] = 1
        return cls(tuple(tuple(r) for r in rows))

    def to_permutation(self) -> Permutation:
        image = [0] * self.size
        for r, row in enumerate(self.entries):
            image[row.index(1)] = r
        return Permutation(tuple(image))

    def determinant(self) -> int:
        return self.to_permutation().sign()

    def __matmul__(self, other: PermutationMatrix) -> PermutationMatrix:
        # matrix product; corresponds to composing other's permutation first
        return PermutationMatrix.from_permutation(
            other.to_permutation().then(self.to_permutation())
        )


def block_diag(a: PermutationMatrix, b: PermutationMatrix) -> PermutationMatrix:
    """Block-diagonal sum, the matrix image of placing braids side by side."""
    n, m = a.size, b.size
    rows = [tuple(row) + (0,) * m for row in a.entries]
    rows += [(0,) * n + tuple(row) for row in b.entries]
    return PermutationMatrix(tuple(rows))


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators of the braid group on ``strands`` strands."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 0:
            raise ValueError(f"strand count must be non-negative, got {self.strands}")
        for e in self.letters:
            if not isinstance(e, int) or e == 0 or not 1 <= abs(e) <= self.strands - 1:
                raise ValueError(
                    f"letter {e!r} invalid on {self.strands} strands "
                    f"(need 1 <= |letter| <= {self.strands - 1})"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __str__(self) -> str:
        return format_braid_word(self)


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    """Product braid: ``u`` happens first, then ``v``.  Strand counts must match."""
    if u.strands != v.strands:
        raise ValueError(f"strand counts differ: {u.strands} vs {v.strands}")
    return BraidWord(u.strands, u.letters + v.letters)


def inverse(w: BraidWord) -> BraidWord:
    """Reversed word with all signs flipped; cancels ``w`` on either side."""
    return BraidWord(w.strands, tuple(-e for e in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent (e, -e) pairs until none remain.

    The stack scan also removes cancellations that only become adjacent after
    inner pairs vanish, so the result has no canceling pair at all.
    """
    stack: list[int] = []
    for e in w.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return BraidWord(w.strands, tuple(stack))


def writhe(w: BraidWord) -> int:
    """Signed letter count: the image of the word in the integers."""
    return sum(1 if e > 0 else -1 for e in w.letters)


def underlying_permutation(w: BraidWord) -> Permutation:
    """Forget crossings: where does the strand starting at each position end."""
    strand_at = list(range(w.strands))
    for e in w.letters:
        i = abs(e) - 1
        strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]
    image = [0] * w.strands
    for pos, strand in enumerate(strand_at):
        image[strand] = pos
    return Permutation(tuple(image))


def tensor(u: BraidWord, v: BraidWord) -> BraidWord:
    """Place ``v`` to the right of ``u``: letters of ``v`` shift by ``u.strands``.

    Strictly associative and unital, with unit the empty word on 0 strands.
    """
    n = u.strands
    shifted = tuple(e + n if e > 0 else e - n for e in v.letters)
    return BraidWord(n + v.strands, u.letters + shifted)


def add_strand_left(w: BraidWord) -> BraidWord:
    """Add an unbraided strand on the left; every letter index increments."""
    return tensor(BraidWord(1), w)


def add_strand_right(w: BraidWord) -> BraidWord:
    """Add an unbraided strand on the right; letters are unchanged."""
    return tensor(w, BraidWord(1))


def block_swap_permutation(n: int, m: int) -> Permutation:
    """Exchange of a size-``n`` and a size-``m`` block of positions.

    The first ``m`` start positions end at the far right (shifted by ``n``,
    order preserved) and the remaining ``n`` end at the far left.  This is the
    underlying permutation of :func:`braiding_element`.
    """
    if n < 0 or m < 0:
        raise ValueError("block sizes must be non-negative")
    image = [i + n for i in range(m)] + [j for j in range(n)]
    return Permutation(tuple(image))


def _positive_lift_letters(p: Permutation) -> tuple[int, ...]:
    """Reduced positive word for ``p``: bubble-sort, one crossing per inversion."""
    arr = list(range(p.size))
    letters: list[int] = []
    swapped = True
    while swapped:
        swapped = False
        for j in range(len(arr) - 1):
            if p.image[arr[j]] > p.image[arr[j + 1]]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                letters.append(j + 1)
                swapped = True
    return tuple(letters)


def braiding_element(n: int, m: int) -> BraidWord:
    """The positive braid passing an ``n``-strand block across an ``m``-strand one.

    A positive word on ``n + m`` strands with writhe ``n * m`` whose underlying
    permutation is ``block_swap_permutation(n, m)``; it is the unique
    permutation braid with that permutation.  For ``m = 1`` it is the word
    ``sigma_1 sigma_2 ... sigma_n``, which conjugates each generator
    ``sigma_i`` to ``sigma_{i+1}``.
    """
    if n < 0 or m < 0:
        raise ValueError("block sizes must be non-negative")
    return BraidWord(n + m, _positive_lift_letters(block_swap_permutation(n, m)))


def permutation_matrix(p: Permutation) -> PermutationMatrix:
    """Regular-representation image of a permutation as a coordinate shuffle."""
    return PermutationMatrix.from_permutation(p)


def format_braid_word(w: BraidWord) -> str:
    head = f"B{w.strands}:"
    if not w.letters:
        return head
    return head + " " + " ".join(str(e) for e in w.letters)


def parse_braid_word(text: str) -> BraidWord:
    """Parse ``Bn: e1 e2 ...``; rejects letters out of range by name."""
    stripped = text.strip()
    head, sep, rest = stripped.partition(":")
    if not sep or not head.startswith("B"):
        raise ParseError(f"expected 'Bn: letters', got {text!r}")
    try:
        n = int(head[1:])
    except ValueError:
        raise ParseError(f"bad strand count token {head!r}") from None
    if n < 0:
        raise ParseError(f"bad strand count token {head!r}")
    letters = []
    for tok in rest.split():
        try:
            e = int(tok)
        except ValueError:
            raise ParseError(f"bad letter token {tok!r}") from None
        if e == 0 or abs(e) >= max(n, 1):
            raise ParseError(f"letter token {tok!r} out of range for {n} strands")
        letters.append(e)
    return BraidWord(n, tuple(letters))


@functools.lru_cache(maxsize=None)
def _cached_transposition(n: int, i: int) -> Permutation:
    return Permutation.transposition(n, i)
