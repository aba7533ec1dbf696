"""Additive power series over F2, twisted polynomials, and graded dimensions.

An additive series is ``a(T) = T + sum a_i T^(2^i)`` with coefficients in a
polynomial ring over the two-element field; these are exactly the series that
distribute over addition in characteristic two, and they form a group under
composition.  Series are truncated modulo ``T^(2^K)``, i.e. only coefficients
``a_1 .. a_(K-1)`` are kept, which is closed under every operation here.

Polynomials over F2 are stored as sets of monomials: addition is symmetric
difference and no coefficient arithmetic is needed.  A variable is a (family,
index) pair so that several alphabets (``xi``, ``xi'``, tensor factors, a
formal ``T``) coexist; the generator of index i carries degree 2^i - 1.

The same data has a twisted-polynomial face: sending ``a(T)`` to ``1 + sum
a_i F^i`` turns composition into the noncommutative product with rule
``F a = a^2 F`` (Frobenius semilinearity).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParseError

Var = tuple[str, int]
Mono = frozenset  # frozenset of (Var, exponent) pairs


def _mono_mul(a: Mono, b: Mono) -> Mono:
    exps = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return frozenset(exps.items())


def _mono_key(m: Mono) -> tuple:
    return tuple(sorted(m))


@dataclass(frozen=True)
class F2Poly:
    """Multivariate polynomial over F2 as a set of monomials."""

    monomials: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "monomials", frozenset(self.monomials))

    @classmethod
    def zero(cls) -> F2Poly:
        return cls(frozenset())

    @classmethod
    def one(cls) -> F2Poly:
        return cls(frozenset({frozenset()}))

    @classmethod
    def variable(cls, family: str, index: int) -> F2Poly:
        return cls(frozenset({frozenset({((family, index), 1)})}))

    def is_zero(self) -> bool:
        return not self.monomials

    def is_one(self) -> bool:
        return self.monomials == frozenset({frozenset()})

    def __add__(self, other: F2Poly) -> F2Poly:
        return F2Poly(self.monomials ^ other.monomials)

    def __mul__(self, other: F2Poly) -> F2Poly:
        acc: set = set()
        for ma in self.monomials:
            for mb in other.monomials:
                acc ^= {_mono_mul(ma, mb)}
        return F2Poly(frozenset(acc))

    def __pow__(self, exponent: int) -> F2Poly:
        if exponent < 0:
            raise ValueError("negative exponent")
        result = F2Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def substitute(self, mapping: dict[Var, F2Poly]) -> F2Poly:
        """Replace variables by polynomials; unmapped variables persist."""
        total = F2Poly.zero()
        for mono in self.monomials:
            term = F2Poly.one()
            for var, e in mono:
                term = term * mapping.get(var, F2Poly.variable(*var)) ** e
            total = total + term
        return total

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: F2Poly) -> str:
    """Canonical printing: sorted monomials joined by ' + ', constants 0/1."""
    if p.is_zero():
        return "0"
    parts = []
    for mono in sorted(p.monomials, key=_mono_key):
        if not mono:
            parts.append("1")
            continue
        factors = []
        for (family, index), e in sorted(mono):
            token = f"{family}{index}"
            factors.append(token if e == 1 else f"{token}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts)


def xi(i: int) -> F2Poly:
    """The universal coefficient generator of index i (degree 2^i - 1)."""
    return F2Poly.variable("xi", i)


@dataclass(frozen=True)
class AdditiveSeries:
    """Truncated series ``T + sum a_i T^(2^i)``, kept modulo ``T^(2^K)``."""

    truncation: int
    coeffs: tuple[F2Poly, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.truncation < 1:
            raise ValueError("truncation exponent must be at least 1")
        if len(self.coeffs) != self.truncation - 1:
            raise ValueError(
                f"need {self.truncation - 1} coefficients for truncation "
                f"{self.truncation}, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if not isinstance(c, F2Poly):
                raise ValueError(f"coefficients must be F2Poly values, got {c!r}")

    @classmethod
    def identity(cls, truncation: int) -> AdditiveSeries:
        return cls(truncation, (F2Poly.zero(),) * (truncation - 1))

    @classmethod
    def scalar(cls, truncation: int, bits: dict[int, int] | None = None) -> AdditiveSeries:
        """Series with 0/1 coefficients; ``bits`` maps index i to a_i."""
        bits = bits or {}
        coeffs = []
        for i in range(1, truncation):
            coeffs.append(F2Poly.one() if bits.get(i, 0) else F2Poly.zero())
        return cls(truncation, tuple(coeffs))

    @classmethod
    def universal(cls, truncation: int, family: str = "xi") -> AdditiveSeries:
        """The generic series whose i-th coefficient is the i-th generator."""
        return cls(
            truncation,
            tuple(F2Poly.variable(family, i) for i in range(1, truncation)),
        )

    @classmethod
    def from_polynomial(cls, poly: F2Poly, truncation: int, family: str = "t") -> AdditiveSeries:
        """Read a series off a univariate polynomial in the given variable family.

        Rejects polynomials that are not of the additive shape: every monomial
        must be a single power of the variable, the exponents must be 1 or
        powers of two below 2^truncation, and the linear coefficient must be 1.
        """
        seen: dict[int, bool] = {}
        for mono in poly.monomials:
            items = list(mono)
            if len(items) != 1 or items[0][0][0] != family:
                raise ValueError(f"not a univariate polynomial in family {family!r}")
            exponent = items[0][1]
            if exponent != 1 and (exponent & (exponent - 1)) != 0:
                raise ValueError(f"exponent {exponent} is not a power of two")
            if exponent >= 2**truncation:
                raise ValueError(f"exponent {exponent} exceeds the truncation")
            seen[exponent] = True
        if not seen.get(1):
            raise ValueError("the linear coefficient must be 1")
        bits = {i: int(bool(seen.get(2**i, False))) for i in range(1, truncation)}
        return cls.scalar(truncation, bits)

    def is_scalar(self) -> bool:
        return all(c.is_zero() or c.is_one() for c in self.coeffs)

    def coefficient(self, i: int) -> F2Poly:
        """The coefficient of T^(2^i); index 0 is the leading 1."""
        if i == 0:
            return F2Poly.one()
        return self.coeffs[i - 1]

    def __str__(self) -> str:
        return format_series(self)


def series_compose(outer: AdditiveSeries, inner: AdditiveSeries) -> AdditiveSeries:
    """Composite ``outer(inner(T))`` modulo ``T^(2^K)``.

    The coefficient of ``T^(2^n)`` is the convolution
    ``sum over i + j = n of outer_i * inner_j^(2^i)`` (index 0 coefficients
    are 1), because raising an additive series to a 2-power power is applied
    coefficientwise in characteristic two.
    """
    if outer.truncation != inner.truncation:
        raise ValueError(
            f"truncation mismatch: {outer.truncation} vs {inner.truncation}"
        )
    k = outer.truncation
    coeffs = []
    for n in range(1, k):
        total = F2Poly.zero()
        for i in range(n + 1):
            j = n - i
            total = total + outer.coefficient(i) * inner.coefficient(j) ** (2**i)
        coeffs.append(total)
    return AdditiveSeries(k, tuple(coeffs))


def series_invert(a: AdditiveSeries) -> AdditiveSeries:
    """Compositional inverse, by triangular back-substitution on coefficients."""
    k = a.truncation
    inv: list[F2Poly] = []
    for n in range(1, k):
        total = a.coefficient(n)
        for i in range(1, n):
            total = total + a.coefficient(i) * inv[n - i - 1] ** (2**i)
        inv.append(total)
    return AdditiveSeries(k, tuple(inv))


def series_apply(a: AdditiveSeries, argument: F2Poly) -> F2Poly:
    """Evaluate the series at a polynomial argument, expanded exactly."""
    powers = {0: argument}
    for i in range(1, a.truncation):
        powers[i] = powers[i - 1] * powers[i - 1]
    total = argument
    for i in range(1, a.truncation):
        total = total + a.coefficient(i) * powers[i]
    return total


def additivity_check(a: AdditiveSeries) -> bool:
    """Expand ``a(T0 + T1)`` and ``a(T0) + a(T1)`` independently and compare.

    The expansion is a genuine binomial computation in a two-variable
    polynomial ring; the cross terms cancel because binomial coefficients of
    2-power exponents are even, not because the expansion assumes it.
    """
    t0 = F2Poly.variable("t0", 0)
    t1 = F2Poly.variable("t1", 0)
    return series_apply(a, t0 + t1) == series_apply(a, t0) + series_apply(a, t1)


@dataclass(frozen=True)
class TwistedPolynomial:
    """Finite sum ``sum a_n F^n`` with the semilinear rule ``F a = a^2 F``."""

    coeffs: tuple[F2Poly, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)
        for c in self.coeffs:
            if not isinstance(c, F2Poly):
                raise ValueError(f"coefficients must be F2Poly values, got {c!r}")

    @classmethod
    def one(cls) -> TwistedPolynomial:
        return cls((F2Poly.one(),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> F2Poly:
        return self.coeffs[n] if n < len(self.coeffs) else F2Poly.zero()

    def __add__(self, other: TwistedPolynomial) -> TwistedPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return TwistedPolynomial(
            tuple(self.coefficient(n) + other.coefficient(n) for n in range(size))
        )

    def __mul__(self, other: TwistedPolynomial) -> TwistedPolynomial:
        return twisted_mul(self, other)


def twisted_mul(x: TwistedPolynomial, y: TwistedPolynomial) -> TwistedPolynomial:
    """Product with Frobenius commutation: ``F^i a = a^(2^i) F^i``."""
    if not x.coeffs or not y.coeffs:
        return TwistedPolynomial(())
    size = len(x.coeffs) + len(y.coeffs) - 1
    acc = [F2Poly.zero() for _ in range(size)]
    for i, a in enumerate(x.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(y.coeffs):
            acc[i + j] = acc[i + j] + a * b ** (2**i)
    return TwistedPolynomial(tuple(acc))


def twisted_truncate(x: TwistedPolynomial, below: int) -> TwistedPolynomial:
    """Drop all terms ``F^n`` with ``n >= below``."""
    return TwistedPolynomial(x.coeffs[:below])


def to_twisted(a: AdditiveSeries) -> TwistedPolynomial:
    """Send ``T + sum a_i T^(2^i)`` to ``1 + sum a_i F^i``.

    Composition of series corresponds to twisted multiplication modulo ``F^K``.
    """
    return TwistedPolynomial((F2Poly.one(),) + a.coeffs)


def universal_coproduct(n: int) -> F2Poly:
    """Coefficient of ``T^(2^n)`` in the composite of the two generic series.

    Equals ``sum over i + j = n of xi'_i * xi_j^(2^i)`` with index-0
    generators equal to 1; the primed alphabet sits in the outer series.
    """
    if n < 1:
        raise ValueError("coproduct index must be at least 1")
    k = n + 1
    outer = AdditiveSeries.universal(k, "xi'")
    inner = AdditiveSeries.universal(k, "xi")
    return series_compose(outer, inner).coefficient(n)


def graded_dimensions(generator_degrees: list[int], top: int) -> list[int]:
    """F2 dimensions in degrees 0..top of a polynomial algebra on the degrees.

    Counts monomials degree by degree with the standard partition recurrence,
    one generator at a time.
    """
    if top < 0:
        raise ValueError("top degree must be non-negative")
    for d in generator_degrees:
        if d < 1:
            raise ValueError(f"generator degrees must be positive, got {d}")
    dims = [1] + [0] * top
    for d in generator_degrees:
        for total in range(d, top + 1):
            dims[total] += dims[total - d]
    return dims


def kudo_araki_degree(i: int) -> int:
    """Degree of the i-th iterated lower-operation image of the degree-1 class.

    Fold ``d -> d + j`` over ``j = 2, 4, ..., 2^(i-1)`` starting from 1; the
    result telescopes to ``2^i - 1``.
    """
    if i < 1:
        raise ValueError("index must be at least 1")
    degree = 1
    j = 2
    while j <= 2 ** (i - 1):
        degree += j
        j *= 2
    return degree


def power_generator_degrees(top: int) -> list[int]:
    """Degrees ``2^i - 1 <= top`` computed by the closed formula."""
    return list(itertools.takewhile(lambda d: d <= top, (2**i - 1 for i in itertools.count(1))))


def kudo_araki_generator_degrees(top: int) -> list[int]:
    """Degrees up to ``top`` computed by iterating the operation fold."""
    degrees = []
    i = 1
    while True:
        d = kudo_araki_degree(i)
        if d > top:
            return degrees
        degrees.append(d)
        i += 1


def format_series(a: AdditiveSeries) -> str:
    """Text form ``K=6; a1=1 a2=0 ...``; polynomial coefficients print inline."""
    items = []
    for i in range(1, a.truncation):
        c = a.coefficient(i)
        if c.is_zero():
            rendered = "0"
        elif c.is_one():
            rendered = "1"
        else:
            rendered = format_poly(c).replace(" ", "")
        items.append(f"a{i}={rendered}")
    body = " ".join(items)
    return f"K={a.truncation};" + (f" {body}" if body else "")


def parse_series(text: str) -> AdditiveSeries:
    """Parse the scalar series format ``K=6; a1=1 a2=0``; missing entries are 0."""
    head, sep, rest = text.strip().partition(";")
    head = head.strip()
    if not sep or not head.startswith("K="):
        raise ParseError(f"expected 'K=<k>; ...', got {text!r}")
    try:
        truncation = int(head[2:])
    except ValueError:
        raise ParseError(f"bad truncation token {head!r}") from None
    if truncation < 1:
        raise ParseError(f"bad truncation {truncation}")
    bits: dict[int, int] = {}
    for token in rest.split():
        name, eq, value = token.partition("=")
        if not eq or not name.startswith("a"):
            raise ParseError(f"bad coefficient token {token!r}")
        try:
            index = int(name[1:])
            bit = int(value)
        except ValueError:
            raise ParseError(f"bad coefficient token {token!r}") from None
        if not 1 <= index < truncation:
            raise ParseError(f"coefficient index {index} outside 1..{truncation - 1}")
        if bit not in (0, 1):
            raise ParseError(f"scalar coefficients must be 0 or 1, got {token!r}")
        bits[index] = bit
    return AdditiveSeries.scalar(truncation, bits)
