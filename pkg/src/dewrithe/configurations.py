"""Point configurations in the plane, discriminants, and braid <-> loop bridges.

A :class:`Configuration` is a finite set of pairwise distinct complex points;
the list order is bookkeeping only and every exported quantity is invariant
under reordering.  A :class:`ConfigLoop` is a closed piecewise-linear motion:
a list of equal-size frames, the last connecting back to the first.  Strand
identity between consecutive frames is recovered by proximity, so frames may
list their points in any order provided no point moves further than half the
minimal separation per step.

The discriminant of a configuration is the signed product of all ordered
pairwise differences.  Along a loop its argument winds an integer number of
turns equal to the loop's writhe, which is what ties this module back to
braid words: ``braid_word_to_loop`` realizes a word as the standard rotating
motion of the integer configuration {1, .., n}, with a positive letter turning
the two strands counterclockwise, and ``loop_to_braid`` reads a word back off
any generic loop by sweeping for real-axis rank exchanges.
"""

from __future__ import annotations

import cmath
import logging
import math
import random
from dataclasses import dataclass, field

from . import braids
from .braids import BraidWord, Permutation
from .errors import (
    DegenerateConfigurationError,
    NonGenericLoopError,
    ParseError,
    ResolutionError,
)

log = logging.getLogger(__name__)

#: Hard floor on pairwise point separation; closer pairs are degenerate.
EPS_SEP = 1e-8

#: Size of the deterministic jiggle applied when a loop is non-generic.
PERTURB_SCALE = 1e-6


@dataclass(frozen=True)
class Configuration:
    """Pairwise-distinct points in the plane (separation above ``EPS_SEP``)."""

    points: tuple[complex, ...]

    def __post_init__(self) -> None:
        pts = tuple(complex(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if not (math.isfinite(p.real) and math.isfinite(p.imag)):
                raise DegenerateConfigurationError(f"non-finite point {p}")
        n = len(pts)
        for i in range(n):
            for j in range(i + 1, n):
                if abs(pts[i] - pts[j]) <= EPS_SEP:
                    raise DegenerateConfigurationError(
                        f"points {pts[i]} and {pts[j]} are within {EPS_SEP}"
                    )

    @property
    def size(self) -> int:
        return len(self.points)

    def min_separation(self) -> float:
        pts = self.points
        return min(
            (abs(pts[i] - pts[j]) for i in range(len(pts)) for j in range(i + 1, len(pts))),
            default=math.inf,
        )


def scaled(config: Configuration, u: complex) -> Configuration:
    """The configuration with every point multiplied by ``u``."""
    return Configuration(tuple(u * p for p in config.points))


def juxtapose(left: Configuration, right: Configuration) -> Configuration:
    """Disjoint union after translating ``right`` past ``left``'s bounding box."""
    if not left.points:
        return right
    if not right.points:
        return left
    offset = max(p.real for p in left.points) - min(p.real for p in right.points) + 1.0
    return Configuration(left.points + tuple(p + offset for p in right.points))


@dataclass(frozen=True)
class ConfigLoop:
    """Closed piecewise-linear loop of equal-size configurations."""

    frames: tuple[Configuration, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "frames", tuple(self.frames))
        if not self.frames:
            raise ValueError("a loop needs at least one frame")
        n = self.frames[0].size
        for f in self.frames:
            if f.size != n:
                raise ValueError("all frames must have the same number of points")

    @property
    def size(self) -> int:
        return self.frames[0].size


@dataclass(frozen=True)
class AnomalyPoint:
    """A configuration with the angular anomaly of its discriminant.

    ``delta`` has real part in [0, 1) and satisfies exp(2 pi i delta) ==
    discriminant(config).  ``lift`` records the sheet of the integer cover:
    it differs from ``delta`` by an integer and satisfies the same equation.
    """

    config: Configuration
    delta: complex
    lift: complex = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.lift is None:
            object.__setattr__(self, "lift", self.delta)
        if not 0.0 <= self.delta.real < 1.0:
            raise ValueError("delta real part must lie in [0, 1)")
        offset = self.lift - self.delta
        if abs(offset.imag) > 1e-9 or abs(offset.real - round(offset.real)) > 1e-9:
            raise ValueError("lift must differ from delta by an integer")
        target = discriminant(self.config)
        value = cmath.exp(2j * math.pi * self.delta)
        if abs(value - target) > 1e-9 * max(1.0, abs(target)):
            raise ValueError("delta is not an argument lift of the discriminant")


def root_polynomial(config: Configuration) -> list[complex]:
    """Monic coefficients (highest degree first) of the polynomial vanishing on F.

    Roots are multiplied in a canonical order, so the output is independent of
    the configuration's bookkeeping order.
    """
    coeffs = [complex(1.0)]
    for root in sorted(config.points, key=lambda p: (p.real, p.imag)):
        new = coeffs + [complex(0.0)]
        for i in range(len(coeffs)):
            new[i + 1] -= root * coeffs[i]
        coeffs = new
    return coeffs


def discriminant(config: Configuration) -> complex:
    """Signed product of all ordered pairwise differences of the points.

    With ``n`` points the sign prefactor is (-1)^(n(n-1)/2).  The differences
    are multiplied in a canonical sorted order, making the value bit-for-bit
    independent of the point ordering.
    """
    pts = config.points
    n = len(pts)
    diffs = [pts[i] - pts[j] for i in range(n) for j in range(n) if i != j]
    diffs.sort(key=lambda d: (d.real, d.imag))
    product = complex(1.0)
    for d in diffs:
        product *= d
    if (n * (n - 1) // 2) % 2:
        product = -product
    return product


def anomaly(config: Configuration) -> AnomalyPoint:
    """Angular anomaly: (2 pi i)^-1 log of the discriminant, reduced mod 1."""
    disc = discriminant(config)
    theta = cmath.phase(disc)
    if theta <= -math.pi:
        theta = math.pi
    real = (theta / (2.0 * math.pi)) % 1.0
    imag = -math.log(abs(disc)) / (2.0 * math.pi)
    return AnomalyPoint(config, complex(real, imag))


def covering_action(k: int, point: AnomalyPoint) -> AnomalyPoint:
    """Deck transformation of the integer cover: shift the lift by n(n-1)k.

    The reduced anomaly is unchanged; only the recorded sheet moves.
    """
    n = point.config.size
    return AnomalyPoint(point.config, point.delta, point.lift + n * (n - 1) * k)


def base_configuration(n: int) -> Configuration:
    """The integer points 1..n on the real axis."""
    return Configuration(tuple(complex(i) for i in range(1, n + 1)))


def braid_word_to_loop(w: BraidWord, steps_per_letter: int) -> ConfigLoop:
    """Realize a braid word as a closed motion of the integer configuration.

    Each letter rotates the two points currently in real-axis slots ``i`` and
    ``i + 1`` a half turn about their midpoint, counterclockwise for a
    positive letter, sampled at ``steps_per_letter`` frames per letter.  The
    motion ends on the starting point set, so dropping the final (duplicate)
    frame leaves a closed loop.
    """
    if steps_per_letter < 8:
        raise ValueError("steps_per_letter must be at least 8")
    n = w.strands
    pos = [complex(i) for i in range(1, n + 1)]  # pos[s] = strand s position
    strand_at = list(range(n))  # slot -> strand occupying it
    frames = [Configuration(tuple(pos))]
    for e in w.letters:
        i = abs(e)
        a, b = strand_at[i - 1], strand_at[i]
        mid = i + 0.5
        direction = 1.0 if e > 0 else -1.0
        for k in range(1, steps_per_letter):
            turn = 0.5 * cmath.exp(1j * direction * math.pi * k / steps_per_letter)
            pos[a] = mid - turn
            pos[b] = mid + turn
            frames.append(Configuration(tuple(pos)))
        # snap the finished half turn to exact integer slots
        pos[a] = complex(i + 1)
        pos[b] = complex(i)
        strand_at[i - 1], strand_at[i] = b, a
        frames.append(Configuration(tuple(pos)))
    if w.letters:
        frames.pop()  # final frame repeats the start as a set
    return ConfigLoop(tuple(frames))


def loop_discriminant_winding(loop: ConfigLoop) -> int:
    """Net turns of the discriminant's argument around the loop.

    Tracks the argument continuously frame to frame and refuses if any single
    step turns by a quarter turn or more, which guarantees the lift is
    unambiguous; the total is an integer because the loop is closed.
    """
    discs = [discriminant(f) for f in loop.frames]
    total = 0.0
    count = len(discs)
    for k in range(count):
        step = cmath.phase(discs[(k + 1) % count] / discs[k])
        if abs(step) >= math.pi / 2.0:
            raise ResolutionError(
                f"argument jump {step:.3f} between frames {k} and {(k + 1) % count}"
            )
        total += step
    turns = total / (2.0 * math.pi)
    nearest = round(turns)
    if abs(turns - nearest) > 1e-6:
        raise ResolutionError(f"winding {turns} is not an integer; loop may not close")
    return int(nearest)


def _match_frames(a: Configuration, b: Configuration) -> list[int]:
    """Index map a -> b pairing each point with its nearest successor.

    Valid when every point moves less than half the minimal separation, which
    forces the nearest-neighbour map to be the true strand correspondence.
    """
    limit = 0.5 * min(a.min_separation(), b.min_separation())
    mapping = []
    for p in a.points:
        dists = [abs(p - q) for q in b.points]
        j = min(range(len(dists)), key=dists.__getitem__)
        if dists[j] >= limit:
            raise ResolutionError(
                "frame spacing too coarse to track strands "
                f"(moved {dists[j]:.3g}, limit {limit:.3g})"
            )
        mapping.append(j)
    if len(set(mapping)) != len(mapping):
        raise ResolutionError("ambiguous strand matching between frames")
    return mapping


def _lex_less(p: complex, q: complex) -> bool:
    return (p.real, p.imag) < (q.real, q.imag)


def _strand_paths(loop: ConfigLoop) -> tuple[list[list[complex]], list[int]]:
    """Closed per-strand trajectories plus the endpoint index permutation."""
    frames = loop.frames
    n = loop.size
    paths = [[frames[0].points[s]] for s in range(n)]
    current = list(range(n))
    for k in range(1, len(frames) + 1):
        target = frames[k % len(frames)]
        mapping = _match_frames(frames[k - 1], target)
        current = [mapping[c] for c in current]
        for s in range(n):
            paths[s].append(target.points[current[s]])
    return paths, current


def _extract_letters(loop: ConfigLoop) -> BraidWord:
    n = loop.size
    paths, endpoint = _strand_paths(loop)
    segments = len(paths[0]) - 1 if n else 0
    letters: list[int] = []
    for k in range(segments):
        events = []
        for s in range(n):
            for t in range(s + 1, n):
                za, zb = paths[s][k], paths[t][k]
                wa, wb = paths[s][k + 1], paths[t][k + 1]
                before = _lex_less(za, zb)
                after = _lex_less(wa, wb)
                if before == after:
                    continue
                d0 = za.real - zb.real
                d1 = wa.real - wb.real
                if d0 == 0.0 and d1 == 0.0:
                    raise NonGenericLoopError(
                        f"strands share a real part across frames {k}..{k + 1}"
                    )
                if d0 == 0.0:
                    tstar = 0.0
                elif d1 == 0.0:
                    tstar = 1.0
                else:
                    tstar = d0 / (d0 - d1)
                mover, other = (s, t) if before else (t, s)
                events.append((tstar, mover, other))
        events.sort(key=lambda ev: ev[0])
        for tstar, mover, other in events:
            za = paths[mover][k] * (1 - tstar) + paths[mover][k + 1] * tstar
            zb = paths[other][k] * (1 - tstar) + paths[other][k + 1] * tstar
            cross_re = 0.5 * (za.real + zb.real)
            below = 0
            for u in range(n):
                if u in (mover, other):
                    continue
                zu = paths[u][k] * (1 - tstar) + paths[u][k + 1] * tstar
                if abs(zu.real - cross_re) < 1e-9:
                    raise NonGenericLoopError(
                        f"three strands meet the same real part near frame {k}"
                    )
                if zu.real < cross_re:
                    below += 1
            sign = 1 if za.imag < zb.imag else -1
            letters.append(sign * (below + 1))
    word = BraidWord(n, tuple(letters))
    # cross-check: the word's permutation must match the tracked endpoints
    start_order = sorted(range(n), key=lambda s: (paths[s][0].real, paths[s][0].imag))
    rank_of_strand = {s: r for r, s in enumerate(start_order)}
    rank_of_index = {start_order[r]: r for r in range(n)}
    perm_image = [0] * n
    for s in range(n):
        perm_image[rank_of_strand[s]] = rank_of_index[endpoint[s]]
    if braids.underlying_permutation(word) != Permutation(tuple(perm_image)):
        raise NonGenericLoopError("extracted word disagrees with endpoint permutation")
    return word


def loop_to_braid(loop: ConfigLoop, perturb_seed: int = 0) -> BraidWord:
    """Read a braid word off a loop by sweeping for real-axis rank exchanges.

    When two strands exchange adjacent real-axis ranks ``i`` and ``i + 1`` the
    letter ``i`` is emitted, positive when the strand moving rightward passes
    below the other (the counterclockwise convention).  Non-generic loops are
    retried with a deterministic jiggle of size ``PERTURB_SCALE`` drawn from
    ``perturb_seed`` before giving up.
    """
    try:
        return _extract_letters(loop)
    except NonGenericLoopError as first_failure:
        failure = first_failure
    rng = random.Random(perturb_seed)
    for attempt in range(1, 4):
        log.info("perturbing non-generic loop (seed=%d attempt=%d)", perturb_seed, attempt)
        jiggled = ConfigLoop(
            tuple(
                Configuration(
                    tuple(
                        p
                        + PERTURB_SCALE
                        * complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
                        for p in f.points
                    )
                )
                for f in loop.frames
            )
        )
        try:
            return _extract_letters(jiggled)
        except NonGenericLoopError as exc:
            failure = exc
    raise NonGenericLoopError(f"perturbation budget exhausted: {failure}")


def format_configuration(config: Configuration) -> str:
    return "\n".join(f"{p.real!r} {p.imag!r}" for p in config.points)


def parse_configuration(text: str) -> Configuration:
    """Parse one point per line as ``re im`` decimals."""
    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 're im', got {line!r}")
        try:
            points.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: bad number in {line!r}") from None
    return Configuration(tuple(points))


def format_loop(loop: ConfigLoop) -> str:
    header = f"n={loop.size} frames={len(loop.frames)}"
    blocks = [format_configuration(f) for f in loop.frames]
    return "\n\n".join([header] + blocks) + "\n"


def parse_loop(text: str) -> ConfigLoop:
    """Parse the ``n=.. frames=..`` header plus blank-line separated frames."""
    blocks = [b for b in text.split("\n\n") if b.strip()]
    if not blocks:
        raise ParseError("empty loop text")
    header = blocks[0].strip()
    tokens = header.split()
    if len(tokens) != 2 or not tokens[0].startswith("n=") or not tokens[1].startswith("frames="):
        raise ParseError(f"bad loop header {header!r}")
    try:
        n = int(tokens[0][2:])
        count = int(tokens[1][7:])
    except ValueError:
        raise ParseError(f"bad loop header {header!r}") from None
    frames = tuple(parse_configuration(b) for b in blocks[1:])
    if len(frames) != count:
        raise ParseError(f"header promises {count} frames, found {len(frames)}")
    for f in frames:
        if f.size != n:
            raise ParseError(f"frame size {f.size} contradicts header n={n}")
    return ConfigLoop(frames)
