"""Exact and certified arithmetic on the extended real line and on
countable partitions of one.

Finite values are exact ``fractions.Fraction``s; the single added point
``inf`` compares above every finite value.  Countable convex combinations
follow limit-or-infinity semantics, made decidable through explicit
certificates: a tail bound B yields a rational enclosure, a divergence
witness yields ``inf``, and anything else raises ``Undecided``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

Rational = Union[int, Fraction]

DEFAULT_N_MAX = 10**6
DEFAULT_DIVERGENCE_THRESHOLD = Fraction(10**12)


class Undecided(Exception):
    """A countable combination could not be certified to converge or diverge."""


class UnsupportedRepresentation(Exception):
    """Operation requires finite-support partitions."""


class Enclosure:
    """A rational interval [lower, upper] guaranteed to contain a value.

    ``upper is None`` encodes an unbounded-above enclosure.
    """

    __slots__ = ("lower", "upper")

    def __init__(self, lower: Rational, upper: Rational | None):
        self.lower = Fraction(lower)
        self.upper = None if upper is None else Fraction(upper)
        if self.upper is not None and self.lower > self.upper:
            raise ValueError("enclosure has lower > upper")

    @property
    def width(self) -> Fraction | None:
        if self.upper is None:
            return None
        return self.upper - self.lower

    def contains(self, q: Rational) -> bool:
        q = Fraction(q)
        if q < self.lower:
            return False
        return self.upper is None or q <= self.upper

    def __repr__(self):
        hi = "inf" if self.upper is None else str(self.upper)
        return f"Enclosure[{self.lower}, {hi}]"


class ExtReal:
    """A point of the real line extended by a single point at infinity.

    Finite points carry an exact rational; a finite point produced by a
    certified truncation additionally carries the enclosure that contains
    the true limit (its value is the enclosure midpoint).
    """

    __slots__ = ("value", "enclosure")

    def __init__(self, value: Rational | None, enclosure: Enclosure | None = None):
        self.value = None if value is None else Fraction(value)
        self.enclosure = enclosure

    @classmethod
    def finite(cls, q: Rational) -> "ExtReal":
        return cls(Fraction(q))

    @classmethod
    def infinity(cls) -> "ExtReal":
        return cls(None)

    @property
    def is_inf(self) -> bool:
        return self.value is None

    @property
    def is_exact(self) -> bool:
        return self.enclosure is None or self.enclosure.width == 0

    def __float__(self) -> float:
        return float("inf") if self.is_inf else float(self.value)

    def __eq__(self, other) -> bool:
        other = as_ext(other)
        if other is NotImplemented:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(("ExtReal", self.value))

    def __lt__(self, other) -> bool:
        other = as_ext(other)
        if self.is_inf:
            return False
        if other.is_inf:
            return True
        return self.value < other.value

    def __le__(self, other) -> bool:
        return self == other or self < other

    def __repr__(self):
        if self.is_inf:
            return "ExtReal(inf)"
        if self.enclosure is not None:
            return f"ExtReal({self.value} ± {self.enclosure.width})"
        return f"ExtReal({self.value})"

    def to_json(self) -> str:
        return "inf" if self.is_inf else str(self.value)


INF = ExtReal.infinity()


def as_ext(x) -> ExtReal:
    """Coerce ints, Fractions and float('inf') to ExtReal."""
    if isinstance(x, ExtReal):
        return x
    if isinstance(x, (int, Fraction)):
        return ExtReal(x)
    if isinstance(x, float):
        if x == float("inf"):
            return INF
        return ExtReal(Fraction(x))
    return NotImplemented


def ext_eq(u, v, tolerance: Rational = 0) -> bool:
    """Equality on extended reals; exact values compare exactly, values
    carrying a nondegenerate enclosure compare within ``tolerance``."""
    u, v = as_ext(u), as_ext(v)
    if u.is_inf or v.is_inf:
        return u.is_inf and v.is_inf
    if u.is_exact and v.is_exact:
        return u.value == v.value
    return abs(u.value - v.value) <= Fraction(tolerance)


def scale(s: Rational, u: ExtReal) -> ExtReal:
    """Positive-scalar multiple on the extended reals; 0 * finite = 0."""
    s = Fraction(s)
    if s < 0:
        raise ValueError("scale factor must be nonnegative")
    u = as_ext(u)
    if u.is_inf:
        if s == 0:
            raise ValueError("0 * inf is undefined")
        return INF
    return ExtReal(s * u.value)


def ext_add(u: ExtReal, v: ExtReal) -> ExtReal:
    u, v = as_ext(u), as_ext(v)
    if u.is_inf or v.is_inf:
        return INF
    return ExtReal(u.value + v.value)


def binary_combine(r: Rational, u, v) -> ExtReal:
    """(1-r)u + rv on the extended reals, with (1-r)u + r*inf = inf for r > 0
    and a weight of exactly 0 on infinity dropping that argument."""
    r = Fraction(r)
    if not 0 <= r <= 1:
        raise ValueError("weight must lie in [0, 1]")
    u, v = as_ext(u), as_ext(v)
    if r == 0:
        return u
    if r == 1:
        return v
    if u.is_inf or v.is_inf:
        return INF
    return ExtReal((1 - r) * u.value + r * v.value)


class PartitionOfOne:
    """A countable sequence of weights in [0,1] summing to one.

    Finite support stores exact rational weights indexed from 1 and sums
    to exactly 1.  Lazy support stores a weight generator together with a
    certified tail-mass bound per truncation depth.
    """

    __slots__ = ("support", "weight_fn", "tail_fn")

    def __init__(
        self,
        support: dict[int, Fraction] | None = None,
        weight_fn: Callable[[int], Fraction] | None = None,
        tail_fn: Callable[[int], Fraction] | None = None,
    ):
        if support is not None:
            support = {i: Fraction(w) for i, w in support.items() if w != 0}
            for i, w in support.items():
                if i < 1:
                    raise ValueError("indices start at 1")
                if not 0 <= w <= 1:
                    raise ValueError(f"weight {w} outside [0, 1]")
            if sum(support.values()) != 1:
                raise ValueError("weights must sum to 1")
            self.support = support
            self.weight_fn = None
            self.tail_fn = None
        else:
            if weight_fn is None or tail_fn is None:
                raise ValueError("lazy partition needs weight_fn and tail_fn")
            self.support = None
            self.weight_fn = weight_fn
            self.tail_fn = tail_fn

    @classmethod
    def finite(cls, weights: Iterable[Rational] | dict[int, Rational]) -> "PartitionOfOne":
        if isinstance(weights, dict):
            return cls(support={i: Fraction(w) for i, w in weights.items()})
        return cls(support={i: Fraction(w) for i, w in enumerate(weights, start=1)})

    @classmethod
    def geometric(cls) -> "PartitionOfOne":
        """Weights 1/2^i with exact tail mass 1/2^N after depth N."""
        return cls(
            weight_fn=lambda i: Fraction(1, 2**i),
            tail_fn=lambda n: Fraction(1, 2**n),
        )

    @property
    def is_finite(self) -> bool:
        return self.support is not None

    def weight(self, i: int) -> Fraction:
        if self.is_finite:
            return self.support.get(i, Fraction(0))
        return Fraction(self.weight_fn(i))

    def tail_mass(self, n: int) -> Fraction:
        """Certified bound on the mass beyond index n."""
        if self.is_finite:
            return sum(
                (w for i, w in self.support.items() if i > n), Fraction(0)
            )
        return Fraction(self.tail_fn(n))

    def items(self):
        if not self.is_finite:
            raise UnsupportedRepresentation("lazy partition has no finite item list")
        return sorted(self.support.items())

    def __eq__(self, other):
        if not isinstance(other, PartitionOfOne):
            return NotImplemented
        if self.is_finite and other.is_finite:
            return self.support == other.support
        return self is other

    def __hash__(self):
        if self.is_finite:
            return hash(frozenset(self.support.items()))
        return id(self)

    def __repr__(self):
        if self.is_finite:
            inner = ", ".join(f"{i}: {w}" for i, w in self.items())
            return f"PartitionOfOne({{{inner}}})"
        return "PartitionOfOne(lazy)"


def dirac_partition(j: int) -> PartitionOfOne:
    """The partition with all weight at index j."""
    if j < 1:
        raise ValueError("index must be >= 1")
    return PartitionOfOne.finite({j: Fraction(1)})


def _value_at(u, i: int) -> ExtReal:
    if callable(u):
        return as_ext(u(i))
    return as_ext(u[i - 1])


def countable_combine(
    omega: PartitionOfOne,
    u,
    n_max: int = DEFAULT_N_MAX,
    bound: Rational | None = None,
    divergence_witness: bool = False,
    threshold: Rational = DEFAULT_DIVERGENCE_THRESHOLD,
) -> ExtReal:
    """The countable convex combination sum_i omega_i * u_i in the extended
    reals.

    ``u`` is a sequence (1-indexed via position) or a callable on indices.
    Finite support is summed exactly; any strictly positive weight on an
    infinite value forces the result to infinity.  Lazy support needs a
    certificate: ``bound`` B (all tail values satisfy |u_i| <= B) yields a
    value with enclosure width <= 2*B*tail(N); ``divergence_witness``
    asserts the partial sums exceed any threshold and yields infinity once
    verified.  Without a certificate the partial sums are scanned to
    ``n_max``; crossing ``threshold`` upward returns infinity, anything
    else raises Undecided.
    """
    threshold = Fraction(threshold)
    if omega.is_finite:
        total = Fraction(0)
        for i, w in omega.items():
            ui = _value_at(u, i)
            if ui.is_inf:
                return INF
            total += w * ui.value
        return ExtReal(total)

    if bound is not None and divergence_witness:
        raise ValueError("bound and divergence witness are exclusive")
    if divergence_witness:
        return INF
    partial = Fraction(0)
    for n in range(1, n_max + 1):
        w = omega.weight(n)
        if w != 0:
            un = _value_at(u, n)
            if un.is_inf:
                return INF
            partial += w * un.value
        if bound is None and partial > threshold:
            return INF
    if bound is not None:
        b = Fraction(bound)
        tail = b * omega.tail_mass(n_max)
        enc = Enclosure(partial - tail, partial + tail)
        return ExtReal(partial, enclosure=enc)
    if partial < -threshold:
        raise Undecided(
            "partial sums diverge below every bound; the carrier has no -inf point"
        )
    raise Undecided(
        f"no certificate supplied and partial sums neither stabilized nor "
        f"crossed {threshold} by depth {n_max}"
    )


def compose_partitions(alpha: PartitionOfOne, betas) -> PartitionOfOne:
    """The partition gamma with gamma_j = sum_i alpha_i * beta^i_j.

    ``betas`` is a sequence (1-indexed via position) or callable of
    finite-support partitions.  Exact composition is only defined for
    finite supports.
    """
    if not alpha.is_finite:
        raise UnsupportedRepresentation("compose_partitions needs finite support")
    gamma: dict[int, Fraction] = {}
    for i, ai in alpha.items():
        beta_i = betas(i) if callable(betas) else betas[i - 1]
        if not beta_i.is_finite:
            raise UnsupportedRepresentation("compose_partitions needs finite support")
        for j, bij in beta_i.items():
            gamma[j] = gamma.get(j, Fraction(0)) + ai * bij
    return PartitionOfOne(support=gamma)


def random_partition(seed: int, support_size: int) -> PartitionOfOne:
    """A deterministic random finite-support partition: a random integer
    composition of ``support_size`` parts, normalized exactly."""
    if support_size < 1:
        raise ValueError("support_size must be >= 1")
    rng = random.Random(seed)
    parts = [rng.randint(1, 1000) for _ in range(support_size)]
    total = sum(parts)
    return PartitionOfOne.finite([Fraction(p, total) for p in parts])


def parse_rational(s: str) -> Fraction:
    """Parse the wire form "p/q" (or a bare integer string)."""
    return Fraction(s)


def parse_ext(s: str) -> ExtReal:
    if s == "inf":
        return INF
    return ExtReal(Fraction(s))
