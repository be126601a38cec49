"""Super convex spaces: the combine interface, interval and product
instances, countably affine maps, and mechanical checkers for the two
structure axioms and the morphism law.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .numerics import (
    ExtReal,
    INF,
    PartitionOfOne,
    as_ext,
    compose_partitions,
    countable_combine,
    dirac_partition,
    ext_eq,
    random_partition,
)
from .reports import LawReport

DEFAULT_TOLERANCE = Fraction(1, 10**12)
DEFAULT_DEPTH = 8


class CarrierViolation(Exception):
    """A combine result left the carrier (the input was not from the space)."""


class ArityMismatch(Exception):
    pass


class SuperConvexSpace:
    """A set with one operation: combine a countable partition of one with
    a sequence of elements.  Instances supply membership, equality and a
    seeded sampler; the axioms are checked, not assumed."""

    name = "abstract"

    def contains(self, x) -> bool:
        raise NotImplementedError

    def eq(self, x, y) -> bool:
        raise NotImplementedError

    def combine(self, omega: PartitionOfOne, seq, **certificates):
        raise NotImplementedError

    def sample(self, rng: random.Random):
        raise NotImplementedError

    def sampler(self, seed: int):
        return self.sample(random.Random(seed))

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class IntervalSpace(SuperConvexSpace):
    """[0,1], (0,1), or the extended real line, with combine delegated to
    the certified countable combination.  Elements are ExtReal."""

    KINDS = ("closed_unit", "open_unit", "ext_real_line")

    def __init__(self, kind: str, tolerance: Fraction = DEFAULT_TOLERANCE):
        if kind not in self.KINDS:
            raise ValueError(f"unknown interval kind {kind!r}")
        self.kind = kind
        self.tolerance = Fraction(tolerance)
        self.name = {"closed_unit": "[0,1]", "open_unit": "(0,1)",
                     "ext_real_line": "R-inf"}[kind]

    def contains(self, x) -> bool:
        x = as_ext(x)
        if x is NotImplemented:
            return False
        if self.kind == "ext_real_line":
            return True
        if x.is_inf:
            return False
        if x.enclosure is not None and x.enclosure.width != 0:
            lo, hi = x.enclosure.lower, x.enclosure.upper
            if self.kind == "closed_unit":
                return 0 <= lo and hi is not None and hi <= 1
            return 0 < lo and hi is not None and hi < 1
        if self.kind == "closed_unit":
            return 0 <= x.value <= 1
        return 0 < x.value < 1

    def eq(self, x, y) -> bool:
        return ext_eq(x, y, self.tolerance)

    def combine(self, omega, seq, **certificates):
        result = countable_combine(omega, _as_ext_seq(seq), **certificates)
        if not self.contains(result):
            raise CarrierViolation(
                f"combine result {result!r} is not a point of {self.name}"
            )
        return result

    def sample(self, rng: random.Random) -> ExtReal:
        if self.kind == "closed_unit":
            d = rng.randint(1, 32)
            return ExtReal(Fraction(rng.randint(0, d), d))
        if self.kind == "open_unit":
            d = rng.randint(3, 33)
            return ExtReal(Fraction(rng.randint(1, d - 1), d))
        if rng.random() < 0.15:
            return INF
        return ExtReal(Fraction(rng.randint(-160, 160), rng.randint(1, 16)))


def _as_ext_seq(seq):
    if callable(seq):
        return lambda i: as_ext(seq(i))
    return [as_ext(x) for x in seq]


def make_interval_space(kind: str, tolerance: Fraction = DEFAULT_TOLERANCE) -> IntervalSpace:
    return IntervalSpace(kind, tolerance)


class ProductSpace(SuperConvexSpace):
    """Finite product of super convex spaces; elements are tuples and the
    combine acts componentwise."""

    def __init__(self, factors):
        factors = list(factors)
        if not factors:
            raise ValueError("product needs at least one factor")
        self.factors = factors
        self.name = " x ".join(f.name for f in factors)

    def _check_arity(self, x):
        if not isinstance(x, tuple) or len(x) != len(self.factors):
            raise ArityMismatch(f"expected {len(self.factors)}-tuple, got {x!r}")

    def contains(self, x) -> bool:
        if not isinstance(x, tuple) or len(x) != len(self.factors):
            return False
        return all(f.contains(c) for f, c in zip(self.factors, x))

    def eq(self, x, y) -> bool:
        self._check_arity(x)
        self._check_arity(y)
        return all(f.eq(a, b) for f, a, b in zip(self.factors, x, y))

    def combine(self, omega, seq, **certificates):
        seq = list(seq)
        for x in seq:
            self._check_arity(x)
        return tuple(
            f.combine(omega, [x[k] for x in seq], **certificates)
            for k, f in enumerate(self.factors)
        )

    def sample(self, rng: random.Random):
        return tuple(f.sample(rng) for f in self.factors)


def make_product_space(factors) -> ProductSpace:
    return ProductSpace(factors)


class CountablyAffineMap:
    """A map between super convex spaces expected to preserve countable
    convex combinations; check_morphism tests the claim."""

    def __init__(self, source: SuperConvexSpace, target: SuperConvexSpace,
                 fn, name: str = "map"):
        self.source = source
        self.target = target
        self.fn = fn
        self.name = name

    def __call__(self, x):
        return self.fn(x)

    def __repr__(self):
        return f"<map {self.name}: {self.source.name} -> {self.target.name}>"


def identity_map(space: SuperConvexSpace) -> CountablyAffineMap:
    return CountablyAffineMap(space, space, lambda x: x, name="id")


def constant_map(source: SuperConvexSpace, target: SuperConvexSpace,
                 c) -> CountablyAffineMap:
    c = as_ext(c) if not isinstance(c, tuple) else c
    return CountablyAffineMap(source, target, lambda _x: c, name=f"const_{c!r}")


def affine_map(source: SuperConvexSpace, target: SuperConvexSpace,
               offset, slope, name: str | None = None) -> CountablyAffineMap:
    """x |-> offset + slope * x on extended-real carriers, slope >= 0.
    Infinity maps to infinity whenever the slope is strictly positive."""
    offset = Fraction(offset)
    slope = Fraction(slope)
    if slope < 0:
        raise ValueError("slope must be nonnegative to respect the added point")

    def fn(x):
        x = as_ext(x)
        if x.is_inf:
            return ExtReal(offset) if slope == 0 else INF
        return ExtReal(offset + slope * x.value)

    return CountablyAffineMap(
        source, target, fn, name=name or f"affine({offset}+{slope}x)"
    )


class FunctionSpace:
    """A finite generating family of countably affine maps into the
    extended reals, standing in for the full function space, with the
    pointwise combine and pointwise partial orders."""

    def __init__(self, base: SuperConvexSpace, maps):
        self.base = base
        self.maps = list(maps)
        self.target = next(
            (m.target for m in self.maps), make_interval_space("ext_real_line")
        )

    def combine(self, omega: PartitionOfOne, maps=None) -> CountablyAffineMap:
        maps = self.maps if maps is None else list(maps)

        def fn(x):
            return countable_combine(omega, [as_ext(m(x)) for m in maps])

        return CountablyAffineMap(self.base, self.target, fn, name="pointwise-combine")

    def le(self, f, g, probes) -> bool:
        return all(as_ext(f(x)) <= as_ext(g(x)) for x in probes)

    def lt(self, f, g, probes) -> bool:
        return all(as_ext(f(x)) < as_ext(g(x)) for x in probes)


def describe(x):
    """Serialize an element for a counterexample witness."""
    if isinstance(x, ExtReal):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, tuple):
        return [describe(c) for c in x]
    if hasattr(x, "to_json_obj"):
        return x.to_json_obj()
    return repr(x)


def check_axiom1(space: SuperConvexSpace, seeds, depth: int = DEFAULT_DEPTH) -> LawReport:
    """Projection axiom: combining with a point mass at j returns the j-th
    element, for sampled sequences."""
    report = LawReport(law="axiom1", instance=space.name, seeds=list(seeds))
    for seed in seeds:
        rng = random.Random(seed)
        a = [space.sample(rng) for _ in range(depth)]
        j = rng.randint(1, depth)
        got = space.combine(dirac_partition(j), a)
        if space.eq(got, a[j - 1]):
            report.record_pass()
        else:
            report.record_failure({
                "seed": seed, "j": j,
                "sequence": [describe(x) for x in a],
                "got": describe(got), "expected": describe(a[j - 1]),
            })
    return report


def check_axiom2(space: SuperConvexSpace, seeds, depth: int = DEFAULT_DEPTH) -> LawReport:
    """Associativity axiom: combining combinations equals combining with
    the composed partition, for random finite-support partitions."""
    report = LawReport(law="axiom2", instance=space.name, seeds=list(seeds))
    for seed in seeds:
        rng = random.Random(seed)
        a = [space.sample(rng) for _ in range(depth)]
        k = rng.randint(1, depth)
        alpha = random_partition(rng.getrandbits(32), k)
        betas = [random_partition(rng.getrandbits(32), depth) for _ in range(k)]
        inner = [space.combine(betas[i], a) for i in range(k)]
        lhs = space.combine(alpha, inner)
        rhs = space.combine(compose_partitions(alpha, betas), a)
        if space.eq(lhs, rhs):
            report.record_pass()
        else:
            report.record_failure({
                "seed": seed,
                "alpha": {i: str(w) for i, w in alpha.items()},
                "lhs": describe(lhs), "rhs": describe(rhs),
            })
    return report


def check_morphism(m: CountablyAffineMap, seeds, depth: int = DEFAULT_DEPTH) -> LawReport:
    """Morphism law: the map commutes with sampled countable convex
    combinations."""
    report = LawReport(law="morphism", instance=m.name, seeds=list(seeds))
    for seed in seeds:
        rng = random.Random(seed)
        a = [m.source.sample(rng) for _ in range(depth)]
        k = rng.randint(1, depth)
        omega = random_partition(rng.getrandbits(32), k)
        lhs = m(m.source.combine(omega, a[:k]))
        rhs = m.target.combine(omega, [m(x) for x in a[:k]])
        if m.target.eq(lhs, rhs):
            report.record_pass()
        else:
            report.record_failure({
                "seed": seed,
                "omega": {i: str(w) for i, w in omega.items()},
                "sequence": [describe(x) for x in a[:k]],
                "lhs": describe(lhs), "rhs": describe(rhs),
            })
    return report
