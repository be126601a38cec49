"""Probability measures at desk scale: Dirac unit, mixtures, pushforward,
integration, the barycenter counit, monad multiplication, and the
isomorphism between measures and the generalized points they induce.

Measures are atomic with exact rational weights; a lazy geometric variant
covers the countably supported demos.  The space of measures on a fixed
finite measurable space is itself a super convex space and is checked
against the same axioms as every other instance.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .meas import FiniteMeasurableSpace, indicator
from .numerics import (
    ExtReal,
    PartitionOfOne,
    UnsupportedRepresentation,
    as_ext,
    countable_combine,
    random_partition,
)
from .scvx import SuperConvexSpace


class BaseMismatch(Exception):
    pass


class NotAMeasure(Exception):
    """A functional's induced set function is not a probability measure."""


class EvInconsistency(Exception):
    """A computed barycenter failed its defining evaluation property."""


def _atom_key(a):
    return repr(a)


class ProbMeasure:
    """A finitely supported probability measure.

    ``support`` is canonical: collisions merged, zero weights dropped,
    atoms sorted; equality and hashing are exact.
    """

    def __init__(self, support, base=None):
        merged: dict = {}
        for atom, w in support:
            w = Fraction(w)
            if w < 0:
                raise NotAMeasure(f"negative weight {w}")
            if w == 0:
                continue
            if atom in merged:
                merged[atom] += w
            else:
                merged[atom] = w
        if sum(merged.values(), Fraction(0)) != 1:
            raise NotAMeasure("weights must sum to 1")
        self.support = tuple(sorted(merged.items(), key=lambda kv: _atom_key(kv[0])))
        self.base = base

    @property
    def atoms(self):
        return [a for a, _ in self.support]

    @property
    def weights(self):
        return [w for _, w in self.support]

    def weight_of(self, atom) -> Fraction:
        for a, w in self.support:
            if a == atom:
                return w
        return Fraction(0)

    def weights_partition(self) -> PartitionOfOne:
        return PartitionOfOne.finite(self.weights)

    def measure_of(self, region) -> Fraction:
        """Probability of a region: a bitmask (over a measurable-space
        base), a predicate, or an atom container."""
        if isinstance(region, int) and isinstance(self.base, FiniteMeasurableSpace):
            member = lambda a: self.base.member(a, region)
        elif callable(region):
            member = region
        else:
            atoms = list(region)
            member = lambda a: a in atoms
        return sum((w for a, w in self.support if member(a)), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, ProbMeasure):
            return NotImplemented
        return self.support == other.support

    def __hash__(self):
        return hash(self.support)

    def to_json_obj(self) -> dict:
        from .scvx import describe
        return {
            "atoms": [{"atom": describe(a), "weight": str(w)} for a, w in self.support]
        }

    def __repr__(self):
        inner = " + ".join(f"{w}*d[{a!r}]" for a, w in self.support)
        return f"ProbMeasure({inner})"


class LazyMeasure:
    """A countably supported measure given by a lazy partition of one and
    an atom generator; used where a finite list cannot represent the
    support (geometric mixtures)."""

    def __init__(self, weights: PartitionOfOne, atom_fn, base=None):
        if weights.is_finite:
            raise ValueError("use ProbMeasure for finite support")
        self.weights = weights
        self.atom_fn = atom_fn
        self.base = base

    def __repr__(self):
        return "LazyMeasure(lazy weights)"


def dirac(x, base=None) -> ProbMeasure:
    """The unit: the point mass at x."""
    return ProbMeasure([(x, Fraction(1))], base=base)


def mixture(omega: PartitionOfOne, measures, base=None):
    """The convex mixture of measures with weights from a partition of
    one.  Finite support is merged exactly; a lazy partition over Dirac
    measures yields a lazy countably supported measure."""
    if omega.is_finite:
        ms = list(measures) if not callable(measures) else [
            measures(i) for i, _ in omega.items()
        ]
        if callable(measures):
            picked = list(zip((i for i, _ in omega.items()), ms))
        else:
            picked = [(i, ms[i - 1]) for i, _ in omega.items()]
        bases = {id(m.base) for _, m in picked if m.base is not None}
        if len(bases) > 1:
            raise BaseMismatch("mixture components live on different bases")
        support = []
        for i, m in picked:
            w_i = omega.weight(i)
            if isinstance(m, LazyMeasure):
                raise UnsupportedRepresentation(
                    "finite mixture of lazy measures is not represented"
                )
            for a, w in m.support:
                support.append((a, w_i * w))
        shared = next((m.base for _, m in picked if m.base is not None), base)
        return ProbMeasure(support, base=shared)

    get = measures if callable(measures) else lambda i: measures[i - 1]

    def atom_fn(i):
        m = get(i)
        if not isinstance(m, ProbMeasure) or len(m.support) != 1:
            raise UnsupportedRepresentation(
                "lazy mixtures are represented only over Dirac measures"
            )
        return m.support[0][0]

    return LazyMeasure(omega, atom_fn, base=base)


def pushforward(P: ProbMeasure, m, base=None) -> ProbMeasure:
    """Transport atom weights through a map, merging collisions exactly."""
    fn = m.fn if hasattr(m, "fn") else m
    tgt = base
    if tgt is None and hasattr(m, "target") and isinstance(
        m.target, FiniteMeasurableSpace
    ):
        tgt = m.target
    return ProbMeasure([(fn(a), w) for a, w in P.support], base=tgt)


def integrate(P, f, **certificates) -> ExtReal:
    """The integral of an extended-real-valued map against a measure:
    exact on finite support, certified enclosure or infinity on lazy
    support."""
    fn = f.fn if hasattr(f, "fn") else f
    if isinstance(P, LazyMeasure):
        return countable_combine(
            P.weights, lambda i: as_ext(fn(P.atom_fn(i))), **certificates
        )
    omega = P.weights_partition()
    values = [as_ext(fn(a)) for a in P.atoms]
    return countable_combine(omega, values, **certificates)


def barycenter(A: SuperConvexSpace, P, generating_maps=(), **certificates):
    """The counit at A: the unique point of A whose evaluations agree with
    integration against P.  Computed constructively as A's combine of the
    atoms; the defining evaluation property is then checked against every
    supplied generating map."""
    if isinstance(P, LazyMeasure):
        a = A.combine(P.weights, P.atom_fn, **certificates)
    else:
        a = A.combine(P.weights_partition(), P.atoms)
    for m in generating_maps:
        lhs = as_ext(m(a))
        rhs = integrate(P, m, **certificates)
        tol = getattr(A, "tolerance", 0)
        from .numerics import ext_eq
        if not ext_eq(lhs, rhs, tol):
            raise EvInconsistency(
                f"{m!r}: m(barycenter)={lhs!r} but integral={rhs!r}"
            )
    return a


class GirySpace(SuperConvexSpace):
    """The measures on a fixed finite measurable space, as a super convex
    space under mixtures."""

    def __init__(self, X: FiniteMeasurableSpace):
        self.X = X
        self.name = f"G({{{','.join(str(x) for x in X.carrier)}}})"

    def contains(self, P) -> bool:
        if not isinstance(P, ProbMeasure):
            return False
        return all(a in self.X.index for a in P.atoms)

    def eq(self, P, Q) -> bool:
        return P == Q

    def combine(self, omega, seq, **certificates):
        return mixture(omega, seq, base=self.X)

    def sample(self, rng: random.Random) -> ProbMeasure:
        n = len(self.X.carrier)
        k = rng.randint(1, n)
        atoms = rng.sample(self.X.carrier, k)
        part = random_partition(rng.getrandbits(32), k)
        return ProbMeasure(
            [(a, part.weight(i + 1)) for i, a in enumerate(atoms)], base=self.X
        )


def monad_mu(Q: ProbMeasure) -> ProbMeasure:
    """Flatten a measure on measures: the barycenter of Q inside the space
    of measures, i.e. the weighted mixture of its atom measures."""
    for m in Q.atoms:
        if not isinstance(m, ProbMeasure):
            raise BaseMismatch("monad_mu needs a measure whose atoms are measures")
    bases = {id(m.base) for m in Q.atoms if m.base is not None}
    if len(bases) > 1:
        raise BaseMismatch("atom measures live on different bases")
    return mixture(Q.weights_partition(), Q.atoms)


class GeneralizedPoint:
    """A functional on affine maps, backed by a point (evaluation), a
    measure (integration), or a raw functional (for mutants)."""

    def __init__(self, kind, point=None, measure=None, fn=None):
        self.kind = kind
        self.point = point
        self.measure = measure
        self.fn = fn

    @classmethod
    def from_point(cls, a) -> "GeneralizedPoint":
        return cls("point", point=a)

    @classmethod
    def from_measure(cls, P) -> "GeneralizedPoint":
        return cls("measure", measure=P)

    @classmethod
    def from_functional(cls, fn) -> "GeneralizedPoint":
        return cls("functional", fn=fn)

    def apply(self, m, **certificates) -> ExtReal:
        if self.kind == "point":
            return as_ext(m(self.point))
        if self.kind == "measure":
            return integrate(self.measure, m, **certificates)
        return as_ext(self.fn(m))

    def __repr__(self):
        if self.kind == "point":
            return f"GeneralizedPoint(ev_{self.point!r})"
        if self.kind == "measure":
            return f"GeneralizedPoint({self.measure!r}^)"
        return "GeneralizedPoint(functional)"


def phi(P: ProbMeasure) -> GeneralizedPoint:
    """A measure as a generalized point: the functional m -> integral of m
    against P; on indicators it returns the measure of the set."""
    return GeneralizedPoint.from_measure(P)


def phi_inverse(J: GeneralizedPoint, X: FiniteMeasurableSpace) -> ProbMeasure:
    """Recover a measure from a generalized point via indicators: the set
    function U -> J(chi_U).  Raises NotAMeasure when the induced set
    function fails normalization, range, or additivity; the measure is
    returned supported on representatives of the sigma-algebra's minimal
    blocks."""
    values: dict[int, Fraction] = {}
    for u in X.sorted_sigma():
        v = J.apply(indicator(X, u))
        if v.is_inf:
            raise NotAMeasure(f"J(chi_U) infinite on U={X.set_of(u)}")
        values[u] = v.value
    if values[0] != 0:
        raise NotAMeasure("J(chi_empty) != 0: not weakly averaging")
    if values[X.full_mask] != 1:
        raise NotAMeasure("J(chi_X) != 1: not weakly averaging")
    for u, vu in values.items():
        if not 0 <= vu <= 1:
            raise NotAMeasure(f"J(chi_U)={vu} outside [0,1]")
        for v, vv in values.items():
            if u & v == 0 and values[u | v] != vu + vv:
                raise NotAMeasure(
                    f"additivity fails on {X.set_of(u)} and {X.set_of(v)}"
                )
    support = []
    for block in X.atoms_of_sigma():
        w = values[block]
        if w != 0:
            support.append((X.set_of(block)[0], w))
    return ProbMeasure(support, base=X)
