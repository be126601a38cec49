"""Finite measurable spaces with explicit sigma-algebras, sigma-algebra
generation by fixpoint closure, measurable maps, and the sigma-algebra a
finite-carrier super convex space inherits from a generating family of
affine maps into the extended reals.

Subsets are encoded as membership bitmasks over the indexed carrier, so
all set algebra is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .numerics import as_ext


class InfiniteCarrier(Exception):
    pass


class FiniteMeasurableSpace:
    """A finite carrier with an explicit family of measurable subsets.

    ``carrier`` is a list of hashable labels; ``sigma`` a frozenset of
    bitmasks over carrier positions.
    """

    def __init__(self, carrier, sigma):
        self.carrier = list(carrier)
        if len(set(self.carrier)) != len(self.carrier):
            raise ValueError("carrier labels must be distinct")
        self.index = {x: i for i, x in enumerate(self.carrier)}
        self.full_mask = (1 << len(self.carrier)) - 1
        self.sigma = frozenset(sigma)
        self._validate()

    @classmethod
    def powerset(cls, carrier) -> "FiniteMeasurableSpace":
        carrier = list(carrier)
        n = len(carrier)
        return cls(carrier, frozenset(range(1 << n)))

    @classmethod
    def trivial(cls, carrier) -> "FiniteMeasurableSpace":
        carrier = list(carrier)
        full = (1 << len(carrier)) - 1
        return cls(carrier, frozenset({0, full}))

    def _validate(self):
        s = self.sigma
        if 0 not in s or self.full_mask not in s:
            raise ValueError("sigma-algebra must contain the empty set and carrier")
        for u in s:
            if u & ~self.full_mask:
                raise ValueError("set outside the carrier")
            if (self.full_mask & ~u) not in s:
                raise ValueError("sigma-algebra not closed under complement")
            for v in s:
                if (u | v) not in s:
                    raise ValueError("sigma-algebra not closed under union")

    def mask_of(self, subset) -> int:
        m = 0
        for x in subset:
            m |= 1 << self.index[x]
        return m

    def set_of(self, mask: int) -> list:
        return [x for i, x in enumerate(self.carrier) if mask >> i & 1]

    def member(self, x, mask: int) -> bool:
        return bool(mask >> self.index[x] & 1)

    def is_measurable_set(self, mask: int) -> bool:
        return mask in self.sigma

    def atoms_of_sigma(self) -> list[int]:
        """The minimal nonempty measurable sets; they partition the carrier."""
        blocks = {}
        for i in range(len(self.carrier)):
            block = self.full_mask
            for u in self.sigma:
                if u >> i & 1:
                    block &= u
            blocks[block] = None
        return sorted(blocks)

    def sorted_sigma(self) -> list[int]:
        return sorted(self.sigma)

    def to_json_obj(self) -> dict:
        return {
            "carrier": [str(x) for x in self.carrier],
            "sigma": sorted(
                sorted(str(x) for x in self.set_of(u)) for u in self.sigma
            ),
        }

    def __eq__(self, other):
        if not isinstance(other, FiniteMeasurableSpace):
            return NotImplemented
        return self.carrier == other.carrier and self.sigma == other.sigma

    def __hash__(self):
        return hash((tuple(self.carrier), self.sigma))

    def __repr__(self):
        return f"<FiniteMeasurableSpace |X|={len(self.carrier)} |sigma|={len(self.sigma)}>"


def generate_sigma_algebra(carrier, generators) -> FiniteMeasurableSpace:
    """The smallest sigma-algebra on ``carrier`` containing ``generators``
    (given as label subsets or masks), by fixpoint closure under
    complement and union."""
    carrier = list(carrier)
    index = {x: i for i, x in enumerate(carrier)}
    full = (1 << len(carrier)) - 1

    def to_mask(g):
        if isinstance(g, int):
            return g
        m = 0
        for x in g:
            m |= 1 << index[x]
        return m

    current = {0, full} | {to_mask(g) for g in generators}
    while True:
        nxt = set(current)
        for u in current:
            nxt.add(full & ~u)
        for u in current:
            for v in current:
                nxt.add(u | v)
        if nxt == current:
            break
        current = nxt
    return FiniteMeasurableSpace(carrier, frozenset(current))


def sigma_functor(carrier, generating_maps) -> FiniteMeasurableSpace:
    """The measurable space a finite-carrier space inherits from maps into
    the extended reals: the sigma-algebra generated by the maps' fiber
    partitions (equivalent, on a finite carrier, to generating by
    preimages of Borel sets)."""
    if hasattr(carrier, "carrier"):
        carrier = carrier.carrier
    if not hasattr(carrier, "__len__"):
        raise InfiniteCarrier(
            "sigma_functor is only realized concretely on finite carriers"
        )
    carrier = list(carrier)
    generators = []
    for m in generating_maps:
        fibers: dict = {}
        for x in carrier:
            v = as_ext(m(x))
            fibers.setdefault(v, []).append(x)
        generators.extend(fibers.values())
    return generate_sigma_algebra(carrier, generators)


class MeasurableMap:
    """A point map between a finite measurable space and either another
    finite measurable space or the extended real line with its Borel-plus-
    infinity structure (handled through fibers on the finite source)."""

    def __init__(self, source: FiniteMeasurableSpace, target, fn, name: str = "map"):
        self.source = source
        self.target = target  # FiniteMeasurableSpace or the string "ext_real"
        self.fn = fn
        self.name = name

    def __call__(self, x):
        return self.fn(x)

    def preimage_mask(self, predicate) -> int:
        m = 0
        for i, x in enumerate(self.source.carrier):
            if predicate(self.fn(x)):
                m |= 1 << i
        return m


def is_measurable(f: MeasurableMap) -> bool:
    """True iff every preimage of a measurable target set lies in the
    source sigma-algebra.  For an extended-real target this reduces, on a
    finite source, to measurability of every fiber."""
    if isinstance(f.target, FiniteMeasurableSpace):
        for v in f.target.sigma:
            pre = f.preimage_mask(lambda y, v=v: f.target.member(y, v))
            if not f.source.is_measurable_set(pre):
                return False
        return True
    if f.target == "ext_real":
        values = {as_ext(f.fn(x)) for x in f.source.carrier}
        for v in values:
            pre = f.preimage_mask(lambda y, v=v: as_ext(y) == v)
            if not f.source.is_measurable_set(pre):
                return False
        return True
    raise ValueError(f"unknown target {f.target!r}")


def indicator(space: FiniteMeasurableSpace, mask: int) -> MeasurableMap:
    """The characteristic function of a subset, into the extended reals."""
    return MeasurableMap(
        space, "ext_real",
        lambda x: Fraction(1) if space.member(x, mask) else Fraction(0),
        name=f"chi_{sorted(str(y) for y in space.set_of(mask))}",
    )
