import itertools
from fractions import Fraction

import pytest

from girycheck.meas import (
    FiniteMeasurableSpace,
    InfiniteCarrier,
    MeasurableMap,
    generate_sigma_algebra,
    indicator,
    is_measurable,
    sigma_functor,
)

F = Fraction


def brute_force_closure(carrier, generators):
    """Oracle by a different route: on a finite carrier the generated
    sigma-algebra is exactly the set of unions of the generator-signature
    equivalence classes.  Enumerates all unions; carriers <= 6."""
    classes = {}
    for x in carrier:
        signature = tuple(x in g for g in generators)
        classes.setdefault(signature, []).append(x)
    blocks = list(classes.values())
    index = {x: i for i, x in enumerate(carrier)}
    masks = set()
    for chosen in itertools.product([False, True], repeat=len(blocks)):
        m = 0
        for pick, block in zip(chosen, blocks):
            if pick:
                for x in block:
                    m |= 1 << index[x]
        masks.add(m)
    return frozenset(masks)


class TestGenerateSigmaAlgebra:
    def test_single_generator_two_points(self):
        space = generate_sigma_algebra(["a", "b"], [["a"]])
        assert space.sigma == frozenset({0b00, 0b01, 0b10, 0b11})

    def test_no_generators_gives_trivial(self):
        space = generate_sigma_algebra(["a", "b", "c"], [])
        assert space.sigma == frozenset({0, 0b111})

    def test_two_generators_give_full_powerset(self):
        space = generate_sigma_algebra([1, 2, 3], [[1], [1, 2]])
        assert space.sigma == frozenset(range(8))

    def test_matches_brute_force_oracle(self):
        carrier = ["a", "b", "c"]
        for generators in ([["a"]], [["a", "b"]], [["a"], ["b"]], []):
            got = generate_sigma_algebra(carrier, generators)
            assert got.sigma == brute_force_closure(carrier, generators)

    def test_idempotent(self):
        space = generate_sigma_algebra(["a", "b", "c"], [["a"]])
        again = generate_sigma_algebra(space.carrier, list(space.sigma))
        assert again.sigma == space.sigma

    def test_monotone_in_generators(self):
        small = generate_sigma_algebra(list("abcd"), [["a"]])
        large = generate_sigma_algebra(list("abcd"), [["a"], ["b", "c"]])
        assert small.sigma <= large.sigma


class TestFiniteMeasurableSpace:
    def test_invalid_family_rejected(self):
        with pytest.raises(ValueError):
            FiniteMeasurableSpace(["a", "b"], frozenset({0b00, 0b01, 0b11}))

    def test_powerset_and_trivial(self):
        assert len(FiniteMeasurableSpace.powerset("abc").sigma) == 8
        assert len(FiniteMeasurableSpace.trivial("abc").sigma) == 2

    def test_sigma_atoms_partition_carrier(self):
        space = generate_sigma_algebra(list("abcd"), [["a", "b"]])
        atoms = space.atoms_of_sigma()
        assert sorted(space.set_of(a) for a in atoms) == [["a", "b"], ["c", "d"]]

    def test_json_form_is_sorted_labels(self):
        space = generate_sigma_algebra(["b", "a"], [["a"]])
        obj = space.to_json_obj()
        assert obj["carrier"] == ["b", "a"]
        assert [["a"], ["a", "b"], ["b"]] == [s for s in obj["sigma"] if s]


class TestSigmaFunctor:
    def test_injective_map_gives_powerset(self):
        space = sigma_functor(["p", "q"], [lambda x: F(1) if x == "p" else F(0)])
        assert space.sigma == frozenset(range(4))

    def test_constant_map_gives_trivial(self):
        space = sigma_functor(list("abc"), [lambda x: F(1, 2)])
        assert len(space.sigma) == 2

    def test_crossing_fibers_join(self):
        # two maps on 4 points whose fiber partitions cross
        carrier = [0, 1, 2, 3]
        m1 = lambda x: F(x // 2)   # fibers {0,1} {2,3}
        m2 = lambda x: F(x % 2)    # fibers {0,2} {1,3}
        space = sigma_functor(carrier, [m1, m2])
        oracle = generate_sigma_algebra(carrier, [[0, 1], [2, 3], [0, 2], [1, 3]])
        assert space.sigma == oracle.sigma

    def test_generating_maps_become_measurable(self):
        carrier = list("abcde")
        m = lambda x: F(ord(x) % 3)
        space = sigma_functor(carrier, [m])
        f = MeasurableMap(space, "ext_real", m)
        assert is_measurable(f)

    def test_minimality_against_other_admitting_algebras(self):
        carrier = list("abcd")
        m = lambda x: F(1) if x in "ab" else F(0)
        space = sigma_functor(carrier, [m])
        # any sigma-algebra making m measurable must contain this one
        finer = generate_sigma_algebra(carrier, [["a", "b"], ["a"]])
        assert space.sigma <= finer.sigma

    def test_infinite_carrier_rejected(self):
        with pytest.raises(InfiniteCarrier):
            sigma_functor(itertools.count(), [lambda x: F(0)])


class TestIsMeasurable:
    def test_identity_measurable(self):
        space = generate_sigma_algebra(list("abc"), [["a"]])
        assert is_measurable(MeasurableMap(space, space, lambda x: x))

    def test_indicator_of_measurable_set(self):
        space = generate_sigma_algebra(list("abc"), [["a"]])
        chi = indicator(space, space.mask_of(["a"]))
        assert is_measurable(chi)

    def test_indicator_of_non_measurable_set(self):
        space = FiniteMeasurableSpace.trivial(list("abc"))
        chi = indicator(space, space.mask_of(["a"]))
        assert not is_measurable(chi)

    def test_coarsening_map_to_finer_target_fails(self):
        src = FiniteMeasurableSpace.trivial(["a", "b"])
        tgt = FiniteMeasurableSpace.powerset(["a", "b"])
        assert not is_measurable(MeasurableMap(src, tgt, lambda x: x))
