"""Smoke tests for the python module: the worked examples end to end."""

import strictclose as sc


def test_membership_and_normalization():
    r = sc.MonomialAlgebra(2, [[5, 0], [1, 4], [0, 5]])
    assert sc.contains(r, [6, 4])
    assert not sc.contains(r, [4, 1])
    assert sc.saturation_contains(r, [4, 1])
    gens, complete = sc.normalization_generators(r, [20, 20])
    assert complete
    assert gens == [[0, 5], [1, 4], [2, 3], [3, 2], [4, 1], [5, 0]]


def test_strict_closure_example():
    r = sc.MonomialAlgebra(2, [[5, 0], [1, 4], [0, 5]])
    gens, complete = sc.normalization_generators(r, [24, 24])
    t = sc.MonomialAlgebra(2, gens)
    closure, new_degrees, ok = sc.strict_closure(r, t, [24, 24])
    assert ok and complete
    assert closure.generators == [[0, 5], [1, 4], [4, 11], [5, 0], [8, 7], [9, 6]]
    assert [9, 6] in new_degrees and [4, 1] not in new_degrees
    assert sc.is_strictly_closed(r, [24, 24]) == "fails"


def test_weak_arf_witness():
    r2 = sc.MonomialAlgebra(2, [[2, 0], [2, 1], [0, 2], [3, 0], [0, 3]])
    assert sc.monomial_weak_arf(r2, [6, 6]) == ([2, 0], [3, 0], [2, 1])
    r1 = sc.MonomialAlgebra(2, [[2, 0], [1, 1], [0, 2], [3, 0], [0, 3]])
    assert sc.monomial_weak_arf(r1, [6, 6]) is None
    assert sc.is_strictly_closed(r1, [12, 12]) == "holds"


def test_numerical_weak_arf():
    ok, witness, _ = sc.numerical_weak_arf(sc.MonomialAlgebra(1, [[2], [5]]))
    assert ok and witness is None
    ok, witness, _ = sc.numerical_weak_arf(sc.MonomialAlgebra(1, [[3], [5]]))
    assert not ok and witness == [3, 5, 5]


def test_constructors_and_io():
    built = sc.build_cor23b(sc.MonomialAlgebra(2, []), [[1, 0], [0, 1]])
    assert built.generators == [[0, 2], [0, 3], [1, 1], [2, 0], [3, 0]]
    rees = sc.rees_algebra(2, [[3, 0], [1, 4], [0, 5]])
    assert [3, 0, 1] in rees.generators and [1, 0, 0] in rees.generators
    text = sc.print_algebra(built)
    assert sc.parse_algebra(text) == built


def test_stanley_reisner():
    path = sc.SimplicialComplex(3, [{1, 2}, {2, 3}])
    assert sc.sr_is_strictly_closed(path)
    assert sc.sr_component(path, {2}) == (1, 1)
    assert sc.sr_component(path, {1, 3}) == (0, 0)
    assert sc.minimal_primes(path) == [{3}, {1}]


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
