import pytest

from src.core.carpet import (
    CarpetSpec,
    SigmaKind,
    TriState,
    ell,
    is_doubling,
    is_regular,
    parse_spec,
    profile,
    sigma_classify,
    total_disconnectedness,
)
from src.errors import BadShape, DuplicateDigit, EmptyDigitSet, GridViolation, MalformedCarpet


def test_profile_of_doubling_example(ex17_D):
    prof = profile(ex17_D)
    assert prof.a == (3, 2, 1, 0)
    assert prof.N == 6
    assert prof.E_rows == (0, 1, 2)
    assert prof.s == 3
    assert prof.a_star == (3, 2, 1)
    assert prof.M == (1, 1, 1)
    assert prof.has_vacant_row
    assert is_doubling(prof)


def test_profile_of_non_doubling_example(ex17_Dprime):
    prof = profile(ex17_Dprime)
    assert prof.a == (3, 1, 0, 2)
    assert prof.a_star == (3, 2, 1)
    assert not is_doubling(prof)


def test_profiles_of_equal_spectrum_pair(ex18_D, ex18_Dprime):
    prof = profile(ex18_D)
    assert (prof.N, prof.s, prof.a_star, prof.M) == (9, 2, (6, 3), (1, 1))
    assert prof.sigma_class.kind is SigmaKind.IRRATIONAL

    prof = profile(ex18_Dprime)
    assert (prof.N, prof.s, prof.a_star, prof.M) == (6, 4, (2, 1), (2, 2))
    assert prof.p_tilde == 2
    assert prof.word_multiplicity((2, 1, 1)) == 8
    assert prof.multiplicity(5) == 0


def test_digits_are_sorted():
    spec = CarpetSpec(n=3, m=2, digits=((2, 1), (0, 0), (1, 0)))
    assert spec.digits == ((0, 0), (1, 0), (2, 1))


def test_validation_errors():
    with pytest.raises(BadShape):
        CarpetSpec(n=3, m=3, digits=((0, 0),))
    with pytest.raises(BadShape):
        CarpetSpec(n=3, m=1, digits=((0, 0),))
    with pytest.raises(EmptyDigitSet):
        CarpetSpec(n=3, m=2, digits=())
    with pytest.raises(GridViolation):
        CarpetSpec(n=3, m=2, digits=((0, 2),))
    with pytest.raises(DuplicateDigit):
        CarpetSpec(n=3, m=2, digits=((0, 0), (0, 0)))
    with pytest.raises(MalformedCarpet):
        parse_spec({"n": 3, "m": 2})
    with pytest.raises(MalformedCarpet):
        parse_spec({"n": 3, "m": 2, "digits": [[0, 0, 1]]})
    with pytest.raises(MalformedCarpet):
        parse_spec({"n": "3", "m": 2, "digits": [[0, 0]]})


def test_ell_values(ex18_D):
    assert [ell(k, ex18_D) for k in range(0, 6)] == [0, 1, 3, 4, 6, 7]


def test_ell_brackets_powers():
    for n, m in ((27, 8), (6, 4), (3, 2), (64, 8), (10, 3)):
        spec = CarpetSpec(n=n, m=m, digits=((0, 0),))
        steps = set()
        for k in range(1, 1001):
            j = ell(k, spec)
            assert m ** j <= n ** k < m ** (j + 1)
            steps.add(j - ell(k - 1, spec))
        first = ell(1, spec)
        assert steps <= {first, first + 1}


def test_ell_matches_rational_sigma():
    # sigma = 2/3 and 1/2: ell(k) = floor(k q / p)
    for n, m, p, q in ((8, 4, 2, 3), (9, 3, 1, 2)):
        spec = CarpetSpec(n=n, m=m, digits=((0, 0),))
        for k in range(1, 200):
            assert ell(k, spec) == (k * q) // p


def test_sigma_classify():
    assert sigma_classify(27, 8).kind is SigmaKind.IRRATIONAL
    assert sigma_classify(6, 4).kind is SigmaKind.IRRATIONAL

    rational = sigma_classify(4, 2)
    assert (rational.p, rational.q, rational.base) == (1, 2, 2)

    rational = sigma_classify(8, 4)
    assert (rational.p, rational.q, rational.base) == (2, 3, 2)

    rational = sigma_classify(64, 8)
    assert (rational.p, rational.q, rational.base) == (1, 2, 8)
    assert rational.is_rational

    with pytest.raises(BadShape):
        sigma_classify(4, 4)


def test_doubling_and_regularity_ignore_column_order(random_profiles):
    for prof in random_profiles(50):
        mirrored = CarpetSpec(
            n=prof.n, m=prof.m,
            digits=tuple((prof.n - 1 - i, j) for j, cols in prof.rows.items() for i in cols),
        )
        assert is_doubling(profile(mirrored)) == is_doubling(prof)
        assert is_regular(profile(mirrored)) == is_regular(prof)


def test_total_disconnectedness():
    one_full_row = profile(CarpetSpec(n=3, m=2, digits=((0, 0), (1, 0), (2, 0))))
    assert total_disconnectedness(one_full_row) is TriState.NO

    square_block = profile(CarpetSpec(n=3, m=2, digits=((0, 0), (1, 0), (0, 1), (1, 1))))
    assert total_disconnectedness(square_block) is TriState.UNKNOWN


def test_total_disconnectedness_of_examples(ex17_D, ex18_D, full_grid):
    assert total_disconnectedness(profile(ex17_D)) is TriState.YES
    assert total_disconnectedness(profile(ex18_D)) is TriState.YES
    assert total_disconnectedness(profile(full_grid)) is TriState.UNKNOWN
    assert is_regular(profile(full_grid))
