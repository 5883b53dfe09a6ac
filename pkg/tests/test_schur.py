import random

import pytest
from hypothesis import given, settings, strategies as st

from hookpaths.qpoly import ONE, ZERO, q, t, z
from hookpaths.schur import (
    SchurExpansion,
    e_perp,
    omega,
    psi,
    psi_inverse_hooks,
    restrict,
    specialize2,
    ssyt_specialize_oracle,
    vertical_strips,
)
from hookpaths.shapes import partitions_of

s = SchurExpansion.term


def test_expansion_canonical_form():
    f = s((3, 1)) + s((3, 1)) - s((3, 1)).scale(2)
    assert f.is_zero()
    g = SchurExpansion({(2,): ZERO, (1, 1): ONE})
    assert g.support() == [(1, 1)]


def test_e_perp_figure_example():
    image = e_perp(2, s((4, 3, 1, 1)))
    assert image == s((3, 2, 1, 1)) + s((3, 3, 1)) + s((4, 2, 1)) + s((4, 3))


def test_e_perp_on_columns_and_hooks():
    for n in range(1, 9):
        for k in range(n + 1):
            image = e_perp(k, s((1,) * n))
            assert image == s((1,) * (n - k))
    # a hook splits into at most two hooks: keep or shorten the arm
    for a in range(2, 6):
        for leg in range(0, 5):
            lam = (a,) + (1,) * leg
            for i in range(0, leg + 3):
                expected = SchurExpansion.zero()
                if leg - i >= 0:
                    expected = expected + s((a,) + (1,) * (leg - i))
                if i >= 1 and leg - i + 1 >= 0:
                    expected = expected + s((a - 1,) + (1,) * (leg - i + 1))
                assert e_perp(i, s(lam)) == expected, (lam, i)


def test_e_perp_degree_drop():
    f = s((4, 2, 1)) + s((3, 3, 1))
    for k in range(0, 4):
        for lam in e_perp(k, f).support():
            assert sum(lam) == 7 - k


def test_vertical_strips_only_one_box_per_row():
    assert set(vertical_strips((2, 2), 2)) == {(1, 1)}
    assert set(vertical_strips((2, 2), 1)) == {(2, 1)}
    assert vertical_strips((1, 1), 2) == [()]
    assert vertical_strips((2, 2), 3) == []


def test_omega():
    assert omega(s((3, 1))) == s((2, 1, 1))
    f = s((6,)) + s((4, 1))
    assert omega(f) == s((1,) * 6) + s((2, 1, 1, 1))
    for n in range(0, 8):
        for lam in partitions_of(n):
            assert omega(omega(s(lam))) == s(lam)


def test_restrict_worked_example():
    f = (
        s((1, 1, 1)).scale(5)
        + s((3, 1)).scale(5)
        + s((4, 1))
        + s((6,)).scale(2 * q**6)
    )
    kept = restrict(f, [(1, 1, 1), (3, 2), (6,)])
    assert kept == s((1, 1, 1)).scale(5) + s((6,)).scale(2 * q**6)


def test_restrict_named_classes():
    f = s(()) + s((4,)) + s((4, 1)) + s((4, 2)) + s((4, 2, 1)) + s((3, 2, 2))
    assert restrict(f, "hooks") == s(()) + s((4,)) + s((4, 1))
    assert restrict(f, "one_part") == s(()) + s((4,))
    assert restrict(f, "V1") == s((4, 1))
    assert restrict(f, "V2") == s((4, 2)) + s((4, 2, 1))
    assert restrict(f, "two_columns") == restrict(f, "V2")
    # hooks split as one-part plus the legged hooks
    hooky = s(()) + s((5,)) + s((2, 1, 1)) + s((1, 1))
    assert restrict(hooky, "hooks") == restrict(hooky, "one_part") + restrict(hooky, "V1")
    with pytest.raises(ValueError):
        restrict(f, "V0")
    with pytest.raises(ValueError):
        restrict(f, "nonsense")


def test_psi():
    assert psi(s((4, 1))) == q**4 * t
    assert psi(s((7,))) == q**7
    assert psi(s(())) == ONE


def test_psi_inverse_round_trip():
    rng = random.Random(3)
    for _ in range(40):
        terms = {}
        for _ in range(rng.randint(1, 8)):
            a = rng.randint(1, 9)
            k = rng.randint(0, 9)
            terms[(a,) + (1,) * k] = rng.randint(-5, 5) or 1
        f = SchurExpansion(terms)
        assert psi_inverse_hooks(psi(f)) == f
    with pytest.raises(ValueError):
        psi_inverse_hooks(t**2)  # a = 0 monomial
    with pytest.raises(ValueError):
        psi_inverse_hooks(q * z)


def test_psi_injective_on_hooks():
    seen = {}
    for a in range(1, 7):
        for k in range(0, 7):
            key = psi(s((a,) + (1,) * k))
            fingerprint = tuple(key.items())
            assert fingerprint not in seen
            seen[fingerprint] = (a, k)


def test_specialize2_examples():
    assert specialize2(s((1, 1, 1))) == ZERO
    assert specialize2(s((2, 1))) == q**2 * t + q * t**2
    assert specialize2(s((2,))) == q**2 + q * t + t**2
    assert specialize2(s(())) == ONE


def test_ssyt_oracle_examples():
    expected = (
        q**2 * t + q**2 * z + q * t**2 + q * z**2 + t**2 * z + t * z**2
        + 2 * q * t * z
    )
    assert ssyt_specialize_oracle((2, 1), 3) == expected
    assert ssyt_specialize_oracle((1,), 2) == q + t
    assert ssyt_specialize_oracle((1, 1, 1), 2) == ZERO
    with pytest.raises(ValueError):
        ssyt_specialize_oracle((11,), 2)
    with pytest.raises(ValueError):
        ssyt_specialize_oracle((2,), 4)


def test_specialize2_matches_oracle_exhaustively():
    for n in range(0, 9):
        for lam in partitions_of(n):
            assert specialize2(s(lam)) == ssyt_specialize_oracle(lam, 2), lam


def test_expansion_rendering():
    f = s((6,)) + s((4, 1)) + s((3, 1)) + s((1, 1, 1))
    assert str(f) == "s[6] + s[4,1] + s[3,1] + s[1,1,1]"
    assert str(s(())) == "1"
    assert str(s((3, 1)).scale(q**2 + q * t)) == "(q*t + q^2) s[3,1]"
    assert str(SchurExpansion.zero()) == "0"


@given(
    st.dictionaries(
        st.lists(st.integers(min_value=1, max_value=6), max_size=4)
        .map(lambda xs: tuple(sorted(xs, reverse=True))),
        st.integers(min_value=-9, max_value=9),
        max_size=5,
    )
)
@settings(max_examples=60)
def test_expansion_json_round_trip(terms):
    f = SchurExpansion({lam: c for lam, c in terms.items()})
    assert SchurExpansion.from_json_obj(f.to_json_obj()) == f


def test_omega_does_not_commute_with_e_perp():
    # removing a 2-box vertical strip kills a row but not a column
    assert omega(e_perp(2, s((2,)))) != e_perp(2, omega(s((2,))))
    assert e_perp(2, omega(s((2,)))) == s(())


def test_descent_stats_helper():
    from hookpaths.shapes import StdTableau, descent_stats

    des_set, des, maj = descent_stats(StdTableau.parse("1,2,4,8/3,7/5,10/6/9"))
    assert des_set == frozenset({2, 4, 5, 8})
    assert (des, maj) == (4, 19)


def _horizontal_strips(lam, k):
    """Partitions mu <= lam with lam/mu a horizontal strip of k boxes:
    interleaving lam_i >= mu_i >= lam_{i+1}."""
    lam = tuple(lam)
    out = []

    def rec(i, removed, prev, acc):
        if removed > k:
            return
        if i == len(lam):
            if removed == k:
                out.append(tuple(p for p in acc if p))
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        for part in range(lam[i], lo - 1, -1):
            if part > prev:
                continue
            acc.append(part)
            rec(i + 1, removed + (lam[i] - part), part, acc)
            acc.pop()

    rec(0, 0, lam[0] if lam else 0, [])
    return out


def test_e_perp_by_conjugation_duality():
    # vertical strips of lam correspond to horizontal strips of its
    # conjugate: a second, independent route to the same operator
    from hookpaths.shapes import conjugate, partitions_of

    for n in range(0, 9):
        for lam in partitions_of(n):
            for k in range(0, n + 1):
                via_conjugate = sorted(
                    conjugate(mu) for mu in _horizontal_strips(conjugate(lam), k)
                )
                assert sorted(vertical_strips(lam, k)) == via_conjugate, (lam, k)
