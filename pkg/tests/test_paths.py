import math

import pytest

from hookpaths.paths import (
    LatticePath,
    binom2,
    clamp_start,
    enumerate_T,
    filter_paths,
    gf_T,
    gf_closed,
    hat_gf,
)
from hookpaths.qpoly import LaurentPoly, ONE, ZERO, q, q_pochhammer, q_power, z


def test_enumerate_conventions():
    words = {p.word for p in enumerate_T(4, 0)}
    assert words == {"NN", "NE", "EN", "EE"}
    for n in range(2, 8):
        eps = enumerate_T(n, n - 2)
        assert len(eps) == 1 and eps[0].word == ""
        # start heights past the staircase clamp down to the empty word
        assert enumerate_T(n, n + 3) == eps
    assert enumerate_T(1, 0) == []
    assert enumerate_T(0, 5) == []
    assert len(enumerate_T(7, 2)) == 8


def test_empty_word_statistics():
    for n in range(2, 9):
        eps = enumerate_T(n, n - 2)[0]
        assert eps.area() == binom2(n - 1)
        assert eps.ht() == n - 2
        assert str(eps) == "eps"


def test_figure_statistics():
    gamma = LatticePath(7, 2, "NEN")
    assert gamma.area() == 13
    assert gamma.ht() == 4
    stats = {p.word: (p.area(), p.ht()) for p in enumerate_T(4, 0)}
    assert stats == {"NN": (3, 2), "NE": (2, 1), "EN": (1, 1), "EE": (0, 0)}


def test_path_validation():
    with pytest.raises(ValueError):
        LatticePath(4, 0, "N")  # wrong length
    with pytest.raises(ValueError):
        LatticePath(4, 0, "NX")
    with pytest.raises(ValueError):
        LatticePath(4, 5, "")
    assert LatticePath.parse(4, 9, "eps").s == 2
    assert clamp_start(6, 9) == 4


def test_paths_from_different_grids_never_compare_equal():
    a = LatticePath(5, 0, "NEN")
    b = LatticePath(6, 1, "NEN")
    assert a != b
    assert a.same_grid(LatticePath(5, 0, "EEE")) and not a.same_grid(b)


def test_gf_examples():
    assert gf_T(4, 0) == ONE + q * z + q**2 * z + q**3 * z**2
    for n in range(2, 9):
        assert gf_T(n, n - 2) == q_power(binom2(n - 1)) * LaurentPoly.term(1, ez=n - 2)
    assert gf_T(5, 0) == q_pochhammer(z, 3, rising=True)


def test_gf_pochhammer_identity():
    for n in range(2, 15):
        assert gf_T(n, 0) == q_pochhammer(z, n - 2, rising=True)


def test_gf_closed_form_and_shift():
    for n in range(2, 15):
        for s in range(0, n - 1):
            via_paths = gf_T(n, s)
            assert via_paths == gf_closed(n, s)
            shift = q_power((n - 2 - s) * s + binom2(s + 1)) * LaurentPoly.term(1, ez=s)
            assert via_paths == gf_T(n - s, 0) * shift


def test_shift_bijection_pathwise():
    for n in range(3, 13):
        for s in range(0, n - 1):
            tall = enumerate_T(n, s)
            base = enumerate_T(n - s, 0)
            assert len(tall) == len(base)
            jump = (n - 2 - s) * s + binom2(s + 1)
            by_word = {p.word: p for p in base}
            for p in tall:
                mate = by_word[p.word]
                assert p.ht() == mate.ht() + s
                assert p.area() == mate.area() + jump


def test_height_slice_is_gaussian():
    from hookpaths.qpoly import gauss_binomial

    for n in range(2, 13):
        gf = gf_T(n, 0)
        for j in range(0, n - 1):
            expected = q_power(binom2(j + 1)) * gauss_binomial(n - 2, j)
            assert gf.coefficient_of("z", j) == expected


def test_hat_gf():
    assert hat_gf(2, 0) == ONE
    for m in range(3, 10):
        assert hat_gf(m, 0) == ZERO
    # z-degree concentrates at z^j
    for m in range(2, 9):
        for j in range(0, m):
            p = hat_gf(m, j)
            assert all(expo[2] == j for expo, _ in p.items())


def test_hat_gf_alternating_column_identity():
    # the height-j skewed sum written through Gaussian binomials
    from hookpaths.qpoly import gauss_binomial

    for m in range(2, 10):
        n = m - 1
        for j in range(0, n):
            expected = ZERO
            for k in range(0, n - j):
                sign = -1 if k % 2 else 1
                expected = expected + sign * q_power(
                    binom2(j + k + 1) - k
                ) * gauss_binomial(n - 1, j + k) * LaurentPoly.term(1, ez=j)
            assert hat_gf(m, j) == expected


def test_filters():
    for n in range(3, 11):
        for k in range(0, n - 1):
            subset = filter_paths(n, 0, "at_least_k_easts", k=k)
            expected = sum(math.comb(n - 2, e) for e in range(k, n - 1))
            assert len(subset) == expected
    east = filter_paths(7, 0, "starts_with_east")
    assert all(p.word.startswith("E") for p in east)
    assert any(p.word == "ENNEN" for p in filter_paths(7, 0, "height_eq", h=3))
    block = filter_paths(7, 0, "starts_north_ends_exact_norths", j=1)
    assert any(p.word == "NNEEN" for p in block)
    assert all(
        p.word.startswith("N") and p.trailing_run("N") == 1 for p in block
    )
    assert filter_paths(6, 0, "prefix", pattern="EE") == [
        p for p in enumerate_T(6, 0) if p.word.startswith("EE")
    ]
    with pytest.raises(ValueError):
        filter_paths(5, 0, "no_such_filter")


def test_path_text_round_trip():
    for p in enumerate_T(6, 1):
        assert LatticePath.parse(6, 1, str(p)) == p


def test_east_start_height_slice_membership():
    east_start = filter_paths(7, 0, "starts_with_east")
    assert any(p.word == "ENNEN" and p.ht() == 3 for p in east_start)


def _area_by_box_counting(path):
    """Independent per-column oracle: count staircase boxes whose column
    height under the path exceeds their row."""
    n, s = path.n, path.s
    stats_p = []
    norths = 0
    for step in path.word:
        if step == "E":
            stats_p.append(norths)
        else:
            norths += 1
    easts = len(stats_p)
    total = 0
    for x in range(0, n - 2):
        column_height = s + stats_p[x] if x < easts else path.ht()
        for y in range(0, n - 2 - x):
            if y < column_height:
                total += 1
    return total


def test_area_agrees_with_box_counting_oracle():
    for n in range(2, 11):
        for s in range(0, n - 1):
            for p in enumerate_T(n, s):
                assert p.area() == _area_by_box_counting(p), p
