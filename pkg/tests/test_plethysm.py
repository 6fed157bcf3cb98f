import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.partitions import SizeMismatchError, enumerate_partitions
from artifact.plethysm import (
    foulkes_violations,
    gl_dimension,
    hn_expansion_json,
    pleth_coefficient,
    pleth_hn_expansion,
    schur_pleth,
    sym_power_dimension,
)
from artifact.symfunc import (
    plethysm_compose,
    schur_in_monomials,
    to_schur_basis,
)


@pytest.mark.parametrize(
    "target,inner,outer,want",
    [
        ((2, 2), (1, 1), (2,), 1),
        ((3, 1), (1, 1), (2,), 0),
        ((4,), (2,), (2,), 1),
        ((3, 1), (2,), (2,), 0),
        ((2, 2), (2,), (2,), 1),
        ((2, 1, 1), (2,), (2,), 0),
        ((1, 1, 1, 1), (2,), (2,), 0),
        ((1, 1, 1, 1), (1, 1), (2,), 1),
        ((2, 1, 1), (1, 1), (2,), 0),
    ],
)
def test_coefficient_knowns(target, inner, outer, want):
    assert pleth_coefficient(target, inner, outer) == want


def test_identity_outer():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            assert pleth_coefficient(mu, mu, (1,)) == 1


def test_coefficient_guards():
    with pytest.raises(SizeMismatchError):
        pleth_coefficient((3,), (2,), (2,))
    with pytest.raises(ValueError):
        pleth_coefficient((20,), (4,), (5,))  # over the 16-cell default cap
    # raising the cap makes the same query legal
    assert pleth_coefficient((20,), (4,), (5,), cap=20) == 1


def test_long_target_is_zero():
    # constituents of s_{(2)}[s_{(2)}] live in at most 2 rows
    assert pleth_coefficient((1, 1, 1, 1), (2,), (2,)) == 0


def test_matches_tableau_composition():
    for total_inner in range(1, 4):
        for total_outer in range(1, 4):
            if total_inner * total_outer > 8:
                continue
            for inner in enumerate_partitions(total_inner):
                for outer in enumerate_partitions(total_outer):
                    nvars = max(1, total_outer * len(inner))
                    fast = to_schur_basis(
                        schur_pleth(outer, schur_in_monomials(inner, nvars))
                    )
                    brute = to_schur_basis(plethysm_compose(inner=inner, outer=outer, nvars=nvars))
                    assert fast.coeffs == brute.coeffs, (inner, outer)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_coefficient_agrees_with_expansion(data):
    inner = data.draw(
        st.sampled_from([p for k in (1, 2, 3) for p in enumerate_partitions(k)])
    )
    outer = data.draw(
        st.sampled_from([p for k in (1, 2) for p in enumerate_partitions(k)])
    )
    nvars = max(1, sum(outer) * len(inner))
    full = to_schur_basis(
        schur_pleth(outer, schur_in_monomials(inner, nvars))
    ).coeffs
    target = data.draw(
        st.sampled_from(list(enumerate_partitions(sum(inner) * sum(outer))))
    )
    assert pleth_coefficient(target, inner, outer) == full.get(target, 0)


# -- the h_d[h_n] family --


def test_hn_first_row_only():
    for n in range(1, 9):
        assert pleth_hn_expansion(1, n).coeffs == {(n,): 1}


def test_hn_two_two():
    assert pleth_hn_expansion(2, 2).coeffs == {(4,): 1, (2, 2): 1}


def test_hn_guards():
    with pytest.raises(ValueError):
        pleth_hn_expansion(0, 4)
    with pytest.raises(ValueError):
        pleth_hn_expansion(4, 0)
    with pytest.raises(ValueError):
        pleth_hn_expansion(5, 4)  # 20 cells > default cap
    assert pleth_hn_expansion(2, 2, cap=4).coeffs[(4,)] == 1


def test_hn_support_and_sign():
    for d in range(1, 13):
        for n in range(1, 13):
            if d * n > 12:
                continue
            for lam, c in pleth_hn_expansion(d, n).coeffs.items():
                assert c > 0
                assert len(lam) <= d


def test_hn_dimension_identity():
    for d in range(1, 13):
        for n in range(1, 13):
            if d * n > 12:
                continue
            vec = pleth_hn_expansion(d, n)
            total = sum(c * gl_dimension(lam, d) for lam, c in vec.coeffs.items())
            assert total == sym_power_dimension(d, n)


def test_hn_two_row_coefficients():
    from artifact.kronecker import kron_tworow

    for d in range(1, 11):
        for n in range(1, 11):
            if d * n > 10:
                continue
            vec = pleth_hn_expansion(d, n).coeffs
            for k in range(n * d // 2 + 1):
                lam = (n * d - k, k) if k else (n * d,)
                got = vec.get(lam, 0) if len(lam) <= d else 0
                assert got == kron_tworow(n, d, k)


def test_hn_matches_general_coefficient():
    for d in range(1, 11):
        for n in range(1, 11):
            if d * n > 10:
                continue
            vec = pleth_hn_expansion(d, n).coeffs
            for lam in enumerate_partitions(d * n):
                assert pleth_coefficient(lam, (n,), (d,)) == vec.get(lam, 0)


@pytest.mark.parametrize("d,n", [(3, 2), (4, 2), (5, 2), (4, 3)])
def test_foulkes_instances(d, n):
    assert foulkes_violations(d, n) == []


def test_foulkes_argument_order():
    with pytest.raises(ValueError):
        foulkes_violations(2, 3)


# -- helpers --


def test_gl_dimension_values():
    assert gl_dimension((1,), 5) == 5
    assert gl_dimension((2,), 2) == 3
    assert gl_dimension((1, 1), 2) == 1
    assert gl_dimension((2, 1), 3) == 8  # the adjoint representation of SL_3
    assert gl_dimension((3, 1, 1), 2) == 0


def test_gl_dimension_counts_fillings():
    for n in range(6):
        for lam in enumerate_partitions(n):
            for nvars in range(1, 5):
                direct = schur_in_monomials(lam, nvars).evaluate((1,) * nvars)
                assert gl_dimension(lam, nvars) == direct


def test_sym_power_dimension_small():
    assert sym_power_dimension(2, 2) == 6
    assert sym_power_dimension(3, 2) == 56  # Sym^3 of the 6-dim Sym^2(C^3)
    assert sym_power_dimension(1, 7) == 1  # everything is 1-dim in one variable
    assert sym_power_dimension(7, 1) == 1716  # multisets of 7 from 7 letters


def test_json_export():
    doc = hn_expansion_json(2, 2)
    assert doc == {
        "d": "2",
        "n": "2",
        "coeffs": [
            {"lambda": ["4"], "a": "1"},
            {"lambda": ["2", "2"], "a": "1"},
        ],
    }
    # keys follow the canonical partition enumeration, values are strings
    doc = hn_expansion_json(3, 2)
    lams = [tuple(int(x) for x in row["lambda"]) for row in doc["coeffs"]]
    assert lams == sorted(lams, key=lambda l: list(enumerate_partitions(6)).index(l))
    assert all(row["a"].isdigit() for row in doc["coeffs"])
