from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from srgborsuk import graph as gc
from srgborsuk.errors import InfeasibleParameters
from srgborsuk.params import (
    QuadraticNumber,
    SrgParams,
    check_feasible,
    complement_params,
    slice_counts,
    spectrum,
)

PRIMES_1_MOD_4 = [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101]


def triangular_params(m):
    return SrgParams(m * (m - 1) // 2, 2 * (m - 2), m - 2, 4)


def lattice_params(m):
    return SrgParams(m * m, 2 * (m - 1), m - 2, 2)


def paley_params(p):
    return SrgParams(p, (p - 1) // 2, (p - 5) // 4, (p - 1) // 4)


family_params = st.one_of(
    st.integers(5, 60).map(triangular_params),
    st.integers(3, 40).map(lattice_params),
    st.sampled_from(PRIMES_1_MOD_4).map(paley_params),
    st.sampled_from([SrgParams(10, 3, 0, 1), SrgParams(416, 100, 36, 20), SrgParams(31671, 3510, 693, 351),
                     SrgParams(693, 180, 51, 45), SrgParams(3510, 693, 180, 126), SrgParams(100, 36, 14, 12),
                     SrgParams(36, 14, 4, 6), SrgParams(56, 10, 0, 2)]),
)


def test_feasible_examples():
    assert check_feasible(SrgParams(416, 100, 36, 20)).ok
    assert check_feasible(SrgParams(10, 3, 0, 1)).ok


def test_identity_violation_reported():
    report = check_feasible(SrgParams(10, 3, 1, 1))
    assert not report.ok
    assert any(v.startswith("parameter-identity") for v in report.violations)
    assert "6 != k*(k-lambda-1) = 3" in report.violations[0]


def test_all_violations_reported():
    report = check_feasible(SrgParams(10, 9, 1, 0))
    kinds = {v.split(":")[0] for v in report.violations}
    assert {"domain", "degree", "parameter-identity"} <= kinds


def test_multiplicity_violation():
    # (v-k-1)mu = k(k-lam-1) holds but f is not integral
    report = check_feasible(SrgParams(5, 3, 1, 3))
    assert not report.ok and report.violations[0].startswith("multiplicity")


def test_spectrum_g24():
    spec = spectrum(SrgParams(416, 100, 36, 20))
    assert spec.discriminant == 576 and spec.integral
    assert (spec.r, spec.s, spec.f, spec.g) == (20, -4, 65, 350)


def test_spectrum_fi23():
    assert spectrum(SrgParams(31671, 3510, 693, 351)).f == 782


def test_spectrum_petersen_against_eigendecomposition():
    evals = np.linalg.eigvalsh(gc.petersen().to_numpy(float))
    spec = spectrum(SrgParams(10, 3, 0, 1))
    assert (spec.r, spec.s, spec.f, spec.g) == (1, -2, 5, 4)
    assert np.sum(np.isclose(evals, 1)) == 5 and np.sum(np.isclose(evals, -2)) == 4


def test_spectrum_rejects_infeasible():
    with pytest.raises(InfeasibleParameters):
        spectrum(SrgParams(10, 3, 1, 1))


def test_conference_spectrum_is_symbolic():
    spec = spectrum(SrgParams(13, 6, 2, 3))
    assert not spec.integral and spec.f == spec.g == 6
    assert spec.r == QuadraticNumber(-1, 1, 13)
    assert spec.r > 0 > spec.s
    assert float(spec.r) == pytest.approx((-1 + 13**0.5) / 2)
    assert str(spec.s) == "(-1 - sqrt(13))/2"


def test_spectrum_matches_corpus_eigendecomposition(corpus):
    for name, g in corpus.items():
        prm = gc.verify_srg(g).params
        spec = spectrum(prm)
        evals = np.linalg.eigvalsh(g.to_numpy(float))
        r, s = float(spec.r), float(spec.s)
        assert np.max(np.min(np.abs(evals[:, None] - np.array([prm.k, r, s])), axis=1)) < 1e-9, name
        assert np.sum(np.abs(evals - r) < 1e-6) == spec.f, name
        assert np.sum(np.abs(evals - s) < 1e-6) == spec.g, name


def test_complement_params():
    assert complement_params(SrgParams(693, 180, 51, 45)) == SrgParams(693, 512, 376, 384)
    assert complement_params(SrgParams(10, 3, 0, 1)) == SrgParams(10, 6, 3, 4)
    p = SrgParams(416, 100, 36, 20)
    assert complement_params(complement_params(p)) == p


def test_complement_params_matches_graph():
    comp = gc.complement(gc.petersen())
    assert gc.verify_srg(comp).params == complement_params(SrgParams(10, 3, 0, 1))


def test_complement_of_complete_multipartite_rejected():
    # K_{2,2,2}: its complement 3K_2 has mu = 0
    with pytest.raises(InfeasibleParameters):
        complement_params(triangular_params(4))


def test_slice_counts_fi23():
    counts = slice_counts(SrgParams(31671, 3510, 693, 351), 180)
    assert (counts.n1, counts.n2, counts.n3) == (28160, 25344, 23040)


def test_slice_counts_g24_vertex():
    assert slice_counts(SrgParams(416, 100, 36, 20), 36).n1 == 315


def test_slice_counts_boundary():
    p = SrgParams(10, 3, 0, 1)
    boundary = 3 * p.lam - 3 * p.k + p.v
    assert slice_counts(p, boundary).n3 == 0
    with pytest.raises(InfeasibleParameters):
        slice_counts(p, 3)


@given(family_params)
def test_multiplicities_and_trace(prm):
    assert check_feasible(prm).ok
    spec = spectrum(prm)
    assert spec.f + spec.g == prm.v - 1
    assert spec.f > 0 and spec.g > 0
    if spec.integral:
        r, s = spec.r.as_fraction(), spec.s.as_fraction()
        assert spec.f * r + spec.g * s + prm.k == 0
        assert r >= 0 > s
    else:
        assert 2 * prm.k + (prm.v - 1) * (prm.lam - prm.mu) == 0
        assert spec.r > 0 > spec.s


@given(family_params.filter(lambda p: p.v - 2 * p.k + p.lam > 0))
def test_complement_is_involution_with_swapped_spectrum(prm):
    comp = complement_params(prm)
    assert check_feasible(comp).ok
    assert complement_params(comp) == prm
    a, b = spectrum(prm), spectrum(comp)
    assert b.r == -1 - a.s and b.s == -1 - a.r
    assert b.f == a.g and b.g == a.f


@given(st.integers(1, 60), st.integers(0, 60), st.integers(0, 60), st.integers(0, 60))
def test_feasible_report_consistent_with_spectrum(v, k, lam, mu):
    prm = SrgParams(v, k, lam, mu)
    if check_feasible(prm).ok:
        spec = spectrum(prm)
        assert spec.f + spec.g == v - 1
        assert (v - k - 1) * mu == k * (k - lam - 1)
    else:
        with pytest.raises(InfeasibleParameters):
            spectrum(prm)


@given(st.integers(-50, 50), st.integers(-5, 5), st.integers(0, 60))
def test_quadratic_sign_matches_float(a, b, d):
    x = QuadraticNumber(a, b, d)
    val = (a + b * d**0.5) / 2
    if abs(val) > 1e-9:
        assert x.sign() == (1 if val > 0 else -1)


def test_quadratic_rational_folding():
    x = QuadraticNumber(2, 1, 16)
    assert x.is_rational and x.as_fraction() == 3
    assert QuadraticNumber(1, 0, 0) == Fraction(1, 2)
