from __future__ import annotations

import pytest

from oracles import naive_difference_tally
from rshds import certify
from rshds.algebra import from_set, regular_matrix
from rshds.certify import (
    PreconditionError,
    check_difference_set,
    check_hadamard,
    check_rshds,
    check_schur_ring,
    coset_profile,
    hadamard_matrix,
    m_bound,
    p_matrix,
    parameter_formulas,
    quotient_check,
    spectrum,
    structural_tests,
)
from rshds.constructions import (
    assignment_difference_set,
    c4n_difference_set,
    find_hyperplane_assignment,
    gnk_difference_set,
)
from rshds.groups import (
    C4PowerGroup,
    GroupError,
    closure,
    cosets,
    involutions,
    normal_subgroups_of_prime_index,
    quotient,
)


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------


def test_parameter_formulas():
    expected = {4: (16, 6, 2), 6: (36, 15, 6), 8: (64, 28, 12), 16: (256, 120, 56)}
    for h, (v, k, lam) in expected.items():
        p = parameter_formulas(h)
        assert (p.v, p.k, p.lam) == (v, k, lam)
    for bad in (5, 3, 0, -2, 1):
        with pytest.raises(GroupError):
            parameter_formulas(bad)


def test_m_bound():
    assert m_bound(4) == 0
    assert m_bound(6) == 1
    assert m_bound(8) == 1
    assert m_bound(18) == 4
    with pytest.raises(GroupError):
        m_bound(7)


# ---------------------------------------------------------------------------
# difference-set equation
# ---------------------------------------------------------------------------


def test_check_difference_set_matches_naive_oracle(cand20, cand31):
    for cand in (cand20, cand31):
        report = check_difference_set(cand.group, cand.elements)
        assert report.passed
        tally = naive_difference_tally(cand.group, cand.elements)
        lam = report.witnesses["lambda"]
        for g in range(1, cand.group.order):
            assert tally.get(g, 0) == lam


def test_check_difference_set_singleton(gnk20):
    report = check_difference_set(gnk20, [5])
    assert report.passed
    assert report.witnesses["k"] == 1
    assert report.witnesses["lambda"] == 0


def test_check_difference_set_two_elements_fails(gnk20):
    report = check_difference_set(gnk20, [4, 5])
    assert not report.passed
    assert report.witnesses["lambda_numerator"] == 2
    assert report.witnesses["lambda_denominator"] == 15


# ---------------------------------------------------------------------------
# partition structure
# ---------------------------------------------------------------------------


def test_check_rshds_passes_for_family(cand31):
    report = check_rshds(cand31.group, cand31.subgroup, cand31.elements)
    assert report.passed
    assert report.params.m == 0
    assert report.witnesses["difference_equation"] is True


def test_check_rshds_fails_for_self_inverse_set():
    cand = c4n_difference_set(2)
    report = check_rshds(cand.group, cand.subgroup, cand.elements)
    assert not report.passed
    assert "intersection_not_coset_union_at" in report.witnesses
    assert check_difference_set(cand.group, cand.elements).passed


def test_check_rshds_rejects_m1_at_h4(gnk20):
    sub = gnk20.distinguished_subgroup()
    dec = cosets(gnk20, sub)
    coset1 = dec.coset_members(1)
    coset3 = dec.coset_members(3)
    x = coset3[0]
    xi = gnk20.inv(x)
    rest = [y for y in coset3 if y not in (x, xi)]
    d = sorted(coset1 + [x, rest[0]])
    report = check_rshds(gnk20, sub, d)
    assert not report.passed
    assert report.witnesses["m"] == 1
    assert report.witnesses["m_bound"] == 0


def test_check_rshds_wrong_group_order(gnk20):
    sub = closure(gnk20, [1])  # order 2 inside order 16
    report = check_rshds(gnk20, sub, [4, 5])
    assert not report.passed
    assert report.witnesses["required_order"] == 4


def test_coset_profile(cand20, cand30):
    rep = coset_profile(cand20.group, cand20.subgroup, cand20.elements)
    assert rep.passed and rep.witnesses["profile"] == [0, 2, 2, 2]
    rep30 = coset_profile(cand30.group, cand30.subgroup, cand30.elements)
    assert rep30.passed and rep30.witnesses["profile"] == [0] + [4] * 7
    tampered = sorted(set(cand20.elements) - {max(cand20.elements)})
    rep_bad = coset_profile(cand20.group, cand20.subgroup, tampered)
    assert not rep_bad.passed
    assert "bad_coset" in rep_bad.witnesses


# ---------------------------------------------------------------------------
# Schur ring
# ---------------------------------------------------------------------------


def test_schur_ring_structure(cand20):
    report, structure = check_schur_ring(cand20.group, cand20.subgroup, cand20.elements)
    assert report.passed
    # D * D^-1 = k*1 + lam*(H-1) + lam*D + lam*D^-1
    assert structure.coordinates[2][3] == (6, 2, 2, 2)
    # D^2 = 2(D + D^-1) + 4(H-1)
    assert structure.coordinates[2][2] == (0, 4, 2, 2)
    # (H-1)^2 = (h-1)*1 + (h-2)*(H-1)
    assert structure.coordinates[1][1] == (3, 2, 0, 0)
    for i in range(4):
        for j in range(4):
            assert structure.coordinates[i][j] == structure.coordinates[j][i]
            assert all(c >= 0 for c in structure.coordinates[i][j])


def test_schur_ring_gnk31(cand31):
    report, structure = check_schur_ring(cand31.group, cand31.subgroup, cand31.elements)
    assert report.passed
    assert structure.coordinates[2][3] == (28, 12, 12, 12)


def test_schur_ring_precondition():
    cand = c4n_difference_set(2)
    with pytest.raises(PreconditionError):
        check_schur_ring(cand.group, cand.subgroup, cand.elements)


# ---------------------------------------------------------------------------
# eigenmatrix
# ---------------------------------------------------------------------------


def test_p_matrix_rows():
    pm = p_matrix(4)
    # doubled Gaussian-integer entries, rows as printed
    assert pm.doubled[0] == ((2, 0), (6, 0), (12, 0), (12, 0))
    assert pm.doubled[1] == ((2, 0), (6, 0), (-4, 0), (-4, 0))
    assert pm.doubled[2] == ((2, 0), (-2, 0), (0, -4), (0, 4))
    assert pm.doubled[3] == ((2, 0), (-2, 0), (0, 4), (0, -4))
    with pytest.raises(GroupError):
        p_matrix(5)


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def test_spectrum_h4(cand20):
    report = spectrum(cand20.group, cand20.subgroup, cand20.elements)
    assert report.passed
    assert report.witnesses["traces"] == [16, 0, 0, 192]
    assert report.witnesses["expected_traces"] == [16, 0, 0, 192]
    assert report.witnesses["annihilation"] is True
    assert all(report.witnesses["maximal_divisors_nonzero"].values())
    assert report.witnesses["cube_identity"] is True
    assert report.witnesses["fourth_identity"] is True


def test_spectrum_h8(cand31):
    report = spectrum(cand31.group, cand31.subgroup, cand31.elements)
    assert report.passed
    assert report.witnesses["traces"] == [64, 0, 0, 21504]


def test_spectrum_precondition(gnk20):
    with pytest.raises(PreconditionError):
        spectrum(gnk20, gnk20.distinguished_subgroup(), [4, 5, 6])


# ---------------------------------------------------------------------------
# Hadamard
# ---------------------------------------------------------------------------


def test_hadamard_certificate(cand20, cand30):
    for cand in (cand20, cand30):
        report = check_hadamard(cand.group, cand.subgroup, cand.elements)
        assert report.passed


def test_hadamard_matrix_properties(cand20):
    m = hadamard_matrix(cand20.group, cand20.elements)
    n = len(m)
    assert n == 16
    assert all(sum(row) == -4 for row in m)  # 2k - h^2
    for i in range(n):
        for j in range(n):
            dot = sum(m[i][x] * m[j][x] for x in range(n))
            assert dot == (16 if i == j else 0)


def test_hadamard_matches_regular_representation(cand20):
    d = from_set(cand20.group, cand20.elements)
    reg = regular_matrix(d)
    m = hadamard_matrix(cand20.group, cand20.elements)
    for i in range(16):
        for j in range(16):
            assert m[i][j] == 2 * reg[i][j] - 1


# ---------------------------------------------------------------------------
# quotient distributions
# ---------------------------------------------------------------------------


def test_quotient_index2(cand20):
    group, sub = cand20.group, cand20.subgroup
    kernels = normal_subgroups_of_prime_index(group)
    assert len(kernels) == 3
    for n, p in kernels:
        assert p == 2
        report = quotient_check(group, sub, cand20.elements, n)
        assert report.passed
        assert report.witnesses["x"] == [2, 4]
        assert report.witnesses["y"] == [4, 0]


def test_quotient_c2_squared_kernel(cand30):
    group, sub = cand30.group, cand30.subgroup
    a1 = group.word_index[((1, 0, 0), (0, 0, 0))]
    kernel = closure(group, list(sub.members) + [a1])
    assert kernel.order == 16
    q, _ = quotient(group, kernel)
    assert q.fingerprint() == (4, True, (1, 2, 2, 2))
    report = quotient_check(group, sub, cand30.elements, kernel)
    assert report.passed
    assert sorted(report.witnesses["x"]) == [4, 8, 8, 8]
    assert report.witnesses["y"] == [8, 0, 0, 0]


def test_quotient_c4_families(cand20):
    group, sub = cand20.group, cand20.subgroup
    for gens in ([((1, 0), (0, 0))], [((0, 1), (0, 0))]):
        kernel = closure(group, [group.word_index[g] for g in gens])
        assert kernel.order == 4
        report = quotient_check(group, sub, cand20.elements, kernel)
        assert report.passed
        assert report.witnesses["case"] == "cyclic-4"
        assert report.witnesses["family"] in ("i", "ii", "iii")


def test_quotient_requires_normal_kernel():
    from rshds.groups import dihedral_group

    s3 = dihedral_group(3)
    refl = next(x for x in involutions(s3) if x >= 3)
    with pytest.raises(GroupError):
        quotient_check(s3, closure(s3, []), [], closure(s3, [refl]))


def test_all_prime_index_kernels_contain_subgroup(cand20, cand30, cand31):
    # index-2 kernels swallow H and meet D in lambda points, on instances
    for cand in (cand20, cand30, cand31):
        for n, p in normal_subgroups_of_prime_index(cand.group):
            report = quotient_check(cand.group, cand.subgroup, cand.elements, n)
            assert report.passed
            assert report.witnesses["x"][0] == cand.params.lam


# ---------------------------------------------------------------------------
# structural screening
# ---------------------------------------------------------------------------


def test_structural_tests_family(cand20):
    report = structural_tests(cand20.group, 4, cand20.subgroup)
    assert report.passed
    assert all(report.witnesses[t]["pass"] for t in ("T1", "T2", "T3", "T4"))


def test_structural_tests_elementary_abelian_fails_t2(c2_4):
    report = structural_tests(c2_4, 4)
    assert not report.passed
    assert report.witnesses["T2"]["pass"] is False
    assert report.witnesses["T2"]["involution_closure_order"] == 16


def test_structural_tests_g36(g36, g36_h):
    report = structural_tests(g36, 6, g36_h)
    assert report.passed
    assert all(report.witnesses[t]["pass"] for t in ("T1", "T2", "T3", "T4"))
    assert report.witnesses["T1"]["core_order"] == 6


def test_structural_tests_wrong_order(g36):
    with pytest.raises(GroupError):
        structural_tests(g36, 4)


# ---------------------------------------------------------------------------
# instance-level theorem invariants
# ---------------------------------------------------------------------------


def test_involutions_inside_subgroup_for_candidates(cand20, cand30, cand31):
    for cand in (cand20, cand30, cand31):
        for g in involutions(cand.group):
            assert g in cand.subgroup


def test_row_sums_and_irreducibility(cand31):
    # every row/column of the regular matrix of D sums to k, and the support
    # generates the whole group (strong connectivity of the Cayley digraph)
    d = from_set(cand31.group, cand31.elements)
    reg = regular_matrix(d)
    k = cand31.params.k
    assert all(sum(row) == k for row in reg)
    assert all(sum(reg[i][j] for i in range(64)) == k for j in range(64))
    assert closure(cand31.group, cand31.elements).order == cand31.group.order


def test_full_certificate_suite_on_all_constructions(gnk4_candidates):
    candidates = [gnk_difference_set(n, k) for n in (2, 3) for k in range(n - 1)]
    candidates += gnk4_candidates
    c4n_cands = [c4n_difference_set(n) for n in (2, 3)]
    for cand in candidates:
        assert check_difference_set(cand.group, cand.elements).passed
        assert coset_profile(cand.group, cand.subgroup, cand.elements).passed
        assert check_rshds(cand.group, cand.subgroup, cand.elements).passed
        assert check_schur_ring(cand.group, cand.subgroup, cand.elements)[0].passed
        assert spectrum(cand.group, cand.subgroup, cand.elements).passed
        assert check_hadamard(cand.group, cand.subgroup, cand.elements).passed
    for cand in c4n_cands:
        assert check_difference_set(cand.group, cand.elements).passed
        assert coset_profile(cand.group, cand.subgroup, cand.elements).passed
