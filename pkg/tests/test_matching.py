import pytest

from engel_lab import matching as mt


def test_stage_sets():
    assert mt.stage_sets(3) == ((2, 3, 4), (5, 6, 7))


def test_partition_counts():
    # (2m-1)!! partitions, m! matchings
    assert len(mt.all_partitions(2)) == 3
    assert len(mt.all_partitions(3)) == 15
    assert len(mt.all_partitions(4)) == 105
    assert len(mt.matchings_index(4)) == 24


def test_norm_and_split():
    P = mt.canonical([(2, 3), (4, 6), (5, 7)])
    left, right, cross = mt.side_split(P, 3)
    assert left == [(2, 3)] and right == [(5, 7)] and cross == [(4, 6)]
    assert mt.norm(P, 3) == 1


def test_decompose_matching_is_itself():
    M = mt.identity_matching(3)
    assert mt.decompose(M, 3) == {M: 1}


def test_decompose_single_repair():
    # {2,3},{5,6} with {4,7} crossing: one same-side pair, two repairs
    P = mt.canonical([(2, 3), (5, 6), (4, 7)])
    d = mt.decompose(P, 3)
    assert d == {
        mt.canonical([(2, 5), (3, 6), (4, 7)]): -1,
        mt.canonical([(2, 6), (3, 5), (4, 7)]): -1,
    }


def test_decompose_is_sigma_independent_only_up_to_relators():
    # at norm 2 the two pairings genuinely differ as raw vectors
    P = mt.canonical([(2, 3), (4, 5), (6, 7), (8, 9)])
    left, right, _ = mt.side_split(P, 4)
    d1 = mt.decompose(P, 4, dict(zip(left, right)))
    d2 = mt.decompose(P, 4, dict(zip(left, reversed(right))))
    assert d1 != d2


def test_repair_instance_three_terms():
    P = mt.identity_matching(2)
    b1, b2 = P
    terms = mt.repair_instance(P, b1, b2)
    assert len(terms) == 3 and P in terms
    assert len({t for t in terms}) == 3


def test_phi_identity_and_swap():
    assert mt.phi(mt.identity_matching(4), 4) == 1
    swapped = mt.canonical([(2, 7), (3, 6), (4, 8), (5, 9)])
    assert mt.phi(swapped, 4) == -1


def test_phi_kills_families():
    for m in (3, 4, 5):
        for _, vec in mt.family_instances(m):
            assert mt.phi_vec(vec, m) == 0


def test_family4_has_eight_terms():
    vec = mt.family4(((2, 3), (4, 5)), ((6, 7), (8, 9)), [])
    assert sum(abs(c) for c in vec.values()) == 8


@pytest.mark.parametrize("which", [1, 2, 3, 4])
def test_case_checks(which):
    assert mt.case_check(which) > 0


def test_decomposition_window():
    rep = mt.verify_decomposition_window(4, 3)
    assert rep["pairsChecked"] > 0


def test_identity_word_shapes():
    assert mt.identity_matching_word(1) == ((1, 2, 3),)
    assert mt.identity_matching_word(2) == ((3, 5), (1, 2, 4))
    assert mt.identity_matching_word(3) == ((3, 6), (1, 2, 5), (4, 7))
    for m in (2, 3, 4):
        w = mt.identity_matching_word(m)
        assert mt.word_partition(w) == mt.identity_matching(m)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_sign_mode(m):
    rep = mt.witness_report(m, "sign")
    assert rep["pass"] and rep["identityMatchingCoefficientFunctional"] == 1


@pytest.mark.parametrize("m", [1, 2, 3])
def test_rowreduce_mode_and_agreement(shared_ctx, m):
    row = mt.witness_report(m, "rowreduce", ctx=shared_ctx)
    sign = mt.witness_report(m, "sign")
    assert row["pass"] and sign["pass"]
    assert (
        row["identityMatchingCoefficientFunctional"]
        == sign["identityMatchingCoefficientFunctional"]
        == 1
    )
