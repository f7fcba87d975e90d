import pytest

from engel_lab.core import LieElt, ad_z
from engel_lab.ideal.cascades import ALL_CASES, replay
from engel_lab.ideal.families import e2, e4, e7, e8, e9, g2, g6, h1, h2, h3


@pytest.mark.parametrize("case_id", ALL_CASES)
def test_replay(shared_ctx, case_id):
    res = replay(case_id, shared_ctx)
    assert res.ok, res.detail


def test_swap_family_from_two_empty_head_instances():
    """Moving a pair between first head and tail is a difference of two
    empty-first-head instances sharing their three-block word."""
    lhs = LieElt(e4((1, 2, 3), (4, 5), [(6, 7)])) - LieElt(
        e4((1, 2, 3), (6, 7), [(4, 5)])
    )
    assert lhs == -LieElt(e7((4, 5), (1, 2, 3), (6, 7), []))


def test_three_term_xi_identity_from_bracketing():
    """Bracketing a two-head instance with a fresh c leaves, after the
    matching (2,2)-head instance is removed, the symmetric three-term row."""
    inst = LieElt(e2((4, 5), (1, 2), 3, []))
    from engel_lab.ideal.cascades import _pi_z

    got = _pi_z(inst.ad_c(6)) - LieElt(g2((4, 5), 1, 2, 3, 6, []))
    assert got == LieElt(g6((4, 5), 1, (2, 3, 6), []))


def test_plus_one_families_map_down_under_z():
    assert ad_z(LieElt(h1((2, 3), (4, 5), 1, []))) == LieElt(e8((2, 3), (4, 5), 1, []))
    assert ad_z(LieElt(h2((4, 5), (1, 2, 3), (6, 7), []))) == LieElt(
        e7((4, 5), (1, 2, 3), (6, 7), [])
    )
    assert ad_z(LieElt(h3(2, (3, 4, 5), 1, []))) == LieElt(e9(2, (3, 4, 5), 1, []))
