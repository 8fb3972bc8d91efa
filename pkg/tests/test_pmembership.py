import dataclasses
import json

import pytest

from alexcert.alexander import braid_poly
from alexcert.braid import PositiveBraidWord as W, torus_word
from alexcert.laurent import ONE, U, ZERO
from alexcert.pmembership import (
    BraidStep,
    CertificateFormatError,
    HopfBase,
    NotInScope,
    SumStep,
    TreeStep,
    certify_braid,
    certify_sum,
    certify_tree,
    condition_star,
    dumps,
    from_dict,
    ito_summand_check,
    loads,
    pick_leaf,
    to_dict,
    tree_minus,
    verify,
)
from alexcert.surfaces import PlaneTree, parse_tree

from conftest import T


def test_condition_star_examples():
    assert condition_star(ZERO, 2) == (True, 0)
    assert condition_star(T("t - 2 + t^-1"), 2) == (True, 1)
    assert condition_star(ONE, 0) == (True, 1)
    assert condition_star(2 * U, 1) == (False, 2)
    with pytest.raises(ValueError):
        condition_star(ONE, -1)


def test_certify_braid_examples():
    assert certify_braid(W(2, (1, 1))) == HopfBase()
    c = certify_braid(W(2, (1, 1, 1)))
    assert c == BraidStep(W(2, (1, 1, 1)), 1, HopfBase(), 0)
    assert c.l_minus_word == W(2, (1,))
    c = certify_braid(W(3, (1, 1, 2, 2)))
    assert c == BraidStep(W(3, (1, 1, 2, 2)), 1, HopfBase(), 1)
    assert c.l_minus_word == W(3, (2, 2))
    r = verify(c)
    assert r.valid and (r.alpha, r.beta) == (1, -2)


def test_certify_braid_rejects():
    for w in [W(3, (1, 1)), W(1, ()), W(2, (1,)), W(3, (1, 2))]:
        with pytest.raises(NotInScope):
            certify_braid(w)


def test_certify_tree_examples():
    assert certify_tree(PlaneTree()) == HopfBase()
    c = certify_tree(parse_tree("v(v)"))
    assert c == TreeStep(parse_tree("v(v)"), 1, HopfBase(), (), 0)
    c = certify_tree(parse_tree("v(v(v))"))
    assert isinstance(c, TreeStep)
    assert c.forest == (PlaneTree(),) and c.l_minus_b1 == 1
    assert c.child == certify_tree(parse_tree("v(v)"))


def test_leaf_choice_deepest_then_leftmost():
    tree = parse_tree("v(v(v)(v))(v(v))")
    # preorder: 0 root, 1, 2, 3, 4, 5; deepest leaves 2, 3, 5 -> leftmost is 2.
    assert pick_leaf(tree) == (2, 1)
    assert tree_minus(tree, {2, 1}) == [parse_tree("v(v(v))"), PlaneTree()]


def test_certify_sum_examples():
    r = verify(certify_sum(HopfBase(), HopfBase()))
    assert r.valid and (r.alpha, r.beta) == (1, -2) and r.delta == U * U
    r = verify(certify_sum(certify_braid(torus_word(2, 3)), certify_braid(torus_word(2, 5))))
    assert r.valid and r.beta == -2
    base = certify_braid(torus_word(3, 4))
    b = verify(base).beta
    assert verify(certify_sum(base, HopfBase())).beta == b - 1


def test_verify_examples():
    r = verify(certify_braid(W(2, (1, 1, 1))))
    assert r.valid and (r.degree_doubled, r.alpha, r.beta) == (2, 1, -1)
    r = verify(certify_tree(parse_tree("v(v(v))")))
    assert r.valid and (r.degree_doubled, r.alpha, r.beta) == (3, 1, -1)
    assert r.nodes[-1].star_coefficient == 1


def test_t33_hits_star_boundary():
    r = verify(certify_braid(torus_word(3, 3)))
    assert r.valid
    assert any(n.star_coefficient == 1 for n in r.nodes)
    assert r.delta == braid_poly(torus_word(3, 3))


def test_tampered_b1_minus_fails_at_node():
    cert = certify_braid(W(2, (1, 1, 1, 1)))
    bad = dataclasses.replace(cert, child=dataclasses.replace(cert.child, l_minus_b1=cert.child.l_minus_b1 + 1))
    r = verify(bad)
    assert not r.valid
    assert r.failed_node == "root.child"
    assert "b1_minus" in r.failed_checks


def test_tampered_square_and_child():
    cert = certify_braid(W(2, (1, 1, 1)))
    r = verify(dataclasses.replace(cert, square_at=3))
    assert not r.valid and r.failed_node == "root" and "square" in r.failed_checks
    # A wrong child breaks the skein identity.
    r = verify(dataclasses.replace(cert, child=certify_braid(torus_word(2, 3))))
    assert not r.valid and "skein_identity" in r.failed_checks


def test_tampered_tree_forest():
    cert = certify_tree(parse_tree("v(v(v))"))
    r = verify(dataclasses.replace(cert, forest=(), l_minus_b1=0))
    assert not r.valid and "forest" in r.failed_checks
    r = verify(dataclasses.replace(cert, leaf=0))
    assert not r.valid and "leaf" in r.failed_checks


def test_bookkeeping_identities_on_generated():
    for cert in [certify_braid(torus_word(3, 5)), certify_tree(parse_tree("v(v(v)(v))(v(v))"))]:
        r = verify(cert)
        assert r.valid
        for n in r.nodes:
            for key in ("alpha_relation", "beta_relation", "degree_step", "condition_star"):
                if n.kind in ("braid_step", "tree_step"):
                    assert n.checks[key], (n.path, key)


def test_json_round_trip():
    for cert in [
        certify_braid(torus_word(3, 4)),
        certify_tree(parse_tree("v(v)(v)(v)")),
        certify_sum(certify_braid(W(2, (1, 1, 1))), HopfBase()),
    ]:
        text = dumps(cert)
        assert json.loads(text)["schema"] == 1
        back = loads(text)
        assert back == cert
        assert verify(back).valid


def test_json_shape():
    d = to_dict(BraidStep(W(3, (2, 2, 1, 2, 2, 1)), 1, HopfBase(), 2))
    assert d == {"kind": "braid_step", "word": "3: 2 2 1 2 2 1", "square_at": 1, "l_minus_b1": 2, "child": {"kind": "hopf_base"}}


@pytest.mark.parametrize(
    "bad",
    [
        "not json",
        '{"kind": "nope"}',
        '{"kind": "braid_step", "word": "2: 1 1"}',
        '{"kind": "braid_step", "word": "2: 1 5", "square_at": 1, "l_minus_b1": 0, "child": {"kind": "hopf_base"}}',
        '{"kind": "sum_step", "left": {"kind": "hopf_base"}, "right": 3}',
        '{"kind": "braid_step", "word": "2: 1 1 1", "square_at": "1", "l_minus_b1": 0, "child": {"kind": "hopf_base"}}',
    ],
)
def test_malformed_json(bad):
    with pytest.raises(CertificateFormatError):
        loads(bad)


def test_ito_examples():
    t23, t25 = torus_word(2, 3), torus_word(2, 5)
    rows = ito_summand_check([[t23], [t23, t25], [t23, t23, t23]])
    assert [(-r.beta, r.summands) for r in rows] == [(1, 1), (2, 2), (3, 3)]
    assert all(r.ok for r in rows)
    # Cube of the trefoil polynomial: coefficient below the top is -3.
    cube = T("t - 1 + t^-1") ** 3
    assert cube.terms[4] == -3
