import copy
import json
from functools import lru_cache

import pytest
from hypothesis import given, settings

from braidtk.braid import BraidWord, closure_summary, flip, parse_braid, reverse
from braidtk.certify import (
    EXCEPTION_WORDS,
    Budget,
    beta_family,
    canonical_json,
    certify,
    enumerate_and_classify,
    family_words,
    known_exception,
    lemma_families,
    three_braid_normal_forms,
    to_tsv,
    verify_certificate,
)
from braidtk.linking import is_prime
from corpus import braid_words

LINK3 = parse_braid("s1^2 s2 s1^2 s2 s1^2 s2 s1^2 s2 s1^2 s2^2")


@lru_cache(maxsize=None)
def ten_knots():
    """Certified outcomes for the b1 = 10 prime 3-braid knots."""
    out = []
    for w in three_braid_normal_forms([10]):
        if closure_summary(w).components == 1 and is_prime(w):
            out.append((w, certify(w)))
    return tuple(out)


def a_certificate():
    w, o = next((w, o) for w, o in ten_knots() if o.kind == "Certified")
    return w, o.certificate


# ---------------------------------------------------------------- examples

def test_exception_word():
    o = certify(parse_braid(EXCEPTION_WORDS[0]))
    assert o.kind == "KnownException" and o.exit_code == 3


@pytest.mark.parametrize("text", EXCEPTION_WORDS)
def test_exceptions_recognized_up_to_symmetry(text):
    w = parse_braid(text)
    rotated = BraidWord(3, w.letters[4:] + w.letters[:4])
    for v in (rotated, flip(w), reverse(rotated)):
        assert known_exception(v) is not None


def test_three_component_word_is_a_link():
    o = certify(LINK3)
    assert closure_summary(LINK3).components == 3
    assert (o.kind, o.detail) == ("NotApplicable", "not a knot")


def test_three_component_word_certified_with_links():
    o = certify(LINK3, knots_only=False)
    assert o.kind == "Certified" and o.exit_code == 0
    assert verify_certificate(LINK3, o.certificate)


def test_torus_2_5_is_type_a():
    o = certify(parse_braid("s1^5"))
    assert (o.kind, o.detail, o.exit_code) == ("NotApplicable", "type A_n", 4)


def test_split_is_not_prime():
    o = certify(parse_braid("N=4; s1^3 s3^3"))
    assert (o.kind, o.detail) == ("NotApplicable", "not prime")


def test_genus_gate():
    o = certify(BraidWord(3, (1, 2) * 4))  # T(3,4): E6 linking graph, genus 3
    assert (o.kind, o.detail) == ("NotApplicable", "genus gate")


def test_budget_validation():
    with pytest.raises(ValueError):
        Budget(depth=-1)
    with pytest.raises(ValueError):
        Budget(states=0)


def test_summary_fields():
    w, o = ten_knots()[0]
    js = o.to_json()
    assert js["genus"] == 5 and js["components"] == 1 and js["betti"] == 10
    assert js["arf"] in (0, 1)


# ---------------------------------------------------------------- certificates

def test_round_trip_all_forms():
    w, cert = a_certificate()
    text = canonical_json(cert)
    assert verify_certificate(w, cert)
    assert verify_certificate(w, text)
    assert verify_certificate(w, text.encode())


def test_every_certificate_verifies():
    for w, o in ten_knots():
        if o.kind == "Certified":
            assert verify_certificate(w, o.certificate), o.certificate["input_word"]


def test_certificate_schema():
    _, cert = a_certificate()
    assert set(cert) == {"version", "input_word", "moves", "v0_bricks", "twists", "tree_edges",
                         "e6_witness", "h", "attachment", "tier_evidence"}
    assert cert["h"] >= 5 and cert["twists"] == []


def test_wrong_word_rejected():
    w, cert = a_certificate()
    other = next(v for v, o in ten_knots() if v != w)
    assert not verify_certificate(other, cert)


def test_perturbed_move_rejected():
    w, o = next((w, o) for w, o in ten_knots() if o.kind == "Certified" and o.certificate["moves"])
    cert = copy.deepcopy(o.certificate)
    cert["moves"][0][1] += 1
    assert not verify_certificate(w, cert)


def test_non_e6_witness_fails_condition_a():
    w, cert = a_certificate()
    cert = copy.deepcopy(cert)
    cert["e6_witness"] = list(range(len(cert["v0_bricks"])))[:6][::-1]
    v = verify_certificate(w, cert)
    assert not v and "condition (a)" in v.reason


def test_core_without_e6_fails_condition_a():
    w, cert = a_certificate()
    cert = copy.deepcopy(cert)
    cert["attachment"] = cert["v0_bricks"][5:] + cert["attachment"]
    cert["v0_bricks"] = cert["v0_bricks"][:5]
    v = verify_certificate(w, cert)
    assert not v and "condition (a)" in v.reason


@pytest.mark.parametrize(
    "field, value",
    [("version", 2), ("twists", [[0, 1]]), ("h", 4), ("tier_evidence", [{"tier": 1, "crossings": 1, "pushable": []}])],
)
def test_edited_fields_rejected(field, value):
    w, cert = a_certificate()
    cert = dict(cert, **{field: value})
    assert not verify_certificate(w, cert)


def test_non_canonical_text_rejected():
    w, cert = a_certificate()
    assert not verify_certificate(w, json.dumps(cert, indent=1))


def test_garbage_rejected():
    w, _ = a_certificate()
    assert not verify_certificate(w, b"\xff\xfe")
    assert not verify_certificate(w, "{")
    assert not verify_certificate(w, {"version": 1})


# ---------------------------------------------------------------- properties

@settings(max_examples=40)
@given(braid_words(min_strands=3, max_strands=4, min_size=3, max_size=14))
def test_gate_consistency(w):
    o = certify(w, Budget(depth=4, states=2000))
    if o.kind == "Certified":
        assert closure_summary(w).components == 1 and is_prime(w)
        assert verify_certificate(w, o.certificate)


def test_monotone_in_budget():
    budgets = [Budget(0, 50), Budget(2, 500), Budget(6, 5000), Budget()]
    for w, _ in ten_knots()[:20]:
        seen = False
        for b in budgets:
            certified = certify(w, b).kind == "Certified"
            assert certified or not seen
            seen = certified


def test_exceptions_never_certified():
    for text in EXCEPTION_WORDS:
        w = parse_braid(text)
        o = certify(w, Budget(depth=16), knots_only=False, check_exceptions=False)
        assert o.kind != "Certified"


def test_equal_genus_and_arf_give_equal_labels():
    labels = {}
    for w, o in ten_knots():
        if o.kind == "Certified":
            js = o.to_json()
            labels.setdefault((js["genus"], js["arf"]), set()).add((js["components"], o.certificate["h"] >= 5))
    assert labels and all(v == {(1, True)} for v in labels.values())


# ---------------------------------------------------------------- families

def test_three_braid_normal_forms_counts():
    words = three_braid_normal_forms([10])
    assert all(len(w.letters) == 12 and w.letters[0] == 1 and w.letters[-1] == 2 for w in words)
    assert len(set(words)) == len(words)


def test_lemma_family_sizes():
    labels = [label for label, _ in lemma_families()]
    assert (labels.count("A"), labels.count("B"), labels.count("C")) == (1024, 4096, 65536)


def test_beta_family_word():
    assert beta_family(5) == parse_braid("N=4; s1 s2^2 s1 s2 s3 s2^2 s3")


def test_family_spec_errors():
    with pytest.raises(ValueError):
        family_words("knots:3")


def test_enumeration_is_deterministic_under_parallelism():
    items = family_words("beta:4-6") + family_words("3braids:10")[:12]
    budget = Budget(depth=4, states=3000)
    one = to_tsv(enumerate_and_classify(items, budget, jobs=1))
    two = to_tsv(enumerate_and_classify(items, budget, jobs=2))
    assert one == two
    assert len(one.splitlines()) == len(items) + 1


def test_alternative_witness_is_not_canonical():
    w, cert = a_certificate()
    cert = dict(cert, e6_witness=[0, 1, 4, 5, 2, 3])
    v = verify_certificate(w, cert)
    assert not v and "first six core bricks" in v.reason
