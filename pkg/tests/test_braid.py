from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidtk.braid import (
    BraidWord,
    Move,
    apply_move,
    canonical_form,
    closure_summary,
    column_subword,
    flip,
    format_braid,
    half_twist,
    half_twist_divides,
    neighbours,
    parse_braid,
    permutation,
    replay,
    reverse,
    strand_reduce,
    surface_components,
)
from braidtk.errors import (
    BraidSyntaxError,
    BudgetExhausted,
    LetterRangeError,
    MoveNotApplicable,
    PreconditionViolated,
)
from braidtk.linking import is_path_graph, is_prime, linking_graph
from braidtk.seifert import alexander_coefficients, burau_alexander, normalize, seifert_matrix
from corpus import T25_WORD, braid_words, small_words
from oracles import delta_prefix_oracle, permutation_cycles


def invariants(w):
    s = closure_summary(w)
    return s.components, s.betti, burau_alexander(w)


# ---------------------------------------------------------------- parsing

def test_parse_t25_word():
    assert parse_braid("s3 s1 s2 s1 s1 s3 s2") == BraidWord(4, (3, 1, 2, 1, 1, 3, 2))


def test_parse_exponent():
    assert parse_braid("s1^3") == BraidWord(2, (1, 1, 1))


def test_parse_declared_strands():
    assert parse_braid("N=4; s2") == BraidWord(4, (2,))


@pytest.mark.parametrize(
    "text, offset",
    [("s1 x", 3), ("s1 s2^0", 6), ("t1", 0), ("s1s2", 2), ("", 0)],
)
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(BraidSyntaxError) as err:
        parse_braid(text)
    assert err.value.position == offset


@pytest.mark.parametrize("text", ["s0", "N=2; s2", "N=3; s1 s5"])
def test_letter_range(text):
    with pytest.raises(LetterRangeError):
        parse_braid(text)


@given(braid_words())
def test_format_roundtrip(w):
    assert parse_braid(format_braid(w)) == w


# ---------------------------------------------------------------- closure summary

def test_t25_word_summary():
    s = closure_summary(T25_WORD)
    assert (s.components, s.betti, s.genus) == (1, 4, 2)


def test_hopf_link():
    s = closure_summary(BraidWord(2, (1, 1)))
    assert (s.components, s.betti, s.genus) == (2, 1, 0)


def test_family_a_all_ones():
    w = BraidWord(4, (1, 2, 3, 2, 1, 2, 3, 2, 1))
    assert closure_summary(w).components == 3


@given(braid_words(max_strands=6, max_size=14))
def test_components_match_position_tracking(w):
    assert closure_summary(w).components == permutation_cycles(w.letters, w.strands)


@given(braid_words(max_size=12))
def test_genus_from_betti(w):
    s = closure_summary(w)
    k = surface_components(w)
    assert s.genus == Fraction(s.betti - s.components + k, 2)
    assert s.split == (k > 1)


# ---------------------------------------------------------------- moves

def test_rotation():
    assert apply_move(BraidWord(3, (1, 2)), Move("ElementaryConjugation", 0)).letters == (2, 1)


def test_braid_relation():
    assert apply_move(BraidWord(3, (1, 2, 1)), Move("BraidRelation", 0)).letters == (2, 1, 2)


def test_destabilize_preserves_invariants():
    w = BraidWord(3, (1, 1, 1, 2))
    v = apply_move(w, Move("MarkovDestabilize"))
    assert v == BraidWord(2, (1, 1, 1))
    assert invariants(v) == invariants(w)


def test_stabilize_then_destabilize():
    w = BraidWord(3, (1, 2, 2, 1))
    assert replay(w, [Move("MarkovStabilize"), Move("MarkovDestabilize")]) == w


@pytest.mark.parametrize(
    "word, move",
    [
        ((1, 2), Move("FarCommutation", 0)),
        ((1, 2, 2), Move("BraidRelation", 0)),
        ((1, 2, 2), Move("MarkovDestabilize")),
        ((1,), Move("FarCommutation", 3)),
    ],
)
def test_moves_refuse_bad_positions(word, move):
    with pytest.raises(MoveNotApplicable):
        apply_move(BraidWord(3, word), move)


def test_unknown_move_kind():
    with pytest.raises(ValueError):
        Move("Flype", 0)


@given(braid_words(min_strands=3, max_strands=4, min_size=2, max_size=9), st.data())
def test_neighbours_preserve_closure(w, data):
    moves = list(neighbours(w))
    if not moves:
        return
    move, v = data.draw(st.sampled_from(moves))
    assert apply_move(w, move) == v
    assert invariants(v) == invariants(w)


@given(braid_words(max_size=10))
def test_symmetries_preserve_invariants(w):
    assert invariants(flip(w))[:2] == invariants(w)[:2]
    assert invariants(reverse(w)) == invariants(w)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=9))
def test_canonical_form_is_rotation_invariant(L):
    L = tuple(L)
    assert all(canonical_form(L[k:] + L[:k]) == canonical_form(L) for k in range(len(L)))


# ---------------------------------------------------------------- strand reduction

def test_t25_word_reduces_to_two_strands():
    w = strand_reduce(T25_WORD, 2)
    assert w.strands == 3
    w = strand_reduce(w, 1)
    assert w.strands == 2
    assert invariants(w) == invariants(BraidWord(2, (1,) * 5))
    assert normalize(alexander_coefficients(seifert_matrix(w))) == (1, -1, 1, -1, 1)


@pytest.mark.parametrize("a, b", [(2, 2), (3, 1), (2, 4)])
def test_single_column_shape(a, b):
    w = BraidWord(3, (1,) * a + (2, 1) + (2,) * b)
    v = strand_reduce(w, 1)
    assert v.strands == 2
    s, t = closure_summary(w), closure_summary(v)
    assert (s.components, s.betti) == (t.components, t.betti)


def test_reduce_needs_three_strands():
    with pytest.raises(PreconditionViolated):
        strand_reduce(BraidWord(2, (1, 1, 1)), 1)


def test_reduce_needs_path_subword():
    w = BraidWord(3, (1, 1, 2, 2, 1, 1, 2, 2))
    with pytest.raises(PreconditionViolated):
        strand_reduce(w, 1)


def test_reduce_rejects_non_prime():
    with pytest.raises(PreconditionViolated):
        strand_reduce(BraidWord(3, (1, 1, 2, 2)), 1)


def test_strand_reduction_move():
    v = apply_move(T25_WORD, Move("StrandReduction", 2))
    assert v.strands == 3


def test_reduction_on_three_strand_corpus():
    for w in small_words(7, 3):
        if w.strands != 3 or not is_prime(w) or not is_path_graph(linking_graph(column_subword(w, 1))):
            continue
        try:
            v = strand_reduce(w, 1)
        except BudgetExhausted:
            continue
        assert invariants(v) == invariants(w)


# ---------------------------------------------------------------- half twist

def test_half_twist_divides_itself():
    assert half_twist_divides(half_twist(3))


def test_too_short():
    assert not half_twist_divides(BraidWord(3, (1, 2)))


def test_square_pattern():
    assert half_twist_divides(BraidWord(3, (1, 2, 1, 2)))


@given(braid_words(min_strands=3, max_strands=4, max_size=8))
def test_half_twist_against_prefix_oracle(w):
    assert half_twist_divides(w) == delta_prefix_oracle(w)


def test_half_twist_exhaustive_three_strands():
    for L in product((1, 2), repeat=6):
        w = BraidWord(3, L)
        assert half_twist_divides(w) == delta_prefix_oracle(w)


def test_permutation_of_half_twist_reverses():
    assert permutation(half_twist(4)) == (4, 3, 2, 1)
