import itertools

import pytest

from carefulsync import (
    Pfa,
    apply_set,
    bits_from_states,
    format_state_set,
    gen_grid,
    gen_random,
    gen_witness,
    is_careful_sync_word,
    run_word,
    states_from_bits,
    total_merging_letter,
    validate,
)

WITNESS_DELTA = (
    (1, None, 1),
    (1, 2, None),
    (2, 3, 3),
    (3, 0, 0),
)


def test_witness_table():
    pfa = gen_witness()
    assert pfa.letters == ("a", "b", "c")
    assert pfa.delta == WITNESS_DELTA
    assert pfa.n == 4
    assert not pfa.is_total()


def test_validate_well_formed():
    assert validate(gen_witness()) == []
    assert validate(gen_grid(3, 2)) == []


def test_validate_target_out_of_range():
    pfa = Pfa(("a",), ((7,), (0,), (1,), (2,)))
    diags = validate(pfa)
    assert len(diags) == 1
    assert "out of range" in diags[0]


def test_validate_duplicate_letter():
    pfa = Pfa(("a", "a"), ((0, 0),))
    diags = validate(pfa)
    assert len(diags) == 1
    assert "duplicate" in diags[0]


def test_validate_row_arity_and_names():
    pfa = Pfa(("a", "b"), ((0,), (0, 1)), state_names=("x",))
    diags = validate(pfa)
    assert any("row 0" in d for d in diags)
    assert any("state_names" in d for d in diags)


def test_validate_no_states():
    assert validate(Pfa(("a",), ())) == ["automaton must have at least one state"]


def test_letter_index():
    pfa = gen_witness()
    assert pfa.letter_index("c") == 2
    with pytest.raises(ValueError):
        pfa.letter_index("z")


def test_bits_round_trip():
    assert bits_from_states([0, 2, 5]) == 0b100101
    assert states_from_bits(0b100101) == (0, 2, 5)
    assert states_from_bits(0) == ()


def test_apply_set_full_under_a():
    pfa = gen_witness()
    assert apply_set(pfa, pfa.full_set(), 0) == bits_from_states([1, 2, 3])


def test_apply_set_undefined():
    pfa = gen_witness()
    # b has no transition from state 0
    assert apply_set(pfa, bits_from_states([0, 2]), 1) is None


def test_apply_set_self_loop_singleton():
    pfa = gen_witness()
    assert apply_set(pfa, 1 << 1, 0) == 1 << 1


def test_apply_set_usage_errors():
    pfa = gen_witness()
    with pytest.raises(ValueError):
        apply_set(pfa, 0, 0)
    with pytest.raises(ValueError):
        apply_set(pfa, 1, 5)


def test_run_word_trace():
    pfa = gen_witness()
    word = tuple("abc".index(ch) for ch in "a b c".split())
    res = run_word(pfa, pfa.full_set(), word)
    assert res.ok
    assert res.final == bits_from_states([0, 1, 3])
    assert len(res.trace) == 4
    assert res.trace[0] == pfa.full_set()


def test_run_word_published_word_is_undefined():
    # the published 10-letter word dies at position 7 (b undefined at 0)
    pfa = gen_witness()
    word = tuple("abc".index(ch) for ch in "a b c a a a b b c a".split())
    res = run_word(pfa, pfa.full_set(), word)
    assert not res.ok
    assert res.undefined_at == 7
    assert res.trace[-1] == bits_from_states([0, 2])


def test_run_word_empty():
    pfa = gen_witness()
    s = bits_from_states([1, 3])
    res = run_word(pfa, s, ())
    assert res.final == s
    assert res.trace == (s,)


def test_run_word_empty_start_rejected():
    with pytest.raises(ValueError):
        run_word(gen_witness(), 0, (0,))


def test_careful_word_length_ten():
    pfa = gen_witness()
    word = tuple("abc".index(ch) for ch in "a b c a b a b b c a".split())
    assert is_careful_sync_word(pfa, word) == (True, 1)


def test_empty_word_not_careful_on_multiple_states():
    assert is_careful_sync_word(gen_witness(), ()) == (False, None)


def test_careful_word_prefixes_defined():
    pfa = gen_witness()
    word = tuple("abc".index(ch) for ch in "a b c a b a b b c a".split())
    for cut in range(len(word) + 1):
        assert run_word(pfa, pfa.full_set(), word[:cut]).ok


def test_total_merging_letter():
    assert total_merging_letter(gen_grid(3, 2)) == 0
    assert total_merging_letter(gen_witness()) == 0
    identity = Pfa(("a", "b"), ((0, 0), (1, 1)))
    assert total_merging_letter(identity) is None


def test_format_state_set():
    pfa = gen_grid(2, 2)
    assert format_state_set(pfa, bits_from_states([0, 2])) == "{q0^1,q0^2}"


def test_image_never_grows():
    for n, l, seed in itertools.product((2, 3, 4), (1, 2, 3), range(5)):
        pfa = gen_random(n, l, 0.8, seed)
        for s in range(1, 1 << n):
            for a in range(l):
                img = apply_set(pfa, s, a)
                if img is not None:
                    assert img.bit_count() <= s.bit_count()
                    assert img != 0


def test_apply_set_is_pure():
    pfa = gen_witness()
    assert apply_set(pfa, 0b1111, 0) == apply_set(pfa, 0b1111, 0)
