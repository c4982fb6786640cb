"""Alphabets, word evaluation and the relation tables."""

import pytest

from gdeen import (
    BadFormat,
    Params,
    UnknownSymbol,
    alphabet,
    element,
    eval_word,
    identity,
    make_word,
    mul,
    parse_word,
    relations,
    word_text,
)
from gdeen.words import S, T, Z


def test_alphabet_g333():
    syms = alphabet(Params(1, 3, 3))
    assert syms == [T(0), T(1), T(2), S(3)]


def test_alphabet_g313():
    syms = alphabet(Params(3, 1, 3))
    assert syms == [Z, S(2), S(3)]


def test_alphabet_g622():
    syms = alphabet(Params(3, 2, 2))
    assert len(syms) == 7
    assert syms == [Z] + [T(k) for k in range(6)]


def test_empty_word_is_identity():
    params = Params(2, 2, 2)
    assert eval_word(make_word(params, [])) == identity(params)


def test_eval_example_34():
    params = Params(3, 3, 4)
    w = parse_word(params, "z s3 t1 t0 s3 s4 s3 t1 t0")
    assert eval_word(w) == element(params, [1, 3, 4, 2], [1, 0, 1, 1])


def test_eval_example_318():
    params = Params(3, 1, 3)
    w = parse_word(params, "z s2 z z s2 s3 s2 z z")
    assert eval_word(w) == element(params, [2, 3, 1], [1, 2, 2])


def test_relations_g333_contains_expected():
    params = Params(1, 3, 3)
    rels = {(word_text(u), word_text(v)) for u, v in relations(params)}
    assert ("t1 t0", "t2 t1") in rels or ("t2 t1", "t1 t0") in rels
    assert ("t0 s3 t0", "s3 t0 s3") in rels


def test_relations_g313_contains_z_braid():
    params = Params(3, 1, 3)
    rels = {(word_text(u), word_text(v)) for u, v in relations(params)}
    assert ("z s2 z s2", "s2 z s2 z") in rels


@pytest.mark.parametrize(
    "params",
    [
        Params(1, 1, 3),
        Params(1, 2, 3),
        Params(1, 3, 3),
        Params(1, 3, 4),
        Params(2, 1, 3),
        Params(3, 1, 3),
        Params(3, 1, 4),
        Params(2, 2, 2),
        Params(2, 2, 3),
        Params(3, 3, 3),
        Params(3, 2, 3),
        Params(2, 3, 3),
    ],
)
def test_all_relations_hold_on_matrices(params):
    rels = relations(params)
    assert rels
    for u, v in rels:
        assert eval_word(u) == eval_word(v), (word_text(u), word_text(v))


def test_eval_is_homomorphism():
    params = Params(3, 3, 3)
    u = parse_word(params, "t0 s3 t2")
    v = parse_word(params, "t1 t1 s3")
    uv = make_word(params, u.syms + v.syms)
    assert eval_word(uv) == mul(eval_word(u), eval_word(v))


def test_parse_roundtrip_and_json_form():
    params = Params(3, 3, 4)
    w = parse_word(params, "z s3 t1 t0")
    assert word_text(w) == "z s3 t1 t0"
    assert parse_word(params, '["z", "s3", "t1", "t0"]') == w


def test_parse_rejects_bad_tokens():
    params = Params(1, 2, 3)
    with pytest.raises(BadFormat):
        parse_word(params, "t0 q3")
    with pytest.raises(UnknownSymbol):
        parse_word(params, "z t0")  # z needs d > 1
    with pytest.raises(UnknownSymbol):
        parse_word(params, "s2")  # s2 only exists when e = 1
    with pytest.raises(UnknownSymbol):
        parse_word(params, "t5")  # t-index out of range


def test_symbol_validity_dispatch():
    # e = 1, d > 1: {z, s2..sn}; no t's
    assert alphabet(Params(2, 1, 3)) == [Z, S(2), S(3)]
    with pytest.raises(UnknownSymbol):
        parse_word(Params(2, 1, 3), "t0")
    # d = 1, e = 1: the symmetric group keeps t0 as the first transposition
    assert alphabet(Params(1, 1, 3)) == [T(0), S(3)]


def test_word_length_counts_letters():
    params = Params(3, 1, 2)
    w = parse_word(params, "z z s2")
    assert len(w) == 3
