import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidminors.parser import parse_braid
from braidminors.wqo import (
    Embedding,
    OrderError,
    TupleEmbedding,
    find_comparable_pair,
    subword_embeds,
    tuple_embeds,
    verify_embedding,
    verify_tuple_embedding,
)
from oracles import brute_embeds, brute_subsequence, brute_tuple_embeds


def W(text):
    return parse_braid(text)


letters = st.lists(st.integers(0, 3), max_size=10)
short = st.lists(st.integers(0, 3), max_size=6)


# -------------------------------------------------------- subword_embeds

def test_subword_examples():
    assert subword_embeds(W("B3: s1 s2"), W("B3: s1 s1 s2 s1")).indices == (1, 3)
    u = W("B3: s1 s2 s1")
    assert subword_embeds(u, u).indices == (1, 2, 3)
    assert subword_embeds(W("B3: s2 s1"), W("B3: s1 s2")) is None


def test_subword_strand_mismatch_is_error():
    with pytest.raises(OrderError):
        subword_embeds(W("B2: s1"), W("B3: s1"))


def test_bands_compared_componentwise():
    assert subword_embeds(W("B4: b(1,3)"), W("B4: s1 b(1,4) b(1,3)")).indices == (3,)
    assert subword_embeds(W("B4: b(1,3)"), W("B4: s1 s2 b(2,4)")) is None


@given(short, letters)
@settings(max_examples=300)
def test_subword_matches_bruteforce(u, v):
    e = subword_embeds(u, v)
    assert (e is not None) == brute_embeds(u, v)
    if e is not None:
        assert verify_embedding(u, v, e)
        assert e.indices in brute_subsequence(u, v)


# ------------------------------------------------------ verify_embedding

def test_verify_examples():
    u, v = W("B3: s1 s2"), W("B3: s1 s1 s2 s1")
    assert verify_embedding(u, v, Embedding((1, 3)))
    assert not verify_embedding(u, v, Embedding((3, 1)))
    assert not verify_embedding(u, W("B3: s1 s1"), Embedding((1, 2)))
    assert not verify_embedding(u, v, Embedding((1, 5)))
    assert not verify_embedding(u, v, Embedding((1,)))
    assert not verify_embedding(u, v, Embedding((2, 2)))


# ------------------------------------------------------- quasi-order laws

@given(letters)
def test_reflexive(u):
    e = subword_embeds(u, u)
    assert e.indices == tuple(range(1, len(u) + 1))


@given(short, letters, st.lists(st.integers(0, 3), max_size=14))
@settings(max_examples=300)
def test_transitive_composition(u, v, w):
    e1, e2 = subword_embeds(u, v), subword_embeds(v, w)
    if e1 is not None and e2 is not None:
        composed = e1.then(e2)
        assert verify_embedding(u, w, composed)


@given(short, short, short, letters)
def test_monotone_under_context(x, u, y, w):
    assert subword_embeds(u, x + u + y) is not None
    v = subword_embeds(u, u + w)
    assert v is not None
    e = subword_embeds(u, w)
    if e is not None:
        assert subword_embeds(u + x, w + x) is not None


# ---------------------------------------------------------- tuple_embeds

def test_tuple_examples():
    A = (W("B3: s1 s2"), W("B3: s1"))
    B = (W("B3: s1 s2"), W("B3: s2 s2"), W("B3: s1 s1"))
    te = tuple_embeds(A, B)
    assert te.component_targets == (1, 3)
    assert verify_tuple_embedding(A, B, te)
    assert tuple_embeds((), B).component_targets == ()
    assert tuple_embeds((W("B3: s1"), W("B3: s1")), (W("B3: s1"),)) is None


def test_tuple_mixed_strands_error():
    with pytest.raises(OrderError):
        tuple_embeds((W("B3: s1"),), (W("B2: s1"),))


def test_tuple_verify_rejects_non_increasing():
    A = (W("B2: s1"), W("B2: s1"))
    B = (W("B2: s1"),)
    bad = TupleEmbedding((1, 1), (Embedding((1,)), Embedding((1,))))
    assert not verify_tuple_embedding(A, B, bad)


tuples = st.lists(st.lists(st.integers(0, 2), max_size=4), max_size=4)


@given(tuples, st.lists(st.lists(st.integers(0, 2), max_size=5), max_size=6))
@settings(max_examples=300)
def test_tuple_greedy_matches_bruteforce(A, B):
    te = tuple_embeds(A, B)
    assert (te is not None) == brute_tuple_embeds(A, B)
    if te is not None:
        assert verify_tuple_embedding(A, B, te)


# --------------------------------------------------- find_comparable_pair

def test_pair_examples():
    hit = find_comparable_pair([W("B2: s1"), W("B2: s1 s1")])
    assert (hit.smaller_index, hit.larger_index) == (1, 2)
    assert find_comparable_pair([W("B3: s1 s2"), W("B3: s2 s1")]) is None
    hit = find_comparable_pair([W("B2: s1 s1"), W("B2: s1")])
    assert (hit.smaller_index, hit.larger_index) == (2, 1)
    assert hit.pair == (1, 2)
    assert find_comparable_pair([]) is None


def test_pair_is_lexicographically_first():
    family = [[0, 1], [1, 0], [2], [0, 1, 1], [1]]
    hit = find_comparable_pair(family)
    assert hit.pair == (1, 4)
    # brute-force scan of the order
    first = next(
        (i, j)
        for i in range(len(family))
        for j in range(i + 1, len(family))
        if brute_embeds(family[i], family[j]) or brute_embeds(family[j], family[i])
    )
    assert hit.pair == (first[0] + 1, first[1] + 1)


@pytest.mark.parametrize("jobs", [1, 2, 3, 8])
def test_pair_independent_of_jobs(jobs):
    rng = random.Random(99)
    for _ in range(40):
        family = [
            [rng.randint(0, 4) for _ in range(rng.randint(3, 8))] for _ in range(rng.randint(0, 12))
        ]
        assert find_comparable_pair(family, jobs=jobs) == find_comparable_pair(family)
