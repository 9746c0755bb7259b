import math
import random
from fractions import Fraction

import pytest

from braidminors.braidword import (
    BandWord,
    PositiveWord,
    closure_permutation,
    delta_power,
    euler_characteristic,
    format_braid,
    is_nonsplit,
)
from braidminors.generate import random_family
from braidminors.minors import (
    ContractError,
    check_modulus,
    choose_residue,
    class_counts,
    complete_tuple,
    decompose_connected_sum,
    full_twist_certificate,
    minimal_modulus,
    r_minor_search,
    reduce_mod,
    split_at,
    twist_pair_search,
    twist_root_exponent,
)
from braidminors.parser import parse_braid
from braidminors.wqo import verify_embedding, verify_tuple_embedding

W = parse_braid
POWER = "B5: (s1 s2 s3 s4)^3"


# ------------------------------------------------------------ modulus

@pytest.mark.parametrize("r, N", [(0.5, 3), (0.75, 5), (0.9, 11), (0.1, 2), (0.4, 2), (Fraction(2, 3), 4)])
def test_minimal_modulus(r, N):
    assert minimal_modulus(r) == N
    # brute force: first N whose reciprocal is below the gap
    gap = 1 - Fraction(repr(r)) if isinstance(r, float) else 1 - r
    assert N == next(k for k in range(1, 100) if Fraction(1, k) < gap)


def test_check_modulus_rejects_small():
    with pytest.raises(ContractError):
        check_modulus(2, 0.5)
    check_modulus(3, 0.5)
    with pytest.raises(ContractError):
        check_modulus(5, 1.0)


# ------------------------------------------------------ choose_residue

def test_choose_residue_examples():
    assert class_counts(W(POWER), 3) == {1: 6, 2: 3, 3: 3}
    assert choose_residue(W(POWER), 3) == 2
    assert choose_residue(W("B2: s1 s1 s1"), 2) == 2
    assert choose_residue(W("B4: s1 s2 s3"), 5) == 4


def test_choose_residue_errors():
    with pytest.raises(ContractError):
        choose_residue(W("B3: s1 s1"), 2)
    with pytest.raises(ContractError):
        choose_residue(W(POWER), 1)


def test_residue_count_pigeonhole():
    rng = random.Random(1)
    for N in range(2, 8):
        for w in random_family(6, 30, 5, 30, rng.randint(0, 10**9)):
            c = choose_residue(w, N)
            assert class_counts(w, N)[c] <= len(w) // N


# ---------------------------------------------------------- reduce_mod

def test_reduce_example():
    rep = reduce_mod(W(POWER), 3, 0.5)
    assert format_braid(rep.reduced) == "B5: s1 s2 s3 s4 s1 s3 s4 s1 s3 s4"
    assert (rep.chi_source, rep.chi_reduced) == (-7, -5)
    assert rep.ratio_ok
    assert rep.residue == 2
    assert verify_embedding(rep.reduced, rep.source, rep.kept_embedding)


def test_reduce_no_deletions():
    rep = reduce_mod(W("B2: s1 s1 s1 s1"), 2, 0.4)
    assert rep.reduced == rep.source and rep.ratio_ok
    w = W("B4: s1 s2 s3 s1 s3")
    rep = reduce_mod(w, 3, 0.5)
    assert rep.residue == 2 and rep.reduced == w


def test_reduce_rejects_small_modulus_and_split_words():
    with pytest.raises(ContractError):
        reduce_mod(W(POWER), 2, 0.5)
    with pytest.raises(ContractError):
        reduce_mod(W("B3: s1"), 3, 0.5)
    with pytest.raises(ContractError):
        reduce_mod(W("B3: b(1,3) s1"), 3, 0.5)


def test_ratio_reported_not_enforced():
    # short word relative to n: the inequality fails and is surfaced
    w = PositiveWord.from_indices(3, [1, 1, 2, 2])
    rep = reduce_mod(w, 2, 0.4)
    assert rep.chi_source == -1 and rep.chi_reduced == 0
    assert not rep.ratio_ok


def test_reduce_properties_random():
    rng = random.Random(17)
    for _ in range(300):
        n = rng.randint(2, 9)
        w = random_family(n, 1, 0, 4 * n, rng.randint(0, 2**32))[0]
        r = rng.choice([0.3, 0.5, 0.75])
        N = minimal_modulus(r) + rng.randint(0, 2)
        rep = reduce_mod(w, N, r)
        assert len(rep.reduced) >= math.ceil(len(w) * (1 - Fraction(1, N)))
        assert is_nonsplit(rep.reduced)
        assert verify_embedding(rep.reduced, w, rep.kept_embedding)
        for m in range(1, n):
            if (m - 1) % N + 1 == rep.residue:
                assert rep.reduced.indices.count(m) == 1
        assert rep.ratio_ok == (abs(rep.chi_reduced) >= Fraction(repr(r)) * abs(rep.chi_source))


# --------------------------------------------- decompose_connected_sum

def test_decompose_example():
    rep = reduce_mod(W(POWER), 3, 0.5)
    t = decompose_connected_sum(rep)
    assert t.texts() == ["B2: s1 s1 s1", "B3: s1 s2 s1 s2 s1 s2"]
    assert t.cut_count == 1
    assert euler_characteristic(rep.reduced) == sum(euler_characteristic(c) for c in t.components) - 1


def test_decompose_without_cuts():
    rep = reduce_mod(W("B4: s1 s2 s3 s1"), 5, 0.5)
    t = decompose_connected_sum(rep)
    assert t.cut_count == 0 and t.components == (rep.reduced,)


def test_split_every_generator():
    w = W("B3: s1 s2")
    t = split_at(w, [1, 2])
    assert t.texts() == ["B1:", "B1:", "B1:"]
    # brute-force chi: 3 discs, 2 bands
    assert euler_characteristic(w) == 1 == sum(euler_characteristic(c) for c in t.components) - 2


def test_split_rejects_repeated_cut():
    with pytest.raises(ContractError):
        split_at(W("B3: s1 s2 s1"), [1])


def _identities(w, N, r):
    rep = reduce_mod(w, N, r)
    t = decompose_connected_sum(rep)
    s = t.cut_count
    assert euler_characteristic(rep.reduced) == sum(euler_characteristic(c) for c in t.components) - s
    comps = closure_permutation(rep.reduced).cycle_count
    assert comps == sum(closure_permutation(c).cycle_count for c in t.components) - s
    sizes = [c.n for c in t.components]
    assert all(size == N for size in sizes[1:-1])
    assert all(size <= N for size in sizes)
    assert all(is_nonsplit(c) for c in t.components)
    return rep, t


def test_decompose_identities_random():
    rng = random.Random(23)
    for _ in range(300):
        n = rng.randint(2, 14)
        w = random_family(n, 1, 0, 5 * n, rng.randint(0, 2**32))[0]
        _identities(w, rng.randint(2, 6), 0.3)


# ------------------------------------------------------- complete_tuple

def test_complete_examples():
    rep = reduce_mod(W(POWER), 3, 0.5)
    t = decompose_connected_sum(rep)
    done = complete_tuple(t, 3)
    assert done.texts() == ["B3: s1 s1 s1 s2", "B3: s1 s2 s1 s2 s1 s2"]
    assert complete_tuple(done, 3) == done
    from braidminors.minors import SummandTuple

    disc = SummandTuple((PositiveWord(1, ()),), 0)
    assert complete_tuple(disc, 2).texts() == ["B2: s1"]
    with pytest.raises(ContractError):
        complete_tuple(done, 2)


def test_complete_preserves_invariants_random():
    rng = random.Random(29)
    for _ in range(200):
        n = rng.randint(2, 12)
        w = random_family(n, 1, 0, 5 * n, rng.randint(0, 2**32))[0]
        N = rng.randint(2, 5)
        _, t = _identities(w, N, 0.3)
        done = complete_tuple(t, N)
        for before, after in zip(t.components, done.components):
            assert after.n == N
            assert euler_characteristic(after) == euler_characteristic(before)
            assert closure_permutation(after).cycle_count == closure_permutation(before).cycle_count
            assert is_nonsplit(after)


# ------------------------------------------------------- r_minor_search

def test_r_minor_power_family():
    family = [W(f"B5: (s1 s2 s3 s4)^{q}") for q in range(3, 7)]
    rep = r_minor_search(family, 0.5)
    assert rep is not None
    assert rep.modulus == 3
    A = rep.smaller.completed.components
    B = rep.larger.completed.components
    assert verify_tuple_embedding(A, B, rep.certificate)
    assert rep.ratio_ok
    src = family[rep.smaller_index - 1]
    assert abs(euler_characteristic(rep.witness)) >= Fraction(1, 2) * abs(euler_characteristic(src))


def test_r_minor_identical_words():
    w = W(POWER)
    rep = r_minor_search([w, w], 0.5)
    assert (rep.smaller_index, rep.larger_index) == (1, 2)
    assert rep.certificate.component_targets == (1, 2)
    for comp, cert in zip(rep.smaller.completed.components, rep.certificate.component_certs):
        assert cert.indices == tuple(range(1, len(comp) + 1))


def test_r_minor_singleton():
    assert r_minor_search([W("B2: s1")], 0.5) is None


def test_r_minor_modulus_override():
    family = [W(f"B5: (s1 s2 s3 s4)^{q}") for q in range(3, 5)]
    assert r_minor_search(family, 0.5, modulus=4).modulus == 4
    with pytest.raises(ContractError):
        r_minor_search(family, 0.5, modulus=2)


# ------------------------------------------------------------ twist root

def test_twist_root_examples():
    w = delta_power(5, 2) * W("B5: b(1,3)")
    assert twist_root_exponent(w, 2) == 2
    assert twist_root_exponent(w, 1) is None
    assert twist_root_exponent(W("B4: b(1,3) s2"), 5) == 0
    with pytest.raises(ContractError):
        twist_root_exponent(w, 0)


def test_twist_root_monotone():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(1, 12)
        e = rng.randint(0, n)
        w = delta_power(n, e) * (W(f"B{n}: b(1,{n})") if n > 1 else BandWord(1, ()))
        for N in range(1, n + 2):
            k = twist_root_exponent(w, N)
            if k is not None:
                for N2 in range(N, n + 2):
                    assert twist_root_exponent(w, N2) == n // N2


def test_full_twist_certificate_examples():
    assert full_twist_certificate(delta_power(6, 3), 3).indices == (1, 2, 6, 7, 11, 12)
    assert full_twist_certificate(W("B4: b(1,3)"), 1).indices == ()
    w = delta_power(4, 1) * W("B4: b(2,4)")
    assert full_twist_certificate(w, 2) is None
    assert full_twist_certificate(w, 1).indices == ()
    assert full_twist_certificate(delta_power(3, 5), 4) is None


def test_full_twist_certificate_sweep():
    for k in range(1, 9):
        for n in range(k, 21):
            for e in range(k, n + 1, max(1, n // 4)):
                w = delta_power(n, e)
                cert = full_twist_certificate(w, k)
                assert verify_embedding(delta_power(k, k).letters, w.letters, cert)


# ----------------------------------------------------- twist_pair_search

def test_twist_pair_bounded_branch():
    family = [W("B3: s1 s2 b(1,2)"), W("B3: s1 s2 b(1,2) b(1,3)")]
    rep = twist_pair_search(family, 3)
    assert rep.status == "FULL"
    assert (rep.smaller_index, rep.larger_index) == (1, 2)
    assert verify_embedding(family[0], family[1], rep.certificate)


def test_twist_pair_unbounded_branch():
    family = [delta_power(4, 2) * W("B4: b(1,3)"), delta_power(12, 6)]
    rep = twist_pair_search(family, 2)
    assert rep.status == "PARTIAL"
    assert (rep.smaller_index, rep.larger_index) == (1, 2)
    assert rep.twist_size == 4
    assert verify_embedding(delta_power(4, 4).letters, family[1].letters, rep.certificate)


def test_twist_pair_singleton_and_missing_prefix():
    assert twist_pair_search([delta_power(3, 1)], 3) is None
    with pytest.raises(ContractError):
        twist_pair_search([W("B4: s2 s1 s3 s3"), delta_power(4, 2)], 2)


def test_twist_pair_prefers_lexicographic_full_pair():
    family = [
        delta_power(4, 2) * W("B4: s1 s1"),
        delta_power(5, 1) * W("B5: b(1,5)"),
        delta_power(4, 2) * W("B4: s1"),
        delta_power(5, 1) * W("B5: b(1,5) b(1,5)"),
    ]
    rep = twist_pair_search(family, 4)
    assert rep.status == "FULL"
    assert (rep.smaller_index, rep.larger_index) == (3, 1)
