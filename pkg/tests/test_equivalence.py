import os
import random
import subprocess
import sys

import pytest

import oracles
from fixtures import build_dfa
from fsmgrader._accel import _hk_core_py, hk_kernel, jit_enabled
from fsmgrader.automata import complement, minimize
from fsmgrader.equivalence import (
    WitnessString,
    _encode_pair,
    equivalent,
    shortest_witness,
)
from fsmgrader.errors import AlphabetMismatchError


def test_reflexive(three_zeros):
    assert equivalent(three_zeros, three_zeros)


def test_equivalent_to_minimized_form(three_zeros_padded):
    assert equivalent(three_zeros_padded, minimize(three_zeros_padded))


def test_three_vs_two_zeros_differ(three_zeros, two_zeros):
    assert not equivalent(three_zeros, two_zeros)


def test_witness_absent_for_equivalent_pair(three_zeros, three_zeros_padded):
    assert shortest_witness(three_zeros, three_zeros_padded) is None


def test_witness_against_two_zeros(three_zeros, two_zeros):
    witness = shortest_witness(three_zeros, two_zeros, reference="a")
    assert witness == WitnessString("00", "incorrectly_accepted")


def test_witness_against_four_zeros(three_zeros, four_zeros):
    witness = shortest_witness(three_zeros, four_zeros, reference="a")
    assert witness == WitnessString("000", "incorrectly_rejected")


def test_reference_side_flips_classification(three_zeros, two_zeros):
    witness = shortest_witness(two_zeros, three_zeros, reference="b")
    assert witness == WitnessString("00", "incorrectly_accepted")


def test_empty_word_witness(three_zeros):
    witness = shortest_witness(three_zeros, complement(three_zeros), reference="a")
    assert witness.word == ""
    assert witness.classification == "incorrectly_accepted"


def test_alphabet_mismatch(three_zeros):
    other = build_dfa(
        {
            "states": ["x"],
            "alphabet": ["a", "b"],
            "delta": {"x": {"a": "x", "b": "x"}},
            "initial": "x",
            "finals": set(),
        }
    )
    with pytest.raises(AlphabetMismatchError):
        equivalent(three_zeros, other)
    with pytest.raises(AlphabetMismatchError):
        shortest_witness(three_zeros, other)


def test_symmetry_and_oracle_agreement_on_random_pairs():
    rng = random.Random(555)
    for _ in range(150):
        ra = oracles.random_total_dfa(rng, rng.randint(1, 8), ["0", "1"], prefix="a")
        rb = oracles.random_total_dfa(rng, rng.randint(1, 8), ["0", "1"], prefix="b")
        a, b = build_dfa(ra), build_dfa(rb)
        expected = oracles.equivalent(ra, rb)
        assert equivalent(a, b) == expected
        assert equivalent(b, a) == expected
        assert equivalent(a, a)


def test_witness_is_shortlex_minimal_on_random_pairs():
    rng = random.Random(556)
    for _ in range(100):
        ra = oracles.random_total_dfa(rng, rng.randint(1, 7), ["0", "1"], prefix="a")
        rb = oracles.random_total_dfa(rng, rng.randint(1, 7), ["0", "1"], prefix="b")
        witness = shortest_witness(build_dfa(ra), build_dfa(rb), reference="a")
        if witness is None:
            assert oracles.equivalent(ra, rb)
            continue
        assert oracles.accepts(ra, witness.word) != oracles.accepts(rb, witness.word)
        assert oracles.shortlex_witness(ra, rb, len(witness.word)) in (witness.word, None)
        assert oracles.shortlex_witness(ra, rb, len(witness.word) + 1) == witness.word


def test_witness_on_structured_pair_with_long_difference():
    # zeros counted mod 12 vs mod 13: first disagreement is twelve 0s
    def modular(m, prefix):
        states = [f"{prefix}{i}" for i in range(m)]
        return build_dfa(
            {
                "states": states,
                "alphabet": ["0", "1"],
                "delta": {
                    s: {"0": states[(i + 1) % m], "1": s} for i, s in enumerate(states)
                },
                "initial": states[0],
                "finals": {states[0]},
            }
        )

    witness = shortest_witness(modular(12, "a"), modular(13, "b"), reference="a")
    assert witness == WitnessString("0" * 12, "incorrectly_rejected")


def test_ternary_alphabet_pairs_agree_with_oracle():
    rng = random.Random(557)
    for _ in range(60):
        ra = oracles.random_total_dfa(rng, rng.randint(1, 6), ["a", "b", "c"], prefix="p")
        rb = oracles.random_total_dfa(rng, rng.randint(1, 6), ["a", "b", "c"], prefix="q")
        assert equivalent(build_dfa(ra), build_dfa(rb)) == oracles.equivalent(ra, rb)


class TestKernelPaths:
    def test_jit_is_on_by_default_here(self):
        assert jit_enabled()

    def test_python_fallback_matches_selected_kernel(self):
        rng = random.Random(99)
        kernel = hk_kernel()
        for _ in range(120):
            a = build_dfa(oracles.random_total_dfa(rng, rng.randint(1, 7), ["0", "1"], prefix="a"))
            b = build_dfa(oracles.random_total_dfa(rng, rng.randint(1, 7), ["0", "1"], prefix="b"))
            delta, final, ia, ib, _ = _encode_pair(a, b)
            eq_fast, word_fast = kernel(delta, final, ia, ib)
            eq_slow, word_slow = _hk_core_py(delta, final, ia, ib)
            assert eq_fast == eq_slow
            assert list(word_fast) == list(word_slow)

    def test_env_flag_selects_python_path(self, three_zeros, two_zeros):
        code = (
            "from fsmgrader._accel import jit_enabled, hk_kernel, _hk_core_py\n"
            "assert not jit_enabled()\n"
            "assert hk_kernel() is _hk_core_py\n"
            "import fixtures\n"
            "from fsmgrader.equivalence import shortest_witness\n"
            "a = fixtures.build_dfa(fixtures.RAW_THREE_ZEROS)\n"
            "b = fixtures.build_dfa(fixtures.RAW_TWO_ZEROS)\n"
            "w = shortest_witness(a, b, reference='a')\n"
            "assert w.word == '00' and w.classification == 'incorrectly_accepted'\n"
            "print('fallback ok')\n"
        )
        env = dict(os.environ, FSMGRADER_DISABLE_JIT="1")
        result = subprocess.run(
            [sys.executable, "-c", code],
            capture_output=True,
            text=True,
            env=env,
            cwd=os.path.dirname(__file__),
        )
        assert result.returncode == 0, result.stderr
        assert "fallback ok" in result.stdout
