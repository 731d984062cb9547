import itertools
import random

import pytest

from qrflip.attack import (AlreadyEqualError, AttackPlan, Candidate,
                           ConfigMismatchError, VerificationFailedError,
                           apply_plan, candidate_cost_by_reencoding,
                           codeword_diff, generalization_table,
                           minimal_flip_plan, nearest_message, plan_to_pixels,
                           verify_plan)
from qrflip.qr import (QrConfig, block_layout, build_matrix, capacity,
                       decode_matrix, encode, function_template)
from qrflip.qr.tables import LEVELS

V1Q = QrConfig(1, "Q")
V1L = QrConfig(1, "L")


def c_poc():
    return encode(b"Id: 1234567", V1Q), encode(b"Id: 1234566", V1Q)


def c_bhavuk():
    return encode(b"Id: bhavuksikka", V1L), encode(b"Id: bhavYksikka", V1L)


# -- diffing -----------------------------------------------------------------


def test_diff_costs_match_worked_table():
    report = codeword_diff(*c_poc())
    costs = {r.index: r.bit_cost for r in report.rows}
    assert costs == dict(zip(range(12, 26),
                             [1, 4, 4, 4, 3, 7, 3, 5, 3, 5, 3, 4, 3, 5]))
    assert all(r.block == 0 for r in report.rows)
    assert report.total_bit_cost == 54


def test_diff_of_identical_sets_is_empty():
    c1, _ = c_poc()
    assert codeword_diff(c1, c1).rows == ()


def test_diff_data_rows_of_second_example():
    report = codeword_diff(*c_bhavuk())
    data_rows = {r.index: r.bit_cost for r in report.rows if r.index < 19}
    assert data_rows == {9: 1, 10: 2}
    ec_rows = {r.index: r.bit_cost for r in report.rows if r.index >= 19}
    assert ec_rows == {19: 1, 20: 1, 21: 1, 22: 5, 23: 5, 24: 2, 25: 6}


def test_diff_rejects_config_mismatch():
    with pytest.raises(ConfigMismatchError):
        codeword_diff(encode(b"a", V1Q), encode(b"a", V1L))


# -- plans -------------------------------------------------------------------


def test_plan_for_proof_of_concept():
    c1, c2 = c_poc()
    plan = minimal_flip_plan(c1, c2)
    assert plan.total_bit_flips == 24
    assert len(plan.flips) == 8
    # cheapest-first with ascending-index ties picks the worked example's set
    assert [r.index for r in plan.flips] == [12, 13, 14, 16, 18, 20, 22, 24]
    assert plan.total_bits == 208
    assert abs(plan.percent_of_total_bits - 11.54) < 0.01
    assert plan.target_text == b"Id: 1234566"


def test_plan_for_extreme_case():
    c1, c2 = c_bhavuk()
    plan = minimal_flip_plan(c1, c2)
    assert plan.total_bit_flips == 8
    assert [r.index for r in plan.flips] == [9, 10, 19, 20, 21, 24]
    data_flips = [r for r in plan.flips if r.index < 19]
    assert len(data_flips) == 2 and len(plan.flips) - len(data_flips) == 4
    assert abs(plan.percent_of_total_bits - 3.85) < 0.01


def test_plan_identical_codewords_rejected():
    c1, _ = c_poc()
    with pytest.raises(AlreadyEqualError):
        minimal_flip_plan(c1, c1)


def test_verify_plan_worked_examples():
    c1, c2 = c_poc()
    assert verify_plan(c1, minimal_flip_plan(c1, c2)) == b"Id: 1234566"
    c1, c2 = c_bhavuk()
    assert verify_plan(c1, minimal_flip_plan(c1, c2)) == b"Id: bhavYksikka"


def test_verify_empty_plan_returns_original():
    c1, _ = c_poc()
    noop = AttackPlan(1, "Q", b"Id: 1234567", ())
    assert verify_plan(c1, noop) == b"Id: 1234567"


def test_verify_detects_wrong_target():
    c1, c2 = c_poc()
    plan = minimal_flip_plan(c1, c2)
    lying = AttackPlan(plan.version, plan.ec_level, b"Id: 9999999", plan.flips)
    with pytest.raises(VerificationFailedError):
        verify_plan(c1, lying)


def test_apply_plan_leaves_residual_within_t():
    c1, c2 = c_poc()
    plan = minimal_flip_plan(c1, c2)
    manipulated = apply_plan(c1, plan)
    residual = codeword_diff(manipulated, c2)
    assert len(residual.rows) == 6  # exactly t leftovers for the reader


def test_plan_soundness_random_pairs():
    rng = random.Random(500)
    for trial in range(500):
        version = rng.randrange(1, 4)
        lv = LEVELS[rng.randrange(4)]
        cfg = QrConfig(version, lv)
        cap = capacity(version, lv)
        n = rng.randrange(1, cap + 1)
        text = bytearray(rng.randrange(256) for _ in range(n))
        target = bytearray(text)
        target[rng.randrange(n)] ^= rng.randrange(1, 256)
        c1 = encode(bytes(text), cfg)
        c2 = encode(bytes(target), cfg)
        plan = minimal_flip_plan(c1, c2)
        assert verify_plan(c1, plan) == bytes(target)


def test_plan_minimality_against_subset_oracle():
    # over all admissible byte subsets (leave at most t differences), the
    # greedy cheapest-first selection is optimal
    rng = random.Random(9001)
    for lv in LEVELS:
        cfg = QrConfig(1, lv)
        cap = capacity(1, lv)
        text = bytes(rng.randrange(256) for _ in range(cap))
        target = bytearray(text)
        target[rng.randrange(cap)] ^= rng.randrange(1, 256)
        c1 = encode(text, cfg)
        c2 = encode(bytes(target), cfg)
        plan = minimal_flip_plan(c1, c2)
        rows = codeword_diff(c1, c2).rows
        t = block_layout(1, lv).blocks[0][1] // 2
        keep = len(rows) - t
        best = min(sum(r.bit_cost for r in subset)
                   for subset in itertools.combinations(rows, keep))
        assert plan.total_bit_flips == best


# -- pixel mapping ------------------------------------------------------------


def test_plan_to_pixels_poc():
    c1, c2 = c_poc()
    plan = minimal_flip_plan(c1, c2)
    pixels = plan_to_pixels(plan, V1Q)
    assert len(pixels) == plan.total_bit_flips == 24
    assert len(set(pixels)) == 24
    template = function_template(1)
    for r, c in pixels:
        assert not template.is_function[r][c]


def test_plan_to_pixels_empty():
    noop = AttackPlan(1, "Q", b"Id: 1234567", ())
    assert plan_to_pixels(noop, V1Q) == []


def test_pixel_toggles_flip_decoded_text_all_masks():
    c1, c2 = c_poc()
    plan = minimal_flip_plan(c1, c2)
    pixels = plan_to_pixels(plan, V1Q)
    for mask in range(8):
        cfg = QrConfig(1, "Q", mask=mask)
        m = build_matrix(c1, cfg)
        for r, c in pixels:
            m.toggle(r, c)
        text, counts = decode_matrix(m)
        assert text == b"Id: 1234566"
        assert counts == [6]


def test_second_extreme_case_pixel_flips():
    # both 7-flip outcomes: apply each plan's pixels and decode end to end
    base = b"Some binary text."
    for target in (b"Some binary teyt.", b"Some binary tex4."):
        c1 = encode(base, V1L)
        plan = minimal_flip_plan(c1, encode(target, V1L))
        pixels = plan_to_pixels(plan, V1L)
        assert len(pixels) == plan.total_bit_flips == 7
        m = build_matrix(c1, QrConfig(1, "L"))
        for r, c in pixels:
            m.toggle(r, c)
        assert decode_matrix(m)[0] == target


# -- nearest-message search -----------------------------------------------------


def test_nearest_alnum_reproduces_bhavuk_example():
    result = nearest_message(b"Id: bhavuksikka", V1L, "alnum")
    assert result.minimum_flips == 8
    wanted = Candidate(8, ord("u") ^ ord("Y"), b"Id: bhavYksikka", 8)
    assert wanted in result.candidates
    flips = result.minimum_flips
    assert 100.0 * flips / 208 == pytest.approx(3.85, abs=0.01)


def test_nearest_printable_two_minimizers():
    result = nearest_message(b"Some binary text.", V1L, "printable")
    assert result.minimum_flips == 7
    assert [(c.position, c.resulting_text) for c in result.candidates] == [
        (14, b"Some binary teyt."),
        (15, b"Some binary tex4."),
    ]


def test_nearest_all_alphabet_17_byte_text():
    result = nearest_message(b"q" * 17, V1L, "all")
    assert result.minimum_flips == 7
    assert [(c.position, c.xor) for c in result.candidates] == [
        (14, 0x01), (15, 0x40), (15, 0x80)]


def test_nearest_candidates_sorted_and_share_minimum():
    result = nearest_message(b"sorted check!", QrConfig(1, "M"), "all")
    keys = [(c.position, c.xor) for c in result.candidates]
    assert keys == sorted(keys)
    assert all(c.bit_flips == result.minimum_flips for c in result.candidates)


def test_nearest_overflow():
    from qrflip.qr import CapacityOverflowError
    with pytest.raises(CapacityOverflowError):
        nearest_message(b"x" * 18, V1L)


def test_nearest_workers_match_single_thread():
    a = nearest_message(b"thread determinism check", QrConfig(2, "M"), "all", workers=1)
    b = nearest_message(b"thread determinism check", QrConfig(2, "M"), "all", workers=3)
    assert a == b


def test_fast_costs_match_reencoding_route():
    # the delta-response kernel must agree with literally re-encoding the
    # changed text and planning against it, including across block seams
    from qrflip.attack import _search_context
    rng = random.Random(77)
    for version, lv in [(1, "Q"), (2, "L"), (3, "Q"), (3, "H")]:
        cfg = QrConfig(version, lv)
        cap = capacity(version, lv)
        text = bytes(rng.randrange(256) for _ in range(cap))
        ctx = _search_context(version, lv)
        for _ in range(25):
            p = rng.randrange(cap)
            v = rng.randrange(1, 256)
            fast = int(ctx.costs_for_position(p)[v - 1])
            assert fast == candidate_cost_by_reencoding(text, p, v, cfg)


def test_fast_costs_match_reencoding_at_block_seam():
    # v3-Q splits data 17 | 17: position 15 spans both blocks
    from qrflip.attack import _search_context
    cfg = QrConfig(3, "Q")
    text = bytes(range(32))
    ctx = _search_context(3, "Q")
    for v in (0x11, 0xF0, 0x0F, 0xA5, 0x01):
        fast = int(ctx.costs_for_position(15)[v - 1])
        assert fast == candidate_cost_by_reencoding(text, 15, v, cfg)


def test_candidate_cost_is_text_independent():
    # the conjectured constant cost: same (position, xor), any text
    rng = random.Random(4242)
    cfg = QrConfig(1, "L")
    p, v = 9, 0x5A
    costs = set()
    for _ in range(50):
        text = bytes(rng.randrange(256) for _ in range(17))
        costs.add(candidate_cost_by_reencoding(text, p, v, cfg))
    assert len(costs) == 1


# -- generalization tables -------------------------------------------------------


def test_table_v1_rows():
    expected = {
        "L": ([(14, (0x01,)), (15, (0x40, 0x80))], 7),
        "M": ([(1, (0x4B,))], 9),
        "Q": ([(2, (0x0C,))], 14),
        "H": ([(0, (0x12, 0x24)), (3, (0x14,)), (4, (0x5B,)),
               (5, (0x61, 0xC2))], 20),
    }
    for lv, (rows, flips) in expected.items():
        got = generalization_table(1, lv)
        assert [(r.position, r.xors) for r in got] == rows
        assert all(r.bit_flips == flips for r in got)


def test_table_v2_rows():
    expected = {
        "L": ([(3, (0x26, 0x4C)), (19, (0x4B,))], 9),
        "M": ([(0, (0x54, 0xA8))], 15),
        "Q": ([(2, (0x04,)), (6, (0x01,)), (11, (0x41,))], 23),
        "H": ([(4, (0x88,))], 30),
    }
    for lv, (rows, flips) in expected.items():
        got = generalization_table(2, lv)
        assert [(r.position, r.xors) for r in got] == rows
        assert all(r.bit_flips == flips for r in got)


def test_table_v3_multiblock_includes_mirror_rows():
    # two identical 18-parity blocks: each listed row recurs one block later
    got = generalization_table(3, "Q")
    assert [(r.position, r.xors, r.bit_flips) for r in got] == [
        (3, (0x9A,), 18), (20, (0x9A,), 18)]
