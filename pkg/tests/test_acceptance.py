"""Acceptance suite: one criterion per test, one printed verdict line each.

Every check is exact integer or rational arithmetic; the only tolerances
are the pinned wall-clock budgets, asserted inside the criterion bodies.
Run with `pytest -s tests/test_acceptance.py` to see the verdict lines.
"""

from __future__ import annotations

import functools
import random
import time
import warnings

from fourfold import (
    CP2,
    CharNumbers,
    ChernNumbers,
    FormalClass,
    HirzebruchSurface,
    NegativeC1SquareWarning,
    Parity,
    SWManifold,
    blowup,
    blowup_classes,
    char_numbers,
    char_to_chern,
    chern_to_char,
    connected_sum,
    double_cover_invariants,
    einstein_obstructed,
    freedman_homeomorphic,
    hitchin_thorpe,
    hitchin_thorpe_equality,
    horikawa,
    intersect,
    positive_negative_pair,
    theorem_pair,
    type_from_char,
)
from fourfold.cli import main
from fourfold.hirzebruch import DivisorClass
from fourfold.topology import S4

from helpers import pairing_oracle, random_type, random_type_small


def criterion(cid: str, description: str):
    """Print exactly one [PASS]/[FAIL] line per criterion, then let any
    assertion propagate to pytest."""

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                print(f"[FAIL] {cid} {description} ({type(exc).__name__})")
                raise
            suffix = f" ({detail})" if detail else ""
            print(f"[PASS] {cid} {description}{suffix}")

        return wrapper

    return deco


@criterion("C1", "horikawa double covers hit (c1^2, chi) = (2i+4, i+5) for i <= 10000")
def test_c1_horikawa_closed_form():
    budget = 1.0
    start = time.perf_counter()
    for i in range(10001):
        base = HirzebruchSurface(i)
        branch = 6 * base.section() + (2 * (2 * i + 3)) * base.fiber()
        assert double_cover_invariants(base, branch) == ChernNumbers(2 * i + 4, i + 5)
        record = horikawa(i)
        assert record.chern == ChernNumbers(2 * i + 4, i + 5)
        assert not record.spin
        assert record.ample_canonical
        assert record.chern.c1sq == 2 * record.chern.chi - 6
    elapsed = time.perf_counter() - start
    assert elapsed < budget
    return f"{elapsed:.2f}s < {budget:.2f}s"


@criterion("C2", "pair family verified for i <= 1000 with threshold margin exactly 1")
def test_c2_theorem_pair_family():
    budget = 1.0
    start = time.perf_counter()
    for i in range(1001):
        pair = theorem_pair(i)
        assert pair.verified
        assert pair.checks.homeomorphic
        assert pair.x_topo.parity is Parity.ODD
        assert pair.obstruction_margin == 1
        assert pair.ht_margin == 2 * i + 4
        assert pair.below_very_ample_bound
        assert pair.z.chern.c1sq == 2 * pair.z.chern.chi - 6
        assert pair.z.chern.c1sq < 3 * pair.z.chern.chi
        assert pair.k == 4 * i + 9
    elapsed = time.perf_counter() - start
    assert elapsed < budget
    return f"{elapsed:.2f}s < {budget:.2f}s"


@criterion("C3", "the family's 1001 homeomorphism types are pairwise distinct")
def test_c3_family_injectivity():
    budget = 1.0
    start = time.perf_counter()
    types = set()
    chars = set()
    for i in range(1001):
        y = type_from_char(chern_to_char(ChernNumbers(6 * i + 13, i + 5)), Parity.ODD)
        x = blowup(y, 4 * i + 9)
        c = char_numbers(x)
        assert c == CharNumbers(10 * i + 56, -6 * i - 36)
        types.add(x)
        chars.add(c)
    assert len(types) == 1001
    assert len(chars) == 1001
    elapsed = time.perf_counter() - start
    assert elapsed < budget
    return f"1001 distinct (e, sigma) pairs, {elapsed:.2f}s < {budget:.2f}s"


@criterion("C4", "opposite-sign Einstein pair: (11, -7) odd on both sides, 22 > 21")
def test_c4_positive_negative_pair():
    pair = positive_negative_pair()
    assert char_numbers(pair.x_topo) == CharNumbers(11, -7)
    assert char_numbers(pair.y_topo) == CharNumbers(11, -7)
    assert pair.x_topo.parity is Parity.ODD and pair.y_topo.parity is Parity.ODD
    assert pair.x_topo == blowup(CP2, 8)
    assert pair.y_chern == ChernNumbers(1, 1)
    assert pair.homeomorphic
    assert pair.strict_hitchin_thorpe
    c = char_numbers(pair.x_topo)
    assert 2 * c.e == 22 and 3 * abs(c.sigma) == 21
    assert "Tian-Yau" in pair.x_label and "Aubin-Yau" in pair.y_label


@criterion("C5", "blowup class counts are exactly 2^k through k = 16, staged or not")
def test_c5_blowup_class_counts():
    budget = 1.0
    start = time.perf_counter()
    seed = FormalClass(1, ())
    for k in range(17):
        assert len(blowup_classes([seed], k)) == 2**k
    staged = blowup_classes(blowup_classes([seed], 7), 9)
    assert staged == blowup_classes([seed], 16)
    assert len(staged) == 65536
    elapsed = time.perf_counter() - start
    assert elapsed < budget
    return f"2^16 = 65536 classes, staged 7+9 equals one-shot 16, {elapsed:.2f}s < {budget:.2f}s"


@criterion("C6", "randomized identity suites hold across 230k samples")
def test_c6_property_suites():
    budget = 10.0
    rng = random.Random(461)
    start = time.perf_counter()

    # Chern <-> characteristic conversions invert each other: 100k samples.
    for _ in range(100_000):
        c1sq = rng.randrange(-300, 301)
        chi = rng.randrange(-100, 101)
        chern = ChernNumbers(c1sq, chi)
        assert char_to_chern(chern_to_char(chern)) == chern
        e = rng.randrange(-200, 201)
        sigma = 4 * rng.randrange(-50, 51) - e  # keep e + sigma divisible by 4
        char = CharNumbers(e, sigma)
        assert chern_to_char(char_to_chern(char)) == char

    # Connected sum is a commutative monoid with unit S^4: 10k triples.
    for _ in range(10_000):
        a, b, c = (random_type(rng, max_rank=20) for _ in range(3))
        assert connected_sum(a, S4) == a
        assert connected_sum(a, b) == connected_sum(b, a)
        assert connected_sum(connected_sum(a, b), c) == connected_sum(a, connected_sum(b, c))

    # Homeomorphism is the equality of (b2+, b2-, parity): 10k triples.
    for _ in range(10_000):
        a, b, c = (random_type_small(rng) for _ in range(3))
        assert freedman_homeomorphic(a, a)
        assert freedman_homeomorphic(a, b) == freedman_homeomorphic(b, a)
        if freedman_homeomorphic(a, b) and freedman_homeomorphic(b, c):
            assert freedman_homeomorphic(a, c)
        assert freedman_homeomorphic(a, b) == (
            (a.b2_plus, a.b2_minus, a.parity) == (b.b2_plus, b.b2_minus, b.parity)
        )

    # Divisor pairing against an explicit Gram-matrix oracle: 100k pairs,
    # with symmetry on each and bilinearity spot-checked on every tenth.
    for n in range(100_000):
        index = rng.randrange(0, 12)
        a1, b1, a2, b2 = (rng.randrange(-30, 31) for _ in range(4))
        d1 = DivisorClass(a1, b1, index)
        d2 = DivisorClass(a2, b2, index)
        assert intersect(d1, d2) == pairing_oracle(index, a1, b1, a2, b2)
        assert intersect(d1, d2) == intersect(d2, d1)
        if n % 10 == 0:
            d3 = DivisorClass(rng.randrange(-30, 31), rng.randrange(-30, 31), index)
            m = rng.randrange(-5, 6)
            assert intersect(d1 + d2, d3) == intersect(d1, d3) + intersect(d2, d3)
            assert intersect(m * d1, d3) == m * intersect(d1, d3)

    # Obstruction is monotone in the blowup count: 10k samples.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NegativeC1SquareWarning)
        samples = 0
        while samples < 10_000:
            t = random_type(rng, max_rank=20)
            if t.b2_plus < 2:
                continue
            samples += 1
            y = SWManifold(t, has_nonzero_sw=True)
            k = rng.randrange(0, 40)
            here = einstein_obstructed(y, k)
            further = einstein_obstructed(y, k + 1)
            if here.obstructed:
                assert further.obstructed
            assert further.threshold_margin == here.threshold_margin + 3

    elapsed = time.perf_counter() - start
    assert elapsed < budget
    return f"{elapsed:.2f}s < {budget:.2f}s"


@criterion("C7", "the K3 characteristic numbers sit exactly on the borderline 48 = 48")
def test_c7_k3_borderline():
    c = chern_to_char(ChernNumbers(0, 2))
    assert c == CharNumbers(24, -16)
    assert 2 * c.e == 48 and 3 * abs(c.sigma) == 48
    assert hitchin_thorpe(c)
    assert not hitchin_thorpe(c, strict=True)
    assert hitchin_thorpe_equality(c)


@criterion("C8", "scan over chi <= 200 is byte-identical across runs")
def test_c8_scan_determinism(capsys):
    budget = 5.0
    argv = ["scan", "--chi-min", "1", "--chi-max", "200", "--format", "csv"]

    start = time.perf_counter()
    assert main(list(argv)) == 0
    first = capsys.readouterr().out
    first_elapsed = time.perf_counter() - start
    assert first_elapsed < budget

    start = time.perf_counter()
    assert main(list(argv)) == 0
    second = capsys.readouterr().out
    second_elapsed = time.perf_counter() - start
    assert second_elapsed < budget

    assert first == second
    data_rows = [
        line for line in first.splitlines() if line and not line.startswith("#")
    ]
    assert len(data_rows) > 10_000  # header plus one row per admissible lattice point
    return f"{len(data_rows) - 1} rows, {first_elapsed:.2f}s and {second_elapsed:.2f}s < {budget:.2f}s"
