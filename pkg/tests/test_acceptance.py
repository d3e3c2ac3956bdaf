"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Every tolerance here is exact: the library does no floating-point
arithmetic, so all assertions are equalities and order comparisons.
"""

import math
import random
import time

import pytest

from quasieuclid import (
    X,
    ZERO,
    RingContext,
    RingElement,
    adversarial_pair,
    build_chain,
    compare_to_qe,
    constant,
    degree_retention_check,
    fibonacci_witness,
    hat,
    hensel,
    log_generic,
    non_ufd_witness,
    phi,
    qdiv,
    scan_sh,
)
from _corpus import TAU_SPECS, integer_chain, member_pair, ring_chain

SEED = 20240811


def _report(number: int, name: str) -> None:
    print(f"[acceptance] criterion {number} ({name}): PASS")


@pytest.fixture(scope="module")
def qe_corpus():
    """1,000 positive member pairs per tau with their canonical chains."""
    rng = random.Random(SEED)
    corpus = []
    elapsed = 0.0
    for name, make in TAU_SPECS.items():
        ctx = RingContext(make())
        for _ in range(1000):
            a, b = member_pair(ctx, rng)
            start = time.perf_counter()
            chain = ctx.qe_chain(a, b, max_steps=200)
            elapsed += time.perf_counter() - start
            corpus.append((name, ctx, a, b, chain))
    return corpus, elapsed


@pytest.fixture(scope="module")
def int_chains():
    rng = random.Random(SEED + 1)
    return [integer_chain(rng) for _ in range(1000)]


def test_criterion_1_termination_and_norm_descent(qe_corpus):
    corpus, elapsed = qe_corpus
    assert len(corpus) == 5000
    for name, ctx, a, b, chain in corpus:
        assert chain.terminating
        assert chain.length <= 200
        pairs = [(a, b)]
        cur = b
        for r in chain.remainders:
            pairs.append((cur, r))
            cur = r
        norms = [phi(x, y) for x, y in pairs]
        for before, after in zip(norms, norms[1:]):
            assert after < before, (name, str(a), str(b))
    assert elapsed < 60.0, f"chains took {elapsed:.1f}s, budget is 60s"
    _report(1, f"termination & norm descent, 5000 chains in {elapsed:.1f}s")


def test_criterion_2_division_contract_and_branches(qe_corpus):
    corpus, _ = qe_corpus
    exact_quotient_branch = 0
    corrected_branch = 0
    for name, ctx, a, b, chain in corpus:
        prev, cur = a, b
        for p, s in zip(chain.quotients, chain.remainders):
            assert p * cur + s == prev
            assert ZERO <= s < abs(cur)
            assert ctx.is_member(p) and ctx.is_member(s)
            # classify the branch independently of the implementation:
            # the first branch fires when the rational quotient already
            # lies in the ring and the raw remainder is negative
            pt, st = qdiv(prev, cur)
            if ctx.is_member(pt) and st.lc < 0:
                exact_quotient_branch += 1
            else:
                corrected_branch += 1
            prev, cur = cur, s
    assert exact_quotient_branch >= 50
    assert corrected_branch >= 50
    _report(
        2,
        f"division contract; branches {exact_quotient_branch}/{corrected_branch}",
    )


def test_criterion_3_gcd_oracle_equivalence():
    def egcd(a, b):
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        return old_r, old_s, old_t

    rng = random.Random(SEED + 2)
    ctx = RingContext(constant(0))
    for _ in range(500):
        a = rng.randint(1, 10**6)
        b = rng.randint(1, 10**6)
        g, u, v = ctx.gcd_bezout(a, b)
        og, ou, ov = egcd(a, b)
        assert int(g) == og == math.gcd(a, b)
        assert (int(u), int(v)) == (ou, ov)
        assert int(u) * a + int(v) * b == int(g)
    _report(3, "gcd equals extended-Euclid oracle on 500 pairs")


def test_criterion_4_chain_rewriting(int_chains):
    from quasieuclid import normalize_positive, rewrite_measure

    for chain in int_chains:
        n0, _ = rewrite_measure(chain)
        result = normalize_positive(chain)
        assert abs(result.last_remainder) == abs(chain.last_remainder)
        assert result.positive_tail
        assert result.length <= 2 * chain.length - 1
        assert result.length <= chain.length + n0
    _report(4, "1000 chains renormalized within both length bounds")


def test_criterion_5_two_for_one_bound(int_chains):
    zero_ctx = RingContext(constant(0))
    checked = 0
    for chain in int_chains:
        report = compare_to_qe(zero_ctx, chain)
        assert all(row.ok for row in report.rows)
        checked += len(report.rows)

    rng = random.Random(SEED + 3)
    for name in ("constant(0)", "constant(1)", "stream(42)"):
        ctx = RingContext(TAU_SPECS[name]())
        for _ in range(100):
            chain = ring_chain(ctx, rng)
            report = compare_to_qe(ctx, chain)
            assert all(row.ok for row in report.rows), (name, str(chain))
            checked += len(report.rows)

    for k in (1, 2, 3):
        pair, chain = fibonacci_witness(k)
        report = compare_to_qe(zero_ctx, chain)
        f = (chain.b,) + report.canonical.remainders
        for l in range(1, k + 1):
            assert abs(chain.remainders[l - 1]) == f[2 * l]
    _report(5, f"two-for-one bound on {checked} indices; witness equality at k=1,2,3")


def test_criterion_6_adversary_grid():
    bs = [X, X + 2, RingElement((1, 0, 1))]
    for name, make in TAU_SPECS.items():
        ctx = RingContext(make())
        for k in (1, 2, 3):
            for b in bs:
                a = adversarial_pair(ctx, k, b)
                report = degree_retention_check(ctx, k, a, b)
                assert report.verdict, (name, k, str(b))
                assert len(report.degrees) == 2 * k
                assert all(dg >= b.degree for dg in report.degrees)
                # hat-projection reconstructs an integer chain from (c, d)
                qe = ctx.qe_chain(a, b)
                hats = [hat(report.d, b, r) for r in qe.remainders[: 2 * k]]
                assert all(h.denominator == 1 and h != 0 for h in hats)
                assert hat(report.d, b, a) == report.c
                assert hat(report.d, b, b) == report.d
                quotients = [int(q) for q in qe.quotients[: 2 * k]]
                projected = build_chain(report.c, report.d, quotients)
                assert [int(h) for h in hats] == [int(r) for r in projected.remainders]
    _report(6, "degree retention and hat projection on the 45-cell grid")


def test_criterion_7_membership_facts():
    half_parabola = RingElement((0, 1, 1), 2)
    half_x = RingElement((0, 1), 2)
    for name, make in TAU_SPECS.items():
        ctx = RingContext(make())
        assert ctx.is_member(half_parabola), name
        for n in (2, 3, 5, 42):
            assert not ctx.is_member(RingElement((1,), n)), name
    even = RingContext(constant(0)).is_member(half_x)
    odd = RingContext(constant(1)).is_member(half_x)
    assert even != odd and even
    _report(7, "membership facts across all taus")


def test_criterion_8_classification_witnesses():
    ctx0 = RingContext(constant(0))
    witness = non_ufd_witness(ctx0, X, 4)
    assert witness is not None
    assert list(witness.chain) == [
        RingElement((0, 1), 2),
        RingElement((0, 1), 4),
        RingElement((0, 1), 8),
        RingElement((0, 1), 16),
    ]
    for e in witness.chain:
        assert ctx0.is_member(e)

    quad = RingElement((-2, 0, 1))
    ctx_h = RingContext(hensel((-2, 0, 1), constant(1)))
    scan = scan_sh(ctx_h, quad, 50, 8)
    assert scan.saturated_primes() == (7, 17, 23, 31, 41, 47)
    witness = non_ufd_witness(ctx_h, quad, 3)
    assert witness is not None
    assert set(witness.primes) <= {7, 17, 23, 31, 41, 47}
    seq = [quad, *witness.chain]
    for bigger, smaller in zip(seq, seq[1:]):
        assert ctx_h.is_member(smaller)
        assert ctx_h.divides(smaller, bigger)
        assert not ctx_h.divides(bigger, smaller)

    ctx_log = RingContext(log_generic(7))
    for h in (X, X + 1, RingElement((1, 0, 1))):
        assert non_ufd_witness(ctx_log, h, 2, p_max=50, k_max=8) is None
    _report(8, "classification witnesses and non-witnesses")
