import pytest

from quasieuclid import (
    X,
    ZERO,
    RingContext,
    RingElement,
    adversarial_pair,
    as_element,
    build_chain,
    constant,
    degree_retention_check,
    fib_pair_for,
    hat,
    integer_mod,
    log_generic,
    stream,
)

TAUS = [constant(0), constant(1), constant(5), stream(42), log_generic(7)]


def _euclid_length(c, d):
    steps = 0
    while d:
        c, d = d, c % d
        steps += 1
    return steps


# -- fibonacci pairs ------------------------------------------------------------


def test_fib_pair_values():
    assert fib_pair_for(1) == (5, 3)
    assert fib_pair_for(2) == (13, 8)
    assert fib_pair_for(3) == (34, 21)


def test_fib_pair_chain_length_guarantee():
    for k in range(1, 8):
        c, d = fib_pair_for(k)
        assert _euclid_length(c, d) > 2 * k


def test_fib_pair_rejects_nonpositive_k():
    with pytest.raises(ValueError):
        fib_pair_for(0)


# -- integer offsets ---------------------------------------------------------------


def test_integer_mod_examples():
    assert integer_mod(RingContext(constant(0)), X, 3) == 0
    assert integer_mod(RingContext(constant(1)), X, 3) == 1
    assert integer_mod(RingContext(stream(42)), as_element(7), 4) == 3


def test_integer_mod_trivial_modulus():
    assert integer_mod(RingContext(constant(5)), X, 1) == 0


def test_integer_mod_divides_in_ring():
    # the defining property: (b - beta)/d is a member, and beta in [0, d)
    cases = [
        (constant(0), X, 6),
        (constant(1), X + 2, 15),
        (constant(5), RingElement((0, 1, 1), 2), 21),
        (stream(42), RingElement((0, 1, 1), 2), 8),
        (log_generic(7), X, 12),
    ]
    for tau, b, d in cases:
        ctx = RingContext(tau)
        beta = integer_mod(ctx, b, d)
        assert 0 <= beta < d
        shifted = b - beta
        assert ctx.is_member(RingElement(shifted.num, shifted.den * d))


def test_integer_mod_uniqueness_by_enumeration():
    ctx = RingContext(constant(5))
    b, d = X + 2, 12
    beta = integer_mod(ctx, b, d)
    hits = []
    for t in range(d):
        shifted = b - t
        if ctx.is_member(RingElement(shifted.num, shifted.den * d)):
            hits.append(t)
    assert hits == [beta]


# -- adversarial pairs ----------------------------------------------------------------


def test_adversarial_pair_examples():
    assert adversarial_pair(RingContext(constant(0)), 1, X) == RingElement((0, 5), 3)
    assert adversarial_pair(RingContext(constant(1)), 1, X) == RingElement((-5, 5), 3)


def test_adversarial_pair_rejects_constants():
    with pytest.raises(ValueError):
        adversarial_pair(RingContext(constant(0)), 1, as_element(5))


def test_adversarial_pair_negates_cleanly():
    ctx = RingContext(constant(0))
    assert adversarial_pair(ctx, 1, -X) == -adversarial_pair(ctx, 1, X)


def test_degree_retention_frozen_case():
    ctx = RingContext(constant(0))
    a = adversarial_pair(ctx, 1, X)
    report = degree_retention_check(ctx, 1, a, X)
    assert (report.c, report.d, report.beta) == (5, 3, 0)
    assert report.degrees == (1, 1)
    assert report.verdict


def test_degree_retention_grid():
    bs = [X, X + 2, RingElement((0, 1, 1), 2)]
    for tau in TAUS:
        ctx = RingContext(tau)
        for k in (1, 2, 3):
            for b in bs:
                a = adversarial_pair(ctx, k, b)
                report = degree_retention_check(ctx, k, a, b)
                assert report.verdict, (tau.to_json(), k, str(b))
                assert all(dg >= b.degree for dg in report.degrees)
                assert len(report.degrees) == 2 * k


def test_degree_retention_rejects_foreign_pairs():
    ctx = RingContext(constant(0))
    with pytest.raises(ValueError):
        degree_retention_check(ctx, 1, X + 1, X)


def test_report_json_shape():
    ctx = RingContext(constant(0))
    a = adversarial_pair(ctx, 1, X)
    data = degree_retention_check(ctx, 1, a, X).to_json()
    assert set(data) == {"k", "b", "c", "d", "beta", "a", "degrees", "verdict"}
    assert data["verdict"] is True


# -- hat projection -----------------------------------------------------------------


def test_hat_examples():
    assert hat(3, X, RingElement((0, 5), 3)) == 5
    assert hat(3, X, ZERO) == 0
    assert hat(3, X, RingElement((0, 2), 3)) == 2
    with pytest.raises(ZeroDivisionError):
        hat(3, ZERO, X)


def test_hat_projects_canonical_chain_to_integer_chain():
    for tau in TAUS:
        ctx = RingContext(tau)
        for k in (1, 2):
            for b in (X, RingElement((0, 1, 1), 2)):
                a = adversarial_pair(ctx, k, b)
                report = degree_retention_check(ctx, k, a, b)
                assert report.verdict
                qe = ctx.qe_chain(a, b)
                quots = qe.quotients[: 2 * k]
                rems = qe.remainders[: 2 * k]
                assert hat(report.d, b, a) == report.c
                assert hat(report.d, b, b) == report.d
                hats = [hat(report.d, b, r) for r in rems]
                assert all(h.denominator == 1 for h in hats)
                int_quots = [int(q) for q in quots]
                projected = build_chain(report.c, report.d, int_quots)
                assert [int(h) for h in hats] == [int(r) for r in projected.remainders]
                assert all(h != 0 for h in hats)
