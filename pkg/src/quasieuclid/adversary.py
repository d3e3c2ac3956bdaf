"""Degree-retaining starting pairs: given a stage budget k and a positive
b of degree >= 1, produce a so that no division chain of length <= k from
(a, b) can push the remainder's degree below deg b.

The construction scales b - beta by a Fibonacci ratio c/d chosen so that no
integer chain of length <= k from (c, d) terminates; beta is the unique
offset in [0, d) making d divide b - beta in the ring.  The guarantee is
verified through the canonical chain: by the two-for-one bound, remainders
of the canonical chain through index 2k dominate the remainders of every
chain of length <= k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import fibonacci
from .padic import crt_combine, factorize, poly_eval_mod
from .poly import ZERO, RingElement, as_element
from .ring import RingContext


@dataclass(frozen=True)
class AdversaryReport:
    """Outcome of the degree-retention check for one constructed pair."""

    k: int
    b: RingElement
    c: int
    d: int
    beta: int
    a: RingElement
    degrees: tuple[int, ...]
    verdict: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "b": self.b.to_json(),
            "c": self.c,
            "d": self.d,
            "beta": self.beta,
            "a": self.a.to_json(),
            "degrees": list(self.degrees),
            "verdict": self.verdict,
        }


def _euclid_length(c: int, d: int) -> int:
    steps = 0
    while d:
        c, d = d, c % d
        steps += 1
    return steps


def fib_pair_for(k: int) -> tuple[int, int]:
    """Consecutive Fibonacci numbers (c, d) whose integer division chain is
    longer than 2k, so no integer chain of length <= k from (c, d)
    terminates.  The length requirement is asserted at runtime rather than
    trusted from the index arithmetic."""
    if k < 1:
        raise ValueError("k must be positive")
    m = 2 * k + 2
    while True:
        c, d = fibonacci(m + 1), fibonacci(m)
        if _euclid_length(c, d) > 2 * k:
            return c, d
        m += 1


def integer_mod(ctx: RingContext, b: RingElement, d: int) -> int:
    """The unique beta in [0, d) such that d divides b - beta in the ring.

    Per prime power p^e dividing d, with n the denominator of b and p^v
    its p-part, beta solves (n/p^v) * beta = h(tau_p)/p^v mod p^e; the
    results combine by Chinese remaindering.
    """
    if d < 1:
        raise ValueError("modulus must be positive")
    b = ctx.make_element(as_element(b))
    n = b.den
    parts = []
    for p, e in factorize(d):
        v = 0
        n_unit = n
        while n_unit % p == 0:
            n_unit //= p
            v += 1
        h_val = poly_eval_mod(b.num, ctx.tau, p, v + e).value
        if h_val % p**v != 0:
            raise RuntimeError("membership of b contradicts its residue (bug)")
        target = (h_val // p**v) % p**e
        beta_p = target * pow(n_unit, -1, p**e) % p**e
        parts.append((p**e, beta_p))
    beta, _ = crt_combine(parts)
    return beta


def adversarial_pair(ctx: RingContext, k: int, b: RingElement) -> RingElement:
    """a = (c/d)(b - beta) for the stage budget k; a is verified to be a
    ring member.  Negative b is handled by negating, constructing, and
    negating back."""
    b = as_element(b)
    if b.degree < 1:
        raise ValueError("b must have degree at least 1")
    if b < ZERO:
        return -adversarial_pair(ctx, k, -b)
    ctx.make_element(b)
    c, d = fib_pair_for(k)
    beta = integer_mod(ctx, b, d)
    a = RingElement((c,), d) * (b - beta)
    ctx.make_element(a)
    return a


def degree_retention_check(ctx: RingContext, k: int, a: RingElement, b: RingElement) -> AdversaryReport:
    """Run the canonical chain from (a, b) and record the degrees of its
    first 2k remainders; the verdict is True when all of them reach deg b.

    (a, b) must come from adversarial_pair with b > 0; a is re-derived and
    checked so the reported (c, d, beta) always describe the given pair.
    """
    a, b = as_element(a), as_element(b)
    if not b > ZERO:
        raise ValueError("b must be positive; negate the pair first")
    c, d = fib_pair_for(k)
    beta = integer_mod(ctx, b, d)
    expected = RingElement((c,), d) * (b - beta)
    if a != expected:
        raise ValueError("pair (a, b) was not produced by adversarial_pair")
    qe = ctx.qe_chain(a, b)
    need = 2 * k
    degrees = tuple(r.degree for r in qe.remainders[:need])
    verdict = len(degrees) == need and all(dg >= b.degree for dg in degrees)
    return AdversaryReport(k, b, c, d, beta, a, degrees, verdict)


def hat(d: int, b: RingElement, r: RingElement) -> Fraction:
    """lc(d*r)/lc(b): projects ring chains with degree pinned at deg b down
    to integer chains."""
    b, r = as_element(b), as_element(r)
    if b.is_zero:
        raise ZeroDivisionError("projection requires b != 0")
    if d < 1:
        raise ValueError("scale d must be positive")
    return d * r.lc / b.lc
