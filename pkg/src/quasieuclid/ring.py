"""The ring of fractions h/n in Q[x] licensed by p-adic residue conditions.

Fixing one p-adic integer tau_p per prime, the element h/n (in lowest
terms) belongs to the ring exactly when h(tau_p) is divisible by p^v for
every prime power p^v dividing n.  The ring is discretely ordered, closed
under a division with remainder whose remainder lies in [0, |r|), and
therefore carries terminating division chains and Bezout GCDs.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .chains import DivisionChain
from .padic import TauSpec, crt_combine, factorize, poly_eval_mod
from .poly import ONE, ZERO, RingElement, as_element, qdiv


class NotMemberError(ValueError):
    """An element fails the residue condition at a prime of its denominator."""

    def __init__(self, element: RingElement, prime: int, precision: int, residue: int):
        self.element = element
        self.prime = prime
        self.precision = precision
        self.residue = residue
        super().__init__(
            f"{element} is not in the ring: numerator evaluates to "
            f"{residue} mod {prime}^{precision}, expected 0"
        )


class StepBudgetExceeded(RuntimeError):
    """A division chain failed to terminate; this indicates a library bug,
    not bad input."""


class NormTuple(NamedTuple):
    """Value of the termination norm on a pair, ordered lexicographically."""

    delta: int        # 1 when |q| <= |r|, else 0
    deg_q: int        # deg q + 1
    deg_r: int        # deg r
    denom: int        # least common denominator of q and r
    scaled_lc: int    # denom * |lc(q)|, an integer by construction


def phi(q: RingElement, r: RingElement) -> NormTuple:
    """The five-component norm of the pair (q, r); all-zero when r = 0.

    Strictly decreases from (q, r) to (r, s) under division with remainder,
    which is what forces chains to terminate.  Depends only on |q|, |r|.
    """
    q, r = as_element(q), as_element(r)
    if r.is_zero:
        return NormTuple(0, 0, 0, 0, 0)
    delta = 1 if abs(q) <= abs(r) else 0
    denom = q.den // math.gcd(q.den, r.den) * r.den
    scaled = abs(q.num[-1]) * (denom // q.den) if q.num else 0
    return NormTuple(delta, q.degree + 1, r.degree, denom, scaled)


class RingContext:
    """A choice of tau plus memoized membership verdicts.

    Contexts are safe to share between threads for reads: all operations
    are deterministic in (tau, inputs), and cache writes are idempotent.
    """

    def __init__(self, tau: TauSpec):
        self.tau = tau
        self._members: dict[RingElement, bool] = {}

    # -- membership -------------------------------------------------------

    def membership_witness(self, e: RingElement) -> tuple[int, int, int] | None:
        """None when e belongs to the ring, else (p, v, residue) showing
        the failed congruence at the prime p of the denominator."""
        for p, v in factorize(e.den):
            r = poly_eval_mod(e.num, self.tau, p, v)
            if r.value:
                return p, v, r.value
        return None

    def is_member(self, e) -> bool:
        e = as_element(e)
        cached = self._members.get(e)
        if cached is None:
            cached = self.membership_witness(e) is None
            self._members[e] = cached
        return cached

    def make_element(self, coeffs, den: int = 1) -> RingElement:
        """Validated constructor: normalize, then require membership."""
        e = coeffs if isinstance(coeffs, RingElement) else RingElement(coeffs, den)
        if not self.is_member(e):
            w = self.membership_witness(e)
            assert w is not None
            raise NotMemberError(e, *w)
        return e

    # -- division with remainder ---------------------------------------------

    def divmod(self, q: RingElement, r: RingElement) -> tuple[RingElement, RingElement]:
        """The unique (p, s) in the ring with q = p*r + s and 0 <= s < |r|.

        Both inputs must be ring members with r != 0; the outputs are then
        members as well.  The remainder always lands in [0, |r|),
        matching integer div/mod semantics.
        """
        q, r = as_element(q), as_element(r)
        if r.is_zero:
            raise ZeroDivisionError("division by zero in the ring")
        if r < ZERO:
            p, s = self.divmod(q, -r)
            return -p, s
        if q >= ZERO:
            return self._divmod_nonneg(q, r)
        p, s = self._divmod_nonneg(-q, r)
        if s.is_zero:
            return -p, s
        return -p - ONE, r - s

    def _divmod_nonneg(self, q: RingElement, r: RingElement) -> tuple[RingElement, RingElement]:
        # Divide in Q[x], then repair the quotient so that it lands in the
        # ring: with the rational quotient written as p'/m in lowest terms,
        # the unique correction k in [0, m) has k = p'(tau_p) mod p^e for
        # every prime power p^e dividing m.
        pt, st = qdiv(q, r)
        m = pt.den
        if m == 1:
            k = 0
        elif pt.degree <= 0:
            # constant quotient: the congruences collapse to k = p' mod m
            k = pt.num[0] % m if pt.num else 0
        else:
            parts = [
                (p**e, poly_eval_mod(pt.num, self.tau, p, e).value)
                for p, e in factorize(m)
            ]
            k, _ = crt_combine(parts)
        if k == 0:
            if st.lc < 0:
                return pt - ONE, st + r
            return pt, st
        shift = RingElement((k,), m)
        return pt - shift, st + shift * r

    # -- chains, gcd, divisibility -----------------------------------------

    def qe_chain(self, a, b, max_steps: int = 10_000) -> DivisionChain:
        """Iterate division with remainder from (a, b) until remainder 0.

        Termination is guaranteed by the norm descent; max_steps is a
        safety valve whose breach signals a defect, not a usage error.
        """
        a, b = self.make_element(as_element(a)), self.make_element(as_element(b))
        if b.is_zero:
            raise ZeroDivisionError("chain requires b != 0")
        quots: list[RingElement] = []
        rems: list[RingElement] = []
        prev, cur = a, b
        for _ in range(max_steps):
            p, s = self.divmod(prev, cur)
            quots.append(p)
            rems.append(s)
            if s.is_zero:
                return DivisionChain(a, b, tuple(quots), tuple(rems))
            prev, cur = cur, s
        raise StepBudgetExceeded(
            f"division chain from ({a}, {b}) exceeded {max_steps} steps"
        )

    def gcd_bezout(self, a, b) -> tuple[RingElement, RingElement, RingElement]:
        """(g, u, v) with g = u*a + v*b, g > 0, and g dividing both a and b.

        Computed by accumulating the 2x2 elementary step matrices along the
        division chain; on integers this reproduces the extended Euclidean
        algorithm exactly.
        """
        a, b = as_element(a), as_element(b)
        if a.is_zero and b.is_zero:
            raise ValueError("gcd(0, 0) is undefined")
        if b.is_zero:
            g, u = (a, ONE) if a > ZERO else (-a, -ONE)
            return g, u, ZERO
        chain = self.qe_chain(a, b)
        m00, m01, m10, m11 = ONE, ZERO, ZERO, ONE
        for q in chain.quotients:
            m00, m01, m10, m11 = m10, m11, m00 - q * m10, m01 - q * m11
        g, u, v = m00 * a + m01 * b, m00, m01
        if g < ZERO:
            g, u, v = -g, -u, -v
        return g, u, v

    def divides(self, a, b) -> bool:
        """Whether a divides b in the ring: b/a exact in Q[x] and a member."""
        a, b = as_element(a), as_element(b)
        if a.is_zero:
            raise ZeroDivisionError("divisibility by zero is undefined")
        t, rem = qdiv(b, a)
        return rem.is_zero and self.is_member(t)
