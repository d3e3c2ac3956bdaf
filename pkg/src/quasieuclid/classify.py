"""Bounded residue-zero scans and non-UFD divisibility witnesses.

For a nonzero integer polynomial h, the pairs (p, k) with h(tau_p) = 0
mod p^k decide how far h can be divided inside the ring.  A bounded scan
can refute unique factorization (by exhibiting an infinite-looking descent)
but can never confirm it, so absence of a witness is always reported as
inconclusive rather than as a classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .padic import (
    PredicateTau,
    TauSpec,
    is_prime,
    log_generic,
    piecewise,
    poly_eval_mod,
    primes_upto,
    zero,
)
from .poly import RingElement, as_element
from .ring import RingContext


@dataclass(frozen=True)
class PrimeHit:
    """One prime with a residue zero: the deepest k <= k_max with
    h(tau_p) = 0 mod p^k, whether that depth hit the scan ceiling, and
    whether the spec certifies the zero as exact (all precisions)."""

    prime: int
    depth: int
    saturated: bool
    exact: bool


@dataclass(frozen=True)
class ShScan:
    """Residue zeros of h within the box p <= p_max, k <= k_max."""

    h: RingElement
    p_max: int
    k_max: int
    hits: tuple[PrimeHit, ...]

    def hit_primes(self) -> tuple[int, ...]:
        return tuple(hit.prime for hit in self.hits)

    def saturated_primes(self) -> tuple[int, ...]:
        return tuple(hit.prime for hit in self.hits if hit.saturated)

    def exact_primes(self) -> tuple[int, ...]:
        return tuple(hit.prime for hit in self.hits if hit.exact)

    def to_json(self) -> dict:
        return {
            "h": self.h.to_json(),
            "p_max": self.p_max,
            "k_max": self.k_max,
            "hits": [
                {
                    "prime": hit.prime,
                    "depth": hit.depth,
                    "saturated": hit.saturated,
                    "exact": hit.exact,
                }
                for hit in self.hits
            ],
        }


def scan_sh(ctx: RingContext, h: RingElement, p_max: int, k_max: int) -> ShScan:
    """Enumerate residue zeros of h over all primes p <= p_max, reporting
    the maximal depth per prime up to k_max.

    h must be a nonzero integer polynomial.  Depth k_max (saturation) is
    evidence of an exact zero only when the spec certifies it; pseudorandom
    digit streams never do.
    """
    h = as_element(h)
    if h.is_zero:
        raise ValueError("scan requires h != 0")
    if h.den != 1:
        raise ValueError("scan requires an integer polynomial")
    if p_max < 2 or k_max < 1:
        raise ValueError("scan box must satisfy p_max >= 2, k_max >= 1")
    hits = []
    for p in primes_upto(p_max):
        val = poly_eval_mod(h.num, ctx.tau, p, k_max).value
        if val == 0:
            depth = k_max
        else:
            depth = 0
            while val % p == 0:
                val //= p
                depth += 1
        if depth >= 1:
            hits.append(
                PrimeHit(p, depth, depth == k_max, ctx.tau.is_exact_root(h.num, p))
            )
    return ShScan(h, p_max, k_max, tuple(hits))


@dataclass(frozen=True)
class NonUfdWitness:
    """A strictly descending divisibility chain below h, refuting unique
    factorization.  kind is "prime_power" (h/p, h/p^2, ...) or
    "distinct_primes" (h/p1, h/(p1 p2), ...)."""

    h: RingElement
    kind: str
    primes: tuple[int, ...]
    chain: tuple[RingElement, ...]

    def to_json(self) -> dict:
        return {
            "h": self.h.to_json(),
            "kind": self.kind,
            "primes": list(self.primes),
            "chain": [e.to_json() for e in self.chain],
        }


def non_ufd_witness(
    ctx: RingContext,
    h: RingElement,
    depth: int,
    p_max: int = 50,
    k_max: int = 8,
) -> NonUfdWitness | None:
    """Search the scan box for a descending divisibility chain of the given
    depth below h.

    A certified exact zero at some prime yields the prime-power chain at
    the smallest such prime; failing that, depth-many distinct hit primes
    yield the distinct-primes chain.  Returns None when neither pattern is
    present, which is inconclusive by design.
    """
    h = as_element(h)
    if h.is_zero:
        raise ValueError("witness requires h != 0")
    if h.den != 1:
        raise ValueError("witness requires an integer polynomial")
    if depth < 2:
        raise ValueError("depth must be at least 2")
    scan = scan_sh(ctx, h, p_max, k_max)
    exact = scan.exact_primes()
    if exact:
        p = exact[0]
        chain = tuple(ctx.make_element(h.num, p**j) for j in range(1, depth + 1))
        return NonUfdWitness(h, "prime_power", (p,), chain)
    hit = scan.hit_primes()
    if len(hit) >= depth:
        primes = hit[:depth]
        chain = []
        product = 1
        for p in primes:
            product *= p
            chain.append(ctx.make_element(h.num, product))
        return NonUfdWitness(h, "distinct_primes", primes, tuple(chain))
    return None


def make_log_generic(seed: int) -> TauSpec:
    """Spec whose first digit at p is floor(ln p), higher digits seeded."""
    return log_generic(seed)


def make_zero_on(
    primes: Iterable[int] | Callable[[int], bool], base: TauSpec
) -> TauSpec:
    """Override tau_p = 0 on the given primes, keeping base elsewhere.

    A finite collection produces a serializable piecewise spec; a predicate
    produces a query-only spec with no JSON form.
    """
    if callable(primes):
        return PredicateTau(primes, zero(), base)
    overrides = {}
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        overrides[p] = zero()
    return piecewise(overrides, base)
