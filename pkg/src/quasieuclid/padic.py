"""Truncated p-adic arithmetic behind the ring's denominator conditions.

Every denominator test in the ring boils down to a question of the form
"is h(t) divisible by p^k?" for one fixed p-adic integer t per prime p.
This module provides those residues, tau_p mod p^k, for several effective
choices of tau (integer constants, pseudorandom digit streams, Hensel-lifted
algebraic roots, and piecewise combinations), together with the supporting
modular toolkit: polynomial evaluation mod p^k, Hensel lifting, and Chinese
remaindering.

Residue queries are memoized per spec instance.  Cached values are
deterministic functions of (p, k), so concurrent readers may share a spec:
a racing write stores the same value, and CPython dict operations are atomic
under the GIL.
"""

from __future__ import annotations

import hashlib
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence


# --------------------------------------------------------------------------
# Small integer number theory.

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = ((d & -d).bit_length()) - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(limit: int) -> list[int]:
    """All primes p <= limit, by sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, exponent), ...), p ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def crt_combine(parts: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Solve simultaneous congruences given as (modulus, residue) pairs.

    Returns (value, product) with 0 <= value < product, value congruent to
    every residue.  Moduli must be pairwise coprime; an empty input yields
    (0, 1).
    """
    value, modulus = 0, 1
    for m, r in parts:
        if m <= 0:
            raise ValueError(f"modulus must be positive, got {m}")
        if math.gcd(m, modulus) != 1:
            raise ValueError("moduli are not pairwise coprime")
        t = ((r - value) * pow(modulus, -1, m)) % m
        value += modulus * t
        modulus *= m
    return value % modulus, modulus


def _eval_int(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _eval_mod(coeffs: Sequence[int], x: int, mod: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % mod
    return acc


def _derivative(coeffs: Sequence[int]) -> tuple[int, ...]:
    return tuple(i * c for i, c in enumerate(coeffs) if i > 0)


def _divides_poly(f: Sequence[int], h: Sequence[int]) -> bool:
    # exact divisibility f | h in Q[x]; coefficient lists little-endian
    rem = [Fraction(c) for c in h]
    df = len(f) - 1
    while df >= 0 and f[df] == 0:
        df -= 1
    if df < 0:
        return False
    lead = Fraction(f[df])
    dr = len(rem) - 1
    while dr >= df:
        while dr >= 0 and rem[dr] == 0:
            dr -= 1
        if dr < df:
            break
        c = rem[dr] / lead
        for j in range(df + 1):
            rem[dr - df + j] -= c * f[j]
        dr -= 1
    return all(c == 0 for c in rem)


# --------------------------------------------------------------------------
# Residues.


@dataclass(frozen=True)
class ResidueClass:
    """An element of Z/p^k Z, tagged with its prime and precision.

    precision 0 is the trivial ring: the value is forced to 0.
    """

    prime: int
    precision: int
    value: int

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.precision < 0:
            raise ValueError("precision must be non-negative")
        if not 0 <= self.value < self.prime**self.precision:
            raise ValueError(
                f"value {self.value} out of range for {self.prime}^{self.precision}"
            )

    @property
    def modulus(self) -> int:
        return self.prime**self.precision

    def reduce(self, j: int) -> "ResidueClass":
        """Project down to precision j <= current precision."""
        if not 0 <= j <= self.precision:
            raise ValueError(f"cannot reduce precision {self.precision} to {j}")
        if j == self.precision:
            return self
        return ResidueClass(self.prime, j, self.value % self.prime**j)

    def digits(self) -> tuple[int, ...]:
        """Base-p digits, least significant first; length == precision."""
        out = []
        v = self.value
        for _ in range(self.precision):
            v, d = divmod(v, self.prime)
            out.append(d)
        return tuple(out)

    def __int__(self) -> int:
        return self.value


# --------------------------------------------------------------------------
# Specs for one p-adic integer per prime.


def _stream_digit(seed: int, p: int, i: int) -> int:
    # SHA-256 keyed by (seed, p, digit index): reproducible across runs
    # and platforms, unlike hash()-seeded PRNGs.
    key = f"{seed}:{p}:{i}".encode()
    return int.from_bytes(hashlib.sha256(key).digest(), "big") % p


class TauSpec(ABC):
    """Oracle for a family (tau_p), one p-adic integer per prime.

    query(p, k) returns tau_p mod p^k; answers at different precisions of
    the same spec always agree (deeper queries refine shallower ones).
    """

    kind: str = ""

    def __init__(self) -> None:
        self._cache: dict[tuple[int, int], int] = {}

    def query(self, p: int, k: int) -> ResidueClass:
        """tau_p mod p^k as a ResidueClass; memoized."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 0:
            raise ValueError("precision must be non-negative")
        if k == 0:
            return ResidueClass(p, 0, 0)
        key = (p, k)
        v = self._cache.get(key)
        if v is None:
            v = self._residue(p, k)
            self._cache[key] = v
        return ResidueClass(p, k, v)

    @abstractmethod
    def _residue(self, p: int, k: int) -> int:
        """Value of tau_p mod p^k, 0 <= value < p^k."""

    def is_exact_root(self, h: Sequence[int], p: int) -> bool:
        """Whether this spec guarantees h(tau_p) = 0 exactly (all precisions).

        Only structurally certain cases answer True; digit streams always
        answer False even if every sampled digit happens to vanish.
        """
        return False

    @abstractmethod
    def to_json(self) -> dict:
        """JSON-serializable description; inverse of tau_from_json."""

    def __repr__(self) -> str:
        try:
            return f"<TauSpec {self.to_json()!r}>"
        except TypeError:
            return f"<TauSpec kind={self.kind!r}>"


class ConstantTau(TauSpec):
    """The canonical image of an integer: tau_p = z for every p."""

    kind = "constant"

    def __init__(self, value: int) -> None:
        super().__init__()
        self.value = int(value)

    def _residue(self, p: int, k: int) -> int:
        return self.value % p**k

    def is_exact_root(self, h: Sequence[int], p: int) -> bool:
        return _eval_int(h, self.value) == 0

    def to_json(self) -> dict:
        return {"kind": "constant", "value": self.value}


class ZeroTau(TauSpec):
    """tau_p = 0 for every p."""

    kind = "zero"

    def _residue(self, p: int, k: int) -> int:
        return 0

    def is_exact_root(self, h: Sequence[int], p: int) -> bool:
        return not h or h[0] == 0

    def to_json(self) -> dict:
        return {"kind": "zero"}


class StreamTau(TauSpec):
    """Digits drawn from a seeded deterministic stream, one digit at a time.

    Coherence holds by construction: the value mod p^k is the partial sum
    of the first k digits.
    """

    kind = "stream"

    def __init__(self, seed: int) -> None:
        super().__init__()
        self.seed = int(seed)
        self._digits: dict[int, tuple[int, ...]] = {}

    def _digit_row(self, p: int, k: int) -> tuple[int, ...]:
        # rows are immutable and determined by (seed, p), so racing
        # writers publish interchangeable values
        row = self._digits.get(p, ())
        if len(row) < k:
            row += tuple(_stream_digit(self.seed, p, i) for i in range(len(row), k))
            self._digits[p] = row
        return row

    def _residue(self, p: int, k: int) -> int:
        row = self._digit_row(p, k)
        return sum(row[i] * p**i for i in range(k))

    def to_json(self) -> dict:
        return {"kind": "stream", "seed": self.seed}


class LogGenericTau(TauSpec):
    """First digit floor(ln p), remaining digits from a seeded stream.

    For every fixed nonzero integer polynomial h and all large enough p,
    0 < |h(floor(ln p))| < p, so the first digit of h(tau_p) is nonzero;
    these specs therefore tend to admit no deep residue zeros.
    """

    kind = "log_generic"

    def __init__(self, seed: int) -> None:
        super().__init__()
        self.seed = int(seed)

    def _residue(self, p: int, k: int) -> int:
        v = math.floor(math.log(p))
        for i in range(1, k):
            v += _stream_digit(self.seed, p, i) * p**i
        return v

    def to_json(self) -> dict:
        return {"kind": "log_generic", "seed": self.seed}


class HenselTau(TauSpec):
    """tau_p is a lifted root of a fixed integer polynomial, where one exists.

    At each prime, the smallest simple root of f mod p is lifted; primes at
    which f has no simple root fall back to another spec.
    """

    kind = "hensel"

    def __init__(self, poly: Sequence[int], fallback: TauSpec) -> None:
        super().__init__()
        self.poly = tuple(int(c) for c in poly)
        self.fallback = fallback
        self._roots: dict[int, int | None] = {}

    def _simple_root(self, p: int) -> int | None:
        if p not in self._roots:
            deriv = _derivative(self.poly)
            found = None
            for r in range(p):
                if _eval_mod(self.poly, r, p) == 0 and _eval_mod(deriv, r, p) != 0:
                    found = r
                    break
            self._roots[p] = found
        return self._roots[p]

    def _residue(self, p: int, k: int) -> int:
        root = self._simple_root(p)
        if root is None:
            return self.fallback.query(p, k).value
        return hensel_lift(self.poly, p, root, k).value

    def is_exact_root(self, h: Sequence[int], p: int) -> bool:
        if self._simple_root(p) is None:
            return self.fallback.is_exact_root(h, p)
        # sufficient condition: every root of f is a root of h
        return _divides_poly(self.poly, h)

    def to_json(self) -> dict:
        return {
            "kind": "hensel",
            "poly": list(self.poly),
            "fallback": self.fallback.to_json(),
        }


class PiecewiseTau(TauSpec):
    """Per-prime overrides over a default spec."""

    kind = "piecewise"

    def __init__(self, overrides: Mapping[int, TauSpec], default: TauSpec) -> None:
        super().__init__()
        for p in overrides:
            if not is_prime(p):
                raise ValueError(f"override key {p} is not prime")
        self.overrides = dict(overrides)
        self.default = default

    def _pick(self, p: int) -> TauSpec:
        return self.overrides.get(p, self.default)

    def _residue(self, p: int, k: int) -> int:
        return self._pick(p).query(p, k).value

    def is_exact_root(self, h: Sequence[int], p: int) -> bool:
        return self._pick(p).is_exact_root(h, p)

    def to_json(self) -> dict:
        return {
            "kind": "piecewise",
            "overrides": {str(p): s.to_json() for p, s in sorted(self.overrides.items())},
            "default": self.default.to_json(),
        }


class PredicateTau(TauSpec):
    """Piecewise split on an arbitrary prime predicate; not serializable."""

    kind = "predicate"

    def __init__(
        self,
        test: Callable[[int], bool],
        when_true: TauSpec,
        otherwise: TauSpec,
    ) -> None:
        super().__init__()
        self.test = test
        self.when_true = when_true
        self.otherwise = otherwise

    def _pick(self, p: int) -> TauSpec:
        return self.when_true if self.test(p) else self.otherwise

    def _residue(self, p: int, k: int) -> int:
        return self._pick(p).query(p, k).value

    def is_exact_root(self, h: Sequence[int], p: int) -> bool:
        return self._pick(p).is_exact_root(h, p)

    def to_json(self) -> dict:
        raise TypeError("predicate-based specs have no JSON form")


def constant(value: int) -> TauSpec:
    return ConstantTau(value)


def zero() -> TauSpec:
    return ZeroTau()


def stream(seed: int) -> TauSpec:
    return StreamTau(seed)


def hensel(poly: Sequence[int], fallback: TauSpec) -> TauSpec:
    return HenselTau(poly, fallback)


def log_generic(seed: int) -> TauSpec:
    return LogGenericTau(seed)


def piecewise(overrides: Mapping[int, TauSpec], default: TauSpec) -> TauSpec:
    return PiecewiseTau(overrides, default)


def tau_from_json(data: Mapping) -> TauSpec:
    """Rebuild a spec from its JSON description."""
    try:
        kind = data["kind"]
    except (TypeError, KeyError):
        raise ValueError("tau spec JSON must be an object with a 'kind' field")
    if kind == "constant":
        return ConstantTau(data["value"])
    if kind == "zero":
        return ZeroTau()
    if kind == "stream":
        return StreamTau(data["seed"])
    if kind == "log_generic":
        return LogGenericTau(data["seed"])
    if kind == "hensel":
        return HenselTau(data["poly"], tau_from_json(data["fallback"]))
    if kind == "piecewise":
        overrides = {int(p): tau_from_json(s) for p, s in data["overrides"].items()}
        return PiecewiseTau(overrides, tau_from_json(data["default"]))
    raise ValueError(f"unknown tau spec kind {kind!r}")


# --------------------------------------------------------------------------
# Operations.


def poly_eval_mod(h: Sequence[int], spec: TauSpec, p: int, k: int) -> ResidueClass:
    """h(tau_p) mod p^k by Horner's rule, entirely in Z/p^k Z."""
    if k == 0:
        return spec.query(p, 0)
    t = spec.query(p, k).value
    mod = p**k
    return ResidueClass(p, k, _eval_mod(h, t, mod))


class HenselLiftError(ValueError):
    """The starting residue is not a simple root of f mod p."""


def hensel_lift(f: Sequence[int], p: int, root1: int, k: int) -> ResidueClass:
    """Lift a simple root of f mod p to the unique root mod p^k above it.

    root1 must satisfy f(root1) = 0 and f'(root1) != 0 mod p; violations
    raise HenselLiftError.  Uses Newton iteration with doubling precision.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 0 <= root1 < p:
        raise ValueError(f"root {root1} out of range for modulus {p}")
    if k < 0:
        raise ValueError("precision must be non-negative")
    deriv = _derivative(f)
    if _eval_mod(f, root1, p) != 0:
        raise HenselLiftError(f"{root1} is not a root of the polynomial mod {p}")
    if _eval_mod(deriv, root1, p) == 0:
        raise HenselLiftError(f"root {root1} is not simple mod {p} (derivative vanishes)")
    if k == 0:
        return ResidueClass(p, 0, 0)
    x, prec = root1, 1
    while prec < k:
        prec = min(2 * prec, k)
        mod = p**prec
        fx = _eval_mod(f, x, mod)
        dfx = _eval_mod(deriv, x, mod)
        x = (x - fx * pow(dfx, -1, mod)) % mod
    return ResidueClass(p, k, x)
