"""Diagonal curves a X^alpha + b Y^beta = c over prime fields.

With d = gcd(alpha, beta) and M = lcm(alpha, beta) the genus is
g = ((alpha-1)(beta-1) - (d-1)) / 2.  For p = 1 mod M with p not dividing abc
the trace is

    trace = p + 1 - N_d - #C_affine(F_p),

where N_d is d when -a/b is a d-th power residue mod p and 0 otherwise (it
counts the directions at infinity), and #C_affine is the AFFINE point count.
That affine convention is fixed here throughout; assertions against the
2g*sqrt(p) Hasse bound therefore carry a slack of 1 to absorb the
point-at-infinity bookkeeping of other conventions.

Two independent counting backends are provided and must agree exactly: a
value-table convolution over F_p (``count_affine_naive``) and an exact
Jacobi-sum accumulation over discrete-log residue classes
(``count_affine_charsum``).  The character-sum backend avoids floating-point
roots of unity entirely: the integer bucket vector is evaluated at an element
of exact multiplicative order M in a large auxiliary prime field, which
recovers the exact integer count by balanced reduction.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd, isqrt, sqrt
from typing import Iterable, Optional

import numpy as np

from .prime_engine import is_prime

log = logging.getLogger(__name__)

NAIVE_LIMIT = 10**7  # O(p) memory and time; keep desk-scale


class CacheFormatError(ValueError):
    """Raised when a trace-cache file does not parse or match its curve."""


@dataclass(frozen=True)
class CurveSpec:
    """A diagonal curve with derived invariants d, M, g."""

    a: int
    b: int
    c: int
    alpha: int
    beta: int
    d: int
    M: int
    g: int


@dataclass(frozen=True)
class TraceRecord:
    """Point count and trace of one prime on one curve."""

    p: int
    nd: int
    affine_count: int
    trace: int
    normalized: float


def curve_new(a: int, b: int, c: int, alpha: int, beta: int) -> CurveSpec:
    """Build a CurveSpec; genus 0 curves are constructible but flagged.

    The parity check on (alpha-1)(beta-1) - (d-1) is defensive: a short case
    split on the parities of alpha and beta shows it can never fail for
    integer exponents, but the genus formula is rejected loudly rather than
    silently truncated if that reasoning is ever wrong.
    """
    if a == 0 or b == 0 or c == 0:
        raise ValueError("coefficients a, b, c must be nonzero")
    if not (alpha >= beta >= 2):
        raise ValueError("need alpha >= beta >= 2")
    if alpha > 16:
        raise ValueError("alpha capped at 16")
    d = gcd(alpha, beta)
    M = alpha * beta // d
    num = (alpha - 1) * (beta - 1) - (d - 1)
    if num % 2:
        raise ValueError("genus formula is not integral for these exponents")
    return CurveSpec(a=a, b=b, c=c, alpha=alpha, beta=beta, d=d, M=M, g=num // 2)


def _check_p(curve: CurveSpec, p: int, need_mod_M: bool = True) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if (curve.a * curve.b * curve.c) % p == 0:
        raise ValueError(f"p={p} divides a coefficient")
    if need_mod_M and p % curve.M != 1:
        raise ValueError(f"p={p} is not 1 mod M={curve.M}")


def nd(curve: CurveSpec, p: int) -> int:
    """d when -a/b is a d-th power residue mod p, else 0.

    For d = 1 every residue is a first power, so the answer is 1.
    """
    _check_p(curve, p)
    if curve.d == 1:
        return 1
    t = (-curve.a % p) * pow(curve.b, -1, p) % p
    return curve.d if pow(t, (p - 1) // curve.d, p) == 1 else 0


def _pow_table(p: int, e: int) -> np.ndarray:
    """x^e mod p for all x in [0, p), square-and-multiply on int64."""
    x = np.arange(p, dtype=np.int64)
    out = np.ones(p, dtype=np.int64)
    base = x
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


def count_affine_naive(curve: CurveSpec, p: int) -> int:
    """#{(x, y) in F_p^2 : a x^alpha + b y^beta = c} by table convolution.

    Tabulates a*x^alpha and c - b*y^beta, bincounts both, and takes the dot
    product of the two count vectors.  Works for any p not dividing abc.
    """
    _check_p(curve, p, need_mod_M=False)
    if p > NAIVE_LIMIT:
        raise ValueError(f"p={p} beyond the O(p) counting limit {NAIVE_LIMIT}")
    lhs = curve.a % p * _pow_table(p, curve.alpha) % p
    rhs = (curve.c - curve.b * _pow_table(p, curve.beta)) % p
    cnt1 = np.bincount(lhs, minlength=p)
    cnt2 = np.bincount(rhs, minlength=p)
    return int(cnt1 @ cnt2)


def _primitive_root(p: int) -> int:
    """Smallest primitive root mod p, by ascending search (reproducible)."""
    if p == 2:
        return 1
    fac = []
    m = p - 1
    q = 2
    while q * q <= m:
        if m % q == 0:
            fac.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        fac.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise RuntimeError("no primitive root found")  # unreachable for prime p


def _dlog_table(p: int, g: int) -> np.ndarray:
    """ind[v] = k with g^k = v mod p (ind[0] = -1), via sqrt(p) blocks."""
    ind = np.full(p, -1, dtype=np.int64)
    pows = np.empty(p - 1, dtype=np.int64)
    B = max(1, isqrt(p - 1))
    small = np.empty(B, dtype=np.int64)
    v = 1
    for i in range(B):
        small[i] = v
        v = v * g % p
    gB = v
    big = 1
    i = 0
    while i < p - 1:
        j = min(B, p - 1 - i)
        pows[i : i + j] = small[:j] * big % p
        big = big * gB % p
        i += j
    ind[pows] = np.arange(p - 1)
    return ind


def _order_M_element(M: int, P: int) -> int:
    """An element of exact multiplicative order M in F_P (P = 1 mod M)."""
    fac = []
    m = M
    q = 2
    while q * q <= m:
        if m % q == 0:
            fac.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        fac.append(m)
    for h in range(2, P):
        z = pow(h, (P - 1) // M, P)
        if all(pow(z, M // q, P) != 1 for q in fac):
            return z
    raise RuntimeError("no order-M element found")  # unreachable


def count_affine_charsum(curve: CurveSpec, p: int) -> int:
    """Exact affine count via Jacobi sums; must equal the naive backend.

    Requires p = 1 mod M (other primes fall back to the naive count).  Writing
    chi and psi for characters of orders alpha and beta realized through the
    smallest primitive root, the count decomposes as

        N = A(c) + B(c) + sum_{j < alpha, l < beta}
                chi^j(c/a) psi^l(c/b) J(chi^j, psi^l),

    where A and B count the one-variable solutions on the axes.  All Jacobi
    sums are accumulated as one integer vector over the M residue classes of
    the combined discrete-log exponent, then the vector is evaluated at an
    element of exact order M in an auxiliary prime field large enough that the
    balanced residue is the exact integer.
    """
    M = curve.M
    if p % M != 1:
        return count_affine_naive(curve, p)
    _check_p(curve, p)
    g = _primitive_root(p)
    ind = _dlog_table(p, g)
    ca = curve.c % p * pow(curve.a, -1, p) % p
    cb = curve.c % p * pow(curve.b, -1, p) % p
    A_c = curve.alpha if ind[ca] % curve.alpha == 0 else 0
    B_c = curve.beta if ind[cb] % curve.beta == 0 else 0
    w = np.arange(2, p, dtype=np.int64)
    iw = ind[w]
    i1w = ind[(1 - w) % p]
    sa = M // curve.alpha
    sb = M // curve.beta
    buckets = np.zeros(M, dtype=np.int64)
    ks = np.arange(M)
    for j in range(curve.alpha):
        for l in range(curve.beta):
            bc = np.bincount((sa * j * iw + sb * l * i1w) % M, minlength=M)
            shift = (sa * j * int(ind[ca]) + sb * l * int(ind[cb])) % M
            buckets[(ks + shift) % M] += bc
    # evaluate sum_k buckets[k] * zeta_M^k exactly: pick P = 1 mod M with P
    # more than twice any possible |N|, map zeta_M to an order-M element
    bound = 2 * (16 * p + 4)
    P = bound + 1
    while not (is_prime(P) and P % M == 1):
        P += 1
    z = _order_M_element(M, P)
    S = 0
    zk = 1
    for k in range(M):
        S = (S + int(buckets[k]) * zk) % P
        zk = zk * z % P
    S = (A_c + B_c + S) % P
    if S > P // 2:
        S -= P
    return S


def trace(curve: CurveSpec, p: int, backend: str = "naive") -> TraceRecord:
    """TraceRecord for p = 1 mod M; normalized = trace / (2 g sqrt(p))."""
    if curve.g < 1:
        raise ValueError("trace needs genus >= 1")
    _check_p(curve, p)
    if backend == "naive":
        affine = count_affine_naive(curve, p)
    elif backend == "charsum":
        affine = count_affine_charsum(curve, p)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    n_d = nd(curve, p)
    tr = p + 1 - n_d - affine
    return TraceRecord(
        p=p,
        nd=n_d,
        affine_count=affine,
        trace=tr,
        normalized=tr / (2.0 * curve.g * sqrt(p)),
    )


def in_P_CI(curve: CurveSpec, p: int, interval: tuple[float, float]) -> bool:
    """True iff p = 1 mod M, p does not divide abc, and the normalized trace
    lies in the closed interval.  False (not an error) on the p conditions."""
    if curve.g < 1:
        raise ValueError("membership needs genus >= 1")
    lo, hi = interval
    if not (-1.0 <= lo <= hi <= 1.0):
        raise ValueError("interval must satisfy -1 <= lo <= hi <= 1")
    if p < 2 or not is_prime(p):
        return False
    if p % curve.M != 1 or (curve.a * curve.b * curve.c) % p == 0:
        return False
    rec = trace(curve, p)
    return lo <= rec.normalized <= hi


def eps_interval(curve: CurveSpec, eps: float) -> tuple[float, float]:
    """The |trace| <= eps*sqrt(p) window as a normalized-trace interval."""
    if curve.g < 1:
        raise ValueError("needs genus >= 1")
    if not 0.0 < eps <= 2.0 * curve.g:
        raise ValueError("eps must lie in (0, 2g]")
    h = eps / (2.0 * curve.g)
    return (-h, h)


# ---------------------------------------------------------------------------
# trace cache: `# curve a,b,c,alpha,beta` header, then `p,nd,affine,trace`
# lines ascending in p.  A cache is valid only for an exact header match.


def _header(curve: CurveSpec) -> str:
    return f"# curve {curve.a},{curve.b},{curve.c},{curve.alpha},{curve.beta}"


def save_trace_cache(path, curve: CurveSpec, records: Iterable[TraceRecord]) -> None:
    recs = sorted(records, key=lambda r: r.p)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(_header(curve) + "\n")
        for r in recs:
            fh.write(f"{r.p},{r.nd},{r.affine_count},{r.trace}\n")


def load_trace_cache(path, curve: CurveSpec) -> list[TraceRecord]:
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != _header(curve):
        raise CacheFormatError(
            f"header mismatch: expected {_header(curve)!r}, "
            f"got {lines[0]!r}" if lines else "empty cache file"
        )
    out = []
    prev_p = 0
    for idx, ln in enumerate(lines[1:], start=2):
        if not ln:
            continue
        parts = ln.split(",")
        if len(parts) != 4:
            raise CacheFormatError(f"line {idx}: expected 4 comma-separated fields")
        try:
            p, n_d, affine, tr = (int(s) for s in parts)
        except ValueError as e:
            raise CacheFormatError(f"line {idx}: non-integer field ({e})") from e
        if p <= prev_p:
            raise CacheFormatError(f"line {idx}: primes not strictly ascending")
        if n_d not in (0, curve.d) or tr != p + 1 - n_d - affine:
            raise CacheFormatError(f"line {idx}: inconsistent record for p={p}")
        prev_p = p
        out.append(
            TraceRecord(
                p=p,
                nd=n_d,
                affine_count=affine,
                trace=tr,
                normalized=tr / (2.0 * curve.g * sqrt(p)) if curve.g else float("nan"),
            )
        )
    return out


class TraceStore:
    """Memoized traces for one curve, optionally file-backed.

    Misses are computed with the naive backend and logged at debug level so a
    long scan can be resumed from the persisted cache.
    """

    def __init__(self, curve: CurveSpec, path=None):
        self.curve = curve
        self.path = path
        self.records: dict[int, TraceRecord] = {}
        if path is not None:
            try:
                with open(path, "r", encoding="ascii"):
                    pass
            except FileNotFoundError:
                return
            for r in load_trace_cache(path, curve):
                self.records[r.p] = r

    def get(self, p: int) -> TraceRecord:
        r = self.records.get(p)
        if r is None:
            log.debug("trace cache miss: curve %s p=%d", _header(self.curve), p)
            r = trace(self.curve, p)
            self.records[p] = r
        return r

    def save(self, path=None) -> None:
        target = self.path if path is None else path
        if target is None:
            raise ValueError("no path given for trace cache")
        save_trace_cache(target, self.curve, self.records.values())
