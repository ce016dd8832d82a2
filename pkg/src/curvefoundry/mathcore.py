"""Arbitrary-precision number theory used throughout the library.

Primality testing, modular square roots, multiplicative orders,
square-free detection, and a generalized Pell equation solver
(x^2 - N*y^2 = M) based on the continued fraction expansion of sqrt(N).

Everything here is pure Python on builtin integers.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
import random

# Deterministic Miller-Rabin witness set: correct for every n < 3.3 * 10^24,
# which comfortably covers the 64-bit range where we promise exactness.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59)


def _mr_composite_witness(n: int, a: int, d: int, s: int) -> bool:
    """True if a proves n composite (n - 1 = d * 2^s, d odd)."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be positive and odd")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable prime test with Selfridge's parameter choice."""
    # D = 5, -7, 9, -11, ... first with jacobi(D, n) = -1
    D = 5
    while True:
        j = jacobi(D % n, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        if abs(D) > 10**6:
            # n is likely a perfect square; jacobi never hits -1 then
            return isqrt(n) ** 2 != n
        D = -(D + 2) if D > 0 else -(D - 2)
    Q = (1 - D) // 4
    # n + 1 = d * 2^s
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Lucas sequences U_d, V_d mod n by binary ladder (P = 1)
    U, V, qk = 1, 1, Q % n
    for bit in bin(d)[3:]:
        U = U * V % n
        V = (V * V - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            U, V = (U + V) % n, (V + D * U) % n
            if U % 2:
                U += n
            if V % 2:
                V += n
            U, V = U // 2 % n, V // 2 % n
            qk = qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * qk) % n
        if V == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(n: int) -> bool:
    """Primality test: deterministic below 2^64, Baillie-PSW style above.

    The Baillie-PSW combination (base-2 strong probable prime plus strong
    Lucas) has no known counterexample; its heuristic error rate is far
    below 2^-128.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return not any(_mr_composite_witness(n, a, d, s) for a in _MR_BASES)
    if _mr_composite_witness(n, 2, d, s):
        return False
    return _strong_lucas_prp(n)


def sqrt_mod(a: int, p: int):
    """Square roots of a modulo an odd prime p.

    Returns a sorted tuple: (0,) when a = 0, (s, p - s) when a is a
    quadratic residue, and () when it is not.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"modulus {p} is not an odd prime")
    a %= p
    if a == 0:
        return (0,)
    if jacobi(a, p) != 1:
        return ()
    if p % 4 == 3:
        s = pow(a, (p + 1) // 4, p)
    else:
        # Tonelli-Shanks
        q, e = p - 1, 0
        while q % 2 == 0:
            q //= 2
            e += 1
        z = 2
        while jacobi(z, p) != -1:
            z += 1
        m, c, t, s = e, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, s = t * c % p, s * b % p
    return tuple(sorted((s, p - s)))


@lru_cache(maxsize=1)
def _sieve_primes(bound: int = 10**6) -> tuple:
    flags = bytearray([1]) * (bound + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(bound) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(flags[i * i :: i]))
    return tuple(i for i in range(bound + 1) if flags[i])


def _pollard_brent(n: int, rng: random.Random, budget: int = 1 << 18):
    """One Brent-cycle attempt at a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g, r, q = 1, 1, 1
    count = 0
    while g == 1 and count < budget:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
            count += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
    return g if 1 < g < n else None


def try_factorize(n: int, rho_rounds: int = 16) -> dict | None:
    """Full prime factorization {p: e}, or None if a part resists."""
    if n <= 0:
        raise ValueError("n must be positive")
    factors: dict[int, int] = {}
    for p in _sieve_primes(10**4):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        if n == 1:
            return factors
    stack = [n]
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        root = isqrt(m)
        if root * root == m:
            stack += [root, root]
            continue
        d = None
        for _ in range(rho_rounds):
            d = _pollard_brent(m, rng)
            if d:
                break
        if not d:
            return None
        stack += [d, m // d]
    return factors


def _order_from_multiple(a: int, n: int, m: int) -> int:
    """Exact order of a mod n given that a^m = 1 (mod n)."""
    order = m
    for p in sorted(try_factorize(m)):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def mult_order(a: int, n: int, order_multiple: int | None = None) -> int:
    """Least e >= 1 with a^e = 1 (mod n).

    When `order_multiple` m is supplied and a^m = 1 (mod n), the order is
    found by stripping prime factors of m; this stays fast even when n is
    a cryptographic-size prime.  Otherwise the group order (n - 1 for
    prime n, Carmichael lambda otherwise) is factored; if that fails, a
    bounded sequential scan is the fallback.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    a %= n
    if gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")
    if a == 1:
        return 1
    if order_multiple is not None and pow(a, order_multiple, n) == 1:
        return _order_from_multiple(a, n, order_multiple)
    group_order = None
    if is_prime(n):
        group_order = n - 1
    else:
        fac = try_factorize(n)
        if fac is not None:
            lam = 1
            for p, e in fac.items():
                pe = p ** (e - 1) * (p - 1)
                if p == 2 and e >= 3:
                    pe = 2 ** (e - 2)
                lam = lam * pe // gcd(lam, pe)
            group_order = lam
    if group_order is not None and try_factorize(group_order) is not None:
        return _order_from_multiple(a, n, group_order)
    # sequential fallback, bounded
    x = a
    for e in range(1, 10**7):
        if x == 1:
            return e
        x = x * a % n
    raise ArithmeticError("order search exceeded sequential budget")


def has_mult_order(a: int, n: int, k: int) -> bool:
    """True iff the order of a mod n is exactly k (n prime, k factored locally)."""
    a %= n
    if a == 0 or pow(a, k, n) != 1:
        return False
    return all(pow(a, k // p, n) != 1 for p in try_factorize(k))


def is_square_free(n: int, trial_bound: int = 10**6) -> str:
    """Tri-state square-free check: 'yes', 'no', or 'unknown'.

    Trial division up to `trial_bound`; the surviving cofactor is accepted
    as square-free only if it is 1, prime, or provably less than bound^2.
    A perfect-power cofactor yields 'no'.  Everything else is 'unknown' --
    never silently promoted to 'yes'.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return "yes"
    for p in _sieve_primes(10**6):
        if p > trial_bound or p * p > n:
            break
        if n % p == 0:
            n //= p
            if n % p == 0:
                return "no"
    if n == 1 or is_prime(n) or n < trial_bound * trial_bound:
        # any composite below bound^2 would have had a factor below bound
        return "yes"
    root = isqrt(n)
    if root * root == n:
        return "no"
    e = 3
    while (1 << e) <= n:
        r = round(n ** (1.0 / e))
        for cand in (r - 1, r, r + 1):
            if cand > 1 and cand**e == n:
                return "no"
        e += 1
    return "unknown"


def squarefree_part(n: int, trial_bound: int = 10**6) -> tuple[int, str]:
    """(d, status): d is n with all detectable square factors removed.

    status 'yes' means d is certified square-free; 'unknown' means the
    unfactored cofactor was kept verbatim and may hide square factors.
    """
    if n < 1:
        raise ValueError("n must be positive")
    d = 1
    for p in _sieve_primes(10**6):
        if p > trial_bound or p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                d *= p
    if n == 1:
        return d, "yes"
    if is_prime(n) or n < trial_bound * trial_bound:
        return d * n, "yes"
    root = isqrt(n)
    if root * root == n:
        sub, status = squarefree_part(root, trial_bound)
        return d * sub if status == "yes" else d * sub, status
    return d * n, "unknown"


@dataclass(frozen=True)
class PellSolution:
    """One solution of x^2 - n*y^2 = m (n positive non-square, m nonzero)."""

    x: int
    y: int
    n: int
    m: int

    def __post_init__(self):
        if self.x * self.x - self.n * self.y * self.y != self.m:
            raise ValueError("not a solution of x^2 - n*y^2 = m")

    def compose(self, unit: "PellSolution") -> "PellSolution":
        """Multiply by a unit (a solution of x^2 - n*y^2 = 1) in Z[sqrt(n)]."""
        if unit.n != self.n or unit.m != 1:
            raise ValueError("compose expects a unit of the same n")
        return PellSolution(
            self.x * unit.x + self.n * self.y * unit.y,
            self.x * unit.y + self.y * unit.x,
            self.n,
            self.m,
        )


def pell_fundamental_unit(n: int) -> PellSolution:
    """Smallest solution > (1, 0) of x^2 - n*y^2 = 1 via continued fractions."""
    a0 = isqrt(n)
    if a0 * a0 == n:
        raise ValueError("n must not be a perfect square")
    m, d, a = 0, 1, a0
    h1, h0 = a0, 1
    k1, k0 = 1, 0
    while h1 * h1 - n * k1 * k1 != 1:
        m = d * a - m
        d = (n - m * m) // d
        a = (a0 + m) // d
        h1, h0 = a * h1 + h0, h1
        k1, k0 = a * k1 + k0, k1
    return PellSolution(h1, k1, n, 1)


def solve_pell(n: int, m: int, search_bound: int = 10**6) -> list[PellSolution]:
    """All solutions of x^2 - n*y^2 = m with x >= 0 and 0 <= y <= search_bound.

    This covers every solution class representative small enough to sit in
    the scan window; the full solution set is the orbit of these under the
    fundamental unit (see PellSolution.compose / pell_fundamental_unit).
    """
    if n <= 0 or isqrt(n) ** 2 == n:
        raise ValueError("n must be positive and not a perfect square")
    if m == 0:
        raise ValueError("m must be nonzero")
    out = []
    for y in range(search_bound + 1):
        val = m + n * y * y
        if val < 0:
            continue
        x = isqrt(val)
        if x * x == val:
            out.append(PellSolution(x, y, n, m))
    return out


def solution_orbit(sol: PellSolution, rungs: int = 3):
    """Yield sol and its first `rungs` compositions with the fundamental unit."""
    unit = pell_fundamental_unit(sol.n)
    cur = sol
    yield cur
    for _ in range(rungs):
        cur = cur.compose(unit)
        yield cur
