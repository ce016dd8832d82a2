"""Exact polynomial factorization over Q.

Pipeline: content/denominator stripping -> square-free split (Yun, in
polyring) -> for each square-free part, factor mod several primes
(Cantor-Zassenhaus), prove irreducibility early via factor-degree
patterns when possible, otherwise Hensel-lift the best modular
factorization above the Mignotte bound and recombine subsets.

Polynomials mod p are plain lists of ints, ascending degree.
"""

import random
from fractions import Fraction
from math import gcd, isqrt

from .mathcore import is_prime
from .polyring import RatPoly, squarefree_decomposition

# ---------------------------------------------------------------- F_p[x]


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    a = a[:]
    inv = pow(b[-1], -1, p)
    dq = len(a) - len(b)
    if dq < 0:
        return [], _trim(a)
    q = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = a[i + len(b) - 1] * inv % p
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % p
    return _trim(q), _trim(a[: len(b) - 1])


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _gcd_p(a, b, p):
    while b:
        a, b = b, _mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _powmod(base, e, mod, p):
    result = [1]
    base = _mod(base, mod, p)
    while e:
        if e & 1:
            result = _mod(_mul(result, base, p), mod, p)
        base = _mod(_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _deriv(a, p):
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _monic(a, p):
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _factor_mod_p(f: list, p: int, rng: random.Random) -> list:
    """Monic irreducible factors of square-free monic f over F_p."""
    factors = []
    # distinct-degree split
    stages = []
    h = [0, 1]
    v = f[:]
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd_p(_sub(h, [0, 1], p), v, p)
        if len(g) > 1:
            stages.append((g, d))
            v, _ = _divmod(v, g, p)
    if len(v) > 1:
        stages.append((v, len(v) - 1))
    # equal-degree split (Cantor-Zassenhaus)
    for g, d in stages:
        todo = [g]
        while todo:
            cur = todo.pop()
            if len(cur) - 1 == d:
                factors.append(_monic(cur, p))
                continue
            while True:
                r = [rng.randrange(p) for _ in range(len(cur) - 1)]
                r = _trim(r)
                if len(r) < 1:
                    continue
                if p == 2:
                    acc, w = r[:], r[:]
                    for _ in range(d - 1):
                        w = _mod(_mul(w, w, p), cur, p)
                        acc = _add(acc, w, p)
                    cand = _gcd_p(acc, cur, p)
                else:
                    e = (p**d - 1) // 2
                    w = _powmod(r, e, cur, p)
                    cand = _gcd_p(_sub(w, [1], p), cur, p)
                if 0 < len(cand) - 1 < len(cur) - 1:
                    todo.append(cand)
                    todo.append(_divmod(cur, cand, p)[0])
                    break
    return factors


# -------------------------------------------------------- Hensel lifting


def _poly_mod_m(a, m):
    return _trim([c % m for c in a])


def _mul_m(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % m
    return _trim(out)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift: from f = g*h (mod m) to (mod m^2); g, h monic."""
    m2 = m * m
    e = _poly_mod_m(_sub_int(f, _mul_m(g, h, m2)), m2)
    # q, r = (s*e) divmod h
    se = _mul_m(s, e, m2)
    q, r = _divmod_m(se, h, m2)
    g1 = _poly_mod_m(_add_int(g, _add_int(_mul_m(t, e, m2), _mul_m(q, g, m2))), m2)
    h1 = _poly_mod_m(_add_int(h, r), m2)
    b = _poly_mod_m(_sub_int(_add_int(_mul_m(s, g1, m2), _mul_m(t, h1, m2)), [1]), m2)
    sb = _mul_m(s, b, m2)
    c, d = _divmod_m(sb, h1, m2)
    s1 = _poly_mod_m(_sub_int(s, d), m2)
    t1 = _poly_mod_m(_sub_int(t, _add_int(_mul_m(t, b, m2), _mul_m(c, g1, m2))), m2)
    return g1, h1, s1, t1


def _add_int(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _sub_int(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _divmod_m(a, b, m):
    """Division in (Z/m)[x] when lc(b) is invertible mod m (b monic here)."""
    a = [c % m for c in a]
    if not _trim(b[:]):
        raise ZeroDivisionError
    inv = pow(b[-1], -1, m)
    dq = len(a) - len(b)
    if dq < 0:
        return [], _trim(a)
    q = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = a[i + len(b) - 1] * inv % m
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % m
    return _trim(q), _trim(a[: len(b) - 1])


def _lift_tree(f, parts, p, target):
    """Lift monic factorization f = prod(parts) (mod p) until p^e >= target."""
    if len(parts) == 1:
        return [_poly_mod_m(f, _next_power(p, target))]
    half = len(parts) // 2
    left, right = parts[:half], parts[half:]
    g = [1]
    for fac in left:
        g = _mul_m(g, fac, p)
    h = [1]
    for fac in right:
        h = _mul_m(h, fac, p)
    # Bezout: s*g + t*h = 1 mod p
    s, t = _bezout_p(g, h, p)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    return _lift_tree(g, left, p, target) + _lift_tree(h, right, p, target)


def _next_power(p, target):
    m = p
    while m < target:
        m = m * m
    return m


def _bezout_p(g, h, p):
    r0, r1 = g, h
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, rem = _divmod(r0, r1, p)
        r0, r1 = r1, rem
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


# ------------------------------------------------- factorization over Z


def _center(a, m):
    return [c - m if c > m // 2 else c for c in a]


def _mignotte_bound(f: list) -> int:
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return (1 << len(f)) * norm2


def _eval_int(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _divides_z(cand, f):
    """Exact division test of integer polynomials (cand | f)."""
    if not cand or cand[-1] == 0:
        return None
    rem = list(f)
    dq = len(rem) - len(cand)
    if dq < 0:
        return None
    quot = [0] * (dq + 1)
    lc = cand[-1]
    for i in range(dq, -1, -1):
        c = rem[i + len(cand) - 1]
        if c % lc:
            return None
        c //= lc
        quot[i] = c
        if c:
            for j, bj in enumerate(cand):
                rem[i + j] -= c * bj
    if any(rem[: len(cand) - 1]):
        return None
    return quot


_PRIME_POOL = (
    127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
    179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
)


def _possible_degrees(pattern: list) -> set:
    """All sums of sub-multisets of a degree pattern."""
    sums = {0}
    for d in pattern:
        sums |= {s + d for s in sums}
    return sums


def _factor_squarefree_z(f: list) -> list:
    """Irreducible integer factors of a primitive square-free integer poly."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    # make monic via y = lc*x substitution: F(y) = lc^(n-1) * f(y/lc)
    lc = f[-1]
    F = [c * lc ** (n - 1 - i) for i, c in enumerate(f[:-1])] + [1]
    best = None
    degree_sets = None
    rng = random.Random(hash(tuple(f)) & 0xFFFFFFFF)
    for p in _PRIME_POOL:
        if F[-1] % p == 0:
            continue
        fp = _monic([c % p for c in F], p)
        if len(_trim(fp[:])) - 1 != n:
            continue
        if _gcd_p(fp, _deriv(fp, p), p) != [1]:
            continue
        parts = _factor_mod_p(fp, p, rng)
        if len(parts) == 1:
            return [f]
        degs = sorted(len(g) - 1 for g in parts)
        cand = _possible_degrees(degs)
        degree_sets = cand if degree_sets is None else (degree_sets & cand)
        if degree_sets == {0, n}:
            return [f]
        if best is None or len(parts) < len(best[1]):
            best = (p, parts)
        if len(best[1]) <= 3:
            break
    assert best is not None, "no usable prime found"
    p, parts = best
    bound = 2 * _mignotte_bound(F) * abs(F[-1]) + 1
    lifted = _lift_tree(_monic([c % _next_power(p, bound) for c in F], p), parts, p, bound)
    m = _next_power(p, bound)

    # subset recombination on the monic model, then map y -> lc*x back
    found: list[list[int]] = []
    remaining = list(range(len(lifted)))
    G = F[:]

    def map_back(g_int):
        # g(y) factor of F -> primitive part of g(lc*x)
        coeffs = [c * lc**i for i, c in enumerate(g_int)]
        g0 = 0
        for c in coeffs:
            g0 = gcd(g0, c)
        if coeffs[-1] < 0:
            g0 = -g0
        return [c // g0 for c in coeffs]

    import itertools

    size = 1
    while 2 * size <= len(remaining):
        restart = False
        for combo in itertools.combinations(remaining, size):
            prod = [1]
            for i in combo:
                prod = _mul_m(prod, lifted[i], m)
            cand = _center(prod, m)
            quot = _divides_z(cand, G)
            if quot is not None:
                found.append(map_back(cand))
                G = quot
                remaining = [i for i in remaining if i not in combo]
                restart = True
                break
        if not restart:
            size += 1
    if len(G) > 1:
        found.append(map_back(G))
    # restore the original factorization of f (not the monic model)
    out = []
    rem_f = f[:]
    for g in found:
        quot = _divides_z(g, rem_f)
        assert quot is not None
        out.append(g)
        rem_f = quot
    assert len(rem_f) == 1
    return out


def factor(p: RatPoly):
    """(constant, [(monic irreducible RatPoly, multiplicity)]) with exact product."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return p.coeffs[0], []
    const, sqf = squarefree_decomposition(p)
    out = []
    for part, mult in sqf:
        ints, c = part.primitive_integer()
        const *= c**mult
        for g in _factor_squarefree_z(list(ints)):
            gp = RatPoly.from_list([Fraction(x) for x in g])
            const *= gp.lead**mult
            out.append((gp.monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return const, out


def is_irreducible(p: RatPoly) -> bool:
    """Exact irreducibility over Q; degree-0 polynomials are units."""
    if p.degree < 1:
        return False
    if p.degree == 1:
        return True
    _, decomp = squarefree_decomposition(p)
    if len(decomp) != 1 or decomp[0][1] != 1 or decomp[0][0].degree != p.degree:
        return False
    ints, _ = p.primitive_integer()
    return len(_factor_squarefree_z(list(ints))) == 1
