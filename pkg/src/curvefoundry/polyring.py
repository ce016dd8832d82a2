"""Exact univariate polynomial arithmetic over the rationals.

RatPoly stores coefficients as `fractions.Fraction` in ascending degree
with no trailing zeros; the zero polynomial is the empty tuple.  No
floating point enters this module: family polynomials carry denominators
like 1/980 or 1/2970292 where any rounding would be fatal.

Also provides cyclotomic polynomials, integrality residue scans,
irreducibility/factorization over Q (see factorq), square-free
decomposition, and classification of CM polynomials 4q - t^2 into the
fixed-discriminant / variable-discriminant / sparse shapes.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, lcm

from .mathcore import squarefree_part

Plike = "RatPoly | Fraction | int"


def _coerce(value) -> "RatPoly":
    if isinstance(value, RatPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return RatPoly((Fraction(value),) if value else ())
    raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")


@dataclass(frozen=True)
class RatPoly:
    """Dense polynomial over Q; coeffs[i] is the coefficient of x^i."""

    coeffs: tuple

    @staticmethod
    def from_list(cs) -> "RatPoly":
        cs = [Fraction(c) for c in cs]
        while cs and cs[-1] == 0:
            cs.pop()
        return RatPoly(tuple(cs))

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly(())

    @staticmethod
    def one() -> "RatPoly":
        return RatPoly((Fraction(1),))

    @staticmethod
    def x() -> "RatPoly":
        return RatPoly((Fraction(0), Fraction(1)))

    @staticmethod
    def monomial(c, e: int) -> "RatPoly":
        c = Fraction(c)
        if c == 0:
            return RatPoly(())
        return RatPoly((Fraction(0),) * e + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly.from_list(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return RatPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return RatPoly.from_list(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = RatPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RatPoly(()), self
        quot = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / other.lead
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] * inv_lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return RatPoly.from_list(quot), RatPoly.from_list(rem[: other.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "RatPoly") -> bool:
        return (other % self).is_zero()

    def __call__(self, u) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def compose(self, inner: "RatPoly") -> "RatPoly":
        acc = RatPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly.from_list([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "RatPoly":
        if self.is_zero() or self.lead == 1:
            return self
        inv = 1 / self.lead
        return RatPoly(tuple(c * inv for c in self.coeffs))

    def shift_scale(self, a) -> "RatPoly":
        """p(a*x) for rational a."""
        a = Fraction(a)
        out, pw = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * pw)
            pw *= a
        return RatPoly.from_list(out)

    def denominator_lcm(self) -> int:
        return lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1

    def scaled_integer(self) -> tuple[int, ...]:
        """Coefficients of denominator_lcm * self; an integer polynomial."""
        L = self.denominator_lcm()
        return tuple(int(c * L) for c in self.coeffs)

    def primitive_integer(self) -> tuple[tuple[int, ...], Fraction]:
        """(P, c) with self = c * P, P integer coefficients with gcd 1, lc > 0."""
        if self.is_zero():
            return (), Fraction(0)
        L = self.denominator_lcm()
        ints = [int(c * L) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return tuple(v // g for v in ints), Fraction(g, L)

    def __repr__(self):
        if self.is_zero():
            return "RatPoly('0')"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or i == 0) else ""
            sep = "*" if body and term else ""
            if not parts:
                sign = "-" if c < 0 else ""
            else:
                sign = " - " if c < 0 else " + "
            parts.append(f"{sign}{body}{sep}{term}")
        return f"RatPoly('{''.join(parts)}')"


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic greatest common divisor over Q."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a: RatPoly, b: RatPoly):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = RatPoly.one(), RatPoly.zero()
    t0, t1 = RatPoly.zero(), RatPoly.one()
    while not r1.is_zero():
        q, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = RatPoly.from_list([1 / r0.lead])
    return r0.monic(), s0 * inv, t0 * inv


def inverse_mod(a: RatPoly, modulus: RatPoly) -> RatPoly:
    g, s, _ = poly_xgcd(a % modulus, modulus)
    if g.degree != 0:
        raise ZeroDivisionError("element is not invertible modulo the given polynomial")
    return s % modulus


def compose(outer: RatPoly, inner: RatPoly) -> RatPoly:
    return outer.compose(inner)


def eval_at(p: RatPoly, u) -> Fraction:
    return p(u)


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> RatPoly:
    """The k-th cyclotomic polynomial, via (x^k - 1) / prod_{d|k, d<k} Phi_d."""
    if k < 1:
        raise ValueError("k must be >= 1")
    num = RatPoly.from_list([-1] + [0] * (k - 1) + [1])
    for d in range(1, k):
        if k % d == 0:
            q, rem = divmod(num, cyclotomic(d))
            assert rem.is_zero()
            num = q
    return num


def euler_phi(k: int) -> int:
    result = k
    n, p = k, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def integrality_residues(p: RatPoly, modulus: int) -> frozenset:
    """Residues u mod `modulus` for which p(u) is an integer.

    The integrality pattern of p is periodic with period L = lcm of the
    coefficient denominators; the scan runs over lcm(modulus, L) so the
    returned classes are exact whenever L divides `modulus`.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    L = p.denominator_lcm()
    ints = p.scaled_integer()
    span = lcm(modulus, L)
    found = set()
    for u in range(span):
        acc = 0
        for c in reversed(ints):
            acc = (acc * u + c) % L
        if acc == 0:
            found.add(u % modulus)
    return frozenset(found)


@dataclass(frozen=True)
class ResidueFilter:
    """Admissible seed classes as one residue set per prime-power modulus.

    Kept factored (CRT style) so that moduli like 2970292 = 2^2*13*239^2
    never force a multi-million element set into memory.
    """

    parts: tuple  # tuple of (modulus, frozenset of residues)

    @property
    def modulus(self) -> int:
        out = 1
        for m, _ in self.parts:
            out *= m
        return out

    def admits(self, u: int) -> bool:
        return all(u % m in allowed for m, allowed in self.parts)

    def is_empty(self) -> bool:
        return any(not allowed for _, allowed in self.parts)

    @staticmethod
    def trivial() -> "ResidueFilter":
        return ResidueFilter(())

    @staticmethod
    def for_polys(polys) -> "ResidueFilter":
        """Joint integrality filter: u admissible iff every poly is integral at u."""
        L = 1
        for p in polys:
            L = lcm(L, p.denominator_lcm())
        if L == 1:
            return ResidueFilter(())
        parts = []
        n, pr = L, 2
        prime_powers = []
        while pr * pr <= n:
            if n % pr == 0:
                pe = 1
                while n % pr == 0:
                    n //= pr
                    pe *= pr
                prime_powers.append(pe)
            pr += 1
        if n > 1:
            prime_powers.append(n)
        for pe in prime_powers:
            allowed = set(range(pe))
            for p in polys:
                Lp = p.denominator_lcm()
                g = gcd(Lp, pe)
                if g == 1:
                    continue
                ints = p.scaled_integer()
                ok = set()
                for u in range(pe):
                    acc = 0
                    for c in reversed(ints):
                        acc = (acc * u + c) % Lp
                    if acc % g == 0:
                        ok.add(u)
                allowed &= ok
            parts.append((pe, frozenset(allowed)))
        return ResidueFilter(tuple(sorted(parts)))


def squarefree_decomposition(p: RatPoly) -> tuple[Fraction, list]:
    """Yun's algorithm over Q: p = c * prod a_i^i with a_i monic square-free."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    c = p.lead
    p = p.monic()
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    cpart = dp // a - b.derivative()
    i = 1
    while b.degree > 0:
        a_i = poly_gcd(b, cpart)
        if a_i.degree > 0:
            out.append((a_i, i))
        b, cpart = b // a_i, cpart // a_i - (b // a_i).derivative()
        i += 1
    return c, out


def square_part(p: RatPoly) -> RatPoly:
    """Largest monic y with y^2 dividing p."""
    _, decomp = squarefree_decomposition(p)
    y = RatPoly.one()
    for a_i, e in decomp:
        if e >= 2:
            y = y * a_i ** (e // 2)
    return y


@dataclass(frozen=True)
class CmClass:
    """Shape of a CM polynomial f = 4q - t^2.

    kind 'CFD':    f = D * y^2 with D a positive square-free integer.
    kind 'CVD':    f = g * y^2 with deg g = 1.
    kind 'Sparse': f = g * y^2 with g quadratic and not a perfect square.
    kind 'Irregular' otherwise.  In every case g * y^2 reconstructs f.
    """

    kind: str
    D: int | None
    g: RatPoly
    y: RatPoly
    note: str = ""


def cm_polynomial(q: RatPoly, t: RatPoly) -> RatPoly:
    return 4 * q - t * t


def classify_cm(f: RatPoly) -> CmClass:
    """Classify f by splitting off its largest square polynomial factor."""
    if f.is_zero():
        raise ValueError("zero CM polynomial")
    y = square_part(f)
    g = f // (y * y)
    assert (g * y * y - f).is_zero()
    if g.degree == 0:
        c = g.coeffs[0]
        if c <= 0:
            return CmClass("Irregular", None, g, y, note="negative constant part")
        ab = c.numerator * c.denominator
        D, status = squarefree_part(ab)
        if status != "yes":
            return CmClass("Irregular", None, g, y, note="square-free part undetermined")
        s = isqrt(ab // D)
        y_scaled = y * Fraction(s, c.denominator)
        assert (D * y_scaled * y_scaled - f).is_zero()
        return CmClass("CFD", D, RatPoly.from_list([D]), y_scaled)
    if g.degree == 1:
        return CmClass("CVD", None, g, y)
    if g.degree == 2:
        # Yun leaves g square-free, so a quadratic g is never a perfect square
        return CmClass("Sparse", None, g, y)
    return CmClass("Irregular", None, g, y, note=f"residual degree {g.degree}")


def ratpoly_to_json(p: RatPoly) -> list:
    """Ascending [numerator, denominator] decimal-string pairs."""
    return [[str(c.numerator), str(c.denominator)] for c in p.coeffs]


def ratpoly_from_json(data) -> RatPoly:
    return RatPoly.from_list([Fraction(int(n), int(d)) for n, d in data])


def is_irreducible_q(p: RatPoly) -> bool:
    """Exact irreducibility over Q (constants are not irreducible)."""
    from .factorq import is_irreducible

    return is_irreducible(p)


def factor_q(p: RatPoly):
    """Full factorization over Q: (lead_constant, [(monic irreducible, mult)])."""
    from .factorq import factor

    return factor(p)
