"""Construction methods for pairing-friendly curves.

Individual curves: Cocks-Pinch (arbitrary k, rho ~ 2).  Parametric
families: Brezing-Weng over a cyclotomic-style field, the
variable-discriminant variant that adjoins sqrt(-x), and the sparse
searches (MNT for k in {3, 4, 6}, the cofactor extension, Scott-Barreto
reduction, and the degree-10 prime-order family) which walk solutions of
a generalized Pell equation back to curve parameters.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .catalog import FamilyRecord, _family, get_family, validate_family
from .instantiate import CurveInstance, InstantiationError, instantiate_family, verify_instance
from .mathcore import (
    is_prime,
    is_square_free,
    jacobi,
    solution_orbit,
    solve_pell,
    sqrt_mod,
    try_factorize,
)
from .polyring import (
    RatPoly,
    ResidueFilter,
    classify_cm,
    cyclotomic,
    euler_phi,
    inverse_mod,
    is_irreducible_q,
)

X = RatPoly.x()


class NoSolutionError(RuntimeError):
    pass


# ------------------------------------------------------------ Cocks-Pinch


def _primitive_root_of_unity(k: int, r: int) -> int:
    """Smallest-witness element of exact order k in (Z/r)*."""
    cof = (r - 1) // k
    k_primes = list(try_factorize(k))
    for a in range(2, r):
        z = pow(a, cof, r)
        if z != 1 and all(pow(z, k // p, r) != 1 for p in k_primes):
            return z
    raise NoSolutionError(f"no element of order {k} mod {r}")


def cocks_pinch(k: int, D: int, r: int, max_shifts: int = 32) -> CurveInstance:
    """Individual curve with subgroup r and embedding degree k.

    Scans both square roots of -D, both parities of t and y (shifting by
    r), and grows |t| by further multiples of r until q = (t^2 + D y^2)/4
    is an integral prime.  rho near 2 is the expected outcome of this
    method, not a defect.
    """
    if k < 2 or r < 5:
        raise ValueError("need k >= 2 and prime r >= 5")
    if not is_prime(r):
        raise ValueError("r must be prime")
    if (r - 1) % k:
        raise ValueError(f"k = {k} does not divide r - 1 = {r - 1}")
    if D <= 0 or is_square_free(D) == "no":
        raise ValueError("D must be a positive square-free integer")
    if jacobi((-D) % r, r) != 1:
        raise ValueError(f"-{D} is not a quadratic residue mod {r}")

    z = _primitive_root_of_unity(k, r)
    t0 = (z + 1) % r
    roots = sqrt_mod((-D) % r, r)
    for j in range(max_shifts):
        for t_cand in ((t0 + j * r), (t0 - (j + 1) * r)):
            for s in roots:
                y0 = (t_cand - 2) * pow(s, -1, r) % r
                for y_cand in (y0, y0 - r, y0 + r):
                    num = t_cand * t_cand + D * y_cand * y_cand
                    if num % 4:
                        continue
                    q = num // 4
                    if q < 5 or q == r or not is_prime(q):
                        continue
                    count = q + 1 - t_cand
                    if count % r:
                        continue
                    inst = CurveInstance(
                        family="cocks-pinch", u=None, q=q, r_full=r, r_prime=r,
                        h=count // r, t=t_cand, c=1, D=D, y=abs(y_cand), k=k,
                    )
                    inst.report = verify_instance(inst)
                    if not inst.report.failures():
                        return inst
    raise NoSolutionError(
        f"no integral prime q for (k={k}, D={D}, r={r}) within {max_shifts} shifts"
    )


# ----------------------------------------------------------- Brezing-Weng


def _match_cyclotomic(r_poly: RatPoly) -> int | None:
    """n with r_poly = Phi_n, if any."""
    d = r_poly.degree
    n = 1
    while n <= max(4 * d * d, 8):
        if euler_phi(n) == d and cyclotomic(n) == r_poly:
            return n
        n += 1
    return None


def _sqrt_minus_d_cyclotomic(D: int, n: int) -> RatPoly | None:
    """A polynomial mapping to sqrt(-D) in Q[x]/(Phi_n), or None.

    Assembled multiplicatively from zeta_4 and quadratic Gauss sums of the
    odd prime factors of D; the caller verifies s^2 = -D afterwards.
    """

    def zeta_power(j: int) -> RatPoly:
        return RatPoly.monomial(1, j % n)

    def gauss_sum(p: int) -> RatPoly | None:
        if n % p:
            return None
        acc = RatPoly.zero()
        for a in range(1, p):
            acc = acc + jacobi(a, p) * zeta_power(a * n // p)
        return acc  # squares to p for p = 1 mod 4, to -p for p = 3 mod 4

    remaining = D
    parts: list[RatPoly] = []
    need_i = True  # carry sqrt(-1) unless an odd prime = 3 mod 4 supplies the sign
    if remaining % 2 == 0:
        if n % 8:
            return None
        # zeta_8 + zeta_8^3 squares to -2
        parts.append(zeta_power(n // 8) + zeta_power(3 * n // 8))
        remaining //= 2
        need_i = False
    p = 3
    while remaining > 1:
        while remaining % p:
            p += 2
        g = gauss_sum(p)
        if g is None:
            return None
        parts.append(g)
        if p % 4 == 3 and need_i:
            need_i = False  # this factor already contributes sqrt(-p)
        elif p % 4 == 3:
            pass  # extra factor of -1 handled by the final verification wrapper
        remaining //= p
    if need_i or D == 1:
        if n % 4:
            return None
        parts.append(zeta_power(n // 4))
    s = RatPoly.one()
    for part in parts:
        s = s * part
    return s


def find_sqrt_minus_d(D: int, r_poly: RatPoly) -> RatPoly:
    """Some s with s^2 = -D in Q[x]/(r_poly).

    Closed cyclotomic forms first; then a bounded search over small-height
    candidates.  Raises NoSolutionError when nothing in the lattice works.
    """

    def ok(s: RatPoly) -> bool:
        return ((s * s + D) % r_poly).is_zero()

    n = _match_cyclotomic(r_poly)
    if n is not None:
        s = _sqrt_minus_d_cyclotomic(D, n)
        if s is not None:
            s = s % r_poly
            if ok(s):
                return s
            # the Gauss-sum assembly can be off by a factor of sqrt(-1)
            if n % 4 == 0:
                fixed = (s * RatPoly.monomial(1, n // 4)) % r_poly
                if ok(fixed):
                    return fixed
    deg = min(r_poly.degree, 5)
    import itertools

    for denom in (1, 2, 3):
        for coeffs in itertools.product((0, 1, -1, 2, -2), repeat=deg):
            s = RatPoly.from_list([Fraction(c, denom) for c in coeffs])
            if not s.is_zero() and ok(s):
                return s
    raise NoSolutionError(f"no square root of -{D} found in Q[x]/({r_poly!r})")


def brezing_weng(k: int, D: int, r_poly: RatPoly, zeta_rep: RatPoly,
                 name: str | None = None) -> FamilyRecord:
    """Family from a number field presented as Q[x]/(r_poly).

    zeta_rep must map to a primitive k-th root of unity (checked via
    Phi_k), and the field must contain sqrt(-D).  Then t = zeta + 1,
    y = (zeta - 1)/sqrt(-D), q = (t^2 + D y^2)/4 taken as polynomials.
    """
    if not is_irreducible_q(r_poly):
        raise ValueError("r_poly must be irreducible over Q")
    zeta = zeta_rep % r_poly
    if not (cyclotomic(k).compose(zeta) % r_poly).is_zero():
        raise ValueError("zeta_rep is not a primitive k-th root of unity in the field")
    s = find_sqrt_minus_d(D, r_poly)
    t = (zeta + 1) % r_poly
    y = ((zeta - 1) * inverse_mod(s, r_poly)) % r_poly
    q = (t * t + D * y * y) * Fraction(1, 4)
    filt = ResidueFilter.for_polys([q, t])
    if filt.is_empty():
        raise NoSolutionError("q(x) is never integral on any residue class")
    if not is_irreducible_q(q):
        raise NoSolutionError("q(x) is reducible, so it cannot represent primes")
    rec = _family(
        name or f"BW-k{k}-D{D}", k, q, r_poly, t,
        provenance="Brezing-Weng construction", D=D,
    )
    report = validate_family(rec)
    for cond in ("c3", "c4", "c5"):
        if report.status_of(cond) != "pass":
            raise NoSolutionError(f"constructed family fails {cond}")
    return rec


# ------------------------------------------------- variable-discriminant


def drylo_cvd(k: int, r_poly: RatPoly, z_rep: RatPoly,
              zeta_rep: RatPoly | None = None, name: str | None = None) -> FamilyRecord:
    """Variable-discriminant family: needs z_rep with z^2 = -x in the field.

    The CM polynomial comes out as x * y(x)^2; substituting x -> D x^2
    (see substitute_discriminant) then yields a fixed-discriminant family
    for every square-free D.
    """
    if not is_irreducible_q(r_poly):
        raise ValueError("r_poly must be irreducible over Q")
    z = z_rep % r_poly
    if not ((z * z + X) % r_poly).is_zero():
        raise ValueError("z_rep^2 != -x in Q[x]/(r_poly): not a valid generator witness")
    candidates = []
    if zeta_rep is not None:
        candidates.append(zeta_rep % r_poly)
    else:
        candidates = _roots_of_unity_candidates(k, r_poly)
        if not candidates:
            raise NoSolutionError(
                "cannot locate a k-th root of unity in this field; pass zeta_rep explicitly"
            )
    last_error = None
    for zeta in candidates:
        if not (cyclotomic(k).compose(zeta) % r_poly).is_zero():
            if zeta_rep is not None:
                raise ValueError("zeta_rep is not a primitive k-th root of unity in the field")
            continue
        t = (zeta + 1) % r_poly
        y = ((zeta - 1) * inverse_mod(z, r_poly)) % r_poly
        q = (t * t + X * y * y) * Fraction(1, 4)
        filt = ResidueFilter.for_polys([q, t])
        if filt.is_empty():
            last_error = NoSolutionError("q(x) never integral")
            continue
        rec = _family(
            name or f"DryloCVD-k{k}", k, q, r_poly, t,
            provenance="variable-discriminant construction", D="variable",
        )
        cm = classify_cm(rec.cm_poly())
        if cm.kind != "CVD":
            last_error = NoSolutionError(f"CM class came out {cm.kind}, not CVD")
            continue
        return rec
    raise last_error or NoSolutionError("no usable k-th root of unity")


def _roots_of_unity_candidates(k: int, r_poly: RatPoly) -> list:
    """Candidate primitive k-th roots when r_poly = Phi_n(c*x) for integer c."""
    d = r_poly.degree
    out = []
    for n in range(k, 8 * d * d + 1, k):
        if euler_phi(n) != d:
            continue
        lead = r_poly.lead / cyclotomic(n).lead
        if lead < 0:
            continue
        num, den = lead.numerator, lead.denominator
        if den != 1:
            continue
        c = round(num ** (1.0 / d))
        for cc in (c - 1, c, c + 1):
            if cc >= 1 and cyclotomic(n).compose(RatPoly.monomial(cc, 1)) == r_poly:
                base = RatPoly.monomial(cc, 1)
                for j in range(1, n):
                    if n // gcd(j, n) == k:
                        out.append(base**j % r_poly)
                return out
    return out


def substitute_discriminant(rec: FamilyRecord, D: int, name: str | None = None) -> FamilyRecord:
    """x -> D x^2 on a CVD family, producing a fixed-discriminant family."""
    if is_square_free(D) == "no" or D <= 0:
        raise ValueError("D must be a positive square-free integer")
    inner = RatPoly.monomial(D, 2)
    return _family(
        name or f"{rec.name}-D{D}",
        rec.k,
        rec.q.compose(inner),
        rec.r.compose(inner),
        rec.t.compose(inner),
        provenance=f"{rec.provenance} substituted x -> {D}x^2",
        D=D,
    )


# ------------------------------------------------------- Pell reductions


@dataclass(frozen=True)
class PellForm:
    """D*y^2 = a*u^2 + b*u + c rewritten as X^2 - (lam*D)*y^2 = m, X = p*u + q0."""

    a: int
    b: int
    c: int
    lam: int
    p: int
    q0: int
    m: int

    def n_for(self, D: int) -> int:
        return self.lam * D

    def x_from_u(self, u: int) -> int:
        return self.p * u + self.q0

    def u_from_x(self, x: int) -> int | None:
        num = x - self.q0
        return num // self.p if num % self.p == 0 else None


def quadratic_pell_form(quad: RatPoly) -> PellForm:
    """Normalize an integer quadratic A u^2 + B u + C (A > 0) to a Pell form."""
    if quad.degree != 2:
        raise ValueError("polynomial is not quadratic")
    L = quad.denominator_lcm()
    if L != 1:
        raise ValueError("quadratic has non-integer coefficients")
    C, B, A = (int(c) for c in quad.coeffs)
    if A <= 0:
        raise ValueError("leading coefficient must be positive")
    lam = 1
    n = A
    f = 2
    while f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
        if n % f == 0:
            lam *= f
            n //= f
        f += 1
    lam *= n
    s = isqrt(A // lam)
    if B % (2 * s) == 0:
        p, q0 = lam * s, B // (2 * s)
        m = q0 * q0 - lam * C
        return PellForm(A, B, C, lam, p, q0, m)
    # fall back to multiplying through by 4A
    return PellForm(A, B, C, 4 * A, 2 * A, B, B * B - 4 * A * C)


def scott_barreto_reduce(k: int, h: int, d: int = 1) -> tuple[RatPoly, PellForm]:
    """RHS of D y^2 = 4h*Phi_k(x)/d - (x - 1)^2 plus its Pell normalization."""
    if k not in (3, 4, 6):
        raise ValueError("the right-hand side is quadratic only for k in {3, 4, 6}")
    if h < 1 or d < 1:
        raise ValueError("h and d must be positive")
    rhs = 4 * h * cyclotomic(k) * Fraction(1, d) - (X - 1) ** 2
    if rhs.denominator_lcm() != 1:
        raise ValueError(f"d = {d} does not divide the cyclotomic combination")
    return rhs, quadratic_pell_form(rhs)


def _pell_seed_values(form: PellForm, D: int, y_bound: int, rungs: int = 3):
    """All u with form satisfied for discriminant D, walking the unit orbit."""
    n = form.n_for(D)
    if n <= 0 or isqrt(n) ** 2 == n:
        return
    try:
        reps = solve_pell(n, form.m, y_bound)
    except ValueError:
        return
    seen = set()
    for rep in reps:
        for sol in solution_orbit(rep, rungs=rungs):
            for x in {sol.x, -sol.x}:
                u = form.u_from_x(x)
                if u is not None and u not in seen:
                    seen.add(u)
                    yield u, abs(sol.y)


# ------------------------------------------------------------ MNT search


_MNT_BRANCHES = {3: ("MNT3a", "MNT3b"), 4: ("MNT4a", "MNT4b"), 6: ("MNT6a", "MNT6b")}


def mnt_search(k: int, d_max: int, y_bound: int = 10**4, rungs: int = 3) -> list:
    """Prime-order curves with k in {3, 4, 6} via the Pell transformation.

    For each square-free D <= d_max and each trace branch, rewrites
    4q(u) - t(u)^2 = D y^2 as X^2 - lam*D*y^2 = m and maps the solutions
    back to seeds; every hit is re-verified.
    """
    if k not in _MNT_BRANCHES:
        raise ValueError("MNT families exist for k in {3, 4, 6}")
    out = []
    seen = set()
    for branch in _MNT_BRANCHES[k]:
        fam = get_family(branch)
        form = quadratic_pell_form(fam.cm_poly())
        for D in range(1, d_max + 1):
            if is_square_free(D) != "yes":
                continue
            for u, _y in _pell_seed_values(form, D, y_bound, rungs):
                try:
                    inst = instantiate_family(fam, u)
                except InstantiationError:
                    continue
                key = (inst.q, inst.r_prime, inst.t)
                if key not in seen and inst.D == D:
                    seen.add(key)
                    out.append(inst)
    out.sort(key=lambda i: (abs(i.u), i.D, i.u < 0))
    return out


def gmv_search(k: int, cofactors, d_max: int, y_bound: int = 10**4, rungs: int = 3) -> list:
    """Small-cofactor extension of the MNT search (h = 1 reproduces it).

    Uses r = Phi_k(x), t = x + 1, q = h*Phi_k(x) + x, whose CM quadratic
    is the Scott-Barreto right-hand side with d = 1.
    """
    if k not in (3, 4, 6):
        raise ValueError("cofactor search defined for k in {3, 4, 6}")
    out = []
    seen = set()
    for h in sorted(set(cofactors)):
        if h < 1:
            raise ValueError("cofactors must be positive")
        q = h * cyclotomic(k) + X
        fam = _family(f"GMV{k}-h{h}", k, q, cyclotomic(k), X + 1,
                      provenance="cofactor family", D="variable", strict=True)
        try:
            rhs, form = scott_barreto_reduce(k, h, 1)
        except ValueError:
            continue
        if form.m == 0:
            continue  # degenerate square case (k = 3, h = 1): no Pell form
        for D in range(1, d_max + 1):
            if is_square_free(D) != "yes":
                continue
            for u, _y in _pell_seed_values(form, D, y_bound, rungs):
                try:
                    inst = instantiate_family(fam, u)
                except InstantiationError:
                    continue
                if inst.h != h or inst.D != D:
                    continue
                key = (inst.q, inst.r_prime, inst.t)
                if key not in seen:
                    seen.add(key)
                    out.append(inst)
    out.sort(key=lambda i: (abs(i.u), i.D, i.u < 0))
    return out


def freeman10_search(d_list, v_bound: int = 10**4, rungs: int = 3) -> list:
    """Prime-order k = 10 instances from U^2 - 15 D v^2 = -20, U = 15x + 5."""
    fam = get_family("Freeman10")
    out = []
    seen = set()
    for D in d_list:
        if is_square_free(D) != "yes":
            raise ValueError(f"D = {D} is not square-free")
        n = 15 * D
        if isqrt(n) ** 2 == n:
            continue
        try:
            reps = solve_pell(n, -20, v_bound)
        except ValueError:
            continue
        for rep in reps:
            for sol in solution_orbit(rep, rungs=rungs):
                for U in {sol.x, -sol.x}:
                    if (U - 5) % 15:
                        continue
                    x = (U - 5) // 15
                    try:
                        inst = instantiate_family(fam, x)
                    except InstantiationError:
                        continue
                    if inst.D != D:
                        continue
                    key = (inst.q, inst.r_prime)
                    if key not in seen:
                        seen.add(key)
                        out.append(inst)
    out.sort(key=lambda i: (abs(i.u), i.D, i.u < 0))
    return out
