"""Concrete curve parameters from families: seed streams, instantiation,
and instance-level verification.

Seeds follow the sparse signed-binary convention used for published
curves (sums of a few powers of two, e.g. 2^110 + 2^36 + 1), since low
Hamming weight drives pairing cost.  Bit length always means the
position of the highest set bit of the absolute value: bitlen(97) = 7.
This convention reproduces the published 446 / 768 / 1150 bit sizes.
"""

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .catalog import CheckResult, FamilyRecord, ValidationReport
from .mathcore import is_prime, squarefree_part, try_factorize
from .polyring import ResidueFilter


def bitlen(n: int) -> int:
    return abs(n).bit_length()


def signed_binary_terms(n: int) -> list:
    """Non-adjacent form of n as [sign, exponent] pairs, highest first."""
    terms = []
    e = 0
    while n:
        if n & 1:
            d = 2 - (n & 3)  # +-1, choosing the non-adjacent digit
            terms.append([d, e])
            n -= d
        n //= 2
        e += 1
    return terms[::-1]


class InstantiationError(ValueError):
    """Seed rejected: which check failed is in args[0]."""


@dataclass
class CurveInstance:
    """A concrete parameter set.

    h is the full curve cofactor against the prime subgroup:
    q + 1 - t = h * r_prime.  (For families whose r(x) carries a numeric
    content c, the polynomial-level h(u) is fractional, so the
    instance-level identity is stated against r_prime.)
    """

    family: str
    u: int | None  # seed; None for individual-curve constructions
    q: int
    r_full: int
    r_prime: int
    h: int
    t: int
    c: int  # r_full = c * r_prime
    D: int
    y: int
    k: int
    d_status: str = "yes"  # square-free certainty for D
    report: ValidationReport | None = None

    @property
    def rho_bits(self) -> Fraction:
        return Fraction(bitlen(self.q), bitlen(self.r_prime))

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "u": None if self.u is None else str(self.u),
            "u_sparse": None if self.u is None else signed_binary_terms(self.u),
            "q": str(self.q),
            "r_full": str(self.r_full),
            "r_prime": str(self.r_prime),
            "h": str(self.h),
            "t": str(self.t),
            "c": str(self.c),
            "D": str(self.D),
            "y": str(self.y),
            "k": self.k,
            "d_status": self.d_status,
            "rho_bits": [str(self.rho_bits.numerator), str(self.rho_bits.denominator)],
            "report": None if self.report is None else self.report.to_json(),
        }

    @staticmethod
    def from_json(data: dict) -> "CurveInstance":
        report = None
        if data.get("report"):
            report = ValidationReport(
                [CheckResult(e["condition"], e["status"], e["detail"]) for e in data["report"]]
            )
        return CurveInstance(
            family=data["family"],
            u=None if data["u"] is None else int(data["u"]),
            q=int(data["q"]),
            r_full=int(data["r_full"]),
            r_prime=int(data["r_prime"]),
            h=int(data["h"]),
            t=int(data["t"]),
            c=int(data["c"]),
            D=int(data["D"]),
            y=int(data["y"]),
            k=int(data["k"]),
            d_status=data.get("d_status", "yes"),
            report=report,
        )


@dataclass(frozen=True)
class SeedSpec:
    target_r_bits: int
    max_terms: int = 4
    exp_lo: int = 0
    exp_hi: int = 64
    sign: str = "both"  # "positive" | "negative" | "both"
    residue_filter: ResidueFilter = field(default_factory=ResidueFilter.trivial)
    budget: int = 100000

    def __post_init__(self):
        if self.max_terms < 1 or self.budget < 1:
            raise ValueError("max_terms and budget must be >= 1")
        if self.sign not in ("positive", "negative", "both"):
            raise ValueError("sign must be positive/negative/both")


def seed_candidates(spec: SeedSpec):
    """Deterministic stream of sparse signed-binary seeds.

    Every signed sum of at most `max_terms` distinct powers of two whose
    leading exponent lies in [exp_lo, exp_hi] (the remaining exponents
    range freely below the leading one), deduplicated, ordered by
    (absolute value, minimal term count, positive first), filtered by the
    residue classes.  A pure function of the spec.
    """
    seen: dict[int, int] = {}
    for e in range(spec.exp_lo, spec.exp_hi + 1):
        for count in range(0, spec.max_terms):
            for combo in itertools.combinations(range(e), count):
                for signs in itertools.product((1, -1), repeat=count):
                    magnitude = (1 << e) + sum(s << i for s, i in zip(signs, combo))
                    for v in (magnitude, -magnitude):
                        if v not in seen or seen[v] > count + 1:
                            seen[v] = count + 1
    items = sorted(seen.items(), key=lambda kv: (abs(kv[0]), kv[1], kv[0] < 0))
    filt = spec.residue_filter
    for v, _count in items:
        if spec.sign == "positive" and v < 0:
            continue
        if spec.sign == "negative" and v > 0:
            continue
        if not filt.admits(v):
            continue
        yield v


def instantiate_family(fam: FamilyRecord, u: int) -> CurveInstance:
    """Evaluate a family at a seed and verify the result.

    Raises InstantiationError when the seed is inadmissible, a value is
    non-integral, or a primality requirement fails.
    """
    if not fam.is_parametric:
        raise InstantiationError(f"{fam.name} is an individual-curve stub")
    if not fam.integrality.admits(u):
        raise InstantiationError(f"seed {u} not in the admissible residue classes")
    qv, rv, tv = fam.q(u), fam.r(u), fam.t(u)
    for label, v in (("q", qv), ("r", rv), ("t", tv)):
        if v.denominator != 1:
            raise InstantiationError(f"{label}({u}) is not an integer")
    qv, rv, tv = int(qv), int(rv), int(tv)
    if rv <= 0 or qv < 5:
        raise InstantiationError("degenerate size (q < 5 or r <= 0)")
    c = fam.r_cofactor
    if rv % c:
        raise InstantiationError(f"declared cofactor {c} does not divide r({u})")
    r_prime = rv // c
    count = qv + 1 - tv
    if count % r_prime:
        raise InstantiationError(f"r({u})/{c} does not divide the point count")
    hv = count // r_prime
    if not is_prime(qv):
        raise InstantiationError(f"q({u}) is not prime")
    if not is_prime(r_prime):
        raise InstantiationError(f"r({u})/{c} is not prime")

    f_val = 4 * qv - tv * tv
    if f_val <= 0:
        raise InstantiationError("CM value 4q - t^2 is not positive")
    if fam.D != "variable":
        D = int(fam.D)
        d_status = "yes"
        y_frac = fam.y(u)
        if y_frac.denominator != 1:
            raise InstantiationError(f"y({u}) is not an integer")
        y = abs(int(y_frac))
    else:
        # split 4q - t^2 = D * y^2 with D square-free (certified when possible)
        D, d_status = squarefree_part(f_val)
        y = isqrt(f_val // D)
    if D * y * y != f_val:
        # recompute y for the fixed-D case where the family y had a sign/scale quirk
        if fam.D != "variable" and f_val % D == 0:
            y2 = isqrt(f_val // D)
            if D * y2 * y2 == f_val:
                y = y2
        if D * y * y != f_val:
            raise InstantiationError("CM equation 4q - t^2 = D y^2 failed")

    inst = CurveInstance(
        family=fam.name, u=u, q=qv, r_full=rv, r_prime=r_prime, h=hv, t=tv,
        c=c, D=D, y=y, k=fam.k, d_status=d_status,
    )
    inst.report = verify_instance(inst)
    if inst.report.failures():
        raise InstantiationError(
            f"verification failed: {[e.condition for e in inst.report.failures()]}"
        )
    return inst


def verify_instance(inst: CurveInstance) -> ValidationReport:
    """Re-check every instance invariant; findings are reported, not thrown."""
    entries = []

    def check(cond, ok, detail=""):
        entries.append(CheckResult(cond, "pass" if ok else "fail", detail))

    check("count-identity", inst.q + 1 - inst.t == inst.h * inst.r_prime,
          "q + 1 - t = h * r'")
    check("hasse-bound", inst.t * inst.t <= 4 * inst.q, "|t| <= 2 sqrt(q)")
    check("cm-equation", 4 * inst.q - inst.t * inst.t == inst.D * inst.y * inst.y,
          "4q - t^2 = D y^2")
    check("cofactor", inst.r_full == inst.c * inst.r_prime, "r = c * r'")
    check("q-prime", is_prime(inst.q))
    check("r-prime", is_prime(inst.r_prime))
    if inst.d_status == "yes":
        check("d-squarefree", True, f"D = {inst.D} certified square-free")
    else:
        entries.append(CheckResult("d-squarefree", "advisory",
                                   f"square-free status of D = {inst.D} undetermined"))

    r = inst.r_prime
    if inst.q % r == 0:
        check("embedding-degree", False, "r divides q")
    else:
        ok = pow(inst.q, inst.k, r) == 1 and all(
            pow(inst.q, inst.k // p, r) != 1 for p in try_factorize(inst.k)
        )
        check("embedding-degree", ok,
              f"ord(q mod r') = {inst.k}: r' | q^k - 1 and r' does not divide q^i - 1 for i | k, i < k")

    rho_ok = bitlen(inst.q) <= 2 * bitlen(inst.r_prime)
    entries.append(CheckResult("rho-at-most-2", "advisory" if rho_ok else "fail",
                               f"bitlen(q)/bitlen(r') = {bitlen(inst.q)}/{bitlen(inst.r_prime)}"))
    big_enough = inst.r_prime * inst.r_prime >= inst.q
    entries.append(CheckResult("r-at-least-sqrt-q", "advisory",
                               "holds" if big_enough else "r' below sqrt(q)"))
    return ValidationReport(entries)


@dataclass
class SearchResult:
    instances: list
    tried: int
    budget_exhausted: bool


def _default_exp_window(fam: FamilyRecord, target_r_bits: int) -> tuple[int, int]:
    deg = fam.r.degree
    lead_bits = bitlen(int(fam.r.lead * fam.r.denominator_lcm()))
    top = (target_r_bits + bitlen(fam.r_cofactor) - lead_bits + deg - 1) // deg + 1
    return max(0, top - 3), top + 1


def make_seed_spec(fam: FamilyRecord, target_r_bits: int, max_terms: int = 4,
                   budget: int = 100000, sign: str = "both") -> SeedSpec:
    lo, hi = _default_exp_window(fam, target_r_bits)
    return SeedSpec(
        target_r_bits=target_r_bits,
        max_terms=max_terms,
        exp_lo=0 if hi <= 8 else lo,
        exp_hi=hi,
        sign=sign,
        residue_filter=fam.integrality,
        budget=budget,
    )


def search(fam: FamilyRecord, spec: SeedSpec, jobs: int = 1) -> SearchResult:
    """Stream seeds through instantiate_family, keeping verified hits.

    Accepts instances whose subgroup size lands within one bit of the
    target.  `jobs > 1` partitions the candidate list into deterministic
    strides; the merged output is re-sorted so results do not depend on
    scheduling.
    """
    candidates = list(itertools.islice(seed_candidates(spec), spec.budget))
    exhausted = len(candidates) >= spec.budget

    def attempt(u):
        try:
            inst = instantiate_family(fam, u)
        except InstantiationError:
            return None
        if abs(bitlen(inst.r_prime) - spec.target_r_bits) > 1:
            return None
        return inst

    if jobs <= 1:
        hits = [inst for inst in map(attempt, candidates) if inst]
    else:
        strides = [candidates[i::jobs] for i in range(jobs)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(lambda chunk: [attempt(u) for u in chunk], strides)
        hits = [inst for part in parts for inst in part if inst]
        hits.sort(key=lambda i: (abs(i.u), len(signed_binary_terms(i.u)), i.u < 0))
    return SearchResult(hits, len(candidates), exhausted)
