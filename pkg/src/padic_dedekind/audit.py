"""Side-by-side evaluation of the asserted identities between Hardy-Berndt sums,
fermionic integrals and twisted q-Dedekind sums.

Audits classify, they do not assert. Left-hand sides come from
:mod:`classical_sums`; right-hand sides from :mod:`volkenborn` or
:mod:`twisted_bernoulli`, so the two sides share no intermediate values.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .classical_sums import CoprimePair, HardyKind, admissible, apostol_sum, hardy_sum, trig_series_partial
from .errors import PreconditionError
from .exactnum import bernoulli_poly, floor_g, format_rational, frac, sawtooth
from .padic import check_prime
from .twisted_bernoulli import TwistedBernoulliContext
from .twisted_dedekind import TwistedDedekindParams, twisted_dedekind_sum
from .volkenborn import PeriodicFn, fermionic_periodic_closed

EXACT = "exact"
WITHIN_TOLERANCE = "within_tolerance"
BRANCH_DEPENDENT_MISMATCH = "branch_dependent_mismatch"
MISMATCH = "mismatch"

FLOAT_TOLERANCE = 1e-6

IDENTITY_OF = {
    HardyKind.S2: "theorem-S2",
    HardyKind.S3: "corollary-S3",
    HardyKind.S5: "theorem-S5",
    HardyKind.S: "corollary-S",
}

# I_{-1} integrand and the constant the sum is claimed to equal times the integral
SCALE = {
    HardyKind.S2: Fraction(-1, 2),
    HardyKind.S3: Fraction(1),
    HardyKind.S5: Fraction(-2),
    HardyKind.S: Fraction(-1),
}


@dataclass
class AuditReport:
    identity: str
    params: dict
    lhs: str
    rhs: dict
    match: str
    details: str = ""
    branches: dict = field(default_factory=dict, repr=False)

    def to_json(self):
        return {
            "identity": self.identity,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "match": self.match,
            "details": self.details,
        }

    def csv_rows(self):
        """One row per branch (a single row when there are no branches)."""
        base = [self.identity, self.params.get("h", ""), self.params.get("k", ""), self.params.get("p", ""),
                self.params.get("m", ""), self.lhs]
        if not self.branches:
            return [base + ["", "", self.match]]
        return [base + [r, format_rational(v), self.match] for r, v in sorted(self.branches.items())]


CSV_HEADER = ["identity", "h", "k", "p", "m", "lhs", "branch_residue", "branch_value", "match"]


def sawtooth_table(h, k):
    """((h x / k)) for x = 0..k-1."""
    return [sawtooth(Fraction(h * x, k)) for x in range(k)]


def sign_table(h, k):
    """(-1)^[h x / 2k] for x = 0..4k-1."""
    return [Fraction(-1 if floor_g(Fraction(h * x, 2 * k)) % 2 else 1) for x in range(4 * k)]


def integrand_for(kind, pair):
    if kind in (HardyKind.S2, HardyKind.S3):
        return PeriodicFn(sawtooth_table(pair.h, pair.k))
    return PeriodicFn(sign_table(pair.h, pair.k))


def _classify_branches(lhs, scaled):
    values = set(scaled.values())
    if values == {lhs}:
        return EXACT, "every branch equals the left-hand side"
    hits = sorted(r for r, v in scaled.items() if v == lhs)
    if len(values) == 1:
        return MISMATCH, "branch-independent limit differs from the left-hand side"
    if hits:
        return BRANCH_DEPENDENT_MISMATCH, f"only branches r={hits} equal the left-hand side"
    return BRANCH_DEPENDENT_MISMATCH, "branches differ and none equals the left-hand side"


def audit_hardy_identity(kind, pair, p):
    kind = HardyKind.parse(kind) if not isinstance(kind, HardyKind) else kind
    pair = pair if isinstance(pair, CoprimePair) else CoprimePair(*pair)
    check_prime(p)
    lhs = hardy_sum(kind, pair)
    f = integrand_for(kind, pair)
    M = f.period * 2 // gcd(f.period, 2)
    if gcd(p, M) != 1:
        raise PreconditionError(f"p={p} must be prime to lcm(2, {f.period}) = {M}")
    report = fermionic_periodic_closed(f, p)
    scale = SCALE[kind]
    scaled = {r: scale * v for r, v in report.branch_values.items()}
    match, details = _classify_branches(lhs, scaled)
    rhs = report.to_json()
    rhs["scale"] = format_rational(scale)
    rhs["scaled_branches"] = {str(r): format_rational(v) for r, v in sorted(scaled.items())}
    return AuditReport(
        IDENTITY_OF[kind],
        {"kind": kind.value, "h": pair.h, "k": pair.k, "p": p},
        format_rational(lhs),
        rhs,
        match,
        details,
        scaled,
    )


def audit_sawtooth_integral(pair, p, num_periods=10**4):
    pair = pair if isinstance(pair, CoprimePair) else CoprimePair(*pair)
    check_prime(p)
    if pair.k % 2 == 0:
        raise PreconditionError(f"sawtooth integral audit needs k odd (the tangent series has poles for k={pair.k})")
    if gcd(p, 2 * pair.k) != 1:
        raise PreconditionError(f"p={p} must be prime to 2k = {2 * pair.k}")
    report = fermionic_periodic_closed(PeriodicFn(sawtooth_table(pair.h, pair.k)), p)
    rhs_exact = hardy_sum(HardyKind.S3, pair)
    rhs_float, last_block = trig_series_partial(HardyKind.S3, pair, num_periods)
    match, details = _classify_branches(rhs_exact, report.branch_values)
    float_ok = abs(rhs_float - float(rhs_exact)) < FLOAT_TOLERANCE
    details += f"; series vs finite value {'agree' if float_ok else 'DISAGREE'} within {FLOAT_TOLERANCE:g}"
    rhs = {
        "series_float": repr(rhs_float),
        "series_last_block": repr(last_block),
        "series_exact": format_rational(rhs_exact),
        "series_float_agrees": float_ok,
    }
    lhs = report.to_json()
    return AuditReport(
        "sawtooth-integral",
        {"h": pair.h, "k": pair.k, "p": p, "num_periods": num_periods},
        "branches:" + ",".join(f"{r}={format_rational(v)}" for r, v in sorted(report.branch_values.items())),
        dict(rhs, fermionic=lhs),
        match,
        details,
        dict(report.branch_values),
    )


def classical_limit_value(h, k, m):
    """sum_{j<k} (j/k) B_m({jh/k})."""
    return sum((Fraction(j, k) * bernoulli_poly(m, frac(Fraction(j * h, k))) for j in range(1, k)), Fraction(0))


def _distance(x, c):
    d = x - c
    return {"valuation": d.valuation(), "exact_zero": d.is_zero()}


def reduction_audit(h, k, m, p, M_ladder=(2, 4, 6), target_precision=10):
    check_prime(p)
    if gcd(h, k) != 1 or k < 1:
        raise PreconditionError(f"need coprime h, k with k >= 1; got h={h}, k={k}")
    if k % p:
        raise PreconditionError(f"reduction audit needs p | k; p={p}, k={k}")
    ladder = sorted(M_ladder)
    limit_value = classical_limit_value(h, k, m)
    claimed_value = k**m * apostol_sum(h, k, m + 1)
    rows, last = [], None
    for M in ladder:
        ctx = TwistedBernoulliContext.build(p, 1 + p**M, 0, max(m, 1), target_precision + m * 2)
        s = twisted_dedekind_sum(TwistedDedekindParams(h, k, m, ctx))
        rows.append(
            {
                "M": M,
                "v_to_classical_limit": _distance(s, limit_value)["valuation"],
                "v_to_claimed_value": _distance(s, claimed_value)["valuation"],
            }
        )
        last = s

    def approached(key):
        vals = [r[key] for r in rows]
        return len(vals) > 1 and all(b > a for a, b in zip(vals, vals[1:]))

    to_limit, to_claim = approached("v_to_classical_limit"), approached("v_to_claimed_value")
    match = WITHIN_TOLERANCE if to_claim else MISMATCH
    if to_limit and to_claim:
        details = "approaches both candidate values"
    elif to_limit:
        details = "approaches sum (j/k) B_m({jh/k}), not k^m s(h,k,m+1)"
    elif to_claim:
        details = "approaches k^m s(h,k,m+1)"
    else:
        details = "approaches neither candidate along the ladder"
    base = last.base_part()
    return AuditReport(
        "classical-reduction",
        {"h": h, "k": k, "m": m, "p": p, "M_ladder": ladder},
        json.dumps(base.to_json(), sort_keys=True),
        {
            "classical_limit": format_rational(limit_value),
            "claimed_value": format_rational(claimed_value),
            "ladder": rows,
        },
        match,
        details,
    )


def audit_grid(kmax, primes, num_periods=10**4, reduction_orders=(0, 1, 2), M_ladder=(2, 4, 6)):
    """Every admissible (identity, h, k, p) with 1 <= h <= k <= kmax, sorted by parameters."""
    reports = []
    for p in sorted(set(primes)):
        check_prime(p)
    for k in range(1, kmax + 1):
        for h in range(1, k + 1):
            if gcd(h, k) != 1:
                continue
            pair = CoprimePair(h, k)
            for p in sorted(set(primes)):
                for kind in (HardyKind.S2, HardyKind.S3, HardyKind.S5, HardyKind.S):
                    period = k if kind in (HardyKind.S2, HardyKind.S3) else 4 * k
                    if admissible(kind, h, k) and gcd(p, 2 * period) == 1:
                        reports.append(audit_hardy_identity(kind, pair, p))
                if k % 2 == 1 and gcd(p, 2 * k) == 1:
                    reports.append(audit_sawtooth_integral(pair, p, num_periods))
                if k % p == 0:
                    for m in reduction_orders:
                        reports.append(reduction_audit(h, k, m, p, M_ladder))
    reports.sort(key=_sort_key)
    return reports


def _sort_key(r):
    prm = r.params
    return (r.identity, prm.get("k", 0), prm.get("h", 0), prm.get("p", 0), prm.get("m", -1))


def reports_to_csv(reports):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerows(r.csv_rows())
    return buf.getvalue()
