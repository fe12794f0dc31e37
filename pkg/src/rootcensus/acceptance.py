"""Packaged acceptance suite: twelve numbered criteria gating the build.

Each criterion re-measures its quantities from scratch through the public
library API and reports a CriterionResult with status PASS, FAIL or
DEFECT plus the measured-versus-expected evidence. The `verify` CLI
subcommand prints these results and exits nonzero iff any criterion
FAILs; the pytest gate asserts the same.

Status semantics:

- PASS: every gate of the criterion holds and the run fit its budget.
- FAIL: a gate is violated (or the runtime budget is exceeded).
- DEFECT: the criterion's literal gates are mathematically unsatisfiable,
  so no implementation could turn them green; the suite documents the
  degeneracy, runs the nearest non-degenerate variant of the same gates,
  and reports DEFECT (which does not fail the suite) only when that
  variant passes. Criterion 5 is the one such case: for degree 2 with a
  nonzero leading coefficient, every polynomial has k_max in {1, 2}, so
  the dominated share is identically 1 and its complement identically 0.

Suites: "full" runs every criterion at its stated size; "quick" shrinks
only the expensive sampled criteria (7-11) and the determinism box so the
whole suite finishes in well under two minutes.

Negative control: when the environment variable ROOTCENSUS_NEGATIVE_CONTROL
is set to a nonempty value other than "0", the independent recount inside
criterion 2 deliberately mislabels k_max (k -> n - k + 1). The suite must
then FAIL and `verify` must exit nonzero. The hook exists so the tests can
prove the gate actually turns red on a lying classifier; never set it
otherwise.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
import multiprocessing
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .census import CensusSpec, fit_growth_exponent, make_work_units, run_census
from .classify import (
    has_multiplicative_relation,
    modulus_profile,
    root_signature,
    sn_certificate,
)
from .errors import BadParameters, HTooSmall, TargetNotSeparated
from .generators import (
    TargetSpec,
    _target_bounds,
    near_target_family,
    perturbation_bounds,
)
from .intpoly import IntPolynomial, discriminant
from .roots import (
    _fraction_sqrt_upper,
    fujiwara_bound,
    isolate_roots,
    mpf_to_fraction,
    refine,
)

__all__ = [
    "CriterionResult",
    "run_acceptance",
    "exit_code",
    "CRITERION_IDS",
    "NEGATIVE_CONTROL_ENV",
]

NEGATIVE_CONTROL_ENV = "ROOTCENSUS_NEGATIVE_CONTROL"

# per-criterion runtime budgets in seconds (criteria stated as pure
# exactness checks get the default five minutes)
_BUDGET = {
    1: 300.0,
    2: 300.0,
    3: 600.0,
    4: 1800.0,
    5: 600.0,
    6: 300.0,
    7: 300.0,
    8: 300.0,
    9: 120.0,
    10: 300.0,
    11: 60.0,
    12: 600.0,
}


@dataclass
class CriterionResult:
    cid: int
    name: str
    status: str  # PASS | FAIL | DEFECT
    expected: str
    measured: Dict[str, object]
    runtime_seconds: float = 0.0
    notes: str = ""

    def to_json(self) -> Dict[str, object]:
        return {
            "criterion": self.cid,
            "name": self.name,
            "status": self.status,
            "expected": self.expected,
            "measured": self.measured,
            "runtime_seconds": self.runtime_seconds,
            "notes": self.notes,
        }


@dataclass
class _Context:
    quick: bool
    jobs: int
    cache: Dict[str, object] = field(default_factory=dict)


def _negative_control_active() -> bool:
    return os.environ.get(NEGATIVE_CONTROL_ENV, "") not in ("", "0")


def _census(ctx: _Context, **kw) -> object:
    """Cached census run; the table is a pure function of the spec
    fingerprint, so sharing between criteria cannot change results."""
    spec = CensusSpec(jobs=ctx.jobs, **kw)
    key = json.dumps(spec.fingerprint(), sort_keys=True)
    if key not in ctx.cache:
        ctx.cache[key] = run_census(spec)
    return ctx.cache[key]


# -- criterion 1: exact completeness ---------------------------------------


def _c1(ctx: _Context) -> CriterionResult:
    measured: Dict[str, object] = {}
    ok = True
    for n, H in ((2, 10), (3, 6)):
        box = (2 * H + 1) ** n
        t = _census(ctx, n=n, height=H, monic=True, counters=("A",))
        s = t.family_total("A")
        measured["A(%d,%d)" % (n, H)] = {"sum": s, "box": box, "ambiguous": t.ambiguous}
        ok = ok and s == box and t.totals == box and t.ambiguous == 0
    for n, H in ((2, 8), (3, 5)):
        box = 2 * H * (2 * H + 1) ** n
        t = _census(ctx, n=n, height=H, monic=False, counters=("A*",))
        s = t.family_total("A*")
        measured["A*(%d,%d)" % (n, H)] = {"sum": s, "box": box, "ambiguous": t.ambiguous}
        ok = ok and s == box and t.totals == box and t.ambiguous == 0
    return CriterionResult(
        1,
        "exact completeness",
        "PASS" if ok else "FAIL",
        "sum_k A_n(k,H) = (2H+1)^n and sum_k A*_n(k,H) = 2H(2H+1)^n, ambiguous = 0",
        measured,
    )


# -- criterion 2: hand-oracle box -------------------------------------------


def _monic_quadratics_h1() -> Iterable[IntPolynomial]:
    for b in (-1, 0, 1):
        for c in (-1, 0, 1):
            yield IntPolynomial((1, b, c))


def _quadratics_h1() -> Iterable[IntPolynomial]:
    for a in (-1, 1):
        for b in (-1, 0, 1):
            for c in (-1, 0, 1):
                yield IntPolynomial((a, b, c))


def _recount_profile(f: IntPolynomial):
    """Per-polynomial k_max recount used by criterion 2; the negative
    control deliberately corrupts it (k -> n - k + 1)."""
    p = modulus_profile(f)
    if _negative_control_active():
        return dataclasses.replace(p, k_max=f.degree - p.k_max + 1)
    return p


def _c2(ctx: _Context) -> CriterionResult:
    oracle_a = {"1": 4, "2": 5}
    oracle_d = {"r=0,s=1": 6, "r=2,s=0": 12}

    ta = _census(ctx, n=2, height=1, monic=True, counters=("A",))
    td = _census(ctx, n=2, height=1, monic=False, counters=("D*",))
    census_a = {k: ta.get("A", k) for k in oracle_a}
    census_d = {k: td.get("D*", k) for k in oracle_d}

    recount_a = {"1": 0, "2": 0}
    for f in _monic_quadratics_h1():
        recount_a[str(_recount_profile(f).k_max)] += 1
    recount_d = {"r=0,s=1": 0, "r=2,s=0": 0}
    for f in _quadratics_h1():
        sig = root_signature(f)
        recount_d["r=%d,s=%d" % (sig.r, sig.s)] += 1

    ok = (
        census_a == oracle_a
        and census_d == oracle_d
        and recount_a == oracle_a
        and recount_d == oracle_d
    )
    return CriterionResult(
        2,
        "hand-oracle box",
        "PASS" if ok else "FAIL",
        "A_2(1,1)=4, A_2(2,1)=5; D*_2(0,1;1)=6, D*_2(2,0;1)=12, census and recount",
        {
            "census_A": census_a,
            "census_D*": census_d,
            "recount_A": recount_a,
            "recount_D*": recount_d,
            "negative_control": _negative_control_active(),
        },
    )


# -- criterion 3: dominant-pair slope for monic quadratics ------------------


def _c3(ctx: _Context) -> CriterionResult:
    heights = (100, 200, 400, 800)
    pts = []
    counts = {}
    for H in heights:
        t = _census(ctx, n=2, height=H, monic=True, counters=("A",))
        c = t.get("A", "2")
        counts[str(H)] = c
        pts.append((float(H), float(c)))
    fit = fit_growth_exponent(pts)
    ok = 1.35 <= fit.slope <= 1.65
    return CriterionResult(
        3,
        "two-root-tie slope, monic quadratics",
        "PASS" if ok else "FAIL",
        "log-log slope of A_2(2,H) over H in {100,200,400,800} within [1.35, 1.65]",
        {"counts": counts, "slope": round(fit.slope, 4)},
    )


# -- criterion 4: tail slope for non-monic cubics ----------------------------


_C45_HEIGHTS = (4, 8, 16, 32)


def _c45_table(ctx: _Context, H: int):
    return _census(ctx, n=3, height=H, monic=False, counters=("A*",))


def _c4(ctx: _Context) -> CriterionResult:
    pts = []
    counts = {}
    for H in _C45_HEIGHTS:
        t = _c45_table(ctx, H)
        tail = sum(v for k, v in t.family("A*").items() if int(k) >= 3)
        counts[str(H)] = tail
        pts.append((float(H), float(tail)))
    fit = fit_growth_exponent(pts)
    ok = fit.slope <= 3.3
    return CriterionResult(
        4,
        "all-roots-tied tail slope, non-monic cubics",
        "PASS" if ok else "FAIL",
        "log-log slope of sum_{k>=3} A*_3(k,H) over H in {4,8,16,32} at most 3.3",
        {"tail_counts": counts, "slope": round(fit.slope, 4)},
    )


# -- criterion 5: dominance trend (degenerate as stated; DEFECT) -------------


def _c5(ctx: _Context) -> CriterionResult:
    # literal gates, n = 2: the share is identically 1
    n2 = {}
    for H in (4, 32):
        t = _census(ctx, n=2, height=H, monic=False, counters=("A*",))
        box = 2 * H * (2 * H + 1) ** 2
        share = Fraction(t.get("A*", "1") + t.get("A*", "2"), box)
        n2[str(H)] = {"share": float(share), "exact_one": share == 1}
    literal_increase = n2["32"]["share"] > n2["4"]["share"]

    # the same gates one degree up, where the tail is nonempty
    n3 = {}
    pts = []
    for H in _C45_HEIGHTS:
        t = _c45_table(ctx, H)
        box = 2 * H * (2 * H + 1) ** 3
        share = Fraction(t.get("A*", "1") + t.get("A*", "2"), box)
        n3[str(H)] = float(share)
        pts.append((float(H), float(1 - share)))
    fit = fit_growth_exponent(pts)
    supplement_ok = n3["32"] > n3["4"] and fit.slope <= -0.7

    status = "DEFECT" if supplement_ok else "FAIL"
    return CriterionResult(
        5,
        "dominated-share trend, non-monic quadratics",
        status,
        "share at H=32 exceeds share at H=4 and slope of (1 - share) <= -0.7",
        {
            "n2_share": n2,
            "n2_increase": literal_increase,
            "n3_share": n3,
            "n3_tail_slope": round(fit.slope, 4),
            "n3_gates_pass": supplement_ok,
        },
        notes=(
            "Degenerate as stated: a degree-2 polynomial with nonzero leading "
            "coefficient always has k_max in {1, 2}, so (A*_1 + A*_2)/(2H(2H+1)^2) "
            "is identically 1; the strict-increase gate compares 1 with 1 and "
            "1 - share is identically 0, whose log-log slope is undefined. The "
            "gates are unsatisfiable for n = 2 and are not weakened here. The "
            "identical gates applied at n = 3, where the k >= 3 tail is "
            "nonempty, pass: the tail count grows like H^2 against a box of "
            "size 2H(2H+1)^3, so 1 - share falls like H^-2."
        ),
    )


# -- criterion 6: small-box identities for non-monic cubics ------------------


def _c6(ctx: _Context) -> CriterionResult:
    measured = {}
    ok = True
    for H in range(1, 7):
        t = _census(ctx, n=3, height=H, monic=False, counters=("B*",))
        b22 = t.get("B*", "2,2")
        b21 = t.get("B*nz", "2,1")
        b12 = t.get("B*nz", "1,2")
        measured[str(H)] = {"B*(2,2)": b22, "B*nz(2,1)": b21, "B*nz(1,2)": b12}
        ok = ok and b22 == 0 and b21 == b12
    return CriterionResult(
        6,
        "small-box identities, non-monic cubics",
        "PASS" if ok else "FAIL",
        "B*_3(2,2;H) = 0 and B*_3(2,1;H) = B*_3(1,2;H) on the a_3 != 0 sub-box, H <= 6",
        measured,
    )


# -- criterion 7: inequality suites ------------------------------------------


_C7_SEED = 1770
_C7_HEIGHT = 10 ** 6


def _c7_poly(i: int) -> IntPolynomial:
    rng = random.Random(_C7_SEED + i)
    n = rng.randint(1, 6)
    cs = [rng.randint(-_C7_HEIGHT, _C7_HEIGHT) for _ in range(n + 1)]
    if cs[0] == 0:
        cs[0] = rng.randint(1, _C7_HEIGHT)
    if all(c == 0 for c in cs):
        cs[-1] = 1
    return IntPolynomial(tuple(cs))


def _c7_intervals(f: IntPolynomial, rs) -> Tuple[bool, bool]:
    """(certified fujiwara violation, any undecided interval) for one set.

    A Mahler-side failure first shows up as undecided; it only counts as
    a violation if refinement cannot clear it, and either way the gate
    (zero violations, zero undecided) turns red."""
    fb = Fraction(fujiwara_bound(f))
    n = f.degree
    H = f.height
    m_lo = Fraction(abs(f.coeffs[0]))
    m_hi = m_lo
    fuj_ok = True
    straddle = False
    one = Fraction(1)
    for d in rs.disks:
        lo, hi = d.modulus_interval()
        if lo > fb:
            fuj_ok = False
        elif hi > fb:
            straddle = True
        m_lo *= max(one, lo) ** d.multiplicity
        m_hi *= max(one, hi) ** d.multiplicity
    if not (H <= (2 ** n) * m_lo):
        straddle = True
    if not (m_hi * m_hi <= (n + 1) * H * H):
        straddle = True
    return fuj_ok, straddle


def _c7_chunk(args: Tuple[int, int]) -> Dict[str, object]:
    start, count = args
    violations: List[str] = []
    unresolved: List[str] = []
    for i in range(start, start + count):
        f = _c7_poly(i)
        n = f.degree
        H = f.height
        if n == 1:
            # exact closed forms: root -a_1/a_0, M(f) = max(|a_0|, |a_1|)
            fb = Fraction(fujiwara_bound(f))
            a0, a1 = abs(f.coeffs[0]), abs(f.coeffs[1])
            m = Fraction(max(a0, a1))
            if Fraction(a1, a0) > fb or not (H <= 2 * m and m * m <= 2 * H * H):
                violations.append(",".join(str(c) for c in f.coeffs))
            continue
        rs = isolate_roots(f, precision_bits=53)
        fuj_ok, straddle = _c7_intervals(f, rs)
        if straddle and fuj_ok:
            rs = refine(rs, Fraction(1, 1 << 80))
            fuj_ok, straddle = _c7_intervals(f, rs)
        cs = ",".join(str(c) for c in f.coeffs)
        if not fuj_ok:
            violations.append(cs)
        elif straddle:
            unresolved.append(cs)
    return {"violations": violations, "unresolved": unresolved}


def _c7(ctx: _Context) -> CriterionResult:
    total = 8000 if ctx.quick else 100000
    chunk = 2000
    tasks = [(s, min(chunk, total - s)) for s in range(0, total, chunk)]
    violations: List[str] = []
    unresolved: List[str] = []
    if ctx.jobs > 1:
        with multiprocessing.Pool(ctx.jobs) as pool:
            parts = pool.map(_c7_chunk, tasks)
    else:
        parts = [_c7_chunk(t) for t in tasks]
    for p in parts:
        violations.extend(p["violations"])
        unresolved.extend(p["unresolved"])
    ok = not violations and not unresolved
    return CriterionResult(
        7,
        "inequality suites",
        "PASS" if ok else "FAIL",
        "fujiwara >= all certified moduli and 2^-n H <= M(f) <= sqrt(n+1) H, zero violations",
        {
            "sampled": total,
            "violations": len(violations),
            "unresolved": len(unresolved),
            "first_violations": violations[:3],
            "first_unresolved": unresolved[:3],
        },
    )


# -- criterion 8: perturbation machinery -------------------------------------


_C8_SEED = 20260814


def _roots_in_disks(f: IntPolynomial, pts, gamma: Fraction) -> bool:
    """Certified check that f has exactly one root in the gamma-disk of
    every target point."""
    rs = isolate_roots(f, precision_bits=53)
    for _ in range(8):
        assigned = [0] * len(pts)
        ok = True
        for d in rs.disks:
            cre = mpf_to_fraction(d.center_re)
            cim = mpf_to_fraction(d.center_im)
            rr = mpf_to_fraction(d.radius)
            hit = None
            for k, (bre, bim) in enumerate(pts):
                dist_hi = _fraction_sqrt_upper((cre - bre) ** 2 + (cim - bim) ** 2) + rr
                if dist_hi < gamma:
                    hit = k
                    break
            if hit is None:
                ok = False
                break
            assigned[hit] += d.multiplicity
        if ok:
            return assigned == [1] * len(pts)
        rs = refine(rs, mpf_to_fraction(rs.max_radius()) / 16)
    return False


def _c8_targets(rng: random.Random, count: int):
    """Random separated conjugation-closed targets on the eighth-integer
    grid, retrying until the coefficient windows at H = 60 are nonempty."""
    out = []
    while len(out) < count:
        n = rng.randint(2, 5)
        pts: List[Tuple[Fraction, Fraction]] = []
        while len(pts) < n:
            if n - len(pts) >= 2 and rng.random() < 0.6:
                re = Fraction(rng.randint(-40, 40), 8)
                im = Fraction(rng.randint(1, 40), 8)
                pts += [(re, im), (re, -im)]
            else:
                pts.append((Fraction(rng.randint(-40, 40), 8), Fraction(0)))
        if len(set(pts)) != len(pts):
            continue
        tgt = TargetSpec(tuple(pts))
        seed = rng.randint(0, 10 ** 6)
        try:
            next(iter(near_target_family(tgt, 60, budget=1, seed=seed)))
        except (HTooSmall, TargetNotSeparated):
            continue
        out.append((tgt, seed))
    return out


def _c8(ctx: _Context) -> CriterionResult:
    x2m1 = IntPolynomial((1, 0, -1))
    pb = perturbation_bounds(x2m1, Fraction(1, 2))
    eps_gap = Fraction(3, 19) - pb.eps
    eps_ok = 0 <= eps_gap <= Fraction(1, 10 ** 12)

    tcount = 12 if ctx.quick else 100
    per = 12 if ctx.quick else 100
    rng = random.Random(_C8_SEED)
    failures = 0
    trials = 0
    for tgt, seed in _c8_targets(rng, tcount):
        gam = _target_bounds(tgt).gamma
        for f in near_target_family(tgt, 60, budget=per, seed=seed):
            trials += 1
            if not _roots_in_disks(f, tgt.points, gam):
                failures += 1
    ok = eps_ok and failures == 0
    return CriterionResult(
        8,
        "perturbation machinery",
        "PASS" if ok else "FAIL",
        "eps(X^2 - 1, 1/2) = 3/19 within rounding-down 1e-12; one root per disk on all trials",
        {
            "eps": str(pb.eps),
            "eps_gap": float(eps_gap),
            "targets": tcount,
            "trials": trials,
            "failures": failures,
        },
    )


# -- criterion 9: near-target family lands in B*(2,2) ------------------------


def _c9(ctx: _Context) -> CriterionResult:
    s5 = 5 ** 0.5
    tgt = TargetSpec.from_complex([1j, -1j, s5 * 1j, -s5 * 1j])
    budget = 250 if ctx.quick else 1000
    hits = 0
    total = 0
    bad: List[str] = []
    for f in near_target_family(tgt, 50, budget=budget, seed=7):
        total += 1
        p = modulus_profile(f)
        if (p.k_max, p.k_min) == (2, 2):
            hits += 1
        elif len(bad) < 3:
            bad.append(",".join(str(c) for c in f.coeffs))
    ok = total == budget and hits == total
    return CriterionResult(
        9,
        "near-target family lands in B*(2,2)",
        "PASS" if ok else "FAIL",
        "all sampled members classified with (k_max, k_min) = (2, 2)",
        {"sampled": total, "in_B22": hits, "first_misses": bad},
    )


# -- criterion 10: multiplicative-relation detector ---------------------------


def _c10_oracle(f: IntPolynomial) -> bool:
    """Numeric all-pairs oracle: some two different index pairs of roots
    have (nearly) equal products (pairs may share an index, matching the
    detector's repeated-pair-product semantics)."""
    rr = np.roots([float(c) for c in f.coeffs])
    prods = [rr[i] * rr[j] for i in range(4) for j in range(i + 1, 4)]
    for u in range(len(prods)):
        for v in range(u + 1, len(prods)):
            p, q = prods[u], prods[v]
            if abs(p - q) <= 1e-8 * max(1.0, abs(p), abs(q)):
                return True
    return False


def _c10(ctx: _Context) -> CriterionResult:
    quartics = [
        IntPolynomial((1, a, b, c, d))
        for a, b, c, d in itertools.product(range(-2, 3), repeat=4)
    ]
    if ctx.quick:
        rng = random.Random(10)
        quartics = rng.sample(quartics, 150)
    checked = 0
    skipped = 0
    mismatches: List[str] = []
    relations = 0
    for f in quartics:
        if discriminant(f) == 0:
            skipped += 1
            continue
        checked += 1
        got = has_multiplicative_relation(f)
        want = _c10_oracle(f)
        if got:
            relations += 1
        if got != want:
            mismatches.append(",".join(str(c) for c in f.coeffs))
    ok = not mismatches
    return CriterionResult(
        10,
        "multiplicative-relation detector",
        "PASS" if ok else "FAIL",
        "exact detector agrees with the numeric all-pairs oracle on every squarefree quartic",
        {
            "checked": checked,
            "repeated_root_skipped": skipped,
            "relations_found": relations,
            "mismatches": mismatches[:5],
        },
    )


# -- criterion 11: S_n certificates -------------------------------------------


def _c11(ctx: _Context) -> CriterionResult:
    measured: Dict[str, object] = {}
    ok = True
    for n in (3, 4, 5):
        f = IntPolynomial((1,) + (0,) * (n - 2) + (-1, -1))
        cert = sn_certificate(f, prime_bound=200)
        measured["x^%d-x-1" % n] = {
            "verdict": cert.verdict,
            "witnesses": [[p, list(pat)] for p, pat in cert.witnesses],
        }
        ok = ok and cert.verdict == "CERTIFIED_SN"
    bound = 2000 if ctx.quick else 10000
    x41 = IntPolynomial((1, 0, 0, 0, 1))
    cert = sn_certificate(x41, prime_bound=bound)
    measured["x^4+1"] = {"verdict": cert.verdict, "prime_bound": bound}
    ok = ok and cert.verdict == "UNDECIDED"
    return CriterionResult(
        11,
        "S_n certificates",
        "PASS" if ok else "FAIL",
        "CERTIFIED_SN for x^n - x - 1 (n = 3, 4, 5) at bound 200; never for x^4 + 1",
        measured,
    )


# -- criterion 12: determinism ------------------------------------------------


def _c12(ctx: _Context) -> CriterionResult:
    import tempfile

    H = 3 if ctx.quick else 5
    kw = dict(n=3, height=H, monic=False, counters=("A*", "D*", "B*"))
    t1 = run_census(CensusSpec(jobs=1, **kw))
    t4 = run_census(CensusSpec(jobs=4, **kw))

    fd, path = tempfile.mkstemp(prefix="rootcensus-c12-", suffix=".ckpt")
    os.close(fd)
    os.unlink(path)
    try:
        spec_ck = CensusSpec(jobs=1, checkpoint=path, **kw)
        units = make_work_units(spec_ck)
        cut = max(1, len(units) // 2)
        partial = run_census(spec_ck, limit_units=cut)
        resumed = run_census(spec_ck)
    finally:
        if os.path.exists(path):
            os.unlink(path)

    same = t1 == t4 == resumed
    progressed = partial.totals < resumed.totals
    return CriterionResult(
        12,
        "determinism",
        "PASS" if (same and progressed) else "FAIL",
        "jobs in {1, 4} and an interrupted-then-resumed run give identical tables",
        {
            "height": H,
            "totals": t1.totals,
            "jobs_equal": t1 == t4,
            "resume_equal": t1 == resumed,
            "interrupted_at_units": cut,
            "units": len(units),
            "partial_totals": partial.totals,
        },
    )


# -- driver -------------------------------------------------------------------


_CRITERIA: Dict[int, Callable[[_Context], CriterionResult]] = {
    1: _c1,
    2: _c2,
    3: _c3,
    4: _c4,
    5: _c5,
    6: _c6,
    7: _c7,
    8: _c8,
    9: _c9,
    10: _c10,
    11: _c11,
    12: _c12,
}

CRITERION_IDS = tuple(sorted(_CRITERIA))


def run_acceptance(
    suite: str = "full",
    criteria: Optional[Sequence[int]] = None,
    jobs: int = 1,
) -> List[CriterionResult]:
    """Run the selected criteria and return their results in id order."""
    if suite not in ("quick", "full"):
        raise BadParameters("suite must be 'quick' or 'full', not %r" % (suite,))
    if jobs < 1:
        raise BadParameters("jobs must be >= 1")
    ids = sorted(set(criteria)) if criteria else list(CRITERION_IDS)
    for cid in ids:
        if cid not in _CRITERIA:
            raise BadParameters("unknown criterion %r (valid: 1..12)" % (cid,))
    ctx = _Context(quick=(suite == "quick"), jobs=jobs)
    out: List[CriterionResult] = []
    for cid in ids:
        t0 = time.perf_counter()
        res = _CRITERIA[cid](ctx)
        res.runtime_seconds = round(time.perf_counter() - t0, 3)
        if res.status == "PASS" and res.runtime_seconds > _BUDGET[cid]:
            res.status = "FAIL"
            res.notes = (res.notes + " " if res.notes else "") + (
                "runtime %.1fs exceeds the %.0fs budget"
                % (res.runtime_seconds, _BUDGET[cid])
            )
        res.measured["runtime_budget_seconds"] = _BUDGET[cid]
        out.append(res)
    return out


def exit_code(results: Sequence[CriterionResult]) -> int:
    """Nonzero iff any criterion FAILs; DEFECT alone keeps the suite green."""
    return 1 if any(r.status == "FAIL" for r in results) else 0
