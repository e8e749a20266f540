"""The invariant-ring side: membership condition for invariant semigroup
values, the finite-generation trichotomy, the two explicit valuation
constructions, and the structural congruence checks satisfied by every
compatible sequence when t > 1.

The decision layer is theorem-driven and instant; supplied sequences only
attach evidence, and evidence failures flag inconsistent input instead of
overriding the decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from .errors import ConstructionError, ParameterError
from .groups import SubgroupParams, generating_pair
from .numtheory import (DEFAULT_PRIME_CEILING, RootContext, delta_exponent,
                        format_rational, primes_in_ap)
from .qpoly import (GeneratingSequence, build_generating_sequence, eigen_report,
                    format_polynomial)
from .valuation import SemigroupSlice, ValueSequence, semigroup_slice, validate_sequence


def _default_ctx(params: SubgroupParams, ctx: RootContext | None) -> RootContext:
    if ctx is None:
        return RootContext(params.m, params.n)
    if (ctx.m, ctx.n) != (params.m, params.n):
        raise ParameterError("root context does not match the group orders")
    return ctx


def eigen_condition(l: int, js, params: SubgroupParams, ctx: RootContext,
                    degrees) -> bool:
    """Membership test for l*gamma_0 + sum j_k*gamma_k in the invariant semigroup.

    True iff alpha**(l*a*i) * beta**(b*j*sum(j_k*d(k))) = 1 for both
    generating-pair elements (a, b); multiplicativity extends this over the
    whole subgroup.  Assumes 0 <= j_k < mbar_k.
    """
    js = tuple(js)
    if len(js) > len(degrees):
        raise ParameterError("more coefficients than available degrees")
    weighted = sum(j * degrees[k] for k, j in enumerate(js))
    for element in generating_pair(params):
        if delta_exponent(l, weighted, element.a, element.b,
                          params.i, params.j, ctx) != 0:
            return False
    return True


def invariant_semigroup_slice(params: SubgroupParams, ctx: RootContext | None,
                              seq: ValueSequence, bound) -> SemigroupSlice:
    """The subset of semigroup_slice whose expansions pass eigen_condition."""
    ctx = _default_ctx(params, ctx)
    base = semigroup_slice(seq, bound)
    degrees = seq.derived.degrees
    kept = tuple((value, term) for value, term in base.entries
                 if eigen_condition(term.l, term.js, params, ctx, degrees))
    return SemigroupSlice(kept, base.complete_up_to)


class Verdict(str, Enum):
    NO_EIGEN_GEN_SEQ = "NoEigenGenSeq"
    FINITELY_GENERATED = "FinitelyGenerated"
    NOT_FINITELY_GENERATED = "NotFinitelyGenerated"


@dataclass(frozen=True)
class FGDecision:
    """Outcome of the finite-generation trichotomy.

    gcd(m/i, n/j) != t leaves no compatible sequence at all; otherwise t = 1
    gives finite generation (with the least invariant level N as witness when
    a sequence is available) and t > 1 denies it (with the verified
    non-divisibilities (l, d(l)) as the record).
    """
    verdict: Verdict
    gcd: int
    t: int
    witness_N: int | None = None
    witness_theoretical: bool = False
    divisibility_failures: tuple[tuple[int, int], ...] | None = None
    failing_q2: str | None = None
    evidence_consistent: bool | None = None

    def to_json_dict(self) -> dict:
        out = {"verdict": self.verdict.value, "gcd": self.gcd, "t": self.t}
        if self.verdict is Verdict.FINITELY_GENERATED:
            out["witness_N"] = self.witness_N
            out["witness_theoretical"] = self.witness_theoretical
        if self.divisibility_failures is not None:
            out["divisibility_failures"] = [list(p) for p in self.divisibility_failures]
        if self.failing_q2 is not None:
            out["failing_q2"] = self.failing_q2
        if self.evidence_consistent is not None:
            out["evidence_consistent"] = self.evidence_consistent
        return out


def decide_finite_generation(params: SubgroupParams, ctx: RootContext | None = None,
                             seq=None, depth: int | None = None) -> FGDecision:
    """Decide the trichotomy for the subgroup; attach sequence evidence if given.

    `seq` may be a ValueSequence or a ConstructionTrace.  `depth` bounds the
    divisibility record (defaults to everything computable from the sequence).
    """
    ctx = _default_ctx(params, ctx)
    if isinstance(seq, ConstructionTrace):
        seq = seq.seq
    g = gcd(params.Mt, params.Nt)
    nj = params.Nt

    if g != params.t:
        failing = None
        if seq is not None and seq.depth >= 1:
            gs = build_generating_sequence(seq.prefix(1))
            report = eigen_report(gs.qs[2], params, ctx)
            if not report.is_eigen:
                failing = format_polynomial(gs.qs[2])
        return FGDecision(Verdict.NO_EIGEN_GEN_SEQ, g, params.t, failing_q2=failing)

    if params.t == 1:
        if seq is None:
            return FGDecision(Verdict.FINITELY_GENERATED, g, 1, witness_N=None,
                              witness_theoretical=True)
        witness = None
        for N in range(1, seq.depth + 2):
            if seq.degree(N) % nj == 0:
                witness = N
                break
        return FGDecision(Verdict.FINITELY_GENERATED, g, 1, witness_N=witness,
                          witness_theoretical=False)

    record = None
    consistent = None
    if seq is not None:
        top = seq.depth + 1
        if depth is not None:
            if depth > top:
                raise ParameterError(
                    f"depth {depth} exceeds the computable range {top}")
            top = depth
        record = tuple((l, seq.degree(l)) for l in range(2, top + 1))
        consistent = all(d_l % nj != 0 for _, d_l in record)
    return FGDecision(Verdict.NOT_FINITELY_GENERATED, g, params.t,
                      divisibility_failures=record, evidence_consistent=consistent)


@dataclass(frozen=True)
class ConstructionTrace:
    """Full record of one explicit valuation construction.

    For t = 1: q holds q_1 = n/j followed by the chosen primes, c the X
    exponents.  For t > 1: r_pair = (r, s) solves r*x - s*t = 1, r_primes is
    the congruence-constrained prime family, a and b the exponent sequences,
    d = gcd(w1, w2).  Every choice follows the smallest-admissible rule, so
    traces are reproducible.
    """
    case: str
    params: SubgroupParams
    ctx: RootContext
    seq: ValueSequence
    gs: GeneratingSequence
    q: tuple[int, ...] | None = None
    c: tuple[int, ...] | None = None
    r_pair: tuple[int, int] | None = None
    r_primes: tuple[int, ...] | None = None
    a: tuple[int, ...] | None = None
    b: tuple[int, ...] | None = None
    d: int | None = None

    def to_json_dict(self) -> dict:
        out = {"case": self.case, "subgroup": self.params.to_json_dict(),
               "w1": self.ctx.w1, "w2": self.ctx.w2,
               "gammas": [format_rational(g) for g in self.seq.gammas],
               "mbars": list(self.seq.derived.mbars),
               "qs": [format_polynomial(qp) for qp in self.gs.qs],
               "lambdas": [format_rational(c) for c in self.gs.lambdas]}
        if self.case == "t1":
            out["q"] = list(self.q)
            out["c"] = list(self.c)
        else:
            out["r"], out["s"] = self.r_pair
            out["r_primes"] = list(self.r_primes)
            out["a"] = list(self.a)
            out["b"] = list(self.b)
            out["d"] = self.d
        return out


def _assert_construction(trace: ConstructionTrace, expected_mbars) -> None:
    assert list(trace.seq.derived.mbars) == list(expected_mbars), \
        "constructed sequence has unexpected index sequence"
    for exps in trace.gs.recursion_exponents:
        assert all(e == 0 for e in exps[1:]), \
            "construction recursion must subtract a pure X power"
    for l in range(2, trace.seq.depth + 2):
        assert eigen_report(trace.gs.qs[l], trace.params, trace.ctx).is_eigen, \
            "constructed key polynomial failed the eigenfunction test"


def construct_valuation_t1(params: SubgroupParams, depth: int,
                           ceiling: int = DEFAULT_PRIME_CEILING) -> ConstructionTrace:
    """Explicit compatible valuation for gcd(m/i, n/j) = t = 1, smallest choices.

    q_1 = n/j and c_1 = m/i give gamma_1; each later level takes the smallest
    fresh prime q_l coprime to m/i and n/j, and the smallest multiple c_l of
    m/i with c_l > q_l*c_{l-1} and gcd(c_l, q_l) = 1.  `depth` counts the
    gammas produced (gamma_0 .. gamma_{depth-1}).
    """
    if params.t != 1 or gcd(params.Mt, params.Nt) != 1:
        raise ConstructionError(
            "construction requires gcd(m/i, n/j) = t = 1; no compatible "
            "sequence exists otherwise")
    if params.Nt == 1:
        raise ConstructionError(
            "j = n leaves the subgroup acting trivially on Y: the decision is "
            "immediately FinitelyGenerated with witness N = 1 and no "
            "nontrivial construction is needed")
    if depth < 2:
        raise ParameterError("depth must be at least 2")
    q = [params.Nt]
    c = [params.Mt]
    if depth > 2:
        q.extend(primes_in_ap(1, 1, [params.Mt, params.Nt], depth - 2, ceiling))
    gammas = [Fraction(1)]
    for l in range(1, depth):
        if l >= 2:
            k = (q[l - 1] * c[l - 2]) // params.Mt + 1
            while gcd(k * params.Mt, q[l - 1]) != 1:
                k += 1
            c.append(k * params.Mt)
        gammas.append(Fraction(c[l - 1], q[l - 1]))
    seq = validate_sequence(gammas)
    gs = build_generating_sequence(seq)
    ctx = RootContext(params.m, params.n)
    trace = ConstructionTrace("t1", params, ctx, seq, gs, q=tuple(q), c=tuple(c))
    _assert_construction(trace, q)
    return trace


def construct_valuation_tgt1(params: SubgroupParams, ctx: RootContext | None,
                             depth: int,
                             ceiling: int = DEFAULT_PRIME_CEILING) -> ConstructionTrace:
    """Explicit compatible valuation for gcd(m/i, n/j) = t > 1, smallest choices.

    With (r, s) the minimal positive solution of r*x - s*t = 1 and M = (m/i)/t,
    N = (n/j)/t, the prime family r_l = r (mod t) is chosen smallest-first
    coprime to M, N, w1, w2; b_1 = 0 and each later b_l is the smallest
    multiple of lcm(r_l, t) above r_l*(r^(l-2) + b_{l-1}) - r^(l-1); then
    a_l = M*(r^(l-1) + b_l)*(w2/d) and gamma_l = a_l/r_l, with
    gamma_1 = (M*(w2/d)) / (r_1*N*(w1/d)).  `depth` counts the gammas.
    """
    ctx = _default_ctx(params, ctx)
    if params.t <= 1 or gcd(params.Mt, params.Nt) != params.t:
        raise ConstructionError("construction requires gcd(m/i, n/j) = t > 1")
    if depth < 2:
        raise ParameterError("depth must be at least 2")
    t, x = params.t, params.x
    M, N = params.M, params.N
    d = gcd(ctx.w1, ctx.w2)
    w1d, w2d = ctx.w1 // d, ctx.w2 // d
    r0 = pow(x, -1, t)
    r = r0 if (r0 * x - 1) // t >= 1 else r0 + t
    s = (r * x - 1) // t
    r_primes = primes_in_ap(r % t, t, [M, N, ctx.w1, ctx.w2], depth - 1, ceiling)
    b = [0]
    a = [M * (1 + b[0]) * w2d]
    gammas = [Fraction(1), Fraction(M * w2d, r_primes[0] * N * w1d)]
    for l in range(2, depth):
        r_l = r_primes[l - 1]
        lower = r_l * (r ** (l - 2) + b[l - 2]) - r ** (l - 1)
        step = lcm(r_l, t)
        b_l = 0 if lower < 0 else step * (lower // step + 1)
        b.append(b_l)
        a.append(M * (r ** (l - 1) + b_l) * w2d)
        gammas.append(Fraction(a[l - 1], r_l))
    seq = validate_sequence(gammas)
    gs = build_generating_sequence(seq)
    trace = ConstructionTrace("tgt1", params, ctx, seq, gs, r_pair=(r, s),
                              r_primes=tuple(r_primes), a=tuple(a), b=tuple(b), d=d)
    _assert_construction(trace, [r_primes[0] * N * w1d] + list(r_primes[1:]))
    return trace


@dataclass(frozen=True)
class StructureCheck:
    name: str
    index: int | None
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class StructureReport:
    """Pass/fail record of the structural invariants of compatible sequences."""
    applicable: bool
    branch: str
    checks: tuple[StructureCheck, ...]
    note: str = ""

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json_dict(self) -> dict:
        return {"applicable": self.applicable, "branch": self.branch,
                "passed": self.passed, "note": self.note,
                "checks": [{"name": c.name, "index": c.index, "passed": c.passed,
                            "detail": c.detail} for c in self.checks]}


def verify_structure_invariants(params: SubgroupParams, ctx: RootContext | None,
                                seq, depth: int | None = None) -> StructureReport:
    """Check the congruences every eigen-compatible sequence satisfies (t > 1).

    When some prime p | t misses N, each gamma_k = a_k/b_k must keep p out of
    mbar_k and b_k and satisfy a_k = b_k*M*N1*x*w2*w1bar*d(k) (mod p).  When
    every prime of t divides N, gamma_1 = M*u/(Nbar*r') with the listed
    coprimalities and each later gamma_k has the exact form
    M*u*mbar_2...mbar_{k-1} + M*Nbar*t*lambda_k / (mbar_1...mbar_k) with
    integer lambda_k, alongside gcd(t, mbar_k) = 1.  A failed check proves
    the sequence admits no eigen generating sequence for this subgroup.
    """
    from sympy import primefactors

    ctx = _default_ctx(params, ctx)
    if isinstance(seq, ConstructionTrace):
        seq = seq.seq
    if params.t == 1:
        return StructureReport(False, "not_applicable", (),
                               note="t = 1: no structural constraints to check")
    if gcd(params.Mt, params.Nt) != params.t:
        return StructureReport(False, "not_applicable", (),
                               note="gcd(m/i, n/j) != t: no compatible sequence exists")
    L = seq.depth
    depth = L if depth is None else depth
    if depth > L:
        raise ParameterError(f"depth {depth} exceeds available sequence depth {L}")
    t, x = params.t, params.x
    M, N = params.M, params.N
    checks: list[StructureCheck] = []
    witnesses = [p for p in primefactors(t) if N % p != 0]

    if witnesses:
        for p in witnesses:
            n1 = pow(N % p, -1, p)
            w1_inv = pow(ctx.w1 % p, -1, p)
            factor = (M * n1 * x * ctx.w2 * w1_inv) % p
            for k in range(1, depth + 1):
                a_k = seq.gammas[k].numerator
                b_k = seq.gammas[k].denominator
                m_k = seq.derived.mbars[k - 1]
                d_k = seq.derived.degrees[k - 1]
                checks.append(StructureCheck(
                    f"mbar coprime to {p}", k, gcd(p, m_k) == 1,
                    f"mbar_{k} = {m_k}"))
                checks.append(StructureCheck(
                    f"denominator coprime to {p}", k, gcd(p, b_k) == 1,
                    f"b_{k} = {b_k}"))
                expected = (b_k * factor * d_k) % p
                checks.append(StructureCheck(
                    f"numerator congruence mod {p}", k, a_k % p == expected,
                    f"a_{k} = {a_k}, expected {expected} (mod {p})"))
        return StructureReport(True, "per_prime_congruence", tuple(checks))

    nbar = N
    while (shared := gcd(nbar, x)) > 1:
        nbar //= shared
    n_prime = N // nbar
    a_1 = seq.gammas[1].numerator if L >= 1 else None
    b_1 = seq.gammas[1].denominator if L >= 1 else None
    if L < 1:
        return StructureReport(True, "value_form", (),
                               note="sequence too shallow to check anything")
    m_div = a_1 % M == 0
    nbar_div = b_1 % nbar == 0
    checks.append(StructureCheck("M divides numerator of gamma_1", 1, m_div,
                                 f"a_1 = {a_1}, M = {M}"))
    checks.append(StructureCheck("Nbar divides denominator of gamma_1", 1, nbar_div,
                                 f"b_1 = {b_1}, Nbar = {nbar}"))
    if not (m_div and nbar_div):
        return StructureReport(True, "value_form", tuple(checks))
    u = a_1 // M
    r_prime = b_1 // nbar
    for name, left, right in (("gcd(u, Nbar) = 1", u, nbar),
                              ("gcd(u, t) = 1", u, t),
                              ("gcd(u, r') = 1", u, r_prime),
                              ("gcd(M, r') = 1", M, r_prime)):
        checks.append(StructureCheck(name, 1, gcd(left, right) == 1,
                                     f"values {left}, {right}"))
    r_mod = pow(x, -1, t)
    w2_inv = pow(ctx.w2 % t, -1, t)
    expected = (r_mod * u * ctx.w1 * w2_inv * n_prime) % t
    checks.append(StructureCheck("gamma_1 congruence mod t", 1,
                                 r_prime % t == expected,
                                 f"r' = {r_prime}, expected {expected} (mod {t})"))
    for k in range(2, depth + 1):
        m_k = seq.derived.mbars[k - 1]
        checks.append(StructureCheck("mbar coprime to t", k, gcd(t, m_k) == 1,
                                     f"mbar_{k} = {m_k}"))
        head = Fraction(M * u)
        for h in range(2, k):
            head *= seq.derived.mbars[h - 1]
        tail = seq.gammas[k] - head
        denom_product = Fraction(1)
        for h in range(1, k + 1):
            denom_product *= seq.derived.mbars[h - 1]
        lam = tail * denom_product / Fraction(M * nbar * t)
        checks.append(StructureCheck("value form", k, lam.denominator == 1,
                                     f"lambda_{k} = {lam}"))
    return StructureReport(True, "value_form", tuple(checks))
