"""Batch checks comparing the closed forms with brute-force computation.

Each check returns a CheckResult; `run_all` runs them in a fixed order.  The
`quick` flag shrinks the grids for smoke runs; the full grids are the ones
exercised by the acceptance tests.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from . import fixtures, linalg
from .algebra import (BorelSchurAlgebra, canonicalize_pair, multiply_int,
                      presentation_arrows, tensor_oracle_multiply)
from .ar import (ProjectiveSimple, ar_sequence, closed_form_kernel, find_uniserial,
                 p1t_matrix, socle_report, truncation_functors, verify_ar)
from .modules import ext1_dim, is_indecomposable, simple_module
from .quivers import pushdown_report
from .reptype import (check_new2, check_yu, extract_relations, hereditary_truncation_certificate,
                      presentation_certificate, rep_type, ringel_match, string_analysis)
from .scalars import binomial_exact
from .weights import canonical_index, rows, satisfies_cond, semistandard_sets, shift_weight


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self):
        return f"criterion {self.number:2d} {self.name}: {'PASS' if self.passed else 'FAIL'} ({self.seconds:.1f}s)"


def _timed(number, name, fn, *args):
    t = time.perf_counter()
    passed, detail = fn(*args)
    return CheckResult(number, name, bool(passed), detail, time.perf_counter() - t)


def _grid(quick, full_n2, full_n3):
    if quick:
        return [(2, r) for r in range(1, min(full_n2, 3) + 1)] + [(3, r) for r in range(1, min(full_n3, 2) + 1)]
    return [(2, r) for r in range(1, full_n2 + 1)] + [(3, r) for r in range(1, full_n3 + 1)]


# 1 ------------------------------------------------------------------------------

def oracle_products(quick=False):
    chars = (0, 2, 3, 5)
    pairs = mismatches = 0
    examples = []
    for n, r in _grid(quick, 5, 4):
        algs = [BorelSchurAlgebra(n, r, c) for c in chars]
        B = algs[0].basis
        for x in B:
            for y in B:
                o = tensor_oracle_multiply(x, y, n)
                pairs += 1
                for A in algs:
                    F = A.field
                    want = {z: F(c) for z, c in o.items() if F(c) != 0}
                    if A.multiply(x, y) != want:
                        mismatches += 1
                        if len(examples) < 5:
                            examples.append([repr(x), repr(y), A.p])
    return mismatches == 0, {"pairs": pairs, "mismatches": mismatches, "examples": examples}


# 2 ------------------------------------------------------------------------------

def shift_products(quick=False):
    """xi_{l(nu,m),l} xi_{l,j} = C(a+m, m) xi_{l(nu,m),j} whenever row nu+1 of
    T_j is constant."""
    checked = bad = 0
    for n, r in _grid(quick, 5, 5):
        A = BorelSchurAlgebra(n, r)
        for lam in A.weights:
            l = canonical_index(lam)
            J = semistandard_sets(lam)[1]
            for nu in range(1, n):
                for m in range(lam[nu] + 1):
                    lm = canonical_index(shift_weight(lam, nu, m))
                    left = canonicalize_pair(lm, l)
                    for j in J:
                        rw = rows(lam, j)
                        if len(set(rw[nu])) > 1:
                            continue
                        c = rw[nu][0] if rw[nu] else None
                        a = sum(1 for v in rw[nu - 1] if v == c) if c is not None else 0
                        got = multiply_int(left, canonicalize_pair(l, j))
                        coeff = binomial_exact(a + m, m)
                        want = {canonicalize_pair(lm, j): coeff} if coeff else {}
                        checked += 1
                        bad += got != want
    return bad == 0 and checked > 0, {"instances": checked, "mismatches": bad}


# 3 ------------------------------------------------------------------------------

def kernel_closed_forms(quick=False):
    checked, bad = 0, []
    for r in range(1, (5 if quick else 8) + 1):
        for p in (2, 3, 5):
            A = BorelSchurAlgebra(2, r, p)
            for lam in A.weights:
                if lam[1] == 0:
                    continue
                tp = p1t_matrix(lam, A, build_modules=False)
                cf = closed_form_kernel(lam, A)
                checked += 1
                if not linalg.same_span(A.field, tp.kernel, cf):
                    bad.append([list(lam), p])
    mono = 0
    for n, r in _grid(quick, 6, 6):
        for p in (0, 2, 3, 5):
            A = BorelSchurAlgebra(n, r, p)
            for lam in A.weights:
                if not satisfies_cond(lam, p):
                    continue
                mono += 1
                if p1t_matrix(lam, A, build_modules=False).kernel_dim:
                    bad.append([list(lam), p, "cond"])
    return not bad, {"n2_kernels": checked, "cond_weights": mono, "failures": bad}


# 4 ------------------------------------------------------------------------------

def socle_classification(quick=False, large=True):
    viol, rows_seen = [], 0
    for n, rmax in ((2, 5 if quick else 8), (3, 4 if quick else 6)):
        for r in range(1, rmax + 1):
            for c in (0, 2, 3, 5):
                for row in socle_report(n, r, c):
                    rows_seen += 1
                    if row.verdict == "VIOLATION":
                        viol.append([list(row.lam), c, row.multiplicity, row.rule])
    detail = {"rows": rows_seen, "violations": viol}
    ok = not viol
    if large and not quick:
        (row,) = socle_report(3, 14, 3, weights=[(8, 5, 1)])
        detail["mult_(8,5,1)_p3"] = row.multiplicity
        ok = ok and row.multiplicity >= 1
    return ok, detail


# 5 ------------------------------------------------------------------------------

def ar_sequences(quick=False):
    fails, count, middle_checked = [], 0, 0
    for n, r in _grid(quick, 5, 5):
        for c in (0, 2, 3):
            A = BorelSchurAlgebra(n, r, c)
            for lam in A.weights:
                try:
                    seq = ar_sequence(lam, A)
                except ProjectiveSimple:
                    continue
                rep = verify_ar(seq)
                count += 1
                ok = rep.exact and rep.nonsplit and rep.ends_indecomposable and rep.ext1_dim == 1 \
                    and rep.tau_matches_kernel is not False
                if n == 2 and c == 0:
                    middle_checked += 1
                    ok = ok and is_indecomposable(seq.E).indecomposable
                if not ok:
                    fails.append([n, r, c, list(lam)])
    return not fails, {"sequences": count, "middle_terms_checked": middle_checked, "failures": fails}


# 6 ------------------------------------------------------------------------------

def _same_bound_quiver(A, stored):
    Q, elems = extract_relations(A)
    same = sorted((a.label, a.source, a.target) for a in Q.arrows) == \
        sorted((a.label, a.source, a.target) for a in stored.arrows)
    return same and presentation_certificate(A, stored, elems)["isomorphic"]


def quivers_and_presentations(quick=False):
    bad = []
    pairs = 0
    for n, r in _grid(quick, 5, 5):
        for c in (0, 2, 3):
            A = BorelSchurAlgebra(n, r, c)
            cnt = Counter((a.source, a.target) for a in presentation_arrows(A))
            S = {mu: simple_module(A, mu) for mu in A.weights}
            for lam in A.weights:
                for mu in A.weights:
                    pairs += 1
                    if ext1_dim(lam, S[mu]) != cnt[(lam, mu)]:
                        bad.append([n, r, c, list(lam), list(mu)])
    linear = []
    for r in range(1, 7):
        A = BorelSchurAlgebra(2, r, 0)
        linear.append(_same_bound_quiver(A, fixtures.linear_quiver(r)))
    case_b = {p: _same_bound_quiver(BorelSchurAlgebra(2, p, p), fixtures.quiver_case_b(p)) for p in (2, 3, 5, 7)}
    case_c = _same_bound_quiver(BorelSchurAlgebra(2, 3, 2), fixtures.quiver_case_c())
    ok = not bad and all(linear) and all(case_b.values()) and case_c
    return ok, {"pairs": pairs, "ext_mismatches": bad, "linear_char0": linear,
                "case_b": case_b, "case_c": case_c}


# 7 ------------------------------------------------------------------------------

def finite_type_table(n, r, p):
    """Finite iff n = 1, r <= 1, or n = 2 with p = 0, r <= p, or (p, r) in
    {(2, 3), (3, 4)}."""
    if n == 1 or r <= 1:
        return True
    if n >= 3:
        return False
    return p == 0 or r <= p or (p, r) in ((2, 3), (3, 4))


def representation_type(quick=False):
    mism = []
    for n in range(1, 5):
        for r in range(0, 13):
            for p in (0, 2, 3, 5, 7, 11):
                got = rep_type(n, r, p).verdict == "Finite"
                if got != finite_type_table(n, r, p):
                    mism.append([n, r, p])
    certs = {}
    for p in ((2, 3) if quick else (2, 3, 5, 7)):
        s = string_analysis(fixtures.quiver_case_b(p), field=p)
        certs[f"b_p{p}"] = s.finite and not s.bands and s.longest == 2 * p - 1
    s = string_analysis(fixtures.quiver_case_c(), field=2)
    certs["c"] = s.finite and not s.bands and s.longest <= 6
    for n, r in ([(3, 2)] if quick else [(3, 2), (3, 3), (3, 4), (3, 5), (4, 2), (4, 3), (4, 4)]):
        for c in (0, 2, 3):
            cert = hereditary_truncation_certificate(n, r, c)
            certs[f"hered_{n}_{r}_{c}"] = cert["verdict"] == "Infinite" and cert["evidence"]["hereditary"]
    for key, (n, r, p) in {"e_p7": (2, 8, 7), "f": (2, 6, 5), "g": (2, 5, 3), "h": (2, 4, 2)}.items():
        certs[key] = ringel_match(n, r, p)["verdict"] == "Infinite"
    return not mism and all(certs.values()), {"table_mismatches": mism, "certificates": certs}


# 8 ------------------------------------------------------------------------------

def truncation_isomorphisms(quick=False):
    res = {}
    for c in (0, 2, 3):
        for r in range(1, (3 if quick else 4) + 1):
            res[f"pad_2_3_r{r}_c{c}"] = check_new2(2, 3, r, c)
        for r in range(1, (3 if quick else 5) + 1):
            res[f"shift_r{r}_c{c}"] = check_yu(r, c)
    return all(res.values()), res


# 9 ------------------------------------------------------------------------------

def truncation_example(quick=False):
    out = {}
    for c in (0, 3):
        A = BorelSchurAlgebra(3, 3, c)
        coideal = [w for w in A.weights if w[2] == 0]
        T = truncation_functors(A, coideal)
        iso, small, big = T.ariff_check((1, 2, 0))
        wit = find_uniserial(big, (2, 0, 1), (2, 1, 0))
        out[f"char{c}"] = {"G_tau_iso_tau": iso, "uniserial_found": wit is not None,
                           "FG_identity": T.FG_is_identity(small)}
    ok = all(not v["G_tau_iso_tau"] and v["uniserial_found"] and v["FG_identity"] for v in out.values())
    return ok, out


# 10 -----------------------------------------------------------------------------

def pushdown_suite(quick=False):
    out = {}
    for name, C in fixtures.covering_fixtures().items():
        C.check()
        rows_ = [pushdown_report(C, V) for V in fixtures.cover_reps(name, C)]
        good = sum(all(v for k, v in row.items() if k != "rep") for row in rows_)
        out[name] = {"reps": rows_, "passing": good}
    ok = all(v["passing"] >= 5 and v["passing"] == len(v["reps"]) for v in out.values())
    return ok, out


CHECKS = [
    (1, "oracle equivalence", oracle_products),
    (2, "shift products", shift_products),
    (3, "kernel closed forms", kernel_closed_forms),
    (4, "socle classification", socle_classification),
    (5, "almost split sequences", ar_sequences),
    (6, "quivers and presentations", quivers_and_presentations),
    (7, "representation type", representation_type),
    (8, "truncation isomorphisms", truncation_isomorphisms),
    (9, "truncation example", truncation_example),
    (10, "pushdown suite", pushdown_suite),
]


def run_check(number, quick=False):
    num, name, fn = CHECKS[number - 1]
    return _timed(num, name, fn, quick)


def run_all(quick=False, only=None):
    return [run_check(k, quick) for k, _, _ in CHECKS if only is None or k in only]
