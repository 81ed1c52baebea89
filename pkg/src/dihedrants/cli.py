"""Command-line front end.

    python -m dihedrants build mcl:5 -o mcl5.txt
    python -m dihedrants analyze family:1:n=15,l=2
    python -m dihedrants iso family:3:m=2 mcl:5
    python -m dihedrants census dihedrant --n-min 3 --n-max 12
    python -m dihedrants verify lemma5.1

Exit codes: 0 all pass, 1 any fail, 2 usage error, 3 unknown verdicts present.

Graph specs::

    cl:<m>  mcl:<m>  gp:<n>:<t>
    cay:dihedral:<n>:<S>              e.g. cay:dihedral:6:b,b.a,b.a^3
    bicay:dihedral:<n>:<R>|<L>|<S>    e.g. "bicay:dihedral:10:b,b.a|b,b.a^4|1"
    family:<k>:<params>               e.g. family:1:n=15,l=2  family:4:l=1
    <path>                            an edge-list file written by ``build``
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import analysis as an
from . import witnesses as wt
from .constructions import (BiCayleyTriple, CayleySet, FamilyParams, bicayley, cayley,
                            cross_ladder, family_builder, generalized_petersen,
                            multi_cross_ladder)
from .errors import DihedrantError, InvalidElement, UsageError
from .graphs import Graph, are_isomorphic, automorphism_group, is_connected
from .groups import FCGroup, dihedral, parse_group

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


# -- spec parsing ------------------------------------------------------------------


def _elements(H: FCGroup, text: str) -> frozenset:
    return frozenset(H.word(t) for t in text.split(",") if t.strip())


def _params(text: str) -> dict[str, int]:
    out = {}
    for item in filter(None, text.split(",")):
        k, _, v = item.partition("=")
        if not v:
            raise UsageError(f"family parameter {item!r} is not key=value")
        out[k.strip()] = int(v)
    return out


@dataclass
class Built:
    graph: Graph
    kind: str
    group: FCGroup | None = None
    cset: CayleySet | None = None
    triple: BiCayleyTriple | None = None
    family: FamilyParams | None = None


def build_spec(spec: str) -> Built:
    if os.path.exists(spec):
        with open(spec) as fh:
            return Built(Graph.from_edgelist(fh.read()), "file")
    head, _, rest = spec.partition(":")
    try:
        if head == "cl":
            return Built(cross_ladder(int(rest)), head)
        if head == "mcl":
            return Built(multi_cross_ladder(int(rest)), head)
        if head == "gp":
            n, t = rest.split(":")
            return Built(generalized_petersen(int(n), int(t)), head)
        if head == "cay":
            kind, n, S = rest.split(":", 2)
            H = parse_group(f"{kind}:{n}")
            cs = CayleySet(H, _elements(H, S))
            return Built(cayley(H, cs), head, H, cset=cs)
        if head == "bicay":
            kind, n, sets = rest.split(":", 2)
            H = parse_group(f"{kind}:{n}")
            R, L, S = sets.split("|")
            T = BiCayleyTriple(H, _elements(H, R), _elements(H, L), _elements(H, S))
            return Built(bicayley(T), head, H, triple=T)
        if head == "family":
            k, _, params = rest.partition(":")
            P = FamilyParams(int(k), **_params(params))
            H, T, G = family_builder(P)
            return Built(G, head, H, triple=T, family=P)
    except InvalidElement as exc:
        raise UsageError(f"bad element in graph spec {spec!r}: {exc}") from None
    except (ValueError, TypeError) as exc:
        if isinstance(exc, DihedrantError):
            raise
        raise UsageError(f"cannot parse graph spec {spec!r}: {exc}") from None
    raise UsageError(f"unknown graph spec {spec!r}")


# -- reports -----------------------------------------------------------------------


@dataclass
class CaseOutcome:
    case: str
    outcome: str  # pass / fail / unknown
    seconds: float
    params: dict = field(default_factory=dict)
    repro: str = ""
    budget: int | None = None
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    cases: list[CaseOutcome] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        out = {"pass": 0, "fail": 0, "unknown": 0}
        for c in self.cases:
            out[c.outcome] += 1
        return out

    @property
    def exit_code(self) -> int:
        s = self.summary
        if s["fail"]:
            return EXIT_FAIL
        if s["unknown"]:
            return EXIT_UNKNOWN
        return EXIT_PASS

    def to_json(self) -> str:
        return json.dumps({"suite": self.suite, "summary": self.summary,
                           "cases": [asdict(c) for c in self.cases]}, indent=2, default=str)


def _run_case(report: SuiteReport, case: str, fn: Callable[[], tuple[str, str]],
              params: dict | None = None, repro: str = "", budget: int | None = None) -> None:
    t = time.perf_counter()
    try:
        outcome, detail = fn()
    except DihedrantError as exc:
        outcome, detail = "fail", f"{type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t
    report.cases.append(CaseOutcome(case, outcome, round(dt, 4), params or {},
                                    repro if outcome == "fail" else "",
                                    budget if outcome == "unknown" else None, detail))


def _witness_case(res: wt.WitnessResult) -> tuple[str, str]:
    bad = [k for k, v in res.relations_checked if not v]
    if res.ok:
        return "pass", ""
    return "fail", "; ".join(res.failures + [f"relation failed: {k}" for k in bad])


# -- suites --------------------------------------------------------------------------


def suite_dihedrant_classification(n_max: int = 16) -> SuiteReport:
    rep = SuiteReport("thm1.1")
    for n in range(3, n_max + 1):
        def case(n=n):
            tags = []
            for S in an.trivalent_dihedral_sets(n):
                r = an.classify_dihedrant(n, S)
                if r.family_tag is None:
                    return "fail", f"unclassified {r.graph_id}"
                if r.family_tag == "cross-ladder":
                    if r.arc_transitive or r.normal_cayley or n % 2:
                        return "fail", f"cross-ladder tag inconsistent for {r.graph_id}"
                tags.append(r.family_tag)
            return "pass", " ".join(f"{t}={tags.count(t)}" for t in sorted(set(tags)))
        _run_case(rep, f"thm1.1:n={n}", case, {"n": n}, f"census dihedrant --n-min {n} --n-max {n}")
    return rep


def suite_mcl_cayley(ms=range(2, 11), budget: int = an.DEFAULT_BUDGET) -> SuiteReport:
    rep = SuiteReport("thm1.2")
    for m in ms:
        def case(m=m):
            expect = m % 2 == 0 or m % 3 == 0
            v = an.is_cayley(multi_cross_ladder(m), budget=budget)
            if v.status == "unknown":
                return "unknown", v.note
            if (v.status == "yes") != expect:
                return "fail", f"is_cayley={v.status}, expected {'yes' if expect else 'no'}"
            if m % 2 == 0:
                return _witness_case(wt.mcl_even_delta(m))
            if m % 3 == 0:
                return _witness_case(wt.mcl_beta(m))
            return "pass", "no regular subgroup"
        _run_case(rep, f"thm1.2:m={m}", case, {"m": m}, f"analyze mcl:{m}", budget)
    return rep


VNC_FAMILY_INSTANCES = [FamilyParams(1, n=15, l=2), FamilyParams(2, n=10, l=2),
                   FamilyParams(3, m=2), FamilyParams(4, l=1)]


def suite_vnc_families(budget: int = an.DEFAULT_BUDGET) -> SuiteReport:
    rep = SuiteReport("thm1.3")
    for P in VNC_FAMILY_INSTANCES:
        def case(P=P):
            _, _, G = family_builder(P)
            if not an.is_vertex_transitive(G):
                return "fail", "not vertex-transitive"
            v = an.is_cayley(G, budget=budget)
            if v.status != "no":
                return ("unknown" if v.status == "unknown" else "fail"), f"is_cayley={v.status}"
            if P.family == 3:
                if are_isomorphic(G, multi_cross_ladder(2 * P.m + 1)) is None:
                    return "fail", "not isomorphic to MCL_{4(2m+1),2}"
            return "pass", "VNC"
        spec = f"family:{P.family}:" + ",".join(f"{k}={v}" for k, v in asdict(P).items()
                                                 if k != "family" and v is not None)
        _run_case(rep, spec, case, asdict(P), f"analyze {spec}", budget)
    return rep


def suite_mcl_bicayley(ms=range(2, 11)) -> SuiteReport:
    rep = SuiteReport("lemma4.1")
    for m in ms:
        _run_case(rep, f"lemma4.1:m={m}", lambda m=m: _witness_case(wt.mcl_bicayley_iso(m)),
                  {"m": m}, f"verify lemma4.1 (m={m})")
    return rep


def suite_vnc48(ls=(1, 2)) -> SuiteReport:
    rep = SuiteReport("lemma5.1")
    for l in ls:
        fn = (lambda l=l: _witness_case(wt.vnc48_structure(l))) if l == 1 else \
             (lambda l=l: _witness_case(wt.vnc48_g(l)))
        _run_case(rep, f"lemma5.1:l={l}", fn, {"l": l}, f"analyze family:4:l={l}")
    return rep


CAYLEY_12M_PAIRS = [(1, 1), (3, 1), (3, 2)]


def suite_cayley_12m_odd(pairs=CAYLEY_12M_PAIRS) -> SuiteReport:
    rep = SuiteReport("lemma6.1")
    for m, i in pairs:
        def case(m=m, i=i):
            out = _witness_case(wt.cayley_12m_g(m, i))
            if out[0] != "pass":
                return out
            v = an.is_cayley(bicayley(wt.cayley_12m_triple(m, i)))
            return ("pass", "") if v.status == "yes" else ("fail", f"is_cayley={v.status}")
        _run_case(rep, f"lemma6.1:m={m},i={i}", case, {"m": m, "i": i})
    return rep


def suite_cayley_12m_even(ms=(2, 6)) -> SuiteReport:
    rep = SuiteReport("lemma6.2")
    for m in ms:
        for j in (1, 2):
            def case(m=m, j=j):
                out = _witness_case(wt.cayley_12m_even_g(m, j))
                if out[0] != "pass":
                    return out
                v = an.is_cayley(bicayley(wt.cayley_12m_even_triple(m, j)))
                return ("pass", "") if v.status == "yes" else ("fail", f"is_cayley={v.status}")
            _run_case(rep, f"lemma6.2:m={m},variant={j}", case, {"m": m, "variant": j})
    return rep


def random_trivalent_triple(rng: random.Random, n_max: int = 12) -> BiCayleyTriple:
    """A random trivalent bi-Cayley triple over D_2n (3 <= n <= n_max), 1 in S."""
    n = rng.randint(3, n_max)
    H = dihedral(n)
    s_type = rng.choice((0, 1, 2))
    pool = [x for x in H.elements if x != H.identity]

    def closed_subset(size):
        while True:
            x = rng.choice(pool)
            X = {x, H.inv(x)}
            if size == 2 and len(X) == 1:
                y = rng.choice([z for z in pool if z != x and H.inv(z) == z])
                X.add(y)
            if len(X) == size:
                return frozenset(X)

    if s_type == 0:
        R = L = frozenset()
        S = frozenset([H.identity] + rng.sample(pool, 2))
    elif s_type == 1:
        R, L = closed_subset(1), closed_subset(1)
        S = frozenset([H.identity, rng.choice(pool)])
    else:
        R, L = closed_subset(2), closed_subset(2)
        S = frozenset([H.identity])
    return BiCayleyTriple(H, R, L, S)


def bicayley_invariance_case(T: BiCayleyTriple, rng: random.Random) -> tuple[str, str]:
    from .groups import enumerate_automorphisms

    H = T.group
    al = rng.choice(enumerate_automorphisms(H))
    G = bicayley(T)
    Ta = BiCayleyTriple(H, al.apply_set(T.R), al.apply_set(T.L), al.apply_set(T.S))
    Tsw = BiCayleyTriple(H, T.L, T.R, H.inv_set(T.S))
    w1 = are_isomorphic(G, bicayley(Ta))
    w2 = are_isomorphic(G, bicayley(Tsw))
    if w1 is None:
        return "fail", f"BiCay(T) !~ BiCay(T^alpha), alpha: {al.describe()}"
    if w2 is None:
        return "fail", "BiCay(R,L,S) !~ BiCay(L,R,S^-1)"
    return "pass", ""


def suite_bicayley_invariance(count: int = 100, seed: int = 2023) -> SuiteReport:
    rep = SuiteReport("prop2.3")
    rng = random.Random(seed)
    for k in range(count):
        T = random_trivalent_triple(rng)
        sub = random.Random(rng.random())
        _run_case(rep, f"prop2.3:{k}", lambda T=T, sub=sub: bicayley_invariance_case(T, sub),
                  {"triple": T.describe(), "n": T.group.params[0]},
                  f"bicay:dihedral:{T.group.params[0]}:" + "|".join(
                      ",".join(T.group.fmt(x) for x in sorted(X)) for X in (T.R, T.L, T.S)))
    return rep


def normalizer_case(T: BiCayleyTriple) -> tuple[str, str]:
    from .perms import close_group, normalizer_centralizer, orbit_of

    G = bicayley(T)
    A = automorphism_group(G)
    RH = an.bicayley_R_group(T)
    N, _ = normalizer_centralizer(RH, A)
    F, I = an.compute_F_I(T)
    base = list(RH.gens) + list(F)
    if not I:
        M = close_group(base, degree=G.n)
        if M.order != RH.order * len(F):
            return "fail", "R(H) F is not a semidirect product of the expected order"
    else:
        for d in sorted(I, key=lambda p: p.image):
            if len(orbit_of(0, list(RH.gens) + [d])) != G.n:
                return "fail", "<R(H), delta> not vertex-transitive"
        M = close_group(base + [min(I, key=lambda p: p.image)], degree=G.n)
    if M.element_set != N.element_set:
        return "fail", f"|N|={N.order} but |R(H)<F,delta>|={M.order}"
    return "pass", f"|N|={N.order}, |F|={len(F)}, |I|={len(I)}"


def connected_two_type_triples(n_max: int = 8) -> list[BiCayleyTriple]:
    out = []
    for n in range(3, n_max + 1):
        for T in an.trivalent_triples(n, 2):
            if is_connected(bicayley(T)):
                out.append(T)
    return out


def suite_normalizer(n_max: int = 8) -> SuiteReport:
    rep = SuiteReport("prop2.4")
    for k, T in enumerate(connected_two_type_triples(n_max)):
        _run_case(rep, f"prop2.4:{k}", lambda T=T: normalizer_case(T),
                  {"n": T.group.params[0], "triple": T.describe()})
    return rep


SUITES: dict[str, Callable[[], SuiteReport]] = {
    "thm1.1": suite_dihedrant_classification, "thm1.2": suite_mcl_cayley, "thm1.3": suite_vnc_families,
    "lemma4.1": suite_mcl_bicayley, "lemma5.1": suite_vnc48, "lemma6.1": suite_cayley_12m_odd,
    "lemma6.2": suite_cayley_12m_even, "prop2.3": suite_bicayley_invariance, "prop2.4": suite_normalizer,
}


def run_suite(name: str) -> SuiteReport:
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name]()


# -- census --------------------------------------------------------------------------


CENSUS_HEADER = ("n", "S", "vt", "at", "cayley", "normal", "tag")


def _fmt_set(H: FCGroup, X) -> str:
    return "{" + ",".join(H.fmt(x) for x in sorted(X)) + "}"


def census(kind: str, n_min: int, n_max: int, budget: int = an.DEFAULT_BUDGET
           ) -> tuple[SuiteReport, list[tuple]]:
    if kind not in ("dihedrant", "bidihedrant"):
        raise UsageError("census kind is dihedrant or bidihedrant")
    if n_min < 3 or n_max < n_min:
        raise UsageError("need 3 <= n-min <= n-max")
    rep = SuiteReport(f"census:{kind}")
    rows: list[tuple] = []
    b = lambda x: "yes" if x else "no"
    for n in range(n_min, n_max + 1):
        H = dihedral(n)
        if kind == "dihedrant":
            for S in an.trivalent_dihedral_sets(n):
                sid = _fmt_set(H, S.S)

                def case(S=S, sid=sid):
                    r = an.classify_dihedrant(n, S)
                    rows.append((n, sid, b(r.vertex_transitive), b(r.arc_transitive), r.cayley,
                                 b(r.normal_cayley), r.family_tag or "-"))
                    return ("pass", r.family_tag) if r.family_tag else ("fail", "unclassified")
                _run_case(rep, f"{n}:{sid}", case, {"n": n},
                          f"analyze cay:dihedral:{n}:" + ",".join(H.fmt(x) for x in sorted(S.S)))
        else:
            for s_type in (0, 1, 2):
                for T in an.trivalent_triples(n, s_type):
                    G = bicayley(T)
                    if not is_connected(G):
                        continue
                    spec = f"bicay:dihedral:{n}:" + "|".join(
                        ",".join(H.fmt(x) for x in sorted(X)) for X in (T.R, T.L, T.S))

                    def case(T=T, G=G):
                        vt = an.is_vertex_transitive(G)
                        at = an.is_arc_transitive(G)
                        cay = an.is_cayley(G, budget=budget).status if vt else "no"
                        tag, outcome, detail = "-", "pass", ""
                        if vt and cay == "no":
                            hits = an.match_family(T)
                            if len(hits) >= 1:
                                tag = f"VNC-{hits[0][0].family}"
                                detail = hits[0][1]
                            else:
                                tag, outcome, detail = "VNC-?", "fail", "VNC matching no family"
                        if cay == "unknown":
                            outcome = "unknown"
                        rows.append((n, T.describe(), b(vt), b(at), cay, "-", tag))
                        return outcome, detail
                    _run_case(rep, spec, case, {"n": n, "type": s_type}, f"analyze '{spec}'", budget)
    return rep, rows


def format_tsv(rows: list[tuple]) -> str:
    lines = ["\t".join(CENSUS_HEADER)]
    lines += ["\t".join(map(str, r)) for r in rows]
    return "\n".join(lines) + "\n"


# -- analyze ------------------------------------------------------------------------


def analyze(spec: str, budget: int = an.DEFAULT_BUDGET) -> an.ClassReport:
    B = build_spec(spec)
    G = B.graph
    if (B.kind == "cay" and B.group.kind == "dihedral" and len(B.cset.S) == 3
            and is_connected(G)):
        return an.classify_dihedrant(B.group.params[0], B.cset)
    vt = an.is_vertex_transitive(G)
    at = an.is_arc_transitive(G)
    v = an.is_cayley(G, budget=budget) if vt else an.Verdict("no")
    rep = an.ClassReport(spec, vt, at, v.status, aut_order=automorphism_group(G).order)
    if v.status == "yes":
        rep.witnesses["regular_subgroup_gens"] = [list(p.image) for p in v.witness.gens]
    if B.kind == "cay":
        rep.normal_cayley = an.is_normal_cayley(B.group, B.cset)
    if B.family is not None and vt and v.status == "no":
        rep.family_tag = f"VNC-{B.family.family}"
    elif at:
        rep.family_tag = "AT"
    return rep


# -- main ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dihedrants", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="cmd", required=True)

    b = sub.add_parser("build", help="build a graph and write it as an edge list")
    b.add_argument("spec")
    b.add_argument("-o", "--output", help="output file (default: stdout)")

    a = sub.add_parser("analyze", help="VT/AT/Cayley/normal verdicts as JSON")
    a.add_argument("spec")
    a.add_argument("--budget", type=int, default=an.DEFAULT_BUDGET,
                   help="node budget for the regular-subgroup search")

    i = sub.add_parser("iso", help="test two graphs for isomorphism")
    i.add_argument("spec_a")
    i.add_argument("spec_b")

    c = sub.add_parser("census", help="desk-scale census as TSV")
    c.add_argument("kind", choices=("dihedrant", "bidihedrant"))
    c.add_argument("--n-min", type=int, default=3)
    c.add_argument("--n-max", type=int, default=10)
    c.add_argument("--budget", type=int, default=an.DEFAULT_BUDGET,
                   help="per-instance node budget (exhaustion gives 'unknown' rows)")
    c.add_argument("-o", "--output", help="TSV output file (default: stdout)")
    c.add_argument("--report", help="also write the JSON suite report here")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=", ".join(SUITES))
    v.add_argument("--report", help="write the JSON report here (default: stdout)")
    return p


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        if args.cmd == "build":
            _emit(build_spec(args.spec).graph.to_edgelist(), args.output)
            return EXIT_PASS
        if args.cmd == "analyze":
            rep = analyze(args.spec, args.budget)
            _emit(rep.to_json(), None)
            return EXIT_UNKNOWN if rep.cayley == "unknown" else EXIT_PASS
        if args.cmd == "iso":
            w = are_isomorphic(build_spec(args.spec_a).graph, build_spec(args.spec_b).graph)
            _emit(json.dumps({"isomorphic": w is not None,
                              "bijection": list(w.bijection) if w else None}), None)
            return EXIT_PASS if w else EXIT_FAIL
        if args.cmd == "census":
            rep, rows = census(args.kind, args.n_min, args.n_max, args.budget)
            _emit(format_tsv(rows), args.output)
            if args.report:
                _emit(rep.to_json(), args.report)
            return rep.exit_code
        if args.cmd == "verify":
            rep = run_suite(args.suite)
            _emit(rep.to_json(), args.report)
            print(f"{rep.suite}: {rep.summary}", file=sys.stderr)
            return rep.exit_code
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DihedrantError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
