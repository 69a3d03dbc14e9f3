"""Batch driver: matrix/gallery verifications, appendix reproductions, enumerations,
bijection suites and rank-one classification, with text and JSON reports."""
from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Mapping, Optional, Sequence

import sympy

from . import classifier as cl
from .affine_weyl import (AffineWeylElement, from_word, identity, is_straight, length,
                          reduced_word, simple_affine_reflection, translation,
                          translation_power)
from .finite_field import FiniteField, is_prime
from .fixtures import APPENDIX_CASES, parse_word
from .gallery import check_concept, crossing_profile, standard_gallery_datum, wall_set
from .matrix_models import build_group_model, conjugation_multiplicities, full_report
from .phigamma import (PhiGammaModule, classify_rank_one, construct_rank_one,
                       induce_to_phi, legal_triples)
from .rootdata import RootSystem, build_root_system, coroot_of, scale

SCHEMA_VERSION = 1


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# reports

@dataclass
class ReportItem:
    check: str
    anchor: str
    status: bool
    witness: str = ""

    def to_json(self) -> dict:
        return {"check": self.check, "anchor": self.anchor,
                "status": "pass" if self.status else "fail", "witness": self.witness}


@dataclass
class VerificationReport:
    suite: str
    items: list[ReportItem] = field(default_factory=list)
    runtime: float = 0.0
    data: dict = field(default_factory=dict)

    def add(self, check: str, anchor: str, ok: bool, witness: str = "") -> bool:
        ok = bool(ok)
        self.items.append(ReportItem(check, anchor, ok, "" if ok else (witness or "failed")))
        return ok

    @property
    def totals(self) -> dict[str, int]:
        passed = sum(1 for it in self.items if it.status)
        return {"pass": passed, "fail": len(self.items) - passed, "total": len(self.items)}

    @property
    def ok(self) -> bool:
        return all(it.status for it in self.items)

    def to_json(self) -> dict:
        return {"schema": SCHEMA_VERSION, "suite": self.suite,
                "items": [it.to_json() for it in self.items], "totals": self.totals,
                "runtime": round(self.runtime, 3), "data": self.data}

    @classmethod
    def from_json(cls, obj: Mapping) -> "VerificationReport":
        if obj.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {obj.get('schema')!r}")
        items = [ReportItem(it["check"], it["anchor"], it["status"] == "pass", it["witness"])
                 for it in obj["items"]]
        return cls(obj["suite"], items, obj["runtime"], dict(obj.get("data", {})))

    def render_text(self) -> str:
        lines = [f"== {self.suite} =="]
        for it in self.items:
            mark = "PASS" if it.status else "FAIL"
            lines.append(f"[{mark}] {it.check}  ({it.anchor})")
            if it.witness:
                lines.append(f"       witness: {it.witness}")
        t = self.totals
        lines.append(f"-- {t['pass']}/{t['total']} passed, {t['fail']} failed, "
                     f"{self.runtime:.2f}s")
        return "\n".join(lines)


def _timed(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.runtime = time.perf_counter() - t0
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _vec_str(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


# ---------------------------------------------------------------------------
# verify

def _check_params(type_label: str, d: int, p: int) -> None:
    if type_label not in cl.TYPE_TO_FAMILY:
        raise UsageError(f"unknown type {type_label!r}")
    if not is_prime(p) or p == 2:
        raise UsageError(f"p = {p} must be an odd prime")
    try:
        build_group_model(type_label, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _random_rank_one_checks(rep: VerificationReport, p: int, rng: random.Random,
                            samples: int) -> None:
    F = FiniteField(p)
    for r in (1, 2):
        grid = list(legal_triples(r, F))
        for n, s, xi in rng.sample(grid, min(samples, len(grid))):
            mod = construct_rank_one(r, F, n, s, xi)
            got = classify_rank_one(mod).as_tuple()
            rep.add(f"classify(construct({n}, {s}, {xi})) at r = {r}", "rank-one normal form",
                    got == (n, s, xi), f"got {got}")
            D = mod.to_phigamma()
            ind = induce_to_phi(D)
            rep.add(f"induction of ({n}, {s}, {xi}) at r = {r}", "induction functor",
                    ind.is_etale() and ind.gamma_equivariant() and ind.rank == r * D.rank,
                    f"rank {ind.rank}")


@_timed
def cmd_verify(type_label: str, d: int, p: int, seed: Optional[int] = None,
               samples: int = 3) -> VerificationReport:
    """Matrix-model identities, gallery properties, and seeded rank-one spot checks at p."""
    _check_params(type_label, d, p)
    rep = VerificationReport(f"verify {type_label}{d} p={p}")
    anchor = f"matrix model {type_label}{d}"
    model = build_group_model(type_label, d)
    for c in full_report(model).items:
        rep.add(c.identity_id, anchor, c.status, c.witness)

    datum = standard_gallery_datum(type_label, d)
    g_anchor = f"gallery {type_label}{d}"
    con = check_concept(datum)
    rep.add("crossed roots are positive", g_anchor, con.positivity, "; ".join(con.failures))
    rep.add("<alpha^(j), tau> = 1 over one period", g_anchor, con.tau_pairing,
            "; ".join(con.failures))
    rep.add("t_tau commutes with phi", g_anchor, con.tau_commutes, "; ".join(con.failures))
    rep.add("gallery is minimal", g_anchor, con.minimal, "; ".join(con.failures))
    m, _ = translation_power(datum.phi)
    prof = crossing_profile(datum, m * datum.r)
    total = sum(prof.m_table.values())
    rep.add(f"sum of m_alpha = {m} * l(phi)", g_anchor, total == m * datum.r,
            f"sum {total} != {m * datum.r}")
    # m_alpha of the matrix model counts the crossings of alpha over phi_power steps of phi
    k = model.phi_power
    walk = crossing_profile(datum, k * datum.r)
    counts = Counter(datum.root_system.positive_roots[c.root_index] for c in walk.crossings)
    for alpha, v in sorted(conjugation_multiplicities(model).items()):
        rep.add(f"m_alpha = {v} for alpha = {_vec_str(alpha)}", anchor,
                counts.get(alpha, 0) == v, f"{counts.get(alpha, 0)} crossings in {k} periods")
    rng = random.Random(seed)
    _random_rank_one_checks(rep, p, rng, samples)
    rep.data = {"type": type_label, "d": d, "p": p, "seed": seed,
                "translation_power": m, "length_phi": datum.r}
    return rep


# ---------------------------------------------------------------------------
# appendix

def _sstar(rs: RootSystem) -> Callable[[int], AffineWeylElement]:
    """s_i* = s_i for i >= 1 and s_0* = (s_theta, theta^vee) in the Bourbaki convention."""
    s0 = simple_affine_reflection(rs, 0)
    theta = scale(-1, rs.alpha0)
    s0_star = AffineWeylElement(rs, s0.linear_part, coroot_of(theta))
    return lambda i: s0_star if i == 0 else simple_affine_reflection(rs, i)


def _evaluate(rs: RootSystem, word: Sequence[int],
              gen: Callable[[int], AffineWeylElement]) -> AffineWeylElement:
    return reduce(lambda acc, i: acc * gen(i), word, identity(rs))


def null_coroot_coefficients(rs: RootSystem) -> list[int]:
    """Primitive positive integers c_0..c_d with sum c_i alpha_i^vee = 0."""
    mat = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v]
                        for v in rs.coroots]).T
    (null,) = mat.nullspace()
    den = reduce(sympy.ilcm, [x.q for x in null], 1)
    ints = [int(x * den) for x in null]
    g = reduce(math.gcd, ints)
    ints = [x // g for x in ints]
    return ints if ints[0] > 0 else [-x for x in ints]


def appendix_case(case: str) -> dict:
    if case not in APPENDIX_CASES:
        raise UsageError(f"unknown appendix case {case!r}; choose from {sorted(APPENDIX_CASES)}")
    return APPENDIX_CASES[case]


@_timed
def cmd_appendix(case: str) -> VerificationReport:
    """Evaluate the vendored reduced word, transport it through the s0*-conjugation and the
    w0-relabeling, and compare with the power of phi in our convention."""
    case_data = appendix_case(case)
    rs = build_root_system(case_data["type"])
    word = parse_word(case_data["string"])
    lam = scale(case_data["multiple"], rs.coweight(case_data["coweight"]).vector)
    t_lam = translation(rs, lam)
    name = f"t_{{{case_data['multiple']}omega{case_data['coweight']}}}"
    rep = VerificationReport(f"appendix {case}")
    a = "reference word"
    rep.add(f"word has {len(word)} letters", a, len(word) == length(t_lam),
            f"length(t) = {length(t_lam)}")
    sstar = _sstar(rs)
    w = _evaluate(rs, word, sstar)
    rep.add(f"word evaluates to {name} under s*", a, w == t_lam,
            f"translation part {_vec_str(w.translation_part)}" if w.is_translation
            else "not a translation")

    s0 = sstar(0)
    rotated = word[1:] + [0]
    w2 = _evaluate(rs, rotated, lambda i: s0 * sstar(i) * s0)
    rep.add(f"rotated word evaluates to {name} under s**", "relabeling pipeline", w2 == t_lam)
    rel = case_data["relabel"]
    relabeled = [rel.get(i, i) for i in rotated]
    datum = standard_gallery_datum(case_data["datum"])
    target = datum.phi ** case_data["power"]
    ours = from_word(rs, relabeled)
    rep.add(f"relabeled word equals phi^{case_data['power']}", "relabeling pipeline", ours == target)

    own, om = reduced_word(t_lam)
    rep.add("recomputed reduced word has the same length", "cross-check",
            len(own) == len(word) and length(om) == 0, f"{len(own)} letters")
    rep.add(f"recomputed reduced word evaluates to {name}", "cross-check",
            from_word(rs, own, om) == t_lam)

    coeffs = null_coroot_coefficients(rs)
    counts = Counter(word)
    k = len(word) // sum(coeffs)
    rep.add(f"letter counts are {k} x {tuple(coeffs)}", "coroot relation",
            all(counts[i] == k * c for i, c in enumerate(coeffs)),
            f"counts {[counts[i] for i in range(len(coeffs))]}")

    m, mu = translation_power(datum.phi)
    walls = wall_set(rs, rs.coweight(case_data["coweight"]))
    rep.add("phi is straight", "straightness", is_straight(datum.phi))
    rep.data = {"case": case, "letters": len(word), "length_t": length(t_lam),
                "wall_set_size": len(walls), "length_phi": length(datum.phi),
                "translation_power": m, "phi_translation": _vec_str(mu),
                "recomputed_word": own}
    return rep


# ---------------------------------------------------------------------------
# enumerate

def cmd_enumerate(family: str, r: int, p: int, q: Optional[int] = None,
                  count_only: bool = False) -> dict:
    try:
        reps = cl.enumerate_classes(family, r, p, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out: dict = {"family": family, "r": r, "p": p, "q": q or p, "count": len(reps)}
    if not count_only:
        out["rows"] = [{"n": c.n, "digits": list(c.digits), "s": c.s, "xi": c.xi,
                        "orbit_size": len(cl.orbit(c))} for c in reps]
    return out


def _render_enumeration(res: Mapping) -> str:
    head = f"family {res['family']}  r={res['r']}  p={res['p']}  q={res['q']}: {res['count']} classes"
    if "rows" not in res:
        return head
    lines = [head]
    for row in res["rows"]:
        xi = "" if row["xi"] is None else f"  xi={row['xi']}"
        lines.append(f"  n={row['n']:<6} k={tuple(row['digits'])}  s={row['s']}{xi}"
                     f"  |orbit|={row['orbit_size']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# bijection

@_timed
def cmd_bijection(type_label: str, d: int, p: int, q: Optional[int] = None,
                  classify: bool = True) -> VerificationReport:
    """Exhaustive data -> class point map and closed-form functor outputs."""
    _check_params(type_label, d, p)
    rep = VerificationReport(f"bijection {type_label}{d} p={p}")
    try:
        br = cl.verify_bijection(type_label, d, p, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    a = f"classification map {type_label}{d}"
    rep.add("well defined on conjugation orbits", a, br.well_defined,
            f"{len(br.ill_defined)} orbits, e.g. {br.ill_defined[:1]}")
    rep.add("injective on orbits", a, br.injective,
            f"{len(br.collisions)} colliding points, e.g. {br.collisions[:1]}")
    rep.add(f"surjective onto the {br.n_classes} classes", a, br.surjective,
            f"{len(br.misses)} missed, e.g. {br.misses[:1]}")
    if br.packet_well_defined is not None:
        rep.add("constant on packets", a, br.packet_well_defined,
                f"packet fiber sizes {dict(br.packet_fiber_sizes)}")
    fr = cl.verify_functor_outputs(type_label, d, p, q, classify=classify)
    f_anchor = f"functor output {type_label}{d}"
    rep.add("summands classify to the predicted triples", f_anchor, not fr.failures,
            f"{len(fr.failures)} failures, e.g. {fr.failures[:1]}")
    rep.add("summands are symmetric for the family", f_anchor, not fr.asymmetric,
            f"{len(fr.asymmetric)} asymmetric, e.g. {fr.asymmetric[:1]}")
    rep.add("summand exponents agree with the character", f_anchor, not fr.offset_mismatches,
            f"{len(fr.offset_mismatches)} mismatches, e.g. {fr.offset_mismatches[:1]}")
    rep.data = {"bijection": br.to_json(), "functor": fr.to_json()}
    return rep


# ---------------------------------------------------------------------------
# classify-module

def cmd_classify_module(obj: Mapping) -> dict:
    mod = PhiGammaModule.from_json(obj)
    out: dict = {"rank": mod.rank, "r": mod.r, "p": mod.p, "q": mod.field.q,
                 "etale": mod.is_etale(), "gamma_equivariant": mod.gamma_equivariant()}
    try:
        summands = mod.diagonal_summands()
    except ValueError as exc:
        out["error"] = str(exc)
        return out
    out["summands"] = [dict(zip(("n", "s", "xi"), classify_rank_one(s).as_tuple()))
                       for s in summands]
    return out


# ---------------------------------------------------------------------------
# argument parsing

def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hecke-phigamma", description=__doc__)
    ap.add_argument("--json", metavar="OUT", help="also write the report as JSON to OUT")
    ap.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="matrix-model and gallery identities for one case")
    v.add_argument("--type", required=True, choices=sorted(cl.TYPE_TO_FAMILY))
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--samples", type=int, default=3, help="random rank-one checks per r")

    a = sub.add_parser("appendix", help="reproduce a reference E-type reduced word")
    a.add_argument("case", choices=sorted(APPENDIX_CASES) + ["all"])

    e = sub.add_parser("enumerate", help="canonical representatives of a quotient set")
    e.add_argument("--family", required=True, choices=sorted(cl.FAMILIES))
    e.add_argument("--r", type=int, required=True)
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--q", type=int, default=None)
    e.add_argument("--count-only", action="store_true")

    b = sub.add_parser("bijection", help="exhaustive data -> class point suite")
    b.add_argument("--type", required=True, choices=sorted(cl.TYPE_TO_FAMILY))
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--q", type=int, default=None)
    b.add_argument("--no-classify", action="store_true",
                   help="skip the rank-one round trip of every summand")

    c = sub.add_parser("classify-module", help="classify a (phi^r, Gamma)-module from JSON")
    c.add_argument("path", help="JSON file ('-' for stdin)")
    return ap


def _emit(payload: dict, text: str, json_path: Optional[str]) -> None:
    print(text)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "verify":
            rep = cmd_verify(args.type, args.d, args.p, seed=args.seed, samples=args.samples)
            _emit(rep.to_json(), rep.render_text(), args.json)
            return 0 if rep.ok else 1
        if args.command == "appendix":
            cases = sorted(APPENDIX_CASES) if args.case == "all" else [args.case]
            reps = [cmd_appendix(c) for c in cases]
            payload = reps[0].to_json() if len(reps) == 1 else {
                "schema": SCHEMA_VERSION, "reports": [r.to_json() for r in reps]}
            _emit(payload, "\n".join(r.render_text() for r in reps), args.json)
            return 0 if all(r.ok for r in reps) else 1
        if args.command == "enumerate":
            res = cmd_enumerate(args.family, args.r, args.p, args.q, args.count_only)
            _emit(res, _render_enumeration(res), args.json)
            return 0
        if args.command == "bijection":
            rep = cmd_bijection(args.type, args.d, args.p, args.q, not args.no_classify)
            _emit(rep.to_json(), rep.render_text(), args.json)
            return 0 if rep.ok else 1
        if args.command == "classify-module":
            if args.path == "-":
                obj = json.load(sys.stdin)
            else:
                with open(args.path, encoding="utf-8") as fh:
                    obj = json.load(fh)
            res = cmd_classify_module(obj)
            _emit(res, json.dumps(res, indent=2), args.json)
            return 0 if "error" not in res else 1
    except UsageError as exc:
        ap.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
