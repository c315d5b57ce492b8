"""Command-line front end.

    constabound analyze --q 7 --poly "5,0,0,1"
    constabound analyze --q 7 --cyclotomic 45 --factor-index 0
    constabound code --q 7 --m 9 --lambda 1 --poly "5,0,0,1"
    constabound table1
    constabound factor --q 7 --n 45

Every command builds a plain-dict report document; ``--json`` prints it as
deterministic JSON, otherwise a text rendering is printed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .bounds import bound_report, irreducible_bounds
from .codes import DEFAULT_BUDGET, BudgetExceeded, build_code, code_bound_report
from .cyclotomic import all_cosets, binomial_fields, is_equal_difference, omega, sigma_gamma
from .finite_field import FieldCtx, base_field
from .medrep import all_med_representations, stabilizer
from .polynomial import (
    Poly,
    binomial_factorization,
    coset_field,
    coset_minimal_polynomial,
    cyclotomic_factors,
    defining_set,
    format_poly,
    parse_poly,
)
from .residues import DefiningSet

SCHEMA = "constabound/1"
EXIT_OK, EXIT_PRECONDITION, EXIT_BUDGET = 0, 2, 3
TABLE1_ORDERS = tuple(3**i * 5**j for j in range(3) for i in range(3))


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads_document(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    return doc


def _document(command: str, inputs: dict, **body) -> dict:
    return {"schema": SCHEMA, "command": command, "inputs": inputs, **body}


def _field_name(ctx: FieldCtx) -> str:
    return f"GF({ctx.p})" if ctx.k == 1 else f"GF({ctx.p}^{ctx.k})"


def _defining_set_of(f: Poly) -> DefiningSet:
    if f.degree == 0:
        return DefiningSet(1, f.ctx.cardinality, ())
    return defining_set(f)


def _set_section(T: DefiningSet) -> dict:
    stab = stabilizer(T)
    meds = all_med_representations(T)
    return {
        "order": T.n,
        "defining_set": list(T.elems),
        "d0": stab.d0,
        "sigma_f": list(stab.sigma_f),
        "med_representations": [
            {"d": rep.d, "classes": [list(c) for c in rep.classes], "bound": rep.r + 1} for rep in meds
        ],
    }


def _select_cyclotomic_factor(q: int, n: int, index: int) -> Poly:
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) != 1")
    factors = cyclotomic_factors(n, q)
    if not 0 <= index < len(factors):
        raise ValueError(f"factor index {index} out of range: Phi_{n} has {len(factors)} factors over GF({q})")
    return factors[index]


def cmd_analyze(q: int, poly: str | None = None, cyclotomic: int | None = None, factor_index: int = 0) -> dict:
    ctx = base_field(q)
    if (poly is None) == (cyclotomic is None):
        raise ValueError("give exactly one of --poly or --cyclotomic")
    if poly is not None:
        f = parse_poly(poly, ctx)
        inputs = {"q": q, "poly": poly}
    else:
        f = _select_cyclotomic_factor(q, cyclotomic, factor_index)
        inputs = {"q": q, "cyclotomic": cyclotomic, "factor_index": factor_index}
    if not f:
        raise ValueError("the zero polynomial has no defining set")
    f = f.monic()
    T = _defining_set_of(f)
    return _document(
        "analyze", inputs,
        polynomial={"coefficients": format_poly(f), "text": str(f), "field": _field_name(ctx)},
        **_set_section(T),
        bounds=bound_report(T).as_dict(),
    )


def _parse_scalar(text: str, ctx: FieldCtx):
    p = parse_poly(text, ctx)
    if p.degree > 0:
        raise ValueError(f"{text!r} is not a single field element")
    return p.coeff(0)


def cmd_code(q: int, m: int, lam: str, poly: str, distance_budget: int = DEFAULT_BUDGET) -> tuple[dict, int]:
    """Report document and exit status (budget refusal is reported, then signalled)."""
    ctx = base_field(q)
    code = build_code(q, m, _parse_scalar(lam, ctx), parse_poly(poly, ctx))
    inputs = {"q": q, "m": m, "lambda": lam, "poly": poly, "distance_budget": distance_budget}
    header = {
        "q": q, "m": m, "lambda": repr(code.lam), "k": code.k,
        "generator": format_poly(code.generator), "generator_text": str(code.generator),
    }
    report = code_bound_report(code, distance_budget)
    if report.status == "zero code":
        return _document("code", inputs, code=header, status=report.status), EXIT_OK
    body = {"code": header, "status": report.status, **_set_section(report.defining_set),
            "bounds": report.bounds.as_dict()}
    if report.distance is None:
        body["distance"] = None
        return _document("code", inputs, **body), EXIT_BUDGET
    dist = report.distance.distance
    b = report.bounds
    body["distance"] = report.distance.as_dict()
    body["tightness"] = {
        "singleton": dist == b.singleton,
        "arithmetic": dist == b.arithmetic,
        "per_d": [{"d": d, "bound": bound, "tight": dist == bound} for d, bound in b.gamma_family],
    }
    return _document("code", inputs, **body), EXIT_OK


def table1_rows(q: int = 7) -> list[dict]:
    """Bounds for one irreducible factor of each Phi_{3^i 5^j}, i, j <= 2, by two routes."""
    rows = []
    for n in TABLE1_ORDERS:
        closed = irreducible_bounds(q, n)
        generic = bound_report(defining_set(_select_cyclotomic_factor(q, n, 0)))
        if (generic.singleton, generic.arithmetic, generic.omega, generic.tau) != tuple(closed):
            raise AssertionError(f"closed form {closed} disagrees with the generic path {generic} at n={n}")
        rows.append({
            "n": n,
            "singleton": closed.singleton,
            "arithmetic": closed.arithmetic,
            "coincide": closed.singleton == closed.arithmetic,
        })
    return rows


def cmd_table1() -> dict:
    return _document("table1", {"q": 7}, rows=table1_rows(7))


def cmd_factor(q: int, n: int) -> dict:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) != 1")
    base = base_field(q)
    entries = []
    for c in all_cosets(n, q):
        ctx = coset_field(c)
        sig = sigma_gamma(c)
        ts = binomial_fields(c)
        entries.append({
            "rep": c.rep,
            "elems": list(c.elems),
            "tau": c.tau,
            "n_gamma": c.n_gamma,
            "equal_difference": is_equal_difference(c),
            "omega": omega(c),
            "sigma_gamma": list(sig.sigma_set),
            "binomial_degrees": ts,
            "minimal_polynomial": format_poly(coset_minimal_polynomial(c, ctx).restrict(base)),
            "field": _field_name(ctx),
            "factorizations": [
                {"d": d, "t": t, "binomials": [format_poly(b) for b in binomial_factorization(c, d, ctx)]}
                for d, t in zip(sig.sigma_set, ts)
            ],
        })
    return _document("factor", {"q": q, "n": n}, cosets=entries)


# -- text rendering ----------------------------------------------------------------

def _render_sets(doc: dict, out: list[str]) -> None:
    out.append(f"order n      {doc['order']}")
    out.append(f"T_f          {{{', '.join(map(str, doc['defining_set']))}}}")
    out.append(f"d0           {doc['d0']}")
    out.append(f"Sigma_f      {doc['sigma_f']}")
    out.append("MED representations:")
    for rep in doc["med_representations"]:
        classes = " | ".join("{" + ",".join(map(str, c)) + "}" for c in rep["classes"])
        out.append(f"  d={rep['d']:<5} bound={rep['bound']:<5} {classes}")


def _render_bounds(b: dict, out: list[str]) -> None:
    out.append(f"tau          {b['tau']}")
    out.append(f"b_S          {b['singleton']}")
    out.append(f"b_AS         {b['arithmetic']}")
    out.append(f"coincide     {'yes' if b['coincide'] else 'no'}")


def render_text(doc: dict) -> str:
    out: list[str] = []
    cmd = doc["command"]
    if cmd == "analyze":
        p = doc["polynomial"]
        out.append(f"f = {p['text']} over {p['field']}")
        _render_sets(doc, out)
        _render_bounds(doc["bounds"], out)
    elif cmd == "code":
        c = doc["code"]
        out.append(f"code (f) in GF({c['q']})[X]/(X^{c['m']} - {c['lambda']}), f = {c['generator_text']}, k = {c['k']}")
        out.append(f"status       {doc['status']}")
        if "bounds" in doc:
            _render_sets(doc, out)
            _render_bounds(doc["bounds"], out)
            dist = doc["distance"]
            if dist is None:
                out.append("distance     unavailable (budget)")
            else:
                out.append(f"distance     {dist['distance']}  witness {dist['witness']}")
                t = doc["tightness"]
                out.append(f"tight        b_S: {'yes' if t['singleton'] else 'no'}, "
                           f"b_AS: {'yes' if t['arithmetic'] else 'no'}")
    elif cmd == "table1":
        out.append(f"{'factor':<10}{'b_S':>5}{'b_AS':>6}  coincide")
        for r in doc["rows"]:
            out.append(f"{'Phi_' + str(r['n']):<10}{r['singleton']:>5}{r['arithmetic']:>6}  "
                       f"{'yes' if r['coincide'] else 'no'}")
    elif cmd == "factor":
        out.append(f"cyclotomic cosets mod {doc['inputs']['n']} over GF({doc['inputs']['q']})")
        for e in doc["cosets"]:
            out.append(f"coset {{{','.join(map(str, e['elems']))}}}  tau={e['tau']}  n_gamma={e['n_gamma']}  "
                       f"omega={e['omega']}  equal-difference={'yes' if e['equal_difference'] else 'no'}")
            out.append(f"  M = {e['minimal_polynomial']}  (coefficients low to high)")
            for fz in e["factorizations"]:
                out.append(f"  d={fz['d']} t={fz['t']} over {e['field']}: " + " * ".join(
                    f"({b})" for b in fz["binomials"]))
    return "\n".join(out) + "\n"


# -- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="constabound", description="Arithmetic Singleton bounds for constacyclic codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="bounds for a polynomial's defining set")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--poly", help="coefficients low to high, e.g. 5,0,0,1")
    p.add_argument("--cyclotomic", type=int, metavar="N", help="use an irreducible factor of Phi_N")
    p.add_argument("--factor-index", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("code", help="bounds and exact distance of a constacyclic code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--distance-budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("table1", help="bounds for the factors of Phi_{3^i 5^j} over GF(7)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("factor", help="cyclotomic cosets and binomial factorizations")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    status = EXIT_OK
    try:
        if args.command == "analyze":
            doc = cmd_analyze(args.q, args.poly, args.cyclotomic, args.factor_index)
        elif args.command == "code":
            doc, status = cmd_code(args.q, args.m, args.lam, args.poly, args.distance_budget)
        elif args.command == "table1":
            doc = cmd_table1()
        else:
            doc = cmd_factor(args.q, args.n)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OverflowError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(dumps_document(doc) if args.json else render_text(doc))
    return status

