"""Command line front end.

    lgmirror analyze --poly "x^3+y^3"
    lgmirror dual --poly "x^3+y^3" --group J
    lgmirror verify --poly "x^2*y+y^2*x" --group max --json
    lgmirror catalog --only fermat,loop --jobs 2
    lgmirror oracle --poly "x^2*y+y^3"
    lgmirror --job job.txt

Exit codes: 0 pass, 2 bad input, 3 failed verification, 4 resource bound hit.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction

from .catalog import CatalogEntry, all_pairs, entries
from .errors import InputError, LGMirrorError, Property1Violation, ResourceBoundExceeded
from .lemmas import run_all
from .milnor import closed_form_mu, ring
from .mirror import check_property1, is_fundamental, verify_isomorphism
from .oracle import check_normal_forms, hessian_matches, oracle_gmax, oracle_quotient_dim
from .polyform import format_polynomial, parse_polynomial, transpose, weights
from .statespace import A, B, StateSpace
from .symmetry import (DEFAULT_MAX_ORDER, GroupElement, SymmetryGroup, J_element, J_group,
                       dual_group, enumerate_admissible_subgroups, generate, gmax, trivial_group)

EXIT_OK, EXIT_INPUT, EXIT_FAIL, EXIT_RESOURCE = 0, 2, 3, 4
COMMANDS = ("analyze", "dual", "verify", "catalog", "oracle")


@dataclass
class JobSpec:
    command: str = "analyze"
    poly: str = ""
    group: str = "max"
    format: str = "text"
    max_group_order: int = DEFAULT_MAX_ORDER
    only: str = ""
    jobs: int = 1
    mutate_seed: int | None = None

    def validate(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.format not in ("text", "json"):
            raise InputError(f"unknown format {self.format!r}")
        if self.command != "catalog" and not self.poly:
            raise InputError(f"{self.command} needs a polynomial")
        if self.max_group_order < 1 or self.jobs < 1:
            raise InputError("bounds must be positive")
        return self


def read_job_file(path: str) -> JobSpec:
    """UTF-8 key=value lines; '#' starts a comment."""
    known = {f.name: f for f in fields(JobSpec)}
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InputError(f"{path}:{lineno}: expected key=value")
            key, val = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in known:
                raise InputError(f"{path}:{lineno}: unknown key {key!r}")
            if key in ("max_group_order", "jobs", "mutate_seed"):
                try:
                    values[key] = int(val)
                except ValueError:
                    raise InputError(f"{path}:{lineno}: {key} must be an integer") from None
            else:
                values[key] = val
    return JobSpec(**values).validate()


# ---------------------------------------------------------------- groups

def _split_vectors(text: str) -> list[list[str]]:
    text = text.strip()
    if text.startswith("[["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad group JSON: {exc}") from None
        return [[str(x) for x in v] for v in data]
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch in "[(":
            depth += 1
            cur = ""
        elif ch in "])":
            depth -= 1
            out.append([s.strip() for s in cur.split(",") if s.strip()])
        elif depth:
            cur += ch
        elif ch not in ", ":
            raise InputError(f"unexpected {ch!r} in group {text!r}")
    if depth:
        raise InputError(f"unbalanced brackets in group {text!r}")
    return out


def parse_group(text: str, W, max_order: int = DEFAULT_MAX_ORDER) -> SymmetryGroup:
    key = text.strip().lower()
    if key in ("max", "gmax"):
        return gmax(W, max_order)
    if key == "j":
        return J_group(W)
    if key in ("0", "trivial", "{0}", ""):
        return trivial_group(W)
    gens = []
    for vec in _split_vectors(text):
        try:
            gens.append(GroupElement(tuple(Fraction(x) for x in vec)))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad group element {vec}") from None
    return generate(W, gens, max_order)


# ---------------------------------------------------------------- commands

def _fr(x) -> str:
    return str(Fraction(x))


def _gens(G: SymmetryGroup) -> list:
    return [g.to_json() for g in G.minimal_generators]


def cmd_analyze(job: JobSpec) -> tuple[int, dict]:
    W = parse_polynomial(job.poly)
    ws = weights(W)
    G = gmax(W, job.max_group_order)
    subs = enumerate_admissible_subgroups(W, job.max_group_order)
    return EXIT_OK, {
        "command": "analyze",
        "W": format_polynomial(W),
        "variables": list(W.variable_names),
        "atoms": [{"kind": a.kind, "exponents": list(a.exponents),
                   "variables": [W.variable_names[j] for j in a.var_indices]} for a in W.atoms],
        "q": [_fr(x) for x in ws.q],
        "d": ws.d,
        "central_charge": _fr(ws.central_charge),
        "mu": ring(W).mu,
        "mu_closed_form": closed_form_mu(W),
        "gmax_order": G.order,
        "J": J_element(W).to_json(),
        "admissible_subgroups": len(subs),
        "WT": format_polynomial(transpose(W)),
    }


def _dims(space: StateSpace) -> list:
    return [[g.to_json(), len(v)] for g, v in space.sectors.items() if v]


def cmd_dual(job: JobSpec) -> tuple[int, dict]:
    W = parse_polynomial(job.poly)
    G = parse_group(job.group, W, job.max_group_order)
    HA = StateSpace(W, G, A)
    GT = dual_group(G, W)
    HB = StateSpace(transpose(W), GT, B)
    ok, wit = check_property1(W, G)
    return EXIT_OK, {
        "command": "dual",
        "W": format_polynomial(W),
        "G": _gens(G),
        "G_order": G.order,
        "WT": format_polynomial(transpose(W)),
        "GT": _gens(GT),
        "GT_order": GT.order,
        "A_dims": _dims(HA),
        "B_dims": _dims(HB),
        "A_total": HA.dim,
        "B_total": HB.dim,
        "property1": ok,
        "fundamental": is_fundamental(W, G),
    }


def cmd_verify(job: JobSpec) -> tuple[int, dict]:
    W = parse_polynomial(job.poly)
    G = parse_group(job.group, W, job.max_group_order)
    try:
        report = verify_isomorphism(W, G, mutate_seed=job.mutate_seed)
    except Property1Violation as exc:
        return EXIT_FAIL, {"command": "verify", "W": format_polynomial(W), "G": _gens(G),
                           "passed": False, "error": str(exc), "witnesses": exc.witnesses}
    out = {"command": "verify", **report.to_json()}
    return (EXIT_OK if report.ok else EXIT_FAIL), out


def _catalog_row(args) -> dict:
    entry_name, gens, max_order = args
    entry = next(e for e in entries() if e.name == entry_name)
    W = entry.poly
    G = generate(W, [GroupElement(tuple(Fraction(x) for x in g)) for g in gens], max_order)
    t = time.perf_counter()
    row = {"entry": entry.name, "family": entry.family, "G": gens, "order": G.order}
    try:
        rep = verify_isomorphism(W, G)
        j = rep.to_json()
        row.update(passed=rep.ok, bijection=j["bijection"],
                   homomorphism=j["homomorphism"], pairing=j["pairing"], mixed=j["mixed"],
                   narrow=j["narrow"], case3=j["case3"], ambiguous=len(j["ambiguous"]))
    except LGMirrorError as exc:
        row.update(passed=False, error=f"{type(exc).__name__}: {exc}")
    row["seconds"] = f"{time.perf_counter() - t:.2f}"
    return row


def cmd_catalog(job: JobSpec) -> tuple[int, dict]:
    tasks = [(p.entry.name, _gens(p.G), job.max_group_order)
             for p in all_pairs(job.only or None, job.max_group_order)]
    if not tasks:
        raise InputError(f"no catalog entries match {job.only!r}")
    if job.jobs > 1:
        with ProcessPoolExecutor(job.jobs) as pool:
            rows = list(pool.map(_catalog_row, tasks))
    else:
        rows = [_catalog_row(t) for t in tasks]
    ok = all(r["passed"] for r in rows)
    return (EXIT_OK if ok else EXIT_FAIL), {"command": "catalog", "passed": ok, "rows": rows}


def cmd_oracle(job: JobSpec) -> tuple[int, dict]:
    W = parse_polynomial(job.poly)
    R = ring(W)
    checks = {}
    checks["quotient_dim"] = {"engine": R.mu, "oracle": oracle_quotient_dim(W)}
    checks["quotient_dim"]["passed"] = checks["quotient_dim"]["engine"] == checks["quotient_dim"]["oracle"]
    box = [m for m in R.basis.monomials]
    box += [tuple(a if j == i else 0 for j in range(W.n_vars)) for i, a in enumerate(W.exponents)]
    bad = check_normal_forms(W, box, R.normal_form)
    checks["normal_forms"] = {"checked": len(box), "passed": not bad, "bad": [list(b) for b in bad]}
    checks["hessian"] = {"passed": hessian_matches(W, R.hessian_polynomial)
                         and hessian_matches(W, R.hessian[0])}
    gm = gmax(W, job.max_group_order)
    checks["gmax"] = {"passed": oracle_gmax(W) == {g.theta for g in gm.elements}, "order": gm.order}
    lemma_rows = []
    for atom in W.atoms:
        lemma_rows.extend(r.to_json() for r in run_all(atom))
    checks["lemmas"] = lemma_rows
    ok = all(c["passed"] for k, c in checks.items() if k != "lemmas") and all(r["passed"] for r in lemma_rows)
    return (EXIT_OK if ok else EXIT_FAIL), {"command": "oracle", "W": format_polynomial(W),
                                              "passed": ok, "checks": checks}


HANDLERS = {"analyze": cmd_analyze, "dual": cmd_dual, "verify": cmd_verify,
            "catalog": cmd_catalog, "oracle": cmd_oracle}


def run_job(job: JobSpec) -> tuple[int, dict]:
    job.validate()
    try:
        return HANDLERS[job.command](job)
    except InputError as exc:
        return EXIT_INPUT, {"command": job.command, "error": f"{type(exc).__name__}: {exc}"}
    except ResourceBoundExceeded as exc:
        return EXIT_RESOURCE, {"command": job.command, "error": f"{type(exc).__name__}: {exc}"}


# ---------------------------------------------------------------- text output

def _count(c: dict) -> str:
    s = f"{c['passed']}/{c['checked']}"
    extra = [f"{k} {c[k]}" for k in ("failed", "ambiguous", "unknown") if c.get(k)]
    return s + (f" ({', '.join(extra)})" if extra else "")


def render_text(report: dict) -> str:
    if "error" in report:
        lines = [f"error: {report['error']}"]
        for w in report.get("witnesses", [])[:10]:
            lines.append(f"  witness: {w}")
        return "\n".join(lines)
    cmd = report["command"]
    if cmd == "analyze":
        atoms = ", ".join(f"{a['kind']} {a['exponents']}" for a in report["atoms"])
        return "\n".join([
            f"W        = {report['W']}",
            f"atoms    = {atoms}",
            f"q        = ({', '.join(report['q'])})",
            f"c_hat    = {report['central_charge']}",
            f"mu       = {report['mu']} (closed form {report['mu_closed_form']})",
            f"|G^max|  = {report['gmax_order']}",
            f"J        = ({', '.join(report['J'])})",
            f"admissible subgroups = {report['admissible_subgroups']}",
            f"W^T      = {report['WT']}",
        ])
    if cmd == "dual":
        lines = [f"W   = {report['W']}   G   = {report['G']} (order {report['G_order']})",
                 f"W^T = {report['WT']}   G^T = {report['GT']} (order {report['GT_order']})",
                 f"A-model dim {report['A_total']}, B-model dim {report['B_total']}; "
                 f"Property 1: {report['property1']}, fundamental: {report['fundamental']}",
                 "A sectors:"]
        lines += [f"  ({', '.join(g)}): {n}" for g, n in report["A_dims"]]
        lines.append("B sectors:")
        lines += [f"  ({', '.join(g)}): {n}" for g, n in report["B_dims"]]
        return "\n".join(lines)
    if cmd == "verify":
        lines = [f"{report['pair']['W']} with |G|={report['pair']['order']}: "
                 f"{'PASS' if report['passed'] else 'FAIL'}",
                 f"  bijection    {report['bijection']}"]
        for key in ("homomorphism", "routes", "axioms", "mixed", "pairing", "narrow", "case3", "hessian"):
            lines.append(f"  {key:<12} {_count(report[key])}")
        if report["ambiguous"]:
            lines.append(f"  ambiguous    {', '.join(report['ambiguous'])}")
        for w in report["witnesses"][:10]:
            lines.append(f"  witness: {w}")
        return "\n".join(lines)
    if cmd == "catalog":
        lines = []
        for r in report["rows"]:
            status = "PASS" if r["passed"] else "FAIL"
            gens = ";".join("(" + ",".join(g) + ")" for g in r["G"]) or "0"
            if "error" in r:
                lines.append(f"{status} {r['entry']:<16} |G|={r['order']:<4} {gens}  {r['error']}")
                continue
            lines.append(f"{status} {r['entry']:<16} |G|={r['order']:<4} {gens:<28} "
                         f"hom {_count(r['homomorphism'])}  pair {_count(r['pairing'])}  "
                         f"amb {r['ambiguous']}  {r['seconds']}s")
        lines.append(f"{sum(r['passed'] for r in report['rows'])}/{len(report['rows'])} rows pass")
        return "\n".join(lines)
    if cmd == "oracle":
        c = report["checks"]
        lines = [f"{report['W']}: {'PASS' if report['passed'] else 'FAIL'}",
                 f"  quotient dim  engine {c['quotient_dim']['engine']} oracle {c['quotient_dim']['oracle']}",
                 f"  normal forms  {'ok' if c['normal_forms']['passed'] else c['normal_forms']['bad']}",
                 f"  hessian       {'ok' if c['hessian']['passed'] else 'mismatch'}",
                 f"  G^max         {'ok' if c['gmax']['passed'] else 'mismatch'} (order {c['gmax']['order']})"]
        for r in c["lemmas"]:
            lines.append(f"  {r['atom']:<16} {r['name']:<20} {'ok' if r['passed'] else 'FAIL'} ({r['checked']})")
        return "\n".join(lines)
    return json.dumps(report, indent=2)


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lgmirror", description="Exact LG mirror symmetry checks.")
    p.add_argument("--job", help="key=value job file (overrides the command line)")
    sub = p.add_subparsers(dest="command")
    for name in COMMANDS:
        s = sub.add_parser(name)
        if name != "catalog":
            s.add_argument("poly_arg", nargs="?", metavar="POLY")
            s.add_argument("--poly")
        if name in ("dual", "verify"):
            s.add_argument("--group", default="max",
                           help="'max', 'J', '0', or generators like '[1/3,2/3],[0,1/2]'")
        if name == "verify":
            s.add_argument("--mutate-seed", type=int, default=None)
        if name == "catalog":
            s.add_argument("--only", default="", help="comma separated families or entry names")
            s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--json", action="store_true")
        s.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_ORDER)
    return p


def job_from_args(ns: argparse.Namespace) -> JobSpec:
    if ns.job:
        return read_job_file(ns.job)
    if not ns.command:
        raise InputError("no command given")
    return JobSpec(
        command=ns.command,
        poly=getattr(ns, "poly", None) or getattr(ns, "poly_arg", None) or "",
        group=getattr(ns, "group", "max"),
        format="json" if ns.json else "text",
        max_group_order=ns.max_group_order,
        only=getattr(ns, "only", ""),
        jobs=getattr(ns, "jobs", 1),
        mutate_seed=getattr(ns, "mutate_seed", None),
    ).validate()


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        job = job_from_args(ns)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    code, report = run_job(job)
    if job.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
