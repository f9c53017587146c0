"""Command-line front end.

Subcommands
-----------
cohomology EXPR        exact table (h^0..h^n) with contributing summands
chern EXPR             Chern character and total Chern class
chi EXPR               Euler characteristic, by Riemann-Roch and by cohomology
en-resolution E G      terms of the Eagon-Northcott resolution, with ranks
certificate E G        term-wise vanishing certificate for a map E -> G
porteous E G           expected-codimension degeneracy-locus class and degree
check ID ...           named hypothesis checkers (thm-1-1, thm-1-2, thm-1-4,
                       prop-4-5, lemma-4-4, or their aliases map, split,
                       codim1, split-vanishing, endo)
pfaff SUB ...          concrete twisted 1-forms: uniqueness, singular,
                       sections, annihilator, random-pencil
sweep SUB ...          parameter sweeps across a worker pool

Expressions follow the grammar "O(d) | T | Omega^p | wedge(k, e) | sym(k, e)
| dual(e) | e (x) e | e (+) e | m*e" with the ambient given either as a
trailing "on P^n" or through --n.

Exit codes: 0 success; 1 a verdict failed (certificate false, checker
hypotheses-fail, or a form not determined by its singular scheme); 2 bad
input; 3 computation refused (unsupported plethysm or scale guard).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .bundles import BundleExpr, o, rank, tensor
from .checkers import (
    HOLD,
    TheoremReport,
    check_codim1_generic,
    check_endomorphism_space,
    check_map_recovery,
    check_split_distribution,
    check_split_vanishing,
)
from .chow import ChowClass, chern_character, hrr_chi, porteous_class, total_chern
from .cohomology import cohomology_table
from .complexes import ENCertificate, en_resolution, vanishing_certificate
from .errors import (
    ConsistencyError,
    InputError,
    ScaleExceeded,
    UnsupportedPlethysm,
)
from .grammar import parse_expression, render_expression, split_ambient
from .pfaff import (
    TwistedOneForm,
    annihilator_distribution,
    parse_form_file,
    random_pencil_form,
    render_form_file,
    singular_scheme,
    uniqueness_report,
    vanishing_section_space,
)

CHECK_ALIASES = {
    "map": "thm-1-1",
    "split": "thm-1-2",
    "codim1": "thm-1-4",
    "split-vanishing": "prop-4-5",
    "endo": "lemma-4-4",
}


# ---------------------------------------------------------------------------
# shared helpers


def _load_expr(text: str, n: int | None) -> BundleExpr:
    """Parse an expression whose ambient comes from 'on P^n' or --n."""
    body, amb = split_ambient(text)
    if amb is None:
        if n is None:
            raise InputError(
                f"ambient missing for {text!r}: append 'on P^n' or pass --n"
            )
        amb = n
    elif n is not None and n != amb:
        raise InputError(f"--n {n} disagrees with 'on P^{amb}' in {text!r}")
    return parse_expression(body, amb)


def _warn_zero(e: BundleExpr) -> None:
    if rank(e) == 0:
        print(
            "warning: expression is the zero bundle (a wedge power exceeds the rank)",
            file=sys.stderr,
        )


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        if getattr(args, "seed", None) is not None:
            payload = {**payload, "seed": args.seed}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _chow_text(c: ChowClass) -> str:
    parts = []
    for i, x in enumerate(c.coeffs):
        if x == 0:
            continue
        if i == 0:
            parts.append(str(x))
        else:
            power = "h" if i == 1 else f"h^{i}"
            if x == 1:
                parts.append(power)
            elif x == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{x} {power}")
    return " + ".join(parts) if parts else "0"


def _parse_degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad degree list {text!r}; expected like -1,-2") from exc


_RANGE_RE = re.compile(r"^(-?\d+)(?::(-?\d+))?$")


def _parse_range(text: str) -> range:
    m = _RANGE_RE.match(text.strip())
    if not m:
        raise InputError(f"bad range {text!r}; expected 'a' or 'a:b'")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise InputError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _read_form(path: str) -> TwistedOneForm:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_form_file(handle.read())


def _require(args, names: list[str], context: str) -> None:
    missing = [name for name in names if getattr(args, name.lstrip("-").replace("-", "_"), None) is None]
    if missing:
        raise InputError(f"{context} needs {', '.join(missing)}")


# ---------------------------------------------------------------------------
# report renderers


def _theorem_lines(report: TheoremReport) -> list[str]:
    inputs = " ".join(f"{k}={v}" for k, v in report.inputs.items())
    lines = [f"check {report.theorem}: {inputs}"]
    for cond in report.conditions:
        lines.append(f"condition [{'ok' if cond.ok else 'NO'}] {cond.name}")
    for grp in report.groups:
        lines.append(f"group i={grp.i} p={grp.p}: dim = {grp.dim}")
    lines.append(f"verdict: {report.verdict}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return lines


def _certificate_lines(cert: ENCertificate) -> list[str]:
    lines = [
        f"certificate on P^{cert.n}: E = {render_expression(cert.E)}, "
        f"G = {render_expression(cert.G)} (e = {cert.e}, g = {cert.g})"
    ]
    for req in cert.required:
        status = "ok" if req.ok else "NONZERO"
        lines.append(
            f"H^{req.i}({render_expression(req.expr)}) = {req.table.h(req.i)}  [{status}]"
        )
    for step in cert.chain_trace:
        lines.append(f"chase: {step}")
    for assumption in cert.assumptions:
        lines.append(f"assumption: {assumption}")
    lines.append(f"endomorphism space dimension: {cert.endomorphism_dim}")
    lines.append(f"verdict: {'holds' if cert.verdict else 'fails'}")
    return lines


# ---------------------------------------------------------------------------
# bundle subcommands


def _cmd_cohomology(args) -> int:
    e = _load_expr(args.expr, args.n)
    _warn_zero(e)
    table = cohomology_table(e)
    text = render_expression(e)
    payload = {
        "ambient": table.ambient,
        "expression": text,
        "h": list(table.dims),
        "euler_characteristic": table.euler_characteristic(),
        "contributions": [
            {
                "degree": c.degree,
                "summand": str(c.summand),
                "multiplicity": c.multiplicity,
                "dim": c.dim,
            }
            for c in table.contributions
        ],
    }
    lines = [f"P^{table.ambient}: {text}"]
    for p, d in enumerate(table.dims):
        contribs = [c for c in table.contributions if c.degree == p]
        suffix = ""
        if contribs:
            suffix = "   from " + ", ".join(
                f"{c.summand} x{c.multiplicity} (dim {c.dim})" for c in contribs
            )
        lines.append(f"h^{p} = {d}{suffix}")
    lines.append(f"chi = {table.euler_characteristic()}")
    _emit(args, payload, lines)
    return 0


def _cmd_chern(args) -> int:
    e = _load_expr(args.expr, args.n)
    _warn_zero(e)
    ch = chern_character(e)
    c = total_chern(e)
    text = render_expression(e)
    payload = {
        "ambient": e.ambient,
        "expression": text,
        "rank": rank(e),
        "chern_character": [str(x) for x in ch.coeffs],
        "total_chern": [int(x) for x in c.coeffs],
    }
    lines = [
        f"P^{e.ambient}: {text}",
        f"rank = {rank(e)}",
        f"ch = {_chow_text(ch)}",
        f"c  = {_chow_text(c)}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_chi(args) -> int:
    e = _load_expr(args.expr, args.n)
    _warn_zero(e)
    table = cohomology_table(e)
    chi = hrr_chi(e)
    if chi != table.euler_characteristic():
        raise ConsistencyError(
            f"Riemann-Roch chi {chi} != alternating sum {table.euler_characteristic()}"
        )
    text = render_expression(e)
    payload = {
        "ambient": e.ambient,
        "expression": text,
        "chi": chi,
        "h": list(table.dims),
    }
    lines = [
        f"P^{e.ambient}: {text}",
        f"chi = {chi} (Riemann-Roch and cohomology agree)",
        "h = (" + ", ".join(str(d) for d in table.dims) + ")",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_en_resolution(args) -> int:
    E = _load_expr(args.E, args.n)
    G = _load_expr(args.G, args.n)
    report = en_resolution(E, G, twisted=args.twisted)
    terms = []
    for offset, term in enumerate(report.terms):
        terms.append(
            {
                "i": report.g + offset,
                "expr": render_expression(term),
                "rank": rank(term),
            }
        )
    payload = {
        "n": E.ambient,
        "e": report.e,
        "g": report.g,
        "twisted": report.twisted,
        "terms": terms,
    }
    lines = [
        f"resolution on P^{E.ambient}: E = {render_expression(E)}, "
        f"G = {render_expression(G)} (e = {report.e}, g = {report.g}, "
        f"{'twisted' if report.twisted else 'untwisted'})"
    ]
    for term in terms:
        lines.append(f"M_{term['i']}: {term['expr']}  (rank {term['rank']})")
    _emit(args, payload, lines)
    return 0


def _cmd_certificate(args) -> int:
    E = _load_expr(args.E, args.n)
    G = _load_expr(args.G, args.n)
    cert = vanishing_certificate(E, G)
    _emit(args, cert.to_json_dict(), _certificate_lines(cert))
    return 0 if cert.verdict else 1


def _cmd_porteous(args) -> int:
    E = _load_expr(args.E, args.n)
    G = _load_expr(args.G, args.n)
    result = porteous_class(E, G)
    n = result.ambient
    payload = {
        "ambient": n,
        "e": rank(E),
        "g": rank(G),
        "codim": result.codim,
        "within_ambient": result.within_ambient,
        "expected_dimension": n - result.codim if result.within_ambient else None,
        "degree": result.degree,
        "class": [int(x) for x in result.cls.coeffs],
    }
    lines = [
        f"degeneracy locus on P^{n}: E = {render_expression(E)}, "
        f"G = {render_expression(G)}",
        f"expected codimension = {result.codim}",
    ]
    if result.within_ambient:
        lines.append(f"expected dimension = {n - result.codim}")
        lines.append(f"class = {_chow_text(result.cls)}")
        lines.append(f"degree = {result.degree}")
    else:
        lines.append("codimension exceeds the ambient: empty expected locus")
    _emit(args, payload, lines)
    return 0


def _cmd_check(args) -> int:
    ident = CHECK_ALIASES.get(args.id, args.id)
    if ident == "thm-1-2":
        _require(args, ["--n", "--k", "--degrees"], "check thm-1-2")
        report = check_split_distribution(args.n, args.k, _parse_degrees(args.degrees))
    elif ident == "prop-4-5":
        _require(args, ["--n", "--k", "--degrees"], "check prop-4-5")
        report = check_split_vanishing(args.n, args.k, _parse_degrees(args.degrees))
    elif ident == "thm-1-4":
        _require(args, ["--n", "--r"], "check thm-1-4")
        report = check_codim1_generic(args.n, args.r)
    elif ident == "lemma-4-4":
        _require(args, ["--n", "--k"], "check lemma-4-4")
        report = check_endomorphism_space(args.k, args.n)
    elif ident == "thm-1-1":
        _require(args, ["--E", "--G"], "check thm-1-1")
        report = check_map_recovery(_load_expr(args.E, args.n), _load_expr(args.G, args.n))
    else:
        known = sorted(set(CHECK_ALIASES) | set(CHECK_ALIASES.values()))
        raise InputError(f"unknown check id {args.id!r}; choose from {', '.join(known)}")
    _emit(args, report.to_json_dict(), _theorem_lines(report))
    return 0 if report.verdict == HOLD else 1


# ---------------------------------------------------------------------------
# pfaff subcommands


def _form_summary(w: TwistedOneForm) -> dict:
    return {
        "ambient": w.ambient,
        "twist": w.twist,
        "coefficients": [str(c) for c in w.coeffs],
    }


def _cmd_pfaff_uniqueness(args) -> int:
    w = _read_form(args.file)
    report = uniqueness_report(w)
    payload = {
        **_form_summary(w),
        "singular_scheme": {
            "dimension": report.scheme.dimension,
            "zero_dimensional": report.scheme.is_zero_dimensional(),
        },
        "section_space_dim": report.sections.dim,
        "verdict": report.verdict,
        "cross_check": report.cross_check.to_json_dict(),
        "notes": list(report.notes),
    }
    lines = [
        f"form on P^{w.ambient}, twist {w.twist}: {w}",
        f"singular scheme dimension = {report.scheme.dimension}",
        f"twist-{w.twist} forms vanishing on it: dimension = {report.sections.dim}",
        f"verdict: {report.verdict}",
        f"cross-check {report.cross_check.theorem}: {report.cross_check.verdict}",
    ]
    lines.extend(f"note: {note}" for note in report.notes)
    _emit(args, payload, lines)
    return 0 if report.verdict == "unique-up-to-scalar" else 1


def _cmd_pfaff_singular(args) -> int:
    w = _read_form(args.file)
    scheme = singular_scheme(w)
    payload = {
        **_form_summary(w),
        "dimension": scheme.dimension,
        "zero_dimensional": scheme.is_zero_dimensional(),
        "generators": [str(g) for g in scheme.ideal.generators],
        "charts": [
            {"chart": i, "basis": [str(g) for g in basis]}
            for i, basis in enumerate(scheme.ideal.charts)
        ],
    }
    lines = [
        f"form on P^{w.ambient}, twist {w.twist}: {w}",
        f"singular scheme dimension = {scheme.dimension}",
        "generators: " + "; ".join(str(g) for g in scheme.ideal.generators),
    ]
    for i, basis in enumerate(scheme.ideal.charts):
        body = "; ".join(str(g) for g in basis) if basis else "(zero ideal)"
        lines.append(f"chart x{i} = 1 basis: {body}")
    _emit(args, payload, lines)
    return 0


def _cmd_pfaff_sections(args) -> int:
    w = _read_form(args.file)
    twist = args.twist if args.twist is not None else w.twist
    scheme = singular_scheme(w)
    space = vanishing_section_space(w.ambient, twist, scheme)
    payload = {
        "ambient": w.ambient,
        "twist": twist,
        "singular_dimension": scheme.dimension,
        "dim": space.dim,
        "basis": [[str(c) for c in form.coeffs] for form in space.basis],
    }
    lines = [
        f"forms of twist {twist} vanishing on the singular scheme of {w}",
        f"dimension = {space.dim}",
    ]
    for idx, form in enumerate(space.basis):
        lines.append(f"basis[{idx}]: {form}")
    _emit(args, payload, lines)
    return 0


def _cmd_pfaff_annihilator(args) -> int:
    w = _read_form(args.file)
    slices = annihilator_distribution(w, args.bound)
    payload = {
        **_form_summary(w),
        "bound": args.bound,
        "slices": [
            {
                "degree": s.degree,
                "dim": s.dim,
                "generators": [[str(c) for c in gen] for gen in s.generators],
            }
            for s in slices
        ],
    }
    lines = [f"annihilator of {w} by vector-field degree"]
    for s in slices:
        lines.append(f"degree {s.degree}: kernel dimension {s.dim}")
    _emit(args, payload, lines)
    return 0


def _cmd_pfaff_random_pencil(args) -> int:
    w = random_pencil_form(args.n, args.degree, args.seed)
    text = render_form_file(w)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    if args.format == "json":
        payload = {**_form_summary(w), "degree": args.degree, "seed": args.seed}
        if args.out:
            payload["out"] = args.out
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif args.out:
        print(f"wrote twist-{w.twist} form on P^{w.ambient} to {args.out}")
    else:
        print(text, end="")
    return 0


# ---------------------------------------------------------------------------
# sweeps


def _sweep_task_codim1(item: tuple[int, int]) -> dict:
    n, r = item
    report = check_codim1_generic(n, r)
    return {"n": n, "r": r, "verdict": report.verdict}


def _sweep_task_split(item: tuple[int, int, int]) -> dict:
    n, k, d = item
    report = check_split_distribution(n, k, (d,) * k)
    return {"n": n, "k": k, "d": d, "verdict": report.verdict}


def _sweep_task_endo(item: tuple[int, int]) -> dict:
    n, k = item
    report = check_endomorphism_space(k, n)
    return {"n": n, "k": k, "dim": report.groups[0].dim, "verdict": report.verdict}


def _sweep_task_certificate(item: tuple[str, str, int, int]) -> dict:
    e_text, g_text, n, t = item
    E = parse_expression(e_text, n)
    G = tensor(parse_expression(g_text, n), o(t, n))
    cert = vanishing_certificate(E, G)
    return {"twist": t, "verdict": HOLD if cert.verdict else "hypotheses-fail"}


def _run_sweep(args, task, grid: list) -> list[dict]:
    if args.workers <= 1:
        return [task(item) for item in grid]
    with ProcessPoolExecutor(max_workers=args.workers) as pool:
        return list(pool.map(task, grid))


def _finish_sweep(args, mode: str, results: list[dict]) -> int:
    failures = sum(1 for r in results if r["verdict"] != HOLD)
    payload = {
        "sweep": mode,
        "count": len(results),
        "failures": failures,
        "results": results,
    }
    lines = []
    for r in results:
        inputs = " ".join(f"{k}={v}" for k, v in r.items() if k != "verdict")
        lines.append(f"{inputs} -> {r['verdict']}")
    lines.append(f"{len(results)} entries, {failures} failures")
    _emit(args, payload, lines)
    return 0 if failures == 0 else 1


def _cmd_sweep_codim1(args) -> int:
    grid = [(n, r) for n in _parse_range(args.n) for r in _parse_range(args.r)]
    return _finish_sweep(args, "codim1", _run_sweep(args, _sweep_task_codim1, grid))


def _cmd_sweep_split(args) -> int:
    grid = [
        (n, k, d)
        for n in _parse_range(args.n)
        for k in _parse_range(args.k)
        if 1 <= k <= n
        for d in _parse_range(args.d)
    ]
    if not grid:
        raise InputError("sweep grid is empty after the 1 <= k <= n filter")
    return _finish_sweep(args, "split", _run_sweep(args, _sweep_task_split, grid))


def _cmd_sweep_endo(args) -> int:
    grid = [(n, k) for n in _parse_range(args.n) for k in range(n + 1)]
    return _finish_sweep(args, "endo", _run_sweep(args, _sweep_task_endo, grid))


def _cmd_sweep_certificate(args) -> int:
    if args.n is None:
        raise InputError("sweep certificate needs --n")
    base_e, amb_e = split_ambient(args.E)
    base_g, amb_g = split_ambient(args.G)
    for amb in (amb_e, amb_g):
        if amb is not None and amb != args.n:
            raise InputError(f"--n {args.n} disagrees with 'on P^{amb}'")
    parse_expression(base_e, args.n)  # validate now, before fanning out
    parse_expression(base_g, args.n)
    grid = [(base_e, base_g, args.n, t) for t in _parse_range(args.twist)]
    return _finish_sweep(
        args, "certificate", _run_sweep(args, _sweep_task_certificate, grid)
    )


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument("--seed", type=int, default=None, help="seed echoed in output")

    parser = argparse.ArgumentParser(
        prog="pnsheaf",
        description="Exact sheaf cohomology, degeneracy loci, and twisted "
        "1-forms on projective space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", parents=[common], help="cohomology table")
    p.add_argument("expr", help="bundle expression, e.g. 'wedge(2,T) (x) Omega^1 on P^3'")
    p.add_argument("--n", type=int, default=None, help="ambient dimension")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("chern", parents=[common], help="Chern character and classes")
    p.add_argument("expr")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=_cmd_chern)

    p = sub.add_parser("chi", parents=[common], help="Euler characteristic")
    p.add_argument("expr")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser(
        "en-resolution", parents=[common], help="Eagon-Northcott resolution terms"
    )
    p.add_argument("E")
    p.add_argument("G")
    p.add_argument("--n", type=int, default=None)
    p.add_argument(
        "--twisted",
        action="store_true",
        help="tensor every term by wedge^g(E*) (x) det G",
    )
    p.set_defaults(func=_cmd_en_resolution)

    p = sub.add_parser(
        "certificate", parents=[common], help="vanishing certificate for E -> G"
    )
    p.add_argument("E")
    p.add_argument("G")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=_cmd_certificate)

    p = sub.add_parser(
        "porteous", parents=[common], help="degeneracy-locus class of E -> G"
    )
    p.add_argument("E")
    p.add_argument("G")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=_cmd_porteous)

    p = sub.add_parser("check", parents=[common], help="named hypothesis checkers")
    p.add_argument("id", help="thm-1-1 | thm-1-2 | thm-1-4 | prop-4-5 | lemma-4-4")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--degrees", default=None, help="comma-separated, e.g. -1,-1")
    p.add_argument("--E", default=None, help="source expression (thm-1-1)")
    p.add_argument("--G", default=None, help="target expression (thm-1-1)")
    p.set_defaults(func=_cmd_check)

    pfaff = sub.add_parser("pfaff", help="concrete twisted 1-forms")
    pfaff_sub = pfaff.add_subparsers(dest="pfaff_command", required=True)

    p = pfaff_sub.add_parser(
        "uniqueness", parents=[common], help="is the form determined by its singular scheme?"
    )
    p.add_argument("--file", required=True, help="form file: 'P^n twist r' + A_i lines")
    p.set_defaults(func=_cmd_pfaff_uniqueness)

    p = pfaff_sub.add_parser(
        "singular", parents=[common], help="singular-scheme ideal and dimension"
    )
    p.add_argument("--file", required=True)
    p.set_defaults(func=_cmd_pfaff_singular)

    p = pfaff_sub.add_parser(
        "sections", parents=[common], help="twisted forms vanishing on the singular scheme"
    )
    p.add_argument("--file", required=True)
    p.add_argument("--twist", type=int, default=None, help="default: the form's twist")
    p.set_defaults(func=_cmd_pfaff_sections)

    p = pfaff_sub.add_parser(
        "annihilator", parents=[common], help="vector fields annihilated by the form"
    )
    p.add_argument("--file", required=True)
    p.add_argument("--bound", type=int, default=1, help="maximum field degree")
    p.set_defaults(func=_cmd_pfaff_annihilator)

    p = pfaff_sub.add_parser(
        "random-pencil", parents=[common], help="seeded random pencil form P dQ - Q dP"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--out", default=None, help="write the form file here")
    p.set_defaults(func=_cmd_pfaff_random_pencil)

    sweep = sub.add_parser("sweep", help="parameter sweeps (ranges are 'a' or 'a:b')")
    sweep_sub = sweep.add_subparsers(dest="sweep_command", required=True)

    p = sweep_sub.add_parser(
        "codim1", parents=[common], help="codimension-one checker over (n, r)"
    )
    p.add_argument("--n", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_sweep_codim1)

    p = sweep_sub.add_parser(
        "split", parents=[common], help="split checker over (n, k, uniform degree d)"
    )
    p.add_argument("--n", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--d", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_sweep_split)

    p = sweep_sub.add_parser(
        "endo", parents=[common], help="endomorphism-space dimension over n, all k"
    )
    p.add_argument("--n", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_sweep_endo)

    p = sweep_sub.add_parser(
        "certificate", parents=[common], help="certificate of E -> G (x) O(t) over twists t"
    )
    p.add_argument("--E", required=True)
    p.add_argument("--G", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--twist", required=True, help="twist range for G")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_sweep_certificate)

    return parser


_NEGATIVE_VALUE = re.compile(r"^-\d")


def _join_negative_values(argv: list[str]) -> list[str]:
    """Glue '--flag -1,-1' into '--flag=-1,-1' so argparse accepts it."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token.startswith("--")
            and "=" not in token
            and i + 1 < len(argv)
            and _NEGATIVE_VALUE.match(argv[i + 1])
        ):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(raw))
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (UnsupportedPlethysm, ScaleExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
