"""Command-line front end.

Every subcommand builds a plain report dict; ``--format json`` prints it
as sorted JSON and ``--format text`` renders the same dict.  Exit status
is 0 on success, 2 on bad input (message on stderr), 3 when an internal
cross-check fails.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from pathlib import Path

from . import fpgroups, sigma, simplicial, tau, toric
from .exactlin import DimensionError, parse_coefficients, parse_field
from .formats import (FormatError, emit_complex, parse_character, parse_complex, parse_graph,
                      parse_matrix, parse_polynomials, parse_presentation)
from .laurent import PolynomialSyntaxError, format_polynomial
from .tau import EnumerationCapError

INPUT_ERRORS = (FormatError, PolynomialSyntaxError, EnumerationCapError, DimensionError,
                sigma.PreconditionError, simplicial.UnknownVertexError, ValueError, OSError)


def _read(path: str) -> tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    return Path(path).read_text(), path


def _complex(args):
    return parse_complex(*_read(args.complex))


def _graph(args):
    return parse_graph(*_read(args.graph))


def _presentation(args):
    return parse_presentation(*_read(args.presentation))


def _vector(text: str) -> list:
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty vector")
    return parts


def _subspace_json(s) -> dict:
    return {"dim": s.dim, "constraints": [list(r) for r in s.constraints], "display": str(s)}


def _arrangement_json(A: tau.RationalSubspaceArrangement) -> dict:
    return {"ambient": A.n, "empty": A.is_empty(), "subspaces": [_subspace_json(s) for s in A.members]}


def _arrangement_text(a: dict) -> str:
    if a["empty"]:
        return "empty"
    return " U ".join(s["display"] for s in a["subspaces"])


def _bool(x: bool) -> str:
    return "true" if x else "false"


# ----------------------------------------------------------- subcommands


def cmd_complex_betti(args):
    K = _complex(args)
    coeff = parse_coefficients(args.coeff)
    h = simplicial.reduced_homology(K, coeff)
    return {"coefficients": str(coeff), "f_vector": list(K.f_vector()),
            "reduced_homology": h.as_dict(), "display": str(h)}


def text_complex_betti(r):
    return f"f-vector: {' '.join(map(str, r['f_vector']))}\nreduced homology over {r['coefficients']}: {r['display']}"


def cmd_complex_subdivide(args):
    B = _complex(args).barycentric_subdivision()
    return {"complex": emit_complex(B)}


def text_complex_subdivide(r):
    return r["complex"].rstrip("\n")


def cmd_toric_arrangement(args):
    L = _complex(args)
    fn = toric.resonance_arrangement if args.toric_cmd == "resonance" else toric.charvar_arrangement
    A = fn(L, args.i, args.d, parse_field(args.field), cap=args.vertex_cap)
    return A.as_json()


def text_toric_arrangement(r):
    if not r["maximal_W"]:
        return "empty"
    return "\n".join("W = {" + ",".join(W) + "}" for W in r["maximal_W"])


def cmd_toric_aomoto(args):
    L = _complex(args)
    field = parse_field(args.field)
    if args.point is not None:
        z = parse_character(args.point)
        vec = toric.aomoto_oracle_vector(L, z, field)
        return {"field": field.name, "method": "exterior-ring", "point": z, "betti": list(vec)}
    W = [w for w in (args.support or "").replace(",", " ").split()]
    vec = toric.aomoto_betti_vector(L, W, field)
    return {"field": field.name, "method": "link-formula", "support": W, "betti": list(vec)}


def text_toric_aomoto(r):
    return "aomoto betti: " + " ".join(map(str, r["betti"]))


def cmd_tau1(args):
    if args.poly:
        text = "\n".join(args.poly)
        polys = parse_polynomials(text, source="--poly")
    elif args.polys:
        polys = parse_polynomials(*_read(args.polys))
    else:
        raise ValueError("give --poly or --polys")
    A = tau.tau1_system(polys, cap=args.cap)
    report = {"polynomials": [format_polynomial(f) for f in polys], "tau1": _arrangement_json(A)}
    if len(polys) == 1 and not polys[0].is_zero() and polys[0](*([1] * polys[0].n)) == 0:
        report["tc1_form"] = format_polynomial(tau.tc1_hypersurface(polys[0]))
    return report


def text_tau1(r):
    out = _arrangement_text(r["tau1"])
    if "tc1_form" in r:
        out += f"\nTC1: {r['tc1_form']} = 0"
    return out


def cmd_fox(args):
    P = _presentation(args)
    rows = []
    for rel in P.relators:
        rows.append([fpgroups.fox_derivative(rel, j).to_str(P) for j in range(1, P.n + 1)])
    return {"generators": list(P.generators), "relators": [P.word_str(r) for r in P.relators],
            "derivatives": rows}


def text_fox(r):
    lines = []
    for rel, row in zip(r["relators"], r["derivatives"]):
        for g, d in zip(r["generators"], row):
            lines.append(f"d({rel})/d{g} = {d}")
    return "\n".join(lines)


def cmd_alexander(args):
    P = _presentation(args)
    ab = P.abelianization
    A = fpgroups.alexander_matrix(P)
    return {"free_rank": ab.free_rank, "torsion": list(ab.torsion),
            "abf": [list(r) for r in ab.abf],
            "matrix": [[format_polynomial(f) for f in row] for row in A.entries]}


def text_alexander(r):
    lines = [f"H1 = Z^{r['free_rank']}" + "".join(f" + Z/{d}" for d in r["torsion"])]
    lines += ["[" + ", ".join(row) + "]" for row in r["matrix"]]
    return "\n".join(lines)


def cmd_charvar1(args):
    P = _presentation(args)
    rho = _vector(args.rho)
    field = parse_field(args.field)
    rho = [int(x) for x in rho]
    dim = fpgroups.twisted_h1_dimension(P, rho, field)
    report = {"rho": rho, "field": field.name, "depth": args.d, "h1_dimension": dim, "member": dim >= args.d}
    if args.d > 1 and all(field(x) == field(1) for x in rho):
        report["note"] = "trivial character: depth compared with b1 only"
    return report


def text_charvar1(r):
    return _bool(r["member"]) + (f" ({r['note']})" if "note" in r else "")


def cmd_sigma1_bound(args):
    P = _presentation(args)
    A = fpgroups.sigma1_upper_bound(P, cap=args.cap)
    return {"excluded": _arrangement_json(A),
            "note": "nonzero characters in the arrangement are certified outside Sigma^1"}


def text_sigma1_bound(r):
    return "excluded: " + _arrangement_text(r["excluded"])


def cmd_cover_z(args):
    P = _presentation(args)
    z = [int(x) for x in _vector(args.z)]
    return {"z": z, "q": args.q, "finite": fpgroups.cyclic_cover_finite(P, z, args.q)}


def text_cover_z(r):
    return "finite" if r["finite"] else "infinite"


def cmd_sigma_member(args):
    G = _graph(args)
    chi = parse_character(args.chi)
    coeff = parse_coefficients(args.coeff)
    ok = sigma.sigma_member(G, chi, args.q, coeff)
    return {"chi": chi, "q": args.q, "coefficients": str(coeff), "member": ok}


def text_sigma_member(r):
    return _bool(r["member"])


def cmd_sigma_describe(args):
    G = _graph(args)
    T = sigma.sigma_describe(G, args.q, parse_coefficients(args.coeff), cap=args.vertex_cap)
    return T.as_json()


def text_sigma_describe(r):
    lines = [f"supports in Sigma^{r['q']} over {r['coefficients']}:"]
    lines += ["  {" + ",".join(W) + "}" for W in r["good_supports"]]
    if not r["good_supports"]:
        lines.append("  none")
    return "\n".join(lines)


def cmd_cover_toric(args):
    L = _complex(args)
    nu = parse_matrix(*_read(args.nu_file)) if args.nu_file else parse_matrix(args.nu, "--nu")
    field = parse_field(args.field)
    bad = sigma.dwyer_fried_obstructions(L, nu, args.q, field, cap=args.vertex_cap)
    pos = {v: k for k, v in enumerate(L.vertices)}
    return {"q": args.q, "field": field.name, "finite": not bad,
            "obstructions": [sorted(W, key=pos.__getitem__) for W in bad]}


def text_cover_toric(r):
    out = "finite" if r["finite"] else "infinite"
    for W in r["obstructions"]:
        out += "\nobstruction W = {" + ",".join(W) + "}"
    return out


def cmd_artin_v11(args):
    G = _graph(args)
    chi = parse_character(args.chi)
    comps = sigma.artin_kernel_v11(G, chi, parse_field(args.field), args.assume_trivial_monodromy,
                                   cap=args.vertex_cap)
    return {"assumed_trivial_monodromy": args.assume_trivial_monodromy,
            "components": [{"W": list(W), "dim": d} for W, d in comps]}


ASSUMED = "(trivial H1-monodromy asserted by the caller, not verified)"


def text_artin_v11(r):
    lines = ["W = {" + ",".join(c["W"]) + f"}} dim {c['dim']}" for c in r["components"]] or ["no components"]
    if r["assumed_trivial_monodromy"]:
        lines.append(ASSUMED)
    return "\n".join(lines)


def cmd_artin_sigma1(args):
    G = _graph(args)
    chi = parse_character(args.chi)
    return sigma.artin_kernel_sigma1_bound(G, chi, args.assume_trivial_monodromy, cap=args.vertex_cap).as_json()


def text_artin_sigma1(r):
    lines = [f"empty_sigma: {_bool(r['empty_sigma'])}"]
    if r["cut_vertices_with_chi_nonzero"]:
        lines.append("cut vertices with chi != 0: " + " ".join(r["cut_vertices_with_chi_nonzero"]))
    for s in r["arrangement"]["subspaces"]:
        lines.append(f"excluded subspace of quotient dim {s['quotient_dim']}: constraints {s['constraints']}")
    if r["assumed_trivial_monodromy"]:
        lines.append(ASSUMED)
    return "\n".join(lines)


def cmd_bb_predicates(args):
    return sigma.bestvina_brady_predicates(_graph(args)).as_json()


def text_bb_predicates(r):
    tors = "".join(f" + Z/{d}" for d in r["H1_Z"]["torsion"])
    return "\n".join([
        f"fg: {_bool(r['fg'])}",
        f"h1_monodromy_trivial: {_bool(r['h1_monodromy_trivial'])}",
        f"h12_monodromy_trivial: {_bool(r['h12_monodromy_trivial'])}",
        f"fp_necessary: {_bool(r['fp_necessary'])} ({r['fp_necessary_note']})",
        f"H1(flag complex, Z): Z^{r['H1_Z']['rank']}{tors}",
    ])


# ------------------------------------------------------------- argparse


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jumploci", description="Jump loci, tangent cones and Sigma-invariants.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def leaf(parent, name, cmd, text, **kw):
        q = parent.add_parser(name, **kw)
        q.set_defaults(run=cmd, render=text)
        return q

    def with_cap(q):
        q.add_argument("--vertex-cap", type=int, default=toric.DEFAULT_VERTEX_CAP)
        return q

    cx = sub.add_parser("complex").add_subparsers(dest="complex_cmd", required=True)
    q = leaf(cx, "betti", cmd_complex_betti, text_complex_betti, help="reduced homology")
    q.add_argument("--complex", required=True)
    q.add_argument("--coeff", default="Q")
    q = leaf(cx, "subdivide", cmd_complex_subdivide, text_complex_subdivide, help="barycentric subdivision")
    q.add_argument("--complex", required=True)

    tr = sub.add_parser("toric").add_subparsers(dest="toric_cmd", required=True)
    for name in ("resonance", "charvar"):
        q = with_cap(leaf(tr, name, cmd_toric_arrangement, text_toric_arrangement))
        q.add_argument("--complex", required=True)
        q.add_argument("--i", type=int, required=True)
        q.add_argument("--d", type=int, default=1)
        q.add_argument("--field", default="Q")
    q = leaf(tr, "aomoto", cmd_toric_aomoto, text_toric_aomoto)
    q.add_argument("--complex", required=True)
    q.add_argument("--field", default="Q")
    g = q.add_mutually_exclusive_group()
    g.add_argument("--support", help="vertex set W, e.g. 'a,c'")
    g.add_argument("--point", help="cohomology class, e.g. 'a=1 b=2'")

    q = leaf(sub, "tau1", cmd_tau1, text_tau1)
    q.add_argument("--poly", action="append")
    q.add_argument("--polys", help="file with one polynomial per line")
    q.add_argument("--cap", type=int, default=tau.DEFAULT_SUPPORT_CAP)

    for name, cmd, text in (("fox", cmd_fox, text_fox), ("alexander", cmd_alexander, text_alexander)):
        q = leaf(sub, name, cmd, text)
        q.add_argument("--presentation", required=True)
    q = leaf(sub, "charvar1", cmd_charvar1, text_charvar1)
    q.add_argument("--presentation", required=True)
    q.add_argument("--rho", required=True, help="integer character values on G_abf, e.g. '-1,5'")
    q.add_argument("--d", type=int, default=1)
    q.add_argument("--field", default="Q")
    q = leaf(sub, "sigma1-bound", cmd_sigma1_bound, text_sigma1_bound)
    q.add_argument("--presentation", required=True)
    q.add_argument("--cap", type=int, default=tau.DEFAULT_SUPPORT_CAP)
    q = leaf(sub, "cover-z", cmd_cover_z, text_cover_z)
    q.add_argument("--presentation", required=True)
    q.add_argument("--z", required=True)
    q.add_argument("--q", type=int, default=1)

    sg = sub.add_parser("sigma").add_subparsers(dest="sigma_cmd", required=True)
    q = leaf(sg, "member", cmd_sigma_member, text_sigma_member)
    q.add_argument("--graph", required=True)
    q.add_argument("--chi", required=True)
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--coeff", default="Q")
    q = with_cap(leaf(sg, "describe", cmd_sigma_describe, text_sigma_describe))
    q.add_argument("--graph", required=True)
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--coeff", default="Q")

    cv = sub.add_parser("cover").add_subparsers(dest="cover_cmd", required=True)
    q = with_cap(leaf(cv, "toric", cmd_cover_toric, text_cover_toric))
    q.add_argument("--complex", required=True)
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--nu", help="integer rows separated by ';', e.g. '1 1 1'")
    g.add_argument("--nu-file")
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--field", default="Q")

    ak = sub.add_parser("artin-kernel").add_subparsers(dest="artin_cmd", required=True)
    for name, cmd, text in (("v11", cmd_artin_v11, text_artin_v11), ("sigma1", cmd_artin_sigma1, text_artin_sigma1)):
        q = with_cap(leaf(ak, name, cmd, text))
        q.add_argument("--graph", required=True)
        q.add_argument("--chi", required=True)
        q.add_argument("--assume-trivial-monodromy", action="store_true")
        if name == "v11":
            q.add_argument("--field", default="Q")

    bb = sub.add_parser("bb").add_subparsers(dest="bb_cmd", required=True)
    q = leaf(bb, "predicates", cmd_bb_predicates, text_bb_predicates)
    q.add_argument("--graph", required=True)
    return p


def render(args, report: dict) -> str:
    if args.format == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    return args.render(report)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.run(args)
    except sigma.ConsistencyError as exc:
        print(f"internal cross-check failed: {exc}", file=stderr)
        return 3
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(render(args, report), file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
