"""Command line front end.

Exit codes: 0 success, 1 invariant violation / failed check, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__, bounds, gf2top, reproduce, signcomplex, signmat, simplicial, vrcube
from ._limits import ENV_MAX_FACES, CapExceeded

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
COMPONENTS = ("vc", "omega", "coind", "swh", "height", "phi", "incidence", "srank")


class InputError(Exception):
    pass


def _emit(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _read_matrix(path: str) -> signmat.PartialSignMatrix:
    try:
        return signmat.PartialSignMatrix.load(path)
    except (OSError, signmat.SignMatrixError, ValueError) as exc:
        raise InputError(f"cannot read matrix {path}: {exc}") from exc


def cmd_generate(args) -> int:
    params = {"ghd": dict(n=args.n, k=args.k), "hadamard": dict(n=args.n),
              "random": dict(n=args.n, seed=args.seed), "pg": dict(q=args.q, seed=args.seed)}[args.family]
    if any(v is None for v in params.values()):
        raise InputError(f"{args.family} needs " + ", ".join(f"--{k}" for k in params))
    try:
        A = signmat.generate(args.family, **params)
    except signmat.SignMatrixError as exc:
        raise InputError(str(exc)) from exc
    text = A.to_text()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"{args.family} {A.n_rows}x{A.n_cols}, non-Star {int((A.entries != 0).sum())}, "
          f"density {A.density():.4f}", file=sys.stderr)
    return EXIT_OK


def cmd_build(args) -> int:
    A = _read_matrix(args.matrix)
    K = signcomplex.sign_complex(A)
    text = simplicial.to_text(K)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(f"S(A): {K.n_pairs} pairs, {len(K.facets)} facets, dim {K.dim}", file=sys.stderr)
    return EXIT_OK


def cmd_invariants(args) -> int:
    A = _read_matrix(args.matrix)
    comps = set(COMPONENTS)
    if args.only:
        comps = set(args.only.split(","))
    if args.skip:
        comps -= set(args.skip.split(","))
    unknown = comps - set(COMPONENTS)
    if unknown:
        raise InputError(f"unknown components {sorted(unknown)}; choose from {COMPONENTS}")
    cfg = bounds.ReportConfig(components=frozenset(comps), max_sets=args.max_sets,
                              search_d_max=args.search_d_max, search_seed=args.seed)
    rep = bounds.invariant_report(A, cfg)
    out = rep.to_json()
    out["params"] = {**out["params"], "matrix": args.matrix, "components": sorted(comps),
                     "max_sets": args.max_sets, "search_d_max": args.search_d_max, "seed": args.seed}
    for name, why in rep.unavailable.items():
        print(f"warning: {name} unavailable ({why})", file=sys.stderr)
    _emit(out, args.out)
    return EXIT_OK if rep.chain_ok else EXIT_VIOLATION


def cmd_vr(args) -> int:
    n, k = args.n, args.k
    if n > args.max_vertices.bit_length() - 1:
        raise CapExceeded(f"2^{n} vertices exceeds --max-vertices {args.max_vertices}")
    K = vrcube.vr_cube(n, k)
    out = {"schema": 1, "version": __version__, "params": {"n": n, "k": k, "t": args.t, "nerve": args.nerve,
                                                           "betti": args.betti},
           "free": K.meta["free"], "n_facets": len(K.facets), "dim": K.dim}
    ok = True
    if k < n:
        a = vrcube.alpha(n, k)
        out["alpha"] = f"{a.numerator}/{a.denominator}"
    if args.betti:
        b = gf2top.betti(K)
        out["f_vector"] = K.f_vector() if len(K.facets) * 2 ** min(K.dim + 1, 20) <= 2_000_000 else None
        out["betti"] = b
        out["homological_connectivity"] = gf2top.homological_connectivity(K)
        if k < n and vrcube.alpha(n, k) >= 2:
            need = int(vrcube.alpha(n, k)) - 2
            out["alpha_check"] = all(x == 0 for x in b[: need + 1])
            ok &= out["alpha_check"]
    if args.t is not None:
        t = args.t
        V = vrcube.vr_t_subcomplex(n, k, t)
        sub = {"n_facets": len(V.facets), "dim": V.dim, "betti": gf2top.betti(V)}
        if args.nerve:
            N = vrcube.face_cover_nerve(n, k, t)
            H = vrcube.hypercube_skeleton_triangulated(n, t)
            top = max(N.dim, H.dim)
            bn, bh = gf2top.betti(N, top), gf2top.betti(H, top)
            sub.update(nerve_vertices=N.n_vertices, nerve_betti=bn, skeleton_betti=bh, nerve_matches_skeleton=bn == bh)
            ok &= bn == bh
        if k >= 2:
            sub["choose_t"] = vrcube.choose_t(k)
        out["vr_t"] = sub
    _emit(out, args.out)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_reproduce(args) -> int:
    results = reproduce.run_suite(args.suite, log=print)
    passed = sum(r.ok for r in results)
    print(f"\n{passed}/{len(results)} checks passed")
    return EXIT_OK if passed == len(results) else EXIT_VIOLATION


def cmd_convert(args) -> int:
    text = Path(args.input).read_text()
    head = next((ln.split() for ln in text.splitlines() if ln.strip()), [])
    try:
        if head and head[0] in ("pairs", "vertices"):
            K = simplicial.from_text(text)
            if not isinstance(K, simplicial.Z2Complex):
                raise InputError("only free Z2 complexes (a 'pairs' header) convert to matrices")
            out = signcomplex.matrix_from_complex(K).to_text()
        else:
            out = simplicial.to_text(signcomplex.sign_complex(signmat.PartialSignMatrix.from_text(text)))
    except (simplicial.ComplexError, signmat.SignMatrixError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    Path(args.output).write_text(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signtope", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--max-faces", type=int, default=None,
                   help=f"face enumeration cap (default 2e6; also via {ENV_MAX_FACES})")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a generated matrix")
    g.add_argument("family", choices=["ghd", "hadamard", "random", "pg"])
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--q", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("build", help="sign complex of a matrix as a facet list")
    b.add_argument("matrix")
    b.add_argument("-o", "--out")
    b.set_defaults(func=cmd_build)

    i = sub.add_parser("invariants", help="JSON invariant report of a matrix")
    i.add_argument("matrix")
    i.add_argument("--only", help="comma separated components: " + ",".join(COMPONENTS))
    i.add_argument("--skip", help="comma separated components to leave out")
    i.add_argument("--max-sets", type=int, default=bounds.DEFAULT_MAX_SETS, help="chain height search cap")
    i.add_argument("--search-d-max", type=int, default=6)
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("-o", "--out")
    i.set_defaults(func=cmd_invariants)

    v = sub.add_parser("vr", help="Vietoris-Rips complex of the hypercube")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--t", type=int)
    v.add_argument("--nerve", action="store_true")
    v.add_argument("--betti", action="store_true")
    v.add_argument("--max-vertices", type=int, default=2 ** vrcube.VR_MAX_N)
    v.add_argument("-o", "--out")
    v.set_defaults(func=cmd_vr)

    r = sub.add_parser("reproduce", help="run the acceptance checks and print a table")
    r.add_argument("suite", nargs="?", default="all", choices=reproduce.SUITES)
    r.set_defaults(func=cmd_reproduce)

    c = sub.add_parser("convert", help="matrix <-> facet list")
    c.add_argument("input")
    c.add_argument("output")
    c.set_defaults(func=cmd_convert)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_faces is not None:
        os.environ[ENV_MAX_FACES] = str(args.max_faces)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
