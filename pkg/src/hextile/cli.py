"""Command line front end.

Exit codes: 0 success or accepted, 1 checked negative (rejected, not
isomorphic), 2 usage or input error, 3 internal defect.
"""

from __future__ import annotations

import argparse
import sys

from .graph import Graph, GraphError, format_graph, parse_graph

OK, NEGATIVE, USAGE, DEFECT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _spec_graph(spec: str):
    """(graph, kind, id) for a family spec, or None when ``spec`` is not one."""
    from .grid_families import build_grid, parse_grid_spec
    from .hex_families import build_labeled, parse_hex_spec

    if spec.startswith("H"):
        try:
            fid = parse_hex_spec(spec)
        except ValueError:
            return None
        try:
            return build_labeled(fid).graph, "hex", fid
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        gid = parse_grid_spec(spec)
    except ValueError:
        return None
    try:
        return build_grid(gid).graph, "grid", gid
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _load(arg: str) -> Graph:
    got = _spec_graph(arg)
    return got[0] if got else _read_graph(arg)


def _emit(g: Graph, out: str | None, comments=()) -> None:
    text = format_graph(g, comments)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(a) -> int:
    got = _spec_graph(a.spec)
    if got is None:
        raise InputError(f"not a family spec: {a.spec!r}")
    _emit(got[0], a.output, [str(got[2])])
    return OK


def cmd_verify(a) -> int:
    from .duality import is_locally_c6
    from .grid_families import is_locally_grid
    from .surface import Rejection, certify_tiling

    g = _read_graph(a.file)
    if a.kind == "hextile":
        res = certify_tiling(g)
        if isinstance(res, Rejection):
            print(f"rejected: {res}")
            return NEGATIVE
        print(f"accepted: {len(res.cells)} cells")
        return OK
    check = is_locally_grid(g) if a.kind == "locgrid" else is_locally_c6(g)
    if not check:
        print(f"rejected: {check.reason}" + (f" (vertex {check.witness})" if check.witness is not None else ""))
        return NEGATIVE
    print("accepted")
    return OK


def cmd_invariants(a) -> int:
    from .analysis import invariants
    from .surface import Rejection, certify_tiling

    got = _spec_graph(a.target)
    if got is not None and got[1] == "hex":
        from .hex_families import build_hex

        t = build_hex(got[2])
    else:
        g = got[0] if got else _read_graph(a.target)
        t = certify_tiling(g)
        if isinstance(t, Rejection):
            print(f"not a hexagonal tiling: {t}")
            return NEGATIVE
    print("\n".join(invariants(t, cap=a.cap).lines()))
    return OK


def cmd_dual(a) -> int:
    from .duality import dual_tiling
    from .grid_families import grid_dual, is_locally_grid
    from .surface import Rejection, certify_tiling

    g = _load(a.target)
    t = certify_tiling(g)
    if not isinstance(t, Rejection):
        _emit(dual_tiling(t).graph, a.output, ["dual of a hexagonal tiling"])
        return OK
    if is_locally_grid(g):
        _emit(grid_dual(g), a.output, ["dual of a locally grid graph"])
        return OK
    print(f"neither a hexagonal tiling ({t}) nor locally grid")
    return NEGATIVE


def cmd_minor(a) -> int:
    from .duality import dual_tiling
    from .grid_families import build_grid, identify_grid
    from .hex_families import parse_hex_spec
    from .iso import isomorphic
    from .minors import c6_minor, matching_plan, minor_target, tiling_minor

    try:
        fid = parse_hex_spec(a.spec)
        plan = matching_plan(fid)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    t = plan.tiling
    g = c6_minor(dual_tiling(t), plan) if a.dual_side else tiling_minor(t, plan)
    target = minor_target(fid)[1 if a.dual_side else 0]
    found = identify_grid(g)
    if found is None and isomorphic(g, build_grid(target, check=False).graph) is not None:
        # the recipe graph of a target outside the locally grid ranges
        print(f"{target}  (outside the locally grid ranges)")
        found = target
    elif found is not None:
        print(found)
    else:
        print("unidentified")
    if a.output:
        _emit(g, a.output, [f"minor of {fid}" + (" dual side" if a.dual_side else "")])
    return OK if found is not None else NEGATIVE


def cmd_recognize(a) -> int:
    from .analysis import recognize

    res = recognize(_read_graph(a.file))
    if res:
        print(res.fid)
        return OK
    print(res.reason)
    return NEGATIVE


def cmd_iso(a) -> int:
    from .iso import isomorphic

    mp = isomorphic(_read_graph(a.a), _read_graph(a.b))
    if mp is None:
        print("not isomorphic")
        return NEGATIVE
    print("isomorphic")
    print(" ".join(map(str, mp)))
    return OK


def cmd_census(a) -> int:
    from .analysis import census

    def progress(rec) -> None:
        if a.verbose:
            print(f"# {rec.fid}", file=sys.stderr)

    rep = census(
        a.max_n,
        families=a.families,
        iso_max_n=min(a.iso_max_n, a.max_n),
        minors=not a.no_minors,
        progress=progress,
    )
    print("\n".join(rep.lines()))
    if a.json:
        with open(a.json, "w") as fh:
            fh.write(rep.to_json())
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hextile", description="Hexagonal tilings, locally C6 and locally grid graphs.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("gen", help="write the graph of a family spec")
    s.add_argument("spec", help="e.g. Hr:5,4,2, Hf:7,4, T:6,5,2, K0:6,5")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", help="check a graph file against one of the three definitions")
    s.add_argument("file")
    s.add_argument("--as", dest="kind", choices=["hextile", "locgrid", "locc6"], required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("invariants", help="invariant report of a tiling")
    s.add_argument("target", help="graph file or hex family spec")
    s.add_argument("--cap", type=int, default=None, help="longest essential cycle to look for")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("dual", help="dual graph (tiling to locally C6, locally grid to locally grid)")
    s.add_argument("target", help="graph file or family spec")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("minor", help="contract the selected edge set and name the result")
    s.add_argument("spec")
    s.add_argument("--dual-side", action="store_true", help="work on the locally C6 dual instead")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_minor)

    s = sub.add_parser("recognize", help="name the family member isomorphic to a graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("iso", help="isomorphism test between two graph files")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("census", help="check every family member up to a size")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--json")
    s.add_argument("--families", default="RABCFGH")
    s.add_argument("--iso-max-n", type=int, default=120)
    s.add_argument("--no-minors", action="store_true")
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(func=cmd_census)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return a.func(a)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except Exception as exc:  # anything else is a bug in this package
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return DEFECT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
