"""Command-line driver.

Subcommands: cdnumber, recognize, tds, partize, gen, validate.
Exit codes: 0 solved/YES/valid, 1 NO, 2 error.  All certificates are
JSON using the input file's vertex labels; a fixed seed reproduces
generated instances byte for byte.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional

from .coloring import CdColoring, merge_colorings, validate_cd_coloring
from .errors import CdColorError
from .exact import cd_chromatic_bruteforce, cd_chromatic_exact, DEFAULT_EXACT_CAP
from .generate import (
    random_connected_graph,
    random_girth5_graph,
    random_graph,
    random_split_graph,
)
from .graph import Graph, components_within, detect_format, parse_graph, to_dimacs
from .partize import (
    DeletionSolution,
    partization2,
    partization3,
    partization_bruteforce,
)
from .recognize import cd_recognize_upto3
from .split import (
    cd_chromatic_split,
    generate_from_partization,
    generate_from_setcover,
    split_partization,
)
from .tds import cd_chromatic_girth5, is_total_dominating, tds_kernelize, tds_solve
from .bits import iter_bits, mask_of


def _load_graph(path: str) -> Graph:
    text = Path(path).read_text()
    return parse_graph(text, detect_format(text))


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _emit_certificate(args, payload: dict) -> None:
    text = _dump_json(payload)
    if getattr(args, "cert_out", None):
        Path(args.cert_out).write_text(text + "\n")
    if getattr(args, "json", False):
        print(text)


def _check_threads(args) -> None:
    threads = getattr(args, "threads", 1)
    if threads < 1:
        raise CdColorError("--threads must be at least 1")
    # solvers are sequential and deterministic; extra threads change nothing


def _cmd_cdnumber(args) -> int:
    _check_threads(args)
    g = _load_graph(args.file)
    if args.brute:
        q, coloring = cd_chromatic_bruteforce(g)
    elif args.girth5:
        total, parts = 0, []
        for comp in components_within(g, g.full_mask):
            sub, ids = g.induced(comp)
            qq, cc = cd_chromatic_girth5(sub)
            total += qq
            parts.append(cc.relabeled(ids))
        q, coloring = total, merge_colorings(parts)
    elif args.split:
        q, coloring = cd_chromatic_split(g)
    else:
        q, coloring = cd_chromatic_exact(g, cap=args.cap)
    payload = coloring.to_payload(g)
    if not args.json:
        print(f"q={q}")
    _emit_certificate(args, payload)
    return 0


def _cmd_recognize(args) -> int:
    g = _load_graph(args.file)
    result = cd_recognize_upto3(g)
    if result is None or result.q > args.q:
        if not args.json:
            print(f"NO: cd-chromatic number exceeds {args.q}")
        return 1
    payload = result.coloring().to_payload(g)
    payload["components"] = [
        {
            "type_id": w.type_id,
            "dominators": [g.label(d) for d in w.dominators],
            "vertices": g.label_list(comp),
        }
        for comp, w in result.components
    ]
    if not args.json:
        print(f"q={result.q}")
    _emit_certificate(args, payload)
    return 0


def _cmd_tds(args) -> int:
    g = _load_graph(args.file)
    if args.kernel_out:
        outcome = tds_kernelize(g, args.k)
        if outcome.verdict == "REDUCED":
            comments = ["kernel of the total domination instance"]
            comments += [
                f"map {new + 1} {g.label(old)}"
                for new, old in enumerate(outcome.back_map)
            ]
            comments += [f"forced {g.label(v)}" for v in iter_bits(outcome.forced)]
            Path(args.kernel_out).write_text(to_dimacs(outcome.kernel, comments))
        else:
            print(f"kernelization answered NO: {outcome.reason}")
    cert = tds_solve(g, args.k)
    if cert is None:
        if not args.json:
            print("NO")
        return 1
    payload = {"size": cert.size, "set": g.label_list(cert.mask)}
    if not args.json:
        print(f"size={cert.size} set={g.label_list(cert.mask)}")
    _emit_certificate(args, payload)
    return 0


def _solution_payload(g: Graph, sol: DeletionSolution) -> dict:
    payload = sol.coloring.to_payload(g)
    payload["deleted"] = g.label_list(sol.deleted)
    payload["pattern"] = [name for name, _ in sol.plan]
    return payload


def _cmd_partize(args) -> int:
    _check_threads(args)
    g = _load_graph(args.file)
    if args.k < 0:
        raise CdColorError("--k must be non-negative")
    if args.split:
        mask = split_partization(g, args.k, args.q)
        if mask is None:
            if not args.json:
                print("NO")
            return 1
        sub, ids = g.without(mask)
        q, coloring = cd_chromatic_split(sub)
        sol = DeletionSolution(mask, (("Split", None),), coloring.relabeled(ids))
    elif args.q == 2:
        sol = partization2(g, args.k)
    elif args.q == 3:
        sol = partization3(g, args.k)
    else:
        print(
            f"warning: q={args.q} runs the brute-force oracle "
            "(capacity n <= 9, k <= 4)",
            file=sys.stderr,
        )
        sol = partization_bruteforce(g, args.k, args.q)
    if sol is None:
        if not args.json:
            print("NO")
        return 1
    payload = _solution_payload(g, sol)
    if not args.json:
        print(
            f"YES deleted={payload['deleted']} "
            f"pattern={'+'.join(payload['pattern']) or 'Empty'} q={sol.coloring.q}"
        )
    _emit_certificate(args, payload)
    return 0


def _parse_sets(text: str):
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        out.append({int(x) for x in chunk.split(",")})
    return out


def _cmd_gen(args) -> int:
    if args.kind == "setcover":
        inst = generate_from_setcover(args.universe, _parse_sets(args.sets), args.k)
    elif args.kind == "lift":
        g = _load_graph(args.file)
        inst = generate_from_partization(g, args.k, 1 if args.base == "vc" else 2)
    else:  # random
        rng = random.Random(args.seed)
        if args.girth5:
            g = random_girth5_graph(args.n, rng, density=args.p, connected=args.connected)
        elif args.split_graph:
            g = random_split_graph(args.n, rng, p=args.p, connected=args.connected)
        elif args.connected:
            g = random_connected_graph(args.n, args.p, rng)
        else:
            g = random_graph(args.n, args.p, rng)
        labeled = Graph(g.n, g.adj, labels=tuple(range(1, g.n + 1)))
        Path(args.out).write_text(to_dimacs(labeled, [f"seed {args.seed}"]))
        print(f"wrote {args.out}")
        return 0
    Path(args.out).write_text(to_dimacs(inst.graph, [f"source {inst.source}"]))
    sidecar = args.sidecar or args.out + ".json"
    Path(sidecar).write_text(
        _dump_json(
            {
                "source": inst.source,
                "k": inst.k,
                "q": inst.q,
                "expected_yes": inst.expected,
                "roles": inst.roles,
                "labels": [str(inst.graph.label(v)) for v in range(inst.graph.n)],
            }
        )
        + "\n"
    )
    print(f"wrote {args.out} (k={inst.k}, q={inst.q}), sidecar {sidecar}")
    return 0


def _cmd_validate(args) -> int:
    g = _load_graph(args.file)
    cert = json.loads(Path(args.cert).read_text())
    if not isinstance(cert, dict):
        raise CdColorError("certificate must be a JSON object")
    label_to_index = {g.label(v): v for v in range(g.n)}

    def to_mask(labels) -> int:
        try:
            return mask_of(label_to_index[x] for x in labels)
        except KeyError as exc:
            raise CdColorError(f"certificate references unknown vertex {exc}") from None

    if "set" in cert and "size" in cert:
        mask = to_mask(cert["set"])
        if mask.bit_count() != cert["size"]:
            print("invalid: size field does not match the set")
            return 2
        if not is_total_dominating(g, mask):
            print("invalid: set is not total dominating")
            return 2
        print("valid")
        return 0
    if "classes" not in cert or "dominators" not in cert:
        raise CdColorError("unrecognized certificate shape")
    deleted = to_mask(cert.get("deleted", []))
    sub, ids = g.without(deleted)
    try:
        coloring = CdColoring.from_payload(cert, sub)
    except ValueError as exc:
        print(f"invalid: {exc}")
        return 2
    report = validate_cd_coloring(sub, coloring)
    if not report.ok:
        print(f"invalid: {report.problem}")
        return 2
    if cert.get("q") != coloring.q:
        print("invalid: q field does not match the class count")
        return 2
    print("valid")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdcolor",
        description="Exact and parameterized solvers for class-domination coloring",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cdnumber", help="cd-chromatic number with certificate")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="subset-table engine (default)")
    mode.add_argument("--girth5", action="store_true", help="total-domination fast path")
    mode.add_argument("--split", action="store_true", help="split-graph fast path")
    mode.add_argument("--brute", action="store_true", help="small-graph oracle")
    p.add_argument("--cap", type=int, default=DEFAULT_EXACT_CAP)
    p.add_argument("--json", action="store_true")
    p.add_argument("--cert-out")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_cdnumber)

    p = sub.add_parser("recognize", help="is the graph q-cd-colorable, q <= 3")
    p.add_argument("file")
    p.add_argument("--q", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--cert-out")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("tds", help="total dominating set of size at most k")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kernel-out", help="dump the reduced instance as DIMACS")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cert-out")
    p.set_defaults(func=_cmd_tds)

    p = sub.add_parser("partize", help="delete k vertices to reach q cd-colors")
    p.add_argument("file")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--split", action="store_true", help="split-graph brancher")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cert-out")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_partize)

    p = sub.add_parser("gen", help="generate instances")
    gsub = p.add_subparsers(dest="kind", required=True)
    ps = gsub.add_parser("setcover", help="deletion instance from a set cover")
    ps.add_argument("--universe", type=int, required=True)
    ps.add_argument("--sets", required=True, help="semicolon-separated, e.g. '1,2;2,3'")
    ps.add_argument("--k", type=int, required=True)
    ps.add_argument("--out", required=True)
    ps.add_argument("--sidecar")
    pl = gsub.add_parser("lift", help="lift a vc/oct instance by one color")
    pl.add_argument("file")
    pl.add_argument("--base", choices=("vc", "oct"), required=True)
    pl.add_argument("--k", type=int, required=True)
    pl.add_argument("--out", required=True)
    pl.add_argument("--sidecar")
    pr = gsub.add_parser("random", help="random graphs (plain, girth5, split)")
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--p", type=float, default=0.5)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--girth5", action="store_true")
    pr.add_argument("--split", dest="split_graph", action="store_true")
    pr.add_argument("--connected", action="store_true")
    pr.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("validate", help="check a certificate against a graph")
    p.add_argument("file")
    p.add_argument("cert")
    p.set_defaults(func=_cmd_validate)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CdColorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
