"""Command-line front end: ``solvres <command> [options] FILE``.

Exit status is 0 on success, 1 when the input fails validation (or a
requested verification fails) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DSLError, HomogeneityError, SolvresError
from .dsl import element_json, parse_problem
from .groebner import buchberger, min_gens_gb, truncated_buchberger
from .presentation import Presentation, minimize_presentation
from .resolution import minimal_free_resolution, verify_resolution
from .syzygy import syzygies_of_generators

FORMAT = 1


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _matrix_json(rows, ring) -> list:
    from .dsl import _render_poly

    return [[_render_poly(ring, h._terms) for h in row] for row in rows]


def _vec(xi) -> str:
    return "[" + ", ".join(element_json(xi)) + "]"


# ---- commands ------------------------------------------------------------


def cmd_check(P, args):
    A = P.algebra
    data = {
        "generators": list(P.names),
        "weights": list(P.weights),
        "relations": len(A.relations()),
        "commutative": A.is_commutative(),
        "rank": P.rank,
        "elements": len(P.elems),
    }
    text = (
        f"ok: {len(P.names)} generators, {data['relations']} non-trivial relations, "
        f"module of rank {P.rank}, {len(P.elems)} elements"
    )
    return data, text, 0


def cmd_gb(P, args):
    n0 = args.truncate if args.truncate is not None else P.truncate
    if n0 is not None:
        G = truncated_buchberger(P.elems, n0, P.module, track=args.matrices)
        T = None
    else:
        G, T = buchberger(P.elems, P.module, track=args.matrices)
    red = G.reduced()
    data = {
        "kind": G.kind,
        "bound": G.bound,
        "basis": [element_json(g) for g in red],
        "degrees": [g.degree() for g in red],
    }
    lines = [f"{G.kind} Gröbner basis" + (f" (degree <= {n0})" if n0 is not None else "") + f", {len(red)} elements"]
    lines += [f"  {_vec(g)}   deg {g.degree()}" for g in red]
    if args.matrices:
        A = P.algebra
        V = G.V_matrix()
        data["raw"] = [element_json(g) for g in G.elements]
        data["V"] = _matrix_json(V, A)
        if T is not None:
            data["U"] = _matrix_json(T.U, A)
        lines.append("basis as produced:")
        lines += [f"  g{k + 1} = {_vec(g)}" for k, g in enumerate(G.elements)]
        if T is not None:
            lines.append("U (inputs over basis):")
            lines += ["  " + "  ".join(r) for r in data["U"]]
        lines.append("V (basis over inputs):")
        lines += ["  " + "  ".join(r) for r in data["V"]]
    return data, "\n".join(lines), 0


def cmd_mingens(P, args):
    U_min, G = min_gens_gb(P.elems, P.module, early_stop=args.early_stop)
    data = {
        "indices": [i + 1 for i in G.u_min],
        "generators": [element_json(u) for u in U_min],
        "degrees": [u.degree() for u in U_min],
        "basis_kind": G.kind,
        "basis_size": len(G),
    }
    lines = [f"{len(U_min)} minimal generators (of {len(P.elems)}):"]
    lines += [f"  #{i + 1}  {_vec(u)}   deg {u.degree()}" for i, u in zip(G.u_min, U_min)]
    lines.append(f"{G.kind} Gröbner basis with {len(G)} elements")
    return data, "\n".join(lines), 0


def cmd_minpres(P, args):
    mp = minimize_presentation(Presentation(P.module, P.elems))
    log = [
        {"relation": p.relation + 1, "component": p.component + 1,
         "substituted": [k + 1 for k in p.substituted], "dropped": [k + 1 for k in p.dropped]}
        for p in mp.log
    ]
    data = {
        "kept": [k + 1 for k in mp.kept],
        "shifts": list(mp.shifts),
        "relations": [element_json(r) for r in mp.relations],
        "log": log,
    }
    lines = [f"kept basis vectors {data['kept']} with shifts {data['shifts']}"]
    lines += [f"  pivot: relation {e['relation']}, component {e['component']}" for e in log]
    lines.append(f"{len(mp.relations)} relations:")
    lines += [f"  {_vec(r)}" for r in mp.relations]
    return data, "\n".join(lines), 0


def cmd_syz(P, args):
    if not P.elems:
        return {"syzygies": []}, "no elements", 0
    G, T = buchberger(P.elems, P.module, track=True)
    syz = syzygies_of_generators(P.elems, G, T)
    data = {"syzygies": [{"row": element_json(s.element), "provenance": [s.provenance[0]] +
                          [k + 1 for k in s.provenance[1:]]} for s in syz]}
    lines = [f"{len(syz)} syzygy generators:"]
    lines += [f"  {_vec(s.element)}   ({s.provenance[0]} {', '.join(str(k + 1) for k in s.provenance[1:])})"
              for s in syz]
    return data, "\n".join(lines), 0


def cmd_resolve(P, args):
    R = minimal_free_resolution(Presentation(P.module, P.elems))
    B = R.betti()
    A = P.algebra
    steps = []
    for i, L in enumerate(R.modules):
        steps.append({"rank": L.rank, "shifts": list(L.shifts),
                      "matrix": _matrix_json(R.matrix(i), A) if i else []})
    data = {"steps": steps, "betti": B.to_json(), "length": R.length}
    status = 0
    lines = []
    if args.betti:
        lines.append(f"Betti table (length {R.length}):")
        lines += ["  " + s for s in str(B).splitlines()]
    else:
        lines.append(f"minimal free resolution of length {R.length}")
        for i, st in enumerate(steps):
            lines.append(f"L_{i}: rank {st['rank']}, shifts {st['shifts']}")
            if i:
                lines.append(f"  phi_{i}:")
                lines += ["    " + "  ".join(r) for r in st["matrix"]]
    if args.verify:
        rep = verify_resolution(R)
        data["verified"] = rep.ok
        data["failures"] = list(rep.failures)
        lines.append("verification: " + ("ok" if rep.ok else "FAILED"))
        lines += ["  " + f for f in rep.failures]
        status = 0 if rep.ok else 1
    return data, "\n".join(lines), status


COMMANDS = {
    "check": (cmd_check, "parse and validate a problem file"),
    "gb": (cmd_gb, "left Gröbner basis of the elements"),
    "mingens": (cmd_mingens, "minimal homogeneous generating subset"),
    "minpres": (cmd_minpres, "minimize the presentation L0/N"),
    "syz": (cmd_syz, "generators of the syzygy module of the elements"),
    "resolve": (cmd_resolve, "minimal graded free resolution of L0/N"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("file", help="problem file (.spa) or - for stdin")
    p = argparse.ArgumentParser(prog="solvres", description="Gröbner bases and resolutions over solvable algebras")
    sub = p.add_subparsers(dest="command", required=True)
    parsers = {name: sub.add_parser(name, parents=[common], help=h) for name, (_, h) in COMMANDS.items()}
    parsers["gb"].add_argument("--truncate", type=int, metavar="N", help="compute the N-truncated basis")
    parsers["gb"].add_argument("--matrices", action="store_true", help="also print transition matrices")
    parsers["mingens"].add_argument("--early-stop", action="store_true", help="stop after the largest input degree")
    parsers["resolve"].add_argument("--betti", action="store_true", help="print only the Betti table")
    parsers["resolve"].add_argument("--verify", action="store_true", help="run the independent verifier")
    return p


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    name = "<stdin>" if args.file == "-" else args.file
    try:
        P = parse_problem(_read(args.file))
        data, text, status = COMMANDS[args.command][0](P, args)
    except UsageError as e:
        print(f"solvres: {e}", file=stderr)
        return 2
    except DSLError as e:
        where = f"{e.line}:{e.col}:" if e.line is not None else ""
        print(f"{name}:{where} error: {e.reason}", file=stderr)
        return 1
    except (HomogeneityError, SolvresError) as e:
        print(f"{name}: error: {e}", file=stderr)
        return 1
    if args.json:
        out = {"format": FORMAT, "command": args.command}
        out.update(data)
        stdout.write(json.dumps(out, indent=2, ensure_ascii=False) + "\n")
    else:
        stdout.write(text + "\n")
    return status


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
