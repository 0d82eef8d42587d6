"""Command-line front end.

    bredon homology --space builtin:s0_trivial --group builtin:Z2 --coeffs builtin:constant --ring Z
    bredon check-coefficients --group builtin:S3 --coeffs builtin:regular
    bredon orbit-category --group builtin:S3
    bredon transfer-check --group builtin:Z2 --covering builtin:free_to_point --coeffs builtin:fixed_point
    bredon oracles --space builtin:circle_antipodal --group builtin:Z2

Sources are ``builtin:<name>`` or a path to a JSON file.  Exit status is 0
on success, 1 when a check fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import coefficients, spaces
from .coefficients import builtin_system, is_homological
from .errors import BredonError, UnknownBuiltin
from .groups import Group, builtin_group, from_cayley_table, trivial_group
from .gsets import GSet, gset_from_json
from .homology import bredon_homology
from .oracles import run_oracles
from .orbits import OrbitCategory
from .rings import parse_ring
from .simplicial import from_json as space_from_json
from .transfer import (
    GCovering,
    check_axioms,
    identity_covering,
    random_covering,
    random_covering_over,
    random_map_into,
    trivial_covering,
)

DEFAULT_SEED = 20240601


class UsageError(Exception):
    pass


def _load(source: str):
    """Split a source into ("builtin", name) or ("file", parsed JSON)."""
    if source.startswith("builtin:"):
        return "builtin", source[len("builtin:"):]
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"no such file: {source}")
    try:
        return "file", json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"{source} is not valid JSON: {exc}") from None


def _ring(spec: str):
    try:
        return parse_ring(spec)
    except (BredonError, ValueError) as exc:
        raise UsageError(f"bad --ring {spec!r}: expected Z, Q or Fp:<p>") from exc


def load_group(source: str | None, space: str | None = None) -> Group:
    if source is None:
        if space and space.startswith("builtin:"):
            name = space[len("builtin:"):].split(":")[0]
            return builtin_group(spaces.DEFAULT_GROUPS.get(name, "trivial"))
        return trivial_group()
    kind, value = _load(source)
    if kind == "builtin":
        return builtin_group(value)
    table = value["table"] if isinstance(value, dict) else value
    return from_cayley_table(table, value.get("name") if isinstance(value, dict) else None)


def load_space(source: str, G: Group):
    kind, value = _load(source)
    if kind == "builtin":
        name, _, param = value.partition(":")
        params = {"n": int(param)} if param else {}
        return spaces.builtin(name, G, **params)
    return space_from_json(G, value)


def load_coeffs(source: str, G: Group, ring):
    kind, value = _load(source)
    if kind == "builtin":
        return builtin_system(value, G, ring)
    return coefficients.from_json(G, value, ring)


def load_covering(source: str | None, G: Group, rng: random.Random) -> GCovering:
    if source is None:
        return random_covering(G, rng, 2)
    kind, value = _load(source)
    if kind == "builtin":
        name, _, param = value.partition(":")
        point = GSet(G, [[0]] * G.order, check=False)
        if name == "identity":
            return identity_covering(point)
        if name == "trivial":
            return trivial_covering(point, int(param or 2))
        if name == "free_to_point":
            free = GSet(G, [[G.mul(g, x) for x in G.elements] for g in G.elements], check=False)
            return GCovering(free, point, [0] * G.order)
        if name == "random":
            return random_covering(G, rng, int(param or 2))
        raise UnknownBuiltin(f"unknown covering {name!r}; choose from identity, trivial[:n], free_to_point, random[:n]")
    total = gset_from_json(G, value["total"])
    base = gset_from_json(G, value["base"])
    return GCovering(total, base, value["map"])


# -- subcommands -------------------------------------------------------------


def _emit(args, text: str, data: dict):
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def cmd_homology(args) -> int:
    G = load_group(args.group, args.space)
    ring = _ring(args.ring)
    K = load_space(args.space, G)
    M = load_coeffs(args.coeffs, G, ring)
    H = bredon_homology(K, M, args.max_degree)
    text = "\n".join(f"H~_{q} = {H.group_string(q)}" for q in range(len(H.betti)))
    _emit(args, text, H.to_json())
    return 0


def cmd_check_coefficients(args) -> int:
    G = load_group(args.group)
    ring = _ring(args.ring)
    M = load_coeffs(args.coeffs, G, ring)
    report = M.validate()
    homological = is_homological(M) if isinstance(M, coefficients.MackeyFunctor) else None
    data = {"ok": report.ok, "violations": [str(v) for v in report.violations], "homological": homological}
    text = f"{M.name or 'coefficients'} over {ring}: {'valid' if report.ok else 'INVALID'}"
    if not report.ok:
        text += "\n" + str(report)
    if homological is not None:
        text += f"\nhomological: {'yes' if homological else 'no'}"
    _emit(args, text, data)
    return 0 if report.ok else 1


def cmd_orbit_category(args) -> int:
    G = load_group(args.group)
    O = OrbitCategory(G)
    data = O.to_dict()
    n_mor = sum(map(sum, data["hom_sizes"]))
    lines = [f"objects: {len(O.objects)}", f"morphisms: {n_mor}"]
    for obj in data["objects"]:
        lines.append(f"  G/H{obj['id']}  H = {obj['elements']}")
    lines.append(f"generating morphisms: {len(data['generators'])}")
    data["morphism_count"] = n_mor
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_transfer_check(args) -> int:
    G = load_group(args.group)
    ring = _ring(args.ring)
    M = load_coeffs(args.coeffs, G, ring)
    rng = random.Random(args.seed)
    p = load_covering(args.covering, G, rng)
    pullbacks = [(p, random_map_into(p.base, rng, 2)) for _ in range(3)]
    composites = [(random_covering_over(p.total, rng, 2), p)]
    report = check_axioms(M, [p], pullbacks, composites)
    _emit(args, str(report), report.to_json())
    return 0 if report.ok else 1


def cmd_oracles(args) -> int:
    G = load_group(args.group, args.space)
    ring = _ring(args.ring)
    K = load_space(args.space, G)
    rows = run_oracles(K, ring)
    lines = []
    for r in rows:
        mark = "ok" if r["ok"] else "MISMATCH"
        lines.append(f"{r['check']}: {mark}")
        lines.append(f"  bredon: {', '.join(r['bredon'].group_string(q) for q in range(len(r['bredon'].betti)))}")
        lines.append(f"  oracle: {', '.join(r['oracle'].group_string(q) for q in range(len(r['oracle'].betti)))}")
    data = {"ok": all(r["ok"] for r in rows),
            "checks": [{"check": r["check"], "ok": r["ok"], "bredon": r["bredon"].to_json()["H"],
                        "oracle": r["oracle"].to_json()["H"]} for r in rows]}
    _emit(args, "\n".join(lines), data)
    return 0 if data["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bredon", description="Bredon homology of finite simplicial G-sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, space=False, coeffs=False):
        p.add_argument("--group", help="builtin:<trivial|Zn|Sn|Dn|V4> or a JSON Cayley table")
        if space:
            p.add_argument("--space", required=True, help="builtin:<name> or a JSON file")
        if coeffs:
            p.add_argument("--coeffs", default="builtin:constant", help="builtin:<name> or a JSON file")
        p.add_argument("--ring", default="Z", help="Z, Q or Fp:<p>")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("homology", help="reduced Bredon homology")
    common(p, space=True, coeffs=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("check-coefficients", help="functoriality report for a coefficient system")
    common(p, coeffs=True)
    p.set_defaults(func=cmd_check_coefficients)

    p = sub.add_parser("orbit-category", help="dump the orbit category")
    common(p)
    p.set_defaults(func=cmd_orbit_category)

    p = sub.add_parser("transfer-check", help="check the transfer axioms on a covering")
    common(p, coeffs=True)
    p.add_argument("--covering", help="builtin:<identity|trivial:n|free_to_point|random:n> or a JSON file")
    p.set_defaults(func=cmd_transfer_check)

    p = sub.add_parser("oracles", help="cross-check against nonequivariant homology")
    common(p, space=True)
    p.set_defaults(func=cmd_oracles)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, UnknownBuiltin) as exc:
        print(f"bredon: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except BredonError as exc:
        print(f"bredon: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
