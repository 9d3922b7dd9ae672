"""Command-line front end.

Every subcommand takes the level data as ``--e`` and ``--multicharge`` and
prints to standard output.  The default output format comes from the
``KLRDECOMP_FORMAT`` environment variable (``text`` if unset).

Exit codes: 0 success, 1 usage error, 2 contract violation (a JSON payload
is printed on standard output), 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from . import canbase, combinat, crystal, tableaux
from .combinat import ContentVector, LevelData, Multipartition, partition_str

FORMATS = ("json", "csv", "text", "dot")
FORMAT_ENV = "KLRDECOMP_FORMAT"

EXIT_OK, EXIT_USAGE, EXIT_CONTRACT, EXIT_INTERNAL = 0, 1, 2, 3

CONTRACT_ERRORS = (
    canbase.RankDeficient,
    canbase.TriangularityViolated,
    canbase.InvariantViolated,
    canbase.NegativeCharacter,
    crystal.PathDependent,
)


class UsageError(Exception):
    pass


class ContractFailure(Exception):
    """Raised by a subcommand whose computation produced a falsified contract."""

    def __init__(self, payload: dict):
        super().__init__(payload.get("message", "contract violation"))
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- argument helpers ------------------------------------------------------------


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _mp(text: str) -> Multipartition:
    try:
        return Multipartition.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad multipartition {text!r}: {exc}") from None


def _level(args) -> LevelData:
    try:
        return LevelData(args.e, args.multicharge)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_mp(level: LevelData, lam: Multipartition) -> Multipartition:
    if lam.l != level.l:
        raise UsageError(f"{lam} has {lam.l} components but the multicharge has {level.l}")
    return lam


def _blocks(args, level: LevelData) -> list[ContentVector]:
    if args.content is not None:
        try:
            return [ContentVector.parse(args.content, e=level.e)]
        except ValueError as exc:
            raise UsageError(f"bad content {args.content!r}: {exc}") from None
    if args.degree is not None:
        if args.degree < 0:
            raise UsageError("--degree must be nonnegative")
        return combinat.blocks_of_height(level, args.degree)
    raise UsageError("give --degree or --content")


def _pool_map(fn: Callable, items: Sequence, jobs: int) -> list:
    """Ordered map, in a bounded process pool when ``jobs > 1``."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


# -- subcommands ----------------------------------------------------------------


def _decomp_one(task):
    level, alpha = task
    return canbase.decomposition_matrix(level, alpha)


def cmd_decomp(args) -> str:
    level = _level(args)
    mats = _pool_map(_decomp_one, [(level, a) for a in _blocks(args, level)], args.jobs)
    if args.format == "json":
        return _dump([d.to_json() for d in mats])
    if args.format == "csv":
        return "\n".join(f"# block {d.content}\n{d.to_csv()}" for d in mats).rstrip("\n")
    if args.format == "text":
        return "\n\n".join(d.to_text() for d in mats)
    raise UsageError(f"decomp does not support --format {args.format}")


def cmd_gdim(args) -> str:
    level = _level(args)
    out = []
    for alpha in _blocks(args, level):
        table = tableaux.graded_dim_table(level, alpha)
        total = tableaux.graded_dim_total(level, alpha)
        pairs = sorted(table.items())
        out.append((alpha, pairs, total))
    if args.format == "json":
        return _dump([{
            "content": a.to_json(),
            "pairs": [{"i": list(i), "j": list(j), "first": f.to_json(), "second": s.to_json(),
                       "agree": f == s} for (i, j), (f, s) in pairs],
            "total": t.to_json(),
        } for a, pairs, t in out])
    if args.format == "csv":
        lines = ["content,i,j,first,second"]
        for a, pairs, _ in out:
            for (i, j), (f, s) in pairs:
                lines.append(f'"{a}","{list(i)}","{list(j)}","{f}","{s}"')
        return "\n".join(lines)
    if args.format == "text":
        blocks = []
        for a, pairs, t in out:
            rows = [f"block {a}"]
            rows += [f"  {''.join(map(str, i)) or '-'} | {''.join(map(str, j)) or '-'}: {f}"
                     + ("" if f == s else f"  (second sum: {s})") for (i, j), (f, s) in pairs]
            rows.append(f"  total: {t}")
            blocks.append("\n".join(rows))
        return "\n\n".join(blocks)
    raise UsageError(f"gdim does not support --format {args.format}")


def cmd_specht_char(args) -> str:
    level = _level(args)
    lam = _check_mp(level, args.mp)
    ch = tableaux.specht_character(level, lam)
    if args.format == "json":
        return _dump(ch.to_json())
    if args.format == "text":
        return "\n".join(f"{''.join(map(str, s)) or '-'}: {p}" for s, p in sorted(ch.rows.items()))
    if args.format == "csv":
        return "\n".join(["seq,poly", *(f'"{list(s)}","{p}"' for s, p in sorted(ch.rows.items()))])
    raise UsageError(f"specht-char does not support --format {args.format}")


def _conv(args) -> crystal.CrystalConvention:
    return crystal.CrystalConvention(args.convention)


def cmd_crystal(args) -> str:
    level = _level(args)
    if args.degree is None:
        raise UsageError("crystal needs --degree")
    edges = crystal.crystal_edges(level, args.degree, _conv(args))
    if args.format == "dot":
        return crystal.edges_to_dot(edges)
    if args.format == "json":
        return _dump(json.loads(crystal.edges_to_json(edges)))
    if args.format == "csv":
        return "\n".join(["from,to,i", *(f'"{a}","{b}",{i}' for a, b, i in edges)])
    if args.format == "text":
        return "\n".join(f"{a} --{i}--> {b}" for a, b, i in edges)
    raise UsageError(f"crystal does not support --format {args.format}")


def cmd_restricted(args) -> str:
    level = _level(args)
    conv = _conv(args)
    out = []
    for alpha in _blocks(args, level):
        out.append((alpha, crystal.restricted_set(level, alpha, conv)))
    if args.format == "json":
        return _dump([{"content": a.to_json(), "multipartitions": [m.to_json() for m in ms]} for a, ms in out])
    if args.format == "text":
        return "\n".join(f"{a}: " + "  ".join(map(str, ms)) for a, ms in out)
    if args.format == "csv":
        return "\n".join(["content,multipartition", *(f'"{a}","{m}"' for a, ms in out for m in ms)])
    raise UsageError(f"restricted does not support --format {args.format}")


def cmd_uglov(args) -> str:
    level = _level(args)
    lam = _check_mp(level, args.mp)
    try:
        bar = combinat.uglov_bar(level, lam)
    except combinat.EZero as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return json.dumps(list(bar))
    if args.format == "csv":
        return ",".join(map(str, bar))
    return partition_str(bar)


def cmd_order(args) -> str:
    level = _level(args)
    mu, lam = _check_mp(level, args.mp), _check_mp(level, args.other)
    same = combinat.content(level, mu) == combinat.content(level, lam)
    result = {
        "mu": mu.to_json(),
        "lam": lam.to_json(),
        "same_content": same,
        "dominance": {"mu<=lam": combinat.dominance_leq(mu, lam), "lam<=mu": combinat.dominance_leq(lam, mu)},
        "lex": combinat.lex_cmp(mu, lam),
        "order": {"mu<=lam": combinat.order_leq(level, mu, lam), "lam<=mu": combinat.order_leq(level, lam, mu)},
    }
    if args.format == "json":
        return _dump(result)
    if args.format == "csv":
        return "\n".join(["order,mu<=lam,lam<=mu",
                          f"dominance,{result['dominance']['mu<=lam']},{result['dominance']['lam<=mu']}",
                          f"lex,{result['lex'] <= 0},{result['lex'] >= 0}",
                          f"order,{result['order']['mu<=lam']},{result['order']['lam<=mu']}"])
    lex = {-1: "mu < lam", 0: "mu = lam", 1: "mu > lam"}[result["lex"]]
    return "\n".join([
        f"mu  = {mu}", f"lam = {lam}", f"same content: {same}",
        f"dominance: mu<=lam {result['dominance']['mu<=lam']}, lam<=mu {result['dominance']['lam<=mu']}",
        f"lex: {lex}",
        f"order: mu<=lam {result['order']['mu<=lam']}, lam<=mu {result['order']['lam<=mu']}",
    ])


def cmd_extremal(args) -> str:
    level = _level(args)
    lam = _check_mp(level, args.mp)
    alpha = combinat.content(level, lam)
    if lam not in crystal.restricted_set(level, alpha):
        raise UsageError(f"{lam} is not restricted")
    ch = canbase.irreducible_characters(level, alpha)[lam]
    seq, runs, target = canbase.extremal_sequence(level, ch)
    value = ch[seq]
    factor = canbase.extremal_factor(runs)
    result = {
        "mp": lam.to_json(),
        "seq": list(seq),
        "runs": [[j, m] for j, m in runs],
        "target": target.to_json() if target is not None else None,
        "value": value.to_json(),
        "factorial": factor.to_json(),
        "holds": value == factor and target == lam,
    }
    if args.format == "json":
        return _dump(result)
    if args.format == "csv":
        return "\n".join(["seq,runs,target,value,factorial,holds",
                          f'"{list(seq)}","{runs}","{target}","{value}","{factor}",{result["holds"]}'])
    word = " ".join(f"{j}^{m}" if m > 1 else str(j) for j, m in runs) or "-"
    return "\n".join([f"character of D{lam}", f"extremal word: {word}", f"target: {target}",
                      f"value: {value}", f"product of factorials: {factor}", f"holds: {result['holds']}"])


def _verify_one(task):
    level, alpha, seed = task
    return canbase.verify_suite(level, alpha, seed=seed)


def cmd_verify(args) -> str:
    level = _level(args)
    reports = _pool_map(_verify_one, [(level, a, args.seed) for a in _blocks(args, level)], args.jobs)
    ok = all(r["pass"] for r in reports)
    if args.format == "json":
        text = _dump({"pass": ok, "blocks": reports})
    elif args.format == "csv":
        lines = ["content,check,pass"]
        for r in reports:
            for name, c in r["checks"].items():
                lines.append(f'"{ContentVector.from_json(r["content"])}",{name},{c["pass"]}')
        text = "\n".join(lines)
    else:
        lines = []
        for r in reports:
            mark = "ok  " if r["pass"] else "FAIL"
            failed = [n for n, c in r["checks"].items() if not c["pass"]]
            lines.append(f"{mark} {ContentVector.from_json(r['content'])}" + (f"  {failed}" if failed else ""))
        lines.append(f"{sum(r['pass'] for r in reports)}/{len(reports)} blocks pass")
        text = "\n".join(lines)
    if not ok:
        print(text)
        raise ContractFailure({"error": "VerificationFailed", "message": "verify_suite reported failures",
                               "failed_blocks": [r["content"] for r in reports if not r["pass"]]})
    return text


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    common = _Parser(add_help=False)
    common.add_argument("--e", type=int, required=True, help="quantum characteristic (0 or >= 2)")
    common.add_argument("--multicharge", type=_ints, required=True, help="integers k1,...,kl")
    common.add_argument("--format", choices=FORMATS, default=default_format if default_format in FORMATS else "text",
                        help=f"output format (default from ${FORMAT_ENV}, else text)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized cross-checks")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for per-block work")

    parser = _Parser(prog="klrdecomp", description="Graded decomposition numbers from the Fock space canonical basis.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, helptext, subject=()):
        p = sub.add_parser(name, parents=[common], help=helptext, description=helptext)
        if "block" in subject:
            p.add_argument("--degree", type=int, help="all blocks of this height")
            p.add_argument("--content", help='one block, e.g. "0:1,1:1"')
        if "degree" in subject:
            p.add_argument("--degree", type=int, help="maximum size")
        if "mp" in subject:
            p.add_argument("--mp", type=_mp, required=True, help='multipartition as JSON, e.g. "[[2,1],[]]"')
        if "other" in subject:
            p.add_argument("--other", type=_mp, required=True, help="second multipartition")
        if "convention" in subject:
            p.add_argument("--convention", choices=[c.value for c in crystal.CrystalConvention],
                           default="standard")
        p.set_defaults(func=fn)

    add("decomp", cmd_decomp, "graded decomposition matrices", ("block",))
    add("gdim", cmd_gdim, "graded dimensions of idempotent truncations", ("block",))
    add("specht-char", cmd_specht_char, "graded character of a Specht module", ("mp",))
    add("crystal", cmd_crystal, "crystal graph of the component of the empty multipartition",
        ("degree", "convention"))
    add("restricted", cmd_restricted, "restricted multipartitions", ("block", "convention"))
    add("uglov", cmd_uglov, "the partition read off the abacus of a multipartition", ("mp",))
    add("order", cmd_order, "compare two multipartitions under dominance, lex and the block order",
        ("mp", "other"))
    add("extremal", cmd_extremal, "extremal word of an irreducible character", ("mp",))
    add("verify", cmd_verify, "run every consistency check on blocks", ("block",))
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        text = args.func(args)
    except UsageError as exc:
        print(f"klrdecomp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ContractFailure as exc:
        print(_dump(exc.payload))
        print(f"klrdecomp: contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except CONTRACT_ERRORS as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, canbase.InvariantViolated):
            payload["violations"] = exc.payload.get("violations", [])
        print(_dump(payload))
        print(f"klrdecomp: contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL
    print(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
