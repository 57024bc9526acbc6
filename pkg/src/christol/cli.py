"""Command line front end.

Subcommands: expand, weed, automaton, query, algebraize, selftest.
Exit codes: 0 success, 1 a computation failed (one-line diagnostic on
stderr), 2 bad usage.  Stdout carries only the machine-readable result
and is byte-identical for identical argv.
"""

import argparse
import sys
from dataclasses import dataclass

from .algebraic_series import BranchSpec, expand_branch, parse_bivariate
from .algebraize import automatic_to_series, guess_polynomial
from .automaton import (
    build_dfao,
    dfao_from_json,
    dfao_from_linear,
    dfao_to_json,
    export_dot,
    minimize,
    query,
)
from .errors import ChristolError
from .examples import (
    all_ones_spec,
    central_binomial_mod3_oracle,
    central_binomial_spec,
    thue_morse_oracle,
    thue_morse_spec,
)
from .kernel import ClosureConfig, orbit_closure, recheck
from .power_series import parse_series
from .weeding import weed


@dataclass
class CliConfig:
    """Everything a subcommand run needs, assembled from argv."""

    command: str
    p: int = 0
    poly: str = ""
    seed: str = ""
    series: str = ""
    terms: int = 0
    degree: int = 0
    n_eq: int = 64
    max_states: int = 4096
    do_minimize: bool = False
    out_path: str = ""
    dot_path: str = ""
    automaton_path: str = ""
    index: str = ""
    series_file: str = ""
    dx: int = 0
    dy: int = 0


class _UsageError(Exception):
    pass


def _parse_seed(text: str, p: int) -> tuple:
    if not text:
        return ()
    parts = [s.strip() for s in text.split(",")]
    values = []
    for part in parts:
        if not part or not all(ch in "0123456789" for ch in part):
            raise _UsageError(f"bad seed entry {part!r}")
        values.append(int(part) % p)
    return tuple(values)


def _branch_spec(cfg: CliConfig) -> BranchSpec:
    q = parse_bivariate(cfg.poly, cfg.p)
    return BranchSpec(q, seed=_parse_seed(cfg.seed, cfg.p))


def _cmd_expand(cfg: CliConfig) -> int:
    series = expand_branch(_branch_spec(cfg), cfg.terms)
    print(",".join(str(c) for c in series.coeffs))
    return 0


def _cmd_weed(cfg: CliConfig) -> int:
    f = parse_series(cfg.series, cfg.p)
    print(",".join(str(c) for c in weed(f, cfg.degree).coeffs))
    return 0


def _cmd_automaton(cfg: CliConfig) -> int:
    spec = _branch_spec(cfg)
    machine = build_dfao(spec, ClosureConfig(n_eq=cfg.n_eq, max_states=cfg.max_states))
    if cfg.do_minimize:
        machine = minimize(machine)
    with open(cfg.out_path, "w") as fh:
        fh.write(dfao_to_json(machine) + "\n")
    if cfg.dot_path:
        with open(cfg.dot_path, "w") as fh:
            fh.write(export_dot(machine))
    print(machine.n_states)
    return 0


def _cmd_query(cfg: CliConfig) -> int:
    if not cfg.index or not all(c in "0123456789" for c in cfg.index):
        raise _UsageError(f"--n must be a decimal natural number, got {cfg.index!r}")
    with open(cfg.automaton_path) as fh:
        machine = dfao_from_json(fh.read())
    print(query(machine, cfg.index).value)
    return 0


def _cmd_algebraize(cfg: CliConfig) -> int:
    with open(cfg.series_file) as fh:
        f = parse_series(fh.read().strip(), cfg.p)
    print(guess_polynomial(f, cfg.dx, cfg.dy).to_text())
    return 0


def _selftest_suite(name, spec, oracle, limit, expect_states, to_base):
    lines = []
    rep = orbit_closure(spec)
    direct = minimize(build_dfao(spec))
    linear = minimize(dfao_from_linear(rep))
    ok = direct == linear
    lines.append(f"{name}: minimized flavors agree with {direct.n_states} states: "
                 f"{'ok' if ok else 'FAIL'}")
    if direct.n_states != expect_states:
        ok = False
        lines.append(f"{name}: expected {expect_states} states, got {direct.n_states}: FAIL")
    bad = 0
    for n in range(limit):
        if query(direct, str(n)).value != oracle(to_base(n)):
            bad += 1
    lines.append(f"{name}: outputs match the oracle for n < {limit}: "
                 f"{'ok' if bad == 0 else f'{bad} FAIL'}")
    if bad:
        ok = False
    if not recheck(rep, spec, 2):
        ok = False
        lines.append(f"{name}: recheck at doubled precision: FAIL")
    else:
        lines.append(f"{name}: recheck at doubled precision: ok")
    round_trip = dfao_from_json(dfao_to_json(direct)) == direct
    if not round_trip:
        ok = False
    lines.append(f"{name}: serialization round trip: {'ok' if round_trip else 'FAIL'}")
    return ok, lines


def _cmd_selftest(_cfg: CliConfig) -> int:
    def base2(n):
        return [int(b) for b in bin(n)[2:]]

    def base3(n):
        out = []
        while n:
            n, r = divmod(n, 3)
            out.append(r)
        return out

    ok1, lines1 = _selftest_suite(
        "digit-parity", thue_morse_spec(), thue_morse_oracle, 2048, 2, base2
    )
    ok2, lines2 = _selftest_suite(
        "lucas", central_binomial_spec(), central_binomial_mod3_oracle, 2187, 3, base3
    )
    ok3, lines3 = _selftest_suite(
        "all-ones", all_ones_spec(), lambda digits: 1, 512, 1, base2
    )
    for line in lines1 + lines2 + lines3:
        print(line)
    if ok1 and ok2 and ok3:
        print("selftest: ok")
        return 0
    print("selftest: FAIL")
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="christol",
        description="Automata for coefficient sequences of algebraic power series over F_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_p(sp):
        sp.add_argument("--p", type=int, required=True, help="prime modulus")

    sp = sub.add_parser("expand", help="expand a polynomial branch to N terms")
    add_p(sp)
    sp.add_argument("--poly", required=True, help="bivariate polynomial text")
    sp.add_argument("--seed", default="", help="comma-separated low-order coefficients")
    sp.add_argument("--terms", type=int, required=True, help="number of coefficients")

    sp = sub.add_parser("weed", help="extract the subsequence a_{p*n+p-1-k}")
    add_p(sp)
    sp.add_argument("--series", required=True, help="comma-separated coefficients")
    sp.add_argument("--degree", type=int, required=True, help="weeding degree k")

    sp = sub.add_parser("automaton", help="build the coefficient automaton")
    add_p(sp)
    sp.add_argument("--poly", required=True)
    sp.add_argument("--seed", default="")
    sp.add_argument("--minimize", action="store_true")
    sp.add_argument("--out", required=True, help="output path for dfao-v1 JSON")
    sp.add_argument("--dot", default="", help="optional Graphviz output path")
    sp.add_argument("--n-eq", type=int, default=64, help="truncation comparison precision")
    sp.add_argument("--max-states", type=int, default=4096)

    sp = sub.add_parser("query", help="coefficient at index n from a saved automaton")
    sp.add_argument("--automaton", required=True, help="dfao-v1 JSON path")
    sp.add_argument("--n", required=True, help="decimal index, any length")

    sp = sub.add_parser("algebraize", help="guess a defining polynomial for a series")
    add_p(sp)
    sp.add_argument("--series-file", required=True, help="file of comma-separated coefficients")
    sp.add_argument("--dx", type=int, required=True, help="x-degree bound")
    sp.add_argument("--dy", type=int, required=True, help="y-degree bound")

    sub.add_parser("selftest", help="run the embedded oracle suites")
    return parser


def cli_main(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its diagnostic
        return 0 if exc.code == 0 else 2
    cfg = CliConfig(
        command=args.command,
        p=getattr(args, "p", 0),
        poly=getattr(args, "poly", ""),
        seed=getattr(args, "seed", ""),
        series=getattr(args, "series", ""),
        terms=getattr(args, "terms", 0),
        degree=getattr(args, "degree", 0),
        n_eq=getattr(args, "n_eq", 64),
        max_states=getattr(args, "max_states", 4096),
        do_minimize=getattr(args, "minimize", False),
        out_path=getattr(args, "out", ""),
        dot_path=getattr(args, "dot", ""),
        automaton_path=getattr(args, "automaton", ""),
        index=getattr(args, "n", ""),
        series_file=getattr(args, "series_file", ""),
        dx=getattr(args, "dx", 0),
        dy=getattr(args, "dy", 0),
    )
    handlers = {
        "expand": _cmd_expand,
        "weed": _cmd_weed,
        "automaton": _cmd_automaton,
        "query": _cmd_query,
        "algebraize": _cmd_algebraize,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[cfg.command](cfg)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ChristolError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
