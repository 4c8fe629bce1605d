"""Command-line front end: ``rserasure {gf,rs,perf,sim} ...``."""
from __future__ import annotations

import argparse
import configparser
import logging
import sys

from . import fileformats, harq, perf
from .codec import encode, make_code
from .decoder import DecodeError, UncorrectableError, decode
from .field import (PRESETS, field_preset, inverse, is_primitive, make_field, mul,
                    xor_cost_estimate)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNCORRECTABLE = 3


class CliError(Exception):
    pass


def _int(text):
    return int(text, 0)


def _int_list(text):
    return [int(float(tok)) for tok in text.split(",") if tok.strip()]


def _add_field_args(p):
    g = p.add_argument_group("field")
    g.add_argument("--field", choices=sorted(PRESETS), help="named field preset (default gf32)")
    g.add_argument("--m", type=int, help="field degree, 2..32")
    g.add_argument("--poly", help='P(x) as hex mask ("0x18000000B") or exponents ("[32,31,3,1,0]")')


def _field(args, default="gf32"):
    if args.m is not None or args.poly is not None:
        if args.m is None or args.poly is None:
            raise CliError("--m and --poly must be given together")
        if args.field:
            raise CliError("use either --field or --m/--poly")
        return make_field(args.m, args.poly)
    return field_preset(args.field or default)


def _out(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- gf ----------------------------------------------------------------------

def cmd_gf(args):
    f = _field(args)
    if args.op == "mul":
        a, b = _int(args.a), _int(args.b)
        for v in (a, b):
            if not 0 <= v < f.order:
                raise CliError(f"{v:#x} is not an element of GF(2^{f.m})")
        print(hex(mul(a, b, f)))
    elif args.op == "inv":
        a = _int(args.a)
        if not 0 <= a < f.order:
            raise CliError(f"{a:#x} is not an element of GF(2^{f.m})")
        print(hex(inverse(a, f)))
    elif args.op == "cost":
        rep = xor_cost_estimate(f)
        print(f"field: {f}")
        print(f"xor_term_count: {rep.xor_term_count}")
        print(f"depth_estimate: {rep.depth_estimate}")
        print("terms_per_bit: " + ",".join(map(str, rep.terms_per_bit)))
    elif args.op == "check-primitive":
        verdict = is_primitive(f)
        print({True: "true", False: "false", None: "unchecked — trusted fixture"}[verdict])
    return EXIT_OK


# -- rs ----------------------------------------------------------------------

def _code(args):
    return make_code(_field(args), args.n, args.k)


def cmd_rs(args):
    code = _code(args)
    m = code.field.m
    if args.op == "encode":
        data = fileformats.read_symbols(args.input, m, args.format)
        word = encode(code, data)
        fileformats.write_symbols(args.out, word, m, args.format)
        return EXIT_OK

    word = fileformats.read_symbols(args.input, m, args.format)
    positions = fileformats.read_erasures(args.erasures) if args.erasures else []
    report = decode(code, word, positions)
    fileformats.write_symbols(args.out, report.corrected if args.full else report.data,
                              m, args.format)
    text = report.to_text()
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- perf --------------------------------------------------------------------

def cmd_perf(args):
    hw = perf.HardwareConfig(args.parallel, args.clock)
    if args.table3:
        rows = perf.reference_points(clock_hz=args.clock)
    else:
        if not args.data_bits:
            raise CliError("give --data-bits (and --erasures) or --table3")
        rows = perf.sweep_curves(args.data_bits, args.erasures, args.m, hw)
    _out(args, perf.to_csv(rows, resources=args.resources))
    return EXIT_OK


# -- sim ---------------------------------------------------------------------

SIM_DEFAULTS = {"m": None, "poly": None, "field": None, "n": 200, "k": 136, "p": 0.3,
                "strategy": "all", "trials": 1000, "seed": 0, "max_rounds": 4}
SIM_TYPES = {"m": int, "n": int, "k": int, "p": float, "trials": int, "seed": int,
             "max_rounds": int}


def _sim_settings(args):
    settings = dict(SIM_DEFAULTS)
    if args.config:
        cp = configparser.ConfigParser()
        if not cp.read(args.config):
            raise CliError(f"cannot read config {args.config}")
        if not cp.has_section("sim"):
            raise CliError("config file needs a [sim] section")
        for key, raw in cp.items("sim"):
            if key not in settings:
                raise CliError(f"unknown config key {key!r}")
            settings[key] = SIM_TYPES.get(key, str)(raw)
    for key in settings:
        val = getattr(args, key, None)
        if val is not None:
            settings[key] = val
    return settings


def cmd_sim(args):
    s = _sim_settings(args)
    ns = argparse.Namespace(field=s["field"], m=s["m"], poly=s["poly"], n=s["n"], k=s["k"])
    code = _code(ns)
    channel = harq.ChannelModel(s["p"], s["seed"])
    strategies = harq.STRATEGIES if s["strategy"] == "all" else (s["strategy"],)
    for name in strategies:
        if name not in harq.STRATEGIES:
            raise CliError(f"unknown strategy {name!r}")
    results = harq.compare_strategies(code, channel, s["trials"], s["max_rounds"], strategies)
    table = harq.stats_csv(results, channel, s["max_rounds"])
    text = harq.summary(results, code, channel, s["max_rounds"])
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(table)
        sys.stdout.write(text)
    else:
        sys.stdout.write(table + "\n" + text)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="rserasure",
                                     description="Erasure-only Reed-Solomon codec over GF(2^m).")
    sub = parser.add_subparsers(dest="command", required=True)

    gf = sub.add_parser("gf", help="field arithmetic")
    gf_sub = gf.add_subparsers(dest="op", required=True)
    for name, operands, help_ in (("mul", ("a", "b"), "product a*b"),
                                  ("inv", ("a",), "multiplicative inverse"),
                                  ("cost", (), "XOR-term cost estimate of the matrix multiplier"),
                                  ("check-primitive", (), "test whether x generates the field")):
        p = gf_sub.add_parser(name, help=help_)
        _add_field_args(p)
        for op in operands:
            p.add_argument(op, help="field element, decimal or 0x-hex")
        p.set_defaults(func=cmd_gf)

    rs = sub.add_parser("rs", help="encode or decode symbol files")
    rs_sub = rs.add_subparsers(dest="op", required=True)
    for name in ("encode", "decode"):
        p = rs_sub.add_parser(name, help=f"{name} one codeword")
        _add_field_args(p)
        p.add_argument("--n", type=int, default=200, help="codeword length (default 200)")
        p.add_argument("--k", type=int, default=136, help="data length (default 136)")
        p.add_argument("--format", choices=fileformats.FORMATS, default="hex",
                       help="symbol file format (default hex)")
        p.add_argument("input", help="data file" if name == "encode" else "received codeword file")
        p.add_argument("-o", "--out", required=True,
                       help="codeword file" if name == "encode" else "recovered data file")
        if name == "decode":
            p.add_argument("--erasures", help="file with comma-separated erased positions")
            p.add_argument("--report", help="write the decode report here instead of stdout")
            p.add_argument("--full", action="store_true",
                           help="write the whole corrected codeword, not just the data")
        p.set_defaults(func=cmd_rs)

    pf = sub.add_parser("perf", help="decoder cycle/throughput model as CSV")
    pf.add_argument("--table3", action="store_true",
                    help="GF(2^32) RS(200,136), 64 erasures, P = 1, 2, 4, 8")
    pf.add_argument("--resources", action="store_true",
                    help="append the reference FPGA resource figures")
    pf.add_argument("--data-bits", type=_int_list, help="comma-separated data lengths in bits")
    pf.add_argument("--erasures", type=_int_list, default=[0],
                    help="comma-separated maximum erasure counts")
    pf.add_argument("--m", type=int, default=32, help="symbol width (default 32)")
    pf.add_argument("--parallel", "-P", type=int, default=1, help="parallel multipliers")
    pf.add_argument("--clock", type=float, default=100e6, help="clock in Hz (default 100e6)")
    pf.add_argument("-o", "--out", help="write CSV here instead of stdout")
    pf.set_defaults(func=cmd_perf)

    sm = sub.add_parser("sim", help="hybrid-ARQ Monte-Carlo comparison")
    sm.add_argument("--config", help="INI file with a [sim] section; flags override it")
    _add_field_args(sm)
    sm.add_argument("--n", type=int)
    sm.add_argument("--k", type=int)
    sm.add_argument("--p", type=float, help="packet loss probability")
    sm.add_argument("--strategy", help="fec_only, arq_only, hybrid or all")
    sm.add_argument("--trials", type=int)
    sm.add_argument("--seed", type=int)
    sm.add_argument("--max-rounds", type=int, dest="max_rounds")
    sm.add_argument("-o", "--out", help="write CSV here; summary still goes to stdout")
    sm.set_defaults(func=cmd_sim)
    return parser


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UncorrectableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNCORRECTABLE
    except (CliError, ValueError, ZeroDivisionError, DecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
