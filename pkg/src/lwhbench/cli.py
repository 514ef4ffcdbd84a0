"""``lwhbench`` command line: hash, kat, bench, mem, energy, rank, report.

Exit codes: 0 success, 1 verification failure (KAT mismatch), 2 usage or
parse error. Numeric output is printed with 6 significant digits.
"""

import argparse
import json
import sys
from pathlib import Path

from . import __version__, energymodel, hashkit, memfoot, metrics, profiler
from .errors import LWHBenchError
from .hashkit import kat as katmod

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

ALL_IMPLEMENTED = "all-implemented"


class UsageError(Exception):
    pass


def _emit(text, out_path):
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _specs(selectors):
    ids = []
    for sel in selectors:
        if sel == ALL_IMPLEMENTED:
            ids.extend(hashkit.implemented_ids())
        else:
            ids.append(hashkit.get_spec(sel).id)
    return list(dict.fromkeys(ids))


def cmd_hash(args):
    spec = hashkit.get_spec(args.spec)
    if args.input and args.input != "-":
        data = Path(args.input).read_bytes()
    else:
        data = sys.stdin.buffer.read()
    print(hashkit.hash(spec.id, data).hex())
    return EXIT_OK


def cmd_kat(args):
    spec = hashkit.get_spec(args.spec)
    vectors = katmod.load_kat(args.file)
    failures = katmod.check_kat(spec.id, vectors)
    for v in failures:
        print(f"FAIL Count = {v.count} (line {v.line})")
    passed = len(vectors) - len(failures)
    print(f"{spec.id}: {passed}/{len(vectors)} passed")
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_bench(args):
    if args.source == "scripted":
        if not args.cycles:
            raise UsageError("--source scripted needs --cycles N[,N...]")
        try:
            script = [int(c) for c in args.cycles.split(",")]
        except ValueError:
            raise UsageError(f"--cycles must be comma-separated integers, got {args.cycles!r}")
        make_source = lambda: profiler.CycleSource.scripted(script)
    else:
        kind = {"host": profiler.SourceKind.HOST_COUNTER,
                "monotonic": profiler.SourceKind.MONOTONIC_CLOCK_SCALED}[args.source]
        make_source = lambda: profiler.CycleSource(kind, frequency_hz=args.clk)
    results = [profiler.measure_cpb(s, args.len, args.reps, make_source())
               for s in _specs(args.spec)]
    if args.format == "json":
        text = json.dumps([
            {"spec_id": r.spec_id, "message_len": r.message_len_bytes,
             "repetitions": r.repetitions, "cpb_median": float(profiler.fmt(r.cpb_median)),
             "cpb_mad": float(profiler.fmt(r.cpb_mad)), "source": r.source}
            for r in results
        ], indent=2) + "\n"
    else:
        text = profiler.results_to_csv(results)
    _emit(text, args.out)
    return EXIT_OK


def cmd_mem(args):
    fp = memfoot.footprint_from_files(args.map, args.su, args.callgraph)
    if args.format == "json":
        row = dict(zip(memfoot.CSV_HEADER, memfoot.footprint_row(args.spec_id, fp)))
        row["stack_policy"] = fp.stack_policy
        row["provenance"] = fp.provenance
        text = json.dumps(row, indent=2) + "\n"
    else:
        text = memfoot.footprints_to_csv([(args.spec_id, fp)])
    _emit(text, args.out)
    return EXIT_OK


def _capture_config(args):
    kw = dict(v_adc_ref=args.vref, r_shunt=args.shunt, v_sup=args.vsup, f_clk=args.clk)
    if args.gain_db is not None:
        return energymodel.CaptureConfig.with_gain_db(args.gain_db, **kw)
    return energymodel.CaptureConfig(gain_factor=args.gain, **kw)


def cmd_energy(args):
    if args.cycles < 0:
        raise UsageError("--cycles must be nonnegative")
    config = _capture_config(args)
    trace = energymodel.load_trace(args.trace, config)
    result = energymodel.energy(trace, args.cycles)
    d = result.as_dict()
    payload = {k: (v if k == "n_samples" else float(format(v, ".6g"))) for k, v in d.items()}
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def _load_records(args):
    if args.paper:
        if args.inputs:
            raise UsageError("--paper cannot be combined with measurement files")
        return metrics.paper_records(), metrics.published_erank()
    if not args.inputs:
        raise UsageError("no input records: pass measurement CSV files or --paper")
    merged = {}
    for path in args.inputs:
        for rec in metrics.records_from_csv(Path(path).read_text(), path=path):
            key = hashkit.canonical_id(rec.spec_id)
            merged[key] = merged[key].merged(rec) if key in merged else rec
    if not merged:
        raise UsageError("input files contain no records")
    return list(merged.values()), {}


def _report(args):
    records, published = _load_records(args)
    variant = metrics.LOG_PRINTED if args.log_variant == "printed" else metrics.LOG_RATIO
    return metrics.build_report(records, active_metric=args.metric, log_variant=variant,
                                published_erank=published), records


def cmd_rank(args):
    report, _ = _report(args)
    lines = ["rank,spec_id," + args.metric]
    for i, sid in enumerate(report.ordering, 1):
        lines.append(f"{i},{sid},{metrics.report.fmt(report.row(sid).raw[args.metric])}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_report(args):
    report, records = _report(args)
    if args.compare:
        if args.format != "csv":
            raise UsageError("--compare output is CSV only")
        _emit(metrics.comparison_to_csv(metrics.compare_to_paper(records)), args.out)
        return EXIT_OK
    render = {"csv": metrics.report_to_csv, "json": metrics.report_to_json,
              "svg": metrics.report_to_svg}[args.format]
    _emit(render(report), args.out)
    return EXIT_OK


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text!r}")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="lwhbench", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"lwhbench {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    h = sub.add_parser("hash", help="hash a file or standard input")
    h.add_argument("--spec", required=True)
    h.add_argument("--in", dest="input", help="input file (default: standard input)")
    h.set_defaults(func=cmd_hash)

    k = sub.add_parser("kat", help="check a hash against an LWC KAT file")
    k.add_argument("--spec", required=True)
    k.add_argument("--file", required=True)
    k.set_defaults(func=cmd_kat)

    b = sub.add_parser("bench", help="cycles-per-byte on this host")
    b.add_argument("--spec", nargs="+", default=[ALL_IMPLEMENTED],
                   help=f"hash ids or {ALL_IMPLEMENTED}")
    b.add_argument("--len", type=_positive_int, default=profiler.DEFAULT_MESSAGE_LEN)
    b.add_argument("--reps", type=_positive_int, default=profiler.DEFAULT_REPETITIONS)
    b.add_argument("--clk", type=_positive_float, default=1e9,
                   help="cycles per second used to convert elapsed time (default 1e9)")
    b.add_argument("--source", choices=("host", "monotonic", "scripted"), default="host")
    b.add_argument("--cycles", help="comma-separated cycle counts for --source scripted")
    b.add_argument("--format", choices=("csv", "json"), default="csv")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)

    m = sub.add_parser("mem", help="RAM/ROM from a linker map and .su files")
    m.add_argument("--map", required=True)
    m.add_argument("--su", nargs="+", required=True)
    m.add_argument("--callgraph", help="'caller callee' edge list; enables path-sum stack policy")
    m.add_argument("--spec-id", default="unknown")
    m.add_argument("--format", choices=("csv", "json"), default="csv")
    m.add_argument("--out")
    m.set_defaults(func=cmd_mem)

    e = sub.add_parser("energy", help="energy of one execution from a power trace")
    e.add_argument("--trace", required=True)
    e.add_argument("--cycles", type=int, required=True)
    defaults = energymodel.DEFAULT_CONFIG
    e.add_argument("--clk", type=_positive_float, default=defaults.f_clk)
    gain = e.add_mutually_exclusive_group()
    gain.add_argument("--gain", type=_positive_float, default=defaults.gain_factor,
                      help="linear amplifier gain (default 5)")
    gain.add_argument("--gain-db", type=float, help="amplifier gain in dB, 20*log10 convention")
    e.add_argument("--shunt", type=_positive_float, default=defaults.r_shunt)
    e.add_argument("--vsup", type=_positive_float, default=defaults.v_sup)
    e.add_argument("--vref", type=_positive_float, default=defaults.v_adc_ref)
    e.add_argument("--out")
    e.set_defaults(func=cmd_energy)

    for name, func, helptext in (("rank", cmd_rank, "order functions by one metric"),
                                 ("report", cmd_report, "normalized report (csv/json/svg)")):
        r = sub.add_parser(name, help=helptext)
        r.add_argument("inputs", nargs="*", help="measurement CSV files")
        r.add_argument("--paper", action="store_true", help="use the embedded reference table")
        r.add_argument("--metric", choices=metrics.METRICS, default="erank")
        r.add_argument("--log-variant", choices=("ratio", "printed"), default="ratio")
        r.add_argument("--out")
        if name == "report":
            r.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
            r.add_argument("--compare", action="store_true",
                           help="relative deltas against the embedded reference table")
        r.set_defaults(func=func)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LWHBenchError, OSError) as exc:
        print(f"lwhbench {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
