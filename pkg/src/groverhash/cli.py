"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 digest mismatch, 3 no preimage exists.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import IO, Optional, Sequence

from .estimate import AXES, estimate_grover, sweep, write_csv, write_json
from .exceptions import GroverHashError, NoTargetExists, RetriesExhausted
from .oracles.core import simulate_hash
from .oracles.padding import input_to_message, message_to_input
from .refhash import classical_hash
from .sim.semantic import MAX_INPUT_BITS, grover_search, run_trials
from .specs import HASH_NAMES, get_spec

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_NO_TARGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    function: str
    input_bits: Optional[int] = None
    target_digest: Optional[str] = None
    targets: int = 1
    seed: Optional[int] = None
    model: str = "unit"
    fmt: str = "table"
    out: Optional[str] = None

    def __post_init__(self):
        if self.function not in HASH_NAMES:
            raise UsageError(f"unknown hash {self.function!r}; choose from {', '.join(HASH_NAMES)}")


def _parse_int(text: str) -> int:
    return int(text, 0)


def _parse_hex(text: str) -> bytes:
    t = text.strip().lower()
    if t.startswith("0x"):
        t = t[2:]
    try:
        return bytes.fromhex(t)
    except ValueError:
        raise UsageError(f"not a hex string: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="groverhash", description="Reversible hash oracles, Grover search and resource estimates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("digest", help="hash a message with the simulated circuit")
    d.add_argument("--hash", required=True, dest="function")
    msg = d.add_mutually_exclusive_group(required=True)
    msg.add_argument("--ascii")
    msg.add_argument("--hex")
    d.add_argument("--bits", type=int, help="message length in bits (default: all bytes)")
    d.add_argument("--expect", help="expected digest in hex; exit 2 on mismatch")
    d.add_argument("--reference", action="store_true", help="also print the classical digest")
    d.add_argument("--format", dest="fmt", choices=("table", "json"), default="table")

    g = sub.add_parser("grover", help="run a simulated preimage search")
    g.add_argument("--hash", required=True, dest="function")
    g.add_argument("--input-bits", type=int, required=True)
    tgt = g.add_mutually_exclusive_group(required=True)
    tgt.add_argument("--target", help="target digest in hex")
    tgt.add_argument("--plant-preimage", type=_parse_int, help="use the digest of this input as target")
    g.add_argument("--targets", type=int, help="target-count hint for the iteration count")
    g.add_argument("--match-bits", type=int, help="compare only this many leading digest bits")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--trials", type=int, default=0, help="also measure the empirical success rate")
    g.add_argument("--format", dest="fmt", choices=("table", "json"), default="table")

    e = sub.add_parser("estimate", help="resource estimate of a full search")
    e.add_argument("--hash", required=True, dest="function")
    e.add_argument("--input-bits", type=int, default=16)
    e.add_argument("--targets", type=int, default=1)
    e.add_argument("--model", choices=("unit", "ladder"), default="unit")
    e.add_argument("--format", dest="fmt", choices=("table", "json", "csv"), default="table")
    e.add_argument("--out")

    s = sub.add_parser("sweep", help="estimates along one axis")
    s.add_argument("--axis", required=True, choices=[a.replace("_", "-") for a in AXES])
    s.add_argument("--values", help="comma-separated axis values (default for function axis: all)")
    s.add_argument("--hash", dest="function", default="md5")
    s.add_argument("--input-bits", type=int, default=16)
    s.add_argument("--targets", type=int, default=1)
    s.add_argument("--model", choices=("unit", "ladder"), default="unit")
    s.add_argument("--format", dest="fmt", choices=("table", "json", "csv"), default="table")
    s.add_argument("--out")
    s.add_argument("--workers", type=int, default=1)
    return p


def _table(rows: Sequence[dict], fh: IO[str]) -> None:
    if not rows:
        return
    cols = [c for c in rows[0] if any(r[c] is not None for r in rows)]
    cells = [[("" if r[c] is None else f"{r[c]:.6f}" if isinstance(r[c], float) else str(r[c])) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    fh.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
    for row in cells:
        fh.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def cmd_digest(args, out: IO[str]) -> int:
    RunConfig("digest", args.function, fmt=args.fmt)
    spec = get_spec(args.function)
    data = args.ascii.encode() if args.ascii is not None else _parse_hex(args.hex)
    nbits = 8 * len(data) if args.bits is None else args.bits
    if not 0 <= nbits <= 8 * len(data):
        raise UsageError(f"--bits must be between 0 and {8 * len(data)}")
    x = message_to_input(data, nbits, spec)
    digest = simulate_hash(spec, [x], nbits)[0]
    result = {"function": spec.name, "bits": nbits, "digest": digest.hex()}
    if args.reference:
        result["reference"] = classical_hash(spec, input_to_message(x, nbits, spec), nbits).hex()
    status = EXIT_OK
    if args.expect is not None:
        ok = _parse_hex(args.expect) == digest
        result["match"] = ok
        status = EXIT_OK if ok else EXIT_MISMATCH
    if args.fmt == "json":
        out.write(json.dumps(result) + "\n")
    else:
        out.write(digest.hex() + "\n")
        if args.reference:
            out.write(f"reference {result['reference']}\n")
        if args.expect is not None:
            out.write("match\n" if result["match"] else f"MISMATCH expected {args.expect}\n")
    return status


def cmd_grover(args, out: IO[str]) -> int:
    RunConfig("grover", args.function, args.input_bits, args.target, args.targets or 1, args.seed, fmt=args.fmt)
    spec = get_spec(args.function)
    n = args.input_bits
    if not 1 <= n <= MAX_INPUT_BITS:
        raise UsageError(f"--input-bits must be between 1 and {MAX_INPUT_BITS}")
    if args.target is not None:
        digest = _parse_hex(args.target)
        if len(digest) * 8 != spec.digest_bits:
            raise UsageError(f"{spec.name} digests have {spec.digest_bits // 4} hex digits")
    else:
        if not 0 <= args.plant_preimage < (1 << n):
            raise UsageError(f"planted preimage does not fit in {n} bits")
        digest = classical_hash(spec, input_to_message(args.plant_preimage, n, spec), n)
    if args.match_bits is not None and not 1 <= args.match_bits <= spec.digest_bits:
        raise UsageError("--match-bits out of range")
    res = grover_search(spec, n, digest, args.targets, args.seed, match_bits=args.match_bits)
    result = {
        "function": spec.name,
        "input_bits": n,
        "target_digest": digest.hex(),
        "measured": res.measured,
        "measured_hex": f"{res.measured:#x}",
        "attempts": res.attempts,
        "iterations": res.iterations,
        "targets": res.targets,
        "predicted_success": res.predicted,
        "seed": args.seed,
    }
    if args.trials:
        result["trials"] = args.trials
        result["empirical_success"] = run_trials(spec, n, digest, args.trials, args.seed, args.match_bits)
    if args.fmt == "json":
        out.write(json.dumps(result) + "\n")
    else:
        for k, v in result.items():
            out.write(f"{k:18} {v:.6f}\n" if isinstance(v, float) else f"{k:18} {v}\n")
    return EXIT_OK


def _emit_reports(reports, fmt: str, path: Optional[str], out: IO[str], extra: Optional[dict] = None) -> None:
    fh = open(path, "w", newline="") if path else out
    try:
        if fmt == "csv":
            write_csv(reports, fh)
        elif fmt == "json":
            write_json(reports, fh)
            if extra:
                fh.write(json.dumps(extra) + "\n")
        else:
            _table([r.as_row() for r in reports], fh)
            for k, v in (extra or {}).items():
                fh.write(f"{k} {v:.6f}\n" if isinstance(v, float) else f"{k} {v}\n")
    finally:
        if path:
            fh.close()


def cmd_estimate(args, out: IO[str]) -> int:
    RunConfig("estimate", args.function, args.input_bits, targets=args.targets, model=args.model, fmt=args.fmt, out=args.out)
    if args.input_bits < 1:
        raise UsageError("--input-bits must be positive")
    rep = estimate_grover(args.function, args.input_bits, args.targets, args.model)
    _emit_reports([rep], args.fmt, args.out, out)
    return EXIT_OK


def cmd_sweep(args, out: IO[str]) -> int:
    axis = args.axis.replace("-", "_")
    RunConfig("sweep", args.function, args.input_bits, targets=args.targets, model=args.model, fmt=args.fmt, out=args.out)
    if args.values:
        raw = [v.strip() for v in args.values.split(",") if v.strip()]
    elif axis == "function":
        raw = list(HASH_NAMES)
    else:
        raise UsageError("--values is required for this axis")
    if axis == "function":
        for v in raw:
            RunConfig("sweep", v)
        values = raw
    else:
        try:
            values = [int(v, 0) for v in raw]
        except ValueError:
            raise UsageError(f"non-integer value in {args.values!r}") from None
    res = sweep(
        axis,
        values,
        function=args.function,
        input_bits=args.input_bits,
        targets=args.targets,
        model=args.model,
        workers=args.workers,
    )
    extra = {f"fit_{k}": v for k, v in res.fit.items()}
    _emit_reports(res.rows, args.fmt, args.out, out, extra if args.fmt != "csv" else None)
    return EXIT_OK


COMMANDS = {"digest": cmd_digest, "grover": cmd_grover, "estimate": cmd_estimate, "sweep": cmd_sweep}


def main(argv: Optional[Sequence[str]] = None, out: Optional[IO[str]] = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoTargetExists as exc:
        print(f"NoTargetExists: {exc}", file=sys.stderr)
        return EXIT_NO_TARGET
    except RetriesExhausted as exc:
        print(f"RetriesExhausted: {exc}", file=sys.stderr)
        return EXIT_NO_TARGET
    except (GroverHashError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
