"""Command-line entry points: ``zeta``, ``verify`` and ``partition``.

Exit codes: 0 pass, 1 verification mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .digraph import arc_partition
from .ihara import IharaConsistencyError, ihara_data, ihara_inverse_zeta, verify_theorem
from .io import (
    PRESETS,
    SpecError,
    apply_fault,
    load_spec,
    matrix_strs,
    poly_coeffs,
    random_weights,
    series_coeffs,
)
from .zeta import (
    DEFAULT_ORDER,
    OracleLimitError,
    enumerate_prime_cycles,
    euler_expression,
    exponential_expression,
    hashimoto_inverse_zeta,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _emit(obj, fmt: str, text_lines, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        stream.write("\n".join(text_lines) + "\n")


def _load(args, need_weights=True):
    spec = load_spec(args.spec, args.preset, args.mode_override)
    if need_weights and spec.weights is None:
        raise SpecError("weight", "no weights given and no preset selected")
    return spec


def cmd_zeta(args, out) -> int:
    spec = _load(args)
    dg, w = spec.digraph, spec.weights
    expr, K = args.expr, args.order
    obj = {"expr": expr, "mode": dg.mode}
    if expr == "hashimoto":
        obj["coefficients"] = poly_coeffs(hashimoto_inverse_zeta(dg, w))
    elif expr == "ihara":
        data = ihara_data(dg, w)
        obj["coefficients"] = poly_coeffs(ihara_inverse_zeta(dg, w, data=data).num)
        obj["detT"] = poly_coeffs(data.detT)
    elif expr == "exp":
        obj["order"] = K
        obj["coefficients"] = series_coeffs(exponential_expression(dg, w, K))
    else:
        obj["order"] = K
        obj["coefficients"] = series_coeffs(euler_expression(dg, w, K))
    lines = [", ".join(obj["coefficients"])]
    if "detT" in obj:
        lines.append("detT: " + ", ".join(obj["detT"]))
    _emit(obj, args.out, lines, out)
    return EXIT_OK


def _run_report(dg, w, K, fault, dump, cycles=None):
    rep = verify_theorem(dg, w, K, ihara_weights=apply_fault(w, fault) if fault else None, cycles=cycles)
    obj = {
        "hashimoto": poly_coeffs(rep.hashimoto),
        "ihara": {
            "coefficients": poly_coeffs(rep.ihara.num) if rep.ihara is not None else None,
            "detT": poly_coeffs(rep.detT),
        },
        "series": {"order": K, "exponential": series_coeffs(rep.exponential), "euler": series_coeffs(rep.euler)},
        "agreement": {
            "ihara": rep.ihara_equal,
            "exponential": "exponential" not in rep.first_divergence,
            "euler": "euler" not in rep.first_divergence,
            "first_divergence": rep.first_divergence,
        },
        "passed": rep.passed,
    }
    if dump:
        obj["matrices"] = {"A": matrix_strs(rep.data.A), "D": matrix_strs(rep.data.D), "X": matrix_strs(rep.data.X)}
    return obj


def _report_lines(obj, label):
    ag = obj["agreement"]
    status = "PASS" if obj["passed"] else "FAIL"
    lines = [f"[{status}] {label}"]
    lines.append("  hashimoto: " + ", ".join(obj["hashimoto"]))
    ih = obj["ihara"]["coefficients"]
    lines.append("  ihara:     " + (", ".join(ih) if ih else "<not a polynomial>"))
    lines.append("  detT:      " + ", ".join(obj["ihara"]["detT"]))
    lines.append(f"  agree: ihara={ag['ihara']} exponential={ag['exponential']} euler={ag['euler']}")
    if ag["first_divergence"]:
        lines.append("  first divergence: " + ", ".join(f"{k} at t^{v}" for k, v in sorted(ag["first_divergence"].items())))
    for name, M in obj.get("matrices", {}).items():
        lines.append(f"  {name}:")
        lines += ["    [" + ", ".join(r) + "]" for r in M]
    return lines


def cmd_verify(args, out) -> int:
    spec = _load(args, need_weights=args.seeds is None)
    dg, K = spec.digraph, args.order
    runs = []
    if args.seeds is None:
        runs.append((None, _run_report(dg, spec.weights, K, spec.fault, args.dump_matrices)))
    else:
        # prime cycles depend only on the digraph; enumerate once for all seeds
        cycles = enumerate_prime_cycles(dg, K) if K >= 1 else []
        for s in range(args.seed, args.seed + args.seeds):
            w = random_weights(dg.arc_count, s, args.complex)
            runs.append((s, _run_report(dg, w, K, spec.fault, args.dump_matrices, cycles)))
    passed = all(r["passed"] for _, r in runs)
    obj = {"mode": dg.mode, "order": K, "passed": passed, "runs": [dict(r, seed=s) for s, r in runs]}
    lines = []
    for s, r in runs:
        lines += _report_lines(r, "file weights" if s is None else f"seed {s}")
    lines.append(f"{sum(r['passed'] for _, r in runs)}/{len(runs)} runs passed")
    _emit(obj, args.out, lines, out)
    return EXIT_OK if passed else EXIT_MISMATCH


def cmd_partition(args, out) -> int:
    spec = _load(args, need_weights=False)
    dg, labels = spec.digraph, spec.labels
    p = arc_partition(dg)
    name = lambda ids: [labels[a] for a in ids]  # noqa: E731
    obj = {
        "mode": dg.mode,
        "phi": [list(x) for x in p.phi],
        "representatives": {f"{u},{v}": name(r) for (u, v), r in p.representatives.items()},
        "blocks": [
            {"pair": list(b.pair), "representative": labels[b.representative], "bracket": name(b.bracket),
             "inverse": name(b.inverse), "arcs": name(b.arcs)}
            for b in p.blocks
        ],
        "arc_order": name(p.arc_order),
    }
    lines = [f"mode: {dg.mode}", "phi: " + ", ".join(f"(v{u + 1},v{v + 1})" for u, v in p.phi)]
    for b in obj["blocks"]:
        u, v = b["pair"]
        lines.append(f"  (v{u + 1},v{v + 1}) B={b['representative']}: arc({b['representative']}) = "
                     f"{{{', '.join(b['arcs'])}}}")
    _emit(obj, args.out, lines, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ihara-zeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("spec", help="graph spec JSON file")
        p.add_argument("--preset", choices=PRESETS, help="replace file weights by a preset")
        p.add_argument("--mode-override", choices=("general", "symmetric"), dest="mode_override")
        p.add_argument("--out", choices=("text", "json"), default="text")
        p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="series truncation order K")

    z = sub.add_parser("zeta", help="compute one expression of the zeta function")
    common(z)
    z.add_argument("--expr", choices=("hashimoto", "ihara", "exp", "euler"), default="hashimoto")
    z.set_defaults(func=cmd_zeta)

    v = sub.add_parser("verify", help="check all four expressions agree")
    common(v)
    v.add_argument("--seeds", type=int, help="draw weights for this many consecutive seeds")
    v.add_argument("--seed", type=int, default=0, help="first seed (default 0)")
    v.add_argument("--complex", action="store_true", help="draw Gaussian-rational weights")
    v.add_argument("--dump-matrices", action="store_true", dest="dump_matrices")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("partition", help="show Phi, B(u,v) and the arc blocks")
    common(p)
    p.set_defaults(func=cmd_partition)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if args.order < 0:
        err.write("error[parse]: --order must be non-negative\n")
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except SpecError as e:
        err.write(f"error[{e.kind}]: {e}\n")
        return EXIT_INPUT
    except OracleLimitError as e:
        err.write(f"error[oracle]: {e}\n")
        return EXIT_INPUT
    except IharaConsistencyError as e:
        err.write(f"error[mismatch]: {e}\n")
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
