"""Command line: parse, tree, compile, eval, refute.

Exit codes: 0 success (or countermodel found), 1 refutation search
exhausted, 2 syntax or usage error, 3 capacity exceeded, 4 model error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import lang, qcore, qtree, semantics, syntree
from .errors import CapacityExceeded, ModelError, ParseError, UnboundAtom

HARD_N_MAX = 28
AMP_DUMP_N_MAX = 12


def _sig(x: float) -> str:
    return f"{x:.12g}"


def _fmt_complex(c: complex) -> str:
    return f"{c.real:.12g}{c.imag:+.12g}i"


def _amps_json(psi: qcore.QRegister) -> list[list[float]]:
    return [[float(c.real), float(c.imag)] for c in psi.amps]


def _amp_lines(psi: qcore.QRegister) -> list[str]:
    return [
        f"  |{idx:0{psi.n}b}> {_fmt_complex(c)}"
        for idx, c in enumerate(psi.amps)
    ]


def _emit_json(obj: object) -> None:
    print(json.dumps(obj, indent=2))


def _gate_text(gate: qcore.GateTag) -> str:
    if isinstance(gate, qcore.Identity1):
        return "I"
    if isinstance(gate, qcore.Not):
        return f"NOT({gate.r})"
    if isinstance(gate, qcore.SqrtNot):
        return f"SNOT({gate.r})"
    return f"T({gate.r},{gate.s})"


def cmd_parse(args: argparse.Namespace) -> int:
    s = lang.parse(args.sentence)
    if args.json:
        _emit_json(
            {
                "ast": lang.sentence_to_json(s),
                "pretty": lang.pretty(s),
                "atcompl": lang.atomic_complexity(s),
            }
        )
    else:
        print(lang.ast_text(s))
        print(f"Atcompl: {lang.atomic_complexity(s)}")
    return 0


def cmd_tree(args: argparse.Namespace) -> int:
    tree = syntree.build_tree(lang.parse(args.sentence))
    if args.json:
        _emit_json(
            {
                "levels": [[lang.pretty(node) for node in lv] for lv in tree.levels],
                "height": tree.height,
            }
        )
    else:
        print(syntree.render_tree(tree))
        print(f"Height: {tree.height}")
    return 0


def cmd_compile(args: argparse.Namespace) -> int:
    qt = qtree.compile_tree(syntree.build_tree(lang.parse(args.sentence)))
    if args.json:
        _emit_json(qtree.circuit_to_json(qt))
    else:
        print(f"n: {qt.n}")
        for i, layer in enumerate(qt.layers, start=1):
            print(f"U{i}: " + " ⊗ ".join(_gate_text(g) for g in layer.ops))
    return 0


def _load_model(path: str | None) -> semantics.QubModel:
    if path is None:
        return semantics.EMPTY_MODEL
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ModelError(f"cannot read model file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ModelError(f"model file is not valid JSON: {exc}") from exc
    return semantics.model_from_json(data)


def cmd_eval(args: argparse.Namespace) -> int:
    s = lang.parse(args.sentence)
    if args.amplitudes and lang.atomic_complexity(s) > AMP_DUMP_N_MAX:
        print(
            f"error: --amplitudes is limited to n <= {AMP_DUMP_N_MAX}, "
            f"got n={lang.atomic_complexity(s)}",
            file=sys.stderr,
        )
        return 2
    m = _load_model(args.model)
    value = semantics.evaluate(s, m)
    p = qcore.prob(value)
    truth = abs(p - 1.0) <= qcore.EPS_PROB

    tree = syntree.build_tree(s)
    qt = qtree.compile_tree(tree)
    trace = qtree.run_with_trace(qt, qtree.input_state(tree, m))
    deviation = float(max(abs(trace[-1].amps - value.amps)))

    if args.json:
        out: dict = {
            "sentence": lang.pretty(s),
            "n": value.n,
            "prob": p,
            "true": truth,
            "max_deviation": deviation,
        }
        if args.trace:
            entries = []
            for i, state in enumerate(trace):
                entry: dict = {"level": tree.height - i, "prob": qcore.prob(state)}
                if args.amplitudes:
                    entry["amps"] = _amps_json(state)
                entries.append(entry)
            out["trace"] = entries
        if args.amplitudes:
            out["amplitudes"] = _amps_json(value)
        _emit_json(out)
    else:
        print(f"Prob: {_sig(p)}")
        print(f"True: {'yes' if truth else 'no'}")
        print(f"Circuit vs recursive eval, max deviation: {_sig(deviation)}")
        if args.trace:
            print("Trace:")
            for i, state in enumerate(trace):
                print(f"  L{tree.height - i}: Prob {_sig(qcore.prob(state))}")
                if args.amplitudes:
                    for line in _amp_lines(state):
                        print(f"  {line}")
        elif args.amplitudes:
            print("Amplitudes:")
            for line in _amp_lines(value):
                print(line)
    return 0


def cmd_refute(args: argparse.Namespace) -> int:
    a = lang.parse(args.sentence)
    b = lang.parse(args.then) if args.then is not None else None
    sampler = semantics.ModelSampler(seed=args.seed, delta=args.delta)
    found = semantics.search_countermodel(a, b, trials=args.trials, sampler=sampler)

    if found is None:
        if args.json:
            _emit_json({"found": False, "trials": args.trials})
        else:
            print(f"no countermodel in {args.trials} trials")
        return 1

    p = qcore.prob(semantics.evaluate(a, found))
    q = qcore.prob(semantics.evaluate(b, found)) if b is not None else None
    if args.json:
        out = {
            "found": True,
            "trials": args.trials,
            "model": semantics.model_to_json(found),
            "prob": p,
        }
        if q is not None:
            out["prob_then"] = q
        _emit_json(out)
    else:
        print("Countermodel found")
        print(json.dumps(semantics.model_to_json(found)))
        print(f"Prob({lang.pretty(a)}) = {_sig(p)}")
        if b is not None:
            print(f"Prob({lang.pretty(b)}) = {_sig(q)}")
    return 0


def _trials_arg(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("trials must be at least 1")
    return v


def _delta_arg(text: str) -> float:
    v = float(text)
    if not 0.0 <= v < 0.25:
        raise argparse.ArgumentTypeError("delta must lie in [0, 0.25)")
    return v


def _n_max_arg(text: str) -> int:
    v = int(text)
    if not 1 <= v <= HARD_N_MAX:
        raise argparse.ArgumentTypeError(f"n-max must lie in [1, {HARD_N_MAX}]")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qct",
        description="Sentences as quantum circuits: parse, compile, evaluate, refute.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument(
            "--n-max",
            type=_n_max_arg,
            default=None,
            help=f"qubit capacity override, at most {HARD_N_MAX} (env: QCT_N_MAX)",
        )

    sp = sub.add_parser("parse", help="desugared AST and atomic complexity")
    sp.add_argument("sentence")
    common(sp)
    sp.set_defaults(func=cmd_parse)

    sp = sub.add_parser("tree", help="levels of the syntactic tree")
    sp.add_argument("sentence")
    common(sp)
    sp.set_defaults(func=cmd_tree)

    sp = sub.add_parser("compile", help="gate layers of the compiled circuit")
    sp.add_argument("sentence")
    common(sp)
    sp.set_defaults(func=cmd_compile)

    sp = sub.add_parser("eval", help="probability and truth under a model")
    sp.add_argument("sentence")
    sp.add_argument("--model", help="model JSON file", default=None)
    sp.add_argument("--trace", action="store_true", help="per-level probabilities")
    sp.add_argument(
        "--amplitudes",
        action="store_true",
        help=f"dump amplitudes (n <= {AMP_DUMP_N_MAX} only)",
    )
    common(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("refute", help="search for a countermodel")
    sp.add_argument("sentence")
    sp.add_argument("--then", default=None, help="consequent sentence")
    sp.add_argument("--trials", type=_trials_arg, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--delta", type=_delta_arg, default=0.0)
    common(sp)
    sp.set_defaults(func=cmd_refute)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    n_max = args.n_max
    if n_max is None and "QCT_N_MAX" in os.environ:
        try:
            n_max = _n_max_arg(os.environ["QCT_N_MAX"])
        except (ValueError, argparse.ArgumentTypeError) as exc:
            print(f"error: QCT_N_MAX: {exc}", file=sys.stderr)
            return 2
    # main() is importable; a capacity override must not outlive the call.
    saved_n_max = qcore.n_max()
    if n_max is not None:
        qcore.set_n_max(n_max)

    try:
        return args.func(args)
    except ParseError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except CapacityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UnboundAtom, ModelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    finally:
        qcore.set_n_max(saved_n_max)


if __name__ == "__main__":
    sys.exit(main())
