"""Command-line interface.

Subcommands: analyze, train-discourse, eval-discourse, serve.
Exit codes: 0 success, 1 usage error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .discourse import (
    DiscourseModel,
    TIE_ORDER,
    evaluate,
    load_corpus,
    train,
)
from .errors import SirenlessError
from .pipeline import AnalyzeConfig, analyze, canonical_json
from .server import serve as run_server
from .store import AnalysisStore

DATA_DIR_ENV = "SIRENLESS_DATA"
DEFAULT_DATA_DIR = "sirenless-data"


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the CLI contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sirenless", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze one article file")
    p_analyze.add_argument("file", help="UTF-8 plain-text article")
    p_analyze.add_argument("--format", choices=["json", "summary"], default="summary")
    p_analyze.add_argument("--seed", type=int, default=0)
    p_analyze.add_argument("--topics", type=int, default=3, metavar="K")
    p_analyze.add_argument("--title", default=None)
    p_analyze.add_argument("--model", default=None, help="discourse model JSON")
    p_analyze.add_argument("--out", default=None, help="write output here instead of stdout")

    p_train = sub.add_parser("train-discourse", help="train the discourse model")
    p_train.add_argument("corpus", help="labeled JSONL corpus")
    p_train.add_argument("--out", required=True, help="model JSON output path")
    p_train.add_argument("--seed", type=int, default=0)
    p_train.add_argument("--epochs", type=int, default=10)

    p_eval = sub.add_parser("eval-discourse", help="evaluate a model on a corpus")
    p_eval.add_argument("model", help="model JSON path")
    p_eval.add_argument("corpus", help="labeled JSONL corpus")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=8750)
    p_serve.add_argument("--data", default=None, help="analysis store directory")
    p_serve.add_argument("--static", default=None, help="UI bundle directory")
    p_serve.add_argument("--bind", default="127.0.0.1")

    return parser


def _format_summary(result: dict) -> str:
    summary = result["summary"]
    stats = result["stats"]
    lines = [
        f"Writing Style: {summary['writing_style']['level']} "
        f"(grade {summary['writing_style']['grade']:.3f})",
        f"Sentiment: {summary['sentiment']} "
        f"(article polarity {stats['article_polarity']:+.3f})",
        f"Readability: {summary['readability']} "
        f"(reading ease {stats['flesch_score']:.1f})",
        f"Reliability: {summary['reliability']['level']} "
        f"(grade {summary['reliability']['grade']:.1f})",
    ]
    if result["patterns"]:
        lines.append("Findings:")
        for finding in result["patterns"]:
            lines.append(f"  [{finding['severity']}] {finding['kind']}: {finding['detail']}")
    else:
        lines.append("Findings: none")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args) -> int:
    try:
        with open(args.file, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        print(f"sirenless: cannot read {args.file}: {exc}", file=sys.stderr)
        return 2
    config = AnalyzeConfig(seed=args.seed, topics_k=args.topics, model_path=args.model)
    result = analyze(raw, title=args.title, config=config)
    output = canonical_json(result) if args.format == "json" else _format_summary(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return 0


def _cmd_train(args) -> int:
    corpus = load_corpus(args.corpus)
    model = train(corpus, epochs=args.epochs, seed=args.seed)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(model.to_json(), fh, ensure_ascii=False, indent=1)
        fh.write("\n")
    print(f"trained on {len(corpus)} sentences -> {args.out}")
    return 0


def _cmd_eval(args) -> int:
    with open(args.model, encoding="utf-8") as fh:
        model = DiscourseModel.from_json(json.load(fh))
    corpus = load_corpus(args.corpus)
    report = evaluate(model, corpus)
    for mode in TIE_ORDER:
        row = report.per_class[mode]
        flag = "  (absent from gold)" if mode in report.absent_classes else ""
        print(
            f"{mode.value:<12} precision {row['precision']:.3f}  "
            f"recall {row['recall']:.3f}  f1 {row['f1']:.3f}{flag}"
        )
    print(f"macro-F1 {report.macro_f1:.3f}  accuracy {report.accuracy:.3f}")
    return 0


def _cmd_serve(args) -> int:
    data_dir = args.data or os.environ.get(DATA_DIR_ENV) or DEFAULT_DATA_DIR
    store = AnalysisStore(data_dir)
    run_server(args.port, store, static_dir=args.static, bind=args.bind)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "train-discourse": _cmd_train,
        "eval-discourse": _cmd_eval,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except SirenlessError as exc:
        print(f"sirenless: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"sirenless: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
