"""Command-line interface.

One subcommand per feature plus ``datasets`` and ``models``. Results go to
stdout as JSON lines (``--format plain`` for human-readable text); anything
diagnostic goes to stderr. Exit codes: 0 success, 1 input error, 2
resource/model error.

Passing ``-`` as the text argument reads stdin, one input per line and one
output record per line (for ``similarity``, the two texts are tab-separated).
"""

import argparse
import json
import os
import sys

from . import datasets as ds
from . import model_registry as registry
from .config import ENV_HOME
from .errors import CatalogError, InputError, MahaNLPError
from .preprocess import CleanPolicy, clean
from .tasks import (
    AutoComplete,
    HateAnalyzer,
    MaskFill,
    NERTagger,
    SentimentAnalyzer,
    SimilarityScorer,
)
from .tokenizer import sentence_tokenize, word_tokenize

_INPUT_ERRORS = (InputError, CatalogError)


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit 1 (input error), not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _emit(record: dict, fmt: str, plain: str) -> None:
    if fmt == "json":
        print(json.dumps(record, ensure_ascii=False))
    else:
        print(plain)


def _inputs(text_arg: str):
    if text_arg == "-":
        for line in sys.stdin:
            line = line.rstrip("\n")
            if line.strip():
                yield line
    else:
        yield text_arg


def _for_each_input(args, process) -> int:
    """Run ``process`` per input line; input errors are reported and skipped."""
    rc = 0
    for text in _inputs(args.text):
        try:
            record, plain = process(text)
        except _INPUT_ERRORS as exc:
            print(f"error: {exc}", file=sys.stderr)
            rc = 1
            continue
        _emit(record, args.format, plain)
    return rc


def _token_record(token) -> dict:
    return {"text": token.text, "start": token.start, "end": token.end}


def _cmd_clean(args) -> int:
    policy = CleanPolicy(
        remove_urls=not args.keep_urls,
        remove_stopwords=not args.keep_stopwords,
        remove_non_devanagari=not args.keep_foreign,
        collapse_whitespace=not args.no_collapse,
    )

    def process(text):
        cleaned = clean(text, policy)
        return {"text": cleaned}, cleaned

    return _for_each_input(args, process)


def _cmd_tokenize(args) -> int:
    def process(text):
        if args.level == "sentence":
            spans = sentence_tokenize(text)
            record = {"sentences": [_token_record(s) for s in spans]}
            plain = " | ".join(s.text for s in spans)
        else:
            tokens = word_tokenize(text)
            record = {"tokens": [_token_record(t) for t in tokens]}
            plain = " ".join(t.text for t in tokens)
        return record, plain

    return _for_each_input(args, process)


def _cmd_sentiment(args) -> int:
    analyzer = SentimentAnalyzer(model_name=args.model, gpu_enabled=args.gpu)

    def process(text):
        pred = analyzer.get_sentiment(text)
        return ({"label": pred.label, "score": pred.score},
                f"{pred.label}\t{pred.score:.6f}")

    return _for_each_input(args, process)


def _cmd_hate(args) -> int:
    analyzer = HateAnalyzer(model_name=args.model, gpu_enabled=args.gpu)

    def process(text):
        pred = analyzer.get_hate(text)
        return ({"label": pred.label, "score": pred.score},
                f"{pred.label}\t{pred.score:.6f}")

    return _for_each_input(args, process)


def _cmd_ner(args) -> int:
    tagger = NERTagger(model_name=args.model, gpu_enabled=args.gpu)

    def process(text):
        tagged = tagger.get_token_labels(text)
        record = {"tokens": [dict(_token_record(t.token), label=t.label,
                                  score=t.score)
                             for t in tagged]}
        plain = " ".join(f"{t.token.text}/{t.label}" for t in tagged)
        return record, plain

    return _for_each_input(args, process)


def _cmd_autocomplete(args) -> int:
    completer = AutoComplete(model_name=args.model, gpu_enabled=args.gpu)

    def process(text):
        if args.complete_sentence:
            completed = completer.complete_sentence(text, args.max_new_words)
            return {"text": completed}, completed
        words = completer.next_word(text, args.num_words)
        return {"words": words}, " ".join(words)

    return _for_each_input(args, process)


def _cmd_maskfill(args) -> int:
    filler = MaskFill(model_name=args.model, gpu_enabled=args.gpu)

    def process(text):
        results = filler.predict_mask(text, args.top_k)
        record = {"results": [{"token_str": r.token_str, "sequence": r.sequence,
                               "score": r.score} for r in results]}
        plain = "; ".join(f"{r.token_str} ({r.score:.4f})" for r in results)
        return record, plain

    return _for_each_input(args, process)


def _cmd_similarity(args) -> int:
    scorer = SimilarityScorer(model_name=args.model, gpu_enabled=args.gpu)

    def score_pair(a, b):
        value = scorer.get_similarity_score(a, b)
        return {"score": value}, f"{value:.6f}"

    if args.text_a == "-":
        rc = 0
        for line in sys.stdin:
            line = line.rstrip("\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            try:
                if len(parts) != 2:
                    raise InputError(
                        "similarity stdin lines must be 'text_a<TAB>text_b'")
                record, plain = score_pair(parts[0], parts[1])
            except _INPUT_ERRORS as exc:
                print(f"error: {exc}", file=sys.stderr)
                rc = 1
                continue
            _emit(record, args.format, plain)
        return rc
    if args.text_b is None:
        raise InputError("similarity needs two texts (or '-' for stdin pairs)")
    record, plain = score_pair(args.text_a, args.text_b)
    _emit(record, args.format, plain)
    return 0


def _cmd_datasets(args) -> int:
    if args.clear is not None:
        name = None if args.clear == "*" else args.clear
        removed = ds.clear_cache(name)
        _emit({"removed": removed}, args.format, f"removed {removed} file(s)")
        return 0
    if args.load:
        if not args.split:
            raise InputError("--load requires --split")
        table = ds.load_dataset(args.load, args.split)
        rows = table.rows if args.limit is None else table.rows[: args.limit]
        for row in rows:
            _emit(row, args.format, json.dumps(row, ensure_ascii=False))
        return 0
    for desc in ds.list_datasets():
        record = {
            "name": desc.name,
            "splits": list(desc.splits),
            "columns": [c.name for c in desc.schema],
            "format": desc.file_format,
        }
        _emit(record, args.format,
              f"{desc.name}\t{','.join(desc.splits)}\t{','.join(record['columns'])}")
    return 0


def _cmd_models(args) -> int:
    features = [args.feature] if args.feature else list(registry.FEATURES)
    for feature in features:
        for desc in registry.list_models(feature):
            record = {
                "feature": desc.feature,
                "model_id": desc.model_id,
                "revision": desc.revision,
                "backend_kind": desc.backend_kind,
                "is_default": desc.is_default,
            }
            flag = " (default)" if desc.is_default else ""
            _emit(record, args.format, f"{desc.feature}\t{desc.model_id}{flag}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    io_parent = _Parser(add_help=False)
    io_parent.add_argument("--format", choices=("json", "plain"), default="json",
                           help="output format (default: json lines)")
    io_parent.add_argument("--cache-dir", metavar="PATH",
                           help=f"cache root (overrides ${ENV_HOME})")

    model_parent = _Parser(add_help=False)
    model_parent.add_argument("--model", metavar="ID",
                              help="model id ('stub' for the offline backend)")
    model_parent.add_argument("--gpu", action="store_true",
                              help="run the model on GPU (error if unavailable)")

    parser = _Parser(prog="mahanlp",
                     description="Marathi text analysis from the shell")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("clean", parents=[io_parent],
                       help="rule-based text cleaning")
    p.add_argument("text", help="text to clean, or '-' for stdin")
    p.add_argument("--keep-urls", action="store_true")
    p.add_argument("--keep-stopwords", action="store_true")
    p.add_argument("--keep-foreign", action="store_true",
                   help="keep non-Devanagari words")
    p.add_argument("--no-collapse", action="store_true",
                   help="skip the final whitespace collapse")
    p.set_defaults(handler=_cmd_clean)

    p = sub.add_parser("tokenize", parents=[io_parent],
                       help="word or sentence tokenization")
    p.add_argument("text", help="text to tokenize, or '-' for stdin")
    p.add_argument("--level", choices=("word", "sentence"), default="word")
    p.set_defaults(handler=_cmd_tokenize)

    p = sub.add_parser("sentiment", parents=[io_parent, model_parent],
                       help="sentiment classification")
    p.add_argument("text", help="text to classify, or '-' for stdin")
    p.set_defaults(handler=_cmd_sentiment)

    p = sub.add_parser("hate", parents=[io_parent, model_parent],
                       help="hate speech detection")
    p.add_argument("text", help="text to classify, or '-' for stdin")
    p.set_defaults(handler=_cmd_hate)

    p = sub.add_parser("ner", parents=[io_parent, model_parent],
                       help="named-entity token tagging")
    p.add_argument("text", help="text to tag, or '-' for stdin")
    p.set_defaults(handler=_cmd_ner)

    p = sub.add_parser("autocomplete", parents=[io_parent, model_parent],
                       help="next-word prediction / sentence completion")
    p.add_argument("text", help="prompt text, or '-' for stdin")
    p.add_argument("-n", "--num-words", type=int, default=1,
                   help="number of words to predict (default 1)")
    p.add_argument("--complete-sentence", action="store_true",
                   help="append words until a terminator or the word cap")
    p.add_argument("--max-new-words", type=int, default=10,
                   help="word cap for --complete-sentence (default 10)")
    p.set_defaults(handler=_cmd_autocomplete)

    p = sub.add_parser("maskfill", parents=[io_parent, model_parent],
                       help="predict the [MASK] token")
    p.add_argument("text", help="text with one [MASK], or '-' for stdin")
    p.add_argument("-k", "--top-k", type=int, default=5,
                   help="number of candidates (default 5)")
    p.set_defaults(handler=_cmd_maskfill)

    p = sub.add_parser("similarity", parents=[io_parent, model_parent],
                       help="sentence similarity score in [0, 1]")
    p.add_argument("text_a", help="first text, or '-' for tab-separated stdin pairs")
    p.add_argument("text_b", nargs="?", help="second text")
    p.set_defaults(handler=_cmd_similarity)

    p = sub.add_parser("datasets", parents=[io_parent],
                       help="list, load, or clear cached corpora")
    p.add_argument("--load", metavar="NAME", help="load a dataset split")
    p.add_argument("--split", choices=ds.SPLITS, help="split for --load")
    p.add_argument("--limit", type=int, metavar="N",
                   help="print at most N rows")
    p.add_argument("--clear", nargs="?", const="*", metavar="NAME",
                   help="clear cached files (all datasets when NAME omitted)")
    p.set_defaults(handler=_cmd_datasets)

    p = sub.add_parser("models", parents=[io_parent],
                       help="list registered models")
    p.add_argument("--feature", help="restrict to one feature")
    p.set_defaults(handler=_cmd_models)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    if args.cache_dir:
        os.environ[ENV_HOME] = args.cache_dir
    try:
        return args.handler(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MahaNLPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
