"""`sadic` command line.

Data (CSV rows, word lists, PASS/FAIL report lines) goes to stdout or --out; logs go to
stderr. Exit codes: 0 on success, 1 when a verified property fails, 2 on bad input or an
exhausted budget.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from dataclasses import replace
from pathlib import Path

from .codings import ClopenSet, Coding, clopen_coding, recognizability_radius, special_coding
from .config import DEFAULT_BUDGETS, Budgets
from .constructions import NegativeFamilyParams, negative_directive_sequence, negative_family_verify, sample_P_minus_K
from .cover_bounds import cfpz_cover, first_difference_bound, power_cover_px_bound
from .dirseq_format import parse_dirseq, serialize_dirseq
from .errors import SadicError, VerificationFailedError
from .presets import PRESETS
from .subshift import (
    ContractionMode,
    DirectiveSequence,
    SubshiftLanguage,
    contract,
    left_special,
    pcom_estimate,
    right_special,
)
from .verification import SUITES, run_suite
from .words import Alphabet, Word

logger = logging.getLogger("griptape_nodes")

# --- Constants ---
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _load_dirseq(args: argparse.Namespace) -> DirectiveSequence:
    if args.dirseq:
        return parse_dirseq(Path(args.dirseq).read_text(encoding="utf-8"))
    return PRESETS[args.preset]()


def _language(args: argparse.Namespace, budgets: Budgets) -> SubshiftLanguage:
    lang = SubshiftLanguage(_load_dirseq(args), args.level, budgets)
    if not lang.exact:
        logger.warning("Language of level %d is a lower approximation", args.level)
    return lang


def _word_lines(words: Sequence[Word] | frozenset[Word]) -> str:
    return "".join(f"{w}\n" for w in sorted(words))


def _complexity(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    return _language(args, budgets).complexity(args.max).to_csv(), EXIT_OK


def _language_words(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    lang = _language(args, budgets)
    words = lang.words(args.length)
    return _word_lines(words) + f"# {lang.status(args.length)}\n", EXIT_OK


def _special(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    lang = _language(args, budgets)
    side = right_special if args.side == "right" else left_special
    return _word_lines(side(lang, args.length)), EXIT_OK


def _pcom(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    return f"{pcom_estimate(_language(args, budgets), args.max_base, args.kmax)}\n", EXIT_OK


def _coding_report(coding: Coding) -> list[str]:
    lines = [f"{letter} -> {image}" for letter, image in zip(coding.sigma.source.symbols, coding.sigma.images, strict=True)]
    return [*lines, f"radius {coding.reco_radius}"]


def _return_words(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    lang = _language(args, budgets)
    clopen = ClopenSet.cylinder(Word.parse(args.past, lang.alphabet), Word.parse(args.future, lang.alphabet))
    coding = clopen_coding(lang, clopen, scan_length=args.scan, budgets=budgets)
    return "\n".join(_coding_report(coding)) + "\n", EXIT_OK


def _special_coding(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    report = special_coding(_language(args, budgets), args.length, budgets=budgets)
    lines = [f"PASS {name} {value} <= {bound}" for name, (value, bound) in report.items.items()]
    return "\n".join([*lines, *_coding_report(report.coding)]) + "\n", EXIT_OK


def _recognizability(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    dirseq = _load_dirseq(args)
    block = dirseq.compose_range(args.level, args.level + args.depth)
    coding = Coding(block, SubshiftLanguage(dirseq, args.level + args.depth, budgets))
    radius = recognizability_radius(coding, args.dmax, budgets)
    return ("none" if radius is None else f"radius {radius}") + "\n", EXIT_OK


def _contract(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    mode = ContractionMode.growth(args.value) if args.mode == "growth" else ContractionMode.fixed(args.value)
    return serialize_dirseq(contract(_load_dirseq(args), mode, budgets)), EXIT_OK


def _integers(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as e:
        msg = f"expected comma-separated integers, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from e


def _negative_family(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    params = NegativeFamilyParams.minimal(args.blocks, args.scales)
    if not args.verify:
        return serialize_dirseq(negative_directive_sequence(params)), EXIT_OK
    report = negative_family_verify(params, args.levels, args.kmax, budgets, raise_on_failure=False)
    return "\n".join(report.lines()) + "\n", EXIT_OK if report.passed else EXIT_FAILED


def _pk_sample(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    values = sample_P_minus_K(args.n, args.n0, args.d, args.ell, budgets)
    return ("none" if values is None else " ".join(map(str, values))) + "\n", EXIT_OK


def _cover(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    texts = Path(args.words).read_text(encoding="utf-8").split() if args.words else [args.word]
    lines = []
    for text in texts:
        w = Word.parse(text, Alphabet.from_glyphs(sorted(set(text))))
        cover = cfpz_cover(w, args.ell)
        widest = max(cover.counts.values(), default=0)
        lines.append(f"|w|={len(w)} ell={args.ell} members={len(cover)} max_per_length={widest} longest={cover.max_length}")
    return "\n".join(lines) + "\n", EXIT_OK


def _px_bounds(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    dirseq = _load_dirseq(args)
    lang = SubshiftLanguage(dirseq, 0, budgets)
    blocks = list(dirseq.compose_range(0, args.depth).images)
    checks = [("px-bound", power_cover_px_bound(lang, blocks))]
    checks += [(f"first-difference ell={ell}", first_difference_bound(lang, blocks, ell)) for ell in range(1, min(map(len, blocks)))]
    lines = [f"{'PASS' if check.passed else 'FAIL'} {name} {check.actual} <= {check.bound}" for name, check in checks]
    return "\n".join(lines) + "\n", EXIT_OK if all(check.passed for _, check in checks) else EXIT_FAILED


def _verify(args: argparse.Namespace, budgets: Budgets) -> tuple[str, int]:
    results = run_suite(args.suite, args.seed, budgets)
    return "".join(f"{result.line()}\n" for result in results), EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def _add_source(parser: argparse.ArgumentParser, *, level: bool = True) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--dirseq", help="directive-sequence file")
    source.add_argument("--preset", choices=sorted(PRESETS), default="fibonacci", help="named directive sequence")
    if level:
        parser.add_argument("--level", type=int, default=0, help="level n of X^(n)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sadic", description="Languages, codings and constructions for S-adic subshifts")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    for name in ("max_depth", "max_symbols", "window_limit", "max_language_length", "max_enumeration"):
        parser.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, help=f"budget override for {name}")
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", help="write output to this file instead of stdout")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("complexity", help="CSV table n,p,delta", parents=[output])
    _add_source(sub)
    sub.add_argument("--max", type=int, required=True)
    sub.set_defaults(handler=_complexity)

    sub = commands.add_parser("language", help="legal words of one length", parents=[output])
    _add_source(sub)
    sub.add_argument("--length", type=int, required=True)
    sub.set_defaults(handler=_language_words)

    sub = commands.add_parser("special", help="special words of one length", parents=[output])
    _add_source(sub)
    sub.add_argument("--length", type=int, required=True)
    sub.add_argument("--side", choices=["right", "left"], default="right")
    sub.set_defaults(handler=_special)

    sub = commands.add_parser("pcom", help="lower bound on the power complexity", parents=[output])
    _add_source(sub)
    sub.add_argument("--max-base", type=int, default=4)
    sub.add_argument("--kmax", type=int, default=4)
    sub.set_defaults(handler=_pcom)

    coding = commands.add_parser("coding", help="codings by return words").add_subparsers(dest="coding", required=True)
    sub = coding.add_parser("return-words", help="return words to a cylinder [past.future]", parents=[output])
    _add_source(sub)
    sub.add_argument("--past", default="", help="the word read just before position 0")
    sub.add_argument("--future", required=True, help="the word read from position 0")
    sub.add_argument("--scan", type=int, default=32)
    sub.set_defaults(handler=_return_words)
    sub = coding.add_parser("special", help="coding by return words to the right-special words", parents=[output])
    _add_source(sub)
    sub.add_argument("--length", type=int, required=True)
    sub.set_defaults(handler=_special_coding)

    sub = commands.add_parser("recognizability", help="least recognizability radius of τ_[level, level+depth)", parents=[output])
    _add_source(sub)
    sub.add_argument("--depth", type=int, default=1)
    sub.add_argument("--dmax", type=int, default=64)
    sub.set_defaults(handler=_recognizability)

    sub = commands.add_parser("contract", help="telescope the directive sequence", parents=[output])
    _add_source(sub, level=False)
    sub.add_argument("--mode", choices=["growth", "fixed"], default="growth")
    sub.add_argument("--value", type=int, default=2)
    sub.set_defaults(handler=_contract)

    sub = commands.add_parser("negative-family", help="the linear-complexity family with exponents at their minimum", parents=[output])
    sub.add_argument("--levels", type=int, default=2, help="verification depth")
    sub.add_argument("--kmax", type=int, default=2000)
    sub.add_argument("--blocks", type=_integers, default=(2, 2), help="blocks per level, e.g. 2,2")
    sub.add_argument("--scales", type=_integers, default=(1, 1), help="k_n per level, e.g. 1,1")
    sub.add_argument("--verify", action="store_true")
    sub.set_defaults(handler=_negative_family)

    sub = commands.add_parser("pk-sample", help="first exponent tuple of P(n, n0, ell) outside K(n, d, ell)", parents=[output])
    for name in ("n", "n0", "d", "ell"):
        sub.add_argument(f"--{name}", type=int, required=True)
    sub.set_defaults(handler=_pk_sample)

    sub = commands.add_parser("cover", help="cover of words by few short pieces", parents=[output])
    words = sub.add_mutually_exclusive_group(required=True)
    words.add_argument("--word")
    words.add_argument("--words", help="file with one word per line")
    sub.add_argument("--ell", type=int, required=True)
    sub.set_defaults(handler=_cover)

    sub = commands.add_parser("px-bounds", help="complexity bounds from the image blocks of τ_[0,depth)", parents=[output])
    _add_source(sub, level=False)
    sub.add_argument("--depth", type=int, required=True)
    sub.set_defaults(handler=_px_bounds)

    sub = commands.add_parser("verify", help="run verification suites", parents=[output])
    sub.add_argument("suite", choices=[*SUITES, "all"])
    sub.set_defaults(handler=_verify)
    return parser


def _budgets(args: argparse.Namespace) -> Budgets:
    overrides = {
        name: value
        for name in ("max_depth", "max_symbols", "window_limit", "max_language_length", "max_enumeration")
        if (value := getattr(args, name)) is not None
    }
    return replace(DEFAULT_BUDGETS, **overrides)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        output, code = args.handler(args, _budgets(args))
    except VerificationFailedError as e:
        logger.error("❌ %s", e)
        output, code = f"FAIL {e.item} {e.counterexample}\n", EXIT_FAILED
    except (SadicError, ValueError, LookupError, OSError) as e:
        logger.error("❌ %s: %s", args.command, e)
        return EXIT_INPUT
    if args.out:
        try:
            Path(args.out).write_text(output, encoding="utf-8")
        except OSError as e:
            logger.error("❌ Failed to write %s: %s", args.out, e)
            return EXIT_INPUT
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
