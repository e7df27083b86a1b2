"""Named verification suites: exhaustive sweeps and fixed instances with PASS/FAIL results."""

import logging
import random
from collections.abc import Callable, Iterator
from itertools import chain, product

from .codings import ClopenSet, clopen_coding, composition_recognizability_check, return_words, special_coding
from .config import DEFAULT_BUDGETS, Budgets
from .constructions import (
    CheckResult,
    NegativeFamilyParams,
    gap_epsilon,
    negative_family_verify,
    sample_P_minus_K,
)
from .cover_bounds import cfpz_cover, first_difference_bound, power_cover_px_bound
from .errors import InvalidArgumentError, SadicError
from .morphisms import Morphism, apply, compose
from .presets import fibonacci, fibonacci_morphism, thue_morse
from .subshift import DirectiveSequence, SubshiftLanguage, right_special
from .words import Alphabet, Word, fine_wilf, period, primitive_necklace_count, primitive_representatives, root

logger = logging.getLogger("griptape_nodes")

# --- Constants ---
ORACLE_LENGTH = 10_000
BINARY = Alphabet.binary()

Check = Callable[[random.Random, Budgets], CheckResult]


def _all_words(max_length: int, min_length: int = 1, alphabet: Alphabet = BINARY) -> Iterator[Word]:
    for size in range(min_length, max_length + 1):
        for letters in product(alphabet.symbols, repeat=size):
            yield Word._wrap(bytes(letters), alphabet)


def _brute_period(w: Word) -> int:
    s = w.symbols
    return next(p for p in range(1, len(s) + 1) if all(s[i] == s[i + p] for i in range(len(s) - p)))


def _brute_root(w: Word) -> Word:
    s = w.symbols
    size = next(d for d in range(1, len(s) + 1) if len(s) % d == 0 and s[:d] * (len(s) // d) == s)
    return w[:size]


def check_fine_wilf(rng: random.Random, budgets: Budgets) -> CheckResult:
    sharp = False
    for u, v in product(list(_all_words(6)), repeat=2):
        bound = len(u) + len(v) - 1
        left = (u.symbols * bound)[:bound]
        right = (v.symbols * bound)[:bound]
        common = next((i for i in range(bound) if left[i] != right[i]), bound)
        w = Word._wrap(left[:common], BINARY)
        result = fine_wilf(u, v, w)
        if common == bound and (result is None or root(u) != result or root(v) != result):
            return CheckResult("fine-wilf", False, f"u={u} v={v}")
        if common == bound - 1 and root(u) != root(v):
            sharp = True
    return CheckResult("fine-wilf", sharp, "" if sharp else "no sharp example at |u|+|v|-2")


def check_root_period(rng: random.Random, budgets: Budgets) -> CheckResult:
    words = chain(_all_words(14), _all_words(10, alphabet=Alphabet.of_size(3)))
    for w in words:
        if period(w) != _brute_period(w) or root(w) != _brute_root(w):
            return CheckResult("root-period", False, str(w))
        if len(w) >= 2 * len(root(w)) and period(w) != len(root(w)):
            return CheckResult("root-period", False, f"{w}: period differs from the root length")
    return CheckResult("root-period", True)


def check_local_periods(rng: random.Random, budgets: Budgets) -> CheckResult:
    for u in _all_words(10):
        per = period(u)
        for size in range(2 * per, len(u) + 1):
            for start in range(len(u) - size + 1):
                if period(u[start : start + size]) != per:
                    return CheckResult("local-periods", False, f"{u} at {start}:{start + size}")
    return CheckResult("local-periods", True)


def check_necklaces(rng: random.Random, budgets: Budgets) -> CheckResult:
    for alphabet in (BINARY, Alphabet.of_size(3)):
        representatives = primitive_representatives(alphabet, 8)
        for size in range(1, 9):
            found = sum(1 for w in representatives if len(w) == size)
            if found != primitive_necklace_count(alphabet.size, size):
                return CheckResult("necklaces", False, f"{alphabet.size} letters, length {size}: {found}")
    return CheckResult("necklaces", True)


def _random_morphism(rng: random.Random, source: Alphabet, target: Alphabet) -> Morphism:
    images = tuple(
        Word._wrap(bytes(rng.choice(target.symbols) for _ in range(rng.randint(1, 5))), target) for _ in source.symbols
    )
    return Morphism(source, target, images)


def check_composition(rng: random.Random, budgets: Budgets) -> CheckResult:
    for _ in range(300):
        a, b, c, d = (Alphabet.of_size(rng.randint(1, 4)) for _ in range(4))
        sigma, tau, rho = _random_morphism(rng, b, a), _random_morphism(rng, c, b), _random_morphism(rng, d, c)
        if compose(compose(sigma, tau), rho) != compose(sigma, compose(tau, rho)):
            return CheckResult("composition", False, f"{sigma} | {tau} | {rho}")
        composed = compose(sigma, tau)
        if composed.max_length > sigma.max_length * tau.max_length or composed.min_length < sigma.min_length * tau.min_length:
            return CheckResult("composition", False, f"length bounds for {sigma} | {tau}")
        w = Word._wrap(bytes(rng.choice(c.symbols) for _ in range(rng.randint(0, 6))), c)
        if apply(composed, w) != apply(sigma, apply(tau, w)):
            return CheckResult("composition", False, f"apply on {w}")
    return CheckResult("composition", True)


def fixed_point_prefix(sigma: Morphism, length: int) -> bytes:
    """Prefix of the fixed point of sigma starting with its first letter."""
    word = bytes([sigma.source.symbols[0]])
    while len(word) < length:
        grown = sigma.image_bytes(word)
        if len(grown) <= len(word):
            msg = f"{sigma} does not grow from {word!r}"
            raise InvalidArgumentError(msg)
        word = grown
    return word[:length]


def check_fibonacci_complexity(rng: random.Random, budgets: Budgets) -> CheckResult:
    table = SubshiftLanguage(fibonacci(), 0, budgets).complexity(40)
    prefix = fixed_point_prefix(fibonacci_morphism(), ORACLE_LENGTH)
    for n in range(1, 41):
        direct = len({prefix[i : i + n] for i in range(len(prefix) - n + 1)})
        if table.p(n) != n + 1 or direct != n + 1:
            return CheckResult("fibonacci-complexity", False, f"p({n}) = {table.p(n)}, direct {direct}")
    return CheckResult("fibonacci-complexity", True)


def check_special_bounds(rng: random.Random, budgets: Budgets) -> CheckResult:
    for name, dirseq, limit in (("fibonacci", fibonacci(), 1), ("thue_morse", thue_morse(), 4)):
        lang = SubshiftLanguage(dirseq, 0, budgets)
        table = lang.complexity(41)
        for n in range(1, 31):
            special = right_special(lang, n)
            delta = table.p(n + 1) - table.p(n)
            if not len(special) <= delta <= lang.alphabet.size * len(special):
                return CheckResult("special-bounds", False, f"{name} n={n}")
        if max(table.deltas()[:40]) != limit:
            return CheckResult("special-bounds", False, f"{name}: max growth {max(table.deltas()[:40])}")
    return CheckResult("special-bounds", True)


def check_return_words(rng: random.Random, budgets: Budgets) -> CheckResult:
    lang = SubshiftLanguage(fibonacci(), 0, budgets)
    clopen = ClopenSet.cylinder(Word.empty(BINARY), Word.parse("1", BINARY))
    found = {str(w) for w in return_words(lang, clopen, budgets=budgets)}
    if found != {"10", "100"}:
        return CheckResult("return-words", False, f"{sorted(found)}")
    coding = clopen_coding(lang, clopen, budgets=budgets)
    gap = coding.sigma.max_length
    if coding.reco_radius is None or coding.reco_radius > gap + clopen.radius:
        return CheckResult("return-words", False, f"radius {coding.reco_radius}")
    return CheckResult("return-words", True)


def check_special_coding(rng: random.Random, budgets: Budgets) -> CheckResult:
    for dirseq, n in ((fibonacci(), 3), (fibonacci(), 5), (thue_morse(), 2), (thue_morse(), 4)):
        report = special_coding(dirseq, n, budgets=budgets)
        if not report.passed:
            return CheckResult("special-coding", False, f"n={n}: {dict(report.items)}")
    return CheckResult("special-coding", True)


def check_composition_recognizability(rng: random.Random, budgets: Budgets) -> CheckResult:
    fib = fibonacci_morphism()
    lang = SubshiftLanguage(fibonacci(), 0, budgets)
    report = composition_recognizability_check(fib, fib, lang, 16, budgets)
    if not report.consistent or report.radius_composed is None:
        return CheckResult("composition-recognizability", False, f"fibonacci: {report}")
    collapse = Morphism.from_mapping(BINARY, BINARY, {0: "0", 1: "0"})
    report = composition_recognizability_check(collapse, fib, lang, 16, budgets)
    if not report.consistent or report.radius_sigma is not None or report.radius_composed is not None:
        return CheckResult("composition-recognizability", False, f"collapsing pair: {report}")
    return CheckResult("composition-recognizability", True)


def check_gap_epsilon(rng: random.Random, budgets: Budgets) -> CheckResult:
    if gap_epsilon([1000, 2], 2, 4) != 31:
        return CheckResult("gap-epsilon", False, "lengths {1000, 2}")
    for _ in range(2000):
        d, ratio = rng.randint(2, 5), rng.randint(2, 50)
        count = rng.randint(1, 4)
        top = (ratio * d) ** (count + 2)
        lengths = [top] + [rng.randint(1, top) for _ in range(count - 1)]
        epsilon = gap_epsilon(lengths, d, ratio)
        if any(not (x > ratio * epsilon or d * x <= epsilon) for x in lengths):
            return CheckResult("gap-epsilon", False, f"{lengths}, d={d}, ratio={ratio}")
    return CheckResult("gap-epsilon", True)


def check_counting(rng: random.Random, budgets: Budgets) -> CheckResult:
    found = sample_P_minus_K(8, 1, 1, 1, budgets)
    missing = sample_P_minus_K(8, 1, 2, 1, budgets)
    if found != (64,) or missing is not None:
        return CheckResult("counting", False, f"d=1: {found}, d=2: {missing}")
    return CheckResult("counting", True)


def check_cover(rng: random.Random, budgets: Budgets) -> CheckResult:
    for _ in range(100):
        size = rng.randint(64, 4096)
        w = Word._wrap(bytes(rng.randint(0, 1) for _ in range(size)), BINARY)
        for ell in (1, 2, 4, 8):
            cover = cfpz_cover(w, ell)
            if any(count > 32 * size / ell for count in cover.counts.values()):
                return CheckResult("cover", False, f"|w|={size}, ℓ={ell}")
    return CheckResult("cover", True)


def _image_blocks(dirseq: DirectiveSequence, depth: int) -> list[Word]:
    return list(dirseq.compose_range(0, depth).images)


def check_power_bounds(rng: random.Random, budgets: Budgets) -> CheckResult:
    for name, dirseq, depths in (("fibonacci", fibonacci(), (5, 6)), ("thue_morse", thue_morse(), (5, 6))):
        lang = SubshiftLanguage(dirseq, 0, budgets)
        for depth in depths:
            blocks = _image_blocks(dirseq, depth)
            if not power_cover_px_bound(lang, blocks).passed:
                return CheckResult("power-bounds", False, f"{name} depth {depth}")
            for ell in range(1, min(len(b) for b in blocks)):
                if not first_difference_bound(lang, blocks, ell).passed:
                    return CheckResult("power-bounds", False, f"{name} depth {depth}, ℓ={ell}")
    return CheckResult("power-bounds", True)


def check_negative_family(rng: random.Random, budgets: Budgets) -> CheckResult:
    report = negative_family_verify(NegativeFamilyParams.minimal((2, 2), (1, 1)), 2, 2000, budgets, raise_on_failure=False)
    failed = [item.name for item in report.items if not item.passed]
    return CheckResult("negative-family", not failed, ", ".join(failed))


SUITES: dict[str, tuple[Check, ...]] = {
    "words": (check_fine_wilf, check_root_period, check_local_periods, check_necklaces),
    "morphisms": (check_composition,),
    "language": (check_fibonacci_complexity, check_special_bounds),
    "codings": (check_return_words, check_special_coding, check_composition_recognizability),
    "constructions": (check_gap_epsilon, check_counting, check_cover, check_power_bounds, check_negative_family),
}


def run_suite(name: str, seed: int = 0, budgets: Budgets = DEFAULT_BUDGETS) -> list[CheckResult]:
    """Runs one suite, or every suite for "all"; errors raised by a check become FAIL results."""
    if name == "all":
        return [result for suite in SUITES for result in run_suite(suite, seed, budgets)]
    if name not in SUITES:
        msg = f"Unknown suite {name!r}; expected one of {', '.join([*SUITES, 'all'])}"
        raise InvalidArgumentError(msg)
    rng = random.Random(seed)
    results = []
    for check in SUITES[name]:
        try:
            result = check(rng, budgets)
        except SadicError as e:
            result = CheckResult(check.__name__.removeprefix("check_").replace("_", "-"), False, f"{type(e).__name__}: {e}")
        logger.info("%s", result.line())
        results.append(result)
    return results
