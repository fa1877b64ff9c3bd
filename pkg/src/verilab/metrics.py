"""Static difficulty metrics for MiniLang samples.

Halstead counts/difficulty/volume, cyclomatic complexity, line counts,
Maintainability Index, and the corpus-normalized geometric-mean sample
difficulty used to weight rewards.

Operator/operand classification is fixed so counts are reproducible:
keywords {fn, let, if, else, while, return, assert} and the symbolic
operators {= + - * / % == != < <= > >= && || !} are operators;
identifiers and literals (ints, true, false) are operands; grouping
punctuation ( ) { } ; , and the suite/case keywords count as neither.
"""

import math
from dataclasses import dataclass

from .minilang.lexer import Token, tokenize
from .minilang.nodes import If, ProgramTree, While
from .minilang.parser import parse_program

_OPERATOR_KEYWORDS = {"fn", "let", "if", "else", "while", "return", "assert"}
_OPERATOR_SYMBOLS = {
    "=", "+", "-", "*", "/", "%", "==", "!=",
    "<", "<=", ">", ">=", "&&", "||", "!",
}
_OPERAND_KINDS = {"ident", "int", "true", "false"}


class DomainError(ValueError):
    pass


class EmptyCorpus(ValueError):
    pass


@dataclass(frozen=True)
class HalsteadCounts:
    eta1: int  # distinct operators
    eta2: int  # distinct operands
    n1: int    # total operator occurrences
    n2: int    # total operand occurrences


@dataclass(frozen=True)
class StaticProfile:
    volume: float
    cyclomatic: int
    loc: int
    comment_ratio: float
    mi: float
    d_hat: float
    d_m: float


@dataclass(frozen=True)
class CorpusNormalizer:
    d_hat_95: float
    corpus_size: int


def halstead_counts(tokens) -> HalsteadCounts:
    """Classify a token stream into Halstead operator/operand counts."""
    operators = {}
    operands = {}
    for tok in tokens:
        if tok.kind in _OPERATOR_KEYWORDS or tok.kind in _OPERATOR_SYMBOLS:
            operators[tok.kind] = operators.get(tok.kind, 0) + 1
        elif tok.kind in _OPERAND_KINDS:
            key = (tok.kind, tok.text)
            operands[key] = operands.get(key, 0) + 1
    return HalsteadCounts(
        eta1=len(operators),
        eta2=len(operands),
        n1=sum(operators.values()),
        n2=sum(operands.values()),
    )


def halstead_counts_from_source(src: str) -> HalsteadCounts:
    return halstead_counts(tokenize(src))


def halstead_difficulty_raw(c: HalsteadCounts) -> float:
    """(eta1 / 2) * (n2 / eta2); 0 when there are no operands."""
    if c.eta2 == 0:
        return 0.0
    return (c.eta1 / 2.0) * (c.n2 / c.eta2)


def halstead_volume(c: HalsteadCounts) -> float:
    """(n1 + n2) * log2(eta1 + eta2); 0 when the vocabulary is <= 1."""
    vocab = c.eta1 + c.eta2
    if vocab <= 1:
        return 0.0
    return (c.n1 + c.n2) * math.log2(vocab)


def cyclomatic(prog: ProgramTree) -> int:
    """1 + number of decision points (if and while sites), whole sample."""
    count = 0
    stack = [s for fn in prog.functions for s in fn.body]
    while stack:
        stmt = stack.pop()
        if isinstance(stmt, If):
            count += 1
            stack.extend(stmt.then_body)
            if stmt.else_body is not None:
                stack.extend(stmt.else_body)
        elif isinstance(stmt, While):
            count += 1
            stack.extend(stmt.body)
    return 1 + count


def loc_and_comments(src: str) -> tuple:
    """(code line count, pure-comment-line ratio over nonblank lines).

    L has a floor of 1 for nonempty source so downstream logs stay finite.
    """
    code_lines = 0
    comment_lines = 0
    for line in src.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comment_lines += 1
        else:
            code_lines += 1
    nonblank = code_lines + comment_lines
    ratio = comment_lines / nonblank if nonblank else 0.0
    loc = max(code_lines, 1) if src.strip() else code_lines
    return loc, ratio


def maintainability_index(volume: float, cyclo: int, loc: int, comment_ratio: float) -> float:
    """Classic 171-scale MI rescaled to [0, 100].

    ln arguments are floored at 1; the result is clamped into [0, 100]
    (the raw polynomial exceeds 100 for tiny programs).
    """
    if not 0.0 <= comment_ratio <= 1.0:
        raise DomainError(f"comment ratio {comment_ratio} outside [0, 1]")
    raw = (171.0
           - 5.2 * math.log(max(volume, 1.0))
           - 0.23 * cyclo
           - 16.2 * math.log(max(loc, 1.0))
           + 50.0 * math.sin(math.sqrt(2.4 * comment_ratio)))
    return min(100.0, max(0.0, 100.0 * raw / 171.0))


def maintainability_difficulty(mi: float) -> float:
    """Invert MI into a difficulty in [0, 1]."""
    return max(0.0, 1.0 - mi / 100.0)


def fit_normalizer(d_hat_values) -> CorpusNormalizer:
    """95th percentile (nearest-rank) of raw Halstead difficulties."""
    values = sorted(d_hat_values)
    if not values:
        raise EmptyCorpus("no difficulty values to normalize against")
    rank = math.ceil(0.95 * len(values))
    return CorpusNormalizer(d_hat_95=values[rank - 1], corpus_size=len(values))


def normalized_halstead(d_hat: float, norm: CorpusNormalizer) -> float:
    """Clipped min-max normalization against the corpus 95th percentile."""
    if norm.d_hat_95 == 0:
        return 0.0
    return min(d_hat, norm.d_hat_95) / norm.d_hat_95


def sample_difficulty(d_h: float, d_m: float) -> float:
    """Geometric mean of the two normalized difficulties."""
    return math.sqrt(d_h * d_m)


def static_profile(src: str) -> StaticProfile:
    """Compute the full static profile of one MiniLang sample."""
    counts = halstead_counts_from_source(src)
    prog = parse_program(src)
    volume = halstead_volume(counts)
    cyclo = cyclomatic(prog)
    loc, comment_ratio = loc_and_comments(src)
    mi = maintainability_index(volume, cyclo, loc, comment_ratio)
    return StaticProfile(
        volume=volume,
        cyclomatic=cyclo,
        loc=loc,
        comment_ratio=comment_ratio,
        mi=mi,
        d_hat=halstead_difficulty_raw(counts),
        d_m=maintainability_difficulty(mi),
    )
