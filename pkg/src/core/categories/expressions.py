"""Analyse des expressions de morphismes comme ``d0 s1 @ 2`` ou ``t^2 s0 @1``."""

import re

from src.core.categories.cyclic import LambdaMap, delta_lambda_decompose, embed_j, lambda_compose, tau_power
from src.core.categories.delta import DeltaMap, delta, delta_compose, epi_mono_factor, identity, sigma
from src.core.exceptions import CyclicError, ExpressionParseError
from src.utils.logger import get_logger

logger = get_logger(__name__)

_GENERATOR_PATTERN = re.compile(r"^([sd])(\d+)$")
_TAU_PATTERN = re.compile(r"^t(?:\^(-?\d+))?$")
_ANCHOR_PATTERN = re.compile(r"^@(\d*)$")


def _split_anchor(text: str) -> tuple[list[str], int]:
    """Separate generator tokens from the ``@<n>`` source anchor."""
    tokens = text.split()
    if not tokens:
        raise ExpressionParseError("Empty morphism expression", token="")

    anchor_index = next((i for i, tok in enumerate(tokens) if tok.startswith("@")), None)
    if anchor_index is None:
        raise ExpressionParseError("Missing source anchor '@<n>'", token=tokens[-1])

    anchor = tokens[anchor_index]
    match = _ANCHOR_PATTERN.match(anchor)
    if match is None:
        raise ExpressionParseError(f"Malformed anchor {anchor!r}", token=anchor)

    rest = tokens[anchor_index + 1 :]
    if match.group(1):
        rank_token = anchor
        digits = match.group(1)
    elif rest:
        rank_token = rest.pop(0)
        digits = rank_token
    else:
        raise ExpressionParseError("Anchor '@' needs a rank", token=anchor)

    if not digits.isdigit():
        raise ExpressionParseError(f"Source rank {rank_token!r} is not a non-negative integer", token=rank_token)
    if rest:
        raise ExpressionParseError("Tokens after the source anchor", token=rest[0])
    return tokens[:anchor_index], int(digits)


def parse_expression(text: str) -> DeltaMap | LambdaMap:
    """Parse a morphism expression.

    Tokens ``s<j>``, ``d<j>``, ``t`` and ``t^k`` are applied left to right,
    starting from the object given by the anchor ``@<n>`` (or ``@ <n>``).
    ``s<j>`` at [c] is σ_j: [c] → [c−1]; ``d<j>`` is δ_j: [c] → [c+1].

    Args:
        text: Expression to parse

    Returns:
        A DeltaMap, or a LambdaMap as soon as a rotation appears

    Raises:
        ExpressionParseError: On any unknown or out-of-range token

    """
    tokens, source = _split_anchor(text)
    logger.debug("[PARSE] %r: %d tokens from [%d]", text, len(tokens), source)

    current: DeltaMap | LambdaMap = identity(source)
    for token in tokens:
        rank = current.target_rank
        try:
            gen_match = _GENERATOR_PATTERN.match(token)
            tau_match = _TAU_PATTERN.match(token)
            if gen_match:
                kind, j = gen_match.group(1), int(gen_match.group(2))
                step = sigma(j, rank - 1) if kind == "s" else delta(j, rank + 1)
                if isinstance(current, LambdaMap):
                    current = lambda_compose(current, embed_j(step))
                else:
                    current = delta_compose(current, step)
            elif tau_match:
                power = int(tau_match.group(1)) if tau_match.group(1) is not None else 1
                lifted = embed_j(current) if isinstance(current, DeltaMap) else current
                current = lambda_compose(lifted, tau_power(rank, power))
            else:
                raise ExpressionParseError(f"Unknown token {token!r}", token=token)
        except ExpressionParseError:
            raise
        except CyclicError as e:
            raise ExpressionParseError(f"Token {token!r} does not apply at [{rank}]: {e.message}", token=token) from e

    return current


def format_expression(f: DeltaMap | LambdaMap) -> str:
    """Write ``f`` back as a normal-form expression accepted by ``parse_expression``.

    A LambdaMap j(h)∘τ^a is written with ``t^a`` first, then the generators of h.
    """
    tokens: list[str] = []
    if isinstance(f, LambdaMap):
        h, a = delta_lambda_decompose(f)
        tokens.append(f"t^{a}")
    else:
        h = f
    delta_indices, sigma_indices = epi_mono_factor(h)
    tokens.extend(f"s{j}" for j in reversed(sigma_indices))
    tokens.extend(f"d{i}" for i in reversed(delta_indices))
    tokens.append(f"@{f.source_rank}")
    return " ".join(tokens)
