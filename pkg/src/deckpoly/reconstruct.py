"""Recover a digraph polynomial from its edge deck.

The deck sum S(x) = sum of the deck members satisfies

    (m - n) * g + x * g' = S(x),

so coefficient k of g obeys (m - n + k) * c_k = s_k. Every coefficient
with m - n + k != 0 is forced. The one exponent k* = n - m (when it lands
in [0, n]) is annihilated: x^{k*} solves the homogeneous equation, and
only structural side constraints can pin it. When none applies, the
honest answer is a one-parameter family, not a guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polynomials
from .digraphs import Digraph
from .graph_polys import F2, Deck, PolyKind, deck, poly_of
from .polynomials import Polynomial


@dataclass(frozen=True)
class Unique:
    poly: Polynomial


@dataclass(frozen=True)
class OneParameterFamily:
    """base + C * x^free_exponent satisfies the deck equation for every C."""

    base: Polynomial
    free_exponent: int


@dataclass(frozen=True)
class Inconsistent:
    detail: str


ReconstructionResult = Unique | OneParameterFamily | Inconsistent


def deck_sum(d: Deck) -> Polynomial:
    """Exact sum of the deck members; degree n with leading coefficient m."""
    if not d.polys:
        raise ValueError("cannot sum an empty deck")
    total = polynomials.ZERO
    for p in d.polys:
        total = polynomials.add(total, p)
    return total


def reconstruct(d: Deck) -> ReconstructionResult:
    """Solve the coefficient equations (m - n + k) * c_k = s_k.

    n and m are inferred from the deck itself (member degree and
    cardinality). Side constraints on the annihilated coefficient, applied
    in order: the trace rule pins c_{n-1} to -beta*m when m = 1, and the
    Laplacian determinant kind pins c_0 to 0 when m = n. Anything else
    with k* in range stays a one-parameter family.
    """
    m = len(d.polys)
    if m == 0:
        raise ValueError("cannot reconstruct from an empty deck")
    n = d.n
    s = list(deck_sum(d))
    s += [Fraction(0)] * (n + 1 - len(s))
    if s[n] != m:
        return Inconsistent(f"deck leading coefficients sum to {s[n]}, expected {m}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        divisor = m - n + k
        if divisor != 0:
            coeffs[k] = s[k] / divisor
    kstar = n - m
    if kstar < 0:
        return Unique(polynomials.normalize(coeffs))
    if s[kstar] != 0:
        return Inconsistent(
            f"coefficient {kstar}: equation 0 * c_{kstar} = {s[kstar]} cannot hold"
        )
    if kstar == n - 1:
        # Trace rule: coefficient n-1 of the pencil polynomial is
        # -beta * (total arc weight); unit weights assumed, so -beta * m.
        coeffs[kstar] = -d.kind.beta * m
        return Unique(polynomials.normalize(coeffs))
    if kstar == 0 and d.kind == F2:
        # det(A - D) vanishes (columns of A - D sum to zero), so the
        # Laplacian determinant polynomial has no constant term.
        coeffs[0] = Fraction(0)
        return Unique(polynomials.normalize(coeffs))
    coeffs[kstar] = Fraction(0)
    return OneParameterFamily(polynomials.normalize(coeffs), kstar)


@dataclass(frozen=True)
class RoundTripReport:
    """Outcome of deck -> reconstruct against the known source polynomial.

    outcome is "recovered" (Unique and equal), "covered" (family contains
    the truth), or "missed".
    """

    outcome: str
    expected: Polynomial
    result: ReconstructionResult


def verify_roundtrip(g: Digraph, kind: PolyKind) -> RoundTripReport:
    expected = poly_of(g, kind)
    result = reconstruct(deck(g, kind))
    if isinstance(result, Unique):
        outcome = "recovered" if result.poly == expected else "missed"
    elif isinstance(result, OneParameterFamily):
        diff = polynomials.sub(expected, result.base)
        in_family = all(
            c == 0 for k, c in enumerate(diff) if k != result.free_exponent
        )
        outcome = "covered" if in_family else "missed"
    else:
        outcome = "missed"
    return RoundTripReport(outcome, expected, result)
