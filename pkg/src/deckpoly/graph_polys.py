"""The six digraph polynomials and the general two-parameter pencil family.

Every kind is a point (beta, gamma, mode) of the family

    det or per of (x*I - beta*D - gamma*A),

where A is the adjacency matrix and D the diagonal of weighted in-degrees.
The six named kinds are the classical specializations: f1/f4 are the
characteristic and permanental polynomials (beta=0, gamma=1), f2/f5 the
Laplacian pair (beta=1, gamma=-1), f3/f6 the signless Laplacian pair
(beta=1, gamma=1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from . import digraphs, matrices, polynomials
from .digraphs import Digraph
from .matrices import Matrix
from .polynomials import Polynomial

DETERMINANT = "det"
PERMANENT = "per"

# poly_of caps per mode; the oracle is factorial and capped much lower.
DET_MAX_VERTICES = 64
PER_MAX_VERTICES = 16
ORACLE_MAX_VERTICES = 7


@dataclass(frozen=True)
class PolyKind:
    beta: Fraction
    gamma: Fraction
    mode: str

    def __post_init__(self):
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.gamma == 0:
            raise ValueError("gamma must be nonzero")
        if self.mode not in (DETERMINANT, PERMANENT):
            raise ValueError(f"mode must be {DETERMINANT!r} or {PERMANENT!r}, got {self.mode!r}")


F1 = PolyKind(0, 1, DETERMINANT)
F2 = PolyKind(1, -1, DETERMINANT)
F3 = PolyKind(1, 1, DETERMINANT)
F4 = PolyKind(0, 1, PERMANENT)
F5 = PolyKind(1, -1, PERMANENT)
F6 = PolyKind(1, 1, PERMANENT)

NAMED_KINDS = {"f1": F1, "f2": F2, "f3": F3, "f4": F4, "f5": F5, "f6": F6}
SIX_KINDS = (F1, F2, F3, F4, F5, F6)


def kind_name(kind: PolyKind) -> str:
    for name, known in NAMED_KINDS.items():
        if kind == known:
            return name
    return f"general:{kind.beta},{kind.gamma},{kind.mode}"


def parse_kind(text: str) -> PolyKind:
    """Parse "f1".."f6" or "general:BETA,GAMMA,det|per" (rationals as "p/q")."""
    name = text.strip().lower()
    if name in NAMED_KINDS:
        return NAMED_KINDS[name]
    if name.startswith("general:"):
        parts = name[len("general:"):].split(",")
        if len(parts) != 3:
            raise ValueError(f"malformed kind {text!r}; expected general:BETA,GAMMA,det|per")
        return PolyKind(Fraction(parts[0]), Fraction(parts[1]), parts[2].strip())
    raise ValueError(f"unknown polynomial kind {text!r}")


def pencil_at(g: Digraph, kind: PolyKind, t) -> Matrix:
    """The matrix t*I - beta*D - gamma*A for a concrete value t."""
    t = Fraction(t)
    a = digraphs.adjacency(g)
    d = digraphs.in_degrees(g)
    out = [[-kind.gamma * a[i][j] for j in range(g.n)] for i in range(g.n)]
    for i in range(g.n):
        out[i][i] = t - kind.beta * d[i]
    return out


def _kernel(kind: PolyKind):
    return matrices.per_ryser if kind.mode == PERMANENT else matrices.det_bareiss


@lru_cache(maxsize=1 << 16)
def _poly_of_cached(g: Digraph, kind: PolyKind) -> Polynomial:
    kernel = _kernel(kind)
    points = [(Fraction(t), kernel(pencil_at(g, kind, t))) for t in range(g.n + 1)]
    p = polynomials.interpolate(points)
    # The pencil polynomial is monic of degree n; anything else is a kernel bug.
    assert len(p) == g.n + 1 and p[-1] == 1, "pencil polynomial must be monic of degree n"
    return p


def poly_of(g: Digraph, kind: PolyKind) -> Polynomial:
    """Exact monic degree-n polynomial of the pencil, via evaluation at
    t = 0..n and interpolation. Assumes a validated digraph."""
    cap = PER_MAX_VERTICES if kind.mode == PERMANENT else DET_MAX_VERTICES
    if g.n > cap:
        raise ValueError(f"{kind.mode} polynomials are capped at {cap} vertices, got {g.n}")
    return _poly_of_cached(g, kind)


def poly_of_oracle(g: Digraph, kind: PolyKind) -> Polynomial:
    """Same value as poly_of, computed by direct symbolic permutation
    expansion of the pencil with no interpolation. n! terms, so tiny n only."""
    n = g.n
    if n > ORACLE_MAX_VERTICES:
        raise ValueError(f"poly_of_oracle is capped at {ORACLE_MAX_VERTICES} vertices, got {n}")
    a = digraphs.adjacency(g)
    d = digraphs.in_degrees(g)
    entries = [
        [
            polynomials.normalize([-kind.beta * d[i], 1])
            if i == j
            else polynomials.normalize([-kind.gamma * a[i][j]])
            for j in range(n)
        ]
        for i in range(n)
    ]
    total = polynomials.ZERO
    signed = kind.mode == DETERMINANT
    for perm in permutations(range(n)):
        term = polynomials.ONE
        for i in range(n):
            factor = entries[i][perm[i]]
            if polynomials.is_zero(factor):
                term = polynomials.ZERO
                break
            term = polynomials.mul(term, factor)
        if polynomials.is_zero(term):
            continue
        if signed and matrices.permutation_sign(perm) < 0:
            term = polynomials.scale(term, -1)
        total = polynomials.add(total, term)
    return total


@dataclass(frozen=True)
class Deck:
    """Edge deck of a digraph mapped through one polynomial kind.

    `polys` holds one polynomial per arc of the source digraph, sorted
    lexicographically by coefficient vector so decks compare as multisets.
    """

    n: int
    kind: PolyKind
    polys: tuple[Polynomial, ...]


def deck(g: Digraph, kind: PolyKind) -> Deck:
    """Multiset of poly_of over all single-arc deletions of g."""
    if g.m == 0:
        raise ValueError("the edge deck of an arcless digraph is empty")
    polys = sorted(poly_of(digraphs.delete_arc(g, e), kind) for e in range(g.m))
    return Deck(g.n, kind, tuple(polys))
