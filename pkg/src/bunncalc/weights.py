"""Weight multiplicities, Levi branching, and centralizer-isotypic slices of
highest-weight representations of GL_n.

Multiplicities come from triangular-pattern enumeration; branching to a block
Levi is extracted from the weight character by repeatedly splitting off the
lexicographically largest remaining weight.  Everything is exact and desk
scale by design.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bundles import DomainError
from .kottwitz import BudgetError
from .lparams import Character, LParamShape

HighestWeight = tuple[int, ...]

# caps for pattern enumeration; weight size is measured after the
# determinant-twist normalization
MAX_N = 8
MAX_WEIGHT_SIZE = 12


def check_dominant(lam, n: int | None = None) -> HighestWeight:
    lam = tuple(int(x) for x in lam)
    if n is not None and len(lam) != n:
        raise DomainError(f"weight must have length {n}, got {len(lam)}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"weight {lam} is not dominant (weakly decreasing)")
    return lam


def dual_weight(lam) -> HighestWeight:
    """Highest weight of the dual representation: negated and reversed."""
    lam = check_dominant(lam)
    return tuple(-x for x in reversed(lam))


def weyl_dim(lam, m: int) -> int:
    """prod_{a<b} (lam_a - lam_b + b - a)/(b - a)."""
    lam = check_dominant(lam, m)
    out = Fraction(1)
    for a in range(m):
        for b in range(a + 1, m):
            out *= Fraction(lam[a] - lam[b] + b - a, b - a)
    assert out.denominator == 1
    return int(out)


def _gt_weights(top: HighestWeight):
    """Yield the weight of every interlacing triangular pattern under ``top``."""

    def rows_below(upper):
        # one entry shorter, interlacing: upper[i] >= lower[i] >= upper[i+1];
        # weak decrease of the lower row is then automatic
        k = len(upper) - 1
        cur = [0] * k

        def fill(i):
            if i == k:
                yield tuple(cur)
                return
            for v in range(upper[i], upper[i + 1] - 1, -1):
                cur[i] = v
                yield from fill(i + 1)

        yield from fill(0)

    def descend(upper, sums):
        sums = sums + [sum(upper)]
        if len(upper) == 1:
            yield sums
            return
        for lower in rows_below(upper):
            yield from descend(lower, sums)

    for sums in descend(tuple(top), []):
        # sums lists row totals top row first; successive differences give the
        # weight coordinates from the top down
        incr = [a - b for a, b in zip(sums, sums[1:] + [0])]
        yield tuple(incr[::-1])


@lru_cache(maxsize=None)
def _weight_mults_cached(n: int, lam: HighestWeight) -> tuple[tuple[HighestWeight, int], ...]:
    lam = check_dominant(lam, n)
    c = lam[-1]
    norm = tuple(x - c for x in lam)
    if n > MAX_N or sum(norm) > MAX_WEIGHT_SIZE:
        raise BudgetError(
            f"weight enumeration out of budget: n={n} (max {MAX_N}), "
            f"normalized size {sum(norm)} (max {MAX_WEIGHT_SIZE})"
        )
    counts: dict[HighestWeight, int] = {}
    for w in _gt_weights(norm):
        shifted = tuple(x + c for x in w)
        counts[shifted] = counts.get(shifted, 0) + 1
    return tuple(sorted(counts.items()))


def weight_multiplicities(n: int, lam) -> dict[HighestWeight, int]:
    """Map weight -> multiplicity for r_lam on GL_n.

    Dominant lam may have negative entries; they are absorbed into a
    determinant twist (subtract lam_n, enumerate, shift every weight back).
    """
    lam = check_dominant(lam, n)
    return dict(_weight_mults_cached(n, lam))


def _product_weight_char(parts: tuple[tuple[int, HighestWeight], ...]) -> dict:
    """Weight character of an outer tensor product across blocks."""
    acc: dict[tuple[int, ...], int] = {(): 1}
    for m, lam in parts:
        block = weight_multiplicities(m, lam)
        nxt: dict[tuple[int, ...], int] = {}
        for w0, c0 in acc.items():
            for w1, c1 in block.items():
                key = w0 + w1
                nxt[key] = nxt.get(key, 0) + c0 * c1
        acc = nxt
    return acc


@lru_cache(maxsize=None)
def levi_branching(
    n: int, lam: HighestWeight, blocks: tuple[int, ...]
) -> tuple[tuple[tuple[HighestWeight, ...], int], ...]:
    """Restrict r_lam to GL_{n_1} x ... x GL_{n_r}.

    Returns ((lam^(1), ..., lam^(r)), mult) pairs, descending lexicographically
    on the concatenated weights.  The character of the restriction is invariant
    under each block's permutations, so its largest remaining weight is a tuple
    of per-block dominant highest weights; split it off with its full product
    character and repeat until nothing is left.
    """
    lam = check_dominant(lam, n)
    blocks = tuple(int(b) for b in blocks)
    if sum(blocks) != n or any(b < 1 for b in blocks):
        raise DomainError(f"blocks {blocks} do not partition {n}")
    c = lam[-1]
    if c != 0:
        shifted = levi_branching(n, tuple(x - c for x in lam), blocks)
        return tuple(
            (tuple(tuple(x + c for x in w) for w in ws), mult)
            for ws, mult in shifted
        )
    char = dict(weight_multiplicities(n, lam))
    cuts = []
    start = 0
    for b in blocks:
        cuts.append((start, start + b))
        start += b
    out = []
    while char:
        w = max(char)
        mult = char[w]
        ws = tuple(w[a:b] for a, b in cuts)
        for piece in ws:
            check_dominant(piece)
        term = _product_weight_char(tuple(zip(blocks, ws)))
        for tw, tc in term.items():
            left = char.get(tw, 0) - mult * tc
            if left < 0:
                raise AssertionError("branching extraction went negative")
            if left:
                char[tw] = left
            else:
                char.pop(tw, None)
        out.append((ws, mult))
    out.sort(key=lambda t: tuple(x for w in t[0] for x in w), reverse=True)
    return tuple(out)


def _monomial_str(w: HighestWeight, label: str, ascii_mode: bool) -> str:
    if all(x == 0 for x in w):
        return "1"
    if len(w) == 1:
        k = w[0]
        return label if k == 1 else f"{label}^{k}"
    if all(x in (0, 1) for x in w):
        d = sum(w)
        lam = "Lam" if ascii_mode else "Λ"
        return label if d == 1 else f"{lam}^{d} {label}"
    if w[0] > 1 and all(x == 0 for x in w[1:]):
        return f"Sym^{w[0]} {label}"
    return f"S_({','.join(map(str, w))})({label})"


@dataclass(frozen=True)
class WeilSymbol:
    """Formal sum of tensor monomials of per-component highest weights."""

    blocks: tuple[int, ...]
    labels: tuple[str, ...]
    terms: tuple[tuple[tuple[HighestWeight, ...], int], ...]

    def __post_init__(self) -> None:
        monos = [ws for ws, _ in self.terms]
        if len(set(monos)) != len(monos):
            raise DomainError("monomials must be pairwise distinct")
        if any(m < 1 for _, m in self.terms):
            raise DomainError("multiplicities must be positive")

    @property
    def dim(self) -> int:
        total = 0
        for ws, mult in self.terms:
            prod = 1
            for w, m in zip(ws, self.blocks):
                prod *= weyl_dim(w, m)
            total += mult * prod
        return total

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def describe(self, ascii_mode: bool = False, dual: bool = False) -> str:
        if not self.terms:
            return "0"
        otimes = "(x)" if ascii_mode else "⊗"
        oplus = " + " if ascii_mode else " ⊕ "
        rendered = []
        for ws, mult in self.terms:
            factors = [
                _monomial_str(w, label, ascii_mode)
                for w, label in zip(ws, self.labels)
            ]
            factors = [f for f in factors if f != "1"] or ["1"]
            mono = otimes.join(factors)
            if dual:
                mono = f"({mono})^v" if ascii_mode else f"({mono})∨"
            if mult != 1:
                mono = (f"{mult}*" if ascii_mode else f"{mult}·") + mono
            rendered.append(mono)
        return oplus.join(rendered)


def sigma_chi(shape: LParamShape, lam, chi: Character) -> WeilSymbol:
    """Isotypic slice of r_lam for the centralizer character chi.

    Branch to the component-dimension blocks and keep the terms whose
    per-block central characters |lam^(i)| match the exponents d_i.
    """
    chi = shape.check_chi(chi)
    lam = check_dominant(lam, shape.n)
    terms = [
        (ws, mult)
        for ws, mult in levi_branching(shape.n, lam, shape.dims)
        if all(sum(w) == d for w, d in zip(ws, chi))
    ]
    return WeilSymbol(
        blocks=shape.dims,
        labels=tuple(c.label for c in shape.components),
        terms=tuple(terms),
    )


def dualize_symbol(sym: WeilSymbol) -> WeilSymbol:
    """Replace every monomial weight by its dual; dims are unchanged."""
    terms = tuple(
        (tuple(dual_weight(w) for w in ws), mult) for ws, mult in sym.terms
    )
    return WeilSymbol(blocks=sym.blocks, labels=sym.labels, terms=terms)
