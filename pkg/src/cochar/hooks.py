"""Hook Schur functions, the hook basis, and operators on it.

The (k,l)-semistandard tableaux use two ordered alphabets: entries from the
first weakly increase along rows and strictly increase down columns, entries
from the second strictly increase along rows and weakly increase down
columns, and all first-alphabet entries precede second-alphabet entries.
Their weight generating function hs_poly(lam) is nonzero exactly when lam
lies in the (k,l) hook, and distinct hook partitions give linearly
independent polynomials, so finite symmetric data can be decomposed exactly
in this basis.

Products of hook Schur functions expand by the ordinary Littlewood-Richardson
rule with every summand outside the hook discarded, so the one-row and
one-column Pieri steps below enumerate ordinary strips and filter.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from cochar.partitions import (
    assemble_hook,
    char_degree,
    conjugate,
    horizontal_strips,
    in_hook,
    partition,
    partitions_of,
    split_hook,
    vertical_strips,
    weight,
    HookSplit,
)
from cochar.schur import _schur_terms
from cochar.series import norm_coeff, Coeff, Exps, Series, VarSet


def _vertical_peels(lam: tuple[int, ...]):
    """All mu contained in lam with lam/mu a vertical strip (<=1 box per row)."""
    out = [()]
    for v in reversed(tuple(lam)):
        nxt = []
        for choice in (v, v - 1):
            if choice < 0:
                continue
            for tail in out:
                if tail and choice < tail[0]:
                    continue
                nxt.append((choice,) + tail)
        out = nxt
    for mu in out:
        yield partition(mu)


@lru_cache(maxsize=None)
def _hs_terms(lam: tuple[int, ...], k: int, l: int) -> tuple[tuple[Exps, int], ...]:
    """Monomials of the hook Schur polynomial, peeling the last y variable."""
    if not in_hook(lam, k, l):
        return ()
    if l == 0:
        return _schur_terms(lam, k)
    acc: dict[Exps, int] = {}
    for mu in set(_vertical_peels(lam)):
        stripped = weight(lam) - weight(mu)
        for e, c in _hs_terms(mu, k, l - 1):
            key = e + (stripped,)
            acc[key] = acc.get(key, 0) + c
    return tuple(sorted(acc.items()))


def hs_poly(lam: Sequence[int], k: int, l: int, bound: int) -> Series:
    """Hook Schur polynomial of lam in t_1..t_k, y_1..y_l, zero above bound."""
    lam = partition(lam)
    vars_ = VarSet.ty(k, l)
    if weight(lam) > bound:
        return Series.zero(vars_, bound)
    return Series(vars_, bound, dict(_hs_terms(lam, k, l)), _raw=True)


class HookExpansion:
    """Sparse map partition -> coefficient over the (k,l) hook basis."""

    __slots__ = ("k", "l", "bound", "coeffs")

    def __init__(self, k: int, l: int, bound: int,
                 coeffs: Mapping[tuple[int, ...], Coeff] | None = None):
        if k < 0 or l < 0 or k + l < 1:
            raise ValueError("need a nonempty hook")
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        self.k = k
        self.l = l
        self.bound = bound
        clean: dict[tuple[int, ...], Coeff] = {}
        for lam, c in (coeffs or {}).items():
            lam = partition(lam)
            if not in_hook(lam, k, l):
                raise ValueError(f"partition {lam} lies outside the ({k},{l}) hook")
            if weight(lam) > bound:
                continue
            c = norm_coeff(c)
            if c:
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def unit(cls, k: int, l: int, bound: int) -> "HookExpansion":
        return cls(k, l, bound, {(): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, lam: Sequence[int]) -> Coeff:
        return self.coeffs.get(partition(lam), 0)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.coeffs, key=lambda p: (weight(p), p))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HookExpansion):
            return NotImplemented
        return ((self.k, self.l, self.bound) == (other.k, other.l, other.bound)
                and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return (f"HookExpansion(k={self.k}, l={self.l}, bound={self.bound}, "
                f"{len(self.coeffs)} terms)")

    def __add__(self, other: "HookExpansion") -> "HookExpansion":
        if (self.k, self.l) != (other.k, other.l):
            raise ValueError("mismatched hooks")
        bound = min(self.bound, other.bound)
        out = {lam: c for lam, c in self.coeffs.items() if weight(lam) <= bound}
        for lam, c in other.coeffs.items():
            if weight(lam) > bound:
                continue
            s = out.get(lam, 0) + c
            if s:
                out[lam] = norm_coeff(s)
            else:
                out.pop(lam, None)
        return HookExpansion(self.k, self.l, bound, out)

    def scale(self, c: Coeff) -> "HookExpansion":
        c = norm_coeff(c)
        if not c:
            return HookExpansion(self.k, self.l, self.bound)
        return HookExpansion(self.k, self.l, self.bound,
                             {lam: norm_coeff(v * c) for lam, v in self.coeffs.items()})

    def to_series(self) -> Series:
        """Synthesize sum of coeff * hook Schur polynomial."""
        out = Series.zero(VarSet.ty(self.k, self.l), self.bound)
        for lam, c in self.coeffs.items():
            out = out + hs_poly(lam, self.k, self.l, self.bound).scale(c)
        return out


def hs_decompose(g: Series, k: int, l: int) -> HookExpansion:
    """Write g in the hook basis, degree by degree, or fail loudly.

    Within each total degree the basis is triangular for the block lexicographic
    order: the largest monomial of hs_poly(lam) is t^(top k rows) y^(conjugate
    of the rest), with coefficient 1, and distinct partitions give distinct
    leading monomials.  Forward substitution therefore either terminates with
    a zero residual or exposes a monomial no basis element can lead with.
    """
    if g.vars.names != VarSet.ty(k, l).names:
        raise ValueError(f"series variables {g.vars.names} do not fit hook ({k},{l})")
    coeffs: dict[tuple[int, ...], Coeff] = {}
    for n in range(g.bound + 1):
        slice_ = dict(g.degree_slice(n))
        while slice_:
            exps = max(slice_)
            top, nu = exps[:k], exps[k:]
            below = conjugate(nu)
            ok = (all(top[i] >= top[i + 1] for i in range(k - 1))
                  and all(nu[j] >= nu[j + 1] for j in range(l - 1)))
            if ok and below and k > 0:
                ok = top[k - 1] >= below[0]
            if not ok:
                raise ValueError(f"degree {n}: residual monomial {exps} "
                                 f"is not led by any hook basis element")
            lam = partition(top + below)
            c = slice_[exps]
            coeffs[lam] = norm_coeff(coeffs.get(lam, 0) + c)
            if not coeffs[lam]:
                del coeffs[lam]
            for e, v in _hs_terms(lam, k, l):
                t = slice_.get(e, 0) - c * v
                if t:
                    slice_[e] = t
                else:
                    slice_.pop(e, None)
    return HookExpansion(k, l, g.bound, coeffs)


# -- Pieri steps and derived operators ---------------------------------------


def hook_pieri_row(e: HookExpansion, n: int) -> HookExpansion:
    """Expansion of e times the one-row hook Schur function of size n."""
    out: dict[tuple[int, ...], Coeff] = {}
    for lam, c in e.coeffs.items():
        if weight(lam) + n > e.bound:
            continue
        for nu in horizontal_strips(lam, n):
            if in_hook(nu, e.k, e.l):
                out[nu] = out.get(nu, 0) + c
    return HookExpansion(e.k, e.l, e.bound, out)


def hook_pieri_col(e: HookExpansion, m: int) -> HookExpansion:
    """Expansion of e times the one-column hook Schur function of size m."""
    out: dict[tuple[int, ...], Coeff] = {}
    for lam, c in e.coeffs.items():
        if weight(lam) + m > e.bound:
            continue
        for nu in vertical_strips(lam, m):
            if in_hook(nu, e.k, e.l):
                out[nu] = out.get(nu, 0) + c
    return HookExpansion(e.k, e.l, e.bound, out)


def hook_row_derived(e: HookExpansion) -> HookExpansion:
    """Multiply by the sum of all one-row hook Schur functions."""
    out = HookExpansion(e.k, e.l, e.bound)
    for n in range(e.bound + 1):
        out = out + hook_pieri_row(e, n)
    return out


def hook_col_derived(e: HookExpansion) -> HookExpansion:
    """Multiply by the sum of all one-column hook Schur functions."""
    out = HookExpansion(e.k, e.l, e.bound)
    for m in range(e.bound + 1):
        out = out + hook_pieri_col(e, m)
    return out


def hook_grassmann_derived(e: HookExpansion) -> HookExpansion:
    """Half of (identity plus column-derived of row-derived); integral output."""
    doubled = e + hook_col_derived(hook_row_derived(e))
    half = doubled.scale(Fraction(1, 2))
    for lam, c in half.coeffs.items():
        if not isinstance(c, int):
            raise ValueError(f"half-sum not integral at {lam}: {c}")
    return half


def hook_grassmann_derived_power(e: HookExpansion, j: int) -> HookExpansion:
    if j < 0:
        raise ValueError("power must be nonnegative")
    for _ in range(j):
        e = hook_grassmann_derived(e)
    return e


# -- the split-variable encoding ---------------------------------------------


class HookMultSeries:
    """Series over v_1..v_k, t_1..t_k, y_1..y_l encoding a hook expansion.

    A partition lam splits into the part inside the (l^k) rectangle, the arm
    rows sticking out to the right, and the conjugated leg below; the encoded
    monomial is v^rectangle t^arm y^leg.
    """

    __slots__ = ("k", "l", "bound", "series")

    def __init__(self, k: int, l: int, bound: int, series: Series):
        if series.vars.names != VarSet.vty(k, l).names:
            raise ValueError("series variables do not match the split encoding")
        for exps in series.terms:
            self._decode_exps(exps, k, l)  # raises on malformed monomials
        self.k = k
        self.l = l
        self.bound = bound
        self.series = series.truncate(bound)

    @staticmethod
    def _decode_exps(exps: Exps, k: int, l: int) -> tuple[int, ...]:
        split = HookSplit(k, l, partition(exps[:k]), partition(exps[k : 2 * k]),
                          partition(exps[2 * k :]))
        return assemble_hook(split)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HookMultSeries):
            return NotImplemented
        return ((self.k, self.l, self.bound) == (other.k, other.l, other.bound)
                and self.series.terms == other.series.terms)

    def __repr__(self) -> str:
        return (f"HookMultSeries(k={self.k}, l={self.l}, bound={self.bound}, "
                f"{len(self.series.terms)} terms)")

    def coefficient(self, lam: Sequence[int]) -> Coeff:
        lam = partition(lam)
        if not in_hook(lam, self.k, self.l):
            return 0
        s = split_hook(lam, self.k, self.l)
        pad = lambda part, width: tuple(part) + (0,) * (width - len(part))
        exps = pad(s.lambda0, self.k) + pad(s.mu, self.k) + pad(s.nu, self.l)
        return self.series.coefficient(exps)

    def to_obj(self) -> dict:
        rows = []
        for exps, c in self.series.terms.items():
            lam = self._decode_exps(exps, self.k, self.l)
            rows.append((weight(lam), lam, exps, c))
        rows.sort(key=lambda r: (r[0], r[1]))
        return {
            "hook": [self.k, self.l],
            "terms": [
                {
                    "lambda0": list(exps[: self.k]),
                    "mu": list(exps[self.k : 2 * self.k]),
                    "nu": list(exps[2 * self.k :]),
                    "coeff": str(Fraction(c)),
                }
                for _, _, exps, c in rows
            ],
        }

    def to_json(self) -> str:
        import json

        return json.dumps(self.to_obj(), indent=2, sort_keys=False)

    @classmethod
    def from_obj(cls, obj: Mapping) -> "HookMultSeries":
        k, l = (int(x) for x in obj["hook"])
        terms: dict[Exps, Coeff] = {}
        bound = 0
        for row in obj["terms"]:
            lam0 = [int(x) for x in row["lambda0"]]
            mu = [int(x) for x in row["mu"]]
            nu = [int(x) for x in row["nu"]]
            if len(lam0) != k or len(mu) != k or len(nu) != l:
                raise ValueError("split widths do not match the hook")
            exps = tuple(lam0) + tuple(mu) + tuple(nu)
            c = Fraction(row["coeff"])
            terms[exps] = norm_coeff(c)
            bound = max(bound, sum(exps))
        series = Series(VarSet.vty(k, l), bound, terms)
        return cls(k, l, bound, series)


def encode_hook_mult(e: HookExpansion) -> HookMultSeries:
    """Pack a hook expansion into the split-variable series."""
    vars_ = VarSet.vty(e.k, e.l)
    pad = lambda part, width: tuple(part) + (0,) * (width - len(part))
    terms: dict[Exps, Coeff] = {}
    for lam, c in e.coeffs.items():
        s = split_hook(lam, e.k, e.l)
        exps = pad(s.lambda0, e.k) + pad(s.mu, e.k) + pad(s.nu, e.l)
        terms[exps] = c
    return HookMultSeries(e.k, e.l, e.bound,
                          Series(vars_, e.bound, terms, _raw=True))


def decode_hook_mult(m: HookMultSeries) -> HookExpansion:
    """Unpack the split-variable series back to the hook basis (inverse)."""
    coeffs: dict[tuple[int, ...], Coeff] = {}
    for exps, c in m.series.terms.items():
        lam = HookMultSeries._decode_exps(exps, m.k, m.l)
        coeffs[lam] = c
    return HookExpansion(m.k, m.l, m.bound, coeffs)


def utn_hook_mult_series(n: int, k: int, l: int, bound: int) -> HookMultSeries:
    """Split-encoded multiplicity series of the triangular algebra over E.

    Signed binomial sum over (j, q, lam) of the j-th iterate of the hook
    Grassmann step seeded at lam; seeds outside the hook contribute the zero
    function and are skipped.  Final coefficients must be nonnegative
    integers.
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = HookExpansion(k, l, bound)
    for j in range(1, n + 1):
        for q in range(j):
            sign = (-1) ** (j - 1 - q)
            for lam in partitions_of(q):
                if not in_hook(lam, k, l):
                    continue
                c = sign * comb(n, j) * comb(j - 1, q) * char_degree(lam)
                seed = HookExpansion(k, l, bound, {lam: 1})
                total = total + hook_grassmann_derived_power(seed, j).scale(c)
    for lam, c in total.coeffs.items():
        if not isinstance(c, int) or c < 0:
            raise ValueError(f"multiplicity of {lam} is {c}, not a nonnegative integer")
    return encode_hook_mult(total)
