"""Schur polynomials, basis decomposition, Pieri products, multiplicity series.

A symmetric series ``g`` in d variables decomposes as ``sum m_lam * S_lam``
over partitions with at most d parts.  :class:`SchurExpansion` holds the
``m_lam``; :class:`MultSeries` packs them into a generating series, either on
the exponents ``lam`` themselves (T-form) or on the consecutive differences
of ``lam`` (V-form).
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from cochar.partitions import (
    horizontal_strips,
    partition,
    vertical_strips,
    weight,
)
from cochar.series import Coeff, Exps, norm_coeff, Series, VarSet


# -- Schur polynomials ----------------------------------------------------


def _peels(lam: tuple[int, ...]):
    """All mu obtained by removing a horizontal strip from lam."""

    def rec(i: int, acc: list[int]):
        if i == len(lam):
            yield partition(acc)
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        for v in range(lo, lam[i] + 1):
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


@lru_cache(maxsize=None)
def _schur_terms(lam: tuple[int, ...], d: int) -> tuple[tuple[Exps, int], ...]:
    """Monomials of S_lam(t_1..t_d), tabulated by weight of the last variable.

    Peeling the horizontal strip filled with the letter d enumerates exactly
    the semistandard tableaux with entries in {1,...,d}, grouped by content.
    """
    if len(lam) > d:
        return ()
    if not lam:
        return (((0,) * d, 1),)
    out: dict[Exps, int] = {}
    for mu in _peels(lam):
        power = sum(lam) - sum(mu)
        for exps, c in _schur_terms(mu, d - 1):
            key = exps + (power,)
            out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def schur_poly(lam: Sequence[int], d: int, bound: int) -> Series:
    """S_lam in d variables; the zero series when lam has more than d parts."""
    lam = partition(lam)
    vars_ = VarSet.t(d)
    if weight(lam) > bound:
        return Series.zero(vars_, bound)
    return Series(vars_, bound, dict(_schur_terms(lam, d)), _raw=True)


def elementary_poly(m: int, d: int, bound: int) -> Series:
    """m-th elementary symmetric polynomial e_m(t_1..t_d) = S_(1^m)."""
    return schur_poly((1,) * m, d, bound)


# -- expansions -----------------------------------------------------------


class SchurExpansion:
    """Sparse map partition -> coefficient, for series with <= d parts support."""

    __slots__ = ("d", "bound", "coeffs")

    def __init__(self, d: int, bound: int,
                 coeffs: Mapping[tuple[int, ...], Coeff] | None = None):
        if d < 0 or bound < 0:
            raise ValueError("d and bound must be nonnegative")
        self.d = d
        self.bound = bound
        clean: dict[tuple[int, ...], Coeff] = {}
        for lam, c in (coeffs or {}).items():
            lam = partition(lam)
            if len(lam) > d:
                raise ValueError(f"partition {lam} has more than {d} parts")
            if weight(lam) > bound:
                continue
            c = norm_coeff(c)
            if c:
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def unit(cls, d: int, bound: int) -> "SchurExpansion":
        return cls(d, bound, {(): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, lam: Sequence[int]) -> Coeff:
        return self.coeffs.get(partition(lam), 0)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.coeffs, key=lambda p: (weight(p), p))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return (self.d, self.bound, self.coeffs) == (other.d, other.bound, other.coeffs)

    def __repr__(self) -> str:
        return f"SchurExpansion(d={self.d}, bound={self.bound}, {len(self.coeffs)} terms)"

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if self.d != other.d:
            raise ValueError("mismatched variable counts")
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
        return SchurExpansion(self.d, bound, out)

    def scale(self, c: Coeff) -> "SchurExpansion":
        c = norm_coeff(c)
        if not c:
            return SchurExpansion(self.d, self.bound)
        return SchurExpansion(self.d, self.bound,
                              {lam: norm_coeff(v * c) for lam, v in self.coeffs.items()})

    def to_series(self) -> Series:
        """Synthesize sum of coeff * S_lam as a raw series."""
        out = Series.zero(VarSet.t(self.d), self.bound)
        for lam, c in self.coeffs.items():
            out = out + schur_poly(lam, self.d, self.bound).scale(c)
        return out

    def to_obj(self) -> list[dict]:
        rows = sorted(self.coeffs.items(), key=lambda kv: (weight(kv[0]), kv[0]))
        return [{"partition": list(lam), "coeff": str(Fraction(c))} for lam, c in rows]

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"))

    @classmethod
    def from_obj(cls, d: int, bound: int, obj: Iterable[Mapping]) -> "SchurExpansion":
        coeffs: dict[tuple[int, ...], Coeff] = {}
        for row in obj:
            lam = partition(row["partition"])
            coeffs[lam] = coeffs.get(lam, 0) + Fraction(row["coeff"])
        return cls(d, bound, coeffs)


def pieri_row(e: SchurExpansion, m: int) -> SchurExpansion:
    """Multiply by the full homogeneous symmetric function of degree m."""
    out: dict[tuple[int, ...], Coeff] = {}
    for lam, c in e.coeffs.items():
        if weight(lam) + m > e.bound:
            continue
        for mu in horizontal_strips(lam, m, max_parts=e.d):
            out[mu] = out.get(mu, 0) + c
    return SchurExpansion(e.d, e.bound, out)


def pieri_col(e: SchurExpansion, m: int) -> SchurExpansion:
    """Multiply by the elementary symmetric function of degree m."""
    out: dict[tuple[int, ...], Coeff] = {}
    for lam, c in e.coeffs.items():
        if weight(lam) + m > e.bound:
            continue
        for mu in vertical_strips(lam, m, max_parts=e.d):
            out[mu] = out.get(mu, 0) + c
    return SchurExpansion(e.d, e.bound, out)


# -- Vandermonde machinery ------------------------------------------------


def perm_sign(sigma: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(sigma)) for j in range(i + 1, len(sigma))
                     if sigma[i] > sigma[j])
    return -1 if inversions % 2 else 1


def vandermonde(d: int, bound: int) -> Series:
    """prod_{i<j} (t_i - t_j) via the determinant expansion."""
    terms: dict[Exps, Coeff] = {}
    for sigma in permutations(range(d)):
        exps = tuple(d - 1 - sigma[i] for i in range(d))
        terms[exps] = perm_sign(sigma)
    return Series(VarSet.t(d), bound, terms)


def schur_decompose(g: Series, d: int | None = None) -> SchurExpansion:
    """Decompose a symmetric truncated series in the Schur basis.

    Multiplies by the Vandermonde product (homogeneous, so raising the bound
    by its degree stays exact), reads coefficients at strictly decreasing
    exponents, and verifies the full antisymmetrized residual.  Raises
    ``ValueError`` when the input is not symmetric within its bound.
    """
    if d is None:
        d = g.vars.arity
    elif d != g.vars.arity:
        raise ValueError(f"series has {g.vars.arity} variables, not {d}")
    n = g.bound
    dv = d * (d - 1) // 2
    prod = g.truncate(n + dv) * vandermonde(d, n + dv)
    delta = tuple(d - 1 - i for i in range(d))
    coeffs: dict[tuple[int, ...], Coeff] = {}
    for p, c in prod.terms.items():
        if all(p[i] > p[i + 1] for i in range(d - 1)):
            coeffs[partition(tuple(p[i] - delta[i] for i in range(d)))] = c
    # full residual check: the product must be exactly the antisymmetrization
    # of the staircase monomials read above, each orbit complete with signs
    for p, c in prod.terms.items():
        if len(set(p)) < d:
            raise ValueError(f"input not symmetric within bound: residual at {p}")
        order = tuple(sorted(range(d), key=lambda i: -p[i]))
        ps = tuple(p[i] for i in order)
        lam = partition(tuple(ps[i] - delta[i] for i in range(d)))
        if coeffs.get(lam, 0) != perm_sign(order) * c:
            raise ValueError(f"input not symmetric within bound: residual at {p}")
    if len(prod.terms) != math.factorial(d) * len(coeffs):
        raise ValueError("input not symmetric within bound: missing orbit terms")
    return SchurExpansion(d, n, coeffs)


# -- multiplicity series ---------------------------------------------------


class MultSeries:
    """Generating series of Schur coefficients, in T-form or V-form.

    T-form stores the monomial t^lam per partition; V-form stores
    v^(consecutive differences of lam).  The ``bound`` is always a bound on
    the partition weight, which for V-form exceeds the series total degree.
    """

    __slots__ = ("form", "d", "bound", "series")

    def __init__(self, form: str, d: int, bound: int, series: Series):
        if form not in ("T", "V"):
            raise ValueError(f"form must be 'T' or 'V', not {form!r}")
        expected = VarSet.t(d) if form == "T" else VarSet.v(d)
        if series.vars.names != expected.names:
            raise ValueError(f"series variables {series.vars.names} do not match {form}-form")
        kept: dict[Exps, Coeff] = {}
        for e, c in series.terms.items():
            if form == "T":
                if any(e[i] < e[i + 1] for i in range(d - 1)):
                    raise ValueError(f"T-form exponent {e} is not a partition shape")
                w = sum(e)
            else:
                w = sum((i + 1) * e[i] for i in range(d))
            if w <= bound:
                kept[e] = c
        self.form = form
        self.d = d
        self.bound = bound
        self.series = Series(expected, bound, kept, _raw=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultSeries):
            return NotImplemented
        return ((self.form, self.d, self.bound) == (other.form, other.d, other.bound)
                and self.series.terms == other.series.terms)

    def __repr__(self) -> str:
        return (f"MultSeries({self.form}-form, d={self.d}, bound={self.bound}, "
                f"{len(self.series.terms)} terms)")

    def coefficient(self, lam: Sequence[int]) -> Coeff:
        lam = partition(lam)
        if len(lam) > self.d:
            return 0
        if self.form == "T":
            exps = lam + (0,) * (self.d - len(lam))
        else:
            full = lam + (0,) * (self.d - len(lam) + 1)
            exps = tuple(full[i] - full[i + 1] for i in range(self.d))
        return self.series.coefficient(exps)


def to_mult_series(e: SchurExpansion, form: str = "T") -> MultSeries:
    """Pack an expansion into a multiplicity series."""
    if form not in ("T", "V"):
        raise ValueError(f"form must be 'T' or 'V', not {form!r}")
    vars_ = VarSet.t(e.d) if form == "T" else VarSet.v(e.d)
    terms: dict[Exps, Coeff] = {}
    for lam, c in e.coeffs.items():
        full = lam + (0,) * (e.d - len(lam) + 1)
        if form == "T":
            exps = full[: e.d]
        else:
            exps = tuple(full[i] - full[i + 1] for i in range(e.d))
        terms[exps] = c
    return MultSeries(form, e.d, e.bound, Series(vars_, e.bound, terms, _raw=True))


def from_mult_series(m: MultSeries) -> SchurExpansion:
    """Unpack a multiplicity series back into an expansion (round-trip inverse)."""
    coeffs: dict[tuple[int, ...], Coeff] = {}
    for e, c in m.series.terms.items():
        if m.form == "T":
            lam = partition(e)
        else:
            lam = partition(tuple(sum(e[i:]) for i in range(m.d)))
        coeffs[lam] = c
    return SchurExpansion(m.d, m.bound, coeffs)


def convert_mult_series(m: MultSeries, form: str) -> MultSeries:
    if form == m.form:
        return m
    return to_mult_series(from_mult_series(m), form)


def verify_mult_series(f: Series, h: MultSeries) -> bool:
    """Check a series against its claimed multiplicity series.

    Uses the antisymmetrization identity: f times the Vandermonde product
    equals the signed sum over permutations of the staircase monomial times
    the permuted multiplicity series.
    """
    h = convert_mult_series(h, "T")
    d = h.d
    if f.vars.names != VarSet.t(d).names:
        return False
    n = min(f.bound, h.bound)
    dv = d * (d - 1) // 2
    lhs = f.truncate(n).truncate(n + dv) * vandermonde(d, n + dv)
    rhs: dict[Exps, Coeff] = {}
    for sigma in permutations(range(d)):
        sgn = perm_sign(sigma)
        for e, c in h.series.terms.items():
            if sum(e) > n:
                continue
            out = [0] * d
            for i in range(d):
                out[sigma[i]] = e[i] + d - 1 - i
            key = tuple(out)
            s = rhs.get(key, 0) + sgn * c
            if s:
                rhs[key] = s
            else:
                del rhs[key]
    return lhs.terms == {e: norm_coeff(c) for e, c in rhs.items() if c}
