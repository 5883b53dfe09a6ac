"""Formal Schur-basis expansions with Laurent-polynomial coefficients.

Schur symbols are never expanded into polynomials except in the two oracles
(the two-variable specialization and the brute-force semistandard-filling
sum).  The empty partition acts as the multiplicative unit and is counted
as a one-part (and hook) shape so the inclusion-exclusion lifts close up.
"""

from .qpoly import LaurentPoly, ZERO, ONE
from .shapes import Partition, check_partition, conjugate, is_hook, normalize_shape


class SchurExpansion:
    """A finite map partition -> LaurentPoly, the coefficient of s_lambda."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        canonical = {}
        if terms:
            for lam, coeff in terms.items():
                lam = check_partition(lam)
                if isinstance(coeff, int):
                    coeff = LaurentPoly.const(coeff)
                if coeff.is_zero():
                    continue
                prev = canonical.get(lam)
                coeff = coeff if prev is None else prev + coeff
                if coeff.is_zero():
                    canonical.pop(lam, None)
                else:
                    canonical[lam] = coeff
        self._terms = canonical

    @classmethod
    def zero(cls) -> "SchurExpansion":
        return cls()

    @classmethod
    def term(cls, lam, coeff=1) -> "SchurExpansion":
        return cls({tuple(lam): coeff})

    def items(self):
        """(partition, coefficient) pairs, largest size first."""
        return sorted(
            self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
        )

    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def coefficient(self, lam) -> LaurentPoly:
        return self._terms.get(tuple(lam), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        out = dict(self._terms)
        for lam, coeff in other._terms.items():
            s = out.get(lam, ZERO) + coeff
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
        result = SchurExpansion.__new__(SchurExpansion)
        result._terms = out
        return result

    def __neg__(self):
        result = SchurExpansion.__new__(SchurExpansion)
        result._terms = {lam: -c for lam, c in self._terms.items()}
        return result

    def __sub__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "SchurExpansion":
        if isinstance(factor, int):
            factor = LaurentPoly.const(factor)
        return SchurExpansion({lam: factor * c for lam, c in self._terms.items()})

    def __eq__(self, other):
        return isinstance(other, SchurExpansion) and self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    def is_schur_positive(self) -> bool:
        return not any(c.has_negative_coeff() for c in self._terms.values())

    def map_at_zero(self, name: str) -> "SchurExpansion":
        """Set a coefficient variable to zero in every coefficient."""
        return SchurExpansion(
            {lam: c.at_zero(name) for lam, c in self._terms.items()}
        )

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for lam, coeff in self.items():
            symbol = "1" if not lam else "s[" + ",".join(str(p) for p in lam) + "]"
            if coeff.is_one():
                pieces.append(symbol)
            elif coeff.is_constant():
                value = coeff.constant_value()
                pieces.append(f"{value} {symbol}" if lam else str(value))
            else:
                pieces.append(f"({coeff}) {symbol}" if lam else f"({coeff})")
        return " + ".join(pieces)

    def __repr__(self):
        return f"SchurExpansion({self})"

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"lambda": list(lam), "coeff": coeff.to_json_obj()}
                for lam, coeff in self.items()
            ]
        }

    @classmethod
    def from_json_obj(cls, obj) -> "SchurExpansion":
        return cls(
            {
                tuple(d["lambda"]): LaurentPoly.from_json_obj(d["coeff"])
                for d in obj["terms"]
            }
        )


# -- shape classes for restriction -------------------------------------------


def shape_class_predicate(cls):
    """Resolve a shape-class name (or explicit shape collection) to a predicate.

    Named classes: "hooks", "one_part", "V<b>" (e.g. "V1", "V2"),
    "two_columns" (alias of V2).  The empty partition belongs to hooks and
    one_part; V_b is the shapes (a, b, 1^k) with a >= b.
    """
    if callable(cls):
        return cls
    if isinstance(cls, str):
        name = cls.lower()
        if name == "hooks":
            return is_hook
        if name == "one_part":
            return lambda lam: len(lam) <= 1
        if name in ("two_columns", "two-column", "r"):
            name = "v2"
        if name.startswith("v") and name[1:].isdigit():
            b = int(name[1:])
            if b < 1:
                raise ValueError("V classes need b >= 1")
            return lambda lam: (
                len(lam) >= 2
                and lam[1] == b
                and all(p == 1 for p in lam[2:])
            )
        raise ValueError(f"unknown shape class {cls!r}")
    explicit = {check_partition(lam) for lam in cls}
    return lambda lam: lam in explicit


def restrict(f: SchurExpansion, cls) -> SchurExpansion:
    """Keep exactly the terms whose index lies in the shape class."""
    keep = shape_class_predicate(cls)
    return SchurExpansion({lam: c for lam, c in f._terms.items() if keep(lam)})


# -- the adjoint Pieri operator and friends -----------------------------------


def vertical_strips(lam: Partition, k: int) -> list[Partition]:
    """Partitions mu <= lam with lam/mu a vertical strip of k boxes."""
    lam = tuple(lam)
    rows = len(lam)
    out = []

    def rec(i, removed, prev, acc):
        if removed > k:
            return
        if i == rows:
            if removed == k:
                shape = normalize_shape(acc)
                if shape is not None:
                    out.append(shape)
            return
        for delta in (0, 1):
            part = lam[i] - delta
            if part < 0 or part > prev:
                continue
            acc.append(part)
            rec(i + 1, removed + delta, part, acc)
            acc.pop()

    rec(0, 0, lam[0] if lam else 0, [])
    return out


def e_perp(k: int, f: SchurExpansion) -> SchurExpansion:
    """Linear extension of the adjoint dual Pieri rule: delete a vertical
    strip of k boxes in every way (at most one box per row)."""
    if k < 0:
        raise ValueError("e_perp needs k >= 0")
    if k == 0:
        return f
    out = SchurExpansion.zero()
    for lam, coeff in f._terms.items():
        for mu in vertical_strips(lam, k):
            out = out + SchurExpansion({mu: coeff})
    return out


def omega(f: SchurExpansion) -> SchurExpansion:
    """Conjugate every index partition (an involution)."""
    return SchurExpansion({conjugate(lam): c for lam, c in f._terms.items()})


def psi(f: SchurExpansion) -> LaurentPoly:
    """The hook fingerprint s_lambda -> q^lambda_1 * t^(len(lambda)-1).

    The empty partition maps to 1.  Injective on hook-supported expansions.
    """
    out = ZERO
    for lam, coeff in f._terms.items():
        if not lam:
            out = out + coeff
        else:
            out = out + coeff * LaurentPoly.term(1, eq=lam[0], et=len(lam) - 1)
    return out


def psi_inverse_hooks(p: LaurentPoly) -> SchurExpansion:
    """Invert psi on hook-supported data: q^a t^k -> s_(a, 1^k), a >= 1."""
    if not p.uses_only({"q", "t"}):
        raise ValueError("psi_inverse_hooks needs a polynomial in q, t only")
    out = {}
    for (a, k, _), coeff in p.items():
        if a < 1 or k < 0:
            raise ValueError(f"monomial q^{a} t^{k} is not a hook fingerprint")
        out[(a,) + (1,) * k] = coeff
    return SchurExpansion(out)


def specialize2(f: SchurExpansion) -> LaurentPoly:
    """Evaluate every Schur index in the two variables (q, t).

    Indices of length > 2 vanish; s_(a) and s_(a,b) use the closed
    two-variable forms, which the semistandard oracle gates in the tests.
    """
    out = ZERO
    for lam, coeff in f._terms.items():
        out = out + coeff * _schur_qt(lam)
    return out


def _schur_qt(lam: Partition) -> LaurentPoly:
    if len(lam) > 2:
        return ZERO
    if not lam:
        return ONE
    a = lam[0]
    b = lam[1] if len(lam) == 2 else 0
    # (qt)^b * h_{a-b}(q, t)
    out = ZERO
    for i in range(a - b + 1):
        out = out + LaurentPoly.term(1, eq=b + i, et=b + (a - b - i))
    return out


def ssyt_specialize_oracle(lam, m: int) -> LaurentPoly:
    """Brute-force Schur polynomial in m <= 3 variables (q, t, z).

    Enumerates semistandard fillings with entries in 1..m (weakly increasing
    rows, strictly increasing columns) and sums the content monomials.
    Oracle scale only: |lam| <= 10.
    """
    lam = check_partition(lam)
    n = sum(lam)
    if m > 3:
        raise ValueError("oracle supports at most 3 variables")
    if n > 10:
        raise ValueError(f"oracle bound exceeded: |lambda| = {n} > 10")
    if len(lam) > m:
        return ZERO
    rows = [[0] * p for p in lam]
    out = ZERO
    counts = [0, 0, 0]

    def fill(r, c):
        nonlocal out
        if r == len(lam):
            out = out + LaurentPoly.term(1, *counts)
            return
        nr, nc = (r, c + 1) if c + 1 < lam[r] else (r + 1, 0)
        lo = rows[r][c - 1] if c else 1
        lo = max(lo, rows[r - 1][c] + 1 if r and c < lam[r - 1] else 1)
        for v in range(lo, m + 1):
            rows[r][c] = v
            counts[v - 1] += 1
            fill(nr, nc)
            counts[v - 1] -= 1
        rows[r][c] = 0

    fill(0, 0)
    return out
