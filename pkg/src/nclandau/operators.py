"""Exact polynomial algebra over the canonical operators x, y, z, p_x, p_y, p_z.

Two term-map containers live here:

* ``OperatorPoly`` — noncommutative polynomials obeying [x_i, p_j] = i hbar
  delta_ij, kept in normal order (positions left of momenta).  ``@`` is the
  operator product, ``*`` is scalar multiplication.
* ``PhaseSpaceFn`` — ordinary commutative polynomials in the same six
  symbols, the natural habitat of the star product.

Both are immutable after construction; every operation returns a fresh
object, so values can be shared freely between threads.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, NamedTuple

from .errors import ConfigurationError, DomainError

#: the six canonical symbols in normal order: positions first, then momenta,
#: alphabetical within each block.
SYMBOLS = ("x", "y", "z", "px", "py", "pz")

_PAIRS = (("x", "px"), ("y", "py"), ("z", "pz"))  # conjugate pairs


class Monomial(NamedTuple):
    """Exponents of a normal-ordered monomial x^a y^b z^c px^d py^e pz^f."""

    x: int = 0
    y: int = 0
    z: int = 0
    px: int = 0
    py: int = 0
    pz: int = 0

    def degree(self) -> int:
        return sum(self)

    def exponent(self, sym: str) -> int:
        return self[SYMBOLS.index(sym)]

    def __str__(self) -> str:
        if self.degree() == 0:
            return "1"
        parts = []
        for sym, e in zip(SYMBOLS, self):
            if e == 1:
                parts.append(sym)
            elif e > 1:
                parts.append(f"{sym}^{e}")
        return " ".join(parts)


#: the unit monomial (empty product)
UNIT = Monomial()


def _check_monomial(mono) -> Monomial:
    if not isinstance(mono, Monomial):
        mono = Monomial(*mono)
    if any((not isinstance(e, int)) or e < 0 for e in mono):
        raise DomainError(f"monomial exponents must be non-negative integers: {mono!r}")
    return mono


def _canonical(terms: Mapping, drop_tol: float) -> dict:
    """Coerce keys to Monomial, merge duplicates, drop negligible coefficients."""
    out: dict[Monomial, complex] = {}
    for mono, coef in terms.items():
        mono = _check_monomial(mono)
        c = out.get(mono, 0) + complex(coef)
        if abs(c) <= drop_tol or c == 0:
            out.pop(mono, None)
        else:
            out[mono] = c
    return out


def _coef_str(c: complex) -> str:
    if c.imag == 0:
        return f"{c.real:g}"
    if c.real == 0:
        return f"{c.imag:g}i"
    return f"({c.real:g}{c.imag:+g}i)"


def _poly_str(terms: Mapping[Monomial, complex]) -> str:
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda m: (m.degree(), m))
    return " + ".join(f"{_coef_str(terms[k])}·{k}" for k in keys)


class OperatorPoly:
    """Normal-ordered polynomial in the canonical operators.

    Parameters:
    terms: mapping Monomial -> complex coefficient (normal-ordered basis)
    hbar:  the positive hbar used when reordering products

    The representation is canonical: equal polynomials hold identical term
    maps.  ``drop_tol`` (class attribute, default 0) controls which
    coefficients are discarded during canonicalization; the default keeps
    everything except exact zeros.
    """

    #: coefficients with magnitude <= drop_tol are removed (0 = exact zeros only)
    drop_tol = 0.0

    __slots__ = ("terms", "hbar")

    def __init__(self, terms: Mapping | None = None, hbar: float = 1.0):
        if not hbar > 0:
            raise ConfigurationError(f"hbar must be positive, got {hbar}")
        object.__setattr__(self, "hbar", float(hbar))
        object.__setattr__(self, "terms", _canonical(terms or {}, self.drop_tol))

    def __setattr__(self, name, value):
        raise AttributeError("OperatorPoly is immutable")

    # ---- constructors ----
    @classmethod
    def zero(cls, hbar: float = 1.0) -> "OperatorPoly":
        return cls({}, hbar)

    @classmethod
    def constant(cls, value: complex, hbar: float = 1.0) -> "OperatorPoly":
        return cls({UNIT: value}, hbar)

    @classmethod
    def symbol(cls, name: str, hbar: float = 1.0) -> "OperatorPoly":
        if name not in SYMBOLS:
            raise DomainError(f"unknown symbol {name!r}; expected one of {SYMBOLS}")
        return cls({Monomial(**{name: 1}): 1.0}, hbar)

    # ---- inspection ----
    def coefficient(self, mono) -> complex:
        """Stored coefficient of a monomial, or zero."""
        return self.terms.get(_check_monomial(mono), 0j)

    def degree(self) -> int:
        return max((m.degree() for m in self.terms), default=0)

    def max_abs(self) -> float:
        """Largest coefficient magnitude (0 for the zero polynomial)."""
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def __eq__(self, other) -> bool:
        if isinstance(other, OperatorPoly):
            return self.hbar == other.hbar and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.hbar, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return _poly_str(self.terms)

    # ---- linear structure ----
    def _require_same_hbar(self, other: "OperatorPoly"):
        if self.hbar != other.hbar:
            raise ConfigurationError(
                f"mixed hbar values: {self.hbar} vs {other.hbar}"
            )

    def __add__(self, other) -> "OperatorPoly":
        if not isinstance(other, OperatorPoly):
            other = OperatorPoly.constant(other, self.hbar)
        self._require_same_hbar(other)
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            terms[mono] = terms.get(mono, 0) + coef
        return OperatorPoly(terms, self.hbar)

    __radd__ = __add__

    def __neg__(self) -> "OperatorPoly":
        return OperatorPoly({m: -c for m, c in self.terms.items()}, self.hbar)

    def __sub__(self, other) -> "OperatorPoly":
        return self + (-other if isinstance(other, OperatorPoly) else -complex(other))

    def __rsub__(self, other) -> "OperatorPoly":
        return (-self) + other

    def __mul__(self, scalar) -> "OperatorPoly":
        if isinstance(scalar, OperatorPoly):
            raise TypeError("use @ for operator products, * is scalar-only")
        return OperatorPoly(
            {m: c * scalar for m, c in self.terms.items()}, self.hbar
        )

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "OperatorPoly":
        return self * (1.0 / scalar)

    # ---- operator product ----
    def __matmul__(self, other: "OperatorPoly") -> "OperatorPoly":
        self._require_same_hbar(other)
        terms: dict[Monomial, complex] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                for mono, w in _mono_product(m1, m2, self.hbar):
                    terms[mono] = terms.get(mono, 0) + c1 * c2 * w
        return OperatorPoly(terms, self.hbar)

    def commutator(self, other: "OperatorPoly") -> "OperatorPoly":
        return self @ other - other @ self


def _mono_product(m1: Monomial, m2: Monomial, hbar: float):
    """Normal-order the product of two normal-ordered monomials.

    Only momenta of m1 crossing matching positions of m2 generate terms:
    p^d x^a = sum_k k! C(d,k) C(a,k) (-i hbar)^k x^(a-k) p^(d-k), applied
    independently in the x, y and z sectors.  Yields (monomial, weight).
    """
    swaps = []
    for pos, mom in _PAIRS:
        d = m1.exponent(mom)
        a = m2.exponent(pos)
        kmax = min(d, a)
        swaps.append(
            [
                (k, math.comb(d, k) * math.comb(a, k) * math.factorial(k) * (-1j * hbar) ** k)
                for k in range(kmax + 1)
            ]
        )
    for kx, wx in swaps[0]:
        for ky, wy in swaps[1]:
            for kz, wz in swaps[2]:
                mono = Monomial(
                    m1.x + m2.x - kx,
                    m1.y + m2.y - ky,
                    m1.z + m2.z - kz,
                    m1.px + m2.px - kx,
                    m1.py + m2.py - ky,
                    m1.pz + m2.pz - kz,
                )
                yield mono, wx * wy * wz


# ---- spec-level operation names -------------------------------------------

def multiply(a: OperatorPoly, b: OperatorPoly) -> OperatorPoly:
    """Normal-ordered operator product a·b."""
    return a @ b


def commutator(a: OperatorPoly, b: OperatorPoly) -> OperatorPoly:
    """[a, b] = a·b − b·a."""
    return a @ b - b @ a


def coefficient(a: OperatorPoly, mono) -> complex:
    return a.coefficient(mono)


def substitute(a: OperatorPoly, images: Mapping[str, OperatorPoly]) -> OperatorPoly:
    """Replace each canonical symbol by a degree-<=1 polynomial image.

    Each monomial x^a y^b ... pz^f maps to the left-to-right product of the
    images raised to the respective powers (normal-ordered as it goes).
    Symbols absent from ``images`` stand for themselves.  Images of degree
    above one are rejected: the ordering of their product would be ambiguous.
    """
    hbar = a.hbar
    full = {}
    for sym in SYMBOLS:
        img = images.get(sym)
        if img is None:
            img = OperatorPoly.symbol(sym, hbar)
        elif img.degree() > 1:
            raise DomainError(
                f"image of {sym!r} has degree {img.degree()}; only linear "
                "(degree <= 1) substitutions are supported"
            )
        if img.hbar != hbar:
            raise ConfigurationError(
                f"image of {sym!r} carries hbar={img.hbar}, polynomial has {hbar}"
            )
        full[sym] = img

    result = OperatorPoly.zero(hbar)
    for mono, coef in a.terms.items():
        term = OperatorPoly.constant(coef, hbar)
        for sym, e in zip(SYMBOLS, mono):
            for _ in range(e):
                term = term @ full[sym]
        result = result + term
    return result


# ---- commutative phase-space polynomials and the star product -------------

class PhaseSpaceFn:
    """Commutative polynomial in the six phase-space symbols.

    Same term-map representation as OperatorPoly but with no hbar attached
    and a pointwise (exponent-adding) product.  ``*`` multiplies by scalars
    or by another PhaseSpaceFn.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        object.__setattr__(self, "terms", _canonical(terms or {}, 0.0))

    def __setattr__(self, name, value):
        raise AttributeError("PhaseSpaceFn is immutable")

    @classmethod
    def zero(cls) -> "PhaseSpaceFn":
        return cls({})

    @classmethod
    def constant(cls, value: complex) -> "PhaseSpaceFn":
        return cls({UNIT: value})

    @classmethod
    def symbol(cls, name: str) -> "PhaseSpaceFn":
        if name not in SYMBOLS:
            raise DomainError(f"unknown symbol {name!r}; expected one of {SYMBOLS}")
        return cls({Monomial(**{name: 1}): 1.0})

    def coefficient(self, mono) -> complex:
        return self.terms.get(_check_monomial(mono), 0j)

    def degree(self) -> int:
        return max((m.degree() for m in self.terms), default=0)

    def max_abs(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def __eq__(self, other) -> bool:
        if isinstance(other, PhaseSpaceFn):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return _poly_str(self.terms)

    def __add__(self, other) -> "PhaseSpaceFn":
        if not isinstance(other, PhaseSpaceFn):
            other = PhaseSpaceFn.constant(other)
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            terms[mono] = terms.get(mono, 0) + coef
        return PhaseSpaceFn(terms)

    __radd__ = __add__

    def __neg__(self) -> "PhaseSpaceFn":
        return PhaseSpaceFn({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "PhaseSpaceFn":
        return self + (-other if isinstance(other, PhaseSpaceFn) else -complex(other))

    def __rsub__(self, other) -> "PhaseSpaceFn":
        return (-self) + other

    def __mul__(self, other) -> "PhaseSpaceFn":
        if isinstance(other, PhaseSpaceFn):
            terms: dict[Monomial, complex] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    mono = Monomial(*(a + b for a, b in zip(m1, m2)))
                    terms[mono] = terms.get(mono, 0) + c1 * c2
            return PhaseSpaceFn(terms)
        return PhaseSpaceFn({m: c * other for m, c in self.terms.items()})

    __rmul__ = __mul__

    def derivative(self, sym: str) -> "PhaseSpaceFn":
        """Partial derivative with respect to one symbol."""
        i = SYMBOLS.index(sym)
        terms = {}
        for mono, coef in self.terms.items():
            e = mono[i]
            if e:
                lowered = list(mono)
                lowered[i] = e - 1
                m = Monomial(*lowered)
                terms[m] = terms.get(m, 0) + e * coef
        return PhaseSpaceFn(terms)


def moyal_star(f: PhaseSpaceFn, g: PhaseSpaceFn, params) -> PhaseSpaceFn:
    """Star product of two polynomial phase-space functions.

    The bidifferential kernel couples (x, y) derivative pairs with weight
    i·theta/(2 alpha^2) and (px, py) pairs with weight i·theta_bar/(2 alpha^2);
    the exponential series is summed exactly, which is finite on polynomials
    (each order lowers the degree of the left factor).  With theta =
    theta_bar = 0 this is the pointwise product.
    """
    half = 0.5j / (params.alpha * params.alpha)
    links = []
    for a, b, w in (("x", "y", half * params.theta), ("px", "py", half * params.theta_bar)):
        if w != 0:
            links.append((a, b, w))
            links.append((b, a, -w))

    # tensor state: {(left monomial, right monomial): coefficient}
    state = {
        (mf, mg): cf * cg
        for mf, cf in f.terms.items()
        for mg, cg in g.terms.items()
    }
    result: dict[Monomial, complex] = {}
    order = 0
    factorial = 1.0
    while state:
        for (mf, mg), c in state.items():
            mono = Monomial(*(a + b for a, b in zip(mf, mg)))
            result[mono] = result.get(mono, 0) + c / factorial
        nxt: dict[tuple, complex] = {}
        for (mf, mg), c in state.items():
            for a, b, w in links:
                ia, ib = SYMBOLS.index(a), SYMBOLS.index(b)
                ea, eb = mf[ia], mg[ib]
                if ea == 0 or eb == 0:
                    continue
                lf = list(mf)
                lf[ia] = ea - 1
                lg = list(mg)
                lg[ib] = eb - 1
                key = (Monomial(*lf), Monomial(*lg))
                nxt[key] = nxt.get(key, 0) + c * w * ea * eb
        state = {k: v for k, v in nxt.items() if v != 0}
        order += 1
        factorial *= order
    return PhaseSpaceFn(result)
