"""Sparse multivariate polynomials over the cyclotomic-rational scalars.

A polynomial knows its variable count; terms live in a dict mapping
exponent tuples to nonzero CycScalar coefficients, all lifted to one
ambient cyclotomic order.  The canonical form makes structural equality
coincide with semantic equality.  The monomial order used everywhere
(leading terms, the symmetrization loop, root extraction) is graded
lexicographic: compare total degree first, then the exponent tuple.

Beyond ring arithmetic this module carries the symmetric-function kit:
elementary symmetric polynomials, invariance tests under the full and the
even (alternating) symmetric group, rewriting symmetric polynomials in the
elementary basis, and a three-valued exact k-th root extractor.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from radform.cyclotomic import CycScalar

__all__ = [
    "ElemSymBasisExpr",
    "MPoly",
    "NO_ROOT",
    "NotSymmetricError",
    "UNDECIDED",
    "divide_exact",
    "elem_sym",
    "evaluate",
    "is_even_symmetric",
    "is_symmetric",
    "kth_root_poly",
    "permute_vars",
    "substitute",
    "symmetrize",
]


class NotSymmetricError(ValueError):
    """Input fails the required symmetry; carries a violating permutation."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _grlex_key(exps):
    return (sum(exps), exps)


def _as_coeff(value):
    if isinstance(value, CycScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return CycScalar.from_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


class MPoly:
    """Polynomial in nvars variables with exact cyclotomic coefficients."""

    __slots__ = ("nvars", "terms", "order")

    def __init__(self, nvars: int, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        order = 1
        if terms:
            staged = []
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps} for nvars={nvars}")
                coeff = _as_coeff(coeff)
                if coeff.is_zero():
                    continue
                staged.append((exps, coeff))
                order = math.lcm(order, coeff.order)
            for exps, coeff in staged:
                lifted = coeff.lift(order)
                if exps in clean:
                    merged = clean[exps] + lifted
                    if merged.is_zero():
                        del clean[exps]
                    else:
                        clean[exps] = merged
                else:
                    clean[exps] = lifted
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "order", order if clean else 1)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "MPoly":
        return cls(nvars, {(0,) * nvars: _as_coeff(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        """The monomial x_index; indices are 1-based."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, exps, coeff=1) -> "MPoly":
        return cls(nvars, {tuple(exps): coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Largest term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading_term(self):
        """Graded-lex maximal (exponents, coefficient); None when zero."""
        if not self.terms:
            return None
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> CycScalar:
        if not self.terms:
            return CycScalar.zero()
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[(0,) * self.nvars]

    def support_vars(self):
        """1-based indices of variables that actually occur."""
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(i + 1)
        return used

    def coefficient(self, exps) -> CycScalar:
        return self.terms.get(tuple(exps), CycScalar.zero())

    def pad_vars(self, nvars: int) -> "MPoly":
        """Reinterpret in a larger variable list; new variables are unused."""
        if nvars < self.nvars:
            raise ValueError("pad_vars cannot shrink the variable list")
        if nvars == self.nvars:
            return self
        extra = (0,) * (nvars - self.nvars)
        return MPoly(nvars, {exps + extra: c for exps, c in self.terms.items()})

    # -- ring arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}"
                )
            return other
        if isinstance(other, (int, Fraction, CycScalar)):
            return MPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self.terms)
        for exps, c in other.terms.items():
            if exps in merged:
                merged[exps] = merged[exps] + c
            else:
                merged[exps] = c
        return MPoly(self.nvars, merged)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return MPoly.zero(self.nvars)
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                if key in acc:
                    acc[key] = acc[key] + prod
                else:
                    acc[key] = prod
        return MPoly(self.nvars, acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar only."""
        if isinstance(other, MPoly):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_value()
        if isinstance(other, (int, Fraction)):
            other = CycScalar.from_rational(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        inv = other.inv()
        return MPoly(self.nvars, {e: c * inv for e, c in self.terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = MPoly.constant(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            other = MPoly.constant(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"MPoly({self.nvars}, {len(self.terms)} terms)"

    def __str__(self):
        return self.render()

    def render(self, names=None) -> str:
        """Human-readable form, terms in descending graded-lex order."""
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(1, self.nvars + 1)]
        parts = []
        for exps in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            cs = str(coeff)
            if " " in cs or cs.startswith("-") and body:
                if not (cs.lstrip("-").replace("/", "").isdigit()):
                    cs = f"({cs})"
            if not body:
                parts.append(cs)
            elif cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append(f"-{body}")
            else:
                parts.append(f"{cs}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


# ---------------------------------------------------------------------------
# substitution and evaluation


def substitute(f: MPoly, images: dict, out_nvars: int | None = None) -> MPoly:
    """Replace variable i by images[i] (1-based keys) everywhere in f.

    Every variable occurring in f must be covered.  Non-MPoly images are
    treated as constants; out_nvars fixes the output arity when no image
    is a polynomial.
    """
    poly_images = {k: v for k, v in images.items() if isinstance(v, MPoly)}
    if poly_images:
        arities = {p.nvars for p in poly_images.values()}
        if len(arities) > 1:
            raise ValueError(f"images disagree on variable count: {sorted(arities)}")
        target = arities.pop()
        if out_nvars is not None and out_nvars != target:
            raise ValueError("out_nvars contradicts the polynomial images")
    elif out_nvars is not None:
        target = out_nvars
    else:
        target = f.nvars
    missing = f.support_vars() - set(images)
    if missing:
        raise ValueError(f"no image for variable(s) {sorted(missing)}")
    prepared = {}
    for k, v in images.items():
        prepared[k] = v if isinstance(v, MPoly) else MPoly.constant(target, v)
    power_cache: dict[tuple[int, int], MPoly] = {}

    def img_power(i, e):
        key = (i, e)
        if key not in power_cache:
            power_cache[key] = prepared[i] ** e
        return power_cache[key]

    total = MPoly.zero(target)
    for exps, coeff in f.terms.items():
        term = MPoly.constant(target, coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * img_power(i + 1, e)
        total = total + term
    return total


def evaluate(f: MPoly, point) -> CycScalar:
    """Exact value of f at a tuple of cyclotomic scalars."""
    point = [_as_coeff(p) for p in point]
    if len(point) != f.nvars:
        raise ValueError(f"need {f.nvars} coordinates, got {len(point)}")
    total = CycScalar.zero()
    for exps, coeff in f.terms.items():
        value = coeff
        for p, e in zip(point, exps):
            if e:
                value = value * p ** e
        total = total + value
    return total


# ---------------------------------------------------------------------------
# variable permutation and symmetry tests


def _perm_images(alpha, nvars):
    images = getattr(alpha, "images", alpha)
    images = tuple(int(i) for i in images)
    if sorted(images) != list(range(1, nvars + 1)):
        raise ValueError(f"{images} is not a permutation of 1..{nvars}")
    return images


def permute_vars(f: MPoly, alpha) -> MPoly:
    """f with variable i replaced by x_alpha(i); alpha gives 1-based images."""
    images = _perm_images(alpha, f.nvars)
    out = {}
    for exps, coeff in f.terms.items():
        new = [0] * f.nvars
        for i, e in enumerate(exps):
            new[images[i] - 1] = e
        out[tuple(new)] = coeff
    return MPoly(f.nvars, out)


def _transposition(n, i, j):
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
    return tuple(images)


def _three_cycle(n, a, b, c):
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1], images[c - 1] = b, c, a
    return tuple(images)


def is_symmetric(f: MPoly, witness: bool = False):
    """Invariance under all of S_n, tested on the transpositions (1 m)."""
    for m in range(2, f.nvars + 1):
        t = _transposition(f.nvars, 1, m)
        if permute_vars(f, t) != f:
            return (False, t) if witness else False
    return (True, None) if witness else True


def is_even_symmetric(f: MPoly, witness: bool = False):
    """Invariance under the even permutations, tested on the cycles (1 2 m).

    Those three-cycles generate the alternating group, so checking the
    generators settles the whole group.  With fewer than three variables
    the group is trivial and everything passes.
    """
    for m in range(3, f.nvars + 1):
        g = _three_cycle(f.nvars, 1, 2, m)
        if permute_vars(f, g) != f:
            return (False, g) if witness else False
    return (True, None) if witness else True


# ---------------------------------------------------------------------------
# elementary symmetric basis


def elem_sym(n: int, i: int) -> MPoly:
    """i-th elementary symmetric polynomial of x_1..x_n (i = 0 gives 1)."""
    if not 0 <= i <= n:
        raise ValueError(f"elem_sym index {i} out of range 0..{n}")
    if i == 0:
        return MPoly.constant(n, 1)
    terms = {}
    for combo in itertools.combinations(range(n), i):
        exps = [0] * n
        for c in combo:
            exps[c] = 1
        terms[tuple(exps)] = 1
    return MPoly(n, terms)


class ElemSymBasisExpr:
    """A polynomial whose variables stand for sigma_1..sigma_n."""

    __slots__ = ("poly",)

    def __init__(self, poly: MPoly):
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("ElemSymBasisExpr is immutable")

    @property
    def nsigma(self) -> int:
        return self.poly.nvars

    def expand(self) -> MPoly:
        """Substitute the actual elementary symmetric polynomials back in."""
        n = self.poly.nvars
        images = {i: elem_sym(n, i) for i in range(1, n + 1)}
        return substitute(self.poly, images, out_nvars=n)

    def __eq__(self, other):
        if isinstance(other, ElemSymBasisExpr):
            return self.poly == other.poly
        return NotImplemented

    def __repr__(self):
        return f"ElemSymBasisExpr({self.poly!r})"

    def __str__(self):
        names = [f"s{i}" for i in range(1, self.poly.nvars + 1)]
        return self.poly.render(names)


def symmetrize(f: MPoly) -> ElemSymBasisExpr:
    """Rewrite a symmetric polynomial in the elementary symmetric basis.

    Classical leading-term reduction: strip the graded-lex leading term
    c * x^a (a is non-increasing for a symmetric polynomial) by subtracting
    c * sigma_1^(a1-a2) * ... * sigma_n^(an), and iterate.  The result is
    re-expanded and compared against the input before returning.
    """
    ok, t = is_symmetric(f, witness=True)
    if not ok:
        raise NotSymmetricError(
            f"not symmetric: transposition {t} changes the polynomial", witness=t
        )
    n = f.nvars
    sigma = MPoly.zero(n)
    remainder = f
    while remainder.terms:
        exps, coeff = remainder.leading_term()
        if any(exps[i] < exps[i + 1] for i in range(n - 1)):
            raise AssertionError(
                f"leading exponents {exps} of a symmetric polynomial not sorted"
            )
        powers = tuple(
            exps[i] - (exps[i + 1] if i + 1 < n else 0) for i in range(n)
        )
        sigma = sigma + MPoly.monomial(n, powers, coeff)
        expansion = MPoly.constant(n, coeff)
        for i, p in enumerate(powers):
            if p:
                expansion = expansion * elem_sym(n, i + 1) ** p
        remainder = remainder - expansion
    result = ElemSymBasisExpr(sigma)
    if result.expand() != f:
        raise AssertionError("symmetrization failed its own expansion check")
    return result


# ---------------------------------------------------------------------------
# exact polynomial k-th roots


class _Verdict:
    __slots__ = ("name",)

    def __init__(self, name):
        object.__setattr__(self, "name", name)

    def __repr__(self):
        return self.name


NO_ROOT = _Verdict("NO_ROOT")
UNDECIDED = _Verdict("UNDECIDED")


def _int_kth_root(n: int, k: int) -> int | None:
    if n < 0:
        return None
    if n in (0, 1):
        return n
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo ** k == n else None


def _fraction_kth_root(value: Fraction, k: int):
    """Exact rational k-th root, or UNDECIDED when none exists in Q.

    A missing rational root is never a refutation here: the root may live
    in a larger cyclotomic field (sqrt(2), sqrt(-1), ...), which is out of
    scope for this extractor.
    """
    if value < 0:
        if k % 2 == 0:
            return UNDECIDED
        flipped = _fraction_kth_root(-value, k)
        return UNDECIDED if flipped is UNDECIDED else -flipped
    num = _int_kth_root(value.numerator, k)
    den = _int_kth_root(value.denominator, k)
    if num is None or den is None:
        return UNDECIDED
    return Fraction(num, den)


def kth_root_poly(f: MPoly, k: int):
    """Exact g with g^k == f, or NO_ROOT / UNDECIDED.

    Leading-term recursion in graded-lex order.  NO_ROOT is returned only
    on structural failure (certain), while UNDECIDED covers the cases where
    the leading coefficient's root cannot be resolved inside Q.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1 or f.is_zero():
        return f
    exps, coeff = f.leading_term()
    if any(e % k for e in exps):
        return NO_ROOT
    if not coeff.is_rational():
        return UNDECIDED
    lead_root = _fraction_kth_root(coeff.as_fraction(), k)
    if lead_root is UNDECIDED:
        return UNDECIDED
    root_exps = tuple(e // k for e in exps)
    lead_coeff = CycScalar.from_rational(lead_root)
    g = MPoly.monomial(f.nvars, root_exps, lead_coeff)
    denom = CycScalar.from_rational(k) * lead_coeff ** (k - 1)
    denom_inv = denom.inv()
    last_key = None
    while True:
        r = f - g ** k
        if r.is_zero():
            return g
        rexps, rcoeff = r.leading_term()
        t_exps = tuple(a - b * (k - 1) for a, b in zip(rexps, root_exps))
        if any(e < 0 for e in t_exps):
            return NO_ROOT
        key = _grlex_key(t_exps)
        if key >= _grlex_key(root_exps) or (last_key is not None and key >= last_key):
            return NO_ROOT
        last_key = key
        g = g + MPoly.monomial(f.nvars, t_exps, rcoeff * denom_inv)


def divide_exact(a: MPoly, b: MPoly) -> MPoly | None:
    """Quotient a / b when b divides a exactly, else None."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.nvars != b.nvars:
        raise ValueError("variable count mismatch in division")
    bexps, bcoeff = b.leading_term()
    binv = bcoeff.inv()
    quotient = MPoly.zero(a.nvars)
    r = a
    while r.terms:
        rexps, rcoeff = r.leading_term()
        t_exps = tuple(x - y for x, y in zip(rexps, bexps))
        if any(e < 0 for e in t_exps):
            return None
        t = MPoly.monomial(a.nvars, t_exps, rcoeff * binv)
        quotient = quotient + t
        r = r - t * b
    return quotient
