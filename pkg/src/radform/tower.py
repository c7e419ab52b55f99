"""Radical towers over the symmetric rational-function field.

The ground field F_0 is the field of rational functions in sigma_1..sigma_n
with cyclotomic-rational coefficients (sigma_i standing for the i-th
elementary symmetric polynomial).  Level j adjoins one radical generator
y_j with y_j^k_j = p_(j-1), where k_j is prime and p_(j-1) lives at level
j - 1.  An element of level j is a coefficient vector of length k_j over
level j - 1, so everything reduces to exact polynomial arithmetic.

Rational functions are kept as raw numerator/denominator pairs: equality
goes through cross-multiplication and nothing ever computes a gcd.

Whether each quotient is really a field depends on p_(j-1) not being a
k_j-th power one level down.  That fact is tracked per level as a
three-valued attestation (verified / asserted / unknown); division refuses
to run on unknown levels, and a falsely attested level is detected when
the extended Euclid behind an inverse meets a nontrivial common factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from radform.cyclotomic import CycScalar, root_of_unity
from radform.multipoly import (
    MPoly,
    NO_ROOT,
    UNDECIDED,
    elem_sym,
    kth_root_poly,
    substitute,
)

__all__ = [
    "AnnihilationReport",
    "AttestationError",
    "IdentityRecord",
    "NonpowerResult",
    "RatFunc",
    "TowerElem",
    "TowerSpec",
    "WitnessReport",
    "check_annihilation",
    "conjugate",
    "expand_with_witnesses",
    "nonpower_check",
    "witness_check",
    "ATTESTED_VERIFIED",
    "ATTESTED_ASSERTED",
    "ATTESTED_UNKNOWN",
]

ATTESTED_VERIFIED = "verified"
ATTESTED_ASSERTED = "asserted"
ATTESTED_UNKNOWN = "unknown"


class AttestationError(RuntimeError):
    """Division needed a nonpower attestation that is missing or false."""


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


class RatFunc:
    """num/den with multivariate polynomial parts; den is never zero.

    No reduction is performed; comparisons cross-multiply.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.constant(num.nvars, 1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.nvars != den.nvars:
            raise ValueError("numerator and denominator disagree on variables")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "RatFunc":
        return cls(MPoly.zero(nvars))

    @classmethod
    def one(cls, nvars: int) -> "RatFunc":
        return cls(MPoly.constant(nvars, 1))

    @classmethod
    def constant(cls, nvars: int, value) -> "RatFunc":
        return cls(MPoly.constant(nvars, value))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc(other)
        try:
            return RatFunc.constant(self.nvars, other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

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
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def render(self, names=None) -> str:
        num = self.num.render(names)
        if self.den == MPoly.constant(self.nvars, 1):
            return num
        return f"({num})/({self.den.render(names)})"

    def __repr__(self):
        return f"RatFunc({self.render()})"


class TowerSpec:
    """Shape of one radical tower: variable count, prime radical degrees,
    defining elements, and per-level nonpower attestations.

    Levels are appended through add_level during construction; the
    defining element for level j + 1 must already live in this spec at
    level j, which is why building is incremental.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.ks: list[int] = []
        self.ps: list[TowerElem] = []
        self.attestations: list[str] = []

    @property
    def s(self) -> int:
        return len(self.ks)

    def add_level(self, k: int, p: "TowerElem", attestation: str = ATTESTED_UNKNOWN):
        if not _is_prime(k):
            raise ValueError(
                f"radical degree {k} is not prime; factor composite degrees first"
            )
        if attestation not in (ATTESTED_VERIFIED, ATTESTED_ASSERTED, ATTESTED_UNKNOWN):
            raise ValueError(f"bad attestation {attestation!r}")
        p = self._coerce_elem(p)
        if p.level > self.s:
            raise ValueError(
                f"defining element of level {self.s + 1} must live at level "
                f"{self.s} or below, got level {p.level}"
            )
        p = self.lift(p, self.s)
        self.ks.append(k)
        self.ps.append(p)
        self.attestations.append(attestation)
        return self

    def set_attestation(self, level: int, value: str):
        if value not in (ATTESTED_VERIFIED, ATTESTED_ASSERTED, ATTESTED_UNKNOWN):
            raise ValueError(f"bad attestation {value!r}")
        self.attestations[level - 1] = value

    def _coerce_elem(self, value) -> "TowerElem":
        if isinstance(value, TowerElem):
            if not compatible(value.spec, self, upto=value.level):
                raise ValueError("element belongs to a different tower")
            return TowerElem(self, value.level, value.payload)
        if isinstance(value, RatFunc):
            return self.from_ratfunc(value)
        if isinstance(value, MPoly):
            return self.from_sigma_poly(value)
        return self.scalar(value)

    # -- element constructors ---------------------------------------------

    def from_ratfunc(self, rf: RatFunc) -> "TowerElem":
        if rf.nvars != self.n:
            raise ValueError(f"expected {self.n} sigma-variables, got {rf.nvars}")
        return TowerElem(self, 0, rf)

    def from_sigma_poly(self, poly: MPoly) -> "TowerElem":
        return self.from_ratfunc(RatFunc(poly))

    def scalar(self, value, level: int = 0) -> "TowerElem":
        base = TowerElem(self, 0, RatFunc.constant(self.n, value))
        return self.lift(base, level)

    def zero(self, level: int = 0) -> "TowerElem":
        return self.scalar(0, level)

    def one(self, level: int = 0) -> "TowerElem":
        return self.scalar(1, level)

    def generator(self, j: int) -> "TowerElem":
        """y_j as an element of level j."""
        if not 1 <= j <= self.s:
            raise ValueError(f"no generator y_{j} in a tower of height {self.s}")
        coords = [self.zero(j - 1)] * self.ks[j - 1]
        coords[1] = self.one(j - 1)
        return TowerElem(self, j, tuple(coords))

    def lift(self, e: "TowerElem", level: int) -> "TowerElem":
        if e.level > level:
            raise ValueError(f"cannot lower level {e.level} element to {level}")
        if level > self.s:
            raise ValueError(f"level {level} exceeds tower height {self.s}")
        while e.level < level:
            target = e.level + 1
            coords = [e] + [self.zero(e.level)] * (self.ks[target - 1] - 1)
            e = TowerElem(self, target, tuple(coords))
        return e

    def __repr__(self):
        return f"TowerSpec(n={self.n}, ks={self.ks})"


def compatible(a: TowerSpec, b: TowerSpec, upto: int | None = None) -> bool:
    """Structural agreement of two specs on the levels up to `upto`."""
    if a is b:
        return True
    if a.n != b.n:
        return False
    limit = min(a.s, b.s) if upto is None else upto
    if upto is not None and (a.s < upto or b.s < upto):
        return False
    if upto is None and a.s != b.s:
        return False
    if a.ks[:limit] != b.ks[:limit]:
        return False
    return all(a.ps[j]._same_payload(b.ps[j]) for j in range(limit))


class TowerElem:
    """One element of the tower: a rational function at level 0, or a
    coefficient vector over the level below."""

    __slots__ = ("spec", "level", "payload")

    def __init__(self, spec: TowerSpec, level: int, payload):
        if level == 0:
            if not isinstance(payload, RatFunc):
                raise TypeError("level-0 payload must be a rational function")
        else:
            payload = tuple(payload)
            if level > spec.s:
                raise ValueError(f"level {level} exceeds tower height {spec.s}")
            if len(payload) != spec.ks[level - 1]:
                raise ValueError(
                    f"level-{level} vector needs {spec.ks[level - 1]} coordinates"
                )
            if any(c.level != level - 1 for c in payload):
                raise ValueError("coordinates must live one level down")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("TowerElem is immutable")

    @property
    def coords(self):
        if self.level == 0:
            raise ValueError("level-0 elements have no coordinate vector")
        return self.payload

    @property
    def ratfunc(self) -> RatFunc:
        if self.level != 0:
            raise ValueError("only level-0 elements wrap a rational function")
        return self.payload

    def is_zero(self) -> bool:
        if self.level == 0:
            return self.payload.is_zero()
        return all(c.is_zero() for c in self.payload)

    def __bool__(self):
        return not self.is_zero()

    def _same_payload(self, other: "TowerElem") -> bool:
        if self.level != other.level:
            return False
        if self.level == 0:
            return self.payload == other.payload
        return all(a._same_payload(b) for a, b in zip(self.payload, other.payload))

    # -- arithmetic --------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, TowerElem):
            if not compatible(
                self.spec, other.spec, upto=max(self.level, other.level)
            ):
                raise ValueError("elements belong to different towers")
        elif _scalar_like(other):
            other = self.spec._coerce_elem(other)
        else:
            return None, None
        lvl = max(self.level, other.level)
        return self.spec.lift(self, lvl), self.spec.lift(other, lvl)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if a.level == 0:
            return TowerElem(a.spec, 0, a.payload + b.payload)
        return TowerElem(
            a.spec,
            a.level,
            tuple(x + y for x, y in zip(a.payload, b.payload)),
        )

    __radd__ = __add__

    def __neg__(self):
        if self.level == 0:
            return TowerElem(self.spec, 0, -self.payload)
        return TowerElem(self.spec, self.level, tuple(-c for c in self.payload))

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if a.level == 0:
            return TowerElem(a.spec, 0, a.payload * b.payload)
        k = a.spec.ks[a.level - 1]
        rho = a.spec.ps[a.level - 1]
        zero = a.spec.zero(a.level - 1)
        raw = [zero] * (2 * k - 1)
        for i, ca in enumerate(a.payload):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b.payload):
                if cb.is_zero():
                    continue
                raw[i + j] = raw[i + j] + ca * cb
        # fold y^m for m >= k back down through y^k = rho
        for m in range(2 * k - 2, k - 1, -1):
            if not raw[m].is_zero():
                raw[m - k] = raw[m - k] + raw[m] * rho
        return TowerElem(a.spec, a.level, tuple(raw[:k]))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one(self.level)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a._same_payload(b)

    def inverse(self) -> "TowerElem":
        """Multiplicative inverse via extended Euclid against y^k - rho.

        Levels above 0 require a nonpower attestation; meeting a
        nontrivial gcd on an attested level refutes the attestation and
        raises instead of returning garbage.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in the tower")
        if self.level == 0:
            return TowerElem(self.spec, 0, self.payload.inv())
        level = self.level
        att = self.spec.attestations[level - 1]
        if att == ATTESTED_UNKNOWN:
            raise AttestationError(
                f"level {level} has no nonpower attestation; cannot divide"
            )
        spec = self.spec
        below = level - 1
        k = spec.ks[level - 1]
        if below == 0:
            # same Euclid chain, but run denominator-free so the raw
            # num/den representation cannot snowball
            g, nums = _level1_bezout(self.payload, k, spec.ps[0].payload)
            if len(g) != 1:
                raise AttestationError(
                    f"defining polynomial at level {level} is reducible; the "
                    f"nonpower attestation ({att}) is refuted"
                )
            coeffs = [TowerElem(spec, 0, RatFunc(c, g[0])) for c in nums]
        else:
            modulus = [-spec.ps[level - 1]] + [spec.zero(below)] * (k - 1) + [
                spec.one(below)
            ]
            g, s_coeffs, _ = _upoly_ext_gcd(list(self.payload), modulus, spec, below)
            if len(g) != 1:
                raise AttestationError(
                    f"defining polynomial at level {level} is reducible; the "
                    f"nonpower attestation ({att}) is refuted"
                )
            g0_inv = g[0].inverse()
            coeffs = [c * g0_inv for c in s_coeffs]
        coeffs += [spec.zero(below)] * (k - len(coeffs))
        result = TowerElem(spec, level, tuple(coeffs[:k]))
        if not (self * result == spec.one(level)):
            raise AssertionError("inverse failed its own check")
        return result

    # -- display -----------------------------------------------------------

    def render(self, sigma_names=None) -> str:
        if sigma_names is None:
            sigma_names = [f"s{i}" for i in range(1, self.spec.n + 1)]
        if self.level == 0:
            return self.payload.render(sigma_names)
        parts = []
        for m, c in enumerate(self.payload):
            if c.is_zero():
                continue
            body = c.render(sigma_names)
            gen = f"y{self.level}" if m else ""
            if m > 1:
                gen = f"y{self.level}^{m}"
            if not gen:
                parts.append(body)
            elif body == "1":
                parts.append(gen)
            else:
                needs_parens = ("+" in body or "-" in body[1:] or "/" in body)
                parts.append(f"({body})*{gen}" if needs_parens else f"{body}*{gen}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TowerElem(level={self.level}, {self.render()})"


def _scalar_like(x):
    from fractions import Fraction

    return isinstance(x, (int, Fraction, CycScalar, MPoly, RatFunc))


# ---------------------------------------------------------------------------
# univariate polynomial scaffolding over a tower level


def _upoly_trim(p):
    while p and p[-1].is_zero():
        p.pop()
    return p


def _upoly_divmod(a, b, spec, level):
    a = _upoly_trim(list(a))
    b = _upoly_trim(list(b))
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    # a monic divisor needs no field inverse, so reductions against
    # t^k - rho never touch the attestation machinery
    monic = b[-1] == spec.one(level)
    lead_inv = None if monic else b[-1].inverse()
    quo = [spec.zero(level)] * max(0, len(a) - len(b) + 1)
    rem = list(a)
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + len(b) - 1]
        if c.is_zero():
            continue
        q = c if monic else c * lead_inv
        quo[i] = q
        for j, cb in enumerate(b):
            rem[i + j] = rem[i + j] - q * cb
    return _upoly_trim(quo), _upoly_trim(rem)


def _upoly_ext_gcd(a, b, spec, level):
    """(g, s, t) with s*a + t*b = g over the field at `level`."""

    def mul(p, q):
        if not p or not q:
            return []
        out = [spec.zero(level)] * (len(p) + len(q) - 1)
        for i, cp in enumerate(p):
            for j, cq in enumerate(q):
                out[i + j] = out[i + j] + cp * cq
        return _upoly_trim(out)

    def sub(p, q):
        out = list(p) + [spec.zero(level)] * max(0, len(q) - len(p))
        for j, cq in enumerate(q):
            out[j] = out[j] - cq
        return _upoly_trim(out)

    r0, r1 = _upoly_trim(list(a)), _upoly_trim(list(b))
    s0, s1 = [spec.one(level)], []
    t0, t1 = [], [spec.one(level)]
    while r1:
        quo, rem = _upoly_divmod(r0, r1, spec, level)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    return r0, s0, t0


def _rat_content(polys):
    """Positive rational c with every coefficient of every poly in c*Z."""
    num, den = 0, 1
    for p in polys:
        for coeff in p.terms.values():
            for part in coeff.coeffs:
                if part:
                    num = math.gcd(num, part.numerator)
                    den = den * part.denominator // math.gcd(den, part.denominator)
    return Fraction(num, den) if num else Fraction(1)


def _pseudo_divmod(a, b):
    """(lam, quo, rem) over MPoly coefficients with lam*a = quo*b + rem.

    Instead of inverting b's leading coefficient, every elimination step
    scales the running remainder by it, so no fractions appear; lam
    records the accumulated scaling.
    """
    db = len(b) - 1
    lead = b[-1]
    nv = lead.nvars
    lam = MPoly.constant(nv, 1)
    quo = [MPoly.zero(nv)] * max(0, len(a) - len(b) + 1)
    rem = list(a)
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + db]
        if c.is_zero():
            continue
        lam = lam * lead
        quo = [lead * q for q in quo]
        quo[i] = quo[i] + c
        rem = [lead * r for r in rem]
        for j, cb in enumerate(b):
            rem[i + j] = rem[i + j] - c * cb
    while rem and rem[-1].is_zero():
        rem.pop()
    return lam, quo, rem


def _level1_bezout(payload, k, rho):
    """Euclid data for a level-1 coefficient vector against y^k - rho.

    Returns (g, nums) with g the last nonzero remainder (a list of MPoly)
    and nums scaled so that, when len(g) == 1, coordinate i of the
    inverse is nums[i]/g[0].  Working with cleared denominators keeps
    every intermediate a polynomial of modest degree, where the generic
    fraction-field chain squares its num/den sizes at each step.
    """
    fracs = [c.payload for c in payload]
    nv = rho.nvars
    one = MPoly.constant(nv, 1)

    def mul(p, q):
        if not p or not q:
            return []
        out = [MPoly.zero(nv)] * (len(p) + len(q) - 1)
        for i, cp in enumerate(p):
            for j, cq in enumerate(q):
                out[i + j] = out[i + j] + cp * cq
        return out

    dens = [f.den for f in fracs]
    a = []
    for i, f in enumerate(fracs):
        num = f.num
        for j, d in enumerate(dens):
            if j != i and d != one:
                num = num * d
        a.append(num)
    while a and a[-1].is_zero():
        a.pop()
    shared = one
    for d in dens:
        if d != one:
            shared = shared * d
    modulus = [-rho.num] + [MPoly.zero(nv)] * (k - 1) + [rho.den]

    r0, s0 = a, [one]
    r1, s1 = modulus, []
    while r1:
        lam, quo, rem = _pseudo_divmod(r0, r1)
        if rem:
            s_rem = [lam * e for e in s0] + [MPoly.zero(nv)] * max(
                0, len(quo) + len(s1) - 1 - len(s0)
            )
            for j, e in enumerate(mul(quo, s1)):
                s_rem[j] = s_rem[j] - e
            while s_rem and s_rem[-1].is_zero():
                s_rem.pop()
            content = _rat_content(rem + s_rem)
            if content != 1:
                rem = [e * (1 / content) for e in rem]
                s_rem = [e * (1 / content) for e in s_rem]
        else:
            # the cofactor of a zero remainder is never read again
            s_rem = []
        r0, s0 = r1, s1
        r1, s1 = rem, s_rem
    if shared != one:
        s0 = [e * shared for e in s0]
    return r0, s0


# ---------------------------------------------------------------------------
# conjugation


def _scale(e: TowerElem, factor: CycScalar) -> TowerElem:
    if e.level == 0:
        rf = e.payload
        return TowerElem(
            e.spec, 0, RatFunc(rf.num * factor, rf.den)
        )
    return TowerElem(e.spec, e.level, tuple(_scale(c, factor) for c in e.payload))


def conjugate(e: TowerElem, j: int, power: int) -> TowerElem:
    """The automorphism sending y_j to w_(k_j)^power * y_j, identity on the
    rest of the tower."""
    if not 1 <= j <= e.spec.s:
        raise ValueError(f"no level {j} in this tower")
    if e.level < j:
        return e
    if e.level > j:
        return TowerElem(
            e.spec, e.level, tuple(conjugate(c, j, power) for c in e.payload)
        )
    k = e.spec.ks[j - 1]
    eps = root_of_unity(k, k)
    out = []
    for m, c in enumerate(e.payload):
        factor = eps ** ((power * m) % k)
        out.append(_scale(c, factor) if m else c)
    return TowerElem(e.spec, j, tuple(out))


# ---------------------------------------------------------------------------
# nonpower checking


@dataclass(frozen=True)
class NonpowerResult:
    level: int
    k: int
    status: str  # "verified" | "refuted" | "undecided"
    root: TowerElem | None = None
    detail: str = ""


def nonpower_check(spec: TowerSpec, level: int) -> NonpowerResult:
    """Decide, where possible, that p_(level-1) is not a k_level-th power
    one level down.

    At level 1 the question reduces to exact root extraction in the
    polynomial ring: A/B is a k-th power iff A*B^(k-1) is one.  Deeper
    levels only certify the easy refutations (literal constants) and
    otherwise return "undecided".
    """
    if not 1 <= level <= spec.s:
        raise ValueError(f"no level {level} in this tower")
    k = spec.ks[level - 1]
    rho = spec.ps[level - 1]
    if rho.is_zero():
        return NonpowerResult(level, k, "refuted", spec.zero(level - 1), "rho = 0^k")
    if level == 1:
        rf = rho.payload
        candidate = rf.num * rf.den ** (k - 1)
        outcome = kth_root_poly(candidate, k)
        if outcome is NO_ROOT:
            return NonpowerResult(
                level, k, "verified",
                detail=f"num*den^{k - 1} has no polynomial {k}-th root",
            )
        if outcome is UNDECIDED:
            return NonpowerResult(
                level, k, "undecided",
                detail="root extraction stalled on a constant factor",
            )
        root = TowerElem(spec, 0, RatFunc(outcome, rf.den))
        return NonpowerResult(level, k, "refuted", root, "explicit root found")
    flat = _constant_scalar(rho)
    if flat is not None:
        root = _scalar_kth_root_elem(spec, level - 1, flat, k)
        if root is not None:
            return NonpowerResult(level, k, "refuted", root, "constant root")
    return NonpowerResult(
        level, k, "undecided",
        detail="no syntactic certificate for a nested radical level",
    )


def _constant_scalar(e: TowerElem):
    """The rational value of e when it is a literal rational constant."""
    if e.level == 0:
        num, den = e.payload.num, e.payload.den
        if num.is_constant() and den.is_constant():
            a, b = num.constant_value(), den.constant_value()
            if a.is_rational() and b.is_rational():
                return a.as_fraction() / b.as_fraction()
        return None
    head = _constant_scalar(e.payload[0])
    if head is None:
        return None
    if any(not c.is_zero() for c in e.payload[1:]):
        return None
    return head


def _scalar_kth_root_elem(spec, level, value, k):
    from radform.multipoly import _fraction_kth_root

    root = _fraction_kth_root(value, k)
    if root is UNDECIDED:
        return None
    return spec.scalar(root, level)


# ---------------------------------------------------------------------------
# annihilation certificates


@dataclass
class AnnihilationReport:
    level: int
    k: int
    remainder: list
    quotient: list
    lines: list = field(default_factory=list)

    @property
    def annihilates(self) -> bool:
        return all(c.is_zero() for c in self.remainder)

    def __str__(self):
        return "\n".join(self.lines)


def check_annihilation(spec: TowerSpec, level: int, q_coeffs) -> AnnihilationReport:
    """Reduce Q(t) modulo t^k - rho for the given level.

    A zero remainder certifies that Q vanishes on the level generator and
    on every conjugate w^j * y simultaneously, since (w^j y)^k = rho as
    well.  The remainder and quotient come back for inspection either way.
    """
    if not 1 <= level <= spec.s:
        raise ValueError(f"no level {level} in this tower")
    below = level - 1
    k = spec.ks[below]
    rho = spec.ps[below]
    coeffs = [spec.lift(spec._coerce_elem(c), below) for c in q_coeffs]
    modulus = [-rho] + [spec.zero(below)] * (k - 1) + [spec.one(below)]
    quo, rem = _upoly_divmod(coeffs, modulus, spec, below)
    rem = list(rem) + [spec.zero(below)] * (k - len(rem))
    report = AnnihilationReport(level=level, k=k, remainder=rem[:k], quotient=quo)
    if report.annihilates:
        report.lines.append(
            f"remainder of Q modulo t^{k} - p_{below} is 0: Q annihilates the "
            f"level-{level} generator and all {k} of its conjugates"
        )
    else:
        nonzero = next(i for i, c in enumerate(rem) if not c.is_zero())
        report.lines.append(
            f"remainder is nonzero (degree-{nonzero} coefficient survives); "
            "no annihilation certificate"
        )
    return report


# ---------------------------------------------------------------------------
# witness expansion


def expand_with_witnesses(e: TowerElem, witnesses) -> RatFunc:
    """Interpret a tower element as a rational function of x_1..x_n by
    sending sigma_i to the elementary symmetric polynomial and y_j to the
    j-th witness polynomial."""
    n = e.spec.n
    if e.level == 0:
        images = {i: elem_sym(n, i) for i in range(1, n + 1)}
        num = substitute(e.payload.num, images, out_nvars=n)
        den = substitute(e.payload.den, images, out_nvars=n)
        if den.is_zero():
            raise ZeroDivisionError(
                "denominator vanishes identically under the witness substitution"
            )
        return RatFunc(num, den)
    w = witnesses[e.level - 1]
    wrf = RatFunc(w) if isinstance(w, MPoly) else w
    total = RatFunc.zero(n)
    power = RatFunc.one(n)
    for m, c in enumerate(e.payload):
        if m:
            power = power * wrf
        if not c.is_zero():
            total = total + expand_with_witnesses(c, witnesses) * power
    return total


@dataclass
class IdentityRecord:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        out = f"{mark}  {self.name}"
        if self.detail and not self.ok:
            out += f"  [{self.detail}]"
        return out


@dataclass
class WitnessReport:
    records: list

    @property
    def all_pass(self) -> bool:
        return all(r.ok for r in self.records)

    def first_failure(self) -> IdentityRecord | None:
        return next((r for r in self.records if not r.ok), None)

    def lines(self):
        return [r.line() for r in self.records]

    def __str__(self):
        return "\n".join(self.lines())


def _difference_detail(lhs: MPoly, rhs: MPoly) -> str:
    diff = lhs - rhs
    if diff.is_zero():
        return ""
    exps, coeff = diff.leading_term()
    mono = "*".join(
        f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
        for i, e in enumerate(exps)
        if e
    ) or "1"
    return f"difference has leading term {coeff}*{mono}"


def witness_check(
    spec: TowerSpec, witnesses, target: TowerElem | None = None
) -> WitnessReport:
    """Verify witness_j^(k_j) = p_(j-1) under the witness interpretation for
    every level, and optionally that the target element expands to x_1."""
    if len(witnesses) != spec.s:
        raise ValueError(f"need {spec.s} witnesses, got {len(witnesses)}")
    n = spec.n
    records = []
    for j in range(1, spec.s + 1):
        w = witnesses[j - 1]
        wrf = RatFunc(w) if isinstance(w, MPoly) else w
        k = spec.ks[j - 1]
        lhs = wrf ** k
        rhs = expand_with_witnesses(spec.ps[j - 1], witnesses)
        ok = lhs == rhs
        records.append(
            IdentityRecord(
                name=f"witness_{j}^{k} = p_{j - 1}(sigma, witnesses)",
                ok=ok,
                detail="" if ok else _difference_detail(
                    lhs.num * rhs.den, rhs.num * lhs.den
                ),
            )
        )
    if target is not None:
        x1 = RatFunc(MPoly.variable(n, 1))
        expanded = expand_with_witnesses(spec.lift(target, spec.s), witnesses)
        ok = x1 == expanded
        records.append(
            IdentityRecord(
                name="x_1 = target(sigma, witnesses)",
                ok=ok,
                detail="" if ok else _difference_detail(
                    x1.num * expanded.den, expanded.num * x1.den
                ),
            )
        )
    return WitnessReport(records=records)
