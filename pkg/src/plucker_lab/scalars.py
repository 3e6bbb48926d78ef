"""Exact arithmetic over the Eisenstein rationals and polynomials in lambda.

The base field is Q(rho) with rho a primitive cube root of unity
(rho^2 + rho + 1 = 0).  Elements are kept as a + b*rho with rational a, b
reduced to lowest terms.  LambdaPoly is the univariate polynomial ring in
the parameter lambda over that field; it doubles as the coefficient type
of every multivariate polynomial in this package.  No floating point is
used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class FactorizationBudget(Exception):
    """Integer factorization gave up within its iteration budget."""


class EisensteinScalar:
    """An element a + b*rho of Q(rho), stored as integers over a common
    denominator: (an + bn*rho) / den with gcd(an, bn, den) = 1, den > 0."""

    __slots__ = ("an", "bn", "den")

    def __init__(self, a=0, b=0):
        if isinstance(a, float) or isinstance(b, float):
            raise TypeError("floats are not exact; pass int or Fraction")
        a = Fraction(a)
        b = Fraction(b)
        den = (a.denominator * b.denominator) // math.gcd(
            a.denominator, b.denominator
        )
        an = a.numerator * (den // a.denominator)
        bn = b.numerator * (den // b.denominator)
        g = math.gcd(math.gcd(an, bn), den)
        object.__setattr__(self, "an", an // g)
        object.__setattr__(self, "bn", bn // g)
        object.__setattr__(self, "den", den // g)

    def __setattr__(self, name, value):
        raise AttributeError("EisensteinScalar is immutable")

    @classmethod
    def _raw(cls, an: int, bn: int, den: int) -> "EisensteinScalar":
        if den < 0:
            an, bn, den = -an, -bn, -den
        g = math.gcd(math.gcd(an, bn), den)
        self = object.__new__(cls)
        object.__setattr__(self, "an", an // g)
        object.__setattr__(self, "bn", bn // g)
        object.__setattr__(self, "den", den // g)
        return self

    @classmethod
    def rho(cls) -> "EisensteinScalar":
        return cls._raw(0, 1, 1)

    @property
    def a(self) -> Fraction:
        return Fraction(self.an, self.den)

    @property
    def b(self) -> Fraction:
        return Fraction(self.bn, self.den)

    def is_rational(self) -> bool:
        return self.bn == 0

    def as_fraction(self) -> Fraction:
        if self.bn != 0:
            raise ValueError("not a rational number: %s" % self)
        return Fraction(self.an, self.den)

    @staticmethod
    def _coerce(other):
        if isinstance(other, EisensteinScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return EisensteinScalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinScalar._raw(
            self.an * o.den + o.an * self.den,
            self.bn * o.den + o.bn * self.den,
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return EisensteinScalar._raw(-self.an, -self.bn, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a1 + b1 rho)(a2 + b2 rho) with rho^2 = -1 - rho
        bb = self.bn * o.bn
        return EisensteinScalar._raw(
            self.an * o.an - bb,
            self.an * o.bn + self.bn * o.an - bb,
            self.den * o.den,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "EisensteinScalar":
        # rho -> rho^2 = -1 - rho
        return EisensteinScalar._raw(self.an - self.bn, -self.bn, self.den)

    def norm(self) -> Fraction:
        return Fraction(
            self.an * self.an - self.an * self.bn + self.bn * self.bn,
            self.den * self.den,
        )

    def inverse(self) -> "EisensteinScalar":
        n = self.an * self.an - self.an * self.bn + self.bn * self.bn
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return EisensteinScalar._raw(
            (self.an - self.bn) * self.den, -self.bn * self.den, n
        )

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = EisensteinScalar._raw(1, 0, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.an == o.an and self.bn == o.bn and self.den == o.den

    def __hash__(self):
        return hash((self.an, self.bn, self.den))

    def __bool__(self):
        return self.an != 0 or self.bn != 0

    def __str__(self):
        return render_scalar(self)

    def __repr__(self):
        return render_scalar(self)


ZERO = EisensteinScalar(0)
ONE = EisensteinScalar(1)
RHO = EisensteinScalar.rho()


def _render_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def render_scalar(x: EisensteinScalar) -> str:
    """Canonical text form: `a`, `a/b`, `rho`, `a + b*rho`."""
    a, b = x.a, x.b
    if b == 0:
        return _render_fraction(a)
    if b == 1:
        rho_part = "rho"
    elif b == -1:
        rho_part = "-rho"
    else:
        rho_part = _render_fraction(b) + "*rho"
    if a == 0:
        return rho_part
    if b > 0:
        return "%s + %s" % (_render_fraction(a), rho_part)
    return "%s - %s" % (_render_fraction(a), rho_part.lstrip("-"))


def eis_invert(x: EisensteinScalar) -> EisensteinScalar:
    """Multiplicative inverse; raises ZeroDivisionError on zero."""
    return x.inverse()


def eis_norm(x: EisensteinScalar) -> Fraction:
    """The field norm a^2 - a*b + b^2 (multiplicative, >= 0)."""
    return x.norm()


def fraction_sqrt(q: Fraction):
    """Exact square root of a non-negative rational, or None."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def eis_sqrt(t: EisensteinScalar):
    """A square root of t inside Q(rho), or None when none exists.

    Writing s = x + y*rho, s^2 = t reduces to x^2 - y^2 = a and
    2xy - y^2 = b; eliminating x gives 3z^2 + (4a - 2b)z - b^2 = 0
    for z = y^2, which is solved exactly over the rationals.
    """
    if not t:
        return ZERO
    a, b = t.a, t.b
    if b == 0:
        x = fraction_sqrt(a)
        if x is not None:
            return EisensteinScalar(x)
    disc = (4 * a - 2 * b) ** 2 + 12 * b * b
    d = fraction_sqrt(disc)
    if d is None:
        return None
    for sgn in (1, -1):
        z = ((2 * b - 4 * a) + sgn * d) / 6
        if z <= 0:
            continue
        y = fraction_sqrt(z)
        if y is None:
            continue
        for ysgn in (1, -1):
            yy = ysgn * y
            x = (b + z) / (2 * yy)
            if x * x - yy * yy == a and 2 * x * yy - yy * yy == b:
                return EisensteinScalar(x, yy)
    return None


def scalar_sort_key(x: EisensteinScalar):
    return (x.a.numerator, x.a.denominator, x.b.numerator, x.b.denominator)


class LambdaPoly:
    """Polynomial in the parameter lambda with EisensteinScalar coefficients.

    Coefficients are stored lowest power first with no trailing zeros, so
    degree-0 values embed scalars losslessly and the zero polynomial is
    the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction, EisensteinScalar)):
            coeffs = (coeffs,)
        lifted = []
        for c in coeffs:
            if not isinstance(c, EisensteinScalar):
                c = EisensteinScalar(c)
            lifted.append(c)
        while lifted and not lifted[-1]:
            lifted.pop()
        object.__setattr__(self, "coeffs", tuple(lifted))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    @classmethod
    def _raw(cls, coeffs) -> "LambdaPoly":
        self = object.__new__(cls)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        return self

    @classmethod
    def lam(cls) -> "LambdaPoly":
        return cls._raw((ZERO, ONE))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> EisensteinScalar:
        if len(self.coeffs) > 1:
            raise ValueError("lambda is still symbolic in %s" % self)
        return self.coeffs[0] if self.coeffs else ZERO

    def leading(self) -> EisensteinScalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @staticmethod
    def _coerce(other):
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Fraction, EisensteinScalar)):
            return LambdaPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        while out and not out[-1]:
            out.pop()
        return LambdaPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return LambdaPoly._raw(())
        if len(a) == 1 and len(b) == 1:
            c = a[0] * b[0]
            return LambdaPoly._raw((c,) if c else ())
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        while out and not out[-1]:
            out.pop()
        return LambdaPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = LambdaPoly((ONE,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, s: EisensteinScalar) -> "LambdaPoly":
        if not s:
            return LambdaPoly._raw(())
        return LambdaPoly._raw(tuple(c * s for c in self.coeffs))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def evaluate(self, value: EisensteinScalar) -> EisensteinScalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "LambdaPoly":
        return LambdaPoly._raw(
            tuple(c * k for k, c in enumerate(self.coeffs) if k >= 1)
        )

    def conjugate(self) -> "LambdaPoly":
        return LambdaPoly._raw(tuple(c.conjugate() for c in self.coeffs))

    def divmod(self, other: "LambdaPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return LambdaPoly._raw(()), self
        inv_lead = other.leading().inverse()
        quot = [ZERO] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] * inv_lead
            quot[i] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * oc
        while rem and not rem[-1]:
            rem.pop()
        while quot and not quot[-1]:
            quot.pop()
        return LambdaPoly._raw(quot), LambdaPoly._raw(rem)

    def exact_div(self, other: "LambdaPoly") -> "LambdaPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "LambdaPoly":
        if self.is_zero():
            return self
        return self.scale(self.leading().inverse())

    def gcd(self, other: "LambdaPoly") -> "LambdaPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def __str__(self):
        return render_lambda_poly(self)

    def __repr__(self):
        return render_lambda_poly(self)


LAMBDA = LambdaPoly.lam()
LP_ZERO = LambdaPoly(())
LP_ONE = LambdaPoly((ONE,))


def _scalar_factor_text(c: EisensteinScalar) -> str:
    """Scalar rendered for use as a multiplicative factor (parenthesized
    when it is a two-part number)."""
    s = render_scalar(c)
    if c.an and c.bn:
        return "(%s)" % s
    return s


def render_lambda_poly(p: LambdaPoly) -> str:
    """Ascending-power rendering, e.g. `3 - 3*lambda + lambda^2`."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        if k == 0:
            mono = None
        elif k == 1:
            mono = "lambda"
        else:
            mono = "lambda^%d" % k
        # pull a leading minus out of the coefficient for sign placement
        neg = c.an < 0 or (c.an == 0 and c.bn < 0)
        if neg:
            c = -c
        if mono is None:
            body = render_scalar(c)
            if neg and c.an and c.bn:
                # keep -(a + b*rho) unambiguous after the sign pull
                body = "(%s)" % body
        elif c == ONE:
            body = mono
        else:
            body = "%s*%s" % (_scalar_factor_text(c), mono)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Integer factorization (for rational-root candidate enumeration)

_TRIAL_LIMIT = 100_000
_RHO_ROUNDS = 220_000
_DIVISOR_CAP = 20_000


def _pollard_rho(n: int, budget: int) -> int:
    # deterministic parameter sweep; returns a nontrivial factor or 0
    if n % 2 == 0:
        return 2
    for c in range(1, 20):
        x = y = 2
        d = 1
        steps = 0
        while d == 1 and steps < budget:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
            steps += 1
        if d != 1 and d != n:
            return d
        if steps >= budget:
            return 0
    return 0


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor_int(n: int) -> dict:
    """Prime factorization {p: e} of |n| > 0; raises FactorizationBudget
    when the deterministic budget is exhausted."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out: dict = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p < _TRIAL_LIMIT:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m, _RHO_ROUNDS)
        if d == 0:
            raise FactorizationBudget("giving up on factoring %d" % m)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors_of(n: int) -> list:
    """Positive divisors of |n|, capped; raises FactorizationBudget when
    factoring stalls or the divisor count exceeds the cap."""
    fac = factor_int(n)
    divs = [1]
    for p, e in fac.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
        if len(divs) > _DIVISOR_CAP:
            raise FactorizationBudget("divisor explosion for %d" % n)
    return sorted(divs)


# ---------------------------------------------------------------------------
# Root finding over Q(rho)


@dataclass(frozen=True)
class RootSearch:
    """All Q(rho)-roots of a univariate polynomial plus leftovers.

    roots holds (root, multiplicity) pairs.  unresolved lists cofactors of
    degree > 2 that were not split further; budget_ok is False when the
    integer-factoring budget ran out (so rational candidates may have been
    missed).
    """

    roots: tuple
    unresolved: tuple
    budget_ok: bool = True

    @property
    def values(self):
        return tuple(r for r, _ in self.roots)

    @property
    def complete(self) -> bool:
        return not self.unresolved and self.budget_ok


def _rational_coeff_list(p: LambdaPoly):
    out = []
    for c in p.coeffs:
        if c.bn != 0:
            return None
        out.append(Fraction(c.an, c.den))
    return out


def _clear_to_int(coeffs) -> list:
    lcm = 1
    for q in coeffs:
        lcm = lcm * q.denominator // math.gcd(lcm, q.denominator)
    ints = [int(q * lcm) for q in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _norm_form(p: LambdaPoly) -> list:
    """Integer-cleared primitive version of p * conj(p) (a rational poly)."""
    n = p * p.conjugate()
    rat = _rational_coeff_list(n)
    assert rat is not None
    return _clear_to_int(rat)


def _squarefree_part(p: LambdaPoly) -> LambdaPoly:
    if p.degree < 1:
        return p
    g = p.gcd(p.derivative())
    if g.degree < 1:
        return p
    return p.exact_div(g)


def _rational_root_candidates(intpoly: list):
    # rational-root theorem on an integer polynomial with nonzero constant
    const, lead = intpoly[0], intpoly[-1]
    ps = divisors_of(const)
    qs = divisors_of(lead)
    seen = set()
    for q in qs:
        for p in ps:
            cand = Fraction(p, q)
            if cand not in seen:
                seen.add(cand)
                yield cand
                yield -cand


def _deflate(p: LambdaPoly, root: EisensteinScalar):
    """Divide out (lambda - root) as often as it divides; returns
    (quotient, multiplicity)."""
    mult = 0
    lin = LambdaPoly((-root, ONE))
    while True:
        q, r = p.divmod(lin)
        if not r.is_zero():
            return p, mult
        p = q
        mult += 1


def _solve_linear(p: LambdaPoly) -> EisensteinScalar:
    return -p.coeffs[0] / p.coeffs[1]


def _solve_quadratic(p: LambdaPoly):
    """Roots inside Q(rho) of a degree-2 polynomial, with multiplicity."""
    c0, c1, c2 = p.coeffs
    disc = c1 * c1 - EisensteinScalar(4) * c2 * c0
    if not disc:
        return [(-c1 / (EisensteinScalar(2) * c2), 2)]
    s = eis_sqrt(disc)
    if s is None:
        return []
    inv = (EisensteinScalar(2) * c2).inverse()
    return [((-c1 + s) * inv, 1), ((-c1 - s) * inv, 1)]


_PAIR_CAP = 4_000


def _quadratic_factor_roots(h: LambdaPoly):
    """Search the norm form of h for rational quadratic factors whose roots
    lie in Q(rho); returns candidate roots (verified by the caller)."""
    nf = _norm_form(_squarefree_part(h))
    lead, const = nf[-1], nf[0]
    da = divisors_of(lead)
    dc = divisors_of(const)
    if len(da) * len(dc) > _PAIR_CAP:
        raise FactorizationBudget(
            "too many quadratic-factor candidates (%d)" % (len(da) * len(dc))
        )
    cands = []
    for a in da:
        for cmag in dc:
            for c in (cmag, -cmag):
                cands.extend(_quad_divisor_roots(nf, a, c))
    return cands


def _quad_divisor_roots(intpoly: list, a: int, c: int):
    """Rational b with a*x^2 + b*x + c dividing intpoly, then the Q(rho)
    roots of those quadratics (only the irrational ones are of interest)."""
    # divide intpoly by a*x^2 + b*x + c with b symbolic; remainder
    # coefficients are polynomials in b
    rem = [LambdaPoly((Fraction(v),)) for v in intpoly]
    b = LAMBDA  # reuse the univariate type with b as the variable
    inv_a = Fraction(1, a)
    for i in range(len(rem) - 1, 1, -1):
        q = rem[i].scale(EisensteinScalar(inv_a))
        if q.is_zero():
            continue
        rem[i - 1] = rem[i - 1] - q * b
        rem[i - 2] = rem[i - 2] - q.scale(EisensteinScalar(c))
    r1, r0 = rem[1], rem[0]
    g = r1.gcd(r0)
    out = []
    if g.is_zero() or g.degree < 1:
        return out
    for broot, _ in _root_search_rational_only(g):
        bq = broot.as_fraction()
        disc = bq * bq - 4 * a * c
        if disc >= 0:
            continue  # real roots are rational or irrational-real: not new
        s = fraction_sqrt(-disc / 3)
        if s is None:
            continue
        # sqrt(disc) = s * sqrt(-3) = s * (1 + 2 rho)
        root_sqrt = EisensteinScalar(s) * EisensteinScalar(1, 2)
        half = EisensteinScalar(Fraction(1, 2 * a))
        mb = EisensteinScalar(-bq)
        out.append((mb + root_sqrt) * half)
        out.append((mb - root_sqrt) * half)
    return out


def _root_search_rational_only(p: LambdaPoly):
    """Rational roots (with multiplicity) of a rational-coefficient poly."""
    rat = _rational_coeff_list(p)
    assert rat is not None
    found = []
    k = 0
    while rat and rat[0] == 0:
        rat.pop(0)
        k += 1
    if k:
        found.append((ZERO, k))
    if len(rat) <= 1:
        return found
    ints = _clear_to_int(rat)
    work = LambdaPoly([Fraction(v) for v in ints])
    sf = _clear_to_int(_rational_coeff_list(_squarefree_part(work)))
    for cand in _rational_root_candidates(sf):
        root = EisensteinScalar(cand)
        if work.evaluate(root):
            continue
        work, mult = _deflate(work, root)
        if mult:
            found.append((root, mult))
        if work.degree < 1:
            break
    return found


def lambda_roots(p: LambdaPoly) -> RootSearch:
    """All roots of p lying in Q(rho), found exactly.

    Rational roots come from a rational-root search on the norm form
    p * conj(p); what remains is split by an exact search for rational
    quadratic factors of the norm form whose roots live in Q(rho).
    Degree <= 2 leftovers are decided outright; higher-degree cofactors
    that resist the search are returned unresolved.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every lambda as a root")
    roots = []
    budget_ok = True
    work = p
    # factor out powers of lambda
    k = 0
    while k < len(work.coeffs) and not work.coeffs[k]:
        k += 1
    if k:
        roots.append((ZERO, k))
        work = LambdaPoly._raw(work.coeffs[k:])

    def drain_small(w):
        # solve what is directly solvable at degree <= 2
        if w.degree == 1:
            r = _solve_linear(w)
            roots.append((r, 1))
            return LP_ONE
        if w.degree == 2:
            got = _solve_quadratic(w)
            for r, m in got:
                roots.append((r, m))
            if got:
                return LP_ONE
        return w

    if work.degree >= 3:
        try:
            nf = _norm_form(_squarefree_part(work))
            for cand in _rational_root_candidates(nf):
                root = EisensteinScalar(cand)
                if work.evaluate(root):
                    continue
                work, mult = _deflate(work, root)
                if mult:
                    roots.append((root, mult))
                if work.degree < 3:
                    break
        except FactorizationBudget:
            budget_ok = False
    if work.degree >= 3 and budget_ok:
        try:
            for cand in _quadratic_factor_roots(work):
                if work.evaluate(cand):
                    continue
                work, mult = _deflate(work, cand)
                if mult:
                    roots.append((cand, mult))
        except FactorizationBudget:
            budget_ok = False
    unresolved = []
    if work.degree >= 3:
        unresolved.append(work.monic())
    elif work.degree >= 1:
        work = drain_small(work)
        if work.degree >= 1:
            # an irreducible quadratic over Q(rho): decided, no roots
            pass
    roots.sort(key=lambda rm: scalar_sort_key(rm[0]))
    return RootSearch(tuple(roots), tuple(unresolved), budget_ok)
