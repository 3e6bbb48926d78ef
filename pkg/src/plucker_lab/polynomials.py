"""Sparse multivariate polynomials over Q(rho)[lambda].

Exponent vectors map to LambdaPoly coefficients, so a curve equation can
keep the parameter lambda symbolic while x0,x1,x2 stay polynomial
variables.  The module supplies the text grammar used everywhere
(integers, `/`, `rho`, `lambda`, identifiers, + - * ^, parentheses),
graded-lex canonical rendering, calculus (partials, substitution),
Sylvester resultants with fraction-free elimination, discriminants, a
primitive-PRS gcd, and the built-in sextic family with its quadratic
coordinate map.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .scalars import (
    LAMBDA,
    ONE,
    ZERO,
    EisensteinScalar,
    LambdaPoly,
    render_lambda_poly,
)

_RESERVED = ("rho", "lambda")


class PolyParseError(ValueError):
    """Syntax or name error in polynomial text; position is a 0-based
    character offset into the input."""

    def __init__(self, message: str, position: int):
        super().__init__("%s at offset %d" % (message, position))
        self.position = position


def _coerce_coeff(c) -> LambdaPoly:
    if isinstance(c, LambdaPoly):
        return c
    if isinstance(c, (int, Fraction, EisensteinScalar)):
        return LambdaPoly((c,))
    raise TypeError("cannot use %r as a coefficient" % (c,))


class MultiPoly:
    """Polynomial in declared variables with LambdaPoly coefficients.

    terms maps exponent tuples (one slot per variable) to nonzero
    coefficients.  Instances are immutable by convention: no method
    mutates self.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        for v in variables:
            if v in _RESERVED:
                raise ValueError("variable name %r is reserved" % v)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables):
                raise ValueError(
                    "exponent vector %r does not match %d variables"
                    % (exp, len(variables))
                )
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent in %r" % (exp,))
            coeff = _coerce_coeff(coeff)
            if coeff:
                clean[exp] = clean[exp] + coeff if exp in clean else coeff
        clean = {e: c for e, c in clean.items() if c}
        object.__setattr__(self, "vars", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def _raw(cls, variables, terms) -> "MultiPoly":
        self = object.__new__(cls)
        object.__setattr__(self, "vars", variables)
        object.__setattr__(self, "terms", terms)
        return self

    @classmethod
    def zero(cls, variables) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, value) -> "MultiPoly":
        value = _coerce_coeff(value)
        variables = tuple(variables)
        if not value:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables, name) -> "MultiPoly":
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls._raw(variables, {tuple(exp): LambdaPoly((ONE,))})

    @property
    def arity(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_coefficient(self) -> LambdaPoly:
        return self.terms.get((0,) * len(self.vars), LambdaPoly(()))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        i = self._var_index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def lambda_free(self) -> bool:
        return all(c.is_constant() for c in self.terms.values())

    def _var_index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ValueError(
                "unknown variable %r (declared: %s)" % (var, ", ".join(self.vars))
            ) from None

    def _check_same_vars(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise ValueError(
                "mixed variable sets: %r vs %r" % (self.vars, other.vars)
            )

    @staticmethod
    def _coerce(other, variables):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction, EisensteinScalar, LambdaPoly)):
            return MultiPoly.constant(variables, other)
        return None

    def __add__(self, other):
        o = self._coerce(other, self.vars)
        if o is None:
            return NotImplemented
        self._check_same_vars(o)
        out = dict(self.terms)
        for exp, c in o.terms.items():
            s = out.get(exp)
            s = c if s is None else s + c
            if s:
                out[exp] = s
            elif exp in out:
                del out[exp]
        return MultiPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other, self.vars)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other, self.vars)
        if o is None:
            return NotImplemented
        self._check_same_vars(o)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = out.get(exp)
                out[exp] = prod if s is None else s + prod
        return MultiPoly._raw(self.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, factor) -> "MultiPoly":
        factor = _coerce_coeff(factor)
        if not factor:
            return MultiPoly._raw(self.vars, {})
        return MultiPoly._raw(
            self.vars, {e: c * factor for e, c in self.terms.items()}
        )

    def __eq__(self, other):
        o = other if isinstance(other, MultiPoly) else self._coerce(other, self.vars)
        if o is None:
            return NotImplemented
        return self.vars == o.vars and self.terms == o.terms

    def __bool__(self):
        return bool(self.terms)

    # -- calculus ----------------------------------------------------------

    def evaluate(self, point) -> LambdaPoly:
        if len(point) != len(self.vars):
            raise ValueError(
                "point has %d coordinates, polynomial has %d variables"
                % (len(point), len(self.vars))
            )
        pt = []
        for x in point:
            if not isinstance(x, EisensteinScalar):
                x = EisensteinScalar(x)
            pt.append(x)
        acc = LambdaPoly(())
        for exp, coeff in self.terms.items():
            s = ONE
            for x, e in zip(pt, exp):
                if e:
                    s = s * x**e
            if s:
                acc = acc + coeff.scale(s)
        return acc

    def partial_derivative(self, var: str) -> "MultiPoly":
        i = self._var_index(var)
        out = {}
        for exp, coeff in self.terms.items():
            e = exp[i]
            if not e:
                continue
            nexp = exp[:i] + (e - 1,) + exp[i + 1 :]
            c = coeff.scale(EisensteinScalar(e))
            s = out.get(nexp)
            out[nexp] = c if s is None else s + c
        return MultiPoly._raw(self.vars, {e: c for e, c in out.items() if c})

    def substitute(self, images) -> "MultiPoly":
        images = list(images)
        if len(images) != len(self.vars):
            raise ValueError(
                "%d images for %d variables" % (len(images), len(self.vars))
            )
        tvars = images[0].vars
        for im in images:
            if im.vars != tvars:
                raise ValueError("images use mixed variable sets")
        # precompute image powers
        maxe = [0] * len(self.vars)
        for exp in self.terms:
            for i, e in enumerate(exp):
                maxe[i] = max(maxe[i], e)
        powers = []
        for im, top in zip(images, maxe):
            ps = [MultiPoly.constant(tvars, 1)]
            for _ in range(top):
                ps.append(ps[-1] * im)
            powers.append(ps)
        acc = MultiPoly.zero(tvars)
        for exp, coeff in self.terms.items():
            term = MultiPoly.constant(tvars, coeff)
            for i, e in enumerate(exp):
                if e:
                    term = term * powers[i][e]
            acc = acc + term
        return acc

    def specialize(self, var: str, value) -> "MultiPoly":
        """Substitute a constant for one variable; the variable stays
        declared but no longer appears."""
        i = self._var_index(var)
        if not isinstance(value, EisensteinScalar):
            value = EisensteinScalar(value)
        out = {}
        for exp, coeff in self.terms.items():
            c = coeff.scale(value ** exp[i]) if exp[i] else coeff
            if not c:
                continue
            nexp = exp[:i] + (0,) + exp[i + 1 :]
            s = out.get(nexp)
            out[nexp] = c if s is None else s + c
        return MultiPoly._raw(self.vars, {e: c for e, c in out.items() if c})

    def specialize_lambda(self, value) -> "MultiPoly":
        if not isinstance(value, EisensteinScalar):
            value = EisensteinScalar(value)
        out = {}
        for exp, coeff in self.terms.items():
            c = coeff.evaluate(value)
            if c:
                out[exp] = LambdaPoly((c,))
        return MultiPoly._raw(self.vars, out)

    def coefficients_in(self, var: str):
        """Coefficients of var^0, var^1, ... as var-free MultiPolys."""
        i = self._var_index(var)
        d = self.degree_in(var)
        out = [dict() for _ in range(max(d, 0) + 1)]
        for exp, coeff in self.terms.items():
            nexp = exp[:i] + (0,) + exp[i + 1 :]
            out[exp[i]][nexp] = coeff
        return [MultiPoly._raw(self.vars, t) for t in out]

    # -- leading terms and division ---------------------------------------

    @staticmethod
    def _grlex_key(exp):
        return (sum(exp), exp)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=self._grlex_key)
        return exp, self.terms[exp]

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Exact division; raises ValueError when other does not divide
        self in the polynomial ring (lambda included)."""
        o = self._coerce(other, self.vars)
        self._check_same_vars(o)
        if o.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        if len(o.terms) == 1:
            (dexp, dcoeff), = o.terms.items()
            out = {}
            for exp, coeff in self.terms.items():
                nexp = tuple(a - b for a, b in zip(exp, dexp))
                if any(e < 0 for e in nexp):
                    raise ValueError("inexact division (monomial)")
                out[nexp] = coeff.exact_div(dcoeff)
            return MultiPoly._raw(self.vars, out)
        dexp, dcoeff = o.leading_term()
        rem = dict(self.terms)
        out = {}
        while rem:
            rexp = max(rem, key=self._grlex_key)
            nexp = tuple(a - b for a, b in zip(rexp, dexp))
            if any(e < 0 for e in nexp):
                raise ValueError("inexact division (leading monomial)")
            q = rem[rexp].exact_div(dcoeff)
            out[nexp] = q
            for oexp, ocoeff in o.terms.items():
                t = tuple(a + b for a, b in zip(nexp, oexp))
                s = rem.get(t, LambdaPoly(())) - q * ocoeff
                if s:
                    rem[t] = s
                elif t in rem:
                    del rem[t]
        return MultiPoly._raw(self.vars, out)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return render_poly(self)


# ---------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([\^+\-*/()])")


class _Parser:
    def __init__(self, text: str, variables):
        self.text = text
        self.vars = tuple(variables)
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                raise PolyParseError("unexpected character %r" % text[pos], pos)
            self.tokens.append((m.group(0), pos))
            pos = m.end()
        self.tokens.append((None, len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> MultiPoly:
        p = self.expr()
        if self.peek() is not None:
            raise PolyParseError(
                "syntax error (expected operator or end of input)", self.pos()
            )
        return p

    def expr(self) -> MultiPoly:
        negate = False
        if self.peek() in ("+", "-"):
            negate = self.advance()[0] == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.advance()[0]
            t = self.term()
            acc = acc - t if op == "-" else acc + t
        return acc

    def term(self) -> MultiPoly:
        acc = self.power()
        while self.peek() in ("*", "/"):
            op, oppos = self.advance()
            rhs = self.power()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant():
                    raise PolyParseError(
                        "can only divide by a constant", oppos
                    )
                c = rhs.constant_coefficient()
                if not c.is_constant():
                    raise PolyParseError(
                        "cannot divide by a lambda-dependent value", oppos
                    )
                s = c.constant_value()
                if not s:
                    raise PolyParseError("division by zero", oppos)
                acc = acc.scale(s.inverse())
        return acc

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.peek() == "^":
            self.advance()
            tok, pos = self.advance()
            if tok is None or not tok.isdigit():
                raise PolyParseError("expected integer exponent", pos)
            base = base ** int(tok)
        return base

    def atom(self) -> MultiPoly:
        tok, pos = self.advance()
        if tok is None:
            raise PolyParseError("unexpected end of input", pos)
        if tok.isdigit():
            return MultiPoly.constant(self.vars, int(tok))
        if tok == "(":
            inner = self.expr()
            closer, cpos = self.advance()
            if closer != ")":
                raise PolyParseError("expected ')'", cpos)
            return inner
        if tok == "rho":
            return MultiPoly.constant(self.vars, EisensteinScalar.rho())
        if tok == "lambda":
            return MultiPoly.constant(self.vars, LAMBDA)
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            if tok not in self.vars:
                raise PolyParseError("unknown variable %r" % tok, pos)
            return MultiPoly.variable(self.vars, tok)
        raise PolyParseError("syntax error", pos)


def parse_poly(text: str, variables) -> MultiPoly:
    """Parse polynomial text over the given variables.

    Grammar: integers, `/` for rational constants, `rho`, `lambda`,
    declared variable names, `+ - * ^` and parentheses; whitespace is
    insignificant.  Raises PolyParseError with a character offset.
    """
    return _Parser(text, variables).parse()


# ---------------------------------------------------------------------------
# Rendering

def _simple_coeff_text(c: LambdaPoly):
    """Rendering of a coefficient that needs no parentheses when glued
    onto a monomial with '*': a single lambda power whose scalar has one
    part.  Returns (negate, text or None)."""
    live = [(k, s) for k, s in enumerate(c.coeffs) if s]
    if len(live) != 1:
        return False, None
    k, s = live[0]
    neg = s.an < 0 or (s.an == 0 and s.bn < 0)
    if neg:
        s = -s
    if k == 0:
        lam = None
    elif k == 1:
        lam = "lambda"
    else:
        lam = "lambda^%d" % k
    if s == ONE:
        stext = None
    elif s.an and s.bn:
        stext = "(%s)" % str(s)
    else:
        stext = str(s)
    if stext is None and lam is None:
        return neg, "1"
    if stext is None:
        return neg, lam
    if lam is None:
        return neg, stext
    return neg, "%s*%s" % (stext, lam)


def _monomial_text(exp, names):
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def render_poly(p: MultiPoly) -> str:
    """Canonical form: graded-lex descending terms, explicit `*`."""
    if p.is_zero():
        return "0"
    order = sorted(p.terms, key=MultiPoly._grlex_key, reverse=True)
    chunks = []
    for exp in order:
        coeff = p.terms[exp]
        mono = _monomial_text(exp, p.vars)
        neg, simple = _simple_coeff_text(coeff)
        if simple is None:
            body = "(%s)" % render_lambda_poly(coeff)
            if mono:
                body += "*" + mono
            neg = False
        else:
            if not mono:
                body = simple
            elif simple == "1":
                body = mono
            else:
                body = simple + "*" + mono
        if not chunks:
            chunks.append("-" + body if neg else body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


# ---------------------------------------------------------------------------
# Module-level operation wrappers

def evaluate(p: MultiPoly, point) -> LambdaPoly:
    """Evaluate at scalar coordinates; lambda stays symbolic."""
    return p.evaluate(point)


def partial_derivative(p: MultiPoly, var: str) -> MultiPoly:
    return p.partial_derivative(var)


def substitute(p: MultiPoly, images) -> MultiPoly:
    """Compose p with a full list of images, one per variable."""
    return p.substitute(images)


# ---------------------------------------------------------------------------
# Resultants

def _sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str):
    dp = p.degree_in(var)
    dq = q.degree_in(var)
    pc = p.coefficients_in(var)
    qc = q.coefficients_in(var)
    pc.reverse()  # leading first
    qc.reverse()
    n = dp + dq
    zero = MultiPoly.zero(p.vars)
    rows = []
    for i in range(dq):
        rows.append([zero] * i + pc + [zero] * (dq - 1 - i))
    for i in range(dp):
        rows.append([zero] * i + qc + [zero] * (dp - 1 - i))
    assert all(len(r) == n for r in rows)
    return rows


def bareiss_determinant(mat, variables) -> MultiPoly:
    """Determinant of a square MultiPoly matrix by fraction-free
    elimination; every interior division is exact."""
    n = len(mat)
    one = MultiPoly.constant(variables, 1)
    if n == 0:
        return one
    m = [row[:] for row in mat]
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(variables)
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot
                if not lead.is_zero():
                    num = num - lead * m[k][j]
                row_i[j] = num.exact_div(prev)
            row_i[k] = MultiPoly.zero(variables)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant eliminating var; the result is var-free."""
    p._check_same_vars(q)
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if p.degree_in(var) < 1 or q.degree_in(var) < 1:
        raise ValueError("resultant needs positive degree in %r" % var)
    return bareiss_determinant(_sylvester_matrix(p, q, var), p.vars)


def discriminant(p: MultiPoly, var: str) -> MultiPoly:
    """Res(p, dp/dvar) / lc with the classical sign, so x^2+b*x+c gives
    b^2 - 4*c and x^3+p*x+q gives -4*p^3 - 27*q^2."""
    d = p.degree_in(var)
    if d < 2:
        raise ValueError("discriminant needs degree >= 2 in %r" % var)
    res = resultant(p, p.partial_derivative(var), var)
    lead = p.coefficients_in(var)[d]
    out = res.exact_div(lead)
    if (d * (d - 1) // 2) % 2:
        out = -out
    return out


# ---------------------------------------------------------------------------
# GCD, content, squarefree part

def _content_in(p: MultiPoly, var: str) -> MultiPoly:
    coeffs = [c for c in p.coefficients_in(var) if not c.is_zero()]
    g = MultiPoly.zero(p.vars)
    for c in coeffs:
        g = mv_gcd(g, c)
    return g


def _primitive_in(p: MultiPoly, var: str):
    cont = _content_in(p, var)
    return cont, p.exact_div(cont)


def _pseudo_rem(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    dp = p.degree_in(var)
    dq = q.degree_in(var)
    lc_q = q.coefficients_in(var)[dq]
    v = MultiPoly.variable(p.vars, var)
    r = p
    steps = dp - dq + 1
    while not r.is_zero() and r.degree_in(var) >= dq:
        dr = r.degree_in(var)
        lc_r = r.coefficients_in(var)[dr]
        r = r * lc_q - q * lc_r * v ** (dr - dq)
        steps -= 1
    if steps > 0:
        r = r * lc_q**steps
    return r


def normalize_leading(p: MultiPoly) -> MultiPoly:
    """Scale so the graded-lex leading coefficient is monic in lambda."""
    if p.is_zero():
        return p
    _, lead = p.leading_term()
    return p.scale(LambdaPoly((lead.leading().inverse(),)))


def proportional(p: MultiPoly, q: MultiPoly) -> bool:
    """True when p and q agree up to a nonzero constant scalar factor."""
    if p.vars != q.vars:
        return False
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return normalize_leading(p) == normalize_leading(q)


def mv_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Greatest common divisor via primitive pseudo-remainder sequences,
    normalized to a lambda-monic leading coefficient."""
    if p.is_zero():
        return normalize_leading(q)
    if q.is_zero():
        return normalize_leading(p)
    p._check_same_vars(q)
    var = None
    for v in reversed(p.vars):
        if p.degree_in(v) > 0 or q.degree_in(v) > 0:
            var = v
            break
    if var is None:
        # both constant in every variable: gcd of lambda polynomials
        g = p.constant_coefficient().gcd(q.constant_coefficient())
        return MultiPoly.constant(p.vars, g)
    if p.degree_in(var) == 0:
        return mv_gcd(p, _content_in(q, var))
    if q.degree_in(var) == 0:
        return mv_gcd(_content_in(p, var), q)
    cp, a = _primitive_in(p, var)
    cq, b = _primitive_in(q, var)
    cont = mv_gcd(cp, cq)
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b, var)
        if r.is_zero():
            a, b = b, r
        else:
            a, b = b, _primitive_in(r, var)[1]
    return normalize_leading(cont * a)


def squarefree_part(p: MultiPoly) -> MultiPoly:
    """p with repeated factors collapsed to multiplicity one."""
    if p.is_zero() or p.is_constant():
        return p
    g = p
    for v in p.vars:
        if p.degree_in(v) > 0:
            g = mv_gcd(g, p.partial_derivative(v))
    if g.is_constant():
        return normalize_leading(p)
    return normalize_leading(p.exact_div(g))


def divide_out(p: MultiPoly, f: MultiPoly):
    """Divide f out of p as many times as it exactly divides;
    returns (reduced, count)."""
    count = 0
    while True:
        try:
            nxt = p.exact_div(f)
        except ValueError:
            return p, count
        p = nxt
        count += 1


def parse_scalar(text: str) -> EisensteinScalar:
    """Parse constant text (`-1`, `1/2`, `rho`, `1 + 2*rho`) to a scalar."""
    p = _Parser(text, ()).parse()
    c = p.constant_coefficient()
    if not c.is_constant():
        raise PolyParseError("expected a constant, found lambda", 0)
    return c.constant_value()


def as_scalar_univariate(p: MultiPoly, var: str) -> LambdaPoly:
    """Reinterpret a single-variable, lambda-free polynomial as a
    univariate polynomial (over the scalars) in that variable."""
    i = p._var_index(var)
    coeffs = [ZERO] * (max(p.degree_in(var), 0) + 1)
    for exp, c in p.terms.items():
        if any(e for j, e in enumerate(exp) if j != i):
            raise ValueError("polynomial is not univariate in %r" % var)
        if not c.is_constant():
            raise ValueError("lambda is still symbolic")
        coeffs[exp[i]] = c.constant_value()
    return LambdaPoly(coeffs)


# ---------------------------------------------------------------------------
# Built-in equations

X_VARS = ("x0", "x1", "x2")
Y_VARS = ("y0", "y1", "y2")
U_VARS = ("u0", "u1", "u2")

SEXTIC_NOTE = (
    "one transcription of this sextic contains a variable y3; with only "
    "y0,y1,y2 in play the term is read as y0*y1*y2*(y0^3+y1^3+y2^3), the "
    "unique homogeneous degree-6 completion"
)


def quadratic_map() -> list:
    """The quadratic coordinate change (y0,y1,y2) as polynomials in
    x0,x1,x2 with lambda symbolic: yi = 3*xi^2 - 3*lambda*xj*xk."""
    out = []
    for i, (j, k) in ((0, (1, 2)), (1, (0, 2)), (2, (0, 1))):
        sq = MultiPoly.variable(X_VARS, X_VARS[i]) ** 2
        cross = MultiPoly.variable(X_VARS, X_VARS[j]) * MultiPoly.variable(
            X_VARS, X_VARS[k]
        )
        out.append(sq.scale(3) - cross.scale(LAMBDA.scale(EisensteinScalar(3))))
    return out


def bl2_sextic() -> MultiPoly:
    """The built-in lambda family of sextics in y0,y1,y2.

    (y0^6+y1^6+y2^6) + 2(2 lambda^3 - 1)(y0^3 y1^3 + y0^3 y2^3 + y1^3 y2^3)
    - 6 lambda^2 y0 y1 y2 (y0^3+y1^3+y2^3) - 3 lambda (lambda^3 - 4)
    y0^2 y1^2 y2^2.  See SEXTIC_NOTE for the reading of the third term.
    """
    y0 = MultiPoly.variable(Y_VARS, "y0")
    y1 = MultiPoly.variable(Y_VARS, "y1")
    y2 = MultiPoly.variable(Y_VARS, "y2")
    lam = LAMBDA
    two_lam3_minus = (lam**3).scale(EisensteinScalar(4)) - LambdaPoly((2,))
    six_lam2 = (lam**2).scale(EisensteinScalar(6))
    tail = (lam**4 - lam.scale(EisensteinScalar(4))).scale(EisensteinScalar(3))
    p = y0**6 + y1**6 + y2**6
    p = p + (y0**3 * y1**3 + y0**3 * y2**3 + y1**3 * y2**3).scale(two_lam3_minus)
    p = p - (y0 * y1 * y2 * (y0**3 + y1**3 + y2**3)).scale(six_lam2)
    p = p - (y0**2 * y1**2 * y2**2).scale(tail)
    return p
