"""Plane projective curves: singular loci, singularity types, flexes,
dual curves, and genus bookkeeping.

Everything here works with exact Eisenstein-rational coordinates.  Points
whose coordinates leave that field are not enumerated; instead every
search result carries a completeness flag so callers can tell "none
found" from "none found among scalar-resolvable points".
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .scalars import (
    ONE,
    ZERO,
    EisensteinScalar,
    LambdaPoly,
    lambda_roots,
    scalar_sort_key,
)
from .polynomials import (
    MultiPoly,
    U_VARS,
    X_VARS,
    as_scalar_univariate,
    divide_out,
    mv_gcd,
    normalize_leading,
    parse_poly,
    parse_scalar,
    resultant,
    squarefree_part,
)


class LambdaSymbolicError(ValueError):
    """Operation needs a concrete lambda; got a symbolic one."""


class NotOnCurveError(ValueError):
    pass


class NonsingularPointError(ValueError):
    pass


class DegenerateHessianError(ValueError):
    """The Hessian determinant vanishes identically (ruled or degenerate
    input such as a line or a double line)."""


class UnsupportedDegreeError(ValueError):
    pass


class EliminationError(RuntimeError):
    """Iterated resultants degenerated (collapsed to zero or left only
    spurious factors)."""


class ProjectivePoint:
    """Point of the projective plane with Eisenstein-rational coordinates,
    stored with the first nonzero coordinate normalized to 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        cs = []
        for c in coords:
            if not isinstance(c, EisensteinScalar):
                c = EisensteinScalar(c)
            cs.append(c)
        if len(cs) != 3:
            raise ValueError("a projective point needs 3 coordinates")
        pivot = next((c for c in cs if c), None)
        if pivot is None:
            raise ValueError("(0:0:0) is not a projective point")
        inv = pivot.inverse()
        object.__setattr__(self, "coords", tuple(c * inv for c in cs))

    def __setattr__(self, name, value):
        raise AttributeError("ProjectivePoint is immutable")

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def sort_key(self):
        return tuple(scalar_sort_key(c) for c in self.coords)

    def __str__(self):
        return "(%s)" % " : ".join(str(c) for c in self.coords)

    def __repr__(self):
        return str(self)

    def as_list(self):
        return [str(c) for c in self.coords]


def parse_point(text: str) -> ProjectivePoint:
    """Parse `a:b:c` with scalar-grammar coordinates."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("expected three ':'-separated coordinates")
    return ProjectivePoint([parse_scalar(p) for p in parts])


KIND_NODE = "node"
KIND_CUSP = "cusp"
KIND_TACNODE = "tacnode"
KIND_ORDINARY = "ordinary"
KIND_UNCLASSIFIED = "unclassified"

_ADE = {KIND_NODE: "A1", KIND_CUSP: "A2", KIND_TACNODE: "A3"}

# drop in class d(d-1) - ... per singularity, and local intersection
# multiplicity with the Hessian curve, by kind
_CLASS_DROP = {KIND_NODE: 2, KIND_CUSP: 3, KIND_TACNODE: 4}
_HESSIAN_DROP = {KIND_NODE: 6, KIND_CUSP: 8, KIND_TACNODE: 12}


@dataclass(frozen=True)
class SingularityRecord:
    point: ProjectivePoint
    multiplicity: int
    kind: str
    delta: int
    note: str = ""

    def as_dict(self) -> dict:
        out = {
            "point": self.point.as_list(),
            "multiplicity": self.multiplicity,
            "kind": self.kind,
            "delta": self.delta,
        }
        if self.kind in _ADE:
            out["ade"] = _ADE[self.kind]
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class SingularLocus:
    points: tuple
    complete: bool
    notes: tuple = ()


class PlaneCurve:
    """A nonzero homogeneous equation in three variables, lambda-free
    (specialize lambda before constructing)."""

    __slots__ = ("equation", "degree")

    def __init__(self, equation: MultiPoly):
        if equation.arity != 3:
            raise ValueError("a plane curve needs exactly 3 variables")
        if equation.is_zero():
            raise ValueError("zero equation does not cut out a curve")
        if not equation.is_homogeneous():
            raise ValueError("curve equation must be homogeneous")
        if not equation.lambda_free():
            raise LambdaSymbolicError(
                "lambda is still symbolic; specialize it first"
            )
        object.__setattr__(self, "equation", equation)
        object.__setattr__(self, "degree", equation.total_degree())

    def __setattr__(self, name, value):
        raise AttributeError("PlaneCurve is immutable")

    @classmethod
    def from_text(cls, text: str, variables=X_VARS) -> "PlaneCurve":
        return cls(parse_poly(text, variables))

    @property
    def vars(self):
        return self.equation.vars

    def partials(self):
        return [self.equation.partial_derivative(v) for v in self.vars]

    def contains(self, p: ProjectivePoint) -> bool:
        return self.equation.evaluate(p.coords).is_zero()

    def __str__(self):
        return str(self.equation)

    def __repr__(self):
        return "PlaneCurve(%s)" % self.equation


# ---------------------------------------------------------------------------
# Common zeros of polynomial systems, chart by chart


def _gcd_scalar_univariate(polys, var: str) -> LambdaPoly:
    g = LambdaPoly(())
    for p in polys:
        g = g.gcd(as_scalar_univariate(p, var))
    return g


def _solve_line(polys, var, notes):
    """Common zeros of one-variable polynomials; yields (values, complete)."""
    live = [p for p in polys if not p.is_zero()]
    if not live:
        notes.append("system vanishes identically on a chart line")
        return [], False
    if any(p.is_constant() for p in live):
        return [], True
    g = _gcd_scalar_univariate(live, var)
    if g.is_constant():
        return [], True
    rs = lambda_roots(g)
    if rs.unresolved:
        notes.append(
            "unresolved degree-%d factor in %s"
            % (rs.unresolved[0].degree, var)
        )
    if not rs.budget_ok:
        notes.append("integer factoring budget exhausted in %s" % var)
    return list(rs.values), rs.complete


def _solve_plane(polys, va, vb, notes):
    """Common zeros of a 2-variable system; yields ((a,b) pairs, complete)."""
    live = [p for p in polys if not p.is_zero()]
    complete = True
    if not live:
        notes.append("system vanishes identically on a chart")
        return [], False
    if any(p.is_constant() for p in live):
        return [], True
    with_b = [p for p in live if p.degree_in(vb) > 0]
    b_free = [p for p in live if p.degree_in(vb) == 0]
    if not with_b:
        # nothing pins vb: solutions come in vertical lines
        notes.append("solution set is one-dimensional in a chart")
        return [], False
    elim = list(b_free)
    if len(with_b) == 1 and not b_free:
        notes.append("underdetermined system in a chart")
        return [], False
    with_b.sort(key=lambda p: (p.degree_in(vb), len(p.terms)))
    base = with_b[0]
    for q in with_b[1:]:
        r = resultant(base, q, vb)
        if not r.is_zero():
            elim.append(r)
    if not elim:
        notes.append("shared positive-degree component while eliminating %s" % vb)
        return [], False
    g = _gcd_scalar_univariate(elim, va)
    if g.is_zero():
        notes.append("elimination left no constraint on %s" % va)
        return [], False
    if g.is_constant():
        return [], True
    rs = lambda_roots(g)
    if rs.unresolved:
        notes.append(
            "unresolved degree-%d factor in %s"
            % (rs.unresolved[0].degree, va)
        )
    if not rs.budget_ok:
        notes.append("integer factoring budget exhausted in %s" % va)
    complete = rs.complete
    pairs = []
    for a in rs.values:
        at_a = [p.specialize(va, a) for p in live]
        nz = [p for p in at_a if not p.is_zero()]
        if not nz:
            notes.append("whole line %s = %s solves the system" % (va, a))
            complete = False
            continue
        if any(p.is_constant() for p in nz):
            continue
        h = _gcd_scalar_univariate(nz, vb)
        if h.is_constant():
            continue
        rs2 = lambda_roots(h)
        if not rs2.complete:
            complete = False
            if rs2.unresolved:
                notes.append(
                    "unresolved degree-%d factor in %s at %s = %s"
                    % (rs2.unresolved[0].degree, vb, va, a)
                )
        for b in rs2.values:
            if all(p.specialize(vb, b).is_zero() for p in at_a):
                pairs.append((a, b))
    return pairs, complete


def projective_common_zeros(polys):
    """All common projective zeros with Eisenstein-rational coordinates.

    Works through the disjoint charts x0=1, then x0=0 & x1=1, then the
    point (0:0:1).  Returns (points, complete, notes); complete goes
    false when univariate factors of degree > 2 resist exact solving.
    """
    if not polys:
        raise ValueError("empty polynomial system")
    variables = polys[0].vars
    if len(variables) != 3:
        raise ValueError("expected a 3-variable system")
    for p in polys:
        if p.vars != variables:
            raise ValueError("mixed variable sets in system")
        if not p.lambda_free():
            raise LambdaSymbolicError(
                "lambda is still symbolic; specialize it first"
            )
    v0, v1, v2 = variables
    notes: list = []
    points = []
    complete = True

    chart0 = [p.specialize(v0, 1) for p in polys]
    pairs, ok = _solve_plane(chart0, v1, v2, notes)
    complete &= ok
    points.extend(ProjectivePoint([ONE, a, b]) for a, b in pairs)

    chart1 = [p.specialize(v0, 0).specialize(v1, 1) for p in polys]
    vals, ok = _solve_line(chart1, v2, notes)
    complete &= ok
    points.extend(ProjectivePoint([ZERO, ONE, b]) for b in vals)

    origin = [ZERO, ZERO, ONE]
    if all(p.evaluate(origin).is_zero() for p in polys):
        points.append(ProjectivePoint(origin))

    unique = sorted(set(points), key=ProjectivePoint.sort_key)
    return unique, complete, notes


def singular_locus(c: PlaneCurve) -> SingularLocus:
    """Scalar-resolvable common zeros of the three partial derivatives.

    For homogeneous equations in characteristic zero these automatically
    lie on the curve (Euler identity).
    """
    polys = [p for p in c.partials() if not p.is_zero()]
    if not polys:
        raise ValueError("all partials vanish identically")
    points, complete, notes = projective_common_zeros(polys)
    return SingularLocus(tuple(points), complete, tuple(notes))


# ---------------------------------------------------------------------------
# Local singularity classification

_AFF = ("s", "t")


def _affine_jets(c: PlaneCurve, p: ProjectivePoint):
    """Expand the equation in affine coordinates centered at p; returns
    jets[k] = homogeneous degree-k part as a MultiPoly in (s, t)."""
    coords = p.coords
    i = next(idx for idx, v in enumerate(coords) if v)
    others = [j for j in range(3) if j != i]
    s = MultiPoly.variable(_AFF, "s")
    t = MultiPoly.variable(_AFF, "t")
    images = [None, None, None]
    images[i] = MultiPoly.constant(_AFF, 1)
    images[others[0]] = s + MultiPoly.constant(_AFF, coords[others[0]])
    images[others[1]] = t + MultiPoly.constant(_AFF, coords[others[1]])
    f = c.equation.substitute(images)
    jets: dict = {}
    for exp, coeff in f.terms.items():
        d = sum(exp)
        jets.setdefault(d, {})[exp] = coeff
    return {d: MultiPoly._raw(_AFF, t) for d, t in jets.items()}


def _coeff_scalar(p: MultiPoly, exp) -> EisensteinScalar:
    c = p.terms.get(tuple(exp))
    return c.constant_value() if c is not None else ZERO


def _is_squarefree_binary(j: MultiPoly) -> bool:
    g = j
    for v in _AFF:
        if j.degree_in(v) > 0:
            g = mv_gcd(g, j.partial_derivative(v))
    return g.is_constant()


def classify_singularity(c: PlaneCurve, p: ProjectivePoint) -> SingularityRecord:
    """Decide node/cusp/tacnode/ordinary-m at p by jet inspection.

    The double-point ladder: a squarefree 2-jet is a node; with a
    repeated tangent, align the tangent with an axis and look at the
    weighted jets: a surviving s^3 term is a cusp, otherwise a nonzero
    square-completed s^4 term is a tacnode; anything deeper is reported
    unclassified (delta is then a lower bound).
    """
    jets = _affine_jets(c, p)
    if 0 in jets:
        raise NotOnCurveError("%s does not lie on the curve" % p)
    m = min(jets)
    if m == 1:
        raise NonsingularPointError("%s is a smooth point of the curve" % p)
    jm = jets[m]
    if _is_squarefree_binary(jm):
        if m == 2:
            return SingularityRecord(p, 2, KIND_NODE, 1)
        return SingularityRecord(p, m, KIND_ORDINARY, m * (m - 1) // 2)
    if m > 2:
        return SingularityRecord(
            p,
            m,
            KIND_UNCLASSIFIED,
            m * (m - 1) // 2,
            note="multiplicity-%d point with repeated tangent; delta is a "
            "lower bound" % m,
        )
    # double point with a repeated tangent; jm = gamma * L^2
    tangent = squarefree_part(jm)
    alpha = _coeff_scalar(tangent, (1, 0))
    beta = _coeff_scalar(tangent, (0, 1))
    s = MultiPoly.variable(_AFF, "s")
    t = MultiPoly.variable(_AFF, "t")
    if beta:
        # s -> s, t -> (t - alpha*s)/beta puts the tangent at {t = 0}...
        # more precisely sends L to t
        images = [s, (t - s.scale(alpha)).scale(beta.inverse())]
    else:
        images = [t.scale(alpha.inverse()), s]
    f = sum(
        (j for j in jets.values()), MultiPoly.zero(_AFF)
    ).substitute(images)
    by_exp = f.terms
    gamma = by_exp.get((0, 2))
    gamma = gamma.constant_value() if gamma else ZERO
    assert gamma, "tangent alignment failed"
    b3 = _coeff_scalar(f, (3, 0))
    if b3:
        return SingularityRecord(p, 2, KIND_CUSP, 1)
    c3 = _coeff_scalar(f, (2, 1))
    b4 = _coeff_scalar(f, (4, 0))
    # complete the square in t: the surviving pure s^4 coefficient
    residual = b4 - c3 * c3 / (EisensteinScalar(4) * gamma)
    if residual:
        return SingularityRecord(p, 2, KIND_TACNODE, 2)
    return SingularityRecord(
        p,
        2,
        KIND_UNCLASSIFIED,
        2,
        note="double point beyond a tacnode; delta is a lower bound",
    )


def classified_singularities(c: PlaneCurve, locus: SingularLocus = None):
    if locus is None:
        locus = singular_locus(c)
    return tuple(classify_singularity(c, p) for p in locus.points), locus


# ---------------------------------------------------------------------------
# Flexes


@dataclass(frozen=True)
class FlexSearch:
    points: tuple
    count_with_multiplicity: int
    complete: bool
    notes: tuple = ()


def hessian(c: PlaneCurve) -> MultiPoly:
    v = c.vars
    rows = [
        [c.equation.partial_derivative(a).partial_derivative(b) for b in v]
        for a in v
    ]
    return (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )


def flexes(c: PlaneCurve) -> FlexSearch:
    """Smooth inflection points and their Bezout-weighted count.

    The curve meets its Hessian in 3d(d-2) points counted with
    multiplicity; singular points absorb a known share each (6 per node,
    8 per cusp, 12 per tacnode, 3m(m-1) per ordinary m-fold point) and
    the rest are flexes.
    """
    h = hessian(c)
    if h.is_zero():
        raise DegenerateHessianError(
            "identically-zero Hessian: ruled or degenerate input"
        )
    d = c.degree
    notes: list = []
    records, locus = classified_singularities(c)
    complete = locus.complete
    notes.extend(locus.notes)
    total = 3 * d * (d - 2)
    for rec in records:
        if rec.kind in _HESSIAN_DROP:
            total -= _HESSIAN_DROP[rec.kind]
        elif rec.kind == KIND_ORDINARY:
            total -= 3 * rec.multiplicity * (rec.multiplicity - 1)
        else:
            notes.append(
                "count not certified: unclassified singularity at %s"
                % rec.point
            )
            complete = False
    if total < 0:
        notes.append("flex count went negative; input likely reducible")
        total = 0
        complete = False
    if d == 2:
        # a smooth conic has constant Hessian: no flexes, nothing to solve
        return FlexSearch((), 0, complete, tuple(notes))
    pts, ok, zero_notes = projective_common_zeros([c.equation, h])
    notes.extend(zero_notes)
    complete &= ok
    sing_points = {rec.point for rec in records}
    flex_points = tuple(p for p in pts if p not in sing_points)
    return FlexSearch(flex_points, total, complete, tuple(notes))


# ---------------------------------------------------------------------------
# Dual curves


def _lift(p: MultiPoly, combined, offset: int) -> MultiPoly:
    pad_left = (0,) * offset
    pad_right = (0,) * (len(combined) - offset - len(p.vars))
    return MultiPoly._raw(
        combined, {pad_left + e + pad_right: c for e, c in p.terms.items()}
    )


def _project(p: MultiPoly, combined, offset: int, target) -> MultiPoly:
    n = len(target)
    out = {}
    for exp, c in p.terms.items():
        if any(exp[i] for i in range(len(combined)) if not offset <= i < offset + n):
            raise EliminationError("projection dropped live variables")
        out[exp[offset : offset + n]] = c
    return MultiPoly._raw(tuple(target), out)


def _strip_uniform_power(p: MultiPoly, var: str) -> MultiPoly:
    i = p.vars.index(var)
    k = min(e[i] for e in p.terms)
    if k == 0:
        return p
    return MultiPoly._raw(
        p.vars, {e[:i] + (e[i] - k,) + e[i + 1 :]: c for e, c in p.terms.items()}
    )


def expected_class(d: int, records) -> int:
    """Plucker class d(d-1) minus the drop of each classified singularity
    (a tacnode counting as two nodes)."""
    m = d * (d - 1)
    for rec in records:
        if rec.kind in _CLASS_DROP:
            m -= _CLASS_DROP[rec.kind]
        elif rec.kind == KIND_ORDINARY:
            m -= rec.multiplicity * (rec.multiplicity - 1)
        else:
            raise ValueError("unclassified singularity: no class certificate")
    return m


def _conic_dual(c: PlaneCurve, out_vars) -> MultiPoly:
    def coeff(i, j):
        exp = [0, 0, 0]
        exp[i] += 1
        exp[j] += 1
        cf = c.equation.terms.get(tuple(exp))
        v = cf.constant_value() if cf else ZERO
        return v if i == j else v / 2

    m = [[coeff(i, j) for j in range(3)] for i in range(3)]
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    if not det:
        raise EliminationError("degenerate conic (rank < 3) has no dual conic")
    adj = [[ZERO] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != j]
            s = [k for k in range(3) if k != i]
            minor = m[r[0]][s[0]] * m[r[1]][s[1]] - m[r[0]][s[1]] * m[r[1]][s[0]]
            adj[i][j] = minor if (i + j) % 2 == 0 else -minor
    out = MultiPoly.zero(out_vars)
    for i in range(3):
        for j in range(3):
            if adj[i][j]:
                ui = MultiPoly.variable(out_vars, out_vars[i])
                uj = MultiPoly.variable(out_vars, out_vars[j])
                out = out + (ui * uj).scale(adj[i][j])
    return out


def dual_curve(c: PlaneCurve) -> PlaneCurve:
    """The curve of tangent lines, as an equation in dual coordinates.

    Degree 2 goes through the adjugate matrix.  Degrees 3 and 4 set up
    the incidence system {u.x = 0, u parallel to grad c} and eliminate
    the point coordinates with iterated resultants (the curve equation
    itself is implied by the Euler identity); spurious factors are cut
    by gcd-combining the surviving eliminants, dividing out the dual
    lines of singular points, and taking the squarefree part.  When the
    singularities are fully classified the output degree is checked
    against the predicted class.
    """
    d = c.degree
    if d < 2 or d > 4:
        raise UnsupportedDegreeError(
            "dual_curve supports degrees 2..4, got %d" % d
        )
    out_vars = U_VARS if c.vars != U_VARS else X_VARS
    records, locus = classified_singularities(c)
    try:
        m_expected = expected_class(d, records) if locus.complete else None
    except ValueError:
        m_expected = None
    if d == 2:
        return PlaneCurve(normalize_leading(_conic_dual(c, out_vars)))

    combined = c.vars + tuple(out_vars)
    grads = [_lift(g, combined, 0) for g in c.partials()]
    xs = [MultiPoly.variable(combined, v) for v in c.vars]
    us = [MultiPoly.variable(combined, v) for v in out_vars]
    incidence = xs[0] * us[0] + xs[1] * us[1] + xs[2] * us[2]
    minors = [
        us[1] * grads[2] - us[2] * grads[1],
        us[2] * grads[0] - us[0] * grads[2],
        us[0] * grads[1] - us[1] * grads[0],
    ]
    polys = [incidence] + [m for m in minors if not m.is_zero()]
    for var in (c.vars[2], c.vars[1]):
        with_v = [p for p in polys if p.degree_in(var) > 0]
        without = [p for p in polys if p.degree_in(var) == 0]
        if not with_v:
            continue
        if len(with_v) == 1:
            raise EliminationError(
                "cannot eliminate %s: only one equation involves it" % var
            )
        with_v.sort(key=lambda p: (p.degree_in(var), len(p.terms)))
        base = with_v[0]
        news = []
        for q in with_v[1:]:
            r = resultant(base, q, var)
            if not r.is_zero():
                news.append(r)
        polys = news + without
        if not polys:
            raise EliminationError("elimination collapsed to zero")
    candidates = []
    for p in polys:
        p = _strip_uniform_power(p, c.vars[0])
        if p.degree_in(c.vars[0]) != 0:
            raise EliminationError("eliminant is not bihomogeneous")
        candidates.append(_project(p, combined, 3, out_vars))
    g = candidates[0]
    for p in candidates[1:]:
        g = mv_gcd(g, p)
    for v in out_vars:
        g = _strip_uniform_power(g, v)
    for pt in locus.points:
        line = MultiPoly.zero(out_vars)
        for i in range(3):
            if pt.coords[i]:
                line = line + MultiPoly.variable(out_vars, out_vars[i]).scale(
                    pt.coords[i]
                )
        g, _ = divide_out(g, line)
    g = squarefree_part(g)
    if g.is_constant():
        raise EliminationError("spurious factors exhausted the resultant")
    if m_expected is not None and g.total_degree() != m_expected:
        raise EliminationError(
            "dual degree %d does not match the predicted class %d"
            % (g.total_degree(), m_expected)
        )
    return PlaneCurve(normalize_leading(g))


# ---------------------------------------------------------------------------
# Genus


def geometric_genus(c: PlaneCurve, sings) -> int:
    """(d-1)(d-2)/2 minus the delta invariants; a negative value means
    the completeness assumption failed (reducible input) and raises a
    UserWarning."""
    g = (c.degree - 1) * (c.degree - 2) // 2 - sum(r.delta for r in sings)
    if g < 0:
        warnings.warn(
            "negative geometric genus (%d): the curve is reducible" % g,
            UserWarning,
            stacklevel=2,
        )
    return g


# ---------------------------------------------------------------------------
# Whole-curve report


def analysis_report(c: PlaneCurve) -> dict:
    """Everything at once, JSON-ready: singularities, flexes, genus."""
    records, locus = classified_singularities(c)
    notes = list(locus.notes)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        genus = geometric_genus(c, records)
    genus_warning = bool(caught)
    if genus_warning:
        notes.append(str(caught[0].message))
    flex_data = None
    try:
        fx = flexes(c)
        flex_data = {
            "points": [p.as_list() for p in fx.points],
            "count_with_multiplicity": fx.count_with_multiplicity,
            "complete": fx.complete,
        }
        notes.extend(n for n in fx.notes if n not in notes)
    except DegenerateHessianError as e:
        notes.append(str(e))
    return {
        "equation": str(c.equation),
        "variables": list(c.vars),
        "degree": c.degree,
        "singularities": [r.as_dict() for r in records],
        "singular_locus_complete": locus.complete,
        "flexes": flex_data,
        "geometric_genus": genus,
        "genus_warning": genus_warning,
        "notes": notes,
    }
