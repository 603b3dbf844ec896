"""Derivations of the main algebra and finite-window first cohomology.

A derivation form is a combination of an inner part ad(u) = [u, .] and a
rational multiple of d0, the grading derivation L[b,j] -> b L[b,j].
d0 is the one outer direction: at every window scale the solver below
finds exactly one solution class beyond the inner ones in degree 0 and
none in any other degree.

The windowed computation works with degree-homogeneous maps: a map of
degree `a` sends L[b,j] to a combination of L[a+b, k], 0 <= k <= i_max.
`build_constraints` turns the Leibniz rule

    D([x, y]) = [D x, y] + [x, D y]

into exact linear constraints on the image coefficients for every basis
pair whose products stay inside the window, and `h1_dimension` compares
the solution space against the inner maps on a safety interior, where
window-edge truncation artifacts cannot reach.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .brackets import bracket
from .elements import Element, Window
from .errors import WindowTooSmallError

_ZERO = Fraction(0)


def d0_apply(x: Element) -> Element:
    """The grading derivation: scales each L[b,j] by b."""
    return Element({(b, j): b * c for (b, j), c in x.terms.items()})


@dataclass(frozen=True)
class Derivation:
    """lambda * d0 + ad(u), stored collapsed.

    ad is linear in u and ad(0) = 0, so a formal sum of inner atoms
    always collapses to a single one; the d0 weight is kept separately.
    """

    inner: Element
    d0_weight: Fraction

    @staticmethod
    def of_inner(u: Element) -> "Derivation":
        return Derivation(u, _ZERO)

    @staticmethod
    def d0(weight=1) -> "Derivation":
        return Derivation(Element.zero(), Fraction(weight))

    def __call__(self, x: Element) -> Element:
        out = bracket(self.inner, x)
        if self.d0_weight:
            out = out + d0_apply(x).scale(self.d0_weight)
        return out

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.inner + other.inner, self.d0_weight + other.d0_weight)

    def scale(self, scalar) -> "Derivation":
        scalar = Fraction(scalar)
        return Derivation(self.inner.scale(scalar), self.d0_weight * scalar)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    __rmul__ = __mul__


def leibniz_residual(d: Derivation, x: Element, y: Element) -> Element:
    """d([x,y]) - [d(x), y] - [x, d(y)]; zero for a derivation."""
    return d(bracket(x, y)) - bracket(d(x), y) - bracket(x, d(y))


@dataclass(frozen=True, eq=False)
class WindowedMap:
    """A degree-homogeneous linear map truncated to a window.

    `images[(b, j)]` is the image of L[b,j], supported on the single
    column degree+b inside the window, rows 0..i_max.  Sources whose
    image column falls outside the window are mapped to zero and do not
    appear.
    """

    degree: int
    window: Window
    images: dict

    def __post_init__(self):
        for (b, j), img in self.images.items():
            if not self.window.contains((b, j)):
                raise ValueError(f"source {(b, j)} outside window {self.window}")
            for (g, k) in img.terms:
                if g != self.degree + b or not self.window.contains((g, k)):
                    raise ValueError(
                        f"image term {(g, k)} of source {(b, j)} breaks "
                        f"degree {self.degree} homogeneity in window {self.window}"
                    )
            if img.central:
                raise ValueError("windowed maps carry no central part")

    @classmethod
    def from_vector(cls, degree: int, window: Window, vec) -> "WindowedMap":
        images = {}
        for (b, j, k), coeff in vec.items():
            if coeff:
                images.setdefault((b, j), {})[(degree + b, k)] = coeff
        return cls(degree, window, {s: Element(t) for s, t in images.items()})

    def as_vector(self) -> dict:
        """Coefficients keyed (b, j, k): image of L[b,j] at row k."""
        return {
            (b, j, k): coeff
            for (b, j), img in self.images.items()
            for (_, k), coeff in img.terms.items()
        }

    def apply(self, b: int, j: int) -> Element:
        return self.images.get((b, j), Element.zero())

    def is_zero(self) -> bool:
        return all(img.is_zero() for img in self.images.values())

    def restrict(self, sub: Window) -> "WindowedMap":
        """Keep only sources and image terms inside `sub`."""
        images = {}
        for (b, j), img in self.images.items():
            if not sub.contains((b, j)):
                continue
            kept = {key: c for key, c in img.terms.items() if sub.contains(key)}
            if kept:
                images[(b, j)] = Element(kept)
        return WindowedMap(self.degree, sub, images)

    def top_offset(self):
        """Largest k - j over nonzero coefficients; None for the zero map."""
        offsets = [k - j for (_, j, k) in self.as_vector()]
        return max(offsets) if offsets else None


def windowed_inner(degree: int, p: int, window: Window) -> WindowedMap:
    """ad(L[degree, p]) truncated to the window."""
    images = {}
    for b in window.alphas():
        if not window.contains_alpha(degree + b):
            continue
        for j in range(window.i_max + 1):
            if p + j > window.i_max:
                continue
            coeff = (degree - 1) * (j + 1) - (b - 1) * (p + 1)
            if coeff:
                images[(b, j)] = Element({(degree + b, p + j): coeff})
    return WindowedMap(degree, window, images)


def windowed_d0(window: Window) -> WindowedMap:
    """The grading derivation truncated to the window (degree 0)."""
    images = {}
    for b in window.alphas():
        if b == 0:
            continue
        for j in range(window.i_max + 1):
            images[(b, j)] = Element({(b, j): b})
    return WindowedMap(0, window, images)


@dataclass(frozen=True, eq=False)
class ConstraintSystem:
    """Sparse exact linear system for degree-homogeneous windowed maps.

    Unknown (b, j, k) is the coefficient of L[degree+b, k] in the image
    of L[b,j].  Each row states one coefficient of the Leibniz rule for
    one source pair; `provenance[n]` records ((b,j), (g,l), output row)
    for `rows[n]`.  Rows are emitted in lexicographic provenance order.
    """

    degree: int
    window: Window
    unknowns: list
    rows: list
    provenance: list


def build_constraints(degree: int, window: Window) -> ConstraintSystem:
    """Leibniz constraints for all pairs whose products stay in-window.

    A pair (b,j), (g,l) is used when b+g, degree+b, degree+g and
    degree+b+g all lie in the window alpha-range and j+l <= i_max; both
    sides of the rule are truncated to rows <= i_max.  Mirror-image
    pairs give the same row negated, so each unordered pair is emitted
    once; the diagonal is identically zero and skipped.
    """
    imax = window.i_max
    sources = [
        (b, j)
        for b in window.alphas()
        if window.contains_alpha(degree + b)
        for j in range(imax + 1)
    ]
    unknowns = [(b, j, k) for (b, j) in sources for k in range(imax + 1)]
    rows = []
    provenance = []
    for n, (b, j) in enumerate(sources):
        for (g, l) in sources[n + 1 :]:
            if j + l > imax:
                continue
            if not (
                window.contains_alpha(b + g)
                and window.contains_alpha(degree + b + g)
            ):
                continue
            lhs = (b - 1) * (l + 1) - (g - 1) * (j + 1)
            for r in range(imax + 1):
                row = {}

                def put(key, value):
                    new = row.get(key, 0) + value
                    if new:
                        row[key] = new
                    else:
                        row.pop(key, None)

                if lhs:
                    put((b + g, j + l, r), lhs)
                if r - l >= 0:
                    put((b, j, r - l), -((degree + b - 1) * (l + 1) - (g - 1) * (r - l + 1)))
                if r - j >= 0:
                    put((g, l, r - j), -((b - 1) * (r - j + 1) - (degree + g - 1) * (j + 1)))
                if row:
                    rows.append(row)
                    provenance.append(((b, j), (g, l), r))
    return ConstraintSystem(degree, window, unknowns, rows, provenance)


def solve_nullspace(system: ConstraintSystem) -> list[WindowedMap]:
    """Exact basis of the solution space, as windowed maps.

    Fraction-free elimination with first-nonzero pivoting; deterministic
    for a given system.  The returned maps are linearly independent
    (one per free unknown; verified by rank).
    """
    vectors = linalg.nullspace(system.rows, system.unknowns)
    assert linalg.rank(vectors) == len(vectors)
    return [
        WindowedMap.from_vector(system.degree, system.window, vec) for vec in vectors
    ]


@lru_cache(maxsize=None)
def solved_constraints(degree: int, window: Window) -> tuple:
    """Memoized build + solve; pure function of (degree, window)."""
    return tuple(solve_nullspace(build_constraints(degree, window)))


def check_margins(window: Window, interior: Window) -> None:
    """Interior must sit in the window with margin >= 2 in alpha, >= 1 in i."""
    if (
        interior.alpha_min - window.alpha_min < 2
        or window.alpha_max - interior.alpha_max < 2
        or window.i_max - interior.i_max < 1
    ):
        raise WindowTooSmallError(
            f"interior {interior} needs margin >= 2 in alpha and >= 1 in i "
            f"inside window {window}"
        )


def inner_restrictions(degree: int, interior: Window) -> list[dict]:
    """Vectors of ad(L[degree,p]), p <= interior.i_max, cut to the interior."""
    vectors = [
        windowed_inner(degree, p, interior).as_vector()
        for p in range(interior.i_max + 1)
    ]
    return [v for v in vectors if v]


def h1_dimension(degree: int, window: Window, interior: Window) -> int:
    """dim(S + I) - dim(I) on the interior: solution classes of the
    windowed Leibniz system not explained by inner maps.  The class of
    the grading derivation survives, so the expected value is 1 for
    degree 0 and 0 otherwise."""
    check_margins(window, interior)
    solutions = solved_constraints(degree, window)
    restricted = [m.restrict(interior).as_vector() for m in solutions]
    restricted = [v for v in restricted if v]
    inner = inner_restrictions(degree, interior)
    return linalg.rank(restricted + inner) - linalg.rank(inner)


def matchable_by_inner(target: WindowedMap, window: Window) -> bool:
    """Is there u supported on `window` with [u, x] = target(x) exactly,
    for every source x of the target?  Exact feasibility, no truncation
    of the outputs of ad(u)."""
    equations = []
    for (b, j) in target.window.indices():
        wanted = target.apply(b, j)
        for a in window.alphas():
            for p in range(window.i_max + 1):
                coeff = (a - 1) * (j + 1) - (b - 1) * (p + 1)
                rhs = wanted.coefficient(a + b, p + j)
                if coeff or rhs:
                    equations.append(({(a, p): coeff}, rhs))
        # Output positions ad(u) cannot reach must already be zero in the
        # target; with target columns inside the window they always are.
        for (g, k) in wanted.terms:
            if not (window.contains_alpha(g - b) and 0 <= k - j <= window.i_max):
                equations.append(({}, wanted.coefficient(g, k)))
    return linalg.feasible(equations)


def d0_matchable_by_inner(window: Window, interior: Window) -> bool:
    """Feasibility of 'ad(u) = d0 on the interior, u in the window'.

    False at every usable scale: the grading derivation is not inner.
    """
    check_margins(window, interior)
    return matchable_by_inner(windowed_d0(interior), window)


def _recurrence_coefficient(degree: int, offset: int, b: int, j: int) -> int:
    return (degree - 1) * (j + 1) - (b - 1) * (offset + 1)


def recurrence_check(solution: WindowedMap) -> list[str]:
    """Cross-check a solution against the hand-derived shape of a
    degree-homogeneous derivation, read off the leading row.

    With i0 the top nonvanishing offset (max k - j) and e(b,j) the
    coefficient at row i0+j of the image of L[b,j], the shape is:

      degree+i0 != 0:        (degree+i0) e(b,j)
                               = ((degree-1)(j+1) - (b-1)(i0+1)) e(0,0)
      degree+i0 = 0, i0 != 0: e(0,0) = 0,  e(-1,0) + e(1,0) = 0,
                              (b-i0-2) e(b-1,j)
                                + ((b-2)(i0+1) + i0(j+1)) e(1,0)
                                = (b-2) e(b,j),
                              (b+i0+2j+1) e(b,j)
                                + ((b-1)(i0+1) + (i0+2)(j+1)) e(-1,0)
                                = (b+2j+1) e(b-1,j),
                              e(b,j) = (b+j) e(1,0)
      degree = i0 = 0:        e(b,j) = b e(1,0) + j e(0,1)

    An equation is evaluated only when every referenced coefficient lies
    inside the solution's own window (sources, rows and image columns);
    references that escape the window are skipped, not zeroed.  Returns
    a list of violation descriptions, empty when the shape holds.
    """
    window = solution.window
    degree = solution.degree
    vec = solution.as_vector()
    i0 = solution.top_offset()
    if i0 is None:
        return []

    def e(b, j):
        """Leading-row coefficient, or None when it escapes the window."""
        if not window.contains((b, j)):
            return None
        if not 0 <= i0 + j <= window.i_max:
            return None
        if not window.contains_alpha(degree + b):
            return None
        return vec.get((b, j, i0 + j), _ZERO)

    violations = []

    def require(ok, label, b, j):
        if not ok:
            violations.append(
                f"{label} fails at (b,j)=({b},{j}) with degree={degree}, i0={i0}"
            )

    sources = window.indices()
    if degree + i0 != 0:
        e00 = e(0, 0)
        for (b, j) in sources:
            ebj = e(b, j)
            if ebj is None or e00 is None:
                continue
            require(
                (degree + i0) * ebj == _recurrence_coefficient(degree, i0, b, j) * e00,
                "leading-row proportionality",
                b,
                j,
            )
    elif i0 != 0:
        e00 = e(0, 0)
        if e00 is not None:
            require(e00 == 0, "vanishing of e(0,0)", 0, 0)
        e_plus, e_minus = e(1, 0), e(-1, 0)
        if e_plus is not None and e_minus is not None:
            require(e_minus + e_plus == 0, "e(-1,0) + e(1,0) = 0", 1, 0)
        for (b, j) in sources:
            ebj, eprev = e(b, j), e(b - 1, j)
            if ebj is not None and eprev is not None and e_plus is not None:
                require(
                    (b - i0 - 2) * eprev + ((b - 2) * (i0 + 1) + i0 * (j + 1)) * e_plus
                    == (b - 2) * ebj,
                    "step-up recurrence",
                    b,
                    j,
                )
            if ebj is not None and eprev is not None and e_minus is not None:
                require(
                    (b + i0 + 2 * j + 1) * ebj
                    + ((b - 1) * (i0 + 1) + (i0 + 2) * (j + 1)) * e_minus
                    == (b + 2 * j + 1) * eprev,
                    "step-down recurrence",
                    b,
                    j,
                )
            if ebj is not None and e_plus is not None:
                require(ebj == (b + j) * e_plus, "linear leading row", b, j)
    else:
        e10, e01 = e(1, 0), e(0, 1)
        for (b, j) in sources:
            ebj = e(b, j)
            if ebj is None or e10 is None or e01 is None:
                continue
            require(
                ebj == b * e10 + j * e01,
                "degree-zero leading row",
                b,
                j,
            )
    return violations
