"""The acceptance suites: one callable per acceptance criterion.

Each check returns a CheckResult whose `lines` are deterministic given
the seed (no timestamps, no timings), so reports can be compared
byte-for-byte across runs.  Failures carry human-readable descriptions
in `failures`; an empty list means the criterion holds exactly.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from random import Random

from .automorphisms import (
    AutParams,
    apply_automorphism,
    compose,
    hom_residual,
    nilpotency_check,
    probe_local_finiteness,
)
from .brackets import (
    CocycleKind,
    bracket,
    bracket_for,
    cocycle_residual,
    cocycle_value,
    jacobi_residual,
    shift_iso_residual,
)
from .derivations import (
    Derivation,
    d0_matchable_by_inner,
    h1_dimension,
    leibniz_residual,
    recurrence_check,
    solved_constraints,
)
from .elements import Algebra, Element, Window
from .randgen import (
    random_aut_params,
    random_derivation,
    random_element,
    random_scalar,
)
from .textio import parse_element, read_structure_csv, render_element, write_structure_csv, write_structure_json

DEFAULT_WINDOW = Window(-6, 6, 4)
DEFAULT_INTERIOR = Window(-3, 3, 2)
LARGE_WINDOW = Window(-8, 8, 5)
LARGE_INTERIOR = Window(-4, 4, 3)
WINDOW_PAIRS = ((DEFAULT_WINDOW, DEFAULT_INTERIOR), (LARGE_WINDOW, LARGE_INTERIOR))

COHOMOLOGY_DEGREES = range(-3, 4)


def expected_h1(degree: int) -> int:
    return 1 if degree == 0 else 0


@dataclass
class CheckResult:
    criterion: int
    name: str
    passed: bool
    lines: list
    failures: list


def _result(criterion, name, lines, failures) -> CheckResult:
    return CheckResult(criterion, name, not failures, lines, failures)


def check_lie_axioms(seed: int = 0, samples: int = 500) -> CheckResult:
    """Criterion 1: antisymmetry and Jacobi, all variants, random triples."""
    rng = Random(seed)
    lines = [f"seed={seed} samples={samples}"]
    failures = []
    for algebra in Algebra:
        br = bracket_for(algebra)
        central = algebra.allows_central
        for n in range(samples):
            x = random_element(rng, allow_central=central)
            y = random_element(rng, allow_central=central)
            z = random_element(rng, allow_central=central)
            if not (br(x, y) + br(y, x)).is_zero():
                failures.append(f"{algebra.value} sample {n}: antisymmetry violated")
            if not jacobi_residual(x, y, z, br).is_zero():
                failures.append(f"{algebra.value} sample {n}: jacobi violated")
        lines.append(
            f"{algebra.value}: antisymmetry and jacobi residuals zero on "
            f"{samples} sampled triples"
        )
    return _result(1, "lie-axioms", lines, failures)


def check_shift_iso(seed: int = 0, samples: int = 200) -> CheckResult:
    """Criterion 2: the shift embedding into the s=0 family is bracket-exact."""
    rng = Random(seed)
    failures = []
    for n in range(samples):
        x = random_element(rng)
        y = random_element(rng)
        if not shift_iso_residual(x, y).is_zero():
            failures.append(f"sample {n}: shift residual nonzero")
    lines = [f"seed={seed}", f"shift residual zero on {samples} sampled pairs"]
    return _result(2, "shift-iso", lines, failures)


def check_cocycles() -> CheckResult:
    """Criterion 3: both cocycles, exhaustive basis triples, alpha in
    [-4,4], i <= 2: antisymmetry and the cocycle identity."""
    basis = [Element.basis(a, i) for a in range(-4, 5) for i in range(3)]
    failures = []
    for kind in CocycleKind:
        for x in basis:
            for y in basis:
                if cocycle_value(kind, x, y) + cocycle_value(kind, y, x):
                    failures.append(f"{kind.value}: antisymmetry violated")
        for x in basis:
            for y in basis:
                for z in basis:
                    if cocycle_residual(kind, x, y, z):
                        failures.append(f"{kind.value}: cocycle identity violated")
    n = len(basis)
    lines = [
        f"exhaustive over {n} basis vectors (alpha in [-4,4], i <= 2)",
        f"both cocycles: antisymmetry on {n * n} pairs, identity on {n**3} triples",
    ]
    return _result(3, "cocycles", lines, failures)


def check_derivations(seed: int = 0, samples: int = 200) -> CheckResult:
    """Criterion 4: Leibniz for d0 and random combination forms; the
    grading derivation is not matchable by any inner derivation."""
    rng = Random(seed)
    failures = []
    d0 = Derivation.d0()
    for n in range(samples):
        x = random_element(rng)
        y = random_element(rng)
        if not leibniz_residual(d0, x, y).is_zero():
            failures.append(f"sample {n}: d0 leibniz residual nonzero")
        d = random_derivation(rng)
        if not leibniz_residual(d, x, y).is_zero():
            failures.append(f"sample {n}: combination form leibniz residual nonzero")
    if d0_matchable_by_inner(DEFAULT_WINDOW, DEFAULT_INTERIOR):
        failures.append("d0 matched by an inner derivation at window scale")
    lines = [
        f"seed={seed}",
        f"leibniz residual zero for d0 and {samples} random forms",
        f"'ad(u) = d0 on {DEFAULT_INTERIOR}, u in {DEFAULT_WINDOW}' is infeasible",
    ]
    return _result(4, "derivations", lines, failures)


def check_h1() -> tuple[CheckResult, CheckResult]:
    """Criteria 5 and 6: H^1 dimensions over degrees -3..3 at both window
    scales, and the leading-row recurrences on every solver solution."""
    lines5, failures5 = [], []
    lines6, failures6 = [], []
    for window, interior in WINDOW_PAIRS:
        solution_count = 0
        for degree in COHOMOLOGY_DEGREES:
            value = h1_dimension(degree, window, interior)
            expected = expected_h1(degree)
            lines5.append(
                f"degree {degree} window {window} interior {interior}: "
                f"h1={value} expected={expected}"
            )
            if value != expected:
                failures5.append(
                    f"degree {degree} window {window}: h1={value}, expected {expected}"
                )
            for n, solution in enumerate(solved_constraints(degree, window)):
                solution_count += 1
                for violation in recurrence_check(solution.restrict(interior)):
                    failures6.append(
                        f"degree {degree} window {window} solution {n}: {violation}"
                    )
        lines6.append(
            f"window {window}: {solution_count} solver solutions pass the "
            f"leading-row recurrences on {interior}"
        )
    return (
        _result(5, "h1-dimensions", lines5, failures5),
        _result(6, "recurrences", lines6, failures6),
    )


def check_automorphisms(seed: int = 0, samples: int = 100) -> CheckResult:
    """Criterion 7: hom residuals, composition law vs pointwise oracle,
    involution, subgroup laws, normality of the sign-free part."""
    rng = Random(seed)
    failures = []
    for n in range(samples):
        t = random_aut_params(rng)
        x = random_element(rng, alpha_lo=-5, alpha_hi=5, i_max=3)
        y = random_element(rng, alpha_lo=-5, alpha_hi=5, i_max=3)
        if not hom_residual(t, x, y).is_zero():
            failures.append(f"sample {n}: hom residual nonzero for {t}")
    basis = [Element.basis(a, i) for a in range(-5, 6) for i in range(4)]
    for n in range(samples):
        outer = random_aut_params(rng)
        inner = random_aut_params(rng)
        composed = compose(outer, inner)
        for v in basis:
            if apply_automorphism(composed, v) != apply_automorphism(
                outer, apply_automorphism(inner, v)
            ):
                failures.append(
                    f"sample {n}: composition law disagrees with pointwise "
                    f"composition at {render_element(v)}"
                )
                break
    rho = AutParams(1, 1, -1)
    if compose(rho, rho) != AutParams.identity():
        failures.append("rho^2 is not the identity")
    for n in range(20):
        m1, m2 = random_scalar(rng), random_scalar(rng)
        n1, n2 = random_scalar(rng), random_scalar(rng)
        if compose(AutParams(m2, 1, 1), AutParams(m1, 1, 1)) != AutParams(m1 * m2, 1, 1):
            failures.append("mu-scaling maps do not multiply componentwise")
        if compose(AutParams(1, n2, 1), AutParams(1, n1, 1)) != AutParams(1, n1 * n2, 1):
            failures.append("nu-scaling maps do not multiply componentwise")
        t = AutParams(m1, n1, 1)
        conj = compose(compose(rho, t), rho)
        if conj.xi != 1:
            failures.append("conjugation by rho leaves the sign-free subgroup")
        if conj != AutParams(1 / m1, n1 / m1**2, 1):
            failures.append("conjugation by rho has the wrong closed form")
    lines = [
        f"seed={seed}",
        f"hom residual zero for {samples} random parameter triples",
        f"composition law matches pointwise composition on {len(basis)} basis "
        f"vectors for {samples} random parameter pairs",
        "rho^2 = id; scaling subgroups multiply componentwise; conjugation "
        "by rho preserves the sign-free subgroup",
    ]
    return _result(7, "automorphisms", lines, failures)


def check_restrictions(seed: int = 0, samples: int = 50) -> CheckResult:
    """Criterion 8: the closed form restricted to L[a,0] and L[0,i]."""
    rng = Random(seed)
    failures = []
    for n in range(samples):
        t = random_aut_params(rng)
        for a in range(-6, 7):
            expected = Element({(t.xi * a, 0): t.xi * t.mu**a})
            if apply_automorphism(t, Element.basis(a, 0)) != expected:
                failures.append(f"sample {n}: wrong image of L[{a},0]")
        for i in range(5):
            expected = Element({((t.xi - 1) * i, i): t.xi * t.nu**i})
            if apply_automorphism(t, Element.basis(0, i)) != expected:
                failures.append(f"sample {n}: wrong image of L[0,{i}]")
    lines = [
        f"seed={seed}",
        f"{samples} random parameter triples: images of L[a,0] (a in [-6,6]) "
        "and L[0,i] (i <= 4) match the two restriction formulas",
    ]
    return _result(8, "restrictions", lines, failures)


def check_probe() -> CheckResult:
    """Criterion 9: the Krylov probe separates L[0,0] from everything else."""
    failures = []
    finite = probe_local_finiteness(Element.basis(0, 0), Element.basis(3, 2), 10)
    if not (finite.stabilized and finite.final_dim == 1):
        failures.append(f"probe under L[0,0] gave {finite.verdict()}, wanted Stabilized(1)")
    growing = probe_local_finiteness(Element.basis(1, 0), Element.basis(2, 0), 6)
    if growing.stabilized or growing.dims != tuple(range(1, 8)):
        failures.append(
            f"probe under L[1,0] gave {growing.verdict()} dims={growing.dims}, "
            "wanted strict growth 1..7"
        )
    count = 0
    for a in range(-4, 5):
        for i in range(4):
            if a + i == 0:
                continue
            count += 1
            report = nilpotency_check(Element.basis(0, 0), Element.basis(a, i), 5)
            if report.zero_at is not None:
                failures.append(f"ad(L[0,0])^k killed L[{a},{i}] at k={report.zero_at}")
    lines = [
        f"probe(L[0,0], L[3,2], 10) = {finite.verdict()} dims={list(finite.dims)}",
        f"probe(L[1,0], L[2,0], 6) = {growing.verdict()} dims={list(growing.dims)}",
        f"ad(L[0,0]) nonzero through depth 5 on {count} basis vectors with a+i != 0",
    ]
    return _result(9, "probe", lines, failures)


def check_bracket_identities() -> CheckResult:
    """Criterion 10: four fixed families of bracket identities."""
    failures = []
    checked = 0
    for b in range(-5, 6):
        for j in range(5):
            checked += 2
            lhs = bracket(Element.basis(b - 1, j), Element.basis(1, 0))
            if lhs != Element({(b, j): b - 2}):
                failures.append(f"[L[{b - 1},{j}], L[1,0]] != ({b}-2) L[{b},{j}]")
            lhs = bracket(Element.basis(b, j), Element.basis(-1, 0))
            if lhs != Element({(b - 1, j): b + 2 * j + 1}):
                failures.append(f"[L[{b},{j}], L[-1,0]] wrong")
    for i in range(5):
        checked += 2
        if bracket(Element.basis(0, i), Element.basis(0, 1)) != Element(
            {(0, i + 1): i - 1}
        ):
            failures.append(f"[L[0,{i}], L[0,1]] wrong")
        nested = bracket(
            Element.basis(-1, 0), bracket(Element.basis(1, 0), Element.basis(0, i))
        )
        if nested != Element({(0, i): -2 * (i + 1)}):
            failures.append(f"[L[-1,0], [L[1,0], L[0,{i}]]] wrong")
    lines = [
        f"{checked} fixed identities hold exactly over b in [-5,5], i,j in [0,4]",
    ]
    return _result(10, "bracket-identities", lines, failures)


EXPORT_CASES = (
    (Algebra.BLOCK, Window(-2, 2, 1)),
    (Algebra.FAMILY0, Window(-2, 2, 1)),
    (Algebra.FAMILY1, Window(-2, 2, 1)),
    (Algebra.EXTENDED, Window(-2, 2, 0)),
)


def check_roundtrip_export(seed: int = 0, samples: int = 500) -> CheckResult:
    """Criterion 11 (in-process half): parse/render round-trip and
    JSON/CSV export agreement.  Byte-reproducibility of `verify all` is
    exercised by the harness that runs the CLI twice."""
    rng = Random(seed)
    failures = []
    for n in range(samples):
        x = random_element(rng, allow_central=True)
        back = parse_element(render_element(x), Algebra.EXTENDED)
        if back != x:
            failures.append(f"sample {n}: round-trip changed {render_element(x)!r}")
    for algebra, window in EXPORT_CASES:
        jbuf, cbuf = io.StringIO(), io.StringIO()
        write_structure_json(algebra, window, jbuf)
        write_structure_csv(algebra, window, cbuf)
        jrecords = json.loads(jbuf.getvalue())["brackets"]
        crecords = read_structure_csv(io.StringIO(cbuf.getvalue()))
        if jrecords != crecords:
            failures.append(f"{algebra.value} {window}: JSON and CSV records differ")
    lines = [
        f"seed={seed}",
        f"parse/render round-trip exact on {samples} random elements",
        f"JSON and CSV exports agree record-for-record on {len(EXPORT_CASES)} "
        "variant/window cases",
    ]
    return _result(11, "roundtrip-export", lines, failures)


def run_all(seed: int = 0) -> list[CheckResult]:
    """Every acceptance suite, in criterion order."""
    results = [
        check_lie_axioms(seed),
        check_shift_iso(seed),
        check_cocycles(),
        check_derivations(seed),
    ]
    results.extend(check_h1())
    results.extend(
        [
            check_automorphisms(seed),
            check_restrictions(seed),
            check_probe(),
            check_bracket_identities(),
            check_roundtrip_export(seed),
        ]
    )
    return results


def format_report(results) -> list[str]:
    """Deterministic stdout lines for a list of check results."""
    out = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        out.append(f"{status} {r.criterion:2d} {r.name}")
        out.extend(f"     {line}" for line in r.lines)
    good = sum(1 for r in results if r.passed)
    out.append(f"{good}/{len(results)} checks passed")
    return out
