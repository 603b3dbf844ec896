"""Command-line interface.

Exit codes: 0 on success, 1 when a verified property fails, 2 on
malformed input (element expressions, windows, parameters).
"""

from __future__ import annotations

import sys
from fractions import Fraction

import click

from . import verify as suites
from .automorphisms import (
    AutParams,
    apply_automorphism,
    compose,
    probe_local_finiteness,
)
from .derivations import Derivation, h1_dimension
from .elements import Algebra, Window
from .errors import ParseError, WindowTooSmallError
from .textio import export_structure, parse_element, parse_window, render_element

ALGEBRA_CHOICE = click.Choice([a.value for a in Algebra])


def _element(text, algebra):
    try:
        return parse_element(text, algebra)
    except ParseError as exc:
        raise click.UsageError(f"bad element {text!r}: {exc}")


def _window(text):
    try:
        return parse_window(text)
    except ValueError as exc:
        raise click.UsageError(f"bad window {text!r}: {exc}")


def _fraction(text, label):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"bad {label} {text!r}: {exc}")


def _params(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise click.UsageError(f"bad parameters {text!r}: want 'mu,nu,xi'")
    try:
        return AutParams(Fraction(parts[0]), Fraction(parts[1]), int(parts[2]))
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"bad parameters {text!r}: {exc}")


def _emit(results):
    for line in suites.format_report(results):
        click.echo(line)
    failed = [r for r in results if not r.passed]
    if failed:
        for r in failed:
            for f in r.failures[:20]:
                click.echo(f"{r.name}: {f}", err=True)
            extra = len(r.failures) - 20
            if extra > 0:
                click.echo(f"{r.name}: ... and {extra} more", err=True)
        raise SystemExit(1)


@click.group()
def main():
    """Exact computations in a family of Block-type Lie algebras."""


@main.command()
@click.option("--algebra", type=ALGEBRA_CHOICE, default="block", show_default=True)
@click.argument("left")
@click.argument("right")
def bracket(algebra, left, right):
    """Print the bracket [LEFT, RIGHT] in the chosen variant."""
    from .brackets import bracket_for

    alg = Algebra(algebra)
    x = _element(left, alg)
    y = _element(right, alg)
    click.echo(render_element(bracket_for(alg)(x, y)))


@main.group()
def verify():
    """Run the property suites."""


@verify.command()
@click.option("--samples", type=int, default=500, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def jacobi(samples, seed):
    """Antisymmetry and the Jacobi identity in every variant."""
    _emit([suites.check_lie_axioms(seed, samples)])


@verify.command()
def cocycle():
    """Antisymmetry and the cocycle identity for both 2-cocycles."""
    _emit([suites.check_cocycles()])


@verify.command("shift-iso")
@click.option("--samples", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def shift_iso(samples, seed):
    """The degree-shift embedding into the s=0 family respects brackets."""
    _emit([suites.check_shift_iso(seed, samples)])


@verify.command("all")
@click.option("--seed", type=int, default=0, show_default=True)
def verify_all(seed):
    """Every acceptance suite, in order."""
    _emit(suites.run_all(seed))


@main.group()
def derive():
    """Derivations of the main algebra."""


@derive.command()
@click.argument("expr")
def d0(expr):
    """Apply the grading derivation d0 to EXPR."""
    x = _element(expr, Algebra.BLOCK)
    click.echo(render_element(Derivation.d0()(x)))


@derive.command()
@click.option("--samples", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def check(samples, seed):
    """Leibniz checks plus the 'd0 is not inner' certificate."""
    _emit([suites.check_derivations(seed, samples)])


@main.group()
def cohomology():
    """Degree-d derivation cohomology at finite window scale."""


@cohomology.command()
@click.option("--degree", type=int, default=0, show_default=True)
@click.option("--window", default="-6:6:4", show_default=True)
@click.option("--interior", default="-3:3:2", show_default=True)
def h1(degree, window, interior):
    """Print dim H^1 in the given degree, computed on WINDOW and read
    off on INTERIOR."""
    try:
        value = h1_dimension(degree, _window(window), _window(interior))
    except WindowTooSmallError as exc:
        raise click.UsageError(str(exc))
    click.echo(str(value))


@cohomology.command()
@click.option("--window", default="-6:6:4", show_default=True)
@click.option("--interior", default="-3:3:2", show_default=True)
def suite(window, interior):
    """dim H^1 across degrees -3..3; nonzero only in degree 0."""
    win, inn = _window(window), _window(interior)
    bad = 0
    for degree in suites.COHOMOLOGY_DEGREES:
        try:
            value = h1_dimension(degree, win, inn)
        except WindowTooSmallError as exc:
            raise click.UsageError(str(exc))
        expected = suites.expected_h1(degree)
        click.echo(f"degree {degree}: h1={value} expected={expected}")
        if value != expected:
            bad += 1
    if bad:
        click.echo(f"{bad} degrees disagree", err=True)
        raise SystemExit(1)


@main.group()
def aut():
    """The automorphism group of the main algebra."""


@aut.command()
@click.option("--mu", required=True)
@click.option("--nu", required=True)
@click.option("--xi", type=int, required=True)
@click.argument("expr")
def apply(mu, nu, xi, expr):
    """Apply the automorphism with parameters (mu, nu, xi) to EXPR."""
    try:
        t = AutParams(_fraction(mu, "mu"), _fraction(nu, "nu"), xi)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    x = _element(expr, Algebra.BLOCK)
    click.echo(render_element(apply_automorphism(t, x)))


@aut.command("compose")
@click.option("--outer", required=True, help="'mu,nu,xi' applied second")
@click.option("--inner", required=True, help="'mu,nu,xi' applied first")
def aut_compose(outer, inner):
    """Print the parameters of OUTER after INNER as 'mu,nu,xi'."""
    click.echo(str(compose(_params(outer), _params(inner))))


@aut.command("verify")
@click.option("--samples", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def aut_verify(samples, seed):
    """Homomorphism, composition, and restriction-formula suites."""
    _emit(
        [
            suites.check_automorphisms(seed, samples),
            suites.check_restrictions(seed, max(1, samples // 2)),
        ]
    )


@main.command()
@click.option("--element", "element_text", required=True)
@click.option("--vector", "vector_text", required=True)
@click.option("--depth", type=int, default=10, show_default=True)
def probe(element_text, vector_text, depth):
    """Grow the Krylov span of VECTOR under ad(ELEMENT) up to DEPTH."""
    x = _element(element_text, Algebra.BLOCK)
    v = _element(vector_text, Algebra.BLOCK)
    if depth < 1:
        raise click.UsageError("depth must be at least 1")
    report = probe_local_finiteness(x, v, depth)
    click.echo("dims: " + ", ".join(str(d) for d in report.dims))
    click.echo(f"verdict: {report.verdict()}")
    if report.stabilized:
        click.echo("certificate: the span stopped growing, so it is ad-invariant")
    else:
        click.echo("heuristic: still growing at this depth; not a certificate")


@main.group()
def export():
    """Write structure constants for a window of basis vectors."""


@export.command()
@click.option("--algebra", type=ALGEBRA_CHOICE, default="block", show_default=True)
@click.option("--window", default="-2:2:1", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--out", default="-", show_default=True, help="output path, '-' for stdout")
def structure(algebra, window, fmt, out):
    """All nonzero ordered-pair brackets inside WINDOW."""
    alg = Algebra(algebra)
    win = _window(window)
    if out == "-":
        export_structure(alg, win, fmt, sys.stdout)
    else:
        with open(out, "w", newline="") as fp:
            count = export_structure(alg, win, fmt, fp)
        click.echo(f"wrote {count} {fmt} records to {out}")


if __name__ == "__main__":
    main()
