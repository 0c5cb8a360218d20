"""Command-line interface.

Input files are either point sets (header "n s", one point per line) or
ideals (header "ring n" for variables x0..xn, one polynomial per line).
Commands exit 0 on success, 1 when torsion or a table mismatch is found,
2 on malformed input, 3 on a general-position violation.
"""

from __future__ import annotations

import json
import random
import sys

import click

from . import worked_examples
from .groebner import DegreeCapExceeded, default_degree_cap, initial_ideal
from .ideals import Ideal
from .jacobian import critical_ideal, jacobian_ideal, torsion_free_check
from .orders import GREVLEX, LEX
from .points import (GeneralPositionError, PointFormatError, PointSet,
                     glp_check, ideal_of_points, igp_construct,
                     normalize_frame, parse_points_text, sample_glp_points)
from .poly import ParseError, PolyRing, parse_poly

EXIT_DISAGREE = 1
EXIT_BAD_INPUT = 2
EXIT_POSITION = 3

_ORDERS = {"grevlex": GREVLEX, "lex": LEX}


def parse_ideal_text(text: str, order=GREVLEX) -> Ideal:
    """Ideal file: header "ring n" (variables x0..xn), one polynomial per
    line; '#' comments and blank lines are ignored."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or not lines[0].startswith("ring"):
        raise ParseError("expected a 'ring n' header line", 0)
    parts = lines[0].split()
    if len(parts) != 2 or not parts[1].isdigit():
        raise ParseError(f"bad ring header {lines[0]!r}", 0)
    ring = PolyRing(int(parts[1]) + 1, order)
    return Ideal(ring, [parse_poly(line, ring) for line in lines[1:]])


def _load_input(path: str, order) -> tuple[Ideal, PointSet | None]:
    """Sniff the file kind; points files yield (ideal of points, the set)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    first = next((ln.split("#", 1)[0].strip() for ln in text.splitlines()
                  if ln.split("#", 1)[0].strip()), "")
    if first.startswith("ring"):
        return parse_ideal_text(text, order), None
    ps = parse_points_text(text)
    ring = PolyRing(ps.ambient_n + 1, order)
    return ideal_of_points(ps, ring), ps


def _echo_json(payload):
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _fail(exc, code):
    click.echo(f"error: {exc}", err=True)
    sys.exit(code)


order_option = click.option("--order", type=click.Choice(sorted(_ORDERS)),
                            default="grevlex", show_default=True,
                            help="Term order for the ring.")
json_option = click.option("--json", "as_json", is_flag=True,
                           help="Emit JSON instead of text.")
cap_option = click.option("--degree-cap", type=int, default=None,
                          help="Abort basis computations above this S-pair degree.")
r_option = click.option("--r", "minor_size", type=int, default=None,
                        help="Minor size for the Jacobian (defaults to n).")


@click.group()
@click.version_option(package_name="aluffi")
def main():
    """Exact ideal computations for point configurations in projective space."""


def _with_cap(cap):
    if cap is not None and cap < 1:
        _fail("degree cap must be positive", EXIT_BAD_INPUT)
    return default_degree_cap.set(cap) if cap is not None else None


@main.command("points-ideal")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--igp", "use_igp", is_flag=True,
              help="Use the direct quadric construction (normalizes the frame).")
@order_option
@json_option
def points_ideal(path, use_igp, order, as_json):
    """Print generators of the ideal of a point set, with mu."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            ps = parse_points_text(fh.read())
    except PointFormatError as exc:
        _fail(exc, EXIT_BAD_INPUT)
    ring = PolyRing(ps.ambient_n + 1, _ORDERS[order])
    alpha = None
    if use_igp:
        try:
            _, moved = normalize_frame(ps)
            igp = igp_construct(moved)
        except GeneralPositionError as exc:
            _fail(exc, EXIT_POSITION)
        from .poly import Polynomial
        ideal = Ideal(ring, [Polynomial(ring, dict(g.terms))
                             for g in igp.generators])
        gens, mu = ideal.minimal_generators()
        alpha = {f"({i},{j})": {str(t): str(c) for t, c in coeffs.items()}
                 for (i, j), coeffs in igp.alpha.items()}
    else:
        ideal = ideal_of_points(ps, ring)
        gens, mu = ideal.minimal_generators()
    if as_json:
        payload = {"schema_version": 1, "n": ps.ambient_n, "s": len(ps),
                   "generators": [str(g) for g in gens], "mu": mu}
        if alpha is not None:
            payload["alpha"] = alpha
        _echo_json(payload)
    else:
        click.echo(f"ideal of {len(ps)} points in P^{ps.ambient_n} (mu = {mu}):")
        for g in gens:
            click.echo(f"  {g}")
        if alpha is not None:
            click.echo("coefficients:")
            for pair, coeffs in alpha.items():
                body = ", ".join(f"t={t}: {c}" for t, c in coeffs.items())
                click.echo(f"  {pair}: {body}")


@main.command("gb")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@order_option
@json_option
@cap_option
def gb_command(path, order, as_json, degree_cap):
    """Reduced Groebner basis of the input ideal."""
    tok = _with_cap(degree_cap)
    try:
        ideal, _ = _load_input(path, _ORDERS[order])
        basis = ideal.groebner_basis(_ORDERS[order])
    except (ParseError, PointFormatError, ValueError) as exc:
        _fail(exc, EXIT_BAD_INPUT)
    except DegreeCapExceeded as exc:
        _fail(exc, EXIT_BAD_INPUT)
    finally:
        if tok is not None:
            default_degree_cap.reset(tok)
    if as_json:
        _echo_json({"schema_version": 1, "order": order,
                    "basis": [str(g) for g in basis.elements]})
    else:
        click.echo(f"reduced Groebner basis ({order}, {len(basis)} elements):")
        for g in basis.elements:
            click.echo(f"  {g}")


@main.command("hilbert")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("-D", "--max-degree", type=int, default=5, show_default=True)
@order_option
@json_option
def hilbert_command(path, max_degree, order, as_json):
    """Hilbert function of R/I for degrees 0..D."""
    try:
        ideal, _ = _load_input(path, _ORDERS[order])
        values = [ideal.hilbert_function(d) for d in range(max_degree + 1)]
    except (ParseError, PointFormatError, ValueError) as exc:
        _fail(exc, EXIT_BAD_INPUT)
    if as_json:
        _echo_json({"schema_version": 1, "values": values})
    else:
        click.echo(", ".join(str(v) for v in values))


@main.command("mu")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@order_option
@json_option
def mu_command(path, order, as_json):
    """Minimal number of generators, with a minimal generating set."""
    try:
        ideal, _ = _load_input(path, _ORDERS[order])
        gens, mu = ideal.minimal_generators()
    except (ParseError, PointFormatError, ValueError) as exc:
        _fail(exc, EXIT_BAD_INPUT)
    if as_json:
        _echo_json({"schema_version": 1, "mu": mu,
                    "generators": [str(g) for g in gens]})
    else:
        click.echo(f"mu = {mu}")
        for g in gens:
            click.echo(f"  {g}")


@main.command("critical")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@r_option
@order_option
@json_option
def critical_command(path, minor_size, order, as_json):
    """Critical ideal data: minors of the Jacobian of minimal generators."""
    try:
        ideal, _ = _load_input(path, _ORDERS[order])
        r = minor_size if minor_size is not None else ideal.ring.num_vars - 1
        data = critical_ideal(ideal, r)
    except (ParseError, PointFormatError, ValueError) as exc:
        _fail(exc, EXIT_BAD_INPUT)
    if as_json:
        _echo_json({"schema_version": 1, "r": data.r,
                    "num_minors": len(data.minors),
                    "mu_critical": data.mu_critical,
                    "equals_power": data.equals_power,
                    "generators": [str(g) for g in data.critical_ideal.generators]})
    else:
        click.echo(f"critical ideal of {data.r}-minors: {len(data.minors)} "
                   f"nonzero minors, mu = {data.mu_critical}")
        click.echo(f"equals the full power of the maximal ideal: {data.equals_power}")


@main.command("jacobian-ideal")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@r_option
@order_option
@json_option
def jacobian_ideal_command(path, minor_size, order, as_json):
    """Minimal generators of (J, critical ideal)."""
    try:
        ideal, _ = _load_input(path, _ORDERS[order])
        r = minor_size if minor_size is not None else ideal.ring.num_vars - 1
        result = jacobian_ideal(ideal, r)
    except (ParseError, PointFormatError, ValueError) as exc:
        _fail(exc, EXIT_BAD_INPUT)
    if as_json:
        _echo_json({"schema_version": 1, "r": r,
                    "generators": [str(g) for g in result.generators]})
    else:
        click.echo(f"Jacobian ideal (r = {r}, {len(result.generators)} generators):")
        for g in result.generators:
            click.echo(f"  {g}")


@main.command("vv-check")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--t-max", type=int, default=2, show_default=True,
              help="Largest torsion degree to test.")
@r_option
@order_option
@json_option
@cap_option
def vv_check(path, t_max, minor_size, order, as_json, degree_cap):
    """Degree-by-degree torsion check of J inside its Jacobian ideal."""
    if t_max < 2:
        _fail("t-max must be at least 2", EXIT_BAD_INPUT)
    tok = _with_cap(degree_cap)
    try:
        ideal, _ = _load_input(path, _ORDERS[order])
        r = minor_size if minor_size is not None else ideal.ring.num_vars - 1
        i_ideal = jacobian_ideal(ideal, r)
        report = torsion_free_check(ideal, i_ideal, t_max=t_max, r=r)
    except (ParseError, PointFormatError, ValueError) as exc:
        _fail(exc, EXIT_BAD_INPUT)
    except DegreeCapExceeded as exc:
        _fail(exc, EXIT_BAD_INPUT)
    finally:
        if tok is not None:
            default_degree_cap.reset(tok)
    if as_json:
        _echo_json(report.to_json())
    else:
        click.echo(f"J: {len(ideal.generators)} generators; "
                   f"I = (J, {r}-minors of the Jacobian)")
        click.echo(f"fast path: {'yes' if report.fast_path else 'no'}")
        for dv in report.per_degree:
            line = f"t={dv.t}: {'vv component vanishes' if dv.vv_zero else 'TORSION'}"
            if dv.witness is not None:
                line += f", witness {dv.witness}"
            click.echo(line)
        click.echo(f"verdict: {report.verdict}")
    sys.exit(0 if report.torsion_free else EXIT_DISAGREE)


@main.command("paper-examples")
@json_option
def paper_examples(as_json):
    """Recompute the bundled worked examples and compare with expectations."""
    rows = worked_examples.run_all()
    if as_json:
        _echo_json({"schema_version": 1, "rows": [r.to_json() for r in rows],
                    "all_ok": all(r.ok for r in rows)})
    else:
        width = max(len(r.name) for r in rows)
        for r in rows:
            status = "ok   " if r.ok else "FAIL "
            click.echo(f"{status}{r.name.ljust(width)}  expected: {r.expected}")
            click.echo(f"     {''.ljust(width)}  computed: {r.computed}")
        bad = [r.name for r in rows if not r.ok]
        if bad:
            click.echo("mismatched rows: " + ", ".join(bad))
        else:
            click.echo(f"all {len(rows)} rows agree")
    sys.exit(0 if all(r.ok for r in rows) else EXIT_DISAGREE)


@main.command("conjecture")
@click.option("--n", "n", type=int, required=True,
              help="Ambient projective dimension (n >= 3).")
@click.option("--trials", type=int, default=3, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--bound", type=int, default=10, show_default=True,
              help="Coordinates are sampled uniformly from [-bound, bound].")
@json_option
def conjecture(n, trials, seed, bound, as_json):
    """EXPERIMENT: test whether the critical ideal of s = 2n random general
    points is the full n-th power of the maximal ideal.  Reports outcomes
    per trial; asserts nothing."""
    if n < 3:
        _fail("n must be at least 3", EXIT_BAD_INPUT)
    if trials < 1:
        _fail("trials must be at least 1", EXIT_BAD_INPUT)
    rng = random.Random(seed)
    outcomes = []
    try:
        for trial in range(trials):
            ps = sample_glp_points(n, 2 * n, rng, bound=bound)
            _, moved = normalize_frame(ps)
            igp = igp_construct(moved)
            j = Ideal(igp.ring, list(igp.generators))
            data = critical_ideal(j, n)
            outcomes.append({
                "trial": trial,
                "points": [[str(c) for c in p.coords] for p in ps.points],
                "equals_power": data.equals_power,
                "mu_critical": data.mu_critical,
            })
    except GeneralPositionError as exc:
        _fail(exc, EXIT_POSITION)
    payload = {"schema_version": 1, "experiment": True, "n": n, "s": 2 * n,
               "seed": seed, "bound": bound, "trials": outcomes}
    if as_json:
        _echo_json(payload)
    else:
        click.echo(f"EXPERIMENT: n={n}, s={2 * n}, seed={seed}, bound={bound}")
        for out in outcomes:
            click.echo(f"trial {out['trial']}: critical = full power: "
                       f"{out['equals_power']} (mu = {out['mu_critical']})")
        hits = sum(1 for o in outcomes if o["equals_power"])
        click.echo(f"{hits}/{len(outcomes)} trials gave the full power; "
                   "this is an experiment report, not a proof")


if __name__ == "__main__":
    main()
