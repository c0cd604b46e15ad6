"""Command-line surface: inspection, positivity checks, campaign runners.

Exit codes: 0 on success (and for verify, only when the campaign passed),
1 for failed campaigns or refused bounds, 2 for usage errors.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import click

from .campaigns import (
    CAMPAIGNS,
    BoundExceeded,
    _jsonable,
    render_summary,
    run_campaign,
    write_report,
)
from .flagspace import (
    almost_kahler_metrics,
    kahler_metrics,
    parse_acs,
    parse_flag,
    parse_metric,
    quasi_kahler_metrics,
)
from .positivity import CpnMatrix, classify
from .rootsys import LieType, build_root_system, c_series_label, canonical_key

_CONFIG_KEYS = {
    "max_rank": int,
    "seed": int,
    "samples": int,
    "tolerance": float,
    "reports_dir": str,
}


def _read_config(path: str | None) -> dict:
    if path is None:
        return {}
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise click.UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            known = ", ".join(sorted(_CONFIG_KEYS))
            raise click.UsageError(f"{path}:{lineno}: unknown key {key!r} (known: {known})")
        try:
            out[key] = _CONFIG_KEYS[key](value)
        except ValueError:
            raise click.UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}")
    return out


def _flag_from(spec: tuple[str, ...]):
    try:
        return parse_flag(" ".join(spec))
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _echo_json(payload) -> None:
    click.echo(json.dumps(_jsonable(payload), sort_keys=True, indent=2))


@click.group()
def main():
    """Flag manifolds from painted Dynkin diagrams: curvature positivity.

    Lie types are a series letter plus rank (C4, g2); Dynkin nodes use
    Bourbaki numbering; k=2,3,4 lists the painted nodes generating K.
    """


@main.command()
@click.argument("lie_type")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def roots(lie_type, as_json):
    """Print the root system: roots, marks, Killing norms."""
    try:
        lt = LieType.parse(lie_type)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    rs = build_root_system(lt)
    ordered = sorted(rs.roots, key=canonical_key)
    if as_json:
        _echo_json(
            {
                "type": str(lt),
                "roots": [list(r) for r in ordered],
                "marks": list(rs.marks),
                "killing_norms": {str(r): str(rs.killing_inner(r, r)) for r in ordered},
            }
        )
        return
    click.echo(f"{lt}: {len(rs.roots)} roots, marks {','.join(map(str, rs.marks))}")
    for r in ordered:
        label = f"  {c_series_label(lt.rank, r):>10}" if lt.series == "C" else ""
        click.echo(f"  {r}{label}  (.,.)_B = {rs.killing_inner(r, r)}")


@main.command()
@click.argument("spec", nargs=-1, required=True)
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def flag(spec, as_json):
    """Describe a flag manifold, e.g. `flag C4 k=2,3,4`."""
    fm = _flag_from(spec)
    if as_json:
        _echo_json(
            {
                "flag": fm.label(),
                "painted": list(fm.painted),
                "unpainted": list(fm.unpainted),
                "complex_dimension": fm.complex_dimension,
                "summands": [
                    {"grade": list(g), "roots": [list(r) for r in s]}
                    for g, s in zip(fm.grades, fm.summands)
                ],
            }
        )
        return
    click.echo(f"{fm.label()}: complex dimension {fm.complex_dimension}, "
               f"{fm.num_summands} summands")
    for i, (grade, summand) in enumerate(zip(fm.grades, fm.summands), 1):
        roots_text = ", ".join(map(str, summand))
        click.echo(f"  m_{i} grade {grade} dim {len(summand)}: {roots_text}")


@main.command()
@click.argument("spec", nargs=-1, required=True)
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def acs(spec, as_json):
    """List the invariant almost complex structures of a flag."""
    fm = _flag_from(spec)
    structures = fm.enumerate_acs()
    rows = [
        {"acs": "".join("+" if x == 1 else "-" for x in s),
         "integrable": fm.is_integrable(s)}
        for s in structures
    ]
    if as_json:
        _echo_json({"flag": fm.label(), "structures": rows})
        return
    click.echo(f"{fm.label()}: {len(structures)} structures")
    for row in rows:
        mark = " (integrable)" if row["integrable"] else ""
        click.echo(f"  {row['acs']}{mark}")


_CONES = {
    "kahler": kahler_metrics,
    "quasi-kahler": quasi_kahler_metrics,
    "almost-kahler": almost_kahler_metrics,
}


@main.command()
@click.argument("kind", type=click.Choice(sorted(_CONES)))
@click.argument("spec", nargs=-1, required=True)
@click.option("--acs", "acs_text", required=True, help="signs, e.g. ++- ")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def metrics(kind, spec, acs_text, as_json):
    """Solve a metric cone, e.g. `metrics kahler C4 k=2,3,4 --acs ++`."""
    fm = _flag_from(spec)
    try:
        signs = parse_acs(fm, acs_text)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    cone = _CONES[kind](fm, signs)
    if as_json:
        _echo_json(
            {
                "flag": fm.label(),
                "acs": acs_text,
                "kind": kind,
                "empty": cone.is_empty,
                "dimension": cone.nullity,
                "sample": list(cone.sample) if cone.sample else None,
                "rows": [list(r) for r in cone.rows],
            }
        )
        return
    if cone.is_empty:
        click.echo(f"{fm.label()} acs {acs_text}: {kind} cone empty")
    elif cone.is_ray():
        values = ",".join(str(x) for x in cone.sample)
        click.echo(f"{fm.label()} acs {acs_text}: {kind} ray ({values})")
    else:
        values = ",".join(str(x) for x in cone.sample)
        click.echo(
            f"{fm.label()} acs {acs_text}: {kind} cone of dimension "
            f"{cone.nullity}, sample ({values})"
        )


@main.command()
@click.argument("spec", nargs=-1, required=True)
@click.option("--acs", "acs_text", required=True, help="signs, e.g. +-")
@click.option("--metric", "metric_text", required=True,
              help="summand values, e.g. 1,1/2")
@click.option("--samples", default=10000, show_default=True,
              help="falsifier directions when matrix tests are inconclusive")
@click.option("--seed", default=0, show_default=True)
@click.option("--tolerance", default=1e-9, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def check(spec, acs_text, metric_text, samples, seed, tolerance, as_json):
    """Classify positivity of one invariant metric."""
    fm = _flag_from(spec)
    try:
        signs = parse_acs(fm, acs_text)
        lam = parse_metric(fm, metric_text)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    verdict = classify(fm, signs, lam, samples=samples, seed=seed,
                       tolerance=tolerance)
    if as_json:
        payload = {
            "flag": fm.label(),
            "acs": acs_text,
            "metric": [str(x) for x in lam],
            "verdict": verdict.kind.name,
            "detail": verdict.detail,
            "min_eigenvalue": verdict.min_eigenvalue,
            "witness": verdict.witness,
            "certificate": None,
        }
        if verdict.certificate:
            payload["certificate"] = {
                "alpha": list(verdict.certificate.alpha),
                "gamma": list(verdict.certificate.gamma),
                "eps_sum": verdict.certificate.eps_sum,
            }
        _echo_json(payload)
        return
    click.echo(f"{fm.label()} acs {acs_text} metric ({metric_text})")
    click.echo(f"  {verdict.kind.name}: {verdict.detail}")
    if verdict.min_eigenvalue is not None:
        click.echo(f"  min eigenvalue {verdict.min_eigenvalue:.3e}")
    if verdict.witness is not None:
        click.echo(f"  witness: {_witness_text(verdict.witness)}")
    if verdict.certificate is not None:
        click.echo(f"  certificate: {verdict.certificate.describe()}")


def _witness_text(witness) -> str:
    u, v, value = witness
    if isinstance(u, tuple) and u and isinstance(u[0], int):
        return f"diagonal pair {u}, {v}: value {value}"
    return f"directions u={u}, v={v}: value {value}"


@main.command()
@click.option("--n", "n", type=int, required=True, help="half-dimension plus one")
@click.option("--t", "ts", multiple=True, default=("2",), show_default=True,
              help="metric parameter, repeatable for a grid")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@click.option("--csv", "as_csv", is_flag=True, help="dump the matrix entries")
def cpn(n, ts, as_json, as_csv):
    """Diagonal curvature family of odd projective space at metric (1,t)."""
    if n < 2:
        raise click.UsageError("need --n at least 2")
    try:
        values = [Fraction(t) for t in ts]
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"bad t values {ts!r}")
    if any(t <= 0 for t in values):
        raise click.UsageError("t must be positive")
    rows = []
    for t in values:
        m = CpnMatrix(n, t)
        res = m.definiteness()
        if res.is_pd:
            state = "positive definite"
        elif res.is_psd:
            state = f"positive semidefinite, singular (kernel dimension {len(m.kernel())})"
        else:
            state = "not positive semidefinite"
        rows.append((t, m, res, state))
    if as_json:
        _echo_json(
            {
                "n": n,
                "cases": [
                    {
                        "t": str(t),
                        "state": state,
                        "psd": res.is_psd,
                        "pd": res.is_pd,
                        "min_eigenvalue": res.min_eigenvalue,
                        "labels": list(m.labels),
                        "matrix": [[str(x) for x in row] for row in m.matrix],
                    }
                    for t, m, res, state in rows
                ],
            }
        )
        return
    for t, m, res, state in rows:
        click.echo(f"n={n} t={t}: {state} (min eigenvalue {res.min_eigenvalue:.3e})")
        if as_csv:
            click.echo("," + ",".join(m.labels))
            for label, row in zip(m.labels, m.matrix):
                click.echo(label + "," + ",".join(str(x) for x in row))


@main.command()
@click.argument("campaign", type=click.Choice(sorted(CAMPAIGNS)))
@click.option("--max-rank", type=int, default=None,
              help="rank bound (table1/height3/maximal/almost-kahler)")
@click.option("--max-n", type=int, default=None, help="n bound (cpn-theorem)")
@click.option("--seed", type=int, default=None, help="sampling seed (almost-kahler)")
@click.option("--acs-cap", type=int, default=None,
              help="structures sampled per large flag (almost-kahler)")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None,
              help="key=value file: max_rank, seed, samples, tolerance, reports_dir")
@click.option("--reports-dir", default=None, help="output directory (default ./reports)")
def verify(campaign, max_rank, max_n, seed, acs_cap, config_path, reports_dir):
    """Run a campaign and write its report files.

    Campaign directories get report.json, cases.csv, summary.txt and
    figure.png; output is deterministic for fixed parameters and seed.
    A config max_rank raises the refusal ceiling for bigger sweeps.
    """
    config = _read_config(config_path)
    out_dir = reports_dir or config.get("reports_dir", "reports")
    try:
        report = run_campaign(
            campaign,
            ceiling_override=config.get("max_rank"),
            max_rank=max_rank,
            max_n=max_n,
            seed=seed if seed is not None else config.get("seed"),
            acs_cap=acs_cap,
        )
    except BoundExceeded as exc:
        raise click.ClickException(str(exc))
    paths = write_report(report, out_dir)
    click.echo(render_summary(report), nl=False)
    click.echo(f"report: {paths['json']}")
    if not report.passed:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
