"""Command-line front door.

Exit codes are stable: 0 success, 1 domain defect (bad hierarchy, missing
judgments, unknown node), 2 usage or parse error, 3 inconsistency (results
are still printed). Command output goes to stdout in the selected --format;
diagnostics go to stderr.
"""

import dataclasses
import json
import sys

import click

from ahpkit import __version__
from ahpkit.consistency import estimate_random_index, RANDOM_INDEX
from ahpkit.errors import AhpError, SchemaError, ValidationError
from ahpkit.engine import evaluate, sweep_from_current
from ahpkit.priority import EIGENVECTOR, METHODS, DerivationSettings
from ahpkit.store import (
    export_results,
    read_model,
    report_to_dict,
    result_to_dict,
    sweep_to_dict,
)

EXIT_OK = 0
EXIT_DEFECT = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3

_format_option = click.option(
    "--format", "fmt", type=click.Choice(["table", "json"]), default="table",
    show_default=True, help="Output format on stdout.")
_threshold_option = click.option(
    "--cr-threshold", type=float, default=None, envvar="AHP_CR_THRESHOLD",
    help="Consistency ratio limit; flag beats AHP_CR_THRESHOLD, which beats "
         "the value stored in the model file.")
_method_option = click.option(
    "--method", type=click.Choice(sorted(METHODS)), default=None,
    help="Priority derivation method; overrides the model file setting.")


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load(path):
    try:
        return read_model(path)
    except SchemaError as exc:
        _fail(EXIT_USAGE, str(exc))
    except OSError as exc:
        _fail(EXIT_USAGE, f"cannot read {path}: {exc.strerror or exc}")


def _effective(doc, cr_threshold, method=None):
    threshold = doc.cr_threshold if cr_threshold is None else cr_threshold
    settings = doc.settings
    if method is not None and method != settings.method:
        settings = DerivationSettings(method, settings.tolerance, settings.max_iterations)
    return dataclasses.replace(doc, settings=settings, cr_threshold=threshold)


def _evaluate(doc):
    try:
        return evaluate(doc)
    except ValidationError as exc:
        _fail(EXIT_DEFECT, str(exc))
    except AhpError as exc:
        _fail(EXIT_DEFECT, str(exc))


def _emit_json(payload):
    click.echo(json.dumps(payload, indent=2))


def _names_for(hierarchy):
    names = {a.id: a.name for a in hierarchy.alternatives}
    for node in hierarchy.all_nodes():
        names[node.id] = node.name
    return names


def _report_line(cs, report, names):
    state = "ok" if report.consistent else "INCONSISTENT"
    line = (f"  lambda_max={report.lambda_max:.6f}  ci={report.ci:.6f}  "
            f"ri={report.ri:.4f}  cr={report.cr:.6f}  {state}")
    if report.worst_pair is not None:
        i, j, suggested = report.worst_pair
        line += (f"\n  suggestion: set ({names[cs.member_ids[i]]}, "
                 f"{names[cs.member_ids[j]]}) to {suggested}")
    return line


@click.group()
@click.version_option(__version__, prog_name="ahpkit")
def main():
    """Pairwise-comparison decision models: weights, consistency, ranking."""


@main.command()
@click.argument("model", type=click.Path())
@_format_option
def validate(model, fmt):
    """Check a model file for structural defects and missing judgments."""
    defects = []
    doc = None
    try:
        doc = read_model(model)
    except SchemaError as exc:
        _fail(EXIT_USAGE, str(exc))
    except OSError as exc:
        _fail(EXIT_USAGE, f"cannot read {model}: {exc.strerror or exc}")
    except ValidationError as exc:
        defects = list(exc.defects)
    incomplete = doc.incomplete_nodes() if doc is not None else []
    ok = not defects and not incomplete
    if fmt == "json":
        _emit_json({
            "ok": ok,
            "defects": [dataclasses.asdict(d) for d in defects],
            "incomplete": [
                {"node": node_id, "missing": [list(p) for p in missing]}
                for node_id, missing in incomplete
            ],
        })
    else:
        for d in defects:
            click.echo(f"defect {d.code} ({d.subject}): {d.message}")
        for node_id, missing in incomplete:
            pairs = ", ".join(str(p) for p in missing)
            click.echo(f"incomplete {node_id}: missing pair(s) {pairs}")
        if ok:
            click.echo("ok")
    sys.exit(EXIT_OK if ok else EXIT_DEFECT)


@main.command()
@click.argument("model", type=click.Path())
@_method_option
@_format_option
@_threshold_option
def weights(model, method, fmt, cr_threshold):
    """Derive local and global weights with per-node consistency reports."""
    doc = _effective(_load(model), cr_threshold, method)
    ev = _evaluate(doc)
    names = _names_for(doc.hierarchy)
    if fmt == "json":
        _emit_json({
            "local": {
                cs.node_id: {
                    member: ev.local[cs.node_id][k]
                    for k, member in enumerate(cs.member_ids)
                }
                for cs in doc.hierarchy.comparison_sets()
            },
            "reports": {nid: report_to_dict(r) for nid, r in ev.reports.items()},
            "global": result_to_dict(ev.synthesis, doc.hierarchy)["global_weights"],
            "consistent": ev.consistent,
        })
    else:
        for cs in doc.hierarchy.comparison_sets():
            vector = ev.local[cs.node_id]
            click.echo(f"node {names.get(cs.node_id, cs.node_id)} [{cs.kind}]")
            for k, member in enumerate(cs.member_ids):
                click.echo(f"  {names[member]:<24} {vector[k]:.6f}")
            click.echo(_report_line(cs, ev.reports[cs.node_id], names))
        click.echo("global leaf weights")
        for row in result_to_dict(ev.synthesis, doc.hierarchy)["global_weights"]:
            label = f"{row['criterion']} / {row['sub_criterion']}"
            click.echo(f"  {label:<40} {row['global_weight']:.6f}")
    sys.exit(EXIT_OK if ev.consistent else EXIT_INCONSISTENT)


@main.command()
@click.argument("model", type=click.Path())
@click.option("--node", default=None, help="Check a single comparison set.")
@_format_option
@_threshold_option
def check(model, node, fmt, cr_threshold):
    """Report consistency (lambda_max, CI, RI, CR) per comparison set."""
    doc = _effective(_load(model), cr_threshold)
    ev = _evaluate(doc)
    sets = {cs.node_id: cs for cs in doc.hierarchy.comparison_sets()}
    if node is not None:
        if node not in sets:
            _fail(EXIT_DEFECT, f"no comparison set for node {node!r}")
        sets = {node: sets[node]}
    names = _names_for(doc.hierarchy)
    reports = {nid: ev.reports[nid] for nid in sets}
    if fmt == "json":
        _emit_json({
            "reports": {nid: report_to_dict(r) for nid, r in reports.items()},
            "consistent": all(r.consistent for r in reports.values()),
        })
    else:
        for nid, report in reports.items():
            click.echo(f"node {names.get(nid, nid)} [{sets[nid].kind}]")
            click.echo(_report_line(sets[nid], report, names))
    sys.exit(EXIT_OK if all(r.consistent for r in reports.values()) else EXIT_INCONSISTENT)


@main.command()
@click.argument("model", type=click.Path())
@_method_option
@_format_option
@_threshold_option
def rank(model, method, fmt, cr_threshold):
    """Score and rank the alternatives against the goal."""
    doc = _effective(_load(model), cr_threshold, method)
    ev = _evaluate(doc)
    result = ev.synthesis
    top_group = next((g for g in result.ties if result.ranking[0] in g), None)
    most_suitable = result.ranking[0] if top_group is None else None
    names = {a.id: a.name for a in doc.hierarchy.alternatives}
    if fmt == "json":
        payload = result_to_dict(result, doc.hierarchy)
        payload["most_suitable"] = most_suitable
        payload["consistent"] = ev.consistent
        _emit_json(payload)
    else:
        for position, alt_id in enumerate(result.ranking):
            marker = "  <- most suitable" if alt_id == most_suitable else ""
            click.echo(f"{position + 1}. {names[alt_id]:<12} {result.alternative_scores[alt_id]:.6f}{marker}")
        for group in result.ties:
            click.echo("tie: " + ", ".join(names[alt_id] for alt_id in group))
    sys.exit(EXIT_OK if ev.consistent else EXIT_INCONSISTENT)


@main.command()
@click.argument("model", type=click.Path())
@click.option("--node", required=True, help="Criterion whose weight to sweep.")
@click.option("--steps", type=click.IntRange(min=2), default=100, show_default=True)
@_format_option
def sensitivity(model, node, steps, fmt):
    """Sweep one criterion's weight and report rank reversal points."""
    doc = _load(model)
    ev = _evaluate(doc)
    try:
        sweep = sweep_from_current(ev, node, steps)
    except ValidationError as exc:
        _fail(EXIT_DEFECT, str(exc))
    if fmt == "json":
        _emit_json(sweep_to_dict(sweep))
    else:
        names = {a.id: a.name for a in doc.hierarchy.alternatives}
        for point in sweep.points:
            top = point.ranking[0]
            click.echo(f"  weight {point.weight:.6f}  top {names[top]}")
        if sweep.reversals:
            for weight in sweep.reversals:
                click.echo(f"reversal at weight {weight:.6f}")
        else:
            click.echo("no reversals")
    sys.exit(EXIT_OK)


@main.command()
@click.option("--n", type=click.IntRange(3, 10), required=True,
              help="Matrix order to estimate the random index for.")
@click.option("--samples", type=click.IntRange(min=1), default=100_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_format_option
def ri(n, samples, seed, fmt):
    """Monte-Carlo estimate of the random index next to the table constant."""
    estimate = estimate_random_index(n, samples, seed)
    table = RANDOM_INDEX[n]
    if fmt == "json":
        _emit_json({
            "n": n, "samples": samples, "seed": seed,
            "estimate": estimate, "table": table,
            "difference": estimate - table,
        })
    else:
        click.echo(f"n={n} samples={samples} seed={seed}")
        click.echo(f"estimate   {estimate:.6f}")
        click.echo(f"table      {table:.6f}")
        click.echo(f"difference {estimate - table:+.6f}")
    sys.exit(EXIT_OK)


@main.command()
@click.argument("model", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True, help="Export format.")
@click.option("--output", "-o", type=click.Path(), default=None,
              help="Write to a file instead of stdout.")
@_threshold_option
def export(model, fmt, output, cr_threshold):
    """Export global weights and alternative scores as CSV or JSON."""
    doc = _effective(_load(model), cr_threshold)
    ev = _evaluate(doc)
    payload = export_results(ev.synthesis, doc.hierarchy, fmt)
    if output is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    else:
        with open(output, "wb") as handle:
            handle.write(payload)
    if not ev.consistent:
        click.echo("warning: one or more comparison sets exceed the CR threshold", err=True)
        sys.exit(EXIT_INCONSISTENT)
    sys.exit(EXIT_OK)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--persist-dir", type=click.Path(), default=None, envvar="AHP_PERSIST_DIR",
              help="Write models through to .ahp.json files in this directory.")
@click.option("--cors/--no-cors", default=True, show_default=True,
              help="Allow cross-origin requests (needed by the web UI).")
def serve(host, port, persist_dir, cors):
    """Run the HTTP service."""
    import uvicorn

    from ahpkit.service import create_app

    app = create_app(persist_dir=persist_dir, cors=cors)
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
