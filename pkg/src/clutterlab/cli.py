"""Command-line interface: ``clutterlab report|verify|search|triangulate|snf|fixtures``.

Exit codes: 0 pass, 1 fail or counterexample, 2 parse error, 3 bound exceeded,
4 hypotheses not met.
"""
import functools
import json
import logging
import os
import random
import sys

import click

from .clutter import Clutter, incidence_matrix, parse_clutter
from .errors import BoundExceeded, HypothesisFailed, ParseError
from .fixtures import FIXTURE_NAMES, FIXTURES
from .linalg import smith_normal_form
from .matrix import IntMatrix, parse_matrix
from .polyhedra import cell_indices, regular_triangulation
from .properties import THEOREM_IDS, jsonable, verify_theorem
from .report import build_report
from .search import TARGETS, SearchTask, resolve_target, run_search, theorem_suite

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_BOUND = 3
EXIT_HYPOTHESES = 4


def load_subject(source):
    """Fixture name, or a path to a clutter JSON, a matrix JSON or a ``rows cols`` matrix text file."""
    if source in FIXTURES:
        return source, FIXTURES[source].subject
    if not os.path.exists(source):
        raise ParseError(f"{source!r} is neither a fixture ({', '.join(FIXTURE_NAMES)}) nor a file")
    with open(source, encoding="utf-8") as fh:
        text = fh.read()
    name = os.path.splitext(os.path.basename(source))[0]
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if isinstance(doc, dict) and "data" in doc and "kind" in doc:
            name, doc = doc.get("name", name), doc["data"]
        if isinstance(doc, dict) and "matrix" in doc:
            rows = doc["matrix"]
            if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
                raise ParseError("'matrix' must be a nonempty array of rows")
            try:
                return name, IntMatrix.from_rows(rows)
            except (TypeError, ValueError) as exc:
                raise ParseError(f"bad matrix: {exc}") from None
        return name, parse_clutter(doc, name=name)
    return name, parse_matrix(text)


def _guard(fn):
    """Map library errors onto the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ParseError as exc:
            click.echo(f"parse error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except BoundExceeded as exc:
            click.echo(f"bound exceeded: {exc}", err=True)
            sys.exit(EXIT_BOUND)
        except HypothesisFailed as exc:
            click.echo(f"hypotheses not met: {exc}", err=True)
            sys.exit(EXIT_HYPOTHESES)

    return wrapper


def _emit_json(doc):
    click.echo(json.dumps(doc, indent=2))


def _table(props):
    width = max((len(k) for k in props), default=0)
    for name, p in props.items():
        value = json.dumps(jsonable(p["value"]))
        click.echo(f"{name.ljust(width)}  {value}")


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose):
    """Exact checks of clutter properties: covers, idealness, MFMC, lattices, triangulations."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(levelname)s %(message)s")


@main.command()
@click.argument("source")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--workers", default=1, show_default=True, help="Worker processes.")
@_guard
def report(source, as_json, workers):
    """Full property report for a fixture or input file."""
    name, subject = load_subject(source)
    rep = build_report(subject, name=name, workers=workers)
    if as_json:
        click.echo(rep.to_json(), nl=False)
    else:
        click.echo(f"# {rep.subject}")
        _table(rep.properties)


@main.command()
@click.argument("source")
@click.argument("theorem", type=click.Choice(THEOREM_IDS))
@click.option("--assume-cohen-macaulay", is_flag=True, help="Treat the input graph as Cohen-Macaulay.")
@click.option("--json", "as_json", is_flag=True)
@_guard
def verify(source, theorem, assume_cohen_macaulay, as_json):
    """Check a theorem's hypotheses and conclusions on one clutter."""
    name, subject = load_subject(source)
    if not isinstance(subject, Clutter):
        raise ParseError("verify needs a clutter input")
    rep = verify_theorem(subject, theorem, assume_cohen_macaulay=assume_cohen_macaulay)
    rep.subject = f"{name}:{theorem}"
    if as_json:
        click.echo(rep.to_json(), nl=False)
    else:
        click.echo(f"{rep.subject}: {rep.status}")
        _table(rep.properties)
    sys.exit({"pass": 0, "fail": EXIT_FAIL, "hypotheses-not-met": EXIT_HYPOTHESES}[rep.status])


@main.command()
@click.option("--target", help=f"Implication to test; one of: {', '.join(sorted(TARGETS))}.")
@click.option("--n-min", default=1, show_default=True)
@click.option("--n-max", default=5, show_default=True)
@click.option("--d", type=int, default=None, help="Edge size; omit to allow mixed sizes.")
@click.option("--mode", type=click.Choice(["exhaustive", "random"]), default="exhaustive", show_default=True)
@click.option("--seed", type=int, default=None, help="Required in random mode.")
@click.option("--samples", default=200, show_default=True, help="Random clutters per n.")
@click.option("--p", "prob", default=0.3, show_default=True, help="Edge inclusion probability.")
@click.option("--workers", default=1, show_default=True)
@click.option("--theorem-suite", is_flag=True, help="Run the exhaustive uniform theorem suite instead.")
@click.option("--json", "as_json", is_flag=True)
@_guard
def search(target, n_min, n_max, d, mode, seed, samples, prob, workers, theorem_suite, as_json):
    """Enumerate small clutters up to isomorphism and test an implication."""
    if theorem_suite:
        result = _run_suite(n_max, d, workers)
        if as_json:
            _emit_json(result.to_dict())
        else:
            for key, row in result.counts.items():
                click.echo(f"{key}: {row}")
            click.echo(f"violations: {len(result.violations)}")
        sys.exit(EXIT_FAIL if result.violations else 0)
    if not target:
        raise click.UsageError("--target is required unless --theorem-suite is given")
    try:
        resolve_target(target)
    except KeyError as exc:
        raise click.BadParameter(str(exc.args[0]), param_hint="--target") from None
    task = SearchTask(n_min, n_max, d, target, mode, seed, samples, prob)
    try:
        task.validate()
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    result = run_search(task, workers=workers)
    if as_json:
        click.echo(result.to_json(), nl=False)
    else:
        for cand in result.candidates:
            click.echo(f"candidate {cand['canonical']}  edges={cand['clutter']['edges']}")
        s = result.to_dict()["summary"]
        click.echo(f"{result.kind} {resolve_target(target).name}: tested {s['tested']}, "
                   f"filtered {s['filtered']}, skipped {s['skipped']}, found {s['found']}")
    sys.exit(EXIT_FAIL if result.found else 0)


def _run_suite(n_max, d, workers):
    ds = (2, 3) if d is None else (d,)
    return theorem_suite(n_max=n_max, ds=ds, workers=workers)


def _points_of(subject):
    return incidence_matrix(subject).columns() if isinstance(subject, Clutter) else subject.columns()


@main.command()
@click.argument("source")
@click.option("--weights", help="Comma-separated weight vector, one entry per point.")
@click.option("--random", "rand_seed", type=int, default=None, help="Draw random weights from this seed.")
@click.option("--count", default=1, show_default=True, help="Number of random weight vectors.")
@click.option("--max-weight", default=10, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@_guard
def triangulate(source, weights, rand_seed, count, max_weight, as_json):
    """Regular triangulations of the cone over the input columns, with cell lattice indices."""
    _, subject = load_subject(source)
    points = _points_of(subject)
    if weights is not None:
        try:
            ws = [[int(x) for x in weights.split(",")]]
        except ValueError:
            raise ParseError(f"bad weight vector {weights!r}") from None
        if len(ws[0]) != len(points):
            raise ParseError(f"weight vector needs {len(points)} entries")
    elif rand_seed is not None:
        rng = random.Random(rand_seed)
        ws = [[rng.randint(0, max_weight) for _ in points] for _ in range(count)]
    else:
        ws = [[0] * len(points)]
    docs = []
    for w in ws:
        t = regular_triangulation(points, w)
        idx = cell_indices(t)
        doc = t.to_dict(one_based=True)
        doc["indices"] = idx
        doc["unimodular"] = all(i == 1 for i in idx)
        docs.append(doc)
    if as_json:
        _emit_json({"seed": rand_seed, "triangulations": docs})
    else:
        for doc in docs:
            click.echo(f"weights {doc['weights']}: {'unimodular' if doc['unimodular'] else 'NOT unimodular'}"
                       f"{' (refined)' if doc['refined'] else ''}")
            for cell, i in zip(doc["cells"], doc["indices"]):
                click.echo(f"  cell {cell} index {i}")


@main.command()
@click.argument("source")
@click.option("--json", "as_json", is_flag=True)
@_guard
def snf(source, as_json):
    """Smith normal form D = U M V of a matrix (or of a clutter's incidence matrix)."""
    _, subject = load_subject(source)
    M = incidence_matrix(subject) if isinstance(subject, Clutter) else subject
    res = smith_normal_form(M)
    if as_json:
        _emit_json({
            "factors": list(res.factors),
            "rank": res.rank,
            "identity_block": res.is_identity_block(),
            "D": res.D.as_rows(),
            "U": res.U.as_rows(),
            "V": res.V.as_rows(),
        })
    else:
        click.echo(res.to_text())


@main.command()
@click.option("--dump", "dump_dir", type=click.Path(file_okay=False), help="Write each fixture to DIR/<name>.json.")
@click.option("--json", "as_json", is_flag=True)
def fixtures(dump_dir, as_json):
    """List the embedded fixtures, or dump them as JSON files."""
    if dump_dir:
        os.makedirs(dump_dir, exist_ok=True)
        for name, fx in FIXTURES.items():
            with open(os.path.join(dump_dir, f"{name}.json"), "w", encoding="utf-8") as fh:
                fh.write(fx.to_json())
        click.echo(f"wrote {len(FIXTURES)} fixtures to {dump_dir}")
        return
    if as_json:
        _emit_json([fx.to_dict() for fx in FIXTURES.values()])
    else:
        for name, fx in FIXTURES.items():
            size = f"n={fx.subject.n} q={fx.subject.q}" if fx.kind == "clutter" else f"{fx.subject.rows}x{fx.subject.cols}"
            click.echo(f"{name:12s} {fx.kind:8s} {size}")


if __name__ == "__main__":
    main()
