"""Command-line interface.

Exit codes: 0 success, 2 validation error, 3 budget error.  All numeric
output uses 17 significant digits.  Randomized commands require an
explicit --seed.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click
import numpy as np

from . import statefile
from .audit import (
    GROUP_BASIS,
    GROUP_LU,
    GROUP_SLOCC,
    audit as run_audit,
    claims_experiment,
    format_reports,
)
from .bloch import DensityState, PureState, represent
from .errors import BudgetError, ValidationError
from .hyperdet import charpoly_coeffs, hdet, hyper_charpoly
from .invariants import compare_fingerprints, fingerprint_state, pure_three_qubit_det
from .sampling import random_density, random_pure, random_sl, random_unitary

EXIT_VALIDATION = 2
EXIT_BUDGET = 3


def fmt(x):
    return f"{float(x):.17g}"


def fmt_complex(z):
    z = complex(z)
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.17g} {sign} {abs(z.imag):.17g}j"


def handle_errors(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ValidationError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_VALIDATION)
        except BudgetError as exc:
            click.echo(f"budget error: {exc}", err=True)
            sys.exit(EXIT_BUDGET)

    return wrapper


def _as_density(state):
    return state.to_density() if isinstance(state, PureState) else state


@click.group()
def main():
    """Hypermatrix invariants of multipartite quantum states."""


@main.command("repr")
@click.argument("state_file", type=click.Path(exists=True, dir_okay=False))
@handle_errors
def cmd_repr(state_file):
    """Print the Bloch hypermatrix of a state (format and nonzero entries)."""
    state = _as_density(statefile.load_state(state_file))
    A = represent(state)
    click.echo("format: " + "x".join(str(f) for f in A.format))
    nz = np.argwhere(A.data != 0)
    click.echo(f"nonzero entries: {len(nz)}")
    for idx in nz:
        key = ",".join(str(i) for i in idx)
        click.echo(f"a[{key}] = {fmt_complex(A.data[tuple(idx)])}")


@main.command("fingerprint")
@click.argument("state_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_format", type=click.Choice(["json", "csv"]), default="json")
@click.option("--guaranteed-only", is_flag=True, help="Emit only guaranteed invariants.")
@click.option("--threads", type=int, default=1)
@click.option(
    "--bless",
    is_flag=True,
    help="Write the fingerprint as the golden file next to the state file.",
)
@handle_errors
def cmd_fingerprint(state_file, out_format, guaranteed_only, threads, bless):
    """Compute the invariant fingerprint of a state."""
    state = statefile.load_state(state_file)
    fp = fingerprint_state(state, guaranteed_only=guaranteed_only, threads=threads)
    if out_format == "csv":
        text = statefile.fingerprint_to_csv(fp)
    else:
        text = json.dumps(statefile.fingerprint_to_dict(fp), indent=1) + "\n"
    if bless:
        golden = Path(state_file).with_suffix(".fingerprint." + out_format)
        golden.write_text(text)
        click.echo(f"blessed {golden}")
    else:
        click.echo(text, nl=False)


@main.command("hdet")
@click.argument("state_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--threads", type=int, default=1)
@handle_errors
def cmd_hdet(state_file, threads):
    """First hyperdeterminant of the Bloch tensor (density) or amplitude
    tensor (pure)."""
    state = statefile.load_state(state_file)
    if isinstance(state, DensityState):
        A = represent(state)
    else:
        A = state.amplitudes
    click.echo(fmt_complex(hdet(A, threads=threads)))


@main.command("det222")
@click.argument("state_file", type=click.Path(exists=True, dir_okay=False))
@handle_errors
def cmd_det222(state_file):
    """Second hyperdeterminant of a three-qubit pure state."""
    state = statefile.load_state(state_file)
    if not isinstance(state, PureState):
        raise ValidationError("det222 needs a pure three-qubit state file")
    click.echo(fmt_complex(pure_three_qubit_det(state)))


@main.command("charpoly")
@click.argument("state_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--threads", type=int, default=1)
@handle_errors
def cmd_charpoly(state_file, threads):
    """Characteristic (bipartite) or hyper-characteristic (even-partite)
    polynomial coefficients, ascending in lambda."""
    state = _as_density(statefile.load_state(state_file))
    A = represent(state)
    if state.nparties == 2 and state.dims[0] == state.dims[1]:
        poly = charpoly_coeffs(A.data)
    elif state.nparties % 2 == 0 and len(set(state.dims)) == 1:
        poly = hyper_charpoly(A, threads=threads)
    else:
        raise ValidationError(f"no characteristic polynomial for dims {state.dims}")
    for k, c in enumerate(poly.coeffs):
        click.echo(f"c{k} = {fmt_complex(c)}")


@main.command("compare")
@click.argument("file1", type=click.Path(exists=True, dir_okay=False))
@click.argument("file2", type=click.Path(exists=True, dir_okay=False))
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("--guaranteed-only", is_flag=True)
@click.option("--threads", type=int, default=1)
@handle_errors
def cmd_compare(file1, file2, tol, guaranteed_only, threads):
    """Compare the fingerprints of two state files."""
    fp1 = fingerprint_state(
        statefile.load_state(file1), guaranteed_only=guaranteed_only, threads=threads
    )
    fp2 = fingerprint_state(
        statefile.load_state(file2), guaranteed_only=guaranteed_only, threads=threads
    )
    result = compare_fingerprints(fp1, fp2, tol=tol)
    click.echo(result.verdict)
    click.echo(f"max relative difference: {fmt(result.max_difference)}")
    for name in result.differing:
        click.echo(
            f"differs: {name}: {fmt_complex(fp1.value(name))} "
            f"vs {fmt_complex(fp2.value(name))}"
        )


@main.command("audit")
@click.argument(
    "state_file", type=click.Path(exists=True, dir_okay=False), required=False
)
@click.option("--group", type=click.Choice(["lu", "slocc", "basis"]), default="slocc")
@click.option("--trials", type=int, default=20, show_default=True)
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--cond-cap", type=float, default=20.0, show_default=True)
@click.option("--guaranteed-only", is_flag=True)
@click.option(
    "--claims",
    type=click.Choice(["paper"]),
    default=None,
    help="Run the standing experiment on the audited literature claims.",
)
@handle_errors
def cmd_audit(state_file, group, trials, tol, seed, cond_cap, guaranteed_only, claims):
    """Empirically audit invariance of a state's fingerprint."""
    if claims == "paper":
        for label, reports in claims_experiment(seed, trials=trials, tol=tol):
            click.echo(f"== {label} (seed={seed}, trials={trials})")
            click.echo(format_reports(reports))
            click.echo("")
        return
    if state_file is None:
        raise ValidationError("a state file is required unless --claims is given")
    state = statefile.load_state(state_file)
    group_name = {"lu": GROUP_LU, "slocc": GROUP_SLOCC, "basis": GROUP_BASIS}[group]

    def fp_fn(s, bases=None):
        return fingerprint_state(s, bases=bases, guaranteed_only=guaranteed_only)

    reports = run_audit(
        state,
        group_name,
        trials,
        tol,
        seed,
        fingerprint_fn=fp_fn,
        cond_cap=cond_cap,
    )
    click.echo(format_reports(reports))


@main.command("sample")
@click.option(
    "--kind",
    type=click.Choice(["density", "pure", "unitary", "sl"]),
    required=True,
)
@click.option("--dims", required=True, help="Comma-separated dimensions, e.g. 2,2,2.")
@click.option("--rank", type=int, default=1, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
@handle_errors
def cmd_sample(kind, dims, rank, seed, out_path):
    """Write a seeded random state or operator file."""
    try:
        dims_t = tuple(int(d) for d in dims.split(","))
    except ValueError as exc:
        raise ValidationError(f"bad --dims value {dims!r}") from exc
    if any(d < 2 for d in dims_t):
        raise ValidationError("all dimensions must be >= 2")
    if kind == "density":
        statefile.save_state(random_density(dims_t, rank, seed), out_path)
    elif kind == "pure":
        statefile.save_state(random_pure(dims_t, seed), out_path)
    else:
        if len(dims_t) != 1:
            raise ValidationError(f"--kind {kind} needs a single dimension")
        op = random_unitary(dims_t[0], seed) if kind == "unitary" else random_sl(dims_t[0], seed)
        statefile.save_operator(kind, op, out_path)
    click.echo(f"wrote {out_path}")


if __name__ == "__main__":
    main()
