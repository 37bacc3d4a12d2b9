"""Command-line entry point.

Subcommands regenerate the comparison figures, dump opacity curves as CSV,
fit the affine shortcut to a power model, render one six-panel grid, and
validate session files.  Exit codes: 0 success, 2 validation findings,
1 errors.  A TOML file can supply flag defaults; explicit flags win.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

import click

from . import calibration
from .bezier import BezierPolynomial
from .compositor import montage, panel_grid
from .opacity import (
    AffineOpacity,
    PowerOpacity,
    fit_affine,
    model_to_dict,
    opacity,
)
from .raster import write_pgm, write_png

PAPER_S_VALUES = (0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99)
DEFAULT_SIZE = (900, 600)


def _parse_floats(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.replace(" ", "").split(",") if v)


def _parse_size(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise click.BadParameter(f"expected WxH, got {text!r}")


def _build_model(model: str, bezier: str, affine: str):
    if model == "affine":
        a = _parse_floats(affine)
        if len(a) != 2:
            raise click.BadParameter("--affine needs exactly two values: a0,a1")
        return AffineOpacity(*a)
    return PowerOpacity(BezierPolynomial(_parse_floats(bezier)))


def _cfg(ctx: click.Context, key: str, fallback):
    """Default from the TOML config if the flag was not given."""
    return (ctx.obj or {}).get(key, fallback)


@click.group()
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None,
              help="TOML file supplying flag defaults.")
@click.pass_context
def main(ctx, config):
    if config:
        with open(config, "rb") as f:
            ctx.obj = tomllib.load(f)
    else:
        ctx.obj = {}


model_options = [
    click.option("--model", type=click.Choice(["power", "affine"]), default="power",
                 show_default=True),
    click.option("--bezier", default="0.20,0.25,1.00", show_default=True,
                 help="Bezier coefficients of the power exponent."),
    click.option("--affine", default="0.6,1.0", show_default=True,
                 help="Affine coefficients a0,a1."),
]


def _with_model_options(f):
    for opt in reversed(model_options):
        f = opt(f)
    return f


def _render_panels(s, l_p, model, size, swap_weights, out_dir, fmt):
    width, height = size
    pct = round(s * 100)
    panels = panel_grid(s, l_p, model, width, height, swap_weights=swap_weights)
    writer = write_pgm if fmt == "pgm" else write_png
    paths = []
    for label, mode, img in panels:
        path = Path(out_dir) / f"fig_s{pct:02d}_{label}_{mode.value}.{fmt}"
        writer(path, img)
        paths.append(path)
    mpath = Path(out_dir) / f"fig_s{pct:02d}_montage.{fmt}"
    writer(mpath, montage([img for _, _, img in panels]))
    paths.append(mpath)
    return paths


@main.command()
@click.option("--s", "s_list", default=None,
              help="Comma-separated relative sizes; default covers the standard set.")
@click.option("--lp", type=float, default=None, help="Foreground target luminance.")
@_with_model_options
@click.option("--swap-weights", is_flag=True, default=False,
              help="Put the opacity weight on the illumination instead.")
@click.option("--size", default=None, help="Panel size as WxH.")
@click.option("--format", "fmt", type=click.Choice(["png", "pgm"]), default="png",
              show_default=True)
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default="figures")
@click.pass_context
def figures(ctx, s_list, lp, model, bezier, affine, swap_weights, size, fmt, out_dir):
    """Render six-panel comparison figures for a list of relative sizes."""
    s_values = _parse_floats(s_list) if s_list else tuple(
        _cfg(ctx, "s_values", PAPER_S_VALUES))
    lp = lp if lp is not None else float(_cfg(ctx, "lp", 0.5))
    size_wh = _parse_size(size) if size else tuple(_cfg(ctx, "size", DEFAULT_SIZE))
    opacity_model = _build_model(model, bezier, affine)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for s in s_values:
        if not 0.0 < s <= 1.0:
            raise click.ClickException(f"s={s} outside (0, 1]")
        try:
            paths = _render_panels(s, lp, opacity_model, size_wh, swap_weights, out, fmt)
        except OSError as exc:
            raise click.ClickException(f"writing under {out}: {exc}")
        click.echo(f"s={s}: wrote {len(paths)} files to {out}")


@main.command()
@_with_model_options
@click.option("--samples", type=int, default=101, show_default=True)
@click.option("--out", "out_file", type=click.Path(dir_okay=False), default=None,
              help="CSV destination; stdout when omitted.")
def curve(model, bezier, affine, samples, out_file):
    """Dump the opacity curve as CSV rows (s, y)."""
    if samples < 2:
        raise click.ClickException("need at least 2 samples")
    opacity_model = _build_model(model, bezier, affine)
    rows = []
    for i in range(samples):
        s = i / (samples - 1)
        rows.append((repr(s), repr(opacity(opacity_model, s))))
    target = open(out_file, "w", newline="") if out_file else sys.stdout
    try:
        writer = csv.writer(target)
        writer.writerow(["s", "y"])
        writer.writerows(rows)
    finally:
        if out_file:
            target.close()


@main.command()
@click.option("--bezier", default="0.20,0.25,1.00", show_default=True)
@click.option("--smin", type=float, default=0.05, show_default=True)
@click.option("--smax", type=float, default=1.0, show_default=True)
@click.option("--samples", type=int, default=96, show_default=True)
@click.option("--out", "out_file", type=click.Path(dir_okay=False), default=None)
def fit(bezier, smin, smax, samples, out_file):
    """Fit the affine opacity form to a power model."""
    model = PowerOpacity(BezierPolynomial(_parse_floats(bezier)))
    a0, a1 = fit_affine(model, s_min=smin, s_max=smax, samples=samples)
    payload = json.dumps(model_to_dict(AffineOpacity(a0, a1)))
    if out_file:
        Path(out_file).write_text(payload + "\n")
    click.echo(payload)


@main.command()
@click.option("--s", type=float, required=True)
@click.option("--lp", type=float, default=0.5, show_default=True)
@_with_model_options
@click.option("--swap-weights", is_flag=True, default=False)
@click.option("--size", default="900x600", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["png", "pgm"]), default="png",
              show_default=True)
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default="figures")
def panel(s, lp, model, bezier, affine, swap_weights, size, fmt, out_dir):
    """Render the six-panel grid for a single relative size."""
    opacity_model = _build_model(model, bezier, affine)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = _render_panels(s, lp, opacity_model, _parse_size(size), swap_weights, out, fmt)
    for p in paths:
        click.echo(str(p))


@main.command("validate-session")
@click.argument("session_file", type=click.Path(exists=True, dir_okay=False))
def validate_session(session_file):
    """Check every record in a session file against the model invariants."""
    try:
        records, findings = calibration.load_session(session_file)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    click.echo(f"{len(records)} valid record(s), {len(findings)} finding(s)")
    for finding in findings:
        click.echo(f"  {finding}")
    if findings:
        sys.exit(2)


if __name__ == "__main__":
    main()
