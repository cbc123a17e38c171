"""CSV -> image rendering for the five figure datasets.

The input contract is the compute package's CSV schema: a header row,
numeric fields (empty string = no value), LF endings.  Per figure:

    fig1  e_j, [constants...], c_t<T> curve columns, expt_e_j, expt_c
    fig2  t, [constants...], c_ej<E> curve columns
    fig3  long grid with columns e_j1, t, concurrence (+ constants)
    fig4  long grid with columns e_j1, e_j2, concurrence (+ constants)
    fig5  e_j1, [constants...], two or more c_* curve columns

Every plotted concurrence value must lie in [0, 1]; anything else aborts
before a file is produced.  Rendering is deterministic for a given
input: fixed figure geometry, axes ranges derived from the data.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

__all__ = ["SchemaError", "RenderJob", "FigureData", "load_dataset", "build_figure", "render"]

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4", "fig5")

_FIGSIZES = {
    "fig1": (7.0, 5.0),
    "fig2": (7.0, 5.0),
    "fig3": (7.0, 5.5),
    "fig4": (6.5, 5.5),
    "fig5": (7.0, 5.0),
}
_COLORMAP = "viridis"


class SchemaError(ValueError):
    """Input file does not match the figure's dataset schema."""


@dataclass(frozen=True)
class RenderJob:
    figure_id: str
    input_path: Path
    output_path: Path
    dpi: int = 150


@dataclass(frozen=True)
class FigureData:
    columns: tuple[str, ...]
    rows: tuple[tuple[float | None, ...], ...]

    def column(self, name: str) -> list[float | None]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


def load_dataset(path) -> FigureData:
    """Parse one dataset CSV; empty fields become None."""
    path = Path(path)
    if not path.exists():
        raise SchemaError(f"input file does not exist: {path}")
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: file is empty") from None
        rows = []
        for lineno, raw in enumerate(reader, start=2):
            if len(raw) != len(header):
                raise SchemaError(
                    f"{path}:{lineno}: expected {len(header)} fields, got {len(raw)}"
                )
            parsed = []
            for name, field in zip(header, raw):
                if field == "":
                    parsed.append(None)
                    continue
                try:
                    parsed.append(float(field))
                except ValueError:
                    raise SchemaError(
                        f"{path}:{lineno}: column {name!r} holds non-numeric {field!r}"
                    ) from None
            rows.append(tuple(parsed))
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return FigureData(columns=tuple(header), rows=tuple(rows))


def _require_columns(data: FigureData, names: tuple[str, ...], figure_id: str) -> None:
    missing = [name for name in names if name not in data.columns]
    if missing:
        raise SchemaError(f"{figure_id} dataset is missing columns {missing}")


def _check_concurrence_values(values, label: str) -> np.ndarray:
    arr = np.asarray([v for v in values if v is not None], dtype=float)
    if arr.size == 0:
        raise SchemaError(f"{label}: no values to plot")
    if not np.isfinite(arr).all():
        raise SchemaError(f"{label}: non-finite concurrence value")
    if arr.min() < 0.0 or arr.max() > 1.0:
        raise SchemaError(
            f"{label}: concurrence outside [0, 1] (range {arr.min():g}..{arr.max():g})"
        )
    return arr


def _dense_column(data: FigureData, name: str) -> np.ndarray:
    values = data.column(name)
    if any(v is None for v in values):
        raise SchemaError(f"column {name!r} has empty fields")
    return np.asarray(values, dtype=float)


def _curve_columns(data: FigureData, prefix: str, figure_id: str) -> list[str]:
    names = [name for name in data.columns if name.startswith(prefix)]
    if not names:
        raise SchemaError(f"{figure_id} dataset has no {prefix}* curve columns")
    return names


def _curve_parameter(name: str, prefix: str) -> float:
    try:
        return float(name[len(prefix):])
    except ValueError:
        raise SchemaError(f"cannot parse curve parameter from column {name!r}") from None


def _constant_annotations(data: FigureData, skip: set[str]) -> str:
    parts = []
    for name in data.columns:
        if name in skip or name.startswith(("c_", "expt_")):
            continue
        values = [v for v in data.column(name) if v is not None]
        if values and all(v == values[0] for v in values):
            parts.append(f"{name} = {values[0]:g}")
    return ", ".join(parts)


def _pivot_grid(x: np.ndarray, y: np.ndarray, z: np.ndarray, figure_id: str):
    xs = np.unique(x)
    ys = np.unique(y)
    if xs.size < 2 or ys.size < 2:
        raise SchemaError(f"{figure_id}: grid needs at least 2 points per axis")
    if xs.size * ys.size != z.size:
        raise SchemaError(
            f"{figure_id}: rows do not form a complete {xs.size} x {ys.size} grid"
        )
    order = np.lexsort((y, x))
    grid = z[order].reshape(xs.size, ys.size)
    return xs, ys, grid


def _build_fig1(data: FigureData) -> plt.Figure:
    _require_columns(data, ("e_j",), "fig1")
    curve_names = _curve_columns(data, "c_t", "fig1")
    e_j = _dense_column(data, "e_j")
    temps = [_curve_parameter(name, "c_t") for name in curve_names]
    curves = [
        _check_concurrence_values(_dense_column(data, name), f"fig1 {name}")
        for name in curve_names
    ]

    fig, ax = plt.subplots(figsize=_FIGSIZES["fig1"])
    for temp, values in zip(temps, curves):
        ax.plot(e_j, values, label=f"t = {temp:g}")

    if "expt_e_j" in data.columns and "expt_c" in data.columns:
        marker_x = [v for v in data.column("expt_e_j") if v is not None]
        marker_y = [v for v in data.column("expt_c") if v is not None]
        if len(marker_x) != len(marker_y):
            raise SchemaError("fig1: unpaired experiment marker fields")
        if marker_x:
            _check_concurrence_values(marker_y, "fig1 experiment markers")
            ax.plot(
                marker_x, marker_y, linestyle="none", marker="*",
                markersize=14, color="crimson", label="experiment",
            )

    ax.set_xlabel("e_j")
    ax.set_ylabel("concurrence")
    ax.set_xlim(float(e_j.min()), float(e_j.max()))
    ax.set_ylim(0.0, 1.0)
    annotation = _constant_annotations(data, {"e_j"})
    ax.set_title("concurrence vs Josephson energy" + (f"  ({annotation})" if annotation else ""))
    ax.legend(fontsize=8)

    # inset: coarse surface over the curve family
    if len(temps) >= 2:
        inset = fig.add_axes((0.55, 0.45, 0.38, 0.42), projection="3d")
        mesh_t, mesh_e = np.meshgrid(np.asarray(temps), e_j)
        surface = np.column_stack(curves)
        inset.plot_surface(mesh_e, mesh_t, surface, cmap=_COLORMAP, linewidth=0)
        inset.set_xlabel("e_j", fontsize=7)
        inset.set_ylabel("t", fontsize=7)
        inset.set_zlabel("C", fontsize=7)
        inset.tick_params(labelsize=6)
    return fig


def _build_fig2(data: FigureData) -> plt.Figure:
    _require_columns(data, ("t",), "fig2")
    curve_names = _curve_columns(data, "c_ej", "fig2")
    t = _dense_column(data, "t")
    fig, ax = plt.subplots(figsize=_FIGSIZES["fig2"])
    for name in curve_names:
        values = _check_concurrence_values(_dense_column(data, name), f"fig2 {name}")
        ax.plot(t, values, label=f"e_j = {_curve_parameter(name, 'c_ej'):g}")
    ax.set_xlabel("t")
    ax.set_ylabel("concurrence")
    ax.set_xlim(float(t.min()), float(t.max()))
    ax.set_ylim(0.0, 1.0)
    annotation = _constant_annotations(data, {"t"})
    ax.set_title("concurrence vs temperature" + (f"  ({annotation})" if annotation else ""))
    ax.legend(fontsize=8)
    return fig


def _build_fig3(data: FigureData) -> plt.Figure:
    _require_columns(data, ("e_j1", "t", "concurrence"), "fig3")
    e_j1 = _dense_column(data, "e_j1")
    t = _dense_column(data, "t")
    c = _check_concurrence_values(_dense_column(data, "concurrence"), "fig3 concurrence")
    xs, ys, grid = _pivot_grid(e_j1, t, c, "fig3")
    fig = plt.figure(figsize=_FIGSIZES["fig3"])
    ax = fig.add_subplot(projection="3d")
    mesh_y, mesh_x = np.meshgrid(ys, xs)
    ax.plot_surface(mesh_y, mesh_x, grid, cmap=_COLORMAP, linewidth=0)
    ax.set_xlabel("t")
    ax.set_ylabel("e_j1")
    ax.set_zlabel("concurrence")
    annotation = _constant_annotations(data, {"e_j1", "t", "concurrence"})
    ax.set_title(
        "concurrence vs temperature and Josephson energy"
        + (f"  ({annotation})" if annotation else ""),
        fontsize=10,
    )
    return fig


def _build_fig4(data: FigureData) -> plt.Figure:
    _require_columns(data, ("e_j1", "e_j2", "concurrence"), "fig4")
    e_j1 = _dense_column(data, "e_j1")
    e_j2 = _dense_column(data, "e_j2")
    c = _check_concurrence_values(_dense_column(data, "concurrence"), "fig4 concurrence")
    xs, ys, grid = _pivot_grid(e_j1, e_j2, c, "fig4")
    fig, ax = plt.subplots(figsize=_FIGSIZES["fig4"])
    mesh_y, mesh_x = np.meshgrid(ys, xs)
    levels = np.linspace(0.0, min(1.0, float(grid.max()) + 1e-9), 21)
    contour = ax.contourf(mesh_x, mesh_y, grid, levels=levels, cmap=_COLORMAP)
    colorbar = fig.colorbar(contour, ax=ax)
    colorbar.set_label("concurrence")
    ax.set_xlabel("e_j1")
    ax.set_ylabel("e_j2")
    annotation = _constant_annotations(data, {"e_j1", "e_j2", "concurrence"})
    ax.set_title("concurrence contours" + (f"  ({annotation})" if annotation else ""))
    return fig


def _build_fig5(data: FigureData) -> plt.Figure:
    _require_columns(data, ("e_j1",), "fig5")
    curve_names = _curve_columns(data, "c_", "fig5")
    if len(curve_names) < 2:
        raise SchemaError("fig5 dataset needs two curve families")
    e_j1 = _dense_column(data, "e_j1")
    fig, ax = plt.subplots(figsize=_FIGSIZES["fig5"])
    for name in curve_names:
        values = _check_concurrence_values(_dense_column(data, name), f"fig5 {name}")
        ax.plot(e_j1, values, label=name.removeprefix("c_").replace("_", " "))
    ax.set_xlabel("e_j1")
    ax.set_ylabel("concurrence")
    ax.set_xlim(float(e_j1.min()), float(e_j1.max()))
    ax.set_ylim(0.0, 1.0)
    annotation = _constant_annotations(data, {"e_j1"})
    ax.set_title("concurrence curve families" + (f"  ({annotation})" if annotation else ""))
    ax.legend(fontsize=8)
    return fig


_BUILDERS = {
    "fig1": _build_fig1,
    "fig2": _build_fig2,
    "fig3": _build_fig3,
    "fig4": _build_fig4,
    "fig5": _build_fig5,
}


def build_figure(figure_id: str, data: FigureData) -> plt.Figure:
    """Validate the dataset and build the matplotlib figure for it."""
    if figure_id not in _BUILDERS:
        raise SchemaError(f"unknown figure id {figure_id!r}; valid: {', '.join(FIGURE_IDS)}")
    return _BUILDERS[figure_id](data)


def _image_metadata(fmt: str, figure_id: str) -> dict[str, str]:
    from . import __version__

    description = f"{figure_id} rendered with colormap={_COLORMAP}, figsize={_FIGSIZES[figure_id]}"
    if fmt == "png":
        return {"Software": f"qubitent-render {__version__}", "Description": description}
    return {"Creator": f"qubitent-render {__version__}", "Description": description}


def render(job: RenderJob) -> Path:
    """Render one dataset to an image file.

    Any validation or drawing error leaves no output file behind.
    """
    fmt = job.output_path.suffix.lstrip(".").lower()
    if fmt not in ("png", "svg"):
        raise SchemaError(f"unsupported image format {fmt!r}; use .png or .svg")
    data = load_dataset(job.input_path)
    figure = build_figure(job.figure_id, data)
    try:
        figure.savefig(
            job.output_path,
            dpi=job.dpi,
            format=fmt,
            metadata=_image_metadata(fmt, job.figure_id),
        )
    except Exception:
        if job.output_path.exists():
            os.unlink(job.output_path)
        raise
    finally:
        plt.close(figure)
    return job.output_path
