"""
Figure recipes for the N = 20 chain, centre spin 10.

fig2  alpha = 3, nearest / next-nearest / next-next-nearest / exact: series + histograms
fig3  alpha in {2, 1, 0.1}, same four truncations: series
fig4  exact model: alpha in {3, 2, 1} on Jt <= 10, {0.1, 0.05, 0} on Jt <= 2.5,
      histograms for alpha in {3, 2, 1, 0.5, 0.1, 0.05}, relaxation summary
fig5  centred blocks N_I in {4, 6, 8, 10}, alpha in {3, 2, 1}, normalized, Jt <= 40,
      endpoint values at t_f = 40
"""

from __future__ import annotations

from .. import kernels
from ..coherence import coherence_series, time_grid
from ..model import BlockSpec, CouplingModel
from ..spectrum import DEFAULT_BINS, spectrum_histogram
from . import svg
from .output import OutputSet
from .runner import Summary, write_histogram, write_series

N = 20
SPIN = 10
TRUNCATIONS = (1, 2, 3, None)
FIGURES = ("fig2", "fig3", "fig4", "fig5")


def _label(r):
    return "exact" if r is None else f"r{r}"


def fig2(outputs: OutputSet, steps=1000, bins=DEFAULT_BINS, make_svg=False):
    grid = time_grid(10.0, steps)
    curves, rows = [], []
    for r in TRUNCATIONS:
        model = CouplingModel(N, 1.0, 3.0, r)
        series = coherence_series(model, SPIN, grid)
        write_series(outputs, f"fig2_series_{_label(r)}.csv", series)
        hist = spectrum_histogram(model, SPIN, bins)
        write_histogram(outputs, f"fig2_hist_{_label(r)}.csv", hist)
        if make_svg:
            outputs.write(f"fig2_hist_{_label(r)}.svg",
                          svg.step_chart(hist.bin_edges, hist.mass, title=f"alpha=3 {_label(r)}"),
                          {"source": f"fig2_hist_{_label(r)}.csv"})
        curves.append((_label(r), series.times, series.values))
        s = Summary.of(series)
        rows.append((model.range_label, s.t_r, s.max_revival, s.steady_state))
    outputs.write_csv("fig2_summary.csv", {"n": N, "spin": SPIN, "alpha": 3.0, "t_max": 10.0, "steps": steps},
                      ["range", "t_r", "max_revival", "steady_state_mean"], list(zip(*rows)))
    if make_svg:
        outputs.write("fig2_series.svg", svg.line_chart(curves, title="alpha=3, spin 10"),
                      {"source": "fig2_series_*.csv"})


def fig3(outputs: OutputSet, steps=1000, make_svg=False, **_):
    grid = time_grid(10.0, steps)
    for alpha in (2.0, 1.0, 0.1):
        curves = []
        for r in TRUNCATIONS:
            series = coherence_series(CouplingModel(N, 1.0, alpha, r), SPIN, grid)
            write_series(outputs, f"fig3_alpha{alpha:g}_{_label(r)}.csv", series)
            curves.append((_label(r), series.times, series.values))
        if make_svg:
            outputs.write(f"fig3_alpha{alpha:g}.svg", svg.line_chart(curves, title=f"alpha={alpha:g}"),
                          {"source": f"fig3_alpha{alpha:g}_*.csv"})


def fig4(outputs: OutputSet, steps=1000, bins=DEFAULT_BINS, make_svg=False):
    rows = []
    for panel, alphas, t_max in (("a", (3.0, 2.0, 1.0), 10.0), ("b", (0.1, 0.05, 0.0), 2.5)):
        grid = time_grid(t_max, steps)
        curves = []
        for alpha in alphas:
            series = coherence_series(CouplingModel(N, 1.0, alpha), SPIN, grid)
            write_series(outputs, f"fig4{panel}_alpha{alpha:g}.csv", series)
            curves.append((f"alpha={alpha:g}", series.times, series.values))
            s = Summary.of(series)
            rows.append((alpha, t_max, s.t_r, s.max_revival, s.steady_state))
        if make_svg:
            outputs.write(f"fig4{panel}.svg", svg.line_chart(curves, title=f"panel {panel}"),
                          {"source": f"fig4{panel}_alpha*.csv"})
    outputs.write_csv("fig4_summary.csv", {"n": N, "spin": SPIN, "range": "exact", "steps": steps},
                      ["alpha", "t_max", "t_r", "max_revival", "steady_state_mean"], list(zip(*rows)))
    for alpha in (3.0, 2.0, 1.0, 0.5, 0.1, 0.05):
        hist = spectrum_histogram(CouplingModel(N, 1.0, alpha), SPIN, bins)
        write_histogram(outputs, f"fig4_hist_alpha{alpha:g}.csv", hist)
        if make_svg:
            outputs.write(f"fig4_hist_alpha{alpha:g}.svg",
                          svg.step_chart(hist.bin_edges, hist.mass, title=f"alpha={alpha:g}"),
                          {"source": f"fig4_hist_alpha{alpha:g}.csv"})


def fig5(outputs: OutputSet, steps=400, make_svg=False, **_):
    t_f = 40.0
    grid = time_grid(t_f, steps)
    rows = []
    for alpha in (3.0, 2.0, 1.0):
        curves = []
        for size in (4, 6, 8, 10):
            block = BlockSpec.centered(N, size)
            series = coherence_series(CouplingModel(N, 1.0, alpha), block, grid, normalized=True)
            write_series(outputs, f"fig5_alpha{alpha:g}_ni{size}.csv", series)
            curves.append((f"N_I={size}", series.times, series.values))
            s = Summary.of(series)
            rows.append((alpha, size, block.start, s.final, s.steady_state))
        if make_svg:
            outputs.write(f"fig5_alpha{alpha:g}.svg",
                          svg.line_chart(curves, title=f"alpha={alpha:g}", ylabel="C_norm"),
                          {"source": f"fig5_alpha{alpha:g}_ni*.csv"})
    outputs.write_csv("fig5_endpoints.csv", {"n": N, "range": "exact", "t_f": t_f, "steps": steps},
                      ["alpha", "n_i", "block_start", "C_norm_tf", "steady_state_mean"], list(zip(*rows)))


RECIPES = {"fig2": fig2, "fig3": fig3, "fig4": fig4, "fig5": fig5}


def reproduce(figure: str, out: str, steps: int | None = None, bins: int = DEFAULT_BINS,
              make_svg: bool = False, log=print) -> list[str]:
    figures = FIGURES if figure == "all" else (figure,)
    outputs = OutputSet(out, f"reproduce {figure}")
    for name in figures:
        log(f"reproducing {name}")
        kwargs = {"bins": bins, "make_svg": make_svg}
        if steps is not None:
            kwargs["steps"] = steps
        RECIPES[name](outputs, **kwargs)
    top = {"command": "reproduce", "figure": figure, "steps": steps if steps is not None else "default",
           "bins": bins}
    path = outputs.write_manifest(top, {"backend": kernels.BACKEND})
    written = [f"{out}/{name}" for name, _, _ in outputs.entries] + [path]
    for p in written:
        log(f"wrote {p}")
    return written
