"""Scenario execution: series, spectra, relaxation summaries."""

from __future__ import annotations

from dataclasses import dataclass

from .. import kernels
from ..coherence import (
    CoherenceSeries,
    coherence_series,
    max_revival,
    relaxation_time,
    steady_state,
)
from ..errors import ContractError
from ..model import BlockSpec
from ..spectrum import FrequencyHistogram, spectrum_histogram
from . import svg
from .output import OutputSet
from .scenario import Scenario


def target_meta(target) -> dict:
    if isinstance(target, BlockSpec):
        return {"block_start": target.start, "block_size": target.size}
    return {"spin": target}


def series_meta(series: CoherenceSeries) -> dict:
    m = series.model
    meta = {"n": m.n, "j": m.j, "alpha": m.alpha, "range": m.range_label}
    meta.update(target_meta(series.target))
    meta.update({
        "t_max": float(series.times[-1]),
        "steps": len(series.times),
        "normalized": "true" if series.normalized else "false",
        "method": series.method,
    })
    return meta


def write_series(outputs: OutputSet, name: str, series: CoherenceSeries) -> str:
    column = "C_norm" if series.normalized else "C"
    return outputs.write_csv(name, series_meta(series), ["t", column], [series.times, series.values])


def write_histogram(outputs: OutputSet, name: str, hist: FrequencyHistogram) -> str:
    m = hist.model
    meta = {"n": m.n, "j": m.j, "alpha": m.alpha, "range": m.range_label, "spin": hist.spin,
            "bins": len(hist.mass), "normalization": hist.normalization, "count": hist.count}
    return outputs.write_csv(name, meta, ["bin_left", "bin_right", "mass"],
                             [hist.bin_left, hist.bin_right, hist.mass])


@dataclass
class Summary:
    t_r: float | None
    max_revival: float | None
    steady_state: float
    final: float

    @classmethod
    def of(cls, series: CoherenceSeries) -> "Summary":
        return cls(relaxation_time(series), max_revival(series), steady_state(series),
                   float(series.values[-1]))

    @property
    def rate(self) -> float | None:
        return None if self.t_r is None else 1.0 / self.t_r


def run(scenario: Scenario, log=print) -> list[str]:
    """Evaluate one scenario and write its outputs plus ``manifest.txt``."""
    scenario.validate()
    model = scenario.model()
    target = scenario.target()
    outputs = OutputSet(scenario.out, "run")
    written = []

    needs_series = bool({"series", "relaxation", "steady-state"} & set(scenario.outputs))
    series = None
    if needs_series:
        series = coherence_series(model, target, scenario.grid(), scenario.normalize, scenario.method)
    if "series" in scenario.outputs:
        written.append(write_series(outputs, "series.csv", series))
        if scenario.svg:
            label = "C_norm" if series.normalized else "C"
            written.append(outputs.write("series.svg", svg.line_chart(
                [(f"alpha={model.alpha:g} range={model.range_label}", series.times, series.values)],
                title="coherence", ylabel=label), series_meta(series)))

    if "spectrum" in scenario.outputs:
        hist = spectrum_histogram(model, target, scenario.bins, scenario.histogram_norm)
        written.append(write_histogram(outputs, "spectrum.csv", hist))
        if scenario.svg:
            written.append(outputs.write("spectrum.svg", svg.step_chart(
                hist.bin_edges, hist.mass, title="effective frequencies"), {"source": "spectrum.csv"}))

    if {"relaxation", "steady-state"} & set(scenario.outputs):
        s = Summary.of(series)
        rows = []
        if "relaxation" in scenario.outputs:
            rows += [("t_r", s.t_r), ("relaxation_rate", s.rate), ("max_revival", s.max_revival)]
        if "steady-state" in scenario.outputs:
            rows += [("steady_state_mean", s.steady_state), ("final_value", s.final)]
        names, values = zip(*rows)
        written.append(outputs.write_csv("summary.csv", series_meta(series), ["quantity", "value"],
                                         [names, values]))
        for name, value in rows:
            log(f"{name:>18s}  {value if value is not None else 'not_relaxed'}")

    written.append(outputs.write_manifest(scenario.to_lines(), {"backend": kernels.BACKEND}))
    for path in written:
        log(f"wrote {path}")
    return written


def scan_alpha(template: Scenario, alphas, log=print) -> list[str]:
    """One series per exponent plus ``scan_summary.csv`` of relaxation figures."""
    if not alphas:
        raise ContractError("alpha list is empty")
    template.validate()
    outputs = OutputSet(template.out, "scan-alpha")
    written = []
    curves = []
    rows = []
    grid = template.grid()
    for alpha in alphas:
        model = template.model().with_alpha(alpha)
        series = coherence_series(model, template.target(), grid, template.normalize, template.method)
        written.append(write_series(outputs, f"series_alpha{alpha:g}.csv", series))
        curves.append((f"alpha={alpha:g}", series.times, series.values))
        s = Summary.of(series)
        rows.append((alpha, s.t_r, s.steady_state, s.max_revival))
    meta = dict(series_meta(series))
    meta.pop("alpha")
    cols = list(zip(*rows))
    written.append(outputs.write_csv("scan_summary.csv", meta,
                                     ["alpha", "t_r", "steady_state_mean", "max_revival"], cols))
    if template.svg:
        written.append(outputs.write("scan.svg", svg.line_chart(curves, title="alpha scan"), meta))
    top = template.to_lines() + ["alphas=" + ",".join(f"{a:g}" for a in alphas)]
    written.append(outputs.write_manifest(top, {"backend": kernels.BACKEND}))

    log(f"{'alpha':>8s} {'t_r':>22s} {'steady':>22s}")
    for alpha, t_r, ss, _ in rows:
        log(f"{alpha:8g} {t_r if t_r is not None else 'not_relaxed':>22} {ss:22.15g}")
    for path in written:
        log(f"wrote {path}")
    return written
