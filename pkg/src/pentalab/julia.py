"""Escape-time classification over a grid of moduli points.

Each pixel is a labeled pentagon (through the chart section); the
iteration runs in the float model until the orbit lands within epsilon
of the regular class, degenerates, or hits the step cap.  Output is a
binary PPM plus a one-line statistics record.

The grid loop dispatches to a compiled kernel when the extension built;
a pure-Python twin with identical arithmetic is the fallback.  Set
PENTALAB_PURE_PYTHON=1 to force the fallback.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass

from . import _kernel_py
from .moduli import circle_reference_data
from .scalars import PHI, ProjParam, as_param

if os.environ.get("PENTALAB_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl
    except ImportError:
        _impl = _kernel_py


def kernel_backend() -> str:
    """Which grid kernel is active: "compiled" or "python"."""
    return _impl.BACKEND


CONVERGED = "converged"
NOT_CONVERGED = "not_converged"
DEGENERATE = "degenerate"

_STATUS_KINDS = (CONVERGED, NOT_CONVERGED, DEGENERATE)

#: window centered on the regular class with half-width 6 in both axes
DEFAULT_WINDOW = (
    float(PHI) + 1.0 - 6.0,
    float(PHI) + 1.0 + 6.0,
    float(PHI) - 6.0,
    float(PHI) + 6.0,
)


@dataclass(frozen=True)
class PixelClass:
    """Orbit verdict for one moduli point: converged at step ``steps``,
    not converged by the cap, or degenerate at step ``steps``."""

    kind: str
    steps: int = 0

    @property
    def converged(self) -> bool:
        return self.kind == CONVERGED


@dataclass(frozen=True)
class JuliaConfig:
    lam: ProjParam
    window: tuple = DEFAULT_WINDOW
    width: int = 200
    height: int = 200
    max_iter: int = 100
    epsilon: float = 1e-6
    degenerate_threshold: float = 1e-10

    def validate(self) -> None:
        x0, x1, y0, y1 = self.window
        if not (x0 < x1 and y0 < y1):
            raise ValueError("window must satisfy x0 < x1 and y0 < y1")
        if self.width < 1 or self.height < 1:
            raise ValueError("width and height must be at least 1")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")


def _lam_args(cfg: JuliaConfig):
    lam = as_param(cfg.lam)
    if lam.is_infinite:
        return 0.0, True
    return float(lam.value), False


def classify_orbit(x: float, y: float, cfg: JuliaConfig) -> PixelClass:
    """Escape-time verdict for a single moduli point.

    The starting pentagon must pass the full general-position test;
    once iterating, only a collapse inside the construction itself
    (a join, meet, or lift pivot) counts as degenerate.
    """
    cfg.validate()
    lam, lam_is_inf = _lam_args(cfg)
    refmat, ref5 = circle_reference_data()
    status, steps = _impl.classify_point(
        float(x), float(y), lam, lam_is_inf,
        cfg.max_iter, cfg.epsilon, cfg.degenerate_threshold,
        refmat, ref5,
    )
    return PixelClass(_STATUS_KINDS[status], steps)


@dataclass(frozen=True)
class RenderStats:
    converged: float
    not_converged: float
    degenerate: float


@dataclass(frozen=True)
class RenderResult:
    """Row-major grid (top row at the window's ymax, pixel centers):
    parallel status and step-count buffers plus class fractions."""

    width: int
    height: int
    status: bytearray
    steps: array
    stats: RenderStats


def render(cfg: JuliaConfig) -> RenderResult:
    """Classify the full grid.  Deterministic for a fixed config."""
    cfg.validate()
    lam, lam_is_inf = _lam_args(cfg)
    refmat, ref5 = circle_reference_data()
    n = cfg.width * cfg.height
    status = bytearray(n)
    steps = array("i", bytes(4 * n))
    x0, x1, y0, y1 = cfg.window
    _impl.classify_grid(
        x0, x1, y0, y1, cfg.width, cfg.height,
        lam, lam_is_inf, cfg.max_iter, cfg.epsilon, cfg.degenerate_threshold,
        refmat, ref5, status, steps,
    )
    counts = [0, 0, 0]
    for s in status:
        counts[s] += 1
    stats = RenderStats(counts[0] / n, counts[1] / n, counts[2] / n)
    return RenderResult(cfg.width, cfg.height, status, steps, stats)


def stats_line(lambda_label: str, stats: RenderStats) -> str:
    return (
        f"lambda={lambda_label}"
        f" converged={stats.converged:.6f}"
        f" not_converged={stats.not_converged:.6f}"
        f" degenerate={stats.degenerate:.6f}"
    )


def image_bytes(result: RenderResult) -> bytes:
    """Binary PPM (P6, maxval 255): converged pixels in grayscale fading
    with the step count, not-converged pure red, degenerate pure blue."""
    header = f"P6\n{result.width} {result.height}\n255\n".encode("ascii")
    body = bytearray(3 * result.width * result.height)
    status = result.status
    steps = result.steps
    for i in range(result.width * result.height):
        s = status[i]
        o = 3 * i
        if s == 0:
            k = steps[i] * 16
            if k > 240:
                k = 240
            g = 255 - k
            body[o] = g
            body[o + 1] = g
            body[o + 2] = g
        elif s == 1:
            body[o] = 255
        else:
            body[o + 2] = 255
    return bytes(header + body)


def write_image(result: RenderResult, path) -> None:
    with open(path, "wb") as fh:
        fh.write(image_bytes(result))
