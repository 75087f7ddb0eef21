"""Aggregate measurement of one body: widths, diameter, covers, verdicts."""

from __future__ import annotations

from dataclasses import dataclass

from .bodies import Body
from .covering import boundary_centered_cover, covering_bound_report, min_enclosing_cap
from .errors import LunekitError
from .sphere import DEFAULT_TOL, SpherePoint, Tolerance
from .width import diameter, is_constant_diameter, is_constant_width, polar, thickness

__all__ = ["MeasureReport", "measure"]


@dataclass(frozen=True, slots=True)
class MeasureReport:
    thickness: float
    diameter: float
    min_cap_center: SpherePoint
    min_cap_radius: float
    boundary_cover_point: SpherePoint
    boundary_cover_radius: float
    is_constant_width: bool
    width_deviation: float
    is_constant_diameter: bool
    polar_thickness: float | None
    covering_regime: str | None
    covering_bounds: dict
    covering_satisfied: bool | None

    def to_dict(self) -> dict:
        return {
            "thickness": self.thickness,
            "diameter": self.diameter,
            "min_cap_center": [
                self.min_cap_center.x,
                self.min_cap_center.y,
                self.min_cap_center.z,
            ],
            "min_cap_radius": self.min_cap_radius,
            "boundary_cover_point": [
                self.boundary_cover_point.x,
                self.boundary_cover_point.y,
                self.boundary_cover_point.z,
            ],
            "boundary_cover_radius": self.boundary_cover_radius,
            "is_constant_width": self.is_constant_width,
            "width_deviation": self.width_deviation,
            "is_constant_diameter": self.is_constant_diameter,
            "polar_thickness": self.polar_thickness,
            "covering_regime": self.covering_regime,
            "covering_bounds": self.covering_bounds,
            "covering_satisfied": self.covering_satisfied,
        }

    def to_text(self) -> str:
        def fmt(x) -> str:
            if x is None:
                return "n/a"
            return f"{x:.9g}"

        lines = [
            f"thickness              {fmt(self.thickness)}",
            f"diameter               {fmt(self.diameter)}",
            f"min_cap_radius         {fmt(self.min_cap_radius)}",
            f"boundary_cover_radius  {fmt(self.boundary_cover_radius)}",
            f"is_constant_width      {self.is_constant_width}"
            f" (deviation {fmt(self.width_deviation)})",
            f"is_constant_diameter   {self.is_constant_diameter}",
            f"polar_thickness        {fmt(self.polar_thickness)}",
        ]
        if self.covering_regime:
            lines.append(f"covering_regime        {self.covering_regime}")
            for name, val in self.covering_bounds.items():
                lines.append(f"covering_bound[{name}]  {fmt(val)}")
            lines.append(f"covering_satisfied     {self.covering_satisfied}")
        return "\n".join(lines)


def measure(body: Body, tol: Tolerance = DEFAULT_TOL) -> MeasureReport:
    """Full measurement report for one body."""
    t, _ = thickness(body, tol)
    d, _ = diameter(body)
    cover = min_enclosing_cap(body, tol=tol)
    bpoint, bradius = boundary_centered_cover(body, tol=tol)
    cw = is_constant_width(body, t, tol=tol.eps_claim)
    try:
        cd = is_constant_diameter(body, d, tol=tol.eps_claim).passed
    except LunekitError:
        cd = False
    try:
        pt, _ = thickness(polar(body), tol)
    except LunekitError:
        pt = None
    regime = None
    bounds: dict = {}
    satisfied = None
    try:
        rep = covering_bound_report(body, tol)
        regime, bounds, satisfied = rep.regime, rep.bounds, rep.satisfied
    except LunekitError:
        pass
    return MeasureReport(
        thickness=t,
        diameter=d,
        min_cap_center=cover.center,
        min_cap_radius=cover.radius,
        boundary_cover_point=bpoint,
        boundary_cover_radius=bradius,
        is_constant_width=cw.passed,
        width_deviation=cw.max_deviation,
        is_constant_diameter=cd,
        polar_thickness=pt,
        covering_regime=regime,
        covering_bounds=bounds,
        covering_satisfied=satisfied,
    )
