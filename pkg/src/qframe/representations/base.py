"""Common bundle type for concrete phase-space representations."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..frames import (
    DualFrame,
    EffectFunction,
    Frame,
    QuasiDistribution,
    reconstruct_state,
    represent_effect,
    represent_state,
)
from ..geometry import PhaseSpaceGeometry

__all__ = ["Representation", "striation_pvms"]


@dataclass(frozen=True, eq=False)
class Representation:
    """A frame/dual pair with its phase-space bookkeeping.

    ``represent`` maps states to quasi-probabilities over the frame labels,
    ``effect`` maps effects through the dual side, and ``reconstruct``
    resynthesizes operators from values.
    """

    name: str
    dim: int
    frame: Frame
    dual: DualFrame
    geometry: PhaseSpaceGeometry | None = None
    meta: dict = field(default_factory=dict)

    @property
    def labels(self) -> tuple:
        return self.frame.labels

    def represent(self, rho: np.ndarray) -> QuasiDistribution:
        return represent_state(rho, self.frame, name=self.name)

    def effect(self, E: np.ndarray) -> EffectFunction:
        return represent_effect(E, self.dual, name=self.name)

    def reconstruct(self, dist: QuasiDistribution) -> np.ndarray:
        return reconstruct_state(dist, self.dual)


def striation_pvms(rep: Representation) -> list[list[np.ndarray]]:
    """Line-sum operators per striation, ``P(lam) = sum_{alpha in lam} F(alpha)``.

    For the lattice representations whose frame elements are phase-point
    operators over d these are rank-1 projective measurements.
    """
    if rep.geometry is None or not rep.geometry.striations:
        raise ValueError(f"representation {rep.name!r} has no striations")
    index = {pt: i for i, pt in enumerate(rep.frame.labels)}
    out = []
    for lines in rep.geometry.striations:
        pvm = []
        for li in lines:
            ops = [rep.frame.operators[index[pt]] for pt in rep.geometry.lines[li]]
            pvm.append(np.sum(ops, axis=0))
        out.append(pvm)
    return out
