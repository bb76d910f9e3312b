"""Materials with procedural textures and binary specular masks.

Textures are evaluated at shade time from the world-space hit point, so no
image assets are needed. The specular mask is the binary map that activates
the glossy shader on top of the diffuse one (checker masks make building
windows); it multiplies the Cook-Torrance term and is ignored by the
path tracer, which is diffuse-only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# texture kinds
TEX_FLAT = 0
TEX_CHECKER = 1
TEX_STRIPES = 2   # horizontal bands along z (building floors)
TEX_NOISE = 3     # 3-d value noise blend between the two albedos

# specular mask kinds
MASK_OFF = 0
MASK_ON = 1
MASK_CHECKER = 2


@dataclass(frozen=True)
class Material:
    diffuse_albedo: tuple[float, float, float]
    specular_coefficient: float = 0.0
    roughness: float = 0.5
    albedo2: tuple[float, float, float] | None = None
    texture: int = TEX_FLAT
    texture_scale: float = 1.0
    specular_mask: int = MASK_ON
    mask_scale: float = 1.0

    def __post_init__(self):
        if any(c < 0.0 or c > 1.0 for c in self.diffuse_albedo):
            raise ValueError(f"albedo out of [0,1]: {self.diffuse_albedo}")
        if not (0.0 <= self.specular_coefficient <= 1.0):
            raise ValueError("specular coefficient out of [0,1]")
        if not (0.0 < self.roughness <= 1.0):
            raise ValueError("roughness out of (0,1]")


def pack_materials(materials: list[Material]) -> np.ndarray:
    """Flatten materials into the (n, 12) float64 table the kernels consume.

    Columns: albedo rgb, albedo2 rgb, specular, roughness, texture kind,
    texture scale, mask kind, mask scale.
    """
    out = np.zeros((len(materials), 12), dtype=np.float64)
    for i, m in enumerate(materials):
        a2 = m.albedo2 if m.albedo2 is not None else m.diffuse_albedo
        out[i, 0:3] = m.diffuse_albedo
        out[i, 3:6] = a2
        out[i, 6] = m.specular_coefficient
        out[i, 7] = m.roughness
        out[i, 8] = float(m.texture)
        out[i, 9] = m.texture_scale
        out[i, 10] = float(m.specular_mask)
        out[i, 11] = m.mask_scale
    return out
