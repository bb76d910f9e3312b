"""Pinhole camera."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

WORLD_UP = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True)
class Camera:
    position: tuple[float, float, float]
    look_at: tuple[float, float, float]
    vertical_fov: float  # radians
    resolution: tuple[int, int]  # (width, height)

    def __post_init__(self):
        if not (0.0 < self.vertical_fov < np.pi):
            raise ValueError(f"vertical fov out of (0, pi): {self.vertical_fov}")
        w, h = self.resolution
        if w < 1 or h < 1:
            raise ValueError(f"resolution must be positive, got {self.resolution}")
        fwd = np.asarray(self.look_at, float) - np.asarray(self.position, float)
        if np.linalg.norm(fwd) < 1e-12:
            raise ValueError("camera position and look_at coincide")
        if np.linalg.norm(np.cross(fwd, WORLD_UP)) < 1e-9:
            raise ValueError("camera looks along the world up axis; no defined roll")

    def basis(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        fwd = np.asarray(self.look_at, float) - np.asarray(self.position, float)
        fwd /= np.linalg.norm(fwd)
        right = np.cross(fwd, WORLD_UP)
        right /= np.linalg.norm(right)
        up = np.cross(right, fwd)
        return right, up, fwd

    def packed(self) -> np.ndarray:
        """Flat [pos, right, up, fwd, tan(vfov/2), aspect] array for kernels."""
        right, up, fwd = self.basis()
        w, h = self.resolution
        out = np.empty(14, dtype=np.float64)
        out[0:3] = self.position
        out[3:6] = right
        out[6:9] = up
        out[9:12] = fwd
        out[12] = np.tan(self.vertical_fov / 2.0)
        out[13] = w / h
        return out
