"""Domain types for the marked-point-process scene model.

A scene realization is two point processes sampled over a bounded ground
region: a static process (buildings, trees) on the full region and a dynamic
process (pedestrians, vehicles) restricted to the road network. Each point
carries a mark: (category, asset index, scale, orientation). All types are
frozen after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

STATIC_CATEGORIES = ("building", "tree")
DYNAMIC_CATEGORIES = ("pedestrian", "vehicle")
CATEGORIES = STATIC_CATEGORIES + DYNAMIC_CATEGORIES


@dataclass(frozen=True)
class Region:
    """Axis-aligned bounded region of the ground plane, in meters."""

    min_corner: tuple[float, float]
    max_corner: tuple[float, float]

    def __post_init__(self):
        if not (self.max_corner[0] > self.min_corner[0] and self.max_corner[1] > self.min_corner[1]):
            raise ValueError(f"degenerate region {self.min_corner}..{self.max_corner}")

    @property
    def size(self) -> tuple[float, float]:
        return (self.max_corner[0] - self.min_corner[0], self.max_corner[1] - self.min_corner[1])

    @property
    def area(self) -> float:
        w, h = self.size
        return w * h

    def contains(self, points: np.ndarray) -> np.ndarray:
        """Vectorized membership test for an (n, 2) array of points."""
        p = np.atleast_2d(points)
        return (
            (p[:, 0] >= self.min_corner[0])
            & (p[:, 0] <= self.max_corner[0])
            & (p[:, 1] >= self.min_corner[1])
            & (p[:, 1] <= self.max_corner[1])
        )


@dataclass(frozen=True)
class PointProcessConfig:
    """Homogeneous Poisson prior plus hard-core repulsion settings.

    intensity is the expected number of objects per square meter of the
    bounded space. hard_core_radius maps each category to its exclusion
    radius; the minimum allowed distance between two objects is the mean of
    their two category radii. Points that still conflict after
    max_rejection_rounds fresh draws are dropped (and counted).
    """

    intensity: float
    hard_core_radius: dict[str, float] = field(default_factory=dict)
    max_rejection_rounds: int = 30

    def __post_init__(self):
        if not np.isfinite(self.intensity) or self.intensity < 0:
            raise ValueError(f"intensity must be finite and >= 0, got {self.intensity}")
        if self.max_rejection_rounds < 1:
            raise ValueError("max_rejection_rounds must be positive")
        for cat, r in self.hard_core_radius.items():
            if r < 0:
                raise ValueError(f"negative hard-core radius for {cat!r}")

    def pair_distance(self, cat_a: str, cat_b: str) -> float:
        ra = self.hard_core_radius.get(cat_a, 0.0)
        rb = self.hard_core_radius.get(cat_b, 0.0)
        return 0.5 * (ra + rb)


@dataclass(frozen=True)
class MarkPriors:
    """Factored prior over marks: category, asset index, scale, orientation.

    category_weights must sum to 1. scale_range maps category -> (lo, hi)
    for the uniform scale multiplier; orientation is uniform on
    orientation_range (default the full circle). asset_counts bounds the
    uniform asset index per category.
    """

    category_weights: dict[str, float]
    scale_range: dict[str, tuple[float, float]]
    asset_counts: dict[str, int]
    orientation_range: tuple[float, float] = (0.0, 2.0 * np.pi)

    def __post_init__(self):
        total = sum(self.category_weights.values())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"category weights sum to {total}, expected 1")
        for cat, (lo, hi) in self.scale_range.items():
            if lo <= 0 or hi < lo:
                raise ValueError(f"bad scale range for {cat!r}: ({lo}, {hi})")

    def restricted_to(self, categories: tuple[str, ...]) -> "MarkPriors":
        """Renormalized prior over the given category subset."""
        w = {c: self.category_weights.get(c, 0.0) for c in categories}
        total = sum(w.values())
        if total <= 0:
            raise ValueError(f"no prior mass on categories {categories}")
        return MarkPriors(
            category_weights={c: v / total for c, v in w.items()},
            scale_range=self.scale_range,
            asset_counts=self.asset_counts,
            orientation_range=self.orientation_range,
        )


@dataclass(frozen=True)
class Mark:
    """Per-object attributes drawn from the mark space."""

    category: str
    asset_index: int
    scale: float
    orientation: float


@dataclass(frozen=True)
class SceneObject:
    """A point of the process together with its mark.

    Dynamic objects additionally carry a destination and the planned
    road-grid path (cell-center waypoints) from birth cell to destination;
    static objects have neither.
    """

    position: tuple[float, float]
    mark: Mark
    destination: tuple[float, float] | None = None
    path: tuple[tuple[float, float], ...] | None = None

    @property
    def is_dynamic(self) -> bool:
        return self.destination is not None


@dataclass(frozen=True)
class SceneState:
    """A complete sampled realization; the input to geometry instantiation.

    Identical (configs, seed) reproduce an identical SceneState bit for bit.
    drop counts record objects discarded by hard-core rejection.
    """

    static_objects: tuple[SceneObject, ...]
    dynamic_objects: tuple[SceneObject, ...]
    region: Region
    roads: "RoadNetwork"
    seed: int
    dropped_static: int = 0
    dropped_dynamic: int = 0

    @property
    def n_static(self) -> int:
        return len(self.static_objects)

    @property
    def n_dynamic(self) -> int:
        return len(self.dynamic_objects)
