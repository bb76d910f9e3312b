"""Sampling a scene realization from the two marked Poisson processes.

The prior factors as (point process) x (mark process): counts are Poisson
with mean intensity * area, locations are uniform conditional on the count,
and marks are independent of locations and of each other. Repulsion between
objects is a hard-core Gibbs potential (infinite energy inside the exclusion
radius, zero outside), which is exactly samplable by dart throwing: conflict
points are re-drawn up to a bounded number of rounds and dropped afterwards.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .. import rng as rngmod
from .roads import RoadNetwork, plan_path
from .types import (
    DYNAMIC_CATEGORIES,
    STATIC_CATEGORIES,
    Mark,
    MarkPriors,
    PointProcessConfig,
    Region,
    SceneObject,
    SceneState,
)


def sample_count(config: PointProcessConfig, area: float, rng: np.random.Generator) -> int:
    """Poisson draw of the object count for a bounded space of given area."""
    mean = config.intensity * area
    if mean == 0.0:
        return 0
    return int(rng.poisson(mean))


def sample_locations(n: int, region: Region, rng: np.random.Generator) -> np.ndarray:
    """n i.i.d. uniform points on the region, shape (n, 2)."""
    lo = np.asarray(region.min_corner, dtype=float)
    hi = np.asarray(region.max_corner, dtype=float)
    return lo + rng.random((n, 2)) * (hi - lo)


def sample_marks(n: int, priors: MarkPriors, rng: np.random.Generator) -> list[Mark]:
    """n marks from the factored prior; every component drawn independently."""
    cats = sorted(priors.category_weights)
    weights = np.array([priors.category_weights[c] for c in cats])
    cat_idx = rng.choice(len(cats), size=n, p=weights)
    lo, hi = priors.orientation_range
    orientations = lo + rng.random(n) * (hi - lo)
    marks = []
    for k in range(n):
        cat = cats[cat_idx[k]]
        s_lo, s_hi = priors.scale_range[cat]
        marks.append(
            Mark(
                category=cat,
                asset_index=int(rng.integers(0, priors.asset_counts[cat])),
                scale=float(s_lo + rng.random() * (s_hi - s_lo)),
                orientation=float(orientations[k]),
            )
        )
    return marks


def apply_repulsion(
    objects: list[SceneObject],
    config: PointProcessConfig,
    rng: np.random.Generator,
    resample: Callable[[np.random.Generator], tuple[float, float]],
    keep_out: Callable[[tuple[float, float]], bool] | None = None,
) -> tuple[list[SceneObject], int]:
    """Enforce pairwise hard-core distances by dart-throwing rejection.

    Objects are processed in order; a conflicting position is re-drawn from
    `resample` at most config.max_rejection_rounds times, then the object is
    dropped. `keep_out` optionally rejects positions outright (used to keep
    static objects off road cells). Returns (accepted objects, drop count).
    """
    accepted: list[SceneObject] = []
    acc_pos = np.empty((0, 2))
    acc_rad = np.empty((0,))
    dropped = 0
    for obj in objects:
        radius = config.hard_core_radius.get(obj.mark.category, 0.0)
        pos = obj.position
        placed = False
        for attempt in range(config.max_rejection_rounds + 1):
            ok = keep_out is None or not keep_out(pos)
            if ok and len(accepted):
                d = np.hypot(acc_pos[:, 0] - pos[0], acc_pos[:, 1] - pos[1])
                ok = bool(np.all(d >= 0.5 * (acc_rad + radius)))
            if ok:
                placed = True
                break
            if attempt == config.max_rejection_rounds:
                break
            pos = resample(rng)
        if placed:
            accepted.append(obj if pos is obj.position else _moved(obj, pos))
            acc_pos = np.vstack([acc_pos, [pos]])
            acc_rad = np.append(acc_rad, radius)
        else:
            dropped += 1
    return accepted, dropped


def _moved(obj: SceneObject, pos) -> SceneObject:
    return SceneObject(position=(float(pos[0]), float(pos[1])), mark=obj.mark,
                       destination=obj.destination, path=obj.path)


def sample_scene(
    static_cfg: PointProcessConfig,
    dynamic_cfg: PointProcessConfig,
    priors: MarkPriors,
    region: Region,
    roads: RoadNetwork,
    seed: int,
    statics_avoid_roads: bool = True,
    path_fraction: float = 0.5,
) -> SceneState:
    """One scene realization: both processes, repulsion, paths; pure in seed.

    The static process lives on the ground region (by default re-drawn off
    road cells), the dynamic process on the road network. Each dynamic object
    gets a destination uniform over road cells and is placed at the waypoint
    a configured fraction along its planned path.
    """
    # static process
    r = rngmod.stream(seed, "static.count")
    n_s = sample_count(static_cfg, region.area, r)
    locs = sample_locations(n_s, region, rngmod.stream(seed, "static.loc"))
    marks = sample_marks(n_s, priors.restricted_to(STATIC_CATEGORIES), rngmod.stream(seed, "static.marks")) if n_s else []
    statics = [SceneObject(position=(float(p[0]), float(p[1])), mark=m) for p, m in zip(locs, marks)]

    def redraw_static(gen: np.random.Generator) -> tuple[float, float]:
        p = sample_locations(1, region, gen)[0]
        return (float(p[0]), float(p[1]))

    keep_out = roads.is_road if statics_avoid_roads else None
    statics, dropped_s = apply_repulsion(
        statics, static_cfg, rngmod.stream(seed, "static.repulsion"), redraw_static, keep_out
    )

    # dynamic process, restricted to road cells
    n_d = sample_count(dynamic_cfg, roads.road_area, rngmod.stream(seed, "dynamic.count"))
    d_locs = roads.sample_points(n_d, rngmod.stream(seed, "dynamic.loc")) if n_d else np.empty((0, 2))
    d_marks = sample_marks(n_d, priors.restricted_to(DYNAMIC_CATEGORIES), rngmod.stream(seed, "dynamic.marks")) if n_d else []
    dynamics = [SceneObject(position=(float(p[0]), float(p[1])), mark=m) for p, m in zip(d_locs, d_marks)]

    def redraw_dynamic(gen: np.random.Generator) -> tuple[float, float]:
        p = roads.sample_points(1, gen)[0]
        return (float(p[0]), float(p[1]))

    dynamics, dropped_d = apply_repulsion(
        dynamics, dynamic_cfg, rngmod.stream(seed, "dynamic.repulsion"), redraw_dynamic
    )

    # destinations and single-time-sample placement along the planned path
    dest_rng = rngmod.stream(seed, "dynamic.dest")
    cells = roads.road_cells()
    placed_dynamics = []
    for obj in dynamics:
        dest_cell = cells[int(dest_rng.integers(0, len(cells)))]
        dest = roads.cell_center((int(dest_cell[0]), int(dest_cell[1])))
        path = plan_path(roads, obj.position, dest)
        if not path:
            path = [roads.cell_center(roads.cell_of(obj.position))]
        k = int(round(path_fraction * (len(path) - 1)))
        k = min(max(k, 0), len(path) - 1)
        placed_dynamics.append(
            SceneObject(position=path[k], mark=obj.mark, destination=dest, path=tuple(path))
        )

    return SceneState(
        static_objects=tuple(statics),
        dynamic_objects=tuple(placed_dynamics),
        region=region,
        roads=roads,
        seed=seed,
        dropped_static=dropped_s,
        dropped_dynamic=dropped_d,
    )


def min_pair_separation(objects, config: PointProcessConfig) -> float:
    """min over pairs of (distance - pair hard-core distance); >= 0 when valid."""
    worst = math.inf
    for a in range(len(objects)):
        pa = objects[a].position
        for b in range(a + 1, len(objects)):
            pb = objects[b].position
            d = math.hypot(pa[0] - pb[0], pa[1] - pb[1])
            worst = min(worst, d - config.pair_distance(objects[a].mark.category, objects[b].mark.category))
    return worst
