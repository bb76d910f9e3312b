"""Road network as an occupancy lattice, plus A* path planning over it.

The network is a configurable Manhattan grid: road strips of a given width
run along both axes at a given spacing. Cells are square; a cell is road if
its center lies within half a strip width of any strip centerline. Dynamic
objects live on road cells, and paths are shortest 4-connected walks.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .types import Region


@dataclass(frozen=True)
class RoadNetwork:
    """Occupancy grid over the ground region marking road cells.

    lattice[i, j] covers x in [min_x + j*cell, min_x + (j+1)*cell) and the
    matching y slab for i. Adjacency is implicit: road cells are 4-connected.
    """

    region: Region
    cell_size: float
    lattice: np.ndarray  # bool (rows, cols)

    def __post_init__(self):
        if not self.lattice.any():
            raise ValueError("road network has no road cells")
        self.lattice.setflags(write=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.lattice.shape

    def cell_of(self, point) -> tuple[int, int]:
        """Grid cell containing a world point (clipped to the lattice)."""
        rows, cols = self.lattice.shape
        j = int((point[0] - self.region.min_corner[0]) / self.cell_size)
        i = int((point[1] - self.region.min_corner[1]) / self.cell_size)
        return (min(max(i, 0), rows - 1), min(max(j, 0), cols - 1))

    def cell_center(self, cell: tuple[int, int]) -> tuple[float, float]:
        i, j = cell
        return (
            self.region.min_corner[0] + (j + 0.5) * self.cell_size,
            self.region.min_corner[1] + (i + 0.5) * self.cell_size,
        )

    def is_road(self, point) -> bool:
        i, j = self.cell_of(point)
        return bool(self.lattice[i, j])

    def on_road(self, points: np.ndarray) -> np.ndarray:
        """Vectorized road-cell membership for an (n, 2) point array."""
        p = np.atleast_2d(points)
        rows, cols = self.lattice.shape
        j = ((p[:, 0] - self.region.min_corner[0]) / self.cell_size).astype(int)
        i = ((p[:, 1] - self.region.min_corner[1]) / self.cell_size).astype(int)
        inside = (i >= 0) & (i < rows) & (j >= 0) & (j < cols)
        out = np.zeros(len(p), dtype=bool)
        out[inside] = self.lattice[i[inside], j[inside]]
        return out

    def road_cells(self) -> np.ndarray:
        """(n, 2) array of (i, j) indices of all road cells, row-major order."""
        return np.argwhere(self.lattice)

    @property
    def road_area(self) -> float:
        return float(self.lattice.sum()) * self.cell_size**2

    def sample_points(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """n points uniform over the union of road cells."""
        cells = self.road_cells()
        idx = rng.integers(0, len(cells), size=n)
        offsets = rng.random((n, 2))
        ij = cells[idx].astype(float)
        x = self.region.min_corner[0] + (ij[:, 1] + offsets[:, 0]) * self.cell_size
        y = self.region.min_corner[1] + (ij[:, 0] + offsets[:, 1]) * self.cell_size
        return np.column_stack([x, y])


def manhattan_grid(region: Region, spacing: float, width: float, cell_size: float = 1.0) -> RoadNetwork:
    """Road strips along x and y every `spacing` meters, `width` meters wide.

    Strips pass through the region origin-aligned multiples of spacing, so
    the pattern is stable under region resizing.
    """
    if spacing <= 0 or width <= 0 or cell_size <= 0:
        raise ValueError("spacing, width and cell_size must be positive")
    w, h = region.size
    cols = max(int(round(w / cell_size)), 1)
    rows = max(int(round(h / cell_size)), 1)
    xs = region.min_corner[0] + (np.arange(cols) + 0.5) * cell_size
    ys = region.min_corner[1] + (np.arange(rows) + 0.5) * cell_size

    def near_line(coords: np.ndarray) -> np.ndarray:
        # distance from the nearest strip centerline at multiples of spacing
        return np.abs(coords - spacing * np.round(coords / spacing)) <= width / 2.0

    on_x = near_line(ys)[:, None] & np.ones(cols, dtype=bool)[None, :]
    on_y = np.ones(rows, dtype=bool)[:, None] & near_line(xs)[None, :]
    return RoadNetwork(region=region, cell_size=cell_size, lattice=on_x | on_y)


def plan_path(roads: RoadNetwork, start, goal) -> list[tuple[float, float]]:
    """Shortest 4-connected road path from start to goal, as cell centers.

    A* with the Euclidean heuristic (admissible for unit step cost). Returns
    an empty list iff the goal is unreachable; a single waypoint if start and
    goal share a cell.
    """
    s = roads.cell_of(start)
    g = roads.cell_of(goal)
    if not roads.lattice[s] or not roads.lattice[g]:
        raise ValueError("start and goal must lie on road cells")
    if s == g:
        return [roads.cell_center(s)]

    rows, cols = roads.shape

    def h(c):
        return math.hypot(c[0] - g[0], c[1] - g[1])

    g_cost = {s: 0.0}
    came: dict[tuple[int, int], tuple[int, int]] = {}
    counter = 0  # deterministic heap tie-break
    frontier = [(h(s), 0, s)]
    closed = set()
    while frontier:
        _, _, cur = heapq.heappop(frontier)
        if cur == g:
            path = [cur]
            while cur in came:
                cur = came[cur]
                path.append(cur)
            path.reverse()
            return [roads.cell_center(c) for c in path]
        if cur in closed:
            continue
        closed.add(cur)
        ci, cj = cur
        for ni, nj in ((ci - 1, cj), (ci + 1, cj), (ci, cj - 1), (ci, cj + 1)):
            if not (0 <= ni < rows and 0 <= nj < cols) or not roads.lattice[ni, nj]:
                continue
            cand = g_cost[cur] + 1.0
            if cand < g_cost.get((ni, nj), math.inf):
                g_cost[(ni, nj)] = cand
                came[(ni, nj)] = cur
                counter += 1
                heapq.heappush(frontier, (cand + h((ni, nj)), counter, (ni, nj)))
    return []
