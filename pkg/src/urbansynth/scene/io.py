"""Scene config files (INI) and plain-text SceneState records.

The SceneState format is versioned and line-oriented so realizations can be
inspected, diffed and replayed. Floats are written with repr(), which
round-trips exactly. Format v1:

    scenestate v1
    seed <int>
    region <min_x> <min_y> <max_x> <max_y>
    roadgrid rows=<r> cols=<c> cell=<size>
    roadrow <i> <0/1 string of length cols>
    dropped <static> <dynamic>
    object static  <category> <asset_index> <scale> <theta> <x> <y>
    object dynamic <category> <asset_index> <scale> <theta> <x> <y> dest=<x>,<y> path=<x>,<y>;...
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .roads import RoadNetwork, manhattan_grid
from .types import CATEGORIES, MarkPriors, PointProcessConfig, Region


@dataclass(frozen=True)
class SceneConfig:
    """Everything sample_scene needs, as parsed from one config file."""

    region: Region
    road_spacing: float
    road_width: float
    road_cell_size: float
    static_cfg: PointProcessConfig
    dynamic_cfg: PointProcessConfig
    priors: MarkPriors
    seed: int
    statics_avoid_roads: bool = True
    path_fraction: float = 0.5

    def build_roads(self) -> RoadNetwork:
        return manhattan_grid(self.region, self.road_spacing, self.road_width, self.road_cell_size)


DEFAULT_CONFIG = """\
[region]
min_x = -40.0
min_y = -40.0
max_x = 40.0
max_y = 40.0

[roads]
spacing = 26.0
width = 7.0
cell_size = 1.0

[static]
intensity = 0.006
max_rejection_rounds = 30
radius_building = 11.0
radius_tree = 4.0
avoid_roads = true

[dynamic]
intensity = 0.004
max_rejection_rounds = 30
radius_vehicle = 5.0
radius_pedestrian = 1.5
path_fraction = 0.5

[marks]
weight_building = 0.40
weight_tree = 0.30
weight_vehicle = 0.18
weight_pedestrian = 0.12
scale_building = 0.8 1.3
scale_tree = 0.7 1.4
scale_vehicle = 0.9 1.1
scale_pedestrian = 0.9 1.1
assets_building = 4
assets_tree = 3
assets_vehicle = 3
assets_pedestrian = 2

[seed]
seed = 1234
"""


def parse_scene_config(text: str) -> SceneConfig:
    cp = configparser.ConfigParser()
    cp.read_string(text)

    reg = cp["region"]
    region = Region(
        (reg.getfloat("min_x"), reg.getfloat("min_y")),
        (reg.getfloat("max_x"), reg.getfloat("max_y")),
    )
    roads = cp["roads"]

    def radii(section) -> dict[str, float]:
        out = {}
        for cat in CATEGORIES:
            key = f"radius_{cat}"
            if key in section:
                out[cat] = section.getfloat(key)
        return out

    st = cp["static"]
    dy = cp["dynamic"]
    static_cfg = PointProcessConfig(
        intensity=st.getfloat("intensity"),
        hard_core_radius=radii(st),
        max_rejection_rounds=st.getint("max_rejection_rounds", 30),
    )
    dynamic_cfg = PointProcessConfig(
        intensity=dy.getfloat("intensity"),
        hard_core_radius=radii(dy),
        max_rejection_rounds=dy.getint("max_rejection_rounds", 30),
    )

    mk = cp["marks"]
    weights, scales, counts = {}, {}, {}
    for cat in CATEGORIES:
        if f"weight_{cat}" in mk:
            weights[cat] = mk.getfloat(f"weight_{cat}")
            lo, hi = mk.get(f"scale_{cat}").split()
            scales[cat] = (float(lo), float(hi))
            counts[cat] = mk.getint(f"assets_{cat}")
    priors = MarkPriors(category_weights=weights, scale_range=scales, asset_counts=counts)

    return SceneConfig(
        region=region,
        road_spacing=roads.getfloat("spacing"),
        road_width=roads.getfloat("width"),
        road_cell_size=roads.getfloat("cell_size", 1.0),
        static_cfg=static_cfg,
        dynamic_cfg=dynamic_cfg,
        priors=priors,
        seed=cp["seed"].getint("seed", 0),
        statics_avoid_roads=st.getboolean("avoid_roads", True),
        path_fraction=dy.getfloat("path_fraction", 0.5),
    )


def load_scene_config(path) -> SceneConfig:
    return parse_scene_config(Path(path).read_text())


def default_scene_config() -> SceneConfig:
    return parse_scene_config(DEFAULT_CONFIG)


# ---------------------------------------------------------------------------
# SceneState text records


def dumps_scene(state) -> str:
    lines = ["scenestate v1", f"seed {state.seed}"]
    r = state.region
    lines.append(f"region {r.min_corner[0]!r} {r.min_corner[1]!r} {r.max_corner[0]!r} {r.max_corner[1]!r}")
    lat = state.roads.lattice
    lines.append(f"roadgrid rows={lat.shape[0]} cols={lat.shape[1]} cell={state.roads.cell_size!r}")
    for i in range(lat.shape[0]):
        lines.append(f"roadrow {i} {''.join('1' if v else '0' for v in lat[i])}")
    lines.append(f"dropped {state.dropped_static} {state.dropped_dynamic}")
    for obj in state.static_objects:
        m = obj.mark
        lines.append(
            f"object static {m.category} {m.asset_index} {m.scale!r} {m.orientation!r} "
            f"{obj.position[0]!r} {obj.position[1]!r}"
        )
    for obj in state.dynamic_objects:
        m = obj.mark
        path = ";".join(f"{p[0]!r},{p[1]!r}" for p in obj.path)
        lines.append(
            f"object dynamic {m.category} {m.asset_index} {m.scale!r} {m.orientation!r} "
            f"{obj.position[0]!r} {obj.position[1]!r} dest={obj.destination[0]!r},{obj.destination[1]!r} "
            f"path={path}"
        )
    return "\n".join(lines) + "\n"


def loads_scene(text: str):
    from .types import Mark, SceneObject, SceneState

    lines = [ln for ln in text.splitlines() if ln.strip()]
    if lines[0] != "scenestate v1":
        raise ValueError(f"unsupported scene record header: {lines[0]!r}")
    seed = int(lines[1].split()[1])
    _, x0, y0, x1, y1 = lines[2].split()
    region = Region((float(x0), float(y0)), (float(x1), float(y1)))
    grid = dict(kv.split("=") for kv in lines[3].split()[1:])
    rows, cols = int(grid["rows"]), int(grid["cols"])
    lattice = np.zeros((rows, cols), dtype=bool)
    idx = 4
    for _ in range(rows):
        _, i, bits = lines[idx].split()
        lattice[int(i)] = np.frombuffer(bits.encode(), dtype=np.uint8) == ord("1")
        idx += 1
    roads = RoadNetwork(region=region, cell_size=float(grid["cell"]), lattice=lattice)
    _, ds, dd = lines[idx].split()
    idx += 1
    statics, dynamics = [], []
    for ln in lines[idx:]:
        parts = ln.split()
        kind, cat = parts[1], parts[2]
        mark = Mark(category=cat, asset_index=int(parts[3]), scale=float(parts[4]), orientation=float(parts[5]))
        pos = (float(parts[6]), float(parts[7]))
        if kind == "static":
            statics.append(SceneObject(position=pos, mark=mark))
        else:
            dest = tuple(float(v) for v in parts[8].split("=")[1].split(","))
            path = tuple(
                tuple(float(v) for v in wp.split(","))
                for wp in parts[9].split("=")[1].split(";")
            )
            dynamics.append(SceneObject(position=pos, mark=mark, destination=dest, path=path))
    return SceneState(
        static_objects=tuple(statics),
        dynamic_objects=tuple(dynamics),
        region=region,
        roads=roads,
        seed=seed,
        dropped_static=int(ds),
        dropped_dynamic=int(dd),
    )


def save_scene(state, path) -> None:
    Path(path).write_text(dumps_scene(state))


def load_scene(path):
    return loads_scene(Path(path).read_text())
