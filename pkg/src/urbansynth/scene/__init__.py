from .types import (
    CATEGORIES,
    DYNAMIC_CATEGORIES,
    STATIC_CATEGORIES,
    Mark,
    MarkPriors,
    PointProcessConfig,
    Region,
    SceneObject,
    SceneState,
)
from .roads import RoadNetwork, manhattan_grid, plan_path
from .sampling import (
    apply_repulsion,
    min_pair_separation,
    sample_count,
    sample_locations,
    sample_marks,
    sample_scene,
)
from .io import (
    DEFAULT_CONFIG,
    SceneConfig,
    default_scene_config,
    dumps_scene,
    load_scene,
    load_scene_config,
    loads_scene,
    parse_scene_config,
    save_scene,
)

__all__ = [
    "CATEGORIES",
    "DYNAMIC_CATEGORIES",
    "STATIC_CATEGORIES",
    "Mark",
    "MarkPriors",
    "PointProcessConfig",
    "Region",
    "RoadNetwork",
    "SceneConfig",
    "SceneObject",
    "SceneState",
    "DEFAULT_CONFIG",
    "apply_repulsion",
    "default_scene_config",
    "dumps_scene",
    "load_scene",
    "load_scene_config",
    "loads_scene",
    "manhattan_grid",
    "min_pair_separation",
    "parse_scene_config",
    "plan_path",
    "sample_count",
    "sample_locations",
    "sample_marks",
    "sample_scene",
    "save_scene",
]
