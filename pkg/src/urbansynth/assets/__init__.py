from .materials import (
    MASK_CHECKER,
    MASK_OFF,
    MASK_ON,
    TEX_CHECKER,
    TEX_FLAT,
    TEX_NOISE,
    TEX_STRIPES,
    Material,
    pack_materials,
)
from .catalog import (
    AssetCatalog,
    GROUND_MATERIAL,
    Mesh,
    ROAD_MATERIAL,
    WorldGeometry,
    build_asset,
    default_catalog,
    import_mesh,
    instantiate_scene_geometry,
    yaw_matrix,
)
from . import primitives

__all__ = [
    "AssetCatalog",
    "GROUND_MATERIAL",
    "MASK_CHECKER",
    "MASK_OFF",
    "MASK_ON",
    "Material",
    "Mesh",
    "ROAD_MATERIAL",
    "TEX_CHECKER",
    "TEX_FLAT",
    "TEX_NOISE",
    "TEX_STRIPES",
    "WorldGeometry",
    "build_asset",
    "default_catalog",
    "import_mesh",
    "instantiate_scene_geometry",
    "pack_materials",
    "primitives",
    "yaw_matrix",
]
