"""Procedural asset catalog and scene geometry instantiation.

Assets stand in for downloaded CAD repositories: each (category, index)
deterministically yields a parametric mesh and material, with per-index
variation derived from a hashed stream so the library stays self-contained.
Buildings are textured boxes, trees a cone on a cylinder, vehicles two
stacked boxes, pedestrians a capsule.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .. import palette, rng as rngmod
from ..scene.types import SceneState
from . import primitives as prim
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

CATEGORY_CLASS = {
    "building": palette.BUILDING,
    "tree": palette.TREES,
    "vehicle": palette.VEHICLES,
    "pedestrian": palette.PEDESTRIAN,
}

MIN_TRIANGLE_AREA = 1e-12


@dataclass(frozen=True)
class Mesh:
    vertices: np.ndarray   # (n, 3) float64
    triangles: np.ndarray  # (m, 3) int32
    class_ids: np.ndarray  # (m,) uint8

    def __post_init__(self):
        if self.triangles.size and self.triangles.max() >= len(self.vertices):
            raise ValueError("triangle index out of range")
        areas = prim.triangle_areas(self.vertices, self.triangles)
        if np.any(areas <= MIN_TRIANGLE_AREA):
            raise ValueError("degenerate triangle in mesh")


def _make_mesh(verts, tris, class_id) -> Mesh:
    return Mesh(
        vertices=np.asarray(verts, dtype=np.float64),
        triangles=np.asarray(tris, dtype=np.int32),
        class_ids=np.full(len(tris), class_id, dtype=np.uint8),
    )


def _merge(parts):
    verts, tris = [], []
    offset = 0
    for v, t in parts:
        verts.append(v)
        tris.append(t + offset)
        offset += len(v)
    return np.vstack(verts), np.vstack(tris)


def _params(category: str, index: int) -> np.random.Generator:
    # deterministic per-asset variation; not tied to any scene seed
    return rngmod.stream(0, f"asset.{category}.{index}")


def build_asset(category: str, asset_index: int, scale: float = 1.0) -> tuple[Mesh, Material]:
    """Deterministic procedural asset for (category, index), scaled by `scale`."""
    if category == "building":
        g = _params(category, asset_index)
        w = g.uniform(8.0, 16.0)
        d = g.uniform(8.0, 16.0)
        h = g.uniform(10.0, 28.0)
        v, t = prim.box(w, d, h)
        facade = tuple(g.uniform(0.35, 0.75, size=3))
        trim = tuple(np.clip(np.array(facade) * g.uniform(0.5, 0.8), 0.0, 1.0))
        mat = Material(
            diffuse_albedo=facade,
            albedo2=trim,
            texture=TEX_STRIPES if asset_index % 2 == 0 else TEX_CHECKER,
            texture_scale=g.uniform(2.5, 4.0),
            specular_coefficient=0.35,
            roughness=0.25,
            specular_mask=MASK_CHECKER,
            mask_scale=g.uniform(2.0, 3.5),
        )
    elif category == "tree":
        g = _params(category, asset_index)
        trunk_r = g.uniform(0.15, 0.35)
        trunk_h = g.uniform(1.5, 3.0)
        crown_r = g.uniform(1.2, 2.6)
        crown_h = g.uniform(2.5, 5.0)
        v, t = _merge([
            prim.cylinder(trunk_r, trunk_h, segments=8),
            prim.cone(crown_r, crown_h, base_z=trunk_h, segments=10),
        ])
        green = (g.uniform(0.05, 0.15), g.uniform(0.3, 0.5), g.uniform(0.05, 0.15))
        dark = tuple(c * 0.5 for c in green)
        mat = Material(diffuse_albedo=green, albedo2=dark, texture=TEX_NOISE,
                       texture_scale=0.8, specular_coefficient=0.0, specular_mask=MASK_OFF)
    elif category == "vehicle":
        g = _params(category, asset_index)
        length = g.uniform(3.8, 4.8)
        width = g.uniform(1.7, 1.95)
        body_h = g.uniform(1.0, 1.3)
        cabin_h = g.uniform(0.5, 0.7)
        body = prim.box(length, width, body_h, base_z=0.25)
        cabin = prim.box(length * 0.55, width * 0.9, cabin_h, base_z=0.25 + body_h)
        v, t = _merge([body, cabin])
        color = tuple(g.uniform(0.1, 0.8, size=3))
        mat = Material(diffuse_albedo=color, specular_coefficient=0.6, roughness=0.15,
                       texture=TEX_FLAT, specular_mask=MASK_ON)
    elif category == "pedestrian":
        g = _params(category, asset_index)
        height = g.uniform(1.55, 1.9)
        radius = g.uniform(0.2, 0.28)
        v, t = prim.capsule(radius, height)
        color = tuple(g.uniform(0.1, 0.7, size=3))
        dark = tuple(c * 0.6 for c in color)
        mat = Material(diffuse_albedo=color, albedo2=dark, texture=TEX_NOISE,
                       texture_scale=0.4, specular_coefficient=0.0, specular_mask=MASK_OFF)
    else:
        raise ValueError(f"unknown category {category!r}")
    return _make_mesh(v * scale, t, CATEGORY_CLASS[category]), mat


GROUND_MATERIAL = Material(
    diffuse_albedo=(0.30, 0.34, 0.22), albedo2=(0.22, 0.25, 0.16),
    texture=TEX_NOISE, texture_scale=3.0, specular_coefficient=0.0, specular_mask=MASK_OFF,
)
ROAD_MATERIAL = Material(
    diffuse_albedo=(0.16, 0.16, 0.17), albedo2=(0.12, 0.12, 0.13),
    texture=TEX_NOISE, texture_scale=1.5, specular_coefficient=0.08, roughness=0.4,
    specular_mask=MASK_ON,
)

ROAD_LIFT = 0.02  # road quads float this far above the ground plane


@dataclass(frozen=True)
class AssetCatalog:
    """Immutable per-category asset collection, resolvable by Mark indices."""

    counts: dict[str, int]
    imported: dict[tuple[str, int], tuple[Mesh, Material]] | None = None

    def asset(self, category: str, index: int, scale: float = 1.0) -> tuple[Mesh, Material]:
        if category not in self.counts or not (0 <= index < self.counts[category]):
            raise KeyError(f"unresolvable asset {category}[{index}]")
        if self.imported and (category, index) in self.imported:
            mesh, mat = self.imported[(category, index)]
            return Mesh(mesh.vertices * scale, mesh.triangles, mesh.class_ids), mat
        return build_asset(category, index, scale)


def default_catalog(priors=None) -> AssetCatalog:
    counts = dict(priors.asset_counts) if priors is not None else {
        "building": 4, "tree": 3, "vehicle": 3, "pedestrian": 2
    }
    return AssetCatalog(counts=counts)


def yaw_matrix(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


@dataclass(frozen=True)
class WorldGeometry:
    """Flattened triangle soup for the renderer, one semantic id per triangle."""

    vertices: np.ndarray    # (n, 3) float64
    triangles: np.ndarray   # (m, 3) int32
    class_ids: np.ndarray   # (m,) uint8
    material_ids: np.ndarray  # (m,) int32
    materials: np.ndarray   # packed table, see pack_materials

    @property
    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        return self.vertices.min(axis=0), self.vertices.max(axis=0)


def _road_quads(roads) -> list[tuple[np.ndarray, np.ndarray]]:
    """Row-merged road rectangles, slightly lifted above the ground plane."""
    quads = []
    lat = roads.lattice
    x0 = roads.region.min_corner[0]
    y0 = roads.region.min_corner[1]
    cs = roads.cell_size
    for i in range(lat.shape[0]):
        j = 0
        while j < lat.shape[1]:
            if lat[i, j]:
                j2 = j
                while j2 + 1 < lat.shape[1] and lat[i, j2 + 1]:
                    j2 += 1
                xa, xb = x0 + j * cs, x0 + (j2 + 1) * cs
                ya, yb = y0 + i * cs, y0 + (i + 1) * cs
                quads.append(prim.quad(
                    (xa, ya, ROAD_LIFT), (xb, ya, ROAD_LIFT),
                    (xb, yb, ROAD_LIFT), (xa, yb, ROAD_LIFT),
                ))
                j = j2 + 1
            else:
                j += 1
    return quads


def instantiate_scene_geometry(scene: SceneState, catalog: AssetCatalog) -> WorldGeometry:
    """Ground + roads + one transformed asset instance per scene object."""
    verts_parts: list[np.ndarray] = []
    tri_parts: list[np.ndarray] = []
    class_parts: list[np.ndarray] = []
    mat_id_parts: list[np.ndarray] = []
    materials: list[Material] = []

    def add(verts, tris, class_ids, material):
        offset = sum(len(v) for v in verts_parts)
        verts_parts.append(verts)
        tri_parts.append(tris + offset)
        class_parts.append(class_ids)
        mat_id_parts.append(np.full(len(tris), len(materials), dtype=np.int32))
        materials.append(material)

    r = scene.region
    gv, gt = prim.quad(
        (r.min_corner[0], r.min_corner[1], 0.0), (r.max_corner[0], r.min_corner[1], 0.0),
        (r.max_corner[0], r.max_corner[1], 0.0), (r.min_corner[0], r.max_corner[1], 0.0),
    )
    add(gv, gt, np.full(len(gt), palette.GROUND, dtype=np.uint8), GROUND_MATERIAL)

    road_parts = _road_quads(scene.roads)
    if road_parts:
        rv, rt = _merge(road_parts)
        add(rv, rt, np.full(len(rt), palette.GROUND, dtype=np.uint8), ROAD_MATERIAL)

    for obj in scene.static_objects + scene.dynamic_objects:
        m = obj.mark
        try:
            mesh, mat = catalog.asset(m.category, m.asset_index, m.scale)
        except KeyError as exc:
            raise KeyError(f"object at {obj.position} has {exc.args[0]}") from exc
        rot = yaw_matrix(m.orientation)
        v = mesh.vertices @ rot.T
        v[:, 0] += obj.position[0]
        v[:, 1] += obj.position[1]
        add(v, mesh.triangles, mesh.class_ids, mat)

    return WorldGeometry(
        vertices=np.vstack(verts_parts),
        triangles=np.vstack(tri_parts),
        class_ids=np.concatenate(class_parts),
        material_ids=np.concatenate(mat_id_parts),
        materials=pack_materials(materials),
    )


def import_mesh(path, class_id: int) -> Mesh:
    """Load a plain-text v/f triangle mesh (OBJ subset; fans triangulated)."""
    verts: list[tuple[float, float, float]] = []
    tris: list[tuple[int, int, int]] = []
    for line in Path(path).read_text().splitlines():
        parts = line.split()
        if not parts or parts[0] not in ("v", "f"):
            continue
        if parts[0] == "v":
            verts.append((float(parts[1]), float(parts[2]), float(parts[3])))
        else:
            idx = [int(p.split("/")[0]) for p in parts[1:]]
            idx = [i - 1 if i > 0 else len(verts) + i for i in idx]
            for k in range(1, len(idx) - 1):
                tris.append((idx[0], idx[k], idx[k + 1]))
    return _make_mesh(np.array(verts), np.array(tris, dtype=np.int32), class_id)
