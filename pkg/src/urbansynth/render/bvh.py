"""Median-split bounding volume hierarchy, built in numpy, traversed in numba.

The tree is flattened to struct-of-array form so the compiled kernels can
walk it without objects: internal nodes store child indices, leaves store a
range into a reordered triangle index list.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

LEAF_SIZE = 4


@dataclass(frozen=True)
class TracedWorld:
    """WorldGeometry flattened for the render kernels (triangles + BVH)."""

    p0: np.ndarray      # (m, 3) first vertex
    e1: np.ndarray      # (m, 3) second - first
    e2: np.ndarray      # (m, 3) third - first
    normal: np.ndarray  # (m, 3) unit geometric normal (right-hand winding)
    class_ids: np.ndarray     # (m,) uint8
    material_ids: np.ndarray  # (m,) int32
    materials: np.ndarray     # packed material table
    node_min: np.ndarray
    node_max: np.ndarray
    node_left: np.ndarray
    node_right: np.ndarray
    node_first: np.ndarray
    node_count: np.ndarray
    tri_order: np.ndarray
    bounds_min: np.ndarray
    bounds_max: np.ndarray

    def arrays(self) -> tuple:
        """Argument tuple consumed by every kernel."""
        return (
            self.p0, self.e1, self.e2, self.normal, self.class_ids, self.material_ids,
            self.node_min, self.node_max, self.node_left, self.node_right,
            self.node_first, self.node_count, self.tri_order,
        )


def build_bvh(tri_min: np.ndarray, tri_max: np.ndarray, leaf_size: int = LEAF_SIZE):
    """Balanced median split on the longest centroid axis."""
    m = len(tri_min)
    centroids = 0.5 * (tri_min + tri_max)
    order = np.arange(m, dtype=np.int32)
    mins, maxs, lefts, rights, firsts, counts = [], [], [], [], [], []

    def emit():
        mins.append(None); maxs.append(None)
        lefts.append(-1); rights.append(-1)
        firsts.append(0); counts.append(0)
        return len(mins) - 1

    def rec(lo: int, hi: int) -> int:
        idx = emit()
        seg = order[lo:hi]
        mins[idx] = tri_min[seg].min(axis=0)
        maxs[idx] = tri_max[seg].max(axis=0)
        if hi - lo <= leaf_size:
            firsts[idx] = lo
            counts[idx] = hi - lo
            return idx
        c = centroids[seg]
        axis = int(np.argmax(c.max(axis=0) - c.min(axis=0)))
        order[lo:hi] = seg[np.argsort(c[:, axis], kind="stable")]
        mid = (lo + hi) // 2
        lefts[idx] = rec(lo, mid)
        rights[idx] = rec(mid, hi)
        return idx

    rec(0, m)
    return (
        np.asarray(mins, dtype=np.float64),
        np.asarray(maxs, dtype=np.float64),
        np.asarray(lefts, dtype=np.int32),
        np.asarray(rights, dtype=np.int32),
        np.asarray(firsts, dtype=np.int32),
        np.asarray(counts, dtype=np.int32),
        order,
    )


def prepare_world(geometry) -> TracedWorld:
    """Precompute triangle data and the BVH for a WorldGeometry."""
    v = np.ascontiguousarray(geometry.vertices, dtype=np.float64)
    t = geometry.triangles
    p0 = np.ascontiguousarray(v[t[:, 0]])
    e1 = np.ascontiguousarray(v[t[:, 1]] - p0)
    e2 = np.ascontiguousarray(v[t[:, 2]] - p0)
    n = np.cross(e1, e2)
    n /= np.linalg.norm(n, axis=1, keepdims=True)
    tri_min = np.minimum(np.minimum(v[t[:, 0]], v[t[:, 1]]), v[t[:, 2]])
    tri_max = np.maximum(np.maximum(v[t[:, 0]], v[t[:, 1]]), v[t[:, 2]])
    node_min, node_max, left, right, first, count, order = build_bvh(tri_min, tri_max)
    return TracedWorld(
        p0=p0, e1=e1, e2=e2, normal=np.ascontiguousarray(n),
        class_ids=np.ascontiguousarray(geometry.class_ids),
        material_ids=np.ascontiguousarray(geometry.material_ids),
        materials=np.ascontiguousarray(geometry.materials),
        node_min=node_min, node_max=node_max,
        node_left=left, node_right=right, node_first=first, node_count=count,
        tri_order=order,
        bounds_min=v.min(axis=0), bounds_max=v.max(axis=0),
    )
