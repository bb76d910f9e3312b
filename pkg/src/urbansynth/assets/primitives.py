"""Procedural triangle-mesh primitives (z-up, meters).

All builders return (vertices, triangles) with counter-clockwise winding
seen from outside, so geometric normals point outward for closed shapes.
"""

from __future__ import annotations

import numpy as np


def _mesh(verts, tris):
    return np.asarray(verts, dtype=np.float64), np.asarray(tris, dtype=np.int32)


def box(size_x: float, size_y: float, size_z: float, base_z: float = 0.0):
    """Axis-aligned box, footprint centered on the origin, base at base_z."""
    hx, hy = size_x / 2.0, size_y / 2.0
    z0, z1 = base_z, base_z + size_z
    v = [
        (-hx, -hy, z0), (hx, -hy, z0), (hx, hy, z0), (-hx, hy, z0),
        (-hx, -hy, z1), (hx, -hy, z1), (hx, hy, z1), (-hx, hy, z1),
    ]
    t = [
        (0, 2, 1), (0, 3, 2),  # bottom (normal -z)
        (4, 5, 6), (4, 6, 7),  # top (+z)
        (0, 1, 5), (0, 5, 4),  # -y side
        (2, 3, 7), (2, 7, 6),  # +y side
        (1, 2, 6), (1, 6, 5),  # +x side
        (3, 0, 4), (3, 4, 7),  # -x side
    ]
    return _mesh(v, t)


def cylinder(radius: float, height: float, base_z: float = 0.0, segments: int = 12):
    """Closed cylinder along +z."""
    ang = 2.0 * np.pi * np.arange(segments) / segments
    ring = np.column_stack([radius * np.cos(ang), radius * np.sin(ang)])
    verts = [(x, y, base_z) for x, y in ring] + [(x, y, base_z + height) for x, y in ring]
    verts += [(0.0, 0.0, base_z), (0.0, 0.0, base_z + height)]
    cb, ct = 2 * segments, 2 * segments + 1
    tris = []
    for i in range(segments):
        j = (i + 1) % segments
        tris += [(i, j, segments + j), (i, segments + j, segments + i)]
        tris += [(cb, j, i), (ct, segments + i, segments + j)]
    return _mesh(verts, tris)


def cone(radius: float, height: float, base_z: float = 0.0, segments: int = 12):
    """Closed cone along +z, apex at base_z + height."""
    ang = 2.0 * np.pi * np.arange(segments) / segments
    verts = [(radius * np.cos(a), radius * np.sin(a), base_z) for a in ang]
    verts += [(0.0, 0.0, base_z + height), (0.0, 0.0, base_z)]
    apex, cb = segments, segments + 1
    tris = []
    for i in range(segments):
        j = (i + 1) % segments
        tris += [(i, j, apex), (cb, j, i)]
    return _mesh(verts, tris)


def uv_sphere(radius: float, center=(0.0, 0.0, 0.0), segments: int = 16, rings: int = 12):
    """Standard latitude/longitude sphere."""
    cx, cy, cz = center
    verts = [(cx, cy, cz + radius)]
    for r in range(1, rings):
        phi = np.pi * r / rings
        z = radius * np.cos(phi)
        s = radius * np.sin(phi)
        for k in range(segments):
            th = 2.0 * np.pi * k / segments
            verts.append((cx + s * np.cos(th), cy + s * np.sin(th), cz + z))
    verts.append((cx, cy, cz - radius))
    bottom = len(verts) - 1
    tris = []
    for k in range(segments):
        j = (k + 1) % segments
        tris.append((0, 1 + k, 1 + j))
    for r in range(rings - 2):
        a = 1 + r * segments
        b = a + segments
        for k in range(segments):
            j = (k + 1) % segments
            tris += [(a + k, b + k, b + j), (a + k, b + j, a + j)]
    a = 1 + (rings - 2) * segments
    for k in range(segments):
        j = (k + 1) % segments
        tris.append((a + k, bottom, a + j))
    return _mesh(verts, tris)


def capsule(radius: float, height: float, base_z: float = 0.0, segments: int = 10, rings: int = 8):
    """Upright capsule of total height `height` (two hemispheres + barrel)."""
    barrel = max(height - 2.0 * radius, 1e-6)
    z_lo = base_z + radius
    z_hi = z_lo + barrel
    verts = []
    tris = []

    def ring_at(z, s):
        start = len(verts)
        for k in range(segments):
            th = 2.0 * np.pi * k / segments
            verts.append((s * np.cos(th), s * np.sin(th), z))
        return start

    # bottom hemisphere rings (from pole up), barrel, top hemisphere rings
    verts.append((0.0, 0.0, base_z))
    ring_starts = []
    for r in range(1, rings + 1):
        phi = np.pi / 2.0 * (1.0 - r / rings)  # pi/2 .. 0 below equator
        ring_starts.append(ring_at(z_lo - radius * np.sin(phi), radius * np.cos(phi)))
    ring_starts.append(ring_at(z_hi, radius))
    for r in range(1, rings + 1):
        phi = np.pi / 2.0 * r / rings
        ring_starts.append(ring_at(z_hi + radius * np.sin(phi), radius * np.cos(phi)))
    verts.append((0.0, 0.0, z_hi + radius))
    top = len(verts) - 1

    for k in range(segments):
        j = (k + 1) % segments
        tris.append((0, ring_starts[0] + j, ring_starts[0] + k))
    for a, b in zip(ring_starts[:-1], ring_starts[1:]):
        for k in range(segments):
            j = (k + 1) % segments
            tris += [(a + k, a + j, b + j), (a + k, b + j, b + k)]
    last = ring_starts[-1]
    for k in range(segments):
        j = (k + 1) % segments
        tris.append((last + k, last + j, top))
    return _mesh(verts, tris)


def quad(p0, p1, p2, p3):
    """Two triangles spanning the (planar, CCW) quad p0..p3."""
    v = np.array([p0, p1, p2, p3], dtype=np.float64)
    t = np.array([(0, 1, 2), (0, 2, 3)], dtype=np.int32)
    return v, t


def triangle_areas(verts: np.ndarray, tris: np.ndarray) -> np.ndarray:
    a = verts[tris[:, 0]]
    e1 = verts[tris[:, 1]] - a
    e2 = verts[tris[:, 2]] - a
    return 0.5 * np.linalg.norm(np.cross(e1, e2), axis=1)
