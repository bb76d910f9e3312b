"""Compiled render kernels: intersection, shading, path tracing.

Everything here is numba-jitted and free of Python objects. Random numbers
come from stateless splitmix64 sequences keyed by (seed, pixel, sample), so
a pixel's result is a pure function of those three values: renders are
byte-identical for any thread count and any tile schedule. Radiance is kept
in linear RGB float64 throughout.

Conventions: ray directions are unit vectors; geometric normals follow the
right-hand winding of the mesh and are flipped toward the incoming ray at
shade time; the sun direction points from the sun toward the scene.
"""

import math

import numpy as np
from numba import njit, prange

U64 = np.uint64
GOLD = U64(0x9E3779B97F4A7C15)
INV_2P53 = 1.0 / 9007199254740992.0
T_MIN = 1e-9
FAR = 1e30
NOISE_OFF = U64(1 << 20)
P1 = U64(0x9E3779B185EBCA87)
P2 = U64(0xC2B2AE3D27D4EB4F)
P3 = U64(0x165667B19E3779F9)

# material table columns (see assets.materials.pack_materials)
MAT_A0 = 0
MAT_A2 = 3
MAT_SPEC = 6
MAT_ROUGH = 7
MAT_TEX = 8
MAT_TEXSCALE = 9
MAT_MASK = 10
MAT_MASKSCALE = 11

MODE_LAMBERT = 0
MODE_COOK_TORRANCE = 1

F0_DIELECTRIC = 0.04
RR_START = 3
RR_MAX_SURVIVAL = 0.95


# ---------------------------------------------------------------------------
# stateless RNG (splitmix64)

@njit(cache=True, inline="always")
def _mix(z):
    z = (z ^ (z >> U64(30))) * U64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> U64(27))) * U64(0x94D049BB133111EB)
    return z ^ (z >> U64(31))


@njit(cache=True, inline="always")
def stream_init(seed, pixel, sample):
    s = _mix(U64(seed) + GOLD)
    s = _mix(s ^ (U64(pixel) + GOLD))
    s = _mix(s ^ (U64(sample) + GOLD))
    return s


@njit(cache=True, inline="always")
def next_f64(state):
    state = state + GOLD
    x = _mix(state)
    return (x >> U64(11)) * INV_2P53, state


# ---------------------------------------------------------------------------
# procedural textures

@njit(cache=True, inline="always")
def _lattice(ix, iy, iz):
    h = _mix((U64(ix) + NOISE_OFF) * P1 ^ (U64(iy) + NOISE_OFF) * P2 ^ (U64(iz) + NOISE_OFF) * P3)
    return (h >> U64(11)) * INV_2P53


@njit(cache=True, inline="always")
def _value_noise(x, y, z):
    ix = int(math.floor(x)); iy = int(math.floor(y)); iz = int(math.floor(z))
    fx = x - ix; fy = y - iy; fz = z - iz
    tx = fx * fx * (3.0 - 2.0 * fx)
    ty = fy * fy * (3.0 - 2.0 * fy)
    tz = fz * fz * (3.0 - 2.0 * fz)
    c = 0.0
    c000 = _lattice(ix, iy, iz);       c100 = _lattice(ix + 1, iy, iz)
    c010 = _lattice(ix, iy + 1, iz);   c110 = _lattice(ix + 1, iy + 1, iz)
    c001 = _lattice(ix, iy, iz + 1);   c101 = _lattice(ix + 1, iy, iz + 1)
    c011 = _lattice(ix, iy + 1, iz + 1); c111 = _lattice(ix + 1, iy + 1, iz + 1)
    c = (
        (c000 * (1 - tx) + c100 * tx) * (1 - ty) * (1 - tz)
        + (c010 * (1 - tx) + c110 * tx) * ty * (1 - tz)
        + (c001 * (1 - tx) + c101 * tx) * (1 - ty) * tz
        + (c011 * (1 - tx) + c111 * tx) * ty * tz
    )
    return c


@njit(cache=True, inline="always")
def albedo_at(mats, mid, px, py, pz):
    tex = int(mats[mid, MAT_TEX])
    a0r = mats[mid, MAT_A0]; a0g = mats[mid, MAT_A0 + 1]; a0b = mats[mid, MAT_A0 + 2]
    if tex == 0:
        return a0r, a0g, a0b
    a2r = mats[mid, MAT_A2]; a2g = mats[mid, MAT_A2 + 1]; a2b = mats[mid, MAT_A2 + 2]
    s = mats[mid, MAT_TEXSCALE]
    if tex == 1:  # checker
        k = int(math.floor(px / s)) + int(math.floor(py / s)) + int(math.floor(pz / s))
        return (a0r, a0g, a0b) if k % 2 == 0 else (a2r, a2g, a2b)
    if tex == 2:  # stripes along z
        k = int(math.floor(pz / s))
        return (a0r, a0g, a0b) if k % 2 == 0 else (a2r, a2g, a2b)
    v = _value_noise(px / s, py / s, pz / s)
    return a0r + (a2r - a0r) * v, a0g + (a2g - a0g) * v, a0b + (a2b - a0b) * v


@njit(cache=True, inline="always")
def specular_mask_at(mats, mid, px, py, pz):
    kind = int(mats[mid, MAT_MASK])
    if kind == 0:
        return 0.0
    if kind == 1:
        return 1.0
    s = mats[mid, MAT_MASKSCALE]
    k = int(math.floor(px / s)) + int(math.floor(py / s)) + int(math.floor(pz / s))
    return 1.0 if k % 2 == 0 else 0.0


# ---------------------------------------------------------------------------
# intersection

@njit(cache=True, inline="always")
def _tri_hit(p0, e1, e2, i, ox, oy, oz, dx, dy, dz):
    """Moller-Trumbore; returns t > 0 on hit else -1."""
    px = dy * e2[i, 2] - dz * e2[i, 1]
    py = dz * e2[i, 0] - dx * e2[i, 2]
    pz = dx * e2[i, 1] - dy * e2[i, 0]
    det = e1[i, 0] * px + e1[i, 1] * py + e1[i, 2] * pz
    if -1e-14 < det < 1e-14:
        return -1.0
    inv = 1.0 / det
    tx = ox - p0[i, 0]; ty = oy - p0[i, 1]; tz = oz - p0[i, 2]
    u = (tx * px + ty * py + tz * pz) * inv
    if u < 0.0 or u > 1.0:
        return -1.0
    qx = ty * e1[i, 2] - tz * e1[i, 1]
    qy = tz * e1[i, 0] - tx * e1[i, 2]
    qz = tx * e1[i, 1] - ty * e1[i, 0]
    v = (dx * qx + dy * qy + dz * qz) * inv
    if v < 0.0 or u + v > 1.0:
        return -1.0
    return (e2[i, 0] * qx + e2[i, 1] * qy + e2[i, 2] * qz) * inv


@njit(cache=True, inline="always")
def _slab_hit(bmin, bmax, k, ox, oy, oz, dx, dy, dz, tmax):
    """Ray-AABB overlap test on [T_MIN, tmax]; returns True if the box is hit."""
    t0 = T_MIN
    t1 = tmax
    for ax in range(3):
        o = ox if ax == 0 else (oy if ax == 1 else oz)
        d = dx if ax == 0 else (dy if ax == 1 else dz)
        lo = bmin[k, ax]
        hi = bmax[k, ax]
        if -1e-300 < d < 1e-300:
            if o < lo or o > hi:
                return False
        else:
            inv = 1.0 / d
            ta = (lo - o) * inv
            tb = (hi - o) * inv
            if ta > tb:
                ta, tb = tb, ta
            if ta > t0:
                t0 = ta
            if tb < t1:
                t1 = tb
            if t0 > t1:
                return False
    return True


@njit(cache=True)
def bvh_closest(world, stack, ox, oy, oz, dx, dy, dz, tmax):
    """Nearest hit on (T_MIN, tmax); returns (t, triangle index) or (tmax, -1)."""
    p0, e1, e2 = world[0], world[1], world[2]
    node_min, node_max = world[6], world[7]
    node_left, node_right = world[8], world[9]
    node_first, node_count, order = world[10], world[11], world[12]
    best_t = tmax
    best_i = -1
    stack[0] = 0
    top = 1
    while top > 0:
        top -= 1
        k = stack[top]
        if not _slab_hit(node_min, node_max, k, ox, oy, oz, dx, dy, dz, best_t):
            continue
        cnt = node_count[k]
        if cnt > 0:
            first = node_first[k]
            for j in range(first, first + cnt):
                i = order[j]
                t = _tri_hit(p0, e1, e2, i, ox, oy, oz, dx, dy, dz)
                if T_MIN < t < best_t:
                    best_t = t
                    best_i = i
        else:
            stack[top] = node_left[k]
            stack[top + 1] = node_right[k]
            top += 2
    return best_t, best_i


@njit(cache=True)
def bvh_occluded(world, stack, ox, oy, oz, dx, dy, dz, tmax):
    """Any-hit test on (T_MIN, tmax)."""
    p0, e1, e2 = world[0], world[1], world[2]
    node_min, node_max = world[6], world[7]
    node_left, node_right = world[8], world[9]
    node_first, node_count, order = world[10], world[11], world[12]
    stack[0] = 0
    top = 1
    while top > 0:
        top -= 1
        k = stack[top]
        if not _slab_hit(node_min, node_max, k, ox, oy, oz, dx, dy, dz, tmax):
            continue
        cnt = node_count[k]
        if cnt > 0:
            first = node_first[k]
            for j in range(first, first + cnt):
                i = order[j]
                t = _tri_hit(p0, e1, e2, i, ox, oy, oz, dx, dy, dz)
                if T_MIN < t < tmax:
                    return True
        else:
            stack[top] = node_left[k]
            stack[top + 1] = node_right[k]
            top += 2
    return False


# ---------------------------------------------------------------------------
# frames and direction sampling

@njit(cache=True, inline="always")
def _onb(nx, ny, nz):
    """Orthonormal tangent/bitangent for a unit vector (Duff et al.)."""
    s = 1.0 if nz >= 0.0 else -1.0
    a = -1.0 / (s + nz)
    b = nx * ny * a
    tx = 1.0 + s * nx * nx * a; ty = s * b; tz = -s * nx
    bx = b; by = s + ny * ny * a; bz = -ny
    return tx, ty, tz, bx, by, bz


@njit(cache=True, inline="always")
def cosine_hemisphere(nx, ny, nz, u1, u2):
    r = math.sqrt(u1)
    phi = 2.0 * math.pi * u2
    lx = r * math.cos(phi)
    ly = r * math.sin(phi)
    lz = math.sqrt(max(0.0, 1.0 - u1))
    tx, ty, tz, bx, by, bz = _onb(nx, ny, nz)
    return (
        lx * tx + ly * bx + lz * nx,
        lx * ty + ly * by + lz * ny,
        lx * tz + ly * bz + lz * nz,
    )


@njit(cache=True, inline="always")
def phase_hg(cos_theta, g):
    """Henyey-Greenstein density over the sphere; cos_theta between the
    incoming and outgoing propagation directions (forward peak for g > 0)."""
    denom = 1.0 + g * g - 2.0 * g * cos_theta
    return (1.0 - g * g) / (4.0 * math.pi * denom * math.sqrt(denom))


@njit(cache=True, inline="always")
def sample_hg(dx, dy, dz, g, u1, u2):
    """Scattered propagation direction around incoming direction d."""
    if abs(g) < 1e-3:
        mu = 1.0 - 2.0 * u1
    else:
        sq = (1.0 - g * g) / (1.0 - g + 2.0 * g * u1)
        mu = (1.0 + g * g - sq * sq) / (2.0 * g)
    phi = 2.0 * math.pi * u2
    s = math.sqrt(max(0.0, 1.0 - mu * mu))
    tx, ty, tz, bx, by, bz = _onb(dx, dy, dz)
    wx = s * math.cos(phi)
    wy = s * math.sin(phi)
    return (
        wx * tx + wy * bx + mu * dx,
        wx * ty + wy * by + mu * dy,
        wx * tz + wy * bz + mu * dz,
    )


@njit(cache=True, inline="always")
def _cone_dir(wx, wy, wz, cos_max, u1, u2):
    mu = 1.0 - u1 * (1.0 - cos_max)
    phi = 2.0 * math.pi * u2
    s = math.sqrt(max(0.0, 1.0 - mu * mu))
    tx, ty, tz, bx, by, bz = _onb(wx, wy, wz)
    ax = s * math.cos(phi)
    ay = s * math.sin(phi)
    return (
        ax * tx + ay * bx + mu * wx,
        ax * ty + ay * by + mu * wy,
        ax * tz + ay * bz + mu * wz,
    )


# ---------------------------------------------------------------------------
# medium helpers; med = [enabled, sigma_s, sigma_a, g, box_min(3), box_max(3)]

@njit(cache=True, inline="always")
def _med_clip(med, ox, oy, oz, dx, dy, dz):
    """Parametric overlap of the ray with the medium box; t0 > t1 if none."""
    t0 = 0.0
    t1 = FAR
    for ax in range(3):
        o = ox if ax == 0 else (oy if ax == 1 else oz)
        d = dx if ax == 0 else (dy if ax == 1 else dz)
        lo = med[4 + ax]
        hi = med[7 + ax]
        if -1e-300 < d < 1e-300:
            if o < lo or o > hi:
                return 1.0, 0.0
        else:
            inv = 1.0 / d
            ta = (lo - o) * inv
            tb = (hi - o) * inv
            if ta > tb:
                ta, tb = tb, ta
            if ta > t0:
                t0 = ta
            if tb < t1:
                t1 = tb
    return t0, t1


@njit(cache=True, inline="always")
def _transmittance(med, ox, oy, oz, dx, dy, dz, tmax):
    if med[0] == 0.0:
        return 1.0
    sigma_t = med[1] + med[2]
    if sigma_t <= 0.0:
        return 1.0
    t0, t1 = _med_clip(med, ox, oy, oz, dx, dy, dz)
    t1 = min(t1, tmax)
    if t1 <= t0:
        return 1.0
    return math.exp(-sigma_t * (t1 - t0))


# ---------------------------------------------------------------------------
# shading cores

@njit(cache=True)
def lambert_radiance(ar, ag, ab, nx, ny, nz, sun):
    """(albedo/pi) * spectrum * max(0, n . -sun_dir); no shadows, no bounce."""
    c = -(nx * sun[0] + ny * sun[1] + nz * sun[2])
    if c <= 0.0:
        return 0.0, 0.0, 0.0
    k = c / math.pi
    return ar * k * sun[3], ag * k * sun[4], ab * k * sun[5]


@njit(cache=True, inline="always")
def fresnel_schlick(cos_theta, f0):
    m = 1.0 - cos_theta
    if m < 0.0:
        m = 0.0
    return f0 + (1.0 - f0) * m * m * m * m * m


@njit(cache=True, inline="always")
def _beckmann_d(cos_h, alpha):
    if cos_h <= 0.0:
        return 0.0
    c2 = cos_h * cos_h
    t2 = (1.0 - c2) / c2
    a2 = alpha * alpha
    return math.exp(-t2 / a2) / (math.pi * a2 * c2 * c2)


@njit(cache=True, inline="always")
def _smith_g1_beckmann(cos_v, alpha):
    if cos_v <= 0.0:
        return 0.0
    sin_v = math.sqrt(max(0.0, 1.0 - cos_v * cos_v))
    if sin_v < 1e-12:
        return 1.0
    a = cos_v / (alpha * sin_v)
    if a >= 1.6:
        return 1.0
    return (3.535 * a + 2.181 * a * a) / (1.0 + 2.276 * a + 2.577 * a * a)


@njit(cache=True)
def cook_torrance_radiance(ar, ag, ab, spec, mask, rough, nx, ny, nz, vx, vy, vz, sun):
    """Lambertian term plus a masked microfacet lobe lit by the sun only."""
    lr, lg, lb = lambert_radiance(ar, ag, ab, nx, ny, nz, sun)
    w = spec * mask
    if w <= 0.0:
        return lr, lg, lb
    lx = -sun[0]; ly = -sun[1]; lz = -sun[2]
    cos_l = nx * lx + ny * ly + nz * lz
    cos_v = nx * vx + ny * vy + nz * vz
    if cos_l <= 0.0 or cos_v <= 0.0:
        return lr, lg, lb
    hx = lx + vx; hy = ly + vy; hz = lz + vz
    hn = math.sqrt(hx * hx + hy * hy + hz * hz)
    if hn < 1e-12:
        return lr, lg, lb
    hx /= hn; hy /= hn; hz /= hn
    cos_h = nx * hx + ny * hy + nz * hz
    d = _beckmann_d(cos_h, rough)
    g = _smith_g1_beckmann(cos_v, rough) * _smith_g1_beckmann(cos_l, rough)
    f = fresnel_schlick(vx * hx + vy * hy + vz * hz, F0_DIELECTRIC)
    s = w * d * g * f / (4.0 * cos_v)
    return lr + s * sun[3], lg + s * sun[4], lb + s * sun[5]


# ---------------------------------------------------------------------------
# path tracing
# sun = [dir(3), spectrum(3), angular_radius, sky(3)]

@njit(cache=True)
def trace_path(world, stack, mats, sun, med, ox, oy, oz, dx, dy, dz, max_bounces, state):
    """One radiance sample along a camera ray; returns (r, g, b, rng state)."""
    tr_ = 1.0; tg_ = 1.0; tb_ = 1.0  # throughput
    lr = 0.0; lg = 0.0; lb = 0.0
    bounces = 0
    sun_on = sun[3] > 0.0 or sun[4] > 0.0 or sun[5] > 0.0
    cos_sun_max = math.cos(sun[6]) if sun[6] > 0.0 else 1.0
    med_on = med[0] != 0.0
    sigma_t = med[1] + med[2]
    while True:
        t_hit, tri = bvh_closest(world, stack, ox, oy, oz, dx, dy, dz, FAR)
        # possible medium collision before the surface
        if med_on and sigma_t > 0.0:
            m0, m1 = _med_clip(med, ox, oy, oz, dx, dy, dz)
            if tri >= 0 and t_hit < m1:
                m1 = t_hit
            if m1 > m0:
                u, state = next_f64(state)
                s = -math.log(1.0 - u) / sigma_t
                if m0 + s < m1:
                    # scattering event inside the fog
                    px = ox + (m0 + s) * dx
                    py = oy + (m0 + s) * dy
                    pz = oz + (m0 + s) * dz
                    alb = med[1] / sigma_t
                    tr_ *= alb; tg_ *= alb; tb_ *= alb
                    if sun_on:
                        if sun[6] > 0.0:
                            u1, state = next_f64(state)
                            u2, state = next_f64(state)
                            wx, wy, wz = _cone_dir(-sun[0], -sun[1], -sun[2], cos_sun_max, u1, u2)
                        else:
                            wx = -sun[0]; wy = -sun[1]; wz = -sun[2]
                        if not bvh_occluded(world, stack, px, py, pz, wx, wy, wz, FAR):
                            tr = _transmittance(med, px, py, pz, wx, wy, wz, FAR)
                            ph = phase_hg(dx * wx + dy * wy + dz * wz, med[3])
                            k = ph * tr
                            lr += tr_ * k * sun[3]
                            lg += tg_ * k * sun[4]
                            lb += tb_ * k * sun[5]
                    bounces += 1
                    if bounces >= max_bounces:
                        break
                    u1, state = next_f64(state)
                    u2, state = next_f64(state)
                    dx, dy, dz = sample_hg(dx, dy, dz, med[3], u1, u2)
                    ox = px; oy = py; oz = pz
                    continue
        if tri < 0:
            lr += tr_ * sun[7]
            lg += tg_ * sun[8]
            lb += tb_ * sun[9]
            break
        px = ox + t_hit * dx
        py = oy + t_hit * dy
        pz = oz + t_hit * dz
        normal = world[3]
        nx = normal[tri, 0]; ny = normal[tri, 1]; nz = normal[tri, 2]
        if nx * dx + ny * dy + nz * dz > 0.0:
            nx = -nx; ny = -ny; nz = -nz
        mid = world[5][tri]
        ar, ag, ab = albedo_at(mats, mid, px, py, pz)
        eps = 1e-6 * (1.0 + abs(px) + abs(py) + abs(pz))
        sx = px + nx * eps; sy = py + ny * eps; sz = pz + nz * eps
        if sun_on:
            if sun[6] > 0.0:
                u1, state = next_f64(state)
                u2, state = next_f64(state)
                wx, wy, wz = _cone_dir(-sun[0], -sun[1], -sun[2], cos_sun_max, u1, u2)
            else:
                wx = -sun[0]; wy = -sun[1]; wz = -sun[2]
            cos_i = nx * wx + ny * wy + nz * wz
            if cos_i > 0.0 and not bvh_occluded(world, stack, sx, sy, sz, wx, wy, wz, FAR):
                tr = _transmittance(med, sx, sy, sz, wx, wy, wz, FAR)
                k = cos_i * tr / math.pi
                lr += tr_ * ar * k * sun[3]
                lg += tg_ * ag * k * sun[4]
                lb += tb_ * ab * k * sun[5]
        bounces += 1
        if bounces >= max_bounces:
            break
        if bounces >= RR_START:
            p = max(ar, max(ag, ab))
            if p > RR_MAX_SURVIVAL:
                p = RR_MAX_SURVIVAL
            u, state = next_f64(state)
            if u >= p:
                break
            inv = 1.0 / p
            tr_ *= inv; tg_ *= inv; tb_ *= inv
        tr_ *= ar; tg_ *= ag; tb_ *= ab
        u1, state = next_f64(state)
        u2, state = next_f64(state)
        dx, dy, dz = cosine_hemisphere(nx, ny, nz, u1, u2)
        ox = sx; oy = sy; oz = sz
    return lr, lg, lb, state


# ---------------------------------------------------------------------------
# full-frame kernels
# cam = [pos(3), right(3), up(3), fwd(3), tan_half_vfov, aspect]

@njit(cache=True, inline="always")
def _camera_ray(cam, width, height, px, py, jx, jy):
    sx = ((px + jx) / width * 2.0 - 1.0) * cam[12] * cam[13]
    sy = (1.0 - (py + jy) / height * 2.0) * cam[12]
    dx = cam[9] + sx * cam[3] + sy * cam[6]
    dy = cam[10] + sx * cam[4] + sy * cam[7]
    dz = cam[11] + sx * cam[5] + sy * cam[8]
    n = math.sqrt(dx * dx + dy * dy + dz * dz)
    return dx / n, dy / n, dz / n


@njit(cache=True, parallel=True)
def render_deterministic(world, mats, sun, cam, width, height, mode, out):
    """Single center ray per pixel, local shading only (no shadows, no fog)."""
    for pix in prange(width * height):
        py = pix // width
        px = pix - py * width
        stack = np.empty(128, dtype=np.int32)
        dx, dy, dz = _camera_ray(cam, width, height, px, py, 0.5, 0.5)
        t, tri = bvh_closest(world, stack, cam[0], cam[1], cam[2], dx, dy, dz, FAR)
        if tri < 0:
            out[py, px, 0] = sun[7]
            out[py, px, 1] = sun[8]
            out[py, px, 2] = sun[9]
            continue
        hx = cam[0] + t * dx; hy = cam[1] + t * dy; hz = cam[2] + t * dz
        normal = world[3]
        nx = normal[tri, 0]; ny = normal[tri, 1]; nz = normal[tri, 2]
        if nx * dx + ny * dy + nz * dz > 0.0:
            nx = -nx; ny = -ny; nz = -nz
        mid = world[5][tri]
        ar, ag, ab = albedo_at(mats, mid, hx, hy, hz)
        if mode == MODE_LAMBERT:
            r, g, b = lambert_radiance(ar, ag, ab, nx, ny, nz, sun)
        else:
            mask = specular_mask_at(mats, mid, hx, hy, hz)
            r, g, b = cook_torrance_radiance(
                ar, ag, ab, mats[mid, MAT_SPEC], mask, mats[mid, MAT_ROUGH],
                nx, ny, nz, -dx, -dy, -dz, sun,
            )
        out[py, px, 0] = r
        out[py, px, 1] = g
        out[py, px, 2] = b


@njit(cache=True, parallel=True)
def render_path_traced(world, mats, sun, med, cam, width, height, spp,
                       max_bounces, seed, out, bad_samples):
    """spp stratified sub-pixel samples per pixel, accumulated in sample order."""
    na = int(math.sqrt(spp))
    nb = spp // na
    for pix in prange(width * height):
        py = pix // width
        px = pix - py * width
        stack = np.empty(128, dtype=np.int32)
        ar = 0.0; ag = 0.0; ab = 0.0
        n_ok = 0
        bad = 0
        for s in range(spp):
            state = stream_init(seed, pix, s)
            u1, state = next_f64(state)
            u2, state = next_f64(state)
            if s < na * nb:
                jx = ((s % na) + u1) / na
                jy = ((s // na) + u2) / nb
            else:
                jx = u1
                jy = u2
            dx, dy, dz = _camera_ray(cam, width, height, px, py, jx, jy)
            r, g, b, state = trace_path(world, stack, mats, sun, med,
                                        cam[0], cam[1], cam[2], dx, dy, dz,
                                        max_bounces, state)
            if math.isfinite(r) and math.isfinite(g) and math.isfinite(b):
                ar += r; ag += g; ab += b
                n_ok += 1
            else:
                bad += 1
        inv = 1.0 / n_ok if n_ok > 0 else 0.0
        out[py, px, 0] = ar * inv
        out[py, px, 1] = ag * inv
        out[py, px, 2] = ab * inv
        bad_samples[pix] = bad


@njit(cache=True, parallel=True)
def groundtruth_pass(world, cam, width, height, sky_class, labels, depth, normals):
    """Deterministic center-ray ID pass: label, depth along ray, surface normal.

    Shared by every shading mode and every sample count, which is what makes
    groundtruth bundles identical across the fidelity axis.
    """
    for pix in prange(width * height):
        py = pix // width
        px = pix - py * width
        stack = np.empty(128, dtype=np.int32)
        dx, dy, dz = _camera_ray(cam, width, height, px, py, 0.5, 0.5)
        t, tri = bvh_closest(world, stack, cam[0], cam[1], cam[2], dx, dy, dz, FAR)
        if tri < 0:
            labels[py, px] = sky_class
            depth[py, px] = np.inf
            normals[py, px, 0] = 0.0
            normals[py, px, 1] = 0.0
            normals[py, px, 2] = 0.0
            continue
        normal = world[3]
        nx = normal[tri, 0]; ny = normal[tri, 1]; nz = normal[tri, 2]
        if nx * dx + ny * dy + nz * dz > 0.0:
            nx = -nx; ny = -ny; nz = -nz
        labels[py, px] = world[4][tri]
        depth[py, px] = t
        normals[py, px, 0] = nx
        normals[py, px, 1] = ny
        normals[py, px, 2] = nz
