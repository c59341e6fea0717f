"""Grid sampling of the angle hypersurface for export.

The surface cos a + cos b + cos c = 3/2 is sampled over an (a, b) grid
on the central cube face: wherever cos a + cos b >= 1/2 the equation has
the two solutions c = +-arccos(3/2 - cos a - cos b), giving a top and a
bottom sheet that meet along the curve c = 0.  Other connected
components are translates of the central one by multiples of 2pi.

Rows are processed in index order, so output is deterministic however
the work is scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .errors import GeometryError

MIN_RESOLUTION = 8
CLAMP_TOL = 1e-12
MERGE_TOL = 1e-12

_CUBE = 2.0 * math.pi / 3.0


@dataclass(frozen=True)
class SurfaceMesh:
    """Triangulated sample of one connected component."""

    vertices: tuple[tuple[float, float, float], ...]
    faces: tuple[tuple[int, int, int], ...]
    component: tuple[int, int, int] = (0, 0, 0)

    def max_surface_residual(self) -> float:
        shift = tuple(2.0 * math.pi * n for n in self.component)
        worst = 0.0
        for v in self.vertices:
            res = (math.cos(v[0] - shift[0]) + math.cos(v[1] - shift[1])
                   + math.cos(v[2] - shift[2]) - 1.5)
            worst = max(worst, abs(res))
        return worst


def _admissible(v: float) -> bool:
    return v <= 1.0 + CLAMP_TOL


def build_surface_mesh(resolution: int,
                       component: tuple[int, int, int] = (0, 0, 0)) -> SurfaceMesh:
    """Sample one component at the given per-axis grid resolution.

    Both c-sheets share the (a, b) grid; sheet vertices with c within
    MERGE_TOL of zero are merged so the seam is crack free.  Cells whose
    four corners are admissible are triangulated per sheet, and the rim
    of the admissible region is stitched with quads joining the sheets.
    """
    if resolution < MIN_RESOLUTION:
        raise GeometryError(f"resolution must be at least {MIN_RESOLUTION}")
    axis = np.linspace(-_CUBE, _CUBE, resolution)
    cos_axis = np.cos(axis)
    v_grid = 1.5 - cos_axis[:, None] - cos_axis[None, :]
    c_grid = np.arccos(np.clip(v_grid, -1.0, 1.0))

    vertices: list[tuple[float, float, float]] = []
    top_index: dict[tuple[int, int], int] = {}
    bottom_index: dict[tuple[int, int], int] = {}

    for i in range(resolution):
        for j in range(resolution):
            if _admissible(v_grid[i, j]):
                top_index[(i, j)] = len(vertices)
                vertices.append((float(axis[i]), float(axis[j]), float(c_grid[i, j])))
    for i in range(resolution):
        for j in range(resolution):
            if (i, j) not in top_index:
                continue
            c = float(c_grid[i, j])
            if c <= MERGE_TOL:
                bottom_index[(i, j)] = top_index[(i, j)]
            else:
                bottom_index[(i, j)] = len(vertices)
                vertices.append((float(axis[i]), float(axis[j]), -c))

    faces: list[tuple[int, int, int]] = []
    complete_cells = [
        (i, j)
        for i in range(resolution - 1)
        for j in range(resolution - 1)
        if all(k in top_index for k in ((i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)))
    ]

    def emit(idx, corners, flip):
        n00, n10, n01, n11 = (idx[c] for c in corners)
        tris = ((n00, n10, n11), (n00, n11, n01))
        for tri in tris:
            if len(set(tri)) < 3:
                continue
            faces.append(tri[::-1] if flip else tri)

    for cell in complete_cells:
        i, j = cell
        corners = ((i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1))
        emit(top_index, corners, flip=False)
    for cell in complete_cells:
        i, j = cell
        corners = ((i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1))
        emit(bottom_index, corners, flip=True)

    # Rim stitching: edges used by exactly one complete cell bound the
    # triangulated region; close the gap between the sheets there.
    edge_count: dict[tuple[tuple[int, int], tuple[int, int]], int] = {}
    for i, j in complete_cells:
        cell_edges = (
            ((i, j), (i + 1, j)),
            ((i, j + 1), (i + 1, j + 1)),
            ((i, j), (i, j + 1)),
            ((i + 1, j), (i + 1, j + 1)),
        )
        for edge in cell_edges:
            edge_count[edge] = edge_count.get(edge, 0) + 1
    for edge in sorted(k for k, n in edge_count.items() if n == 1):
        n1, n2 = edge
        t1, t2 = top_index[n1], top_index[n2]
        b1, b2 = bottom_index[n1], bottom_index[n2]
        for tri in ((t1, t2, b2), (t1, b2, b1)):
            if len(set(tri)) == 3:
                faces.append(tri)

    shift = tuple(2.0 * math.pi * n for n in component)
    if any(shift):
        vertices = [(v[0] + shift[0], v[1] + shift[1], v[2] + shift[2])
                    for v in vertices]
    return SurfaceMesh(tuple(vertices), tuple(faces), tuple(component))


def write_csv(mesh: SurfaceMesh, stream: TextIO) -> None:
    """One `a,b,c` row per vertex, 17 significant digits (lossless floats)."""
    stream.write("a,b,c\n")
    for v in mesh.vertices:
        stream.write(f"{v[0]:.17g},{v[1]:.17g},{v[2]:.17g}\n")


def write_obj(mesh: SurfaceMesh, stream: TextIO) -> None:
    """Wavefront OBJ with 1-based face indices."""
    stream.write("# equidistant angle surface, component "
                 f"{mesh.component[0]},{mesh.component[1]},{mesh.component[2]}\n")
    for v in mesh.vertices:
        stream.write(f"v {v[0]:.17g} {v[1]:.17g} {v[2]:.17g}\n")
    for f in mesh.faces:
        stream.write(f"f {f[0] + 1} {f[1] + 1} {f[2] + 1}\n")
