#!/usr/bin/env python3
"""Export the central component of the angle surface for external viewers.

Writes an OBJ triangulation and a CSV vertex table next to each other.
Feed the OBJ to any mesh viewer to look at the pillow-shaped component.
"""

import argparse
from pathlib import Path

from heistriples import build_surface_mesh, write_csv, write_obj


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--resolution", type=int, default=128)
    parser.add_argument("--out-dir", type=Path, default=Path("out"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    mesh = build_surface_mesh(args.resolution)
    obj_path = args.out_dir / f"central_component_{args.resolution}.obj"
    csv_path = args.out_dir / f"central_component_{args.resolution}.csv"
    with open(obj_path, "w", encoding="utf-8") as fh:
        write_obj(mesh, fh)
    with open(csv_path, "w", encoding="utf-8") as fh:
        write_csv(mesh, fh)
    print(f"{len(mesh.vertices)} vertices, {len(mesh.faces)} faces")
    print(f"max surface residual: {mesh.max_surface_residual():.3e}")
    print(f"wrote {obj_path} and {csv_path}")


if __name__ == "__main__":
    main()
