# SVG curve plots and triangle-mesh exports.
from .curves import conic_curves, plot_bounds, write_conic_svg
from .meshes import (
    MeshObject,
    bounding_box,
    implicit_mesh,
    quadric_field,
    write_cone_scene,
    write_obj,
    write_quadric_mesh,
)

__all__ = [
    "MeshObject",
    "bounding_box",
    "conic_curves",
    "implicit_mesh",
    "plot_bounds",
    "quadric_field",
    "write_cone_scene",
    "write_conic_svg",
    "write_obj",
    "write_quadric_mesh",
]
