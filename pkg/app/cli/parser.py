from __future__ import annotations

import argparse


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _grid_size(text: str) -> int:
    value = _positive_int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"a sampling grid needs at least 2 points per axis, got {text}")
    return value


def _permutation(text: str) -> list[int]:
    try:
        order = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad permutation {text!r}") from exc
    if sorted(order) != list(range(len(order))):
        raise argparse.ArgumentTypeError(f"{text!r} is not a permutation of 0..{len(order) - 1}")
    return order


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="point-set document (text or JSON)")
    p.add_argument("--output", default=None, help="also save result.json and meta.json in a run directory here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pencil",
        description="Conics on five points, quadrics on nine points, and five points placed on a right cone",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conic5", help="conic through five points by a pencil of line pairs")
    _common(p)
    p.add_argument("--oracle", action="store_true", help="also compute the 6x6 determinant conic")
    p.add_argument("--plot", default=None, help="write an SVG plot of the conic here")
    p.add_argument("--samples", type=_grid_size, default=None, help="grid samples per axis for the plot")

    p = sub.add_parser("quadric9", help="quadric through nine points by plane pairs")
    _common(p)
    p.add_argument("--oracle", action="store_true", help="also compute the 10x10 determinant quadric")
    p.add_argument("--pairing", type=int, default=None, help="index into the 210 choices of four plane pairs")
    p.add_argument("--permute", type=_permutation, default=None, help="reorder points before assigning A..F, G, H, J")
    p.add_argument("--mesh", default=None, help="write an OBJ triangle mesh of the surface here")
    p.add_argument("--resolution", type=_grid_size, default=None, help="marching-cubes grid size per axis")

    p = sub.add_parser("place-cone", help="place five coplanar points on the right cone")
    _common(p)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-starts", type=_positive_int, default=None)
    p.add_argument("--tol", type=float, default=None, help="Newton convergence tolerance")
    p.add_argument("--tol-dedup", type=float, default=None)
    p.add_argument("--early-stop-window", type=_positive_int, default=None)

    p = sub.add_parser("cone-pair", help="recover the translated cone sharing the points' conic")
    _common(p)
    p.add_argument("--tol", type=float, default=None, help="on-cone tolerance for the input points")
    p.add_argument("--scene", default=None, help="write an OBJ scene of both cones and the plane here")
    p.add_argument("--resolution", type=_grid_size, default=None)

    p = sub.add_parser("selfcheck", help="run the worked-example fixture suite")
    p.add_argument("--output", default=None, help="also save result.json and meta.json in a run directory here")
    p.add_argument("--skip-solver", action="store_true", help="skip the cone placement solve")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-starts", type=_positive_int, default=None)
    return parser
