"""
Reference values of the worked examples the library reproduces.

Values marked "corrected" differ from the printed source text; the reason is
given next to each one and in DESIGN.md.
"""

from __future__ import annotations

# Five-point conic. The points are recovered by intersecting the printed lines.
CONIC_POINTS = [(2, 3), (3, 5), (7, 7), (13, 6), (11, 2)]
CONIC_LABELS = ["P", "Q", "R", "S", "T"]
CONIC_LINES = {"p": (27, 3, -11), "q": (1, -2, 1), "r": (-14, -2, 4), "s": (-49, 1, 6)}
CONIC_MULTIPLIERS = (494, 1064)
# printed monomial form: x0², x0x1, x0x2, x1², x1x2, x2²
CONIC_PRINTED_MONOMIALS = (-238868, 57912, 83676, -5092, 5092, -15352)
CONIC_CANONICAL = (6286, -762, -1101, 134, -67, 404)

# Pentagon used by the cone placement, also a five-point conic example
PENTAGON = [(0, 0), (5, 0), (1, -1), (0, -3), (4, -2)]
PENTAGON_LABELS = ["A", "B", "C", "D", "E"]

# Nine-point quadric. C is (9, 8, 3); the printed (9, 3, 8) transposes two digits.
QUADRIC_POINTS = [
    (4, 3, 0),
    (4, 10, 4),
    (9, 8, 3),
    (-1, 7, 2),
    (2, 3, 5),
    (-3, 9, 7),
    (12, 0, 0),
    (0, 10, 0),
    (0, 0, 5),
]
QUADRIC_LABELS = ["A", "B", "C", "D", "E", "F", "G", "H", "J"]
QUADRIC_PLANES = {
    "ABF": (-16, 25, -28, 49),
    "CDE": (-282, -7, 27, 43),
    "ADE": (-143, 20, 21, 8),
    "BCF": (184, -7, -8, -19),
    "ADF": (-127, 16, 21, -2),
    "BCE": (222, -9, -3, -39),
    "ABE": (-116, 35, -8, 14),
    "CDF": (-323, -3, 52, -22),
}
QUADRIC_SYSTEM = (
    (-103944, 9700, 7410, -109136),
    (3552, 6968, 15936, -38612),
    (-15343, -9167, -3699, 19918),
)
QUADRIC_MULTIPLIERS = (-9842336242680, 39532196597640, 19311493179280, 14198910257520)
# printed affine form in storage order: 1, x1, x2, x3, x1², x1x2, x1x3, x2², x2x3, x3²
QUADRIC_PRINTED_MONOMIALS = (
    -27426081179298420,
    4710658547758491,
    4323601509519942,
    9186924265547229,
    -202095981901413,
    22422685213194,
    -1191822696049068,
    -158099339159010,
    -558476852988570,
    -740341605937509,
)

# Dual quaternions (x0..x3 | y0..y3)
DQ_FIRST_PRINTED = (0.1389, 0.08324, -0.2391, 0.4806, 1.8555, -0.5330, -0.4972, 0.1428)
# x1 lost a digit in print (|x|² ≈ 0.31 otherwise); x0 follows the root table
DQ_FIRST = (0.1380, 0.8324, -0.2391, 0.4806, 1.8555, -0.5330, -0.4972, 0.1428)
DQ_FIRST_IMAGES = [
    (-2.8265, 0.0, -2.8265),
    (-0.7076, -1.3267, 1.5036),
    (-1.8720, 0.5822, -1.9605),
    (-1.2344, 2.5427, -2.8265),
    (-0.0700, 0.6337, 0.6376),
]
DQ_SECOND = (0.6333, 0.3411, -0.3656, 0.5907, 0.7005, -0.7510, 0.1877, -0.2012)
DQ_SECOND_IMAGES = [
    (-1.5036, 0.0, -1.5036),
    (-1.3301, 2.4940, 2.8265),
    (-0.4713, 0.4294, -0.6376),
    (1.4891, -0.2082, -1.5036),
    (0.6304, 1.8564, 1.9605),
]

ROOT_TABLE_F8A = (0.1380, 0.3411, 0.3656, 0.4806)
ROOT_TABLE_F8B = (0.2391, 0.5907, 0.6333, 0.8324)
ROOT_TABLE = tuple(sorted(ROOT_TABLE_F8A + ROOT_TABLE_F8B))

# one root of each ± pair of the degree-16 factor (conjugates implied)
F16_COMPLEX_ROOTS = (
    complex(0.00403, 0.01268),
    complex(0.17789, 0.55969),
    complex(0.74589, 0.23707),
    complex(0.93244, 0.29636),
)

# Cone pair
CONE_PAIR_POINTS = DQ_FIRST_IMAGES[:3]
CONE_TRANSLATION = (-1.9418, 1.2160, -1.3227)
# constant, x, y, z of the translated cone (quadratic part x²+y²-z²)
TRANSLATED_CONE_LINEAR = (3.5, 3.884, -2.432, -2.6458)
# plane through the three mapped points as printed
MAPPED_POINT_PLANE = (3.3069, 3.6699, -2.2981, -2.5000)
PLANE_FACTOR = 0.9449
