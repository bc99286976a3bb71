"""
Oriented lines as dual unit vectors
===================================

An oriented line through point p with unit direction d is encoded by
the dual vector d + eps*(p x d).  The direction is unit and the moment
p x d is perpendicular to it, so the dual norm is exactly 1 + eps*0:
oriented lines are the points of the dual unit sphere.  The dual angle
between two such vectors reads off the angle between the lines and
their common-perpendicular distance at once.
"""

import numpy as np

from dualcurves import (from_dual_unit, line_dual_angle,
                        line_from_point_dir, to_dual_unit)

def show(v):
    return [str(c) for c in v.comps()]


# The z-axis, oriented upward.
axis = line_from_point_dir([0.0, 0.0, 0.0], [0.0, 0.0, 1.0])
print("axis as dual unit vector:", show(to_dual_unit(axis)))

# A parallel copy through (1, 0, 0) picks up a nonzero moment.
shifted = line_from_point_dir([1.0, 0.0, 0.0], [0.0, 0.0, 1.0])
print("shifted copy:", show(to_dual_unit(shifted)))

# The encoding is lossless: direction and moment determine the line,
# and its closest point to the origin is direction x moment.
back = from_dual_unit(to_dual_unit(shifted))
print("round-trip closest point:", back.closest_point)

# Two skew lines: the x-axis and a line one unit up, rotated 90 degrees.
a = line_from_point_dir([0.0, 0.0, 0.0], [1.0, 0.0, 0.0])
b = line_from_point_dir([0.0, 0.0, 1.0], [0.0, 1.0, 0.0])
ang = line_dual_angle(a, b)
print("angle between skew lines:", ang.phi, "rad")
print("common-perpendicular distance:", ang.phi_star)

# The same distance from raw vector algebra, as a cross-check.
n = np.cross(a.direction, b.direction)
gap = b.closest_point - a.closest_point
print("oracle distance:", abs(float(np.dot(n, gap))) / np.linalg.norm(n))
