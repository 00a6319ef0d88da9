"""Exact geometric predicates: orientation, containment, general position.

Everything runs on rational coordinates with zero tolerance: the same
inputs always give the same signs, and scaling or shearing the plane
never changes an answer.
"""

from fractions import Fraction

from rainbowdepth import (
    barycentric_coordinates,
    general_position_check,
    orientation,
    point,
    point_in_simplex_interior,
)
from rainbowdepth.geometry import affine_image

triangle = [point(0, 0), point(1, 0), point(0, 1)]
print("orientation of the unit triangle:", orientation(triangle))
print("swap two vertices:", orientation([triangle[1], triangle[0], triangle[2]]))

centroid = point("1/3", "1/3")
print("\ncentroid inside?", point_in_simplex_interior(centroid, triangle))
print("vertex inside?", point_in_simplex_interior(point(0, 0), triangle))
print("barycentric coordinates of the centroid:", barycentric_coordinates(centroid, triangle))

# a boundary point is exactly on an edge: no epsilon could decide this
edge_mid = point("1/2", "1/2")
print("edge midpoint inside?", point_in_simplex_interior(edge_mid, triangle))
print("its barycentric coordinates:", barycentric_coordinates(edge_mid, triangle))

# predicates are invariant under any positively oriented affine map
mat = [[Fraction(7, 3), 1], [2, 1]]
image = [affine_image(p, mat, ("22/7", -5)) for p in triangle]
print("\norientation after shearing:", orientation(image))

points = [point(0, 0), point(4, 0), point(2, 0), point(1, 5)]
print("\ngeneral position check:", general_position_check(points, 2))
print("(the witness names the first collinear triple)")
