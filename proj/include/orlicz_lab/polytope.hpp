#pragma once

#include <array>
#include <vector>

namespace orlicz_lab::polytope {

using P2 = std::array<double, 2>;
using P3 = std::array<double, 3>;

/// Halfspace {y : <a, y> <= b}.
template <class P>
struct Halfspace {
  P normal;
  double offset;
};

/// Convex polygon, counter-clockwise.
using Polygon = std::vector<P2>;

Polygon box_polygon(double half_width);
/// Sutherland-Hodgman clip of a convex polygon against one halfplane.
Polygon clip(const Polygon& poly, const Halfspace<P2>& h);
double area(const Polygon& poly);
/// Area centroid; falls back to the vertex mean for zero-area input.
P2 centroid(const Polygon& poly);

/// Convex polyhedron stored as its faces (each a planar convex polygon).
struct Polyhedron {
  std::vector<std::vector<P3>> faces;

  bool empty() const { return faces.size() < 4; }
  std::vector<P3> vertices() const;
};

Polyhedron box_polyhedron(double half_width);
Polyhedron clip(const Polyhedron& poly, const Halfspace<P3>& h);
double volume(const Polyhedron& poly);
P3 centroid(const Polyhedron& poly);

}  // namespace orlicz_lab::polytope
