#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orlicz_lab/types.hpp"

namespace orlicz_lab {

/// Unit directions with quadrature weights for the uniform measure on S^{n-1}
/// (weights sum to 1). All sets are closed under theta -> -theta.
struct DirectionSet {
  std::size_t dim = 0;
  std::vector<Vec> directions;
  std::vector<double> weights;

  std::size_t size() const { return directions.size(); }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(std::size_t m, std::vector<double>& nodes, std::vector<double>& weights);

/// Quadrature set with roughly `count` points:
///   n = 1: {+1, -1};
///   n = 2: equally spaced angles (exact for trigonometric polynomials of degree < count);
///   n = 3: Gauss-Legendre in the polar cosine times equally spaced azimuths;
///   n > 3: seeded uniform samples in antithetic pairs.
DirectionSet sphere_quadrature(std::size_t n, std::size_t count, std::uint64_t seed);

/// Directions used to cut out polytopes from support values. Contains the
/// coordinate axes (and for n = 2 the diagonals).
DirectionSet hull_directions(std::size_t n, std::size_t count_2d, std::size_t polar_nodes_3d,
                             std::uint64_t seed);

/// Cheap covering set for search starts: equally spaced for n = 2, a
/// generalized spiral for n = 3, seeded uniform otherwise.
std::vector<Vec> search_directions(std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace orlicz_lab
