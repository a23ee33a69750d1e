#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace orlicz_lab {

/// Every numerical knob used by the library, in one record. Reports echo the
/// record they were produced with.
struct SearchConfig {
  std::uint64_t seed = 1;

  // Difference quotients for L'(x, theta): eps_k = dd_eps0 * 2^-k down to dd_eps_floor.
  double dd_eps0 = 1e-2;
  double dd_eps_floor = 1e-7;
  double dd_tol = 1e-8;
  int dd_richardson_levels = 3;

  // Legendre transform.
  int legendre_starts = 16;
  double legendre_divergence = 1e12;
  double legendre_line_tol = 1e-13;
  int legendre_max_sweeps = 200;

  // Oracle construction probes.
  int oracle_probe_count = 64;
  double tol_convexity = 1e-9;
  double tol_homogeneity = 1e-9;

  double tol_fenchel = 1e-8;

  // Sphere quadrature: M = sphere_points_per_dim * n.
  int sphere_points_per_dim = 4096;
  int hull_directions_2d = 720;
  int hull_polar_nodes_3d = 16;
  double affine_rel_threshold = 1e-7;
  double affine_abs_threshold = 1e-6;
  // Halfspaces are loosened by this fraction of the support scale before clipping.
  double hull_inflation_rel = 1e-7;
  int hit_and_run_samples = 50000;

  // Subgradient certificates.
  int probe_count = 1000;
  double probe_radius = 10.0;
  double tol_slack_rel = 1e-7;

  // Mollified selection.
  double mollify_eps = 1e-5;
  int mollify_samples = 2048;
  std::vector<double> mollify_sweep = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5};

  // Local oscillation.
  int oscillation_directions_per_dim = 256;

  // Young function estimates.
  int young_radial_points = 61;
  double young_radius_lo = 1e-3;
  double young_radius_hi = 1e3;
  int young_refine_rounds = 3;
  int young_directions_per_dim = 16;
  std::vector<double> growth_offsets = {1e-2, 5e-3, 2.5e-3};
  double young_shortfall_band = 0.02;

  double gamma_xval_tol = 1e-6;

  // Luxemburg bisection.
  double lux_rel_width = 1e-10;
  int lux_ceiling_log2 = 60;
};

void to_json(nlohmann::json& j, const SearchConfig& c);
/// Applies the keys present in `j` on top of `c`; unknown keys throw std::invalid_argument.
void apply_overrides(SearchConfig& c, const nlohmann::json& j);

}  // namespace orlicz_lab
