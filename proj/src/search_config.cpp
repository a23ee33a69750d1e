#include "orlicz_lab/search_config.hpp"

#include <stdexcept>
#include <string>

namespace orlicz_lab {

namespace {

template <class Fn>
void for_each_field(SearchConfig& c, Fn&& fn) {
  fn("seed", c.seed);
  fn("dd_eps0", c.dd_eps0);
  fn("dd_eps_floor", c.dd_eps_floor);
  fn("dd_tol", c.dd_tol);
  fn("dd_richardson_levels", c.dd_richardson_levels);
  fn("legendre_starts", c.legendre_starts);
  fn("legendre_divergence", c.legendre_divergence);
  fn("legendre_line_tol", c.legendre_line_tol);
  fn("legendre_max_sweeps", c.legendre_max_sweeps);
  fn("oracle_probe_count", c.oracle_probe_count);
  fn("tol_convexity", c.tol_convexity);
  fn("tol_homogeneity", c.tol_homogeneity);
  fn("tol_fenchel", c.tol_fenchel);
  fn("sphere_points_per_dim", c.sphere_points_per_dim);
  fn("hull_directions_2d", c.hull_directions_2d);
  fn("hull_polar_nodes_3d", c.hull_polar_nodes_3d);
  fn("affine_rel_threshold", c.affine_rel_threshold);
  fn("affine_abs_threshold", c.affine_abs_threshold);
  fn("hull_inflation_rel", c.hull_inflation_rel);
  fn("hit_and_run_samples", c.hit_and_run_samples);
  fn("probe_count", c.probe_count);
  fn("probe_radius", c.probe_radius);
  fn("tol_slack_rel", c.tol_slack_rel);
  fn("mollify_eps", c.mollify_eps);
  fn("mollify_samples", c.mollify_samples);
  fn("mollify_sweep", c.mollify_sweep);
  fn("oscillation_directions_per_dim", c.oscillation_directions_per_dim);
  fn("young_radial_points", c.young_radial_points);
  fn("young_radius_lo", c.young_radius_lo);
  fn("young_radius_hi", c.young_radius_hi);
  fn("young_refine_rounds", c.young_refine_rounds);
  fn("young_directions_per_dim", c.young_directions_per_dim);
  fn("growth_offsets", c.growth_offsets);
  fn("young_shortfall_band", c.young_shortfall_band);
  fn("gamma_xval_tol", c.gamma_xval_tol);
  fn("lux_rel_width", c.lux_rel_width);
  fn("lux_ceiling_log2", c.lux_ceiling_log2);
}

}  // namespace

void to_json(nlohmann::json& j, const SearchConfig& c) {
  j = nlohmann::json::object();
  auto copy = c;
  for_each_field(copy, [&](const char* key, auto& field) { j[key] = field; });
}

void apply_overrides(SearchConfig& c, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("search overrides must be a JSON object");
  std::size_t matched = 0;
  for_each_field(c, [&](const char* key, auto& field) {
    if (auto it = j.find(key); it != j.end()) {
      field = it->template get<std::decay_t<decltype(field)>>();
      ++matched;
    }
  });
  if (matched != j.size()) {
    for (const auto& [key, _] : j.items()) {
      bool known = false;
      for_each_field(c, [&](const char* k, auto&) { known = known || key == k; });
      if (!known) throw std::invalid_argument("unknown search key: " + key);
    }
  }
}

}  // namespace orlicz_lab
