#include "orlicz_lab/registry.hpp"

#include <cmath>
#include <stdexcept>

namespace orlicz_lab::registry {

namespace {

ConvexFunctionOracle radial(std::string name, std::size_t n, const NormSpec& norm,
                            std::function<double(double)> V, std::function<double(double)> dV,
                            std::function<double(double)> conj, std::optional<double> order) {
  ConvexFunctionOracle::Parts parts;
  parts.dim = n;
  parts.name = std::move(name);
  parts.eval = [V, norm](ConstVecView x) { return V(norm(x)); };
  parts.gradient = [dV, norm](ConstVecView x) {
    const double r = norm(x);
    Vec g = norm.gradient(x);
    const double slope = dV(r);
    for (double& v : g) v *= slope;
    return g;
  };
  if (conj) {
    const NormSpec dual = norm.dual();
    parts.conjugate = [conj, dual](ConstVecView y) { return conj(dual(y)); };
  }
  parts.homogeneity_order = order;
  parts.radial = RadialStructure{V, norm};
  return ConvexFunctionOracle::create(std::move(parts));
}

std::string num(double p) {
  std::string s = std::to_string(p);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

double parse_param(const std::string& s, const std::string& full) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument("bad parameter in registry name '" + full + "'");
  return v;
}

void require_exponent(double p, double lo, const std::string& what) {
  if (!(p >= lo) || !std::isfinite(p)) throw std::invalid_argument(what + ": exponent out of range");
}

}  // namespace

ConvexFunctionOracle power(double p, const NormSpec& norm, std::size_t n) {
  require_exponent(p, 1.0, "power");
  auto V = [p](double r) { return r == 0.0 ? 0.0 : std::pow(r, p); };
  auto dV = [p](double r) { return p == 1.0 ? 1.0 : p * std::pow(r, p - 1.0); };
  std::function<double(double)> conj;
  if (p == 1.0) {
    conj = [](double s) { return s <= 1.0 ? 0.0 : kInf; };
  } else {
    const double q = p / (p - 1.0);
    const double scale = q * std::pow(p, q - 1.0);
    conj = [q, scale](double s) { return s == 0.0 ? 0.0 : std::pow(s, q) / scale; };
  }
  return radial("pow" + num(p), n, norm, V, dV, conj, p);
}

ConvexFunctionOracle hinge_power(double p, const NormSpec& norm, std::size_t n) {
  require_exponent(p, 1.0, "hinge_power");
  auto V = [p](double r) { return r == 0.0 ? 0.0 : std::pow(r, p) * std::max(r, 1.0); };
  auto dV = [p](double r) { return r < 1.0 ? (p == 1.0 ? 1.0 : p * std::pow(r, p - 1.0)) : (p + 1.0) * std::pow(r, p); };
  std::function<double(double)> conj;
  if (p == 1.0) {
    conj = [](double s) {
      if (s <= 1.0) return 0.0;
      if (s <= 2.0) return s - 1.0;
      return 0.25 * s * s;
    };
  }
  return radial(p == 1.0 ? "hinge" : "hinge_power:" + num(p), n, norm, V, dV, conj, std::nullopt);
}

ConvexFunctionOracle plog(double p, const NormSpec& norm, std::size_t n) {
  require_exponent(p, 1.0, "plog");
  auto V = [p](double r) { return r == 0.0 ? 0.0 : std::pow(r, p) * std::log1p(r); };
  auto dV = [p](double r) {
    if (r == 0.0) return 0.0;
    return p * std::pow(r, p - 1.0) * std::log1p(r) + std::pow(r, p) / (1.0 + r);
  };
  return radial("plog:" + num(p), n, norm, V, dV, nullptr, std::nullopt);
}

ConvexFunctionOracle plog2(double p, const NormSpec& norm, std::size_t n) {
  require_exponent(p, 1.0, "plog2");
  auto V = [p](double r) { return r == 0.0 ? 0.0 : std::pow(r, p) * std::log(2.0 + r); };
  auto dV = [p](double r) {
    const double lead = p == 1.0 ? 1.0 : p * std::pow(r, p - 1.0);
    return lead * std::log(2.0 + r) + (r == 0.0 ? 0.0 : std::pow(r, p) / (2.0 + r));
  };
  return radial("plog2:" + num(p), n, norm, V, dV, nullptr, std::nullopt);
}

ConvexFunctionOracle quadratic(std::size_t n) {
  ConvexFunctionOracle::Parts parts;
  parts.dim = n;
  parts.name = "quadratic";
  parts.eval = [](ConstVecView x) { return 0.5 * dot(x, x); };
  parts.gradient = [](ConstVecView x) { return Vec(x.begin(), x.end()); };
  parts.conjugate = [](ConstVecView y) { return 0.5 * dot(y, y); };
  parts.homogeneity_order = 2.0;
  parts.radial = RadialStructure{[](double r) { return 0.5 * r * r; }, NormSpec::euclidean()};
  return ConvexFunctionOracle::create(std::move(parts));
}

ConvexFunctionOracle lookup(const std::string& name, const NormSpec& norm, std::size_t n) {
  auto family = [&](const std::string& prefix, double fallback) -> std::optional<double> {
    if (name == prefix) return fallback;
    if (name.rfind(prefix + ":", 0) == 0) return parse_param(name.substr(prefix.size() + 1), name);
    return std::nullopt;
  };
  if (name == "quadratic") return quadratic(n);
  if (name == "norm") return power(1.0, norm, n);
  if (name == "hinge") return hinge_power(1.0, norm, n);
  if (auto p = family("hinge_power", 1.0)) return hinge_power(*p, norm, n);
  if (auto p = family("power", 2.0)) return power(*p, norm, n);
  if (auto p = family("plog2", 1.0)) return plog2(*p, norm, n);
  if (auto p = family("plog", 2.0)) return plog(*p, norm, n);
  if (name.rfind("pow", 0) == 0 && name.size() > 3 && name.find('(') == std::string::npos)
    return power(parse_param(name.substr(3), name), norm, n);
  throw std::invalid_argument("unknown registry function '" + name + "'");
}

bool is_registry_name(const std::string& name) {
  try {
    lookup(name, NormSpec::euclidean(), 1);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<std::string> standard_names() {
  return {"quadratic", "norm", "pow1.5", "pow2", "pow3", "hinge", "hinge_power:2", "plog:2", "plog2:1"};
}

}  // namespace orlicz_lab::registry
