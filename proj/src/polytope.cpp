#include "orlicz_lab/polytope.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz_lab::polytope {

namespace {

double dot3(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
P3 sub3(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
P3 cross3(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
P3 lerp3(const P3& a, const P3& b, double t) {
  return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])};
}

template <class P, class Dot, class Lerp>
std::vector<P> clip_ring(const std::vector<P>& ring, const Halfspace<P>& h, Dot dotf, Lerp lerpf,
                         std::vector<P>* cut_points) {
  std::vector<P> out;
  const std::size_t m = ring.size();
  for (std::size_t i = 0; i < m; ++i) {
    const P& a = ring[i];
    const P& b = ring[(i + 1) % m];
    const double da = dotf(h.normal, a) - h.offset;
    const double db = dotf(h.normal, b) - h.offset;
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const P p = lerpf(a, b, da / (da - db));
      out.push_back(p);
      if (cut_points) cut_points->push_back(p);
    } else if (da == 0.0 && cut_points) {
      cut_points->push_back(a);
    }
  }
  return out;
}

}  // namespace

Polygon box_polygon(double w) { return {{-w, -w}, {w, -w}, {w, w}, {-w, w}}; }

Polygon clip(const Polygon& poly, const Halfspace<P2>& h) {
  auto d = [](const P2& a, const P2& b) { return a[0] * b[0] + a[1] * b[1]; };
  auto l = [](const P2& a, const P2& b, double t) { return P2{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])}; };
  return clip_ring(poly, h, d, l, static_cast<std::vector<P2>*>(nullptr));
}

double area(const Polygon& poly) {
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P2& a = poly[i];
    const P2& b = poly[(i + 1) % poly.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return 0.5 * s;
}

P2 centroid(const Polygon& poly) {
  if (poly.empty()) return {0.0, 0.0};
  // Shift to the first vertex to limit cancellation for small polygons far from the origin.
  const P2 o = poly[0];
  double a = 0.0, cx = 0.0, cy = 0.0, mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const double x0 = poly[i][0] - o[0], y0 = poly[i][1] - o[1];
    const double x1 = poly[(i + 1) % poly.size()][0] - o[0], y1 = poly[(i + 1) % poly.size()][1] - o[1];
    const double c = x0 * y1 - x1 * y0;
    a += c;
    cx += (x0 + x1) * c;
    cy += (y0 + y1) * c;
    mx += x0;
    my += y0;
  }
  const double n = static_cast<double>(poly.size());
  if (std::abs(a) <= 1e-300) return {o[0] + mx / n, o[1] + my / n};
  return {o[0] + cx / (3.0 * a), o[1] + cy / (3.0 * a)};
}

std::vector<P3> Polyhedron::vertices() const {
  std::vector<P3> out;
  for (const auto& f : faces) out.insert(out.end(), f.begin(), f.end());
  return out;
}

Polyhedron box_polyhedron(double w) {
  Polyhedron p;
  const P3 v[8] = {{-w, -w, -w}, {w, -w, -w}, {w, w, -w}, {-w, w, -w},
                   {-w, -w, w},  {w, -w, w},  {w, w, w},  {-w, w, w}};
  const int f[6][4] = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {2, 3, 7, 6}, {1, 2, 6, 5}, {0, 4, 7, 3}};
  for (const auto& face : f) p.faces.push_back({v[face[0]], v[face[1]], v[face[2]], v[face[3]]});
  return p;
}

Polyhedron clip(const Polyhedron& poly, const Halfspace<P3>& h) {
  Polyhedron out;
  std::vector<P3> cut;
  for (const auto& face : poly.faces) {
    auto clipped = clip_ring(face, h, dot3, lerp3, &cut);
    if (clipped.size() >= 3) out.faces.push_back(std::move(clipped));
  }
  if (out.faces.empty() || cut.size() < 3) return out;

  // Cap face: order the cut points by angle around their mean, in the cutting plane.
  P3 mean{0.0, 0.0, 0.0};
  for (const auto& p : cut)
    for (int k = 0; k < 3; ++k) mean[k] += p[k] / static_cast<double>(cut.size());
  const P3& nrm = h.normal;
  P3 helper = std::abs(nrm[0]) < 0.9 ? P3{1.0, 0.0, 0.0} : P3{0.0, 1.0, 0.0};
  P3 u = cross3(nrm, helper);
  const double ul = std::sqrt(dot3(u, u));
  for (double& c : u) c /= ul;
  P3 v = cross3(nrm, u);
  const double vl = std::sqrt(dot3(v, v));
  for (double& c : v) c /= vl;

  std::vector<std::pair<double, P3>> ordered;
  for (const auto& p : cut) {
    const P3 d = sub3(p, mean);
    ordered.emplace_back(std::atan2(dot3(d, v), dot3(d, u)), p);
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  double extent = 0.0;
  for (const auto& p : cut) extent = std::max(extent, std::sqrt(dot3(sub3(p, mean), sub3(p, mean))));
  std::vector<P3> cap;
  for (const auto& [_, p] : ordered) {
    if (!cap.empty()) {
      const P3 d = sub3(p, cap.back());
      if (std::sqrt(dot3(d, d)) <= 1e-14 * (1.0 + extent)) continue;
    }
    cap.push_back(p);
  }
  if (cap.size() >= 2) {
    const P3 d = sub3(cap.front(), cap.back());
    if (std::sqrt(dot3(d, d)) <= 1e-14 * (1.0 + extent)) cap.pop_back();
  }
  // Orientation of the cap follows the outward normal.
  std::reverse(cap.begin(), cap.end());
  if (cap.size() >= 3) out.faces.push_back(std::move(cap));
  return out;
}

namespace {

P3 vertex_mean(const Polyhedron& poly) {
  P3 o{0.0, 0.0, 0.0};
  std::size_t count = 0;
  for (const auto& f : poly.faces)
    for (const auto& p : f) {
      for (int k = 0; k < 3; ++k) o[k] += p[k];
      ++count;
    }
  if (count)
    for (double& c : o) c /= static_cast<double>(count);
  return o;
}

}  // namespace

double volume(const Polyhedron& poly) {
  const P3 o = vertex_mean(poly);
  double vol = 0.0;
  for (const auto& f : poly.faces)
    for (std::size_t i = 1; i + 1 < f.size(); ++i)
      vol += std::abs(dot3(sub3(f[0], o), cross3(sub3(f[i], o), sub3(f[i + 1], o)))) / 6.0;
  return vol;
}

P3 centroid(const Polyhedron& poly) {
  const P3 o = vertex_mean(poly);
  double vol = 0.0;
  P3 c{0.0, 0.0, 0.0};
  for (const auto& f : poly.faces) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      const P3 a = sub3(f[0], o), b = sub3(f[i], o), d = sub3(f[i + 1], o);
      const double t = std::abs(dot3(a, cross3(b, d))) / 6.0;
      vol += t;
      for (int k = 0; k < 3; ++k) c[k] += t * (a[k] + b[k] + d[k]) / 4.0;
    }
  }
  if (vol <= 0.0) return o;
  for (int k = 0; k < 3; ++k) c[k] = o[k] + c[k] / vol;
  return c;
}

}  // namespace orlicz_lab::polytope
