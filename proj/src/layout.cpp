#include "ga/layout.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ga {

const char* to_string(Topology t) {
  switch (t) {
    case Topology::Single: return "single";
    case Topology::Separate: return "separate";
    case Topology::Nested: return "nested";
    case Topology::Braided: return "braided";
  }
  return "?";
}

std::vector<std::string> Layout::validate() const {
  if (atoms.empty() || atoms.size() > 2)
    throw std::invalid_argument("layout: need one or two atoms");
  std::set<int> seen;
  for (const auto& atom : atoms) {
    if (atom.coupling_points.empty())
      throw std::invalid_argument("layout: atom with no coupling points");
    if (!(atom.g > 0.0))
      throw std::invalid_argument("layout: coupling g must be > 0");
    for (size_t p = 0; p + 1 < atom.coupling_points.size(); ++p)
      if (atom.coupling_points[p] >= atom.coupling_points[p + 1])
        throw std::invalid_argument(
            "layout: coupling points must be strictly increasing");
    for (int n : atom.coupling_points) {
      if (n < 0) throw std::invalid_argument("layout: negative cavity index");
      if (!seen.insert(n).second)
        throw std::invalid_argument(
            "layout: atoms may not share a cavity (coincident coupling points)");
    }
  }
  std::vector<std::string> warnings;
  for (size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i].g > 1.0)
      warnings.push_back("atom " + std::to_string(i + 1) +
                         ": g/J > 1 is outside the weak-coupling regime the "
                         "model is derived for");
  return warnings;
}

std::vector<int> Layout::all_points() const {
  std::vector<int> pts;
  for (const auto& atom : atoms)
    pts.insert(pts.end(), atom.coupling_points.begin(),
               atom.coupling_points.end());
  std::sort(pts.begin(), pts.end());
  return pts;
}

int Layout::span() const {
  auto pts = all_points();
  return pts.back() - pts.front();
}

std::optional<int> Layout::equidistant_spacing() const {
  auto pts = all_points();
  if (pts.size() < 2) return std::nullopt;
  const int d = pts[1] - pts[0];
  for (size_t i = 1; i + 1 < pts.size(); ++i)
    if (pts[i + 1] - pts[i] != d) return std::nullopt;
  return d;
}

Layout Layout::translated(int offset) const {
  Layout out = *this;
  for (auto& atom : out.atoms)
    for (int& n : atom.coupling_points) n += offset;
  return out;
}

Layout Layout::single_small(double delta, double g, int position) {
  return Layout{{AtomSpec{delta, {position}, g}}};
}

Layout Layout::single_giant(double delta, double g, int n_points, int d,
                            int origin) {
  if (n_points < 1) throw std::invalid_argument("layout: P must be >= 1");
  if (n_points > 1 && d < 1)
    throw std::invalid_argument("layout: spacing d must be >= 1");
  AtomSpec atom{delta, {}, g};
  for (int p = 0; p < n_points; ++p)
    atom.coupling_points.push_back(origin + p * d);
  return Layout{{atom}};
}

Layout Layout::small_pair(double delta, double g, int d, int origin) {
  if (d < 1) throw std::invalid_argument("layout: spacing d must be >= 1");
  return Layout{{AtomSpec{delta, {origin}, g},
                 AtomSpec{delta, {origin + d}, g}}};
}

Layout Layout::two_atom(Topology topology, double delta, double g, int d,
                        int origin) {
  if (d < 1) throw std::invalid_argument("layout: spacing d must be >= 1");
  const int o = origin;
  switch (topology) {
    case Topology::Separate:
      return Layout{{AtomSpec{delta, {o, o + d}, g},
                     AtomSpec{delta, {o + 2 * d, o + 3 * d}, g}}};
    case Topology::Nested:
      return Layout{{AtomSpec{delta, {o, o + 3 * d}, g},
                     AtomSpec{delta, {o + d, o + 2 * d}, g}}};
    case Topology::Braided:
      return Layout{{AtomSpec{delta, {o, o + 2 * d}, g},
                     AtomSpec{delta, {o + d, o + 3 * d}, g}}};
    case Topology::Single:
      break;
  }
  throw std::invalid_argument("layout: two_atom needs a two-atom topology");
}

Topology classify_topology(const Layout& layout) {
  if (layout.n_atoms() == 1) return Topology::Single;
  layout.validate();
  if (layout.n_atoms() != 2 || layout.atoms[0].coupling_points.size() != 2 ||
      layout.atoms[1].coupling_points.size() != 2)
    throw std::invalid_argument(
        "classify_topology: supported only for two atoms with two coupling "
        "points each");
  // Tag each point with its atom and read off the interleaving pattern.
  struct Tagged { int pos; int atom; };
  std::vector<Tagged> pts;
  for (int a = 0; a < 2; ++a)
    for (int n : layout.atoms[a].coupling_points) pts.push_back({n, a});
  std::sort(pts.begin(), pts.end(),
            [](const Tagged& x, const Tagged& y) { return x.pos < y.pos; });
  const int a0 = pts[0].atom;
  const int p1 = pts[1].atom, p2 = pts[2].atom, p3 = pts[3].atom;
  if (p1 == a0 && p2 != a0 && p3 != a0) return Topology::Separate;
  if (p1 != a0 && p2 != a0 && p3 == a0) return Topology::Nested;
  if (p1 != a0 && p2 == a0 && p3 != a0) return Topology::Braided;
  throw std::logic_error("classify_topology: unreachable interleaving");
}

PhasePoint phase_map(int d, double delta) {
  if (d < 1) throw std::invalid_argument("phase_map: d must be >= 1");
  if (std::abs(delta) > 2.0)
    throw std::domain_error("phase_map: |Delta| > 2J, mapping only holds "
                            "inside the band");
  return PhasePoint{d, delta, d * std::acos(-delta / 2.0)};
}

std::vector<PhasePoint> dfi_candidate_points(int d_max, double tol) {
  if (d_max < 1) throw std::invalid_argument("dfi_candidate_points: d_max >= 1");
  std::vector<PhasePoint> points;
  for (int d = 1; d <= d_max; ++d) {
    // varphi(d, Delta) covers [0, d*pi]; admissible branches of pi/2 + 2pi m.
    for (int m = 0;; ++m) {
      const double phi_star = M_PI / 2.0 + 2.0 * M_PI * m;
      if (phi_star > d * M_PI + tol) break;
      const double delta = -2.0 * std::cos(phi_star / d);
      points.push_back(PhasePoint{d, delta, phi_star});
    }
  }
  return points;
}

}  // namespace ga
