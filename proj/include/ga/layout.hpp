#pragma once
// Emitter configuration: coupling-point positions, detunings, topology of
// two-atom arrangements, and the in-band phase mapping used to predict
// decoherence-free-interaction points.

#include <optional>
#include <string>
#include <vector>

namespace ga {

enum class Topology { Single, Separate, Nested, Braided };

const char* to_string(Topology t);

struct AtomSpec {
  double detuning = 0.0;             // Delta_i in units of J
  std::vector<int> coupling_points;  // strictly increasing cavity indices
  double g = 0.0;                    // per-point coupling, units of J
};

struct Layout {
  std::vector<AtomSpec> atoms;  // one or two atoms

  // Throws std::invalid_argument on malformed layouts (empty atom list,
  // non-increasing or shared coupling points, g <= 0). Returns soft
  // model-validity warnings, e.g. g/J > 1.
  std::vector<std::string> validate() const;

  int n_atoms() const { return static_cast<int>(atoms.size()); }
  // All coupling points of all atoms, sorted.
  std::vector<int> all_points() const;
  // Smallest and largest coupling point over all atoms.
  int span() const;
  // Spacing d when all consecutive coupling points are equidistant.
  std::optional<int> equidistant_spacing() const;
  // Translate every coupling point by the same offset.
  Layout translated(int offset) const;

  // Convenience builders. Positions start at `origin`.
  static Layout single_small(double delta, double g, int position = 0);
  static Layout single_giant(double delta, double g, int n_points, int d,
                             int origin = 0);
  static Layout small_pair(double delta, double g, int d, int origin = 0);
  static Layout two_atom(Topology topology, double delta, double g, int d,
                         int origin = 0);
};

// Interleaving order of the coupling points of two two-point atoms.
// Throws std::invalid_argument for coincident points and for layouts that
// are not two atoms with two points each.
Topology classify_topology(const Layout& layout);

struct PhasePoint {
  int d = 0;
  double delta = 0.0;
  double varphi = 0.0;  // d * arccos(-Delta / 2J)
};

// Maps the discrete spacing d to the continuous phase accumulated between
// coupling points. Only defined inside the band (|Delta| <= 2J).
PhasePoint phase_map(int d, double delta);

// All (d, Delta) with d <= d_max solving varphi = pi/2 (mod 2pi) inside the
// band, via the closed form Delta = -2J cos(phi*/d), phi* = pi/2 + 2 pi m.
std::vector<PhasePoint> dfi_candidate_points(int d_max, double tol = 1e-12);

}  // namespace ga
