#pragma once
// 1D coupled-cavity bath: cosine dispersion, density of states, group
// velocity, discrete momentum grid. Energies are measured in units of the
// hopping J, times in 1/J, hbar = 1. All functions here are pure.

#include <stdexcept>
#include <string>
#include <vector>

namespace ga {

// Signals the van Hove divergence at the band edges |E| = 2J. Quantities
// that blow up there throw instead of returning an unusable number, so
// callers are forced to treat the edge explicitly.
class band_edge_error : public std::domain_error {
 public:
  explicit band_edge_error(const std::string& what) : std::domain_error(what) {}
};

struct BathParams {
  int n_cavities = 0;      // N >= 2
  double hopping = 1.0;    // J > 0, the energy unit
  double omega_ref = 0.0;  // rotating-frame reference frequency; metadata only

  void validate() const;
};

struct MomentumGrid {
  // N points in [-pi, pi - 2pi/N], uniform spacing 2pi/N, periodic.
  std::vector<double> k_values;
};

// omega(k) = -2J cos(k); band [-2J, 2J].
double dispersion(double k, double J = 1.0);

// 1/(pi sqrt(4J^2 - E^2)) inside the band, 0 outside.
// Throws band_edge_error at |E| = 2J.
double density_of_states(double E, double J = 1.0);

// v_g(Delta) = sqrt(4J^2 - Delta^2) for |Delta| <= 2J; throws
// std::domain_error outside (no propagating mode).
double group_velocity(double delta, double J = 1.0);

MomentumGrid momentum_grid(int n);

}  // namespace ga
