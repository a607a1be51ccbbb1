#include "ga/bath.hpp"

#include <cmath>

namespace ga {

void BathParams::validate() const {
  if (n_cavities < 2) throw std::invalid_argument("bath: N must be >= 2");
  if (!(hopping > 0.0)) throw std::invalid_argument("bath: J must be > 0");
}

double dispersion(double k, double J) { return -2.0 * J * std::cos(k); }

double density_of_states(double E, double J) {
  const double edge = 2.0 * J;
  if (std::abs(E) == edge)
    throw band_edge_error("density_of_states: band-edge divergence at |E| = 2J");
  if (std::abs(E) > edge) return 0.0;
  return 1.0 / (M_PI * std::sqrt(4.0 * J * J - E * E));
}

double group_velocity(double delta, double J) {
  const double edge = 2.0 * J;
  if (std::abs(delta) > edge)
    throw std::domain_error("group_velocity: |Delta| > 2J, no propagating mode");
  return std::sqrt(4.0 * J * J - delta * delta);
}

MomentumGrid momentum_grid(int n) {
  if (n < 2) throw std::invalid_argument("momentum_grid: N must be >= 2");
  MomentumGrid grid;
  grid.k_values.resize(n);
  const double dk = 2.0 * M_PI / n;
  for (int j = 0; j < n; ++j) grid.k_values[j] = -M_PI + dk * j;
  return grid;
}

}  // namespace ga
