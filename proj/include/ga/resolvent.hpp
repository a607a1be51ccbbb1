#pragma once
// Frequency-domain engine: closed-form self-energies of multi-point emitters
// on the cosine band, Green's functions on both Riemann sheets, the Markovian
// shift/decay split, pole searches with residues, branch-cut contour
// integrals, and reconstruction of the atomic amplitudes.
//
// Everything here works in units of J = 1 (energies z/J, times tJ).
//
// Branch convention. Let w(z) = sqrt(z - 2) * sqrt(z + 2) with principal
// square roots. w is analytic on the plane cut along the band [-2, 2],
// behaves like +z at large |z|, and its boundary value from above the band
// is +i sqrt(4 - E^2). That single function reproduces the usual sign
// split between Re z > 0 and Re z < 0: w(E) = +sqrt(E^2-4) in the upper gap
// and -sqrt(E^2-4) in the lower gap. The second sheet carries -w. The mode
// root f(z) = (-z + w)/2 then satisfies f^2 + z f + 1 = 0 with |f| <= 1 on
// the physical sheet (|f| = 1 exactly on the band), and f -> 1/f on the
// second sheet. Unstable poles live on the second sheet below the band.

#include <complex>
#include <utility>
#include <vector>

#include "ga/layout.hpp"

namespace ga {

using cplx = std::complex<double>;

enum class Sheet { Physical, Second };
enum class Channel { e, plus, minus_ };

const char* to_string(Channel c);

struct ComplexEnergy {
  cplx z;
  Sheet sheet = Sheet::Physical;
};

// sqrt(z^2 - 4) on the requested sheet (see branch convention above).
// Real z inside the band is evaluated as the retarded boundary value, which
// is the same +i sqrt(4 - E^2) on both sheets (the sheets glue there).
// Throws band_edge_error at the branch points z = +-2.
cplx band_root(cplx z, Sheet sheet);

// f(z) = (-z + band_root(z, sheet)) / 2.
cplx mode_root(cplx z, Sheet sheet);

// Spec-facing alias for the mode root.
cplx f_pm(const ComplexEnergy& ze);

// Self-energy of one atom with P equidistant coupling points spaced by d:
//   (g^2 / w) [ P + 2 sum_{p=1}^{P-1} p f^{(P-p) d} ].
cplx self_energy_single(cplx z, int n_points, int d, double g,
                        Sheet sheet = Sheet::Physical);

// Same quantity from explicit positions: g^2 sum_{p,q} f^{|n_p-n_q|} / w.
cplx self_energy_positions(cplx z, const std::vector<int>& points, double g,
                           Sheet sheet = Sheet::Physical);

struct SelfEnergyEval {
  cplx sigma_e{0.0, 0.0};
  cplx sigma_int{0.0, 0.0};  // 0 for a single atom
  cplx sigma_plus{0.0, 0.0};
  cplx sigma_minus{0.0, 0.0};
};

// Two identical atoms (equal detuning, equal internal span): individual
// self-energy sigma_e, cross term sigma_int from the four inter-atom
// distances, and the channel combinations sigma_{+-} = sigma_e +- sigma_int.
// Throws std::invalid_argument for non-identical atoms.
SelfEnergyEval self_energy_two(cplx z, const Layout& layout,
                               Sheet sheet = Sheet::Physical);

// Channel self-energy: Channel::e uses atom 1 alone; plus/minus require a
// two-atom layout.
cplx self_energy_channel(cplx z, Channel channel, const Layout& layout,
                         Sheet sheet = Sheet::Physical);
// d/dz of the above (analytic).
cplx self_energy_channel_deriv(cplx z, Channel channel, const Layout& layout,
                               Sheet sheet = Sheet::Physical);

struct MarkovSplit {
  double delta_e = 0.0;     // Re sigma_e(E + i0+): frequency shift
  double gamma_e = 0.0;     // -2 Im sigma_e: individual decay rate
  double exchange = 0.0;    // Re sigma_int: exchange interaction
  double collective = 0.0;  // -2 Im sigma_int: collective decay
};

// Boundary values at E + i0+. Throws band_edge_error at |E| = 2J.
MarkovSplit markov_split(double E, const Layout& layout);

// Decay rate Gamma_e(E) in the factored form
//   (2 g^2 / sqrt(4 - E^2)) |sum_p e^{i phi(E) n_p}|^2,
// defined on the closed band. At |E| = 2J the interference factor either
// vanishes (limit 0, returned) or the van Hove divergence wins
// (band_edge_error).
double decay_rate(double E, const std::vector<int>& points, double g);

// G_channel(z) = 1 / (z - Delta - sigma_channel(z)).
// Throws std::runtime_error when evaluated on a pole (|G^-1| ~ 0).
cplx green(const ComplexEnergy& ze, Channel channel, const Layout& layout);

// z - Delta - sigma_channel(z) and its derivative; no pole guard.
cplx green_inv(cplx z, Channel channel, const Layout& layout, Sheet sheet);
cplx green_inv_deriv(cplx z, Channel channel, const Layout& layout,
                     Sheet sheet);

enum class PoleKind { Real, Unstable };

struct Pole {
  cplx z{0.0, 0.0};
  cplx residue{0.0, 0.0};
  PoleKind kind = PoleKind::Real;
  Channel channel = Channel::e;
};

using PoleSet = std::vector<Pole>;

struct PoleSearchConfig {
  // Real-pole scan: per gap, from the band edge out to |z| = real_scan_max.
  double real_scan_max = 8.0;
  int real_scan_points = 10000;
  // Unstable-pole seeds: Re over [-2, 2] in steps of re_seed_step, at each
  // of im_seeds; the Markovian guess Delta + sigma(Delta + i0+) is added
  // when Delta lies inside the band.
  double re_seed_step = 0.05;
  std::vector<double> im_seeds = {-0.01, -0.1, -0.5};
  double newton_tol = 1e-13;  // on |G^-1|
  int max_newton_iter = 200;
  double dedup_tol = 1e-8;
};

// Bound-state poles: real roots of G^-1 on the physical sheet outside the
// band, located by sign-change bracketing and polished by Newton.
PoleSet find_real_poles(Channel channel, const Layout& layout,
                        const PoleSearchConfig& cfg = {});

// Unstable poles: second-sheet roots with |Re z| < 2 and Im z <= 0, from
// Newton iterations on a seed grid. Non-converging seeds are discarded.
PoleSet find_unstable_poles(Channel channel, const Layout& layout,
                            const PoleSearchConfig& cfg = {});

// Union of the two searches, sorted by Re z.
PoleSet find_all_poles(Channel channel, const Layout& layout,
                       const PoleSearchConfig& cfg = {});

// R = 1 / (1 - d sigma_channel / dz) at a converged pole.
cplx residue_at(cplx z_pole, Channel channel, const Layout& layout,
                Sheet sheet);
// Same via central finite difference of sigma (step 1e-6), as a cross-check.
cplx residue_at_fd(cplx z_pole, Channel channel, const Layout& layout,
                   Sheet sheet);

struct BranchCutOptions {
  double abs_tol = 1e-8;
  double y_start = 8.0;        // initial wall depth
  double y_max_cap = 4096.0;   // refuse to extend beyond this
  double tail_cutoff = 1e-12;  // extend until the integrand falls below this
};

// Contribution of one vertical detour z = edge - i y, y in (0, inf):
//   (1/2pi) e^{-i edge t} Int_0^inf [G_I - G_II](edge - i y) e^{-y t} dy
// with the sign arranged so that amplitudes add as
//   C(t) = sum_poles R e^{-i z t} + cut(+2) + cut(-2).
// Sets *tolerance_met = false (if given) when the requested tolerance could
// not be certified.
cplx branch_cut_edge(double t, double edge, Channel channel,
                     const Layout& layout, const BranchCutOptions& opt = {},
                     bool* tolerance_met = nullptr);

// Sum of both edges.
cplx branch_cut_contribution(double t, Channel channel, const Layout& layout,
                             const BranchCutOptions& opt = {},
                             bool* tolerance_met = nullptr);

// C_channel(t) on a time grid: pole sum plus branch cuts, with the poles
// found internally (or supplied).
std::vector<cplx> amplitude_from_poles(const std::vector<double>& t_grid,
                                       Channel channel, const Layout& layout,
                                       const PoleSearchConfig& pcfg = {},
                                       const BranchCutOptions& bopt = {});
std::vector<cplx> amplitude_from_poles(const std::vector<double>& t_grid,
                                       const PoleSet& poles, Channel channel,
                                       const Layout& layout,
                                       const BranchCutOptions& bopt = {});

// Independent check: the displaced Fourier transform of G(E + i0+) by
// direct quadrature over E in [-e_max, e_max]. Real bound-state poles are
// split off analytically; the remainder is tapered near the ends of the
// window to suppress truncation ringing.
cplx amplitude_direct(double t, Channel channel, const Layout& layout,
                      double e_max = 10.0);

// C_eg = (C_+ + C_-)/2, C_ge = (C_+ - C_-)/2, elementwise.
std::pair<std::vector<cplx>, std::vector<cplx>> combine_pm(
    const std::vector<cplx>& c_plus, const std::vector<cplx>& c_minus);

}  // namespace ga
