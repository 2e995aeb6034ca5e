#pragma once

// Coherent states of the radial oscillator:
//   Barut-Girardello  eigenstates of L- on a fixed-l hierarchy,
//   SU(1,1) Perelomov displaced l-vacua (|z| < 1),
//   SU(2)   Perelomov displaced extremal states of an energy level.
//
// Parameter convention: z = |z| e^{-i phi}, phi in [0, 2pi).

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "radosc/errors.hpp"
#include "radosc/operators.hpp"
#include "radosc/specfun.hpp"
#include "radosc/statespace.hpp"

namespace radosc {

/// Coherent-state parameter stored as modulus and phase, z = |z| e^{-i phase}.
struct ZParam {
  double modulus = 0.0;
  double phase = 0.0;

  static ZParam from_polar(double modulus, double phase) {
    if (!(modulus >= 0.0)) throw DomainError("ZParam: modulus must be >= 0");
    const double two_pi = 2.0 * std::numbers::pi;
    double p = std::fmod(phase, two_pi);
    if (p < 0.0) p += two_pi;
    if (p >= two_pi) p = 0.0;
    return {modulus, p};
  }
  static ZParam from_complex(cplx z) { return from_polar(std::abs(z), -std::arg(z)); }

  cplx value() const { return std::polar(modulus, -phase); }
};

enum class CoherentFamily { BG, SU11P, SU2P };

constexpr std::string_view to_string(CoherentFamily f) {
  switch (f) {
    case CoherentFamily::BG: return "bg";
    case CoherentFamily::SU11P: return "su11p";
    case CoherentFamily::SU2P: return "su2p";
  }
  return "?";
}

/// label is l for BG / SU11P and n for SU2P; trunc is the minimum number of
/// series terms (auto-extended until the dropped tail is negligible).
struct CoherentSpec {
  CoherentFamily family = CoherentFamily::BG;
  int label = 0;
  cplx z{};
  int trunc = 1;
};

/// Dropped-tail probability mass tolerated by the series constructors. The
/// amplitude tail, not just the mass, has to be negligible for pointwise
/// densities, hence far below 1e-14.
inline constexpr double kTailMass = 1e-30;

/// State together with the number of series terms kept and a bound on the
/// probability mass that was dropped.
struct SeriesState {
  StateVector state;
  int trunc = 0;
  double tail_bound = 0.0;
};

namespace detail {

/// Builds sum_{s<T} c_s |s>_l from log|c_s| and the ratio q_s = |c_{s+1}|^2/|c_s|^2,
/// which must be non-increasing in s. T >= min_terms and the tail bound
/// |c_{T-1}|^2 q/(1-q) is below kTailMass.
template <typename LogMag, typename Ratio>
SeriesState build_vertical_series(int ell, cplx z, int min_terms, LogMag&& log_mag, Ratio&& ratio,
                                  const SeriesControl& ctl, const char* what) {
  if (min_terms < 1) throw DomainError(std::string(what) + ": truncation must be >= 1");
  const double arg = std::arg(z);
  StateVector::Map amps;
  for (int s = 0; s < ctl.max_terms; ++s) {
    const double mag = std::exp(log_mag(s));
    amps[QNums{s, ell}] = std::polar(mag, s * arg);
    if (s + 1 < min_terms) continue;
    const double q = ratio(s);
    if (q < 1.0) {
      const double tail = mag * mag * q / (1.0 - q);
      if (tail < kTailMass) return {StateVector(std::move(amps)), s + 1, tail};
    }
  }
  throw NonConvergence(std::string(what) + ": tail mass above tolerance after " +
                       std::to_string(ctl.max_terms) + " terms");
}

}  // namespace detail

/// c_s = N z^s / sqrt(Gamma(s+1) Gamma(s+l+3/2)), N = |z|^{(2l+1)/4} / sqrt(I_{l+1/2}(2|z|)).
inline SeriesState bg_series(int ell, cplx z, int trunc = 1, const SeriesControl& ctl = {}) {
  if (ell < 0) throw DomainError("bg_state: l must be >= 0");
  const double mod = std::abs(z);
  if (mod == 0.0) return {StateVector::ket(0, ell), 1, 0.0};
  const double log_mod = std::log(mod);
  const double log_norm = 0.25 * (2.0 * ell + 1.0) * log_mod -
                          0.5 * std::log(bessel_i(ell + 0.5, 2.0 * mod, ctl));
  return detail::build_vertical_series(
      ell, z, trunc,
      [&](int s) {
        return log_norm + s * log_mod - 0.5 * (log_gamma(s + 1.0) + log_gamma(s + ell + 1.5));
      },
      [&](int s) { return mod * mod / ((s + 1.0) * (s + ell + 1.5)); }, ctl, "bg_state");
}

inline StateVector bg_state(int ell, cplx z, int trunc = 1, const SeriesControl& ctl = {}) {
  return bg_series(ell, z, trunc, ctl).state;
}

/// c_s = (1-|z|^2)^{(2l+3)/4} sqrt(Gamma(s+l+3/2)/(Gamma(s+1) Gamma(l+3/2))) z^s.
inline SeriesState su11_perelomov_series(int ell, cplx z, int trunc = 1,
                                         const SeriesControl& ctl = {}) {
  if (ell < 0) throw DomainError("su11_perelomov_state: l must be >= 0");
  const double mod = std::abs(z);
  if (!(mod < 1.0)) throw DomainError("su11_perelomov_state: |z| must be < 1");
  if (mod == 0.0) return {StateVector::ket(0, ell), 1, 0.0};
  const double log_mod = std::log(mod);
  const double log_pref = 0.25 * (2.0 * ell + 3.0) * std::log1p(-mod * mod);
  const double lg_vac = log_gamma(ell + 1.5);
  return detail::build_vertical_series(
      ell, z, trunc,
      [&](int s) {
        return log_pref + s * log_mod +
               0.5 * (log_gamma(s + ell + 1.5) - log_gamma(s + 1.0) - lg_vac);
      },
      [&](int s) { return mod * mod * (s + ell + 1.5) / (s + 1.0); }, ctl,
      "su11_perelomov_state");
}

inline StateVector su11_perelomov_state(int ell, cplx z, int trunc = 1,
                                        const SeriesControl& ctl = {}) {
  return su11_perelomov_series(ell, z, trunc, ctl).state;
}

/// Closed-form BG wavefunction sqrt(2r / I_{l+1/2}(2|z|)) e^{z - r^2/2} J_{l+1/2}(2r sqrt z).
/// Only |.|^2 is convention independent; sqrt z is the principal root.
inline cplx bg_wavefunction_closed(int ell, cplx z, double r, const SeriesControl& ctl = {}) {
  if (!(r > 0.0)) throw DomainError("bg_wavefunction_closed: r must be > 0");
  if (std::abs(z) == 0.0)
    throw DomainError("bg_wavefunction_closed: z = 0 is a 0/0 limit; use the series state");
  const double nu = ell + 0.5;
  const double i_norm = bessel_i(nu, 2.0 * std::abs(z), ctl);
  return std::sqrt(2.0 * r / i_norm) * std::exp(z - 0.5 * r * r) *
         bessel_j_complex(nu, 2.0 * r * std::sqrt(z), ctl);
}

/// Closed-form SU(1,1) Perelomov wavefunction
///   sqrt(2/Gamma(l+3/2)) [sqrt(1-|z|^2)/(1-z)]^{(2l+3)/2} r^{l+1} exp(-r^2 (1+z) / (2(1-z))).
inline cplx su11_perelomov_wavefunction_closed(int ell, cplx z, double r) {
  if (!(r > 0.0)) throw DomainError("su11_perelomov_wavefunction_closed: r must be > 0");
  const double mod = std::abs(z);
  if (!(mod < 1.0)) throw DomainError("su11_perelomov_wavefunction_closed: |z| must be < 1");
  const cplx base = std::sqrt(1.0 - mod * mod) / (1.0 - z);
  const cplx log_val = 0.5 * (std::log(2.0) - log_gamma(ell + 1.5)) +
                       0.5 * (2.0 * ell + 3.0) * std::log(base) + (ell + 1.0) * std::log(r) -
                       0.5 * r * r * (1.0 + z) / (1.0 - z);
  return std::exp(log_val);
}

/// (1+|z|^2)^{-j} sum_k sqrt(C(2j, k)) z^k |n, n-2k>_e.
inline StateVector su2_perelomov_state(int n, cplx z) {
  if (n < 0) throw DomainError("su2_perelomov_state: n must be >= 0");
  const int two_j = su2_two_j(n);
  const double mod2 = std::norm(z);
  const double pref = std::pow(1.0 + mod2, -0.5 * two_j);
  StateVector::Map amps;
  cplx zk = 1.0;
  for (int k = 0; k <= two_j; ++k, zk *= z)
    amps[QNums::from_energy(n, n - 2 * k)] = pref * std::sqrt(binomial(two_j, k)) * zk;
  return StateVector(std::move(amps));
}

enum class GroupKind { SU11, SU2 };

/// Displacement parameter xi -> coherent-state label z:
/// SU11: (xi/|xi|) tanh|xi|, SU2: (xi/|xi|) tan|xi|.
inline cplx xi_to_z(GroupKind group, cplx xi) {
  const double m = std::abs(xi);
  if (m == 0.0) return 0.0;
  const cplx unit = xi / m;
  if (group == GroupKind::SU11) return unit * std::tanh(m);
  if (std::abs(std::cos(m)) < 1e-12) throw PoleError("xi_to_z: tan|xi| diverges at |xi| = pi/2 + k pi");
  return unit * std::tan(m);
}

/// Probability C(2j, r) |z|^{2r} / (1+|z|^2)^{2j} of finding l = n - 2r in the
/// SU(2) Perelomov state of level n.
inline double transition_probability(int n, int r_index, double z_mod) {
  if (n < 0) throw DomainError("transition_probability: n must be >= 0");
  const int two_j = su2_two_j(n);
  if (r_index < 0 || r_index > two_j)
    throw DomainError("transition_probability: index must lie in [0, 2j]");
  if (!(z_mod >= 0.0)) throw DomainError("transition_probability: |z| must be >= 0");
  const double a = z_mod * z_mod;
  return binomial(two_j, r_index) * std::pow(a, r_index) / std::pow(1.0 + a, two_j);
}

/// Dispatch on the family. SU2P ignores trunc.
inline StateVector make_state(const CoherentSpec& spec, const SeriesControl& ctl = {}) {
  switch (spec.family) {
    case CoherentFamily::BG: return bg_state(spec.label, spec.z, spec.trunc, ctl);
    case CoherentFamily::SU11P: return su11_perelomov_state(spec.label, spec.z, spec.trunc, ctl);
    case CoherentFamily::SU2P: return su2_perelomov_state(spec.label, spec.z);
  }
  throw DomainError("make_state: unknown family");
}

}  // namespace radosc
