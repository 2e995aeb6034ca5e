#pragma once

// Quantum-number lattice (s, l) of the radial oscillator, its three hierarchy
// decompositions, sparse state vectors and position-space wavefunctions.
// Units: lambda = 1 throughout, m = 0.

#include <cmath>
#include <compare>
#include <complex>
#include <initializer_list>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radosc/errors.hpp"
#include "radosc/specfun.hpp"

namespace radosc {

using cplx = std::complex<double>;

/// Lattice point |s, l> = |n, l>_e with n = 2s + l.
struct QNums {
  int s = 0;
  int ell = 0;

  constexpr int n() const { return 2 * s + ell; }

  /// Ordered by (l, s), the serialization order.
  friend constexpr std::strong_ordering operator<=>(const QNums& a, const QNums& b) {
    if (auto c = a.ell <=> b.ell; c != 0) return c;
    return a.s <=> b.s;
  }
  friend constexpr bool operator==(const QNums&, const QNums&) = default;

  /// Energy-space label |n, l>_e.
  static QNums from_energy(int n, int ell) {
    if (ell < 0 || ell > n || (n - ell) % 2 != 0)
      throw DomainError("|n=" + std::to_string(n) + ", l=" + std::to_string(ell) +
                        ">_e is not a lattice point");
    return {(n - ell) / 2, ell};
  }
};

inline std::string to_string(const QNums& q) {
  return "|s=" + std::to_string(q.s) + ",l=" + std::to_string(q.ell) + ">";
}

/// Amplitudes with magnitude below this are dropped.
inline constexpr double kPruneThreshold = 1e-15;

/// Sparse superposition of lattice kets. Immutable once built.
class StateVector {
 public:
  using Map = std::map<QNums, cplx>;

  StateVector() = default;
  explicit StateVector(Map amplitudes) : amps_(std::move(amplitudes)) { prune(); }
  StateVector(std::initializer_list<std::pair<const QNums, cplx>> entries)
      : amps_(entries) {
    prune();
  }

  static StateVector ket(int s, int ell, cplx amp = 1.0) {
    if (s < 0 || ell < 0) throw UnphysicalState("negative quantum number in " + to_string({s, ell}));
    return StateVector(Map{{QNums{s, ell}, amp}});
  }

  const Map& amplitudes() const { return amps_; }
  bool empty() const { return amps_.empty(); }
  std::size_t size() const { return amps_.size(); }

  cplx amplitude(const QNums& q) const {
    auto it = amps_.find(q);
    return it == amps_.end() ? cplx{} : it->second;
  }

  double norm_squared() const {
    double acc = 0.0;
    for (const auto& [q, a] : amps_) acc += std::norm(a);
    return acc;
  }
  double norm() const { return std::sqrt(norm_squared()); }

  /// The common l when every stored ket shares one orbital number.
  std::optional<int> single_ell() const {
    if (amps_.empty()) return std::nullopt;
    const int ell = amps_.begin()->first.ell;
    for (const auto& [q, a] : amps_)
      if (q.ell != ell) return std::nullopt;
    return ell;
  }

  bool approx_equal(const StateVector& other, double tol) const {
    for (const auto& [q, a] : amps_)
      if (std::abs(a - other.amplitude(q)) > tol) return false;
    for (const auto& [q, a] : other.amps_)
      if (std::abs(a - amplitude(q)) > tol) return false;
    return true;
  }

  friend StateVector operator+(const StateVector& a, const StateVector& b) {
    Map out = a.amps_;
    for (const auto& [q, v] : b.amps_) out[q] += v;
    return StateVector(std::move(out));
  }
  friend StateVector operator-(const StateVector& a, const StateVector& b) {
    return a + (-1.0) * b;
  }
  friend StateVector operator*(cplx c, const StateVector& v) {
    Map out = v.amps_;
    for (auto& [q, a] : out) a *= c;
    return StateVector(std::move(out));
  }

 private:
  void prune() {
    std::erase_if(amps_, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
  }

  Map amps_;
};

/// Sum_q conj(u_q) v_q over shared kets; basis kets are orthonormal in (s, l).
inline cplx inner_product(const StateVector& u, const StateVector& v) {
  const auto& a = u.amplitudes();
  const auto& b = v.amplitudes();
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  const bool conj_small = &small == &a;
  cplx acc{};
  for (const auto& [q, x] : small) {
    auto it = large.find(q);
    if (it == large.end()) continue;
    acc += conj_small ? std::conj(x) * it->second : std::conj(it->second) * x;
  }
  return acc;
}

/// E = 4s + 2l + 3 (lambda = 1).
constexpr double energy(const QNums& q) { return 4.0 * q.s + 2.0 * q.ell + 3.0; }

/// Accidental degeneracy of level n.
constexpr int degeneracy(int n) { return n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2; }

enum class HierarchyKind { Vertical, Horizontal, Diagonal };

/// Vertical(l): fixed l, s = 0..truncation. Horizontal(n): 2s + l = n.
/// Diagonal(2j_C): s + l = 2j_C.
struct HierarchyId {
  HierarchyKind kind = HierarchyKind::Vertical;
  int label = 0;
  std::optional<int> truncation;

  static HierarchyId vertical(int ell, std::optional<int> truncation) {
    return {HierarchyKind::Vertical, ell, truncation};
  }
  static HierarchyId horizontal(int n) { return {HierarchyKind::Horizontal, n, std::nullopt}; }
  static HierarchyId diagonal(int two_jc) { return {HierarchyKind::Diagonal, two_jc, std::nullopt}; }
};

inline std::vector<QNums> enumerate_hierarchy(const HierarchyId& h) {
  if (h.label < 0) throw DomainError("enumerate_hierarchy: label must be >= 0");
  std::vector<QNums> out;
  switch (h.kind) {
    case HierarchyKind::Vertical:
      if (!h.truncation) throw DomainError("enumerate_hierarchy: Vertical hierarchy needs a truncation");
      if (*h.truncation < 0) throw DomainError("enumerate_hierarchy: truncation must be >= 0");
      for (int s = 0; s <= *h.truncation; ++s) out.push_back({s, h.label});
      break;
    case HierarchyKind::Horizontal:
      for (int ell = h.label; ell >= 0; ell -= 2) out.push_back({(h.label - ell) / 2, ell});
      break;
    case HierarchyKind::Diagonal:
      for (int ell = 0; ell <= h.label; ++ell) out.push_back({h.label - ell, ell});
      break;
  }
  return out;
}

/// u_{s l}(r) = sqrt(2 Gamma(s+1)/Gamma(s+l+3/2)) r^{l+1} e^{-r^2/2} L_s^{(l+1/2)}(r^2).
inline double radial_wavefunction(const QNums& q, double r) {
  if (!(r > 0.0)) throw DomainError("radial_wavefunction: r must be > 0");
  const double log_pref = 0.5 * (std::log(2.0) + log_gamma(q.s + 1.0) - log_gamma(q.s + q.ell + 1.5)) +
                          (q.ell + 1.0) * std::log(r) - 0.5 * r * r;
  return std::exp(log_pref) * assoc_laguerre(q.s, q.ell + 0.5, r * r);
}

/// u_{0 l}(r), ..., u_{smax l}(r) at one radius. Runs the Laguerre recurrence on
/// the normalized functions so nothing overflows for large s or l.
inline std::vector<double> radial_wavefunctions(int ell, int smax, double r) {
  if (!(r > 0.0)) throw DomainError("radial_wavefunctions: r must be > 0");
  std::vector<double> u(static_cast<std::size_t>(smax) + 1);
  const double alpha = ell + 0.5;
  const double x = r * r;
  u[0] = std::exp(0.5 * std::log(2.0) + (ell + 1.0) * std::log(r) - 0.5 * x -
                  0.5 * log_gamma(alpha + 1.0));
  if (smax == 0) return u;
  u[1] = (1.0 + alpha - x) * u[0] / std::sqrt(alpha + 1.0);
  for (int s = 1; s < smax; ++s) {
    u[s + 1] = ((2.0 * s + 1.0 + alpha - x) * u[s] - std::sqrt(s * (s + alpha)) * u[s - 1]) /
               std::sqrt((s + 1.0) * (s + alpha + 1.0));
  }
  return u;
}

/// Theta_{l,0}(theta) = sqrt((2l+1)/2) P_l(cos theta).
inline double angular_wavefunction(int ell, double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw DomainError("angular_wavefunction: theta must lie in [0, pi]");
  return std::sqrt((2.0 * ell + 1.0) / 2.0) * legendre_p(ell, std::cos(theta));
}

/// |sum_s c_s u_{s l}(r)|^2 on each grid point. Single-l states only.
inline std::vector<double> evaluate_density(const StateVector& state, std::span<const double> r_grid) {
  std::vector<double> out(r_grid.size(), 0.0);
  if (state.empty()) return out;
  const auto ell = state.single_ell();
  if (!ell) throw DomainError("evaluate_density: state mixes several l values; densities need a single l");
  const int smax = std::prev(state.amplitudes().end())->first.s;
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const auto u = radial_wavefunctions(*ell, smax, r_grid[i]);
    cplx psi{};
    for (const auto& [q, c] : state.amplitudes()) psi += c * u[q.s];
    out[i] = std::norm(psi);
  }
  return out;
}

/// General (not necessarily regular) solution of the radial equation,
///   u = r^{l+1} e^{-r^2/2} [gamma 1F1(l/2+3/4-E/2; l+3/2; r^2)
///                           + delta r^{-(2l+1)} 1F1(-l/2+1/4-E/2; -l+1/2; r^2)].
inline double general_u(double e_dimless, int ell, double gamma, double delta, double r,
                        const SeriesControl& ctl = {}) {
  const double x = r * r;
  double bracket = 0.0;
  if (gamma != 0.0) bracket += gamma * hyp1f1(0.5 * ell + 0.75 - 0.5 * e_dimless, ell + 1.5, x, ctl);
  if (delta != 0.0)
    bracket += delta * std::pow(r, -(2.0 * ell + 1.0)) *
               hyp1f1(-0.5 * ell + 0.25 - 0.5 * e_dimless, -ell + 0.5, x, ctl);
  return std::pow(r, ell + 1.0) * std::exp(-0.5 * x) * bracket;
}

/// -u'' + [l(l+1)/r^2 + r^2 - 2E] u at r, with u'' by central differences (h = 1e-4).
inline double general_u_residual(double e_dimless, int ell, double gamma, double delta, double r,
                                 const SeriesControl& ctl = {}) {
  constexpr double h = 1e-4;
  if (!(r > h)) throw DomainError("general_u_residual: r must exceed the difference step");
  if (ell < 0) throw DomainError("general_u_residual: l must be >= 0");
  const double um = general_u(e_dimless, ell, gamma, delta, r - h, ctl);
  const double u0 = general_u(e_dimless, ell, gamma, delta, r, ctl);
  const double up = general_u(e_dimless, ell, gamma, delta, r + h, ctl);
  const double upp = (up - 2.0 * u0 + um) / (h * h);
  return -upp + (ell * (ell + 1.0) / (r * r) + r * r - 2.0 * e_dimless) * u0;
}

}  // namespace radosc
