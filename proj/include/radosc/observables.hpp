#pragma once

// Expectation values and quadrature variances of the su(1,1) and su(2)
// generators, Wodkiewicz-Eberly squeezing classification, classical turning
// points and two-qubit concurrence.
//
// Quadratures: L1 = (L+ + L-)/2, L2 = (L+ - L-)/(2i); same for S1, S2.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "radosc/coherent.hpp"
#include "radosc/errors.hpp"
#include "radosc/grid.hpp"
#include "radosc/operators.hpp"
#include "radosc/statespace.hpp"

namespace radosc {

inline constexpr double kSqueezeTol = 1e-9;

struct VarianceReport {
  double mean_3 = 0.0;
  double var_1 = 0.0;
  double var_2 = 0.0;
  double bound = 0.0;
  bool squeezed_1 = false;
  bool squeezed_2 = false;
  bool minimum_uncertainty = false;
  std::optional<double> mean_1;
  std::optional<double> mean_2;

  /// Fills bound = |mean_3|/2 and the three flags.
  static VarianceReport make(double mean_3, double var_1, double var_2, double tol = kSqueezeTol) {
    VarianceReport r;
    r.mean_3 = mean_3;
    r.var_1 = std::max(0.0, var_1);
    r.var_2 = std::max(0.0, var_2);
    r.bound = 0.5 * std::abs(mean_3);
    r.squeezed_1 = r.var_1 < r.bound - tol;
    r.squeezed_2 = r.var_2 < r.bound - tol;
    r.minimum_uncertainty = std::abs(std::sqrt(r.var_1 * r.var_2) - r.bound) < tol;
    return r;
  }
};

/// Series route: every moment comes from applying L+- / L3 to the state.
inline VarianceReport su11_variances_series(const StateVector& state, double tol = kSqueezeTol) {
  if (state.empty()) throw DomainError("su11_variances_series: empty state");
  if (!state.single_ell())
    throw DomainError("su11_variances_series: state mixes several l values");
  const double nrm = state.norm_squared();
  auto expect = [&](const StateVector& image) { return inner_product(state, image) / nrm; };

  const StateVector lp = apply(OpKind::LPlus, state);
  const StateVector lm = apply(OpKind::LMinus, state);
  const double mean_3 = expect(apply(OpKind::L3, state)).real();
  const cplx e_plus = expect(lp);
  const cplx e_plus2 = expect(apply(OpKind::LPlus, lp));
  const double e_pm = lm.norm_squared() / nrm;  // <L+ L->
  const double e_mp = lp.norm_squared() / nrm;  // <L- L+>

  const double mean_1 = e_plus.real();
  const double mean_2 = e_plus.imag();
  // <L1^2> = (<L+^2> + <L-^2> + <L+L-> + <L-L+>)/4, <L-^2> = conj <L+^2>.
  const double m11 = 0.25 * (2.0 * e_plus2.real() + e_pm + e_mp);
  const double m22 = 0.25 * (-2.0 * e_plus2.real() + e_pm + e_mp);
  auto r = VarianceReport::make(mean_3, m11 - mean_1 * mean_1, m22 - mean_2 * mean_2, tol);
  r.mean_1 = mean_1;
  r.mean_2 = mean_2;
  return r;
}

/// Closed form for the SU(1,1) Perelomov state:
///   <L3> = (l+3/2)(1+|z|^2) / (2(1-|z|^2)),
///   var_1 = (l+3/2)/4 [1 + (2 Re z/(1-|z|^2))^2], var_2 likewise with Im z.
inline VarianceReport su11_perelomov_variances_closed(int ell, cplx z, double tol = kSqueezeTol) {
  if (ell < 0) throw DomainError("su11_perelomov_variances_closed: l must be >= 0");
  const double a = std::norm(z);
  if (!(a < 1.0)) throw DomainError("su11_perelomov_variances_closed: |z| must be < 1");
  const double k = ell + 1.5;
  const double x = 2.0 * z.real() / (1.0 - a);
  const double y = 2.0 * z.imag() / (1.0 - a);
  auto r = VarianceReport::make(0.5 * k * (1.0 + a) / (1.0 - a), 0.25 * k * (1.0 + x * x),
                                0.25 * k * (1.0 + y * y), tol);
  r.mean_1 = k * z.real() / (1.0 - a);
  r.mean_2 = -k * z.imag() / (1.0 - a);
  return r;
}

/// <S3> in the extremal state of level n: -n/4 (n even), -(n-1)/4 (n odd).
inline double su2_extremal_mean(int n) {
  if (n < 0) throw DomainError("su2: n must be >= 0");
  return -0.5 * su2_two_j(n);
}

/// Closed form for the SU(2) Perelomov state of level n:
///   <S3> = <S3>_0 (1-|z|^2)/(1+|z|^2),
///   var_1 = [(2 Re z/(1+|z|^2))^2 - 1] <S3>_0 / 2, var_2 likewise with Im z.
inline VarianceReport su2_variances_closed(int n, cplx z, double tol = kSqueezeTol) {
  const double m0 = su2_extremal_mean(n);
  const double a = std::norm(z);
  const double x = 2.0 * z.real() / (1.0 + a);
  const double y = 2.0 * z.imag() / (1.0 + a);
  auto r = VarianceReport::make(m0 * (1.0 - a) / (1.0 + a), 0.5 * (x * x - 1.0) * m0,
                                0.5 * (y * y - 1.0) * m0, tol);
  r.mean_1 = -m0 * x;
  r.mean_2 = m0 * y;
  return r;
}

/// Dense route: expectation values of the representation matrices of level n
/// in the Perelomov state written on the same basis.
inline VarianceReport su2_variances_matrix(int n, cplx z, double tol = kSqueezeTol) {
  const RepMatrices rep = su2_rep_matrices(n);
  const StateVector st = su2_perelomov_state(n, z);
  const int d = rep.dim();
  Eigen::VectorXcd psi(d);
  for (int p = 0; p < d; ++p) psi(p) = st.amplitude(rep.basis_map[p]);
  const Eigen::MatrixXcd sp = rep.s_plus.cast<cplx>();
  const Eigen::MatrixXcd sm = rep.s_minus.cast<cplx>();
  const Eigen::MatrixXcd s1 = 0.5 * (sp + sm);
  const Eigen::MatrixXcd s2 = (sp - sm) / cplx(0.0, 2.0);
  const Eigen::MatrixXcd s3 = rep.s3.cast<cplx>();
  auto ev = [&](const Eigen::MatrixXcd& m) { return psi.dot(m * psi).real(); };
  const double m1 = ev(s1);
  const double m2 = ev(s2);
  auto r = VarianceReport::make(ev(s3), ev(s1 * s1) - m1 * m1, ev(s2 * s2) - m2 * m2, tol);
  r.mean_1 = m1;
  r.mean_2 = m2;
  return r;
}

enum class SqueezeClass { NONE = 0, SQ1 = 1, SQ2 = 2, MINIMUM = 3 };

constexpr std::string_view to_string(SqueezeClass c) {
  switch (c) {
    case SqueezeClass::NONE: return "NONE";
    case SqueezeClass::SQ1: return "SQ1";
    case SqueezeClass::SQ2: return "SQ2";
    case SqueezeClass::MINIMUM: return "MINIMUM";
  }
  return "?";
}

/// A squeezed quadrature wins over the minimum-uncertainty flag: real or
/// imaginary z gives intelligent states that are also squeezed.
inline SqueezeClass classify(const VarianceReport& r) {
  if (r.squeezed_1) return SqueezeClass::SQ1;
  if (r.squeezed_2) return SqueezeClass::SQ2;
  if (r.minimum_uncertainty) return SqueezeClass::MINIMUM;
  return SqueezeClass::NONE;
}

/// Rows: |z| (mod_grid), columns: phi (phase_grid), z = |z| e^{-i phi}.
/// Values are SqueezeClass codes.
inline GridResult squeezing_map(GroupKind group, int label, std::span<const double> mod_grid,
                                std::span<const double> phase_grid, double tol = kSqueezeTol) {
  GridResult g;
  g.row_axis = {"mod", {mod_grid.begin(), mod_grid.end()}};
  g.col_axis = {"phase", {phase_grid.begin(), phase_grid.end()}};
  g.metadata["group"] = group == GroupKind::SU11 ? "su11" : "su2";
  g.metadata[group == GroupKind::SU11 ? "ell" : "n"] = std::to_string(label);
  g.metadata["codes"] = "0=NONE,1=SQ1,2=SQ2,3=MINIMUM";
  for (double m : mod_grid) {
    if (!(m >= 0.0)) throw DomainError("squeezing_map: |z| must be >= 0");
    std::vector<double> row;
    row.reserve(phase_grid.size());
    for (double phi : phase_grid) {
      const cplx z = std::polar(m, -phi);
      const auto rep = group == GroupKind::SU11 ? su11_perelomov_variances_closed(label, z, tol)
                                                : su2_variances_closed(label, z, tol);
      row.push_back(static_cast<double>(classify(rep)));
    }
    g.values.push_back(std::move(row));
  }
  return g;
}

struct TurningPoints {
  double r_inner = 0.0;
  double r_outer = 0.0;
};

/// Radii where E = l(l+1)/r^2 + r^2.
inline TurningPoints turning_points(double mean_energy, int ell) {
  if (ell < 0) throw DomainError("turning_points: l must be >= 0");
  if (!(mean_energy > 0.0)) throw DomainError("turning_points: energy must be > 0");
  const double c = ell * (ell + 1.0);
  const double disc = mean_energy * mean_energy - 4.0 * c;
  if (disc < 0.0) throw DomainError("turning_points: no classically allowed region at this energy");
  const double root = std::sqrt(disc);
  return {std::sqrt(std::max(0.0, 0.5 * (mean_energy - root))),
          std::sqrt(0.5 * (mean_energy + root))};
}

/// <H_l> = 4 <L3>.
inline double mean_energy(const VarianceReport& r) { return 4.0 * r.mean_3; }

inline double mean_energy(const StateVector& state) {
  if (state.empty()) throw DomainError("mean_energy: empty state");
  return 4.0 * (inner_product(state, apply(OpKind::L3, state)) / state.norm_squared()).real();
}

/// 2|ad - bc| for a|00> + b|01> + c|10> + d|11>. The residual norm error
/// (below 1e-10) is divided out so that rounded inputs such as 1/sqrt(2) hit
/// the endpoints exactly.
inline double concurrence(cplx a, cplx b, cplx c, cplx d) {
  const double nrm = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  if (std::abs(nrm - 1.0) > 1e-10) throw DomainError("concurrence: amplitudes are not normalized");
  return std::min(1.0, 2.0 * std::abs(a * d - b * c) / nrm);
}

}  // namespace radosc
