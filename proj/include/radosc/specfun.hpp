#pragma once

// Special-function kernel used by the radial-oscillator library: log-gamma,
// associated Laguerre and Legendre polynomials, the ascending power series of
// I_nu and J_nu (complex argument), and Kummer's confluent hypergeometric 1F1.
//
// Every series in this file terminates with the same policy: stop once
// `consecutive_small` successive terms each satisfy
//   |term| <= rel_tol * |partial sum|.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "radosc/errors.hpp"

namespace radosc {

struct SeriesControl {
  double rel_tol = 1e-14;
  int max_terms = 10'000;
  int consecutive_small = 3;

  void validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("SeriesControl: rel_tol must be > 0");
    if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
    if (consecutive_small < 1)
      throw DomainError("SeriesControl: consecutive_small must be >= 1");
  }
};

namespace detail {

/// Sums t_0 + t_1 + ... where t_{k+1} = t_k * ratio(k). `what` names the
/// function for the non-convergence diagnostic.
template <typename T, typename Ratio>
T sum_series(T first, Ratio&& ratio, const SeriesControl& ctl, const char* what) {
  ctl.validate();
  T sum = first;
  T term = first;
  int small_run = std::abs(first) == 0.0 ? 1 : 0;
  for (int k = 0; k + 1 < ctl.max_terms; ++k) {
    if (small_run >= ctl.consecutive_small) return sum;
    term *= ratio(k);
    sum += term;
    if (std::abs(term) <= ctl.rel_tol * std::abs(sum))
      ++small_run;
    else
      small_run = 0;
  }
  if (small_run >= ctl.consecutive_small) return sum;
  throw NonConvergence(std::string(what) + ": series did not converge within " +
                       std::to_string(ctl.max_terms) + " terms");
}

}  // namespace detail

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("log_gamma: argument must be a positive finite real, got " +
                      std::to_string(x));
  return std::lgamma(x);
}

/// Binomial coefficient C(n, k) as a double (multiplicative form, exact while
/// the result fits in the 53-bit mantissa).
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// L_k^(alpha)(x) by the three-term recurrence in k.
inline double assoc_laguerre(int k, double alpha, double x) {
  if (k < 0) throw DomainError("assoc_laguerre: degree must be >= 0");
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int m = 1; m < k; ++m) {
    const double next = ((2.0 * m + 1.0 + alpha - x) * cur - (m + alpha) * prev) / (m + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// P_l(x) on [-1, 1] by Bonnet's recurrence.
inline double legendre_p(int ell, double x) {
  if (ell < 0) throw DomainError("legendre_p: degree must be >= 0");
  if (!(std::abs(x) <= 1.0)) throw DomainError("legendre_p: |x| must be <= 1");
  double prev = 1.0;
  if (ell == 0) return prev;
  double cur = x;
  for (int m = 1; m < ell; ++m) {
    const double next = ((2.0 * m + 1.0) * x * cur - m * prev) / (m + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// I_nu(x) = (x/2)^nu sum_k (x^2/4)^k / (k! Gamma(k+nu+1)), x >= 0, nu >= 0.
inline double bessel_i(double nu, double x, const SeriesControl& ctl = {}) {
  if (!(nu >= 0.0)) throw DomainError("bessel_i: order must be >= 0");
  if (!(x >= 0.0)) throw DomainError("bessel_i: argument must be >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double q = 0.25 * x * x;
  const double first = std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0));
  return detail::sum_series(
      first, [&](int k) { return q / ((k + 1.0) * (k + 1.0 + nu)); }, ctl, "bessel_i");
}

/// J_nu(w) for complex w via the alternating ascending series. The factor
/// (w/2)^nu uses the principal branch, arg(w) in (-pi, pi].
inline std::complex<double> bessel_j_complex(double nu, std::complex<double> w,
                                             const SeriesControl& ctl = {}) {
  using cplx = std::complex<double>;
  if (!(nu >= 0.0)) throw DomainError("bessel_j_complex: order must be >= 0");
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw DomainError("bessel_j_complex: argument must be finite");
  if (w == cplx{0.0, 0.0}) return nu == 0.0 ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
  const cplx q = -0.25 * w * w;
  const cplx first = std::exp(nu * std::log(0.5 * w) - log_gamma(nu + 1.0));
  return detail::sum_series(
      first, [&](int k) { return q / ((k + 1.0) * (k + 1.0 + nu)); }, ctl,
      "bessel_j_complex");
}

/// Kummer's 1F1(a; c; x) by its power series.
inline double hyp1f1(double a, double c, double x, const SeriesControl& ctl = {}) {
  if (c <= 0.0 && c == std::floor(c))
    throw PoleError("hyp1f1: c = " + std::to_string(c) + " is a non-positive integer");
  return detail::sum_series(
      1.0, [&](int k) { return (a + k) / (c + k) * x / (k + 1.0); }, ctl, "hyp1f1");
}

}  // namespace radosc
