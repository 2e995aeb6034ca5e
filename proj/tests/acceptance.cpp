// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "radosc/radosc.hpp"

using namespace radosc;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  %2d  %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::vector<double> grid(double a, double b, double step) {
  std::vector<double> v;
  const int n = static_cast<int>(std::llround((b - a) / step));
  for (int i = 0; i <= n; ++i) v.push_back(a + step * i);
  return v;
}

int local_maxima(const std::vector<double>& d) {
  int count = 0;
  for (std::size_t i = 1; i + 1 < d.size(); ++i)
    if (d[i] > d[i - 1] && d[i] >= d[i + 1]) ++count;
  return count;
}

void algebra_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto basis = lattice_block(2, 8, 2, 8);
  double worst = 0.0;
  for (const auto& rel : algebra_relations())
    worst = std::max(worst, commutator_residual(rel.a, rel.b, rel.expected, basis));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, worst < 1e-12 && secs < 5.0, "algebra suite",
         std::to_string(algebra_relations().size()) + " relations, max residual " + sci(worst) + " (< 1e-12), " +
             sci(secs) + " s (< 5 s)");
}

void bg_eigenstate() {
  double worst = 0.0;
  for (int ell : {0, 1, 2, 20})
    for (double m : {0.5, 3.0, 8.0})
      for (double phi : {0.0, kPi / 2, kPi}) {
        const cplx z = std::polar(m, -phi);
        const auto ser = bg_series(ell, z);
        const auto lhs = apply(OpKind::LMinus, ser.state);
        double sq = 0.0;
        for (int s = 0; s < ser.trunc - 1; ++s)
          sq += std::norm(lhs.amplitude({s, ell}) - z * ser.state.amplitude({s, ell}));
        worst = std::max(worst, std::sqrt(sq));
      }
  report(2, worst < 1e-10, "BG eigenstate of L-", "max ||L-|z> - z|z>|| = " + sci(worst) + " (< 1e-10)");
}

void bg_minimum_uncertainty() {
  double worst = 0.0;
  for (int ell : {0, 1, 2, 20})
    for (double m : {0.5, 3.0, 8.0})
      for (double phi : {0.0, kPi / 2, kPi}) {
        const auto st = bg_state(ell, std::polar(m, -phi));
        double l3 = 0.0;
        for (const auto& [q, c] : st.amplitudes()) l3 += std::norm(c) * (q.s + (2.0 * ell + 3.0) / 4.0);
        const auto r = su11_variances_series(st);
        worst = std::max({worst, std::abs(r.var_1 - 0.5 * l3), std::abs(r.var_2 - 0.5 * l3)});
      }
  report(3, worst < 1e-9, "BG minimum uncertainty", "max |var_i - <L3>/2| = " + sci(worst) + " (< 1e-9)");
}

void closed_forms() {
  const auto r = grid(0.1, 6.0, 0.01);
  double worst_bg = 0.0, worst_p = 0.0;
  for (int ell : {0, 1, 2})
    for (double m : {0.1, 0.4, 0.8}) {
      const auto d = evaluate_density(bg_state(ell, m), r);
      for (std::size_t i = 0; i < r.size(); ++i)
        worst_bg = std::max(worst_bg, std::abs(std::norm(bg_wavefunction_closed(ell, m, r[i])) - d[i]));
      for (double phi : {0.0, kPi / 2, kPi, 3 * kPi / 2}) {
        const cplx z = std::polar(m, -phi);
        const auto dp = evaluate_density(su11_perelomov_state(ell, z), r);
        for (std::size_t i = 0; i < r.size(); ++i)
          worst_p = std::max(worst_p, std::abs(std::norm(su11_perelomov_wavefunction_closed(ell, z, r[i])) - dp[i]));
      }
    }
  report(4, worst_bg < 1e-8 && worst_p < 1e-8, "closed forms vs series",
         "BG max diff " + sci(worst_bg) + ", Perelomov max diff " + sci(worst_p) + " (< 1e-8)");
}

int local_maxima_above(const std::vector<double>& d, double floor) {
  int count = 0;
  for (std::size_t i = 1; i + 1 < d.size(); ++i)
    if (d[i] > floor && d[i] > d[i - 1] && d[i] >= d[i + 1]) ++count;
  return count;
}

void perelomov_single_peak() {
  // The closed form is exact down to underflow. The series sum carries an
  // absolute round-off near 1e-15, so its maxima are counted only above a
  // floor of 1e-12 times the peak.
  const auto r = grid(1e-3, 8.0, 1e-3);
  int bad_closed = 0, bad_series = 0;
  for (int ell : {0, 1, 2})
    for (double phi : {0.0, kPi / 2, kPi}) {
      const cplx z = std::polar(0.5, -phi);
      std::vector<double> closed(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) closed[i] = std::norm(su11_perelomov_wavefunction_closed(ell, z, r[i]));
      const auto series = evaluate_density(su11_perelomov_state(ell, z), r);
      const double peak = *std::max_element(series.begin(), series.end());
      if (local_maxima(closed) != 1) ++bad_closed;
      if (local_maxima_above(series, 1e-12 * peak) != 1) ++bad_series;
    }
  report(5, bad_closed == 0 && bad_series == 0, "Perelomov single peak",
         "cases without exactly one local maximum on a 1e-3 grid: closed form " + std::to_string(bad_closed) +
             "/9, series above 1e-12 of peak " + std::to_string(bad_series) + "/9");
}

void perelomov_squeezing_pattern() {
  const std::vector<double> phases{0.0, kPi / 2, kPi, 3 * kPi / 2};
  const std::vector<double> at{0.5};
  const auto g = squeezing_map(GroupKind::SU11, 0, at, phases);
  const bool pattern = g.values[0][0] == double(SqueezeClass::SQ2) && g.values[0][1] == double(SqueezeClass::SQ1) &&
                       g.values[0][2] == double(SqueezeClass::SQ2) && g.values[0][3] == double(SqueezeClass::SQ1);
  std::vector<double> mods, ph;
  for (int i = 0; i < 20; ++i) mods.push_back(0.05 * i);
  for (int k = 0; k < 72; ++k) ph.push_back(2 * kPi * k / 72);
  const auto full = squeezing_map(GroupKind::SU11, 0, mods, ph);
  bool min_only_origin = true;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < ph.size(); ++j)
      if ((full.values[i][j] == double(SqueezeClass::MINIMUM)) != (mods[i] == 0.0)) min_only_origin = false;
  report(6, pattern && min_only_origin, "Perelomov squeezing pattern",
         std::string("SQ2/SQ1/SQ2/SQ1 at phi = 0, pi/2, pi, 3pi/2: ") + (pattern ? "yes" : "no") +
             "; MINIMUM only at z = 0 on a 20x72 grid: " + (min_only_origin ? "yes" : "no"));
}

void su2_displacement() {
  double worst = 0.0;
  for (int n : {2, 3, 4, 5, 8})
    for (cplx xi : {cplx(0.3, 0.1), cplx(-0.7, 0.4), cplx(0.2, -1.2)}) {
      const auto rep = su2_rep_matrices(n);
      const Eigen::MatrixXcd sp = rep.s_plus.cast<cplx>();
      const Eigen::MatrixXcd gen = xi * sp - std::conj(xi) * sp.adjoint();
      const Eigen::VectorXcd col = gen.exp().col(rep.dim() - 1);
      const auto st = su2_perelomov_state(n, xi_to_z(GroupKind::SU2, xi));
      for (int p = 0; p < rep.dim(); ++p) worst = std::max(worst, std::abs(col(p) - st.amplitude(rep.basis_map[p])));
    }
  report(7, worst < 1e-10, "SU(2) displacement oracle", "max entry diff " + sci(worst) + " (< 1e-10)");
}

void su2_variance_maps() {
  double worst = 0.0;
  for (int n = 0; n <= 12; ++n)
    for (double m : {0.0, 0.3, 1.0, 1.8, 4.0})
      for (int k = 0; k < 8; ++k) {
        const cplx z = std::polar(m, -2 * kPi * k / 8 - 0.05);
        const auto c = su2_variances_closed(n, z);
        const auto d = su2_variances_matrix(n, z);
        worst = std::max({worst, std::abs(c.mean_3 - d.mean_3), std::abs(c.var_1 - d.var_1), std::abs(c.var_2 - d.var_2)});
      }
  auto cls = [](double m, double phi) { return classify(su2_variances_closed(2, std::polar(m, -phi))); };
  bool zones = true;
  for (double phi : {0.0, kPi}) zones &= cls(1.8, phi) == SqueezeClass::SQ1;
  for (double phi : {kPi / 2, 3 * kPi / 2}) zones &= cls(1.8, phi) == SqueezeClass::SQ2;
  for (int k : {1, 3, 5, 7}) zones &= cls(1.8, k * kPi / 4) == SqueezeClass::NONE;
  for (int k = 0; k < 16; ++k)
    for (double m : {0.0, 1e-5}) zones &= cls(m, 2 * kPi * k / 16) == SqueezeClass::MINIMUM;
  report(8, worst < 1e-10 && zones, "SU(2) variance maps",
         "closed vs matrix max diff " + sci(worst) + " (< 1e-10); zone layout at n=2, |z|=1.8 " +
             (zones ? "matches" : "does not match"));
}

void transition_probabilities() {
  double worst = 0.0;
  for (int n = 0; n <= 9; ++n)
    for (double m : {0.3, 1.0, 5.0}) {
      double total = 0.0;
      for (int r = 0; r <= su2_two_j(n); ++r) total += transition_probability(n, r, m);
      worst = std::max(worst, std::abs(total - 1.0));
    }
  const double p = transition_probability(4, 1, 1.0);
  report(9, worst <= 1e-14 && std::abs(p - 0.5) < 1e-15, "transition probabilities",
         "max |sum - 1| = " + sci(worst) + " (<= 1e-14), P(4,1,1) = " + format_double(p));
}

void dynamics() {
  EvolutionSpec bg;
  bg.family = {CoherentFamily::BG, 0, 3.0, 1};
  bg.t_grid = {0.0, time_from_reduced(2 * kPi)};
  bg.r_grid = grid(0.01, 8.0, 0.01);
  const auto g = density_evolution(bg);
  double period = 0.0;
  for (std::size_t j = 0; j < g.cols(); ++j) period = std::max(period, std::abs(g.values[0][j] - g.values[1][j]));

  EvolutionSpec orbit;
  orbit.family = {CoherentFamily::BG, 1, std::polar(2.0, -0.7), 1};
  for (int i = 0; i <= 40; ++i) orbit.t_grid.push_back(time_from_reduced(2 * kPi * i / 40));
  double circ = 0.0;
  for (const auto& p : quadrature_trajectory(orbit))
    circ = std::max(circ, std::abs(p.mean_1 * p.mean_1 + p.mean_2 * p.mean_2 - 4.0));

  const double step = 1e-3;
  EvolutionSpec per;
  per.family = {CoherentFamily::SU11P, 0, 0.5, 1};
  per.t_grid = {time_from_reduced(kPi)};
  per.r_grid = grid(step, 6.0, step);
  const auto row = density_evolution(per).values[0];
  std::size_t imax = 0;
  for (std::size_t i = 1; i < row.size(); ++i)
    if (row[i] > row[imax]) imax = i;
  const double peak = per.r_grid[imax];
  const cplx z_pi = evolve_z(per.family.z, per.t_grid[0]);
  const double e = mean_energy(su11_perelomov_variances_closed(0, z_pi));
  const double r_outer = turning_points(e, 0).r_outer;
  const bool peak_ok = std::abs(peak - r_outer) <= step;

  report(10, period < 1e-10 && circ < 1e-10 && peak_ok, "dynamics",
         "BG rows tau=0 vs 2pi max diff " + sci(period) + " (< 1e-10); orbit max |<L1>^2+<L2>^2-|z|^2| " + sci(circ) +
             " (< 1e-10); Perelomov peak at tau=pi r=" + format_double(peak) + " vs r_outer=" +
             format_double(r_outer) + " (E=4<L3>=" + format_double(e) + "), |diff| " +
             sci(std::abs(peak - r_outer)) + " (<= " + sci(step) + ")");
}

void appendix_suite() {
  using boost::math::quadrature::gauss_kronrod;
  double worst = 0.0;
  for (int ell : {0, 1, 5, 20})
    for (int s1 = 0; s1 <= 10; ++s1)
      for (int s2 = s1; s2 <= 10; ++s2) {
        const double v = gauss_kronrod<double, 61>::integrate(
            [&](double r) {
              return r <= 0.0 ? 0.0 : radial_wavefunction({s1, ell}, r) * radial_wavefunction({s2, ell}, r);
            },
            0.0, 14.0, 15, 1e-13);
        worst = std::max(worst, std::abs(v - (s1 == s2 ? 1.0 : 0.0)));
      }
  struct P {
    double e;
    int ell;
    double g, d, r;
  };
  const std::vector<P> pts{{1.5, 0, 1.0, 0.0, 1.0},  {5.5, 0, 1.0, 0.0, 2.0}, {4.5, 1, 2.0, 0.0, 1.3},
                           {2.37, 0, 1.0, 0.0, 1.1}, {3.1, 1, 0.7, 0.4, 0.9}, {6.0, 2, 1.0, 0.2, 1.6}};
  double res = 0.0;
  for (const auto& p : pts) res = std::max(res, std::abs(general_u_residual(p.e, p.ell, p.g, p.d, p.r)));
  report(11, worst < 1e-8 && res < 1e-5, "radial functions",
         "max |<u_s|u_s'> - delta| = " + sci(worst) + " (< 1e-8); max ODE residual over 6 points " + sci(res) +
             " (< 1e-5)");
}

void bookkeeping() {
  bool ok = true;
  for (int n = 0; n <= 40; ++n) {
    const double j = n % 2 == 0 ? n / 4.0 : (n - 1) / 4.0;
    const int len = static_cast<int>(enumerate_hierarchy(HierarchyId::horizontal(n)).size());
    ok &= degeneracy(n) == len && len == static_cast<int>(std::lround(2 * j + 1)) && su2_rep_matrices(n).dim() == len;
  }
  bool chain = true;
  for (int s = 0; s <= 12; ++s) {
    StateVector v = StateVector::ket(s, 0);
    int states = 0;
    while (!v.empty()) {
      ++states;
      v = apply(OpKind::CMinus, v);
    }
    chain &= states == s + 1 && static_cast<int>(enumerate_hierarchy(HierarchyId::diagonal(s)).size()) == s + 1;
  }
  report(12, ok && chain, "degeneracy bookkeeping",
         std::string("degeneracy = |Horizontal(n)| = 2j+1 for n <= 40: ") + (ok ? "yes" : "no") +
             "; diagonal chains from (s,0) have s+1 states for s <= 12: " + (chain ? "yes" : "no"));
}

void concurrence_endpoints() {
  const double h = 1.0 / std::sqrt(2.0);
  const double c0 = concurrence(0.6, 0.8, 0.0, 0.0);
  const double c1 = concurrence(0.0, h, h, 0.0);
  report(13, c0 == 0.0 && c1 == 1.0, "concurrence endpoints",
         "C(c=d=0) = " + format_double(c0) + ", C(a=d=0, b=c=1/sqrt2) = " + format_double(c1));
}

void guarded(const std::function<void()>& f, int id) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, false, "criterion", std::string("threw: ") + e.what());
  }
}

}  // namespace

int main() {
  guarded(algebra_suite, 1);
  guarded(bg_eigenstate, 2);
  guarded(bg_minimum_uncertainty, 3);
  guarded(closed_forms, 4);
  guarded(perelomov_single_peak, 5);
  guarded(perelomov_squeezing_pattern, 6);
  guarded(su2_displacement, 7);
  guarded(su2_variance_maps, 8);
  guarded(transition_probabilities, 9);
  guarded(dynamics, 10);
  guarded(appendix_suite, 11);
  guarded(bookkeeping, 12);
  guarded(concurrence_endpoints, 13);
  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
