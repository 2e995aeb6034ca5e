#pragma once

// Free evolution of the su(1,1) coherent states. H_l = 4 lambda L3 rotates the
// label, z(t) = z e^{-4 i lambda t}; the state-independent phase
// e^{-i lambda (2l+3) t} is dropped since only densities and means are reported.
//
// Reduced time tau = 4 lambda t is the rotation angle of z, so tau = 2 pi is
// one full period of every density.

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "radosc/coherent.hpp"
#include "radosc/errors.hpp"
#include "radosc/grid.hpp"
#include "radosc/observables.hpp"
#include "radosc/statespace.hpp"

namespace radosc {

inline cplx evolve_z(cplx z, double t, double lambda = 1.0) {
  return z * std::polar(1.0, -4.0 * lambda * t);
}

inline double reduced_time(double t, double lambda = 1.0) { return 4.0 * lambda * t; }
inline double time_from_reduced(double tau, double lambda = 1.0) { return tau / (4.0 * lambda); }

struct EvolutionSpec {
  CoherentSpec family;
  double lambda = 1.0;
  std::vector<double> t_grid;
  std::vector<double> r_grid;

  void validate() const {
    if (family.family == CoherentFamily::SU2P)
      throw DomainError("EvolutionSpec: SU(2) states have no single-l density to evolve");
    if (!(lambda > 0.0)) throw DomainError("EvolutionSpec: lambda must be > 0");
    auto increasing = [](const std::vector<double>& v) {
      for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
      return true;
    };
    if (t_grid.empty() || !increasing(t_grid))
      throw DomainError("EvolutionSpec: t grid must be non-empty and strictly increasing");
    if (!increasing(r_grid)) throw DomainError("EvolutionSpec: r grid must be strictly increasing");
    if (!r_grid.empty() && !(r_grid.front() > 0.0))
      throw DomainError("EvolutionSpec: r grid must be positive");
  }
};

inline std::map<std::string, std::string> evolution_metadata(const EvolutionSpec& spec) {
  const auto& fmt = format_double;
  return {{"family", std::string(to_string(spec.family.family))},
          {"ell", std::to_string(spec.family.label)},
          {"z_re", fmt(spec.family.z.real())},
          {"z_im", fmt(spec.family.z.imag())},
          {"lambda", fmt(spec.lambda)},
          {"tau", "4*lambda*t"}};
}

/// Rows: tau (aux t), columns: r, values: |psi(r; t)|^2.
inline GridResult density_evolution(const EvolutionSpec& spec, const SeriesControl& ctl = {}) {
  spec.validate();
  GridResult g;
  g.row_axis.name = "tau";
  g.aux_row_axis = Axis{"t", spec.t_grid};
  g.col_axis = {"r", spec.r_grid};
  g.metadata = evolution_metadata(spec);
  for (double t : spec.t_grid) {
    g.row_axis.values.push_back(reduced_time(t, spec.lambda));
    CoherentSpec cs = spec.family;
    cs.z = evolve_z(spec.family.z, t, spec.lambda);
    g.values.push_back(evaluate_density(make_state(cs, ctl), spec.r_grid));
  }
  return g;
}

struct TrajectoryPoint {
  double t = 0.0;
  double tau = 0.0;
  double mean_1 = 0.0;
  double mean_2 = 0.0;
};

/// Series-route <L1>, <L2> of the evolving BG state. With <L-> = z(t) =
/// |z| e^{-i(phi + 4 lambda t)} these trace <L1> = |z| cos(phi + 4 lambda t),
/// <L2> = |z| sin(phi + 4 lambda t).
inline std::vector<TrajectoryPoint> quadrature_trajectory(const EvolutionSpec& spec,
                                                          const SeriesControl& ctl = {}) {
  spec.validate();
  if (spec.family.family != CoherentFamily::BG)
    throw DomainError("quadrature_trajectory: only the BG family is supported");
  std::vector<TrajectoryPoint> out;
  for (double t : spec.t_grid) {
    const cplx zt = evolve_z(spec.family.z, t, spec.lambda);
    const auto rep = su11_variances_series(bg_state(spec.family.label, zt, spec.family.trunc, ctl));
    out.push_back({t, reduced_time(t, spec.lambda), *rep.mean_1, *rep.mean_2});
  }
  return out;
}

}  // namespace radosc
