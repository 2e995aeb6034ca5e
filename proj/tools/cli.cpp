#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <regex>
#include <sstream>
#include <variant>

#include "radosc/io.hpp"
#include "radosc/radosc.hpp"

namespace radosc::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::optional<double> parse_number(const std::string& s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct GridOutput {
  GridResult grid;
  std::string value_name;
};

struct StateOutput {
  StateVector state;
  std::map<std::string, std::string> metadata;
};

using Output = std::variant<Table, GridOutput, StateOutput>;

/// Shared by every subcommand.
struct Common {
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out_path, "Output file (default: stdout)");
}

/// Phase given on the command line; the text is kept verbatim for metadata.
struct PhaseArg {
  std::string text = "0";
  double value() const {
    auto v = parse_phase(text);
    if (!v) throw CLI::ValidationError("--phase", "cannot parse phase '" + text + "'");
    return *v;
  }
};

void add_phase(CLI::App* sub, PhaseArg& p) {
  sub->add_option("--phase", p.text, "phi in z = |z| e^{-i phi}; radians or multiples of pi")
      ->check([](const std::string& s) {
        return parse_phase(s) ? std::string{} : "invalid phase '" + s + "'";
      });
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw DomainError("grid needs at least one point");
  std::vector<double> v(static_cast<std::size_t>(n));
  if (n == 1) {
    v[0] = a;
    return v;
  }
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return v;
}

/// r_i = rmax * i / N, i = 1..N.
std::vector<double> radial_grid(double rmax, int points) {
  if (!(rmax > 0.0)) throw DomainError("--rmax must be > 0");
  if (points < 1) throw DomainError("--points must be >= 1");
  std::vector<double> r(static_cast<std::size_t>(points));
  for (int i = 1; i <= points; ++i) r[static_cast<std::size_t>(i - 1)] = rmax * i / points;
  return r;
}

SeriesControl series_control() {
  SeriesControl ctl;
  if (const char* env = std::getenv("RADOSC_MAX_TERMS")) {
    int v = 0;
    const std::string s(env);
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || v < 1)
      throw CLI::ValidationError("RADOSC_MAX_TERMS", "must be a positive integer, got '" + s + "'");
    ctl.max_terms = v;
  }
  return ctl;
}

std::map<std::string, std::string> base_metadata(const std::string& command, const SeriesControl& ctl) {
  return {{"command", command},
          {"version", kVersion},
          {"max_terms", std::to_string(ctl.max_terms)},
          {"series_rel_tol", format_double(ctl.rel_tol)},
          {"z_convention", "z=|z|exp(-i*phase)"}};
}

void emit(const Output& result, const Common& c, std::ostream& os) {
  const bool as_json = c.format == "json";
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Table>) {
          if (as_json)
            os << to_json(r).dump(2) << '\n';
          else
            write_csv(os, r);
        } else if constexpr (std::is_same_v<T, GridOutput>) {
          if (as_json) {
            json j = to_json(r.grid);
            j["value_name"] = r.value_name;
            os << j.dump(2) << '\n';
          } else {
            write_csv(os, r.grid, r.value_name);
          }
        } else {
          if (as_json) {
            json j = to_json(r.state);
            j["metadata"] = r.metadata;
            os << j.dump(2) << '\n';
          } else {
            Table t;
            t.metadata = r.metadata;
            t.columns = {"s", "ell", "re", "im"};
            for (const auto& [q, a] : r.state.amplitudes())
              t.add_row({double(q.s), double(q.ell), a.real(), a.imag()});
            write_csv(os, t);
          }
        }
      },
      result);
}

Table density_table(const std::vector<double>& r, const std::vector<double>& d,
                    std::map<std::string, std::string> meta) {
  Table t;
  t.metadata = std::move(meta);
  t.columns = {"r", "density"};
  for (std::size_t i = 0; i < r.size(); ++i) t.add_row({r[i], d[i]});
  return t;
}

}  // namespace

std::optional<double> parse_phase(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$)");
  static const std::regex neg_pi(R"(^\s*-\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, neg_pi)) {
    double v = -kPi;
    if (m[1].matched) v /= std::stod(m[1].str());
    return std::isfinite(v) ? std::optional<double>(v) : std::nullopt;
  }
  if (std::regex_match(text, m, pi_form)) {
    double v = kPi;
    if (m[1].matched) {
      auto f = parse_number(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
      if (!f) return std::nullopt;
      v *= *f;
    }
    if (m[2].matched) {
      const double d = std::stod(m[2].str());
      if (d == 0.0) return std::nullopt;
      v /= d;
    }
    return v;
  }
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  auto v = parse_number(t);
  if (v && !std::isfinite(*v)) return std::nullopt;
  return v;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial oscillator coherent states: figure data and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  std::function<Output()> action;
  std::string command;

  auto register_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, common);
    return sub;
  };

  // algebra-check
  int smin = 2, smax = 8, lmin = 2, lmax = 8;
  {
    auto* sub = register_cmd("algebra-check", "Commutator residuals over a block of the lattice");
    sub->add_option("--smin", smin)->check(CLI::NonNegativeNumber);
    sub->add_option("--smax", smax)->check(CLI::NonNegativeNumber);
    sub->add_option("--lmin", lmin)->check(CLI::NonNegativeNumber);
    sub->add_option("--lmax", lmax)->check(CLI::NonNegativeNumber);
    sub->callback([&] {
      command = "algebra-check";
      action = [&]() -> Output {
        const auto basis = lattice_block(smin, smax, lmin, lmax);
        Table t;
        t.metadata = base_metadata(command, series_control());
        t.metadata["smin"] = std::to_string(smin);
        t.metadata["smax"] = std::to_string(smax);
        t.metadata["lmin"] = std::to_string(lmin);
        t.metadata["lmax"] = std::to_string(lmax);
        t.label_column = "relation";
        t.columns = {"residual"};
        for (const auto& rel : algebra_relations())
          t.add_row({commutator_residual(rel.a, rel.b, rel.expected, basis)}, rel.name);
        return t;
      };
    });
  }

  // Density and evolution commands share their parameters.
  int ell = 0, trunc = 1, points = 400, tau_points = 101;
  double mod = 1.0, rmax = 8.0, lambda = 1.0, tau_max = 2.0 * kPi;
  PhaseArg phase;
  auto add_state_opts = [&](CLI::App* sub, bool evolve) {
    sub->add_option("--ell", ell, "Orbital number l")->check(CLI::NonNegativeNumber);
    sub->add_option("--mod", mod, "|z|")->check(CLI::NonNegativeNumber);
    add_phase(sub, phase);
    sub->add_option("--trunc", trunc, "Minimum number of series terms")->check(CLI::PositiveNumber);
    sub->add_option("--rmax", rmax, "Largest radius");
    sub->add_option("--points", points, "Number of radii");
    if (evolve) {
      sub->add_option("--lambda", lambda, "Oscillator frequency scale")->check(CLI::PositiveNumber);
      sub->add_option("--tau-max", tau_max, "Last reduced time tau = 4 lambda t");
      sub->add_option("--tau-points", tau_points, "Number of tau values")->check(CLI::PositiveNumber);
    }
  };
  auto state_metadata = [&](const std::string& cmd, const SeriesControl& ctl) {
    auto meta = base_metadata(cmd, ctl);
    meta["ell"] = std::to_string(ell);
    meta["mod"] = format_double(mod);
    meta["phase"] = phase.text;
    meta["trunc"] = std::to_string(trunc);
    meta["rmax"] = format_double(rmax);
    meta["points"] = std::to_string(points);
    return meta;
  };
  auto density_cmd = [&](const std::string& name, CoherentFamily fam) {
    auto* sub = register_cmd(name, fam == CoherentFamily::BG ? "Barut-Girardello radial density"
                                                             : "SU(1,1) Perelomov radial density");
    add_state_opts(sub, false);
    sub->callback([&, name, fam] {
      command = name;
      action = [&, name, fam]() -> Output {
        const auto ctl = series_control();
        const auto r = radial_grid(rmax, points);
        const CoherentSpec spec{fam, ell, std::polar(mod, -phase.value()), trunc};
        auto meta = state_metadata(name, ctl);
        meta["family"] = std::string(to_string(fam));
        return density_table(r, evaluate_density(make_state(spec, ctl), r), meta);
      };
    });
  };
  auto evolve_cmd = [&](const std::string& name, CoherentFamily fam) {
    auto* sub = register_cmd(name, "Density evolution over reduced time tau = 4 lambda t");
    add_state_opts(sub, true);
    sub->callback([&, name, fam] {
      command = name;
      action = [&, name, fam]() -> Output {
        const auto ctl = series_control();
        EvolutionSpec es;
        es.family = {fam, ell, std::polar(mod, -phase.value()), trunc};
        es.lambda = lambda;
        for (double tau : linspace(0.0, tau_max, tau_points))
          es.t_grid.push_back(time_from_reduced(tau, lambda));
        es.r_grid = radial_grid(rmax, points);
        GridResult g = density_evolution(es, ctl);
        auto meta = state_metadata(name, ctl);
        meta["lambda"] = format_double(lambda);
        meta["tau_max"] = format_double(tau_max);
        meta["tau_points"] = std::to_string(tau_points);
        for (auto& [k, v] : g.metadata) meta.emplace(k, v);
        g.metadata = meta;
        return GridOutput{std::move(g), "density"};
      };
    });
  };
  density_cmd("bg-density", CoherentFamily::BG);
  evolve_cmd("bg-evolve", CoherentFamily::BG);
  density_cmd("per-density", CoherentFamily::SU11P);
  evolve_cmd("per-evolve", CoherentFamily::SU11P);

  // squeeze-map
  std::string group = "su2";
  int label_n = 2;
  double mod_max = 3.0;
  int mod_points = 60, phase_points = 120;
  {
    auto* sub = register_cmd("squeeze-map", "Squeezing classification over the z plane");
    sub->add_option("--group", group)->check(CLI::IsMember({"su11", "su2"}));
    sub->add_option("--n", label_n, "Energy level (su2)")->check(CLI::NonNegativeNumber);
    sub->add_option("--ell", ell, "Orbital number (su11)")->check(CLI::NonNegativeNumber);
    sub->add_option("--mod-max", mod_max)->check(CLI::NonNegativeNumber);
    sub->add_option("--mod-points", mod_points)->check(CLI::PositiveNumber);
    sub->add_option("--phase-points", phase_points)->check(CLI::PositiveNumber);
    sub->callback([&] {
      command = "squeeze-map";
      action = [&]() -> Output {
        const bool su11 = group == "su11";
        if (su11 && !(mod_max < 1.0)) throw DomainError("squeeze-map: su11 needs --mod-max < 1");
        const auto mods = linspace(0.0, mod_max, mod_points);
        std::vector<double> phases(static_cast<std::size_t>(phase_points));
        for (int k = 0; k < phase_points; ++k)
          phases[static_cast<std::size_t>(k)] = 2.0 * kPi * k / phase_points;
        GridResult g = squeezing_map(su11 ? GroupKind::SU11 : GroupKind::SU2, su11 ? ell : label_n,
                                     mods, phases);
        auto meta = base_metadata(command, series_control());
        meta["mod_max"] = format_double(mod_max);
        meta["mod_points"] = std::to_string(mod_points);
        meta["phase_points"] = std::to_string(phase_points);
        meta["tol"] = format_double(kSqueezeTol);
        for (auto& [k, v] : g.metadata) meta.emplace(k, v);
        g.metadata = meta;
        return GridOutput{std::move(g), "class"};
      };
    });
  }

  // su2-variances
  {
    auto* sub = register_cmd("su2-variances", "SU(2) Perelomov variances, closed form and matrix route");
    sub->add_option("--n", label_n)->check(CLI::NonNegativeNumber);
    sub->add_option("--mod", mod)->check(CLI::NonNegativeNumber);
    add_phase(sub, phase);
    sub->callback([&] {
      command = "su2-variances";
      action = [&]() -> Output {
        const cplx z = std::polar(mod, -phase.value());
        Table t;
        t.metadata = base_metadata(command, series_control());
        t.metadata["n"] = std::to_string(label_n);
        t.metadata["mod"] = format_double(mod);
        t.metadata["phase"] = phase.text;
        t.metadata["codes"] = "0=NONE,1=SQ1,2=SQ2,3=MINIMUM";
        t.label_column = "route";
        t.columns = {"mean_1", "mean_2", "mean_3", "var_1", "var_2", "bound", "class"};
        auto row = [](const VarianceReport& r) {
          return std::vector<double>{r.mean_1.value_or(0.0), r.mean_2.value_or(0.0), r.mean_3,
                                     r.var_1, r.var_2, r.bound, double(classify(r))};
        };
        t.add_row(row(su2_variances_closed(label_n, z)), "closed");
        t.add_row(row(su2_variances_matrix(label_n, z)), "matrix");
        return t;
      };
    });
  }

  // transition-prob
  {
    auto* sub = register_cmd("transition-prob", "Probabilities of l = n - 2r in the SU(2) state");
    sub->add_option("--n", label_n)->check(CLI::NonNegativeNumber);
    sub->add_option("--mod", mod)->check(CLI::NonNegativeNumber);
    sub->callback([&] {
      command = "transition-prob";
      action = [&]() -> Output {
        Table t;
        t.metadata = base_metadata(command, series_control());
        t.metadata["n"] = std::to_string(label_n);
        t.metadata["mod"] = format_double(mod);
        t.columns = {"r", "ell", "probability"};
        for (int r = 0; r <= su2_two_j(label_n); ++r)
          t.add_row({double(r), double(label_n - 2 * r), transition_probability(label_n, r, mod)});
        return t;
      };
    });
  }

  // turning-points
  double energy = 3.0;
  {
    auto* sub = register_cmd("turning-points", "Classical turning points of l(l+1)/r^2 + r^2");
    sub->add_option("--energy", energy, "Mean energy E")->required();
    sub->add_option("--ell", ell)->check(CLI::NonNegativeNumber);
    sub->callback([&] {
      command = "turning-points";
      action = [&]() -> Output {
        const auto tp = turning_points(energy, ell);
        Table t;
        t.metadata = base_metadata(command, series_control());
        t.metadata["energy"] = format_double(energy);
        t.metadata["ell"] = std::to_string(ell);
        t.columns = {"r_inner", "r_outer"};
        t.add_row({tp.r_inner, tp.r_outer});
        return t;
      };
    });
  }

  // dicke-info
  std::string dicke_case = "D1";
  PhaseArg chi;
  {
    auto* sub = register_cmd("dicke-info", "Auxiliary su(2) bases built from Dicke-like states");
    sub->add_option("--case", dicke_case)->check(CLI::IsMember({"D1", "D2", "D3", "D4", "E4a", "E4b"}));
    sub->add_option("--chi", chi.text, "Relative phase chi in [0, 2pi)")->check([](const std::string& s) {
      return parse_phase(s) ? std::string{} : "invalid phase '" + s + "'";
    });
    sub->callback([&] {
      command = "dicke-info";
      action = [&]() -> Output {
        const auto basis = dicke_basis(*parse_dicke_case(dicke_case), chi.value());
        Table t;
        t.metadata = base_metadata(command, series_control());
        t.metadata["case"] = dicke_case;
        t.metadata["chi"] = chi.text;
        t.metadata["j"] = format_double(basis.j());
        double worst = 0.0;
        for (int p = 0; p < basis.dim(); ++p)
          for (int q = 0; q < basis.dim(); ++q)
            worst = std::max(worst, std::abs(inner_product(basis.vectors[p], basis.vectors[q]) -
                                             (p == q ? 1.0 : 0.0)));
        t.metadata["orthonormality_residual"] = format_double(worst);
        t.columns = {"p", "mu", "s", "ell", "n", "re", "im"};
        for (int p = 0; p < basis.dim(); ++p)
          for (const auto& [q, a] : basis.vectors[p].amplitudes())
            t.add_row({double(p + 1), basis.j() - p, double(q.s), double(q.ell), double(q.n()),
                       a.real(), a.imag()});
        return t;
      };
    });
  }

  // state-dump
  std::string family = "bg";
  int label = 0;
  {
    auto* sub = register_cmd("state-dump", "Amplitudes of a coherent state");
    sub->add_option("--family", family)->check(CLI::IsMember({"bg", "su11p", "su2p"}));
    sub->add_option("--label", label, "l (bg, su11p) or n (su2p)")->check(CLI::NonNegativeNumber);
    sub->add_option("--mod", mod)->check(CLI::NonNegativeNumber);
    add_phase(sub, phase);
    sub->add_option("--trunc", trunc)->check(CLI::PositiveNumber);
    sub->callback([&] {
      command = "state-dump";
      action = [&]() -> Output {
        const auto ctl = series_control();
        const CoherentFamily fam = family == "bg"      ? CoherentFamily::BG
                                   : family == "su11p" ? CoherentFamily::SU11P
                                                       : CoherentFamily::SU2P;
        StateOutput o{make_state({fam, label, std::polar(mod, -phase.value()), trunc}, ctl),
                      base_metadata(command, ctl)};
        o.metadata["family"] = family;
        o.metadata["label"] = std::to_string(label);
        o.metadata["mod"] = format_double(mod);
        o.metadata["phase"] = phase.text;
        o.metadata["trunc"] = std::to_string(trunc);
        return o;
      };
    });
  }

  try {
    app.parse(argc, argv);
    const Output result = action();
    if (common.out_path.empty()) {
      emit(result, common, out);
    } else {
      std::ostringstream buf;
      emit(result, common, buf);
      std::ofstream f(common.out_path, std::ios::binary);
      if (!f) {
        err << "error: cannot open '" << common.out_path << "' for writing\n";
        return kUsage;
      }
      f << buf.str();
    }
    return kOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const NonConvergence& e) {
    err << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace radosc::cli
