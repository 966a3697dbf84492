#include "cli_app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/asymptotics.hpp"
#include "casimir/config.hpp"
#include "casimir/errors.hpp"
#include "casimir/idealmm.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/sweep.hpp"

namespace casimir::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string config_path;
  std::string format = "csv";
  std::string out_path;
  std::optional<double> rel_tol;
  int jobs = 0;
};

// A small column-oriented table that knows how to print itself either way.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  std::string render(Format format) const {
    if (format == Format::Json) {
      json out = json::array();
      for (const auto& r : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
        out.push_back(std::move(obj));
      }
      return json{{"rows", out}}.dump(2) + "\n";
    }
    std::string s;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      s += (i ? "," : "") + columns[i];
    }
    s += '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ',';
        s += cell(r[i]);
      }
      s += '\n';
    }
    return s;
  }

  static std::string cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    const double d = v.get<double>();
    if (std::isnan(d)) return "nan";
    if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", d);
    return buf;
  }
};

json num(double v) {
  // JSON has no inf/nan; those become null.
  return std::isfinite(v) ? json(v) : json(nullptr);
}

class Output {
 public:
  Output(const Options& opt, std::ostream& fallback) : stream_(&fallback) {
    if (!opt.out_path.empty()) {
      file_.open(opt.out_path, std::ios::binary);
      if (!file_) throw ConfigError("/", "cannot open output '" + opt.out_path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Format parse_format(const std::string& f) { return f == "json" ? Format::Json : Format::Csv; }

RunConfig load(const Options& opt) {
  if (opt.config_path.empty()) throw ConfigError("/", "--config is required");
  RunConfig cfg = load_config(opt.config_path);
  if (opt.rel_tol) {
    cfg.quadrature.rel_tol = *opt.rel_tol;
    cfg.quadrature.validate();
  }
  return cfg;
}

bool any_failed(const SweepTable& t) {
  for (const auto& r : t) {
    if (!r.ok()) return true;
  }
  return false;
}

void report_row_errors(const SweepTable& t, std::ostream& err) {
  for (const auto& r : t) {
    if (!r.ok()) err << "error at L = " << r.distance << " m: " << *r.error << "\n";
  }
}

// ---- force ---------------------------------------------------------------

struct ForceArgs {
  std::optional<double> distance;
  std::string split;
};

int cmd_force(const Options& opt, const ForceArgs& args, std::ostream& out) {
  const RunConfig cfg = load(opt);
  double distance = 0.0;
  if (args.distance) {
    distance = *args.distance;
  } else if (cfg.distances.size() == 1) {
    distance = cfg.distances.front();
  } else {
    throw ConfigError("/distances",
                      "force needs a single distance (or pass --distance)");
  }
  require(distance > 0.0, "--distance must be > 0");

  ForceResult r;
  if (args.split.empty()) {
    r = casimir_force(cfg.mirror_a, cfg.mirror_b, distance, cfg.quadrature);
  } else {
    const MirrorSide side = args.split == "A" ? MirrorSide::A : MirrorSide::B;
    r = force_split(cfg.mirror_a, cfg.mirror_b, distance, side, cfg.quadrature);
  }

  Table t;
  t.columns = {"L_m", "F_Pa", "eta", "F_TE_Pa", "F_TM_Pa", "err_Pa"};
  std::vector<json> row = {num(distance), num(r.total), num(r.eta),
                           num(r.te),     num(r.tm),    num(r.err_est)};
  if (r.split) {
    for (const char* c : {"F1_TE_Pa", "F2_TE_Pa", "F1_TM_Pa", "F2_TM_Pa"}) {
      t.columns.emplace_back(c);
    }
    for (double v : {r.split->f1_te, r.split->f2_te, r.split->f1_tm, r.split->f2_tm}) {
      row.push_back(num(v));
    }
  }
  t.rows.push_back(std::move(row));
  out << t.render(parse_format(opt.format));
  return kSuccess;
}

// ---- sweep ---------------------------------------------------------------

int cmd_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load(opt);
  const SweepTable table = run_sweep(cfg, opt.jobs);
  write_results(out, table, parse_format(opt.format));
  report_row_errors(table, err);
  return any_failed(table) ? kNumericalFailure : kSuccess;
}

// ---- windows -------------------------------------------------------------

struct WindowArgs {
  std::optional<double> l_min;
  std::optional<double> l_max;
  int samples = 64;
  double bisect_tol = 1e-6;
};

int cmd_windows(const Options& opt, const WindowArgs& args, std::ostream& out) {
  const RunConfig cfg = load(opt);
  const double lo = args.l_min.value_or(cfg.distances.front());
  const double hi = args.l_max.value_or(cfg.distances.back());
  if (!(hi > lo)) {
    throw ConfigError("/distances", "window search needs l_max > l_min");
  }
  WindowSearch search;
  search.samples = args.samples;
  search.rel_tol = args.bisect_tol;
  search.jobs = opt.jobs;
  const auto windows =
      find_sign_changes(cfg.mirror_a, cfg.mirror_b, lo, hi, cfg.quadrature, search);

  Table t;
  t.columns = {"l_lo_m", "l_hi_m", "crossing_lo_m", "crossing_hi_m",
               "crossing_lo_tol", "crossing_hi_tol"};
  for (const auto& w : windows) {
    auto loc = [](const std::optional<Crossing>& c) {
      return c ? num(c->location()) : json(nullptr);
    };
    auto tol = [](const std::optional<Crossing>& c) {
      return c ? num(c->achieved_rel_tol) : json(nullptr);
    };
    t.rows.push_back({num(w.l_lo), num(w.l_hi), loc(w.crossing_lo),
                      loc(w.crossing_hi), tol(w.crossing_lo), tol(w.crossing_hi)});
  }
  out << t.render(parse_format(opt.format));
  return kSuccess;
}

// ---- asymptote -----------------------------------------------------------

struct AsymptoteArgs {
  std::string formula;
  double omega_a = 0.0;
  double omega_b = 0.0;
  double omega_0 = 0.0;
  double lambda_a = 0.0;
  double lambda_b = 0.0;
  std::vector<double> distances;
};

int cmd_asymptote(const Options& opt, const AsymptoteArgs& a, std::ostream& out) {
  using Fn = std::function<asymptotics::Estimate(double)>;
  const std::map<std::string, Fn> formulas = {
      {"short_drude", [&](double L) { return asymptotics::short_drude(a.omega_a, a.omega_b, L); }},
      {"long_nonmagnetic",
       [&](double L) { return asymptotics::long_nonmagnetic(a.lambda_a, a.lambda_b, L); }},
      {"short_dielectric_magnetic",
       [&](double L) {
         return asymptotics::short_dielectric_magnetic(a.omega_a, a.omega_b, L);
       }},
      {"long_boyer", [&](double L) { return asymptotics::long_boyer(a.lambda_a, a.lambda_b, L); }},
      {"short_lorentz",
       [&](double L) {
         return asymptotics::short_lorentz(a.omega_a, a.omega_b, a.omega_0, L);
       }},
  };
  const auto it = formulas.find(a.formula);
  require(it != formulas.end(), "unknown formula '" + a.formula + "'");
  require(!a.distances.empty(), "--distance is required");

  Table t;
  t.columns = {"formula", "L_m", "value", "truncated", "outside_validity"};
  for (double L : a.distances) {
    const auto e = it->second(L);
    t.rows.push_back({a.formula, num(L), num(e.value), e.truncated, e.outside_validity});
  }
  out << t.render(parse_format(opt.format));
  return kSuccess;
}

// ---- idealmm -------------------------------------------------------------

struct IdealArgs {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double area = 1.0;
  std::optional<double> k1;
  std::optional<double> k2;
  double eps1 = -1.0;
};

int cmd_idealmm(const Options& opt, const IdealArgs& a, std::ostream& out) {
  const idealmm::EffectiveGeometry geom{a.l1, a.l2, a.l3, a.area};
  const double ap = idealmm::effective_distance(geom);

  Table t;
  t.columns = {"a_prime_m", "force_N", "energy_J"};
  std::vector<json> row = {num(ap), num(idealmm::ideal_mm_force(ap, a.area)),
                           num(idealmm::ideal_mm_energy(ap, a.area))};
  if (a.k1 || a.k2) {
    require(a.k1 && a.k2, "--k1 and --k2 must be given together");
    t.columns.emplace_back("delta_TE");
    t.columns.emplace_back("delta_TM");
    for (auto pol : kPolarizations) {
      row.push_back(num(idealmm::phase_shift(*a.k1, *a.k2, a.eps1, ap, pol)));
    }
  }
  t.rows.push_back(std::move(row));
  out << t.render(parse_format(opt.format));
  return kSuccess;
}

// ---- validate ------------------------------------------------------------

int cmd_validate(const Options& opt, std::ostream& out) {
  const RunConfig cfg = load(opt);
  Table t;
  t.columns = {"check", "subject", "result", "detail"};
  bool ok = true;

  auto media = [&](const char* name, const Mirror& m) {
    m.validate();
    for (std::size_t i = 0; i <= m.coatings.size(); ++i) {
      const bool sub = i == m.coatings.size();
      const Material& mat = sub ? m.substrate : m.coatings[i].material;
      const std::string subject =
          std::string(name) + (sub ? "/substrate" : "/coatings/" + std::to_string(i));
      t.rows.push_back({"passivity", subject, "pass", "eps, mu > 0 on audit grid"});
      if (mat.is_vacuum()) {
        t.rows.push_back({"class", subject, "vacuum", ""});
      } else {
        t.rows.push_back({"class", subject, to_string(classify_pair(mat.eps, mat.mu)), ""});
      }
    }
  };
  media("mirror_a", cfg.mirror_a);
  media("mirror_b", cfg.mirror_b);

  const SweepTable table = run_sweep(cfg, opt.jobs);
  for (const auto& r : table) {
    std::ostringstream subject;
    subject << "L=" << r.distance;
    if (!r.ok()) {
      ok = false;
      t.rows.push_back({"force", subject.str(), "fail", *r.error});
      continue;
    }
    const bool in_bounds = r.eta >= -7.0 / 8.0 - 1e-3 && r.eta <= 1.0 + 1e-3;
    ok = ok && in_bounds;
    std::ostringstream detail;
    detail << "eta=" << r.eta;
    t.rows.push_back({"eta_bounds", subject.str(), in_bounds ? "pass" : "fail", detail.str()});
  }
  out << t.render(parse_format(opt.format));
  return ok ? kSuccess : kNumericalFailure;
}

// ---- materials -----------------------------------------------------------

struct MaterialArgs {
  std::string preset;
  std::string mirror = "a";
  int layer = -1;  // -1 = substrate
  std::optional<double> xi_min;
  std::optional<double> xi_max;
  int points = 200;
};

int cmd_materials(const Options& opt, const MaterialArgs& a, std::ostream& out) {
  Material mat;
  if (!a.preset.empty()) {
    if (a.preset == "metamaterial") {
      mat = build_nims_material(NimsParameters::published());
    } else if (a.preset == "gold") {
      mat = gold_drude();
    } else {
      throw ConfigError("/", "unknown preset '" + a.preset + "'");
    }
  } else {
    const RunConfig cfg = load(opt);
    const Mirror& m = a.mirror == "b" ? cfg.mirror_b : cfg.mirror_a;
    if (a.layer < 0) {
      mat = m.substrate;
    } else {
      if (a.layer >= static_cast<int>(m.coatings.size())) {
        throw ConfigError("/mirror_" + a.mirror + "/coatings",
                          "no coating with index " + std::to_string(a.layer));
      }
      mat = m.coatings[static_cast<std::size_t>(a.layer)].material;
    }
  }

  double scale = std::max(mat.eps.max_frequency(), mat.mu.max_frequency());
  if (scale <= 0.0) scale = 1.0;
  const double lo = a.xi_min.value_or(1e-2 * scale);
  const double hi = a.xi_max.value_or(1e2 * scale);
  require(lo > 0.0 && hi > lo, "need 0 < xi_min < xi_max");
  require(a.points >= 2, "--points must be >= 2");

  Table t;
  t.columns = {"xi_rad_s", "eps", "mu"};
  for (double xi : log_space(lo, hi, a.points)) {
    const double e = mat.eps.is_perfect() ? INFINITY : mat.eps.evaluate(xi);
    t.rows.push_back({num(xi), num(e), num(mat.mu.evaluate(xi))});
  }
  out << t.render(parse_format(opt.format));
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir force between dispersive magnetodielectric mirrors"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config_path, "JSON run configuration");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opt.out_path, "Write results to this file instead of stdout");
  app.add_option("--rel-tol", opt.rel_tol, "Override the relative quadrature tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", opt.jobs, "Worker threads (0 = all, 1 = serial kernel)")
      ->check(CLI::NonNegativeNumber);

  ForceArgs force_args;
  auto* force = app.add_subcommand("force", "Force at one distance");
  force->add_option("--distance", force_args.distance, "Plate separation (m)");
  force->add_option("--split", force_args.split,
                    "Split the alpha integral at the sign-change point of mirror A or B")
      ->check(CLI::IsMember({"A", "B"}));

  auto* sweep = app.add_subcommand("sweep", "Force at every configured distance");

  WindowArgs window_args;
  auto* windows = app.add_subcommand("windows", "Locate repulsive distance windows");
  windows->add_option("--l-min", window_args.l_min, "Lower search bound (m)");
  windows->add_option("--l-max", window_args.l_max, "Upper search bound (m)");
  windows->add_option("--samples", window_args.samples, "Log-grid samples")
      ->check(CLI::Range(8, 1000000));
  windows->add_option("--bisect-tol", window_args.bisect_tol,
                      "Relative tolerance on crossing locations")
      ->check(CLI::PositiveNumber);

  AsymptoteArgs asym_args;
  auto* asym = app.add_subcommand("asymptote", "Evaluate a closed-form limit");
  asym->add_option("--formula", asym_args.formula, "Limit to evaluate")
      ->required()
      ->check(CLI::IsMember({"short_drude", "long_nonmagnetic",
                             "short_dielectric_magnetic", "long_boyer",
                             "short_lorentz"}));
  asym->add_option("--omega-a", asym_args.omega_a, "Frequency of mirror A (rad/s)");
  asym->add_option("--omega-b", asym_args.omega_b, "Frequency of mirror B (rad/s)");
  asym->add_option("--omega-0", asym_args.omega_0, "Common resonance (rad/s)");
  asym->add_option("--lambda-a", asym_args.lambda_a, "Wavelength of mirror A (m)");
  asym->add_option("--lambda-b", asym_args.lambda_b, "Wavelength of mirror B (m)");
  asym->add_option("--distance", asym_args.distances, "Plate separation(s) (m)")
      ->required();

  IdealArgs ideal_args;
  auto* ideal = app.add_subcommand("idealmm", "Perfect-matching metamaterial closed forms");
  ideal->add_option("--l1", ideal_args.l1, "First mirror position (m)")->required();
  ideal->add_option("--l2", ideal_args.l2, "Coating front position (m)")->required();
  ideal->add_option("--l3", ideal_args.l3, "Coating back position (m)")->required();
  ideal->add_option("--area", ideal_args.area, "Plate area (m^2)")->check(CLI::PositiveNumber);
  ideal->add_option("--k1", ideal_args.k1, "Wave number outside the gap (1/m)");
  ideal->add_option("--k2", ideal_args.k2, "Wave number inside the gap (1/m)");
  ideal->add_option("--eps1", ideal_args.eps1, "Permittivity of the outer medium");

  auto* validate = app.add_subcommand("validate", "Audit a configuration");

  MaterialArgs mat_args;
  auto* materials = app.add_subcommand("materials", "Tabulate eps(i xi) and mu(i xi)");
  materials->add_option("--preset", mat_args.preset, "Built-in material")
      ->check(CLI::IsMember({"metamaterial", "gold"}));
  materials->add_option("--mirror", mat_args.mirror, "Mirror of the config (a or b)")
      ->check(CLI::IsMember({"a", "b"}));
  materials->add_option("--layer", mat_args.layer, "Coating index (default: substrate)");
  materials->add_option("--xi-min", mat_args.xi_min, "Lowest frequency (rad/s)");
  materials->add_option("--xi-max", mat_args.xi_max, "Highest frequency (rad/s)");
  materials->add_option("--points", mat_args.points, "Number of log-spaced points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }

  try {
    std::ostringstream buffer;
    int code = kSuccess;
    if (*force) {
      code = cmd_force(opt, force_args, buffer);
    } else if (*sweep) {
      code = cmd_sweep(opt, buffer, err);
    } else if (*windows) {
      code = cmd_windows(opt, window_args, buffer);
    } else if (*asym) {
      code = cmd_asymptote(opt, asym_args, buffer);
    } else if (*ideal) {
      code = cmd_idealmm(opt, ideal_args, buffer);
    } else if (*validate) {
      code = cmd_validate(opt, buffer);
    } else if (*materials) {
      code = cmd_materials(opt, mat_args, buffer);
    }
    Output sink(opt, out);
    sink.stream() << buffer.str();
    return code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kConfigError : kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace casimir::cli
