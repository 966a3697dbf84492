#include "casimir/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

using json = nlohmann::ordered_json;

namespace {

// A JSON value together with its pointer, so that every diagnostic can name
// the exact location in the document.
struct Node {
  const json& value;
  std::string pointer;

  Node at(const std::string& key) const {
    return {value.at(key), pointer + "/" + key};
  }
  Node at(std::size_t i) const {
    return {value.at(i), pointer + "/" + std::to_string(i)};
  }
  bool has(const std::string& key) const { return value.contains(key); }
  [[noreturn]] void fail(const std::string& message) const {
    throw ConfigError(pointer.empty() ? "/" : pointer, message);
  }
};

void expect_object(const Node& n, std::initializer_list<const char*> allowed) {
  if (!n.value.is_object()) n.fail("expected an object");
  for (const auto& item : n.value.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || item.key() == k;
    if (!known) n.at(item.key()).fail("unknown key");
  }
}

Node required(const Node& n, const char* key) {
  if (!n.has(key)) n.fail(std::string("missing required key '") + key + "'");
  return n.at(key);
}

double number(const Node& n) {
  if (!n.value.is_number()) n.fail("expected a number");
  const double v = n.value.get<double>();
  if (!std::isfinite(v)) n.fail("expected a finite number");
  return v;
}

double positive(const Node& n) {
  const double v = number(n);
  if (!(v > 0.0)) n.fail("must be > 0");
  return v;
}

double non_negative(const Node& n) {
  const double v = number(n);
  if (!(v >= 0.0)) n.fail("must be >= 0");
  return v;
}

long integer(const Node& n) {
  if (!n.value.is_number_integer()) n.fail("expected an integer");
  return n.value.get<long>();
}

std::string string(const Node& n) {
  if (!n.value.is_string()) n.fail("expected a string");
  return n.value.get<std::string>();
}

struct ParseContext {
  std::optional<double> c_over_l;  // rad/s per config unit when scaled
};

double unit_factor(const Node& model, const ParseContext& ctx) {
  std::string unit = ctx.c_over_l ? "c_over_L" : "rad_s";
  if (model.has("unit")) unit = string(model.at("unit"));
  if (unit == "rad_s") return 1.0;
  if (unit == "GHz_over_2pi") return ghz_over_2pi(1.0);
  if (unit == "c_over_L") {
    if (!ctx.c_over_l) model.at("unit").fail("c_over_L needs a unit_scale block");
    return *ctx.c_over_l;
  }
  model.at("unit").fail("unit must be rad_s, GHz_over_2pi or c_over_L");
}

ResponseModel parse_model(const Node& n, const ParseContext& ctx) {
  if (!n.value.is_object()) n.fail("expected an object");
  const std::string kind = string(required(n, "kind"));
  if (kind == "vacuum") {
    expect_object(n, {"kind"});
    return ResponseModel::vacuum();
  }
  if (kind == "perfect") {
    expect_object(n, {"kind"});
    return ResponseModel::perfect_conductor();
  }
  if (kind == "oscillators") {
    expect_object(n, {"kind", "unit", "terms"});
    const double f = unit_factor(n, ctx);
    const Node terms = required(n, "terms");
    if (!terms.value.is_array()) terms.fail("expected an array");
    std::vector<OscillatorTerm> out;
    for (std::size_t i = 0; i < terms.value.size(); ++i) {
      const Node t = terms.at(i);
      expect_object(t, {"strength", "resonance", "damping", "sign"});
      OscillatorTerm term;
      const double strength = f * non_negative(required(t, "strength"));
      term.strength_sq = strength * strength;
      term.resonance = t.has("resonance") ? f * non_negative(t.at("resonance")) : 0.0;
      term.damping = t.has("damping") ? f * non_negative(t.at("damping")) : 0.0;
      if (t.has("sign")) {
        const long s = integer(t.at("sign"));
        if (s != 1 && s != -1) t.at("sign").fail("sign must be +1 or -1");
        term.sign = static_cast<int>(s);
      }
      out.push_back(term);
    }
    return ResponseModel::oscillators(std::move(out));
  }
  if (kind == "tabulated") {
    expect_object(n, {"kind", "unit", "samples"});
    const double f = unit_factor(n, ctx);
    const Node samples = required(n, "samples");
    if (!samples.value.is_array() || samples.value.empty()) {
      samples.fail("expected a non-empty array of [xi, value] pairs");
    }
    std::vector<std::pair<double, double>> out;
    double prev = 0.0;
    for (std::size_t i = 0; i < samples.value.size(); ++i) {
      const Node s = samples.at(i);
      if (!s.value.is_array() || s.value.size() != 2) s.fail("expected [xi, value]");
      const double xi = f * positive(s.at(0));
      if (!(xi > prev)) s.at(0).fail("xi must be strictly increasing");
      out.emplace_back(xi, positive(s.at(1)));
      prev = xi;
    }
    return ResponseModel::tabulated(std::move(out));
  }
  n.at("kind").fail("kind must be vacuum, perfect, oscillators or tabulated");
}

void audit(const Node& n, const ResponseModel& model) {
  try {
    const auto grid = default_audit_grid(model, ResponseModel::vacuum());
    audit_passivity(model, grid);
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

Material parse_medium(const Node& n, const ParseContext& ctx) {
  expect_object(n, {"eps", "mu"});
  const Node eps_node = required(n, "eps");
  Material m;
  m.eps = parse_model(eps_node, ctx);
  audit(eps_node, m.eps);
  if (n.has("mu")) {
    const Node mu_node = n.at("mu");
    m.mu = parse_model(mu_node, ctx);
    if (m.mu.is_perfect()) {
      mu_node.fail("perfect conductor is only supported as a permittivity");
    }
    audit(mu_node, m.mu);
  }
  return m;
}

Mirror parse_mirror(const Node& n, const ParseContext& ctx) {
  expect_object(n, {"coatings", "substrate"});
  Mirror m;
  m.substrate = parse_medium(required(n, "substrate"), ctx);
  if (n.has("coatings")) {
    const Node coatings = n.at("coatings");
    if (!coatings.value.is_array()) coatings.fail("expected an array");
    for (std::size_t i = 0; i < coatings.value.size(); ++i) {
      const Node c = coatings.at(i);
      expect_object(c, {"material", "thickness"});
      const Node mat = required(c, "material");
      Layer layer{parse_medium(mat, ctx), positive(required(c, "thickness"))};
      if (layer.material.is_perfect()) {
        mat.at("eps").fail("a perfect conductor cannot be a coating");
      }
      m.coatings.push_back(std::move(layer));
    }
  }
  return m;
}

void parse_distances(const Node& n, RunConfig& cfg) {
  if (n.value.is_array()) {
    if (n.value.empty()) n.fail("distance list must not be empty");
    for (std::size_t i = 0; i < n.value.size(); ++i) {
      const double d = positive(n.at(i));
      if (!cfg.distances.empty() && !(d > cfg.distances.back())) {
        n.at(i).fail("distances must be strictly increasing");
      }
      cfg.distances.push_back(d);
    }
    return;
  }
  expect_object(n, {"min", "max", "count"});
  LogRange r;
  r.min = positive(required(n, "min"));
  r.max = positive(required(n, "max"));
  const long count = integer(required(n, "count"));
  if (count < 1 || count > 1000000) n.at("count").fail("count must be in [1, 1e6]");
  r.count = static_cast<int>(count);
  if (r.count == 1 ? r.max < r.min : !(r.max > r.min)) {
    n.at("max").fail(r.count == 1 ? "max must be >= min" : "max must be > min");
  }
  cfg.range = r;
  cfg.distances = log_space(r.min, r.max, r.count);
}

QuadratureConfig parse_quadrature(const Node& n) {
  expect_object(n, {"rel_tol", "abs_tol", "max_subdivisions", "tail_cut"});
  QuadratureConfig q;
  if (n.has("rel_tol")) q.rel_tol = positive(n.at("rel_tol"));
  if (n.has("abs_tol")) q.abs_tol = non_negative(n.at("abs_tol"));
  if (n.has("max_subdivisions")) {
    const long m = integer(n.at("max_subdivisions"));
    if (m < 1 || m > 10000000) n.at("max_subdivisions").fail("must be in [1, 1e7]");
    q.max_subdivisions = static_cast<int>(m);
  }
  if (n.has("tail_cut")) q.tail_cut = positive(n.at("tail_cut"));
  try {
    q.validate();
  } catch (const Error& e) {
    n.fail(e.what());
  }
  return q;
}

json emit_model(const ResponseModel& model) {
  return std::visit(
      [](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Vacuum>) {
          return {{"kind", "vacuum"}};
        } else if constexpr (std::is_same_v<K, PerfectConductor>) {
          return {{"kind", "perfect"}};
        } else if constexpr (std::is_same_v<K, OscillatorSum>) {
          json terms = json::array();
          for (const auto& t : k.terms) {
            terms.push_back({{"strength", std::sqrt(t.strength_sq)},
                             {"resonance", t.resonance},
                             {"damping", t.damping},
                             {"sign", t.sign}});
          }
          return {{"kind", "oscillators"}, {"terms", terms}};
        } else {
          json samples = json::array();
          for (const auto& [xi, v] : k.samples) samples.push_back({xi, v});
          return {{"kind", "tabulated"}, {"samples", samples}};
        }
      },
      model.kind());
}

json emit_medium(const Material& m) {
  return {{"eps", emit_model(m.eps)}, {"mu", emit_model(m.mu)}};
}

json emit_mirror(const Mirror& m) {
  json coatings = json::array();
  for (const auto& c : m.coatings) {
    coatings.push_back(
        {{"material", emit_medium(c.material)}, {"thickness", c.thickness}});
  }
  return {{"coatings", coatings}, {"substrate", emit_medium(m.substrate)}};
}

json nullable(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

double read_nullable(const Node& n) {
  if (n.value.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!n.value.is_number()) n.fail("expected a number or null");
  return n.value.get<double>();
}

ErrorKind parse_error_kind(const Node& n) {
  const std::string name = string(n);
  for (auto k : {ErrorKind::InvalidArgument, ErrorKind::SymbolicModel,
                 ErrorKind::NonPassiveModel, ErrorKind::NonConvergent,
                 ErrorKind::DivergentIntegrand, ErrorKind::SplitUndefined,
                 ErrorKind::SingularPhase, ErrorKind::Divergence,
                 ErrorKind::Unsupported, ErrorKind::Config}) {
    if (name == to_string(k)) return k;
  }
  n.fail("unknown error kind");
}

void append_csv_value(std::string& line, double v) {
  char buf[32];
  if (std::isnan(v)) {
    line += "nan";
  } else {
    std::snprintf(buf, sizeof buf, "%.8e", v);
    line += buf;
  }
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("/", std::string("invalid JSON: ") + e.what());
  }
  const Node root{doc, ""};
  expect_object(root, {"mirror_a", "mirror_b", "distances", "quadrature",
                       "unit_scale"});

  ParseContext ctx;
  if (root.has("unit_scale")) {
    const Node u = root.at("unit_scale");
    expect_object(u, {"type", "L_ref"});
    if (string(required(u, "type")) != "c_over_L") {
      u.at("type").fail("type must be c_over_L");
    }
    ctx.c_over_l = kSpeedOfLight / positive(required(u, "L_ref"));
  }

  RunConfig cfg;
  cfg.mirror_a = parse_mirror(required(root, "mirror_a"), ctx);
  cfg.mirror_b = parse_mirror(required(root, "mirror_b"), ctx);
  parse_distances(required(root, "distances"), cfg);
  if (root.has("quadrature")) cfg.quadrature = parse_quadrature(root.at("quadrature"));
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("/", "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string emit_config(const RunConfig& config) {
  json doc;
  doc["mirror_a"] = emit_mirror(config.mirror_a);
  doc["mirror_b"] = emit_mirror(config.mirror_b);
  if (config.range) {
    doc["distances"] = {{"min", config.range->min},
                        {"max", config.range->max},
                        {"count", config.range->count}};
  } else {
    doc["distances"] = config.distances;
  }
  const auto& q = config.quadrature;
  doc["quadrature"] = {{"rel_tol", q.rel_tol},
                       {"abs_tol", q.abs_tol},
                       {"max_subdivisions", q.max_subdivisions},
                       {"tail_cut", q.tail_cut}};
  return doc.dump(2) + "\n";
}

SweepTable run_sweep(const RunConfig& config, int jobs) {
  require(!config.distances.empty(), "config has no distances");
  if (jobs == 1) {
    return sweep_serial(config.mirror_a, config.mirror_b, config.distances,
                        config.quadrature);
  }
  return sweep_parallel(config.mirror_a, config.mirror_b, config.distances,
                        config.quadrature, jobs);
}

std::string emit_results(const SweepTable& table, Format format) {
  if (format == Format::Csv) {
    std::string out(kResultsHeader);
    out += '\n';
    for (const auto& row : table) {
      std::string line;
      for (double v : {row.distance, row.force, row.eta, row.force_te,
                       row.force_tm, row.err_est}) {
        if (!line.empty()) line += ',';
        append_csv_value(line, v);
      }
      out += line;
      out += '\n';
    }
    return out;
  }

  json rows = json::array();
  for (const auto& row : table) {
    json r = {{"L_m", row.distance},
              {"F_Pa", nullable(row.force)},
              {"eta", nullable(row.eta)},
              {"F_TE_Pa", nullable(row.force_te)},
              {"F_TM_Pa", nullable(row.force_tm)},
              {"err_Pa", nullable(row.err_est)}};
    if (row.error) {
      r["error"] = *row.error;
      r["error_kind"] = to_string(row.error_kind);
    }
    rows.push_back(std::move(r));
  }
  return json{{"rows", rows}}.dump(2) + "\n";
}

void write_results(std::ostream& out, const SweepTable& table, Format format) {
  out << emit_results(table, format);
}

SweepTable parse_results_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("/", std::string("invalid JSON: ") + e.what());
  }
  const Node root{doc, ""};
  expect_object(root, {"rows"});
  const Node rows = required(root, "rows");
  if (!rows.value.is_array()) rows.fail("expected an array");
  SweepTable table;
  for (std::size_t i = 0; i < rows.value.size(); ++i) {
    const Node r = rows.at(i);
    expect_object(r, {"L_m", "F_Pa", "eta", "F_TE_Pa", "F_TM_Pa", "err_Pa",
                      "error", "error_kind"});
    SweepRow row;
    row.distance = number(required(r, "L_m"));
    row.force = read_nullable(required(r, "F_Pa"));
    row.eta = read_nullable(required(r, "eta"));
    row.force_te = read_nullable(required(r, "F_TE_Pa"));
    row.force_tm = read_nullable(required(r, "F_TM_Pa"));
    row.err_est = read_nullable(required(r, "err_Pa"));
    if (r.has("error")) row.error = string(r.at("error"));
    if (r.has("error_kind")) row.error_kind = parse_error_kind(r.at("error_kind"));
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace casimir
