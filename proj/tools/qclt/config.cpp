#include "qclt/config.hpp"

#include <fstream>
#include <json.hpp>

namespace qclt::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw ConfigError("config: key '" + key + "' " + why);
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) bad_key(path + key, "is missing");
  return j.at(key);
}

double as_double(const json& j, const std::string& path) {
  if (!j.is_number()) bad_key(path, "must be a number");
  return j.get<double>();
}

double get_double(const json& j, const std::string& key, const std::string& path) {
  return as_double(require(j, key, path), path + key);
}

double get_double_or(const json& j, const std::string& key, const std::string& path,
                     double fallback) {
  if (!j.contains(key)) return fallback;
  return as_double(j.at(key), path + key);
}

std::int64_t get_int(const json& j, const std::string& key, const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_number_integer()) bad_key(path + key, "must be an integer");
  return v.get<std::int64_t>();
}

std::string get_string(const json& j, const std::string& key, const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_string()) bad_key(path + key, "must be a string");
  return v.get<std::string>();
}

GaussianPacket parse_packet(const json& j, const std::string& path) {
  GaussianPacket g;
  g.x0 = get_double_or(j, "x0", path, 0.0);
  g.p0 = get_double_or(j, "p0", path, 0.0);
  g.sigma2 = get_double_or(j, "sigma2", path, 0.5);
  g.chirp = get_double_or(j, "chirp", path, 0.0);
  if (!(g.sigma2 > 0.0)) bad_key(path + "sigma2", "must be positive");
  return g;
}

StateSpec parse_state(const json& j) {
  const std::string type = get_string(j, "type", "state.");
  if (type == "gaussian") {
    return parse_packet(j, "state.");
  }
  if (type == "superposition") {
    const json& arr = require(j, "packets", "state.");
    if (!arr.is_array() || arr.empty()) bad_key("state.packets", "must be a non-empty array");
    Superposition sup;
    for (const json& pj : arr) {
      WeightedPacket wp;
      wp.packet = parse_packet(pj, "state.packets[].");
      if (pj.contains("weight")) {
        const json& w = pj.at("weight");
        if (!w.is_array() || w.size() != 2) {
          bad_key("state.packets[].weight", "must be [re, im]");
        }
        wp.weight = cplx{as_double(w[0], "weight[0]"), as_double(w[1], "weight[1]")};
      }
      sup.packets.push_back(wp);
    }
    return sup;
  }
  if (type == "sqrt_mixture") {
    const json& arr = require(j, "components", "state.");
    if (!arr.is_array() || arr.empty()) {
      bad_key("state.components", "must be a non-empty array");
    }
    SqrtMixture mix;
    for (const json& cj : arr) {
      MixtureComponent c;
      c.weight = get_double(cj, "weight", "state.components[].");
      c.mean = get_double(cj, "mean", "state.components[].");
      c.var = get_double(cj, "var", "state.components[].");
      mix.components.push_back(c);
    }
    return mix;
  }
  if (type == "expression") {
    return ExpressionState{get_string(j, "formula", "state.")};
  }
  bad_key("state.type", "must be one of gaussian, superposition, sqrt_mixture, expression");
}

SystemSpec parse_system(const json& j) {
  const std::string kind = get_string(j, "kind", "system.");
  SystemSpec sys;
  if (kind == "free") {
    sys.kind = SystemKind::free_particle;
  } else if (kind == "constant_force") {
    sys.kind = SystemKind::constant_force;
    sys.a = get_double(j, "a", "system.");
  } else if (kind == "oscillator") {
    sys.kind = SystemKind::oscillator;
    sys.omega = get_double(j, "omega", "system.");
    if (!(sys.omega > 0.0)) bad_key("system.omega", "must be positive");
  } else {
    bad_key("system.kind", "must be one of free, constant_force, oscillator");
  }
  return sys;
}

HermitianPolynomial parse_poly(const json& j) {
  if (!j.is_array() || j.empty()) bad_key("poly", "must be a non-empty array");
  HermitianPolynomial poly;
  for (const json& tj : j) {
    if (!tj.is_array() || tj.size() != 4) {
      bad_key("poly[]", "must be [m, n, re(c), im(c)]");
    }
    PolyTerm t;
    if (!tj[0].is_number_integer() || !tj[1].is_number_integer()) {
      bad_key("poly[]", "powers must be integers");
    }
    t.m = tj[0].get<int>();
    t.n = tj[1].get<int>();
    t.coeff = cplx{as_double(tj[2], "poly[][2]"), as_double(tj[3], "poly[][3]")};
    poly.terms.push_back(t);
  }
  poly.validate();
  return poly;
}

RunConfig parse_json(const json& root) {
  if (!root.is_object()) throw ConfigError("config: top level must be a JSON object");
  RunConfig cfg;

  if (root.contains("state")) cfg.state = parse_state(root.at("state"));

  if (root.contains("grid")) {
    const json& gj = root.at("grid");
    cfg.grid.x_min = get_double(gj, "x_min", "grid.");
    cfg.grid.x_max = get_double(gj, "x_max", "grid.");
    const std::int64_t np = get_int(gj, "n_points", "grid.");
    if (np < 64) bad_key("grid.n_points", "must be >= 64");
    cfg.grid.n_points = static_cast<std::size_t>(np);
    cfg.grid.validate();
  }

  if (root.contains("units")) {
    const json& uj = root.at("units");
    cfg.units.hbar = get_double_or(uj, "hbar", "units.", 1.0);
    cfg.units.mass = get_double_or(uj, "mass", "units.", 1.0);
    cfg.units.k_b = get_double_or(uj, "k_b", "units.", 1.0);
    cfg.units.validate();
  }

  if (root.contains("system")) cfg.system = parse_system(root.at("system"));

  if (root.contains("n_list")) {
    const json& nj = root.at("n_list");
    if (!nj.is_array() || nj.empty()) bad_key("n_list", "must be a non-empty array");
    for (const json& v : nj) {
      if (!v.is_number_integer()) bad_key("n_list", "entries must be integers");
      const std::int64_t n = v.get<std::int64_t>();
      if (n < 1) bad_key("n_list", "entries must be >= 1");
      cfg.n_list.push_back(n);
    }
  }

  if (root.contains("n")) {
    const std::int64_t n = get_int(root, "n", "");
    if (n < 1) bad_key("n", "must be >= 1");
    cfg.n_single = n;
  }

  if (root.contains("time")) {
    const json& tj = root.at("time");
    TimeWindow w;
    w.t0 = get_double(tj, "t0", "time.");
    w.t1 = get_double(tj, "t1", "time.");
    const std::int64_t samples = get_int(tj, "samples", "time.");
    if (samples < 2) bad_key("time.samples", "must be >= 2");
    w.samples = static_cast<std::size_t>(samples);
    cfg.time = w;
  }

  if (root.contains("poly")) cfg.poly = parse_poly(root.at("poly"));
  if (root.contains("g")) {
    if (!root.at("g").is_string()) bad_key("g", "must be a string");
    cfg.g = root.at("g").get<std::string>();
  }

  if (root.contains("evolve")) {
    const json& ej = root.at("evolve");
    EvolveParams ev;
    ev.t = get_double(ej, "t", "evolve.");
    if (ej.contains("steps")) {
      const std::int64_t steps = get_int(ej, "steps", "evolve.");
      if (steps < 1) bad_key("evolve.steps", "must be >= 1");
      ev.steps = static_cast<std::size_t>(steps);
    }
    cfg.evolve = ev;
  }
  return cfg;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  return parse_json(root);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config(text);
}

}  // namespace qclt::cli
