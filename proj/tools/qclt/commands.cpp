#include "qclt/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include <qclt/dynamics.hpp>
#include <qclt/entropy.hpp>
#include <qclt/oracle.hpp>

#include "qclt/parallel.hpp"

namespace qclt::cli {

namespace {

// Minimal JSON assembly so every number passes through format_double and
// the bytes stay identical across runs and thread counts.
std::string jnum(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return format_double(v);
}

std::string jstr(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const StateSpec& require_state(const RunConfig& cfg) {
  if (!cfg.state) throw ConfigError("config: key 'state' is missing (required)");
  return *cfg.state;
}

MomentSet state_moments(const RunConfig& cfg) {
  const WaveFunction psi = build_state(require_state(cfg), cfg.grid, cfg.units);
  if (cfg.g) {
    const expr::Ast g = expr::parse(*cfg.g);
    return extract_moments(psi, &g);
  }
  return extract_moments(psi);
}

std::string gaussian2d_json(const Gaussian2D& g) {
  std::ostringstream os;
  os << "{\"mean_x\":" << jnum(g.mean_x) << ",\"mean_p\":" << jnum(g.mean_p)
     << ",\"cov_xx\":" << jnum(g.cov_xx) << ",\"cov_xp\":" << jnum(g.cov_xp)
     << ",\"cov_pp\":" << jnum(g.cov_pp) << ",\"theta\":" << jnum(g.theta)
     << ",\"delta\":" << jnum(g.delta) << ",\"axis_var_plus\":" << jnum(g.axis_var_plus)
     << ",\"axis_var_minus\":" << jnum(g.axis_var_minus) << ",\"n\":" << g.n << "}";
  return os.str();
}

void gaussian2d_csv(std::ostringstream& os, const std::string& tag, const Gaussian2D& g) {
  const std::pair<const char*, double> fields[] = {
      {"mean_x", g.mean_x},       {"mean_p", g.mean_p},
      {"cov_xx", g.cov_xx},       {"cov_xp", g.cov_xp},
      {"cov_pp", g.cov_pp},       {"theta", g.theta},
      {"delta", g.delta},         {"axis_var_plus", g.axis_var_plus},
      {"axis_var_minus", g.axis_var_minus}};
  for (const auto& [name, value] : fields) {
    os << tag << ',' << name << ',' << format_double(value) << '\n';
  }
}

}  // namespace

std::string run_moments(const CommandContext& ctx) {
  const RunConfig& cfg = ctx.config;
  const MomentSet ms = state_moments(cfg);

  // The blocking approximation wants N >> |<x^3>|/<x^2>; warn when a
  // requested N undercuts that by the documented factor of 100.
  std::optional<std::string> warning;
  if (!cfg.n_list.empty()) {
    const std::int64_t n_min = *std::min_element(cfg.n_list.begin(), cfg.n_list.end());
    if (static_cast<double>(n_min) < 100.0 * ms.validity_ratio) {
      warning = "requested N = " + std::to_string(n_min) +
                " is below 100*validity_ratio = " +
                format_double(100.0 * ms.validity_ratio) +
                "; the gaussian approximation may be poor";
    }
  }

  std::ostringstream os;
  if (ctx.format == OutputFormat::json) {
    os << "{\"mean_x\":" << jnum(ms.mean_x) << ",\"mean_p\":" << jnum(ms.mean_p)
       << ",\"var_x\":" << jnum(ms.var_x) << ",\"var_p\":" << jnum(ms.var_p)
       << ",\"cov_c\":" << jnum(ms.cov_c) << ",\"comm_m\":" << jnum(ms.comm_m)
       << ",\"x3\":" << jnum(ms.x3) << ",\"validity_ratio\":" << jnum(ms.validity_ratio)
       << ",\"has_phase_space\":" << (ms.has_phase_space ? "true" : "false");
    if (warning) os << ",\"warning\":" << jstr(*warning);
    os << "}\n";
  } else {
    os << "quantity,value\n";
    os << "mean_x," << format_double(ms.mean_x) << '\n';
    if (ms.has_phase_space) os << "mean_p," << format_double(ms.mean_p) << '\n';
    os << "var_x," << format_double(ms.var_x) << '\n';
    if (ms.has_phase_space) {
      os << "var_p," << format_double(ms.var_p) << '\n';
      os << "cov_c," << format_double(ms.cov_c) << '\n';
      os << "comm_m," << format_double(ms.comm_m) << '\n';
    }
    os << "x3," << format_double(ms.x3) << '\n';
    os << "validity_ratio," << format_double(ms.validity_ratio) << '\n';
    if (warning) std::cerr << "warning: " << *warning << '\n';
  }
  return os.str();
}

std::string run_converge(const CommandContext& ctx) {
  const RunConfig& cfg = ctx.config;
  if (cfg.n_list.size() < 3) {
    throw ConfigError("config: key 'n_list' needs at least 3 entries to fit a rate");
  }
  for (std::size_t i = 1; i < cfg.n_list.size(); ++i) {
    if (cfg.n_list[i] <= cfg.n_list[i - 1]) {
      throw ConfigError("config: key 'n_list' must be strictly increasing");
    }
  }
  if (cfg.n_list.front() < 2) {
    throw ConfigError("config: key 'n_list' entries must be >= 2 for a rate fit");
  }
  const WaveFunction psi = build_state(require_state(cfg), cfg.grid, cfg.units);
  const MomentSet ms = extract_moments(psi);

  std::vector<double> sup(cfg.n_list.size()), kl(cfg.n_list.size());
  parallel_for(cfg.n_list.size(), ctx.threads, [&](std::size_t i) {
    const Density1D d = convolve_density(psi, cfg.n_list[i]);
    const Gaussian1D g = single_var_density(ms, cfg.n_list[i]);
    sup[i] = standardized_sup_error(d, g);
    kl[i] = kl_divergence(d, g);
  });
  const RateReport report = summarize_rate(cfg.n_list, std::move(sup), std::move(kl));

  std::ostringstream os;
  if (ctx.format == OutputFormat::json) {
    os << "{\"n\":[";
    for (std::size_t i = 0; i < report.n_values.size(); ++i) {
      os << (i ? "," : "") << report.n_values[i];
    }
    os << "],\"sup_error\":[";
    for (std::size_t i = 0; i < report.sup_errors.size(); ++i) {
      os << (i ? "," : "") << jnum(report.sup_errors[i]);
    }
    os << "],\"kl_error\":[";
    for (std::size_t i = 0; i < report.kl_errors.size(); ++i) {
      os << (i ? "," : "") << jnum(report.kl_errors[i]);
    }
    os << "],\"fitted_exponent\":" << jnum(report.fitted_exponent)
       << ",\"fit_residual\":" << jnum(report.fit_residual)
       << ",\"exact_fixed_point\":" << (report.exact_fixed_point ? "true" : "false")
       << "}\n";
  } else {
    os << "n,sup_error,kl_error\n";
    for (std::size_t i = 0; i < report.n_values.size(); ++i) {
      os << report.n_values[i] << ',' << format_double(report.sup_errors[i]) << ','
         << format_double(report.kl_errors[i]) << '\n';
    }
    if (report.exact_fixed_point) {
      std::cerr << "note: errors at the numerical-precision floor; "
                   "the state is a fixed point of blocking (no rate fit)\n";
    }
  }
  return os.str();
}

namespace {

// Closed-form block expectation where one exists: every term of total
// degree <= 2 has an exact finite-N identity.
std::optional<double> exact_poly_value(const MomentSet& ms, std::int64_t n,
                                       const HermitianPolynomial& poly) {
  const double dn = static_cast<double>(n);
  double total = 0.0;
  for (const PolyTerm& t : poly.terms) {
    if (t.m + t.n > 2) return std::nullopt;
    const double re = 2.0 * t.coeff.real();
    if (t.m == 0 && t.n == 0) {
      total += re;
    } else if (t.m == 1 && t.n == 0) {
      total += re * ms.mean_x;
    } else if (t.m == 0 && t.n == 1) {
      total += re * ms.mean_p;
    } else if (t.m == 2 && t.n == 0) {
      total += re * (ms.mean_x * ms.mean_x + ms.var_x / dn);
    } else if (t.m == 0 && t.n == 2) {
      total += re * (ms.mean_p * ms.mean_p + ms.var_p / dn);
    } else {  // m == n == 1
      total += re * (ms.mean_x * ms.mean_p + ms.cov_c / dn);
      total += t.coeff.imag() * ms.comm_m / dn;
    }
  }
  return total;
}

}  // namespace

std::string run_expect(const CommandContext& ctx) {
  const RunConfig& cfg = ctx.config;
  if (!cfg.poly) throw ConfigError("config: key 'poly' is missing (required by expect)");
  if (cfg.n_list.empty()) {
    throw ConfigError("config: key 'n_list' is missing (required by expect)");
  }
  const MomentSet ms = state_moments(cfg);
  const double classical = classical_limit(*cfg.poly, ms);

  std::vector<double> clt(cfg.n_list.size());
  std::vector<std::optional<double>> exact(cfg.n_list.size());
  parallel_for(cfg.n_list.size(), ctx.threads, [&](std::size_t i) {
    clt[i] = expect_poly(ms, cfg.n_list[i], *cfg.poly);
    exact[i] = exact_poly_value(ms, cfg.n_list[i], *cfg.poly);
  });

  std::ostringstream os;
  if (ctx.format == OutputFormat::json) {
    os << "{\"rows\":[";
    for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
      os << (i ? "," : "") << "{\"n\":" << cfg.n_list[i] << ",\"clt_value\":"
         << jnum(clt[i]) << ",\"exact_value\":"
         << (exact[i] ? jnum(*exact[i]) : "null")
         << ",\"classical_limit\":" << jnum(classical) << "}";
    }
    os << "]}\n";
  } else {
    os << "n,clt_value,exact_value,classical_limit\n";
    for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
      os << cfg.n_list[i] << ',' << format_double(clt[i]) << ',';
      if (exact[i]) os << format_double(*exact[i]);
      os << ',' << format_double(classical) << '\n';
    }
  }
  return os.str();
}

std::string run_entropy(const CommandContext& ctx) {
  const RunConfig& cfg = ctx.config;
  if (!cfg.system) throw ConfigError("config: key 'system' is missing (required by entropy)");
  if (!cfg.time) throw ConfigError("config: key 'time' is missing (required by entropy)");
  const MomentSet ms0 = state_moments(cfg);
  ms0.require_phase_space("entropy");

  const TimeWindow& w = *cfg.time;
  const std::size_t count = w.samples;
  std::vector<double> times(count), vx(count), vp(count), cov(count), dent(count);
  const double step = (w.t1 - w.t0) / static_cast<double>(count - 1);
  parallel_for(count, ctx.threads, [&](std::size_t i) {
    const double t = w.t0 + static_cast<double>(i) * step;
    const MomentSet ms = evolve_moments(*cfg.system, ms0, t);
    times[i] = t;
    vx[i] = ms.var_x;
    vp[i] = ms.var_p;
    cov[i] = ms.cov_c;
    dent[i] = dent_closed(ms);
  });
  for (double d : dent) {
    if (std::isinf(d)) {
      std::cerr << "warning: degenerate covariance in the sweep, entropy diverges\n";
      break;
    }
  }

  std::ostringstream os;
  if (ctx.format == OutputFormat::json) {
    auto emit = [&](const char* name, const std::vector<double>& v, bool first = false) {
      os << (first ? "{" : ",") << '"' << name << "\":[";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << jnum(v[i]);
      os << ']';
    };
    emit("t", times, true);
    emit("sigma_x2", vx);
    emit("sigma_p2", vp);
    emit("cov_c", cov);
    emit("dent", dent);
    os << "}\n";
  } else {
    os << "t,sigma_x2,sigma_p2,cov_c,dent\n";
    for (std::size_t i = 0; i < count; ++i) {
      os << format_double(times[i]) << ',' << format_double(vx[i]) << ','
         << format_double(vp[i]) << ',' << format_double(cov[i]) << ','
         << format_double(dent[i]) << '\n';
    }
  }
  return os.str();
}

std::string run_evolve(const CommandContext& ctx) {
  const RunConfig& cfg = ctx.config;
  if (!cfg.system) throw ConfigError("config: key 'system' is missing (required by evolve)");
  if (!cfg.evolve) throw ConfigError("config: key 'evolve' is missing (required by evolve)");
  const WaveFunction psi = build_state(require_state(cfg), cfg.grid, cfg.units);
  const EvolveParams& ev = *cfg.evolve;
  const std::size_t steps =
      ev.steps ? *ev.steps : default_step_count(*cfg.system, ev.t);
  const PropagatorCheck check = verify_against_propagator(*cfg.system, psi, ev.t, steps);

  const std::tuple<const char*, double, double, double> rows[] = {
      {"mean_x", check.closed.mean_x, check.propagated.mean_x, check.diff_mean_x},
      {"mean_p", check.closed.mean_p, check.propagated.mean_p, check.diff_mean_p},
      {"var_x", check.closed.var_x, check.propagated.var_x, check.diff_var_x},
      {"var_p", check.closed.var_p, check.propagated.var_p, check.diff_var_p},
      {"cov_c", check.closed.cov_c, check.propagated.cov_c, check.diff_cov_c}};

  std::ostringstream os;
  if (ctx.format == OutputFormat::json) {
    os << "{\"t\":" << jnum(ev.t) << ",\"steps\":" << steps << ",\"rows\":[";
    bool first = true;
    for (const auto& [name, closed, prop, diff] : rows) {
      os << (first ? "" : ",") << "{\"quantity\":" << jstr(name)
         << ",\"closed_form\":" << jnum(closed) << ",\"propagator\":" << jnum(prop)
         << ",\"abs_error\":" << jnum(diff) << "}";
      first = false;
    }
    os << "],\"max_abs_error\":" << jnum(check.max_abs_diff) << "}\n";
  } else {
    os << "quantity,closed_form,propagator,abs_error\n";
    for (const auto& [name, closed, prop, diff] : rows) {
      os << name << ',' << format_double(closed) << ',' << format_double(prop) << ','
         << format_double(diff) << '\n';
    }
  }
  return os.str();
}

std::string run_dist(const CommandContext& ctx) {
  const RunConfig& cfg = ctx.config;
  if (!cfg.n_single) throw ConfigError("config: key 'n' is missing (required by dist)");
  const MomentSet ms = state_moments(cfg);
  const Gaussian2D re = joint_re_density(ms, *cfg.n_single);
  const SignedGaussianPair im = joint_im_density(ms, *cfg.n_single);

  std::ostringstream os;
  if (ctx.format == OutputFormat::json) {
    os << "{\"re\":" << gaussian2d_json(re) << ",\"im\":{\"plus\":"
       << gaussian2d_json(im.plus) << ",\"minus\":" << gaussian2d_json(im.minus)
       << ",\"identically_zero\":" << (im.identically_zero ? "true" : "false")
       << ",\"pointwise_evaluable\":" << (im.pointwise_evaluable() ? "true" : "false")
       << "}}\n";
  } else {
    os << "component,field,value\n";
    gaussian2d_csv(os, "re", re);
    gaussian2d_csv(os, "im_plus", im.plus);
    gaussian2d_csv(os, "im_minus", im.minus);
    os << "im,identically_zero," << (im.identically_zero ? 1 : 0) << '\n';
    os << "im,pointwise_evaluable," << (im.pointwise_evaluable() ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace qclt::cli
