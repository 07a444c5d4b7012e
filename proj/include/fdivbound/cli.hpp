// Copyright 2026 The fdivbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. Every subcommand is a thin wrapper over library
// calls and writes exactly one OutputRecord (JSON or CSV) or one Table to
// `out`; diagnostics go to `err`.
//
// Exit codes: 0 success, 1 a check failed (fuzz violation, failed
// membership, comparison row where the prior bound is smaller),
// 2 infeasible or otherwise invalid parameters, 3 unparseable input.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "fdivbound/bounds.hpp"
#include "fdivbound/distribution.hpp"
#include "fdivbound/divergence.hpp"
#include "fdivbound/extremal.hpp"
#include "fdivbound/generator.hpp"
#include "fdivbound/oracle.hpp"
#include "fdivbound/params.hpp"
#include "fdivbound/record.hpp"

namespace fdivbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitParse = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed --div value: kl, tv, chi2, hellinger:<alpha> or renyi:<alpha>.
struct DivSpec {
  enum class Kind { Kl, Tv, Chi2, Hellinger, Renyi };
  Kind kind = Kind::Kl;
  double alpha = 0.0;
  std::string text;

  bool is_renyi() const noexcept { return kind == Kind::Renyi; }

  /// Renyi is handled through the Hellinger generator of the same order.
  Generator generator() const {
    switch (kind) {
      case Kind::Kl: return kl_generator();
      case Kind::Tv: return tv_generator();
      case Kind::Chi2: return chi2_generator();
      case Kind::Hellinger:
      case Kind::Renyi: return hellinger_generator(alpha);
    }
    throw UsageError("unknown divergence");
  }

  /// Maps a Hellinger value to Renyi when this is a Renyi spec.
  ExtendedReal finish(ExtendedReal hellinger_value) const {
    return is_renyi() ? renyi_from_hellinger(alpha, hellinger_value) : hellinger_value;
  }
};

inline double parse_real(std::string_view text, std::string_view what) {
  const auto v = parse_extended(text);
  if (!v || !v->is_finite()) throw UsageError(std::string(what) + ": not a finite number: '" + std::string(text) + "'");
  return v->value();
}

inline ExtendedReal parse_upper(std::string_view text) {
  const auto v = parse_extended(text);
  if (!v || v->is_neg_inf()) throw UsageError("--M: not a number or 'inf': '" + std::string(text) + "'");
  return *v;
}

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<double> parse_list(std::string_view text, std::string_view what) {
  std::vector<double> out;
  for (const auto& token : split(text, ',')) out.push_back(parse_real(token, what));
  return out;
}

inline DivSpec parse_div(std::string_view text) {
  DivSpec spec;
  spec.text = std::string(text);
  if (text == "kl") {
    spec.kind = DivSpec::Kind::Kl;
  } else if (text == "tv") {
    spec.kind = DivSpec::Kind::Tv;
  } else if (text == "chi2") {
    spec.kind = DivSpec::Kind::Chi2;
  } else if (text.starts_with("hellinger:") || text.starts_with("renyi:")) {
    const bool renyi = text.starts_with("renyi:");
    spec.kind = renyi ? DivSpec::Kind::Renyi : DivSpec::Kind::Hellinger;
    spec.alpha = parse_real(text.substr(text.find(':') + 1), "--div alpha");
  } else {
    throw UsageError("--div must be kl, tv, chi2, hellinger:<alpha> or renyi:<alpha>, got '" + spec.text + "'");
  }
  return spec;
}

inline std::vector<ExtendedReal> as_values(std::span<const double> xs) {
  return {xs.begin(), xs.end()};
}

using Payload = std::variant<OutputRecord, Table>;

struct CommandResult {
  Payload payload;
  int exit_code = kExitOk;
};

namespace detail {

inline const std::string& require(const std::optional<std::string>& v, std::string_view flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

inline ClassParams parse_params(const std::optional<std::string>& delta, const std::optional<std::string>& m,
                                const std::optional<std::string>& M) {
  return {parse_real(require(delta, "--delta"), "--delta"), parse_real(require(m, "--m"), "--m"),
          parse_upper(require(M, "--M"))};
}

inline void echo_params(OutputRecord& r, const ClassParams& p) {
  r.inputs.emplace_back("delta", ExtendedReal(p.delta));
  r.inputs.emplace_back("m", ExtendedReal(p.m));
  r.inputs.emplace_back("M", p.M);
}

}  // namespace detail

struct BoundArgs {
  std::string div;
  std::string formula = "thm1";
  std::optional<std::string> delta, m, M;
};

inline CommandResult cmd_bound(const BoundArgs& a) {
  const DivSpec spec = parse_div(a.div);
  OutputRecord r{"bound", {{"div", spec.text}, {"formula", a.formula}}, {}, Status::NotApplicable};
  const Generator gen = spec.generator();
  ExtendedReal value;
  if (a.formula == "thm1") {
    const ClassParams p = detail::parse_params(a.delta, a.m, a.M);
    detail::echo_params(r, p);
    value = spec.is_renyi() ? renyi_bound(spec.alpha, p) : theorem1_bound(gen, p);
  } else if (a.formula == "cor1") {
    const double m = parse_real(detail::require(a.m, "--m"), "--m");
    const ExtendedReal M = parse_upper(detail::require(a.M, "--M"));
    r.inputs.emplace_back("m", ExtendedReal(m));
    r.inputs.emplace_back("M", M);
    value = spec.finish(corollary1_bound(gen, m, M));
  } else if (a.formula == "cor2") {
    const double delta = parse_real(detail::require(a.delta, "--delta"), "--delta");
    r.inputs.emplace_back("delta", ExtendedReal(delta));
    value = spec.finish(vajda_bound(gen, delta));
  } else {
    throw UsageError("--formula must be thm1, cor1 or cor2");
  }
  r.results.emplace_back("bound", value);
  return {r, kExitOk};
}

struct DivergenceArgs {
  std::string div;
  std::string p, q;
};

inline CommandResult cmd_divergence(const DivergenceArgs& a) {
  const DivSpec spec = parse_div(a.div);
  const auto pw = parse_list(a.p, "--p");
  const auto qw = parse_list(a.q, "--q");
  const Distribution P(pw);
  const Distribution Q(qw);
  const Generator gen = spec.generator();
  const ExtendedReal d = spec.finish(f_divergence(gen, P, Q));
  const ClassParams measured = measure_params(P, Q);
  OutputRecord r{"divergence",
                 {{"div", spec.text}, {"p", as_values(pw)}, {"q", as_values(qw)}},
                 {{"divergence", d},
                  {"delta", ExtendedReal(measured.delta)},
                  {"m", ExtendedReal(measured.m)},
                  {"M", measured.M}},
                 Status::NotApplicable};
  return {r, kExitOk};
}

struct ExtremalArgs {
  std::optional<std::string> delta, m, M;
};

inline CommandResult cmd_extremal(const ExtremalArgs& a) {
  const ClassParams p = detail::parse_params(a.delta, a.m, a.M);
  const ExtremalPair pair = ternary_extremal(p);
  OutputRecord r{"extremal", {}, {}, Status::NotApplicable};
  detail::echo_params(r, p);
  r.results = {{"P", as_values(pair.P.weights())},
               {"Q", as_values(pair.Q.weights())},
               {"q", ExtendedReal(pair.q)},
               {"p", ExtendedReal(pair.p)},
               {"t", ExtendedReal(pair.t)}};
  return {r, kExitOk};
}

struct VerifyArgs {
  std::string p, q;
  std::optional<std::string> delta, m, M;
  std::string tol = "1e-9";
  std::string divs = "kl,tv,chi2";
};

inline CommandResult cmd_verify(const VerifyArgs& a) {
  const auto pw = parse_list(a.p, "--p");
  const auto qw = parse_list(a.q, "--q");
  const ClassParams target = detail::parse_params(a.delta, a.m, a.M);
  const double tol = parse_real(a.tol, "--tol");
  std::vector<DivSpec> specs;
  std::vector<Generator> gens;
  for (const auto& token : split(a.divs, ',')) {
    specs.push_back(parse_div(token));
    if (specs.back().is_renyi()) throw UsageError("verify: renyi is not an f-divergence; use hellinger:<alpha>");
    gens.push_back(specs.back().generator());
  }
  const PairReport report = verify_membership(Distribution(pw), Distribution(qw), target, tol, gens);

  OutputRecord r{"verify", {{"p", as_values(pw)}, {"q", as_values(qw)}}, {}, Status::NotApplicable};
  detail::echo_params(r, target);
  r.inputs.emplace_back("tol", ExtendedReal(tol));
  r.results = {{"delta", ExtendedReal(report.measured.delta)},
               {"m", ExtendedReal(report.measured.m)},
               {"M", report.measured.M},
               {"delta_deviation", ExtendedReal(report.delta_deviation)},
               {"m_deviation", ExtendedReal(report.m_deviation)},
               {"M_deviation", report.M_deviation}};
  for (const auto& check : report.checks) {
    r.results.emplace_back("divergence:" + check.name, check.divergence);
    if (check.bound) r.results.emplace_back("bound:" + check.name, *check.bound);
    if (check.gap) r.results.emplace_back("gap:" + check.name, *check.gap);
  }
  r.status = report.pass() ? Status::Pass : Status::Fail;
  return {r, report.pass() ? kExitOk : kExitCheckFailed};
}

/// Axes of the comparison grid; delta values are fractions of tv_cap(m, M).
struct Grid {
  std::vector<double> m{0.0, 0.1, 0.25, 0.5, 0.9};
  std::vector<double> M{1.1, 2.0, 5.0, 10.0, 100.0};
  std::vector<double> cap_fraction{0.1, 0.5, 1.0};
};

/// "default" or "m=<list>;M=<list>;frac=<list>" with any axis omitted
/// falling back to the default.
inline Grid parse_grid(std::string_view text) {
  Grid g;
  if (text == "default") return g;
  for (const auto& part : split(text, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("--grid: expected key=list, got '" + part + "'");
    const std::string key = part.substr(0, eq);
    const auto values = parse_list(std::string_view(part).substr(eq + 1), "--grid");
    if (key == "m") {
      g.m = values;
    } else if (key == "M") {
      g.M = values;
    } else if (key == "frac") {
      g.cap_fraction = values;
    } else {
      throw UsageError("--grid: unknown axis '" + key + "'");
    }
  }
  for (double m : g.m)
    if (!(m >= 0.0 && m < 1.0)) throw UsageError("--grid: m values must lie in [0, 1)");
  for (double M : g.M)
    if (!(M > 1.0)) throw UsageError("--grid: M values must exceed 1");
  for (double f : g.cap_fraction)
    if (!(f > 0.0 && f <= 1.0)) throw UsageError("--grid: frac values must lie in (0, 1]");
  return g;
}

struct CompareArgs {
  std::string grid = "default";
  std::string comparator = "all";
  std::string alpha = "2";
};

/// New (optimal) bound against a prior one for each grid row.
inline Table comparison_table(const Grid& grid, std::string_view comparator, double alpha) {
  const bool all = comparator == "all";
  const std::vector<std::string> known{"simic", "sason-chi2", "sason-renyi", "verdu"};
  if (!all && std::find(known.begin(), known.end(), comparator) == known.end())
    throw UsageError("--comparator must be simic, sason-chi2, sason-renyi, verdu or all");

  Table t{"compare", {"comparator", "m", "M", "delta", "new_bound", "prior_bound", "ratio"}, {}, Status::Pass};
  auto add = [&t](std::string name, double m, double M, double delta, ExtendedReal fresh, ExtendedReal prior) {
    const ExtendedReal ratio = fresh == ExtendedReal(0.0) ? ExtendedReal(prior == fresh ? 1.0 : INFINITY)
                                                          : prior / fresh;
    if (prior < fresh) t.status = Status::Fail;
    t.rows.push_back({std::move(name), m, M, delta, fresh, prior, ratio});
  };

  const Generator kl = kl_generator();
  const Generator chi2 = chi2_generator();
  for (const std::string& name : known) {
    if (!all && name != comparator) continue;
    for (double m : grid.m) {
      for (double M : grid.M) {
        const double cap = tv_cap(m, M);
        if (name == "simic") {
          if (m == 0.0) continue;
          add(name, m, M, cap, corollary1_bound(kl, m, M), simic_kl_bound(1.0 / M, 1.0 / m));
          continue;
        }
        for (double frac : grid.cap_fraction) {
          const ClassParams p{frac * cap, m, M};
          if (name == "sason-chi2") {
            add(name, m, M, p.delta, theorem1_bound(chi2, p), sason_chi2_bound(p));
          } else if (name == "sason-renyi") {
            add(name, m, M, p.delta, renyi_bound(alpha, p), renyi_bound(alpha, {p.delta, 0.0, M}));
          } else {
            const ExtendedReal b = m == 0.0 ? ExtendedReal::inf() : ExtendedReal(1.0 / m);
            add(name, m, M, p.delta, kl_bound_ab(p.delta, 1.0 / M, b),
                kl_bound_ab(p.delta, 1.0 / M, ExtendedReal::inf()));
          }
        }
      }
    }
  }
  return t;
}

inline CommandResult cmd_compare(const CompareArgs& a) {
  Table t = comparison_table(parse_grid(a.grid), a.comparator, parse_real(a.alpha, "--alpha"));
  const int code = t.status == Status::Pass ? kExitOk : kExitCheckFailed;
  return {std::move(t), code};
}

struct FuzzArgs {
  std::string div;
  std::optional<std::string> delta, m, M;
  int trials = 1000;
  std::uint64_t seed = 1;
  int n = 3;
  int steps = 0;
  std::string step_scale = "0.25";
  std::string tol = "1e-10";
  bool no_extremal_seed = false;
  int threads = 1;
};

inline CommandResult cmd_fuzz(const FuzzArgs& a) {
  const DivSpec spec = parse_div(a.div);
  const Generator gen = spec.generator();
  SearchConfig config;
  config.support_size = a.n;
  config.trials = a.trials;
  config.seed = a.seed;
  config.perturbation_steps = a.steps;
  config.step_scale = parse_real(a.step_scale, "--step-scale");
  config.tolerance = parse_real(a.tol, "--tol");
  config.seed_extremal = !a.no_extremal_seed;
  config.threads = a.threads;

  OutputRecord r{"fuzz", {{"div", spec.text}}, {}, Status::Pass};
  const bool constrained = a.m.has_value() || a.M.has_value();
  SearchOutcome outcome;
  std::optional<UnconstrainedOutcome> sweep;
  if (constrained) {
    const ClassParams p = detail::parse_params(a.delta, a.m, a.M);
    detail::echo_params(r, p);
    outcome = search_sup(gen, p, config);
  } else {
    const double delta = parse_real(detail::require(a.delta, "--delta"), "--delta");
    r.inputs.emplace_back("delta", ExtendedReal(delta));
    sweep = search_unconstrained_sup(gen, delta, config);
    outcome = sweep->outcome;
  }
  r.inputs.insert(r.inputs.end(), {{"n", ExtendedReal(config.support_size)},
                                   {"trials", ExtendedReal(config.trials)},
                                   {"seed", std::to_string(config.seed)},
                                   {"steps", ExtendedReal(config.perturbation_steps)},
                                   {"step_scale", ExtendedReal(config.step_scale)},
                                   {"tol", ExtendedReal(config.tolerance)},
                                   {"extremal_seed", std::string(config.seed_extremal ? "true" : "false")}});

  const ExtendedReal best = spec.finish(outcome.best_value);
  const ExtendedReal bound = spec.finish(outcome.bound);
  const ExtendedReal gap = spec.is_renyi() ? fdivbound::detail::gap_of(bound, best) : outcome.gap;
  r.results = {{"best_value", best},
               {"bound", bound},
               {"gap", gap},
               {"violations", ExtendedReal(static_cast<double>(outcome.violations))},
               {"evaluations", ExtendedReal(static_cast<double>(outcome.evaluations))},
               {"best_P", as_values(outcome.best_pair.P.weights())},
               {"best_Q", as_values(outcome.best_pair.Q.weights())}};
  if (sweep) {
    r.results.emplace_back("sweep_points", ExtendedReal(static_cast<double>(sweep->sweep.size())));
    r.results.emplace_back("monotone", ExtendedReal(sweep->monotone ? 1.0 : 0.0));
    r.results.emplace_back("exceeds_threshold", ExtendedReal(sweep->exceeds_threshold ? 1.0 : 0.0));
  }
  r.status = outcome.violations == 0 ? Status::Pass : Status::Fail;
  return {r, outcome.violations == 0 ? kExitOk : kExitCheckFailed};
}

inline std::string encode(const Payload& payload, std::string_view format) {
  return std::visit(
      [format](const auto& p) { return format == "csv" ? to_csv(p) : to_json(p); }, payload);
}

/// Parses `args` (program name first) and runs the selected subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal f-divergence bounds from total variation and density-ratio extremes", "fdivbound"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output encoding")->check(CLI::IsMember({"json", "csv"}));

  auto add_params = [](CLI::App* sub, std::optional<std::string>& delta, std::optional<std::string>& m,
                       std::optional<std::string>& M) {
    sub->add_option("--delta", delta, "Total variation");
    sub->add_option("--m", m, "Essential infimum of dP/dQ");
    sub->add_option("--M", M, "Essential supremum of dP/dQ (number or inf)");
  };

  BoundArgs bound;
  auto* s_bound = app.add_subcommand("bound", "Closed-form optimal bound");
  s_bound->add_option("--div", bound.div, "kl | tv | chi2 | hellinger:<a> | renyi:<a>")->required();
  s_bound->add_option("--formula", bound.formula, "thm1 | cor1 | cor2");
  add_params(s_bound, bound.delta, bound.m, bound.M);

  DivergenceArgs divergence;
  auto* s_div = app.add_subcommand("divergence", "D_f(P||Q) with measured delta, m, M");
  s_div->add_option("--div", divergence.div)->required();
  s_div->add_option("--p", divergence.p, "Comma-separated weights")->required();
  s_div->add_option("--q", divergence.q, "Comma-separated weights")->required();

  ExtremalArgs extremal;
  auto* s_ext = app.add_subcommand("extremal", "Ternary pair attaining the bound");
  add_params(s_ext, extremal.delta, extremal.m, extremal.M);

  VerifyArgs verify;
  auto* s_verify = app.add_subcommand("verify", "Check a pair against a class");
  s_verify->add_option("--p", verify.p)->required();
  s_verify->add_option("--q", verify.q)->required();
  add_params(s_verify, verify.delta, verify.m, verify.M);
  s_verify->add_option("--tol", verify.tol);
  s_verify->add_option("--div", verify.divs, "Comma-separated generators to report");

  CompareArgs compare;
  auto* s_compare = app.add_subcommand("compare", "Optimal bounds against prior bounds on a grid");
  s_compare->add_option("--grid", compare.grid, "default | m=..;M=..;frac=..");
  s_compare->add_option("--comparator", compare.comparator, "simic | sason-chi2 | sason-renyi | verdu | all");
  s_compare->add_option("--alpha", compare.alpha, "Order for sason-renyi");

  FuzzArgs fuzz;
  auto* s_fuzz = app.add_subcommand("fuzz", "Randomized soundness and attainment search");
  s_fuzz->add_option("--div", fuzz.div)->required();
  add_params(s_fuzz, fuzz.delta, fuzz.m, fuzz.M);
  s_fuzz->add_option("--trials", fuzz.trials);
  s_fuzz->add_option("--seed", fuzz.seed);
  s_fuzz->add_option("--n", fuzz.n, "Atoms per sampled pair");
  s_fuzz->add_option("--steps", fuzz.steps, "Hill-climb steps per trial");
  s_fuzz->add_option("--step-scale", fuzz.step_scale);
  s_fuzz->add_option("--tol", fuzz.tol);
  s_fuzz->add_flag("--no-extremal-seed", fuzz.no_extremal_seed);
  s_fuzz->add_option("--threads", fuzz.threads);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    CommandResult result;
    if (s_bound->parsed()) {
      result = cmd_bound(bound);
    } else if (s_div->parsed()) {
      result = cmd_divergence(divergence);
    } else if (s_ext->parsed()) {
      result = cmd_extremal(extremal);
    } else if (s_verify->parsed()) {
      result = cmd_verify(verify);
    } else if (s_compare->parsed()) {
      result = cmd_compare(compare);
    } else {
      result = cmd_fuzz(fuzz);
    }
    out << encode(result.payload, format);
    if (result.exit_code == kExitCheckFailed) err << "check failed\n";
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace fdivbound::cli
