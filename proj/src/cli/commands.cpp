#include "tcover/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "tcover/cliques.hpp"
#include "tcover/combinatorics.hpp"
#include "tcover/conditions.hpp"
#include "tcover/errors.hpp"
#include "tcover/explicit_cover.hpp"
#include "tcover/instance_json.hpp"
#include "tcover/random_cover.hpp"
#include "tcover/regimes.hpp"
#include "tcover/upset.hpp"

namespace tcover::cli {

using nlohmann::json;

namespace {

constexpr double kE = std::numbers::e;

// Where an instance comes from: a file, or clique parameters that may be too
// large to materialize.
struct Source {
  std::string instance_path;
  std::vector<std::int64_t> clique;
  std::string r_text;

  std::optional<Instance> inst;
  std::optional<CliqueParams> params;
  Rational r;

  void resolve() {
    if (!instance_path.empty() && !clique.empty()) throw ValidationError("give either --instance or --clique");
    if (!instance_path.empty()) {
      inst = load_instance(instance_path);
      r = inst->r();
      if (!r_text.empty()) throw ValidationError("--r only applies to --clique");
      return;
    }
    if (clique.empty()) throw ValidationError("an instance is required: --instance PATH or --clique NT KT L");
    if (r_text.empty()) throw ValidationError("--clique needs --r");
    params = CliqueParams{clique[0], clique[1], clique[2]};
    params->validate();
    r = parse_rational(r_text);
    if (r <= 0) throw ValidationError("r must be positive");
    if (params->n() <= BigInt(kMaxGroundSize)) inst = build_clique_instance(*params, r);
  }

  InstanceShape shape() const { return inst ? inst->shape() : params->shape(log_of(r)); }

  json describe() const {
    json j;
    if (!instance_path.empty()) j["instance"] = instance_path;
    if (params) j["clique"] = {params->nt, params->kt, params->l};
    j["r"] = format_rational(r);
    j["materialized"] = inst.has_value();
    if (inst) {
      j["n"] = inst->n();
      j["k"] = inst->k();
      j["d"] = inst->d();
    } else {
      j["n"] = params->n().str();
      j["k"] = params->k();
      j["d"] = params->d().str();
    }
    return j;
  }

  std::vector<std::string> warnings(std::optional<double> L) const {
    if (inst) return inst->assumption_warnings(L);
    auto out = params->warnings();
    const double log_d = params->log_d();
    const double log_r = log_of(r);
    if (log_r > log_d) out.push_back("r > d: the upset is empty");
    if (L && log_r < static_cast<double>(params->k()) * std::log(*L)) {
      out.push_back("r < L^k: G := E already satisfies the target");
    }
    return out;
  }

  const Instance& need_instance(const char* what) const {
    if (!inst) throw TooLarge(std::string(what) + " needs a materialized instance (C(nt,l) <= 64)");
    return *inst;
  }
};

void add_source_options(CLI::App* cmd, Source& src) {
  cmd->add_option("--instance", src.instance_path, "Instance JSON file");
  cmd->add_option("--clique", src.clique, "Clique hypergraph NT KT L")->expected(3);
  cmd->add_option("--r", src.r_text, "Weight denominator r for --clique (integer, num/den or decimal)");
}

json rational_json(const Rational& q) { return json{{"exact", format_rational(q)}, {"decimal", to_double(q)}}; }

json law_json(const OverlapLaw& law) {
  json probs = json::array();
  for (std::int64_t v = 0; v <= law.max_value(); ++v) {
    json e{{"value", v}, {"prob", law.prob(v)}};
    if (law.kind() == OverlapLaw::Kind::empirical) {
      e["count"] = law.count(v);
    } else {
      e["exact"] = format_rational(law.exact_prob(v));
    }
    probs.push_back(std::move(e));
  }
  json j{{"kind", to_string(law.kind())}, {"probs", probs}};
  if (law.kind() == OverlapLaw::Kind::empirical) j["samples"] = law.samples();
  return j;
}

json envelope(const std::string& command, json config, const std::string& mode) {
  config["mode"] = mode;
  return json{{"schema", "v1"}, {"command", command}, {"config", std::move(config)}};
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

json estimate_json(const CoverageEstimate& c) {
  return json{{"trials", c.trials},         {"successes", c.successes},
              {"estimate", c.estimate},     {"wilson_low", c.wilson_low},
              {"wilson_high", c.wilson_high}, {"wilson_se", c.wilson_se},
              {"m", c.m},                   {"analytic_bound", c.analytic_bound},
              {"analytic_exp_bound", c.analytic_exp_bound}};
}

json transfer_json(const ConditionalTransfer& t) {
  json j{{"trials", t.trials},
         {"covered", t.covered},
         {"p_covers", t.p_covers},
         {"mean_weight", t.mean_weight},
         {"mean_weight_given_cover", t.mean_weight_given_cover},
         {"std_error_given_cover", t.std_error_given_cover}};
  j["transfer_bound"] = std::isfinite(t.transfer_bound) ? json(t.transfer_bound) : json("+inf");
  return j;
}

json weight_json(const WeightEstimate& w) {
  json hist = json::object();
  for (const auto& [size, count] : w.size_histogram) hist[std::to_string(size)] = count;
  json j{{"estimate", to_json(w.estimate)}, {"std_error", to_json(w.std_error)}, {"exact", w.exact},
         {"trials", w.trials},               {"log_t", w.log_t},                 {"size_histogram", hist}};
  if (w.transfer) j["transfer"] = transfer_json(*w.transfer);
  return j;
}

// ---- instance ----

int cmd_instance(Source& src, const std::string& out_path, std::ostream& out) {
  src.resolve();
  const Instance& inst = src.need_instance("instance");
  const std::string text = dump_instance(inst);
  if (out_path.empty()) {
    out << text;
  } else {
    write_text(out_path, text);
  }
  return 0;
}

// ---- check ----

struct CheckOptions {
  std::string thm = "two";
  std::string L = "2e";
  std::optional<unsigned> s;
  std::uint64_t trials = 10'000;
  std::uint64_t seed = 0;
  bool empirical = false;
  bool pointwise = false;
};

int cmd_check(Source& src, const CheckOptions& o, const std::string& mode, const std::string& out_path,
              std::ostream& out) {
  src.resolve();
  const double L = parse_L(o.L);
  const InstanceShape shape = src.shape();
  json config = src.describe();
  config["thm"] = o.thm;
  config["L"] = L;
  config["seed"] = o.seed;
  config["empirical"] = o.empirical;
  if (o.empirical) config["trials"] = o.trials;

  ConditionReport report;
  std::optional<OverlapLaw> law;
  json extra = json::object();
  if (o.thm == "two") {
    if (o.empirical) {
      law = sum_overlap_law(src.need_instance("--empirical"), 2, o.trials, o.seed);
    } else if (src.inst && src.inst->d() <= kMaxPairEnumerationEdges) {
      law = pair_overlap_law(*src.inst);
    } else if (src.params) {
      law = exact_pair_law_cliques(*src.params);
    } else {
      throw TooLarge("d exceeds 10^4 pairs; use --empirical");
    }
    report = check_thm_two(shape, *law, L);
    report.notes.push_back("construction assumes s >= 2");
    if (src.inst && src.inst->r_is_integer() && src.r <= Rational(static_cast<unsigned long long>(src.inst->d()))) {
      const ExplicitCoverWeights w = explicit_cover_weights(*src.inst, L);
      json cover{{"w0", to_json(w.w0)},
                 {"w1", to_json(w.w1)},
                 {"total", to_json(w.total)},
                 {"w0_materialized", w.w0_materialized},
                 {"w1_materialized", w.w1_materialized},
                 {"report", to_json(w.report)}};
      if (mode == "exact") {
        cover["q_upper"] = format_rational(w.q_upper);
        if (w.w0_exact_upper) cover["w0_exact_upper"] = rational_json(*w.w0_exact_upper);
        if (w.w1_exact_upper) cover["w1_exact_upper"] = rational_json(*w.w1_exact_upper);
      }
      extra["explicit_cover"] = std::move(cover);
    }
  } else if (o.thm == "one") {
    unsigned s = 0;
    if (o.s) {
      s = *o.s;
    } else {
      s = std::max(1u, static_cast<unsigned>(ceil_tolerant(shape.log_n / static_cast<double>(shape.k))));
    }
    if (s < 1) throw ValidationError("--s must be >= 1");
    config["s"] = s;
    config["pointwise"] = o.pointwise;
    if (o.pointwise) {
      TailBound tail;
      if (src.inst) {
        const auto tails = max_conditional_tail(*src.inst, s);
        tail = [tails](std::uint64_t y) { return LogReal::from(tails.at(y)); };
        report.notes.push_back("tail: maximum over unions reachable in s-1 draws");
      } else {
        const CliqueParams p = *src.params;
        tail = [p](std::uint64_t y) {
          const LogReal b = specialized_tail_bound(p.nt, p.kt, ytilde_map(y, p.l));
          return b > LogReal::one() ? LogReal::one() : b;
        };
      }
      ConditionReport pw = check_thm_one_pointwise(tail, shape, L);
      for (auto& n : report.notes) pw.notes.push_back(n);
      if (!src.inst) pw.notes.push_back("tail: (4 e kt ln^2(nt)/nt)^yt clique bound");
      report = std::move(pw);
    } else {
      if (s == 1) {
        law = OverlapLaw::exact({Rational(1)});
      } else if (o.empirical) {
        law = sum_overlap_law(src.need_instance("--empirical"), s, o.trials, o.seed);
      } else if (src.inst) {
        try {
          law = exact_sum_overlap_law(*src.inst, s);
        } catch (const TooLarge&) {
          law = sum_overlap_law(*src.inst, s, o.trials, o.seed);
          config["trials"] = o.trials;
          extra["fallback"] = "exact sum law too large, sampled instead";
        }
      } else if (s == 2) {
        law = exact_pair_law_cliques(*src.params);
      } else {
        throw TooLarge("sum law for s > 2 needs a materialized instance; try --pointwise");
      }
      report = check_thm_one(shape, *law, s, L);
    }
  } else {
    throw ValidationError("--thm must be one or two");
  }

  json j = envelope("check", std::move(config), mode);
  j["warnings"] = src.warnings(L);
  if (law) j["law"] = law_json(*law);
  j["report"] = to_json(report);
  j["verdict"] = to_string(report.overall());
  for (auto& [key, value] : extra.items()) j[key] = value;
  emit(j, out_path, out);
  return exit_code(report.overall());
}

// ---- cover ----

struct CoverOptions {
  std::optional<unsigned> s;
  std::optional<std::uint64_t> t;
  std::string L = "2e";
  std::uint64_t trials = 10'000;
  std::uint64_t seed = 0;
  std::string trace_out;
};

int cmd_cover(Source& src, const CoverOptions& o, const std::string& mode, const std::string& out_path,
              std::ostream& out) {
  src.resolve();
  const Instance& inst = src.need_instance("cover");
  const double L = parse_L(o.L);
  const unsigned s = o.s ? *o.s : default_s(inst);
  if (s < 1) throw ValidationError("--s must be >= 1");

  // t_value == 0 with analytic_t means t is only known through log_t
  std::uint64_t t_value = 0;
  double log_t = 0.0;
  bool analytic_t = false;
  if (o.t) {
    t_value = *o.t;
    log_t = t_value > 0 ? std::log(static_cast<double>(t_value)) : -INFINITY;
    analytic_t = t_value > kMaxMaterializedT;
  } else if (const auto t = default_t(inst, s)) {
    t_value = *t;
    log_t = std::log(static_cast<double>(t_value));
  } else {
    log_t = default_log_t(inst, s);
    analytic_t = true;
  }

  json config = src.describe();
  config["s"] = s;
  config["L"] = L;
  config["trials"] = o.trials;
  config["seed"] = o.seed;
  config["analytic_t"] = analytic_t;
  if (!analytic_t) {
    config["t"] = t_value;
  } else {
    config["log_t"] = log_t;
  }

  json j = envelope("cover", std::move(config), mode);
  j["warnings"] = inst.assumption_warnings(L);
  j["p"] = solve_p(inst);
  if (analytic_t) {
    j["notes"] = json::array({"t exceeds 10^6: evaluated analytically, unions not materialized"});
    j["weight"] = weight_json(expected_cover_weight_log_t(inst, s, log_t, L, o.trials, o.seed));
  } else {
    const CoverParams params{s, t_value, L, o.seed};
    params.validate();
    const bool enumerable = inst.n() <= kMaxEnumerableGroundSize;
    if (enumerable) j["coverage"] = estimate_json(coverage_probability(inst, params, o.trials));
    if (t_value > 0) j["weight"] = weight_json(expected_cover_weight(inst, params, o.trials, enumerable));
    if (!o.trace_out.empty()) {
      const CoverSample sample = sample_cover(inst, params);
      std::ostringstream lines;
      for (std::size_t i = 0; i < sample.unions.size(); ++i) {
        lines << json{{"i", i},
                      {"set", sample.unions[i].indices()},
                      {"y", sample.y_traces[i]},
                      {"size", sample.sizes[i]}}
                     .dump()
              << "\n";
      }
      write_text(o.trace_out, lines.str());
      j["trace_out"] = o.trace_out;
    }
  }
  emit(j, out_path, out);
  return 0;
}

// ---- s1 ----

int cmd_s1(Source& src, const std::string& c_text, const std::string& L_text, std::uint64_t seed,
           const std::string& m_source, const std::string& mode, const std::string& out_path, std::ostream& out) {
  src.resolve();
  const Instance& inst = src.need_instance("s1");
  const double c = parse_L(c_text);
  const double L = parse_L(L_text);
  MinimalCount source = MinimalCount::automatic;
  if (m_source == "exact") {
    source = MinimalCount::exact;
  } else if (m_source == "bound") {
    source = MinimalCount::bound;
  } else if (m_source != "auto") {
    throw ValidationError("--m-source must be auto, exact or bound");
  }
  const S1Result res = s1_construction(inst, c, L, seed, source);

  json config = src.describe();
  config["c"] = c;
  config["L"] = L;
  config["seed"] = seed;
  config["s"] = 1;
  config["m_source"] = m_source;
  json j = envelope("s1", std::move(config), mode);
  j["warnings"] = inst.assumption_warnings(L);
  j["t"] = res.t;
  j["m"] = to_json(res.m);
  j["m_exact"] = res.m_exact;
  j["report"] = to_json(res.report);
  j["verdict"] = to_string(res.report.overall());
  if (res.sample) {
    const SubsetFamily family = res.sample->family();
    json sample{{"unions", res.sample->unions.size()}, {"distinct", family.size()}};
    if (inst.n() <= kMaxEnumerableGroundSize) sample["covers"] = covers(family, inst);
    j["sample"] = sample;
  }
  emit(j, out_path, out);
  return exit_code(res.report.overall());
}

// ---- pairs ----

int cmd_pairs(Source& src, bool empirical, std::uint64_t trials, std::uint64_t seed, const std::string& mode,
              const std::string& out_path, std::ostream& out) {
  src.resolve();
  json config = src.describe();
  std::optional<OverlapLaw> exact;
  if (src.params) {
    exact = exact_pair_law_cliques(*src.params);
  } else {
    exact = pair_overlap_law(*src.inst);
  }
  json j;
  if (empirical) {
    config["trials"] = trials;
    config["seed"] = seed;
    j = envelope("pairs", std::move(config), mode);
    const OverlapLaw emp = sum_overlap_law(src.need_instance("--empirical"), 2, trials, seed);
    j["empirical"] = law_json(emp);
    j["total_variation"] = emp.total_variation(*exact);
  } else {
    j = envelope("pairs", std::move(config), mode);
  }
  j["law"] = law_json(*exact);
  if (src.params && src.inst) j["matches_enumeration"] = pair_overlap_law(*src.inst) == *exact;
  j["warnings"] = src.warnings(std::nullopt);
  emit(j, out_path, out);
  return 0;
}

// ---- chain ----

json pmf_json(const std::map<std::int64_t, Rational>& pmf) {
  json a = json::array();
  for (const auto& [v, p] : pmf) a.push_back(json{{"value", v}, {"exact", format_rational(p)}, {"prob", to_double(p)}});
  return a;
}

int cmd_chain(const std::vector<std::int64_t>& clique, unsigned s, std::uint64_t trials, std::uint64_t seed,
              std::optional<std::int64_t> tail_mt, const std::string& mode, const std::string& out_path,
              std::ostream& out) {
  if (clique.size() != 3) throw ValidationError("chain needs --clique NT KT L");
  const CliqueParams params{clique[0], clique[1], clique[2]};
  params.validate();
  json config{{"clique", clique}, {"s", s}, {"trials", trials}, {"seed", seed}};
  if (tail_mt) config["tail_mt"] = *tail_mt;
  json j = envelope("chain", std::move(config), mode);
  j["warnings"] = params.warnings();

  const auto states = vertex_union_chain(params, s);
  json chain = json::array();
  for (const auto& st : states) {
    Rational mean(0);
    for (const auto& [m, p] : st.union_size_pmf) mean += p * m;
    chain.push_back(json{{"step", st.step},
                         {"union_size", pmf_json(st.union_size_pmf)},
                         {"overlap", pmf_json(st.overlap_pmf)},
                         {"mean_union_size", rational_json(mean)}});
  }
  j["chain"] = chain;

  if (trials > 0) {
    const auto traces = run_trials(trials, [&](std::uint64_t i) {
      Rng rng = make_rng(seed, i);
      return sample_clique_trace(params, s, rng);
    });
    double sum = 0.0;
    double sq = 0.0;
    std::uint64_t violations = 0;
    for (const auto& tr : traces) {
      const double m = static_cast<double>(tr.mt.back());
      sum += m;
      sq += m * m;
      for (std::size_t q = 0; q < tr.y.size(); ++q) {
        const auto cap = tr.yt[q] < params.l ? 0
                                             : binomial_u64(static_cast<std::uint64_t>(tr.yt[q]),
                                                            static_cast<std::uint64_t>(params.l));
        if (tr.y[q] > cap) ++violations;
      }
    }
    const double n = static_cast<double>(trials);
    const double mean = sum / n;
    const double var = trials > 1 ? (sq - n * mean * mean) / (n - 1.0) : 0.0;
    j["monte_carlo"] = json{{"mean_union_size", mean},
                            {"std_error", std::sqrt(std::max(var, 0.0) / n)},
                            {"domination_violations", violations}};
  }

  const FAnalysis f = f_analysis(params.kt, params.l);
  json fvals = json::array();
  for (const auto& [yt, v] : f.values) fvals.push_back(json{{"yt", yt}, {"f", format_rational(v)}, {"decimal", to_double(v)}});
  j["f_analysis"] = json{{"values", fvals},
                         {"f_l_at_least_l_minus_1", f.f_l_at_least},
                         {"f_last_equals_l_minus_1", f.f_last_equal},
                         {"concave", f.concave}};

  if (tail_mt) {
    json tails = json::array();
    for (std::int64_t yt = 0; yt <= params.kt; ++yt) {
      const TailCheck tc = tail_bound_check(params, *tail_mt, yt);
      tails.push_back(json{{"yt", yt},
                           {"exact", format_rational(tc.exact)},
                           {"exact_decimal", to_double(tc.exact)},
                           {"bound", to_json(tc.bound)},
                           {"verdict", tc.pass ? "PASS" : "FAIL"}});
    }
    j["tail_checks"] = tails;
  }
  emit(j, out_path, out);
  return 0;
}

// ---- regimes ----

std::vector<std::int64_t> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3) throw ValidationError("--n-grid expects LO:HI[:PER_DECADE]");
  auto as_int = [](const std::string& p) {
    std::size_t used = 0;
    const double v = std::stod(p, &used);
    if (used != p.size() || !(v >= 1.0) || v > 9.0e18) throw ValidationError("bad grid value '" + p + "'");
    return static_cast<std::int64_t>(std::llround(v));
  };
  const unsigned per = parts.size() == 3 ? static_cast<unsigned>(as_int(parts[2])) : 4;
  return log_grid(as_int(parts[0]), as_int(parts[1]), per);
}

json scan_json(const RegimeScan& s) {
  return json{{"nt", s.params.nt},
              {"vacuous", s.vacuous},
              {"gap", s.gap},
              {"gap_free", s.gap_free()},
              {"bounds_overlap", s.bounds_overlap},
              {"log_r_lo", s.log_r_lo},
              {"log_r_hi", s.log_r_hi},
              {"case1_applicable", s.case1_applicable},
              {"case2_applicable", s.case2_applicable},
              {"pairwise_applicable", s.pairwise_applicable},
              {"log_threshold_case1", s.log_threshold_case1},
              {"log_threshold_case2", std::isfinite(s.log_threshold_case2) ? json(s.log_threshold_case2) : json(nullptr)},
              {"log_bound_53", s.log_bound_53},
              {"log_cor_bound", s.log_cor_bound},
              {"log_cor_bound_sc", s.log_cor_bound_sc},
              {"cor_bound_holds", s.log_cor_bound <= 0.0},
              {"cor_bound_sc_holds", s.log_cor_bound_sc <= 0.0}};
}

int cmd_regimes(const std::string& grid_text, std::int64_t kt, std::int64_t l, const std::string& L_text,
                unsigned points, const std::string& r_text, const std::string& csv_path,
                const std::string& plot_path, const std::string& mode, const std::string& out_path,
                std::ostream& out) {
  const double L = parse_L(L_text);
  const auto grid = parse_grid(grid_text);
  const RegimeGridScan scan = regime_grid_scan(grid, kt, l, L, points);

  json config{{"n_grid", grid_text}, {"kt", kt}, {"l", l}, {"L", L}, {"points", points}};
  if (!r_text.empty()) config["r"] = r_text;
  json j = envelope("regimes", std::move(config), mode);
  json scans = json::array();
  bool all_vacuous = true;
  for (const auto& s : scan.scans) {
    scans.push_back(scan_json(s));
    all_vacuous = all_vacuous && s.vacuous;
  }
  j["scans"] = scans;
  j["summary"] = json{{"any_gap", scan.any_gap},
                      {"all_vacuous", all_vacuous},
                      {"status", all_vacuous ? "vacuous" : (scan.any_gap ? "gap" : "covered")}};
  j["summary"]["smallest_gap_free_nt"] =
      scan.smallest_gap_free_nt ? json(*scan.smallest_gap_free_nt) : json(nullptr);
  j["warnings"] = json::array();
  if (L < 2.0 * kE) j["warnings"].push_back("L < 2e: neither regime applies");

  if (!r_text.empty()) {
    const LogReal r = LogReal::from(parse_rational(r_text));
    json checks = json::array();
    for (auto nt : grid) {
      const CliqueParams p{nt, kt, l};
      json c{{"nt", nt},
             {"general", to_json(regime_check_52(p, r, L, RegimeCase::general))},
             {"pairwise", to_json(regime_check_53(p, r, L))}};
      if (kt == l + 1) c["succinct"] = to_json(regime_check_52(p, r, L, RegimeCase::succinct));
      checks.push_back(std::move(c));
    }
    j["checks"] = checks;
  }

  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "nt,log_r,r,lemma52_case1,lemma52_case2,lemma53,covered\n";
    for (const auto& s : scan.scans) {
      for (const auto& row : s.rows) {
        csv << s.params.nt << ',' << json(row.log_r).dump() << ',' << LogReal::from_log(row.log_r).to_string(8)
            << ',' << row.case1 << ',' << row.case2 << ',' << row.pairwise << ',' << row.covered << '\n';
      }
    }
    write_text(csv_path, csv.str());
    j["csv"] = csv_path;
  }
  if (!plot_path.empty()) {
    std::ostringstream plot;
    plot << "nt,log_r,margin_case1,margin_case2,margin_53\n";
    for (const auto& s : scan.scans) {
      for (const auto& row : s.rows) {
        plot << s.params.nt << ',' << json(row.log_r).dump() << ',' << json(row.margin_case1).dump() << ','
             << json(row.margin_case2).dump() << ',' << json(row.margin_53).dump() << '\n';
      }
    }
    write_text(plot_path, plot.str());
    j["plot_data"] = plot_path;
  }
  emit(j, out_path, out);
  return 0;
}

}  // namespace

double parse_L(const std::string& text) {
  if (text == "big") return std::pow(2.0, 12) * std::exp(16.0);
  std::string body = text;
  double scale = 1.0;
  if (!body.empty() && body.back() == 'e') {
    body.pop_back();
    scale = kE;
    if (body.empty()) return kE;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(body, &used);
  } catch (const std::exception&) {
    throw ValidationError("cannot parse '" + text + "' as a number");
  }
  if (used != body.size() || !std::isfinite(v)) throw ValidationError("cannot parse '" + text + "' as a number");
  return v * scale;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random cover constructions and their sufficient conditions on uniform hypergraphs"};
  app.require_subcommand(1);
  std::string mode = "log";
  std::string out_path;
  app.add_option("--mode", mode, "Arithmetic mode for reported checks")
      ->check(CLI::IsMember({"exact", "log"}))
      ->capture_default_str();

  Source src;

  auto* inst_cmd = app.add_subcommand("instance", "Write a canonical instance JSON file");
  add_source_options(inst_cmd, src);
  inst_cmd->add_option("--edges", src.instance_path, "Instance JSON file to canonicalize");
  inst_cmd->add_option("--out", out_path, "Output path (default stdout)");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate an overlap condition; exit 0 PASS, 1 FAIL, 2 INCONCLUSIVE");
  add_source_options(check_cmd, src);
  check_cmd->add_option("--thm", check.thm, "one or two")->check(CLI::IsMember({"one", "two"}))->capture_default_str();
  check_cmd->add_option("--L", check.L, "Scaling constant: number, e, <x>e or big")->capture_default_str();
  check_cmd->add_option("--s", check.s, "Edges per union (default ceil(ln n / k))");
  check_cmd->add_option("--trials", check.trials, "Monte Carlo trials")->capture_default_str();
  check_cmd->add_option("--seed", check.seed, "Seed")->capture_default_str();
  check_cmd->add_flag("--empirical", check.empirical, "Use a sampled overlap law");
  check_cmd->add_flag("--pointwise", check.pointwise, "Check the conditional tail form (thm one)");
  check_cmd->add_option("--out", out_path, "Output path (default stdout)");

  CoverOptions cover;
  auto* cover_cmd = app.add_subcommand("cover", "Monte Carlo coverage and expected weight of the random cover");
  add_source_options(cover_cmd, src);
  cover_cmd->add_option("--s", cover.s, "Edges per union (default ceil(ln n / k))");
  cover_cmd->add_option("--t", cover.t, "Number of unions (default ceil(p^(-sk) n))");
  cover_cmd->add_option("--L", cover.L, "Scaling constant")->capture_default_str();
  cover_cmd->add_option("--trials", cover.trials, "Monte Carlo trials")->capture_default_str();
  cover_cmd->add_option("--seed", cover.seed, "Seed")->capture_default_str();
  cover_cmd->add_option("--trace-out", cover.trace_out, "Write one JSON line per union of a single sample");
  cover_cmd->add_option("--out", out_path, "Output path (default stdout)");

  std::string s1_c = "e";
  std::string s1_L = "2e";
  std::string s1_m = "auto";
  std::uint64_t s1_seed = 0;
  auto* s1_cmd = app.add_subcommand("s1", "Single-edge unions: hypothesis and weight chain");
  add_source_options(s1_cmd, src);
  s1_cmd->add_option("--c", s1_c, "Constant c > 1")->capture_default_str();
  s1_cmd->add_option("--L", s1_L, "Scaling constant")->capture_default_str();
  s1_cmd->add_option("--seed", s1_seed, "Seed")->capture_default_str();
  s1_cmd->add_option("--m-source", s1_m, "auto, exact or bound")->capture_default_str();
  s1_cmd->add_option("--out", out_path, "Output path (default stdout)");

  bool pairs_empirical = false;
  std::uint64_t pairs_trials = 100'000;
  std::uint64_t pairs_seed = 0;
  auto* pairs_cmd = app.add_subcommand("pairs", "Exact law of the overlap of two random edges");
  add_source_options(pairs_cmd, src);
  pairs_cmd->add_flag("--empirical", pairs_empirical, "Also sample the law and report the total variation");
  pairs_cmd->add_option("--trials", pairs_trials, "Monte Carlo trials")->capture_default_str();
  pairs_cmd->add_option("--seed", pairs_seed, "Seed")->capture_default_str();
  pairs_cmd->add_option("--out", out_path, "Output path (default stdout)");

  std::vector<std::int64_t> chain_clique;
  unsigned chain_s = 2;
  std::uint64_t chain_trials = 0;
  std::uint64_t chain_seed = 0;
  std::optional<std::int64_t> chain_tail;
  auto* chain_cmd = app.add_subcommand("chain", "Exact vertex-union chain of random cliques");
  chain_cmd->add_option("--clique", chain_clique, "NT KT L")->expected(3)->required();
  chain_cmd->add_option("--s", chain_s, "Number of cliques")->capture_default_str();
  chain_cmd->add_option("--trials", chain_trials, "Monte Carlo cross-check trials")->capture_default_str();
  chain_cmd->add_option("--seed", chain_seed, "Seed")->capture_default_str();
  chain_cmd->add_option("--tail-mt", chain_tail, "Check the hypergeometric tail bound at this union size");
  chain_cmd->add_option("--out", out_path, "Output path (default stdout)");

  std::string grid = "1e3:1e6";
  std::int64_t reg_kt = 3;
  std::int64_t reg_l = 2;
  std::string reg_L = "big";
  unsigned reg_points = 64;
  std::string reg_r;
  std::string reg_csv;
  std::string reg_plot;
  auto* reg_cmd = app.add_subcommand("regimes", "Scan which r-regime covers each r in [L^k, d]");
  reg_cmd->add_option("--n-grid", grid, "LO:HI[:PER_DECADE] log grid of nt")->capture_default_str();
  reg_cmd->add_option("--kt", reg_kt, "Clique order")->capture_default_str();
  reg_cmd->add_option("--l", reg_l, "Base uniformity")->capture_default_str();
  reg_cmd->add_option("--L", reg_L, "Scaling constant")->capture_default_str();
  reg_cmd->add_option("--points", reg_points, "r grid points per nt")->capture_default_str();
  reg_cmd->add_option("--r", reg_r, "Also run both regime checkers at this r");
  reg_cmd->add_option("--csv", reg_csv, "Write the per-r coverage rows as CSV");
  reg_cmd->add_option("--emit-plot-data", reg_plot, "Write (r, margin) series as CSV");
  reg_cmd->add_option("--json", out_path, "Write the JSON summary here (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*inst_cmd) return cmd_instance(src, out_path, out);
    if (*check_cmd) return cmd_check(src, check, mode, out_path, out);
    if (*cover_cmd) return cmd_cover(src, cover, mode, out_path, out);
    if (*s1_cmd) return cmd_s1(src, s1_c, s1_L, s1_seed, s1_m, mode, out_path, out);
    if (*pairs_cmd) return cmd_pairs(src, pairs_empirical, pairs_trials, pairs_seed, mode, out_path, out);
    if (*chain_cmd) {
      return cmd_chain(chain_clique, chain_s, chain_trials, chain_seed, chain_tail, mode, out_path, out);
    }
    if (*reg_cmd) {
      return cmd_regimes(grid, reg_kt, reg_l, reg_L, reg_points, reg_r, reg_csv, reg_plot, mode, out_path, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace tcover::cli
