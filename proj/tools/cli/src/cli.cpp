#include "mmu_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "mmu/algebra.hpp"
#include "mmu/kovacs.hpp"
#include "mmu/lemmalab.hpp"
#include "mmu/qcomb.hpp"
#include "mmu/repmod.hpp"
#include "mmu/schurweyl.hpp"
#include "mmu/suites.hpp"
#include "mmu_cli/json_io.hpp"

namespace mmu::cli {

namespace {

// `verify` runs the subspace suite and the psi checks only on instances at
// most this large (in basis matrices); larger ones are reported as skipped.
constexpr std::uint64_t kSuiteBasisCap = 4096;
constexpr std::uint64_t kPsiBasisCap = 256;

void emit(std::ostream& out, const RunConfig& cfg, const std::string& text, const json& j) {
  out << (cfg.format == Format::json ? j.dump(2) + "\n" : text);
}

int unit_rank(const RunConfig& cfg) {
  const int r = cfg.r ? *cfg.r : cfg.n - (cfg.corank ? *cfg.corank : 1);
  if (r < 0 || r > cfg.n) throw InvalidArgument("rank r = " + std::to_string(r) + " outside 0.." + std::to_string(cfg.n));
  return r;
}

void require_n(const RunConfig& cfg, int lo = 0) {
  if (cfg.n < lo || cfg.n > kMaxDim) throw InvalidArgument("--n must lie in " + std::to_string(lo) + ".." + std::to_string(kMaxDim));
}

std::string check_line(const LemmaCheck& c) {
  std::ostringstream os;
  os << (c.passed() ? "PASS " : "FAIL ") << c.id << " (" << c.instances << " instances): " << c.statement << "\n";
  if (!c.passed()) os << "  " << c.failures << " failures, first: " << c.first_failure << "\n";
  return os.str();
}

int status_of(const std::vector<LemmaCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed()) return kFail;
  return kPass;
}

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > (std::uint64_t{1} << 62) / b) return std::uint64_t{1} << 62;
    out *= b;
  }
  return out;
}

// Groups eta by the rank sequence of each support matrix; every class must
// carry a single coefficient.
ClassCoeffs group_by_class(const AlgElem& u, int r) {
  std::map<RankSequence, Rat> seen;
  for (const auto& [k, c] : u.terms()) {
    const Mat m = u.matrix(k);
    if (!is_semi_idempotent(m)) throw ArithmeticError("support contains a non-semi-idempotent " + m.to_string());
    const RankSequence key = rank_sequence(m);
    auto [it, fresh] = seen.emplace(key, c);
    if (!fresh && it->second != c)
      throw ArithmeticError("coefficient is not constant on class " + key.to_string());
  }
  ClassCoeffs out;
  for (const RankSequence& key : class_keys(u.n(), r)) {
    auto it = seen.find(key);
    out.emplace_back(key, it == seen.end() ? Rat(0) : it->second);
  }
  return out;
}

}  // namespace

std::uint64_t effective_budget(const RunConfig& cfg) {
  if (cfg.budget) return cfg.budget;
  if (const char* env = std::getenv("MMU_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw InvalidArgument("MMU_BUDGET must be a positive integer");
    return v;
  }
  return kDefaultBudget;
}

int cmd_unit(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg, 1);
  const Field& f = Field::get(cfg.q);
  const int r = unit_rank(cfg);
  const AlgElem u = eta_r(f, cfg.n, r, effective_budget(cfg));
  const ClassCoeffs coeffs = group_by_class(u, r);
  json j = {{"n", cfg.n}, {"q", cfg.q}, {"r", r}, {"classes", to_json(coeffs)}, {"element", to_json(u)}};
  emit(out, cfg, format_listing(cfg.n, coeffs), j);
  return kPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t budget = effective_budget(cfg);
  std::optional<AlgElem> loaded;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw InvalidArgument("cannot read " + cfg.input);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InvalidArgument(cfg.input + ": " + e.what());
    }
    loaded = alg_from_json(j);
  }
  RunConfig c = cfg;
  if (loaded) {
    c.n = loaded->n();
    c.q = loaded->field().q();
  }
  require_n(c, 1);
  const Field& f = Field::get(c.q);
  const int r = loaded && !c.r && !c.corank ? std::max(loaded->max_rank(), 0) : unit_rank(c);
  const AlgElem u = loaded ? *loaded : eta_r(f, c.n, r, budget);

  VerifyOptions opts;
  opts.budget = budget;
  opts.jobs = c.jobs;
  const UnitReport unit = verify_unit(u, r, opts);
  const char* mode = unit.fallback ? "kuhn-criterion" : "exhaustive";

  std::string text = std::string(unit.passed ? "PASS " : "FAIL ") + "unit-law (" + mode + "): " + unit.detail + "\n";
  json j = {{"n", c.n},
            {"q", c.q},
            {"r", r},
            {"unit_law",
             {{"passed", unit.passed},
              {"mode", mode},
              {"matrices_checked", unit.matrices_checked},
              {"detail", unit.detail}}}};
  if (unit.counterexample) j["unit_law"]["counterexample"] = to_json(*unit.counterexample);
  bool ok = unit.passed;

  // The subspace and psi suites describe eta_r itself, so they only run for
  // the built-in element.
  std::vector<LemmaCheck> extra;
  json skipped = json::array();
  if (!loaded) {
    const std::uint64_t basis = upow(static_cast<std::uint64_t>(c.q), c.n * c.n);
    if (basis <= kSuiteBasisCap) {
      for (auto& chk : check_idempotent_suite(f, c.n, budget)) extra.push_back(std::move(chk));
    } else {
      skipped.push_back("idempotent-suite");
    }
    if (basis <= kPsiBasisCap) {
      for (auto& chk : check_psi(f, c.n, budget)) extra.push_back(std::move(chk));
    } else {
      skipped.push_back("psi");
    }
  }
  json checks = json::array();
  for (const auto& chk : extra) {
    text += check_line(chk);
    checks.push_back(to_json(chk));
    ok = ok && chk.passed();
  }
  for (const auto& s : skipped) text += "SKIP " + s.get<std::string>() + " (instance too large)\n";
  j["checks"] = checks;
  j["skipped"] = skipped;
  j["passed"] = ok;
  emit(out, c, text, j);
  return ok ? kPass : kFail;
}

int cmd_kovacs(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg, 1);
  const int r = unit_rank(cfg);
  const std::uint64_t budget = effective_budget(cfg);
  json j = {{"n", cfg.n}, {"r", r}};
  std::string text;
  if (!cfg.samples.empty()) {
    const ClassLaurents coeffs = interpolate_coeffs(cfg.n, r, cfg.samples, budget);
    j["samples"] = cfg.samples;
    j["classes"] = to_json(coeffs);
    text = format_listing(cfg.n, coeffs);
  } else {
    const Field& f = Field::get(cfg.q);
    const KovacsSystem sys = build_system(f, cfg.n, r, budget);
    const ClassCoeffs coeffs = solve_system(sys);
    j["q"] = cfg.q;
    j["upper_triangular"] = sys.is_upper_triangular();
    j["diagonal_q_powers"] = sys.diagonal_is_q_powers();
    j["classes"] = to_json(coeffs);
    text = format_listing(cfg.n, coeffs);
  }
  emit(out, cfg, text, j);
  return kPass;
}

int cmd_lemmas(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg, 1);
  const Field& f = Field::get(cfg.q);
  const std::uint64_t budget = effective_budget(cfg);
  const std::map<std::string, std::function<std::vector<LemmaCheck>()>> suites = {
      {"jordan", [&] { return check_jordan_lemmas(f, cfg.n); }},
      {"extensions", [&] { return check_corank1_extensions(f, cfg.n, budget); }},
      {"sums", [&] { return check_semi_idempotent_sums(f, cfg.n, budget); }},
      {"idempotents", [&] { return check_idempotent_suite(f, cfg.n, budget); }},
  };
  std::vector<std::string> order;
  if (cfg.suite == "all") {
    order = {"jordan", "extensions", "sums"};
  } else if (suites.count(cfg.suite)) {
    order = {cfg.suite};
  } else {
    throw InvalidArgument("unknown suite '" + cfg.suite + "' (jordan, extensions, sums, idempotents, all)");
  }
  std::vector<LemmaCheck> all;
  json j = {{"n", cfg.n}, {"q", cfg.q}, {"suites", json::object()}};
  std::string text;
  for (const auto& name : order) {
    json arr = json::array();
    for (auto& c : suites.at(name)()) {
      text += check_line(c);
      arr.push_back(to_json(c));
      all.push_back(std::move(c));
    }
    j["suites"][name] = arr;
  }
  const int status = status_of(all);
  j["passed"] = status == kPass;
  emit(out, cfg, text, j);
  return status;
}

int cmd_simples(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg, 0);
  const Field& f = Field::get(cfg.q);
  const auto simples = simple_modules(f, cfg.n);
  const auto classes = gl_conjugacy_classes(f, cfg.n, effective_budget(cfg));
  BigInt wedderburn = 0;
  bool ok = true;
  std::ostringstream text;
  json arr = json::array();
  for (const auto& s : simples) {
    std::string detail;
    const bool axiom = module_axiom_holds(s.module, &detail);
    const CharTable chi = character(s.module);
    const bool formula = chi == character_formula(cfg.n, s.pi);
    const bool dual = self_duality_check(s.module);
    const CharTable res = restrict_to_group_char(s.module);
    const bool induced = res == parabolic_induction_char(s.pi, cfg.n);
    ok = ok && axiom && formula && dual && induced;
    wedderburn += BigInt(s.module.dim) * s.module.dim;

    json by_class = json::array();
    std::string row;
    for (const auto& cls : classes) {
      const Rat v = res.at(mat_key(cls.front()));
      by_class.push_back(to_string(v));
      row += " " + to_string(v);
    }
    text << s.label.to_string() << ": dim " << s.module.dim << ", module axiom " << (axiom ? "ok" : "FAIL")
         << ", character formula " << (formula ? "ok" : "FAIL") << ", self-dual " << (dual ? "ok" : "FAIL")
         << ", group restriction = parabolic induction " << (induced ? "ok" : "FAIL") << "\n"
         << "  GL_" << cfg.n << " class values:" << row << "\n";
    json js = {{"label", s.label.to_string()},
               {"r", s.label.r},
               {"dim", s.module.dim},
               {"module_axiom", axiom},
               {"character_formula", formula},
               {"self_dual", dual},
               {"group_restriction_is_induced", induced},
               {"class_values", by_class},
               {"character", to_json(chi)}};
    if (!axiom) js["module_axiom_detail"] = detail;
    arr.push_back(js);
  }
  const BigInt total = int_pow(cfg.q, static_cast<unsigned long>(cfg.n * cfg.n));
  ok = ok && wedderburn == total;
  text << "sum of dim^2 = " << wedderburn.get_str() << " (|M_" << cfg.n << "| = " << total.get_str() << ")\n";

  json reps = json::array();
  for (const auto& cls : classes) reps.push_back(to_json(cls.front()));
  json j = {{"n", cfg.n},
            {"q", cfg.q},
            {"simples", arr},
            {"class_representatives", reps},
            {"wedderburn_sum", wedderburn.get_str()},
            {"passed", ok}};
  emit(out, cfg, text.str(), j);
  return ok ? kPass : kFail;
}

int cmd_schurweyl(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg, 1);
  if (cfg.m < 1 || cfg.m > kMaxDim) throw InvalidArgument("--m must lie in 1.." + std::to_string(kMaxDim));
  const Field& f = Field::get(cfg.q);
  const std::uint64_t budget = effective_budget(cfg);
  const DoubleCentralizerReport dc = double_centralizer(f, cfg.n, cfg.m, budget);
  const bool identity = sw_dimension_identity(cfg.n, cfg.m, cfg.q);
  bool ok = dc.holds() && identity;

  std::ostringstream text;
  text << "k[M_" << cfg.n << "," << cfg.m << "] over F_" << cfg.q << ":\n"
       << "  left image (M_" << cfg.n << "): " << dc.left_image << ", right commutant: " << dc.right_commutant << "\n"
       << "  right image (M_" << cfg.m << "): " << dc.right_image << ", left commutant: " << dc.left_commutant << "\n"
       << "  spans contained in commutants: " << (dc.containment ? "yes" : "no") << "\n"
       << (dc.holds() ? "PASS" : "FAIL") << " double-centralizer\n"
       << (identity ? "PASS" : "FAIL") << " dimension-identity q^(nm) = sum_r qbinom(n,r) qbinom(m,r) |GL_r|\n";
  json j = {{"n", cfg.n},
            {"m", cfg.m},
            {"q", cfg.q},
            {"left_image", dc.left_image},
            {"right_image", dc.right_image},
            {"left_commutant", dc.left_commutant},
            {"right_commutant", dc.right_commutant},
            {"containment", dc.containment},
            {"double_centralizer", dc.holds()},
            {"dimension_identity", identity}};

  // The trace identity needs a complete set of simples, which only exists
  // for the built-in groups.
  try {
    const auto simples = simple_modules(f, cfg.n);
    const TraceCheck tc = tensor_trace_check(simples, cfg.m, budget);
    ok = ok && tc.holds;
    text << (tc.holds ? "PASS" : "FAIL") << " trace-identity over " << tc.elements << " elements\n";
    if (!tc.holds) text << "  " << tc.first_mismatch << "\n";
    j["trace_identity"] = {{"passed", tc.holds}, {"elements", tc.elements}};
  } catch (const InvalidArgument&) {
    text << "SKIP trace-identity (no complete set of simple modules)\n";
    j["trace_identity"] = nullptr;
  }
  j["passed"] = ok;
  emit(out, cfg, text.str(), j);
  return ok ? kPass : kFail;
}

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
  require_n(cfg, 0);
  const auto types = semi_idempotent_types(cfg.n);
  std::ostringstream text;
  json arr = json::array();
  for (const auto& t : types) {
    const RankSequence seq = sequence_of_type(t);
    text << "  " << t.to_string() << " rank sequence " << seq.to_string() << "\n";
    arr.push_back({{"stable_rank", t.stable_rank}, {"nilpotent", to_json(t.nilpotent)}, {"rank_sequence", seq.values}});
  }
  text << types.size() << " semi-idempotent classes in M_" << cfg.n << "\n";
  emit(out, cfg, text.str(), {{"n", cfg.n}, {"count", types.size()}, {"types", arr}});
  return kPass;
}

int cmd_multiplicity(const RunConfig& cfg, std::ostream& out) {
  if (cfg.bound < 0 || cfg.bound > 20) throw InvalidArgument("--bound must lie in 0..20");
  if (cfg.vectors < 1) throw InvalidArgument("--vectors must be positive");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> value(-2, 5);
  const std::vector<std::string> labels = {"a", "b", "c"};

  int round_trips = 0;
  json samples = json::array();
  std::ostringstream text;
  for (int v = 0; v < cfg.vectors; ++v) {
    MultiplicityMap m;
    for (const auto& label : labels)
      for (int size = 0; size <= cfg.bound; ++size)
        for (const Partition& p : partitions(size))
          if (const long x = value(rng); x > 0) m[{label, p}] = x;
    const MultiplicityMap n = multiplicities_n_from_m(m, cfg.bound);
    const MultiplicityMap back = multiplicities_m_from_n(n, cfg.bound);
    if (back == m) ++round_trips;
    if (v == 0) {
      text << "first vector (label, partition: m -> n):\n";
      for (const auto& [key, x] : n) {
        auto it = m.find(key);
        text << "  " << key.first << " " << key.second.to_string() << ": " << (it == m.end() ? 0 : it->second) << " -> "
             << x << "\n";
      }
    }
    json js = json::array();
    for (const auto& [key, x] : m) js.push_back({{"label", key.first}, {"partition", to_json(key.second)}, {"m", x}});
    samples.push_back(js);
  }
  const bool ok = round_trips == cfg.vectors;
  text << (ok ? "PASS" : "FAIL") << " round-trip m -> n -> m on " << round_trips << "/" << cfg.vectors
       << " random vectors (seed " << cfg.seed << ", |lambda| <= " << cfg.bound << ")\n";
  json j = {{"bound", cfg.bound},
            {"seed", cfg.seed},
            {"vectors", cfg.vectors},
            {"round_trips", round_trips},
            {"passed", ok},
            {"samples", samples}};
  emit(out, cfg, text.str(), j);
  return ok ? kPass : kFail;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "text";
  std::string samples;

  CLI::App app{"Exact computations in the monoid algebra of n x n matrices over F_q"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Matrix size n");
    sub->add_option("--q", cfg.q, "Field order q (a prime power <= 49)");
    sub->add_option("--budget", cfg.budget, "Enumeration cap (default MMU_BUDGET or 2^24)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", cfg.output, "Write output to this file instead of stdout");
    sub->add_option("--seed", cfg.seed, "Seed for sampled checks");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  auto rank_opts = [&](CLI::App* sub) {
    auto* r = sub->add_option("--r", cfg.r, "Rank of the ideal (default n - 1)");
    sub->add_option("--corank", cfg.corank, "n - r")->excludes(r);
  };

  std::map<CLI::App*, std::function<int(const RunConfig&, std::ostream&)>> handlers;
  auto add = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[sub] = fn;
    return sub;
  };

  CLI::App* unit = add("unit", "Print the unit eta_r grouped by semi-idempotent class", cmd_unit);
  rank_opts(unit);
  CLI::App* verify = add("verify", "Check the unit law, the subspace idempotents and psi", cmd_verify);
  rank_opts(verify);
  verify->add_option("--input", cfg.input, "Verify this JSON algebra element instead of eta_r")->check(CLI::ExistingFile);
  CLI::App* kovacs = add("kovacs", "Solve the class system for the unit coefficients", cmd_kovacs);
  rank_opts(kovacs);
  kovacs->add_option("--samples", samples, "Comma-separated field orders; interpolates in q");
  CLI::App* lemmas = add("lemmas", "Brute-force the semi-idempotent counting lemmas", cmd_lemmas);
  lemmas->add_option("--suite", cfg.suite, "jordan, extensions, sums, idempotents or all");
  add("simples", "Build the simple modules and check them", cmd_simples);
  CLI::App* sw = add("schurweyl", "Double centralizer and trace checks on k[M_{n,m}]", cmd_schurweyl);
  sw->add_option("--m", cfg.m, "Number of columns m");
  add("classes", "List semi-idempotent conjugacy classes", cmd_classes);
  CLI::App* mult = add("multiplicity", "Round-trip the multiplicity inversion on random vectors", cmd_multiplicity);
  mult->add_option("--bound", cfg.bound, "Largest partition size");
  mult->add_option("--vectors", cfg.vectors, "Number of random vectors");

  std::vector<const char*> argv = {"mmu"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  cfg.format = format == "json" ? Format::json : Format::text;

  try {
    if (!samples.empty()) {
      std::stringstream ss(samples);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          std::size_t used = 0;
          cfg.samples.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
          throw InvalidArgument("bad sample '" + tok + "' in --samples");
        }
      }
    }
    CLI::App* chosen = app.get_subcommands().front();
    if (cfg.output.empty()) return handlers.at(chosen)(cfg, out);
    std::ostringstream buf;
    const int code = handlers.at(chosen)(cfg, buf);
    std::ofstream file(cfg.output);
    if (!file) throw InvalidArgument("cannot write " + cfg.output);
    file << buf.str();
    return code;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (raise --budget or MMU_BUDGET)\n";
    return kBudget;
  } catch (const ArithmeticError& e) {
    err << "arithmetic failure: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace mmu::cli
