#include "suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "diagred/dra.hpp"
#include "diagred/rmatrix.hpp"
#include "diagred/special_elements.hpp"
#include "diagred/zhelobenko.hpp"

namespace diagred::cli {

namespace {

// Sample size of the degree-3 associativity check from rank 3 on.
constexpr std::size_t kAssociativitySample = 200;
constexpr unsigned kAssociativitySeed = 1;

using Runner = std::function<SuiteRun(const SuiteOptions&)>;

SuiteRun plain(const std::string& module, Report r, int n) {
  SuiteRun run;
  run.module = module;
  run.report = std::move(r);
  run.n = n;
  return run;
}

SuiteRun weyl_run(Report r, const WeylConfig& c) {
  SuiteRun run = plain("weyl", std::move(r), c.n);
  run.copies = c.copies;
  run.stats = c.stats;
  return run;
}

const std::map<std::string, std::vector<std::pair<std::string, Runner>>>& registry() {
  static const std::map<std::string, std::vector<std::pair<std::string, Runner>>> table = {
      {"rmatrix",
       {
           {"involution", [](const SuiteOptions& o) { return plain("rmatrix", check_involutive(o.n), o.n); }},
           {"dybe", [](const SuiteOptions& o) { return plain("rmatrix", check_dybe(o.n), o.n); }},
           {"skew-inverse", [](const SuiteOptions& o) { return plain("rmatrix", check_skew_inverse(o.n), o.n); }},
           {"aux", [](const SuiteOptions& o) { return plain("rmatrix", check_aux_identities(o.n), o.n); }},
           {"traces", [](const SuiteOptions& o) { return plain("rmatrix", check_traces(o.n), o.n); }},
       }},
      {"weyl",
       {
           {"confluence",
            [](const SuiteOptions& o) {
              const WeylConfig c{o.n, o.copies, o.stats, o.cross, o.fermion};
              return weyl_run(check_confluence(WeylAlgebra(c)), c);
            }},
           {"reflection",
            [](const SuiteOptions& o) {
              const WeylConfig c{o.n, o.copies, o.stats, o.cross, o.fermion};
              return weyl_run(verify_reflection(WeylAlgebra(c)), c);
            }},
           // Defined on one copy of bosonic generators.
           {"zhelobenko",
            [](const SuiteOptions& o) {
              const WeylConfig c{o.n, 1, Statistics::bosonic};
              Report r = verify_zhelobenko(WeylAlgebra(c));
              r.absorb(check_normal_ordered_action(WeylAlgebra(c)));
              r.absorb(check_variant_generators(o.n));
              if (o.n >= 2) {
                const std::vector<Coeff> propagated = mu_by_propagation(o.n);
                for (int i = 0; i < o.n; ++i) {
                  ++r.checks;
                  if (!(propagated[i] == mu(i, o.n)))
                    r.fail("propagated constant mu", {i + 1}, propagated[i].to_string(), mu(i, o.n).to_string());
                }
              }
              return weyl_run(std::move(r), c);
            }},
           {"split",
            [](const SuiteOptions& o) {
              if (o.copies < 2) throw std::invalid_argument("suite split needs --N 2 or more");
              const WeylConfig c{o.n, o.copies, o.stats, o.cross, o.fermion};
              return weyl_run(split_realization(WeylAlgebra(c), 1), c);
            }},
       }},
      {"dra",
       {
           {"reflection",
            [](const SuiteOptions& o) {
              const DraAlgebra a(DraConfig{o.n, 1});
              Report r = check_round_trip(a);
              r.absorb(check_associativity(a, o.n <= 2 ? 0 : kAssociativitySample, kAssociativitySeed));
              r.absorb(check_h_realization(o.n));
              return plain("dra", std::move(r), o.n);
            }},
           {"central",
            [](const SuiteOptions& o) {
              const DraAlgebra a(DraConfig{o.n, 1});
              Report r;
              for (int p = 1; p <= o.power; ++p) r.absorb(check_central(a, p));
              return plain("dra", std::move(r), o.n);
            }},
           {"coproduct", [](const SuiteOptions& o) { return plain("dra", coproduct_check(o.n), o.n); }},
           {"transforms", [](const SuiteOptions& o) { return plain("dra", check_generator_transforms(o.n), o.n); }},
           {"appendix",
            [](const SuiteOptions& o) {
              if (o.n != 2) throw std::invalid_argument("suite appendix is defined for --n 2 only");
              return plain("dra", rank_two_regression(), 2);
            }},
       }},
  };
  return table;
}

// Suites skipped when a whole module runs and the configuration does not fit.
bool applies(const std::string& suite, const SuiteOptions& o) {
  if (suite == "split") return o.copies >= 2;
  if (suite == "appendix") return o.n == 2;
  return true;
}

}  // namespace

std::vector<std::string> suite_names(const std::string& module) {
  auto entry = registry().find(module);
  if (entry == registry().end()) throw std::invalid_argument("unknown module " + module);
  std::vector<std::string> out;
  for (const auto& [name, runner] : entry->second) out.push_back(name);
  return out;
}

std::vector<SuiteRun> run_suites(const std::string& module, const std::string& suite, const SuiteOptions& options) {
  std::vector<std::string> modules;
  if (module == "all") {
    if (!suite.empty()) throw std::invalid_argument("--suite needs a single module");
    modules = {"rmatrix", "weyl", "dra"};
  } else {
    modules = {module};
  }
  const auto& table = registry();
  std::vector<SuiteRun> out;
  for (const std::string& m : modules) {
    auto entry = table.find(m);
    if (entry == table.end()) throw std::invalid_argument("unknown module " + m);
    bool found = suite.empty();
    for (const auto& [name, runner] : entry->second) {
      if (!suite.empty() && name != suite) continue;
      if (suite.empty() && !applies(name, options)) continue;
      found = true;
      const auto start = std::chrono::steady_clock::now();
      SuiteRun run = runner(options);
      run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      run.report.suite = name;
      out.push_back(std::move(run));
    }
    if (!found) throw std::invalid_argument("unknown suite " + suite + " for module " + m);
  }
  return out;
}

}  // namespace diagred::cli
