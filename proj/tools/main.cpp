// diagred: command-line front end for the verification suites, relation
// catalogues, normal forms and central elements.
//
// Exit codes: 0 success, 1 an identity failed, 2 usage or parse error,
// 3 the computation itself failed (resources, non-terminating rewriting).

#include <gmp.h>
#include <sys/resource.h>
#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "diagred/dra.hpp"
#include "diagred/report.hpp"
#include "diagred/weyl.hpp"
#include "output.hpp"
#include "suites.hpp"

namespace {

using namespace diagred;
using cli::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

constexpr int kMaxRank = 6;
constexpr int kMaxCopies = 4;
constexpr int kMaxPower = 6;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  int n = 2;
  int copies = 1;
  std::string stats = "bosonic";
  int power = 2;
  std::string format;  // per-command default when empty
  std::string out;
  int jobs = 1;
  bool force = false;
  bool timing = false;
};

void check_ranges(const Common& c) {
  if (c.n < 1) throw UsageError("--n must be at least 1");
  if (c.copies < 1) throw UsageError("--N and --copies must be at least 1");
  if (c.power < 0) throw UsageError("--power must be non-negative");
  if (c.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (c.force) return;
  if (c.n > kMaxRank) throw UsageError("--n above " + std::to_string(kMaxRank) + " needs --force");
  if (c.copies > kMaxCopies) throw UsageError("--N/--copies above " + std::to_string(kMaxCopies) + " needs --force");
  if (c.power > kMaxPower) throw UsageError("--power above " + std::to_string(kMaxPower) + " needs --force");
}

Statistics statistics(const std::string& s) {
  auto st = parse_statistics(s);
  if (!st) throw UsageError("unknown statistics " + s);
  return *st;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot open " + c.out + " for writing");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// GMP cannot unwind from a failed allocation; report and exit instead.
[[noreturn]] void gmp_out_of_memory() {
  const char msg[] = "error: out of memory\n";
  ssize_t ignored = write(STDERR_FILENO, msg, std::strlen(msg));
  (void)ignored;
  _exit(kInternal);
}

void* gmp_alloc(std::size_t size) {
  void* p = std::malloc(size);
  if (p == nullptr) gmp_out_of_memory();
  return p;
}

void* gmp_realloc(void* old, std::size_t, std::size_t size) {
  void* p = std::realloc(old, size);
  if (p == nullptr) gmp_out_of_memory();
  return p;
}

void gmp_free(void* p, std::size_t) { std::free(p); }

// Caps the address space from DIAGRED_MAX_MEMORY_MB, if set.
void apply_memory_cap() {
  const char* env = std::getenv("DIAGRED_MAX_MEMORY_MB");
  if (env == nullptr || *env == '\0') return;
  const std::string s(env);
  unsigned long long mb = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), mb);
  if (ec != std::errc{} || end != s.data() + s.size() || mb == 0) {
    throw UsageError("DIAGRED_MAX_MEMORY_MB must be a positive integer");
  }
  rlimit lim{};
  lim.rlim_cur = lim.rlim_max = static_cast<rlim_t>(mb) * 1024 * 1024;
  if (setrlimit(RLIMIT_AS, &lim) != 0) throw std::runtime_error("setrlimit failed");
  mp_set_memory_functions(gmp_alloc, gmp_realloc, gmp_free);
}

int run_verify(const std::string& module, const std::string& suite, const std::string& cross,
               const std::string& fermion, const Common& c) {
  cli::SuiteOptions o;
  o.n = c.n;
  o.copies = c.copies;
  o.stats = statistics(c.stats);
  o.power = c.power;
  o.cross = cross == "every-copy" ? CrossConstant::every_copy : CrossConstant::kronecker;
  o.fermion = fermion == "minus-delta" ? FermionConstant::minus_delta : FermionConstant::anticommuting;
  std::vector<cli::SuiteRun> runs;
  try {
    runs = cli::run_suites(module, suite, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& r : runs) ok = ok && r.report.passed();
  if (c.format == "text") {
    emit(c, cli::reports_text(runs, c.timing) + "status: " + (ok ? "pass" : "fail") + "\n");
  } else {
    Json j;
    j["command"] = "verify";
    j["module"] = module;
    j["status"] = ok ? "pass" : "fail";
    Json reports = Json::array();
    for (const auto& r : runs) reports.push_back(cli::report_json(r, c.timing));
    j["reports"] = std::move(reports);
    emit(c, dump(j));
  }
  return ok ? kPass : kFail;
}

GeneratorOrder order_from(const std::string& s) {
  if (s == "triangular") return GeneratorOrder::triangular;
  if (s == "off-diagonal-first") return GeneratorOrder::off_diagonal_first;
  return GeneratorOrder::lexicographic;
}

int run_relations(const Common& c, const std::string& generators, const std::string& order) {
  const DraAlgebra a(DraConfig{c.n, c.copies, order_from(order), generators == "s" ? DraBasis::s : DraBasis::L});
  const auto rules = a.rule_list(true);
  if (c.format == "text") {
    emit(c, cli::relations_text(a.alphabet(), rules));
  } else {
    Json j;
    j["n"] = c.n;
    j["copies"] = c.copies;
    j["generators"] = generators;
    j["order"] = order;
    j["independent"] = a.independent_relations();
    j["relations"] = cli::relations_json(a.alphabet(), rules);
    emit(c, dump(j));
  }
  return kPass;
}

int run_central(const Common& c, bool check, bool prime) {
  const DraAlgebra a(DraConfig{c.n, 1});
  NormalFormEngine engine = a.engine();
  const Element z = central_element(a, engine, prime ? a.l_prime_matrix() : a.l_matrix(), c.power);
  Report report;
  if (check) report = check_central(a, c.power);
  if (c.format == "text") {
    std::string text = a.format(z) + "\n";
    if (check) {
      text += std::string("central: ") + (report.passed() ? "pass" : "fail") + " (" + std::to_string(report.checks) +
              " checks)\n";
      for (const Failure& f : report.failures) text += "  FAIL " + f.identity + ": " + f.lhs + "\n";
    }
    emit(c, text);
  } else {
    Json j;
    j["n"] = c.n;
    j["power"] = c.power;
    j["matrix"] = prime ? "L'" : "L";
    j["element"] = a.format(z);
    j["terms"] = cli::terms_json(a.alphabet(), z);
    if (check) {
      cli::SuiteRun run;
      run.module = "dra";
      run.report = report;
      run.report.suite = "central";
      run.n = c.n;
      j["check"] = cli::report_json(run, false);
    }
    emit(c, dump(j));
  }
  return check && !report.passed() ? kFail : kPass;
}

int run_normal_form(const Common& c, const std::string& algebra, const std::string& expr) {
  std::string formatted;
  Json terms;
  if (algebra == "dra") {
    const DraAlgebra a(DraConfig{c.n, c.copies});
    NormalFormEngine e = a.engine();
    const Element nf = e.normal_form(a.parse(expr));
    formatted = a.format(nf);
    terms = cli::terms_json(a.alphabet(), nf);
  } else {
    const WeylAlgebra w(WeylConfig{c.n, c.copies, statistics(c.stats)});
    NormalFormEngine e = w.engine();
    const Element nf = e.normal_form(w.parse(expr));
    formatted = w.format(nf);
    terms = cli::terms_json(w.alphabet(), nf);
  }
  if (c.format == "text") {
    emit(c, formatted + "\n");
  } else {
    Json j;
    j["algebra"] = algebra;
    j["input"] = expr;
    j["normal_form"] = formatted;
    j["terms"] = std::move(terms);
    emit(c, dump(j));
  }
  return kPass;
}

void add_rank(CLI::App* cmd, Common& c) { cmd->add_option("--n", c.n, "Rank n of gl_n")->capture_default_str(); }

void add_output(CLI::App* cmd, Common& c, const std::string& default_format) {
  cmd->add_option("--format", c.format, "Output format (default " + default_format + ")")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", c.out, "Write the output to this file instead of stdout");
  cmd->add_flag("--force", c.force, "Lift the size guardrails (n <= 6, N <= 4, power <= 6)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for h-deformed differential operators and the diagonal reduction algebra of gl_n.\n"
               "Exit codes: 0 success, 1 identity failure, 2 usage or parse error, 3 computation error.\n"
               "DIAGRED_MAX_MEMORY_MB caps the address space of the process."};
  app.name("diagred");
  app.require_subcommand(1);

  Common c;
  std::string module, suite;
  auto* verify = app.add_subcommand("verify", "Run verification suites and report failures");
  verify->add_option("module", module, "rmatrix, weyl, dra or all")
      ->required()
      ->check(CLI::IsMember({"rmatrix", "weyl", "dra", "all"}));
  verify->add_option("--suite", suite,
                     "Single suite. rmatrix: involution dybe skew-inverse aux traces; "
                     "weyl: confluence reflection zhelobenko split; "
                     "dra: reflection central coproduct transforms appendix");
  add_rank(verify, c);
  verify->add_option("--N", c.copies, "Copies N of the Weyl generators")->capture_default_str();
  verify->add_option("--stats", c.stats, "Statistics of the Weyl generators")
      ->check(CLI::IsMember({"bosonic", "fermionic"}))
      ->capture_default_str();
  std::string cross = "kronecker", fermion = "anticommuting";
  verify->add_option("--cross", cross, "Constant of the x-D exchange between different copies")
      ->check(CLI::IsMember({"kronecker", "every-copy"}))
      ->capture_default_str();
  verify->add_option("--fermion-constant", fermion, "Sign of the fermionic x-D constant")
      ->check(CLI::IsMember({"anticommuting", "minus-delta"}))
      ->capture_default_str();
  verify->add_option("--power", c.power, "Largest power checked by the central suite")->capture_default_str();
  verify->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
  verify->add_flag("--timing", c.timing, "Include wall_time in the report");
  add_output(verify, c, "json");

  std::string generators = "L", order = "off-diagonal-first";
  auto* relations = app.add_subcommand("relations", "List the ordering relations of the reduction algebra");
  add_rank(relations, c);
  relations->add_option("--copies", c.copies, "Braided copies")->capture_default_str();
  relations->add_option("--generators", generators, "Generators the relations are written in")
      ->check(CLI::IsMember({"L", "s"}))
      ->capture_default_str();
  relations->add_option("--order", order, "Generator order; off-diagonal-first gives the tabulated form of the n = 2 relations")
      ->check(CLI::IsMember({"off-diagonal-first", "triangular", "lexicographic"}))
      ->capture_default_str();
  add_output(relations, c, "text");

  bool check = false, prime = false;
  int central_power = 1;
  auto* central = app.add_subcommand("central", "Central element tr(L^power Q-) in normal form");
  add_rank(central, c);
  central->add_option("--power", central_power, "Power of L")->capture_default_str();
  central->add_flag("--check", check, "Also verify that it commutes with every generator");
  central->add_flag("--prime", prime, "Use L' = H - L instead of L");
  central->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
  add_output(central, c, "text");

  std::string algebra = "weyl", expr;
  auto* normal = app.add_subcommand("normal-form", "Normal form of an expression");
  normal->add_option("--algebra", algebra, "weyl (x[i,a], D[j,a]) or dra (L[i,j], L2[i,j], ...)")
      ->check(CLI::IsMember({"weyl", "dra"}))
      ->capture_default_str();
  add_rank(normal, c);
  normal->add_option("--N", c.copies, "Copies N of the Weyl generators")->capture_default_str();
  normal->add_option("--copies", c.copies, "Braided copies of the reduction algebra");
  normal->add_option("--stats", c.stats, "Statistics of the Weyl generators")
      ->check(CLI::IsMember({"bosonic", "fermionic"}))
      ->capture_default_str();
  normal->add_option("--expr", expr, "Expression, e.g. \"D[1,1]*x[1,1]\"")->required();
  add_output(normal, c, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    apply_memory_cap();
    if (central->parsed()) c.power = central_power;
    if (c.format.empty()) c.format = verify->parsed() ? "json" : "text";
    check_ranges(c);
    set_worker_count(c.jobs);
    if (verify->parsed()) return run_verify(module, suite, cross, fermion, c);
    if (relations->parsed()) return run_relations(c, generators, order);
    if (central->parsed()) return run_central(c, check, prime);
    return run_normal_form(c, algebra, expr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
