#include "output.hpp"

#include <sstream>

namespace diagred::cli {

Json report_json(const SuiteRun& run, bool timing) {
  Json j;
  j["module"] = run.module;
  j["suite"] = run.report.suite;
  j["config"] = {{"n", run.n}, {"N", run.copies}, {"statistics", to_string(run.stats)}};
  j["status"] = run.report.passed() ? "pass" : "fail";
  j["checks"] = run.report.checks;
  Json failures = Json::array();
  for (const Failure& f : run.report.failures) {
    failures.push_back({{"identity", f.identity}, {"indices", f.indices}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["failures"] = std::move(failures);
  j["notes"] = run.report.notes;
  if (timing) j["wall_time"] = run.seconds;
  return j;
}

Json terms_json(const Alphabet& alphabet, const Element& e) {
  Json out = Json::array();
  for (const auto& [w, c] : e.terms()) out.push_back({{"word", alphabet.format(w)}, {"coeff", c.to_string()}});
  return out;
}

Json relations_json(const Alphabet& alphabet, const std::vector<std::pair<Word, Element>>& rules) {
  Json out = Json::array();
  for (const auto& [w, rhs] : rules) {
    out.push_back({{"lhs_word", alphabet.format(w)}, {"rhs_terms", terms_json(alphabet, rhs)}});
  }
  return out;
}

std::string relations_text(const Alphabet& alphabet, const std::vector<std::pair<Word, Element>>& rules) {
  std::string out;
  for (const auto& [w, rhs] : rules) out += alphabet.format(w) + " = " + alphabet.format(rhs) + "\n";
  return out;
}

std::string reports_text(const std::vector<SuiteRun>& runs, bool timing) {
  std::ostringstream out;
  for (const SuiteRun& run : runs) {
    out << run.module << "/" << run.report.suite << " n=" << run.n << " N=" << run.copies << " "
        << to_string(run.stats) << ": " << (run.report.passed() ? "pass" : "fail") << " (" << run.report.checks
        << " checks";
    if (timing) out << ", " << run.seconds << " s";
    out << ")\n";
    for (const Failure& f : run.report.failures) {
      out << "  FAIL " << f.identity;
      if (!f.indices.empty()) {
        out << " [";
        for (std::size_t k = 0; k < f.indices.size(); ++k) out << (k ? "," : "") << f.indices[k];
        out << "]";
      }
      out << ": " << f.lhs << " != " << f.rhs << "\n";
    }
    for (const std::string& note : run.report.notes) out << "  note: " << note << "\n";
  }
  return out.str();
}

}  // namespace diagred::cli
