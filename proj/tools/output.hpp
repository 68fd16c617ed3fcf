// JSON and plain-text rendering of reports, relations and elements.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "diagred/algebra.hpp"
#include "suites.hpp"

namespace diagred::cli {

using Json = nlohmann::ordered_json;

/// {identity, indices, lhs, rhs} per failure plus the run configuration;
/// wall_time only when `timing` is set.
Json report_json(const SuiteRun& run, bool timing);

/// [{word, coeff}] in the canonical (lexicographic) term order.
Json terms_json(const Alphabet& alphabet, const Element& e);

/// {lhs_word, rhs_terms} per rule.
Json relations_json(const Alphabet& alphabet, const std::vector<std::pair<Word, Element>>& rules);

/// "lhs = rhs" per line.
std::string relations_text(const Alphabet& alphabet, const std::vector<std::pair<Word, Element>>& rules);

/// One line per suite, then one line per failure and note.
std::string reports_text(const std::vector<SuiteRun>& runs, bool timing);

}  // namespace diagred::cli
