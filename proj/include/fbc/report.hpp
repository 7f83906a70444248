#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fbc/classify.hpp"
#include "fbc/flat.hpp"
#include "fbc/survey.hpp"
#include "fbc/word.hpp"

namespace fbc {

/// Insertion-ordered JSON keeps the emitted schema byte-stable across runs.
using Json = nlohmann::ordered_json;

/// Stable citation labels for a verdict (plus literature pointers where the
/// verdict rests on prior results rather than on a computed certificate).
std::vector<std::string> citation_notes(const AutomorphismSpec& spec, const Classification& c);

Json profile_json(const LevelProfile& p);
Json classification_json(const Classification& c);
Json certificate_json(const ThetaCertificate& cert);
Json survey_json(const SurveyReport& report);

/// Envelope shared by every --json output.
Json envelope(Json input_echo, Json result, const std::vector<std::string>& notes);

std::string classification_text(const AutomorphismSpec& spec, const Classification& c);

/// ASCII level diagram: level rows (top first) interleaved with the b-steps
/// that move between them, columns in word order.
std::string level_diagram(const Word& w, const LevelProfile& p);

std::string survey_table(const SurveyReport& report);

}  // namespace fbc
