#pragma once

#include "namelens/abbrev.hpp"
#include "namelens/appraiser.hpp"
#include "namelens/classifier.hpp"
#include "namelens/cooccur.hpp"
#include "namelens/miner.hpp"
#include "namelens/topics.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>

// JSON renderings of the library's result types. nlohmann::json objects keep
// keys sorted, so serialized output is byte-stable.

namespace namelens {

nlohmann::json to_json(const SemanticChange& change);
nlohmann::json to_json(const RenameEvent& event);
nlohmann::json to_json(const RefactoringEvent& event);
nlohmann::json to_json(const CooccurrenceRecord& record);
nlohmann::json to_json(const CooccurrenceSummary& summary);
nlohmann::json to_json(const std::map<Category, CategoryTopics>& report);
nlohmann::json to_json(const Appraisal& appraisal);
nlohmann::json to_json(const std::optional<ExpansionMatch>& match);

} // namespace namelens
