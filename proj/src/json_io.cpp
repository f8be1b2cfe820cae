#include "namelens/json_io.hpp"

namespace namelens {

using nlohmann::json;

json to_json(const SemanticChange& change)
{
    json subkinds = json::array();
    for (SubKind k : change.subkinds)
        subkinds.push_back(std::string(to_string(k)));
    return json{
        {"dominant", std::string(to_string(change.dominant))},
        {"subkinds", std::move(subkinds)},
        {"evidence", change.evidence},
    };
}

json to_json(const RenameEvent& e)
{
    return json{
        {"element_id", e.element_id},
        {"element_kind", std::string(to_string(e.element_kind))},
        {"old_name", e.old_name},
        {"new_name", e.new_name},
        {"commit_id", e.commit_id},
        {"commit_index", e.commit_index},
        {"message", e.message},
    };
}

json to_json(const RefactoringEvent& e)
{
    return json{
        {"element_id", e.element_id},
        {"refactoring_type", e.refactoring_type},
        {"commit_id", e.commit_id},
        {"commit_index", e.commit_index},
    };
}

json to_json(const CooccurrenceRecord& r)
{
    auto list = [](const std::vector<GappedRefactoring>& items) {
        json out = json::array();
        for (const auto& g : items)
            out.push_back(json{{"gap", g.gap}, {"refactoring", to_json(g.event)}});
        return out;
    };
    return json{
        {"rename", to_json(r.rename)},
        {"preceding", list(r.preceding)},
        {"following", list(r.following)},
        {"window", r.window},
    };
}

json to_json(const CooccurrenceSummary& s)
{
    json by_type = json::object();
    for (const auto& [type, c] : s.by_type)
        by_type[type] = json{{"preceding", c.preceding}, {"following", c.following}};
    auto histogram = [](const std::map<std::size_t, std::size_t>& h) {
        json out = json::object();
        for (const auto& [gap, count] : h)
            out[std::to_string(gap)] = count;
        return out;
    };
    return json{
        {"renames", s.renames},
        {"renames_with_cooccurrence", s.renames_with_cooccurrence},
        {"cooccurrence_fraction", s.cooccurrence_fraction},
        {"by_type", std::move(by_type)},
        {"preceding_gaps", histogram(s.preceding_gaps)},
        {"following_gaps", histogram(s.following_gaps)},
    };
}

json to_json(const std::map<Category, CategoryTopics>& report)
{
    json out = json::object();
    for (const auto& [category, ct] : report) {
        const std::string key(to_string(category));
        if (ct.insufficient) {
            out[key] = "insufficient data";
            continue;
        }
        json topics = json::array();
        for (std::size_t k = 0; k < ct.topics.size(); ++k) {
            json terms = json::array();
            for (const auto& t : ct.topics[k])
                terms.push_back(json{{"term", t.term}, {"weight", t.weight}});
            topics.push_back(json{{"topic", k}, {"terms", std::move(terms)}});
        }
        out[key] = std::move(topics);
    }
    return out;
}

json to_json(const Appraisal& a)
{
    json flags = json::array();
    for (Flag f : a.flags)
        flags.push_back(std::string(to_string(f)));
    json suggestions = json::array();
    for (const auto& s : a.suggestions)
        suggestions.push_back(json{{"candidate", s.candidate}, {"reason", s.reason}});
    return json{
        {"name", a.name},
        {"flags", std::move(flags)},
        {"score", a.score},
        {"suggestions", std::move(suggestions)},
    };
}

json to_json(const std::optional<ExpansionMatch>& m)
{
    if (!m)
        return json{{"expansion", nullptr}, {"technique", nullptr}, {"pattern", nullptr}};
    return json{
        {"expansion", m->expansion},
        {"technique", std::string(to_string(m->technique))},
        {"pattern", std::string(to_string(m->pattern))},
    };
}

} // namespace namelens
