#include "namelens/cooccur.hpp"

#include "namelens/error.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace namelens {

std::vector<CooccurrenceRecord> correlate(const std::vector<RenameEvent>& renames,
                                          const std::vector<RefactoringEvent>& refs, std::size_t window)
{
    if (window < 1)
        throw Error("window must be >= 1");

    std::unordered_map<std::string, std::vector<const RefactoringEvent*>> by_element;
    for (const auto& r : refs)
        by_element[r.element_id].push_back(&r);

    auto order = [](const GappedRefactoring& a, const GappedRefactoring& b) {
        return std::tie(a.gap, a.event.refactoring_type, a.event.commit_id)
             < std::tie(b.gap, b.event.refactoring_type, b.event.commit_id);
    };

    std::vector<CooccurrenceRecord> out;
    out.reserve(renames.size());
    for (const auto& rename : renames) {
        CooccurrenceRecord rec;
        rec.rename = rename;
        rec.window = window;
        if (auto it = by_element.find(rename.element_id); it != by_element.end()) {
            for (const RefactoringEvent* r : it->second) {
                if (r->commit_index <= rename.commit_index) {
                    std::size_t gap = rename.commit_index - r->commit_index;
                    if (gap <= window)
                        rec.preceding.push_back({*r, gap});
                } else {
                    std::size_t gap = r->commit_index - rename.commit_index;
                    if (gap <= window)
                        rec.following.push_back({*r, gap});
                }
            }
        }
        std::stable_sort(rec.preceding.begin(), rec.preceding.end(), order);
        std::stable_sort(rec.following.begin(), rec.following.end(), order);
        out.push_back(std::move(rec));
    }
    return out;
}

CooccurrenceSummary summarize(const std::vector<CooccurrenceRecord>& records)
{
    CooccurrenceSummary s;
    s.renames = records.size();
    for (const auto& rec : records) {
        if (rec.any())
            ++s.renames_with_cooccurrence;
        for (const auto& p : rec.preceding) {
            ++s.by_type[p.event.refactoring_type].preceding;
            ++s.preceding_gaps[p.gap];
        }
        for (const auto& f : rec.following) {
            ++s.by_type[f.event.refactoring_type].following;
            ++s.following_gaps[f.gap];
        }
    }
    if (s.renames > 0)
        s.cooccurrence_fraction = static_cast<double>(s.renames_with_cooccurrence) / static_cast<double>(s.renames);
    return s;
}

std::string format_table(const CooccurrenceSummary& s)
{
    std::size_t width = std::string_view("refactoring_type").size();
    for (const auto& [type, counts] : s.by_type)
        width = std::max(width, type.size());

    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "refactoring_type" << "  " << std::right
       << std::setw(9) << "preceding" << "  " << std::setw(9) << "following" << '\n';
    for (const auto& [type, counts] : s.by_type)
        os << std::left << std::setw(static_cast<int>(width)) << type << "  " << std::right << std::setw(9)
           << counts.preceding << "  " << std::setw(9) << counts.following << '\n';
    os << '\n';
    os << "gap  preceding  following\n";
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> gaps;
    for (const auto& [g, c] : s.preceding_gaps)
        gaps[g].first = c;
    for (const auto& [g, c] : s.following_gaps)
        gaps[g].second = c;
    for (const auto& [g, c] : gaps)
        os << std::setw(3) << g << "  " << std::setw(9) << c.first << "  " << std::setw(9) << c.second << '\n';
    os << '\n';
    os << "renames: " << s.renames << '\n';
    os << "renames with co-occurrence: " << s.renames_with_cooccurrence << '\n';
    os << "co-occurrence fraction: " << std::fixed << std::setprecision(4) << s.cooccurrence_fraction << '\n';
    return os.str();
}

} // namespace namelens
