#pragma once

#include "namelens/miner.hpp"

#include <map>
#include <string>
#include <vector>

namespace namelens {

struct GappedRefactoring {
    RefactoringEvent event;
    std::size_t gap = 0;
};

/// Refactorings on the same element as a rename, within `window` commits.
/// Same-commit refactorings appear under `preceding` with gap 0.
struct CooccurrenceRecord {
    RenameEvent rename;
    std::vector<GappedRefactoring> preceding;
    std::vector<GappedRefactoring> following;
    std::size_t window = 0;

    bool any() const { return !preceding.empty() || !following.empty(); }
};

constexpr std::size_t kDefaultWindow = 5;

/// One record per rename, in input order; lists sorted by ascending gap,
/// then refactoring type and commit id. Throws Error if window < 1.
std::vector<CooccurrenceRecord> correlate(const std::vector<RenameEvent>& renames,
                                          const std::vector<RefactoringEvent>& refs, std::size_t window);

struct TypeCounts {
    std::size_t preceding = 0;
    std::size_t following = 0;
};

struct CooccurrenceSummary {
    std::size_t renames = 0;
    std::size_t renames_with_cooccurrence = 0;
    double cooccurrence_fraction = 0.0;
    std::map<std::string, TypeCounts> by_type; // sorted by type name
    std::map<std::size_t, std::size_t> preceding_gaps;
    std::map<std::size_t, std::size_t> following_gaps;
};

CooccurrenceSummary summarize(const std::vector<CooccurrenceRecord>& records);

/// Aligned-column text rendering of a summary.
std::string format_table(const CooccurrenceSummary& summary);

} // namespace namelens
