#pragma once

#include "namelens/abbrev.hpp"
#include "namelens/ident_lexer.hpp"
#include "namelens/lexicon.hpp"

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace namelens {

/// Index-based alignment of an old and a new term sequence. Every old index
/// appears in exactly one of matched / replacements / removals, every new
/// index in exactly one of matched / replacements / additions.
struct Alignment {
    struct Replacement {
        std::size_t old_index;
        std::size_t new_index;
        RelationSet relations;
    };

    std::vector<std::pair<std::size_t, std::size_t>> matched;
    std::vector<Replacement> replacements;
    std::vector<std::size_t> additions; // new indices
    std::vector<std::size_t> removals;  // old indices
    bool reorder_only = false;
    bool format_only = false;
};

/// Longest common subsequence of term texts; leftovers inside each gap
/// between matches are paired left to right into replacements, surplus new
/// terms become additions and surplus old terms removals.
Alignment align(std::span<const Term> old_terms, std::span<const Term> new_terms, const Lexicon& lex);

enum class Category { Preserve, Narrow, Broaden, AddMeaning, RemoveMeaning, Opposite, Unclassified };

enum class SubKind {
    FormatOnly,
    Reorder,
    SynonymReplace,
    InflectionReplace,
    HyponymReplace,
    ModifierAdd,
    HypernymReplace,
    HeadRemove,
    TermAdd,
    TermRemove,
    AntonymReplace,
    UnrelatedReplace,
};

std::string_view to_string(Category c);
std::string_view to_string(SubKind k);
std::optional<Category> category_from_string(std::string_view s);

struct SemanticChange {
    Category dominant = Category::Unclassified;
    std::set<SubKind> subkinds;
    std::vector<std::string> evidence;

    bool has(SubKind k) const { return subkinds.count(k) > 0; }
    friend bool operator==(const SemanticChange&, const SemanticChange&) = default;
};

/// Highest-precedence category implied by a set of subkinds:
/// Opposite > Broaden > Narrow > AddMeaning > RemoveMeaning > Unclassified > Preserve.
Category dominant_category(const std::set<SubKind>& subkinds);

struct ClassifyOptions {
    bool expand_first = false;
    const ContextBag* context = nullptr;
    std::span<const GoldPair> gold;
};

/// Classifies a rename: split, optionally expand abbreviations, align, and
/// apply the taxonomy rules.
SemanticChange classify(std::string_view old_raw, std::string_view new_raw, const Lexicon& lex,
                        const ClassifyOptions& options = {});

} // namespace namelens
