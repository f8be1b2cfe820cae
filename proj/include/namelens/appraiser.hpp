#pragma once

#include "namelens/abbrev.hpp"
#include "namelens/classifier.hpp"
#include "namelens/lexicon.hpp"

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace namelens {

enum class Flag {
    AbbreviationPresent,
    SingleLetter,
    TooShort,
    TooLong,
    NonDictionaryTerm,
    GenericHead,
    MixedConvention,
    DigitOnlyTerm,
};

std::string_view to_string(Flag f);

struct AppraiserConfig {
    int penalty = 15;
    std::size_t max_terms = 5;
    std::size_t min_chars = 4;
    std::set<std::string> generic_heads{"data", "info", "object", "item", "value", "temp", "result", "contact"};

    /// `key = value` lines; '#' comments; unknown keys are an error.
    static AppraiserConfig load(const std::filesystem::path& path);
    static AppraiserConfig parse(std::string_view text);
};

struct Suggestion {
    std::string candidate;
    std::string reason;
};

struct Appraisal {
    std::string name;
    std::set<Flag> flags;
    int score = 100;
    std::vector<Suggestion> suggestions;

    bool has(Flag f) const { return flags.count(f) > 0; }
};

/// Rule-based appraisal of one identifier name. The suggestion, when there
/// is one, rewrites every abbreviation whose expansion consists of
/// dictionary words, keeping the name's case convention.
Appraisal appraise(std::string_view name, const ContextBag& context, const Lexicon& lex,
                   std::span<const GoldPair> gold, const AppraiserConfig& config = {});

struct RenameAppraisal {
    SemanticChange change;
    int delta = 0; // appraise(new).score - appraise(old).score
};

RenameAppraisal appraise_rename(std::string_view old_name, std::string_view new_name, const Lexicon& lex,
                                const ContextBag& context, std::span<const GoldPair> gold,
                                const AppraiserConfig& config = {});

} // namespace namelens
