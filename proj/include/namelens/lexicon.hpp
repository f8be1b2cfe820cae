#pragma once

#include "namelens/ident_lexer.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace namelens {

enum class Relation { Synonym, Antonym, Hypernym, Hyponym, PluralOf, ExpansionOf, None };

enum class RelationKind { Synonym, Antonym, Hypernym, Hyponym, Inflection, Identical };

std::string_view to_string(RelationKind kind);

using RelationSet = std::set<RelationKind>;

struct LexiconRecord {
    Pos pos = Pos::Unknown;
    Relation relation = Relation::None;
    std::string target;
};

/// Immutable lexical database. Built from a TSV file of
/// `word<TAB>pos<TAB>relation<TAB>target` records; symmetric and inverse
/// closures of the relations are computed once at load.
class Lexicon {
public:
    Lexicon() = default;

    static Lexicon load(const std::filesystem::path& path);
    static Lexicon parse(std::istream& in);
    static Lexicon parse(std::string_view text);

    /// Primary POS (first record in file order). All-digit words are
    /// Pos::Digit. A regular plural of a known word inherits its POS.
    Pos pos_of(std::string_view word) const;

    /// Known word, or a regular plural of a known word.
    bool contains(std::string_view word) const;

    /// Words listed in the file (first column plus relation targets other
    /// than expansion_of), sorted.
    const std::set<std::string>& dictionary() const { return m_dictionary; }

    const std::set<std::string>& synonyms(std::string_view word) const;
    const std::set<std::string>& antonyms(std::string_view word) const;
    /// Words that are more general than `word` (direct edges only).
    const std::set<std::string>& hypernyms(std::string_view word) const;
    const std::set<std::string>& hyponyms(std::string_view word) const;
    /// Full forms recorded with expansion_of for an abbreviation.
    const std::set<std::string>& expansions(std::string_view abbreviation) const;

    /// Relations from a's perspective: Hypernym means b is a hypernym of a.
    RelationSet related(std::string_view a, std::string_view b) const;

    /// Regular singular/plural pair in either direction, or an irregular
    /// plural_of record.
    bool is_inflection(std::string_view a, std::string_view b) const;

    /// (word, hypernym) pairs, each listed once.
    std::vector<std::pair<std::string, std::string>> hypernym_edges() const;
    /// Unordered synonym pairs with first < second.
    std::vector<std::pair<std::string, std::string>> synonym_edges() const;

private:
    using RelationMap = std::map<std::string, std::set<std::string>, std::less<>>;

    static const std::set<std::string>& lookup(const RelationMap& map, std::string_view word);

    std::map<std::string, Pos, std::less<>> m_pos;
    std::set<std::string> m_dictionary;
    RelationMap m_synonyms;
    RelationMap m_antonyms;
    RelationMap m_hypernyms;
    RelationMap m_hyponyms;
    RelationMap m_plurals; // symmetric: singular <-> irregular plural
    RelationMap m_expansions;
};

/// The regular plural: +s, +es after s/x/z/ch/sh, y -> ies after a consonant.
std::string regular_plural(std::string_view singular);

/// True iff `plural` is the regular plural of `singular`.
bool is_regular_plural(std::string_view singular, std::string_view plural);

/// Porter stemmer, following the step definitions of the original 1980
/// algorithm. Input is expected lowercase; words of length <= 2 are returned
/// unchanged.
std::string stem(std::string_view word);

} // namespace namelens
