#pragma once

#include "namelens/ident_lexer.hpp"
#include "namelens/lexicon.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace namelens {

struct GoldPair {
    std::string abbreviation;
    std::string expansion;
    std::string source;
};

/// Gold table TSV: `abbreviation<TAB>expansion<TAB>source`, '#' comments.
/// Both fields are case-folded; the abbreviation must be strictly shorter.
std::vector<GoldPair> load_gold(const std::filesystem::path& path);
std::vector<GoldPair> parse_gold(std::string_view text);

/// Words harvested from a source region. `words` is a multiset of single
/// case-folded terms; `phrases` holds every multi-term identifier seen, as
/// its term sequence, for acronym matching.
class ContextBag {
public:
    ContextBag() = default;
    ContextBag(std::initializer_list<std::string> words);

    /// Tokenizes arbitrary text (code or prose): identifier-shaped tokens are
    /// split into terms, and identifiers of two or more terms are kept as
    /// phrases.
    static ContextBag from_text(std::string_view text);

    void add_word(std::string_view word);
    void add_identifier(std::string_view raw);

    const std::map<std::string, std::size_t>& words() const { return m_words; }
    const std::vector<std::vector<std::string>>& phrases() const { return m_phrases; }
    bool contains(std::string_view word) const { return m_words.count(std::string(word)) > 0; }
    bool empty() const { return m_words.empty(); }

private:
    std::map<std::string, std::size_t> m_words;
    std::vector<std::vector<std::string>> m_phrases;
};

enum class ExpansionTechnique { Gold, Context, Dictionary };
enum class ExpansionPattern { Lookup, Prefix, Skeleton, Acronym };

std::string_view to_string(ExpansionTechnique t);
std::string_view to_string(ExpansionPattern p);

struct ExpansionMatch {
    std::string expansion; // multi-word expansions are space-separated
    ExpansionTechnique technique = ExpansionTechnique::Gold;
    ExpansionPattern pattern = ExpansionPattern::Lookup;
};

/// Not a dictionary word and not all digits. Single letters always count.
bool is_abbreviation(std::string_view term, const Lexicon& lex);

/// `word` with every vowel after the first letter dropped and runs of the
/// same letter collapsed: "message" -> "msg", "count" -> "cnt".
std::string consonant_skeleton(std::string_view word);

/// First letters of each term.
std::string initials(const std::vector<std::string>& terms);

/// Expansion cascade:
///   1. gold table exact lookup (then lexicon expansion_of records);
///   2. context words: term is a proper prefix of a word, or the word's
///      consonant skeleton, or the initials of a multi-term identifier;
///   3. dictionary words where term is a proper prefix and at least
///      3 characters long.
/// Within a technique the shortest candidate wins, then lexicographic order.
std::optional<ExpansionMatch> expand_detailed(std::string_view term, const ContextBag& context,
                                              std::span<const GoldPair> gold, const Lexicon& lex);

std::optional<std::string> expand(std::string_view term, const ContextBag& context,
                                  std::span<const GoldPair> gold, const Lexicon& lex);

/// Flags abbreviated terms and fills in expansions where the cascade finds
/// one. Term order and count are unchanged.
Identifier expand_identifier(Identifier id, const ContextBag& context, std::span<const GoldPair> gold,
                             const Lexicon& lex);

} // namespace namelens
