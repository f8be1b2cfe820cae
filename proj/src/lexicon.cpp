#include "namelens/lexicon.hpp"

#include "namelens/error.hpp"

#include <fstream>
#include <sstream>

namespace namelens {

namespace {

const std::set<std::string> kEmpty;

std::optional<Relation> relation_from_string(std::string_view s)
{
    if (s == "synonym")
        return Relation::Synonym;
    if (s == "antonym")
        return Relation::Antonym;
    if (s == "hypernym")
        return Relation::Hypernym;
    if (s == "hyponym")
        return Relation::Hyponym;
    if (s == "plural_of")
        return Relation::PluralOf;
    if (s == "expansion_of")
        return Relation::ExpansionOf;
    if (s == "none")
        return Relation::None;
    return std::nullopt;
}

std::vector<std::string_view> split_tabs(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

bool is_word(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c == ' ' || c == '\t' || c == '\r')
            return false;
    return true;
}

bool has_edge(const std::map<std::string, std::set<std::string>, std::less<>>& map,
              const std::string& a, const std::string& b)
{
    auto it = map.find(a);
    return it != map.end() && it->second.count(b) > 0;
}

bool is_consonant_letter(char c)
{
    return c >= 'a' && c <= 'z' && c != 'a' && c != 'e' && c != 'i' && c != 'o' && c != 'u';
}

} // namespace

std::string_view to_string(RelationKind kind)
{
    switch (kind) {
    case RelationKind::Synonym:
        return "synonym";
    case RelationKind::Antonym:
        return "antonym";
    case RelationKind::Hypernym:
        return "hypernym";
    case RelationKind::Hyponym:
        return "hyponym";
    case RelationKind::Inflection:
        return "inflection";
    case RelationKind::Identical:
        return "identical";
    }
    return "unknown";
}

std::string regular_plural(std::string_view singular)
{
    std::string s(singular);
    if (s.empty())
        return s;
    if (s.ends_with("s") || s.ends_with("x") || s.ends_with("z") || s.ends_with("ch")
        || s.ends_with("sh"))
        return s + "es";
    if (s.size() >= 2 && s.back() == 'y' && is_consonant_letter(s[s.size() - 2])) {
        s.pop_back();
        return s + "ies";
    }
    return s + "s";
}

bool is_regular_plural(std::string_view singular, std::string_view plural)
{
    return !singular.empty() && regular_plural(singular) == plural;
}

Lexicon Lexicon::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open lexicon file: " + path.string());
    return parse(in);
}

Lexicon Lexicon::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse(in);
}

Lexicon Lexicon::parse(std::istream& in)
{
    Lexicon lex;
    std::string line;
    std::size_t line_no = 0;

    auto conflict = [&](std::string_view what, const std::string& a, const std::string& b) {
        throw ParseError(line_no, std::string(what) + " conflict between '" + a + "' and '" + b + "'");
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;

        auto fields = split_tabs(line);
        if (fields.size() != 4)
            throw ParseError(line_no, "expected 4 tab-separated fields, got " + std::to_string(fields.size()));
        if (!is_word(fields[0]))
            throw ParseError(line_no, "malformed word");
        auto pos = pos_from_string(fields[1]);
        if (!pos || *pos == Pos::Digit || *pos == Pos::Unknown)
            throw ParseError(line_no, "unknown part of speech '" + std::string(fields[1]) + "'");
        auto relation = relation_from_string(fields[2]);
        if (!relation)
            throw ParseError(line_no, "unknown relation '" + std::string(fields[2]) + "'");

        const std::string word = fold_case(fields[0]);
        const std::string target = fold_case(fields[3]);
        if (*relation == Relation::None) {
            if (target != "-")
                throw ParseError(line_no, "relation 'none' requires target '-'");
        } else {
            if (target == "-" || !is_word(target))
                throw ParseError(line_no, "missing relation target");
            if (target == word)
                throw ParseError(line_no, "word '" + word + "' related to itself");
        }

        lex.m_pos.try_emplace(word, *pos);
        lex.m_dictionary.insert(word);

        switch (*relation) {
        case Relation::None:
            break;
        case Relation::Synonym:
            if (has_edge(lex.m_antonyms, word, target))
                conflict("synonym/antonym", word, target);
            if (has_edge(lex.m_hypernyms, word, target) || has_edge(lex.m_hyponyms, word, target))
                conflict("synonym/hypernym", word, target);
            lex.m_synonyms[word].insert(target);
            lex.m_synonyms[target].insert(word);
            lex.m_dictionary.insert(target);
            break;
        case Relation::Antonym:
            if (has_edge(lex.m_synonyms, word, target))
                conflict("synonym/antonym", word, target);
            if (has_edge(lex.m_hypernyms, word, target) || has_edge(lex.m_hyponyms, word, target))
                conflict("antonym/hypernym", word, target);
            lex.m_antonyms[word].insert(target);
            lex.m_antonyms[target].insert(word);
            lex.m_dictionary.insert(target);
            break;
        case Relation::Hypernym:
        case Relation::Hyponym: {
            // Normalize to (specific, general).
            const std::string& specific = *relation == Relation::Hypernym ? word : target;
            const std::string& general = *relation == Relation::Hypernym ? target : word;
            if (has_edge(lex.m_synonyms, specific, general))
                conflict("synonym/hypernym", specific, general);
            if (has_edge(lex.m_antonyms, specific, general))
                conflict("antonym/hypernym", specific, general);
            if (has_edge(lex.m_hypernyms, general, specific))
                conflict("hypernym/hyponym", specific, general);
            lex.m_hypernyms[specific].insert(general);
            lex.m_hyponyms[general].insert(specific);
            lex.m_dictionary.insert(target);
            break;
        }
        case Relation::PluralOf:
            lex.m_plurals[word].insert(target);
            lex.m_plurals[target].insert(word);
            lex.m_dictionary.insert(target);
            break;
        case Relation::ExpansionOf:
            // word is the full form of the abbreviation in target.
            lex.m_expansions[target].insert(word);
            break;
        }
    }
    return lex;
}

const std::set<std::string>& Lexicon::lookup(const RelationMap& map, std::string_view word)
{
    auto it = map.find(fold_case(word));
    return it == map.end() ? kEmpty : it->second;
}

const std::set<std::string>& Lexicon::synonyms(std::string_view word) const { return lookup(m_synonyms, word); }
const std::set<std::string>& Lexicon::antonyms(std::string_view word) const { return lookup(m_antonyms, word); }
const std::set<std::string>& Lexicon::hypernyms(std::string_view word) const { return lookup(m_hypernyms, word); }
const std::set<std::string>& Lexicon::hyponyms(std::string_view word) const { return lookup(m_hyponyms, word); }
const std::set<std::string>& Lexicon::expansions(std::string_view abbreviation) const
{
    return lookup(m_expansions, abbreviation);
}

namespace {

// Regular singular candidates of a possibly plural word.
std::vector<std::string> singular_candidates(const std::string& w)
{
    std::vector<std::string> out;
    if (w.size() > 3 && w.ends_with("ies"))
        out.push_back(w.substr(0, w.size() - 3) + "y");
    if (w.size() > 2 && w.ends_with("es"))
        out.push_back(w.substr(0, w.size() - 2));
    if (w.size() > 1 && w.ends_with("s"))
        out.push_back(w.substr(0, w.size() - 1));
    return out;
}

} // namespace

Pos Lexicon::pos_of(std::string_view word) const
{
    if (is_all_digits(word))
        return Pos::Digit;
    const std::string w = fold_case(word);
    if (auto it = m_pos.find(w); it != m_pos.end())
        return it->second;
    for (const auto& s : singular_candidates(w))
        if (is_regular_plural(s, w))
            if (auto it = m_pos.find(s); it != m_pos.end())
                return it->second;
    return Pos::Unknown;
}

bool Lexicon::contains(std::string_view word) const
{
    const std::string w = fold_case(word);
    if (m_dictionary.count(w))
        return true;
    for (const auto& s : singular_candidates(w))
        if (is_regular_plural(s, w) && m_dictionary.count(s))
            return true;
    return false;
}

bool Lexicon::is_inflection(std::string_view a, std::string_view b) const
{
    const std::string fa = fold_case(a);
    const std::string fb = fold_case(b);
    if (fa == fb)
        return false;
    if (is_regular_plural(fa, fb) || is_regular_plural(fb, fa))
        return true;
    return lookup(m_plurals, fa).count(fb) > 0;
}

RelationSet Lexicon::related(std::string_view a, std::string_view b) const
{
    const std::string fa = fold_case(a);
    const std::string fb = fold_case(b);
    if (fa == fb)
        return {RelationKind::Identical};

    RelationSet out;
    if (has_edge(m_synonyms, fa, fb))
        out.insert(RelationKind::Synonym);
    if (has_edge(m_antonyms, fa, fb))
        out.insert(RelationKind::Antonym);
    if (has_edge(m_hypernyms, fa, fb))
        out.insert(RelationKind::Hypernym);
    if (has_edge(m_hyponyms, fa, fb))
        out.insert(RelationKind::Hyponym);
    if (is_regular_plural(fa, fb) || is_regular_plural(fb, fa) || has_edge(m_plurals, fa, fb))
        out.insert(RelationKind::Inflection);
    return out;
}

std::vector<std::pair<std::string, std::string>> Lexicon::hypernym_edges() const
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [word, generals] : m_hypernyms)
        for (const auto& g : generals)
            out.emplace_back(word, g);
    return out;
}

std::vector<std::pair<std::string, std::string>> Lexicon::synonym_edges() const
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [word, syns] : m_synonyms)
        for (const auto& s : syns)
            if (word < s)
                out.emplace_back(word, s);
    return out;
}

} // namespace namelens
