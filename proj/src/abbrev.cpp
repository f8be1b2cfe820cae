#include "namelens/abbrev.hpp"

#include "namelens/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace namelens {

namespace {

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool ident_start(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

bool shorter_then_lexicographic(const std::string& a, const std::string& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

std::string join(const std::vector<std::string>& parts, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::optional<ExpansionMatch> pick(std::vector<ExpansionMatch> candidates)
{
    if (candidates.empty())
        return std::nullopt;
    return *std::min_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return shorter_then_lexicographic(a.expansion, b.expansion);
    });
}

} // namespace

std::string_view to_string(ExpansionTechnique t)
{
    switch (t) {
    case ExpansionTechnique::Gold:
        return "gold";
    case ExpansionTechnique::Context:
        return "context";
    case ExpansionTechnique::Dictionary:
        return "dictionary";
    }
    return "unknown";
}

std::string_view to_string(ExpansionPattern p)
{
    switch (p) {
    case ExpansionPattern::Lookup:
        return "lookup";
    case ExpansionPattern::Prefix:
        return "prefix";
    case ExpansionPattern::Skeleton:
        return "skeleton";
    case ExpansionPattern::Acronym:
        return "acronym";
    }
    return "unknown";
}

std::vector<GoldPair> parse_gold(std::string_view text)
{
    std::vector<GoldPair> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '\t'))
            fields.push_back(f);
        if (fields.size() == 2)
            fields.emplace_back();
        if (fields.size() != 3)
            throw ParseError(line_no, "expected abbreviation<TAB>expansion<TAB>source");
        GoldPair p{fold_case(fields[0]), fold_case(fields[1]), fields[2]};
        if (p.abbreviation.empty() || p.expansion.empty())
            throw ParseError(line_no, "empty gold field");
        if (p.abbreviation.size() >= p.expansion.size())
            throw ParseError(line_no, "abbreviation '" + p.abbreviation + "' is not shorter than its expansion");
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<GoldPair> load_gold(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open gold file: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_gold(ss.str());
}

ContextBag::ContextBag(std::initializer_list<std::string> words)
{
    for (const auto& w : words)
        add_identifier(w);
}

void ContextBag::add_word(std::string_view word)
{
    if (word.empty())
        return;
    ++m_words[fold_case(word)];
}

void ContextBag::add_identifier(std::string_view raw)
{
    std::vector<Term> terms;
    try {
        terms = split(raw);
    } catch (const Error&) {
        return;
    }
    for (const auto& t : terms)
        add_word(t.text);
    if (terms.size() >= 2)
        m_phrases.push_back(term_texts(terms));
}

ContextBag ContextBag::from_text(std::string_view text)
{
    ContextBag bag;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!ident_start(text[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && ident_char(text[i]))
            ++i;
        bag.add_identifier(text.substr(start, i - start));
    }
    return bag;
}

bool is_abbreviation(std::string_view term, const Lexicon& lex)
{
    if (term.empty() || is_all_digits(term))
        return false;
    if (term.size() == 1)
        return true;
    return !lex.contains(term);
}

std::string consonant_skeleton(std::string_view word)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        char c = word[i];
        if (i > 0 && is_vowel(c))
            continue;
        if (!out.empty() && out.back() == c)
            continue;
        out += c;
    }
    return out;
}

std::string initials(const std::vector<std::string>& terms)
{
    std::string out;
    for (const auto& t : terms)
        if (!t.empty())
            out += t.front();
    return out;
}

std::optional<ExpansionMatch> expand_detailed(std::string_view raw_term, const ContextBag& context,
                                              std::span<const GoldPair> gold, const Lexicon& lex)
{
    const std::string term = fold_case(raw_term);
    if (term.empty())
        return std::nullopt;

    // 1. gold table, then lexicon expansion records
    {
        std::vector<ExpansionMatch> candidates;
        for (const auto& p : gold)
            if (p.abbreviation == term && p.expansion != term)
                candidates.push_back({p.expansion, ExpansionTechnique::Gold, ExpansionPattern::Lookup});
        if (candidates.empty())
            for (const auto& e : lex.expansions(term))
                candidates.push_back({e, ExpansionTechnique::Gold, ExpansionPattern::Lookup});
        if (auto best = pick(std::move(candidates)))
            return best;
    }

    // 2. context
    {
        std::vector<ExpansionMatch> candidates;
        for (const auto& [word, count] : context.words()) {
            if (word == term)
                continue;
            if (word.size() > term.size() && word.starts_with(term))
                candidates.push_back({word, ExpansionTechnique::Context, ExpansionPattern::Prefix});
            else if (consonant_skeleton(word) == term)
                candidates.push_back({word, ExpansionTechnique::Context, ExpansionPattern::Skeleton});
        }
        if (term.size() >= 2) {
            for (const auto& phrase : context.phrases())
                if (phrase.size() == term.size() && initials(phrase) == term)
                    candidates.push_back({join(phrase, ' '), ExpansionTechnique::Context, ExpansionPattern::Acronym});
        }
        if (auto best = pick(std::move(candidates)))
            return best;
    }

    // 3. dictionary prefixes
    if (term.size() >= 3) {
        std::vector<ExpansionMatch> candidates;
        auto it = lex.dictionary().lower_bound(term);
        for (; it != lex.dictionary().end() && it->starts_with(term); ++it)
            if (it->size() > term.size())
                candidates.push_back({*it, ExpansionTechnique::Dictionary, ExpansionPattern::Prefix});
        if (auto best = pick(std::move(candidates)))
            return best;
    }
    return std::nullopt;
}

std::optional<std::string> expand(std::string_view term, const ContextBag& context,
                                  std::span<const GoldPair> gold, const Lexicon& lex)
{
    if (auto m = expand_detailed(term, context, gold, lex))
        return m->expansion;
    return std::nullopt;
}

Identifier expand_identifier(Identifier id, const ContextBag& context, std::span<const GoldPair> gold,
                             const Lexicon& lex)
{
    for (auto& t : id.terms) {
        t.is_abbreviation = is_abbreviation(t.text, lex);
        t.expansion.reset();
        if (t.is_abbreviation)
            t.expansion = expand(t.text, context, gold, lex);
    }
    return id;
}

} // namespace namelens
