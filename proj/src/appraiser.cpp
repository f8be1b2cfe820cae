#include "namelens/appraiser.hpp"

#include "namelens/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace namelens {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

bool has_camel_boundary(std::string_view s)
{
    for (std::size_t i = 1; i < s.size(); ++i)
        if (is_lower(s[i - 1]) && is_upper(s[i]))
            return true;
    return false;
}

std::string trim(std::string_view s)
{
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words_of(std::string_view expansion)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(expansion)};
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

std::string upper(std::string s)
{
    for (char& c : s)
        if (is_lower(c))
            c = static_cast<char>(c - 'a' + 'A');
    return s;
}

std::string capitalized(std::string s)
{
    if (!s.empty() && is_lower(s[0]))
        s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

// Renders an expansion in the case style of the surface it replaces.
std::string render(const std::vector<std::string>& words, const Term& replaced, bool snake_case)
{
    const std::string& surface = replaced.surface;
    const bool all_upper = surface.size() > 1
                        && std::none_of(surface.begin(), surface.end(), [](char c) { return is_lower(c); });
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (all_upper) {
            if (i)
                out += '_';
            out += upper(words[i]);
        } else if (snake_case) {
            if (i)
                out += '_';
            out += words[i];
        } else if (i == 0) {
            out += is_upper(surface[0]) ? capitalized(words[i]) : words[i];
        } else {
            out += capitalized(words[i]);
        }
    }
    return out;
}

} // namespace

std::string_view to_string(Flag f)
{
    switch (f) {
    case Flag::AbbreviationPresent:
        return "AbbreviationPresent";
    case Flag::SingleLetter:
        return "SingleLetter";
    case Flag::TooShort:
        return "TooShort";
    case Flag::TooLong:
        return "TooLong";
    case Flag::NonDictionaryTerm:
        return "NonDictionaryTerm";
    case Flag::GenericHead:
        return "GenericHead";
    case Flag::MixedConvention:
        return "MixedConvention";
    case Flag::DigitOnlyTerm:
        return "DigitOnlyTerm";
    }
    return "unknown";
}

AppraiserConfig AppraiserConfig::parse(std::string_view text)
{
    AppraiserConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        if (trim(line).empty())
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_no, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        auto number = [&](long min) {
            try {
                std::size_t used = 0;
                long v = std::stol(value, &used);
                if (used != value.size() || v < min)
                    throw std::invalid_argument(value);
                return v;
            } catch (const std::exception&) {
                throw ParseError(line_no, "invalid value for '" + key + "': " + value);
            }
        };

        if (key == "penalty") {
            cfg.penalty = static_cast<int>(number(1));
        } else if (key == "max_terms") {
            cfg.max_terms = static_cast<std::size_t>(number(1));
        } else if (key == "min_chars") {
            cfg.min_chars = static_cast<std::size_t>(number(0));
        } else if (key == "generic_heads") {
            cfg.generic_heads.clear();
            std::stringstream ss(value);
            std::string head;
            while (std::getline(ss, head, ','))
                if (auto h = trim(head); !h.empty())
                    cfg.generic_heads.insert(fold_case(h));
        } else {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }
    }
    return cfg;
}

AppraiserConfig AppraiserConfig::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open appraiser config: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

Appraisal appraise(std::string_view name, const ContextBag& context, const Lexicon& lex,
                   std::span<const GoldPair> gold, const AppraiserConfig& config)
{
    Appraisal a;
    a.name = std::string(name);
    const std::vector<Term> terms = split(name);

    std::size_t chars = 0;
    for (const auto& t : terms)
        chars += t.text.size();

    if (terms.size() == 1 && terms[0].text.size() == 1 && !is_all_digits(terms[0].text))
        a.flags.insert(Flag::SingleLetter);
    if (terms.size() < 2 && chars < config.min_chars)
        a.flags.insert(Flag::TooShort);
    if (terms.size() > config.max_terms)
        a.flags.insert(Flag::TooLong);
    if (config.generic_heads.count(terms.back().text))
        a.flags.insert(Flag::GenericHead);
    if (name.find('_') != std::string_view::npos && has_camel_boundary(name))
        a.flags.insert(Flag::MixedConvention);

    // (term index, expansion words) for abbreviations with a dictionary expansion
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rewrites;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Term& t = terms[i];
        if (is_all_digits(t.text)) {
            a.flags.insert(Flag::DigitOnlyTerm);
            continue;
        }
        if (!is_abbreviation(t.text, lex))
            continue;
        a.flags.insert(Flag::AbbreviationPresent);
        auto expansion = expand(t.text, context, gold, lex);
        if (!expansion) {
            a.flags.insert(Flag::NonDictionaryTerm);
            continue;
        }
        auto words = words_of(*expansion);
        bool known = !words.empty()
                  && std::all_of(words.begin(), words.end(), [&](const std::string& w) { return lex.contains(w); });
        if (known)
            rewrites.emplace_back(i, std::move(words));
    }

    if (!rewrites.empty()) {
        const bool snake = name.find('_') != std::string_view::npos && !has_camel_boundary(name);
        std::string candidate(name);
        std::string reason = "expand";
        // Right to left so earlier offsets stay valid.
        for (auto it = rewrites.rbegin(); it != rewrites.rend(); ++it) {
            const Term& t = terms[it->first];
            candidate.replace(t.offset, t.surface.size(), render(it->second, t, snake));
        }
        for (const auto& [idx, words] : rewrites) {
            std::string joined;
            for (const auto& w : words)
                joined += (joined.empty() ? "" : " ") + w;
            reason += " '" + terms[idx].text + "' -> '" + joined + "'";
        }
        const auto rewritten = split(candidate);
        const bool clean = std::none_of(rewritten.begin(), rewritten.end(),
                                        [&](const Term& t) { return is_abbreviation(t.text, lex); });
        if (candidate != name && clean)
            a.suggestions.push_back({std::move(candidate), std::move(reason)});
    }

    a.score = std::max(0, 100 - config.penalty * static_cast<int>(a.flags.size()));
    return a;
}

RenameAppraisal appraise_rename(std::string_view old_name, std::string_view new_name, const Lexicon& lex,
                                const ContextBag& context, std::span<const GoldPair> gold,
                                const AppraiserConfig& config)
{
    RenameAppraisal r;
    r.change = classify(old_name, new_name, lex);
    r.delta = appraise(new_name, context, lex, gold, config).score
            - appraise(old_name, context, lex, gold, config).score;
    return r;
}

} // namespace namelens
