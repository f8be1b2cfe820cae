#include "namelens/ident_lexer.hpp"

#include "namelens/error.hpp"

#include <array>
#include <utility>

namespace namelens {

namespace {

enum class CharClass { Upper, Lower, Digit, Separator };

// Non-ASCII bytes are treated as lowercase letters so UTF-8 sequences stay
// inside a single term.
CharClass classify_char(unsigned char c)
{
    if (c >= 'A' && c <= 'Z')
        return CharClass::Upper;
    if (c >= 'a' && c <= 'z')
        return CharClass::Lower;
    if (c >= '0' && c <= '9')
        return CharClass::Digit;
    if (c >= 0x80)
        return CharClass::Lower;
    return CharClass::Separator;
}

bool is_letter(CharClass c) { return c == CharClass::Upper || c == CharClass::Lower; }

constexpr std::array<std::pair<ElementKind, std::string_view>, 6> kElementKindNames{{
    {ElementKind::Class, "class"},
    {ElementKind::Method, "method"},
    {ElementKind::Variable, "variable"},
    {ElementKind::Attribute, "attribute"},
    {ElementKind::Parameter, "parameter"},
    {ElementKind::Unknown, "unknown"},
}};

constexpr std::array<std::pair<Pos, std::string_view>, 7> kPosNames{{
    {Pos::Noun, "noun"},
    {Pos::Verb, "verb"},
    {Pos::Adjective, "adjective"},
    {Pos::Adverb, "adverb"},
    {Pos::Preposition, "preposition"},
    {Pos::Digit, "digit"},
    {Pos::Unknown, "unknown"},
}};

} // namespace

std::string_view to_string(ElementKind kind)
{
    for (const auto& [k, name] : kElementKindNames)
        if (k == kind)
            return name;
    return "unknown";
}

std::string_view to_string(Pos pos)
{
    for (const auto& [p, name] : kPosNames)
        if (p == pos)
            return name;
    return "unknown";
}

std::optional<ElementKind> element_kind_from_string(std::string_view s)
{
    for (const auto& [k, name] : kElementKindNames)
        if (name == s)
            return k;
    return std::nullopt;
}

std::optional<Pos> pos_from_string(std::string_view s)
{
    for (const auto& [p, name] : kPosNames)
        if (name == s)
            return p;
    return std::nullopt;
}

std::string fold_case(std::string_view s)
{
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z')
            c = static_cast<char>(c - 'A' + 'a');
    return out;
}

bool is_all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

std::vector<Term> split(std::string_view raw)
{
    if (raw.empty())
        throw Error("empty identifier");

    std::vector<Term> terms;
    std::size_t start = std::string_view::npos;

    auto flush = [&](std::size_t end) {
        if (start == std::string_view::npos)
            return;
        Term t;
        t.surface = std::string(raw.substr(start, end - start));
        t.text = fold_case(t.surface);
        t.offset = start;
        if (is_all_digits(t.text))
            t.pos = Pos::Digit;
        terms.push_back(std::move(t));
        start = std::string_view::npos;
    };

    for (std::size_t i = 0; i < raw.size(); ++i) {
        CharClass cur = classify_char(static_cast<unsigned char>(raw[i]));
        if (cur == CharClass::Separator) {
            flush(i);
            continue;
        }
        if (start == std::string_view::npos) {
            start = i;
            continue;
        }
        CharClass prev = classify_char(static_cast<unsigned char>(raw[i - 1]));
        bool boundary = false;
        if (prev == CharClass::Lower && cur == CharClass::Upper)
            boundary = true;
        else if (is_letter(prev) != is_letter(cur))
            boundary = true; // letter <-> digit
        else if (prev == CharClass::Upper && cur == CharClass::Upper && i + 1 < raw.size()
                 && classify_char(static_cast<unsigned char>(raw[i + 1])) == CharClass::Lower)
            boundary = true; // "HTMLParser": the P starts the next term
        if (boundary) {
            flush(i);
            start = i;
        }
    }
    flush(raw.size());

    if (terms.empty())
        throw Error("no splittable content");
    return terms;
}

Identifier make_identifier(std::string_view raw, ElementKind kind)
{
    Identifier id;
    id.raw = std::string(raw);
    id.kind = kind;
    id.terms = split(raw);
    return id;
}

std::vector<std::string> term_texts(const std::vector<Term>& terms)
{
    std::vector<std::string> out;
    out.reserve(terms.size());
    for (const auto& t : terms)
        out.push_back(t.text);
    return out;
}

bool normalized_equal(std::string_view a, std::string_view b)
{
    return term_texts(split(a)) == term_texts(split(b));
}

} // namespace namelens
