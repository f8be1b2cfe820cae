#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace namelens {

enum class ElementKind { Class, Method, Variable, Attribute, Parameter, Unknown };

enum class Pos { Noun, Verb, Adjective, Adverb, Preposition, Digit, Unknown };

std::string_view to_string(ElementKind kind);
std::string_view to_string(Pos pos);
std::optional<ElementKind> element_kind_from_string(std::string_view s);
std::optional<Pos> pos_from_string(std::string_view s);

struct Term {
    std::string text;     // case-folded
    std::string surface;  // as written
    std::size_t offset = 0; // byte offset of surface within the raw name
    Pos pos = Pos::Unknown;
    bool is_abbreviation = false;
    std::optional<std::string> expansion;
};

struct Identifier {
    std::string raw;
    ElementKind kind = ElementKind::Unknown;
    std::vector<Term> terms;
};

/// ASCII lowercase; bytes outside A-Z pass through.
std::string fold_case(std::string_view s);

bool is_all_digits(std::string_view s);

/// Splits an identifier into terms. Boundaries are separators ('_', '$' and
/// any other ASCII punctuation), lower-to-upper transitions, letter/digit
/// transitions, and the last capital of an all-caps run that is followed by
/// a lowercase letter ("HTMLParser" -> html, parser).
///
/// Throws Error("empty identifier") or Error("no splittable content").
std::vector<Term> split(std::string_view raw);

/// Identifier with terms split; POS and abbreviation fields unset.
Identifier make_identifier(std::string_view raw, ElementKind kind = ElementKind::Unknown);

/// True iff both names split to the same sequence of term texts.
bool normalized_equal(std::string_view a, std::string_view b);

/// Term texts of a split, in order.
std::vector<std::string> term_texts(const std::vector<Term>& terms);

} // namespace namelens
