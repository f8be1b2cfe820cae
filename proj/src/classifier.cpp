#include "namelens/classifier.hpp"

#include "namelens/error.hpp"

#include <algorithm>
#include <array>

namespace namelens {

namespace {

constexpr std::array<std::pair<Category, std::string_view>, 7> kCategoryNames{{
    {Category::Preserve, "Preserve"},
    {Category::Narrow, "Narrow"},
    {Category::Broaden, "Broaden"},
    {Category::AddMeaning, "AddMeaning"},
    {Category::RemoveMeaning, "RemoveMeaning"},
    {Category::Opposite, "Opposite"},
    {Category::Unclassified, "Unclassified"},
}};

std::vector<std::string_view> sorted_texts(std::span<const Term> terms)
{
    std::vector<std::string_view> out;
    out.reserve(terms.size());
    for (const auto& t : terms)
        out.push_back(t.text);
    std::sort(out.begin(), out.end());
    return out;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::vector<Term> prepare_terms(std::string_view raw, const Lexicon& lex, const ClassifyOptions& options)
{
    Identifier id = make_identifier(raw);
    if (options.expand_first) {
        static const ContextBag kNoContext;
        id = expand_identifier(std::move(id), options.context ? *options.context : kNoContext, options.gold,
                               lex);
        std::vector<Term> expanded;
        for (auto& t : id.terms) {
            if (!t.expansion) {
                expanded.push_back(std::move(t));
                continue;
            }
            // A multi-word expansion contributes one term per word.
            std::string_view rest = *t.expansion;
            while (!rest.empty()) {
                std::size_t sp = rest.find(' ');
                std::string_view word = rest.substr(0, sp);
                if (!word.empty()) {
                    Term e;
                    e.text = fold_case(word);
                    e.surface = std::string(word);
                    e.offset = t.offset;
                    e.is_abbreviation = false;
                    expanded.push_back(std::move(e));
                }
                if (sp == std::string_view::npos)
                    break;
                rest.remove_prefix(sp + 1);
            }
        }
        id.terms = std::move(expanded);
    }
    for (auto& t : id.terms)
        t.pos = lex.pos_of(t.text);
    return id.terms;
}

} // namespace

Alignment align(std::span<const Term> old_terms, std::span<const Term> new_terms, const Lexicon& lex)
{
    if (old_terms.empty() || new_terms.empty())
        throw Error("empty term sequence");

    const std::size_t n = old_terms.size();
    const std::size_t m = new_terms.size();
    const std::size_t stride = m + 1;

    // lcs[i * stride + j] = LCS length of old[i..] and new[j..]
    std::vector<std::uint32_t> lcs((n + 1) * (m + 1), 0);
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = m; j-- > 0;) {
            if (old_terms[i].text == new_terms[j].text)
                lcs[i * stride + j] = lcs[(i + 1) * stride + j + 1] + 1;
            else
                lcs[i * stride + j] = std::max(lcs[(i + 1) * stride + j], lcs[i * stride + j + 1]);
        }

    Alignment a;
    for (std::size_t i = 0, j = 0; i < n && j < m;) {
        if (old_terms[i].text == new_terms[j].text) {
            a.matched.emplace_back(i, j);
            ++i;
            ++j;
        } else if (lcs[(i + 1) * stride + j] >= lcs[i * stride + j + 1]) {
            ++i;
        } else {
            ++j;
        }
    }

    auto fill_gap = [&](std::size_t old_begin, std::size_t old_end, std::size_t new_begin, std::size_t new_end) {
        std::size_t o = old_begin;
        std::size_t w = new_begin;
        for (; o < old_end && w < new_end; ++o, ++w)
            a.replacements.push_back({o, w, lex.related(old_terms[o].text, new_terms[w].text)});
        for (; w < new_end; ++w)
            a.additions.push_back(w);
        for (; o < old_end; ++o)
            a.removals.push_back(o);
    };

    std::size_t prev_old = 0;
    std::size_t prev_new = 0;
    for (const auto& [oi, ni] : a.matched) {
        fill_gap(prev_old, oi, prev_new, ni);
        prev_old = oi + 1;
        prev_new = ni + 1;
    }
    fill_gap(prev_old, n, prev_new, m);
    std::sort(a.removals.begin(), a.removals.end());

    a.format_only = n == m && a.matched.size() == n;
    a.reorder_only = !a.format_only && n == m && sorted_texts(old_terms) == sorted_texts(new_terms);
    return a;
}

std::string_view to_string(Category c)
{
    for (const auto& [cat, name] : kCategoryNames)
        if (cat == c)
            return name;
    return "Unclassified";
}

std::optional<Category> category_from_string(std::string_view s)
{
    for (const auto& [cat, name] : kCategoryNames)
        if (name == s)
            return cat;
    return std::nullopt;
}

std::string_view to_string(SubKind k)
{
    switch (k) {
    case SubKind::FormatOnly:
        return "FormatOnly";
    case SubKind::Reorder:
        return "Reorder";
    case SubKind::SynonymReplace:
        return "SynonymReplace";
    case SubKind::InflectionReplace:
        return "InflectionReplace";
    case SubKind::HyponymReplace:
        return "HyponymReplace";
    case SubKind::ModifierAdd:
        return "ModifierAdd";
    case SubKind::HypernymReplace:
        return "HypernymReplace";
    case SubKind::HeadRemove:
        return "HeadRemove";
    case SubKind::TermAdd:
        return "TermAdd";
    case SubKind::TermRemove:
        return "TermRemove";
    case SubKind::AntonymReplace:
        return "AntonymReplace";
    case SubKind::UnrelatedReplace:
        return "UnrelatedReplace";
    }
    return "UnrelatedReplace";
}

Category dominant_category(const std::set<SubKind>& s)
{
    auto any = [&](std::initializer_list<SubKind> kinds) {
        return std::any_of(kinds.begin(), kinds.end(), [&](SubKind k) { return s.count(k) > 0; });
    };
    if (any({SubKind::AntonymReplace}))
        return Category::Opposite;
    if (any({SubKind::HypernymReplace, SubKind::HeadRemove}))
        return Category::Broaden;
    if (any({SubKind::HyponymReplace, SubKind::ModifierAdd}))
        return Category::Narrow;
    if (any({SubKind::TermAdd}))
        return Category::AddMeaning;
    if (any({SubKind::TermRemove}))
        return Category::RemoveMeaning;
    if (any({SubKind::UnrelatedReplace}))
        return Category::Unclassified;
    return Category::Preserve;
}

SemanticChange classify(std::string_view old_raw, std::string_view new_raw, const Lexicon& lex,
                        const ClassifyOptions& options)
{
    const std::vector<Term> old_terms = prepare_terms(old_raw, lex, options);
    const std::vector<Term> new_terms = prepare_terms(new_raw, lex, options);
    const Alignment a = align(old_terms, new_terms, lex);

    SemanticChange change;
    auto note = [&](SubKind k, std::string why) {
        change.subkinds.insert(k);
        change.evidence.push_back(std::move(why));
    };

    if (a.format_only) {
        note(SubKind::FormatOnly, "same terms in the same order; only formatting differs");
    } else if (a.reorder_only) {
        note(SubKind::Reorder, "same terms in a different order");
    } else {
        for (const auto& r : a.replacements) {
            const std::string& from = old_terms[r.old_index].text;
            const std::string& to = new_terms[r.new_index].text;
            const std::string pair = "replace " + quoted(from) + " -> " + quoted(to);
            const auto& rel = r.relations;
            if (rel.count(RelationKind::Identical))
                continue;
            if (rel.count(RelationKind::Synonym))
                note(SubKind::SynonymReplace, pair + ": synonym");
            else if (rel.count(RelationKind::Inflection))
                note(SubKind::InflectionReplace, pair + ": singular/plural");
            else if (rel.count(RelationKind::Antonym))
                note(SubKind::AntonymReplace, pair + ": antonym");
            else if (rel.count(RelationKind::Hyponym))
                note(SubKind::HyponymReplace, pair + ": hyponym (more specific)");
            else if (rel.count(RelationKind::Hypernym))
                note(SubKind::HypernymReplace, pair + ": hypernym (more general)");
            else
                note(SubKind::UnrelatedReplace, pair + ": no lexical relation");
        }
        for (std::size_t idx : a.additions) {
            const Term& t = new_terms[idx];
            const std::string what = "add " + quoted(t.text) + " (" + std::string(to_string(t.pos)) + ")";
            if (t.pos == Pos::Noun || t.pos == Pos::Adjective)
                note(SubKind::ModifierAdd, what + ": modifier specializes the name");
            else
                note(SubKind::TermAdd, what);
        }
        const std::size_t head = old_terms.size() - 1;
        for (std::size_t idx : a.removals) {
            if (idx == head)
                note(SubKind::HeadRemove, "remove head term " + quoted(old_terms[idx].text));
            else
                note(SubKind::TermRemove, "remove " + quoted(old_terms[idx].text));
        }
    }

    change.dominant = dominant_category(change.subkinds);
    return change;
}

} // namespace namelens
