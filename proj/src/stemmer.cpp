// Porter stemmer.
//
// Works on the step definitions of the original algorithm: in each of steps
// 2, 3 and 4 only the longest matching suffix is considered, and if its
// condition fails the step does nothing.

#include "namelens/lexicon.hpp"

#include <array>

namespace namelens {

namespace {

class PorterWord {
public:
    explicit PorterWord(std::string_view w) : m_b(w) {}

    std::string take() && { return std::move(m_b); }

    void step1a()
    {
        if (ends("sses"))
            chop(2);
        else if (ends("ies"))
            chop(2);
        else if (ends("ss"))
            return;
        else if (ends("s"))
            chop(1);
    }

    void step1b()
    {
        if (ends("eed")) {
            if (measure(m_b.size() - 3) > 0)
                chop(1);
            return;
        }
        bool removed = false;
        if (ends("ed") && has_vowel(m_b.size() - 2)) {
            chop(2);
            removed = true;
        } else if (ends("ing") && has_vowel(m_b.size() - 3)) {
            chop(3);
            removed = true;
        }
        if (!removed)
            return;

        if (ends("at") || ends("bl") || ends("iz")) {
            m_b += 'e';
        } else if (double_consonant(m_b.size())) {
            char last = m_b.back();
            if (last != 'l' && last != 's' && last != 'z')
                chop(1);
        } else if (measure(m_b.size()) == 1 && cvc(m_b.size())) {
            m_b += 'e';
        }
    }

    void step1c()
    {
        if (ends("y") && has_vowel(m_b.size() - 1))
            m_b.back() = 'i';
    }

    void step2()
    {
        static constexpr std::array<std::pair<std::string_view, std::string_view>, 20> rules{{
            {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
            {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
            {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
            {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
        }};
        replace_longest(rules, 0);
    }

    void step3()
    {
        static constexpr std::array<std::pair<std::string_view, std::string_view>, 7> rules{{
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
            {"ical", "ic"},  {"ful", ""},   {"ness", ""},
        }};
        replace_longest(rules, 0);
    }

    void step4()
    {
        static constexpr std::array<std::string_view, 19> suffixes{
            "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
            "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize",
        };
        std::string_view best;
        for (auto s : suffixes)
            if (ends(s) && s.size() > best.size())
                best = s;
        if (best.empty())
            return;
        std::size_t stem_len = m_b.size() - best.size();
        if (measure(stem_len) <= 1)
            return;
        if (best == "ion" && (stem_len == 0 || (m_b[stem_len - 1] != 's' && m_b[stem_len - 1] != 't')))
            return;
        m_b.resize(stem_len);
    }

    void step5a()
    {
        if (!ends("e"))
            return;
        std::size_t stem_len = m_b.size() - 1;
        int m = measure(stem_len);
        if (m > 1 || (m == 1 && !cvc(stem_len)))
            chop(1);
    }

    void step5b()
    {
        if (measure(m_b.size()) > 1 && double_consonant(m_b.size()) && m_b.back() == 'l')
            chop(1);
    }

private:
    bool ends(std::string_view s) const { return m_b.size() >= s.size() && m_b.ends_with(s); }

    void chop(std::size_t n) { m_b.resize(m_b.size() - n); }

    bool consonant(std::size_t i) const
    {
        switch (m_b[i]) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
            return false;
        case 'y':
            return i == 0 || !consonant(i - 1);
        default:
            return true;
        }
    }

    // Number of VC sequences in the first `len` letters: [C](VC)^m[V].
    int measure(std::size_t len) const
    {
        int m = 0;
        std::size_t i = 0;
        while (i < len && consonant(i))
            ++i;
        while (i < len) {
            while (i < len && !consonant(i))
                ++i;
            if (i >= len)
                break;
            while (i < len && consonant(i))
                ++i;
            ++m;
        }
        return m;
    }

    bool has_vowel(std::size_t len) const
    {
        for (std::size_t i = 0; i < len; ++i)
            if (!consonant(i))
                return true;
        return false;
    }

    bool double_consonant(std::size_t len) const
    {
        return len >= 2 && m_b[len - 1] == m_b[len - 2] && consonant(len - 1);
    }

    // Stem of length `len` ends consonant-vowel-consonant, last not w, x or y.
    bool cvc(std::size_t len) const
    {
        if (len < 3 || !consonant(len - 1) || consonant(len - 2) || !consonant(len - 3))
            return false;
        char c = m_b[len - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }

    template <std::size_t N>
    void replace_longest(const std::array<std::pair<std::string_view, std::string_view>, N>& rules,
                         int min_measure)
    {
        const std::pair<std::string_view, std::string_view>* best = nullptr;
        for (const auto& r : rules)
            if (ends(r.first) && (!best || r.first.size() > best->first.size()))
                best = &r;
        if (!best)
            return;
        std::size_t stem_len = m_b.size() - best->first.size();
        if (measure(stem_len) <= min_measure)
            return;
        m_b.resize(stem_len);
        m_b += best->second;
    }

    std::string m_b;
};

} // namespace

std::string stem(std::string_view word)
{
    if (word.size() <= 2)
        return std::string(word);
    PorterWord w(word);
    w.step1a();
    w.step1b();
    w.step1c();
    w.step2();
    w.step3();
    w.step4();
    w.step5a();
    w.step5b();
    return std::move(w).take();
}

} // namespace namelens
