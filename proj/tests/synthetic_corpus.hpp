#pragma once

#include "namelens/topics.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace namelens::testing {

constexpr std::size_t kSyntheticTopics = 3;
constexpr std::size_t kSyntheticVocabulary = 10;

inline std::string synthetic_word(std::size_t topic, std::size_t i)
{
    static const char* prefixes[] = {"river", "engine", "violin"};
    return prefixes[topic] + std::string(1, static_cast<char>('a' + i));
}

// Documents drawn from one of three disjoint 10-word vocabularies, uniform
// within the vocabulary. Document d uses vocabulary d % 3.
inline Corpus synthetic_corpus(std::size_t documents = 300, std::size_t length = 50, unsigned seed = 42)
{
    std::mt19937 rng(seed);
    std::vector<std::vector<std::string>> docs;
    for (std::size_t d = 0; d < documents; ++d) {
        std::vector<std::string> doc;
        for (std::size_t i = 0; i < length; ++i)
            doc.push_back(synthetic_word(d % kSyntheticTopics, rng() % kSyntheticVocabulary));
        docs.push_back(std::move(doc));
    }
    return make_corpus(std::move(docs));
}

inline std::size_t generating_topic(const std::string& word)
{
    for (std::size_t t = 0; t < kSyntheticTopics; ++t)
        for (std::size_t i = 0; i < kSyntheticVocabulary; ++i)
            if (synthetic_word(t, i) == word)
                return t;
    return kSyntheticTopics;
}

// Fraction of top-n terms, over all fitted topics, that belong to the
// majority generating vocabulary of their topic.
inline double top_term_purity(const std::vector<std::vector<WeightedTerm>>& tops)
{
    std::size_t pure = 0, total = 0;
    for (const auto& topic : tops) {
        std::map<std::size_t, std::size_t> votes;
        for (const auto& t : topic)
            ++votes[generating_topic(t.term)];
        std::size_t best = 0;
        for (const auto& [g, c] : votes)
            if (g < kSyntheticTopics)
                best = std::max(best, c);
        pure += best;
        total += topic.size();
    }
    return total == 0 ? 0.0 : static_cast<double>(pure) / static_cast<double>(total);
}

// Each fitted topic's majority vocabulary; recovery requires a bijection.
inline bool topics_cover_all_vocabularies(const std::vector<std::vector<WeightedTerm>>& tops)
{
    std::vector<bool> seen(kSyntheticTopics, false);
    for (const auto& topic : tops) {
        std::map<std::size_t, std::size_t> votes;
        for (const auto& t : topic)
            ++votes[generating_topic(t.term)];
        auto best = std::max_element(votes.begin(), votes.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
        if (best != votes.end() && best->first < kSyntheticTopics)
            seen[best->first] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

} // namespace namelens::testing
