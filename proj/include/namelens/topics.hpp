#pragma once

#include "namelens/classifier.hpp"
#include "namelens/lexicon.hpp"
#include "namelens/miner.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace namelens {

/// xoshiro256** seeded through splitmix64. Fixed algorithm so a seed gives
/// the same stream on every platform.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform();
    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t m_s[4];
};

using StopwordSet = std::set<std::string, std::less<>>;

/// One word per line, '#' comments, case-folded.
StopwordSet load_stopwords(const std::filesystem::path& path);
StopwordSet parse_stopwords(std::string_view text);

struct Corpus {
    std::vector<std::vector<std::string>> documents;
    std::vector<std::string> vocabulary; // sorted, unique
    std::vector<std::vector<std::size_t>> word_ids; // documents mapped into vocabulary
    std::vector<std::optional<Category>> category_of;

    std::size_t token_count() const;
};

/// Builds vocabulary and word ids from already tokenized documents.
Corpus make_corpus(std::vector<std::vector<std::string>> documents);

/// Lowercase, split on non-alphanumeric characters, drop tokens shorter than
/// 2, drop stopwords, Porter-stem the rest. Empty documents are kept.
Corpus preprocess(const std::vector<std::string>& messages, const StopwordSet& stopwords);

struct LdaParams {
    std::size_t topics = 5;
    std::optional<double> alpha; // default 50 / topics
    double beta = 0.01;
    std::size_t iterations = 1000;
    std::uint64_t seed = 1;
};

struct TopicModel {
    std::size_t topics = 0;
    std::size_t vocab_size = 0;
    double alpha = 0;
    double beta = 0;
    std::uint64_t seed = 0;
    std::size_t iterations = 0;
    std::vector<std::string> vocabulary;
    std::vector<std::vector<std::size_t>> assignments; // per document, per token
    std::vector<std::vector<std::size_t>> topic_word;  // topics x V
    std::vector<std::vector<std::size_t>> doc_topic;   // D x topics
    std::vector<std::size_t> topic_totals;
    std::vector<double> log_likelihood; // log p(words | assignments) after each sweep

    /// (topic_word[k][w] + beta) / (topic_totals[k] + V * beta)
    double phi(std::size_t k, std::size_t w) const;
    /// (doc_topic[d][k] + alpha) / (doc length + K * alpha)
    double theta(std::size_t d, std::size_t k) const;
};

/// Collapsed Gibbs sampling; exactly params.iterations full sweeps over the
/// tokens in document order. Throws Error on K < 1, non-positive priors, or
/// a corpus without tokens.
TopicModel fit_lda(const Corpus& corpus, const LdaParams& params);

/// log p(w | z) of the current assignments under the collapsed model.
double log_likelihood(const TopicModel& model);

struct WeightedTerm {
    std::string term;
    double weight = 0;
};

/// Per topic, the n most probable terms; ties broken lexicographically.
/// Throws Error unless 1 <= n <= V.
std::vector<std::vector<WeightedTerm>> top_terms(const TopicModel& model, std::size_t n);

struct CategoryTopics {
    std::size_t documents = 0;
    bool insufficient = false;
    std::vector<std::vector<WeightedTerm>> topics;
};

constexpr std::size_t kMinCategoryDocuments = 5;
constexpr std::size_t kTopTermsPerTopic = 10;

/// Groups commit messages by dominant category and fits one model per group.
/// Groups under kMinCategoryDocuments documents (or without any token after
/// preprocessing) are marked insufficient.
std::map<Category, CategoryTopics> topics_by_category(const std::vector<RenameEvent>& renames,
                                                      const std::vector<SemanticChange>& changes,
                                                      const StopwordSet& stopwords, const LdaParams& params,
                                                      std::size_t top_n = kTopTermsPerTopic);

} // namespace namelens
