#include "namelens/topics.hpp"

#include "namelens/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace namelens {

// ---------------------------------------------------------------------------
// RNG
// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t& x)
{
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed)
{
    for (auto& s : m_s)
        s = splitmix64(seed);
}

std::uint64_t Xoshiro256::next()
{
    const std::uint64_t result = rotl(m_s[1] * 5, 7) * 9;
    const std::uint64_t t = m_s[1] << 17;
    m_s[2] ^= m_s[0];
    m_s[3] ^= m_s[1];
    m_s[1] ^= m_s[2];
    m_s[0] ^= m_s[3];
    m_s[2] ^= t;
    m_s[3] = rotl(m_s[3], 45);
    return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Xoshiro256::below(std::uint64_t bound)
{
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

StopwordSet parse_stopwords(std::string_view text)
{
    StopwordSet out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream words(line);
        std::string w;
        while (words >> w)
            out.insert(fold_case(w));
    }
    return out;
}

StopwordSet load_stopwords(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open stopword file: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_stopwords(ss.str());
}

std::size_t Corpus::token_count() const
{
    std::size_t n = 0;
    for (const auto& d : documents)
        n += d.size();
    return n;
}

Corpus make_corpus(std::vector<std::vector<std::string>> documents)
{
    Corpus c;
    std::set<std::string> vocab;
    for (const auto& d : documents)
        vocab.insert(d.begin(), d.end());
    c.vocabulary.assign(vocab.begin(), vocab.end());
    for (const auto& d : documents) {
        std::vector<std::size_t> ids;
        ids.reserve(d.size());
        for (const auto& w : d)
            ids.push_back(static_cast<std::size_t>(
                std::lower_bound(c.vocabulary.begin(), c.vocabulary.end(), w) - c.vocabulary.begin()));
        c.word_ids.push_back(std::move(ids));
    }
    c.documents = std::move(documents);
    c.category_of.resize(c.documents.size());
    return c;
}

Corpus preprocess(const std::vector<std::string>& messages, const StopwordSet& stopwords)
{
    std::vector<std::vector<std::string>> docs;
    docs.reserve(messages.size());
    for (const auto& msg : messages) {
        std::vector<std::string> tokens;
        std::string cur;
        auto flush = [&] {
            if (cur.size() >= 2 && !stopwords.count(cur))
                tokens.push_back(stem(cur));
            cur.clear();
        };
        for (char ch : msg) {
            char c = ch;
            if (c >= 'A' && c <= 'Z')
                c = static_cast<char>(c - 'A' + 'a');
            if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))
                cur += c;
            else
                flush();
        }
        flush();
        docs.push_back(std::move(tokens));
    }
    return make_corpus(std::move(docs));
}

// ---------------------------------------------------------------------------
// LDA
// ---------------------------------------------------------------------------

double TopicModel::phi(std::size_t k, std::size_t w) const
{
    return (static_cast<double>(topic_word[k][w]) + beta)
         / (static_cast<double>(topic_totals[k]) + static_cast<double>(vocab_size) * beta);
}

double TopicModel::theta(std::size_t d, std::size_t k) const
{
    return (static_cast<double>(doc_topic[d][k]) + alpha)
         / (static_cast<double>(assignments[d].size()) + static_cast<double>(topics) * alpha);
}

double log_likelihood(const TopicModel& m)
{
    const double vb = static_cast<double>(m.vocab_size) * m.beta;
    const double lg_beta = std::lgamma(m.beta);
    double ll = 0;
    for (std::size_t k = 0; k < m.topics; ++k) {
        ll += std::lgamma(vb) - std::lgamma(static_cast<double>(m.topic_totals[k]) + vb);
        for (std::size_t w = 0; w < m.vocab_size; ++w)
            if (m.topic_word[k][w] > 0)
                ll += std::lgamma(static_cast<double>(m.topic_word[k][w]) + m.beta) - lg_beta;
    }
    return ll;
}

TopicModel fit_lda(const Corpus& corpus, const LdaParams& params)
{
    if (params.topics < 1)
        throw Error("number of topics must be >= 1");
    const double alpha = params.alpha.value_or(50.0 / static_cast<double>(params.topics));
    if (!(alpha > 0) || !(params.beta > 0))
        throw Error("alpha and beta must be positive");
    if (corpus.token_count() == 0)
        throw Error("corpus has no tokens");

    const std::size_t K = params.topics;
    const std::size_t V = corpus.vocabulary.size();
    const std::size_t D = corpus.word_ids.size();

    TopicModel m;
    m.topics = K;
    m.vocab_size = V;
    m.alpha = alpha;
    m.beta = params.beta;
    m.seed = params.seed;
    m.iterations = params.iterations;
    m.vocabulary = corpus.vocabulary;
    m.topic_word.assign(K, std::vector<std::size_t>(V, 0));
    m.doc_topic.assign(D, std::vector<std::size_t>(K, 0));
    m.topic_totals.assign(K, 0);
    m.assignments.resize(D);

    Xoshiro256 rng(params.seed);
    for (std::size_t d = 0; d < D; ++d) {
        const auto& doc = corpus.word_ids[d];
        m.assignments[d].resize(doc.size());
        for (std::size_t i = 0; i < doc.size(); ++i) {
            std::size_t k = static_cast<std::size_t>(rng.below(K));
            m.assignments[d][i] = k;
            ++m.topic_word[k][doc[i]];
            ++m.doc_topic[d][k];
            ++m.topic_totals[k];
        }
    }

    const double vb = static_cast<double>(V) * m.beta;
    std::vector<double> cumulative(K);
    m.log_likelihood.reserve(params.iterations);
    for (std::size_t it = 0; it < params.iterations; ++it) {
        for (std::size_t d = 0; d < D; ++d) {
            const auto& doc = corpus.word_ids[d];
            auto& z = m.assignments[d];
            auto& nd = m.doc_topic[d];
            for (std::size_t i = 0; i < doc.size(); ++i) {
                const std::size_t w = doc[i];
                const std::size_t old = z[i];
                --m.topic_word[old][w];
                --nd[old];
                --m.topic_totals[old];

                double total = 0;
                for (std::size_t k = 0; k < K; ++k) {
                    total += (static_cast<double>(nd[k]) + alpha) * (static_cast<double>(m.topic_word[k][w]) + m.beta)
                           / (static_cast<double>(m.topic_totals[k]) + vb);
                    cumulative[k] = total;
                }
                const double u = rng.uniform() * total;
                std::size_t k = 0;
                while (k + 1 < K && u >= cumulative[k])
                    ++k;

                z[i] = k;
                ++m.topic_word[k][w];
                ++nd[k];
                ++m.topic_totals[k];
            }
        }
        m.log_likelihood.push_back(log_likelihood(m));
    }
    return m;
}

std::vector<std::vector<WeightedTerm>> top_terms(const TopicModel& model, std::size_t n)
{
    if (n < 1 || n > model.vocab_size)
        throw Error("top-terms count must be in [1, " + std::to_string(model.vocab_size) + "]");
    std::vector<std::vector<WeightedTerm>> out(model.topics);
    std::vector<std::size_t> order(model.vocab_size);
    for (std::size_t k = 0; k < model.topics; ++k) {
        for (std::size_t w = 0; w < model.vocab_size; ++w)
            order[w] = w;
        // Vocabulary is sorted, so index order is lexicographic order.
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                          [&](std::size_t a, std::size_t b) {
                              if (model.topic_word[k][a] != model.topic_word[k][b])
                                  return model.topic_word[k][a] > model.topic_word[k][b];
                              return a < b;
                          });
        for (std::size_t i = 0; i < n; ++i)
            out[k].push_back({model.vocabulary[order[i]], model.phi(k, order[i])});
    }
    return out;
}

std::map<Category, CategoryTopics> topics_by_category(const std::vector<RenameEvent>& renames,
                                                      const std::vector<SemanticChange>& changes,
                                                      const StopwordSet& stopwords, const LdaParams& params,
                                                      std::size_t top_n)
{
    if (renames.size() != changes.size())
        throw Error("renames and classifications differ in length");

    std::map<Category, std::vector<std::string>> messages;
    for (std::size_t i = 0; i < renames.size(); ++i)
        messages[changes[i].dominant].push_back(renames[i].message);

    std::map<Category, CategoryTopics> out;
    for (const auto& [category, msgs] : messages) {
        CategoryTopics ct;
        ct.documents = msgs.size();
        Corpus corpus = preprocess(msgs, stopwords);
        if (msgs.size() < kMinCategoryDocuments || corpus.token_count() == 0) {
            ct.insufficient = true;
        } else {
            TopicModel model = fit_lda(corpus, params);
            ct.topics = top_terms(model, std::min(top_n, model.vocab_size));
        }
        out.emplace(category, std::move(ct));
    }
    return out;
}

} // namespace namelens
