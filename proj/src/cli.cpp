#include "namelens/cli.hpp"

#include "namelens/abbrev.hpp"
#include "namelens/appraiser.hpp"
#include "namelens/classifier.hpp"
#include "namelens/cooccur.hpp"
#include "namelens/error.hpp"
#include "namelens/json_io.hpp"
#include "namelens/lexicon.hpp"
#include "namelens/miner.hpp"
#include "namelens/topics.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#ifndef NAMELENS_DATA_DIR
#define NAMELENS_DATA_DIR "data"
#endif

namespace namelens {

namespace {

using nlohmann::json;

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ContextBag load_context(const std::string& path)
{
    if (path.empty())
        return {};
    return ContextBag::from_text(read_text(path));
}

std::string join(const std::vector<std::string>& parts, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::string subkind_list(const SemanticChange& c)
{
    std::vector<std::string> names;
    for (SubKind k : c.subkinds)
        names.emplace_back(to_string(k));
    return join(names, ",");
}

std::string topics_table(const std::map<Category, CategoryTopics>& report)
{
    std::ostringstream os;
    for (const auto& [category, ct] : report) {
        os << to_string(category) << " (" << ct.documents << " messages)";
        if (ct.insufficient) {
            os << ": insufficient data\n";
            continue;
        }
        os << '\n';
        for (std::size_t k = 0; k < ct.topics.size(); ++k) {
            os << "  topic " << k << ':';
            for (const auto& t : ct.topics[k])
                os << ' ' << t.term << '(' << std::fixed << std::setprecision(4) << t.weight << ')';
            os << '\n';
        }
    }
    return os.str();
}

struct Options {
    RunConfig config;
    std::string output_path;
    std::string format = "json";

    std::string old_name;
    std::string new_name;
    bool expand_first = false;
    std::string batch_path;
    std::string context_path;

    std::string repo;
    std::size_t max_commits = 0;

    std::string renames_path;
    std::string refactorings_path;

    std::optional<double> alpha;
    double beta = 0.01;

    std::string term;
    std::string name;
};

class Session {
public:
    explicit Session(const Options& o) : m_opts(o) {}

    const Lexicon& lexicon()
    {
        if (!m_lexicon)
            m_lexicon = Lexicon::load(m_opts.config.lexicon_path);
        return *m_lexicon;
    }

    const std::vector<GoldPair>& gold()
    {
        if (!m_gold)
            m_gold = load_gold(m_opts.config.gold_path);
        return *m_gold;
    }

    const AppraiserConfig& appraiser_config()
    {
        if (!m_appraiser)
            m_appraiser = m_opts.config.appraiser_config_path.empty()
                              ? AppraiserConfig{}
                              : AppraiserConfig::load(m_opts.config.appraiser_config_path);
        return *m_appraiser;
    }

    bool table() const { return m_opts.config.output_format == OutputFormat::Table; }

private:
    const Options& m_opts;
    std::optional<Lexicon> m_lexicon;
    std::optional<std::vector<GoldPair>> m_gold;
    std::optional<AppraiserConfig> m_appraiser;
};

void cmd_classify(const Options& o, Session& s, std::ostream& out)
{
    const bool single = !o.old_name.empty() || !o.new_name.empty();
    if (single && !o.batch_path.empty())
        throw UsageError("classify: use either --old/--new or --batch, not both");
    if (!single && o.batch_path.empty())
        throw UsageError("classify: --old and --new (or --batch) are required");

    const ContextBag context = load_context(o.context_path);
    ClassifyOptions copts;
    copts.expand_first = o.expand_first;
    copts.context = &context;
    if (o.expand_first)
        copts.gold = s.gold();

    if (single) {
        if (o.old_name.empty() || o.new_name.empty())
            throw UsageError("classify: both --old and --new are required");
        SemanticChange c = classify(o.old_name, o.new_name, s.lexicon(), copts);
        if (s.table()) {
            out << o.old_name << " -> " << o.new_name << '\t' << to_string(c.dominant) << '\t' << subkind_list(c)
                << '\n';
            return;
        }
        json j = to_json(c);
        j["old"] = o.old_name;
        j["new"] = o.new_name;
        out << j.dump() << '\n';
        return;
    }

    for (const auto& ev : load_renames(o.batch_path)) {
        SemanticChange c = classify(ev.old_name, ev.new_name, s.lexicon(), copts);
        if (s.table()) {
            out << ev.element_id << '\t' << ev.old_name << " -> " << ev.new_name << '\t' << to_string(c.dominant)
                << '\t' << subkind_list(c) << '\n';
            continue;
        }
        json j = to_json(ev);
        j["classification"] = to_json(c);
        out << j.dump() << '\n';
    }
}

void cmd_mine(const Options& o, Session& s, std::ostream& out)
{
    auto commits = ingest_history(o.repo, o.max_commits);
    for (const auto& ev : detect_renames(commits)) {
        if (s.table())
            out << ev.commit_index << '\t' << ev.element_id << '\t' << to_string(ev.element_kind) << '\t'
                << ev.old_name << " -> " << ev.new_name << '\n';
        else
            out << to_json(ev).dump() << '\n';
    }
}

void cmd_cooccur(const Options& o, Session& s, std::ostream& out)
{
    if (o.config.window < 1)
        throw UsageError("cooccur: --window must be >= 1");
    auto records = correlate(load_renames(o.renames_path), load_refactorings(o.refactorings_path), o.config.window);
    CooccurrenceSummary summary = summarize(records);
    if (s.table()) {
        out << format_table(summary);
        return;
    }
    json recs = json::array();
    for (const auto& r : records)
        recs.push_back(to_json(r));
    json j{{"summary", to_json(summary)}, {"records", std::move(recs)}, {"window", o.config.window}};
    out << j.dump(2) << '\n';
}

void cmd_topics(const Options& o, Session& s, std::ostream& out)
{
    if (o.config.topics < 1 || o.config.iterations < 1)
        throw UsageError("topics: --k and --iters must be >= 1");
    auto renames = load_renames(o.renames_path);
    std::vector<SemanticChange> changes;
    changes.reserve(renames.size());
    for (const auto& ev : renames)
        changes.push_back(classify(ev.old_name, ev.new_name, s.lexicon()));

    StopwordSet stopwords = load_stopwords(o.config.stopword_path);
    LdaParams params;
    params.topics = o.config.topics;
    params.iterations = o.config.iterations;
    params.seed = o.config.seed;
    params.alpha = o.alpha;
    params.beta = o.beta;
    auto report = topics_by_category(renames, changes, stopwords, params);
    if (s.table())
        out << topics_table(report);
    else
        out << to_json(report).dump(2) << '\n';
}

void cmd_expand(const Options& o, Session& s, std::ostream& out)
{
    const ContextBag context = load_context(o.context_path);
    auto match = expand_detailed(o.term, context, s.gold(), s.lexicon());
    if (s.table()) {
        out << o.term << '\t' << (match ? match->expansion : "-") << '\t'
            << (match ? std::string(to_string(match->technique)) : "-") << '\n';
        return;
    }
    json j = to_json(match);
    j["term"] = o.term;
    j["is_abbreviation"] = is_abbreviation(o.term, s.lexicon());
    out << j.dump() << '\n';
}

void cmd_appraise(const Options& o, Session& s, std::ostream& out)
{
    const ContextBag context = load_context(o.context_path);
    Appraisal a = appraise(o.name, context, s.lexicon(), s.gold(), s.appraiser_config());
    if (s.table()) {
        std::vector<std::string> flags;
        for (Flag f : a.flags)
            flags.emplace_back(to_string(f));
        out << a.name << '\t' << a.score << '\t' << (flags.empty() ? "-" : join(flags, ",")) << '\n';
        for (const auto& sug : a.suggestions)
            out << "  suggest " << sug.candidate << " (" << sug.reason << ")\n";
        return;
    }
    out << to_json(a).dump() << '\n';
}

} // namespace

RunConfig default_config()
{
    RunConfig c;
    const std::string data = NAMELENS_DATA_DIR;
    const char* env = std::getenv("NAMELENS_LEXICON");
    c.lexicon_path = env && *env ? env : data + "/lexicon.tsv";
    c.stopword_path = data + "/stopwords.txt";
    c.gold_path = data + "/gold.tsv";
    c.appraiser_config_path = data + "/appraiser.conf";
    return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    o.config = default_config();

    CLI::App app{"namelens: classify, mine and appraise identifier renames", "namelens"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--lexicon", o.config.lexicon_path, "Lexicon TSV (default: $NAMELENS_LEXICON or bundled)");
    app.add_option("--stopwords", o.config.stopword_path, "Stopword list");
    app.add_option("--gold", o.config.gold_path, "Abbreviation gold table TSV");
    app.add_option("--appraiser-config", o.config.appraiser_config_path, "Appraiser key = value config");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--output", o.output_path, "Write results to this file instead of stdout");

    auto* classify_cmd = app.add_subcommand("classify", "Classify a rename into a semantic-change category");
    classify_cmd->add_option("--old", o.old_name, "Old identifier name");
    classify_cmd->add_option("--new", o.new_name, "New identifier name");
    classify_cmd->add_flag("--expand", o.expand_first, "Expand abbreviations before classifying");
    classify_cmd->add_option("--batch", o.batch_path, "Rename events JSON-lines file");
    classify_cmd->add_option("--context", o.context_path, "Source file used as expansion context");

    auto* mine_cmd = app.add_subcommand("mine", "Detect single-token renames in a git history");
    mine_cmd->add_option("--repo", o.repo, "Repository path")->required();
    mine_cmd->add_option("--max-commits", o.max_commits, "Keep only the oldest N commits (0 = all)");

    auto* cooccur_cmd = app.add_subcommand("cooccur", "Correlate renames with refactorings on the same element");
    cooccur_cmd->add_option("--renames", o.renames_path, "Rename events JSON-lines file")->required();
    cooccur_cmd->add_option("--refactorings", o.refactorings_path, "Refactoring events JSON-lines file")->required();
    cooccur_cmd->add_option("--window", o.config.window, "Window in commits")->capture_default_str();

    auto* topics_cmd = app.add_subcommand("topics", "Topic-model commit messages per semantic category");
    topics_cmd->add_option("--renames", o.renames_path, "Rename events JSON-lines file")->required();
    topics_cmd->add_option("--k", o.config.topics, "Topics per category")->capture_default_str();
    topics_cmd->add_option("--iters", o.config.iterations, "Gibbs sweeps")->capture_default_str();
    topics_cmd->add_option("--seed", o.config.seed, "RNG seed")->capture_default_str();
    topics_cmd->add_option("--alpha", o.alpha, "Document-topic prior (default 50/K)");
    topics_cmd->add_option("--beta", o.beta, "Topic-word prior")->capture_default_str();

    auto* expand_cmd = app.add_subcommand("expand", "Expand an abbreviated term");
    expand_cmd->add_option("--term", o.term, "Term to expand")->required();
    expand_cmd->add_option("--context", o.context_path, "Source file used as context");

    auto* appraise_cmd = app.add_subcommand("appraise", "Appraise an identifier name");
    appraise_cmd->add_option("--name", o.name, "Identifier name")->required();
    appraise_cmd->add_option("--context", o.context_path, "Source file used as context");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const CLI::App* failing = &app;
        for (const auto* sub : app.get_subcommands())
            failing = sub;
        err << failing->help();
        return 1;
    }
    o.config.output_format = o.format == "table" ? OutputFormat::Table : OutputFormat::Json;

    try {
        std::ostringstream buffer;
        Session session(o);
        if (classify_cmd->parsed())
            cmd_classify(o, session, buffer);
        else if (mine_cmd->parsed())
            cmd_mine(o, session, buffer);
        else if (cooccur_cmd->parsed())
            cmd_cooccur(o, session, buffer);
        else if (topics_cmd->parsed())
            cmd_topics(o, session, buffer);
        else if (expand_cmd->parsed())
            cmd_expand(o, session, buffer);
        else if (appraise_cmd->parsed())
            cmd_appraise(o, session, buffer);

        if (o.output_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(o.output_path, std::ios::binary);
            if (!file)
                throw Error("cannot write " + o.output_path);
            file << buffer.str();
        }
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n";
        for (const auto* sub : app.get_subcommands())
            err << sub->help();
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace namelens
