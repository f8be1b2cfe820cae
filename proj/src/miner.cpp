#include "namelens/miner.hpp"

#include "namelens/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace namelens {

namespace {

// ---------------------------------------------------------------------------
// process execution
// ---------------------------------------------------------------------------

struct ProcessResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

ProcessResult run_process(const std::vector<std::string>& argv)
{
    int out_pipe[2];
    int err_pipe[2];
    if (pipe(out_pipe) != 0)
        throw Error(std::string("pipe failed: ") + std::strerror(errno));
    if (pipe(err_pipe) != 0) {
        close(out_pipe[0]);
        close(out_pipe[1]);
        throw Error(std::string("pipe failed: ") + std::strerror(errno));
    }

    pid_t pid = fork();
    if (pid < 0)
        throw Error(std::string("fork failed: ") + std::strerror(errno));
    if (pid == 0) {
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        close(out_pipe[0]);
        close(out_pipe[1]);
        close(err_pipe[0]);
        close(err_pipe[1]);
        std::vector<char*> args;
        for (const auto& a : argv)
            args.push_back(const_cast<char*>(a.c_str()));
        args.push_back(nullptr);
        execvp(args[0], args.data());
        std::string msg = "cannot execute " + argv[0] + ": " + std::strerror(errno) + "\n";
        [[maybe_unused]] auto n = write(STDERR_FILENO, msg.data(), msg.size());
        _exit(127);
    }
    close(out_pipe[1]);
    close(err_pipe[1]);

    ProcessResult result;
    std::array<pollfd, 2> fds{{{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}}};
    std::array<std::string*, 2> sinks{&result.out, &result.err};
    int open_fds = 2;
    char buf[65536];
    while (open_fds > 0) {
        if (poll(fds.data(), fds.size(), -1) < 0) {
            if (errno == EINTR)
                continue;
            break;
        }
        for (std::size_t i = 0; i < fds.size(); ++i) {
            if (fds[i].fd < 0 || !(fds[i].revents & (POLLIN | POLLHUP | POLLERR)))
                continue;
            ssize_t n = read(fds[i].fd, buf, sizeof buf);
            if (n > 0) {
                sinks[i]->append(buf, static_cast<std::size_t>(n));
            } else if (n == 0 || errno != EINTR) {
                close(fds[i].fd);
                fds[i].fd = -1;
                --open_fds;
            }
        }
    }
    int status = 0;
    while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string trim_right(std::string s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    return s;
}

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    while (b < s.size() && (s[b] == '\n' || s[b] == '\r' || s[b] == ' ' || s[b] == '\t'))
        ++b;
    return trim_right(std::string(s.substr(b)));
}

bool is_hex(char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); }

// ---------------------------------------------------------------------------
// diff parsing
// ---------------------------------------------------------------------------

// "a/path" or "b/path" -> "path"; "/dev/null" -> ""
std::string strip_diff_prefix(std::string_view p)
{
    std::size_t tab = p.find('\t');
    if (tab != std::string_view::npos)
        p = p.substr(0, tab);
    if (p == "/dev/null")
        return {};
    if (p.size() > 2 && (p.starts_with("a/") || p.starts_with("b/")))
        p.remove_prefix(2);
    return std::string(p);
}

// "-12,3" -> (12, 3); "-12" -> (12, 1)
bool parse_range(std::string_view s, std::size_t& start, std::size_t& count)
{
    if (s.size() < 2)
        return false;
    s.remove_prefix(1);
    std::size_t comma = s.find(',');
    auto number = [](std::string_view v, std::size_t& out) {
        if (v.empty())
            return false;
        out = 0;
        for (char c : v) {
            if (c < '0' || c > '9')
                return false;
            out = out * 10 + static_cast<std::size_t>(c - '0');
        }
        return true;
    };
    if (comma == std::string_view::npos) {
        count = 1;
        return number(s, start);
    }
    return number(s.substr(0, comma), start) && number(s.substr(comma + 1), count);
}

bool parse_hunk_header(std::string_view line, Hunk& h)
{
    // @@ -a,b +c,d @@ ...
    if (!line.starts_with("@@ "))
        return false;
    line.remove_prefix(3);
    std::size_t sp = line.find(' ');
    if (sp == std::string_view::npos)
        return false;
    std::string_view old_range = line.substr(0, sp);
    line.remove_prefix(sp + 1);
    sp = line.find(' ');
    std::string_view new_range = line.substr(0, sp);
    if (!old_range.starts_with("-") || !new_range.starts_with("+"))
        return false;
    return parse_range(old_range, h.old_start, h.old_count) && parse_range(new_range, h.new_start, h.new_count);
}

// ---------------------------------------------------------------------------
// line tokenizing
// ---------------------------------------------------------------------------

struct Token {
    std::string text;
    bool identifier = false;
};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

std::vector<Token> tokenize_line(std::string_view line)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < line.size() && (line[i + 1] == '/' || line[i + 1] == '*'))
            break; // trailing comment
        std::size_t start = i;
        if (ident_start(c)) {
            while (i < line.size() && ident_char(line[i]))
                ++i;
            tokens.push_back({std::string(line.substr(start, i - start)), true});
        } else if (c >= '0' && c <= '9') {
            while (i < line.size() && (ident_char(line[i]) || line[i] == '.'))
                ++i;
            tokens.push_back({std::string(line.substr(start, i - start)), false});
        } else if (c == '"' || c == '\'') {
            ++i;
            while (i < line.size() && line[i] != c) {
                if (line[i] == '\\')
                    ++i;
                ++i;
            }
            i = std::min(i + 1, line.size());
            tokens.push_back({std::string(line.substr(start, i - start)), false});
        } else {
            ++i;
            tokens.push_back({std::string(1, c), false});
        }
    }
    return tokens;
}

bool is_comment_line(std::string_view line)
{
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return true;
    line.remove_prefix(b);
    return line.starts_with("//") || line.starts_with("/*") || line.starts_with("*");
}

bool splittable(const std::string& s)
{
    return std::any_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    });
}

const std::set<std::string, std::less<>>& java_keywords()
{
    static const std::set<std::string, std::less<>> kw{
        "abstract", "assert",     "boolean",   "break",     "byte",       "case",   "catch",
        "char",     "class",      "const",     "continue",  "default",    "do",     "double",
        "else",     "enum",       "extends",   "final",     "finally",    "float",  "for",
        "goto",     "if",         "implements", "import",   "instanceof", "int",    "interface",
        "long",     "native",     "new",       "package",   "private",    "protected", "public",
        "return",   "short",      "static",    "strictfp",  "super",      "switch", "synchronized",
        "this",     "throw",      "throws",    "transient", "try",        "void",   "volatile",
        "while",    "true",       "false",     "null",      "var",        "record", "yield",
        "sealed",   "permits",
    };
    return kw;
}

// ---------------------------------------------------------------------------
// JSON helpers
// ---------------------------------------------------------------------------

using nlohmann::json;

template <typename F>
void for_each_json_line(std::string_view text, F&& f)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
        }
        if (!obj.is_object())
            throw ParseError(line_no, "expected a JSON object");
        f(obj, line_no);
    }
}

std::string required_string(const json& obj, const char* key, std::size_t line_no)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(line_no, std::string("missing required field '") + key + "'");
    if (!it->is_string())
        throw ParseError(line_no, std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
}

std::string optional_string(const json& obj, const char* key, std::size_t line_no)
{
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null())
        return {};
    if (!it->is_string())
        throw ParseError(line_no, std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
}

std::size_t required_index(const json& obj, const char* key, std::size_t line_no)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(line_no, std::string("missing required field '") + key + "'");
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0)
        throw ParseError(line_no, std::string("field '") + key + "' must be an integer >= 0");
    return it->get<std::size_t>();
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

const std::string& FileDiff::path() const { return new_path.empty() ? old_path : new_path; }

bool is_java_keyword(std::string_view token) { return java_keywords().count(token) > 0; }

std::vector<FileDiff> parse_unified_diff(std::string_view text)
{
    std::vector<FileDiff> files;
    FileDiff* file = nullptr;
    Hunk* hunk = nullptr;
    std::size_t old_line = 0;
    std::size_t new_line = 0;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        if (line.starts_with("diff --git ")) {
            files.emplace_back();
            file = &files.back();
            hunk = nullptr;
            // Best effort from the header; ---/+++ lines override it.
            std::string_view rest = line.substr(11);
            std::size_t mid = rest.find(" b/");
            if (mid != std::string_view::npos) {
                file->old_path = strip_diff_prefix(rest.substr(0, mid));
                file->new_path = strip_diff_prefix(rest.substr(mid + 1));
            }
            continue;
        }
        if (hunk && (line.starts_with("-") || line.starts_with("+")) && !line.starts_with("--- ")
            && !line.starts_with("+++ ")) {
            if (line.front() == '-')
                hunk->removed.push_back({old_line++, std::string(line.substr(1))});
            else
                hunk->added.push_back({new_line++, std::string(line.substr(1))});
            continue;
        }
        if (hunk && line.starts_with(" ")) {
            ++old_line;
            ++new_line;
            continue;
        }
        if (line.starts_with("--- ") || line.starts_with("+++ ")) {
            if (!file) {
                files.emplace_back();
                file = &files.back();
            }
            hunk = nullptr;
            std::string p = strip_diff_prefix(line.substr(4));
            (line.front() == '-' ? file->old_path : file->new_path) = std::move(p);
            continue;
        }
        if (line.starts_with("@@ ") && file) {
            Hunk h;
            if (parse_hunk_header(line, h)) {
                file->hunks.push_back(std::move(h));
                hunk = &file->hunks.back();
                old_line = hunk->old_start;
                new_line = hunk->new_start;
            }
            continue;
        }
        if (line.starts_with("\\"))
            continue; // "\ No newline at end of file"
        hunk = nullptr;
    }
    return files;
}

std::vector<CommitRecord> parse_git_log(std::string_view text)
{
    std::vector<CommitRecord> commits;
    std::size_t patch_begin = 0;

    // Header of each commit is "<hash>\x1f<ct>\x1f<body>\x1e"; the patch of a
    // commit follows its \x1e and runs until the next header.
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t us = text.find('\x1f', pos);
        if (us == std::string_view::npos)
            break;
        std::size_t hash_begin = us;
        while (hash_begin > pos && is_hex(text[hash_begin - 1]))
            --hash_begin;
        std::size_t hash_len = us - hash_begin;
        bool at_line_start = hash_begin == 0 || text[hash_begin - 1] == '\n';
        if ((hash_len != 40 && hash_len != 64) || !at_line_start) {
            pos = us + 1;
            continue;
        }
        if (!commits.empty())
            commits.back().diffs = parse_unified_diff(text.substr(patch_begin, hash_begin - patch_begin));

        std::size_t us2 = text.find('\x1f', us + 1);
        std::size_t rs = text.find('\x1e', us + 1);
        if (us2 == std::string_view::npos || rs == std::string_view::npos || us2 > rs)
            throw Error("malformed git log output near commit " + std::string(text.substr(hash_begin, hash_len)));

        CommitRecord c;
        c.commit_id = std::string(text.substr(hash_begin, hash_len));
        c.commit_index = commits.size();
        std::string ts(text.substr(us + 1, us2 - us - 1));
        try {
            c.timestamp = std::stoll(ts);
        } catch (const std::exception&) {
            throw Error("malformed commit timestamp '" + ts + "'");
        }
        c.message = trim_right(std::string(text.substr(us2 + 1, rs - us2 - 1)));
        commits.push_back(std::move(c));

        pos = rs + 1;
        patch_begin = pos;
    }
    if (!commits.empty())
        commits.back().diffs = parse_unified_diff(text.substr(patch_begin));
    return commits;
}

std::vector<CommitRecord> ingest_history(const std::filesystem::path& repo, std::size_t max_commits)
{
    const std::string dir = repo.string();
    ProcessResult probe = run_process({"git", "-C", dir, "rev-parse", "--git-dir"});
    if (probe.exit_code != 0)
        throw Error("not a git repository: " + dir + ": " + trim(probe.err));

    ProcessResult head = run_process({"git", "-C", dir, "rev-parse", "--verify", "--quiet", "HEAD"});
    if (head.exit_code != 0)
        return {}; // no commits yet

    ProcessResult log = run_process({"git", "-C", dir, "log", "--first-parent", "--reverse", "--unified=0",
                                     "--no-color", "--no-ext-diff",
                                     "--pretty=format:%H%x1f%ct%x1f%B%x1e", "--patch"});
    if (log.exit_code != 0)
        throw Error("git log failed: " + trim(log.err));

    auto commits = parse_git_log(log.out);
    if (max_commits > 0 && commits.size() > max_commits)
        commits.resize(max_commits);
    return commits;
}

std::vector<RenameEvent> detect_renames(const std::vector<CommitRecord>& commits)
{
    std::vector<RenameEvent> events;
    for (const auto& commit : commits) {
        std::set<std::tuple<std::string, std::string, std::string>> seen;
        std::vector<RenameEvent> found;
        for (const auto& file : commit.diffs) {
            for (const auto& hunk : file.hunks) {
                std::size_t pairs = std::min(hunk.removed.size(), hunk.added.size());
                for (std::size_t i = 0; i < pairs; ++i) {
                    const auto& before = hunk.removed[i].text;
                    const auto& after = hunk.added[i].text;
                    if (is_comment_line(before) || is_comment_line(after))
                        continue;
                    auto old_tokens = tokenize_line(before);
                    auto new_tokens = tokenize_line(after);
                    if (old_tokens.size() != new_tokens.size())
                        continue;
                    std::size_t diff_at = 0;
                    std::size_t diffs = 0;
                    for (std::size_t k = 0; k < old_tokens.size(); ++k)
                        if (old_tokens[k].text != new_tokens[k].text) {
                            ++diffs;
                            diff_at = k;
                        }
                    if (diffs != 1)
                        continue;
                    const Token& o = old_tokens[diff_at];
                    const Token& n = new_tokens[diff_at];
                    if (!o.identifier || !n.identifier || is_java_keyword(o.text) || is_java_keyword(n.text)
                        || !splittable(o.text) || !splittable(n.text))
                        continue;

                    RenameEvent ev;
                    if (after.find("class ") != std::string::npos)
                        ev.element_kind = ElementKind::Class;
                    else if (diff_at + 1 < new_tokens.size() && new_tokens[diff_at + 1].text == "(")
                        ev.element_kind = ElementKind::Method;
                    else
                        ev.element_kind = ElementKind::Variable;
                    ev.file_path = file.path();
                    ev.line = hunk.added[i].line_number;
                    ev.element_id = ev.file_path + ":" + o.text;
                    ev.old_name = o.text;
                    ev.new_name = n.text;
                    ev.commit_id = commit.commit_id;
                    ev.commit_index = commit.commit_index;
                    ev.message = commit.message;
                    found.push_back(std::move(ev));
                }
            }
        }
        std::stable_sort(found.begin(), found.end(), [](const RenameEvent& a, const RenameEvent& b) {
            return std::tie(a.file_path, a.line) < std::tie(b.file_path, b.line);
        });
        for (auto& ev : found)
            if (seen.emplace(ev.element_id, ev.old_name, ev.new_name).second)
                events.push_back(std::move(ev));
    }
    std::stable_sort(events.begin(), events.end(), [](const RenameEvent& a, const RenameEvent& b) {
        return std::tie(a.commit_index, a.file_path, a.line) < std::tie(b.commit_index, b.file_path, b.line);
    });
    return events;
}

std::vector<RefactoringEvent> parse_refactorings(std::string_view text)
{
    std::vector<RefactoringEvent> out;
    for_each_json_line(text, [&](const json& obj, std::size_t line_no) {
        RefactoringEvent ev;
        ev.element_id = required_string(obj, "element_id", line_no);
        ev.refactoring_type = required_string(obj, "refactoring_type", line_no);
        ev.commit_id = required_string(obj, "commit_id", line_no);
        ev.commit_index = required_index(obj, "commit_index", line_no);
        if (ev.refactoring_type.empty())
            throw ParseError(line_no, "field 'refactoring_type' must be non-empty");
        out.push_back(std::move(ev));
    });
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.commit_index < b.commit_index; });
    return out;
}

std::vector<RefactoringEvent> load_refactorings(const std::filesystem::path& path)
{
    return parse_refactorings(read_file(path));
}

std::vector<RenameEvent> parse_renames(std::string_view text)
{
    std::vector<RenameEvent> out;
    for_each_json_line(text, [&](const json& obj, std::size_t line_no) {
        RenameEvent ev;
        ev.element_id = required_string(obj, "element_id", line_no);
        ev.old_name = required_string(obj, "old_name", line_no);
        ev.new_name = required_string(obj, "new_name", line_no);
        ev.commit_index = required_index(obj, "commit_index", line_no);
        ev.commit_id = optional_string(obj, "commit_id", line_no);
        ev.message = optional_string(obj, "message", line_no);
        std::string kind = optional_string(obj, "element_kind", line_no);
        if (!kind.empty()) {
            auto k = element_kind_from_string(kind);
            if (!k)
                throw ParseError(line_no, "unknown element_kind '" + kind + "'");
            ev.element_kind = *k;
        }
        if (ev.old_name == ev.new_name)
            throw ParseError(line_no, "old_name equals new_name");
        std::size_t colon = ev.element_id.rfind(':');
        ev.file_path = colon == std::string::npos ? ev.element_id : ev.element_id.substr(0, colon);
        ev.line = line_no;
        out.push_back(std::move(ev));
    });
    return out;
}

std::vector<RenameEvent> load_renames(const std::filesystem::path& path)
{
    return parse_renames(read_file(path));
}

} // namespace namelens
