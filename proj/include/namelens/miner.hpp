#pragma once

#include "namelens/ident_lexer.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace namelens {

struct DiffLine {
    std::size_t line_number = 0; // in the old file for removals, new file for additions
    std::string text;            // without the leading '-' or '+'
};

struct Hunk {
    std::size_t old_start = 0;
    std::size_t old_count = 0;
    std::size_t new_start = 0;
    std::size_t new_count = 0;
    std::vector<DiffLine> removed;
    std::vector<DiffLine> added;
};

struct FileDiff {
    std::string old_path;
    std::string new_path;
    std::vector<Hunk> hunks;

    /// new_path, or old_path for deletions.
    const std::string& path() const;
};

struct CommitRecord {
    std::string commit_id;
    std::size_t commit_index = 0;
    std::int64_t timestamp = 0;
    std::string message;
    std::vector<FileDiff> diffs;
};

struct RenameEvent {
    std::string element_id; // "<file path>:<old name>"
    ElementKind element_kind = ElementKind::Unknown;
    std::string old_name;
    std::string new_name;
    std::string commit_id;
    std::size_t commit_index = 0;
    std::string message;

    // Location used for ordering; not part of the interchange format.
    std::string file_path;
    std::size_t line = 0;
};

struct RefactoringEvent {
    std::string element_id;
    std::string refactoring_type;
    std::string commit_id;
    std::size_t commit_index = 0;
};

/// Parses `git diff`/`git log --patch` output into per-file hunks. Binary
/// files and "\ No newline" markers are skipped.
std::vector<FileDiff> parse_unified_diff(std::string_view text);

/// Parses the output of
///   git log --first-parent --reverse --unified=0
///           --pretty=format:%H%x1f%ct%x1f%B%x1e --patch
/// assigning commit_index 0..n-1 in order of appearance.
std::vector<CommitRecord> parse_git_log(std::string_view text);

/// Runs git on `repo` and parses its first-parent history, oldest first.
/// `max_commits` of 0 means unlimited; otherwise only the oldest
/// `max_commits` commits are kept. An empty repository yields no commits.
std::vector<CommitRecord> ingest_history(const std::filesystem::path& repo, std::size_t max_commits = 0);

/// Java reserved words and literals.
bool is_java_keyword(std::string_view token);

/// Single-token rename candidates from positionally paired -/+ lines.
/// Output ordered by commit_index, file path, line; duplicates within a
/// commit collapsed.
std::vector<RenameEvent> detect_renames(const std::vector<CommitRecord>& commits);

/// JSON-lines event files. Blank lines are skipped; errors carry the line
/// number and the offending field.
std::vector<RefactoringEvent> load_refactorings(const std::filesystem::path& path);
std::vector<RefactoringEvent> parse_refactorings(std::string_view text);
std::vector<RenameEvent> load_renames(const std::filesystem::path& path);
std::vector<RenameEvent> parse_renames(std::string_view text);

} // namespace namelens
