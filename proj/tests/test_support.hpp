#pragma once

#include "namelens/abbrev.hpp"
#include "namelens/lexicon.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace namelens::testing {

inline std::filesystem::path data_dir() { return NAMELENS_DATA_DIR; }
inline std::filesystem::path test_data_dir() { return NAMELENS_TEST_DATA_DIR; }

inline const Lexicon& bundled_lexicon()
{
    static const Lexicon lex = Lexicon::load(data_dir() / "lexicon.tsv");
    return lex;
}

inline const std::vector<GoldPair>& bundled_gold()
{
    static const std::vector<GoldPair> gold = load_gold(data_dir() / "gold.tsv");
    return gold;
}

// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir()
    {
        std::string pattern = (std::filesystem::temp_directory_path() / "namelens-XXXXXX").string();
        if (!mkdtemp(pattern.data()))
            throw std::runtime_error("mkdtemp failed");
        m_path = pattern;
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(m_path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return m_path; }

    std::filesystem::path write(const std::string& name, const std::string& content) const
    {
        auto p = m_path / name;
        std::filesystem::create_directories(p.parent_path());
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }

private:
    std::filesystem::path m_path;
};

inline std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Runs a git command inside repo with a fixed identity and clock.
inline void git(const std::filesystem::path& repo, const std::string& args, int timestamp = 1700000000)
{
    std::string cmd = "cd '" + repo.string() + "' && GIT_AUTHOR_NAME=t GIT_AUTHOR_EMAIL=t@t "
                      "GIT_COMMITTER_NAME=t GIT_COMMITTER_EMAIL=t@t "
                      "GIT_AUTHOR_DATE='" + std::to_string(timestamp) + " +0000' "
                      "GIT_COMMITTER_DATE='" + std::to_string(timestamp) + " +0000' "
                      "git -c init.defaultBranch=main -c commit.gpgsign=false " + args + " >/dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0)
        throw std::runtime_error("git failed: " + args);
}

} // namespace namelens::testing
