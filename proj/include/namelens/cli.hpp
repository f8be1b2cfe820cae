#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace namelens {

enum class OutputFormat { Json, Table };

struct RunConfig {
    std::string lexicon_path;
    std::string stopword_path;
    std::string gold_path;
    std::string appraiser_config_path;
    std::size_t window = 5;
    std::size_t topics = 5;
    std::size_t iterations = 1000;
    std::uint64_t seed = 1;
    OutputFormat output_format = OutputFormat::Json;
};

/// Default paths: NAMELENS_LEXICON for the lexicon when set, otherwise the
/// bundled data directory.
RunConfig default_config();

/// Entry point behind the `namelens` executable. Returns 0 on success, 1 on
/// input errors (bad flags, unreadable or malformed files), 2 on internal
/// errors. Results go to `out` unless --output names a file; diagnostics to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace namelens
