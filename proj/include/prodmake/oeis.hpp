#ifndef PRODMAKE_OEIS_HPP
#define PRODMAKE_OEIS_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <prodmake/exactnum.hpp>

namespace prodmake::oeis
{

struct SequenceMatch {
    std::string oeis_id; // "A059966"
    std::string name;
    std::size_t matched_prefix_length = 0;

    friend bool operator==(const SequenceMatch &, const SequenceMatch &) = default;
};

struct FixtureEntry {
    std::string oeis_id;
    std::string name;
    std::vector<BigInt> terms;
};

enum class Mode { online, offline };

struct Options {
    Mode mode = Mode::offline;
    // Raw JSON responses, one file per query. No caching when unset.
    std::optional<std::filesystem::path> cache_dir;
    std::string base_url = "https://oeis.org";
    // Extra fixture file in the bundled format, consulted after the bundled set.
    std::optional<std::filesystem::path> fixture_file;
    std::size_t min_match = 8;
    int timeout_seconds = 20;
};

// Cache directory from PRODMAKE_OEIS_CACHE, server from PRODMAKE_OEIS_URL and
// extra fixtures from PRODMAKE_OEIS_FIXTURES.
Options options_from_environment(Mode mode);

inline constexpr std::size_t kMinQueryTerms = 6;

// Lines of the form "AXXXXXX|name|t1,t2,...". Blank lines and lines starting
// with '#' are skipped. Throws InvalidArgument on malformed lines.
std::vector<FixtureEntry> parse_fixtures(std::string_view text);

// Fixtures compiled into the library.
const std::vector<FixtureEntry> &bundled_fixtures();

// The comma-joined query, also the cache key.
std::string query_key(std::span<const BigInt> terms);

// Length of the longest run agreeing with `terms` at some offset of
// `sequence`, requiring the whole overlap to agree. 0 when nothing aligns.
std::size_t aligned_match_length(std::span<const BigInt> terms, std::span<const BigInt> sequence);

// Matches against fixtures, best first (longest match, then id).
std::vector<SequenceMatch> match_fixtures(std::span<const BigInt> terms, const std::vector<FixtureEntry> &fixtures,
                                          std::size_t min_match);

// Accepts the OEIS search JSON (a bare array of results, or an object with a
// "results" array, or null).
std::vector<FixtureEntry> parse_search_response(std::string_view json);

// Rejects non-integer terms and queries shorter than kMinQueryTerms with
// InvalidArgument. Online mode consults the cache first, then the server
// (NetworkError on failure), and stores the raw response in the cache.
// Offline mode never touches the network. The effective minimum match length
// is min(options.min_match, terms.size()).
std::vector<SequenceMatch> lookup(std::span<const Rational> terms, const Options &options);

} // namespace prodmake::oeis

#endif
