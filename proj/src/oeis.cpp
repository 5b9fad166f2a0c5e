#include <prodmake/oeis.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>
#include <thread>

#include <unistd.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

#include <prodmake/error.hpp>

namespace prodmake::oeis
{

namespace detail
{
extern const std::string_view bundled_fixture_text;
}

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<BigInt> parse_terms(std::string_view text)
{
    std::vector<BigInt> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (item.empty()) {
            throw InvalidArgument("empty term in sequence data");
        }
        BigInt v;
        if (v.set_str(std::string(item), 10) != 0) {
            throw InvalidArgument("bad term '" + std::string(item) + "' in sequence data");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string format_id(long number)
{
    std::string digits = std::to_string(number);
    if (digits.size() < 6) {
        digits.insert(0, 6 - digits.size(), '0');
    }
    return "A" + digits;
}

std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::filesystem::path cache_path(const std::filesystem::path &dir, const std::string &key)
{
    if (key.size() <= 200) {
        return dir / (key + ".json");
    }
    std::ostringstream os;
    os << key.substr(0, 120) << "-" << std::hex << fnv1a(key) << ".json";
    return dir / os.str();
}

std::optional<std::string> read_file(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Write-once: a finished entry is never replaced, and readers only ever see
// complete files because the final step is a rename.
void store_cache(const std::filesystem::path &target, const std::string &body)
{
    std::error_code ec;
    std::filesystem::create_directories(target.parent_path(), ec);
    if (std::filesystem::exists(target, ec)) {
        return;
    }
    static std::atomic<unsigned> counter{0};
    std::ostringstream tmpname;
    tmpname << target.filename().string() << ".tmp." << ::getpid() << "."
            << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
    const auto tmp = target.parent_path() / tmpname.str();
    {
        std::ofstream out(tmp, std::ios::binary);
        out << body;
        if (!out) {
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
    }
}

std::string fetch(const Options &options, const std::string &key)
{
    try {
        httplib::Client client(options.base_url);
        client.set_connection_timeout(options.timeout_seconds, 0);
        client.set_read_timeout(options.timeout_seconds, 0);
        client.set_follow_location(true);
        const std::string path = "/search?q=" + key + "&fmt=json";
        auto res = client.Get(path);
        if (!res) {
            throw NetworkError("OEIS request to " + options.base_url + " failed: " + httplib::to_string(res.error()));
        }
        if (res->status != 200) {
            throw NetworkError("OEIS request to " + options.base_url + " returned HTTP " + std::to_string(res->status));
        }
        return res->body;
    } catch (const NetworkError &) {
        throw;
    } catch (const std::exception &e) {
        throw NetworkError(std::string("OEIS request failed: ") + e.what());
    }
}

void merge(std::map<std::string, SequenceMatch> &into, const std::vector<SequenceMatch> &found)
{
    for (const auto &m : found) {
        auto it = into.find(m.oeis_id);
        if (it == into.end() || it->second.matched_prefix_length < m.matched_prefix_length) {
            into[m.oeis_id] = m;
        }
    }
}

} // namespace

Options options_from_environment(Mode mode)
{
    Options o;
    o.mode = mode;
    if (const char *dir = std::getenv("PRODMAKE_OEIS_CACHE"); dir != nullptr && *dir != '\0') {
        o.cache_dir = std::filesystem::path(dir);
    }
    if (const char *url = std::getenv("PRODMAKE_OEIS_URL"); url != nullptr && *url != '\0') {
        o.base_url = url;
    }
    if (const char *fx = std::getenv("PRODMAKE_OEIS_FIXTURES"); fx != nullptr && *fx != '\0') {
        o.fixture_file = std::filesystem::path(fx);
    }
    return o;
}

std::vector<FixtureEntry> parse_fixtures(std::string_view text)
{
    std::vector<FixtureEntry> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto bar1 = line.find('|');
        const auto bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
        if (bar2 == std::string_view::npos) {
            throw InvalidArgument("fixture line " + std::to_string(line_no) + ": expected AXXXXXX|name|terms");
        }
        FixtureEntry e;
        e.oeis_id = std::string(trim(line.substr(0, bar1)));
        if (e.oeis_id.size() != 7 || e.oeis_id[0] != 'A'
            || !std::all_of(e.oeis_id.begin() + 1, e.oeis_id.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw InvalidArgument("fixture line " + std::to_string(line_no) + ": bad id '" + e.oeis_id + "'");
        }
        e.name = std::string(trim(line.substr(bar1 + 1, bar2 - bar1 - 1)));
        e.terms = parse_terms(line.substr(bar2 + 1));
        out.push_back(std::move(e));
    }
    return out;
}

const std::vector<FixtureEntry> &bundled_fixtures()
{
    static const std::vector<FixtureEntry> fixtures = parse_fixtures(detail::bundled_fixture_text);
    return fixtures;
}

std::string query_key(std::span<const BigInt> terms)
{
    std::string key;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) {
            key += ',';
        }
        key += terms[i].get_str();
    }
    return key;
}

std::size_t aligned_match_length(std::span<const BigInt> terms, std::span<const BigInt> sequence)
{
    std::size_t best = 0;
    for (std::size_t offset = 0; offset < sequence.size(); ++offset) {
        const std::size_t overlap = std::min(terms.size(), sequence.size() - offset);
        if (overlap <= best) {
            break;
        }
        bool agree = true;
        for (std::size_t i = 0; i < overlap && agree; ++i) {
            agree = terms[i] == sequence[offset + i];
        }
        if (agree) {
            best = overlap;
        }
    }
    return best;
}

std::vector<SequenceMatch> match_fixtures(std::span<const BigInt> terms, const std::vector<FixtureEntry> &fixtures,
                                          std::size_t min_match)
{
    std::vector<SequenceMatch> out;
    for (const auto &f : fixtures) {
        const auto len = aligned_match_length(terms, f.terms);
        if (len >= min_match && len > 0) {
            out.push_back({f.oeis_id, f.name, len});
        }
    }
    std::sort(out.begin(), out.end(), [](const SequenceMatch &a, const SequenceMatch &b) {
        if (a.matched_prefix_length != b.matched_prefix_length) {
            return a.matched_prefix_length > b.matched_prefix_length;
        }
        return a.oeis_id < b.oeis_id;
    });
    return out;
}

std::vector<FixtureEntry> parse_search_response(std::string_view json)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgument(std::string("malformed OEIS response: ") + e.what());
    }
    const nlohmann::json *results = &doc;
    if (doc.is_object()) {
        auto it = doc.find("results");
        if (it == doc.end()) {
            return {};
        }
        results = &*it;
    }
    if (results->is_null()) {
        return {};
    }
    if (!results->is_array()) {
        throw InvalidArgument("malformed OEIS response: expected an array of results");
    }
    std::vector<FixtureEntry> out;
    for (const auto &r : *results) {
        if (!r.is_object() || !r.contains("number") || !r.contains("data")) {
            continue;
        }
        FixtureEntry e;
        e.oeis_id = format_id(r.at("number").get<long>());
        e.name = r.value("name", std::string());
        e.terms = parse_terms(r.at("data").get<std::string>());
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<SequenceMatch> lookup(std::span<const Rational> terms, const Options &options)
{
    if (terms.size() < kMinQueryTerms) {
        throw InvalidArgument("OEIS lookup needs at least " + std::to_string(kMinQueryTerms) + " terms, got "
                              + std::to_string(terms.size()));
    }
    std::vector<BigInt> ints;
    ints.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!terms[i].is_integer()) {
            throw InvalidArgument("OEIS lookup only accepts integer sequences; term " + std::to_string(i) + " is "
                                  + terms[i].str());
        }
        ints.push_back(terms[i].numerator());
    }
    const std::size_t min_match = std::min(options.min_match, ints.size());
    const std::string key = query_key(ints);

    std::map<std::string, SequenceMatch> found;
    std::optional<std::string> cached;
    if (options.cache_dir) {
        cached = read_file(cache_path(*options.cache_dir, key));
    }

    if (options.mode == Mode::offline) {
        merge(found, match_fixtures(ints, bundled_fixtures(), min_match));
        if (options.fixture_file) {
            auto text = read_file(*options.fixture_file);
            if (!text) {
                throw InvalidArgument("cannot read fixture file " + options.fixture_file->string());
            }
            merge(found, match_fixtures(ints, parse_fixtures(*text), min_match));
        }
        if (cached) {
            merge(found, match_fixtures(ints, parse_search_response(*cached), min_match));
        }
    } else {
        if (!cached) {
            cached = fetch(options, key);
            // Validate before caching so a garbage body is never stored.
            auto parsed = parse_search_response(*cached);
            if (options.cache_dir) {
                store_cache(cache_path(*options.cache_dir, key), *cached);
            }
            merge(found, match_fixtures(ints, parsed, min_match));
        } else {
            merge(found, match_fixtures(ints, parse_search_response(*cached), min_match));
        }
    }

    std::vector<SequenceMatch> out;
    for (auto &[id, m] : found) {
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const SequenceMatch &a, const SequenceMatch &b) {
        if (a.matched_prefix_length != b.matched_prefix_length) {
            return a.matched_prefix_length > b.matched_prefix_length;
        }
        return a.oeis_id < b.oeis_id;
    });
    return out;
}

} // namespace prodmake::oeis
