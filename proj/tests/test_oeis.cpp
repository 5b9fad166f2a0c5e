#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include <unistd.h>

// Must match the core library's build of the same header.
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <prodmake/error.hpp>
#include <prodmake/families.hpp>
#include <prodmake/oeis.hpp>

using namespace prodmake;
namespace fs = std::filesystem;

namespace
{

std::vector<Rational> rationals(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

std::vector<Rational> family_exps(const char *spec, std::size_t order)
{
    const auto a = family_exponents(family(spec), order);
    return {a.values().begin(), a.values().end()};
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("prodmake-oeis-" + std::to_string(::getpid()) + "-"
                                            + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir()
    {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static inline int counter = 0;
};

// Serves a canned OEIS search response and counts requests.
struct FakeServer {
    httplib::Server server;
    std::thread thread;
    std::atomic<int> hits{0};
    std::string last_query;
    int port = 0;

    explicit FakeServer(std::string body, int status = 200)
    {
        server.Get("/search", [this, body, status](const httplib::Request &req, httplib::Response &res) {
            ++hits;
            last_query = req.get_param_value("q");
            res.status = status;
            res.set_content(body, "application/json");
        });
        port = server.bind_to_any_port("127.0.0.1");
        thread = std::thread([this] { server.listen_after_bind(); });
        server.wait_until_ready();
    }
    ~FakeServer()
    {
        server.stop();
        thread.join();
    }
    std::string url() const
    {
        return "http://127.0.0.1:" + std::to_string(port);
    }
};

const char *kFibResponse = R"({"results":[{"number":6206,"name":"Fibonacci exponents",
"data":"1,1,1,1,2,2,4,5,8,11,18,25,40,58,90,135,210,316,492"}]})";

} // namespace

TEST_CASE("fixture parsing")
{
    const auto f = oeis::parse_fixtures("# comment\n\nA000001|one|1,2,3\nA000002|two|-4,5\n");
    REQUIRE(f.size() == 2);
    CHECK(f[0].oeis_id == "A000001");
    CHECK(f[1].name == "two");
    CHECK(f[1].terms == std::vector<BigInt>{-4,5});
    CHECK_THROWS_AS(oeis::parse_fixtures("A000001|one\n"), InvalidArgument);
    CHECK_THROWS_AS(oeis::parse_fixtures("A000001|one|1,x\n"), InvalidArgument);
    CHECK(oeis::bundled_fixtures().size() >= 10);
}

TEST_CASE("alignment")
{
    const std::vector<BigInt> seq = {1, 1, 2, 3, 5, 8, 13};
    CHECK(oeis::aligned_match_length(std::vector<BigInt>{1, 1, 2, 3}, seq) == 4);
    CHECK(oeis::aligned_match_length(std::vector<BigInt>{2, 3, 5}, seq) == 3);
    CHECK(oeis::aligned_match_length(std::vector<BigInt>{8, 13, 21}, seq) == 2);
    CHECK(oeis::aligned_match_length(std::vector<BigInt>{4, 4}, seq) == 0);
    CHECK(oeis::query_key(std::vector<BigInt>{1, -2, 3}) == "1,-2,3");
}

TEST_CASE("offline lookup of the conversion outputs")
{
    const oeis::Options opts;
    const auto comp = oeis::lookup(family_exps("compositions", 13), opts);
    REQUIRE_FALSE(comp.empty());
    CHECK(comp[0].oeis_id == "A059966");
    CHECK(comp[0].matched_prefix_length == 13);

    const auto fib = oeis::lookup(family_exps("fibonacci", 17), opts);
    REQUIRE_FALSE(fib.empty());
    CHECK(fib[0].oeis_id == "A006206");

    const auto parts = oeis::lookup(rationals({1, 1, 2, 3, 5, 7, 11, 15, 22, 30}), opts);
    REQUIRE_FALSE(parts.empty());
    CHECK(parts[0].oeis_id == "A000041");

    CHECK(oeis::lookup(rationals({9, 9, 9, 9, 9, 9, 9}), opts).empty());
}

TEST_CASE("lookup input validation")
{
    const oeis::Options opts;
    CHECK_THROWS_AS(oeis::lookup(rationals({1, 1, 2, 3, 5}), opts), InvalidArgument);
    auto terms = rationals({1, 1, 2, 3, 5, 8});
    terms[2] = Rational(BigInt(1), BigInt(2));
    CHECK_THROWS_AS(oeis::lookup(terms, opts), InvalidArgument);
}

TEST_CASE("extra fixture file")
{
    TempDir dir;
    const auto file = dir.path / "extra.txt";
    std::ofstream(file) << "A999999|custom|7,7,1,7,7,1,7,7,1\n";
    oeis::Options opts;
    opts.fixture_file = file;
    const auto m = oeis::lookup(rationals({7, 7, 1, 7, 7, 1, 7}), opts);
    REQUIRE(m.size() == 1);
    CHECK(m[0].oeis_id == "A999999");
    opts.fixture_file = dir.path / "missing.txt";
    CHECK_THROWS_AS(oeis::lookup(rationals({7, 7, 1, 7, 7, 1, 7}), opts), InvalidArgument);
}

TEST_CASE("search response parsing")
{
    CHECK(oeis::parse_search_response("null").empty());
    CHECK(oeis::parse_search_response(R"({"results":null})").empty());
    const auto r = oeis::parse_search_response(R"([{"number":45,"name":"Fib","data":"0,1,1,2"}])");
    REQUIRE(r.size() == 1);
    CHECK(r[0].oeis_id == "A000045");
    CHECK(r[0].terms.size() == 4);
    CHECK_THROWS_AS(oeis::parse_search_response("{oops"), InvalidArgument);
}

TEST_CASE("online lookup against a local server, with caching")
{
    FakeServer server(kFibResponse);
    TempDir cache;
    oeis::Options opts;
    opts.mode = oeis::Mode::online;
    opts.base_url = server.url();
    opts.cache_dir = cache.path;
    opts.timeout_seconds = 5;

    const auto terms = family_exps("fibonacci", 17);
    const auto first = oeis::lookup(terms, opts);
    REQUIRE(first.size() == 1);
    CHECK(first[0].oeis_id == "A006206");
    CHECK(first[0].matched_prefix_length == 17);
    CHECK(server.hits == 1);
    CHECK(server.last_query == "1,1,1,1,2,2,4,5,8,11,18,25,40,58,90,135,210");
    CHECK(fs::exists(cache.path / (server.last_query + ".json")));

    // Second call is served from the cache.
    const auto second = oeis::lookup(terms, opts);
    CHECK(second == first);
    CHECK(server.hits == 1);

    // An offline call also reads the cache.
    opts.mode = oeis::Mode::offline;
    opts.base_url = "http://127.0.0.1:1";
    fs::remove(cache.path / (server.last_query + ".json"));
    std::ofstream(cache.path / (server.last_query + ".json"))
        << R"([{"number":999998,"name":"cached only","data":"1,1,1,1,2,2,4,5,8,11"}])";
    const auto offline = oeis::lookup(terms, opts);
    REQUIRE(offline.size() == 2);
    CHECK(offline[0].oeis_id == "A006206");
    CHECK(offline[1].oeis_id == "A999998");
    CHECK(offline[1].matched_prefix_length == 10);
}

TEST_CASE("network failures")
{
    const auto terms = family_exps("fibonacci", 10);
    oeis::Options opts;
    opts.mode = oeis::Mode::online;
    opts.timeout_seconds = 2;
    {
        FakeServer server("oops", 503);
        opts.base_url = server.url();
        CHECK_THROWS_AS(oeis::lookup(terms, opts), NetworkError);
    }
    {
        // Nothing listens here once the server is gone.
        int port = 0;
        {
            FakeServer server("[]");
            port = server.port;
        }
        opts.base_url = "http://127.0.0.1:" + std::to_string(port);
        CHECK_THROWS_AS(oeis::lookup(terms, opts), NetworkError);
    }
    {
        // A garbage body is rejected and not cached.
        FakeServer server("not json");
        TempDir cache;
        opts.base_url = server.url();
        opts.cache_dir = cache.path;
        CHECK_THROWS_AS(oeis::lookup(terms, opts), InvalidArgument);
        CHECK(fs::is_empty(cache.path));
    }
}
