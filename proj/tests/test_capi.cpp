// Exercises the shared library through its C header only.
#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include <prodmake/prodmake.h>

namespace
{

struct SeqDeleter {
    void operator()(pm_seq *s) const
    {
        pm_seq_free(s);
    }
};
using Seq = std::unique_ptr<pm_seq, SeqDeleter>;

Seq make_seq(const std::vector<std::string> &terms, std::size_t first_index)
{
    std::vector<const char *> ptrs;
    for (const auto &t : terms) {
        ptrs.push_back(t.c_str());
    }
    pm_seq *out = nullptr;
    REQUIRE(pm_seq_from_strings(ptrs.data(), ptrs.size(), first_index, &out) == PM_OK);
    return Seq(out);
}

std::vector<std::string> terms(const pm_seq *s)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < pm_seq_length(s); ++i) {
        out.emplace_back(pm_seq_term(s, i));
    }
    return out;
}

} // namespace

TEST_CASE("version and status strings")
{
    CHECK(std::string(pm_version()) == "1.0.0");
    CHECK(std::string(pm_status_string(PM_ERR_PARSE)).size() > 0);
    CHECK(pm_default_partition_guard() == 80);
}

TEST_CASE("expression to exponents")
{
    pm_seq *raw = nullptr;
    REQUIRE(pm_series_from_expr("(1-q)/(1-2*q)", 13, &raw) == PM_OK);
    Seq series(raw);
    CHECK(pm_seq_first_index(series.get()) == 0);
    CHECK(pm_seq_length(series.get()) == 14);
    CHECK(pm_seq_term(series.get(), 14) == nullptr);

    pm_seq *exps = nullptr;
    REQUIRE(pm_prodmake(series.get(), PM_METHOD_BOTH, 0, &exps) == PM_OK);
    Seq a(exps);
    CHECK(pm_seq_first_index(a.get()) == 1);
    CHECK(terms(a.get())
          == std::vector<std::string>{"1", "1", "2", "3", "6", "9", "18", "30", "56", "99", "186", "335", "630"});

    pm_matches *m = nullptr;
    REQUIRE(pm_oeis_lookup(a.get(), 1, &m) == PM_OK);
    REQUIRE(pm_matches_count(m) >= 1);
    CHECK(std::string(pm_matches_id(m, 0)) == "A059966");
    CHECK(pm_matches_length(m, 0) == 13);
    CHECK(pm_matches_id(m, 99) == nullptr);
    pm_matches_free(m);
}

TEST_CASE("rational round trip")
{
    auto a = make_seq({"1/2", "-3", "0", "7/4"}, 1);
    pm_seq *r = nullptr;
    REQUIRE(pm_seriesmake(a.get(), PM_METHOD_BOTH, 0, &r) == PM_OK);
    Seq series(r);
    CHECK(terms(series.get())[1] == "1/2");
    pm_seq *back = nullptr;
    REQUIRE(pm_prodmake(series.get(), PM_METHOD_DIRECT, 0, &back) == PM_OK);
    Seq b(back);
    CHECK(terms(b.get()) == std::vector<std::string>{"1/2", "-3", "0", "7/4"});
}

TEST_CASE("families and q-analogue")
{
    pm_seq *raw = nullptr;
    REQUIRE(pm_family_exponents("overpartitions", 6, &raw) == PM_OK);
    Seq a(raw);
    CHECK(terms(a.get()) == std::vector<std::string>{"2", "1", "2", "1", "2", "1"});

    pm_seq *rq = nullptr;
    REQUIRE(pm_rq(a.get(), 2, 0, &rq) == PM_OK);
    Seq poly(rq);
    CHECK(terms(poly.get()) == std::vector<std::string>{"2", "1", "1"});

    int ok = 0;
    REQUIRE(pm_verify_theorem3(a.get(), 6, 0, &ok) == PM_OK);
    CHECK(ok == 1);

    REQUIRE(pm_family_series("plane", 5, &raw) == PM_OK);
    Seq plane(raw);
    CHECK(terms(plane.get()) == std::vector<std::string>{"1", "1", "3", "6", "13", "24"});
}

TEST_CASE("errors")
{
    pm_seq *out = nullptr;
    CHECK(pm_series_from_expr("1+*q", 5, &out) == PM_ERR_PARSE);
    CHECK(out == nullptr);
    CHECK(pm_last_error_position() == 2);
    CHECK(std::string(pm_last_error_message()).find("position 2") != std::string::npos);

    CHECK(pm_family_exponents("nosuch", 5, &out) == PM_ERR_INVALID_ARGUMENT);
    CHECK(pm_last_error_position() == -1);

    const char *bad[] = {"1", "x"};
    CHECK(pm_seq_from_strings(bad, 2, 0, &out) == PM_ERR_INVALID_ARGUMENT);
    CHECK(pm_seq_from_strings(nullptr, 2, 0, &out) == PM_ERR_INVALID_ARGUMENT);

    auto not_unit = make_seq({"2", "1", "1"}, 0);
    CHECK(pm_prodmake(not_unit.get(), PM_METHOD_BOTH, 0, &out) == PM_ERR_INVALID_ARGUMENT);

    auto big = make_seq(std::vector<std::string>(12, "1"), 0);
    CHECK(pm_prodmake(big.get(), PM_METHOD_DIRECT, 5, &out) == PM_ERR_RESOURCE_LIMIT);

    auto negative = make_seq({"-1"}, 1);
    int ok = 0;
    CHECK(pm_verify_theorem3(negative.get(), 1, 0, &ok) == PM_ERR_INVALID_ARGUMENT);
    CHECK(pm_prodmake(nullptr, PM_METHOD_BOTH, 0, &out) == PM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("command runner")
{
    pm_command_config cfg;
    pm_command_config_init(&cfg);
    cfg.command = "prodmake";
    cfg.expr = "1/(1-q-q^2)";
    cfg.order = 17;
    cfg.has_order = 1;
    cfg.oeis = 1;
    cfg.offline = 1;
    pm_report *rep = nullptr;
    REQUIRE(pm_run_command(&cfg, &rep) == PM_OK);
    CHECK(pm_report_exit_code(rep) == 0);
    const std::string out = pm_report_output(rep);
    CHECK(out.find("\"A006206\"") != std::string::npos);
    pm_report_free(rep);

    cfg.expr = "1+";
    REQUIRE(pm_run_command(&cfg, &rep) != PM_OK);
    CHECK(pm_report_exit_code(rep) == 2);
    CHECK(std::string(pm_report_errors(rep)).find("position") != std::string::npos);
    pm_report_free(rep);
}
