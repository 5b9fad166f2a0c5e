// Command-line front end; talks to the library only through the C API.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <prodmake/prodmake.h>

namespace
{

constexpr const char *kGrammar = R"(Series expressions (--expr) are rational functions in q:
  expr   := term (('+' | '-') term)*
  term   := factor (('*' | '/') factor)*
  factor := base ('^' '-'? uint)?
  base   := uint | 'q' | '(' expr ')' | '-' base
Whitespace is ignored; write 2*q, not 2q. Unary minus belongs to base, so
-q^2 is (-q)^2. Negative powers invert first: (1-q)^-2.

Families (--family): partitions, overpartitions, plane, compositions,
fibonacci, kcolor:K, broken_diamond:K, subset:1,4,7, subset:mod5=1,4.

Exit codes: 0 ok, 2 usage/validation, 3 cross-check failure, 4 network.
Environment: PRODMAKE_OEIS_CACHE (response cache directory),
PRODMAKE_OEIS_URL (server, default https://oeis.org),
PRODMAKE_OEIS_FIXTURES (extra offline fixture file).)";

struct Options {
    std::string expr, coeffs, exps, family;
    std::size_t order = 0;
    std::string method = "both";
    std::string format = "json";
    bool offline = false;
    bool oeis = false;
    std::size_t max_partition_size = pm_default_partition_guard();
    std::size_t q_terms = 0;
};

void add_common(CLI::App *sub, Options &o, bool series_input)
{
    if (series_input) {
        sub->add_option("--expr", o.expr, "Series as a rational function in q, e.g. \"1/(1-q-q^2)\"");
        sub->add_option("--coeffs", o.coeffs, "Comma-separated r(0),r(1),...; rationals as p or p/q");
    } else {
        sub->add_option("--exps", o.exps, "Comma-separated exponents a_1,a_2,...");
    }
    sub->add_option("--family", o.family, "Named family NAME[:PARAMS]");
    sub->add_option("--order", o.order, "Truncation order N (default 20, or the list length)");
    sub->add_option("--method", o.method, "direct | recursive | both")
        ->check(CLI::IsMember({"direct", "recursive", "both"}));
    sub->add_option("--format", o.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--max-partition-size", o.max_partition_size, "Largest n the partition sums may enumerate");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Convert between power series and infinite products prod (1-q^n)^(-a_n)."};
    app.footer(kGrammar);
    app.require_subcommand(1);

    Options o;
    auto *prod = app.add_subcommand("prodmake", "Series coefficients -> product exponents a_n");
    add_common(prod, o, true);
    prod->add_flag("--oeis", o.oeis, "Look the exponent sequence up in the OEIS");
    prod->add_flag("--offline", o.offline, "Use bundled fixtures and the cache only");

    auto *ser = app.add_subcommand("seriesmake", "Product exponents -> series coefficients r(n)");
    add_common(ser, o, false);
    ser->add_flag("--oeis", o.oeis, "Look the coefficient sequence up in the OEIS");
    ser->add_flag("--offline", o.offline, "Use bundled fixtures and the cache only");

    auto *qan = app.add_subcommand("qanalogue", "q-analogue r_q(n) and the bivariate product identity");
    add_common(qan, o, false);
    qan->add_option("--q-terms", o.q_terms, "Show at most this many terms per polynomial (0 = all)");

    auto *ver = app.add_subcommand("verify", "Run the identity battery");
    ver->add_option("--family", o.family, "Restrict to one family");
    ver->add_option("--order", o.order, "Largest n checked (default 20)");
    ver->add_option("--format", o.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    ver->add_option("--max-partition-size", o.max_partition_size, "Largest n the partition sums may enumerate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    pm_command_config config;
    pm_command_config_init(&config);
    const auto *sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    config.command = command.c_str();
    if (sub->count("--order") > 0) {
        config.order = o.order;
        config.has_order = 1;
    }
    auto set_if = [&](const char *flag, const std::string &value, const char *&field) {
        if (sub->get_option_no_throw(flag) != nullptr && sub->count(flag) > 0) {
            field = value.c_str();
        }
    };
    set_if("--expr", o.expr, config.expr);
    set_if("--coeffs", o.coeffs, config.coeffs);
    set_if("--exps", o.exps, config.exps);
    set_if("--family", o.family, config.family);
    config.method = o.method == "direct" ? PM_METHOD_DIRECT : o.method == "recursive" ? PM_METHOD_RECURSIVE
                                                                                       : PM_METHOD_BOTH;
    config.format = o.format == "table" ? PM_FORMAT_TABLE : PM_FORMAT_JSON;
    config.offline = o.offline ? 1 : 0;
    config.oeis = o.oeis ? 1 : 0;
    config.max_partition_size = o.max_partition_size;
    config.q_terms = o.q_terms;

    pm_report *report = nullptr;
    pm_run_command(&config, &report);
    if (report == nullptr) {
        std::cerr << "error: " << pm_last_error_message() << "\n";
        return 2;
    }
    std::fputs(pm_report_output(report), stdout);
    std::fputs(pm_report_errors(report), stderr);
    const int code = pm_report_exit_code(report);
    pm_report_free(report);
    return code;
}
