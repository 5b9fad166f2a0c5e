#include <prodmake/commands.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

#include <prodmake/error.hpp>
#include <prodmake/expr.hpp>
#include <prodmake/families.hpp>
#include <prodmake/oeis.hpp>
#include <prodmake/qseries.hpp>
#include <prodmake/series.hpp>

namespace prodmake::cli
{

namespace
{

using ordered_json = nlohmann::ordered_json;

class UsageError : public Error
{
public:
    using Error::Error;
};

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

// Rows of the report: index plus either a rational or a q-polynomial.
struct Row {
    std::size_t n;
    std::optional<Rational> value;
    std::optional<QPoly> poly;
};

struct Outcome {
    std::vector<Row> rows;
    std::vector<Check> checks;
    std::optional<std::vector<oeis::SequenceMatch>> matches;
    std::vector<std::string> notes;
};

std::vector<Rational> parse_rational_list(const std::string &text, const char *flag)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            out.push_back(Rational::parse(item));
        } catch (const InvalidArgument &e) {
            throw UsageError(std::string(flag) + ": " + e.what());
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::size_t resolve_order(const RunConfig &c, std::optional<std::size_t> list_default)
{
    const std::size_t order = c.order ? *c.order : list_default.value_or(kDefaultOrder);
    if (order < 1) {
        throw UsageError("--order must be at least 1");
    }
    return order;
}

void require_single_source(const RunConfig &c, bool allow_expr, bool allow_coeffs, bool allow_exps, bool allow_none)
{
    const int count = int(c.expr.has_value()) + int(c.coeffs.has_value()) + int(c.exps.has_value())
                      + int(c.family.has_value());
    if (count > 1) {
        throw UsageError("give exactly one of --expr, --coeffs, --exps, --family");
    }
    if (count == 0 && !allow_none) {
        throw UsageError("an input is required (--expr, --coeffs, --exps or --family)");
    }
    const auto name = std::string(command_name(c.command));
    if (c.expr && !allow_expr) {
        throw UsageError(name + " does not accept --expr");
    }
    if (c.coeffs && !allow_coeffs) {
        throw UsageError(name + " does not accept --coeffs");
    }
    if (c.exps && !allow_exps) {
        throw UsageError(name + " does not accept --exps");
    }
}

FamilySpec load_family(const std::string &spec)
{
    try {
        return family(spec);
    } catch (const InvalidArgument &e) {
        throw UsageError(std::string("--family: ") + e.what());
    }
}

TruncatedSeries input_series(const RunConfig &c, std::size_t &order)
{
    if (c.coeffs) {
        auto list = parse_rational_list(*c.coeffs, "--coeffs");
        if (list.size() < 2) {
            throw UsageError("--coeffs needs r(0) and at least r(1)");
        }
        order = resolve_order(c, list.size() - 1);
        if (list.size() < order + 1) {
            throw UsageError("--coeffs gives " + std::to_string(list.size()) + " terms but --order "
                             + std::to_string(order) + " needs " + std::to_string(order + 1));
        }
        list.resize(order + 1);
        return TruncatedSeries(std::move(list));
    }
    order = resolve_order(c, std::nullopt);
    if (c.expr) {
        try {
            return expand_expr(parse_expr(*c.expr), order);
        } catch (const ParseError &e) {
            throw UsageError(std::string("--expr: ") + e.what());
        } catch (const EvaluationError &e) {
            throw UsageError(std::string("--expr: ") + e.what());
        }
    }
    return family_series(load_family(*c.family), order);
}

ExponentSeq input_exponents(const RunConfig &c, std::size_t &order)
{
    if (c.exps) {
        auto list = parse_rational_list(*c.exps, "--exps");
        order = resolve_order(c, list.size());
        if (list.size() < order) {
            throw UsageError("--exps gives " + std::to_string(list.size()) + " terms but --order "
                             + std::to_string(order) + " needs " + std::to_string(order));
        }
        list.resize(order);
        return ExponentSeq(std::move(list));
    }
    order = resolve_order(c, std::nullopt);
    return family_exponents(load_family(*c.family), order);
}

template <typename Seq>
std::string first_difference(const Seq &x, const Seq &y, std::size_t first)
{
    for (std::size_t i = first; i < first + x.values().size(); ++i) {
        if (x[i] != y[i]) {
            return "first difference at n = " + std::to_string(i) + ": " + x[i].str() + " vs " + y[i].str();
        }
    }
    return {};
}

std::string first_difference_series(const TruncatedSeries &x, const TruncatedSeries &y)
{
    for (std::size_t i = 0; i <= std::min(x.order(), y.order()); ++i) {
        if (x[i] != y[i]) {
            return "first difference at n = " + std::to_string(i) + ": " + x[i].str() + " vs " + y[i].str();
        }
    }
    return {};
}

void attach_oeis(const RunConfig &c, const std::vector<Rational> &values, Outcome &out)
{
    if (!c.oeis) {
        return;
    }
    out.matches.emplace();
    if (!std::all_of(values.begin(), values.end(), [](const Rational &r) { return r.is_integer(); })) {
        out.notes.push_back("OEIS lookup skipped: the sequence has non-integer terms");
        return;
    }
    if (values.size() < oeis::kMinQueryTerms) {
        out.notes.push_back("OEIS lookup skipped: fewer than " + std::to_string(oeis::kMinQueryTerms) + " terms");
        return;
    }
    *out.matches = oeis::lookup(values, oeis::options_from_environment(c.offline ? oeis::Mode::offline
                                                                                   : oeis::Mode::online));
}

Outcome run_prodmake(const RunConfig &c, std::size_t &order)
{
    require_single_source(c, true, true, false, false);
    const auto r = input_series(c, order);
    if (r[0] != Rational(1)) {
        throw UsageError("the series must have constant term 1, got " + r[0].str());
    }
    Outcome out;
    ExponentSeq a(order);
    if (c.method == Method::both) {
        const auto direct = a_from_r_direct(r, c.max_partition_size);
        const auto recursive = a_from_r_recursive(r);
        const bool agree = direct == recursive;
        out.checks.push_back({"direct_vs_recursive", agree, agree ? "" : first_difference(direct, recursive, 1)});
        a = direct;
    } else {
        a = a_from_r(r, c.method, c.max_partition_size);
    }
    for (std::size_t n = 1; n <= order; ++n) {
        out.rows.push_back({n, a[n], std::nullopt});
    }
    attach_oeis(c, std::vector<Rational>(a.values().begin(), a.values().end()), out);
    return out;
}

Outcome run_seriesmake(const RunConfig &c, std::size_t &order)
{
    require_single_source(c, false, false, true, false);
    const auto a = input_exponents(c, order);
    Outcome out;
    TruncatedSeries r(order);
    if (c.method == Method::both) {
        const auto direct = r_from_a_direct(a, c.max_partition_size);
        const auto recursive = r_from_a_recursive(a);
        const bool agree = direct == recursive;
        out.checks.push_back({"direct_vs_recursive", agree, agree ? "" : first_difference_series(direct, recursive)});
        r = direct;
    } else {
        r = r_from_a(a, c.method, c.max_partition_size);
    }
    for (std::size_t n = 0; n <= order; ++n) {
        out.rows.push_back({n, r[n], std::nullopt});
    }
    attach_oeis(c, std::vector<Rational>(r.coeffs().begin(), r.coeffs().end()), out);
    return out;
}

Outcome run_qanalogue(const RunConfig &c, std::size_t &order)
{
    require_single_source(c, false, false, true, false);
    const auto a = input_exponents(c, order);
    try {
        nonnegative_integer_exponents(a);
    } catch (const InvalidArgument &e) {
        throw UsageError(e.what());
    }
    Outcome out;
    const auto product = product_side(a, order);
    const auto r = r_from_a_recursive(a);
    bool theorem_ok = true;
    bool limit_ok = true;
    std::string theorem_detail, limit_detail;
    for (std::size_t n = 0; n <= order; ++n) {
        auto poly = r_q(n, a, c.max_partition_size);
        if (theorem_ok && poly != product.zcoeffs[n]) {
            theorem_ok = false;
            theorem_detail = "z^" + std::to_string(n) + " coefficient differs";
        }
        if (limit_ok && poly.at_one() != r[n]) {
            limit_ok = false;
            limit_detail = "r_q(" + std::to_string(n) + ")(1) = " + poly.at_one().str() + " but r(n) = " + r[n].str();
        }
        out.rows.push_back({n, std::nullopt, std::move(poly)});
    }
    out.checks.push_back({"theorem3_product_identity", theorem_ok, theorem_detail});
    out.checks.push_back({"q_to_1_limit", limit_ok, limit_detail});
    return out;
}

// The identity battery for one family up to `order`.
void verify_family(const FamilySpec &f, std::size_t order, std::size_t guard, std::vector<Check> &checks)
{
    const std::string tag = f.label + ": ";
    const auto a = family_exponents(f, order);
    const auto r = family_series(f, order);

    {
        std::string detail;
        for (std::size_t n = 1; n <= order && detail.empty(); ++n) {
            if (!check_lemma(r, n, guard)) {
                detail = "fails at n = " + std::to_string(n);
            }
        }
        checks.push_back({tag + "lemma (n <= " + std::to_string(order) + ")", detail.empty(), detail});
    }
    {
        const auto direct = r_from_a_direct(a, guard);
        const auto recursive = r_from_a_recursive(a);
        checks.push_back({tag + "r_from_a direct == recursive", direct == recursive,
                          first_difference_series(direct, recursive)});
        checks.push_back({tag + "r_from_a == series", direct == r, first_difference_series(direct, r)});
    }
    {
        const auto direct = a_from_r_direct(r, guard);
        const auto recursive = a_from_r_recursive(r);
        checks.push_back({tag + "a_from_r direct == recursive", direct == recursive,
                          first_difference(direct, recursive, 1)});
        checks.push_back({tag + "a_from_r == exponents", direct == a, first_difference(direct, a, 1)});
    }
    {
        const auto b = log_coeffs_from_exponents(a);
        std::string detail;
        for (std::size_t d = 1; d <= order && detail.empty(); ++d) {
            if (log_sum_from_r(r, d, guard) != b[d]) {
                detail = "differs at d = " + std::to_string(d);
            }
        }
        checks.push_back({tag + "log_sum_from_r == log coefficients", detail.empty(), detail});
    }
    if (f.name == "compositions") {
        std::string detail;
        for (std::size_t d = 1; d <= order && detail.empty(); ++d) {
            BigInt target;
            mpz_ui_pow_ui(target.get_mpz_t(), 2, d);
            target -= 1;
            if (Rational(d) * log_sum_from_r(r, d, guard) != Rational(target)) {
                detail = "fails at d = " + std::to_string(d);
            }
        }
        checks.push_back({tag + "d*log_sum = 2^d - 1 (1 <= d <= " + std::to_string(order) + ")", detail.empty(),
                          detail});
    }
    if (f.name == "fibonacci" && order >= 3) {
        std::string detail;
        for (std::size_t d = 3; d <= order && detail.empty(); ++d) {
            if (Rational(d) * log_sum_from_r(r, d, guard) != Rational(lucas(d))) {
                detail = "fails at d = " + std::to_string(d);
            }
        }
        checks.push_back({tag + "d*log_sum = L_d (3 <= d <= " + std::to_string(order) + ")", detail.empty(), detail});
    }
    if (f.name == "overpartitions") {
        // sum over partitions of (m_1 + 1)(m_3 + 1)(m_5 + 1)...
        std::string detail;
        for (std::size_t n = 0; n <= order && detail.empty(); ++n) {
            BigInt total = 0;
            for_each_partition(n, guard, [&](const PartitionEnumerator &e) {
                BigInt term = 1;
                for (const auto &p : e.parts()) {
                    if (p.part % 2 == 1) {
                        term *= static_cast<unsigned long>(p.mult + 1);
                    }
                }
                total += term;
            });
            if (Rational(total) != r[n]) {
                detail = "differs at n = " + std::to_string(n);
            }
        }
        checks.push_back({tag + "sum (m_1+1)(m_3+1)... == series", detail.empty(), detail});
    }
    bool nonnegative_integer = true;
    for (const auto &v : a.values()) {
        nonnegative_integer = nonnegative_integer && v.is_integer() && v.sign() >= 0;
    }
    if (nonnegative_integer) {
        const std::size_t zorder = std::min<std::size_t>(order, 10);
        checks.push_back({tag + "theorem3 product identity (z-order " + std::to_string(zorder) + ")",
                          verify_theorem3(a, zorder, guard), ""});
    }
}

Outcome run_verify(const RunConfig &c, std::size_t &order)
{
    require_single_source(c, false, false, false, true);
    order = resolve_order(c, std::nullopt);
    if (order > c.max_partition_size) {
        throw UsageError("--order " + std::to_string(order) + " exceeds --max-partition-size "
                         + std::to_string(c.max_partition_size));
    }
    Outcome out;
    std::vector<FamilySpec> families;
    if (c.family) {
        families.push_back(load_family(*c.family));
    } else {
        families = builtin_families();
    }
    for (const auto &f : families) {
        verify_family(f, order, c.max_partition_size, out.checks);
    }
    return out;
}

std::string render_json(const RunConfig &c, std::size_t order, const Outcome &o)
{
    ordered_json doc;
    doc["command"] = std::string(command_name(c.command));
    doc["order"] = order;
    doc["values"] = ordered_json::array();
    for (const auto &row : o.rows) {
        ordered_json v;
        v["n"] = row.n;
        if (row.value) {
            v["value"] = row.value->str();
        } else {
            const auto coeffs = row.poly->coeffs();
            const std::size_t shown = c.q_terms == 0 ? coeffs.size() : std::min(c.q_terms, coeffs.size());
            ordered_json arr = ordered_json::array();
            for (std::size_t i = 0; i < shown; ++i) {
                arr.push_back(coeffs[i].str());
            }
            v["value"] = std::move(arr);
            v["degree"] = row.poly->degree();
        }
        doc["values"].push_back(std::move(v));
    }
    doc["checks"] = ordered_json::array();
    for (const auto &chk : o.checks) {
        doc["checks"].push_back({{"name", chk.name}, {"passed", chk.passed}, {"detail", chk.detail}});
    }
    if (o.matches) {
        doc["oeis"] = ordered_json::array();
        for (const auto &m : *o.matches) {
            doc["oeis"].push_back({{"id", m.oeis_id}, {"name", m.name}, {"matched", m.matched_prefix_length}});
        }
    }
    return doc.dump(2) + "\n";
}

std::string render_table(const RunConfig &c, std::size_t order, const Outcome &o)
{
    std::vector<std::string> index, value;
    for (const auto &row : o.rows) {
        index.push_back(std::to_string(row.n));
        value.push_back(row.value ? row.value->str() : row.poly->str(c.q_terms));
    }
    std::size_t wi = 1, wv = 5;
    for (std::size_t i = 0; i < index.size(); ++i) {
        wi = std::max(wi, index[i].size());
        wv = std::max(wv, value[i].size());
    }
    std::ostringstream os;
    os << command_name(c.command) << " (order " << order << ")\n";
    if (!o.rows.empty()) {
        os << std::string(wi - 1, ' ') << "n  " << std::string(wv - 5, ' ') << "value\n";
        for (std::size_t i = 0; i < index.size(); ++i) {
            os << std::string(wi - index[i].size(), ' ') << index[i] << "  " << std::string(wv - value[i].size(), ' ')
               << value[i] << "\n";
        }
    }
    if (!o.checks.empty()) {
        os << "checks:\n";
        for (const auto &chk : o.checks) {
            os << "  [" << (chk.passed ? "pass" : "FAIL") << "] " << chk.name;
            if (!chk.detail.empty()) {
                os << " (" << chk.detail << ")";
            }
            os << "\n";
        }
    }
    if (o.matches) {
        os << "oeis:\n";
        if (o.matches->empty()) {
            os << "  (no match)\n";
        }
        for (const auto &m : *o.matches) {
            os << "  " << m.oeis_id << " (" << m.matched_prefix_length << " terms) " << m.name << "\n";
        }
    }
    return os.str();
}

} // namespace

std::optional<Command> parse_command(std::string_view name)
{
    if (name == "prodmake") {
        return Command::prodmake;
    }
    if (name == "seriesmake") {
        return Command::seriesmake;
    }
    if (name == "qanalogue") {
        return Command::qanalogue;
    }
    if (name == "verify") {
        return Command::verify;
    }
    return std::nullopt;
}

std::optional<Method> parse_method(std::string_view name)
{
    if (name == "direct") {
        return Method::direct;
    }
    if (name == "recursive") {
        return Method::recursive;
    }
    if (name == "both") {
        return Method::both;
    }
    return std::nullopt;
}

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "json") {
        return Format::json;
    }
    if (name == "table") {
        return Format::table;
    }
    return std::nullopt;
}

std::string_view command_name(Command c)
{
    switch (c) {
    case Command::prodmake:
        return "prodmake";
    case Command::seriesmake:
        return "seriesmake";
    case Command::qanalogue:
        return "qanalogue";
    case Command::verify:
        return "verify";
    }
    return "?";
}

Report run(const RunConfig &config)
{
    Report report;
    std::size_t order = 0;
    Outcome outcome;
    try {
        switch (config.command) {
        case Command::prodmake:
            outcome = run_prodmake(config, order);
            break;
        case Command::seriesmake:
            outcome = run_seriesmake(config, order);
            break;
        case Command::qanalogue:
            outcome = run_qanalogue(config, order);
            break;
        case Command::verify:
            outcome = run_verify(config, order);
            break;
        }
    } catch (const NetworkError &e) {
        report.exit_code = kExitNetwork;
        report.err = std::string("error: ") + e.what() + "\n";
        return report;
    } catch (const CrossCheckError &e) {
        report.exit_code = kExitMismatch;
        report.err = std::string("error: ") + e.what() + "\n";
        return report;
    } catch (const Error &e) {
        report.exit_code = kExitUsage;
        report.err = std::string("error: ") + e.what() + "\n";
        return report;
    } catch (const std::exception &e) {
        report.exit_code = kExitUsage;
        report.err = std::string("error: ") + e.what() + "\n";
        return report;
    }

    report.out = config.format == Format::json ? render_json(config, order, outcome)
                                               : render_table(config, order, outcome);
    for (const auto &note : outcome.notes) {
        report.err += "note: " + note + "\n";
    }
    for (const auto &chk : outcome.checks) {
        if (!chk.passed) {
            report.exit_code = kExitMismatch;
            report.err += "failed: " + chk.name + (chk.detail.empty() ? "" : " (" + chk.detail + ")") + "\n";
        }
    }
    return report;
}

} // namespace prodmake::cli
