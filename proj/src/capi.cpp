#include <prodmake/prodmake.h>

#include <memory>
#include <new>
#include <string>
#include <vector>

#include <prodmake/commands.hpp>
#include <prodmake/convert.hpp>
#include <prodmake/error.hpp>
#include <prodmake/expr.hpp>
#include <prodmake/families.hpp>
#include <prodmake/oeis.hpp>
#include <prodmake/qseries.hpp>
#include <prodmake/series.hpp>

struct pm_seq {
    std::vector<prodmake::Rational> values;
    std::size_t first_index = 0;
    std::vector<std::string> text;
};

struct pm_report {
    prodmake::cli::Report report;
};

struct pm_matches {
    std::vector<prodmake::oeis::SequenceMatch> matches;
};

namespace
{

thread_local std::string last_error;
thread_local long last_error_position = -1;

void clear_error()
{
    last_error.clear();
    last_error_position = -1;
}

pm_status fail(pm_status status, const std::string &message)
{
    last_error = message;
    return status;
}

std::size_t guard_or_default(std::size_t guard)
{
    return guard == 0 ? prodmake::kDefaultPartitionGuard : guard;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
pm_status guarded(Fn &&fn)
{
    clear_error();
    try {
        fn();
        return PM_OK;
    } catch (const prodmake::ParseError &e) {
        last_error_position = static_cast<long>(e.position());
        return fail(PM_ERR_PARSE, e.what());
    } catch (const prodmake::EvaluationError &e) {
        return fail(PM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const prodmake::InvalidArgument &e) {
        return fail(PM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const prodmake::ResourceLimit &e) {
        return fail(PM_ERR_RESOURCE_LIMIT, e.what());
    } catch (const prodmake::CrossCheckError &e) {
        return fail(PM_ERR_CROSS_CHECK, e.what());
    } catch (const prodmake::NetworkError &e) {
        return fail(PM_ERR_NETWORK, e.what());
    } catch (const std::bad_alloc &) {
        return fail(PM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(PM_ERR_INTERNAL, e.what());
    }
}

pm_seq *make_seq(std::vector<prodmake::Rational> values, std::size_t first_index)
{
    auto seq = std::make_unique<pm_seq>();
    seq->values = std::move(values);
    seq->first_index = first_index;
    seq->text.reserve(seq->values.size());
    for (const auto &v : seq->values) {
        seq->text.push_back(v.str());
    }
    return seq.release();
}

template <typename Span>
std::vector<prodmake::Rational> to_vector(const Span &s)
{
    return {s.begin(), s.end()};
}

prodmake::Method to_method(pm_method m)
{
    switch (m) {
    case PM_METHOD_DIRECT:
        return prodmake::Method::direct;
    case PM_METHOD_RECURSIVE:
        return prodmake::Method::recursive;
    case PM_METHOD_BOTH:
        return prodmake::Method::both;
    }
    throw prodmake::InvalidArgument("unknown method");
}

prodmake::TruncatedSeries series_of(const pm_seq *seq)
{
    if (seq == nullptr || seq->first_index != 0) {
        throw prodmake::InvalidArgument("expected a series handle indexed from 0");
    }
    return prodmake::TruncatedSeries(seq->values);
}

prodmake::ExponentSeq exponents_of(const pm_seq *seq)
{
    if (seq == nullptr || seq->first_index != 1) {
        throw prodmake::InvalidArgument("expected an exponent handle indexed from 1");
    }
    if (seq->values.empty()) {
        throw prodmake::InvalidArgument("exponent sequence is empty");
    }
    return prodmake::ExponentSeq(seq->values);
}

void require_out(const void *out)
{
    if (out == nullptr) {
        throw prodmake::InvalidArgument("output pointer is NULL");
    }
}

} // namespace

extern "C" {

const char *pm_version(void)
{
    return "1.0.0";
}

const char *pm_status_string(pm_status status)
{
    switch (status) {
    case PM_OK:
        return "ok";
    case PM_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case PM_ERR_PARSE:
        return "parse error";
    case PM_ERR_RESOURCE_LIMIT:
        return "resource limit";
    case PM_ERR_CROSS_CHECK:
        return "cross-check failure";
    case PM_ERR_NETWORK:
        return "network failure";
    case PM_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *pm_last_error_message(void)
{
    return last_error.c_str();
}

long pm_last_error_position(void)
{
    return last_error_position;
}

size_t pm_default_partition_guard(void)
{
    return prodmake::kDefaultPartitionGuard;
}

pm_status pm_seq_from_strings(const char *const *terms, size_t count, size_t first_index, pm_seq **out)
{
    return guarded([&] {
        require_out(out);
        if (count > 0 && terms == nullptr) {
            throw prodmake::InvalidArgument("terms is NULL");
        }
        std::vector<prodmake::Rational> values;
        values.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (terms[i] == nullptr) {
                throw prodmake::InvalidArgument("term " + std::to_string(i) + " is NULL");
            }
            values.push_back(prodmake::Rational::parse(terms[i]));
        }
        *out = make_seq(std::move(values), first_index);
    });
}

pm_status pm_series_from_expr(const char *expr, size_t order, pm_seq **out)
{
    return guarded([&] {
        require_out(out);
        if (expr == nullptr) {
            throw prodmake::InvalidArgument("expr is NULL");
        }
        const auto s = prodmake::expand_expr(prodmake::parse_expr(expr), order);
        *out = make_seq(to_vector(s.coeffs()), 0);
    });
}

pm_status pm_family_exponents(const char *family, size_t order, pm_seq **out)
{
    return guarded([&] {
        require_out(out);
        if (family == nullptr) {
            throw prodmake::InvalidArgument("family is NULL");
        }
        const auto a = prodmake::family_exponents(prodmake::family(family), order);
        *out = make_seq(to_vector(a.values()), 1);
    });
}

pm_status pm_family_series(const char *family, size_t order, pm_seq **out)
{
    return guarded([&] {
        require_out(out);
        if (family == nullptr) {
            throw prodmake::InvalidArgument("family is NULL");
        }
        const auto s = prodmake::family_series(prodmake::family(family), order);
        *out = make_seq(to_vector(s.coeffs()), 0);
    });
}

size_t pm_seq_length(const pm_seq *seq)
{
    return seq == nullptr ? 0 : seq->values.size();
}

size_t pm_seq_first_index(const pm_seq *seq)
{
    return seq == nullptr ? 0 : seq->first_index;
}

const char *pm_seq_term(const pm_seq *seq, size_t i)
{
    if (seq == nullptr || i >= seq->text.size()) {
        return nullptr;
    }
    return seq->text[i].c_str();
}

void pm_seq_free(pm_seq *seq)
{
    delete seq;
}

pm_status pm_prodmake(const pm_seq *series, pm_method method, size_t partition_guard, pm_seq **out)
{
    return guarded([&] {
        require_out(out);
        const auto a = prodmake::a_from_r(series_of(series), to_method(method), guard_or_default(partition_guard));
        *out = make_seq(to_vector(a.values()), 1);
    });
}

pm_status pm_seriesmake(const pm_seq *exponents, pm_method method, size_t partition_guard, pm_seq **out)
{
    return guarded([&] {
        require_out(out);
        const auto r = prodmake::r_from_a(exponents_of(exponents), to_method(method), guard_or_default(partition_guard));
        *out = make_seq(to_vector(r.coeffs()), 0);
    });
}

pm_status pm_rq(const pm_seq *exponents, size_t n, size_t partition_guard, pm_seq **out)
{
    return guarded([&] {
        require_out(out);
        const auto p = prodmake::r_q(n, exponents_of(exponents), guard_or_default(partition_guard));
        *out = make_seq(to_vector(p.coeffs()), 0);
    });
}

pm_status pm_verify_theorem3(const pm_seq *exponents, size_t order, size_t partition_guard, int *verified)
{
    return guarded([&] {
        require_out(verified);
        *verified = prodmake::verify_theorem3(exponents_of(exponents), order, guard_or_default(partition_guard)) ? 1 : 0;
    });
}

pm_status pm_oeis_lookup(const pm_seq *terms, int offline, pm_matches **out)
{
    return guarded([&] {
        require_out(out);
        if (terms == nullptr) {
            throw prodmake::InvalidArgument("terms is NULL");
        }
        const auto options = prodmake::oeis::options_from_environment(offline ? prodmake::oeis::Mode::offline
                                                                              : prodmake::oeis::Mode::online);
        auto m = std::make_unique<pm_matches>();
        m->matches = prodmake::oeis::lookup(terms->values, options);
        *out = m.release();
    });
}

size_t pm_matches_count(const pm_matches *m)
{
    return m == nullptr ? 0 : m->matches.size();
}

const char *pm_matches_id(const pm_matches *m, size_t i)
{
    return (m == nullptr || i >= m->matches.size()) ? nullptr : m->matches[i].oeis_id.c_str();
}

const char *pm_matches_name(const pm_matches *m, size_t i)
{
    return (m == nullptr || i >= m->matches.size()) ? nullptr : m->matches[i].name.c_str();
}

size_t pm_matches_length(const pm_matches *m, size_t i)
{
    return (m == nullptr || i >= m->matches.size()) ? 0 : m->matches[i].matched_prefix_length;
}

void pm_matches_free(pm_matches *m)
{
    delete m;
}

void pm_command_config_init(pm_command_config *config)
{
    if (config == nullptr) {
        return;
    }
    *config = pm_command_config{};
    config->command = "prodmake";
    config->method = PM_METHOD_BOTH;
    config->format = PM_FORMAT_JSON;
    config->max_partition_size = prodmake::kDefaultPartitionGuard;
}

pm_status pm_run_command(const pm_command_config *config, pm_report **out)
{
    prodmake::cli::RunConfig rc;
    const pm_status status = guarded([&] {
        require_out(out);
        if (config == nullptr) {
            throw prodmake::InvalidArgument("config is NULL");
        }
        const auto command = prodmake::cli::parse_command(config->command ? config->command : "");
        if (!command) {
            throw prodmake::InvalidArgument(std::string("unknown command '") + (config->command ? config->command : "")
                                            + "'");
        }
        rc.command = *command;
        if (config->has_order) {
            rc.order = config->order;
        }
        if (config->expr) {
            rc.expr = config->expr;
        }
        if (config->coeffs) {
            rc.coeffs = config->coeffs;
        }
        if (config->exps) {
            rc.exps = config->exps;
        }
        if (config->family) {
            rc.family = config->family;
        }
        rc.method = to_method(config->method);
        rc.format = config->format == PM_FORMAT_TABLE ? prodmake::cli::Format::table : prodmake::cli::Format::json;
        rc.offline = config->offline != 0;
        rc.oeis = config->oeis != 0;
        rc.max_partition_size = config->max_partition_size;
        rc.q_terms = config->q_terms;
    });
    if (status != PM_OK) {
        if (out != nullptr) {
            auto r = std::make_unique<pm_report>();
            r->report.exit_code = prodmake::cli::kExitUsage;
            r->report.err = "error: " + last_error + "\n";
            *out = r.release();
        }
        return status;
    }

    auto r = std::unique_ptr<pm_report>(new (std::nothrow) pm_report);
    if (!r) {
        return fail(PM_ERR_INTERNAL, "out of memory");
    }
    r->report = prodmake::cli::run(rc);
    const int code = r->report.exit_code;
    if (code != prodmake::cli::kExitOk) {
        last_error = r->report.err;
    }
    *out = r.release();
    switch (code) {
    case prodmake::cli::kExitOk:
        return PM_OK;
    case prodmake::cli::kExitMismatch:
        return PM_ERR_CROSS_CHECK;
    case prodmake::cli::kExitNetwork:
        return PM_ERR_NETWORK;
    default:
        return PM_ERR_INVALID_ARGUMENT;
    }
}

int pm_report_exit_code(const pm_report *report)
{
    return report == nullptr ? prodmake::cli::kExitUsage : report->report.exit_code;
}

const char *pm_report_output(const pm_report *report)
{
    return report == nullptr ? "" : report->report.out.c_str();
}

const char *pm_report_errors(const pm_report *report)
{
    return report == nullptr ? "" : report->report.err.c_str();
}

void pm_report_free(pm_report *report)
{
    delete report;
}

} // extern "C"
