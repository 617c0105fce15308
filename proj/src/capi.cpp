#include "basel/basel.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "basel/actions.hpp"
#include "basel/error.hpp"
#include "basel/experiments.hpp"
#include "basel/kernels.hpp"
#include "basel/quad.hpp"
#include "basel/table.hpp"
#include "basel/testfn.hpp"
#include "basel/zeta_ladder.hpp"

struct basel_testfn {
    basel::testfn::TestFunction fn;
};

struct basel_table {
    basel::report::Table table;
};

namespace {

thread_local std::string last_error;

basel_status fail(basel_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
basel_status guarded(Body&& body) noexcept
{
    try {
        last_error.clear();
        body();
        return BASEL_OK;
    } catch (const basel::DomainError& e) {
        return fail(BASEL_ERR_DOMAIN, e.what());
    } catch (const basel::NumericalError& e) {
        return fail(BASEL_ERR_NUMERICAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(BASEL_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BASEL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BASEL_ERR_INTERNAL, "unknown exception");
    }
}

basel_status copy_text(const std::string& text, char* buffer, size_t capacity, size_t* needed)
{
    if (needed)
        *needed = text.size();
    if (buffer == nullptr || capacity < text.size() + 1)
        return fail(BASEL_ERR_BUFFER_TOO_SMALL,
                    "buffer of " + std::to_string(capacity) + " bytes cannot hold " + std::to_string(text.size() + 1));
    std::memcpy(buffer, text.data(), text.size());
    buffer[text.size()] = '\0';
    return BASEL_OK;
}

basel::report::Format to_format(basel_format format)
{
    switch (format) {
    case BASEL_FORMAT_CSV:
        return basel::report::Format::csv;
    case BASEL_FORMAT_JSON:
        return basel::report::Format::json;
    case BASEL_FORMAT_TEXT:
        return basel::report::Format::text;
    }
    throw basel::DomainError("unknown output format");
}

void wrap_table(basel::report::Table t, basel_table** out)
{
    *out = new basel_table{std::move(t)};
}

} // namespace

#define BASEL_REQUIRE(ptr)                                                                                           \
    do {                                                                                                             \
        if ((ptr) == nullptr)                                                                                        \
            return fail(BASEL_ERR_INVALID_ARGUMENT, #ptr " must not be NULL");                                       \
    } while (0)

extern "C" {

const char* basel_version(void)
{
    return "1.0.0";
}

const char* basel_status_string(basel_status status)
{
    switch (status) {
    case BASEL_OK:
        return "ok";
    case BASEL_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case BASEL_ERR_DOMAIN:
        return "domain error";
    case BASEL_ERR_NUMERICAL:
        return "numerical failure";
    case BASEL_ERR_BUFFER_TOO_SMALL:
        return "buffer too small";
    case BASEL_ERR_IO:
        return "i/o error";
    case BASEL_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* basel_last_error(void)
{
    return last_error.c_str();
}

basel_status basel_zeta_even_rational(unsigned two_k, int use_oracle, char* buffer, size_t capacity, size_t* needed)
{
    std::string text;
    const basel_status s = guarded([&] {
        const auto z = use_oracle ? basel::zeta::bernoulli_oracle(two_k) : basel::zeta::zeta_even(two_k);
        text = z.coefficient().to_string();
    });
    if (s != BASEL_OK)
        return s;
    return copy_text(text, buffer, capacity, needed);
}

basel_status basel_zeta_even_double(unsigned two_k, double* out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { *out = basel::zeta::zeta_even(two_k).to_double(); });
}

basel_status basel_dirichlet_sum(uint32_t n, double x, double* out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { *out = basel::kernels::dirichlet_sum({n}, x); });
}

basel_status basel_dirichlet_compact(uint32_t n, double x, double* out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { *out = basel::kernels::dirichlet_compact({n}, x); });
}

basel_status basel_kernel_normalization(uint32_t n, double tol, double* value, double* error_estimate)
{
    BASEL_REQUIRE(value);
    return guarded([&] {
        const auto r = basel::kernels::kernel_normalization({n}, tol);
        *value = r.value;
        if (error_estimate)
            *error_estimate = r.error_estimate;
    });
}

basel_status basel_sinc_truncated(unsigned n, double tol, double* value, double* error_estimate)
{
    BASEL_REQUIRE(value);
    return guarded([&] {
        const auto r = basel::quad::sinc_truncated(n, tol);
        *value = r.value;
        if (error_estimate)
            *error_estimate = r.error_estimate;
    });
}

basel_status basel_testfn_plateau(double inner, double outer, basel_testfn** out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { *out = new basel_testfn{basel::testfn::bump_plateau(inner, outer)}; });
}

basel_status basel_testfn_standard_plateau(basel_testfn** out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { *out = new basel_testfn{basel::testfn::standard_plateau()}; });
}

basel_status basel_testfn_gauss(double center, double radius, basel_testfn** out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { *out = new basel_testfn{basel::testfn::gaussian_bump(center, radius)}; });
}

basel_status basel_testfn_phi_tilde(const basel_testfn* phi, basel_testfn** out)
{
    BASEL_REQUIRE(phi);
    BASEL_REQUIRE(out);
    return guarded([&] { *out = new basel_testfn{basel::testfn::phi_tilde(phi->fn)}; });
}

basel_status basel_testfn_eval(const basel_testfn* fn, double x, double* out)
{
    BASEL_REQUIRE(fn);
    BASEL_REQUIRE(out);
    return guarded([&] { *out = fn->fn(x); });
}

basel_status basel_testfn_support(const basel_testfn* fn, double* lower, double* upper)
{
    BASEL_REQUIRE(fn);
    BASEL_REQUIRE(lower);
    BASEL_REQUIRE(upper);
    *lower = fn->fn.support().lower;
    *upper = fn->fn.support().upper;
    return BASEL_OK;
}

void basel_testfn_destroy(basel_testfn* fn)
{
    delete fn;
}

basel_status basel_sigma(double x, double* out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { *out = basel::testfn::sigma_eval(x); });
}

basel_status basel_delta0_partial_action(const basel_testfn* phi, uint64_t n, double tol, double* out)
{
    BASEL_REQUIRE(phi);
    BASEL_REQUIRE(out);
    return guarded([&] { *out = basel::actions::delta0_partial_action(phi->fn, n, tol); });
}

basel_status basel_delta0_comb_action(const basel_testfn* phi, double* out)
{
    BASEL_REQUIRE(phi);
    BASEL_REQUIRE(out);
    return guarded([&] { *out = basel::actions::delta0_comb_action(phi->fn); });
}

basel_status basel_deltaN_action(const basel_testfn* phi, uint64_t n, double tol, double* out)
{
    BASEL_REQUIRE(phi);
    BASEL_REQUIRE(out);
    return guarded([&] { *out = basel::actions::deltaN_action(phi->fn, n, tol); });
}

basel_status basel_fourier_partial_delta1(uint64_t n, double x, double* out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { *out = basel::actions::fourier_partial_delta1(n, x); });
}

basel_status basel_fourier_partial_delta2(uint64_t n, double x, double* out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { *out = basel::actions::fourier_partial_delta2(n, x); });
}

double basel_delta1_closed(double x)
{
    return basel::actions::delta1_closed(x);
}

double basel_delta2_closed(double x)
{
    return basel::actions::delta2_closed(x);
}

basel_status basel_table_zeta(unsigned max_k, int oracle, basel_table** out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { wrap_table(basel::experiments::zeta_table(max_k, oracle != 0), out); });
}

basel_status basel_table_kernel(uint32_t n, size_t samples, double xmin, double xmax, basel_table** out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { wrap_table(basel::experiments::kernel_table(n, samples, xmin, xmax), out); });
}

basel_status basel_table_action(const basel_testfn* phi, const uint64_t* orders, size_t count, double tol,
                                basel_table** out)
{
    BASEL_REQUIRE(phi);
    BASEL_REQUIRE(orders);
    BASEL_REQUIRE(out);
    return guarded([&] {
        const std::vector<std::uint64_t> list(orders, orders + count);
        wrap_table(basel::experiments::action_table(phi->fn, list, tol), out);
    });
}

basel_status basel_table_comb(const basel_testfn* phi, uint64_t n, double tol, basel_table** out)
{
    BASEL_REQUIRE(phi);
    BASEL_REQUIRE(out);
    return guarded([&] { wrap_table(basel::experiments::comb_table(phi->fn, n, tol), out); });
}

basel_status basel_table_fourier(unsigned order, uint64_t n, size_t samples, double xmin, double xmax,
                                 basel_table** out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { wrap_table(basel::experiments::fourier_table(order, n, samples, xmin, xmax), out); });
}

basel_status basel_table_sinc(unsigned n_max, double tol, basel_table** out)
{
    BASEL_REQUIRE(out);
    return guarded([&] { wrap_table(basel::experiments::sinc_table(n_max, tol), out); });
}

size_t basel_table_rows(const basel_table* table)
{
    return table ? table->table.rows().size() : 0;
}

size_t basel_table_columns(const basel_table* table)
{
    return table ? table->table.columns().size() : 0;
}

const char* basel_table_column_name(const basel_table* table, size_t column)
{
    if (!table || column >= table->table.columns().size())
        return nullptr;
    return table->table.columns()[column].c_str();
}

basel_status basel_table_cell_double(const basel_table* table, size_t row, size_t column, double* out)
{
    BASEL_REQUIRE(table);
    BASEL_REQUIRE(out);
    const auto& rows = table->table.rows();
    if (row >= rows.size() || column >= table->table.columns().size())
        return fail(BASEL_ERR_INVALID_ARGUMENT, "table cell index out of range");
    const auto& cell = rows[row][column];
    if (const auto* d = std::get_if<double>(&cell)) {
        *out = *d;
        return BASEL_OK;
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        *out = static_cast<double>(*i);
        return BASEL_OK;
    }
    return fail(BASEL_ERR_INVALID_ARGUMENT, "table cell is not numeric");
}

basel_status basel_table_cell_text(const basel_table* table, size_t row, size_t column, basel_format format,
                                   char* buffer, size_t capacity, size_t* needed)
{
    BASEL_REQUIRE(table);
    const auto& rows = table->table.rows();
    if (row >= rows.size() || column >= table->table.columns().size())
        return fail(BASEL_ERR_INVALID_ARGUMENT, "table cell index out of range");
    std::string text;
    const basel_status s = guarded([&] { text = basel::report::format_cell(rows[row][column], to_format(format)); });
    if (s != BASEL_OK)
        return s;
    return copy_text(text, buffer, capacity, needed);
}

basel_status basel_table_render(const basel_table* table, basel_format format, char* buffer, size_t capacity,
                                size_t* needed)
{
    BASEL_REQUIRE(table);
    std::string text;
    const basel_status s = guarded([&] { text = basel::report::render(table->table, to_format(format)); });
    if (s != BASEL_OK)
        return s;
    return copy_text(text, buffer, capacity, needed);
}

basel_status basel_table_write(const basel_table* table, basel_format format, const char* path)
{
    BASEL_REQUIRE(table);
    std::string text;
    const basel_status s = guarded([&] { text = basel::report::render(table->table, to_format(format)); });
    if (s != BASEL_OK)
        return s;
    if (path == nullptr) {
        if (std::fwrite(text.data(), 1, text.size(), stdout) != text.size() || std::fflush(stdout) != 0)
            return fail(BASEL_ERR_IO, "failed writing to standard output");
        return BASEL_OK;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        return fail(BASEL_ERR_IO, std::string("cannot open ") + path + " for writing");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    file.close();
    if (!file)
        return fail(BASEL_ERR_IO, std::string("failed writing ") + path);
    return BASEL_OK;
}

void basel_table_destroy(basel_table* table)
{
    delete table;
}

} // extern "C"
