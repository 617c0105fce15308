#include "basel/experiments.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "basel/actions.hpp"
#include "basel/constants.hpp"
#include "basel/error.hpp"
#include "basel/kernels.hpp"
#include "basel/quad.hpp"
#include "basel/zeta_ladder.hpp"

namespace basel::experiments {

using report::Cell;
using report::Table;

namespace {

std::int64_t as_int(std::uint64_t v)
{
    return static_cast<std::int64_t>(v);
}

} // namespace

Table zeta_table(unsigned max_k, bool oracle)
{
    if (max_k < 1)
        throw DomainError("zeta table needs max_k >= 1");
    std::vector<std::string> columns{"two_k", "zeta", "value"};
    if (oracle)
        columns.emplace_back("bernoulli");
    Table t("zeta", std::move(columns));
    t.set_param("max_k", static_cast<std::int64_t>(max_k));
    t.set_param("oracle", oracle);

    for (unsigned k = 1; k <= max_k; ++k) {
        const unsigned two_k = 2 * k;
        const zeta::ZetaValue z = zeta::zeta_even(two_k);
        std::vector<Cell> row{static_cast<std::int64_t>(two_k), report::ExactValue{z.coefficient(), two_k},
                              z.to_double()};
        if (oracle) {
            const zeta::ZetaValue b = zeta::bernoulli_oracle(two_k);
            if (!(b.value == z.value))
                throw NumericalError("ladder and Bernoulli oracle disagree at 2k = " + std::to_string(two_k),
                                     z.to_double(), std::fabs(z.to_double() - b.to_double()));
            row.emplace_back(report::ExactValue{b.coefficient(), two_k});
        }
        t.add_row(std::move(row));
    }
    return t;
}

Table kernel_table(std::uint32_t n, std::size_t samples, double xmin, double xmax)
{
    Table t = report::from_samples("kernel", kernels::kernel_samples(kernels::KernelSpec{n}, samples, xmin, xmax));
    t.set_param("n", static_cast<std::int64_t>(n));
    t.set_param("samples", static_cast<std::int64_t>(samples));
    t.set_param("xmin", xmin);
    t.set_param("xmax", xmax);
    return t;
}

Table action_table(const testfn::TestFunction& phi, std::span<const std::uint64_t> orders, double tol)
{
    if (orders.empty())
        throw DomainError("action table needs at least one order");
    Table t("action", {"N", "value", "reference", "abs_error"});
    t.set_param("phi", phi.label());
    std::vector<std::int64_t> list;
    for (auto n : orders)
        list.push_back(as_int(n));
    t.set_param("n_list", list);
    t.set_param("tol", tol);

    const double reference = kTwoPi * phi(0.0);
    for (const auto n : orders) {
        const auto row = actions::make_row(n, actions::deltaN_action(phi, n, tol), reference);
        t.add_row({as_int(row.order), row.value, row.reference, row.abs_error});
    }
    return t;
}

Table comb_table(const testfn::TestFunction& phi, std::uint64_t n, double tol)
{
    Table t("comb", {"N", "partial", "comb", "abs_difference"});
    t.set_param("phi", phi.label());
    t.set_param("n", as_int(n));
    t.set_param("tol", tol);
    const double partial = actions::delta0_partial_action(phi, n, tol);
    const double comb = actions::delta0_comb_action(phi);
    t.add_row({as_int(n), partial, comb, std::fabs(partial - comb)});
    return t;
}

Table fourier_table(unsigned order, std::uint64_t n, std::size_t samples, double xmin, double xmax)
{
    if (order != 1 && order != 2)
        throw DomainError("fourier order must be 1 or 2");
    if (n < 1)
        throw DomainError("fourier partial sums need n >= 1");
    if (samples < 2)
        throw DomainError("fourier table needs at least 2 samples");
    if (!(xmin < xmax))
        throw DomainError("fourier table needs xmin < xmax");

    SampleTable samples_table({"x", "partial", "closed", "abs_error"});
    const double last = static_cast<double>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const double s = static_cast<double>(i);
        double x = (xmin * (last - s) + xmax * s) / last;
        if (i == 0)
            x = xmin;
        else if (i + 1 == samples)
            x = xmax;
        const double partial = order == 1 ? actions::fourier_partial_delta1(n, x) : actions::fourier_partial_delta2(n, x);
        const double closed = order == 1 ? actions::delta1_closed(x) : actions::delta2_closed(x);
        samples_table.append(x, {partial, closed, std::fabs(partial - closed)});
    }
    Table t = report::from_samples("fourier", samples_table);
    t.set_param("order", static_cast<std::int64_t>(order));
    t.set_param("n", as_int(n));
    t.set_param("samples", static_cast<std::int64_t>(samples));
    t.set_param("xmin", xmin);
    t.set_param("xmax", xmax);
    return t;
}

Table sinc_table(unsigned n_max, double tol)
{
    Table t("sinc", {"N", "value", "abs_error"});
    t.set_param("n_max", static_cast<std::int64_t>(n_max));
    t.set_param("tol", tol);
    for (unsigned n = 0; n <= n_max; ++n) {
        const double v = quad::sinc_truncated(n, tol).value;
        t.add_row({static_cast<std::int64_t>(n), v, std::fabs(v - kPi)});
    }
    return t;
}

} // namespace basel::experiments
