// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "basel/actions.hpp"
#include "basel/basel.h"
#include "basel/exactalg.hpp"
#include "basel/kernels.hpp"
#include "basel/quad.hpp"
#include "basel/testfn.hpp"
#include "basel/zeta_ladder.hpp"

namespace {

using basel::exact::PiNumber;
using basel::exact::Rational;
constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<Outcome()> check;
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome exact_basel()
{
    const auto z = basel::zeta::zeta_even(2);
    const bool ok = z.value == PiNumber::pi_power(2, Rational(1, 6)) && z.coefficient().numerator() == 1 &&
                    z.coefficient().denominator() == 6;
    return {ok, "zeta(2) = " + z.value.to_string()};
}

Outcome exact_higher()
{
    const auto z4 = basel::zeta::zeta_even(4);
    const auto z6 = basel::zeta::zeta_even(6);
    const bool ok = z4.value == PiNumber::pi_power(4, Rational(1, 90)) &&
                    z6.value == PiNumber::pi_power(6, Rational(1, 945));
    return {ok, "zeta(4) = " + z4.value.to_string() + ", zeta(6) = " + z6.value.to_string()};
}

Outcome oracle_equivalence()
{
    int mismatches = 0;
    for (unsigned two_k = 2; two_k <= 30; two_k += 2) {
        const auto a = basel::zeta::zeta_even(two_k);
        const auto b = basel::zeta::bernoulli_oracle(two_k);
        if (!(a.value == b.value) || a.coefficient().numerator() != b.coefficient().numerator() ||
            a.coefficient().denominator() != b.coefficient().denominator())
            ++mismatches;
    }
    return {mismatches == 0, "mismatches over 2k = 2..30: " + std::to_string(mismatches) +
                                 "; zeta(30) = " + basel::zeta::zeta_even(30).value.to_string()};
}

Outcome odd_order()
{
    basel::zeta::LadderCache cache;
    int nonzero = 0;
    for (unsigned k = 1; k <= 14; ++k)
        if (!basel::exact::evaluate(cache.state(2 * k + 1).closed_form, PiNumber()).is_zero())
            ++nonzero;
    return {nonzero == 0, "nonzero Q_{2k+1}(0) for k = 1..14: " + std::to_string(nonzero)};
}

Outcome kernel_normalization()
{
    double worst = 0.0;
    for (std::uint32_t n : {0u, 1u, 5u, 10u, 50u, 100u}) {
        const auto r = basel::kernels::kernel_normalization({n}, 1e-10);
        worst = std::max(worst, std::fabs(r.value - 2 * kPi));
    }
    return {worst <= 1e-9, "max |int delta_N - 2pi| = " + fmt("%.3e", worst) + " (limit 1e-9)"};
}

Outcome form_equivalence()
{
    const basel::kernels::KernelSpec spec{50};
    double worst = 0.0;
    int points = 0;
    for (int i = 1; i <= 10000; ++i) {
        const double x = -kPi + 2 * kPi * i / 10001.0;
        if (std::fabs(x) < basel::kernels::kSingularityRadius)
            continue;
        worst = std::max(worst, std::fabs(basel::kernels::dirichlet_sum(spec, x) - basel::kernels::dirichlet_compact(spec, x)));
        ++points;
    }
    const bool peak = basel::kernels::dirichlet_sum(spec, 0.0) == 101.0 && basel::kernels::dirichlet_compact(spec, 0.0) == 101.0;
    const double limit = 1e-10 * spec.peak();
    return {worst <= limit && peak && points == 10000,
            "max |sum - compact| = " + fmt("%.3e", worst) + " over " + std::to_string(points) +
                " points (limit " + fmt("%.3e", limit) + "), delta_50(0) = 101: " + (peak ? "yes" : "no")};
}

Outcome delta_sequence()
{
    const auto g = basel::testfn::gaussian_bump(0.0, 1.0);
    const double target = 2 * kPi * std::exp(-1.0);
    const double e50 = std::fabs(basel::actions::deltaN_action(g, 50, 1e-10) - target);
    const double e500 = std::fabs(basel::actions::deltaN_action(g, 500, 1e-10) - target);
    return {e500 < 1e-3 && e500 < e50,
            "error at N=50: " + fmt("%.3e", e50) + ", at N=500: " + fmt("%.3e", e500) + " (limit 1e-3)"};
}

Outcome comb_equivalence()
{
    const auto g = basel::testfn::gaussian_bump(0.0, 1.0);
    const double diff =
        std::fabs(basel::actions::delta0_partial_action(g, 200, 1e-10) - basel::actions::delta0_comb_action(g));
    return {diff < 1e-6, "|partial - comb| at N=200 = " + fmt("%.3e", diff) + " (limit 1e-6)"};
}

Outcome fourier_order2()
{
    bool ok = true;
    std::string detail;
    for (std::uint64_t n : {10u, 100u, 1000u}) {
        double worst = 0.0;
        for (int i = 0; i <= 4000; ++i) {
            const double x = -4 * kPi + 8 * kPi * i / 4000.0;
            worst = std::max(worst, std::fabs(basel::actions::fourier_partial_delta2(n, x) - basel::actions::delta2_closed(x)));
        }
        const double at0 = std::fabs(basel::actions::fourier_partial_delta2(n, 0.0) + kPi * kPi / 3);
        const double bound = 2.0 / static_cast<double>(n);
        ok = ok && worst <= bound && at0 <= bound;
        detail += "N=" + std::to_string(n) + ": sup " + fmt("%.3e", worst) + ", |D2(0)+pi^2/3| " + fmt("%.3e", at0) +
                  " (<= " + fmt("%.0e", bound) + "); ";
    }
    return {ok, detail};
}

Outcome fourier_order1()
{
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = 0.3 + (2 * kPi - 0.6) * i / 99.0;
        worst = std::max(worst, std::fabs(basel::actions::fourier_partial_delta1(100000, x) - kPi));
    }
    return {worst <= 1e-4, "max |D1_N(x) - pi| on [0.3, 2pi-0.3] = " + fmt("%.3e", worst) + " (limit 1e-4)"};
}

Outcome sinc_limit()
{
    bool ok = true;
    std::string detail;
    for (unsigned n : {1u, 2u, 5u, 10u, 50u}) {
        const double v = basel::quad::sinc_truncated(n, 1e-10).value;
        const double err = std::fabs(v - kPi);
        const double bound = 2.0 / ((n + 0.5) * kPi);
        // Truncating after a positive lobe (odd N) overshoots pi.
        const bool side = n % 2 == 1 ? v > kPi : v < kPi;
        ok = ok && side && err <= bound;
        detail += "N=" + std::to_string(n) + ": " + fmt("%+.3e", v - kPi) + "; ";
    }
    return {ok, detail};
}

Outcome figure_one()
{
    basel_table* table = nullptr;
    if (basel_table_kernel(50, 2001, -kPi, kPi, &table) != BASEL_OK)
        return {false, std::string("kernel table failed: ") + basel_last_error()};
    size_t needed = 0;
    basel_table_render(table, BASEL_FORMAT_CSV, nullptr, 0, &needed);
    std::string csv(needed + 1, '\0');
    const basel_status s = basel_table_render(table, BASEL_FORMAT_CSV, csv.data(), csv.size(), &needed);
    basel_table_destroy(table);
    if (s != BASEL_OK)
        return {false, "render failed"};
    csv.resize(needed);

    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    const bool header = line == "x,sum,compact";
    std::vector<std::array<double, 3>> rows;
    while (std::getline(in, line)) {
        std::array<double, 3> r{};
        std::istringstream ls(line);
        std::string cell;
        for (double& v : r) {
            std::getline(ls, cell, ',');
            v = std::stod(cell);
        }
        rows.push_back(r);
    }
    double peak = -1.0, peak_x = 1.0, worst = 0.0;
    bool symmetric = rows.size() == 2001;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][1] > peak) {
            peak = rows[i][1];
            peak_x = rows[i][0];
        }
        worst = std::max(worst, std::fabs(rows[i][1] - rows[i][2]));
        const auto& m = rows[rows.size() - 1 - i];
        symmetric = symmetric && m[0] == -rows[i][0] && m[1] == rows[i][1];
    }
    const bool ok = header && peak == 101.0 && peak_x == 0.0 && symmetric && worst <= 1e-10 * 101;
    return {ok, "rows " + std::to_string(rows.size()) + ", max " + fmt("%.17g", peak) + " at x = " + fmt("%g", peak_x) +
                    ", symmetric: " + (symmetric ? "yes" : "no") + ", max column gap " + fmt("%.3e", worst)};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "exact Basel result zeta(2) = pi^2/6", 1e-3, exact_basel},
        {2, "exact zeta(4) = pi^4/90, zeta(6) = pi^6/945", 1e-2, exact_higher},
        {3, "ladder equals Bernoulli oracle for 2k in [2, 30]", 1.0, oracle_equivalence},
        {4, "odd-order closed forms vanish at 0, k = 1..14", 1.0, odd_order},
        {5, "kernel normalization 2pi within 1e-9", 5.0, kernel_normalization},
        {6, "sum and compact kernel forms agree (N = 50)", 1.0, form_equivalence},
        {7, "delta sequence converges to 2 pi phi(0)", 30.0, delta_sequence},
        {8, "partial-sum action equals comb action (N = 200)", 30.0, comb_equivalence},
        {9, "order-2 Fourier sums within 2/N of closed form on [-4pi, 4pi]", 5.0, fourier_order2},
        {10, "order-1 Fourier sum plateau at pi (N = 1e5)", 5.0, fourier_order1},
        {11, "truncated sinc alternates around pi within 2/((N+1/2)pi)", 5.0, sinc_limit},
        {12, "kernel --n 50 table: peak 101 at 0, symmetric, forms agree", 5.0, figure_one},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed < c.time_limit_s;
        const bool pass = o.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("[%s] %2d %s | %s | %.4f s (limit %g s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.detail.c_str(), elapsed, c.time_limit_s, in_time ? "" : " TOO SLOW");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
