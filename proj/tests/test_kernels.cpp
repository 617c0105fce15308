#include "doctest.h"

#include <cmath>
#include <numbers>

#include "basel/error.hpp"
#include "basel/kernels.hpp"
#include "oracles.hpp"

using namespace basel::kernels;
using basel::SampleTable;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sum form")
{
    CHECK(dirichlet_sum({50}, 0.0) == 101.0);
    CHECK(dirichlet_sum({1}, kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));
    for (double x : {-3.0, -1.0, 0.25, 2.5})
        CHECK(dirichlet_sum({0}, x) == 1.0);
    CHECK(dirichlet_sum({5}, kPi) == 0.0);
    CHECK(dirichlet_sum({5}, -kPi) == 0.0);
    CHECK(dirichlet_sum({5}, 4.0) == 0.0);
    CHECK(std::fabs(dirichlet_sum({37}, 0.731) - basel::testing::dirichlet_direct(37, 0.731)) < 1e-12);
}

TEST_CASE("compact form")
{
    CHECK(dirichlet_compact({1}, kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dirichlet_compact({50}, 0.0) == 101.0);
    CHECK(dirichlet_compact({50}, 1e-9) == doctest::Approx(101.0).epsilon(1e-14));
    const double direct = basel::testing::dirichlet_direct(50, 0.1);
    CHECK(std::fabs(dirichlet_compact({50}, 0.1) - direct) < 1e-11);
    CHECK(std::fabs(dirichlet_compact({50}, 0.1) - dirichlet_sum({50}, 0.1)) < 1e-11);
    CHECK_THROWS_AS(dirichlet_compact({3}, kPi), basel::DomainError);
    CHECK_THROWS_AS(dirichlet_compact({3}, -4.0), basel::DomainError);
    CHECK(dirichlet_kernel({3}, kPi) == 0.0);
}

TEST_CASE("symmetry is bit exact")
{
    for (std::uint32_t n : {1u, 50u, 10000u})
        for (int i = 1; i < 2000; ++i) {
            const double x = kPi * i / 2000.0;
            CHECK(dirichlet_sum({n}, x) == dirichlet_sum({n}, -x));
        }
}

TEST_CASE("sum and compact forms agree on a fine grid")
{
    for (std::uint32_t n : {0u, 1u, 7u, 50u, 100u}) {
        const KernelSpec spec{n};
        const double bound = 1e-10 * spec.peak();
        double worst = 0.0;
        for (int i = 1; i < 10000; ++i) {
            const double x = -kPi + 2.0 * kPi * i / 10000.0;
            if (std::fabs(x) < kSingularityRadius)
                continue;
            worst = std::max(worst, std::fabs(dirichlet_sum(spec, x) - dirichlet_compact(spec, x)));
        }
        CHECK(worst <= bound);
    }
}

TEST_CASE("kernel samples reproduce the delta_50 graph")
{
    const SampleTable t = kernel_samples({50}, 2001, -kPi, kPi);
    REQUIRE(t.size() == 2001);
    CHECK(t.column_names() == std::vector<std::string>{"x", "sum", "compact"});
    double peak = -1e300;
    double peak_x = 1.0;
    for (const auto& row : t.rows()) {
        if (row.values[0] > peak) {
            peak = row.values[0];
            peak_x = row.x;
        }
        CHECK(std::fabs(row.values[0] - row.values[1]) <= 1e-10);
    }
    CHECK(peak == 101.0);
    CHECK(peak_x == 0.0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& a = t.rows()[i];
        const auto& b = t.rows()[t.size() - 1 - i];
        CHECK(a.x == -b.x);
        CHECK(a.values[0] == b.values[0]);
    }
}

TEST_CASE("order zero samples are 1 inside the interval")
{
    const SampleTable t = kernel_samples({0}, 101, -kPi, kPi);
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        CHECK(t.rows()[i].values[0] == 1.0);
        CHECK(t.rows()[i].values[1] == 1.0);
    }
}

TEST_CASE("kernel sample errors")
{
    CHECK_THROWS_AS(kernel_samples({3}, 1, -1.0, 1.0), basel::DomainError);
    CHECK_THROWS_AS(kernel_samples({3}, 10, 1.0, -1.0), basel::DomainError);
    CHECK_THROWS_AS(kernel_samples({3}, 10, -4.0, 1.0), basel::DomainError);
}

TEST_CASE("normalization is 2pi for every order")
{
    CHECK(kernel_normalization({0}, 1e-10).value == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    for (std::uint32_t n : {0u, 1u, 5u, 7u, 10u, 50u, 100u}) {
        const auto r = kernel_normalization({n}, 1e-10);
        CHECK(std::fabs(r.value - 2.0 * kPi) <= 1e-9);
        CHECK(r.error_estimate <= 1e-10);
    }
}
