#include "doctest.h"

#include <cmath>
#include <thread>
#include <vector>

#include "basel/error.hpp"
#include "basel/zeta_ladder.hpp"
#include "oracles.hpp"

using namespace basel::exact;
using namespace basel::zeta;

namespace {
const PiNumber kTwoPi = PiNumber::pi_power(1, Rational(2));
}

TEST_CASE("ladder starts at the constant pi")
{
    const LadderState s = ladder_init();
    CHECK(s.order == 1);
    CHECK(s.closed_form == PiPolynomial{PiNumber::pi()});
    CHECK(s.power_part == PiPolynomial{0, 1});
    CHECK(s.closed_form.degree() == 0);
    CHECK(mean_value(s.closed_form, PiNumber(), kTwoPi) == PiNumber::pi());
    CHECK(mean_value(s.power_part, PiNumber(), kTwoPi) == PiNumber::pi());
}

TEST_CASE("first step fixes gamma = -pi^2/3")
{
    const LadderState s2 = ladder_step(ladder_init());
    CHECK(s2.order == 2);
    CHECK(s2.closed_form == PiPolynomial{PiNumber::pi_power(2, Rational(-1, 3)), PiNumber::pi()});
    CHECK(s2.power_part == PiPolynomial{0, 0, PiNumber(Rational(1, 2))});
}

TEST_CASE("second step gives Q3 with Q3(0) = 0")
{
    const LadderState s3 = ladder_step(ladder_step(ladder_init()));
    const PiPolynomial expected{PiNumber(), PiNumber::pi_power(2, Rational(-1, 3)), PiNumber::pi_power(1, Rational(1, 2))};
    CHECK(s3.closed_form == expected);
    CHECK(evaluate(s3.closed_form, PiNumber()).is_zero());
}

TEST_CASE("every state satisfies the ladder invariants")
{
    LadderState s = ladder_init();
    for (unsigned k = 1; k <= 30; ++k) {
        CHECK(s.order == k);
        CHECK(s.closed_form.degree() <= static_cast<int>(k));
        CHECK(s.power_part.degree() == static_cast<int>(k));
        CHECK(s.power_part.coefficient(k) == PiNumber(Rational(1) / factorial(k)));
        CHECK(mean_value(s.closed_form, PiNumber(), kTwoPi) == mean_value(s.power_part, PiNumber(), kTwoPi));
        s = ladder_step(s);
    }
}

TEST_CASE("odd orders vanish at the origin, even orders are 2pi periodic")
{
    LadderCache cache;
    for (unsigned k = 1; k <= 14; ++k) {
        const LadderState odd = cache.state(2 * k + 1);
        CHECK(evaluate(odd.closed_form, PiNumber()).is_zero());
        const LadderState even = cache.state(2 * k);
        CHECK(evaluate(even.closed_form, kTwoPi) - evaluate(even.power_part, kTwoPi) ==
              evaluate(even.closed_form, PiNumber()) - evaluate(even.power_part, PiNumber()));
    }
}

TEST_CASE("exact zeta values")
{
    CHECK(zeta_even(2).value == PiNumber::pi_power(2, Rational(1, 6)));
    CHECK(zeta_even(4).value == PiNumber::pi_power(4, Rational(1, 90)));
    CHECK(zeta_even(6).value == PiNumber::pi_power(6, Rational(1, 945)));
    CHECK(zeta_even(8).value == PiNumber::pi_power(8, Rational(1, 9450)));
    CHECK(zeta_even(10).value == PiNumber::pi_power(10, Rational(1, 93555)));
    CHECK(std::fabs(zeta_even(8).to_double() - basel::testing::zeta_partial_sum(8, 1000)) < 1e-12);
}

TEST_CASE("bernoulli numbers and oracle")
{
    const auto b = bernoulli_numbers(12);
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[3] == Rational(0));
    CHECK(b[4] == Rational(-1, 30));
    CHECK(b[12] == Rational(-691, 2730));
    CHECK(bernoulli_oracle(2).value == PiNumber::pi_power(2, Rational(1, 6)));
    CHECK(bernoulli_oracle(6).value == PiNumber::pi_power(6, Rational(1, 945)));
    CHECK(bernoulli_oracle(10).value == PiNumber::pi_power(10, Rational(1, 93555)));
}

TEST_CASE("ladder equals the Bernoulli oracle up to 2k = 30")
{
    for (unsigned two_k = 2; two_k <= 30; two_k += 2) {
        const ZetaValue z = zeta_even(two_k);
        const ZetaValue b = bernoulli_oracle(two_k);
        CHECK(z.value == b.value);
        CHECK(z.value.is_monomial());
        CHECK(z.value.terms().begin()->first == two_k);
        CHECK(z.coefficient().sign() > 0);
    }
}

TEST_CASE("float sanity against direct summation")
{
    const std::int64_t terms = 1'000'000;
    CHECK(std::fabs(zeta_even(2).to_double() - basel::testing::zeta_partial_sum(2, terms)) < 1e-6);
    for (unsigned two_k = 4; two_k <= 16; two_k += 2)
        CHECK(std::fabs(zeta_even(two_k).to_double() - basel::testing::zeta_partial_sum(static_cast<int>(two_k), terms)) <
              1e-12);
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(zeta_even(0), basel::DomainError);
    CHECK_THROWS_AS(zeta_even(3), basel::DomainError);
    CHECK_THROWS_AS(bernoulli_oracle(7), basel::DomainError);
    LadderCache cache;
    CHECK_THROWS_AS(cache.state(0), basel::DomainError);
}

TEST_CASE("cache is consistent under concurrent use")
{
    LadderCache cache;
    std::vector<std::thread> threads;
    std::vector<PiNumber> results(8);
    for (unsigned t = 0; t < 8; ++t)
        threads.emplace_back([&, t] { results[t] = cache.zeta_even(2 * (t + 10)).value; });
    for (auto& th : threads)
        th.join();
    for (unsigned t = 0; t < 8; ++t)
        CHECK(results[t] == bernoulli_oracle(2 * (t + 10)).value);
}
