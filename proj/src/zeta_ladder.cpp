#include "basel/zeta_ladder.hpp"

#include <string>
#include <utility>

#include "basel/error.hpp"

namespace basel::zeta {

using exact::mean_value;
using exact::PiNumber;
using exact::PiPolynomial;
using exact::Rational;

namespace {

const PiNumber& period()
{
    static const PiNumber two_pi = PiNumber::pi_power(1, Rational(2));
    return two_pi;
}

void require_even(unsigned two_k)
{
    if (two_k < 2 || two_k % 2 != 0)
        throw DomainError("zeta_even requires an even argument >= 2, got " + std::to_string(two_k));
}

ZetaValue zeta_from_state(const LadderState& s)
{
    const unsigned k = s.order / 2;
    // Only the Fourier half survives at x = 0: (-1)^k * 2 * zeta(2k).
    PiNumber offset = exact::evaluate(s.closed_form, PiNumber()) - exact::evaluate(s.power_part, PiNumber());
    const Rational scale(k % 2 == 0 ? 1 : -1, 2);
    return ZetaValue{s.order, offset * PiNumber(scale)};
}

} // namespace

PiPolynomial power_part(unsigned order)
{
    return PiPolynomial::monomial(order, Rational(1) / exact::factorial(order));
}

LadderState ladder_init()
{
    return LadderState{1, PiPolynomial{PiNumber::pi()}, power_part(1)};
}

LadderState ladder_step(const LadderState& state)
{
    const unsigned next = state.order + 1;
    PiPolynomial q = exact::antiderivative(state.closed_form);
    PiPolynomial p = power_part(next);
    const PiNumber shift = mean_value(p, PiNumber(), period()) - mean_value(q, PiNumber(), period());
    q += PiPolynomial{shift};
    return LadderState{next, std::move(q), std::move(p)};
}

ZetaValue zeta_even(unsigned two_k)
{
    return LadderCache::shared().zeta_even(two_k);
}

std::vector<Rational> bernoulli_numbers(unsigned max_index)
{
    std::vector<Rational> b;
    b.reserve(max_index + 1);
    b.emplace_back(1);
    for (unsigned m = 1; m <= max_index; ++m) {
        Rational acc;
        for (unsigned j = 0; j < m; ++j)
            acc += exact::binomial(m + 1, j) * b[j];
        b.push_back(-acc / Rational(static_cast<std::int64_t>(m + 1)));
    }
    return b;
}

ZetaValue bernoulli_oracle(unsigned two_k)
{
    require_even(two_k);
    const unsigned k = two_k / 2;
    const Rational b = bernoulli_numbers(two_k).back();
    exact::BigInt two_pow = 1;
    two_pow <<= two_k;
    Rational c = b * Rational(std::move(two_pow), 1) / (Rational(2) * exact::factorial(two_k));
    if (k % 2 == 0)
        c = -c;
    return ZetaValue{two_k, PiNumber::pi_power(two_k, std::move(c))};
}

LadderCache::LadderCache()
{
    states_.push_back(ladder_init());
}

LadderState LadderCache::state(unsigned order)
{
    if (order == 0)
        throw DomainError("ladder order must be >= 1");
    std::lock_guard lock(mutex_);
    while (states_.size() < order)
        states_.push_back(ladder_step(states_.back()));
    return states_[order - 1];
}

ZetaValue LadderCache::zeta_even(unsigned two_k)
{
    require_even(two_k);
    return zeta_from_state(state(two_k));
}

LadderCache& LadderCache::shared()
{
    static LadderCache cache;
    return cache;
}

} // namespace basel::zeta
