#pragma once

// Exact zeta(2k) from repeated antidifferentiation of the periodic delta comb
// on (0, 2pi). Only the closed-form polynomial half is tracked; the Fourier
// half of order m has zero mean over a period and is fixed by the sign rule
//   order 2k:   (-1)^k * 2 * sum cos(nx)/n^(2k)
//   order 2k+1: (-1)^k * 2 * sum sin(nx)/n^(2k+1)

#include <mutex>
#include <vector>

#include "basel/exactalg.hpp"

namespace basel::zeta {

/// Closed form Q of the order-k antiderivative on (0, 2pi) together with its
/// pure power part P = x^k / k!.
struct LadderState {
    unsigned order = 0;
    exact::PiPolynomial closed_form;
    exact::PiPolynomial power_part;
};

/// zeta(argument) = coefficient * pi^argument.
struct ZetaValue {
    unsigned argument = 0;
    exact::PiNumber value;

    exact::Rational coefficient() const { return value.coefficient(argument); }
    double to_double() const { return value.to_double(); }
};

/// x^k / k!
exact::PiPolynomial power_part(unsigned order);

/// Order 1: Q = pi, P = x.
LadderState ladder_init();

/// Antidifferentiate Q and choose the constant so that the mean of the new Q
/// over (0, 2pi) equals the mean of x^(k+1)/(k+1)!.
LadderState ladder_step(const LadderState& state);

/// Throws DomainError unless two_k is even and >= 2.
ZetaValue zeta_even(unsigned two_k);

/// Independent route: zeta(2k) = (-1)^(k+1) B_2k (2pi)^(2k) / (2 (2k)!).
ZetaValue bernoulli_oracle(unsigned two_k);

/// B_0 .. B_m from sum_{j=0}^{m} C(m+1, j) B_j = 0.
std::vector<exact::Rational> bernoulli_numbers(unsigned max_index);

/// Incrementally extended ladder. Thread safe; results are deterministic.
class LadderCache {
public:
    LadderCache();

    /// State of the given order (>= 1), extending the ladder as needed.
    LadderState state(unsigned order);
    ZetaValue zeta_even(unsigned two_k);

    /// Process-wide instance used by the free zeta_even().
    static LadderCache& shared();

private:
    std::mutex mutex_;
    std::vector<LadderState> states_; // states_[k-1] has order k
};

} // namespace basel::zeta
