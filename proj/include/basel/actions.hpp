#pragma once

#include <cstdint>

#include "basel/quad.hpp"
#include "basel/testfn.hpp"

namespace basel::actions {

/// Order cap for every Fourier partial sum.
inline constexpr std::uint64_t kMaxPartialSumOrder = 10'000'000;

struct ConvergenceRow {
    std::uint64_t order;
    double value;
    double reference;
    double abs_error;
};

ConvergenceRow make_row(std::uint64_t order, double value, double reference);

/// Real part of integral e^{inx} phi(x) dx over the support, i.e. the cosine
/// moment. The sine moment is returned by fourier_sine_moment.
double fourier_cosine_moment(const testfn::TestFunction& phi, std::uint64_t n, double tol);
double fourier_sine_moment(const testfn::TestFunction& phi, std::uint64_t n, double tol);

/// sum_{n=-N}^{N} integral e^{inx} phi(x) dx = c_0 + 2 sum_{n>=1} Re c_n.
double delta0_partial_action(const testfn::TestFunction& phi, std::uint64_t n, double tol);

/// 2pi * sum of phi(2 pi n) over the lattice points inside the support.
double delta0_comb_action(const testfn::TestFunction& phi);

/// integral of delta_N(x) phi(x) over [-pi, pi] cut to the support of phi.
double deltaN_action(const testfn::TestFunction& phi, std::uint64_t n, double tol);

/// The same action through 2 * integral sin((N+1/2)x)/x * phi~(x) dx over
/// [-pi, pi], with phi~ = beta * sigma * phi.
double deltaN_action_sinc_form(const testfn::TestFunction& phi, std::uint64_t n, double tol);

/// x + 2 sum_{n=1}^{N} sin(nx)/n. Odd in x to the last bit.
double fourier_partial_delta1(std::uint64_t n, double x);

/// x^2/2 - 2 sum_{n=1}^{N} cos(nx)/n^2.
double fourier_partial_delta2(std::uint64_t n, double x);

/// pi (floor(x/2pi) + ceil(x/2pi)).
double delta1_closed(double x);

/// pi x (floor + ceil) - 2 pi^2 floor * ceil - pi^2/3, with floor/ceil of x/2pi.
double delta2_closed(double x);

} // namespace basel::actions
