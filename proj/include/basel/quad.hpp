#pragma once

#include <cstddef>
#include <functional>

namespace basel::quad {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t panels_used = 0;
};

inline constexpr std::size_t kDefaultPanelBudget = 1'000'000;
inline constexpr double kDefaultTolerance = 1e-10;

using Integrand = std::function<double(double)>;

/// 15-point Kronrod / 7-point Gauss on a single panel [a, b]. error_estimate
/// is |K15 - G7|, floored at a few ulps of the integral of |f|.
QuadResult gauss_kronrod_panel(const Integrand& f, double a, double b);

/// Adaptive bisection of Gauss-Kronrod panels.
///
/// `osc_freq` is the highest angular frequency in the integrand (0 when
/// smooth); initial panels are no wider than 2pi / max(osc_freq, 1). Each
/// leaf panel must satisfy err <= tol * width / (b - a), so the summed
/// estimate never exceeds tol. Panels are refined depth-first, left to right,
/// and summed in that order, so identical inputs give bit-identical results.
///
/// Throws NumericalError (with the best value and estimate) if the panel
/// budget runs out, and DomainError unless a < b and tol > 0.
QuadResult integrate_adaptive(const Integrand& f, double a, double b, double tol,
                              double osc_freq = 0.0,
                              std::size_t max_panels = kDefaultPanelBudget);

/// sin(x)/x over [-(N+1/2)pi, (N+1/2)pi], integrated on the right half and
/// doubled.
QuadResult sinc_truncated(unsigned n, double tol = kDefaultTolerance);

/// sin(x)/x with the removable singularity filled in.
double sinc(double x);

} // namespace basel::quad
