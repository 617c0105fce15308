#pragma once

#include <cstdint>

#include "basel/quad.hpp"
#include "basel/sample_table.hpp"

namespace basel::kernels {

/// Truncation order N of the kernel sum_{|n|<=N} e^{inx}.
struct KernelSpec {
    std::uint32_t order = 0;

    double peak() const noexcept { return 2.0 * order + 1.0; }
    double frequency() const noexcept { return order + 0.5; }
};

/// Below this |x| the compact form defers to the sum form.
inline constexpr double kSingularityRadius = 1e-6;

/// 1 + 2 sum_{n=1}^{N} cos(nx) for |x| < pi, 0 otherwise. Even in x to the
/// last bit.
double dirichlet_sum(KernelSpec spec, double x);

/// sin((N+1/2)x) / sin(x/2). Throws DomainError for |x| >= pi.
double dirichlet_compact(KernelSpec spec, double x);

/// Compact form with the cutoff applied: 0 for |x| >= pi.
double dirichlet_kernel(KernelSpec spec, double x);

/// Uniform grid of `count` points over [xmin, xmax] within [-pi, pi];
/// columns x, sum, compact.
SampleTable kernel_samples(KernelSpec spec, std::size_t count, double xmin, double xmax);

/// Adaptive quadrature of the kernel over [-pi, pi]; should be 2pi.
quad::QuadResult kernel_normalization(KernelSpec spec, double tol);

} // namespace basel::kernels
