#include "basel/kernels.hpp"

#include <cmath>

#include "basel/constants.hpp"
#include "basel/error.hpp"
#include "basel/summation.hpp"

namespace basel::kernels {

double dirichlet_sum(KernelSpec spec, double x)
{
    if (!(std::fabs(x) < kPi))
        return 0.0;
    CompensatedSum acc;
    for (std::uint32_t n = 1; n <= spec.order; ++n)
        acc += std::cos(static_cast<double>(n) * x);
    return 1.0 + 2.0 * acc.value();
}

double dirichlet_compact(KernelSpec spec, double x)
{
    if (!(std::fabs(x) < kPi))
        throw DomainError("compact kernel form requires |x| < pi");
    if (std::fabs(x) < kSingularityRadius)
        return dirichlet_sum(spec, x);
    return std::sin(spec.frequency() * x) / std::sin(0.5 * x);
}

double dirichlet_kernel(KernelSpec spec, double x)
{
    if (!(std::fabs(x) < kPi))
        return 0.0;
    return dirichlet_compact(spec, x);
}

SampleTable kernel_samples(KernelSpec spec, std::size_t count, double xmin, double xmax)
{
    if (count < 2)
        throw DomainError("kernel_samples needs at least 2 points");
    if (!(xmin < xmax) || xmin < -kPi || xmax > kPi)
        throw DomainError("kernel_samples range must satisfy -pi <= xmin < xmax <= pi");

    SampleTable table({"x", "sum", "compact"});
    const double last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        // Interpolate from both ends so that a symmetric range yields an
        // exactly symmetric grid.
        const double t = static_cast<double>(i);
        double x = (xmin * (last - t) + xmax * t) / last;
        if (i == 0)
            x = xmin;
        else if (i + 1 == count)
            x = xmax;
        table.append(x, {dirichlet_sum(spec, x), dirichlet_kernel(spec, x)});
    }
    return table;
}

quad::QuadResult kernel_normalization(KernelSpec spec, double tol)
{
    return quad::integrate_adaptive([spec](double x) { return dirichlet_kernel(spec, x); }, -kPi, kPi, tol,
                                    spec.frequency());
}

} // namespace basel::kernels
