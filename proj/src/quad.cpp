#include "basel/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "basel/constants.hpp"
#include "basel/error.hpp"
#include "basel/summation.hpp"

namespace basel::quad {

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
};

// Below this width relative to the whole interval further bisection only
// chases roundoff.
constexpr double kMinRelativeWidth = 1e-13;

constexpr double kRoundoffFactor = 4.0;

} // namespace

QuadResult gauss_kronrod_panel(const Integrand& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double absolute = std::fabs(fc) * kWgk[7];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double left = f(center - dx);
        const double right = f(center + dx);
        kronrod += kWgk[j] * (left + right);
        absolute += kWgk[j] * (std::fabs(left) + std::fabs(right));
        // Odd indices are the embedded Gauss nodes.
        if (j % 2 == 1)
            gauss += kWg[j / 2] * (left + right);
    }
    kronrod *= half;
    gauss *= half;
    absolute *= half;
    // K15 and G7 can agree to the last bit; never report less than the
    // rounding error of the weighted sum itself.
    const double floor = kRoundoffFactor * std::numeric_limits<double>::epsilon() * absolute;
    return QuadResult{kronrod, std::max(std::fabs(kronrod - gauss), floor), 1};
}

QuadResult integrate_adaptive(const Integrand& f, double a, double b, double tol, double osc_freq,
                              std::size_t max_panels)
{
    if (!(a < b))
        throw DomainError("integrate_adaptive requires a < b");
    if (!(tol > 0.0))
        throw DomainError("integrate_adaptive requires tol > 0");
    if (osc_freq < 0.0)
        throw DomainError("integrate_adaptive requires osc_freq >= 0");

    const double length = b - a;
    const double max_width = std::min(length, kTwoPi / std::max(osc_freq, 1.0));
    const auto initial = static_cast<std::size_t>(std::ceil(length / max_width));
    if (initial > max_panels)
        throw NumericalError("initial panel count " + std::to_string(initial) + " exceeds budget", 0.0,
                             std::numeric_limits<double>::infinity());

    CompensatedSum value;
    CompensatedSum error;
    std::size_t evaluated = 0;
    std::size_t leaves = 0;

    // Stack holds pending panels; the right half is pushed first so the left
    // half is refined first and leaves are summed in left-to-right order.
    std::vector<Panel> stack;
    for (std::size_t i = initial; i-- > 0;) {
        const double pa = i == 0 ? a : a + length * static_cast<double>(i) / static_cast<double>(initial);
        const double pb = i + 1 == initial ? b : a + length * static_cast<double>(i + 1) / static_cast<double>(initial);
        stack.push_back(Panel{pa, pb});
    }

    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();

        const QuadResult r = gauss_kronrod_panel(f, p.a, p.b);
        ++evaluated;
        const double width = p.b - p.a;
        const double local_tol = tol * width / length;

        if (r.error_estimate <= local_tol || width <= kMinRelativeWidth * length) {
            value += r.value;
            error += r.error_estimate;
            ++leaves;
            continue;
        }
        if (evaluated + stack.size() + 2 > max_panels) {
            // Account for the unfinished work before giving up.
            value += r.value;
            error += r.error_estimate;
            for (const Panel& rest : stack) {
                const QuadResult rr = gauss_kronrod_panel(f, rest.a, rest.b);
                value += rr.value;
                error += rr.error_estimate;
            }
            throw NumericalError("integrate_adaptive: panel budget of " + std::to_string(max_panels) + " exhausted",
                                 value.value(), error.value());
        }
        const double mid = 0.5 * (p.a + p.b);
        stack.push_back(Panel{mid, p.b});
        stack.push_back(Panel{p.a, mid});
    }

    const QuadResult result{value.value(), error.value(), leaves};
    if (result.error_estimate > tol)
        throw NumericalError("integrate_adaptive: tolerance unreachable (roundoff floor)", result.value,
                             result.error_estimate);
    return result;
}

double sinc(double x)
{
    if (x == 0.0)
        return 1.0;
    return std::sin(x) / x;
}

QuadResult sinc_truncated(unsigned n, double tol)
{
    const double upper = (static_cast<double>(n) + 0.5) * kPi;
    QuadResult half = integrate_adaptive(sinc, 0.0, upper, 0.5 * tol, 1.0);
    half.value *= 2.0;
    half.error_estimate *= 2.0;
    return half;
}

} // namespace basel::quad
