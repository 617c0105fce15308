#include "basel/testfn.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "basel/constants.hpp"
#include "basel/error.hpp"

namespace basel::testfn {

namespace {

// Taylor coefficients of (x/2)/sin(x/2) in powers of x^2, through x^18:
// 1, 1/24, 7/5760, 31/967680, 127/154828800, 73/3503554560, ...
constexpr std::array<double, 10> kSigmaSeries = {
    1.0,
    4.1666666666666666667e-2,
    1.2152777777777777778e-3,
    3.2035383597883597884e-5,
    8.2026083002645502645e-7,
    2.0835982071876169098e-8,
    5.2816099677213371823e-10,
    1.3380902920268335488e-11,
    3.3895768514893210693e-13,
    8.5859965498229474248e-15,
};

constexpr double kSigmaSeriesRadius = 0.5;

std::string format_number(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

TestFunction::TestFunction(Evaluator evaluator, Support support, std::string label)
    : evaluator_(std::move(evaluator)), support_(support), label_(std::move(label))
{
    if (!(support_.lower <= support_.upper))
        throw DomainError("test function support must satisfy lower <= upper");
}

double smooth_ramp(double t)
{
    return t > 0.0 ? std::exp(-1.0 / t) : 0.0;
}

double smooth_step(double t)
{
    if (t <= 0.0)
        return 0.0;
    if (t >= 1.0)
        return 1.0;
    const double g = smooth_ramp(t);
    return g / (g + smooth_ramp(1.0 - t));
}

TestFunction bump_plateau(double inner, double outer)
{
    if (!(inner > 0.0) || !(outer > inner))
        throw DomainError("bump_plateau requires 0 < inner < outer");
    const double transition = outer - inner;
    auto eval = [inner, outer, transition](double x) {
        const double r = std::fabs(x);
        if (r <= inner)
            return 1.0;
        if (r >= outer)
            return 0.0;
        return smooth_step((outer - r) / transition);
    };
    return TestFunction(eval, Support{-outer, outer},
                        "plateau(inner=" + format_number(inner) + ",outer=" + format_number(outer) + ")");
}

TestFunction standard_plateau()
{
    return bump_plateau(kPi, sigma_domain());
}

TestFunction gaussian_bump(double center, double radius)
{
    if (!(radius > 0.0))
        throw DomainError("gaussian_bump requires radius > 0");
    auto eval = [center, radius](double x) {
        const double t = (x - center) / radius;
        const double s = 1.0 - t * t;
        return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
    };
    return TestFunction(eval, Support{center - radius, center + radius},
                        "gauss(center=" + format_number(center) + ",radius=" + format_number(radius) + ")");
}

double sigma_domain()
{
    return 1.5 * kPi;
}

double sigma_eval(double x)
{
    const double r = std::fabs(x);
    if (r > sigma_domain())
        throw DomainError("sigma is only defined for |x| <= 3pi/2");
    if (r >= kSigmaSeriesRadius) {
        const double half = 0.5 * x;
        return half / std::sin(half);
    }
    const double x2 = x * x;
    double acc = 0.0;
    for (auto it = kSigmaSeries.rbegin(); it != kSigmaSeries.rend(); ++it)
        acc = acc * x2 + *it;
    return acc;
}

TestFunction phi_tilde(const TestFunction& phi)
{
    const double edge = sigma_domain();
    const Support s = phi.support();
    if (s.lower < -edge || s.upper > edge)
        throw DomainError("phi_tilde requires support(phi) within [-3pi/2, 3pi/2]");
    const TestFunction beta = standard_plateau();
    auto eval = [beta, phi](double x) {
        const double b = beta(x);
        if (b == 0.0)
            return 0.0;
        return b * sigma_eval(x) * phi(x);
    };
    return TestFunction(eval, s, "tilde(" + phi.label() + ")");
}

} // namespace basel::testfn
