#pragma once

#include <functional>
#include <string>

namespace basel::testfn {

struct Support {
    double lower;
    double upper;

    bool contains(double x) const noexcept { return lower <= x && x <= upper; }
    double width() const noexcept { return upper - lower; }
};

/// Smooth function with compact support. Evaluation returns exactly 0
/// outside the support regardless of what the wrapped evaluator does.
class TestFunction {
public:
    using Evaluator = std::function<double(double)>;

    TestFunction(Evaluator evaluator, Support support, std::string label);

    double operator()(double x) const { return support_.contains(x) ? evaluator_(x) : 0.0; }

    const Support& support() const noexcept { return support_; }
    const std::string& label() const noexcept { return label_; }

private:
    Evaluator evaluator_;
    Support support_;
    std::string label_;
};

/// exp(-1/t) for t > 0, else 0.
double smooth_ramp(double t);

/// Smooth step from 0 (t <= 0) to 1 (t >= 1).
double smooth_step(double t);

/// Equal to 1 on [-inner, inner], 0 outside (-outer, outer), with a smooth
/// monotone transition. Throws DomainError unless 0 < inner < outer.
TestFunction bump_plateau(double inner, double outer);

/// The plateau bump that is 1 on [-pi, pi] and vanishes beyond 3pi/2.
TestFunction standard_plateau();

/// exp(-1 / (1 - ((x - center)/radius)^2)) on the open support. Throws
/// DomainError unless radius > 0.
TestFunction gaussian_bump(double center, double radius);

/// Outer edge of the interval on which sigma is evaluated: 3pi/2.
double sigma_domain();

/// (x/2) / sin(x/2), with sigma(0) = 1. Throws DomainError for |x| > 3pi/2.
double sigma_eval(double x);

/// beta * sigma * phi with beta = standard_plateau(). Throws DomainError if
/// the support of phi leaves [-3pi/2, 3pi/2].
TestFunction phi_tilde(const TestFunction& phi);

} // namespace basel::testfn
