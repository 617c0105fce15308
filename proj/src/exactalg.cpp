#include "basel/exactalg.hpp"

#include <algorithm>
#include <utility>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "basel/constants.hpp"
#include "basel/error.hpp"

namespace basel::exact {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

const Decimal& decimal_pi()
{
    static const Decimal pi(kPiDigits);
    return pi;
}

Decimal to_decimal(const Rational& q)
{
    return Decimal(q.numerator()) / Decimal(q.denominator());
}

} // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    normalize();
}

void Rational::normalize()
{
    if (den_.is_zero())
        throw DomainError("rational with zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    const BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const
{
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw DomainError("rational division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    const BigInt l = lhs.num_ * rhs.den_;
    const BigInt r = rhs.num_ * lhs.den_;
    if (l < r)
        return std::strong_ordering::less;
    if (l > r)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const
{
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

double Rational::to_double() const
{
    return to_decimal(*this).convert_to<double>();
}

Rational factorial(unsigned n)
{
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return Rational(std::move(f), BigInt(1));
}

Rational binomial(unsigned n, unsigned k)
{
    if (k > n)
        return Rational(0);
    k = std::min(k, n - k);
    BigInt c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return Rational(std::move(c), BigInt(1));
}

// ---------------------------------------------------------------------------
// PiNumber

PiNumber::PiNumber(Rational value)
{
    if (!value.is_zero())
        terms_.emplace(0u, std::move(value));
}

PiNumber PiNumber::pi_power(unsigned exponent, Rational coefficient)
{
    Terms t;
    if (!coefficient.is_zero())
        t.emplace(exponent, std::move(coefficient));
    return PiNumber(std::move(t));
}

Rational PiNumber::coefficient(unsigned exponent) const
{
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PiNumber::add_term(unsigned exponent, const Rational& coefficient)
{
    if (coefficient.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PiNumber PiNumber::operator-() const
{
    PiNumber r = *this;
    for (auto& [j, q] : r.terms_)
        q = -q;
    return r;
}

PiNumber& PiNumber::operator+=(const PiNumber& rhs)
{
    for (const auto& [j, q] : rhs.terms_)
        add_term(j, q);
    return *this;
}

PiNumber& PiNumber::operator-=(const PiNumber& rhs)
{
    for (const auto& [j, q] : rhs.terms_)
        add_term(j, -q);
    return *this;
}

PiNumber& PiNumber::operator*=(const PiNumber& rhs)
{
    PiNumber product;
    for (const auto& [i, p] : terms_)
        for (const auto& [j, q] : rhs.terms_)
            product.add_term(i + j, p * q);
    *this = std::move(product);
    return *this;
}

PiNumber PiNumber::divided_by(const PiNumber& monomial) const
{
    if (!monomial.is_monomial())
        throw DomainError("PiNumber division requires a single-term nonzero divisor");
    const auto& [m, c] = *monomial.terms_.begin();
    PiNumber quotient;
    for (const auto& [j, q] : terms_) {
        if (j < m)
            throw DomainError("PiNumber division would produce a negative pi exponent");
        quotient.terms_.emplace(j - m, q / c);
    }
    return quotient;
}

double PiNumber::to_double() const
{
    Decimal sum = 0;
    for (const auto& [j, q] : terms_)
        sum += to_decimal(q) * boost::multiprecision::pow(decimal_pi(), static_cast<int>(j));
    return sum.convert_to<double>();
}

std::string PiNumber::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    // Highest pi power first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [j, q] = *it;
        Rational shown = q;
        if (!out.empty()) {
            out += q.sign() < 0 ? " - " : " + ";
            if (q.sign() < 0)
                shown = -q;
        }
        const std::string power = j == 0 ? "" : j == 1 ? "π" : "π^" + std::to_string(j);
        if (power.empty())
            out += shown.to_string();
        else if (shown == Rational(1))
            out += power;
        else if (shown == Rational(-1))
            out += "-" + power;
        else
            out += shown.to_string() + " " + power;
    }
    return out;
}

// ---------------------------------------------------------------------------
// PiPolynomial

PiPolynomial::PiPolynomial(std::vector<PiNumber> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

PiPolynomial PiPolynomial::monomial(unsigned degree, PiNumber coefficient)
{
    std::vector<PiNumber> c(degree + 1);
    c[degree] = std::move(coefficient);
    return PiPolynomial(std::move(c));
}

void PiPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

PiNumber PiPolynomial::coefficient(unsigned power) const
{
    return power < coeffs_.size() ? coeffs_[power] : PiNumber();
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

PiPolynomial& PiPolynomial::operator-=(const PiPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

PiPolynomial& PiPolynomial::operator*=(const PiNumber& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

std::string PiPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        std::string c = coeffs_[i].to_string();
        if (i > 0 && !coeffs_[i].is_monomial())
            c = "(" + c + ")";
        out += c;
        if (i == 1)
            out += " x";
        else if (i > 1)
            out += " x^" + std::to_string(i);
    }
    return out;
}

PiPolynomial antiderivative(const PiPolynomial& p)
{
    const auto c = p.coefficients();
    if (c.empty())
        return {};
    std::vector<PiNumber> out(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i + 1] = c[i] * PiNumber(Rational(1, static_cast<std::int64_t>(i + 1)));
    return PiPolynomial(std::move(out));
}

PiPolynomial derivative(const PiPolynomial& p)
{
    const auto c = p.coefficients();
    if (c.size() <= 1)
        return {};
    std::vector<PiNumber> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = c[i] * PiNumber(static_cast<std::int64_t>(i));
    return PiPolynomial(std::move(out));
}

PiNumber evaluate(const PiPolynomial& p, const PiNumber& x)
{
    const auto c = p.coefficients();
    PiNumber acc;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

PiNumber definite_integral(const PiPolynomial& p, const PiNumber& a, const PiNumber& b)
{
    const PiPolynomial F = antiderivative(p);
    return evaluate(F, b) - evaluate(F, a);
}

PiNumber mean_value(const PiPolynomial& p, const PiNumber& a, const PiNumber& b)
{
    const PiNumber width = b - a;
    if (width.is_zero())
        throw DomainError("mean value over a degenerate interval");
    return definite_integral(p, a, b).divided_by(width);
}

} // namespace basel::exact
