#pragma once

// Exact arithmetic for the antiderivative ladder: rationals over arbitrary
// precision integers, numbers of the form sum_j q_j pi^j, and polynomials in x
// whose coefficients are such numbers.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace basel::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Normalized fraction: denominator > 0 and gcd(|num|, den) = 1. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value); // NOLINT: implicit by intent, integers are rationals
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "n" when the denominator is 1, otherwise "n/d".
    std::string to_string() const;
    double to_double() const;

private:
    void normalize();

    BigInt num_ = 0;
    BigInt den_ = 1;
};

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

/// sum_j q_j pi^j over non-negative exponents j. No zero coefficient is stored.
class PiNumber {
public:
    using Terms = std::map<unsigned, Rational>;

    PiNumber() = default;
    PiNumber(Rational value); // NOLINT: a rational is the pi^0 term
    PiNumber(std::int64_t value) : PiNumber(Rational(value)) {} // NOLINT

    /// coefficient * pi^exponent
    static PiNumber pi_power(unsigned exponent, Rational coefficient = Rational(1));
    static PiNumber pi() { return pi_power(1); }

    const Terms& terms() const noexcept { return terms_; }
    Rational coefficient(unsigned exponent) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    PiNumber operator-() const;
    PiNumber& operator+=(const PiNumber& rhs);
    PiNumber& operator-=(const PiNumber& rhs);
    PiNumber& operator*=(const PiNumber& rhs);

    friend PiNumber operator+(PiNumber lhs, const PiNumber& rhs) { return lhs += rhs; }
    friend PiNumber operator-(PiNumber lhs, const PiNumber& rhs) { return lhs -= rhs; }
    friend PiNumber operator*(PiNumber lhs, const PiNumber& rhs) { return lhs *= rhs; }

    /// Exact division by a single-term divisor c*pi^m. Throws DomainError for
    /// zero or multi-term divisors, or when some exponent of *this is below m.
    PiNumber divided_by(const PiNumber& monomial) const;

    friend bool operator==(const PiNumber&, const PiNumber&) = default;

    /// Projection through a 50-digit pi constant.
    double to_double() const;

    /// e.g. "1/6 π^2", "-1/3 π^2 + 1", "0".
    std::string to_string() const;

private:
    explicit PiNumber(Terms terms) : terms_(std::move(terms)) {}
    void add_term(unsigned exponent, const Rational& coefficient);

    Terms terms_;
};

/// Polynomial in x with PiNumber coefficients, lowest power first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class PiPolynomial {
public:
    PiPolynomial() = default;
    explicit PiPolynomial(std::vector<PiNumber> coefficients);
    PiPolynomial(std::initializer_list<PiNumber> coefficients)
        : PiPolynomial(std::vector<PiNumber>(coefficients)) {}

    /// coefficient * x^degree
    static PiPolynomial monomial(unsigned degree, PiNumber coefficient);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const PiNumber> coefficients() const noexcept { return coeffs_; }
    PiNumber coefficient(unsigned power) const;

    PiPolynomial& operator+=(const PiPolynomial& rhs);
    PiPolynomial& operator-=(const PiPolynomial& rhs);
    PiPolynomial& operator*=(const PiNumber& scalar);

    friend PiPolynomial operator+(PiPolynomial lhs, const PiPolynomial& rhs) { return lhs += rhs; }
    friend PiPolynomial operator-(PiPolynomial lhs, const PiPolynomial& rhs) { return lhs -= rhs; }
    friend PiPolynomial operator*(PiPolynomial lhs, const PiNumber& rhs) { return lhs *= rhs; }

    friend bool operator==(const PiPolynomial&, const PiPolynomial&) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<PiNumber> coeffs_;
};

/// Antiderivative with zero constant term.
PiPolynomial antiderivative(const PiPolynomial& p);
PiPolynomial derivative(const PiPolynomial& p);

/// Exact Horner evaluation.
PiNumber evaluate(const PiPolynomial& p, const PiNumber& x);

PiNumber definite_integral(const PiPolynomial& p, const PiNumber& a, const PiNumber& b);

/// (1/(b-a)) * integral_a^b p. Throws DomainError when a == b, or when b-a
/// is not a single pi-graded term that divides the integral.
PiNumber mean_value(const PiPolynomial& p, const PiNumber& a, const PiNumber& b);

} // namespace basel::exact
