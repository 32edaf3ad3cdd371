#ifndef GODDARD_RATIONAL_HPP
#define GODDARD_RATIONAL_HPP

#include <iosfwd>
#include <string>
#include <boost/multiprecision/cpp_int.hpp>

#include "goddard/errors.hpp"

namespace goddard {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with arbitrary-precision parts. Invariants, enforced on
// every construction:
//   gcd(|num|, den) == 1, den >= 1, zero is 0/1, sign lives on the numerator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    // Canonical text form: "p/q", "/q" dropped when q == 1, zero is "0".
    std::string str() const;

    double to_double() const;

    Rational operator-() const;
    bool operator==(const Rational&) const = default;

private:
    BigInt num_;
    BigInt den_;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
std::ostream& operator<<(std::ostream& os, const Rational& r);

// C(n, k), exact; 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

// n!, exact.
BigInt factorial(unsigned n);

}  // namespace goddard

#endif
