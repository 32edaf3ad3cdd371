#include "goddard/rational.hpp"

#include <ostream>
#include <utility>

namespace goddard {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw ZeroDenominatorError("rational denominator is zero");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
    // cpp_rational handles quotients whose parts individually overflow double.
    boost::multiprecision::cpp_rational q(num_, den_);
    return q.convert_to<double>();
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num() * b.num(), a.den() * b.den());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (n - k < k) {
        k = n - k;
    }
    // Multiplicative form; each division is exact because the running product
    // is C(n, i+1) * (i+1)! / (i+1)! at every step.
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

}  // namespace goddard
