#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace palf {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number.  Always stored gcd-reduced with denominator >= 1;
/// there is no floating point anywhere in this library because several
/// predicates hinge on a denominator being exactly zero.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Int n) : num_(std::move(n)), den_(1) {}
    Fraction(long long n) : num_(n), den_(1) {}
    Fraction(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::invalid_argument("Fraction: zero denominator");
        normalize();
    }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }

    /// 1/x.  The caller must rule out x = 0 first.
    Fraction reciprocal() const {
        if (is_zero()) throw std::domain_error("Fraction: reciprocal of zero");
        return Fraction(den_, num_);
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.is_zero()) throw std::domain_error("Fraction: division by zero");
        return Fraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    Fraction operator-() const {
        Fraction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

}  // namespace palf
