#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace fbc {

/// Exact rational over long long, always normalized (den > 0, gcd = 1).
/// Magnitudes here stay tiny (criterion values over small level profiles),
/// so no big-integer backing is needed.
class Rational {
  public:
    Rational() = default;
    Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return {x.num_ * y.num_, x.den_ * y.den_};
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return {x.num_ * y.den_, x.den_ * y.num_};
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator<(const Rational& x, const Rational& y) {
        return static_cast<__int128>(x.num_) * y.den_ < static_cast<__int128>(y.num_) * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace fbc
