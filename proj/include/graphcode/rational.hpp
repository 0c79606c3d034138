#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "graphcode/errors.hpp"

namespace graphcode {

/// Exact rational on 64-bit integers, always normalized (gcd 1, positive
/// denominator). Rates and capacity bounds differ by as little as 1/n, so
/// comparisons must never go through floating point.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw parameter_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static Rational from_int(std::int64_t v) { return Rational(v, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        // Cross-multiply in 128 bits; operands here never get near overflow
        // but the comparison must stay exact regardless.
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "num/den", e.g. "15/19"; integers render with denominator 1 as "k/1".
    std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    std::int64_t num_;
    std::int64_t den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.to_string();
}

} // namespace graphcode
