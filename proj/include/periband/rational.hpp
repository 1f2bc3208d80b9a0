#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace periband {

// Exact rational with 64-bit parts, always normalized: den > 0, gcd(num, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator+(const Rational& o) const {
        const std::int64_t g = std::gcd(den_, o.den_);
        return Rational(num_ * (o.den_ / g) + o.num_ * (den_ / g), (den_ / g) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }

    bool operator==(const Rational& o) const = default;
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

    // "p/q", or "p" when q = 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace periband
