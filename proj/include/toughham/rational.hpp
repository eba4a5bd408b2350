#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace toughham {

// Exact rational p/q, always normalized: q > 0, gcd(|p|, q) = 1.
// Comparisons cross-multiply in 128 bits, so no overflow for anything this
// project produces (toughness ratios and degree bounds are bounded by n).
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    // Always "p/q", lowest terms, e.g. "1/1", "4/3", "-2/5".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

// Accepts "p" or "p/q" with optional sign on p.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t p = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument("");
            return Rational(p);
        }
        const std::int64_t p = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("");
        const std::string den = text.substr(slash + 1);
        const std::int64_t q = std::stoll(den, &used);
        if (used != den.size()) throw std::invalid_argument("");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    }
}

} // namespace toughham
