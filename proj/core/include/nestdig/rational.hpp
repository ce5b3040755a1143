#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nestdig {

// Exact rational number, always stored reduced with a positive denominator.
// All quantities produced by the interval construction have numerators and
// denominators bounded polynomially in n, so 64-bit components are ample;
// comparisons go through 128-bit cross multiplication anyway.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long value) : num_(value), den_(1) {}

    Rational(long long num, long long den) {
        if (den == 0)
            throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num_ = num;
        den_ = den;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

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
        if (b.num_ == 0)
            throw std::invalid_argument("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

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

    // Serialized form is always "num/den", reduced, positive denominator,
    // integers included ("3/1").
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Strict parser for the serialized form; rejects unreduced fractions,
    // zero or negative denominators, and any stray characters.
    static std::optional<Rational> parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos || slash == 0 || slash + 1 >= s.size())
            return std::nullopt;
        long long num, den;
        try {
            std::size_t used;
            num = std::stoll(std::string(s.substr(0, slash)), &used);
            if (used != slash)
                return std::nullopt;
            den = std::stoll(std::string(s.substr(slash + 1)), &used);
            if (used != s.size() - slash - 1)
                return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (den <= 0)
            return std::nullopt;
        if (std::gcd(num < 0 ? -num : num, den) != 1)
            return std::nullopt;
        Rational r;
        r.num_ = num;
        r.den_ = den;
        return r;
    }

private:
    long long num_;
    long long den_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace nestdig
