#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace mixbound {

// Exact rational, used for the velocity decay rate nu so that the nu == 1
// regime boundary is dispatched by integer comparison instead of a floating
// test.  Always stored with positive denominator, reduced.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_one() const { return num == 1 && den == 1; }
    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Parses "p/q" or a bare integer.  Decimal notation is rejected so regime
// boundaries stay exact.
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&]() {
        throw std::invalid_argument("expected a rational 'p/q' or integer, got '" + text +
                                    "'");
    };
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            long long n = std::stoll(text, &used);
            if (used != text.size()) bad();
            return Rational(n, 1);
        }
        std::size_t used_n = 0, used_d = 0;
        long long n = std::stoll(text.substr(0, slash), &used_n);
        long long d = std::stoll(text.substr(slash + 1), &used_d);
        if (used_n != slash || used_d != text.size() - slash - 1) bad();
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        bad();
    } catch (const std::out_of_range&) {
        bad();
    }
    return Rational();  // unreachable
}

}  // namespace mixbound
