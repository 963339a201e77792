#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyq {

// Exact scalars. Expression templates are off so the types behave like
// plain value types inside Eigen expressions and generic code.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.template convert_to<double>(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Exact q^e; negative exponents require q != 0.
inline Rational pow_rational(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("pow_rational: zero base, negative exponent");
        return Rational(1) / pow_rational(q, -e);
    }
    Rational result(1), base(q);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

inline BigInt pow_bigint(const BigInt& n, unsigned long e) {
    BigInt result(1), base(n);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

/// C(n, k) as an exact integer.
inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (unsigned long i = 1; i <= k; ++i) {
        result *= BigInt(n - k + i);
        result /= BigInt(i);  // exact at every step: result is C(n-k+i, i)
    }
    return result;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / std::gcd(a, b) * b;
}

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

/// Parses "p", "p/q", or "-p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) throw std::invalid_argument("");
            return Rational(BigInt(std::string(text)));
        }
        const std::string_view num = text.substr(0, slash);
        const std::string_view den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw std::invalid_argument("");
        const BigInt d{std::string(den)};
        if (d == 0) throw std::invalid_argument("");
        return Rational(BigInt(std::string(num))) / Rational(d);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");
    }
}

/// Resource ceilings (conductor bound, enumeration bound) raise this; the CLI
/// maps it to its own exit code, distinct from contract violations.
class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace cyq
