#pragma once

#include "cyq/rational.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyq {

/// Conductors are capped so Phi_n stays computable at desk scale.
inline constexpr unsigned kMaxConductor = 10'000;

inline unsigned euler_totient(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

// Integer polynomials, ascending coefficient order.
using ZPoly = std::vector<BigInt>;

inline ZPoly zp_trim(ZPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// Exact quotient num / den; den must be monic and divide num exactly.
inline ZPoly zp_divide_exact(ZPoly num, const ZPoly& den) {
    num = zp_trim(std::move(num));
    if (den.empty() || den.back() != 1)
        throw std::invalid_argument("zp_divide_exact: divisor must be monic");
    if (num.empty()) return {};
    if (num.size() < den.size())
        throw std::invalid_argument("zp_divide_exact: inexact division");
    ZPoly quot(num.size() - den.size() + 1, BigInt(0));
    for (std::size_t e = num.size(); e-- > den.size() - 1;) {
        const BigInt c = num[e];
        if (c.is_zero()) continue;
        const std::size_t shift = e - (den.size() - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    for (const BigInt& c : num)
        if (!c.is_zero()) throw std::invalid_argument("zp_divide_exact: inexact division");
    return quot;
}

inline unsigned radical(unsigned n) {
    unsigned rad = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            rad *= p;
            while (n % p == 0) n /= p;
        }
    }
    return n > 1 ? rad * n : rad;
}

/// Phi_n for squarefree n by exact division of x^n - 1 by the product of
/// Phi_d over proper divisors d | n; general n via Phi_n(x) =
/// Phi_rad(n)(x^(n/rad(n))). Cached; thread-safe.
inline const ZPoly& cyclotomic_poly_cached(unsigned n) {
    static std::map<unsigned, ZPoly> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    auto compute = [](auto&& self, unsigned m) -> const ZPoly& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        ZPoly phi;
        const unsigned rad = radical(m);
        if (m == 1) {
            phi = {BigInt(-1), BigInt(1)};  // x - 1
        } else if (rad != m) {
            const ZPoly& base = self(self, rad);
            const unsigned stride = m / rad;
            phi.assign((base.size() - 1) * stride + 1, BigInt(0));
            for (std::size_t i = 0; i < base.size(); ++i) phi[i * stride] = base[i];
        } else {
            ZPoly xn_minus_1(m + 1, BigInt(0));
            xn_minus_1[0] = -1;
            xn_minus_1[m] = 1;
            ZPoly divisor_product{BigInt(1)};
            for (unsigned d = 1; d < m; ++d)
                if (m % d == 0) divisor_product = zp_mul(divisor_product, self(self, d));
            phi = zp_divide_exact(std::move(xn_minus_1), divisor_product);
        }
        return cache.emplace(m, std::move(phi)).first->second;
    };
    return compute(compute, n);
}

inline void check_conductor(unsigned n) {
    if (n == 0) throw std::invalid_argument("conductor must be positive");
    if (n > kMaxConductor) throw resource_error("conductor exceeds ceiling " + std::to_string(kMaxConductor));
}

}  // namespace detail

/// Coefficients of Phi_n, ascending, monic, degree phi(n).
inline std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
    detail::check_conductor(n);
    return detail::cyclotomic_poly_cached(n);
}

/**
 * An element of the cyclotomic field Q(zeta_n), stored Phi_n-reduced in the
 * power basis {zeta^0, ..., zeta^(phi(n)-1)}. The reduced form is a normal
 * form, so equality is coefficient-wise at a common conductor. Values are
 * immutable after construction.
 */
class Cyclotomic {
  public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}
    Cyclotomic(const Rational& r) : n_(1), c_(1, r) {}
    Cyclotomic(const BigInt& v) : n_(1), c_(1, Rational(v)) {}
    Cyclotomic(int v) : n_(1), c_(1, Rational(v)) {}
    Cyclotomic(long v) : n_(1), c_(1, Rational(v)) {}

    /// Builds from coefficients over powers zeta^0..zeta^(L-1) for any L,
    /// folding exponents mod n and reducing mod Phi_n.
    static Cyclotomic from_power_coeffs(unsigned n, std::vector<Rational> raw) {
        detail::check_conductor(n);
        std::vector<Rational> folded(n, Rational(0));
        for (std::size_t k = 0; k < raw.size(); ++k)
            if (!raw[k].is_zero()) folded[k % n] += raw[k];
        return Cyclotomic(n, reduce_mod_phi(std::move(folded), n));
    }

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Rational& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Same value re-expressed at conductor m (m must be a multiple of n).
    Cyclotomic promoted(unsigned m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw std::invalid_argument("promoted: target conductor not a multiple");
        detail::check_conductor(m);
        const unsigned stride = m / n_;
        std::vector<Rational> raw(m, Rational(0));
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!c_[k].is_zero()) raw[(k * stride) % m] = c_[k];
        return Cyclotomic(m, reduce_mod_phi(std::move(raw), m));
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = promote_pair(a, b);
        for (std::size_t k = 0; k < x.c_.size(); ++k)
            if (!y.c_[k].is_zero()) x.c_[k] += y.c_[k];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = promote_pair(a, b);
        for (std::size_t k = 0; k < x.c_.size(); ++k)
            if (!y.c_[k].is_zero()) x.c_[k] -= y.c_[k];
        return x;
    }

    Cyclotomic operator-() const {
        Cyclotomic out(*this);
        for (Rational& c : out.c_) c = -c;
        return out;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = promote_pair(a, b);
        const unsigned n = x.n_;
        std::vector<Rational> raw(n, Rational(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.c_.size(); ++j) {
                if (y.c_[j].is_zero()) continue;
                std::size_t e = i + j;
                if (e >= n) e -= n;  // zeta^n = 1 holds mod Phi_n
                raw[e] += x.c_[i] * y.c_[j];
            }
        }
        return Cyclotomic(n, reduce_mod_phi(std::move(raw), n));
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        auto [x, y] = promote_pair(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Galois conjugation zeta -> zeta^(n-1); an involution fixing the reals.
    friend Cyclotomic conj(const Cyclotomic& a) {
        std::vector<Rational> raw(a.n_, Rational(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (!a.c_[k].is_zero()) raw[(a.n_ - k) % a.n_] += a.c_[k];
        return Cyclotomic(a.n_, reduce_mod_phi(std::move(raw), a.n_));
    }

  private:
    Cyclotomic(unsigned n, std::vector<Rational> reduced) : n_(n), c_(std::move(reduced)) {}

    static std::pair<Cyclotomic, Cyclotomic> promote_pair(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ == b.n_) return {a, b};
        const std::uint64_t lcm = lcm_u64(a.n_, b.n_);
        if (lcm > kMaxConductor)
            throw resource_error("conductor lcm " + std::to_string(lcm) + " exceeds ceiling");
        const unsigned m = static_cast<unsigned>(lcm);
        return {a.promoted(m), b.promoted(m)};
    }

    /// Remainder of a degree-<n coefficient vector mod Phi_n.
    static std::vector<Rational> reduce_mod_phi(std::vector<Rational> raw, unsigned n) {
        const detail::ZPoly& phi = detail::cyclotomic_poly_cached(n);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t e = raw.size(); e-- > deg;) {
            if (raw[e].is_zero()) continue;
            const Rational c = std::move(raw[e]);
            raw[e] = 0;
            // x^e == -sum_{j<deg} phi[j] x^(e-deg+j)
            for (std::size_t j = 0; j < deg; ++j)
                if (!phi[j].is_zero()) raw[e - deg + j] -= c * Rational(phi[j]);
        }
        raw.resize(deg);
        return raw;
    }

    friend Cyclotomic invert(const Cyclotomic&);

    unsigned n_;
    std::vector<Rational> c_;
};

Cyclotomic conj(const Cyclotomic& a);  // namespace-scope name for the friend above

/// zeta_n^k (k arbitrary, reduced mod n).
inline Cyclotomic root_of_unity(unsigned n, long long k) {
    detail::check_conductor(n);
    const long long r = ((k % n) + n) % n;
    std::vector<Rational> raw(n, Rational(0));
    raw[static_cast<std::size_t>(r)] = 1;
    return Cyclotomic::from_power_coeffs(n, std::move(raw));
}

namespace detail {

// Rational polynomials for the extended Euclidean inverse.
using QPoly = std::vector<Rational>;

inline QPoly qp_trim(QPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

inline std::pair<QPoly, QPoly> qp_divmod(QPoly num, const QPoly& den) {
    if (den.empty()) throw std::domain_error("qp_divmod: division by zero polynomial");
    if (num.size() < den.size()) return {{}, std::move(num)};
    QPoly quot(num.size() - den.size() + 1, Rational(0));
    const Rational lead = den.back();
    for (std::size_t e = num.size(); e-- > den.size() - 1;) {
        if (num[e].is_zero()) continue;
        const Rational c = num[e] / lead;
        const std::size_t shift = e - (den.size() - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    return {std::move(quot), qp_trim(std::move(num))};
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline QPoly qp_sub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return qp_trim(std::move(a));
}

}  // namespace detail

bool is_rational(const Cyclotomic& a);

/// Multiplicative inverse: rational values invert coefficient-wise, anything
/// else goes through the extended Euclidean algorithm against Phi_n.
inline Cyclotomic invert(const Cyclotomic& a) {
    if (a.is_zero()) throw std::domain_error("invert: division by zero");
    if (is_rational(a)) {
        std::vector<Rational> coeffs(a.coeffs().size(), Rational(0));
        coeffs[0] = Rational(1) / a.coeffs()[0];
        return Cyclotomic(a.conductor(), std::move(coeffs));
    }
    const unsigned n = a.conductor();
    const detail::ZPoly& phi_z = detail::cyclotomic_poly_cached(n);
    detail::QPoly r0(phi_z.size());
    for (std::size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rational(phi_z[i]);
    detail::QPoly r1 = detail::qp_trim(a.coeffs());
    detail::QPoly t0, t1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r2] = detail::qp_divmod(r0, r1);
        detail::QPoly t2 = detail::qp_sub(t0, detail::qp_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // Phi_n is irreducible over Q, so the gcd r0 is a nonzero constant.
    const Rational scale = Rational(1) / r0[0];
    std::vector<Rational> coeffs(t0.size());
    for (std::size_t i = 0; i < t0.size(); ++i) coeffs[i] = t0[i] * scale;
    return Cyclotomic::from_power_coeffs(n, std::move(coeffs));
}

inline Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * invert(b); }

/// a * conj(a); always a real value.
inline Cyclotomic abs_squared(const Cyclotomic& a) { return a * conj(a); }

/// Real part (a + conj(a))/2, still represented in the field.
inline Cyclotomic real(const Cyclotomic& a) {
    return (a + conj(a)) * Cyclotomic(Rational(1) / 2);
}

/// Imaginary part (a - conj(a))/(2i); a real value in the field (i = zeta_4).
inline Cyclotomic imag(const Cyclotomic& a) {
    const Cyclotomic minus_i_over_2 = root_of_unity(4, 3) * Cyclotomic(Rational(1) / 2);
    return (a - conj(a)) * minus_i_over_2;
}

/// True iff the reduced form has no component beyond the constant.
inline bool is_rational(const Cyclotomic& a) {
    const auto& c = a.coeffs();
    for (std::size_t k = 1; k < c.size(); ++k)
        if (!c[k].is_zero()) return false;
    return true;
}

inline bool is_real(const Cyclotomic& a) { return a == conj(a); }

inline Rational as_rational(const Cyclotomic& a) {
    if (!is_rational(a)) throw std::domain_error("as_rational: value is irrational");
    return a.coeffs()[0];
}

/// True iff the value lies in the ring of cyclotomic integers.
inline bool is_cyclotomic_integer(const Cyclotomic& a) {
    for (const Rational& c : a.coeffs())
        if (denominator(c) != 1) return false;
    return true;
}

/// Membership in N_p, the semiring generated by the n-th roots of unity with
/// natural coefficients. For n >= 2 that semiring already contains -1 (as a
/// root for even n, as 1+zeta+...+zeta^(n-1) = 0 for odd n), so it equals the
/// full ring of cyclotomic integers; only n = 1 keeps the positivity
/// restriction.
inline bool is_natural(const Cyclotomic& a) {
    if (a.conductor() == 1) return denominator(a.coeffs()[0]) == 1 && a.coeffs()[0] >= 0;
    return is_cyclotomic_integer(a);
}

/// Double-precision embedding zeta_n -> exp(2*pi*i/n).
inline std::complex<double> to_complex(const Cyclotomic& a) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::complex<double> sum(0.0, 0.0);
    const double n = static_cast<double>(a.conductor());
    const auto& c = a.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        const double angle = two_pi * static_cast<double>(k) / n;
        sum += to_double(c[k]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

/// Renders "a0 + a1*z + a2*z^2 + ...@n" (only nonzero terms; "0@n" for zero).
inline std::string to_string(const Cyclotomic& a) {
    const auto& c = a.coeffs();
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        const bool negative = c[k] < 0;
        const Rational mag = negative ? Rational(-c[k]) : c[k];
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += rational_str(mag);
        if (k == 1)
            out += "*z";
        else if (k > 1)
            out += "*z^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    out += "@" + std::to_string(a.conductor());
    return out;
}

/// Parses the rendering above; also accepts bare "z"/"z^k" terms and plain
/// rationals (conductor 1). Throws std::invalid_argument on malformed input.
inline Cyclotomic parse_cyclotomic(std::string_view text) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("parse_cyclotomic: malformed value '" + std::string(text) + "'");
    };
    std::string_view body = text;
    unsigned n = 1;
    if (const auto at = text.rfind('@'); at != std::string_view::npos) {
        body = text.substr(0, at);
        const std::string_view cond = text.substr(at + 1);
        if (cond.empty()) fail();
        unsigned value = 0;
        for (char ch : cond) {
            if (ch < '0' || ch > '9') fail();
            value = value * 10 + static_cast<unsigned>(ch - '0');
            if (value > kMaxConductor) fail();
        }
        if (value == 0) fail();
        n = value;
    }
    std::vector<Rational> raw(n, Rational(0));
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < body.size() && body[pos] == ' ') ++pos;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= body.size()) {
            if (first) fail();
            break;
        }
        int sign = 1;
        if (body[pos] == '+' || body[pos] == '-') {
            if (first) {
                if (body[pos] == '-') sign = -1;
                ++pos;
            } else {
                sign = body[pos] == '-' ? -1 : 1;
                ++pos;
            }
            skip_ws();
        } else if (!first) {
            fail();
        }
        // term: [rational] [* z [^ k]]  |  z [^ k]
        std::size_t start = pos;
        while (pos < body.size() && (std::isdigit(static_cast<unsigned char>(body[pos])) || body[pos] == '/'))
            ++pos;
        Rational coeff(1);
        bool have_coeff = pos > start;
        if (have_coeff) coeff = parse_rational(body.substr(start, pos - start));
        skip_ws();
        long exponent = 0;
        bool have_z = false;
        if (pos < body.size() && (body[pos] == '*' || body[pos] == 'z')) {
            if (body[pos] == '*') {
                if (!have_coeff) fail();
                ++pos;
                skip_ws();
            }
            if (pos >= body.size() || body[pos] != 'z') fail();
            ++pos;
            have_z = true;
            exponent = 1;
            if (pos < body.size() && body[pos] == '^') {
                ++pos;
                std::size_t estart = pos;
                while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
                if (pos == estart) fail();
                exponent = std::stol(std::string(body.substr(estart, pos - estart)));
            }
        }
        if (!have_coeff && !have_z) fail();
        raw[static_cast<std::size_t>(exponent % n)] += sign * coeff;
        first = false;
    }
    return Cyclotomic::from_power_coeffs(n, std::move(raw));
}

}  // namespace cyq

namespace Eigen {

/// Treats Cyclotomic as a complex-like scalar so adjoint() conjugates.
template <>
struct NumTraits<cyq::Cyclotomic> : GenericNumTraits<cyq::Cyclotomic> {
    typedef cyq::Cyclotomic Real;
    typedef cyq::Cyclotomic NonInteger;
    typedef cyq::Cyclotomic Nested;
    typedef cyq::Cyclotomic Literal;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 200,
    };
    static Real epsilon() { return cyq::Cyclotomic(0); }
    static Real dummy_precision() { return cyq::Cyclotomic(0); }
    static int digits10() { return 0; }
};

/// With Real == Cyclotomic the generic <T,T> and <T,Real> trait partial
/// specializations tie; this one is more specialized than either.
template <typename BinaryOp>
struct ScalarBinaryOpTraits<cyq::Cyclotomic, cyq::Cyclotomic, BinaryOp> {
    typedef cyq::Cyclotomic ReturnType;
};

}  // namespace Eigen
