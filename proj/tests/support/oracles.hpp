#pragma once

// Test-only brute-force oracles. These deliberately avoid the library code
// paths they are used to check.

#include "cyq/linalg.hpp"
#include "cyq/groups.hpp"
#include "cyq/rational.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace oracles {

// Plain schoolbook polynomial product over BigInt, ascending coefficients.
// Used to verify Phi_n against x^n - 1 independently of the library's
// division-based construction.
inline std::vector<cyq::BigInt> poly_mul(const std::vector<cyq::BigInt>& a,
                                         const std::vector<cyq::BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<cyq::BigInt> out(a.size() + b.size() - 1, cyq::BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline std::vector<cyq::BigInt> x_pow_n_minus_1(unsigned n) {
    std::vector<cyq::BigInt> p(n + 1, cyq::BigInt(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Dense transition probability: recursively explicit enumeration of every
// gauge sequence, an explicit left fold for its transport, and a plain sum of
// weight * born terms. Independent of the sparse production path (no
// index decoding, no sequence iterator).
inline cyq::Cyclotomic dense_transition(
    const cyq::GeneratedRep& rep, long delta_t,
    const std::function<cyq::Rational(const std::vector<int>&)>& weight_of,
    const cyq::CycVector& prev, const cyq::CycVector& next) {
    cyq::Cyclotomic total(0);
    std::vector<int> gamma;
    std::function<void()> recurse = [&]() {
        if (static_cast<long>(gamma.size()) == delta_t) {
            const cyq::Rational w = weight_of(gamma);
            if (w == 0) return;
            cyq::CycVector phi = prev;
            for (auto it = gamma.rbegin(); it != gamma.rend(); ++it)
                phi = rep.matrix(static_cast<std::size_t>(*it)) * phi;
            if (cyq::inner(phi, phi).is_zero()) return;
            total += cyq::Cyclotomic(w) * cyq::born(next, phi);
            return;
        }
        for (std::size_t g = 0; g < rep.size(); ++g) {
            gamma.push_back(static_cast<int>(g));
            recurse();
            gamma.pop_back();
        }
    };
    recurse();
    return total;
}

// Fourth-order Runge-Kutta integration of the walk's deterministic equation
//   xdd = ((1 + v^2) vd - 2 xd v vd) / (1 - v^2)
// for a prescribed smooth drift profile v(t), vd(t). Returns x sampled at
// t = 0, dt, ..., n*dt.
template <typename VFn, typename VdFn>
std::vector<double> integrate_walk_ode(double x0, double u0, double dt, int n, VFn v_of, VdFn vd_of) {
    std::vector<double> xs{x0};
    double x = x0, u = u0;
    auto acc = [&](double t, double u_now) {
        const double v = v_of(t), vd = vd_of(t);
        return ((1 + v * v) * vd - 2 * u_now * v * vd) / (1 - v * v);
    };
    for (int i = 0; i < n; ++i) {
        const double t = i * dt;
        const double k1x = u, k1u = acc(t, u);
        const double k2x = u + 0.5 * dt * k1u, k2u = acc(t + 0.5 * dt, u + 0.5 * dt * k1u);
        const double k3x = u + 0.5 * dt * k2u, k3u = acc(t + 0.5 * dt, u + 0.5 * dt * k2u);
        const double k4x = u + dt * k3u, k4u = acc(t + dt, u + dt * k3u);
        x += dt / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
        u += dt / 6 * (k1u + 2 * k2u + 2 * k3u + k4u);
        xs.push_back(x);
    }
    return xs;
}

}  // namespace oracles
