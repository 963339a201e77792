#pragma once

#include "cyq/rational.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace cyq {

/// Drift parameters of the unit-step lattice walk: step probabilities
/// alpha+- = (1 +- v)/2.
struct WalkParams {
    Rational v;

    Rational alpha_plus() const { return (1 + v) / 2; }
    Rational alpha_minus() const { return (1 - v) / 2; }
};

inline WalkParams make_walk_params(Rational v) {
    if (v < -1 || v > 1) throw std::domain_error("walk: drift velocity must lie in [-1, 1]");
    return {std::move(v)};
}

struct WalkObservation {
    long long t = 0;
    long long x = 0;
};

/// A displacement dx over dt unit steps is realizable iff |dx| <= dt and
/// dx, dt have equal parity.
inline bool step_feasible(long long dx, long long dt) {
    return dt >= 0 && std::llabs(dx) <= dt && ((dx ^ dt) & 1) == 0;
}

inline void require_step_feasible(long long dx, long long dt, const char* who) {
    if (!step_feasible(dx, dt))
        throw std::domain_error(std::string(who) + ": displacement " + std::to_string(dx) + " over " +
                                std::to_string(dt) + " steps violates range or parity");
}

/// Exact binomial macrostate probability
///   C(t, (t+x)/2) alpha+^((t+x)/2) alpha-^((t-x)/2).
inline Rational macrostate_probability(long long x, long long t, const WalkParams& params) {
    require_step_feasible(x, t, "macrostate_probability");
    const unsigned long up = static_cast<unsigned long>((t + x) / 2);
    const unsigned long down = static_cast<unsigned long>((t - x) / 2);
    return Rational(binomial(static_cast<unsigned long>(t), up)) *
           pow_rational(params.alpha_plus(), static_cast<long>(up)) *
           pow_rational(params.alpha_minus(), static_cast<long>(down));
}

/// ln of the exact macrostate probability, evaluated stably through
/// log-gamma; -infinity when the probability is exactly zero.
inline double one_step_entropy(long long dx, long long dt, const WalkParams& params) {
    require_step_feasible(dx, dt, "one_step_entropy");
    const double up = static_cast<double>((dt + dx) / 2);
    const double down = static_cast<double>((dt - dx) / 2);
    const double ap = to_double(params.alpha_plus());
    const double am = to_double(params.alpha_minus());
    double entropy = std::lgamma(static_cast<double>(dt) + 1.0) - std::lgamma(up + 1.0) -
                     std::lgamma(down + 1.0);
    if (up > 0) {
        if (ap == 0.0) return -std::numeric_limits<double>::infinity();
        entropy += up * std::log(ap);
    }
    if (down > 0) {
        if (am == 0.0) return -std::numeric_limits<double>::infinity();
        entropy += down * std::log(am);
    }
    return entropy;
}

/// Stirling form of the one-step entropy:
///   dt ln dt - (dt+dx)/2 ln((dt+dx)/(1+v)) - (dt-dx)/2 ln((dt-dx)/(1-v)).
inline double stirling_entropy(double dx, double dt, double v) {
    if (!(dt + dx > 0) || !(dt - dx > 0))
        throw std::domain_error("stirling_entropy: requires dt +- dx > 0");
    if (!(std::abs(v) < 1)) throw std::domain_error("stirling_entropy: requires |v| < 1");
    return dt * std::log(dt) - 0.5 * (dt + dx) * std::log((dt + dx) / (1 + v)) -
           0.5 * (dt - dx) * std::log((dt - dx) / (1 - v));
}

/// Stationary displacement of the Stirling entropy: dx* = v dt, exact.
inline Rational stationary_step(long long dt, const WalkParams& params) {
    if (dt < 1) throw std::invalid_argument("stationary_step: dt must be positive");
    return params.v * dt;
}

/// L = ((xdot - v) / sqrt(1 - v^2))^2.
inline double lagrangian(double xdot, double v) {
    if (!(std::abs(v) < 1)) throw std::domain_error("lagrangian: requires |v| < 1");
    const double shifted = xdot - v;
    return shifted * shifted / (1 - v * v);
}

/// Second-order expansion of the one-step entropy around dx*:
///   -(1/2) L(dx/dt, v) dt.
inline double quadratic_entropy_approx(double dx, double dt, double v) {
    if (!(dt > 0)) throw std::invalid_argument("quadratic_entropy_approx: dt must be positive");
    return -0.5 * lagrangian(dx / dt, v) * dt;
}

struct WalkPath {
    std::vector<WalkObservation> points;
    std::vector<double> entropy_cum;  // cumulative entropy up to each point
    Rational probability;             // exact product of step probabilities
    double entropy_total = 0.0;       // -infinity when probability is zero
};

namespace detail {

struct WalkCell {
    double entropy = -std::numeric_limits<double>::infinity();
    Rational probability{0};
    std::size_t predecessor = 0;
    bool reachable = false;
};

// Preference order for DP candidates: entropy up to float noise, then the
// exact probability, then proximity of the predecessor to the straight line.
inline bool candidate_better(double entropy_new, const Rational& prob_new, double pred_line_dist_new,
                             double entropy_old, const Rational& prob_old, double pred_line_dist_old) {
    const double tol = 1e-12 * std::max(1.0, std::max(std::abs(entropy_new), std::abs(entropy_old)));
    const bool both_zero = prob_new == 0 && prob_old == 0;
    if (!both_zero) {
        if (entropy_new > entropy_old + tol) return true;
        if (entropy_new < entropy_old - tol) return false;
        if (prob_new > prob_old) return true;
        if (prob_new < prob_old) return false;
    }
    return pred_line_dist_new < pred_line_dist_old;
}

}  // namespace detail

/**
 * Most probable lattice path through the fixed observations, with positions
 * chosen freely at the given intermediate times. Dynamic program over the
 * feasible position range per layer, maximizing the summed one-step entropy;
 * float ties are resolved by exact probability comparison, exact ties toward
 * the straight line between the surrounding fixed points.
 */
inline WalkPath most_probable_path(const std::vector<WalkObservation>& fixed,
                                   const std::vector<long long>& free_times,
                                   const WalkParams& params) {
    if (fixed.size() < 2) throw std::invalid_argument("most_probable_path: need at least two observations");
    for (std::size_t i = 1; i < fixed.size(); ++i) {
        if (fixed[i].t <= fixed[i - 1].t)
            throw std::invalid_argument("most_probable_path: observation times must increase");
        require_step_feasible(fixed[i].x - fixed[i - 1].x, fixed[i].t - fixed[i - 1].t,
                              "most_probable_path");
    }
    for (long long t : free_times) {
        if (t <= fixed.front().t || t >= fixed.back().t)
            throw std::invalid_argument("most_probable_path: free times must lie strictly inside");
        for (const auto& f : fixed)
            if (f.t == t) throw std::invalid_argument("most_probable_path: free time collides with an observation");
    }

    WalkPath path;
    path.probability = 1;
    path.entropy_total = 0.0;
    path.points.push_back(fixed.front());
    path.entropy_cum.push_back(0.0);

    // Segments between consecutive fixed observations are independent.
    for (std::size_t seg = 0; seg + 1 < fixed.size(); ++seg) {
        const WalkObservation a = fixed[seg];
        const WalkObservation b = fixed[seg + 1];
        std::vector<long long> times;
        for (long long t : free_times)
            if (t > a.t && t < b.t) times.push_back(t);
        std::sort(times.begin(), times.end());
        times.push_back(b.t);

        const double slope = static_cast<double>(b.x - a.x) / static_cast<double>(b.t - a.t);
        auto line_at = [&](long long t) {
            return static_cast<double>(a.x) + slope * static_cast<double>(t - a.t);
        };

        // layer 0 is the fixed starting point.
        std::vector<std::vector<long long>> positions(times.size() + 1);
        std::vector<std::vector<detail::WalkCell>> cells(times.size() + 1);
        positions[0] = {a.x};
        cells[0].push_back({0.0, Rational(1), 0, true});

        for (std::size_t layer = 1; layer <= times.size(); ++layer) {
            const long long t = times[layer - 1];
            const long long from_a = t - a.t;
            const long long to_b = b.t - t;
            if (layer == times.size()) {
                positions[layer] = {b.x};
            } else {
                const long long lo = std::max(a.x - from_a, b.x - to_b);
                const long long hi = std::min(a.x + from_a, b.x + to_b);
                for (long long x = lo; x <= hi; ++x)
                    if (step_feasible(x - a.x, from_a) && step_feasible(b.x - x, to_b))
                        positions[layer].push_back(x);
            }
            cells[layer].resize(positions[layer].size());

            const long long prev_t = layer == 1 ? a.t : times[layer - 2];
            const long long dt = t - prev_t;
            for (std::size_t xi = 0; xi < positions[layer].size(); ++xi) {
                const long long x = positions[layer][xi];
                detail::WalkCell best;
                double best_pred_dist = std::numeric_limits<double>::infinity();
                for (std::size_t pi = 0; pi < positions[layer - 1].size(); ++pi) {
                    const auto& prev = cells[layer - 1][pi];
                    if (!prev.reachable) continue;
                    const long long dx = x - positions[layer - 1][pi];
                    if (!step_feasible(dx, dt)) continue;
                    const double entropy = prev.entropy + one_step_entropy(dx, dt, params);
                    const Rational prob = prev.probability * macrostate_probability(dx, dt, params);
                    const double pred_dist =
                        std::abs(static_cast<double>(positions[layer - 1][pi]) - line_at(prev_t));
                    if (!best.reachable ||
                        detail::candidate_better(entropy, prob, pred_dist, best.entropy,
                                                 best.probability, best_pred_dist)) {
                        best = {entropy, prob, pi, true};
                        best_pred_dist = pred_dist;
                    }
                }
                cells[layer][xi] = best;
            }
        }

        // Walk back through the unique end cell.
        if (!cells.back().front().reachable)
            throw std::domain_error("most_probable_path: no lattice path between observations");
        std::vector<std::size_t> chosen(times.size() + 1);
        chosen[times.size()] = 0;
        for (std::size_t layer = times.size(); layer > 0; --layer)
            chosen[layer - 1] = cells[layer][chosen[layer]].predecessor;

        const double base_entropy = path.entropy_cum.back();
        for (std::size_t layer = 1; layer <= times.size(); ++layer) {
            path.points.push_back({times[layer - 1], positions[layer][chosen[layer]]});
            path.entropy_cum.push_back(base_entropy + cells[layer][chosen[layer]].entropy);
        }
        path.probability *= cells.back().front().probability;
        path.entropy_total = path.entropy_cum.back();
    }
    return path;
}

/// Central-difference residual of
///   xdd (1 - v^2) + 2 xd v vd - (1 + v^2) vd = 0
/// at the interior sample points.
inline std::vector<double> euler_lagrange_residual(const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                                                   double dt) {
    if (x.size() != v.size()) throw std::invalid_argument("euler_lagrange_residual: length mismatch");
    if (x.size() < 3) throw std::invalid_argument("euler_lagrange_residual: need at least three samples");
    if (!(dt > 0)) throw std::invalid_argument("euler_lagrange_residual: dt must be positive");
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!(std::abs(v(i)) < 1)) throw std::domain_error("euler_lagrange_residual: requires |v| < 1");
    std::vector<double> residual(static_cast<std::size_t>(x.size() - 2));
    for (Eigen::Index i = 1; i + 1 < x.size(); ++i) {
        const double xd = (x(i + 1) - x(i - 1)) / (2 * dt);
        const double xdd = (x(i + 1) - 2 * x(i) + x(i - 1)) / (dt * dt);
        const double vd = (v(i + 1) - v(i - 1)) / (2 * dt);
        residual[static_cast<std::size_t>(i - 1)] =
            xdd * (1 - v(i) * v(i)) + 2 * xd * v(i) * vd - (1 + v(i) * v(i)) * vd;
    }
    return residual;
}

}  // namespace cyq
