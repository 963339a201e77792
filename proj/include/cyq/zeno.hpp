#pragma once

#include "cyq/groups.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace cyq {

/// Exact survival probabilities p(t) = born(psi0, U^t psi0) for t = 0..t_max.
struct SurvivalSeries {
    std::vector<Cyclotomic> values;

    long t_max() const { return static_cast<long>(values.size()) - 1; }
    const Cyclotomic& at(long t) const { return values.at(static_cast<std::size_t>(t)); }
    double value_float(long t) const { return to_complex(at(t)).real(); }
};

inline SurvivalSeries survival_series(const CycMatrix& u, const CycVector& psi0, long t_max) {
    if (t_max < 0) throw std::invalid_argument("survival_series: t_max must be nonnegative");
    if (!is_unitary(u)) throw std::domain_error("survival_series: operator is not unitary");
    if (inner(psi0, psi0).is_zero()) throw std::domain_error("survival_series: zero initial state");
    SurvivalSeries series;
    series.values.reserve(static_cast<std::size_t>(t_max) + 1);
    CycVector state = psi0;
    for (long t = 0; t <= t_max; ++t) {
        series.values.push_back(born(psi0, state));
        if (t < t_max) state = u * state;
    }
    return series;
}

struct PeriodInfo {
    bool constant = false;
    long period = 1;  // meaningful when not constant
};

/// Minimal period of the series over one full order cycle (the period always
/// divides the order). Requires values for t = 0..order-1 at least.
inline PeriodInfo series_period(const SurvivalSeries& series, long order) {
    if (order < 1) throw std::invalid_argument("series_period: order must be positive");
    if (static_cast<long>(series.values.size()) < order)
        throw std::domain_error("series_period: series shorter than one order cycle");
    bool constant = true;
    for (long t = 1; t < order && constant; ++t)
        if (series.at(t) != series.at(0)) constant = false;
    if (constant) return {true, 1};
    for (long d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        bool periodic = true;
        for (long t = 0; t < order && periodic; ++t)
            if (series.at((t + d) % order) != series.at(t)) periodic = false;
        if (periodic) return {false, d};
    }
    return {false, order};
}

struct ZenoTime {
    bool infinite = false;
    long value = 0;

    friend bool operator==(const ZenoTime&, const ZenoTime&) = default;
};

/// First t >= 0 at which p(t) attains its minimum over one period; infinite
/// when the series is constant. Comparisons are exact when every value is
/// rational, otherwise float with an exact-equality tie scan.
inline ZenoTime natural_zeno_time(const SurvivalSeries& series, long order) {
    if (static_cast<long>(series.values.size()) < order + 1)
        throw std::domain_error("natural_zeno_time: series must cover at least one full period");
    const PeriodInfo info = series_period(series, order);
    if (info.constant) return {true, 0};

    bool all_rational = true;
    for (long t = 0; t < info.period && all_rational; ++t)
        if (!is_rational(series.at(t))) all_rational = false;

    long argmin = 0;
    if (all_rational) {
        Rational best = as_rational(series.at(0));
        for (long t = 1; t < info.period; ++t) {
            const Rational v = as_rational(series.at(t));
            if (v < best) {
                best = v;
                argmin = t;
            }
        }
    } else {
        double best = series.value_float(0);
        for (long t = 1; t < info.period; ++t) {
            const double v = series.value_float(t);
            if (v < best) {
                best = v;
                argmin = t;
            }
        }
        // An earlier index with the exact same value wins.
        for (long t = 0; t < argmin; ++t)
            if (series.at(t) == series.at(argmin)) {
                argmin = t;
                break;
            }
    }
    return {false, argmin};
}

struct ZenoReport {
    std::string label;
    long order = 1;
    PeriodInfo period;
    ZenoTime tau;
};

struct ZenoScan {
    SurvivalSeries series;
    ZenoReport report;
};

inline ZenoScan zeno_scan(std::string label, const CycMatrix& u, const CycVector& psi0, long t_max,
                          long order_bound = 10'000) {
    const auto order = matrix_order(u, order_bound);
    if (!order) throw std::domain_error("zeno_scan: operator has no order within bound");
    ZenoScan scan;
    scan.series = survival_series(u, psi0, std::max(t_max, *order));
    scan.report.label = std::move(label);
    scan.report.order = *order;
    scan.report.period = series_period(scan.series, *order);
    scan.report.tau = natural_zeno_time(scan.series, *order);
    return scan;
}

/// Zeno data for all eight powers of the beam splitter with psi0 = e_up.
inline std::vector<ZenoReport> zeno_table_c8() {
    const CycMatrix s = mz_splitter(8);
    const CycVector psi0 = unit_vector(2, 0);
    std::vector<ZenoReport> rows;
    for (int j = 0; j < 8; ++j) {
        const CycMatrix u = matrix_power(s, static_cast<unsigned long>(j));
        rows.push_back(zeno_scan("S^" + std::to_string(j), u, psi0, 8, 8).report);
    }
    return rows;
}

/// Survival scan for the generalized splitter S_N with psi0 = e_up.
inline ZenoScan zeno_scan_sn(unsigned n, long t_max) {
    return zeno_scan("S_" + std::to_string(n), mz_splitter(n), unit_vector(2, 0), t_max,
                     static_cast<long>(n));
}

/// Survival scans for the icosahedral triplet.
inline std::vector<ZenoScan> a5_dynamics(long t_max, const CycVector& psi0) {
    const GeneratedRep rep = a5_rep3prime();
    std::vector<ZenoScan> scans;
    for (const auto& [label, u] : rep.generators) scans.push_back(zeno_scan(label, u, psi0, t_max, 5));
    return scans;
}

inline std::vector<ZenoScan> a5_dynamics(long t_max) { return a5_dynamics(t_max, unit_vector(3, 0)); }

/// Zeno time of a continuous evolution exp(-iHt) from the variance of H in
/// the initial state: tau = (<H^2> - <H>^2)^(-1/2). Returns +infinity when
/// the variance vanishes (the state is an eigenstate, nothing evolves).
inline double continuous_zeno_time(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& psi0) {
    if (h.rows() != h.cols()) throw std::invalid_argument("continuous_zeno_time: square matrix required");
    if (h.rows() != psi0.size()) throw std::invalid_argument("continuous_zeno_time: dimension mismatch");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("continuous_zeno_time: matrix is not Hermitian");
    if (std::abs(psi0.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("continuous_zeno_time: state is not normalized");
    const double mean = (psi0.adjoint() * h * psi0).value().real();
    const double second = (h * psi0).squaredNorm();  // <psi|H^2|psi> for Hermitian H
    const double variance = second - mean * mean;
    if (variance < 1e-15) return std::numeric_limits<double>::infinity();
    return 1.0 / std::sqrt(variance);
}

/// Trajectory entropy table S(N) = -(1/N)(T/tau)^2 for the equidistant
/// observation chain; exp(S) -> 1 as N grows.
inline std::vector<std::pair<long, double>> zeno_entropy_limit(double total_time, double tau,
                                                               const std::vector<long>& ns) {
    if (!(total_time > 0) || !(tau > 0))
        throw std::invalid_argument("zeno_entropy_limit: positive inputs required");
    const double ratio2 = (total_time / tau) * (total_time / tau);
    std::vector<std::pair<long, double>> rows;
    for (long n : ns) {
        if (n < 1) throw std::invalid_argument("zeno_entropy_limit: N must be positive");
        rows.emplace_back(n, -ratio2 / static_cast<double>(n));
    }
    return rows;
}

}  // namespace cyq
