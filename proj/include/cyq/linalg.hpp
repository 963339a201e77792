#pragma once

#include "cyq/cyclotomic.hpp"

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyq {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CycMatrix = Matrix<Cyclotomic>;
using CycVector = Vector<Cyclotomic>;
using Index = Eigen::Index;

inline CycMatrix cyc_identity(Index n) { return CycMatrix::Identity(n, n); }

inline CycVector unit_vector(Index dim, Index k) {
    CycVector v = CycVector::Zero(dim);
    v(k) = Cyclotomic(1);
    return v;
}

// Expression arguments are evaluated exactly once up front (.eval() is a
// no-op on plain matrices); per-coefficient access on an unevaluated product
// would otherwise recompute it for every coefficient.
template <typename DA, typename DB>
bool exact_equal(const Eigen::MatrixBase<DA>& a_, const Eigen::MatrixBase<DB>& b_) {
    const auto& a = a_.eval();
    const auto& b = b_.eval();
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

/// Conjugate transpose.
template <typename Derived>
CycMatrix dagger(const Eigen::MatrixBase<Derived>& a) {
    return a.adjoint();
}

/// <phi|psi> = sum conj(phi_i) psi_i.
template <typename DA, typename DB>
Cyclotomic inner(const Eigen::MatrixBase<DA>& phi_, const Eigen::MatrixBase<DB>& psi_) {
    const auto& phi = phi_.eval();
    const auto& psi = psi_.eval();
    if (phi.size() != psi.size()) throw std::invalid_argument("inner: length mismatch");
    Cyclotomic sum(0);
    for (Index i = 0; i < phi.size(); ++i) sum += conj(phi(i)) * psi(i);
    return sum;
}

template <typename Derived>
Cyclotomic trace(const Eigen::MatrixBase<Derived>& a_) {
    const auto& a = a_.eval();
    if (a.rows() != a.cols()) throw std::invalid_argument("trace: square matrix required");
    Cyclotomic sum(0);
    for (Index i = 0; i < a.rows(); ++i) sum += a(i, i);
    return sum;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& a) {
    if (a.rows() != a.cols()) return false;
    const CycMatrix product = a.adjoint() * a;
    return exact_equal(product, cyc_identity(a.rows()));
}

/// |a><a| / <a|a>; exact, idempotent, self-adjoint.
template <typename Derived>
CycMatrix projector(const Eigen::MatrixBase<Derived>& a_) {
    const auto& a = a_.eval();
    const Cyclotomic norm2 = inner(a, a);
    if (norm2.is_zero()) throw std::domain_error("projector: zero vector");
    const Cyclotomic scale = invert(norm2);
    CycMatrix p = a * a.adjoint();
    for (Index i = 0; i < p.rows(); ++i)
        for (Index j = 0; j < p.cols(); ++j) p(i, j) *= scale;
    return p;
}

/// Born probability |<phi|psi>|^2 / (<phi|phi><psi|psi>). States need not be
/// normalized; norms like sqrt(2) do not exist in every cyclotomic field, so
/// the ratio form is used throughout.
template <typename DA, typename DB>
Cyclotomic born(const Eigen::MatrixBase<DA>& phi, const Eigen::MatrixBase<DB>& psi) {
    const Cyclotomic nphi = inner(phi, phi);
    const Cyclotomic npsi = inner(psi, psi);
    if (nphi.is_zero() || npsi.is_zero()) throw std::domain_error("born: zero state");
    const Cyclotomic amp = inner(phi, psi);
    return amp * conj(amp) / (nphi * npsi);
}

/// Rational fast-path; throws if the value is not rational.
template <typename DA, typename DB>
Rational born_probability(const Eigen::MatrixBase<DA>& phi, const Eigen::MatrixBase<DB>& psi) {
    return as_rational(born(phi, psi));
}

template <typename Derived>
CycMatrix matrix_power(const Eigen::MatrixBase<Derived>& a, unsigned long t) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix_power: square matrix required");
    CycMatrix result = cyc_identity(a.rows());
    CycMatrix base = a;
    while (t > 0) {
        if (t & 1) result = result * base;
        base = base * base;
        t >>= 1;
    }
    return result;
}

/// Least t in [1, bound] with a^t = I, or nullopt.
template <typename Derived>
std::optional<long> matrix_order(const Eigen::MatrixBase<Derived>& a_, long bound = 10'000) {
    const auto& a = a_.eval();
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix_order: square matrix required");
    if (bound < 1) throw std::invalid_argument("matrix_order: bound must be positive");
    const CycMatrix identity = cyc_identity(a.rows());
    CycMatrix power = a;
    for (long t = 1; t <= bound; ++t) {
        if (exact_equal(power, identity)) return t;
        power = power * a;
    }
    return std::nullopt;
}

/// lcm of the entries' conductors.
template <typename Derived>
unsigned conductor_of(const Eigen::MatrixBase<Derived>& a_) {
    const auto& a = a_.eval();
    std::uint64_t lcm = 1;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) lcm = lcm_u64(lcm, a(i, j).conductor());
    if (lcm > kMaxConductor) throw resource_error("conductor_of: lcm exceeds ceiling");
    return static_cast<unsigned>(lcm);
}

inline Eigen::MatrixXcd to_complex_matrix(const CycMatrix& a) {
    Eigen::MatrixXcd out(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) out(i, j) = to_complex(a(i, j));
    return out;
}

inline Eigen::VectorXcd to_complex_vector(const CycVector& a) {
    Eigen::VectorXcd out(a.size());
    for (Index i = 0; i < a.size(); ++i) out(i) = to_complex(a(i));
    return out;
}

/// "[a, b, c]" with each entry in the textual scalar form.
template <typename Derived>
std::string vector_str(const Eigen::MatrixBase<Derived>& v_) {
    const auto& v = v_.eval();
    std::string out = "[";
    for (Index i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v(i));
    }
    out += "]";
    return out;
}

template <typename Derived>
std::string matrix_str(const Eigen::MatrixBase<Derived>& a_) {
    const auto& a = a_.eval();
    std::string out = "[";
    for (Index i = 0; i < a.rows(); ++i) {
        if (i) out += "; ";
        for (Index j = 0; j < a.cols(); ++j) {
            if (j) out += ", ";
            out += to_string(a(i, j));
        }
    }
    out += "]";
    return out;
}

/// Parses "[a, b, c]" (or "a, b, c") of textual scalars into a vector.
inline CycVector parse_cyc_vector(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("parse_cyc_vector: unbalanced brackets");
        body.remove_prefix(1);
        body.remove_suffix(1);
    }
    std::vector<Cyclotomic> entries;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string_view item =
            comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) throw std::invalid_argument("parse_cyc_vector: empty component");
        entries.push_back(parse_cyclotomic(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (entries.empty()) throw std::invalid_argument("parse_cyc_vector: no components");
    CycVector out(static_cast<Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) out(static_cast<Index>(i)) = entries[i];
    return out;
}

}  // namespace cyq
