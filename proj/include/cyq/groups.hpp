#pragma once

#include "cyq/linalg.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace cyq {

/// A permutation of {0..N-1}, stored as the image of each point.
class Permutation {
  public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
                throw std::invalid_argument("Permutation: images are not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    /// The n-cycle 0 -> 1 -> ... -> n-1 -> 0.
    static Permutation cycle(int n) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
        return Permutation(std::move(im));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(i); }

    /// Left-to-right composition: (p * q)(i) = q(p(i)).
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.degree() != q.degree()) throw std::invalid_argument("Permutation: degree mismatch");
        std::vector<int> im(p.images_.size());
        for (int i = 0; i < p.degree(); ++i) im[i] = q(p(i));
        return Permutation(std::move(im));
    }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
        return Permutation(std::move(im));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }

  private:
    std::vector<int> images_;
};

/// Order of a permutation: lcm of its cycle lengths.
inline long element_order(const Permutation& p) {
    std::vector<bool> seen(p.degree(), false);
    long order = 1;
    for (int start = 0; start < p.degree(); ++start) {
        if (seen[start]) continue;
        long length = 0;
        for (int i = start; !seen[i]; i = p(i)) {
            seen[i] = true;
            ++length;
        }
        order = std::lcm(order, length);
    }
    return order;
}

/// Exponent of the cyclic group C_N.
inline long group_exponent_cyclic(long n) {
    if (n < 1) throw std::invalid_argument("group_exponent_cyclic: N must be positive");
    return n;
}

inline Permutation cycle_generator(int n) {
    if (n < 1) throw std::invalid_argument("cycle_generator: N must be positive");
    return Permutation::cycle(n);
}

/// 0/1 matrix acting by coordinate pullback, (P n)_i = n_{p(i)}; together
/// with left-to-right composition this makes p -> P_p a homomorphism, and
/// the column-k Fourier vector (zeta^(jk))_j an eigenvector with eigenvalue
/// zeta^k for the cycle generator.
inline CycMatrix permutation_matrix(const Permutation& p) {
    const Index n = p.degree();
    CycMatrix m = CycMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) m(i, p(static_cast<int>(i))) = Cyclotomic(1);
    return m;
}

/// Generalized beam splitter over conductor N:
///   S_N = 1/2 [[z + z^(N-1), z - z^(N-1)], [z - z^(N-1), z + z^(N-1)]],
/// a unitary generator of C_N (matrix order N). For N = 8 this is exactly the
/// cyclotomic form of the optical 50/50 splitter.
inline CycMatrix mz_splitter(unsigned n) {
    if (n < 3) throw std::invalid_argument("mz_splitter: N >= 3 required");
    const Cyclotomic z = root_of_unity(n, 1);
    const Cyclotomic zbar = root_of_unity(n, static_cast<long long>(n) - 1);
    const Cyclotomic half(Rational(1) / 2);
    const Cyclotomic diag = (z + zbar) * half;
    const Cyclotomic off = (z - zbar) * half;
    CycMatrix s(2, 2);
    s << diag, off, off, diag;
    return s;
}

/// A finite set of named unitary matrices over one conductor (a concrete
/// unitary representation given by its generators, or a transport alphabet).
struct GeneratedRep {
    Index degree = 0;
    unsigned conductor = 1;
    std::vector<std::pair<std::string, CycMatrix>> generators;

    const CycMatrix& matrix(std::size_t i) const { return generators.at(i).second; }
    std::size_t size() const { return generators.size(); }
};

/// Checks shape, unitarity and finite order of every generator.
inline void validate_rep(const GeneratedRep& rep, long order_bound = 10'000) {
    for (const auto& [label, mat] : rep.generators) {
        if (mat.rows() != rep.degree || mat.cols() != rep.degree)
            throw std::invalid_argument("validate_rep: generator '" + label + "' has wrong degree");
        if (!is_unitary(mat))
            throw std::invalid_argument("validate_rep: generator '" + label + "' is not unitary");
        if (!matrix_order(mat, order_bound))
            throw std::invalid_argument("validate_rep: generator '" + label + "' has no order within bound");
    }
}

/// The golden ratio as an exact element of Q(zeta_5): phi = -z^2 - z^3.
inline Cyclotomic golden_ratio() {
    return -(root_of_unity(5, 2) + root_of_unity(5, 3));
}

/// The icosahedral triplet: three unitary 3x3 matrices over conductor 5 with
/// orders 2, 3 and 5. 1/phi = phi - 1 = z + z^4.
inline GeneratedRep a5_rep3prime() {
    const Cyclotomic phi = golden_ratio();
    const Cyclotomic inv_phi = root_of_unity(5, 1) + root_of_unity(5, 4);
    const Cyclotomic half(Rational(1) / 2);
    const Cyclotomic one(1);

    CycMatrix u(3, 3);
    u << -phi, inv_phi, one,
         inv_phi, -one, phi,
         one, phi, inv_phi;
    u = u * half;

    CycMatrix v(3, 3);
    v << Cyclotomic(0), Cyclotomic(0), one,
         one, Cyclotomic(0), Cyclotomic(0),
         Cyclotomic(0), one, Cyclotomic(0);

    CycMatrix w(3, 3);
    w << -phi, -inv_phi, one,
         inv_phi, one, phi,
         -one, phi, -inv_phi;
    w = w * half;

    GeneratedRep rep{3, 5, {{"U", u}, {"V", v}, {"W", w}}};
    validate_rep(rep, 10);
    return rep;
}

/// The two-dimensional representation of C_8 generated by the beam splitter.
inline GeneratedRep c8_mz_rep() {
    GeneratedRep rep{2, 8, {{"S", mz_splitter(8)}}};
    validate_rep(rep, 8);
    return rep;
}

}  // namespace cyq
