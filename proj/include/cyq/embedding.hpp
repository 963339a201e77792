#pragma once

#include "cyq/groups.hpp"
#include "cyq/linalg.hpp"

#include <array>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace cyq {

/// Multiplicity vector over eight slots (the natural module for the C8 case).
using Natural8 = Eigen::Matrix<long, 8, 1>;

inline CycVector natural_to_cyc(const Natural8& n) {
    CycVector v(8);
    for (Index i = 0; i < 8; ++i) v(i) = Cyclotomic(n(i));
    return v;
}

/**
 * Exact eigenbasis of the N-cycle permutation matrix over Q(zeta_N):
 * T(j,k) = zeta^(jk) (columns are unnormalized eigenvectors), T_inv(k,j) =
 * zeta^(-jk)/N, and T_inv * P * T = diag(zeta^block_spectrum[k]) with
 * block_spectrum[k] = k.
 */
struct BlockDecomposition {
    CycMatrix T;
    CycMatrix T_inv;
    std::vector<unsigned> block_spectrum;
};

inline BlockDecomposition cycle_eigenbasis(unsigned n) {
    if (n < 2) throw std::invalid_argument("cycle_eigenbasis: N >= 2 required");
    detail::check_conductor(n);
    const Index dim = static_cast<Index>(n);
    BlockDecomposition dec;
    dec.T.resize(dim, dim);
    dec.T_inv.resize(dim, dim);
    dec.block_spectrum.resize(n);
    const Rational inv_n = Rational(1) / static_cast<long>(n);
    for (Index j = 0; j < dim; ++j) {
        for (Index k = 0; k < dim; ++k) {
            dec.T(j, k) = root_of_unity(n, static_cast<long long>(j) * k);
            dec.T_inv(k, j) = root_of_unity(n, -static_cast<long long>(j) * k) * Cyclotomic(inv_n);
        }
    }
    for (unsigned k = 0; k < n; ++k) dec.block_spectrum[k] = k;
    return dec;
}

/// The fixed change of basis taking the Fourier pair (c_1, c_7) of an
/// 8-slot multiplicity vector to the splitter coordinates.
inline CycMatrix splitter_basis_change() {
    const Cyclotomic z = root_of_unity(8, 1);
    const Cyclotomic z3 = root_of_unity(8, 3);
    const Cyclotomic half(Rational(1) / 2);
    CycMatrix b(2, 2);
    b << (z - z3) * half, -(z + z3) * half,
         (z - z3) * half, (z + z3) * half;
    return b;
}

/// Closed-form projection of a multiplicity vector onto the two-dimensional
/// splitter subspace:
///   psi_1 = (-z^3 (n1+n3-n5-n7) + (1-z^2)(n2-n6)) / 8
///   psi_2 = ( z   (n1-n3-n5+n7) + (1+z^2)(-n4+n8)) / 8
inline CycVector splitter_projection(const Natural8& n) {
    for (Index i = 0; i < 8; ++i)
        if (n(i) < 0) throw std::domain_error("splitter_projection: entries must be nonnegative");
    const Cyclotomic z = root_of_unity(8, 1);
    const Cyclotomic z2 = root_of_unity(8, 2);
    const Cyclotomic z3 = root_of_unity(8, 3);
    const Cyclotomic eighth(Rational(1) / 8);
    const Cyclotomic one(1);
    CycVector psi(2);
    psi(0) = (-z3 * Cyclotomic(n(0) + n(2) - n(4) - n(6)) +
              (one - z2) * Cyclotomic(n(1) - n(5))) * eighth;
    psi(1) = (z * Cyclotomic(n(0) - n(2) - n(4) + n(6)) +
              (one + z2) * Cyclotomic(-n(3) + n(7))) * eighth;
    return psi;
}

/// The same projection computed through the eigenbasis: take the Fourier
/// coefficients with exponents 1 and 7 and apply the fixed basis change.
/// Kept as an independent route from the closed form above.
inline CycVector splitter_projection_via_basis(const Natural8& n) {
    for (Index i = 0; i < 8; ++i)
        if (n(i) < 0) throw std::domain_error("splitter_projection_via_basis: entries must be nonnegative");
    const BlockDecomposition dec = cycle_eigenbasis(8);
    const CycVector c = dec.T_inv * natural_to_cyc(n);
    CycVector pair(2);
    pair << c(1), c(7);
    return splitter_basis_change() * pair;
}

struct BlochApproximation {
    std::array<long, 8> multiplicities;
    double error;  // sin of the Fubini-Study angle, in [0, 1]
};

/// Exhaustive search over multiplicity vectors in {0..max_entry}^8 for the
/// one whose projected ray best approximates the target ray (a : b).
inline BlochApproximation approximate_bloch_point(std::complex<double> a, std::complex<double> b,
                                                  long max_entry) {
    if (max_entry < 1) throw std::invalid_argument("approximate_bloch_point: max_entry >= 1 required");
    if (std::abs(a) + std::abs(b) < 1e-300)
        throw std::invalid_argument("approximate_bloch_point: target ray is undefined at the origin");
    double states = 1.0;
    for (int i = 0; i < 8; ++i) states *= static_cast<double>(max_entry + 1);
    if (states > 16'777'216.0)
        throw resource_error("approximate_bloch_point: search space exceeds 2^24 states");

    // Float image of the projection, one column per slot.
    std::complex<double> col[2][8];
    for (int j = 0; j < 8; ++j) {
        Natural8 e = Natural8::Zero();
        e(j) = 1;
        const CycVector psi = splitter_projection(e);
        col[0][j] = to_complex(psi(0));
        col[1][j] = to_complex(psi(1));
    }
    const double target_norm2 = std::norm(a) + std::norm(b);

    BlochApproximation best{{0, 0, 0, 0, 0, 0, 0, 0}, 2.0};
    std::array<long, 8> n{};  // starts at all-zero; skipped below
    while (true) {
        // Odometer increment, index 7 fastest: lexicographic ascending order.
        int pos = 7;
        while (pos >= 0 && n[pos] == max_entry) n[pos--] = 0;
        if (pos < 0) break;
        ++n[pos];

        std::complex<double> p0(0.0, 0.0), p1(0.0, 0.0);
        for (int j = 0; j < 8; ++j) {
            if (n[j] == 0) continue;
            const double w = static_cast<double>(n[j]);
            p0 += w * col[0][j];
            p1 += w * col[1][j];
        }
        const double norm2 = std::norm(p0) + std::norm(p1);
        if (norm2 < 1e-30) continue;  // projects to the zero vector, no ray
        const std::complex<double> overlap = std::conj(p0) * a + std::conj(p1) * b;
        double sin2 = 1.0 - std::norm(overlap) / (norm2 * target_norm2);
        if (sin2 < 0.0) sin2 = 0.0;
        const double err = std::sqrt(sin2);
        if (err < best.error) {
            best.error = err;
            best.multiplicities = n;
        }
    }
    return best;
}

}  // namespace cyq
