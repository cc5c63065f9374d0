// eigensystem.hpp — complex eigenvalues, biorthogonal eigenvector sets, and
// the two inner products the non-Hermitian machinery keeps distinct:
// the bilinear form u.v (no conjugation, used by the orthonormality condition
// <phi*|phi> = 1) and the Hermitian form <u|v> (conjugated, used by the
// overlap diagnostics A and B).
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace epspectra {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// z = E - (i/2) Gamma: resonance energy and decay width.
struct ComplexEigenvalue {
    Complex value{};

    double energy() const { return value.real(); }
    double width() const { return -2.0 * value.imag(); }
};

// Bilinear form: sum_k u_k v_k, no conjugation.
Complex bilinear_overlap(const ComplexVector& u, const ComplexVector& v);

// Hermitian form: sum_k conj(u_k) v_k.
Complex hermitian_overlap(const ComplexVector& u, const ComplexVector& v);

// Euclidean norm.
double norm2(const ComplexVector& v);

// Paired eigenvalues and eigenvectors of a complex (symmetric) matrix.
//
// right_vectors holds phi_lambda.  left_vectors holds psi_lambda in the
// Hermitian pairing convention <psi_lambda|phi_mu> = delta; for complex
// symmetric input psi_lambda is the componentwise conjugate of phi_lambda.
// normalized[k] records whether the Eq.-(3)-style normalization
// (phi_k)^2 = 1 succeeded; it is cleared when the state sits too close to a
// degeneracy or its bilinear self-overlap falls below threshold (both signal
// proximity to an exceptional point), in which case the vectors are kept at
// unit Euclidean norm instead.
struct Eigensystem {
    std::vector<ComplexEigenvalue> eigenvalues;
    std::vector<ComplexVector> right_vectors;
    std::vector<ComplexVector> left_vectors;
    std::vector<bool> normalized;
    double residual_norm = 0.0;  // max_k |H phi_k - z_k phi_k| / |H|_F

    std::size_t size() const { return eigenvalues.size(); }
    Complex z(std::size_t k) const { return eigenvalues[k].value; }
    std::vector<Complex> values() const;
    bool all_normalized() const;
};

}  // namespace epspectra
