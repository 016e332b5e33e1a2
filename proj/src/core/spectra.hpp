#pragma once

#include "core/scheme.hpp"

#include <cstdint>
#include <vector>

namespace ascert {

// First and second eigenmatrices of a commutative scheme over Q(w), with
// Q = n * P^{-1} computed exactly. Row 0 of P holds the valencies, row 0
// of Q the multiplicities, column 0 of P is all ones.
struct EigenData {
    std::int64_t n;
    std::int64_t disc;
    QuadMatrix P;
    QuadMatrix Q;
    std::vector<std::int64_t> valencies;
    std::vector<std::int64_t> multiplicities;
};

// Validates P (column of ones, integral valency row), inverts it exactly,
// and reads the multiplicities off row 0 of Q = nP^{-1}. Throws
// CertificationError if any EigenData invariant fails.
EigenData make_eigen_data(QuadMatrix P, std::int64_t n);

// The four closed-form spectra handled by this library. The parameter m is
// the point count of the underlying class-2 scheme in every case; Doubling
// yields the eigenmatrix of the derived scheme on 2m+1 points.
enum class Family {
    Class2NonSymmetric,  // class 2 on m points, disc -m, m = 3 (mod 4)
    ExtendedDoubleCover, // class 3 on 2(m+1) points, disc -m
    Taylor,              // class 3 on 2(m+1) points, disc +m, m = 1 (mod 4)
    Doubling,            // class 2 on 2m+1 points, disc -(2m+1)
};

EigenData closed_form_eigenmatrix(Family family, std::int64_t m);

// Complex conjugation on Q(w): equals the field automorphism conj for
// disc < 0 and the identity for disc > 0 (the value is then real).
inline Quadratic complex_conj(const Quadratic& x) {
    return x.disc() < 0 ? x.conj() : x;
}

// Primitive idempotents E_nu = (1/n) sum_i Q_{i,nu} A_i. Verifies, exactly:
// E_nu E_mu = delta E_nu, sum E_nu = I, A_i = sum_nu P_{nu,i} E_nu, and
// trace(E_nu) = m_nu. Throws CertificationError if the eigenmatrix does not
// belong to the scheme.
std::vector<QuadMatrix> idempotents_from_eigenmatrix(const Scheme& s, const EigenData& e);

// Structure constants recovered from the spectrum:
//   p_{i,j}^l = (1/(n k_l)) sum_nu m_nu conj(P_{nu,i}) conj(P_{nu,j}) P_{nu,l}
// with complex conjugation. Entries must come out as nonnegative integers.
IntersectionTensor intersection_from_eigen(const EigenData& e,
                                           const std::vector<std::int64_t>& valencies,
                                           std::int64_t n);

// Recovers the eigenmatrix of a certified commutative scheme of class <= 3
// from its intersection matrices, by factoring characteristic polynomials
// over the rationals (linear and quadratic factors only) and intersecting
// eigenspaces of all B_i. Throws UnsupportedError when eigenvalues fall
// outside a single quadratic field.
EigenData eigen_from_intersection(const std::vector<IntMatrix>& b,
                                  const std::vector<std::int64_t>& valencies, std::int64_t n);

// All roots of a monic integer polynomial inside one quadratic field
// Q(sqrt(disc)), with multiplicity; disc = 1 when all roots are rational.
struct PolyRoots {
    std::int64_t disc = 1;
    std::vector<Quadratic> roots;
};
PolyRoots roots_in_quadratic_field(const IntPoly& p);

}  // namespace ascert
