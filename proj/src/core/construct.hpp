#pragma once

#include "core/scheme.hpp"

#include <cstdint>
#include <vector>

namespace ascert {

// +/-1 matrix with H + H^T = 2I and H H^T = order * I, both verified
// exactly on construction.
struct SkewHadamardMatrix {
    int order = 0;
    std::vector<int> entries;  // row-major, +1 / -1

    int at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(order) +
                       static_cast<std::size_t>(c)];
    }
};

// Quadratic-residue tournament on a prime m = 3 (mod 4):
// x -> y iff y - x is a nonzero square mod m.
Scheme paley_tournament(std::int64_t m);

// Quadratic-residue graph on a prime q = 1 (mod 4), as a symmetric class-2
// scheme with relation 1 the graph edges.
Scheme paley_graph(std::int64_t q);

// Class-3 scheme on 2(m+1) points from a non-symmetric class-2 scheme on m
// points. Point order: top point, first copy of X, second copy of X,
// bottom point. Relation 1 is the cover digraph C1, relation 2 = C1^T,
// relation 3 the antipodal pairing.
Scheme extended_double_cover(const Scheme& s);

// Exact product identities of the cover matrices, via literal matrix
// products:
//   C1^2 = C2^2 = ((m-1)/2)(C1+C2) + m C3
//   C1C2 = C2C1 = m C0 + ((m-1)/2)(C1+C2)
//   C1C3 = C3C1 = C2,  C2C3 = C3C2 = C1,  C3^2 = C0
struct CoverProductReport {
    std::int64_t m = 0;
    std::int64_t half = 0;  // (m-1)/2
};
CoverProductReport check_edc_product_identities(const Scheme& s_edc);

// Swaps the labels of every transpose pair of relations.
Scheme reverse(const Scheme& s);

// Symmetric class-3 scheme on 2(m+1) points from a symmetric class-2
// scheme with k = 2*mu on m points; relation 1 is a Taylor graph.
Scheme taylor_extension(const Scheme& s);

// Non-symmetric class-2 scheme on 2m+1 points from one on m points.
// Point order: new point, first copy of X, second copy of X.
Scheme doubling(const Scheme& s);

// Direct block form of the extended double cover of the doubling, on
// 4(m+1) points:
//   C1' = [C1, C2+I; C2+C3, C2],  C2' = [C2, C1+C3; C1+I, C1],
//   C3' = diag(C3, C3)
// where C0..C3 are the cover matrices of s.
Scheme edc_of_doubling_blockform(const Scheme& s);

// Point permutation aligning extended_double_cover(doubling(s)) with
// edc_of_doubling_blockform(s): the eight natural blocks of sizes
// [1,1,m,m,1,m,m,1] rearranged in the order [5,6,3,2,1,7,4,8].
// Returns sigma with sigma[old index] = new index, for permute_points.
std::vector<int> edc_doubling_alignment(std::int64_t m);

// Bordered +/-1 matrix of order m+1 from a non-symmetric class-2 scheme:
// first row all +1, diagonal +1, lower-left border -1, core A1 - A2 + I.
SkewHadamardMatrix skew_hadamard_from_tournament(const Scheme& s);

// End-to-end equivalence check between the permuted direct construction
// and the block form, starting from the quadratic-residue tournament on m.
struct DoublingCoverEquivalence {
    std::int64_t m = 0;
    std::int64_t order = 0;  // 4(m+1)
    bool cells_equal = false;
    bool tensors_equal = false;
    bool pass() const { return cells_equal && tensors_equal; }
};
DoublingCoverEquivalence check_doubling_cover_equivalence(std::int64_t m);

}  // namespace ascert
