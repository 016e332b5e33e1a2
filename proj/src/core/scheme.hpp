#pragma once

#include "core/errors.hpp"
#include "core/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ascert {

// Partition of X x X by relation indices 0..d, index 0 reserved for the
// identity relation: cell(x,x) = 0 and cell(x,y) > 0 for x != y.
struct RelationMatrix {
    int n = 0;
    int d = 0;
    std::vector<int> cells;  // row-major, n*n

    int cell(int x, int y) const {
        return cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(y)];
    }
    int& cell(int x, int y) {
        return cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(y)];
    }

    // Checks index range, diagonal/off-diagonal structure, and that every
    // index 0..d occurs. Throws CertificationError.
    void validate() const;

    friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;
};

// A relation partition together with its adjacency matrices, valencies and
// transpose pairing. Construction validates constant row/column sums and
// transpose closure; it does not by itself prove the scheme axioms — see
// certify(). Immutable after construction.
class Scheme {
public:
    static Scheme from_relation_matrix(RelationMatrix rm);

    int n() const { return rel_.n; }
    int num_classes() const { return rel_.d; }
    const RelationMatrix& relation() const { return rel_; }
    const IntMatrix& adjacency(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }
    std::int64_t valency(int i) const { return valencies_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& valencies() const { return valencies_; }
    int pairing(int i) const { return pairing_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& pairings() const { return pairing_; }
    bool relation_symmetric(int i) const { return pairing_[static_cast<std::size_t>(i)] == i; }
    bool symmetric() const;

private:
    Scheme() = default;

    RelationMatrix rel_;
    std::vector<IntMatrix> adjacency_;
    std::vector<std::int64_t> valencies_;
    std::vector<int> pairing_;
};

// Structure constants p_{i,j}^l of the adjacency algebra, (d+1)^3 values.
struct IntersectionTensor {
    int d = 0;
    std::vector<std::int64_t> p;  // [i][j][l] row-major

    std::int64_t at(int i, int j, int l) const {
        const std::size_t k = static_cast<std::size_t>(d) + 1;
        return p[(static_cast<std::size_t>(i) * k + static_cast<std::size_t>(j)) * k +
                 static_cast<std::size_t>(l)];
    }
    std::int64_t& at(int i, int j, int l) {
        const std::size_t k = static_cast<std::size_t>(d) + 1;
        return p[(static_cast<std::size_t>(i) * k + static_cast<std::size_t>(j)) * k +
                 static_cast<std::size_t>(l)];
    }

    friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;
};

struct Certification {
    IntersectionTensor tensor;
    bool commutative = false;
    bool symmetric = false;
};

// Verifies that every product A_i A_j expands as sum_l p_{i,j}^l A_l with
// constant coefficients, by exact computation of every product entry.
// Throws CertificationError naming the first violated identity.
Certification certify(const Scheme& s);

// (B_i)_{j,l} = p_{i,j}^l.
std::vector<IntMatrix> intersection_matrices(const Scheme& s, const IntersectionTensor& t);

// Exact identity checks satisfied by non-symmetric class-2 schemes
// (doubly regular tournaments) on m points, m = 3 (mod 4):
//   A1^2        = ((m-3)/4) A1 + ((m+1)/4) A2
//   A2^2        = ((m+1)/4) A1 + ((m-3)/4) A2
//   A1 A2       = ((m-1)/2) A0 + ((m-3)/4)(A1+A2)    (= A2 A1)
//   A1^2 + A2^2 = ((m-1)/2)(A1+A2)
//   J + 2 A1 A2 = m A0 + ((m-1)/2)(A1+A2)
// Verified with literal matrix products.
struct Class2Report {
    std::int64_t m = 0;
    std::int64_t half = 0;          // (m-1)/2
    std::int64_t quarter_low = 0;   // (m-3)/4
    std::int64_t quarter_high = 0;  // (m+1)/4
};
Class2Report check_class2_nonsym_identities(const Scheme& s);

// cell'(sigma(x), sigma(y)) = cell(x, y).
Scheme permute_points(const Scheme& s, const std::vector<int>& sigma);

// Cell-for-cell equality under the same labeling.
bool relations_equal(const Scheme& a, const Scheme& b);

}  // namespace ascert
