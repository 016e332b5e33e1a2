#include "core/scheme.hpp"

#include <algorithm>
#include <cstddef>

namespace ascert {

namespace {

std::string pos(int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

void RelationMatrix::validate() const {
    if (n <= 0) throw CertificationError("relation matrix must have at least one point");
    if (d < 0) throw CertificationError("negative class");
    if (cells.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw CertificationError("cell count does not match declared size");

    std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int c = cell(x, y);
            if (c < 0 || c > d)
                throw CertificationError("relation index " + std::to_string(c) + " out of range at " +
                                         pos(x, y) + " (class " + std::to_string(d) + ")");
            if (x == y && c != 0)
                throw CertificationError("diagonal cell " + pos(x, y) + " must be 0, got " +
                                         std::to_string(c));
            if (x != y && c == 0)
                throw CertificationError("identity relation off the diagonal at " + pos(x, y));
            seen[static_cast<std::size_t>(c)] = true;
        }
    }
    for (int i = 0; i <= d; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            throw CertificationError("relation index " + std::to_string(i) + " never occurs");
}

Scheme Scheme::from_relation_matrix(RelationMatrix rm) {
    rm.validate();
    const int n = rm.n;
    const int d = rm.d;

    Scheme s;
    s.adjacency_.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) s.adjacency_.emplace_back(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            s.adjacency_[static_cast<std::size_t>(rm.cell(x, y))].at(x, y) = 1;

    // Constant row and column sums per relation.
    s.valencies_.resize(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const IntMatrix& a = s.adjacency_[static_cast<std::size_t>(i)];
        Int k = a.row_sum(0);
        for (int r = 1; r < n; ++r)
            if (a.row_sum(r) != k)
                throw CertificationError("relation " + std::to_string(i) +
                                         " has non-constant row sums (rows 0 and " +
                                         std::to_string(r) + ")");
        for (int c = 0; c < n; ++c)
            if (a.col_sum(c) != k)
                throw CertificationError("relation " + std::to_string(i) +
                                         " has non-constant column sums (column " +
                                         std::to_string(c) + ")");
        s.valencies_[static_cast<std::size_t>(i)] = to_int64(k);
    }

    // Transpose pairing, computed from the matrices rather than assumed.
    s.pairing_.assign(static_cast<std::size_t>(d) + 1, -1);
    s.pairing_[0] = 0;
    for (int i = 1; i <= d; ++i) {
        int partner = -1;
        for (int x = 0; x < n && partner < 0; ++x)
            for (int y = 0; y < n && partner < 0; ++y)
                if (rm.cell(x, y) == i) partner = rm.cell(y, x);
        s.pairing_[static_cast<std::size_t>(i)] = partner;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (rm.cell(y, x) != s.pairing_[static_cast<std::size_t>(rm.cell(x, y))])
                throw CertificationError(
                    "transpose of relation " + std::to_string(rm.cell(x, y)) +
                    " is not a single relation (cell " + pos(x, y) + ")");
    for (int i = 0; i <= d; ++i) {
        int j = s.pairing_[static_cast<std::size_t>(i)];
        if (s.pairing_[static_cast<std::size_t>(j)] != i)
            throw CertificationError("transpose pairing is not an involution at relation " +
                                     std::to_string(i));
    }

    s.rel_ = std::move(rm);
    return s;
}

bool Scheme::symmetric() const {
    for (int i = 0; i <= num_classes(); ++i)
        if (!relation_symmetric(i)) return false;
    return true;
}

Certification certify(const Scheme& s) {
    const int n = s.n();
    const int d = s.num_classes();
    const int k = d + 1;
    const auto& cells = s.relation().cells;

    // Column-major copy so the inner loop walks two contiguous rows.
    std::vector<int> cellsT(cells.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            cellsT[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(x)] =
                cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(y)];

    // For each pair (x,y), count[i*k+j] = #{z : cell(x,z)=i and cell(z,y)=j},
    // which is exactly (A_i A_j)_{x,y}; the scheme axiom is that this table
    // depends only on cell(x,y).
    std::vector<std::int64_t> p(static_cast<std::size_t>(k) * k * k, -1);
    std::vector<std::int64_t> count(static_cast<std::size_t>(k) * k);

    for (int x = 0; x < n; ++x) {
        const int* row = &cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n)];
        for (int y = 0; y < n; ++y) {
            std::fill(count.begin(), count.end(), 0);
            const int* col = &cellsT[static_cast<std::size_t>(y) * static_cast<std::size_t>(n)];
            for (int z = 0; z < n; ++z)
                ++count[static_cast<std::size_t>(row[z]) * static_cast<std::size_t>(k) +
                        static_cast<std::size_t>(col[z])];

            const int l = row[y];
            std::int64_t* pl =
                &p[static_cast<std::size_t>(l) * static_cast<std::size_t>(k) * k];
            if (pl[0] < 0) {
                std::copy(count.begin(), count.end(), pl);
            } else {
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        std::int64_t c =
                            count[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                                  static_cast<std::size_t>(j)];
                        std::int64_t expect =
                            pl[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                               static_cast<std::size_t>(j)];
                        if (c != expect)
                            throw CertificationError(
                                "not an association scheme: (A_" + std::to_string(i) + " A_" +
                                std::to_string(j) + ") is not constant on relation " +
                                std::to_string(l) + ": entry " + pos(x, y) + " gives " +
                                std::to_string(c) + ", expected " + std::to_string(expect));
                    }
            }
        }
    }

    Certification cert;
    cert.tensor.d = d;
    cert.tensor.p.resize(static_cast<std::size_t>(k) * k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                cert.tensor.at(i, j, l) =
                    p[(static_cast<std::size_t>(l) * k + static_cast<std::size_t>(i)) * k +
                      static_cast<std::size_t>(j)];

    cert.commutative = true;
    for (int i = 0; i < k && cert.commutative; ++i)
        for (int j = 0; j < k && cert.commutative; ++j)
            for (int l = 0; l < k; ++l)
                if (cert.tensor.at(i, j, l) != cert.tensor.at(j, i, l)) {
                    cert.commutative = false;
                    break;
                }
    cert.symmetric = s.symmetric();
    return cert;
}

std::vector<IntMatrix> intersection_matrices(const Scheme& s, const IntersectionTensor& t) {
    const int k = s.num_classes() + 1;
    if (t.d != s.num_classes())
        throw std::invalid_argument("tensor class does not match scheme class");
    std::vector<IntMatrix> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        IntMatrix b(k, k);
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) b.at(j, l) = t.at(i, j, l);
        out.push_back(std::move(b));
    }
    return out;
}

Class2Report check_class2_nonsym_identities(const Scheme& s) {
    if (s.num_classes() != 2)
        throw PreconditionError("class-2 scheme required, got class " +
                                std::to_string(s.num_classes()));
    if (s.pairing(1) != 2 || s.pairing(2) != 1)
        throw PreconditionError("non-symmetric class-2 scheme required (relations 1 and 2 must be "
                                "a transpose pair)");
    const std::int64_t m = s.n();
    if (m % 4 != 3)
        throw CertificationError("point count " + std::to_string(m) + " is not 3 (mod 4)");

    const IntMatrix& a0 = s.adjacency(0);
    const IntMatrix& a1 = s.adjacency(1);
    const IntMatrix& a2 = s.adjacency(2);
    const Int half = (m - 1) / 2;
    const Int qlow = (m - 3) / 4;
    const Int qhigh = (m + 1) / 4;

    const IntMatrix a1a1 = a1 * a1;
    const IntMatrix a2a2 = a2 * a2;
    const IntMatrix a1a2 = a1 * a2;
    const IntMatrix a2a1 = a2 * a1;
    const IntMatrix sum12 = a1 + a2;

    if (a1a1 != qlow * a1 + qhigh * a2)
        throw CertificationError("identity A1^2 = ((m-3)/4)A1 + ((m+1)/4)A2 fails");
    if (a2a2 != qhigh * a1 + qlow * a2)
        throw CertificationError("identity A2^2 = ((m+1)/4)A1 + ((m-3)/4)A2 fails");
    const IntMatrix mixed = half * a0 + qlow * sum12;
    if (a1a2 != mixed || a2a1 != mixed)
        throw CertificationError("identity A1A2 = ((m-1)/2)A0 + ((m-3)/4)(A1+A2) fails");
    if (a1a1 + a2a2 != half * sum12)
        throw CertificationError("identity A1^2 + A2^2 = ((m-1)/2)(A1+A2) fails");
    if (IntMatrix::ones(s.n()) + Int(2) * a1a2 != Int(m) * a0 + half * sum12)
        throw CertificationError("identity J + 2A1A2 = mA0 + ((m-1)/2)(A1+A2) fails");

    return Class2Report{m, to_int64(half), to_int64(qlow), to_int64(qhigh)};
}

Scheme permute_points(const Scheme& s, const std::vector<int>& sigma) {
    const int n = s.n();
    if (sigma.size() != static_cast<std::size_t>(n))
        throw PreconditionError("permutation length " + std::to_string(sigma.size()) +
                                " does not match point count " + std::to_string(n));
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : sigma) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
            throw PreconditionError("not a permutation");
        hit[static_cast<std::size_t>(v)] = true;
    }

    RelationMatrix out;
    out.n = n;
    out.d = s.num_classes();
    out.cells.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out.cell(sigma[static_cast<std::size_t>(x)], sigma[static_cast<std::size_t>(y)]) =
                s.relation().cell(x, y);
    return Scheme::from_relation_matrix(std::move(out));
}

bool relations_equal(const Scheme& a, const Scheme& b) {
    if (a.n() != b.n())
        throw PreconditionError("schemes have different point counts: " + std::to_string(a.n()) +
                                " vs " + std::to_string(b.n()));
    return a.relation() == b.relation();
}

}  // namespace ascert
