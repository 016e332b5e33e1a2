#include "core/construct.hpp"

#include "core/errors.hpp"

#include <numeric>
#include <string>

namespace ascert {

namespace {

std::vector<bool> nonzero_squares_mod(std::int64_t p) {
    std::vector<bool> qr(static_cast<std::size_t>(p), false);
    for (std::int64_t x = 1; x < p; ++x) qr[static_cast<std::size_t>((x * x) % p)] = true;
    return qr;
}

void require_class2_nonsym(const Scheme& s, const char* what) {
    if (s.num_classes() != 2 || s.pairing(1) != 2)
        throw PreconditionError(std::string(what) +
                                " requires a non-symmetric class-2 scheme (got class " +
                                std::to_string(s.num_classes()) + ", " +
                                (s.symmetric() ? "symmetric" : "non-symmetric") + ")");
}

// 0/1 pattern as a bit-ish matrix for block assembly.
struct Pattern {
    int n = 0;
    std::vector<char> bits;

    explicit Pattern(int n_) : n(n_), bits(static_cast<std::size_t>(n_) * n_, 0) {}
    char& at(int x, int y) {
        return bits[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(y)];
    }
    char at(int x, int y) const {
        return bits[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(y)];
    }
};

// The cover digraph pattern C1 of the extended double cover.
Pattern cover_pattern(const Scheme& s) {
    const int m = s.n();
    const auto& rel = s.relation();
    const int top = 0;
    const int c1 = 1;        // first copy at offset 1
    const int c2 = 1 + m;    // second copy
    const int bottom = 2 * m + 1;

    Pattern p(2 * (m + 1));
    for (int y = 0; y < m; ++y) p.at(top, c1 + y) = 1;
    for (int x = 0; x < m; ++x) {
        p.at(c1 + x, bottom) = 1;
        p.at(c2 + x, top) = 1;
        for (int y = 0; y < m; ++y) {
            int r = rel.cell(x, y);
            if (r == 1) {
                p.at(c1 + x, c1 + y) = 1;
                p.at(c2 + x, c2 + y) = 1;
            } else if (r == 2) {
                p.at(c1 + x, c2 + y) = 1;
                p.at(c2 + x, c1 + y) = 1;
            }
        }
    }
    for (int y = 0; y < m; ++y) p.at(bottom, c2 + y) = 1;
    return p;
}

// Relation matrix from a digraph pattern: 1 on the pattern, 2 on its
// transpose, `rest` elsewhere off the diagonal (rest = 0 means the pattern
// and its transpose must already cover everything).
RelationMatrix relations_from_digraph(const Pattern& pat, int rest, int d) {
    const int n = pat.n;
    RelationMatrix rm;
    rm.n = n;
    rm.d = d;
    rm.cells.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) {
                if (pat.at(x, y))
                    throw CertificationError("cover pattern touches the diagonal at point " +
                                             std::to_string(x));
                continue;
            }
            bool fwd = pat.at(x, y);
            bool bwd = pat.at(y, x);
            if (fwd && bwd)
                throw CertificationError("cover pattern overlaps its transpose at (" +
                                         std::to_string(x) + "," + std::to_string(y) + ")");
            if (fwd)
                rm.cell(x, y) = 1;
            else if (bwd)
                rm.cell(x, y) = 2;
            else if (rest > 0)
                rm.cell(x, y) = rest;
            else
                throw CertificationError("pattern and its transpose do not cover (" +
                                         std::to_string(x) + "," + std::to_string(y) + ")");
        }
    return rm;
}

}  // namespace

Scheme paley_tournament(std::int64_t m) {
    if (!is_prime(m) || m % 4 != 3)
        throw PreconditionError("paley tournament needs a prime m = 3 (mod 4), got " +
                                std::to_string(m));
    auto qr = nonzero_squares_mod(m);
    RelationMatrix rm;
    rm.n = static_cast<int>(m);
    rm.d = 2;
    rm.cells.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (x == y) continue;
            std::int64_t diff = ((y - x) % m + m) % m;
            rm.cell(x, y) = qr[static_cast<std::size_t>(diff)] ? 1 : 2;
        }
    return Scheme::from_relation_matrix(std::move(rm));
}

Scheme paley_graph(std::int64_t q) {
    if (!is_prime(q) || q % 4 != 1)
        throw PreconditionError("paley graph needs a prime q = 1 (mod 4), got " +
                                std::to_string(q));
    auto qr = nonzero_squares_mod(q);
    RelationMatrix rm;
    rm.n = static_cast<int>(q);
    rm.d = 2;
    rm.cells.assign(static_cast<std::size_t>(q) * static_cast<std::size_t>(q), 0);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            if (x == y) continue;
            std::int64_t diff = ((y - x) % q + q) % q;
            rm.cell(x, y) = qr[static_cast<std::size_t>(diff)] ? 1 : 2;
        }
    return Scheme::from_relation_matrix(std::move(rm));
}

Scheme extended_double_cover(const Scheme& s) {
    require_class2_nonsym(s, "extended double cover");
    return Scheme::from_relation_matrix(relations_from_digraph(cover_pattern(s), 3, 3));
}

CoverProductReport check_edc_product_identities(const Scheme& s) {
    if (s.num_classes() != 3)
        throw PreconditionError("cover product check requires a class-3 scheme");
    if (s.n() % 2 != 0)
        throw PreconditionError("cover scheme must have an even point count");
    const std::int64_t m = s.n() / 2 - 1;
    if (m < 3 || m % 4 != 3)
        throw PreconditionError("cover parameter m = " + std::to_string(m) +
                                " is not 3 (mod 4)");

    const IntMatrix& c0 = s.adjacency(0);
    const IntMatrix& c1 = s.adjacency(1);
    const IntMatrix& c2 = s.adjacency(2);
    const IntMatrix& c3 = s.adjacency(3);
    const Int half = (m - 1) / 2;

    const IntMatrix sum12 = c1 + c2;
    const IntMatrix sq_expected = half * sum12 + Int(m) * c3;
    if (c1 * c1 != sq_expected)
        throw CertificationError("identity C1^2 = ((m-1)/2)(C1+C2) + mC3 fails");
    if (c2 * c2 != sq_expected)
        throw CertificationError("identity C2^2 = ((m-1)/2)(C1+C2) + mC3 fails");

    const IntMatrix mixed_expected = Int(m) * c0 + half * sum12;
    if (c1 * c2 != mixed_expected || c2 * c1 != mixed_expected)
        throw CertificationError("identity C1C2 = C2C1 = mC0 + ((m-1)/2)(C1+C2) fails");

    if (c1 * c3 != c2 || c3 * c1 != c2)
        throw CertificationError("identity C1C3 = C3C1 = C2 fails");
    if (c2 * c3 != c1 || c3 * c2 != c1)
        throw CertificationError("identity C2C3 = C3C2 = C1 fails");
    if (c3 * c3 != c0) throw CertificationError("identity C3^2 = C0 fails");

    return CoverProductReport{m, to_int64(half)};
}

Scheme reverse(const Scheme& s) {
    RelationMatrix rm = s.relation();
    for (auto& c : rm.cells) c = s.pairing(c);
    return Scheme::from_relation_matrix(std::move(rm));
}

Scheme taylor_extension(const Scheme& s) {
    if (s.num_classes() != 2 || !s.symmetric())
        throw PreconditionError("taylor extension requires a symmetric class-2 scheme");
    Certification cert = certify(s);
    if (s.valency(1) != 2 * cert.tensor.at(1, 1, 2))
        throw PreconditionError("taylor extension requires k = 2*mu, got k = " +
                                std::to_string(s.valency(1)) + ", mu = " +
                                std::to_string(cert.tensor.at(1, 1, 2)));

    const int m = s.n();
    const auto& rel = s.relation();
    const int n = 2 * (m + 1);
    const int top = 0;
    const int c1 = 1;
    const int c2 = 1 + m;
    const int bottom = n - 1;

    Pattern d1(n), d2(n);
    for (int y = 0; y < m; ++y) {
        d1.at(top, c1 + y) = 1;
        d1.at(c1 + y, top) = 1;
        d1.at(bottom, c2 + y) = 1;
        d1.at(c2 + y, bottom) = 1;
        d2.at(top, c2 + y) = 1;
        d2.at(c2 + y, top) = 1;
        d2.at(bottom, c1 + y) = 1;
        d2.at(c1 + y, bottom) = 1;
    }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int r = rel.cell(x, y);
            if (r == 1) {
                d1.at(c1 + x, c1 + y) = 1;
                d1.at(c2 + x, c2 + y) = 1;
                d2.at(c1 + x, c2 + y) = 1;
                d2.at(c2 + x, c1 + y) = 1;
            } else if (r == 2) {
                d1.at(c1 + x, c2 + y) = 1;
                d1.at(c2 + x, c1 + y) = 1;
                d2.at(c1 + x, c1 + y) = 1;
                d2.at(c2 + x, c2 + y) = 1;
            }
        }

    RelationMatrix rm;
    rm.n = n;
    rm.d = 3;
    rm.cells.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            bool e1 = d1.at(x, y);
            bool e2 = d2.at(x, y);
            if (e1 && e2)
                throw CertificationError("taylor blocks overlap at (" + std::to_string(x) + "," +
                                         std::to_string(y) + ")");
            rm.cell(x, y) = e1 ? 1 : e2 ? 2 : 3;
        }
    return Scheme::from_relation_matrix(std::move(rm));
}

Scheme doubling(const Scheme& s) {
    require_class2_nonsym(s, "doubling");
    const int m = s.n();
    const auto& rel = s.relation();
    const int fresh = 0;
    const int c1 = 1;
    const int c2 = 1 + m;

    Pattern p(2 * m + 1);
    for (int y = 0; y < m; ++y) p.at(fresh, c1 + y) = 1;
    for (int x = 0; x < m; ++x) {
        p.at(c2 + x, fresh) = 1;
        p.at(c1 + x, c2 + x) = 1;  // the +I block
        for (int y = 0; y < m; ++y) {
            int r = rel.cell(x, y);
            if (r == 1) p.at(c1 + x, c1 + y) = 1;
            if (r == 2) {
                p.at(c1 + x, c2 + y) = 1;
                p.at(c2 + x, c1 + y) = 1;
                p.at(c2 + x, c2 + y) = 1;
            }
        }
    }
    return Scheme::from_relation_matrix(relations_from_digraph(p, 0, 2));
}

Scheme edc_of_doubling_blockform(const Scheme& s) {
    require_class2_nonsym(s, "block-form cover of the doubling");
    const int m = s.n();
    const int half = 2 * (m + 1);
    const int n = 2 * half;

    Pattern c1 = cover_pattern(s);
    auto c2_at = [&](int x, int y) { return c1.at(y, x); };
    auto c3_at = [&](int x, int y) {
        return static_cast<char>(x != y && !c1.at(x, y) && !c2_at(x, y));
    };
    auto id_at = [&](int x, int y) { return static_cast<char>(x == y); };

    RelationMatrix rm;
    rm.n = n;
    rm.d = 3;
    rm.cells.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        const int bx = x / half, ox = x % half;
        for (int y = 0; y < n; ++y) {
            const int by = y / half, oy = y % half;
            char e1, e2, e3;
            if (bx == 0 && by == 0) {
                e1 = c1.at(ox, oy);
                e2 = c2_at(ox, oy);
                e3 = c3_at(ox, oy);
            } else if (bx == 0 && by == 1) {
                e1 = static_cast<char>(c2_at(ox, oy) || id_at(ox, oy));
                e2 = static_cast<char>(c1.at(ox, oy) || c3_at(ox, oy));
                e3 = 0;
            } else if (bx == 1 && by == 0) {
                e1 = static_cast<char>(c2_at(ox, oy) || c3_at(ox, oy));
                e2 = static_cast<char>(c1.at(ox, oy) || id_at(ox, oy));
                e3 = 0;
            } else {
                e1 = c2_at(ox, oy);
                e2 = c1.at(ox, oy);
                e3 = c3_at(ox, oy);
            }
            if (x == y) {
                if (e1 || e2 || e3)
                    throw CertificationError("block form touches the diagonal at point " +
                                             std::to_string(x));
                rm.cell(x, y) = 0;
            } else {
                if (static_cast<int>(e1) + static_cast<int>(e2) + static_cast<int>(e3) != 1)
                    throw CertificationError("block form relations do not partition at (" +
                                             std::to_string(x) + "," + std::to_string(y) + ")");
                rm.cell(x, y) = e1 ? 1 : e2 ? 2 : 3;
            }
        }
    }
    return Scheme::from_relation_matrix(std::move(rm));
}

std::vector<int> edc_doubling_alignment(std::int64_t m) {
    if (m < 3 || m % 4 != 3)
        throw PreconditionError("alignment permutation needs m = 3 (mod 4), got " +
                                std::to_string(m));
    const int mi = static_cast<int>(m);
    const std::vector<int> sizes = {1, 1, mi, mi, 1, mi, mi, 1};
    const std::vector<int> order = {5, 6, 3, 2, 1, 7, 4, 8};  // 1-based source blocks

    std::vector<int> offset(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        offset[i + 1] = offset[i] + sizes[i];

    std::vector<int> sigma(static_cast<std::size_t>(offset.back()), -1);
    int pos = 0;
    for (int source : order) {
        const int b = source - 1;
        for (int t = 0; t < sizes[static_cast<std::size_t>(b)]; ++t)
            sigma[static_cast<std::size_t>(offset[static_cast<std::size_t>(b)] + t)] = pos++;
    }
    return sigma;
}

SkewHadamardMatrix skew_hadamard_from_tournament(const Scheme& s) {
    require_class2_nonsym(s, "skew Hadamard bordering");
    const int m = s.n();
    const int n = m + 1;
    const auto& rel = s.relation();

    SkewHadamardMatrix h;
    h.order = n;
    h.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 1);
    auto set = [&](int r, int c, int v) {
        h.entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(c)] = v;
    };
    for (int x = 0; x < m; ++x) {
        set(x + 1, 0, -1);
        for (int y = 0; y < m; ++y) {
            if (x == y)
                set(x + 1, y + 1, 1);
            else
                set(x + 1, y + 1, rel.cell(x, y) == 1 ? 1 : -1);
        }
    }

    // Both defining identities, verified exactly.
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int sym = h.at(r, c) + h.at(c, r);
            if (sym != (r == c ? 2 : 0))
                throw CertificationError("bordered matrix is not of skew type at (" +
                                         std::to_string(r) + "," + std::to_string(c) + ")");
            std::int64_t dot = 0;
            for (int t = 0; t < n; ++t)
                dot += static_cast<std::int64_t>(h.at(r, t)) * h.at(c, t);
            if (dot != (r == c ? static_cast<std::int64_t>(n) : 0))
                throw CertificationError("bordered matrix fails H H^T = nI at (" +
                                         std::to_string(r) + "," + std::to_string(c) + ")");
        }
    return h;
}

DoublingCoverEquivalence check_doubling_cover_equivalence(std::int64_t m) {
    Scheme base = paley_tournament(m);
    Scheme doubled = doubling(base);
    check_class2_nonsym_identities(doubled);

    Scheme direct = extended_double_cover(doubled);
    Scheme block = edc_of_doubling_blockform(base);
    Scheme aligned = permute_points(direct, edc_doubling_alignment(m));

    DoublingCoverEquivalence eq;
    eq.m = m;
    eq.order = block.n();
    eq.cells_equal = relations_equal(aligned, block);
    eq.tensors_equal = certify(aligned).tensor == certify(block).tensor;
    return eq;
}

}  // namespace ascert
