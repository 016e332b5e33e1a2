// Acceptance suite: one line per criterion, every check exact (tolerance 0).

#include "core/construct.hpp"
#include "core/sio.hpp"
#include "core/spectra.hpp"

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace ascert;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    std::string detail;
    bool ok = true;
    try {
        body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, label.c_str());
    if (!ok) {
        ++g_failures;
        std::printf("       %s\n", detail.c_str());
    }
}

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

const std::vector<std::int64_t> kTournamentSizes{3, 7, 11, 19, 23, 31};
const std::vector<std::int64_t> kDoublingSizes{3, 7, 11};
const std::vector<std::int64_t> kGraphSizes{5, 13};

// Frozen first eigenmatrix of the cover families: rows
// (1,m,m,1), (1,w,-w,-1), (1,-w,w,-1), (1,-1,-1,1) over w^2 = disc.
QuadMatrix cover_eigenmatrix(std::int64_t m, std::int64_t disc) {
    QuadMatrix p(4, 4, disc);
    const Quadratic one = Quadratic::rational(Rational(1), disc);
    const Quadratic w = Quadratic::root(disc);
    for (int r = 0; r < 4; ++r) p.at(r, 0) = one;
    p.at(0, 1) = Quadratic::rational(Rational(m), disc);
    p.at(0, 2) = Quadratic::rational(Rational(m), disc);
    p.at(0, 3) = one;
    p.at(1, 1) = w;
    p.at(1, 2) = -w;
    p.at(1, 3) = -one;
    p.at(2, 1) = -w;
    p.at(2, 2) = w;
    p.at(2, 3) = -one;
    p.at(3, 1) = -one;
    p.at(3, 2) = -one;
    p.at(3, 3) = one;
    return p;
}

EigenData recovered_eigen(const Scheme& s) {
    return eigen_from_intersection(intersection_matrices(s, certify(s).tensor), s.valencies(),
                                   s.n());
}

}  // namespace

int main() {
    criterion(1, "class-2 identities for the quadratic-residue tournaments", [] {
        for (std::int64_t m : kTournamentSizes) {
            Scheme t = paley_tournament(m);
            Certification cert = certify(t);
            require(!cert.symmetric && cert.commutative && t.num_classes() == 2,
                    "wrong symmetry type at m=" + std::to_string(m));
            require(cert.tensor.at(1, 1, 1) == (m - 3) / 4, "p_{1,1}^1 at m=" + std::to_string(m));
            require(cert.tensor.at(1, 1, 2) == (m + 1) / 4, "p_{1,1}^2 at m=" + std::to_string(m));
            require(cert.tensor.at(1, 2, 0) == (m - 1) / 2, "p_{1,2}^0 at m=" + std::to_string(m));
            check_class2_nonsym_identities(t);  // all five exact matrix identities
        }
    });

    criterion(2, "cover construction: intersection matrices, eigenmatrix, idempotents", [] {
        for (std::int64_t m : kTournamentSizes) {
            Scheme cover = extended_double_cover(paley_tournament(m));
            Certification cert = certify(cover);
            require(cover.n() == 2 * (m + 1), "order at m=" + std::to_string(m));
            require(cover.num_classes() == 3, "class at m=" + std::to_string(m));

            const std::int64_t h = (m - 1) / 2;
            const std::int64_t b1[4][4] = {
                {0, 1, 0, 0}, {0, h, h, m}, {m, h, h, 0}, {0, 0, 1, 0}};
            const std::int64_t b2[4][4] = {
                {0, 0, 1, 0}, {m, h, h, 0}, {0, h, h, m}, {0, 1, 0, 0}};
            const std::int64_t b3[4][4] = {
                {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
            auto b = intersection_matrices(cover, cert.tensor);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    require(b[1].at(r, c) == b1[r][c], "B1 entry at m=" + std::to_string(m));
                    require(b[2].at(r, c) == b2[r][c], "B2 entry at m=" + std::to_string(m));
                    require(b[3].at(r, c) == b3[r][c], "B3 entry at m=" + std::to_string(m));
                }

            EigenData e = eigen_from_intersection(b, cover.valencies(), cover.n());
            require(e.P == cover_eigenmatrix(m, -m),
                    "first eigenmatrix differs at m=" + std::to_string(m));
            require(e.multiplicities ==
                        std::vector<std::int64_t>{1, (m + 1) / 2, (m + 1) / 2, m},
                    "multiplicities at m=" + std::to_string(m));

            // Orthogonal idempotents, completeness, reconstruction, traces.
            auto idem = idempotents_from_eigenmatrix(cover, e);

            // Idempotent coefficients per relation class: E_0 is J/n, E_3 has
            // (m, -1, -1, m)/n, E_1/E_2 have (1/4, -+w/(4m), +-w/(4m), -1/4).
            const std::int64_t n = cover.n();
            const Quadratic coeff_e1[4] = {
                Quadratic::rational(Rational(1, 4), -m),
                Quadratic(Rational(0), Rational(Int(-1), Int(4 * m)), -m),
                Quadratic(Rational(0), Rational(Int(1), Int(4 * m)), -m),
                Quadratic::rational(Rational(-1, 4), -m)};
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    const int cell = cover.relation().cell(x, y);
                    require(idem[0].at(x, y) == Quadratic::rational(Rational(Int(1), Int(n)), -m),
                            "E_0 is not J/n at m=" + std::to_string(m));
                    require(idem[3].at(x, y) ==
                                Quadratic::rational(
                                    Rational(Int(cell == 0 || cell == 3 ? m : -1), Int(n)), -m),
                            "E_3 entry at m=" + std::to_string(m));
                    require(idem[1].at(x, y) == coeff_e1[cell],
                            "E_1 entry at m=" + std::to_string(m));
                    require(idem[2].at(x, y) == coeff_e1[cell].conj(),
                            "E_2 entry at m=" + std::to_string(m));
                }
        }
    });

    criterion(3, "cover product identities hold for every constructed cover", [] {
        for (std::int64_t m : kTournamentSizes) {
            CoverProductReport rep =
                check_edc_product_identities(extended_double_cover(paley_tournament(m)));
            require(rep.m == m && rep.half == (m - 1) / 2,
                    "report parameters at m=" + std::to_string(m));
        }
    });

    criterion(4, "cover orders for m in {3,7,11} are {8,16,24}", [] {
        const std::vector<std::int64_t> expected{8, 16, 24};
        for (std::size_t i = 0; i < kDoublingSizes.size(); ++i) {
            Scheme cover = extended_double_cover(paley_tournament(kDoublingSizes[i]));
            require(cover.n() == expected[i],
                    "order " + std::to_string(cover.n()) + " != " + std::to_string(expected[i]));
        }
    });

    criterion(5, "doubling certifies with eigenvalues (-1 +- sqrt(-(2m+1)))/2", [] {
        for (std::int64_t m : kDoublingSizes) {
            Scheme doubled = doubling(paley_tournament(m));
            const std::int64_t points = 2 * m + 1;
            require(doubled.n() == points, "order at m=" + std::to_string(m));
            Certification cert = certify(doubled);
            require(!cert.symmetric && doubled.num_classes() == 2,
                    "symmetry type at m=" + std::to_string(m));
            require(check_class2_nonsym_identities(doubled).m == points,
                    "identity parameter at m=" + std::to_string(m));

            EigenData e = recovered_eigen(doubled);
            require(e.disc == -points, "disc at m=" + std::to_string(m));
            require(e.P.at(1, 1) == Quadratic(Rational(-1, 2), Rational(1, 2), -points),
                    "eigenvalue at m=" + std::to_string(m));
            require(e.P.at(2, 1) == Quadratic(Rational(-1, 2), Rational(-1, 2), -points),
                    "conjugate eigenvalue at m=" + std::to_string(m));
            EigenData closed = closed_form_eigenmatrix(Family::Doubling, m);
            require(e.P == closed.P && e.Q == closed.Q,
                    "closed form differs at m=" + std::to_string(m));
        }
    });

    criterion(6, "block form equals the permuted direct cover of the doubling", [] {
        for (std::int64_t m : kDoublingSizes) {
            Scheme base = paley_tournament(m);
            Scheme direct = extended_double_cover(doubling(base));
            Scheme aligned = permute_points(direct, edc_doubling_alignment(m));
            Scheme block = edc_of_doubling_blockform(base);
            require(relations_equal(aligned, block),
                    "cell-level equality fails at m=" + std::to_string(m));
            require(certify(aligned).tensor == certify(block).tensor,
                    "tensor equality fails at m=" + std::to_string(m));
            require(block.n() == 4 * (m + 1), "order at m=" + std::to_string(m));
        }
    });

    criterion(7, "taylor covers of the conference graphs", [] {
        for (std::int64_t q : kGraphSizes) {
            Scheme taylor = taylor_extension(paley_graph(q));
            Certification cert = certify(taylor);
            require(taylor.n() == 2 * (q + 1) && taylor.num_classes() == 3,
                    "shape at q=" + std::to_string(q));
            require(cert.symmetric && cert.commutative,
                    "symmetry type at q=" + std::to_string(q));
            EigenData e = recovered_eigen(taylor);
            require(e.disc == q, "disc at q=" + std::to_string(q));
            require(e.P == cover_eigenmatrix(q, q),
                    "first eigenmatrix differs at q=" + std::to_string(q));
        }
    });

    criterion(8, "skew Hadamard matrices of orders 4, 8, 12, 20, 24", [] {
        const std::vector<std::int64_t> sizes{3, 7, 11, 19, 23};
        for (std::int64_t m : sizes) {
            SkewHadamardMatrix h = skew_hadamard_from_tournament(paley_tournament(m));
            require(h.order == m + 1, "order at m=" + std::to_string(m));
            for (int r = 0; r < h.order; ++r)
                for (int c = 0; c < h.order; ++c) {
                    require(h.at(r, c) == 1 || h.at(r, c) == -1,
                            "non-sign entry at m=" + std::to_string(m));
                    require(h.at(r, c) + h.at(c, r) == (r == c ? 2 : 0),
                            "H + H^T != 2I at m=" + std::to_string(m));
                    std::int64_t dot = 0;
                    for (int t = 0; t < h.order; ++t)
                        dot += static_cast<std::int64_t>(h.at(r, t)) * h.at(c, t);
                    require(dot == (r == c ? m + 1 : 0),
                            "H H^T != nI at m=" + std::to_string(m));
                }
        }
    });

    criterion(9, "closed-form spectra reproduce every brute-force tensor", [] {
        auto check = [](const Scheme& s, Family f, std::int64_t m, const std::string& label) {
            IntersectionTensor from_eigen =
                intersection_from_eigen(closed_form_eigenmatrix(f, m), s.valencies(), s.n());
            require(from_eigen == certify(s).tensor, "tensor mismatch for " + label);
        };
        for (std::int64_t m : kTournamentSizes) {
            check(paley_tournament(m), Family::Class2NonSymmetric, m,
                  "tournament m=" + std::to_string(m));
            check(extended_double_cover(paley_tournament(m)), Family::ExtendedDoubleCover, m,
                  "cover m=" + std::to_string(m));
        }
        for (std::int64_t m : kDoublingSizes) {
            Scheme base = paley_tournament(m);
            check(doubling(base), Family::Doubling, m, "doubling m=" + std::to_string(m));
            check(edc_of_doubling_blockform(base), Family::ExtendedDoubleCover, 2 * m + 1,
                  "block form m=" + std::to_string(m));
            check(extended_double_cover(doubling(base)), Family::ExtendedDoubleCover, 2 * m + 1,
                  "cover of doubling m=" + std::to_string(m));
        }
        for (std::int64_t q : kGraphSizes)
            check(taylor_extension(paley_graph(q)), Family::Taylor, q,
                  "taylor q=" + std::to_string(q));
    });

    criterion(10, "permutation invariance, round trips, negative controls", [] {
        std::vector<std::pair<std::string, Scheme>> schemes;
        for (std::int64_t m : kTournamentSizes) {
            schemes.emplace_back("tournament " + std::to_string(m), paley_tournament(m));
            schemes.emplace_back("cover " + std::to_string(m),
                                 extended_double_cover(paley_tournament(m)));
        }
        for (std::int64_t m : kDoublingSizes) {
            Scheme base = paley_tournament(m);
            schemes.emplace_back("doubling " + std::to_string(m), doubling(base));
            schemes.emplace_back("cover of doubling " + std::to_string(m),
                                 extended_double_cover(doubling(base)));
            schemes.emplace_back("block form " + std::to_string(m),
                                 edc_of_doubling_blockform(base));
        }
        for (std::int64_t q : kGraphSizes) {
            schemes.emplace_back("graph " + std::to_string(q), paley_graph(q));
            schemes.emplace_back("taylor " + std::to_string(q),
                                 taylor_extension(paley_graph(q)));
        }

        std::mt19937 rng(0x5eed);
        for (const auto& [label, s] : schemes) {
            const IntersectionTensor expected = certify(s).tensor;
            std::vector<int> sigma(static_cast<std::size_t>(s.n()));
            std::iota(sigma.begin(), sigma.end(), 0);
            for (int trial = 0; trial < 100; ++trial) {
                std::shuffle(sigma.begin(), sigma.end(), rng);
                require(certify(permute_points(s, sigma)).tensor == expected,
                        "tensor changed under permutation of " + label);
            }

            Scheme back = Scheme::from_relation_matrix(parse_scheme(serialize_scheme(s)));
            require(relations_equal(back, s), "round trip failed for " + label);
        }

        // Negative control: perturbed relation matrices.
        Scheme t7 = paley_tournament(7);
        RelationMatrix swapped = t7.relation();
        std::swap(swapped.cell(0, 1), swapped.cell(1, 0));
        bool rejected = false;
        try {
            certify(Scheme::from_relation_matrix(swapped));
        } catch (const CertificationError&) {
            rejected = true;
        }
        require(rejected, "valency-breaking perturbation was accepted");

        RelationMatrix cycled = t7.relation();  // reverse a directed triangle
        int tx = -1, ty = -1, tz = -1;
        for (int a = 0; a < 7 && tx < 0; ++a)
            for (int b = 0; b < 7 && tx < 0; ++b)
                for (int c = 0; c < 7 && tx < 0; ++c)
                    if (a != b && b != c && a != c && cycled.cell(a, b) == 1 &&
                        cycled.cell(b, c) == 1 && cycled.cell(c, a) == 1) {
                        tx = a;
                        ty = b;
                        tz = c;
                    }
        auto flip = [&](int u, int v) {
            cycled.cell(u, v) = 2;
            cycled.cell(v, u) = 1;
        };
        flip(tx, ty);
        flip(ty, tz);
        flip(tz, tx);
        rejected = false;
        try {
            certify(Scheme::from_relation_matrix(cycled));
        } catch (const CertificationError&) {
            rejected = true;
        }
        require(rejected, "valency-preserving perturbation was accepted");

        // Negative control: wrong eigenmatrix.
        Scheme cover = extended_double_cover(paley_tournament(3));
        EigenData eig = closed_form_eigenmatrix(Family::ExtendedDoubleCover, 3);
        for (int c = 1; c < 4; ++c) eig.P.at(1, c) = -eig.P.at(1, c);
        rejected = false;
        try {
            idempotents_from_eigenmatrix(cover, eig);
        } catch (const CertificationError&) {
            rejected = true;
        }
        require(rejected, "tampered eigenmatrix was accepted");
    });

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
