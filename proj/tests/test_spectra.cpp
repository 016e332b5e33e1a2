#include "core/spectra.hpp"

#include "core/construct.hpp"

#include <doctest.h>

using namespace ascert;

namespace {

Quadratic rat(std::int64_t v, std::int64_t disc) {
    return Quadratic::rational(Rational(v), disc);
}

}  // namespace

TEST_CASE("closed-form eigenmatrix of the cover family") {
    for (std::int64_t m : {3, 7, 11}) {
        EigenData e = closed_form_eigenmatrix(Family::ExtendedDoubleCover, m);
        CHECK(e.n == 2 * (m + 1));
        CHECK(e.disc == -m);
        CHECK(e.valencies == std::vector<std::int64_t>{1, m, m, 1});
        CHECK(e.multiplicities == std::vector<std::int64_t>{1, (m + 1) / 2, (m + 1) / 2, m});

        Quadratic w = Quadratic::root(-m);
        CHECK(e.P.at(1, 1) == w);
        CHECK(e.P.at(1, 2) == -w);
        CHECK(e.P.at(1, 3) == rat(-1, -m));
        CHECK(e.P.at(3, 1) == rat(-1, -m));
    }
}

TEST_CASE("closed-form eigenmatrix of the doubling family") {
    EigenData e = closed_form_eigenmatrix(Family::Doubling, 3);
    CHECK(e.n == 7);
    CHECK(e.disc == -7);
    CHECK(e.valencies == std::vector<std::int64_t>{1, 3, 3});
    // Nontrivial eigenvalues (-1 +- w)/2 with w^2 = -7.
    CHECK(e.P.at(1, 1) == Quadratic(Rational(-1, 2), Rational(1, 2), -7));
    CHECK(e.P.at(2, 1) == Quadratic(Rational(-1, 2), Rational(-1, 2), -7));
}

TEST_CASE("closed-form eigenmatrix admissibility") {
    CHECK_THROWS_AS(closed_form_eigenmatrix(Family::ExtendedDoubleCover, 5), PreconditionError);
    CHECK_THROWS_AS(closed_form_eigenmatrix(Family::Class2NonSymmetric, 4), PreconditionError);
    CHECK_THROWS_AS(closed_form_eigenmatrix(Family::Taylor, 7), PreconditionError);
    CHECK_NOTHROW(closed_form_eigenmatrix(Family::Taylor, 5));
}

TEST_CASE("P Q = n I and orthogonality for every produced eigenmatrix") {
    struct Case {
        Family f;
        std::int64_t m;
    };
    for (Case c : {Case{Family::Class2NonSymmetric, 7}, Case{Family::ExtendedDoubleCover, 7},
                   Case{Family::Taylor, 5}, Case{Family::Doubling, 3}}) {
        EigenData e = closed_form_eigenmatrix(c.f, c.m);
        const int k = e.P.rows();
        CHECK(e.P * e.Q == Quadratic::rational(Rational(e.n), e.disc) *
                               QuadMatrix::identity(k, e.disc));
        CHECK(e.Q * e.P == Quadratic::rational(Rational(e.n), e.disc) *
                               QuadMatrix::identity(k, e.disc));

        // sum_i P(nu,i) conj(P(mu,i)) / k_i = delta * n / m_nu
        for (int nu = 0; nu < k; ++nu)
            for (int mu = 0; mu < k; ++mu) {
                Quadratic acc = rat(0, e.disc);
                for (int i = 0; i < k; ++i)
                    acc += e.P.at(nu, i) * complex_conj(e.P.at(mu, i)) *
                           Quadratic::rational(
                               Rational(Int(1), Int(e.valencies[static_cast<std::size_t>(i)])),
                               e.disc);
                Quadratic expect =
                    nu == mu ? Quadratic::rational(
                                   Rational(Int(e.n),
                                            Int(e.multiplicities[static_cast<std::size_t>(nu)])),
                                   e.disc)
                             : rat(0, e.disc);
                CHECK(acc == expect);
            }
    }
}

TEST_CASE("multiplicities and valencies of the cover differ") {
    // The cover has valencies (1, m, m, 1) but multiplicities
    // (1, (m+1)/2, (m+1)/2, m); no P = Q relabeling is asserted anywhere.
    EigenData e = closed_form_eigenmatrix(Family::ExtendedDoubleCover, 7);
    CHECK(e.valencies != e.multiplicities);
}

TEST_CASE("idempotents of the order-8 cover") {
    Scheme e8 = extended_double_cover(paley_tournament(3));
    EigenData eig = closed_form_eigenmatrix(Family::ExtendedDoubleCover, 3);
    auto idem = idempotents_from_eigenmatrix(e8, eig);
    REQUIRE(idem.size() == 4);

    // E_0 = J / n.
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            CHECK(idem[0].at(x, y) == Quadratic::rational(Rational(1, 8), -3));

    CHECK(idem[3].trace() == rat(3, -3));
    CHECK(idem[1].trace() == rat(2, -3));
}

TEST_CASE("a tampered eigenmatrix is rejected") {
    Scheme e8 = extended_double_cover(paley_tournament(3));
    EigenData eig = closed_form_eigenmatrix(Family::ExtendedDoubleCover, 3);

    // Negate the eigenvalue entries of one row (keeping column 0), leaving
    // Q untouched: reconstruction must fail.
    EigenData bad = eig;
    for (int c = 1; c < 4; ++c) bad.P.at(1, c) = -bad.P.at(1, c);
    CHECK_THROWS_AS(idempotents_from_eigenmatrix(e8, bad), CertificationError);

    // A valid eigenmatrix of the wrong size is a precondition error.
    EigenData other = closed_form_eigenmatrix(Family::ExtendedDoubleCover, 7);
    CHECK_THROWS_AS(idempotents_from_eigenmatrix(e8, other), PreconditionError);
}

TEST_CASE("make_eigen_data rejects sign-flipped rows") {
    EigenData eig = closed_form_eigenmatrix(Family::ExtendedDoubleCover, 3);
    QuadMatrix p = eig.P;
    for (int c = 0; c < 4; ++c) p.at(2, c) = -p.at(2, c);  // breaks the ones column
    CHECK_THROWS_AS(make_eigen_data(p, 8), CertificationError);

    QuadMatrix dup = eig.P;
    for (int c = 0; c < 4; ++c) dup.at(2, c) = dup.at(1, c);  // singular
    CHECK_THROWS_AS(make_eigen_data(dup, 8), std::domain_error);
}

TEST_CASE("structure constants recovered from the spectrum") {
    // Class-2 family at m = 7.
    EigenData t7 = closed_form_eigenmatrix(Family::Class2NonSymmetric, 7);
    IntersectionTensor tensor = intersection_from_eigen(t7, {1, 3, 3}, 7);
    CHECK(tensor.at(1, 1, 1) == 1);
    CHECK(tensor.at(1, 1, 2) == 2);
    CHECK(tensor.at(1, 2, 0) == 3);

    // Cover family at m = 3 against the brute-force tensor.
    Scheme e8 = extended_double_cover(paley_tournament(3));
    EigenData eig = closed_form_eigenmatrix(Family::ExtendedDoubleCover, 3);
    IntersectionTensor from_eigen = intersection_from_eigen(eig, e8.valencies(), e8.n());
    CHECK(from_eigen == certify(e8).tensor);
    CHECK(from_eigen.at(3, 3, 0) == 1);  // C3^2 = C0
}

TEST_CASE("eigen recovery from intersection matrices") {
    // Cover at m = 3: eigenvalues of B_1 are 3, +-w, -1 with w^2 = -3.
    Scheme e8 = extended_double_cover(paley_tournament(3));
    auto b = intersection_matrices(e8, certify(e8).tensor);
    EigenData e = eigen_from_intersection(b, e8.valencies(), e8.n());
    CHECK(e.disc == -3);
    CHECK(e.P.at(0, 1) == rat(3, -3));
    CHECK(e.P.at(1, 1) == Quadratic::root(-3));
    CHECK(e.P.at(2, 1) == -Quadratic::root(-3));
    CHECK(e.P.at(3, 1) == rat(-1, -3));
    CHECK(e.P == closed_form_eigenmatrix(Family::ExtendedDoubleCover, 3).P);

    // Tournament at m = 7: eigenvalues 3 and (-1 +- w)/2 with w^2 = -7.
    Scheme t7 = paley_tournament(7);
    auto bt = intersection_matrices(t7, certify(t7).tensor);
    EigenData et = eigen_from_intersection(bt, t7.valencies(), t7.n());
    CHECK(et.disc == -7);
    CHECK(et.P.at(1, 1) == Quadratic(Rational(-1, 2), Rational(1, 2), -7));
    CHECK(et.P == closed_form_eigenmatrix(Family::Class2NonSymmetric, 7).P);
}

TEST_CASE("irreducible cubic factors are unsupported") {
    // Companion matrix of x^3 - x - 1 plus a fixed point, so the char poly
    // is (x^3 - x - 1)(x - 1) with an irreducible cubic factor.
    IntMatrix m(4, 4);
    m.at(0, 2) = 1;
    m.at(1, 0) = 1;
    m.at(1, 2) = 1;
    m.at(2, 1) = 1;
    m.at(3, 3) = 1;
    IntPoly cubic({Int(-1), Int(-1), Int(0), Int(1)});
    IntPoly linear({Int(-1), Int(1)});
    CHECK(char_poly(m) == poly_mul(cubic, linear));
    CHECK_THROWS_AS(roots_in_quadratic_field(char_poly(m)), UnsupportedError);

    std::vector<IntMatrix> b{IntMatrix::identity(4), m, m * m, m * m * m};
    CHECK_THROWS_AS(eigen_from_intersection(b, {1, 1, 1, 1}, 4), UnsupportedError);
}

TEST_CASE("round trip through certify for every family") {
    struct Case {
        Family f;
        std::int64_t m;
        Scheme scheme;
    };
    std::vector<Case> cases;
    cases.push_back({Family::Class2NonSymmetric, 7, paley_tournament(7)});
    cases.push_back({Family::ExtendedDoubleCover, 11, extended_double_cover(paley_tournament(11))});
    cases.push_back({Family::Taylor, 13, taylor_extension(paley_graph(13))});
    cases.push_back({Family::Doubling, 3, doubling(paley_tournament(3))});

    for (const Case& c : cases) {
        EigenData closed = closed_form_eigenmatrix(c.f, c.m);
        Certification cert = certify(c.scheme);
        CHECK(intersection_from_eigen(closed, c.scheme.valencies(), c.scheme.n()) == cert.tensor);

        auto b = intersection_matrices(c.scheme, cert.tensor);
        EigenData recovered = eigen_from_intersection(b, c.scheme.valencies(), c.scheme.n());
        CHECK(recovered.P == closed.P);
        CHECK(recovered.Q == closed.Q);
        CHECK(recovered.multiplicities == closed.multiplicities);
    }
}
