#include "core/spectra.hpp"

#include <algorithm>
#include <string>

namespace ascert {

namespace {

void merge_field_disc(std::int64_t& have, std::int64_t add) {
    if (add == 1 || have == add) return;
    if (have == 1) {
        have = add;
        return;
    }
    throw UnsupportedError("eigenvalues span distinct quadratic fields: disc " +
                           std::to_string(have) + " vs " + std::to_string(add));
}

// Integer roots of a monic integer polynomial divide its constant term.
std::vector<Int> divisor_candidates(const Int& c0) {
    std::vector<Int> out;
    Int a0 = abs(c0);
    for (Int d = 1; d * d <= a0; ++d) {
        if (a0 % d != 0) continue;
        out.push_back(d);
        Int q = a0 / d;
        if (q != d) out.push_back(q);
    }
    return out;
}

void take_quadratic_roots(const Int& b, const Int& c, PolyRoots& out) {
    Int delta = b * b - 4 * c;
    if (delta >= 0 && is_square(delta)) {
        Int s = isqrt(delta);
        out.roots.push_back(Quadratic::rational(Rational(-b + s, 2), out.disc));
        out.roots.push_back(Quadratic::rational(Rational(-b - s, 2), out.disc));
        return;
    }
    std::int64_t d0 = to_int64(squarefree_part(delta));
    Int f = isqrt(delta / d0);
    merge_field_disc(out.disc, d0);
    out.roots.emplace_back(Rational(-b, 2), Rational(f, 2), d0);
    out.roots.emplace_back(Rational(-b, 2), Rational(-f, 2), d0);
}

// (x^2+ax+b)(x^2+cx+d) split of a monic integer quartic with no rational
// roots; returns false when no integer split exists.
bool split_quartic(const IntPoly& p, Int& a, Int& b, Int& c, Int& d) {
    const Int& p0 = p.coeffs[0];
    const Int& p1 = p.coeffs[1];
    const Int& p2 = p.coeffs[2];
    const Int& p3 = p.coeffs[3];
    for (const Int& bd : divisor_candidates(p0)) {
        for (int sgn = 0; sgn < 2; ++sgn) {
            b = sgn ? -bd : bd;
            d = p0 / b;
            Int ac = p2 - b - d;
            Int disc2 = p3 * p3 - 4 * ac;
            if (disc2 < 0 || !is_square(disc2)) continue;
            Int s = isqrt(disc2);
            if ((p3 + s) % 2 != 0) continue;
            a = (p3 + s) / 2;
            c = p3 - a;
            if (a * d + b * c == p1) return true;
            std::swap(a, c);
            if (a * d + b * c == p1) return true;
        }
    }
    return false;
}

}  // namespace

PolyRoots roots_in_quadratic_field(const IntPoly& p) {
    if (!p.is_monic()) throw std::invalid_argument("root extraction requires a monic polynomial");
    if (p.degree() < 1) throw std::invalid_argument("root extraction requires degree >= 1");

    PolyRoots out;
    IntPoly work = p;

    // Factors of x.
    while (work.degree() > 0 && work.coeffs[0] == 0) {
        out.roots.push_back(Quadratic::rational(Rational(0), 1));
        work.coeffs.erase(work.coeffs.begin());
    }

    if (work.degree() > 0) {
        for (const Int& d : divisor_candidates(work.coeffs[0])) {
            for (int sgn = 0; sgn < 2; ++sgn) {
                Int r = sgn ? -d : d;
                while (work.degree() > 0 && work.eval(r) == 0) {
                    out.roots.push_back(Quadratic::rational(Rational(r), 1));
                    auto div = poly_div_monic(work, IntPoly(std::vector<Int>{-r, Int(1)}));
                    work = div.quotient;
                }
                if (work.degree() == 0) break;
            }
            if (work.degree() == 0) break;
        }
    }

    switch (work.degree()) {
        case 0:
            break;
        case 1:
            // Monic linear remainder; its root divides the constant term, so
            // this is unreachable after the divisor sweep.
            out.roots.push_back(Quadratic::rational(Rational(-work.coeffs[0]), 1));
            break;
        case 2:
            take_quadratic_roots(work.coeffs[1], work.coeffs[0], out);
            break;
        case 3:
            throw UnsupportedError("irreducible cubic factor " + work.str() +
                                   ": eigenvalues outside a quadratic field");
        case 4: {
            Int a, b, c, d;
            if (!split_quartic(work, a, b, c, d))
                throw UnsupportedError("irreducible quartic factor " + work.str() +
                                       ": eigenvalues outside a quadratic field");
            take_quadratic_roots(a, b, out);
            take_quadratic_roots(c, d, out);
            break;
        }
        default:
            throw UnsupportedError("factor of degree " + std::to_string(work.degree()) +
                                   " unsupported");
    }

    // Re-tag rational roots with the field disc.
    for (auto& r : out.roots)
        if (r.is_rational()) r = Quadratic::rational(r.a(), out.disc);
    return out;
}

EigenData make_eigen_data(QuadMatrix P, std::int64_t n) {
    if (P.rows() != P.cols()) throw CertificationError("eigenmatrix must be square");
    const int k = P.rows();
    const std::int64_t disc = P.disc();

    std::vector<std::int64_t> valencies;
    for (int i = 0; i < k; ++i) {
        if (P.at(i, 0) != Quadratic::rational(Rational(1), disc))
            throw CertificationError("column 0 of the eigenmatrix must be all ones");
        const Quadratic& v = P.at(0, i);
        if (!v.is_rational() || !v.a().is_integer() || v.a().sign() <= 0)
            throw CertificationError("row 0 of the eigenmatrix must hold positive integer "
                                     "valencies; entry " +
                                     std::to_string(i) + " is " + v.str());
        valencies.push_back(to_int64(v.a().num()));
    }

    QuadMatrix Q = Quadratic::rational(Rational(n), disc) * P.inverse();

    QuadMatrix prod = P * Q;
    QuadMatrix nI = Quadratic::rational(Rational(n), disc) * QuadMatrix::identity(k, disc);
    if (prod != nI) throw CertificationError("P * Q != n * I");

    std::vector<std::int64_t> mults;
    std::int64_t total = 0;
    for (int i = 0; i < k; ++i) {
        const Quadratic& v = Q.at(0, i);
        if (!v.is_rational() || !v.a().is_integer() || v.a().sign() <= 0)
            throw CertificationError("row 0 of Q must hold positive integer multiplicities; "
                                     "entry " +
                                     std::to_string(i) + " is " + v.str());
        mults.push_back(to_int64(v.a().num()));
        total += mults.back();
    }
    if (total != n)
        throw CertificationError("multiplicities sum to " + std::to_string(total) + ", expected " +
                                 std::to_string(n));

    return EigenData{n, disc, std::move(P), std::move(Q), std::move(valencies), std::move(mults)};
}

EigenData closed_form_eigenmatrix(Family family, std::int64_t m) {
    auto require = [&](bool ok, const std::string& why) {
        if (!ok)
            throw PreconditionError("inadmissible m = " + std::to_string(m) + ": " + why);
    };

    switch (family) {
        case Family::Class2NonSymmetric:
        case Family::Doubling: {
            require(m >= 3 && m % 4 == 3, "need m >= 3 with m = 3 (mod 4)");
            // Doubling: the derived scheme lives on 2m+1 points and has the
            // class-2 eigenmatrix with m' = 2m+1.
            const std::int64_t points = family == Family::Doubling ? 2 * m + 1 : m;
            const std::int64_t disc = -points;
            const std::int64_t val = (points - 1) / 2;
            QuadMatrix P(3, 3, disc);
            Quadratic one = Quadratic::rational(Rational(1), disc);
            Quadratic plus(Rational(-1, 2), Rational(1, 2), disc);   // (-1+w)/2
            Quadratic minus(Rational(-1, 2), Rational(-1, 2), disc); // (-1-w)/2
            for (int r = 0; r < 3; ++r) P.at(r, 0) = one;
            P.at(0, 1) = Quadratic::rational(Rational(val), disc);
            P.at(0, 2) = Quadratic::rational(Rational(val), disc);
            P.at(1, 1) = plus;
            P.at(1, 2) = minus;
            P.at(2, 1) = minus;
            P.at(2, 2) = plus;
            return make_eigen_data(std::move(P), points);
        }
        case Family::ExtendedDoubleCover:
        case Family::Taylor: {
            std::int64_t disc;
            if (family == Family::ExtendedDoubleCover) {
                require(m >= 3 && m % 4 == 3, "need m >= 3 with m = 3 (mod 4)");
                disc = -m;
            } else {
                require(m >= 5 && m % 4 == 1, "need m >= 5 with m = 1 (mod 4)");
                disc = m;
            }
            QuadMatrix P(4, 4, disc);
            Quadratic one = Quadratic::rational(Rational(1), disc);
            Quadratic w = Quadratic::root(disc);
            for (int r = 0; r < 4; ++r) P.at(r, 0) = one;
            P.at(0, 1) = Quadratic::rational(Rational(m), disc);
            P.at(0, 2) = Quadratic::rational(Rational(m), disc);
            P.at(0, 3) = one;
            P.at(1, 1) = w;
            P.at(1, 2) = -w;
            P.at(1, 3) = -one;
            P.at(2, 1) = -w;
            P.at(2, 2) = w;
            P.at(2, 3) = -one;
            P.at(3, 1) = -one;
            P.at(3, 2) = -one;
            P.at(3, 3) = one;
            return make_eigen_data(std::move(P), 2 * (m + 1));
        }
    }
    throw std::logic_error("unknown family");
}

std::vector<QuadMatrix> idempotents_from_eigenmatrix(const Scheme& s, const EigenData& e) {
    const int n = s.n();
    const int k = s.num_classes() + 1;
    if (e.n != n)
        throw PreconditionError("eigen data is for " + std::to_string(e.n) + " points, scheme has " +
                                std::to_string(n));
    if (e.P.rows() != k)
        throw PreconditionError("eigen data class does not match scheme class");
    const std::int64_t disc = e.disc;

    // Work with F_nu = lambda E_nu scaled to integer coordinates so the n^3
    // products below stay in integer arithmetic.
    Int scale = n;
    for (int i = 0; i < k; ++i)
        for (int nu = 0; nu < k; ++nu) {
            const Quadratic& q = e.Q.at(i, nu);
            scale = lcm(scale, Int(n) * q.a().den());
            scale = lcm(scale, Int(n) * q.b().den());
        }
    const Quadratic scale_q = Quadratic::rational(Rational(scale), disc);

    // coef[i][nu] = (scale/n) Q_{i,nu}, integral.
    std::vector<std::vector<Quadratic>> coef(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        coef[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(k));
        for (int nu = 0; nu < k; ++nu) {
            Quadratic c = Quadratic::rational(Rational(scale, n), disc) * e.Q.at(i, nu);
            if (!c.a().is_integer() || !c.b().is_integer())
                throw std::logic_error("idempotent scaling failed to clear denominators");
            coef[static_cast<std::size_t>(i)].push_back(std::move(c));
        }
    }

    // F_nu entry at (x,y) is coef[cell(x,y)][nu].
    std::vector<QuadMatrix> f;
    f.reserve(static_cast<std::size_t>(k));
    for (int nu = 0; nu < k; ++nu) {
        QuadMatrix m(n, n, disc);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                m.at(x, y) = coef[static_cast<std::size_t>(s.relation().cell(x, y))]
                                 [static_cast<std::size_t>(nu)];
        f.push_back(std::move(m));
    }

    // Orthogonal idempotency: F_nu F_mu = delta * scale * F_nu.
    const QuadMatrix zero(n, n, disc);
    for (int nu = 0; nu < k; ++nu)
        for (int mu = 0; mu < k; ++mu) {
            QuadMatrix prod = f[static_cast<std::size_t>(nu)] * f[static_cast<std::size_t>(mu)];
            if (nu == mu) {
                if (prod != scale_q * f[static_cast<std::size_t>(nu)])
                    throw CertificationError("E_" + std::to_string(nu) +
                                             " is not idempotent for this scheme");
            } else if (prod != zero) {
                throw CertificationError("E_" + std::to_string(nu) + " E_" + std::to_string(mu) +
                                         " != 0");
            }
        }

    // Completeness: sum F_nu = scale * I.
    QuadMatrix total(n, n, disc);
    for (const auto& m : f) total = total + m;
    if (total != scale_q * QuadMatrix::identity(n, disc))
        throw CertificationError("idempotents do not sum to the identity");

    // Reconstruction: scale * A_i = sum_nu P_{nu,i} F_nu.
    for (int i = 0; i < k; ++i) {
        QuadMatrix rec(n, n, disc);
        for (int nu = 0; nu < k; ++nu)
            rec = rec + e.P.at(nu, i) * f[static_cast<std::size_t>(nu)];
        if (rec != scale_q * QuadMatrix::from_int(s.adjacency(i), disc))
            throw CertificationError("A_" + std::to_string(i) +
                                     " is not reproduced by the eigenmatrix: supplied P is not "
                                     "the eigenmatrix of this scheme");
    }

    // trace(E_nu) = m_nu.
    for (int nu = 0; nu < k; ++nu) {
        Quadratic tr = f[static_cast<std::size_t>(nu)].trace();
        if (tr != Quadratic::rational(Rational(scale * e.multiplicities[static_cast<std::size_t>(nu)]),
                                      disc))
            throw CertificationError("trace(E_" + std::to_string(nu) +
                                     ") does not equal the multiplicity");
    }

    const Quadratic unscale = Quadratic::rational(Rational(Int(1), scale), disc);
    std::vector<QuadMatrix> out;
    out.reserve(f.size());
    for (auto& m : f) out.push_back(unscale * m);
    return out;
}

IntersectionTensor intersection_from_eigen(const EigenData& e,
                                           const std::vector<std::int64_t>& valencies,
                                           std::int64_t n) {
    const int k = e.P.rows();
    if (e.n != n) throw PreconditionError("eigen data point count mismatch");
    if (valencies.size() != static_cast<std::size_t>(k))
        throw PreconditionError("valency count mismatch");
    if (e.valencies != valencies)
        throw PreconditionError("eigen data valencies do not match the supplied valencies");
    const std::int64_t disc = e.disc;

    std::vector<Quadratic> conjP(static_cast<std::size_t>(k) * static_cast<std::size_t>(k),
                                 Quadratic::rational(Rational(0), disc));
    for (int nu = 0; nu < k; ++nu)
        for (int i = 0; i < k; ++i)
            conjP[static_cast<std::size_t>(nu) * static_cast<std::size_t>(k) +
                  static_cast<std::size_t>(i)] = complex_conj(e.P.at(nu, i));

    IntersectionTensor t;
    t.d = k - 1;
    t.p.assign(static_cast<std::size_t>(k) * k * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                Quadratic acc = Quadratic::rational(Rational(0), disc);
                for (int nu = 0; nu < k; ++nu) {
                    Quadratic term =
                        conjP[static_cast<std::size_t>(nu) * static_cast<std::size_t>(k) +
                              static_cast<std::size_t>(i)] *
                        conjP[static_cast<std::size_t>(nu) * static_cast<std::size_t>(k) +
                              static_cast<std::size_t>(j)] *
                        e.P.at(nu, l);
                    acc += Quadratic::rational(
                               Rational(e.multiplicities[static_cast<std::size_t>(nu)]), disc) *
                           term;
                }
                Quadratic val =
                    acc * Quadratic::rational(
                              Rational(Int(1), Int(n) * valencies[static_cast<std::size_t>(l)]),
                              disc);
                if (!val.is_rational() || !val.a().is_integer() || val.a().sign() < 0)
                    throw CertificationError("inconsistent eigen data: p[" + std::to_string(i) +
                                             "][" + std::to_string(j) + "][" + std::to_string(l) +
                                             "] = " + val.str() +
                                             " is not a nonnegative integer");
                t.at(i, j, l) = to_int64(val.a().num());
            }
    return t;
}

EigenData eigen_from_intersection(const std::vector<IntMatrix>& b,
                                  const std::vector<std::int64_t>& valencies, std::int64_t n) {
    if (b.empty()) throw PreconditionError("no intersection matrices supplied");
    const int k = static_cast<int>(b.size());
    const int d = k - 1;
    if (d > 3) throw UnsupportedError("class " + std::to_string(d) + " > 3 unsupported");
    for (const auto& m : b)
        if (m.rows() != k || m.cols() != k)
            throw PreconditionError("intersection matrices must be (d+1)x(d+1)");
    if (b[0] != IntMatrix::identity(k))
        throw PreconditionError("B_0 must be the identity");
    if (valencies.size() != static_cast<std::size_t>(k))
        throw PreconditionError("valency count mismatch");

    if (d == 0) {
        QuadMatrix p(1, 1, 1);
        p.at(0, 0) = Quadratic::rational(Rational(1), 1);
        return make_eigen_data(std::move(p), n);
    }

    // One quadratic field must accommodate every eigenvalue.
    std::int64_t disc = 1;
    std::vector<PolyRoots> roots(static_cast<std::size_t>(k));
    for (int i = 1; i < k; ++i) {
        roots[static_cast<std::size_t>(i)] =
            roots_in_quadratic_field(char_poly(b[static_cast<std::size_t>(i)]));
        merge_field_disc(disc, roots[static_cast<std::size_t>(i)].disc);
    }

    // Refine the full space by the eigenspaces of each B_i in turn; the
    // common eigenvectors (P_{nu,0},...,P_{nu,d})^T survive as the
    // one-dimensional pieces.
    std::vector<QuadMatrix> spaces{QuadMatrix::identity(k, disc)};
    for (int i = 1; i < k; ++i) {
        QuadMatrix bq = QuadMatrix::from_int(b[static_cast<std::size_t>(i)], disc);

        std::vector<Quadratic> distinct;
        for (const auto& r : roots[static_cast<std::size_t>(i)].roots) {
            Quadratic rd = r.is_rational() ? Quadratic::rational(r.a(), disc) : r;
            if (std::find(distinct.begin(), distinct.end(), rd) == distinct.end())
                distinct.push_back(rd);
        }

        std::vector<QuadMatrix> next;
        for (const auto& u : spaces) {
            int found = 0;
            for (const auto& theta : distinct) {
                QuadMatrix shifted =
                    bq - theta * QuadMatrix::identity(k, disc);
                auto ns = (shifted * u).null_space();
                if (ns.empty()) continue;
                QuadMatrix v(k, static_cast<int>(ns.size()), disc);
                for (int c = 0; c < static_cast<int>(ns.size()); ++c)
                    for (int r = 0; r < k; ++r) {
                        Quadratic acc = Quadratic::rational(Rational(0), disc);
                        for (int t = 0; t < u.cols(); ++t)
                            acc += u.at(r, t) * ns[static_cast<std::size_t>(c)]
                                                  [static_cast<std::size_t>(t)];
                        v.at(r, c) = acc;
                    }
                next.push_back(std::move(v));
                found += static_cast<int>(ns.size());
            }
            if (found != u.cols())
                throw CertificationError(
                    "intersection matrices are not simultaneously diagonalizable over the field");
        }
        spaces = std::move(next);
    }

    if (static_cast<int>(spaces.size()) != k)
        throw CertificationError("inconsistent simultaneous eigenvectors: expected " +
                                 std::to_string(k) + " one-dimensional common eigenspaces, got " +
                                 std::to_string(spaces.size()));

    std::vector<std::vector<Quadratic>> rows;
    for (const auto& u : spaces) {
        if (u.cols() != 1)
            throw CertificationError("inconsistent simultaneous eigenvectors: eigenspace of "
                                     "dimension > 1 survived refinement");
        if (u.at(0, 0).is_zero())
            throw CertificationError("common eigenvector with zero leading coordinate");
        Quadratic inv = u.at(0, 0).inverse();
        std::vector<Quadratic> row;
        row.reserve(static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r) row.push_back(inv * u.at(r, 0));
        rows.push_back(std::move(row));
    }

    // Valency row first.
    int valency_row = -1;
    for (int r = 0; r < k; ++r) {
        bool match = true;
        for (int i = 0; i < k && match; ++i)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] !=
                Quadratic::rational(Rational(valencies[static_cast<std::size_t>(i)]), disc))
                match = false;
        if (match) {
            valency_row = r;
            break;
        }
    }
    if (valency_row < 0)
        throw CertificationError("no eigenvalue row equals the valency vector");
    std::swap(rows[0], rows[static_cast<std::size_t>(valency_row)]);

    // Remaining rows in descending lexicographic order of (a, b) pairs, w
    // treated as positive imaginary; this reproduces the conventional
    // printed order for all families handled here.
    std::sort(rows.begin() + 1, rows.end(),
              [](const std::vector<Quadratic>& x, const std::vector<Quadratic>& y) {
                  for (std::size_t i = 0; i < x.size(); ++i) {
                      if (x[i].a() != y[i].a()) return y[i].a() < x[i].a();
                      if (x[i].b() != y[i].b()) return y[i].b() < x[i].b();
                  }
                  return false;
              });

    QuadMatrix p(k, k, disc);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            p.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];

    EigenData e = make_eigen_data(std::move(p), n);
    if (e.valencies != valencies)
        throw CertificationError("recovered valency row does not match the scheme valencies");
    return e;
}

}  // namespace ascert
