#include "core/matrix.hpp"

#include <stdexcept>
#include <string>

namespace ascert {

namespace {

void require_same_shape(int r1, int c1, int r2, int c2) {
    if (r1 != r2 || c1 != c2)
        throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(r1) + "x" +
                                    std::to_string(c1) + " vs " + std::to_string(r2) + "x" +
                                    std::to_string(c2));
}

void require_chain(int c1, int r2) {
    if (c1 != r2)
        throw std::invalid_argument("matrix product dimension mismatch: inner " +
                                    std::to_string(c1) + " vs " + std::to_string(r2));
}

void require_same_disc(std::int64_t d1, std::int64_t d2) {
    if (d1 != d2)
        throw std::domain_error("matrix disc mismatch: " + std::to_string(d1) + " vs " +
                                std::to_string(d2));
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(int n) {
    IntMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Int IntMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Int t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Int IntMatrix::row_sum(int r) const {
    Int s = 0;
    for (int c = 0; c < cols_; ++c) s += at(r, c);
    return s;
}

Int IntMatrix::col_sum(int c) const {
    Int s = 0;
    for (int r = 0; r < rows_; ++r) s += at(r, c);
    return s;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    require_same_shape(x.rows_, x.cols_, y.rows_, y.cols_);
    IntMatrix out(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.e_.size(); ++i) out.e_[i] = x.e_[i] + y.e_[i];
    return out;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    require_same_shape(x.rows_, x.cols_, y.rows_, y.cols_);
    IntMatrix out(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.e_.size(); ++i) out.e_[i] = x.e_[i] - y.e_[i];
    return out;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    require_chain(x.cols_, y.rows_);
    IntMatrix out(x.rows_, y.cols_);
    for (int r = 0; r < x.rows_; ++r) {
        for (int k = 0; k < x.cols_; ++k) {
            const Int& xv = x.at(r, k);
            if (xv == 0) continue;
            for (int c = 0; c < y.cols_; ++c) out.at(r, c) += xv * y.at(k, c);
        }
    }
    return out;
}

IntMatrix operator*(const Int& s, const IntMatrix& x) {
    IntMatrix out(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.e_.size(); ++i) out.e_[i] = s * x.e_[i];
    return out;
}

IntPoly char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
    const int n = m.rows();

    // Leverrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M (M_k + c_k I).
    // Divisions are exact over the rationals; coefficients come out integral.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            Rational(m.at(r, c));

    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[static_cast<std::size_t>(n)] = Rational(1);

    auto work = a;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // work = a * (work + c_{k-1} I)
            auto shifted = work;
            for (int i = 0; i < n; ++i)
                shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] +=
                    coeffs[static_cast<std::size_t>(n - k + 1)];
            std::vector<std::vector<Rational>> next(
                static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
            for (int r = 0; r < n; ++r)
                for (int j = 0; j < n; ++j) {
                    const Rational& av = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                    if (av.is_zero()) continue;
                    for (int c = 0; c < n; ++c)
                        next[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
                            av * shifted[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
                }
            work = std::move(next);
        }
        Rational tr(0);
        for (int i = 0; i < n; ++i)
            tr += work[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        coeffs[static_cast<std::size_t>(n - k)] = -(tr / Rational(k));
    }

    std::vector<Int> out(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!coeffs[i].is_integer())
            throw std::logic_error("characteristic polynomial coefficient not integral");
        out[i] = coeffs[i].num();
    }
    return IntPoly(std::move(out));
}

QuadMatrix QuadMatrix::identity(int n, std::int64_t disc) {
    QuadMatrix m(n, n, disc);
    for (int i = 0; i < n; ++i) m.at(i, i) = Quadratic::rational(Rational(1), disc);
    return m;
}

QuadMatrix QuadMatrix::from_int(const IntMatrix& m, std::int64_t disc) {
    QuadMatrix out(m.rows(), m.cols(), disc);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out.at(r, c) = Quadratic::rational(Rational(m.at(r, c)), disc);
    return out;
}

void QuadMatrix::set(int r, int c, Quadratic v) {
    if (!v.is_rational() && v.disc() != disc_)
        throw std::domain_error("entry disc " + std::to_string(v.disc()) +
                                " does not match matrix disc " + std::to_string(disc_));
    e_[idx(r, c)] = Quadratic(v.a(), v.b(), disc_);
}

QuadMatrix QuadMatrix::transpose() const {
    QuadMatrix t(cols_, rows_, disc_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Quadratic QuadMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Quadratic t = Quadratic::rational(Rational(0), disc_);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

QuadMatrix operator+(const QuadMatrix& x, const QuadMatrix& y) {
    require_same_shape(x.rows_, x.cols_, y.rows_, y.cols_);
    require_same_disc(x.disc_, y.disc_);
    QuadMatrix out(x.rows_, x.cols_, x.disc_);
    for (std::size_t i = 0; i < x.e_.size(); ++i) out.e_[i] = x.e_[i] + y.e_[i];
    return out;
}

QuadMatrix operator-(const QuadMatrix& x, const QuadMatrix& y) {
    require_same_shape(x.rows_, x.cols_, y.rows_, y.cols_);
    require_same_disc(x.disc_, y.disc_);
    QuadMatrix out(x.rows_, x.cols_, x.disc_);
    for (std::size_t i = 0; i < x.e_.size(); ++i) out.e_[i] = x.e_[i] - y.e_[i];
    return out;
}

QuadMatrix operator*(const QuadMatrix& x, const QuadMatrix& y) {
    require_chain(x.cols_, y.rows_);
    require_same_disc(x.disc_, y.disc_);
    QuadMatrix out(x.rows_, y.cols_, x.disc_);
    for (int r = 0; r < x.rows_; ++r) {
        for (int k = 0; k < x.cols_; ++k) {
            const Quadratic& xv = x.at(r, k);
            if (xv.is_zero()) continue;
            for (int c = 0; c < y.cols_; ++c) out.at(r, c) += xv * y.at(k, c);
        }
    }
    return out;
}

QuadMatrix operator*(const Quadratic& s, const QuadMatrix& x) {
    QuadMatrix out(x.rows_, x.cols_, x.disc_);
    for (std::size_t i = 0; i < x.e_.size(); ++i) out.e_[i] = s * x.e_[i];
    return out;
}

bool operator==(const QuadMatrix& x, const QuadMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t i = 0; i < x.e_.size(); ++i)
        if (x.e_[i] != y.e_[i]) return false;
    return true;
}

QuadMatrix QuadMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const int n = rows_;
    QuadMatrix a = *this;
    QuadMatrix inv = identity(n, disc_);

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("singular matrix");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        Quadratic pinv = a.at(col, col).inverse();
        for (int c = 0; c < n; ++c) {
            a.at(col, c) *= pinv;
            inv.at(col, c) *= pinv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Quadratic f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::vector<std::vector<Quadratic>> QuadMatrix::null_space() const {
    QuadMatrix a = *this;
    const int nr = rows_;
    const int nc = cols_;

    std::vector<int> pivot_col_of_row(static_cast<std::size_t>(nr), -1);
    std::vector<bool> is_pivot_col(static_cast<std::size_t>(nc), false);
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int pivot = -1;
        for (int r = rank; r < nr; ++r) {
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < nc; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
        Quadratic pinv = a.at(rank, col).inverse();
        for (int c = 0; c < nc; ++c) a.at(rank, c) *= pinv;
        for (int r = 0; r < nr; ++r) {
            if (r == rank) continue;
            Quadratic f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < nc; ++c) a.at(r, c) -= f * a.at(rank, c);
        }
        pivot_col_of_row[static_cast<std::size_t>(rank)] = col;
        is_pivot_col[static_cast<std::size_t>(col)] = true;
        ++rank;
    }

    std::vector<std::vector<Quadratic>> basis;
    for (int free = 0; free < nc; ++free) {
        if (is_pivot_col[static_cast<std::size_t>(free)]) continue;
        std::vector<Quadratic> v(static_cast<std::size_t>(nc),
                                 Quadratic::rational(Rational(0), disc_));
        v[static_cast<std::size_t>(free)] = Quadratic::rational(Rational(1), disc_);
        for (int r = 0; r < rank; ++r) {
            int pc = pivot_col_of_row[static_cast<std::size_t>(r)];
            v[static_cast<std::size_t>(pc)] = -a.at(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ascert
