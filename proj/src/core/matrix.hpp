#pragma once

#include "core/polynomial.hpp"
#include "core/quadratic.hpp"

#include <cstddef>
#include <vector>

namespace ascert {

// Dense row-major matrix over arbitrary-precision integers. Sizes in this
// project stay below a few hundred, so there is no sparse machinery.
class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows > 0 ? rows : 0) *
                 static_cast<std::size_t>(cols > 0 ? cols : 0),
             Int(0)) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static IntMatrix identity(int n);
    static IntMatrix ones(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return e_[idx(r, c)]; }
    const Int& at(int r, int c) const { return e_[idx(r, c)]; }

    IntMatrix transpose() const;
    Int trace() const;
    Int row_sum(int r) const;
    Int col_sum(int c) const;

    friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator*(const Int& s, const IntMatrix& x);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_;
    int cols_;
    std::vector<Int> e_;
};

// Monic characteristic polynomial det(xI - M) with exact integer
// coefficients, via the Leverrier recurrence over rationals.
IntPoly char_poly(const IntMatrix& m);

// Dense matrix over one quadratic field Q(w), w^2 = disc. All entries share
// the matrix disc.
class QuadMatrix {
public:
    QuadMatrix(int rows, int cols, std::int64_t disc)
        : rows_(rows), cols_(cols), disc_(disc),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
             Quadratic::rational(Rational(0), disc)) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static QuadMatrix identity(int n, std::int64_t disc);
    static QuadMatrix from_int(const IntMatrix& m, std::int64_t disc);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t disc() const { return disc_; }

    Quadratic& at(int r, int c) { return e_[idx(r, c)]; }
    const Quadratic& at(int r, int c) const { return e_[idx(r, c)]; }
    void set(int r, int c, Quadratic v);

    QuadMatrix transpose() const;
    Quadratic trace() const;

    friend QuadMatrix operator+(const QuadMatrix& x, const QuadMatrix& y);
    friend QuadMatrix operator-(const QuadMatrix& x, const QuadMatrix& y);
    friend QuadMatrix operator*(const QuadMatrix& x, const QuadMatrix& y);
    friend QuadMatrix operator*(const Quadratic& s, const QuadMatrix& x);

    friend bool operator==(const QuadMatrix& x, const QuadMatrix& y);

    // Exact inverse by Gaussian elimination over the field.
    // Throws std::domain_error on a singular matrix.
    QuadMatrix inverse() const;

    // Basis of the right null space {x : Mx = 0}, as column vectors.
    std::vector<std::vector<Quadratic>> null_space() const;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_;
    int cols_;
    std::int64_t disc_;
    std::vector<Quadratic> e_;
};

}  // namespace ascert
