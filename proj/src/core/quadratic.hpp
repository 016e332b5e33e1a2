#pragma once

#include "core/rational.hpp"

#include <ostream>
#include <string>

namespace ascert {

// Element a + b*w of the quadratic extension Q(w) with w^2 = disc.
// disc may be negative (w imaginary) or positive; it is carried per value
// and checked at every binary operation. Purely rational values (b = 0)
// combine with any disc; two irrational values with different discs do not.
//
// conj is the field automorphism a + b*w -> a - b*w. For disc < 0 this is
// complex conjugation; for disc > 0 it is not (the value is real).
class Quadratic {
public:
    Quadratic() : a_(0), b_(0), disc_(1) {}
    Quadratic(Rational a, Rational b, std::int64_t disc)
        : a_(std::move(a)), b_(std::move(b)), disc_(disc) {}

    static Quadratic rational(Rational a, std::int64_t disc) {
        return Quadratic(std::move(a), Rational(0), disc);
    }
    // w itself.
    static Quadratic root(std::int64_t disc) {
        return Quadratic(Rational(0), Rational(1), disc);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t disc() const { return disc_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    Quadratic conj() const { return Quadratic(a_, -b_, disc_); }

    Rational norm() const { return a_ * a_ - Rational(disc_) * (b_ * b_); }

    Quadratic operator-() const { return Quadratic(-a_, -b_, disc_); }

    friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
        std::int64_t d = merged_disc(x, y);
        return Quadratic(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Quadratic operator-(const Quadratic& x, const Quadratic& y) {
        std::int64_t d = merged_disc(x, y);
        return Quadratic(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend Quadratic operator*(const Quadratic& x, const Quadratic& y) {
        std::int64_t d = merged_disc(x, y);
        return Quadratic(x.a_ * y.a_ + Rational(d) * (x.b_ * y.b_),
                         x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend Quadratic operator/(const Quadratic& x, const Quadratic& y) {
        return x * y.inverse();
    }

    Quadratic& operator+=(const Quadratic& y) { return *this = *this + y; }
    Quadratic& operator-=(const Quadratic& y) { return *this = *this - y; }
    Quadratic& operator*=(const Quadratic& y) { return *this = *this * y; }

    // 1/x = conj(x) / norm(x).
    Quadratic inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Rational n = norm();
        if (n.is_zero())
            throw std::domain_error("inverse of zero-norm element (disc is a square?)");
        return Quadratic(a_ / n, -b_ / n, disc_);
    }

    friend bool operator==(const Quadratic& x, const Quadratic& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return x.b_.is_zero() || x.disc_ == y.disc_;
    }
    friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string bw = b_ == Rational(1)    ? "w"
                         : b_ == Rational(-1) ? "-w"
                                              : b_.str() + "*w";
        if (a_.is_zero()) return bw;
        if (b_.sign() > 0) return a_.str() + " + " + bw;
        return a_.str() + " - " + (-b_ == Rational(1) ? std::string("w") : (-b_).str() + "*w");
    }

    friend std::ostream& operator<<(std::ostream& os, const Quadratic& q) {
        return os << q.str();
    }

private:
    static std::int64_t merged_disc(const Quadratic& x, const Quadratic& y) {
        if (x.disc_ == y.disc_) return x.disc_;
        if (x.b_.is_zero()) return y.disc_;
        if (y.b_.is_zero()) return x.disc_;
        throw std::domain_error("disc mismatch: " + std::to_string(x.disc_) + " vs " +
                                std::to_string(y.disc_));
    }

    Rational a_;
    Rational b_;
    std::int64_t disc_;
};

}  // namespace ascert
