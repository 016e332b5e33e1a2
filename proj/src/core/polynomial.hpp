#pragma once

#include "core/ints.hpp"

#include <string>
#include <vector>

namespace ascert {

// Polynomial with exact integer coefficients, ascending order
// (coeffs[k] multiplies x^k). Trailing zeros are trimmed.
struct IntPoly {
    std::vector<Int> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Int& leading() const { return coeffs.back(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    void trim() {
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    std::string str() const;
};

IntPoly poly_mul(const IntPoly& p, const IntPoly& q);

// Quotient of p by monic q; exact = true iff the remainder is zero.
struct PolyDivision {
    IntPoly quotient;
    bool exact = false;
};
PolyDivision poly_div_monic(const IntPoly& p, const IntPoly& q);

}  // namespace ascert
