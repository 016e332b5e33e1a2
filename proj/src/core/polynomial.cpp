#include "core/polynomial.hpp"

#include <stdexcept>

namespace ascert {

std::string IntPoly::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeffs[k];
        if (c == 0 && !(k == 0 && out.empty())) continue;
        Int ac = abs(c);
        if (out.empty()) {
            out += (c < 0) ? "-" : "";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (k == 0 || ac != 1) out += ac.str();
        if (k > 0) {
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
    std::vector<Int> out(p.coeffs.size() + q.coeffs.size() - 1, Int(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            out[i + j] += p.coeffs[i] * q.coeffs[j];
    return IntPoly(std::move(out));
}

PolyDivision poly_div_monic(const IntPoly& p, const IntPoly& q) {
    if (!q.is_monic()) throw std::invalid_argument("divisor must be monic");
    std::vector<Int> rem = p.coeffs;
    const int dq = q.degree();
    const int dp = p.degree();
    if (dp < dq) return {IntPoly(std::vector<Int>{Int(0)}), false};
    std::vector<Int> quot(static_cast<std::size_t>(dp - dq) + 1, Int(0));
    for (int k = dp; k >= dq; --k) {
        Int c = rem[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - dq)] = c;
        for (int j = 0; j <= dq; ++j)
            rem[static_cast<std::size_t>(k - dq + j)] -= c * q.coeffs[static_cast<std::size_t>(j)];
    }
    bool exact = true;
    for (const Int& c : rem)
        if (c != 0) exact = false;
    return {IntPoly(std::move(quot)), exact};
}

}  // namespace ascert
