#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qspectra/bigint.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/matrix.hpp"
#include "qspectra/polynomial.hpp"

namespace qspectra {

// First-row cofactor expansion with memoization on the set of surviving
// columns. Deliberately shares no code with Bareiss elimination; used as an
// independent cross-check at small dimension.
inline BigInt cofactor_determinant(const ExactMatrix& m) {
    const int n = m.dimension();
    if (n > 16) throw SizeError("cofactor determinant oracle supports dimension <= 16");
    std::vector<std::optional<BigInt>> memo(std::size_t{1} << n);
    std::function<BigInt(std::uint32_t)> rec = [&](std::uint32_t cols) -> BigInt {
        if (cols == 0) return BigInt(1);
        auto& slot = memo[cols];
        if (slot) return *slot;
        const int row = n - std::popcount(cols);
        BigInt acc(0);
        int sign = 1;
        for (int j = 0; j < n; ++j) {
            if (!((cols >> j) & 1u)) continue;
            if (m.at(row, j) != 0) {
                const BigInt sub = rec(cols & ~(std::uint32_t{1} << j));
                acc += sign > 0 ? m.at(row, j) * sub : BigInt(-m.at(row, j) * sub);
            }
            sign = -sign;
        }
        slot = acc;
        return acc;
    };
    return rec((n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
}

// Resultant as the determinant of the Sylvester matrix, evaluated by the
// cofactor oracle; independent of the remainder-sequence implementation.
inline BigInt sylvester_resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw DomainError("resultant of a zero polynomial is undefined");
    const int n = f.degree(), m = g.degree();
    if (n == 0 && m == 0) return BigInt(1);
    if (n == 0) return ipow(f.coeff(0), static_cast<unsigned long>(m));
    if (m == 0) return ipow(g.coeff(0), static_cast<unsigned long>(n));
    ExactMatrix s(n + m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s.at(i, i + k) = f.coeff(n - k);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s.at(m + i, i + k) = g.coeff(m - k);
    return cofactor_determinant(s);
}

} // namespace qspectra
