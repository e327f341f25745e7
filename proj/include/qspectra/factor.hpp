#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "qspectra/bigint.hpp"
#include "qspectra/errors.hpp"

namespace qspectra {

struct FactorBudget {
    // Total Pollard-rho squaring steps across all attempts.
    long long rho_iterations = 10'000'000;
};

struct FactorEntry {
    BigInt prime;
    int multiplicity = 0;

    bool operator==(const FactorEntry&) const = default;
};

struct FactorResult {
    // Sorted by prime, ascending. `residual` is 1 when the factorization is
    // complete, otherwise the composite cofactor left when the budget ran out.
    std::vector<FactorEntry> factors;
    BigInt residual = 1;

    bool complete() const { return residual == 1; }
    bool has_repeated_factor() const {
        for (const FactorEntry& e : factors)
            if (e.multiplicity > 1) return true;
        return false;
    }

    bool operator==(const FactorResult&) const = default;
};

namespace detail {

inline bool miller_rabin_composite_witness(const BigInt& n, const BigInt& a) {
    // n odd, n >= 3, 1 < a < n-1.
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

inline BigInt brent_rho(const BigInt& n, long long& budget) {
    // Returns a nontrivial divisor of composite odd n, or 0 if the budget
    // ran out. Deterministic: fixed start y = 2, increments c = 1, 2, ...
    for (unsigned long c = 1; c <= 64 && budget > 0; ++c) {
        BigInt y(2), g(1), q(1), x(0), ys(0);
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i) {
                y = (y * y + c) % n;
                --budget;
            }
            unsigned long k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    --budget;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // The whole block collapsed; replay one step at a time.
            g = 1;
            while (g == 1 && budget > 0) {
                ys = (ys * ys + c) % n;
                --budget;
                BigInt diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g > 1 && g < n) return g;
    }
    return BigInt(0);
}

} // namespace detail

// Deterministic for n < 2^64 (fixed Miller-Rabin base set); Baillie-PSW
// style testing via GMP above that.
inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (!is_odd(n)) return false;
    if (n < pow2(64)) {
        static const long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        for (long b : bases) {
            const BigInt a(b);
            if (a >= n - 1) break;
            if (detail::miller_rabin_composite_witness(n, a)) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

inline FactorResult factorize(const BigInt& n, const FactorBudget& budget = {}) {
    if (n < 1) throw DomainError("factorization input must be a positive integer");
    std::map<BigInt, int> found;
    BigInt m = n;

    auto strip = [&](const BigInt& p) {
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++found[p];
        }
    };

    strip(BigInt(2));
    strip(BigInt(3));
    for (long d = 5; d <= 1'000'000 && BigInt(d) * d <= m; d += 6) {
        strip(BigInt(d));
        strip(BigInt(d + 2));
    }

    long long steps = budget.rho_iterations;
    std::vector<BigInt> pending;
    if (m > 1) pending.push_back(m);
    BigInt residual(1);
    while (!pending.empty()) {
        BigInt c = pending.back();
        pending.pop_back();
        // No factor <= 10^6 survives trial division, so anything below
        // 10^12 here is prime.
        if (c <= BigInt("1000000000000") || is_prime(c)) {
            ++found[c];
            continue;
        }
        const BigInt g = detail::brent_rho(c, steps);
        if (g == 0) {
            residual *= c;
            continue;
        }
        BigInt h;
        mpz_divexact(h.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        pending.push_back(g);
        pending.push_back(h);
    }

    FactorResult result;
    result.residual = residual;
    for (auto& [p, mult] : found) result.factors.push_back({p, mult});
    return result;
}

} // namespace qspectra
