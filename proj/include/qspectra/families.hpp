#pragma once

#include <mutex>
#include <vector>

#include "qspectra/errors.hpp"
#include "qspectra/polynomial.hpp"

namespace qspectra {

namespace detail {

// Memoized family storage; one lock guards all four sequences.
struct FamilyCache {
    std::mutex mu;
    std::vector<IntPolynomial> a, b, c, f;

    static FamilyCache& instance() {
        static FamilyCache cache;
        return cache;
    }
};

} // namespace detail

// a_0 = 1, a_1 = t - 1, a_k = (t-2) a_{k-1} - a_{k-2}. The index -1 is the
// conventional extension a_{-1} = -1, which keeps the shift identity total.
inline IntPolynomial gen_a(int k) {
    if (k < -1) throw DomainError("a-family index must be >= -1");
    if (k == -1) return IntPolynomial::constant(-1);
    auto& cache = detail::FamilyCache::instance();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto& a = cache.a;
    if (a.empty()) {
        a.push_back(IntPolynomial{1});
        a.push_back(IntPolynomial{-1, 1});
    }
    const IntPolynomial step{-2, 1};
    while (static_cast<int>(a.size()) <= k)
        a.push_back(step * a[a.size() - 1] - a[a.size() - 2]);
    return a[static_cast<std::size_t>(k)];
}

// b_0 = 1, b_1 = t - 1, b_k = (t-1) a_{k-1} - a_{k-2} for k >= 2.
inline IntPolynomial gen_b(int k) {
    if (k < 0) throw DomainError("b-family index must be >= 0");
    if (k == 0) return IntPolynomial{1};
    if (k == 1) return IntPolynomial{-1, 1};
    const IntPolynomial lead{-1, 1};
    return lead * gen_a(k - 1) - gen_a(k - 2);
}

// c_0 = 1, c_1 = t - 2, c_k = (t-1) c_{k-1} - c_{k-2}, exactly as printed.
inline IntPolynomial gen_c(int k) {
    if (k < 0) throw DomainError("c-family index must be >= 0");
    auto& cache = detail::FamilyCache::instance();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto& c = cache.c;
    if (c.empty()) {
        c.push_back(IntPolynomial{1});
        c.push_back(IntPolynomial{-2, 1});
    }
    const IntPolynomial step{-1, 1};
    while (static_cast<int>(c.size()) <= k)
        c.push_back(step * c[c.size() - 1] - c[c.size() - 2]);
    return c[static_cast<std::size_t>(k)];
}

// f_k = a_0 + a_1 + ... + a_{k-1}.
inline IntPolynomial gen_f(int k) {
    if (k < 1) throw DomainError("f-family index must be >= 1");
    gen_a(k - 1);
    auto& cache = detail::FamilyCache::instance();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto& f = cache.f;
    if (f.empty()) f.push_back(IntPolynomial{1});
    while (static_cast<int>(f.size()) < k) {
        const std::size_t next = f.size();
        f.push_back(f.back() + cache.a[next]);
    }
    return f[static_cast<std::size_t>(k - 1)];
}

} // namespace qspectra
