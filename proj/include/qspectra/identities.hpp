#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qspectra/bigint.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/families.hpp"
#include "qspectra/polynomial.hpp"

namespace qspectra {

// One tested instance of an identity. `index` is the primary family index;
// `aux` carries a secondary parameter (inner shift index, sampled scalar)
// and is 0 where unused. Both sides are stored for every instance, so the
// first failing record is already a complete witness.
struct IdentityRecord {
    long index = 0;
    long aux = 0;
    bool holds = false;
    std::variant<BigInt, IntPolynomial> lhs;
    std::variant<BigInt, IntPolynomial> rhs;

    bool operator==(const IdentityRecord&) const = default;
};

struct VerdictReport {
    std::string identity;
    long index_begin = 0;
    long index_end = 0;
    bool all_hold = true;
    std::vector<IdentityRecord> records;

    void add(IdentityRecord rec) {
        all_hold = all_hold && rec.holds;
        records.push_back(std::move(rec));
    }

    bool operator==(const VerdictReport&) const = default;
};

namespace detail {

inline IdentityRecord poly_record(long index, long aux, IntPolynomial lhs, IntPolynomial rhs) {
    IdentityRecord r;
    r.index = index;
    r.aux = aux;
    r.holds = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

inline IdentityRecord int_record(long index, long aux, BigInt lhs, BigInt rhs) {
    IdentityRecord r;
    r.index = index;
    r.aux = aux;
    r.holds = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

} // namespace detail

// f_s against the stated closed forms: a_k^2 when s = 2k+1, t*c_k when
// s = 2k. Odd and even cases are adjudicated as separate reports.
inline std::vector<VerdictReport> check_fs(int s_min, int s_max) {
    if (s_min < 1 || s_max < s_min) throw DomainError("check_fs needs 1 <= s_min <= s_max");
    VerdictReport odd{"fs-odd", s_min, s_max, true, {}};
    VerdictReport even{"fs-even", s_min, s_max, true, {}};
    for (int s = s_min; s <= s_max; ++s) {
        const IntPolynomial fs = gen_f(s);
        if (s % 2 == 1) {
            const int k = (s - 1) / 2;
            const IntPolynomial ak = gen_a(k);
            odd.add(detail::poly_record(s, 0, fs, ak * ak));
        } else {
            const int k = s / 2;
            even.add(detail::poly_record(s, 0, fs, IntPolynomial::t() * gen_c(k)));
        }
    }
    return {odd, even};
}

// t*c_{s-1} = b_s (left) and (t-1)a_{s-1} - a_{s-2} = b_s (right).
inline std::vector<VerdictReport> check_cp(int s_min, int s_max) {
    if (s_min < 2 || s_max < s_min) throw DomainError("check_cp needs 2 <= s_min <= s_max");
    VerdictReport left{"cp-left", s_min, s_max, true, {}};
    VerdictReport right{"cp-right", s_min, s_max, true, {}};
    for (int s = s_min; s <= s_max; ++s) {
        const IntPolynomial bs = gen_b(s);
        left.add(detail::poly_record(s, 0, IntPolynomial::t() * gen_c(s - 1), bs));
        right.add(detail::poly_record(
            s, 0, IntPolynomial{-1, 1} * gen_a(s - 1) - gen_a(s - 2), bs));
    }
    return {left, right};
}

// b_i vanishes on every root of f_i, tested as exact divisibility of b_i by
// the squarefree part of f_i; the stored sides are the remainder and zero.
inline std::vector<VerdictReport> check_zero(int i_min, int i_max) {
    if (i_min < 2 || i_max < i_min) throw DomainError("check_zero needs 2 <= i_min <= i_max");
    VerdictReport rep{"zero-divisibility", i_min, i_max, true, {}};
    for (int i = i_min; i <= i_max; ++i) {
        const IntPolynomial sf = squarefree_part(gen_f(i));
        rep.add(detail::poly_record(i, 0, poly_rem(gen_b(i), sf), IntPolynomial()));
    }
    return {rep};
}

// a_{k+i} + a_{k-i} = (a_i - a_{i-1}) a_k for 0 < i <= k+1, using the
// extension a_{-1} = -1 at i = k+1.
inline std::vector<VerdictReport> check_shift_claim(int k_max) {
    if (k_max < 1) throw DomainError("check_shift_claim needs k_max >= 1");
    VerdictReport rep{"shift", 1, k_max, true, {}};
    for (int k = 1; k <= k_max; ++k)
        for (int i = 1; i <= k + 1; ++i)
            rep.add(detail::poly_record(k, i, gen_a(k + i) + gen_a(k - i),
                                        (gen_a(i) - gen_a(i - 1)) * gen_a(k)));
    return {rep};
}

// Product of a_{k-1} over the roots of b_k - lambda*a_{k-1}, computed as a
// resultant, against (-1)^{k(k-1)/2}; the value must not depend on lambda.
inline std::vector<VerdictReport> check_ap(int k_min, int k_max,
                                           const std::vector<long>& lambda_samples) {
    if (k_min < 2 || k_max < k_min) throw DomainError("check_ap needs 2 <= k_min <= k_max");
    if (lambda_samples.empty()) throw DomainError("check_ap needs at least one sample");
    VerdictReport rep{"ap", k_min, k_max, true, {}};
    for (int k = k_min; k <= k_max; ++k) {
        const IntPolynomial akm1 = gen_a(k - 1);
        const BigInt expected = (static_cast<long>(k) * (k - 1) / 2) % 2 == 0 ? 1 : -1;
        for (long lambda : lambda_samples) {
            const IntPolynomial phi = gen_b(k) - BigInt(lambda) * akm1;
            rep.add(detail::int_record(k, lambda, resultant(phi, akm1), expected));
        }
    }
    return {rep};
}

// Product of a_{k-1} over the roots of f_k, against the printed sign (-1)^k
// and the alternative (-1)^{k-1}; both comparisons are reported.
inline std::vector<VerdictReport> check_fp(int k_min, int k_max) {
    if (k_min < 2 || k_max < k_min) throw DomainError("check_fp needs 2 <= k_min <= k_max");
    VerdictReport printed{"fp-printed", k_min, k_max, true, {}};
    VerdictReport alt{"fp-alt", k_min, k_max, true, {}};
    for (int k = k_min; k <= k_max; ++k) {
        const BigInt prod = resultant(gen_f(k), gen_a(k - 1));
        printed.add(detail::int_record(k, 0, prod, k % 2 == 0 ? BigInt(1) : BigInt(-1)));
        alt.add(detail::int_record(k, 0, prod, (k - 1) % 2 == 0 ? BigInt(1) : BigInt(-1)));
    }
    return {printed, alt};
}

} // namespace qspectra
