#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qspectra {

using BigInt = mpz_class;

inline std::string dec(const BigInt& x) { return x.get_str(10); }

inline BigInt big_from_dec(const std::string& s) { return BigInt(s, 10); }

inline BigInt pow2(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline int signum(const BigInt& x) { return sgn(x); }

// 2-adic valuation; nullopt encodes v2(0) = infinity.
inline std::optional<unsigned long> v2(const BigInt& x) {
    if (x == 0) return std::nullopt;
    return mpz_scan1(x.get_mpz_t(), 0);
}

// x / 2^e, truncating; exact whenever 2^e divides x.
inline BigInt shift_right(const BigInt& x, unsigned long e) {
    BigInt r;
    mpz_tdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

inline bool is_odd(const BigInt& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

} // namespace qspectra
