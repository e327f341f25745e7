#pragma once

#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qspectra/bigint.hpp"
#include "qspectra/errors.hpp"

namespace qspectra {

// Dense univariate polynomial over the integers, constant term first, no
// trailing zero coefficients. The zero polynomial stores no coefficients and
// reports the -infinity degree sentinel; code below never does arithmetic on
// the sentinel without checking is_zero() first.
class IntPolynomial {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    IntPolynomial(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPolynomial constant(BigInt v) {
        IntPolynomial p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    // The variable itself.
    static IntPolynomial t() { return IntPolynomial{0, 1}; }

    // c * t^e
    static IntPolynomial monomial(BigInt c, int e) {
        IntPolynomial p;
        if (c != 0) {
            p.c_.assign(static_cast<std::size_t>(e) + 1, BigInt(0));
            p.c_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }

    BigInt coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return BigInt(0);
        return c_[static_cast<std::size_t>(i)];
    }

    const BigInt& leading() const {
        if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const std::vector<BigInt>& coefficients() const { return c_; }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    IntPolynomial operator-() const {
        IntPolynomial r = *this;
        for (BigInt& v : r.c_) v = -v;
        return r;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.normalize();
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        return a + (-b);
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        IntPolynomial r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.normalize();
        return r;
    }

    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& p) {
        if (s == 0) return IntPolynomial();
        IntPolynomial r = p;
        for (BigInt& v : r.c_) v *= s;
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& p, const BigInt& s) { return s * p; }

    bool operator==(const IntPolynomial&) const = default;

    // Human-readable rendering with variable `t`, highest degree first.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const BigInt& v = c_[i];
            if (v == 0) continue;
            const bool neg = v < 0;
            BigInt mag = neg ? BigInt(-v) : v;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const bool unit = (mag == 1) && i > 0;
            if (!unit) out += mag.get_str(10);
            if (i > 0) {
                if (!unit) out += "*";
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

inline IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
inline IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) { return a - b; }
inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

inline IntPolynomial poly_pow(const IntPolynomial& base, int e) {
    IntPolynomial r = IntPolynomial::constant(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

// Quotient and remainder by a monic divisor; everything stays in Z[t].
inline std::pair<IntPolynomial, IntPolynomial> poly_divmod(const IntPolynomial& f,
                                                           const IntPolynomial& g) {
    if (!g.is_monic()) throw DomainError("polynomial division requires a monic divisor");
    IntPolynomial q, r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const int shift = r.degree() - g.degree();
        IntPolynomial term = IntPolynomial::monomial(r.leading(), shift);
        q = q + term;
        r = r - term * g;
    }
    return {q, r};
}

inline IntPolynomial poly_rem(const IntPolynomial& f, const IntPolynomial& g) {
    return poly_divmod(f, g).second;
}

// Exact quotient f / g in Z[t]; rejects inputs where the division leaves a
// remainder or a non-integer coefficient.
inline IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    IntPolynomial q, r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        BigInt c;
        mpz_tdiv_q(c.get_mpz_t(), r.leading().get_mpz_t(), g.leading().get_mpz_t());
        if (c * g.leading() != r.leading())
            throw DomainError("polynomial division is not exact");
        IntPolynomial term = IntPolynomial::monomial(c, r.degree() - g.degree());
        q = q + term;
        r = r - term * g;
    }
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
}

// Positive gcd of the coefficients; 0 for the zero polynomial.
inline BigInt content(const IntPolynomial& f) {
    BigInt c(0);
    for (const BigInt& v : f.coefficients()) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

inline IntPolynomial primitive_part(const IntPolynomial& f) {
    if (f.is_zero()) return f;
    const BigInt c = content(f);
    std::vector<BigInt> out;
    out.reserve(f.coefficients().size());
    for (const BigInt& v : f.coefficients()) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        out.push_back(std::move(q));
    }
    return IntPolynomial(std::move(out));
}

inline IntPolynomial derivative(const IntPolynomial& f) {
    if (f.degree() < 1) return IntPolynomial();
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i) out.push_back(BigInt(i) * f.coeff(i));
    return IntPolynomial(std::move(out));
}

// Pseudo-remainder R with lc(g)^(deg f - deg g + 1) * f = Q*g + R.
inline IntPolynomial pseudo_rem(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
    if (f.is_zero() || f.degree() < g.degree()) {
        IntPolynomial r = f;
        const int e = f.is_zero() ? 0 : f.degree() - g.degree() + 1;
        return e > 0 ? ipow(g.leading(), static_cast<unsigned long>(e)) * r : r;
    }
    IntPolynomial r = f;
    const BigInt d = g.leading();
    int e = f.degree() - g.degree() + 1;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        IntPolynomial term = IntPolynomial::monomial(r.leading(), r.degree() - g.degree());
        r = d * r - term * g;
        --e;
    }
    if (e > 0) r = ipow(d, static_cast<unsigned long>(e)) * r;
    return r;
}

// Primitive gcd with positive leading coefficient, computed over the
// subresultant remainder sequence.
inline IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() && g.is_zero())
        throw DomainError("gcd of two zero polynomials is undefined");
    auto positive_primitive = [](const IntPolynomial& p) {
        IntPolynomial r = primitive_part(p);
        return (r.leading() < 0) ? -r : r;
    };
    if (f.is_zero()) return positive_primitive(g);
    if (g.is_zero()) return positive_primitive(f);

    IntPolynomial a = primitive_part(f), b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.degree() == 0) return IntPolynomial::constant(1);

    BigInt gg(1), h(1);
    while (true) {
        const int delta = a.degree() - b.degree();
        IntPolynomial r = pseudo_rem(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) return IntPolynomial::constant(1);
        a = b;
        BigInt divisor = gg * ipow(h, static_cast<unsigned long>(delta));
        std::vector<BigInt> out;
        out.reserve(r.coefficients().size());
        for (const BigInt& v : r.coefficients()) {
            BigInt q;
            mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
            out.push_back(std::move(q));
        }
        b = IntPolynomial(std::move(out));
        gg = a.leading();
        if (delta > 0) {
            BigInt num = ipow(gg, static_cast<unsigned long>(delta));
            BigInt den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    return positive_primitive(b);
}

inline IntPolynomial squarefree_part(const IntPolynomial& f) {
    if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial is undefined");
    if (f.degree() == 0) return IntPolynomial::constant(1);
    const IntPolynomial pp = primitive_part(f);
    const IntPolynomial g = poly_gcd(pp, derivative(pp));
    IntPolynomial r = exact_divide(pp, g);
    r = primitive_part(r);
    return (r.leading() < 0) ? -r : r;
}

// Resultant over the subresultant remainder sequence. For monic f this is
// the product of g over the roots of f (with multiplicity).
inline BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw DomainError("resultant of a zero polynomial is undefined");
    IntPolynomial a = f, b = g;
    BigInt s(1);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
    }
    const BigInt ca = content(a), cb = content(b);
    a = primitive_part(a);
    b = primitive_part(b);
    BigInt scale = ipow(ca, static_cast<unsigned long>(b.degree())) *
                   ipow(cb, static_cast<unsigned long>(a.degree()));
    if (b.degree() == 0)
        return s * scale * ipow(b.coeff(0), static_cast<unsigned long>(a.degree()));

    BigInt gg(1), h(1);
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        IntPolynomial r = pseudo_rem(a, b);
        a = b;
        BigInt divisor = gg * ipow(h, static_cast<unsigned long>(delta));
        if (r.is_zero()) {
            b = IntPolynomial();
        } else {
            std::vector<BigInt> out;
            out.reserve(r.coefficients().size());
            for (const BigInt& v : r.coefficients()) {
                BigInt q;
                mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
                out.push_back(std::move(q));
            }
            b = IntPolynomial(std::move(out));
        }
        gg = a.leading();
        if (delta > 0) {
            BigInt num = ipow(gg, static_cast<unsigned long>(delta));
            BigInt den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.is_zero()) return BigInt(0);
        if (b.degree() == 0) break;
    }
    BigInt num = ipow(b.coeff(0), static_cast<unsigned long>(a.degree()));
    BigInt den = ipow(h, static_cast<unsigned long>(a.degree() - 1));
    BigInt hf;
    mpz_divexact(hf.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * scale * hf;
}

// For chi = sum c_j lambda^j monic of degree n, returns sum c_j b^j a^(n-j),
// the denominator-cleared chi(b/a) * a^n.
inline IntPolynomial homogeneous_compose(const IntPolynomial& chi, const IntPolynomial& b,
                                         const IntPolynomial& a) {
    if (!chi.is_monic()) throw DomainError("homogeneous composition requires a monic outer polynomial");
    const int n = chi.degree();
    std::vector<IntPolynomial> apow(static_cast<std::size_t>(n) + 1);
    apow[0] = IntPolynomial::constant(1);
    for (int i = 1; i <= n; ++i) apow[static_cast<std::size_t>(i)] = apow[static_cast<std::size_t>(i - 1)] * a;
    IntPolynomial r = IntPolynomial::constant(chi.coeff(n));
    for (int j = n - 1; j >= 0; --j)
        r = r * b + IntPolynomial::constant(chi.coeff(j)) * apow[static_cast<std::size_t>(n - j)];
    return r;
}

} // namespace qspectra
