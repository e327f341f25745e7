#pragma once

#include <utility>
#include <vector>

#include "qspectra/bigint.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/graph.hpp"
#include "qspectra/polynomial.hpp"

namespace qspectra {

// Square matrix with arbitrary-precision integer entries.
class ExactMatrix {
public:
    explicit ExactMatrix(int n)
        : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), BigInt(0)) {
        if (n < 1) throw SizeError("matrix dimension must be at least 1");
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int dimension() const noexcept { return n_; }

    BigInt& at(int i, int j) { return e_[index(i, j)]; }
    const BigInt& at(int i, int j) const { return e_[index(i, j)]; }

    std::vector<BigInt> mat_vec(const std::vector<BigInt>& v) const {
        std::vector<BigInt> out(static_cast<std::size_t>(n_), BigInt(0));
        for (int i = 0; i < n_; ++i) {
            BigInt acc(0);
            for (int j = 0; j < n_; ++j) acc += at(i, j) * v[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = std::move(acc);
        }
        return out;
    }

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("matrix index (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside dimension " +
                                    std::to_string(n_));
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<BigInt> e_;
};

inline ExactMatrix a_matrix(const Graph& g) {
    ExactMatrix m(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(i, j)) {
                m.at(i, j) = 1;
                m.at(j, i) = 1;
            }
    return m;
}

// Signless Laplacian A + D.
inline ExactMatrix q_matrix(const Graph& g) {
    ExactMatrix m = a_matrix(g);
    for (int i = 0; i < g.order(); ++i) m.at(i, i) = g.degree(i);
    return m;
}

// Columns q^j * (all-ones vector), j = 0 .. n-1.
inline ExactMatrix walk_matrix(const ExactMatrix& q) {
    const int n = q.dimension();
    ExactMatrix w(n);
    std::vector<BigInt> col(static_cast<std::size_t>(n), BigInt(1));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) w.at(i, j) = col[static_cast<std::size_t>(i)];
        if (j + 1 < n) col = q.mat_vec(col);
    }
    return w;
}

// Fraction-free Bareiss elimination; every interior division is exact.
inline BigInt determinant(const ExactMatrix& m) {
    const int n = m.dimension();
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);

    int sign = 1;
    BigInt prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return BigInt(0);
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                mpz_divexact(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    BigInt det = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign < 0 ? BigInt(-det) : det;
}

// Division-free Berkowitz characteristic polynomial of det(tI - m),
// assembled by iterating Toeplitz products over leading principal
// submatrices. Monic of degree n by construction.
inline IntPolynomial char_poly(const ExactMatrix& m) {
    const int n = m.dimension();
    // Coefficients highest degree first during assembly.
    std::vector<BigInt> c{BigInt(1), -m.at(0, 0)};
    for (int r = 2; r <= n; ++r) {
        // q[k] holds the k-th Toeplitz column entry for the new row/column.
        std::vector<BigInt> q(static_cast<std::size_t>(r) + 1);
        q[0] = 1;
        q[1] = -m.at(r - 1, r - 1);
        std::vector<BigInt> v(static_cast<std::size_t>(r) - 1);
        for (int i = 0; i < r - 1; ++i) v[static_cast<std::size_t>(i)] = m.at(i, r - 1);
        for (int k = 2; k <= r; ++k) {
            BigInt dot(0);
            for (int i = 0; i < r - 1; ++i) dot += m.at(r - 1, i) * v[static_cast<std::size_t>(i)];
            q[static_cast<std::size_t>(k)] = -dot;
            if (k < r) {
                std::vector<BigInt> nv(static_cast<std::size_t>(r) - 1, BigInt(0));
                for (int i = 0; i < r - 1; ++i) {
                    BigInt acc(0);
                    for (int j = 0; j < r - 1; ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
                    nv[static_cast<std::size_t>(i)] = std::move(acc);
                }
                v = std::move(nv);
            }
        }
        std::vector<BigInt> next(static_cast<std::size_t>(r) + 1, BigInt(0));
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t k = 0; k <= i && k < q.size(); ++k)
                if (i - k < c.size()) next[i] += q[k] * c[i - k];
        c = std::move(next);
    }
    std::vector<BigInt> constant_first(c.rbegin(), c.rend());
    return IntPolynomial(std::move(constant_first));
}

} // namespace qspectra
