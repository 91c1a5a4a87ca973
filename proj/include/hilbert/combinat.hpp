// Copyright 2026 The hilbert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Latin squares, complex Hadamard matrices and maximally entangled bases.

#ifndef HILBERT_COMBINAT_HPP
#define HILBERT_COMBINAT_HPP

#include "hilbert/core.hpp"
#include "hilbert/gf.hpp"

#include <numeric>
#include <set>

namespace hilbert {

using Grid = std::vector<std::vector<int>>;

class LatinSquare {
 public:
    LatinSquare() = default;
    explicit LatinSquare(Grid cells);

    int order() const { return static_cast<int>(cells_.size()); }
    int operator()(int i, int j) const { return cells_[i][j]; }
    const Grid& cells() const { return cells_; }
    bool operator==(const LatinSquare& o) const = default;

 private:
    Grid cells_;
};

inline bool is_latin(const Grid& a) {
    int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        std::vector<char> row_seen(n, 0), col_seen(n, 0);
        for (int j = 0; j < n; ++j) {
            int x = a[i][j], y = a[j][i];
            if (x < 0 || x >= n || y < 0 || y >= n) return false;
            if (row_seen[x]++ || col_seen[y]++) return false;
        }
    }
    return true;
}

inline LatinSquare::LatinSquare(Grid cells) : cells_(std::move(cells)) {
    if (!is_latin(cells_)) throw Error("not a Latin square");
}

/// Cyclic group table L(i, j) = i + j mod n.
inline LatinSquare latin_from_group(int n) {
    if (n < 1) throw Error("order must be at least 1");
    Grid g(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = (i + j) % n;
    return LatinSquare(std::move(g));
}

inline bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    int n = a.order();
    if (b.order() != n) throw Error("Latin squares have different orders");
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (seen[a(i, j) * n + b(i, j)]++) return false;
    return true;
}

/// L_a(x, y) = a x + y over GF(q), a != 0, cells indexed by canonical field order.
inline std::vector<LatinSquare> mols_from_field(int q) {
    std::int64_t p;
    int k;
    if (!prime_power(q, p, k)) throw Error("no field of this order");
    if (q > 64) throw Error("order exceeds 64");
    auto f = field_make(p, k);
    auto elems = field_elements(f);
    std::vector<LatinSquare> out;
    for (int a = 1; a < q; ++a) {
        Grid g(q, std::vector<int>(q));
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y) g[x][y] = static_cast<int>((elems[a] * elems[x] + elems[y]).index());
        out.emplace_back(std::move(g));
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!are_orthogonal(out[i], out[j])) throw Error("field squares failed orthogonality");
    return out;
}

/// Reduced form: columns permuted so the first row reads 0..n-1, then rows
/// permuted so the first column reads 0..n-1.
inline LatinSquare reduce_latin(const LatinSquare& l) {
    int n = l.order();
    Grid g(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][l(0, j)] = l(i, j);
    Grid r(n);
    for (int i = 0; i < n; ++i) r[g[i][0]] = g[i];
    return LatinSquare(std::move(r));
}

inline bool is_reduced(const LatinSquare& l) {
    for (int i = 0; i < l.order(); ++i)
        if (l(0, i) != i || l(i, 0) != i) return false;
    return true;
}

/// Calls visit(grid) for every Latin square of order n (row-major backtracking).
inline void enumerate_latin(int n, const std::function<void(const Grid&)>& visit, bool reduced_only = false) {
    Grid g(n, std::vector<int>(n, -1));
    std::vector<std::vector<char>> row_used(n, std::vector<char>(n, 0)), col_used(n, std::vector<char>(n, 0));
    std::function<void(int)> place = [&](int cell) {
        if (cell == n * n) {
            visit(g);
            return;
        }
        int i = cell / n, j = cell % n;
        for (int x = 0; x < n; ++x) {
            if (reduced_only && ((i == 0 && x != j) || (j == 0 && x != i))) continue;
            if (row_used[i][x] || col_used[j][x]) continue;
            row_used[i][x] = col_used[j][x] = 1;
            g[i][j] = x;
            place(cell + 1);
            row_used[i][x] = col_used[j][x] = 0;
        }
        g[i][j] = -1;
    };
    if (n > 0) place(0);
}

/// Row, column and symbol shuffles of the cyclic square (not uniform over all squares).
template <class Rng>
LatinSquare random_latin(int n, Rng& rng) {
    std::vector<int> rows(n), cols(n), syms(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::iota(syms.begin(), syms.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::shuffle(syms.begin(), syms.end(), rng);
    Grid g(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = syms[(rows[i] + cols[j]) % n];
    return LatinSquare(std::move(g));
}

// ---------------------------------------------------------------------------
// Complex Hadamard matrices, stored unitary (entries of modulus 1/sqrt(n)).

inline bool is_complex_hadamard(const Matrix& h, double tol = kEpsMat) {
    auto n = h.rows();
    if (h.cols() != n || n == 0) return false;
    double flat = 1.0 / std::sqrt(static_cast<double>(n));
    if ((h.cwiseAbs().array() - flat).abs().maxCoeff() > tol) return false;
    return unitarity_residual(h) < tol;
}

inline Matrix fourier_matrix(int n) {
    if (n < 1) throw Error("order must be at least 1");
    Matrix f(n, n);
    double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) f(j, k) = s * root_of_unity(static_cast<std::int64_t>(j) * k, n);
    return f;
}

/// One-parameter family of order-4 complex Hadamards; a = 0 is F2 (x) F2.
inline Matrix hadamard_family4(double a) {
    Complex e = std::polar(1.0, a);
    Matrix h(4, 4);
    h << 1, 1, 1, 1,
         1, -1, e, -e,
         1, 1, -1, -1,
         1, -1, -e, e;
    return h / 2.0;
}

namespace detail {

// Entries H_ij H_ab / (H_ib H_aj): row a and column b become all ones.
inline Matrix dephase(const Matrix& h, int a, int b) {
    auto n = h.rows();
    Matrix e(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) e(i, j) = h(i, j) * h(a, b) / (h(i, b) * h(a, j));
    return e;
}

}  // namespace detail

/// Decides H2 = P D H1 D' P' for some permutations P, P' and diagonal unitaries D, D'.
inline bool hadamard_equivalent(const Matrix& h1, const Matrix& h2, double tol = kEpsMat) {
    int n = static_cast<int>(h1.rows());
    if (n > 6) throw Error("order too large for exhaustive equivalence");
    if (h2.rows() != n || h1.cols() != n || h2.cols() != n) throw Error("Hadamard matrices have different orders");
    if (n <= 1) return true;
    Matrix target = detail::dephase(h2, 0, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Matrix e = detail::dephase(h1, a, b);
            std::vector<int> rows, cols;
            for (int i = 0; i < n; ++i) {
                if (i != a) rows.push_back(i);
                if (i != b) cols.push_back(i);
            }
            // cols[perm[k]] of e is matched to column k+1 of target.
            std::vector<int> perm(n - 1);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<char> used(n - 1, 0);
                bool ok = true;
                for (int t = 1; t < n && ok; ++t) {
                    int found = -1;
                    for (int ri = 0; ri < n - 1 && found < 0; ++ri) {
                        if (used[ri]) continue;
                        bool match = true;
                        for (int k = 0; k < n - 1 && match; ++k)
                            if (std::abs(e(rows[ri], cols[perm[k]]) - target(t, k + 1)) > tol) match = false;
                        if (match) found = ri;
                    }
                    if (found < 0) ok = false;
                    else used[found] = 1;
                }
                if (ok) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Maximally entangled vectors on C^n (x) C^n, index k * n + l.

/// |U> = (1/sqrt N) sum_ij U_ij |i>|j>.
inline Vector vector_from_unitary(const Matrix& u) {
    if (u.rows() != u.cols()) throw Error("operator must be square");
    if (unitarity_residual(u) > kEpsMat) throw Error("matrix is not unitary");
    auto n = u.rows();
    Vector v(n * n);
    double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = s * u(i, j);
    return v;
}

/// Reduced states of a bipartite vector: rho_A = M M^dag, rho_B = M^T conj(M).
inline std::pair<Matrix, Matrix> reduced_states(const Vector& psi, int n) {
    if (psi.size() != static_cast<Eigen::Index>(n) * n) throw Error("vector size is not n^2");
    Matrix m(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m(k, l) = psi(k * n + l);
    return {m * m.adjoint(), m.transpose() * m.conjugate()};
}

/// |Omega_ij> = (1/sqrt n) sum_k h_jk |k>|L(i,k)> with h = sqrt(n) H unimodular.
/// Output order i * n + j.
inline std::vector<Vector> werner_basis(const LatinSquare& l, const Matrix& h) {
    int n = l.order();
    if (h.rows() != n || h.cols() != n) throw Error("Latin square and Hadamard matrix have different orders");
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vector v = Vector::Zero(static_cast<Eigen::Index>(n) * n);
            for (int k = 0; k < n; ++k) v(k * n + l(i, k)) = h(j, k);
            out.push_back(v);
        }
    return out;
}

struct WernerReport {
    double gram_deviation = 0;     // ||G - 1||max
    double reduced_deviation = 0;  // max over vectors of ||rho_A - 1/n||, ||rho_B - 1/n||
    bool pass(double tol = kEpsMat) const { return gram_deviation < tol && reduced_deviation < tol; }
};

/// Checks the Werner vectors of (L, H) without forming n^2-dimensional vectors:
/// |Omega_ij> has exactly one entry per k, namely h_jk at (k, L(i,k)).
inline WernerReport werner_check(const LatinSquare& l, const Matrix& h) {
    int n = l.order();
    if (h.rows() != n || h.cols() != n) throw Error("Latin square and Hadamard matrix have different orders");
    WernerReport rep;
    double inv_n = 1.0 / n;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int j1 = 0; j1 < n; ++j1)
                for (int j2 = 0; j2 < n; ++j2) {
                    Complex g = 0.0;
                    for (int k = 0; k < n; ++k)
                        if (l(i1, k) == l(i2, k)) g += std::conj(h(j1, k)) * h(j2, k);
                    double expect = (i1 == i2 && j1 == j2) ? 1.0 : 0.0;
                    rep.gram_deviation = std::max(rep.gram_deviation, std::abs(g - expect));
                }
    std::vector<Complex> rho_b(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // rho_A(k,k') = h_jk conj(h_jk') [L(i,k) == L(i,k')]
            for (int k = 0; k < n; ++k)
                for (int k2 = 0; k2 < n; ++k2) {
                    Complex a = l(i, k) == l(i, k2) ? h(j, k) * std::conj(h(j, k2)) : Complex(0.0);
                    rep.reduced_deviation = std::max(rep.reduced_deviation, std::abs(a - (k == k2 ? inv_n : 0.0)));
                }
            // rho_B(l,l') = sum_k [L(i,k) = l][L(i,k) = l'] |h_jk|^2
            std::fill(rho_b.begin(), rho_b.end(), Complex(0.0));
            for (int k = 0; k < n; ++k) rho_b[l(i, k) * n + l(i, k)] += std::norm(h(j, k));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    rep.reduced_deviation = std::max(rep.reduced_deviation, std::abs(rho_b[a * n + b] - (a == b ? inv_n : 0.0)));
        }
    return rep;
}

/// Dense version of werner_check, used to cross-validate the sparse one.
inline WernerReport werner_check_dense(const std::vector<Vector>& basis, int n) {
    WernerReport rep;
    Matrix m(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) m.col(c) = basis[c];
    rep.gram_deviation = max_abs(m.adjoint() * m - Matrix::Identity(m.cols(), m.cols()));
    Matrix target = Matrix::Identity(n, n) / static_cast<double>(n);
    for (const auto& v : basis) {
        auto [ra, rb] = reduced_states(v, n);
        rep.reduced_deviation = std::max({rep.reduced_deviation, max_abs(ra - target), max_abs(rb - target)});
    }
    return rep;
}

}  // namespace hilbert

#endif  // HILBERT_COMBINAT_HPP
