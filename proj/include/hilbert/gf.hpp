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

// Finite fields GF(p^K) with elements stored as coefficient vectors over Z_p.
//
// Element enumeration order: index(x) = sum_i c_i p^i, i.e. coefficient
// vectors compared lexicographically starting from the highest power. The
// same ordering picks the defining polynomial and the primitive element.

#ifndef HILBERT_GF_HPP
#define HILBERT_GF_HPP

#include "hilbert/core.hpp"

#include <memory>
#include <sstream>

namespace hilbert {

struct FieldSpec {
    std::int64_t p = 2;
    int K = 1;
    // Monic, low degree first, length K+1. For K = 1 this is just "x".
    std::vector<std::int64_t> poly;

    std::int64_t order() const {
        std::int64_t q = 1;
        for (int i = 0; i < K; ++i) q *= p;
        return q;
    }

    bool operator==(const FieldSpec& o) const { return p == o.p && K == o.K && poly == o.poly; }
};

using Field = std::shared_ptr<const FieldSpec>;

struct RingResidue {
    std::int64_t value = 0;
    std::int64_t modulus = 1;

    bool operator==(const RingResidue& o) const = default;
};

class FieldElement {
 public:
    FieldElement() = default;
    FieldElement(Field spec, std::vector<std::int64_t> coeffs) : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
        if (!spec_) throw Error("field element without a field");
        if (static_cast<int>(coeffs_.size()) != spec_->K) throw Error("coefficient vector has wrong length");
        for (auto& c : coeffs_) c = mod(c, spec_->p);
    }

    const Field& spec() const { return spec_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t index() const {
        std::int64_t idx = 0;
        for (int i = spec_->K - 1; i >= 0; --i) idx = idx * spec_->p + coeffs_[i];
        return idx;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
    }

    bool operator==(const FieldElement& o) const { return same_field(o) && coeffs_ == o.coeffs_; }

    bool same_field(const FieldElement& o) const {
        return spec_ == o.spec_ || (spec_ && o.spec_ && *spec_ == *o.spec_);
    }

 private:
    Field spec_;
    std::vector<std::int64_t> coeffs_;
};

namespace detail {

// Polynomials over Z_p, low degree first, trimmed of leading zeros.
using Poly = std::vector<std::int64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
inline Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        std::int64_t lead = a.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
        trim(a);
    }
    return a;
}

inline bool is_irreducible(const Poly& f, std::int64_t p) {
    int k = static_cast<int>(f.size()) - 1;
    if (k <= 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (int d = 1; d <= k / 2; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1);
            std::int64_t t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Builds GF(p^K) with the smallest monic irreducible polynomial of degree K.
inline Field field_make(std::int64_t p, int K) {
    if (!is_prime(p)) throw Error("characteristic not prime");
    if (K < 1) throw Error("extension degree must be at least 1");
    double size = std::pow(static_cast<double>(p), K);
    if (size > static_cast<double>(1 << 20)) throw Error("field order exceeds 2^20");
    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->K = K;
    if (K == 1) {
        spec->poly = {0, 1};
        return spec;
    }
    std::int64_t count = spec->order();
    for (std::int64_t idx = 0; idx < count; ++idx) {
        detail::Poly f(K + 1);
        std::int64_t t = idx;
        for (int i = 0; i < K; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[K] = 1;
        if (f[0] == 0) continue;  // divisible by x
        if (detail::is_irreducible(f, p)) {
            spec->poly = f;
            return spec;
        }
    }
    throw Error("no irreducible polynomial found");
}

inline FieldElement field_element(const Field& f, std::int64_t index) {
    if (index < 0 || index >= f->order()) throw Error("field index out of range");
    std::vector<std::int64_t> c(f->K);
    for (int i = 0; i < f->K; ++i) {
        c[i] = index % f->p;
        index /= f->p;
    }
    return FieldElement(f, std::move(c));
}

inline FieldElement field_zero(const Field& f) { return field_element(f, 0); }
inline FieldElement field_one(const Field& f) { return field_element(f, 1); }

/// The class of x, i.e. a root of the defining polynomial. For K = 1 this is 0.
inline FieldElement field_x(const Field& f) {
    std::vector<std::int64_t> c(f->K, 0);
    if (f->K > 1) c[1] = 1;
    return FieldElement(f, std::move(c));
}

inline FieldElement field_scalar(const Field& f, std::int64_t a) {
    std::vector<std::int64_t> c(f->K, 0);
    c[0] = a;
    return FieldElement(f, std::move(c));
}

inline std::vector<FieldElement> field_elements(const Field& f) {
    std::vector<FieldElement> out;
    out.reserve(f->order());
    for (std::int64_t i = 0; i < f->order(); ++i) out.push_back(field_element(f, i));
    return out;
}

namespace detail {

inline void require_same(const FieldElement& a, const FieldElement& b) {
    if (!a.same_field(b)) throw Error("operands belong to different fields");
}

}  // namespace detail

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    detail::require_same(a, b);
    std::vector<std::int64_t> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
    return FieldElement(a.spec(), std::move(c));
}

inline FieldElement operator-(const FieldElement& a) {
    std::vector<std::int64_t> c(a.coeffs());
    for (auto& x : c) x = -x;
    return FieldElement(a.spec(), std::move(c));
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    detail::require_same(a, b);
    const auto& f = *a.spec();
    int K = f.K;
    detail::Poly prod(2 * K - 1, 0);
    for (int i = 0; i < K; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (int j = 0; j < K; ++j) prod[i + j] = (prod[i + j] + a.coeffs()[i] * b.coeffs()[j]) % f.p;
    }
    std::vector<std::int64_t> c(K, 0);
    if (K == 1) {
        c[0] = prod[0];
    } else {
        auto r = detail::poly_rem(prod, f.poly, f.p);
        for (std::size_t i = 0; i < r.size(); ++i) c[i] = r[i];
    }
    return FieldElement(a.spec(), std::move(c));
}

inline FieldElement field_pow(const FieldElement& a, std::int64_t e) {
    if (e < 0) throw Error("negative exponent; use field_inv");
    FieldElement r = field_one(a.spec());
    FieldElement b = a;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

inline FieldElement field_inv(const FieldElement& a) {
    if (a.is_zero()) throw Error("division by zero");
    return field_pow(a, a.spec()->order() - 2);
}

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * field_inv(b); }

enum class FieldOp { add, mul, inv, pow };

/// Single entry point for the four basic operations. For pow, b's canonical
/// index is used as the exponent.
inline FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::mul: return a * b;
        case FieldOp::inv: return field_inv(a);
        case FieldOp::pow: detail::require_same(a, b); return field_pow(a, b.index());
    }
    throw Error("unknown field operation");
}

inline RingResidue field_trace(const FieldElement& x) {
    const auto& f = *x.spec();
    FieldElement acc = x;
    FieldElement term = x;
    for (int i = 1; i < f.K; ++i) {
        term = field_pow(term, f.p);
        acc = acc + term;
    }
    // The trace lies in the prime field, so only the constant coefficient survives.
    for (int i = 1; i < f.K; ++i)
        if (acc.coeffs()[i] != 0) throw Error("trace left the prime field");
    return {acc.coeffs()[0], f.p};
}

inline std::int64_t multiplicative_order(const FieldElement& x) {
    if (x.is_zero()) throw Error("zero has no multiplicative order");
    std::int64_t n = x.spec()->order() - 1;
    std::int64_t ord = n;
    for (auto q : prime_divisors(n)) {
        while (ord % q == 0 && field_pow(x, ord / q) == field_one(x.spec())) ord /= q;
    }
    return ord;
}

/// Smallest element (canonical order) of multiplicative order p^K - 1.
inline FieldElement primitive_element(const Field& f) {
    std::int64_t n = f->order() - 1;
    auto divisors = prime_divisors(n);
    for (std::int64_t idx = 1; idx < f->order(); ++idx) {
        auto g = field_element(f, idx);
        bool ok = true;
        for (auto q : divisors) {
            if (field_pow(g, n / q) == field_one(f)) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error("no primitive element");
}

namespace detail {

// Rank over Z_p of the K x K coefficient matrix by Gaussian elimination.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        std::int64_t inv = modinv(m[rank][c], p);
        for (auto& v : m[rank]) v = v * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            std::int64_t fac = m[r][c];
            for (int j = 0; j < cols; ++j) m[r][j] = mod(m[r][j] - fac * m[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

// Solves A y = b over Z_p for square invertible A (Gauss-Jordan on [A | I]).
inline std::vector<std::vector<std::int64_t>> inverse_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<std::int64_t>> inv(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error("not a basis");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        std::int64_t s = modinv(a[c][c], p);
        for (int j = 0; j < n; ++j) {
            a[c][j] = a[c][j] * s % p;
            inv[c][j] = inv[c][j] * s % p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            std::int64_t fac = a[r][c];
            for (int j = 0; j < n; ++j) {
                a[r][j] = mod(a[r][j] - fac * a[c][j], p);
                inv[r][j] = mod(inv[r][j] - fac * inv[c][j], p);
            }
        }
    }
    return inv;
}

}  // namespace detail

inline bool is_basis(const std::vector<FieldElement>& basis) {
    if (basis.empty()) return false;
    const auto& f = basis[0].spec();
    if (static_cast<int>(basis.size()) != f->K) return false;
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& e : basis) {
        if (!e.same_field(basis[0])) throw Error("operands belong to different fields");
        m.push_back(e.coeffs());
    }
    return detail::rank_mod_p(m, f->p) == f->K;
}

/// The basis e~ with tr(e_i e~_j) = delta_ij.
inline std::vector<FieldElement> dual_basis(const std::vector<FieldElement>& basis) {
    if (!is_basis(basis)) throw Error("not a basis");
    const auto& f = basis[0].spec();
    int K = f->K;
    std::vector<std::vector<std::int64_t>> gram(K, std::vector<std::int64_t>(K));
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) gram[i][j] = field_trace(basis[i] * basis[j]).value;
    // e~_j = sum_k (G^{-1})_{kj} e_k, since tr(e_i e~_j) = (G G^{-1})_{ij}.
    auto ginv = detail::inverse_mod_p(gram, f->p);
    std::vector<FieldElement> dual;
    for (int j = 0; j < K; ++j) {
        FieldElement acc = field_zero(f);
        for (int k = 0; k < K; ++k) acc = acc + field_scalar(f, ginv[k][j]) * basis[k];
        dual.push_back(acc);
    }
    return dual;
}

/// The polynomial basis (1, x, ..., x^{K-1}).
inline std::vector<FieldElement> polynomial_basis(const Field& f) {
    std::vector<FieldElement> out;
    for (int i = 0; i < f->K; ++i) {
        std::vector<std::int64_t> c(f->K, 0);
        c[i] = 1;
        out.emplace_back(f, std::move(c));
    }
    return out;
}

/// Minimal polynomial of x over Z_p, low degree first.
inline std::vector<std::int64_t> minimal_polynomial(const FieldElement& x) {
    const auto& f = x.spec();
    std::vector<FieldElement> conj{x};
    for (;;) {
        auto next = field_pow(conj.back(), f->p);
        if (next == x) break;
        conj.push_back(next);
    }
    // prod (t - c) with field coefficients; the result lies in Z_p.
    std::vector<FieldElement> poly{field_one(f)};
    for (const auto& c : conj) {
        std::vector<FieldElement> next(poly.size() + 1, field_zero(f));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - c * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<std::int64_t> out;
    for (const auto& c : poly) {
        for (int i = 1; i < f->K; ++i)
            if (c.coeffs()[i] != 0) throw Error("minimal polynomial left the prime field");
        out.push_back(c.coeffs()[0]);
    }
    return out;
}

inline std::string poly_to_string(const std::vector<std::int64_t>& poly, const std::string& var = "x") {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) {
        std::int64_t c = poly[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

inline std::string element_to_string(const FieldElement& x) { return poly_to_string(x.coeffs(), "a"); }

struct FieldTableRow {
    FieldElement element;
    std::string label;  // 0, 1 or g^k for the primitive element g
    std::vector<std::int64_t> minpoly;
    std::int64_t trace = 0;
    std::int64_t trace_sq = 0;
    std::int64_t order = 0;  // 0 for the zero element
};

/// Rows ordered 0, 1, g, g^2, ..., g^{q-2}.
inline std::vector<FieldTableRow> field_table(const Field& f) {
    std::vector<FieldTableRow> rows;
    auto g = primitive_element(f);
    auto add_row = [&](const FieldElement& x, std::string label) {
        FieldTableRow row;
        row.element = x;
        row.label = std::move(label);
        row.minpoly = minimal_polynomial(x);
        row.trace = field_trace(x).value;
        row.trace_sq = field_trace(x * x).value;
        row.order = x.is_zero() ? 0 : multiplicative_order(x);
        rows.push_back(std::move(row));
    };
    add_row(field_zero(f), "0");
    add_row(field_one(f), "1");
    auto x = g;
    for (std::int64_t k = 1; k < f->order() - 1; ++k) {
        add_row(x, k == 1 ? "g" : "g^" + std::to_string(k));
        x = x * g;
    }
    return rows;
}

}  // namespace hilbert

#endif  // HILBERT_GF_HPP
