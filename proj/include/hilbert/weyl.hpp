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

// Weyl-Heisenberg group in the clock-and-shift representation.
//
//   omega = exp(2 pi i / N),  tau = -exp(i pi / N),  D_{r,s} = tau^{rs} X^r Z^s
//
// with Z|i> = omega^i |i>, X|i> = |i+1>. Indices are periodic modulo
// Nbar = N (odd N) or 2N (even N). The field variant labels the basis by
// elements of GF(p^K) in canonical order.

#ifndef HILBERT_WEYL_HPP
#define HILBERT_WEYL_HPP

#include "hilbert/core.hpp"
#include "hilbert/gf.hpp"

namespace hilbert {

inline constexpr int kMaxDimension = 64;

inline int dim_bar(int n) { return n % 2 == 0 ? 2 * n : n; }

struct DispIndex {
    std::int64_t r = 0;
    std::int64_t s = 0;

    DispIndex operator+(const DispIndex& o) const { return {r + o.r, s + o.s}; }
    DispIndex operator-() const { return {-r, -s}; }
    bool operator==(const DispIndex& o) const = default;
};

/// Omega(p, q) = p2 q1 - p1 q2.
inline std::int64_t symplectic_form(const DispIndex& p, const DispIndex& q) { return p.s * q.r - p.r * q.s; }

inline void require_dimension(int n) {
    if (n < 2) throw Error("dimension must be at least 2");
    if (n > kMaxDimension) throw Error("dimension exceeds " + std::to_string(kMaxDimension));
}

/// tau^k for tau = -exp(i pi / N) = exp(i pi (N+1) / N).
inline Complex tau_power(std::int64_t k, int n) { return root_of_unity(mod(k, 2 * n) * (n + 1), 2 * n); }

inline Complex omega_power(std::int64_t k, int n) { return root_of_unity(k, n); }

struct ClockShift {
    Matrix Z;
    Matrix X;
};

inline ClockShift clock_shift(int n) {
    require_dimension(n);
    ClockShift cs{Matrix::Zero(n, n), Matrix::Zero(n, n)};
    for (int i = 0; i < n; ++i) {
        cs.Z(i, i) = omega_power(i, n);
        cs.X((i + 1) % n, i) = 1.0;
    }
    return cs;
}

/// D_{r,s} built entrywise: <i+r|D|i> = tau^{rs} omega^{si}.
inline Matrix displacement(int n, std::int64_t r, std::int64_t s) {
    require_dimension(n);
    Matrix d = Matrix::Zero(n, n);
    Complex t = tau_power(r * s, n);
    for (int i = 0; i < n; ++i) d(mod(i + r, n), i) = t * omega_power(s * i, n);
    return d;
}

inline Matrix displacement(int n, const DispIndex& p) { return displacement(n, p.r, p.s); }

/// All N^2 displacements, ordered by r * N + s.
inline std::vector<Matrix> displacement_basis(int n) {
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) out.push_back(displacement(n, r, s));
    return out;
}

/// D|psi> without forming the matrix.
inline Vector apply_displacement(int n, std::int64_t r, std::int64_t s, const Vector& psi) {
    Vector out(n);
    Complex t = tau_power(r * s, n);
    for (int i = 0; i < n; ++i) out(mod(i + r, n)) = t * omega_power(s * i, n) * psi(i);
    return out;
}

/// max of ||D_p D_q - tau^Omega D_{p+q}|| and ||D_p D_q - omega^Omega D_q D_p||.
inline double group_law_residual(int n, const DispIndex& p, const DispIndex& q) {
    Matrix dp = displacement(n, p);
    Matrix dq = displacement(n, q);
    std::int64_t w = symplectic_form(p, q);
    Matrix prod = dp * dq;
    double a = max_abs(prod - tau_power(w, n) * displacement(n, p + q));
    double b = max_abs(prod - omega_power(w, n) * (dq * dp));
    return std::max(a, b);
}

/// a_{rs} = Tr(D_{r,s}^dag A) / N, returned as an N x N table indexed (r, s).
inline Matrix expand_operator(const Matrix& a) {
    int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw Error("operator must be square");
    Matrix coeff(n, n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            // Tr(D^dag A) = sum_i conj(<i+r|D|i>) A(i+r, i)
            Complex acc = 0.0;
            Complex t = std::conj(tau_power(static_cast<std::int64_t>(r) * s, n));
            for (int i = 0; i < n; ++i) acc += t * std::conj(omega_power(static_cast<std::int64_t>(s) * i, n)) * a((i + r) % n, i);
            coeff(r, s) = acc / static_cast<double>(n);
        }
    return coeff;
}

inline Matrix reconstruct_operator(const Matrix& coeff) {
    int n = static_cast<int>(coeff.rows());
    Matrix a = Matrix::Zero(n, n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            if (coeff(r, s) != Complex(0.0)) a += coeff(r, s) * displacement(n, r, s);
    return a;
}

// ---------------------------------------------------------------------------
// Field displacements on C^{p^K}, basis |x> labelled by canonical field index.

struct FieldDispIndex {
    FieldElement u1;
    FieldElement u2;
};

/// <u, v> = tr(u2 v1 - u1 v2).
inline std::int64_t field_symplectic_form(const FieldDispIndex& u, const FieldDispIndex& v) {
    return field_trace(u.u2 * v.u1 - u.u1 * v.u2).value;
}

/// X_u |x> = |x + u>.
inline Matrix field_shift(const FieldElement& u) {
    const auto& f = u.spec();
    auto q = f->order();
    Matrix m = Matrix::Zero(q, q);
    for (std::int64_t i = 0; i < q; ++i) m((field_element(f, i) + u).index(), i) = 1.0;
    return m;
}

/// Z_u |x> = omega^{tr(x u)} |x>, omega = exp(2 pi i / p).
inline Matrix field_clock(const FieldElement& u) {
    const auto& f = u.spec();
    auto q = f->order();
    Matrix m = Matrix::Zero(q, q);
    for (std::int64_t i = 0; i < q; ++i) m(i, i) = root_of_unity(field_trace(field_element(f, i) * u).value, f->p);
    return m;
}

/// D_u = tau^{tr(u1 u2)} X_{u1} Z_{u2} with tau = -exp(i pi / p); for p = 2 this is -i.
inline Matrix field_displacement(const FieldDispIndex& u) {
    if (!u.u1.same_field(u.u2)) throw Error("operands belong to different fields");
    const auto& f = u.u1.spec();
    int p = static_cast<int>(f->p);
    Complex t = tau_power(field_trace(u.u1 * u.u2).value, p);
    return t * field_shift(u.u1) * field_clock(u.u2);
}

struct TensorIsomorphism {
    Matrix S;             // permutation unitary, S|x> = |x_1 ... x_K>
    double residual = 0;  // max over checked u of the factorization mismatch
    bool phase_aligned = false;  // true when residual is measured modulo a global phase (p = 2)
    std::size_t checked = 0;
};

/// Coordinates x_i = tr(x e~_i) packed with the first coordinate most significant.
inline std::int64_t tensor_index(const FieldElement& x, const std::vector<FieldElement>& dual) {
    std::int64_t idx = 0;
    for (const auto& e : dual) idx = idx * x.spec()->p + field_trace(x * e).value;
    return idx;
}

/// Builds S and checks D_u = S^{-1} (D_{u1_1,u2~_1} (x) ... (x) D_{u1_K,u2~_K}) S over
/// every u (exhaustive; desk-scale fields only).
inline TensorIsomorphism tensor_isomorphism(const Field& f, const std::vector<FieldElement>& basis) {
    if (!is_basis(basis)) throw Error("not a basis");
    auto dual = dual_basis(basis);
    std::int64_t q = f->order();
    int p = static_cast<int>(f->p);
    TensorIsomorphism out;
    out.S = Matrix::Zero(q, q);
    for (std::int64_t i = 0; i < q; ++i) out.S(tensor_index(field_element(f, i), dual), i) = 1.0;
    out.phase_aligned = (p == 2);
    Matrix sinv = out.S.adjoint();
    for (std::int64_t a = 0; a < q; ++a) {
        auto u1 = field_element(f, a);
        for (std::int64_t b = 0; b < q; ++b) {
            auto u2 = field_element(f, b);
            Matrix prod = Matrix::Identity(1, 1);
            for (int i = 0; i < f->K; ++i) {
                auto r = field_trace(u1 * dual[i]).value;
                auto s = field_trace(u2 * basis[i]).value;
                prod = kron(prod, displacement(p, r, s));
            }
            Matrix lhs = field_displacement({u1, u2});
            Matrix rhs = sinv * prod * out.S;
            double res = out.phase_aligned ? phase_aligned_distance(lhs, rhs) : max_abs(lhs - rhs);
            out.residual = std::max(out.residual, res);
            ++out.checked;
        }
    }
    return out;
}

}  // namespace hilbert

#endif  // HILBERT_WEYL_HPP
