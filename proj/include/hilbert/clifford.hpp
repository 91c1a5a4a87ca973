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

// SL(2, Z_p) and its metaplectic representation for odd primes p.
//
// With the phase choice used here U_G D_(r,s) U_G^dag = D_(ar+bs, cr+ds)
// holds exactly, not only up to phase.

#ifndef HILBERT_CLIFFORD_HPP
#define HILBERT_CLIFFORD_HPP

#include "hilbert/core.hpp"
#include "hilbert/weyl.hpp"

#include <limits>

namespace hilbert {

/// G = [[alpha, beta], [gamma, delta]] modulo n.
struct SymplecticMat {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    int n = 3;

    static SymplecticMat identity(int n) { return {1, 0, 0, 1, n}; }

    SymplecticMat normalized() const { return {mod(a, n), mod(b, n), mod(c, n), mod(d, n), n}; }
    bool valid() const { return mod(a * d - b * c, n) == 1; }
    std::int64_t trace() const { return mod(a + d, n); }

    SymplecticMat operator*(const SymplecticMat& o) const {
        if (n != o.n) throw Error("moduli differ");
        return SymplecticMat{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d, n}.normalized();
    }

    DispIndex apply(const DispIndex& p) const { return {mod(a * p.r + b * p.s, n), mod(c * p.r + d * p.s, n)}; }

    bool operator==(const SymplecticMat& o) const {
        auto x = normalized(), y = o.normalized();
        return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    SymplecticMat inverse() const { return SymplecticMat{d, -b, -c, a, n}.normalized(); }
};

inline void require_odd_prime(int p) {
    if (p == 2 || !is_prime(p)) throw Error("dimension must be an odd prime");
}

/// All elements with unit determinant, in lexicographic (a, b, c, d) order.
inline std::vector<SymplecticMat> sl2_enumerate(int p) {
    require_odd_prime(p);
    if (p > 13) throw Error("p exceeds 13");
    std::vector<SymplecticMat> out;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if (mod(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c, p) == 1) out.push_back({a, b, c, d, p});
    return out;
}

/// beta != 0: (1/sqrt p) sum omega^{(delta i^2 - 2ij + alpha j^2)/(2 beta)} |i><j|;
/// beta = 0:  sum omega^{alpha gamma j^2 / 2} |alpha j><j|.
inline Matrix metaplectic(const SymplecticMat& g0) {
    int p = g0.n;
    require_odd_prime(p);
    auto g = g0.normalized();
    if (!g.valid()) throw Error("matrix is not symplectic");
    Matrix u = Matrix::Zero(p, p);
    if (g.b != 0) {
        std::int64_t inv = modinv(2 * g.b, p);
        double s = 1.0 / std::sqrt(static_cast<double>(p));
        for (std::int64_t i = 0; i < p; ++i)
            for (std::int64_t j = 0; j < p; ++j) u(i, j) = s * root_of_unity(mod(g.d * i * i - 2 * i * j + g.a * j * j, p) * inv, p);
    } else {
        std::int64_t inv2 = modinv(2, p);
        for (std::int64_t j = 0; j < p; ++j) u(mod(g.a * j, p), j) = root_of_unity(mod(g.a * g.c % p * j % p * j, p) * inv2, p);
    }
    return u;
}

/// max over p of min over phase ||U_G D_p U_G^dag - D_{Gp}||max.
inline double normalizer_residual(const SymplecticMat& g) {
    int n = g.n;
    Matrix u = metaplectic(g);
    Matrix ud = u.adjoint();
    double worst = 0;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            Matrix lhs = u * displacement(n, r, s) * ud;
            worst = std::max(worst, phase_aligned_distance(lhs, displacement(n, g.apply({r, s}))));
        }
    return worst;
}

/// G with G^3 = 1, G != 1.
inline std::vector<SymplecticMat> order3_elements(int p) {
    std::vector<SymplecticMat> out;
    auto id = SymplecticMat::identity(p);
    for (const auto& g : sl2_enumerate(p))
        if (!(g == id) && g * g * g == id) out.push_back(g);
    return out;
}

struct ZaunerResult {
    double residual = std::numeric_limits<double>::infinity();
    SymplecticMat g;
    DispIndex shift;  // the Clifford element is D_shift U_G
};

/// min over theta of ||U psi - e^{i theta} psi|| for unit psi.
inline double eigenvector_residual(const Matrix& u, const Vector& psi) {
    double overlap = std::abs(psi.dot(u * psi));
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap));
}

/// Best residual over the order-3 Clifford elements D_q U_G, q in Z_p^2.
inline ZaunerResult zauner_invariance(const Vector& psi, const SymplecticMat& g) {
    int p = g.n;
    if (psi.size() != p) throw Error("vector dimension does not match");
    Matrix ug = metaplectic(g);
    Vector ugpsi = ug * psi;
    ZaunerResult best;
    best.g = g;
    for (int r = 0; r < p; ++r)
        for (int s = 0; s < p; ++s) {
            Vector v = apply_displacement(p, r, s, ugpsi);
            double res = std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(psi.dot(v))));
            if (res < best.residual) {
                best.residual = res;
                best.shift = {r, s};
            }
        }
    return best;
}

/// Scan of zauner_invariance over every order-3 G; ties keep the first in enumeration order.
inline ZaunerResult zauner_scan(const Vector& psi) {
    int p = static_cast<int>(psi.size());
    ZaunerResult best;
    for (const auto& g : order3_elements(p)) {
        auto r = zauner_invariance(psi, g);
        if (r.residual < best.residual) best = r;
    }
    return best;
}

}  // namespace hilbert

#endif  // HILBERT_CLIFFORD_HPP
