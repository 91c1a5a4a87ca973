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

// Discrete Wigner functions on the n x n affine plane, n an odd prime.
//
// Pencil z (0 <= z <= n) is the family of lines parallel to d_z, where d_z
// is ivanovic_direction(n, z). Line a of pencil z is {q : Omega(d_z, q) = a},
// and its projector is the Ivanovic vector |z, a>.

#ifndef HILBERT_WIGNER_HPP
#define HILBERT_WIGNER_HPP

#include "hilbert/clifford.hpp"
#include "hilbert/core.hpp"
#include "hilbert/mub.hpp"
#include "hilbert/weyl.hpp"

namespace hilbert {

/// |n - i mod n><i|.
inline Matrix parity_operator(int n) {
    require_odd_prime(n);
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) a((n - i) % n, i) = 1.0;
    return a;
}

/// Number of +1 and -1 eigenvalues of a Hermitian involution.
inline std::pair<int, int> eigen_multiplicities(const Matrix& a, double tol = 1e-8) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
    int plus = 0, minus = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double v = es.eigenvalues()(i);
        if (std::abs(v - 1) < tol) ++plus;
        else if (std::abs(v + 1) < tol) ++minus;
        else throw Error("eigenvalue not +-1");
    }
    return {plus, minus};
}

struct PhasePointSet {
    int n = 0;
    std::vector<Matrix> ops;  // index r * n + s

    const Matrix& at(std::int64_t r, std::int64_t s) const { return ops[mod(r, n) * n + mod(s, n)]; }
    const Matrix& at(const DispIndex& q) const { return at(q.r, q.s); }
};

/// A_{r,s} = D_{r,s} A_{0,0} D_{r,s}^dag; the basis invariants are checked before returning.
inline PhasePointSet phase_point_set(int n, const ExecutionContext& ctx = {}) {
    require_odd_prime(n);
    if (n > 31) throw Error("n exceeds 31");
    Matrix a = parity_operator(n);
    PhasePointSet pps{n, std::vector<Matrix>(static_cast<std::size_t>(n) * n)};
    parallel_for(ctx, pps.ops.size(), [&](std::size_t k) {
        Matrix d = displacement(n, static_cast<int>(k) / n, static_cast<int>(k) % n);
        pps.ops[k] = d * a * d.adjoint();
    });
    int m = (n + 1) / 2;
    for (const auto& op : pps.ops) {
        if (max_abs(op - op.adjoint()) > kEpsMat || unitarity_residual(op) > kEpsMat) throw Error("phase-point operator not Hermitian unitary");
        if (eigen_multiplicities(op) != std::pair<int, int>{m, m - 1}) throw Error("phase-point operator has wrong spectrum");
    }
    return pps;
}

/// max |Tr(A_f A_f') - n delta|.
inline double phase_point_orthogonality(const PhasePointSet& pps) {
    double worst = 0;
    std::size_t k = pps.ops.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Complex t = (pps.ops[i] * pps.ops[j]).trace();
            worst = std::max(worst, std::abs(t - (i == j ? Complex(pps.n) : Complex(0))));
        }
    return worst;
}

struct WignerTable {
    int n = 0;
    RealMatrix w;

    double sum() const { return w.sum(); }
};

/// W_{r,s} = Tr(A_{r,s} rho) / n.
inline WignerTable wigner_function(const Matrix& rho, const PhasePointSet& pps) {
    int n = pps.n;
    if (rho.rows() != n || rho.cols() != n) throw Error("density matrix dimension does not match");
    if (max_abs(rho - rho.adjoint()) > kEpsMat) throw Error("density matrix is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > kEpsMat) throw Error("density matrix trace is not 1");
    WignerTable t{n, RealMatrix(n, n)};
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) t.w(r, s) = (pps.at(r, s) * rho).trace().real() / n;
    return t;
}

/// rho = Sum W_{r,s} A_{r,s}.
inline Matrix reconstruct_density(const WignerTable& t, const PhasePointSet& pps) {
    if (t.n != pps.n) throw Error("table dimension does not match");
    Matrix rho = Matrix::Zero(t.n, t.n);
    for (int r = 0; r < t.n; ++r)
        for (int s = 0; s < t.n; ++s) rho += t.w(r, s) * pps.at(r, s);
    return rho;
}

/// Line a of pencil z.
inline std::vector<DispIndex> line_points(int n, int pencil, int a) {
    if (pencil < 0 || pencil > n) throw Error("invalid pencil");
    DispIndex d = ivanovic_direction(n, pencil);
    std::vector<DispIndex> out;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            if (mod(symplectic_form(d, {r, s}), n) == mod(a, n)) out.push_back({r, s});
    return out;
}

/// Sums of W over the n lines of one pencil.
inline std::vector<double> line_sums(const WignerTable& t, int pencil) {
    int n = t.n;
    if (pencil < 0 || pencil > n) throw Error("invalid pencil");
    DispIndex d = ivanovic_direction(n, pencil);
    std::vector<double> out(n, 0.0);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) out[mod(symplectic_form(d, {r, s}), n)] += t.w(r, s);
    return out;
}

/// Sum of the chosen vertex projectors, one per basis, minus the identity.
inline Matrix face_point_operator(const MubSet& mubs, const std::vector<int>& choice) {
    if (!mubs.complete()) throw Error("MUB set is not complete");
    if (choice.size() != mubs.bases.size()) throw Error("wrong choice length");
    int n = mubs.n;
    Matrix a = -Matrix::Identity(n, n);
    for (std::size_t z = 0; z < choice.size(); ++z) {
        if (choice[z] < 0 || choice[z] >= n) throw Error("choice out of range");
        Vector v = mubs.bases[z].col(choice[z]);
        a += v * v.adjoint();
    }
    return a;
}

/// The face of the lines through q: choice[z] = Omega(d_z, q).
inline std::vector<int> phase_point_choice(int n, const DispIndex& q) {
    std::vector<int> c(n + 1);
    for (int z = 0; z <= n; ++z) c[z] = static_cast<int>(mod(symplectic_form(ivanovic_direction(n, z), q), n));
    return c;
}

/// max over q of min over phase ||U_G A_q U_G^dag - A_{Gq}||.
inline double clifford_covariance_check(const PhasePointSet& pps, const SymplecticMat& g) {
    if (g.n != pps.n) throw Error("modulus does not match");
    Matrix u = metaplectic(g);
    Matrix ud = u.adjoint();
    double worst = 0;
    for (int r = 0; r < pps.n; ++r)
        for (int s = 0; s < pps.n; ++s)
            worst = std::max(worst, phase_aligned_distance(u * pps.at(r, s) * ud, pps.at(g.apply({r, s}))));
    return worst;
}

}  // namespace hilbert

#endif  // HILBERT_WIGNER_HPP
