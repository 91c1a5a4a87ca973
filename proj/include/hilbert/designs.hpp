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

// Projective and unitary t-designs.

#ifndef HILBERT_DESIGNS_HPP
#define HILBERT_DESIGNS_HPP

#include "hilbert/core.hpp"

#include <limits>
#include <numeric>

namespace hilbert {

struct VectorFamily {
    int n = 0;
    std::vector<Vector> vectors;

    std::size_t size() const { return vectors.size(); }
};

inline VectorFamily make_family(std::vector<Vector> vectors) {
    if (vectors.empty()) throw Error("empty family");
    int n = static_cast<int>(vectors[0].size());
    for (const auto& v : vectors) {
        if (v.size() != n) throw Error("vectors have different dimensions");
        if (std::abs(v.norm() - 1.0) > kEpsMat) throw Error("family vector is not normalized");
    }
    return {n, std::move(vectors)};
}

/// Columns of each basis, in order.
inline VectorFamily family_from_bases(const std::vector<Matrix>& bases) {
    std::vector<Vector> v;
    for (const auto& b : bases)
        for (int j = 0; j < b.cols(); ++j) v.push_back(b.col(j));
    return make_family(std::move(v));
}

/// Exact C(n, k); throws when the result exceeds 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t g = std::gcd(r, i);
        std::uint64_t num = (n - k + i), den = i / g;
        std::uint64_t rr = r / g;
        std::uint64_t g2 = std::gcd(num, den);
        num /= g2;
        den /= g2;
        if (den != 1) throw Error("binomial reduction failed");
        if (rr > std::numeric_limits<std::uint64_t>::max() / num) throw Error("binomial overflow");
        r = rr * num;
    }
    return r;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / i) throw Error("factorial overflow");
        r *= i;
    }
    return r;
}

namespace detail {

/// Sum over I, J of f(I, J); rows in parallel, rows added in order.
template <class F>
double double_sum(std::size_t k, const ExecutionContext& ctx, F f) {
    std::vector<double> rows(k, 0.0);
    parallel_for(ctx, k, [&](std::size_t i) {
        double s = 0;
        for (std::size_t j = 0; j < k; ++j) s += f(i, j);
        rows[i] = s;
    });
    double total = 0;
    for (double r : rows) total += r;
    return total;
}

}  // namespace detail

/// Sum_{I,J} |<x_I|x_J>|^{2t}, diagonal included.
inline double overlap_power_sum(const VectorFamily& fam, int t, const ExecutionContext& ctx = {}) {
    if (t < 1) throw Error("t must be at least 1");
    return detail::double_sum(fam.size(), ctx, [&](std::size_t i, std::size_t j) {
        return std::pow(std::norm(fam.vectors[i].dot(fam.vectors[j])), t);
    });
}

inline double design_moment(const VectorFamily& fam, int t, const ExecutionContext& ctx = {}) {
    if (fam.size() == 0) throw Error("empty family");
    double k = static_cast<double>(fam.size());
    return overlap_power_sum(fam, t, ctx) / (k * k);
}

/// t!(N-1)!/(N-1+t)! = 1 / C(N-1+t, t).
inline double design_target(int n, int t) { return 1.0 / static_cast<double>(binomial(n - 1 + t, t)); }

struct DesignResult {
    double value = 0, target = 0;
    bool is_design = false;
};

inline DesignResult design_test(const VectorFamily& fam, int t, double tol = kEpsDesign, const ExecutionContext& ctx = {}) {
    DesignResult r{design_moment(fam, t, ctx), design_target(fam.n, t), false};
    r.is_design = std::abs(r.value - r.target) < tol;
    if (r.is_design && t > 1 && !design_test(fam, t - 1, tol, ctx).is_design) throw Error("design verdict is not monotone");
    return r;
}

struct WelchResult {
    double lhs = 0, rhs = 0, slack = 0;
    double binom = 0;

    /// Saturation on the same scale as design_test: |value - target| < tol.
    bool saturated(std::size_t k, double tol = kEpsDesign) const {
        return std::abs(slack) < tol * static_cast<double>(k) * static_cast<double>(k) * binom;
    }
};

inline WelchResult welch_bound(const VectorFamily& fam, int t, const ExecutionContext& ctx = {}) {
    WelchResult w;
    w.binom = static_cast<double>(binomial(fam.n + t - 1, t));
    w.lhs = w.binom * overlap_power_sum(fam, t, ctx);
    double diag = 0;
    for (const auto& v : fam.vectors) diag += std::pow(v.squaredNorm(), t);
    w.rhs = diag * diag;
    w.slack = w.lhs - w.rhs;
    return w;
}

/// Sum_I |x_I^{(x)t}><x_I^{(x)t}|.
inline Matrix frame_operator(const VectorFamily& fam, int t) {
    if (t < 1) throw Error("t must be at least 1");
    double dim = std::pow(static_cast<double>(fam.n), t);
    if (dim > 4096) throw Error("tensor power too large");
    auto d = static_cast<Eigen::Index>(dim);
    Matrix f = Matrix::Zero(d, d);
    for (const auto& v : fam.vectors) {
        Vector p = v;
        for (int i = 1; i < t; ++i) p = kron(p, v);
        f.selfadjointView<Eigen::Lower>().rankUpdate(p);
    }
    return f.selfadjointView<Eigen::Lower>();
}

inline std::uint64_t symmetric_dimension(int n, int t) { return binomial(n + t - 1, t); }

/// C(N + ceil(t/2) - 1, ceil(t/2)) * C(N + floor(t/2) - 1, floor(t/2)).
inline std::uint64_t tight_bound(int n, int t) {
    if (t < 1) throw Error("t must be at least 1");
    int hi = (t + 1) / 2, lo = t / 2;
    std::uint64_t a = binomial(n + hi - 1, hi), b = binomial(n + lo - 1, lo);
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) throw Error("bound overflow");
    return a * b;
}

struct SpectrumFlatness {
    double max_nonzero = 0, min_nonzero = 0;
    int rank = 0;
    double expected = 0;  // K / dim(sym)
};

inline SpectrumFlatness frame_spectrum(const VectorFamily& fam, int t, double tol = 1e-8) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(frame_operator(fam, t), Eigen::EigenvaluesOnly);
    SpectrumFlatness s;
    s.expected = static_cast<double>(fam.size()) / static_cast<double>(symmetric_dimension(fam.n, t));
    s.min_nonzero = std::numeric_limits<double>::infinity();
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double v = es.eigenvalues()(i);
        if (v > tol) {
            ++s.rank;
            s.max_nonzero = std::max(s.max_nonzero, v);
            s.min_nonzero = std::min(s.min_nonzero, v);
        }
    }
    return s;
}

struct UnitaryMoment {
    double value = 0, target = 0;
    bool is_design = false;
};

/// (1/K^2) Sum |Tr U_I^dag U_J|^{2t} against t! (t <= N) or Catalan-type (2t)!/(t!(t+1)!) at N = 2.
inline UnitaryMoment unitary_design_moment(const std::vector<Matrix>& us, int t, double tol = kEpsDesign, const ExecutionContext& ctx = {}) {
    if (us.empty()) throw Error("empty family");
    if (t < 1) throw Error("t must be at least 1");
    int n = static_cast<int>(us[0].rows());
    for (const auto& u : us) {
        if (u.rows() != n || u.cols() != n) throw Error("unitaries have different dimensions");
        if (unitarity_residual(u) > kEpsMat) throw Error("matrix is not unitary");
    }
    UnitaryMoment m;
    if (t <= n) m.target = static_cast<double>(factorial(t));
    else if (n == 2) m.target = static_cast<double>(binomial(2 * t, t)) / (t + 1);
    else throw Error("moment formula out of table");
    double k = static_cast<double>(us.size());
    m.value = detail::double_sum(us.size(), ctx, [&](std::size_t i, std::size_t j) {
                  return std::pow(std::norm((us[i].adjoint() * us[j]).trace()), t);
              }) / (k * k);
    m.is_design = std::abs(m.value - m.target) < tol * std::max(1.0, m.target);
    return m;
}

/// The 24 single-qubit Clifford unitaries modulo phase, closed from H and S.
inline std::vector<Matrix> qubit_clifford_group() {
    Matrix h(2, 2), s(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    s << 1, 0, 0, Complex(0, 1);
    std::vector<Matrix> group{Matrix::Identity(2, 2)};
    auto seen = [&](const Matrix& m) {
        for (const auto& g : group)
            if (phase_aligned_distance(g, m) < 1e-9) return true;
        return false;
    };
    for (std::size_t i = 0; i < group.size(); ++i) {
        for (const Matrix* gen : {&h, &s}) {
            Matrix m = *gen * group[i];
            if (!seen(m)) group.push_back(m);
        }
        if (group.size() > 24) throw Error("Clifford closure overflow");
    }
    return group;
}

struct MonteCarlo {
    double mean = 0, stderr_ = 0;
};

/// Haar average of |<phi|psi>|^{2t} by sampling pairs.
template <class Rng>
MonteCarlo haar_moment_estimate(int n, int t, int samples, Rng& rng) {
    double sum = 0, sum2 = 0;
    for (int i = 0; i < samples; ++i) {
        Vector a = haar_vector(n, rng), b = haar_vector(n, rng);
        double x = std::pow(std::norm(a.dot(b)), t);
        sum += x;
        sum2 += x * x;
    }
    MonteCarlo mc;
    mc.mean = sum / samples;
    double var = std::max(0.0, sum2 / samples - mc.mean * mc.mean);
    mc.stderr_ = std::sqrt(var / samples);
    return mc;
}

}  // namespace hilbert

#endif  // HILBERT_DESIGNS_HPP
