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

// Weyl-Heisenberg covariant SICs: objective, search, verification and the
// dimension-4 fiducial.

#ifndef HILBERT_SIC_HPP
#define HILBERT_SIC_HPP

#include "hilbert/clifford.hpp"
#include "hilbert/core.hpp"
#include "hilbert/mub.hpp"
#include "hilbert/weyl.hpp"

#include <limits>
#include <optional>

namespace hilbert {

namespace detail {

inline void require_unit(const Vector& psi) {
    if (psi.size() < 2) throw Error("dimension must be at least 2");
    if (std::abs(psi.norm() - 1.0) > kEpsMat) throw Error("non-unit input");
}

/// c_{r,s} = <psi|D_{r,s}|psi> = tau^{rs} Sum_i conj(psi_{i+r}) omega^{si} psi_i.
inline Matrix sic_overlaps(const Vector& psi) {
    int n = static_cast<int>(psi.size());
    Matrix c(n, n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            Complex acc = 0;
            for (int i = 0; i < n; ++i) acc += std::conj(psi((i + r) % n)) * omega_power(static_cast<std::int64_t>(s) * i % n, n) * psi(i);
            c(r, s) = tau_power(static_cast<std::int64_t>(r) * s, n) * acc;
        }
    return c;
}

}  // namespace detail

/// Sum over (r,s) != 0 of (|<psi|D_{r,s}|psi>|^2 - 1/(N+1))^2.
inline double f_sic(const Vector& psi) {
    detail::require_unit(psi);
    int n = static_cast<int>(psi.size());
    Matrix c = detail::sic_overlaps(psi);
    double kappa = 1.0 / (n + 1), f = 0;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            if (r || s) f += std::pow(std::norm(c(r, s)) - kappa, 2);
    return f;
}

/// Real gradient of f as a complex vector (d/dRe + i d/dIm); f is treated as a
/// function on C^N, no normalization constraint.
inline Vector f_sic_gradient(const Vector& psi, double* value = nullptr) {
    int n = static_cast<int>(psi.size());
    double kappa = 1.0 / (n + 1), f = 0;
    Vector g = Vector::Zero(n);
    Vector dpsi(n), ddag(n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            if (!r && !s) continue;
            Complex t = tau_power(static_cast<std::int64_t>(r) * s, n);
            for (int i = 0; i < n; ++i) {
                Complex ph = t * omega_power(static_cast<std::int64_t>(s) * i % n, n);
                dpsi((i + r) % n) = ph * psi(i);
                ddag(i) = std::conj(ph) * psi((i + r) % n);
            }
            Complex c = psi.dot(dpsi);
            double w = std::norm(c) - kappa;
            f += w * w;
            g += (4.0 * w) * (std::conj(c) * dpsi + c * ddag);
        }
    if (value) *value = f;
    return g;
}

struct SicCandidate {
    int n = 0;
    Vector fiducial;
    double fsic = 0;
    std::uint64_t seed = 0;
    int restart = -1;
};

inline SicCandidate make_candidate(const Vector& psi) {
    return {static_cast<int>(psi.size()), psi, f_sic(psi)};
}

/// psi_{r,s} = D_{r,s} psi, index r * N + s.
inline std::vector<Vector> sic_orbit(const Vector& psi) {
    int n = static_cast<int>(psi.size());
    std::vector<Vector> out;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) out.push_back(apply_displacement(n, r, s, psi));
    return out;
}

struct SicReport {
    double resolution_deviation = 0;  // ||Sum |psi_I><psi_I| / N - 1||max
    double gram_deviation = 0;        // max | |<psi_I|psi_J>|^2 - 1/(N+1) |, I != J
    std::size_t vectors = 0, pairs = 0;
    double fsic = 0;

    bool pass(double eps_gram = kEpsSic, double eps_res = kEpsMat) const {
        return resolution_deviation < eps_res && gram_deviation < eps_gram;
    }
};

inline SicReport sic_verify(const SicCandidate& cand) {
    detail::require_unit(cand.fiducial);
    int n = cand.n;
    auto orbit = sic_orbit(cand.fiducial);
    SicReport rep;
    rep.vectors = orbit.size();
    rep.fsic = f_sic(cand.fiducial);
    Matrix frame = Matrix::Zero(n, n);
    for (const auto& v : orbit) frame += v * v.adjoint();
    rep.resolution_deviation = max_abs(frame / static_cast<double>(n) - Matrix::Identity(n, n));
    double kappa = 1.0 / (n + 1);
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::size_t j = i + 1; j < orbit.size(); ++j) {
            rep.gram_deviation = std::max(rep.gram_deviation, std::abs(std::norm(orbit[i].dot(orbit[j])) - kappa));
            ++rep.pairs;
        }
    return rep;
}

struct SicSearchOptions {
    int restarts = 8;
    std::uint64_t seed = 1;
    bool zauner = false;  // start inside an order-3 Clifford eigenspace (odd prime N)
    int max_iterations = 50000;
    double f_stop = 1e-26;
    double stall = 1e-12;   // relative decrease over stall_window iterations
    int stall_window = 100;
    double success = 1e-12;
};

struct SicSearchResult {
    SicCandidate best;
    std::vector<double> restart_f;  // final f per restart, by index
    int converged = 0;
    bool success = false;
};

namespace detail {

inline Vector sphere_step(const Vector& psi, const Vector& dir, double alpha) {
    Vector x = psi - alpha * dir;
    return x / x.norm();
}

/// Projected gradient with Barzilai-Borwein steps and Armijo backtracking.
inline std::pair<Vector, double> sic_descend(Vector psi, const SicSearchOptions& opt) {
    double f;
    Vector g = f_sic_gradient(psi, &f);
    Vector gt = g - psi.dot(g).real() * psi;
    double alpha = 0.1;
    std::vector<double> history;
    history.reserve(opt.max_iterations + 1);
    history.push_back(f);
    for (int it = 0; it < opt.max_iterations && f > opt.f_stop; ++it) {
        double gn2 = gt.squaredNorm();
        if (gn2 == 0) break;
        Vector next;
        double fn = 0;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            next = sphere_step(psi, gt, alpha);
            fn = f_sic(next);
            if (fn <= f - 1e-4 * alpha * gn2) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;
        double fnew;
        Vector gnew = f_sic_gradient(next, &fnew);
        Vector gtn = gnew - next.dot(gnew).real() * next;
        Vector dx = next - psi, dg = gtn - gt;
        double sy = dx.dot(dg).real();
        alpha = sy > 0 ? std::clamp(dx.squaredNorm() / sy, 1e-8, 1e3) : 0.1;
        psi = next;
        f = fnew;
        gt = gtn;
        history.push_back(f);
        int k = static_cast<int>(history.size()) - 1;
        if (k >= opt.stall_window) {
            double old = history[k - opt.stall_window];
            if (old - f < opt.stall * old) break;
        }
    }
    return {psi, f};
}

/// Projector onto the largest eigenspace of U_G for the first order-3 G.
inline Matrix zauner_projector(int n) {
    auto g = order3_elements(n).front();
    Matrix u = metaplectic(g);
    Eigen::ComplexEigenSolver<Matrix> es(u);
    std::vector<std::pair<Complex, std::vector<int>>> groups;
    for (int i = 0; i < n; ++i) {
        Complex ev = es.eigenvalues()(i);
        bool placed = false;
        for (auto& [val, idx] : groups)
            if (std::abs(val - ev) < 1e-6) {
                idx.push_back(i);
                placed = true;
                break;
            }
        if (!placed) groups.push_back({ev, {i}});
    }
    auto largest = std::max_element(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
    Matrix basis(n, largest->second.size());
    for (std::size_t k = 0; k < largest->second.size(); ++k) basis.col(k) = es.eigenvectors().col(largest->second[k]);
    Eigen::HouseholderQR<Matrix> qr(basis);
    Matrix q = qr.householderQ() * Matrix::Identity(n, basis.cols());
    return q * q.adjoint();
}

}  // namespace detail

/// Random-restart search; the best restart is chosen by (f, restart index).
inline SicSearchResult sic_search(int n, const SicSearchOptions& opt, const ExecutionContext& ctx = {}) {
    if (n < 2 || n > 16) throw Error("n must be between 2 and 16");
    if (opt.restarts < 1) throw Error("restarts must be positive");
    std::optional<Matrix> proj;
    if (opt.zauner) {
        if (n == 2 || !is_prime(n)) throw Error("Zauner starts need an odd prime dimension");
        proj = detail::zauner_projector(n);
    }
    std::vector<Vector> finals(opt.restarts);
    std::vector<double> fs(opt.restarts);
    parallel_for(ctx, static_cast<std::size_t>(opt.restarts), [&](std::size_t k) {
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32), static_cast<std::uint32_t>(k)};
        std::mt19937_64 rng(seq);
        Vector start = haar_vector(n, rng);
        if (proj) {
            start = *proj * start;
            start /= start.norm();
        }
        auto [psi, f] = detail::sic_descend(start, opt);
        finals[k] = psi;
        fs[k] = f;
    });
    SicSearchResult res;
    res.restart_f = fs;
    std::size_t best = 0;
    for (std::size_t k = 0; k < fs.size(); ++k) {
        if (fs[k] < opt.success) ++res.converged;
        if (fs[k] < fs[best]) best = k;
    }
    res.best = make_candidate(finals[best]);
    res.best.seed = opt.seed;
    res.best.restart = static_cast<int>(best);
    res.success = res.best.fsic < opt.success;
    return res;
}

/// Closed-form fiducial in dimension 4, tau = -e^{i pi/4}.
inline Vector dim4_fiducial() {
    const double r5 = std::sqrt(5.0);
    const double b = std::sqrt(50 - 10 * r5), x = std::sqrt(5 * (5 + 3 * r5));
    const double a = b / 10;  // = sqrt((5 - sqrt5)/10)
    const Complex tau = -std::exp(Complex(0, std::numbers::pi / 4));
    const Complex i(0, 1);
    const double d = 20 * std::sqrt(2.0);
    Vector psi(4);
    psi << (1.0 - tau) / 2.0 * a, ((1.0 - i) * b + 2 * x) / d, (1.0 + tau) / 2.0 * a, ((1.0 - i) * b - 2 * x) / d;
    return psi;
}

struct OverlapPhases {
    int n = 0;
    Matrix phases;  // sqrt(N+1) <psi|D_{r,s}|psi>; (0,0) is NaN

    Complex at(int r, int s) const {
        if (mod(r, n) == 0 && mod(s, n) == 0) throw Error("phase (0,0) is undefined");
        return phases(mod(r, n), mod(s, n));
    }
};

inline OverlapPhases overlap_phases(const SicCandidate& cand) {
    if (!sic_verify(cand).pass()) throw Error("candidate is not a verified SIC");
    int n = cand.n;
    OverlapPhases op{n, std::sqrt(static_cast<double>(n + 1)) * detail::sic_overlaps(cand.fiducial)};
    double nan = std::numeric_limits<double>::quiet_NaN();
    op.phases(0, 0) = Complex(nan, nan);
    return op;
}

struct UFingerprint {
    Complex u;
    double closed_form_residual = 0;  // |u - closed form|
    double minpoly_residual = 0;      // |p(u)|
    double unit_residual = 0;         // |p(1/u)|
};

/// p(t) = t^8 - 2t^6 - 2t^4 - 2t^2 + 1.
inline Complex u_minimal_polynomial(Complex t) {
    Complex t2 = t * t;
    return (((t2 - 2.0) * t2 - 2.0) * t2 - 2.0) * t2 + 1.0;
}

inline Complex u_closed_form() {
    const double r5 = std::sqrt(5.0);
    return {(r5 - 1) / (2 * std::sqrt(2.0)), std::sqrt(r5 + 1) / 2};
}

inline UFingerprint u_fingerprint(const OverlapPhases& ph) {
    if (ph.n != 4) throw Error("fingerprint needs n = 4");
    UFingerprint fp;
    fp.u = ph.at(0, 1);
    fp.closed_form_residual = std::abs(fp.u - u_closed_form());
    fp.minpoly_residual = std::abs(u_minimal_polynomial(fp.u));
    fp.unit_residual = std::abs(u_minimal_polynomial(1.0 / fp.u));
    return fp;
}

/// Squared lengths of the projections of |psi><psi| onto the MUB eigenvalue
/// simplices: Sum_a (|<b,a|psi>|^2 - 1/N)^2, one per basis b.
inline std::vector<double> mub_simplex_projections(const Vector& psi, const MubSet& mubs) {
    if (psi.size() != mubs.n) throw Error("vector dimension does not match");
    std::vector<double> out;
    for (const auto& b : mubs.bases) {
        double s = 0;
        for (int a = 0; a < mubs.n; ++a) s += std::pow(std::norm(b.col(a).dot(psi)) - 1.0 / mubs.n, 2);
        out.push_back(s);
    }
    return out;
}

}  // namespace hilbert

#endif  // HILBERT_SIC_HPP
