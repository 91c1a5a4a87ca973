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

#ifndef HILBERT_CORE_HPP
#define HILBERT_CORE_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

namespace hilbert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kEpsMat = 1e-10;
inline constexpr double kEpsMub = 1e-9;
inline constexpr double kEpsDesign = 1e-9;
inline constexpr double kEpsSic = 1e-8;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b = mod(b, m);
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline std::int64_t modinv(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1 != 0) {
        std::int64_t q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw Error("no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
    return mod(x, m);
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Writes q = p^k. Returns false if q is not a prime power.
inline bool prime_power(std::int64_t q, std::int64_t& p, int& k) {
    if (q < 2) return false;
    auto ps = prime_divisors(q);
    if (ps.size() != 1) return false;
    p = ps[0];
    k = 0;
    while (q > 1) {
        q /= p;
        ++k;
    }
    return true;
}

/// exp(2 pi i k / m), with k reduced first so large exponents stay exact.
inline Complex root_of_unity(std::int64_t k, std::int64_t m) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(k, m)) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// min over theta of ||a - e^{i theta} b||max, with theta aligned on the
/// Hilbert-Schmidt overlap.
inline double phase_aligned_distance(const Matrix& a, const Matrix& b) {
    Complex overlap = (b.adjoint() * a).trace();
    Complex phase = std::abs(overlap) > 1e-300 ? overlap / std::abs(overlap) : Complex(1.0);
    return max_abs(a - phase * b);
}

inline double unitarity_residual(const Matrix& u) {
    return max_abs(u * u.adjoint() - Matrix::Identity(u.rows(), u.cols()));
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

/// Normalized vector of independent standard complex Gaussians (Haar on the sphere).
template <class Rng>
Vector haar_vector(int n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
    return v / v.norm();
}

/// Random density matrix from a Ginibre draw.
template <class Rng>
Matrix random_density(int n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    Matrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

/// Worker pool settings handed to the parallel parts of the library.
struct ExecutionContext {
    int threads = 1;

    static ExecutionContext from_env() {
        ExecutionContext ctx;
        ctx.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        if (const char* env = std::getenv("HILBERT_THREADS")) {
            int t = std::atoi(env);
            if (t > 0) ctx.threads = t;
        }
        return ctx;
    }
};

/// Runs body(i) for i in [0, n). Each index is handled exactly once; callers
/// write results into per-index slots so the outcome is thread-count independent.
inline void parallel_for(const ExecutionContext& ctx, std::size_t n, const std::function<void(std::size_t)>& body) {
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, ctx.threads)), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace hilbert

#endif  // HILBERT_CORE_HPP
