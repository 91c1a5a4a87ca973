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

// Mutually unbiased bases. A basis is an n x n matrix whose columns are the
// basis vectors.

#ifndef HILBERT_MUB_HPP
#define HILBERT_MUB_HPP

#include "hilbert/core.hpp"
#include "hilbert/gf.hpp"
#include "hilbert/weyl.hpp"

#include <limits>
#include <map>
#include <set>

namespace hilbert {

struct MubSet {
    int n = 0;
    std::vector<Matrix> bases;

    std::size_t size() const { return bases.size(); }
    bool complete() const { return static_cast<int>(bases.size()) == n + 1; }
};

struct UnbiasednessReport {
    double max_deviation = 0;
    double orthonormality_deviation = 0;
    bool pass = false;
};

inline double orthonormality_deviation(const Matrix& basis) {
    return max_abs(basis.adjoint() * basis - Matrix::Identity(basis.cols(), basis.cols()));
}

/// max over cross pairs of | |<e|f>|^2 - 1/n |. Throws if a basis is not orthonormal.
inline UnbiasednessReport unbiasedness_check(const MubSet& set, double tol = kEpsMub) {
    UnbiasednessReport rep;
    for (std::size_t b = 0; b < set.bases.size(); ++b) {
        const auto& m = set.bases[b];
        if (m.rows() != set.n || m.cols() != set.n) throw Error("basis " + std::to_string(b) + " has the wrong shape");
        double dev = orthonormality_deviation(m);
        rep.orthonormality_deviation = std::max(rep.orthonormality_deviation, dev);
        if (dev > kEpsMat) throw Error("basis " + std::to_string(b) + " is not orthonormal (deviation " + std::to_string(dev) + ")");
    }
    double target = 1.0 / set.n;
    for (std::size_t a = 0; a < set.bases.size(); ++a)
        for (std::size_t b = a + 1; b < set.bases.size(); ++b) {
            Matrix g = set.bases[a].adjoint() * set.bases[b];
            rep.max_deviation = std::max(rep.max_deviation, (g.cwiseAbs2().array() - target).abs().maxCoeff());
        }
    rep.pass = rep.max_deviation < tol;
    if (rep.pass && static_cast<int>(set.bases.size()) > set.n + 1) throw Error("more than n+1 mutually unbiased bases");
    return rep;
}

/// First component above 1e-9 made real positive; vectors sorted lexicographically
/// on (re, im) of their components with a 1e-9 tie tolerance.
inline Matrix canonicalize_basis(const Matrix& basis) {
    std::vector<Vector> cols;
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        Vector v = basis.col(c);
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (std::abs(v(i)) > 1e-9) {
                v *= std::abs(v(i)) / v(i);
                break;
            }
        cols.push_back(v);
    }
    auto less = [](const Vector& a, const Vector& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (std::abs(a(i).real() - b(i).real()) > 1e-9) return a(i).real() < b(i).real();
            if (std::abs(a(i).imag() - b(i).imag()) > 1e-9) return a(i).imag() < b(i).imag();
        }
        return false;
    };
    std::stable_sort(cols.begin(), cols.end(), less);
    Matrix out(basis.rows(), basis.cols());
    for (std::size_t c = 0; c < cols.size(); ++c) out.col(c) = cols[c];
    return out;
}

/// Complete set for odd prime p: basis 0 computational, x = 1..p-1 with
/// <r|x,a> = omega^{(r-a)^2 / (2x)} / sqrt(p), basis p (infinity) Fourier.
inline MubSet ivanovic_mubs(int p) {
    if (p == 2 || !is_prime(p)) throw Error("p must be an odd prime");
    if (p > 31) throw Error("p exceeds 31");
    MubSet set{p, {}};
    set.bases.push_back(Matrix::Identity(p, p));
    double s = 1.0 / std::sqrt(static_cast<double>(p));
    for (int x = 1; x < p; ++x) {
        Matrix m(p, p);
        std::int64_t inv = modinv(2 * x, p);
        for (int a = 0; a < p; ++a)
            for (int r = 0; r < p; ++r) m(r, a) = s * root_of_unity(static_cast<std::int64_t>(r - a) * (r - a) * inv, p);
        set.bases.push_back(m);
    }
    Matrix f(p, p);
    for (int r = 0; r < p; ++r)
        for (int a = 0; a < p; ++a) f(r, a) = s * root_of_unity(static_cast<std::int64_t>(r) * a, p);
    set.bases.push_back(f);
    return set;
}

/// Generator D_d whose eigenbasis is Ivanovic basis z: (0,1), (z,1), (-1,0).
inline DispIndex ivanovic_direction(int p, int z) {
    if (z == 0) return {0, 1};
    if (z == p) return {-1, 0};
    return {z, 1};
}

struct JointEigenbasis {
    Matrix basis;
    double min_gap = 0;           // smallest spacing in the spectrum of the combination
    double eigen_residual = 0;    // max ||U v - (v^dag U v) v|| over elements and vectors
};

/// Simultaneous eigenbasis of commuting unitaries from a seeded random
/// combination sum a_g (U+U^dag)/2 + b_g (U-U^dag)/(2i).
inline JointEigenbasis joint_eigenbasis(const std::vector<Matrix>& group, std::uint64_t seed = 0x5eed) {
    if (group.empty()) throw Error("empty subgroup");
    auto n = group[0].rows();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    Matrix h = Matrix::Zero(n, n);
    const Complex i2(0.0, 2.0);
    for (const auto& u : group) {
        double a = coef(rng), b = coef(rng);
        h += a * (u + u.adjoint()) / 2.0 + b * (u - u.adjoint()) / i2;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    JointEigenbasis out;
    out.basis = es.eigenvectors();
    const auto& ev = es.eigenvalues();
    out.min_gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 1; k < ev.size(); ++k) out.min_gap = std::min(out.min_gap, ev(k) - ev(k - 1));
    for (const auto& u : group)
        for (Eigen::Index c = 0; c < n; ++c) {
            Vector v = out.basis.col(c);
            Vector uv = u * v;
            Complex lambda = v.dot(uv);
            out.eigen_residual = std::max(out.eigen_residual, (uv - lambda * v).norm());
        }
    if (n > 1 && out.min_gap < 1e-6) throw Error("degenerate joint eigenbasis (gap " + std::to_string(out.min_gap) + ")");
    if (out.eigen_residual > 1e-9) throw Error("joint eigenbasis fails eigenvector check (residual " + std::to_string(out.eigen_residual) + ")");
    return out;
}

/// Directions of the q+1 lines through the origin: (0,1) then (1,x) in canonical order.
inline std::vector<std::pair<FieldElement, FieldElement>> field_line_directions(const Field& f) {
    std::vector<std::pair<FieldElement, FieldElement>> dirs;
    dirs.emplace_back(field_zero(f), field_one(f));
    for (const auto& x : field_elements(f)) dirs.emplace_back(field_one(f), x);
    return dirs;
}

/// Eigenbases of the q+1 maximal abelian subgroups {D_{lambda d}} of the field
/// Weyl-Heisenberg group, canonicalized.
inline MubSet subgroup_eigenbases(int p, int k) {
    if (!is_prime(p)) throw Error("p must be prime");
    auto f = field_make(p, k);
    if (f->order() > 32) throw Error("field order exceeds 32");
    MubSet set{static_cast<int>(f->order()), {}};
    auto elems = field_elements(f);
    std::uint64_t seed = 1000;
    for (const auto& [d1, d2] : field_line_directions(f)) {
        std::vector<Matrix> group;
        for (const auto& lambda : elems) group.push_back(field_displacement({lambda * d1, lambda * d2}));
        set.bases.push_back(canonicalize_basis(joint_eigenbasis(group, seed++).basis));
    }
    return set;
}

// ---------------------------------------------------------------------------
// Flowers and petals.

struct Petal {
    std::vector<Matrix> elements;  // identity first
    std::vector<std::string> labels;
};

struct Flower {
    std::vector<Petal> petals;
    double orthogonality_residual = 0;  // ||Tr(U^dag V) - N delta||max over the deduplicated union
    double commutation_residual = 0;    // max ||UV - VU|| inside petals
    bool pass(double tol = kEpsMat) const { return orthogonality_residual < tol && commutation_residual < tol; }
};

/// U_r = sum_i omega^{ri} |b_i><b_i| for each basis b of a complete set.
inline Flower bbrv_flower(const MubSet& set) {
    if (!set.complete()) throw Error("flower needs a complete set of n+1 bases");
    int n = set.n;
    Flower fl;
    std::vector<Matrix> all{Matrix::Identity(n, n)};
    for (const auto& b : set.bases) {
        Petal pet;
        for (int r = 0; r < n; ++r) {
            Matrix u = Matrix::Zero(n, n);
            for (int i = 0; i < n; ++i) u += root_of_unity(static_cast<std::int64_t>(r) * i, n) * b.col(i) * b.col(i).adjoint();
            pet.elements.push_back(u);
            pet.labels.push_back("U" + std::to_string(r));
            if (r > 0) all.push_back(u);
        }
        for (const auto& u : pet.elements)
            for (const auto& v : pet.elements) fl.commutation_residual = std::max(fl.commutation_residual, max_abs(u * v - v * u));
        fl.petals.push_back(std::move(pet));
    }
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t c = 0; c < all.size(); ++c) {
            Complex ip = (all[a].adjoint() * all[c]).trace();
            fl.orthogonality_residual = std::max(fl.orthogonality_residual, std::abs(ip - (a == c ? static_cast<double>(n) : 0.0)));
        }
    return fl;
}

// ---------------------------------------------------------------------------
// Two-qubit Pauli landscape. A Pauli is a 4-bit word x1 x2 z1 z2.

namespace detail {

inline int pauli_x(int w, int q) { return (w >> (3 - q)) & 1; }
inline int pauli_z(int w, int q) { return (w >> (1 - q)) & 1; }

inline bool pauli_commute(int a, int b) {
    int s = 0;
    for (int q = 0; q < 2; ++q) s += pauli_x(a, q) * pauli_z(b, q) + pauli_z(a, q) * pauli_x(b, q);
    return s % 2 == 0;
}

inline std::string pauli_name(int w) {
    std::string s;
    for (int q = 0; q < 2; ++q) {
        int x = pauli_x(w, q), z = pauli_z(w, q);
        s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

inline Matrix pauli_matrix(int w) {
    Matrix sx(2, 2), sz(2, 2), sy(2, 2);
    sx << 0, 1, 1, 0;
    sz << 1, 0, 0, -1;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    Matrix out = Matrix::Identity(1, 1);
    for (int q = 0; q < 2; ++q) {
        int x = pauli_x(w, q), z = pauli_z(w, q);
        Matrix m = x ? (z ? sy : sx) : (z ? sz : Matrix(Matrix::Identity(2, 2)));
        out = kron(out, m);
    }
    return out;
}

}  // namespace detail

struct MerminLandscape {
    std::vector<std::vector<int>> petals;   // 15 sets of 3 Pauli words, sorted
    std::vector<std::vector<int>> flowers;  // 6 sets of 5 petal indices
    std::vector<MubSet> mub_sets;           // one complete set per flower
    std::size_t stabilizer_states = 0;      // distinct projectors across all sets
    std::vector<std::string> petal_names(int petal) const {
        std::vector<std::string> out;
        for (int w : petals[petal]) out.push_back(detail::pauli_name(w));
        return out;
    }
};

inline MerminLandscape mermin_landscape() {
    MerminLandscape land;
    std::set<std::vector<int>> found;
    for (int a = 1; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b)
            if (detail::pauli_commute(a, b)) {
                std::vector<int> pet{a, b, a ^ b};
                std::sort(pet.begin(), pet.end());
                found.insert(pet);
            }
    land.petals.assign(found.begin(), found.end());
    if (land.petals.size() != 15) throw Error("expected 15 maximal abelian subgroups, found " + std::to_string(land.petals.size()));

    // Exact cover of the 15 non-identity words by 5 disjoint petals.
    std::vector<int> chosen;
    std::function<void(int, int)> cover = [&](int used, int start) {
        if (used == 0xFFFE) {
            land.flowers.push_back(chosen);
            return;
        }
        int first = 1;
        while (used & (1 << first)) ++first;
        for (int i = start; i < static_cast<int>(land.petals.size()); ++i) {
            int mask = 0;
            for (int w : land.petals[i]) mask |= 1 << w;
            if ((mask & used) || !(mask & (1 << first))) continue;
            chosen.push_back(i);
            cover(used | mask, 0);
            chosen.pop_back();
        }
    };
    cover(0, 0);
    for (auto& fl : land.flowers) std::sort(fl.begin(), fl.end());
    std::sort(land.flowers.begin(), land.flowers.end());
    land.flowers.erase(std::unique(land.flowers.begin(), land.flowers.end()), land.flowers.end());
    if (land.flowers.size() != 6) throw Error("expected 6 flowers, found " + std::to_string(land.flowers.size()));

    std::vector<Matrix> petal_bases;
    std::uint64_t seed = 77;
    for (const auto& pet : land.petals) {
        std::vector<Matrix> group{Matrix::Identity(4, 4)};
        for (int w : pet) group.push_back(detail::pauli_matrix(w));
        petal_bases.push_back(canonicalize_basis(joint_eigenbasis(group, seed++).basis));
    }
    std::vector<Vector> states;
    for (const auto& fl : land.flowers) {
        MubSet set{4, {}};
        for (int i : fl) set.bases.push_back(petal_bases[i]);
        land.mub_sets.push_back(set);
        for (const auto& b : set.bases)
            for (Eigen::Index c = 0; c < 4; ++c) {
                Vector v = b.col(c);
                bool dup = false;
                for (const auto& s : states)
                    if (std::abs(std::abs(s.dot(v)) - 1.0) < 1e-9) dup = true;
                if (!dup) states.push_back(v);
            }
    }
    land.stabilizer_states = states.size();
    return land;
}

/// p^K prod_{i=1..K} (p^i + 1).
inline std::uint64_t stabilizer_count(int p, int k) {
    if (!is_prime(p) || k < 1) throw Error("p must be prime and K >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > 4096) throw Error("p^K exceeds 2^12");
    std::uint64_t m = q, pi = 1;
    for (int i = 1; i <= k; ++i) {
        pi *= p;
        m *= pi + 1;
    }
    return m;
}

/// Number of Lagrangian subspaces of Z_p^{2K} by breadth-first extension of
/// isotropic subspaces (brute force, small cases only).
inline std::uint64_t count_lagrangian_subspaces(int p, int k) {
    int dim = 2 * k;
    std::int64_t nvec = 1;
    for (int i = 0; i < dim; ++i) nvec *= p;
    if (nvec > 4096) throw Error("space too large for brute force");
    auto digit = [&](std::int64_t v, int i) {
        for (int t = 0; t < i; ++t) v /= p;
        return v % p;
    };
    auto form = [&](std::int64_t a, std::int64_t b) {
        std::int64_t s = 0;
        for (int i = 0; i < k; ++i) s += digit(a, i) * digit(b, k + i) - digit(a, k + i) * digit(b, i);
        return mod(s, p);
    };
    auto add = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        std::int64_t r = 0, pw = 1;
        for (int i = 0; i < dim; ++i) {
            r += mod(digit(a, i) + c * digit(b, i), p) * pw;
            pw *= p;
        }
        return r;
    };
    std::set<std::vector<std::int64_t>> level{{0}};
    for (int d = 0; d < k; ++d) {
        std::set<std::vector<std::int64_t>> next;
        for (const auto& sub : level) {
            for (std::int64_t v = 1; v < nvec; ++v) {
                if (std::binary_search(sub.begin(), sub.end(), v)) continue;
                bool iso = true;
                for (auto w : sub)
                    if (form(v, w) != 0) {
                        iso = false;
                        break;
                    }
                if (!iso) continue;
                std::vector<std::int64_t> ext;
                for (auto w : sub)
                    for (int c = 0; c < p; ++c) ext.push_back(add(w, v, c));
                std::sort(ext.begin(), ext.end());
                ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
                next.insert(std::move(ext));
            }
        }
        level = std::move(next);
    }
    return level.size();
}

// ---------------------------------------------------------------------------
// Dimension-6 experiment: vectors unbiased to both the computational and the
// Fourier basis, v_i = e^{i theta_i} / sqrt 6.

struct Search6Result {
    int restarts = 0;
    int converged = 0;                // restarts ending below the tolerance
    std::vector<Vector> distinct;     // distinct solutions up to global phase
    double tolerance = 1e-10;
};

inline Search6Result mub_search6(int restarts, std::uint64_t seed, const ExecutionContext& ctx = {}) {
    const int n = 6;
    Matrix f = Matrix::Zero(n, n);
    for (int r = 0; r < n; ++r)
        for (int a = 0; a < n; ++a) f(r, a) = root_of_unity(static_cast<std::int64_t>(r) * a, n) / std::sqrt(6.0);
    auto vec = [&](const Eigen::VectorXd& th) {
        Vector v(n);
        for (int i = 0; i < n; ++i) v(i) = std::polar(1.0 / std::sqrt(6.0), th(i));
        return v;
    };
    // objective sum_a (|<f_a|v>|^2 - 1/6)^2
    auto objective = [&](const Eigen::VectorXd& th, Eigen::VectorXd* grad) {
        Vector v = vec(th);
        Vector c = f.adjoint() * v;
        double val = 0;
        if (grad) grad->setZero(n);
        for (int a = 0; a < n; ++a) {
            double e = std::norm(c(a)) - 1.0 / 6.0;
            val += e * e;
            if (grad)
                for (int i = 0; i < n; ++i) {
                    // d|c_a|^2/d theta_i = 2 Re(conj(c_a) conj(f_ia) i v_i)
                    Complex dv = Complex(0, 1) * v(i);
                    (*grad)(i) += 2 * e * 2 * (std::conj(c(a)) * std::conj(f(i, a)) * dv).real();
                }
        }
        return val;
    };
    Search6Result res;
    res.restarts = restarts;
    std::vector<std::pair<double, Vector>> outcome(restarts);
    parallel_for(ctx, static_cast<std::size_t>(restarts), [&](std::size_t r) {
        std::mt19937_64 rng(seed + 7919 * r);
        std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
        Eigen::VectorXd th(n), g(n), g2(n);
        for (int i = 0; i < n; ++i) th(i) = u(rng);
        th(0) = 0;
        double step = 1.0;
        double val = objective(th, &g);
        for (int it = 0; it < 20000 && val > 1e-26; ++it) {
            g(0) = 0;
            Eigen::VectorXd trial = th - step * g;
            double tv = objective(trial, &g2);
            if (tv < val) {
                th = trial;
                val = tv;
                g = g2;
                step *= 1.5;
            } else {
                step *= 0.5;
                if (step < 1e-14) break;
            }
        }
        outcome[r] = {val, vec(th)};
    });
    for (const auto& [val, v] : outcome) {
        if (val > res.tolerance * res.tolerance) continue;
        ++res.converged;
        bool dup = false;
        for (const auto& d : res.distinct)
            if (std::abs(std::abs(d.dot(v)) - 1.0) < 1e-6) dup = true;
        if (!dup) res.distinct.push_back(v);
    }
    return res;
}

}  // namespace hilbert

#endif  // HILBERT_MUB_HPP
