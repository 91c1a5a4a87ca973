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

#include <catch_amalgamated.hpp>

#include "hilbert/combinat.hpp"
#include "hilbert/mub.hpp"

using namespace hilbert;

namespace {

// Oracle: overlap-by-overlap loop over vectors.
double max_overlap_deviation(const MubSet& s) {
    double worst = 0;
    for (std::size_t a = 0; a < s.bases.size(); ++a)
        for (std::size_t b = a + 1; b < s.bases.size(); ++b)
            for (int i = 0; i < s.n; ++i)
                for (int j = 0; j < s.n; ++j) {
                    Complex ip = 0;
                    for (int k = 0; k < s.n; ++k) ip += std::conj(s.bases[a](k, i)) * s.bases[b](k, j);
                    worst = std::max(worst, std::abs(std::norm(ip) - 1.0 / s.n));
                }
    return worst;
}

// Every column of a matches some column of b up to a phase.
bool same_basis_up_to_phases(const Matrix& a, const Matrix& b) {
    for (Eigen::Index i = 0; i < a.cols(); ++i) {
        bool hit = false;
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            if (std::abs(std::abs(a.col(i).dot(b.col(j))) - 1.0) < 1e-9) hit = true;
        if (!hit) return false;
    }
    return true;
}

int petal_label(const std::set<std::string>& names) {
    static const std::vector<std::set<std::string>> paper{
        {"IZ", "ZI", "ZZ"}, {"XI", "IX", "XX"}, {"XZ", "ZX", "YY"}, {"IZ", "XI", "XZ"}, {"ZI", "IX", "ZX"},
        {"ZZ", "XX", "YY"}, {"IZ", "YI", "YZ"}, {"ZI", "IY", "ZY"}, {"XI", "IY", "XY"}, {"IX", "YI", "YX"},
        {"IY", "YI", "YY"}, {"XY", "YX", "ZZ"}, {"XZ", "YX", "ZY"}, {"XY", "YZ", "ZX"}, {"XX", "YZ", "ZY"}};
    for (std::size_t i = 0; i < paper.size(); ++i)
        if (paper[i] == names) return static_cast<int>(i) + 1;
    return -1;
}

}  // namespace

TEST_CASE("unbiasedness check", "[mub]") {
    MubSet cf{5, {Matrix::Identity(5, 5), fourier_matrix(5)}};
    auto rep = unbiasedness_check(cf);
    CHECK(rep.pass);
    CHECK(rep.max_deviation < 1e-12);

    MubSet same{4, {Matrix::Identity(4, 4), Matrix::Identity(4, 4)}};
    auto bad = unbiasedness_check(same);
    CHECK_FALSE(bad.pass);
    CHECK(std::abs(bad.max_deviation - 0.75) < 1e-15);

    MubSet broken{2, {Matrix::Identity(2, 2), 2.0 * Matrix::Identity(2, 2)}};
    CHECK_THROWS_WITH(unbiasedness_check(broken), Catch::Matchers::ContainsSubstring("basis 1 is not orthonormal"));
}

TEST_CASE("Ivanovic construction", "[mub]") {
    for (int p : {3, 5, 7, 11, 13}) {
        auto set = ivanovic_mubs(p);
        CHECK(set.size() == static_cast<std::size_t>(p + 1));
        auto rep = unbiasedness_check(set);
        CHECK(rep.pass);
        CHECK(max_overlap_deviation(set) < 1e-10);
        CHECK(rep.orthonormality_deviation < 1e-10);
    }
    CHECK_THROWS(ivanovic_mubs(2));
    CHECK_THROWS(ivanovic_mubs(9));

    // the printed p=3 array, columns normalized
    Complex w = root_of_unity(1, 3), w2 = root_of_unity(2, 3);
    Matrix printed(3, 12);
    printed << 1, 0, 0, 1, w2, w2, 1, w, w, 1, 1, 1,
               0, 1, 0, w2, 1, w2, w, 1, w, 1, w, w2,
               0, 0, 1, w2, w2, 1, w, w, 1, 1, w2, w;
    auto iv = ivanovic_mubs(3);
    for (int b = 0; b < 4; ++b) {
        Matrix blk = printed.block(0, 3 * b, 3, 3);
        if (b > 0) blk /= std::sqrt(3.0);
        CHECK(max_abs(canonicalize_basis(blk) - canonicalize_basis(iv.bases[b])) < 1e-12);
        CHECK(max_abs(blk - iv.bases[b]) < 1e-12);
    }
}

TEST_CASE("Ivanovic bases are displacement eigenbases", "[mub]") {
    for (int p : {3, 5, 7}) {
        auto set = ivanovic_mubs(p);
        for (int z = 0; z <= p; ++z) {
            Matrix d = displacement(p, ivanovic_direction(p, z));
            for (int a = 0; a < p; ++a) {
                Vector v = set.bases[z].col(a);
                CHECK((d * v - root_of_unity(a, p) * v).norm() < 1e-12);
            }
        }
    }
}

TEST_CASE("Bloch orthogonality of unbiased projectors", "[mub]") {
    auto set = ivanovic_mubs(5);
    Matrix id = Matrix::Identity(5, 5) / 5.0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    Matrix pe = set.bases[a].col(i) * set.bases[a].col(i).adjoint() - id;
                    Matrix pf = set.bases[b].col(j) * set.bases[b].col(j).adjoint() - id;
                    CHECK(std::abs((pe * pf).trace()) < 1e-12);
                }
}

TEST_CASE("subgroup eigenbases", "[mub]") {
    auto s3 = subgroup_eigenbases(3, 1);
    auto iv = ivanovic_mubs(3);
    REQUIRE(s3.size() == 4);
    CHECK(unbiasedness_check(s3).pass);
    // same bases, possibly in another order
    for (const auto& b : s3.bases) {
        bool hit = false;
        for (const auto& c : iv.bases)
            if (max_abs(canonicalize_basis(b) - canonicalize_basis(c)) < 1e-9) hit = true;
        CHECK(hit);
    }

    auto s4 = subgroup_eigenbases(2, 2);
    CHECK(s4.size() == 5);
    auto r4 = unbiasedness_check(s4);
    CHECK(r4.pass);
    CHECK(r4.max_deviation < 1e-10);

    auto s9 = subgroup_eigenbases(3, 2);
    CHECK(s9.size() == 10);
    CHECK(s9.n == 9);
    CHECK(unbiasedness_check(s9).pass);

    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {5, 1}, {2, 3}, {5, 2}, {2, 4}})
        CHECK(unbiasedness_check(subgroup_eigenbases(p, k)).pass);
}

TEST_CASE("BBRV flowers", "[mub]") {
    auto oct = subgroup_eigenbases(2, 1);
    auto fl = bbrv_flower(oct);
    CHECK(fl.pass());
    REQUIRE(fl.petals.size() == 3);
    Matrix sx(2, 2), sz(2, 2), sy(2, 2);
    sx << 0, 1, 1, 0;
    sz << 1, 0, 0, -1;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    std::vector<Matrix> paulis{sz, sx, sy};
    for (const auto& pet : fl.petals) {
        CHECK(max_abs(pet.elements[0] - Matrix::Identity(2, 2)) < 1e-12);
        double best = 1;
        for (const auto& s : paulis) best = std::min(best, phase_aligned_distance(pet.elements[1], s));
        CHECK(best < 1e-12);
    }

    auto fl3 = bbrv_flower(ivanovic_mubs(3));
    CHECK(fl3.petals.size() == 4);
    CHECK(fl3.pass());
    for (std::size_t a = 0; a < fl3.petals.size(); ++a)
        for (std::size_t b = a + 1; b < fl3.petals.size(); ++b)
            for (int r = 1; r < 3; ++r)
                for (int s = 1; s < 3; ++s)
                    CHECK(std::abs((fl3.petals[a].elements[r].adjoint() * fl3.petals[b].elements[s]).trace()) < 1e-12);

    MubSet partial{3, {Matrix::Identity(3, 3), fourier_matrix(3)}};
    CHECK_THROWS(bbrv_flower(partial));
}

TEST_CASE("Mermin landscape", "[mub]") {
    auto land = mermin_landscape();
    CHECK(land.petals.size() == 15);
    CHECK(land.flowers.size() == 6);
    std::vector<int> label(15);
    std::set<int> labels;
    for (int i = 0; i < 15; ++i) {
        auto names = land.petal_names(i);
        label[i] = petal_label({names.begin(), names.end()});
        CHECK(label[i] > 0);
        labels.insert(label[i]);
    }
    CHECK(labels.size() == 15);

    std::set<std::set<int>> expected{{1, 2, 11, 13, 14}, {4, 6, 8, 10, 15}, {2, 3, 7, 8, 12},
                                     {1, 3, 9, 10, 15}, {4, 5, 11, 12, 14}, {5, 6, 7, 9, 13}};
    std::set<std::set<int>> got;
    for (const auto& fl : land.flowers) {
        std::set<int> s;
        int mermin = 0;
        for (int i : fl) {
            s.insert(label[i]);
            if (label[i] <= 6) ++mermin;
        }
        CHECK(mermin == 2);
        got.insert(s);
    }
    // Four printed flowers match verbatim. The two containing petal 4 are printed
    // with 14 and 15 exchanged; as printed they are not partitions ({4,5,11,12,14}
    // uses ZX twice), with the exchange they are exactly the computed ones.
    std::set<std::set<int>> common;
    for (const auto& fl : expected)
        if (got.count(fl)) common.insert(fl);
    CHECK(common.size() == 4);
    CHECK(got.count({4, 5, 11, 12, 15}) == 1);
    CHECK(got.count({4, 6, 8, 10, 14}) == 1);
    auto words_of = [&](const std::set<int>& fl) {
        std::multiset<int> words;
        for (int lab : fl)
            for (int i = 0; i < 15; ++i)
                if (label[i] == lab) words.insert(land.petals[i].begin(), land.petals[i].end());
        return words;
    };
    for (const auto& fl : expected) {
        auto words = words_of(fl);
        std::set<int> unique(words.begin(), words.end());
        bool partition = unique.size() == 15;
        CHECK(partition == (got.count(fl) == 1));
    }

    for (const auto& set : land.mub_sets) {
        CHECK(set.complete());
        CHECK(unbiasedness_check(set).pass);
    }
    CHECK(land.stabilizer_states == 60);
    CHECK(land.stabilizer_states == stabilizer_count(2, 2));
}

TEST_CASE("stabilizer counts", "[mub]") {
    CHECK(stabilizer_count(2, 2) == 60);
    for (int p : {2, 3, 5, 7}) CHECK(stabilizer_count(p, 1) == static_cast<std::uint64_t>(p * (p + 1)));
    CHECK(stabilizer_count(2, 3) == 1080);
    CHECK(count_lagrangian_subspaces(2, 3) * 8 == stabilizer_count(2, 3));
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
        std::uint64_t q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        CHECK(count_lagrangian_subspaces(p, k) * q == stabilizer_count(p, k));
    }
    CHECK_THROWS(stabilizer_count(2, 13));
}

TEST_CASE("dimension-6 search reports what it finds", "[mub]") {
    auto res = mub_search6(6, 42);
    CHECK(res.restarts == 6);
    CHECK(res.converged <= 6);
    Matrix f = fourier_matrix(6);
    for (const auto& v : res.distinct) {
        CHECK(std::abs(v.norm() - 1.0) < 1e-12);
        for (int i = 0; i < 6; ++i) CHECK(std::abs(std::norm(v(i)) - 1.0 / 6) < 1e-12);
        for (int a = 0; a < 6; ++a) CHECK(std::abs(std::norm(f.col(a).dot(v)) - 1.0 / 6) < 1e-9);
    }
    auto again = mub_search6(6, 42);
    CHECK(again.converged == res.converged);
}
