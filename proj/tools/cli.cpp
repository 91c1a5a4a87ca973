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

#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "hilbert/hilbert.hpp"

namespace hilbert::cli {

bool RunReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void RunReport::below(const std::string& name, double value, double threshold) {
    checks.push_back({name, value, threshold, value < threshold, "<"});
}

void RunReport::at_most(const std::string& name, double value, double threshold) {
    checks.push_back({name, value, threshold, value <= threshold, "<="});
}

void RunReport::at_least(const std::string& name, double value, double threshold) {
    checks.push_back({name, value, threshold, value >= threshold, ">="});
}

void RunReport::equal(const std::string& name, double value, double expected) {
    checks.push_back({name, value, expected, value == expected, "=="});
}

Json RunReport::to_json() const {
    Json j;
    j["command"] = command;
    j["parameters"] = parameters;
    Json cs = Json::array();
    for (const auto& c : checks)
        cs.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"comparison", c.comparison}, {"pass", c.pass}});
    j["checks"] = cs;
    j["artifacts"] = artifacts;
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    j["data"] = data;
    j["pass"] = pass();
    return j;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << command;
    for (const auto& [k, v] : parameters.items()) os << "  " << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    if (seed) os << "  seed=" << *seed;
    os << '\n';
    if (!body.empty()) os << body << (body.back() == '\n' ? "" : "\n");
    std::size_t width = 4;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
        os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << std::right << "  "
           << std::setprecision(6) << std::setw(13) << c.value << ' ' << std::setw(2) << c.comparison << ' ' << c.threshold << '\n';
    }
    for (const auto& a : artifacts) os << "  wrote " << a << '\n';
    os << "result: " << (pass() ? "PASS" : "FAIL") << " (" << checks.size() << " checks)\n";
    return os.str();
}

namespace {

class UsageError : public Error {
 public:
    using Error::Error;
};

struct Globals {
    bool json = false;
    std::uint64_t seed = 1;
    bool seed_given = false;
    int threads = 0;
    std::string out;
    double tol = 0;
    bool tol_given = false;

    double tol_or(double d) const { return tol_given ? tol : d; }

    ExecutionContext context() const {
        auto ctx = ExecutionContext::from_env();
        if (threads > 0) ctx.threads = threads;
        return ctx;
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string fmt(Complex z) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << std::showpos << z.real() << z.imag() << 'i';
    return os.str();
}

std::string matrix_text(const Matrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        os << ' ';
        for (int j = 0; j < m.cols(); ++j) os << ' ' << fmt(m(i, j));
        os << '\n';
    }
    return os.str();
}

std::string grid_text(const Grid& g) {
    std::ostringstream os;
    for (const auto& row : g) {
        os << ' ';
        for (int v : row) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

void require_prime(int p) {
    if (!is_prime(p)) throw UsageError("p must be prime");
}

void require_odd_prime_flag(int v, const std::string& flag) {
    if (v == 2 || !is_prime(v)) throw UsageError(flag + " must be an odd prime");
}

void write_artifact(const Globals& g, RunReport& rep, const Json& doc) {
    if (g.out.empty()) return;
    write_json(g.out, doc);
    rep.artifacts.push_back(g.out);
}

// field

void field_table_cmd(const Globals& g, int p, int k, RunReport& rep) {
    rep.parameters = {{"p", p}, {"k", k}};
    if (!is_prime(p)) throw UsageError("--p must be prime");
    auto f = field_make(p, k);
    auto rows = field_table(f);
    std::ostringstream os;
    os << "  GF(" << f->order() << ") = Z_" << p << "[x] / (" << poly_to_string(f->poly) << ")\n";
    os << "  " << std::left << std::setw(8) << "element" << std::setw(22) << "polynomial" << std::setw(7) << "tr x" << std::setw(8) << "tr x^2"
       << "order\n";
    std::int64_t order_sum = 0;
    for (const auto& r : rows) {
        os << "  " << std::setw(8) << r.label << std::setw(22) << element_to_string(r.element) << std::setw(7) << r.trace << std::setw(8)
           << r.trace_sq << r.order << '\n';
        if (r.order) order_sum += ((f->order() - 1) % r.order == 0) ? 1 : 0;
    }
    rep.body = os.str();
    rep.equal("rows", static_cast<double>(rows.size()), static_cast<double>(f->order()));
    rep.equal("orders_divide_q_minus_1", static_cast<double>(order_sum), static_cast<double>(f->order() - 1));
    auto doc = to_json(f);
    rep.data = doc;
    write_artifact(g, rep, doc);
}

// weyl

void weyl_check_cmd(const Globals& g, int n, RunReport& rep) {
    rep.parameters = {{"n", n}};
    if (n > 16) throw UsageError("--n must be at most 16 for the exhaustive check");
    require_dimension(n);
    rep.seed = g.seed;
    double tol = g.tol_or(kEpsMat);
    auto basis = displacement_basis(n);
    double hs = 0, law = 0;
    for (int a = 0; a < n * n; ++a)
        for (int b = 0; b < n * n; ++b) {
            Complex t = (basis[a].adjoint() * basis[b]).trace();
            hs = std::max(hs, std::abs(t - (a == b ? Complex(n) : Complex(0))));
            law = std::max(law, group_law_residual(n, {a / n, a % n}, {b / n, b % n}));
        }
    std::mt19937_64 rng(g.seed);
    std::normal_distribution<double> nd;
    Matrix x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = Complex(nd(rng), nd(rng));
    double expansion = max_abs(reconstruct_operator(expand_operator(x)) - x);
    rep.below("hilbert_schmidt_orthogonality", hs, tol);
    rep.below("group_law", law, tol);
    rep.below("expansion_roundtrip", expansion, tol);
}

void weyl_expand_cmd(const Globals& g, const std::string& path, RunReport& rep) {
    rep.parameters = {{"matrix", path}};
    Json j = read_json(path);
    Matrix a = matrix_from_json(j.is_object() && j.contains("matrix") ? j["matrix"] : j);
    if (a.rows() != a.cols()) throw UsageError("--matrix must be square");
    require_dimension(static_cast<int>(a.rows()));
    Matrix c = expand_operator(a);
    rep.body = "  coefficients a_rs = Tr(D_rs^dag A) / N, rows r, columns s\n" + matrix_text(c);
    rep.data["coefficients"] = matrix_to_json(c);
    rep.below("reconstruction", max_abs(reconstruct_operator(c) - a), g.tol_or(kEpsMat));
    write_artifact(g, rep, Json{{"coefficients", matrix_to_json(c)}});
}

// latin, hadamard, werner

void latin_gen_cmd(const Globals&, int n, bool count, RunReport& rep) {
    rep.parameters = {{"n", n}, {"count", count}};
    if (n < 1 || n > 64) throw UsageError("--n must be between 1 and 64");
    auto l = latin_from_group(n);
    rep.body = grid_text(l.cells());
    rep.data["square"] = l.cells();
    rep.equal("is_latin", is_latin(l.cells()) ? 1 : 0, 1);
    if (count) {
        if (n > 6) throw UsageError("--count supports n <= 6");
        std::uint64_t reduced = 0;
        enumerate_latin(n, [&](const Grid&) { ++reduced; }, true);
        std::uint64_t total = reduced * factorial(n) * factorial(n - 1);
        rep.data["reduced"] = reduced;
        rep.data["total"] = total;
        rep.body += "  reduced squares: " + std::to_string(reduced) + "\n  all squares: " + std::to_string(total) + "\n";
    }
}

void hadamard_fourier_cmd(const Globals& g, int n, RunReport& rep) {
    rep.parameters = {{"n", n}};
    if (n < 1 || n > 64) throw UsageError("--n must be between 1 and 64");
    Matrix f = fourier_matrix(n);
    rep.body = matrix_text(f);
    double flat = (f.cwiseAbs().array() - 1.0 / std::sqrt(static_cast<double>(n))).abs().maxCoeff();
    rep.below("unitarity", unitarity_residual(f), g.tol_or(kEpsMat));
    rep.below("flat_moduli", flat, g.tol_or(kEpsMat));
    rep.data["matrix"] = matrix_to_json(f);
    write_artifact(g, rep, Json{{"matrix", matrix_to_json(f)}});
}

void werner_cmd(const Globals& g, int n, RunReport& rep) {
    rep.parameters = {{"n", n}};
    if (n < 2 || n > 16) throw UsageError("--n must be between 2 and 16");
    auto l = latin_from_group(n);
    Matrix h = fourier_matrix(n);
    auto vecs = werner_basis(l, h);
    auto check = werner_check_dense(vecs, n);
    rep.below("gram_deviation", check.gram_deviation, g.tol_or(kEpsMat));
    rep.below("reduced_state_deviation", check.reduced_deviation, g.tol_or(kEpsMat));
    rep.body = "  " + std::to_string(vecs.size()) + " maximally entangled vectors in C^" + std::to_string(n) + " (x) C^" + std::to_string(n) + "\n";
    BasisFamily fam{n * n, vecs, Json{{"latin", l.cells()}, {"hadamard", matrix_to_json(h)}, {"construction", "werner"}}};
    write_artifact(g, rep, to_json(fam));
}

// mub

void mub_report(const Globals& g, const MubSet& set, RunReport& rep) {
    double ortho = 0;
    for (const auto& b : set.bases) {
        if (b.rows() != set.n || b.cols() != set.n) throw Error("basis has the wrong shape");
        ortho = std::max(ortho, orthonormality_deviation(b));
    }
    rep.below("orthonormality", ortho, g.tol_or(kEpsMat));
    if (ortho > kEpsMat) return;
    double dev = 0;
    double target = 1.0 / set.n;
    for (std::size_t a = 0; a < set.bases.size(); ++a)
        for (std::size_t b = a + 1; b < set.bases.size(); ++b) {
            Matrix m = set.bases[a].adjoint() * set.bases[b];
            dev = std::max(dev, (m.cwiseAbs2().array() - target).abs().maxCoeff());
        }
    rep.below("unbiasedness", dev, g.tol_or(kEpsMub));
    rep.at_most("basis_count", static_cast<double>(set.bases.size()), set.n + 1);
    rep.data["bases"] = set.bases.size();
    rep.data["complete"] = set.complete();
}

void mub_gen_cmd(const Globals& g, int p, int k, RunReport& rep) {
    rep.parameters = {{"p", p}, {"k", k}};
    require_prime(p);
    if (k < 1) throw UsageError("--k must be at least 1");
    MubSet set = (k == 1 && p != 2) ? ivanovic_mubs(p) : subgroup_eigenbases(p, k);
    rep.body = "  " + std::to_string(set.bases.size()) + " bases in dimension " + std::to_string(set.n) + "\n";
    mub_report(g, set, rep);
    rep.equal("complete", set.complete() ? 1 : 0, 1);
    write_artifact(g, rep, to_json(set));
}

void mub_verify_cmd(const Globals& g, const std::string& path, RunReport& rep, std::ostream& err) {
    rep.parameters = {{"file", path}};
    auto set = mubset_from_json(read_json(path), err);
    rep.body = "  " + std::to_string(set.bases.size()) + " bases in dimension " + std::to_string(set.n) + "\n";
    mub_report(g, set, rep);
}

/// Rows and columns of the Mermin square XI IX XX / IZ ZI ZZ / XZ ZX YY as sorted Pauli-word triples.
std::vector<std::vector<int>> mermin_square_lines() {
    auto word = [](const std::string& s) {
        int w = 0;
        for (int q = 0; q < 2; ++q) {
            char c = s[q];
            if (c == 'X' || c == 'Y') w |= 1 << (3 - q);
            if (c == 'Z' || c == 'Y') w |= 1 << (1 - q);
        }
        return w;
    };
    const char* sq[3][3] = {{"XI", "IX", "XX"}, {"IZ", "ZI", "ZZ"}, {"XZ", "ZX", "YY"}};
    std::vector<std::vector<int>> lines;
    for (int i = 0; i < 3; ++i) {
        std::vector<int> row, col;
        for (int j = 0; j < 3; ++j) {
            row.push_back(word(sq[i][j]));
            col.push_back(word(sq[j][i]));
        }
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        lines.push_back(row);
        lines.push_back(col);
    }
    return lines;
}

void mub_mermin_cmd(const Globals&, RunReport& rep) {
    auto land = mermin_landscape();
    auto lines = mermin_square_lines();
    std::ostringstream os;
    for (std::size_t i = 0; i < land.petals.size(); ++i) {
        os << "  petal " << std::setw(2) << i << ":";
        for (const auto& nm : land.petal_names(static_cast<int>(i))) os << ' ' << nm;
        os << '\n';
    }
    int min_m = 99, max_m = -1;
    for (std::size_t f = 0; f < land.flowers.size(); ++f) {
        int m = 0;
        os << "  flower " << f << ":";
        for (int i : land.flowers[f]) {
            os << ' ' << i;
            if (std::find(lines.begin(), lines.end(), land.petals[i]) != lines.end()) ++m;
        }
        os << "  (Mermin petals: " << m << ")\n";
        min_m = std::min(min_m, m);
        max_m = std::max(max_m, m);
    }
    rep.body = os.str();
    rep.equal("petals", static_cast<double>(land.petals.size()), 15);
    rep.equal("flowers", static_cast<double>(land.flowers.size()), 6);
    rep.equal("min_mermin_petals_per_flower", min_m, 2);
    rep.equal("max_mermin_petals_per_flower", max_m, 2);
    rep.equal("stabilizer_states", static_cast<double>(land.stabilizer_states), static_cast<double>(stabilizer_count(2, 2)));
}

void mub_search6_cmd(const Globals& g, int restarts, RunReport& rep) {
    rep.parameters = {{"restarts", restarts}};
    if (restarts < 1) throw UsageError("--restarts must be positive");
    rep.seed = g.seed;
    auto res = mub_search6(restarts, g.seed, g.context());
    rep.body = "  restarts " + std::to_string(res.restarts) + ", converged " + std::to_string(res.converged) + ", distinct solutions " +
               std::to_string(res.distinct.size()) + "\n";
    rep.data["converged"] = res.converged;
    rep.data["distinct"] = res.distinct.size();
    rep.at_least("converged_restarts", res.converged, 1);
}

// wigner

Matrix load_state(const std::string& path, int n) {
    Json j = read_json(path);
    if (j.is_object() && j.contains("state")) j = j["state"];
    if (j.is_object() && kind_of(j) == "sic") j = j["fiducial"];
    Matrix rho;
    if (json_is_matrix(j)) {
        rho = matrix_from_json(j);
    } else {
        Vector v = vector_from_json(j);
        if (std::abs(v.norm() - 1.0) > kEpsMat) throw Error("state vector is not normalized");
        rho = v * v.adjoint();
    }
    if (rho.rows() != n || rho.cols() != n) throw UsageError("state dimension does not match --n");
    return rho;
}

void wigner_table_cmd(const Globals& g, int n, const std::string& state, RunReport& rep) {
    rep.parameters = {{"n", n}, {"state", state}};
    require_odd_prime_flag(n, "--n");
    Matrix rho = load_state(state, n);
    auto pps = phase_point_set(n, g.context());
    auto w = wigner_function(rho, pps);
    std::ostringstream os;
    for (int r = 0; r < n; ++r) {
        os << ' ';
        for (int s = 0; s < n; ++s) os << ' ' << std::setw(10) << std::setprecision(4) << std::fixed << w.w(r, s);
        os << '\n';
    }
    rep.body = os.str();
    rep.data["table"] = to_json(w)["w"];
    rep.below("normalization", std::abs(w.sum() - 1.0), g.tol_or(kEpsMat));
    rep.below("reconstruction", max_abs(reconstruct_density(w, pps) - rho), g.tol_or(kEpsMat));
    if (!g.out.empty()) {
        bool as_json = g.out.size() >= 5 && g.out.substr(g.out.size() - 5) == ".json";
        write_text(g.out, as_json ? to_json(w).dump(2) + "\n" : wigner_csv(w));
        rep.artifacts.push_back(g.out);
    }
}

void wigner_check_cmd(const Globals& g, int n, RunReport& rep) {
    rep.parameters = {{"n", n}};
    require_odd_prime_flag(n, "--n");
    if (n > 13) throw UsageError("--n must be at most 13");
    rep.seed = g.seed;
    double tol = g.tol_or(kEpsMat);
    auto pps = phase_point_set(n, g.context());
    auto mubs = ivanovic_mubs(n);
    Matrix a = parity_operator(n), f = fourier_matrix(n);
    rep.below("phase_point_orthogonality", phase_point_orthogonality(pps), tol);
    int bad_spectrum = 0;
    for (const auto& op : pps.ops)
        if (eigen_multiplicities(op) != std::pair<int, int>{(n + 1) / 2, (n - 1) / 2}) ++bad_spectrum;
    rep.equal("wrong_spectra", bad_spectrum, 0);
    rep.below("parity_involution", max_abs(a * a - Matrix::Identity(n, n)), tol);
    rep.below("fourier_squared_is_parity", max_abs(f * f - a), tol);
    std::mt19937_64 rng(g.seed);
    Matrix rho = random_density(n, rng);
    auto w = wigner_function(rho, pps);
    rep.below("reconstruction", max_abs(reconstruct_density(w, pps) - rho), tol);
    double lines = 0, points = 0, marginals = 0;
    for (int z = 0; z <= n; ++z) {
        auto ls = line_sums(w, z);
        for (int v = 0; v < n; ++v) {
            Vector e = mubs.bases[z].col(v);
            Matrix avg = Matrix::Zero(n, n);
            for (const auto& q : line_points(n, z, v)) avg += pps.at(q);
            lines = std::max(lines, max_abs(avg / static_cast<double>(n) - e * e.adjoint()));
            marginals = std::max(marginals, std::abs(ls[v] - e.dot(rho * e).real()));
        }
    }
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) points = std::max(points, max_abs(face_point_operator(mubs, phase_point_choice(n, {r, s})) - pps.at(r, s)));
    rep.below("line_projector_identity", lines, tol);
    rep.below("point_face_identity", points, tol);
    rep.below("line_sums_match_mub_probabilities", marginals, tol);
    double cov = 0;
    for (const auto& gm : sl2_enumerate(n)) cov = std::max(cov, clifford_covariance_check(pps, gm));
    rep.below("clifford_covariance", cov, tol);
}

// clifford

void clifford_check_cmd(const Globals& g, int p, RunReport& rep) {
    rep.parameters = {{"p", p}};
    require_odd_prime_flag(p, "--p");
    if (p > 13) throw UsageError("--p must be at most 13");
    auto group = sl2_enumerate(p);
    rep.equal("group_order", static_cast<double>(group.size()), static_cast<double>(p) * (p * p - 1));
    double worst = 0;
    if (p <= 7) {
        for (const auto& gm : group) worst = std::max(worst, normalizer_residual(gm));
    } else {
        rep.seed = g.seed;
        std::mt19937_64 rng(g.seed);
        std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
        for (int t = 0; t < 100; ++t) worst = std::max(worst, normalizer_residual(group[pick(rng)]));
    }
    rep.below("normalizer_residual", worst, g.tol_or(kEpsMat));
    rep.below("minus_identity_is_parity", max_abs(metaplectic({-1, 0, 0, -1, p}) - parity_operator(p)), g.tol_or(kEpsMat));
    auto o3 = order3_elements(p);
    rep.data["order3_elements"] = o3.size();
    rep.body = "  |SL(2," + std::to_string(p) + ")| = " + std::to_string(group.size()) + ", order-3 elements: " + std::to_string(o3.size()) + "\n";
}

void clifford_zauner_cmd(const Globals& g, int p, const std::string& path, RunReport& rep, std::ostream& err) {
    rep.parameters = {{"p", p}, {"fiducial", path}};
    require_odd_prime_flag(p, "--p");
    auto cand = sic_from_json(read_json(path), err);
    if (cand.n != p) throw UsageError("fiducial dimension does not match --p");
    Vector psi = cand.fiducial / cand.fiducial.norm();
    auto z = zauner_scan(psi);
    std::ostringstream os;
    os << "  best element D_(" << z.shift.r << "," << z.shift.s << ") U_G, G = [[" << z.g.a << "," << z.g.b << "],[" << z.g.c << "," << z.g.d << "]]\n";
    rep.body = os.str();
    rep.data["G"] = {z.g.a, z.g.b, z.g.c, z.g.d};
    rep.data["shift"] = {z.shift.r, z.shift.s};
    rep.below("zauner_residual", z.residual, g.tol_or(1e-6));
}

// design

VectorFamily load_family(const std::string& path, std::ostream& err) {
    Json j = read_json(path);
    std::string kind = kind_of(j);
    if (kind == "basisfamily") return make_family(basisfamily_from_json(j, err).vectors);
    if (kind == "mubset") return family_from_bases(mubset_from_json(j, err).bases);
    if (kind == "sic") {
        auto c = sic_from_json(j, err);
        return make_family(sic_orbit(c.fiducial));
    }
    throw KindError("basisfamily|mubset|sic", kind.empty() ? "<none>" : kind);
}

void design_test_cmd(const Globals& g, const std::string& path, int t, RunReport& rep, std::ostream& err) {
    rep.parameters = {{"family", path}, {"t", t}};
    if (t < 1) throw UsageError("--t must be at least 1");
    auto fam = load_family(path, err);
    auto r = design_test(fam, t, g.tol_or(kEpsDesign), g.context());
    rep.data = {{"value", r.value}, {"target", r.target}, {"is_design", r.is_design}, {"vectors", fam.size()}, {"n", fam.n}};
    rep.body = "  K = " + std::to_string(fam.size()) + ", N = " + std::to_string(fam.n) + ", moment " + fmt(r.value) + ", target " + fmt(r.target) + "\n";
    rep.below("design_deviation", std::abs(r.value - r.target), g.tol_or(kEpsDesign));
}

void design_welch_cmd(const Globals& g, const std::string& path, int t, RunReport& rep, std::ostream& err) {
    rep.parameters = {{"family", path}, {"t", t}};
    if (t < 1) throw UsageError("--t must be at least 1");
    auto fam = load_family(path, err);
    auto w = welch_bound(fam, t, g.context());
    bool sat = w.saturated(fam.size(), g.tol_or(kEpsDesign));
    rep.data = {{"lhs", w.lhs}, {"rhs", w.rhs}, {"slack", w.slack}, {"saturated", sat}};
    rep.body = "  lhs " + fmt(w.lhs) + ", rhs " + fmt(w.rhs) + ", slack " + fmt(w.slack) + (sat ? " (saturated)" : "") + "\n";
    rep.at_least("welch_slack", w.slack, -1e-10);
}

// sic

void sic_checks(const Globals& g, const SicCandidate& c, RunReport& rep) {
    auto v = sic_verify(c);
    rep.below("f_sic", v.fsic, g.tol_or(1e-12));
    rep.below("gram_deviation", v.gram_deviation, kEpsSic);
    rep.below("resolution_of_identity", v.resolution_deviation, kEpsMat);
    rep.data["fsic"] = v.fsic;
    rep.data["pairs"] = v.pairs;
}

void sic_search_cmd(const Globals& g, int n, int restarts, bool zauner, RunReport& rep) {
    rep.parameters = {{"n", n}, {"restarts", restarts}, {"zauner", zauner}};
    if (n < 2 || n > 16) throw UsageError("--n must be between 2 and 16");
    if (restarts < 1) throw UsageError("--restarts must be positive");
    if (zauner && (n == 2 || !is_prime(n))) throw UsageError("--zauner needs an odd prime --n");
    rep.seed = g.seed;
    SicSearchOptions opt;
    opt.restarts = restarts;
    opt.seed = g.seed;
    opt.zauner = zauner;
    auto res = sic_search(n, opt, g.context());
    rep.body = "  best restart " + std::to_string(res.best.restart) + " of " + std::to_string(restarts) + ", f = " + fmt(res.best.fsic) + ", " +
               std::to_string(res.converged) + " restarts below 1e-12\n";
    rep.data["restart_f"] = res.restart_f;
    rep.data["converged"] = res.converged;
    rep.data["fiducial"] = vector_to_json(res.best.fiducial);
    sic_checks(g, res.best, rep);
    write_artifact(g, rep, to_json(res.best));
}

void sic_verify_cmd(const Globals& g, const std::string& path, RunReport& rep, std::ostream& err) {
    rep.parameters = {{"file", path}};
    auto c = sic_from_json(read_json(path), err);
    c.fiducial /= c.fiducial.norm();
    sic_checks(g, c, rep);
}

void sic_fingerprint_cmd(const Globals& g, const std::string& path, RunReport& rep, std::ostream& err) {
    rep.parameters = {{"file", path}};
    auto c = sic_from_json(read_json(path), err);
    if (c.n != 4) throw UsageError("fingerprint needs a dimension-4 fiducial");
    c.fiducial /= c.fiducial.norm();
    c.fsic = f_sic(c.fiducial);
    auto ph = overlap_phases(c);
    auto fp = u_fingerprint(ph);
    double modulus = 0;
    std::ostringstream os;
    for (int r = 0; r < 4; ++r) {
        os << ' ';
        for (int s = 0; s < 4; ++s) {
            if (!r && !s) {
                os << "  " << std::setw(20) << "x";
                continue;
            }
            modulus = std::max(modulus, std::abs(std::abs(ph.at(r, s)) - 1.0));
            os << "  " << std::setw(20) << fmt(ph.at(r, s));
        }
        os << '\n';
    }
    os << "  u = " << fmt(fp.u) << '\n';
    rep.body = os.str();
    rep.data["u"] = complex_to_json(fp.u);
    rep.below("unit_modulus", modulus, kEpsSic);
    rep.below("u_closed_form", fp.closed_form_residual, g.tol_or(1e-10));
    rep.below("minimal_polynomial_u", fp.minpoly_residual, 1e-8);
    rep.below("minimal_polynomial_inverse_u", fp.unit_residual, 1e-8);
}

void sic_exact4_cmd(const Globals& g, RunReport& rep) {
    auto c = make_candidate(dim4_fiducial());
    rep.body = "  closed-form fiducial in dimension 4\n";
    sic_checks(g, c, rep);
    write_artifact(g, rep, to_json(c));
}

// suite

void prefix_merge(RunReport& into, const RunReport& part, const std::string& prefix) {
    for (auto c : part.checks) {
        c.name = prefix + "." + c.name;
        into.checks.push_back(c);
    }
}

void suite_cmd(const Globals& g, int n, RunReport& rep) {
    rep.parameters = {{"n", n}};
    rep.seed = g.seed;
    RunReport weyl;
    weyl_check_cmd(g, n, weyl);
    prefix_merge(rep, weyl, "weyl");
    std::vector<std::string> ran{"weyl"};
    std::int64_t p = 0;
    int k = 0;
    if (n >= 2 && prime_power(n, p, k) && n <= 32) {
        RunReport mub;
        mub_gen_cmd(Globals{g.json, g.seed, g.seed_given, g.threads, "", g.tol, g.tol_given}, static_cast<int>(p), k, mub);
        prefix_merge(rep, mub, "mub");
        ran.push_back("mub");
        MubSet set = (k == 1 && p != 2) ? ivanovic_mubs(static_cast<int>(p)) : subgroup_eigenbases(static_cast<int>(p), k);
        auto fam = family_from_bases(set.bases);
        for (int t = 1; t <= 2; ++t)
            rep.below("design.mub_t" + std::to_string(t), std::abs(design_test(fam, t).value - design_target(n, t)), g.tol_or(kEpsDesign));
        if (n >= 3) {
            auto r = design_test(fam, 3);
            rep.at_least("design.mub_t3_excess", r.value - r.target, kEpsDesign);
        }
        ran.push_back("design");
    }
    if (n > 2 && is_prime(n) && n <= 13) {
        RunReport w;
        wigner_check_cmd(g, n, w);
        prefix_merge(rep, w, "wigner");
        ran.push_back("wigner");
    }
    rep.data["suites"] = ran;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, RunReport* report_out) {
    CLI::App app{"Finite-dimensional Hilbert space structures: construction and verification", "hilbert"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "emit the report as JSON");
    auto* seed_opt = app.add_option("--seed", g.seed, "random seed (default 1)");
    app.add_option("--threads", g.threads, "worker threads (default HILBERT_THREADS or all cores)")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "output path");
    auto* tol_opt = app.add_option("--tol", g.tol, "override the primary check threshold")->check(CLI::PositiveNumber);

    RunReport rep;
    std::function<void()> action;
    int n = 0, p = 0, k = 1, t = 1, restarts = 8;
    bool count = false, zauner = false;
    std::string file, state, matrix_path, family, fiducial;

    auto* field = app.add_subcommand("field", "finite fields")->require_subcommand(1);
    auto* field_table = field->add_subcommand("table", "element table of GF(p^k)");
    field_table->add_option("--p", p, "characteristic")->required();
    field_table->add_option("--k", k, "extension degree")->required();
    field_table->callback([&] { action = [&] { rep.command = "field table"; field_table_cmd(g, p, k, rep); }; });

    auto* weyl = app.add_subcommand("weyl", "Weyl-Heisenberg group")->require_subcommand(1);
    auto* weyl_check = weyl->add_subcommand("check", "operator basis invariants");
    weyl_check->add_option("--n", n, "dimension")->required();
    weyl_check->callback([&] { action = [&] { rep.command = "weyl check"; weyl_check_cmd(g, n, rep); }; });
    auto* weyl_expand = weyl->add_subcommand("expand", "expand a matrix in displacement operators");
    weyl_expand->add_option("--matrix", matrix_path, "JSON matrix: rows of [re, im]")->required();
    weyl_expand->callback([&] { action = [&] { rep.command = "weyl expand"; weyl_expand_cmd(g, matrix_path, rep); }; });

    auto* latin = app.add_subcommand("latin", "Latin squares")->require_subcommand(1);
    auto* latin_gen = latin->add_subcommand("gen", "cyclic Latin square");
    latin_gen->add_option("--n", n, "order")->required();
    latin_gen->add_flag("--count", count, "count all squares of this order");
    latin_gen->callback([&] { action = [&] { rep.command = "latin gen"; latin_gen_cmd(g, n, count, rep); }; });

    auto* hadamard = app.add_subcommand("hadamard", "complex Hadamard matrices")->require_subcommand(1);
    auto* fourier = hadamard->add_subcommand("fourier", "Fourier matrix");
    fourier->add_option("--n", n, "order")->required();
    fourier->callback([&] { action = [&] { rep.command = "hadamard fourier"; hadamard_fourier_cmd(g, n, rep); }; });

    auto* werner = app.add_subcommand("werner", "maximally entangled bases from (Latin square, Hadamard)");
    werner->add_option("--n", n, "local dimension")->required();
    werner->callback([&] { action = [&] { rep.command = "werner"; werner_cmd(g, n, rep); }; });

    auto* mub = app.add_subcommand("mub", "mutually unbiased bases")->require_subcommand(1);
    auto* mub_gen = mub->add_subcommand("gen", "complete set in dimension p^k");
    mub_gen->add_option("--p", p, "prime")->required();
    mub_gen->add_option("--k", k, "exponent (default 1)");
    mub_gen->callback([&] { action = [&] { rep.command = "mub gen"; mub_gen_cmd(g, p, k, rep); }; });
    auto* mub_verify = mub->add_subcommand("verify", "check a stored MUB set");
    mub_verify->add_option("file", file, "mubset JSON")->required();
    mub_verify->callback([&] { action = [&] { rep.command = "mub verify"; mub_verify_cmd(g, file, rep, err); }; });
    auto* mub_mermin = mub->add_subcommand("mermin", "two-qubit petals and flowers");
    mub_mermin->callback([&] { action = [&] { rep.command = "mub mermin"; mub_mermin_cmd(g, rep); }; });
    auto* mub_search6 = mub->add_subcommand("search6", "dimension-6 vectors unbiased to two bases");
    mub_search6->add_option("--restarts", restarts, "restarts")->required();
    mub_search6->callback([&] { action = [&] { rep.command = "mub search6"; mub_search6_cmd(g, restarts, rep); }; });

    auto* wigner = app.add_subcommand("wigner", "discrete Wigner functions")->require_subcommand(1);
    auto* wigner_table = wigner->add_subcommand("table", "Wigner function of a state");
    wigner_table->add_option("--n", n, "odd prime dimension")->required();
    wigner_table->add_option("--state", state, "JSON vector or density matrix")->required();
    wigner_table->callback([&] { action = [&] { rep.command = "wigner table"; wigner_table_cmd(g, n, state, rep); }; });
    auto* wigner_check = wigner->add_subcommand("check", "phase-point invariants");
    wigner_check->add_option("--n", n, "odd prime dimension")->required();
    wigner_check->callback([&] { action = [&] { rep.command = "wigner check"; wigner_check_cmd(g, n, rep); }; });

    auto* clifford = app.add_subcommand("clifford", "symplectic group and metaplectic representation")->require_subcommand(1);
    auto* clifford_check = clifford->add_subcommand("check", "normalizer verification");
    clifford_check->add_option("--p", p, "odd prime")->required();
    clifford_check->callback([&] { action = [&] { rep.command = "clifford check"; clifford_check_cmd(g, p, rep); }; });
    auto* clifford_zauner = clifford->add_subcommand("zauner", "order-3 symmetry of a fiducial");
    clifford_zauner->add_option("--p", p, "odd prime")->required();
    clifford_zauner->add_option("--fiducial", fiducial, "sic JSON")->required();
    clifford_zauner->callback([&] { action = [&] { rep.command = "clifford zauner"; clifford_zauner_cmd(g, p, fiducial, rep, err); }; });

    auto* design = app.add_subcommand("design", "projective t-designs")->require_subcommand(1);
    auto* design_test = design->add_subcommand("test", "t-design criterion");
    design_test->add_option("--family", family, "basisfamily, mubset or sic JSON")->required();
    design_test->add_option("--t", t, "order")->required();
    design_test->callback([&] { action = [&] { rep.command = "design test"; design_test_cmd(g, family, t, rep, err); }; });
    auto* design_welch = design->add_subcommand("welch", "Welch bound");
    design_welch->add_option("--family", family, "basisfamily, mubset or sic JSON")->required();
    design_welch->add_option("--t", t, "order")->required();
    design_welch->callback([&] { action = [&] { rep.command = "design welch"; design_welch_cmd(g, family, t, rep, err); }; });

    auto* sic = app.add_subcommand("sic", "SIC fiducials")->require_subcommand(1);
    auto* sic_search = sic->add_subcommand("search", "random-restart fiducial search");
    sic_search->add_option("--n", n, "dimension")->required();
    sic_search->add_option("--restarts", restarts, "restarts (default 8)");
    sic_search->add_flag("--zauner", zauner, "start in an order-3 Clifford eigenspace");
    sic_search->callback([&] { action = [&] { rep.command = "sic search"; sic_search_cmd(g, n, restarts, zauner, rep); }; });
    auto* sic_verify = sic->add_subcommand("verify", "check a stored fiducial");
    sic_verify->add_option("file", file, "sic JSON")->required();
    sic_verify->callback([&] { action = [&] { rep.command = "sic verify"; sic_verify_cmd(g, file, rep, err); }; });
    auto* sic_fp = sic->add_subcommand("fingerprint", "overlap phases and u in dimension 4");
    sic_fp->add_option("file", file, "sic JSON")->required();
    sic_fp->callback([&] { action = [&] { rep.command = "sic fingerprint"; sic_fingerprint_cmd(g, file, rep, err); }; });
    auto* sic_exact = sic->add_subcommand("exact4", "closed-form dimension-4 fiducial");
    sic_exact->callback([&] { action = [&] { rep.command = "sic exact4"; sic_exact4_cmd(g, rep); }; });

    auto* suite = app.add_subcommand("suite", "weyl, mub, wigner and design suites at one dimension");
    suite->add_option("--n", n, "dimension")->required();
    suite->callback([&] { action = [&] { rep.command = "suite"; suite_cmd(g, n, rep); }; });

    std::vector<std::string> argv_store{"hilbert"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kPass;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }
    g.seed_given = seed_opt->count() > 0;
    g.tol_given = tol_opt->count() > 0;

    int code = kPass;
    try {
        action();
        code = rep.pass() ? kPass : kChecksFailed;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const KindError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const Json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return kIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (g.json) out << rep.to_json().dump(2) << '\n';
    else out << rep.to_text();
    if (report_out) *report_out = rep;
    return code;
}

}  // namespace hilbert::cli
