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

// JSON persistence. Every document carries "kind" and "version"; complex
// numbers are [re, im] pairs.

#ifndef HILBERT_IO_HPP
#define HILBERT_IO_HPP

#include "hilbert/combinat.hpp"
#include "hilbert/core.hpp"
#include "hilbert/gf.hpp"
#include "hilbert/mub.hpp"
#include "hilbert/sic.hpp"
#include "hilbert/wigner.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace hilbert {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

class IoError : public Error {
 public:
    using Error::Error;
};

class KindError : public Error {
 public:
    KindError(const std::string& expected, const std::string& actual)
        : Error("expected kind '" + expected + "' but found '" + actual + "'"), expected_(expected), actual_(actual) {}
    const std::string& expected() const { return expected_; }
    const std::string& actual() const { return actual_; }

 private:
    std::string expected_, actual_;
};

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json vector_to_json(const Vector& v) {
    Json a = Json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v(i)));
    return a;
}

inline Vector vector_from_json(const Json& j) {
    if (!j.is_array()) throw Error("vector must be an array");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
}

/// Row-major array of rows.
inline Json matrix_to_json(const Matrix& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i).transpose()));
    return a;
}

inline Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error("matrix must be a non-empty array of rows");
    auto rows = static_cast<Eigen::Index>(j.size());
    auto cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (static_cast<Eigen::Index>(j[i].size()) != cols) throw Error("matrix rows have different lengths");
        m.row(i) = vector_from_json(j[i]).transpose();
    }
    return m;
}

/// True when j looks like an array of rows of [re, im] rather than a vector.
inline bool json_is_matrix(const Json& j) {
    return j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array();
}

inline Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("cannot write " + path);
}

inline void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

inline Json document(const std::string& kind) { return Json{{"kind", kind}, {"version", kFormatVersion}}; }

/// Checks the kind tag; a different version only warns.
inline void expect_kind(const Json& j, const std::string& kind, std::ostream& warn = std::cerr) {
    if (!j.is_object() || !j.contains("kind")) throw KindError(kind, "<none>");
    auto actual = j["kind"].get<std::string>();
    if (actual != kind) throw KindError(kind, actual);
    int version = j.value("version", 0);
    if (version != kFormatVersion)
        warn << "warning: " << kind << " document has version " << version << ", expected " << kFormatVersion << "; loading anyway\n";
}

inline std::string kind_of(const Json& j) { return j.is_object() && j.contains("kind") ? j["kind"].get<std::string>() : ""; }

// mubset

inline Json to_json(const MubSet& set) {
    Json j = document("mubset");
    j["n"] = set.n;
    Json bases = Json::array();
    for (const auto& b : set.bases) {
        Json vecs = Json::array();
        for (int c = 0; c < b.cols(); ++c) vecs.push_back(vector_to_json(b.col(c)));
        bases.push_back(vecs);
    }
    j["bases"] = bases;
    return j;
}

inline MubSet mubset_from_json(const Json& j, std::ostream& warn = std::cerr) {
    expect_kind(j, "mubset", warn);
    MubSet set{j.at("n").get<int>(), {}};
    for (const auto& vecs : j.at("bases")) {
        Matrix b(set.n, static_cast<Eigen::Index>(vecs.size()));
        for (std::size_t c = 0; c < vecs.size(); ++c) {
            Vector v = vector_from_json(vecs[c]);
            if (v.size() != set.n) throw Error("basis vector has wrong dimension");
            b.col(static_cast<Eigen::Index>(c)) = v;
        }
        set.bases.push_back(b);
    }
    return set;
}

// basisfamily

struct BasisFamily {
    int n = 0;
    std::vector<Vector> vectors;
    Json metadata = Json::object();
};

inline Json to_json(const BasisFamily& fam) {
    Json j = document("basisfamily");
    j["n"] = fam.n;
    Json vecs = Json::array();
    for (const auto& v : fam.vectors) vecs.push_back(vector_to_json(v));
    j["vectors"] = vecs;
    j["metadata"] = fam.metadata;
    return j;
}

inline BasisFamily basisfamily_from_json(const Json& j, std::ostream& warn = std::cerr) {
    expect_kind(j, "basisfamily", warn);
    BasisFamily fam{j.at("n").get<int>(), {}, j.value("metadata", Json::object())};
    for (const auto& v : j.at("vectors")) fam.vectors.push_back(vector_from_json(v));
    return fam;
}

// sic

inline Json to_json(const SicCandidate& c) {
    Json j = document("sic");
    j["n"] = c.n;
    j["fiducial"] = vector_to_json(c.fiducial);
    j["fsic"] = c.fsic;
    j["seed"] = c.seed;
    j["restart"] = c.restart;
    return j;
}

inline SicCandidate sic_from_json(const Json& j, std::ostream& warn = std::cerr) {
    expect_kind(j, "sic", warn);
    SicCandidate c;
    c.n = j.at("n").get<int>();
    c.fiducial = vector_from_json(j.at("fiducial"));
    if (c.fiducial.size() != c.n) throw Error("fiducial has wrong dimension");
    c.fsic = j.value("fsic", 0.0);
    c.seed = j.value("seed", std::uint64_t{0});
    c.restart = j.value("restart", -1);
    return c;
}

// wignertable

inline Json to_json(const WignerTable& t) {
    Json j = document("wignertable");
    j["n"] = t.n;
    Json rows = Json::array();
    for (int r = 0; r < t.n; ++r) {
        Json row = Json::array();
        for (int s = 0; s < t.n; ++s) row.push_back(t.w(r, s));
        rows.push_back(row);
    }
    j["w"] = rows;
    return j;
}

inline WignerTable wignertable_from_json(const Json& j, std::ostream& warn = std::cerr) {
    expect_kind(j, "wignertable", warn);
    WignerTable t{j.at("n").get<int>(), RealMatrix(0, 0)};
    t.w.resize(t.n, t.n);
    const auto& rows = j.at("w");
    if (static_cast<int>(rows.size()) != t.n) throw Error("table has wrong size");
    for (int r = 0; r < t.n; ++r) {
        if (static_cast<int>(rows[r].size()) != t.n) throw Error("table has wrong size");
        for (int s = 0; s < t.n; ++s) t.w(r, s) = rows[r][s].get<double>();
    }
    return t;
}

inline std::string wigner_csv(const WignerTable& t) {
    std::ostringstream os;
    os.precision(17);
    for (int r = 0; r < t.n; ++r) {
        for (int s = 0; s < t.n; ++s) os << (s ? "," : "") << t.w(r, s);
        os << '\n';
    }
    return os.str();
}

// field

inline Json to_json(const Field& f) {
    Json j = document("field");
    j["p"] = f->p;
    j["k"] = f->K;
    j["poly"] = f->poly;
    Json rows = Json::array();
    for (const auto& row : field_table(f))
        rows.push_back(Json{{"label", row.label},
                            {"element", row.element.coeffs()},
                            {"minpoly", row.minpoly},
                            {"trace", row.trace},
                            {"trace_sq", row.trace_sq},
                            {"order", row.order}});
    j["table"] = rows;
    return j;
}

inline Field field_from_json(const Json& j, std::ostream& warn = std::cerr) {
    expect_kind(j, "field", warn);
    auto p = j.at("p").get<std::int64_t>();
    int k = j.at("k").get<int>();
    auto poly = j.at("poly").get<std::vector<std::int64_t>>();
    if (!is_prime(p)) throw Error("characteristic not prime");
    if (static_cast<int>(poly.size()) != k + 1 || poly.back() != 1) throw Error("field polynomial must be monic of degree k");
    if (k > 1 && !detail::is_irreducible(poly, p)) throw Error("field polynomial is reducible");
    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->K = k;
    spec->poly = poly;
    return spec;
}

}  // namespace hilbert

#endif  // HILBERT_IO_HPP
