// Copyright 2026 The hqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hqc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hqc/error.hpp"

namespace hqc {

using nlohmann::json;

namespace {

json complex_to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

double number_at(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
        throw Error(ErrorKind::ParseError, std::string("expected a number under \"") + key + "\"");
    }
    return j.at(key).get<double>();
}

template <int N>
Eigen::Matrix<cplx, N, N> complex_matrix_from_json(const json &rows, const char *what) {
    if (!rows.is_array() || rows.size() != N) {
        throw Error(ErrorKind::ParseError, std::string(what) + " must have " + std::to_string(N) + " rows");
    }
    Eigen::Matrix<cplx, N, N> m;
    for (int i = 0; i < N; ++i) {
        const json &row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != N) {
            throw Error(ErrorKind::ParseError, std::string(what) + " rows must have " + std::to_string(N) + " entries");
        }
        for (int j = 0; j < N; ++j) {
            const json &z = row[static_cast<std::size_t>(j)];
            m(i, j) = cplx(number_at(z, "re"), number_at(z, "im"));
        }
    }
    return m;
}

template <class Derived>
json real_matrix_to_json(const Eigen::MatrixBase<Derived> &m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(row);
    }
    return rows;
}

json vec_to_json(const Vec3 &v) { return json::array({v(0), v(1), v(2)}); }

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json state_to_json(const DensityMatrix &rho) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) {
            row.push_back(complex_to_json(rho(i, j)));
        }
        rows.push_back(row);
    }
    return json{{"dim", {2, 2}}, {"matrix", rows}};
}

DensityMatrix state_from_json(const json &j, double tol) {
    if (!j.is_object()) {
        throw Error(ErrorKind::ParseError, "state must be a JSON object");
    }
    if (!j.contains("dim") || j.at("dim") != json::array({2, 2})) {
        throw Error(ErrorKind::ParseError, "state \"dim\" must be [2,2]");
    }
    if (!j.contains("matrix")) {
        throw Error(ErrorKind::ParseError, "state needs a \"matrix\"");
    }
    return DensityMatrix::validate(complex_matrix_from_json<4>(j.at("matrix"), "matrix"), tol);
}

std::string r_to_csv(const RMatrix &r) {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            os << format_double(r(i, j)) << (j == 3 ? '\n' : ',');
        }
    }
    return os.str();
}

RMatrix r_from_csv(std::string_view text) {
    Mat4 r;
    std::istringstream in{std::string(text)};
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        if (row == 4) {
            throw Error(ErrorKind::ParseError, "R matrix CSV has more than 4 rows");
        }
        std::istringstream cells(line);
        std::string cell;
        int col = 0;
        while (std::getline(cells, cell, ',')) {
            if (col == 4) {
                throw Error(ErrorKind::ParseError, "R matrix CSV row has more than 4 values");
            }
            try {
                std::size_t used = 0;
                r(row, col) = std::stod(cell, &used);
                if (cell.find_first_not_of(" \t", used) != std::string::npos) {
                    throw std::invalid_argument(cell);
                }
            } catch (const std::logic_error &) {
                throw Error(ErrorKind::ParseError, "not a number in R matrix CSV: '" + cell + "'");
            }
            ++col;
        }
        if (col != 4) {
            throw Error(ErrorKind::ParseError, "R matrix CSV rows need exactly 4 values");
        }
        ++row;
    }
    if (row != 4) {
        throw Error(ErrorKind::ParseError, "R matrix CSV needs exactly 4 rows");
    }
    return RMatrix(r);
}

json filter_to_json(const LocalFilter &f) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) {
        rows.push_back(json::array({complex_to_json(f.matrix()(i, 0)), complex_to_json(f.matrix()(i, 1))}));
    }
    return json{{"f", rows}};
}

LocalFilter filter_from_json(const json &j) {
    if (!j.is_object() || !j.contains("f")) {
        throw Error(ErrorKind::ParseError, "filter needs an \"f\" entry");
    }
    return LocalFilter::normalized(complex_matrix_from_json<2>(j.at("f"), "f"));
}

json ellipsoid_to_json(const SteeringEllipsoid &e) {
    return json{{"party", std::string(to_string(e.party))},
                {"centre", vec_to_json(e.centre)},
                {"centre_magnitude", centre_magnitude(e)},
                {"q", real_matrix_to_json(e.q)},
                {"semiaxes", vec_to_json(e.semiaxes)},
                {"degenerate", e.degenerate}};
}

json report_to_json(const InaccessibilityReport &rep) {
    json flags = json::array();
    for (Flag f : rep.flags) {
        flags.push_back(std::string(to_string(f)));
    }
    json j{{"b", rep.b},
           {"f3", rep.f3},
           {"hb_star", rep.hb_star},
           {"hf3_star", rep.hf3_star},
           {"c_a", rep.c_a},
           {"c_b", rep.c_b},
           {"entangled", rep.entangled},
           {"ppt_min_eigenvalue", rep.ppt_min_eigenvalue},
           {"flags", flags},
           {"conjecture_conditional", rep.conjecture_conditional},
           {"counterexample", rep.counterexample},
           {"thresholds", {{"c_chsh", rep.thresholds.c_chsh}, {"c_f3", rep.thresholds.c_f3}}},
           {"ellipsoid_A", ellipsoid_to_json(rep.ellipsoid_a)},
           {"ellipsoid_B", ellipsoid_to_json(rep.ellipsoid_b)},
           {"notes",
            json::array({"Inaccessibility flags hold modulo the conjectured bound of CHSH/F3 violation by the "
                         "steering-ellipsoid centre magnitude.",
                         "CHSH is normalised to a classical bound of 1 and a quantum maximum of sqrt(2); "
                         "'maximal hidden CHSH' means hb_star = sqrt(2) (the value 2 in the unnormalised "
                         "convention). F3 maximum is sqrt(3)."})}};
    if (rep.ellipsoid_a.degenerate || rep.ellipsoid_b.degenerate) {
        j["notes"].push_back(
            "A steering party has a pure reduced state; its partner's ellipsoid is the single point given by "
            "that partner's Bloch vector, and certificates use that point as the centre.");
    }
    if (rep.normal_form_error) {
        j["normal_form_error"] = *rep.normal_form_error;
    }
    if (rep.witnesses) {
        j["one_sided"] = {{"hb_a", rep.witnesses->hb_a},
                          {"hb_b", rep.witnesses->hb_b},
                          {"hf3_a", rep.witnesses->hf3_a},
                          {"hf3_b", rep.witnesses->hf3_b}};
    }
    return j;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view contents) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
    out << contents;
    if (!out) {
        throw Error(ErrorKind::IoError, "write failed for " + path.string());
    }
}

}  // namespace hqc
