#include "ehz/json_io.hpp"

#include <json.hpp>

namespace ehz {

using nlohmann::json;

std::string polytope_to_json(const LatticePolytope& P) {
    json j;
    j["vertices"] = json::array();
    for (auto& v : P.vertices) {
        json row = json::array();
        for (auto& c : v) row.push_back(c.get_str());
        j["vertices"].push_back(row);
    }
    return j.dump();
}

namespace {

Int int_from_json(const json& v) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw std::invalid_argument("expected integer or integer string");
}

} // namespace

namespace {

json parse_or_invalid(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

LatticePolytope polytope_from_json(const std::string& text) {
    json j = parse_or_invalid(text);
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("polytope JSON: missing \"vertices\" array");
    std::vector<std::vector<Int>> verts;
    for (auto& row : j["vertices"]) {
        std::vector<Int> v;
        for (auto& c : row) v.push_back(int_from_json(c));
        verts.push_back(std::move(v));
    }
    return make_polytope(std::move(verts));
}

std::string plattice_to_json(const PLattice& L) {
    json j;
    j["n"] = L.n;
    j["p"] = L.p.get_str();
    j["basis"] = json::array();
    for (int i = 0; i < L.n; ++i) {
        json row = json::array();
        for (int c = 0; c < L.n; ++c) row.push_back(L.basis.at(i, c).get_str());
        j["basis"].push_back(row);
    }
    j["delta"] = L.delta;
    j["nu"] = L.nu;
    j["mu"] = L.mu;
    j["denominator_exp"] = L.denominator_exp;
    return j.dump();
}

std::string unipoly_to_json_coeffs(const UniPoly& f) {
    json j = json::array();
    for (long k = 0; k <= f.degree(); ++k) j.push_back(f.coeff(k).str());
    if (f.is_zero()) j.push_back("0");
    return j.dump();
}

std::string matrix_to_json(const IntMatrix& m) {
    json j = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).get_str());
        j.push_back(row);
    }
    return j.dump();
}

IntMatrix matrix_from_json(const std::string& text) {
    json j = parse_or_invalid(text);
    if (j.is_object() && j.contains("matrix")) j = j["matrix"];
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON: expected array of rows");
    std::vector<std::vector<Int>> rows;
    for (auto& row : j) {
        std::vector<Int> r;
        for (auto& c : row) r.push_back(int_from_json(c));
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

} // namespace ehz
