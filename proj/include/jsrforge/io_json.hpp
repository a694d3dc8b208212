#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jsrforge/certify.hpp"
#include "jsrforge/mat2.hpp"
#include "jsrforge/word.hpp"

namespace jsrforge {

using nlohmann::json;

inline json to_json(const Mat2& m) {
    return json::array({json::array({m.a11, m.a12}), json::array({m.a21, m.a22})});
}

inline Mat2 mat2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw std::invalid_argument("matrix JSON must be [[a11,a12],[a21,a22]]");
    return Mat2{j[0][0].get<double>(), j[0][1].get<double>(), j[1][0].get<double>(),
                j[1][1].get<double>()};
}

inline json to_json(const Tuple5& t) {
    return json{{"x", t.x}, {"y", t.y}, {"z", t.z}, {"u", t.u}, {"v", t.v}};
}

inline Tuple5 tuple5_from_json(const json& j) {
    return Tuple5{j.at("x").get<double>(), j.at("y").get<double>(), j.at("z").get<double>(),
                  j.at("u").get<double>(), j.at("v").get<double>()};
}

struct MatrixPair {
    Mat2 A, B;
};

inline json to_json(const MatrixPair& p) { return json{{"A", to_json(p.A)}, {"B", to_json(p.B)}}; }

inline MatrixPair pair_from_json(const json& j) {
    return MatrixPair{mat2_from_json(j.at("A")), mat2_from_json(j.at("B"))};
}

inline std::string edge_label(const GraphEdge& e) {
    std::string s = e.sign < 0 ? "-" : "+";
    s += (e.gen == 'a') ? 'A' : 'B';
    return s;
}

inline GraphEdge edge_from_label(int from, const std::string& label, int to) {
    if (label.size() != 2 || (label[0] != '+' && label[0] != '-') ||
        (label[1] != 'A' && label[1] != 'B'))
        throw std::invalid_argument("edge label must be one of +A, -A, +B, -B");
    return GraphEdge{from, label[1] == 'A' ? 'a' : 'b', label[0] == '-' ? -1 : 1, to};
}

inline json to_json(const Certificate& cert) {
    json j;
    j["verdict"] = to_string(cert.verdict);
    if (!cert.reason.empty()) j["reason"] = cert.reason;
    j["input"] = {{"A", to_json(cert.input_A)}, {"B", to_json(cert.input_B)}};
    j["rescale_factor"] = cert.rescale_factor;
    j["jsr"] = cert.jsr;
    json words = json::array();
    for (const Word& w : cert.smp_words) words.push_back(w.str());
    j["smp"] = words;
    if (!cert.certified()) return j;

    j["rescaled"] = {{"A", to_json(cert.A)}, {"B", to_json(cert.B)}};
    j["balancing_ratios"] = cert.ratios;
    json verts = json::array();
    for (const Vec2& v : cert.polygon.vertices()) verts.push_back(json::array({v.x, v.y}));
    j["vertices"] = verts;
    j["vertex_reps"] = cert.ccw_rep;
    j["vertex_signs"] = cert.ccw_sign;
    json edges = json::array();
    for (const GraphEdge& e : cert.graph.edges)
        edges.push_back(json{{"from", e.from}, {"label", edge_label(e)}, {"to", e.to}});
    j["graph"] = edges;
    j["seeds"] = cert.seeds;
    j["min_interior_margin"] = cert.min_interior_margin;
    j["max_interior_angle_deg"] = cert.max_interior_angle_deg;
    return j;
}

inline Certificate certificate_from_json(const json& j) {
    Certificate cert;
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "certified-unique-pair")
        cert.verdict = Verdict::certified_unique_pair;
    else if (verdict == "certified")
        cert.verdict = Verdict::certified;
    else
        cert.verdict = Verdict::failed;
    if (j.contains("reason")) cert.reason = j["reason"].get<std::string>();
    cert.input_A = mat2_from_json(j.at("input").at("A"));
    cert.input_B = mat2_from_json(j.at("input").at("B"));
    cert.rescale_factor = j.at("rescale_factor").get<double>();
    cert.jsr = j.at("jsr").get<double>();
    for (const auto& w : j.at("smp")) cert.smp_words.push_back(Word(w.get<std::string>()));
    if (!cert.certified()) return cert;

    cert.A = mat2_from_json(j.at("rescaled").at("A"));
    cert.B = mat2_from_json(j.at("rescaled").at("B"));
    cert.ratios = j.at("balancing_ratios").get<std::vector<double>>();
    std::vector<Vec2> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(Vec2{v[0].get<double>(), v[1].get<double>()});
    cert.polygon = SymmetricPolygon(std::move(verts));
    cert.ccw_rep = j.at("vertex_reps").get<std::vector<int>>();
    cert.ccw_sign = j.at("vertex_signs").get<std::vector<int>>();
    const std::size_t n = cert.polygon.size();
    cert.reps.assign(n / 2, Vec2{});
    for (std::size_t i = 0; i < n; ++i) {
        const int rep = cert.ccw_rep[i];
        const double s = cert.ccw_sign[i];
        cert.reps[static_cast<std::size_t>(rep)] = s * cert.polygon[i];
    }
    cert.graph.nodes = static_cast<int>(cert.reps.size());
    for (const auto& e : j.at("graph"))
        cert.graph.edges.push_back(edge_from_label(e.at("from").get<int>(),
                                                   e.at("label").get<std::string>(),
                                                   e.at("to").get<int>()));
    cert.seeds = j.at("seeds").get<std::vector<int>>();
    cert.min_interior_margin = j.at("min_interior_margin").get<double>();
    cert.max_interior_angle_deg = j.at("max_interior_angle_deg").get<double>();
    return cert;
}

}  // namespace jsrforge
