#include "kergm/graph_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace kergm {

using nlohmann::json;

namespace {

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_json(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

Eigen::MatrixXd parse_attr_matrix(const json& arr, const std::filesystem::path& path, const char* field,
                                  int expected_cols) {
    if (!arr.is_array()) throw ParseError(path.string() + ": \"" + field + "\" must be an array of arrays");
    if (static_cast<int>(arr.size()) != expected_cols)
        throw ParseError(path.string() + ": \"" + field + "\" has " + std::to_string(arr.size()) +
                         " entries, expected " + std::to_string(expected_cols));
    Eigen::MatrixXd m;
    for (int c = 0; c < expected_cols; ++c) {
        const json& row = arr[c];
        if (!row.is_array())
            throw ParseError(path.string() + ": \"" + field + "\" entry " + std::to_string(c) + " is not an array");
        if (c == 0) m.resize(static_cast<int>(row.size()), expected_cols);
        if (static_cast<int>(row.size()) != m.rows())
            throw ParseError(path.string() + ": \"" + field + "\" entry " + std::to_string(c) +
                             " has inconsistent length");
        for (int r = 0; r < m.rows(); ++r) {
            if (!row[r].is_number())
                throw ParseError(path.string() + ": \"" + field + "\" entry " + std::to_string(c) +
                                 " element " + std::to_string(r) + " is not a number");
            m(r, c) = row[r].get<double>();
        }
    }
    return m;
}

json attr_matrix_to_json(const Eigen::MatrixXd& m) {
    json arr = json::array();
    for (int c = 0; c < m.cols(); ++c) {
        json col = json::array();
        for (int r = 0; r < m.rows(); ++r) col.push_back(m(r, c));
        arr.push_back(std::move(col));
    }
    return arr;
}

void require_finite(const Eigen::MatrixXd& m, const char* what) {
    if (!m.allFinite()) throw std::invalid_argument(std::string("save_graph: non-finite ") + what);
}

} // namespace

AttributedGraph load_graph(const std::filesystem::path& path) {
    const json j = read_json(path);
    if (!j.is_object()) throw ParseError(path.string() + ": top level must be an object");
    for (const char* key : {"n", "edges", "edge_attrs"})
        if (!j.contains(key)) throw ParseError(path.string() + ": missing field \"" + key + "\"");

    AttributedGraph g;
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw ParseError(path.string() + ": \"n\" must be a non-negative integer");
    g.n = j["n"].get<int>();

    const json& edges = j["edges"];
    if (!edges.is_array()) throw ParseError(path.string() + ": \"edges\" must be an array");
    g.edges.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const json& pair = edges[e];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw ParseError(path.string() + ": edge " + std::to_string(e) + " must be a pair of integers");
        const int a = pair[0].get<int>();
        const int b = pair[1].get<int>();
        if (a < 0 || a >= g.n || b < 0 || b >= g.n)
            throw ParseError(path.string() + ": edge " + std::to_string(e) + " index out of range [0, " +
                             std::to_string(g.n) + ")");
        if (a == b) throw ParseError(path.string() + ": edge " + std::to_string(e) + " is a self-loop");
        if (a > b)
            throw ParseError(path.string() + ": edge " + std::to_string(e) + " must be stored with i < j");
        g.edges.push_back({a, b});
    }

    g.edge_attrs = parse_attr_matrix(j["edge_attrs"], path, "edge_attrs", g.num_edges());
    if (j.contains("node_attrs") && !j["node_attrs"].is_null())
        g.node_attrs = parse_attr_matrix(j["node_attrs"], path, "node_attrs", g.n);

    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return g;
}

void save_graph(const AttributedGraph& g, const std::filesystem::path& path) {
    g.validate();
    require_finite(g.edge_attrs, "edge attributes");
    require_finite(g.node_attrs, "node attributes");
    json j;
    j["n"] = g.n;
    j["node_attrs"] = g.has_node_attrs() ? attr_matrix_to_json(g.node_attrs) : json(nullptr);
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
    j["edges"] = std::move(edges);
    j["edge_attrs"] = attr_matrix_to_json(g.edge_attrs);
    write_json(j, path);
}

GroundTruth load_ground_truth(const std::filesystem::path& path) {
    const json j = read_json(path);
    if (!j.is_object() || !j.contains("mapping") || !j.contains("inlier_count"))
        throw ParseError(path.string() + ": expected {\"mapping\": [...], \"inlier_count\": int}");
    GroundTruth t;
    for (const json& v : j["mapping"]) {
        if (!v.is_number_integer()) throw ParseError(path.string() + ": mapping entries must be integers");
        t.mapping.push_back(v.get<int>());
    }
    t.inlier_count = j["inlier_count"].get<int>();
    try {
        t.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return t;
}

void save_ground_truth(const GroundTruth& t, const std::filesystem::path& path) {
    t.validate();
    json j;
    j["mapping"] = t.mapping;
    j["inlier_count"] = t.inlier_count;
    write_json(j, path);
}

} // namespace kergm
