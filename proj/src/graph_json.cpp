#include <algorithm>

#include <json.hpp>

#include "gamma2/errors.hpp"
#include "gamma2/graph.hpp"
#include "gamma2/json_writer.hpp"

namespace g2 {

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("graph json: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("graph json: expected object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer())
        throw InputError("graph json: \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (!j["edges"].is_array())
        throw InputError("graph json: \"edges\" must be an array");

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InputError("graph json: each edge must be [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw InputError("graph json: \"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InputError("graph json: duplicate edge");
    return Graph(n, edges, std::move(name));
}

std::string serialize_graph_json(const Graph& g) {
    JsonWriter w;
    w.begin_object();
    w.field("n", g.vertex_count());
    w.key("edges").begin_array();
    for (auto [u, v] : g.edges()) {
        w.begin_array().value(u).value(v).end_array();
    }
    w.end_array();
    w.field("name", g.name());
    w.end_object();
    return w.str();
}

} // namespace g2
