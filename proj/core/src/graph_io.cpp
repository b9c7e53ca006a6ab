#include "fsgraph/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace fsg {

SimpleGraph read_graph_text(std::istream& in) {
    int n;
    if (!(in >> n)) throw input_error("graph text: missing vertex count");
    std::vector<Edge> edges;
    int u, v;
    while (in >> u >> v) edges.push_back({u, v});
    return SimpleGraph(n, edges);
}

void write_graph_text(std::ostream& out, const SimpleGraph& g) {
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

SimpleGraph read_graph_json(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("graph json: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("edges")) throw input_error("graph json: need n and edges");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw input_error("graph json: bad edge");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return SimpleGraph(j["n"].get<int>(), edges);
}

std::string write_graph_json(const SimpleGraph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

void write_graph_dot(std::ostream& out, const SimpleGraph& g, const std::string& name) {
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

SimpleGraph load_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        auto fam = family_from_string(spec.substr(0, colon));
        if (fam) {
            std::vector<int> params;
            std::stringstream ss(spec.substr(colon + 1));
            std::string tok;
            while (std::getline(ss, tok, ':')) {
                try {
                    params.push_back(std::stoi(tok));
                } catch (...) {
                    throw input_error("bad family parameter in '" + spec + "'");
                }
            }
            return make_named(*fam, params);
        }
    }
    std::ifstream in(spec);
    if (!in) throw input_error("cannot open graph file '" + spec + "'");
    std::stringstream content;
    content << in.rdbuf();
    std::string text = content.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return read_graph_json(text);
    std::istringstream ts(text);
    return read_graph_text(ts);
}

}  // namespace fsg
