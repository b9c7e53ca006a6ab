#include "fsgraph/fs.hpp"

#include <sstream>

#include "json.hpp"

namespace fsg {

Configuration apply_swap(const FsContext& ctx, const Configuration& c, int a, int b) {
    if (!ctx.X.has_edge(a, b)) {
        std::ostringstream os;
        os << "{" << a << "," << b << "} is not an edge of X";
        throw input_error(os.str());
    }
    if (!ctx.Y.has_edge(c.map[a], c.map[b])) {
        std::ostringstream os;
        os << "unfriendly pair: {" << c.map[a] << "," << c.map[b] << "} is not an edge of Y";
        throw input_error(os.str());
    }
    Configuration out = c;
    std::swap(out.map[a], out.map[b]);
    return out;
}

std::vector<Configuration> neighbors(const FsContext& ctx, const Configuration& c) {
    std::vector<Configuration> out;
    for (auto [a, b] : ctx.X.edges()) {
        if (ctx.Y.has_edge(c.map[a], c.map[b])) {
            Configuration t = c;
            std::swap(t.map[a], t.map[b]);
            out.push_back(std::move(t));
        }
    }
    return out;
}

int friendly_degree(const FsContext& ctx, const Configuration& c) {
    int d = 0;
    for (auto [a, b] : ctx.X.edges())
        if (ctx.Y.has_edge(c.map[a], c.map[b])) ++d;
    return d;
}

std::vector<Edge> friendly_edges(const FsContext& ctx, const Configuration& c) {
    std::vector<Edge> out;
    for (auto [a, b] : ctx.X.edges())
        if (ctx.Y.has_edge(c.map[a], c.map[b])) out.push_back({a, b});
    return out;
}

uint64_t fs_edge_count(const FsContext& ctx) {
    int n = ctx.n();
    if (n - 2 > 20) throw input_error("fs_edge_count: (n-2)! exceeds 64-bit range");
    uint64_t f = n >= 2 ? factorial(n - 2) : 1;
    auto ex = static_cast<uint64_t>(ctx.X.edge_count());
    auto ey = static_cast<uint64_t>(ctx.Y.edge_count());
    if (ex != 0 && ey != 0) {
        uint64_t limit = UINT64_MAX;
        if (ex > limit / ey || ex * ey > limit / (f == 0 ? 1 : f))
            throw input_error("fs_edge_count overflow");
    }
    return ex * ey * f;
}

Configuration validate_sequence(const FsContext& ctx, const SwapSequence& seq) {
    if (seq.start.size() != ctx.n())
        throw input_error("sequence start has wrong length");
    if (!seq.start.is_permutation())
        throw input_error("sequence start is not a permutation");
    Configuration cur = seq.start;
    for (std::size_t i = 0; i < seq.swaps.size(); ++i) {
        auto [a, b] = seq.swaps[i];
        if (!ctx.X.has_edge(a, b)) {
            std::ostringstream os;
            os << "swap " << i << ": {" << a << "," << b << "} not an edge of X";
            throw input_error(os.str());
        }
        if (!ctx.Y.has_edge(cur.map[a], cur.map[b])) {
            std::ostringstream os;
            os << "swap " << i << ": unfriendly pair {" << cur.map[a] << "," << cur.map[b]
               << "}";
            throw input_error(os.str());
        }
        std::swap(cur.map[a], cur.map[b]);
    }
    return cur;
}

std::string swap_sequence_json(const SwapSequence& seq) {
    nlohmann::json j;
    j["start"] = seq.start.map;
    j["swaps"] = nlohmann::json::array();
    for (auto [a, b] : seq.swaps) j["swaps"].push_back({a, b});
    return j.dump();
}

SwapSequence swap_sequence_from_json(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("swap sequence json: ") + e.what());
    }
    SwapSequence seq;
    for (const auto& v : j.at("start")) seq.start.map.push_back(v.get<uint16_t>());
    for (const auto& e : j.at("swaps")) seq.swaps.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return seq;
}

}  // namespace fsg
