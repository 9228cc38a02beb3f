#include "satgraph/serialization.hpp"

#include <fstream>
#include <sstream>

#include "satgraph/errors.hpp"
#include "satgraph/product_graph.hpp"

namespace satgraph {

namespace {

std::uint64_t require_uint(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        throw MalformedInput(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object()) throw MalformedInput("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw MalformedInput(std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& require_array(const Json& j, const char* key) {
    const Json& a = require_field(j, key);
    if (!a.is_array()) throw MalformedInput(std::string("field \"") + key + "\" must be an array");
    return a;
}

}  // namespace

Json graph_to_json(const FiniteGraph& g) {
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    Json out;
    out["v"] = g.vertex_count();
    out["edges"] = std::move(edges);
    return out;
}

FiniteGraph graph_from_json(const Json& j) {
    const std::uint64_t v = require_uint(require_field(j, "v"), "\"v\"");
    if (v == 0 || v > std::numeric_limits<Vertex>::max()) {
        throw MalformedInput("\"v\" must be a positive vertex count");
    }
    GraphBuilder builder(v);
    for (const Json& e : require_array(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw MalformedInput("edge must be a pair [a, b]");
        const std::uint64_t a = require_uint(e[0], "edge endpoint");
        const std::uint64_t b = require_uint(e[1], "edge endpoint");
        if (a >= b || b >= v) {
            throw MalformedInput("edge [" + std::to_string(a) + ", " + std::to_string(b) +
                                 "] must satisfy a < b < v");
        }
        builder.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    return std::move(builder).build();
}

Json parent_array_to_json(const GraphMap& h) {
    Json out = Json::array();
    for (Vertex p : h.image()) out.push_back(p);
    return out;
}

GraphMap parent_array_from_json(const Json& j, GraphPtr source, GraphPtr target) {
    if (!j.is_array()) throw MalformedInput("parent array must be a JSON array");
    std::vector<Vertex> image;
    image.reserve(j.size());
    for (const Json& e : j) {
        const std::uint64_t p = require_uint(e, "parent entry");
        if (p >= target->vertex_count()) throw MalformedInput("parent entry out of range");
        image.push_back(static_cast<Vertex>(p));
    }
    if (image.size() != source->vertex_count()) {
        throw MalformedInput("parent array length " + std::to_string(image.size()) +
                             " does not match " + std::to_string(source->vertex_count()) +
                             " source vertices");
    }
    return GraphMap(std::move(source), std::move(target), std::move(image));
}

Json tower_to_json(const Tower& t) {
    Json out;
    out["n"] = t.n();
    out["seed"] = t.seed();
    Json levels = Json::array();
    for (const auto& g : t.levels()) levels.push_back(graph_to_json(*g));
    out["levels"] = std::move(levels);
    Json bonds = Json::array();
    for (const auto& b : t.bonds()) bonds.push_back(parent_array_to_json(b));
    out["bonds"] = std::move(bonds);
    Json ms = Json::array();
    for (auto m : t.per_level_m()) ms.push_back(m);
    out["per_level_m"] = std::move(ms);
    return out;
}

Tower tower_from_json(const Json& j) {
    try {
        const std::uint64_t n = require_uint(require_field(j, "n"), "\"n\"");
        if (n == 0) throw MalformedInput("\"n\" must be at least 1");
        const std::uint64_t seed = require_uint(require_field(j, "seed"), "\"seed\"");
        const Json& levels_json = require_array(j, "levels");
        const Json& bonds_json = require_array(j, "bonds");
        const Json& ms_json = require_array(j, "per_level_m");
        if (levels_json.empty()) throw MalformedInput("tower needs at least one level");
        if (bonds_json.size() + 1 != levels_json.size() ||
            ms_json.size() + 1 != levels_json.size()) {
            throw MalformedInput("bonds and per_level_m must have one entry per level above 0");
        }
        std::vector<GraphPtr> levels;
        for (const Json& g : levels_json) {
            levels.push_back(std::make_shared<const FiniteGraph>(graph_from_json(g)));
        }
        std::vector<GraphMap> bonds;
        for (std::size_t d = 0; d < bonds_json.size(); ++d) {
            bonds.push_back(parent_array_from_json(bonds_json[d], levels[d + 1], levels[d]));
        }
        std::vector<std::uint32_t> ms;
        for (const Json& m : ms_json) {
            const std::uint64_t value = require_uint(m, "per_level_m entry");
            if (value > std::numeric_limits<std::uint32_t>::max()) {
                throw MalformedInput("per_level_m entry too large");
            }
            ms.push_back(static_cast<std::uint32_t>(value));
        }
        return Tower(n, seed, std::move(levels), std::move(bonds), std::move(ms));
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("tower JSON: ") + e.what());
    } catch (const ContractViolation& e) {
        throw MalformedInput(std::string("tower JSON: ") + e.what());
    }
}

std::string encode_tower(const Tower& t) {
    return tower_to_json(t).dump() + "\n";
}

Tower decode_tower(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedInput(std::string("not valid JSON: ") + e.what());
    }
    return tower_from_json(j);
}

void save_tower(const Tower& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << encode_tower(t);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

Tower load_tower(const std::filesystem::path& path, bool verify) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    Tower t = decode_tower(buffer.str());
    if (verify) {
        const auto report = verify_tower(t);
        if (!report.ok) {
            throw InvariantViolation(report.invariant + " violated at level " +
                                     std::to_string(report.level.value_or(0)) + ": " +
                                     report.detail);
        }
    }
    return t;
}

std::string export_dot(const Tower& t, std::size_t level) {
    if (level > t.depth()) {
        throw ContractViolation("level " + std::to_string(level) + " exceeds tower depth " +
                                std::to_string(t.depth()));
    }
    const FiniteGraph& g = t.level(level);
    std::ostringstream out;
    out << "graph level_" << level << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"";
        if (level == 0) {
            out << v;
        } else {
            const ProductEncoding enc(t.level(level - 1).vertex_count(), t.per_level_m()[level - 1]);
            const auto pv = enc.decode(v);
            out << '(' << pv.base << ',' << pv.copy << ')';
        }
        out << "\"];\n";
    }
    for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace satgraph
