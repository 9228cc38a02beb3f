#include <cstdint>

#include "satgraph/errors.hpp"
#include "satgraph/saturation.hpp"

namespace satgraph {

// Deliberately naive: bitmask subsets, nested loops, adjacency lookups only.
bool oracle_is_n_saturated(const FiniteGraph& g, std::size_t n) {
    if (n == 0) throw ContractViolation("saturation order must be at least 1");
    const std::size_t v_count = g.vertex_count();
    if (v_count > 24) throw ContractViolation("oracle is limited to graphs with at most 24 vertices");

    const std::uint64_t subsets = std::uint64_t{1} << v_count;
    for (std::uint64_t set = 0; set < subsets; ++set) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < v_count; ++v) {
            if ((set >> v) & 1U) members.push_back(v);
        }
        if (members.size() >= n) continue;

        const std::uint64_t types = std::uint64_t{1} << members.size();
        for (std::uint64_t f = 0; f < types; ++f) {
            bool realized = false;
            for (Vertex x = 0; x < v_count && !realized; ++x) {
                if ((set >> x) & 1U) continue;
                bool ok = true;
                for (std::size_t t = 0; t < members.size(); ++t) {
                    const bool want = ((f >> t) & 1U) != 0;
                    if (g.adjacent(x, members[t]) != want) {
                        ok = false;
                        break;
                    }
                }
                realized = ok;
            }
            if (!realized) return false;
        }
    }
    return true;
}

}  // namespace satgraph
