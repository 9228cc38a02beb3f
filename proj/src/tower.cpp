#include "satgraph/tower.hpp"

#include <string>

#include "satgraph/errors.hpp"
#include "satgraph/product_graph.hpp"
#include "satgraph/saturation.hpp"
#include "satgraph/seeded_stream.hpp"

namespace satgraph {

Tower::Tower(std::size_t n, std::uint64_t seed, std::vector<GraphPtr> levels,
             std::vector<GraphMap> bonds, std::vector<std::uint32_t> per_level_m)
    : n_(n), seed_(seed), levels_(std::move(levels)), bonds_(std::move(bonds)),
      per_level_m_(std::move(per_level_m)) {
    if (n_ == 0) throw ContractViolation("tower saturation order must be at least 1");
    if (levels_.empty()) throw ContractViolation("tower needs at least one level");
    if (bonds_.size() + 1 != levels_.size() || per_level_m_.size() + 1 != levels_.size()) {
        throw ContractViolation("tower with " + std::to_string(levels_.size()) + " levels needs " +
                                std::to_string(levels_.size() - 1) + " bonds and m values");
    }
    for (std::size_t d = 0; d < bonds_.size(); ++d) {
        const bool source_ok =
            bonds_[d].source_ptr() == levels_[d + 1] || bonds_[d].source() == *levels_[d + 1];
        const bool target_ok =
            bonds_[d].target_ptr() == levels_[d] || bonds_[d].target() == *levels_[d];
        if (!source_ok || !target_ok) {
            throw ContractViolation("bond " + std::to_string(d) + " does not map level " +
                                    std::to_string(d + 1) + " to level " + std::to_string(d));
        }
    }
}

Tower new_tower(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ContractViolation("tower saturation order must be at least 1");
    auto root = std::make_shared<const FiniteGraph>(FiniteGraph::complete(n));
    return Tower(n, seed, {root}, {}, {});
}

std::uint64_t level_seed(std::uint64_t tower_seed, std::size_t d) {
    return derive_seed(tower_seed, d);
}

Tower extend_tower(const Tower& t, const ExtendOptions& options) {
    BuildParams params;
    params.n = t.n();
    params.base = t.level_ptr(t.depth());
    params.m = options.m_override;
    params.seed = level_seed(t.seed(), t.depth());
    params.mode = options.mode;
    params.max_attempts = options.max_attempts;
    Extension ext = build_extension(params);

    auto levels = t.levels();
    auto bonds = t.bonds();
    auto ms = t.per_level_m();
    levels.push_back(ext.graph);
    bonds.push_back(std::move(ext.projection));
    ms.push_back(ext.m);
    return Tower(t.n(), t.seed(), std::move(levels), std::move(bonds), std::move(ms));
}

namespace {

TowerReport failure(std::string invariant, std::size_t level, std::string detail) {
    return {false, std::move(invariant), level, std::move(detail)};
}

std::string describe_type(const TypeSpec& f) {
    std::string out = "{";
    for (const auto& [a, bit] : f.entries()) {
        if (out.size() > 1) out += ", ";
        out += std::to_string(a) + "->" + (bit ? "1" : "0");
    }
    return out + "}";
}

std::string describe_lift(const ConditionBReport::Counterexample& cx) {
    std::string out = "no common neighbor over vertex " + std::to_string(cx.base_vertex) + " for {";
    for (std::size_t i = 0; i < cx.targets.size(); ++i) {
        if (i != 0) out += ", ";
        out += std::to_string(cx.targets[i]);
    }
    return out + "}";
}

}  // namespace

TowerReport verify_tower(const Tower& t, const VerifyOptions& options) {
    if (!(t.level(0) == FiniteGraph::complete(t.n()))) {
        return failure("root_complete", 0, "level 0 is not the complete graph on n vertices");
    }
    for (std::size_t d = 0; d < t.depth(); ++d) {
        const FiniteGraph& lower = t.level(d);
        const FiniteGraph& upper = t.level(d + 1);
        const GraphMap& bond = t.bond(d);
        const std::uint32_t m = t.per_level_m()[d];
        const std::size_t lvl = d + 1;

        if (m == 0 || upper.vertex_count() != lower.vertex_count() * (std::size_t{m} + 1)) {
            return failure("product_encoding", lvl,
                           "level size " + std::to_string(upper.vertex_count()) +
                               " does not match " + std::to_string(lower.vertex_count()) +
                               " * (m + 1) with m = " + std::to_string(m));
        }
        if (!is_surjective(bond)) return failure("bond_surjective", lvl, "bond misses a vertex");
        if (!is_homomorphism(bond)) {
            return failure("bond_homomorphism", lvl, "bond sends an edge to a non-edge");
        }
        if (!is_strict(bond)) {
            return failure("bond_strict", lvl, "a lower edge has no preimage edge");
        }
        const auto sat = is_n_saturated(upper, t.n());
        if (!sat.holds) {
            return failure("level_saturation", lvl,
                           "type " + describe_type(*sat.counterexample) + " has no realizer");
        }
        const auto lift = check_lifting_property(bond, t.n());
        if (!lift.holds) return failure("bond_lifting", lvl, describe_lift(*lift.counterexample));
        for (Vertex v = 0; v < lower.vertex_count(); ++v) {
            if (bond.fiber(v).size() < 2) {
                return failure("one_step_splitting", lvl,
                               "vertex " + std::to_string(v) + " of level " + std::to_string(d) +
                                   " has fewer than two preimages");
            }
        }
        if (options.check_provenance) {
            const ProductEncoding enc(lower.vertex_count(), m);
            for (Vertex v = 0; v < upper.vertex_count(); ++v) {
                if (bond(v) != enc.decode(v).base) {
                    return failure("seeded_provenance", lvl,
                                   "bond is not the product projection at vertex " +
                                       std::to_string(v));
                }
            }
            const std::uint64_t seed = level_seed(t.seed(), d);
            // The level must be the first attempt the builder would accept.
            bool matched = false;
            for (std::size_t a = 0; a < options.provenance_attempts && !matched; ++a) {
                const std::uint64_t key = attempt_key(seed, a);
                matched = matches_product_sample(lower, m, key, upper);
                if (matched) break;
                const auto earlier = sample_product_graph(t.level_ptr(d), m, key);
                if (is_n_saturated(*earlier.graph, t.n()).holds &&
                    check_condition_b(*earlier.graph, lower, m, t.n()).holds) {
                    return failure("seeded_provenance", lvl,
                                   "attempt " + std::to_string(a) +
                                       " would have been accepted before this level");
                }
            }
            if (!matched) {
                return failure("seeded_provenance", lvl,
                               "level is not a seeded sample of the construction");
            }
        }
    }
    return {};
}

bool is_bond_consistent(const Tower& t, const ThreadPrefix& a) {
    if (a.entries.empty() || a.depth() > t.depth()) return false;
    for (std::size_t d = 0; d < a.entries.size(); ++d) {
        if (a.entries[d] >= t.level(d).vertex_count()) return false;
    }
    for (std::size_t d = 0; d < a.depth(); ++d) {
        if (t.bond(d)(a.entries[d + 1]) != a.entries[d]) return false;
    }
    return true;
}

ThreadPrefix canonical_extension(const Tower& t, const ThreadPrefix& prefix,
                                 std::size_t target_depth) {
    if (target_depth > t.depth()) {
        throw ContractViolation("target depth " + std::to_string(target_depth) +
                                " exceeds tower depth " + std::to_string(t.depth()));
    }
    if (!is_bond_consistent(t, prefix)) {
        throw ContractViolation("thread prefix is not consistent with the tower's bonds");
    }
    ThreadPrefix out = prefix;
    while (out.depth() < target_depth) {
        const auto f = t.bond(out.depth()).fiber(out.entries.back());
        out.entries.push_back(f.front());  // (i, 0): the smallest preimage
    }
    return out;
}

ThreadPrefix canonical_thread(const Tower& t, std::size_t level, Vertex vertex, std::size_t depth) {
    if (level > t.depth() || vertex >= t.level(level).vertex_count()) {
        throw ContractViolation("no vertex " + std::to_string(vertex) + " at level " +
                                std::to_string(level));
    }
    if (depth < level) throw ContractViolation("thread depth is below the anchor level");
    ThreadPrefix out;
    out.entries.assign(level + 1, 0);
    out.entries[level] = vertex;
    for (std::size_t d = level; d > 0; --d) out.entries[d - 1] = t.bond(d - 1)(out.entries[d]);
    return canonical_extension(t, out, depth);
}

AdjacencyStatus adjacency_status(const Tower& t, const ThreadPrefix& a, const ThreadPrefix& b,
                                 std::size_t depth) {
    if (a.entries.size() <= depth || b.entries.size() <= depth || depth > t.depth()) {
        throw ContractViolation("adjacency depth " + std::to_string(depth) +
                                " exceeds a prefix or the tower");
    }
    for (std::size_t d = 0; d <= depth; ++d) {
        if (!t.level(d).adjacent(a.entries[d], b.entries[d])) {
            return {AdjacencyStatus::Kind::kSeparatedNonAdjacent, d};
        }
    }
    return {AdjacencyStatus::Kind::kAdjacentThroughDepth, depth};
}

}  // namespace satgraph
