#ifndef SATGRAPH_GRAPH_MAP_HPP
#define SATGRAPH_GRAPH_MAP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "satgraph/finite_graph.hpp"

namespace satgraph {

using GraphPtr = std::shared_ptr<const FiniteGraph>;

/**
 * Total vertex map between two finite graphs.
 *
 * Fibers (preimage sets) are indexed at construction. A fiber that happens to
 * be a contiguous index range is flagged so neighbor rows can be sliced a word
 * at a time instead of bit by bit.
 */
class GraphMap {
public:
    /// Throws ContractViolation when the image has the wrong length or
    /// points outside the target.
    GraphMap(GraphPtr source, GraphPtr target, std::vector<Vertex> image);

    static GraphMap identity(GraphPtr g);

    const FiniteGraph& source() const noexcept { return *source_; }
    const FiniteGraph& target() const noexcept { return *target_; }
    const GraphPtr& source_ptr() const noexcept { return source_; }
    const GraphPtr& target_ptr() const noexcept { return target_; }

    Vertex operator()(Vertex v) const noexcept { return image_[v]; }
    std::span<const Vertex> image() const noexcept { return image_; }

    /// Sorted preimage of a target vertex.
    std::span<const Vertex> fiber(Vertex t) const noexcept {
        return {fiber_members_.data() + fiber_offsets_[t],
                fiber_offsets_[t + 1] - fiber_offsets_[t]};
    }

    bool fiber_is_contiguous(Vertex t) const noexcept { return contiguous_[t] != 0; }

    /// Fills `out` (words_for(|fiber(t)|) words) with bit l set iff `w` is
    /// adjacent in the source to the l-th member of fiber(t).
    void fiber_adjacency(Vertex w, Vertex t, std::span<Word> out) const;

    friend bool operator==(const GraphMap& a, const GraphMap& b) {
        return a.image_ == b.image_ && *a.source_ == *b.source_ && *a.target_ == *b.target_;
    }

private:
    GraphPtr source_;
    GraphPtr target_;
    std::vector<Vertex> image_;
    std::vector<std::size_t> fiber_offsets_;
    std::vector<Vertex> fiber_members_;
    std::vector<char> contiguous_;
};

/// Outcome of a lifting check: for a downstairs vertex, a set of upstairs
/// targets with no common neighbor in the fiber over it.
struct ConditionBReport {
    struct Counterexample {
        Vertex base_vertex = 0;
        std::vector<Vertex> targets;
    };
    bool holds = true;
    std::optional<Counterexample> counterexample;
};

bool is_homomorphism(const GraphMap& h);

/// Every target edge between image points is the image of a source edge.
bool is_strict(const GraphMap& h);

bool is_surjective(const GraphMap& h);

bool is_quotient_map(const GraphMap& h);

/// outer after inner. Throws ContractViolation unless inner's target equals outer's source.
GraphMap compose(const GraphMap& outer, const GraphMap& inner);

/**
 * For every target vertex v, every set of at most n-1 pairwise distinct
 * neighbors v_1..v_p of v (v itself included, through its loop) and every
 * choice of preimages w_s of v_s, some preimage of v is adjacent to all w_s.
 *
 * The counterexample is the first failure in the order (v, p, choices).
 */
ConditionBReport check_lifting_property(const GraphMap& h, std::size_t n);

}  // namespace satgraph

#endif  // SATGRAPH_GRAPH_MAP_HPP
