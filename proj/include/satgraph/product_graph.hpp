#ifndef SATGRAPH_PRODUCT_GRAPH_HPP
#define SATGRAPH_PRODUCT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "satgraph/finite_graph.hpp"
#include "satgraph/graph_map.hpp"

namespace satgraph {

/// Vertex (i, s) of H_m: base vertex i, copy s in 0..m.
struct ProductVertex {
    Vertex base = 0;
    std::uint32_t copy = 0;
    friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

/// Flat indexing (i, s) <-> i * (m + 1) + s over a base on k vertices.
class ProductEncoding {
public:
    ProductEncoding(std::size_t base_count, std::uint32_t m) : k_(base_count), m_(m) {}

    std::size_t base_count() const noexcept { return k_; }
    std::uint32_t m() const noexcept { return m_; }
    std::size_t copies() const noexcept { return std::size_t{m_} + 1; }
    std::size_t vertex_count() const noexcept { return k_ * copies(); }

    Vertex flatten(ProductVertex pv) const noexcept {
        return static_cast<Vertex>(pv.base * copies() + pv.copy);
    }
    ProductVertex decode(Vertex v) const noexcept {
        return {static_cast<Vertex>(v / copies()), static_cast<std::uint32_t>(v % copies())};
    }

private:
    std::size_t k_;
    std::uint32_t m_;
};

struct ProductSample {
    GraphPtr graph;
    GraphMap projection;  // (i, s) -> i
};

/**
 * Draws H_m over `base`:
 *   copy-0 vertices induce a copy of the base;
 *   no edge lies over a base non-edge;
 *   every other pair over a base edge is an edge with probability 1/2;
 *   loops everywhere.
 *
 * The bit for the pair u < v is bit v % 64 of stream word u * W + v / 64,
 * W being the row width in words, so the draw only depends on `key`.
 */
ProductSample sample_product_graph(const GraphPtr& base, std::uint32_t m, std::uint64_t key);

/// True iff `g` is exactly what sample_product_graph(base, m, key) draws.
/// Stops at the first differing word.
bool matches_product_sample(const FiniteGraph& base, std::uint32_t m, std::uint64_t key,
                            const FiniteGraph& g);

enum class TupleMode {
    kRepeatsAllowed,  // base tuple entries may repeat
    kDistinctBases,   // base tuple entries pairwise distinct
};

/**
 * Lifting event over the product encoding: for every base vertex i, every
 * p < n, every p-tuple of base neighbors of i and every choice of copies,
 * some (i, l) is adjacent in `g` to all chosen product vertices.
 *
 * Per i, the copies l adjacent to each candidate target are packed into a
 * word mask over 0..m so each configuration is an AND-reduction.
 * Throws ContractViolation when |g| != |base| * (m + 1).
 */
ConditionBReport check_condition_b(const FiniteGraph& g, const FiniteGraph& base, std::uint32_t m,
                                   std::size_t n, TupleMode mode = TupleMode::kRepeatsAllowed);

/// The projection (i, s) -> i as a map from `product` onto `base`.
GraphMap product_projection(const GraphPtr& product, const GraphPtr& base, std::uint32_t m);

}  // namespace satgraph

#endif  // SATGRAPH_PRODUCT_GRAPH_HPP
