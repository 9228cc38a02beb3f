#ifndef SATGRAPH_FINITE_GRAPH_HPP
#define SATGRAPH_FINITE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "satgraph/bits.hpp"

namespace satgraph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Finite reflexive symmetric graph on vertices 0..vertex_count-1.
 *
 * Adjacency is stored as one bit row per vertex, so neighbor sets can be
 * intersected a machine word at a time. Every vertex carries a loop and the
 * relation is symmetric; both properties hold by construction and the value
 * never changes afterwards.
 */
class FiniteGraph {
public:
    /// Graph with loops only.
    explicit FiniteGraph(std::size_t vertex_count);

    static FiniteGraph complete(std::size_t vertex_count);

    /// Edges may come in any order; loops and duplicates are ignored.
    static FiniteGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t words_per_row() const noexcept { return words_per_row_; }

    /// Raw neighbor row of `v`; bit u is set iff u and v are adjacent.
    std::span<const Word> row(Vertex v) const noexcept {
        return {bits_.data() + static_cast<std::size_t>(v) * words_per_row_, words_per_row_};
    }

    /// Throws std::out_of_range when either index is not a vertex.
    bool adjacent(Vertex u, Vertex v) const;

    bool adjacent_unchecked(Vertex u, Vertex v) const noexcept {
        return test_bit(row(u), v);
    }

    /// Number of edges between distinct vertices.
    std::size_t cross_edge_count() const;

    /// Cross edges as (a, b) with a < b in lexicographic order.
    std::vector<Edge> edges() const;

    /// Copy with the cross edge {u, v} flipped.
    FiniteGraph with_edge_toggled(Vertex u, Vertex v) const;

    friend bool operator==(const FiniteGraph&, const FiniteGraph&) = default;

private:
    friend class GraphBuilder;
    FiniteGraph(std::size_t vertex_count, std::vector<Word> bits);

    std::size_t vertex_count_;
    std::size_t words_per_row_;
    std::vector<Word> bits_;
};

/// Mutable staging area for graphs assembled row by row.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t vertex_count);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t words_per_row() const noexcept { return words_per_row_; }

    void add_edge(Vertex u, Vertex v);

    std::span<Word> row(Vertex v) noexcept {
        return {bits_.data() + static_cast<std::size_t>(v) * words_per_row_, words_per_row_};
    }

    /// Rebuilds the lower triangle from the bits above the diagonal, then sets loops.
    void mirror_upper_triangle();

    FiniteGraph build() &&;

private:
    std::size_t vertex_count_;
    std::size_t words_per_row_;
    std::vector<Word> bits_;
};

}  // namespace satgraph

#endif  // SATGRAPH_FINITE_GRAPH_HPP
