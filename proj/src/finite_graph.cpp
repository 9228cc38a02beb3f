#include "satgraph/finite_graph.hpp"

#include <stdexcept>
#include <string>

#include "satgraph/errors.hpp"

namespace satgraph {

namespace {

void require_positive(std::size_t vertex_count) {
    if (vertex_count == 0) {
        throw ContractViolation("graph must have at least one vertex");
    }
}

}  // namespace

FiniteGraph::FiniteGraph(std::size_t vertex_count)
    : FiniteGraph(std::move(GraphBuilder(vertex_count)).build()) {}

FiniteGraph::FiniteGraph(std::size_t vertex_count, std::vector<Word> bits)
    : vertex_count_(vertex_count),
      words_per_row_(words_for(vertex_count)),
      bits_(std::move(bits)) {}

FiniteGraph FiniteGraph::complete(std::size_t vertex_count) {
    GraphBuilder builder(vertex_count);
    for (Vertex v = 0; v < vertex_count; ++v) {
        set_range(builder.row(v), 0, vertex_count);
    }
    return std::move(builder).build();
}

FiniteGraph FiniteGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    GraphBuilder builder(vertex_count);
    for (const auto& [a, b] : edges) {
        builder.add_edge(a, b);
    }
    return std::move(builder).build();
}

bool FiniteGraph::adjacent(Vertex u, Vertex v) const {
    if (u >= vertex_count_ || v >= vertex_count_) {
        throw std::out_of_range("vertex index out of range: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") with " + std::to_string(vertex_count_) +
                                " vertices");
    }
    return adjacent_unchecked(u, v);
}

std::size_t FiniteGraph::cross_edge_count() const {
    std::size_t total = 0;
    for (Word w : bits_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return (total - vertex_count_) / 2;
}

std::vector<Edge> FiniteGraph::edges() const {
    std::vector<Edge> out;
    for (Vertex a = 0; a < vertex_count_; ++a) {
        const auto r = row(a);
        for (std::size_t w = a / kWordBits; w < words_per_row_; ++w) {
            Word bits = r[w];
            if (w == a / kWordBits) bits &= bits_above(a);
            while (bits != 0) {
                const auto b = static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
                out.emplace_back(a, b);
                bits &= bits - 1;
            }
        }
    }
    return out;
}

FiniteGraph FiniteGraph::with_edge_toggled(Vertex u, Vertex v) const {
    if (u >= vertex_count_ || v >= vertex_count_) {
        throw std::out_of_range("vertex index out of range");
    }
    if (u == v) {
        throw ContractViolation("loops are fixed in a reflexive graph");
    }
    auto bits = bits_;
    bits[u * words_per_row_ + v / kWordBits] ^= Word{1} << (v % kWordBits);
    bits[v * words_per_row_ + u / kWordBits] ^= Word{1} << (u % kWordBits);
    return FiniteGraph(vertex_count_, std::move(bits));
}

GraphBuilder::GraphBuilder(std::size_t vertex_count)
    : vertex_count_(vertex_count), words_per_row_(words_for(vertex_count)) {
    require_positive(vertex_count);
    bits_.assign(vertex_count_ * words_per_row_, 0);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u >= vertex_count_ || v >= vertex_count_) {
        throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
    }
    set_bit(row(u), v);
    set_bit(row(v), u);
}

void GraphBuilder::mirror_upper_triangle() {
    const std::size_t blocks = words_per_row_;
    std::array<Word, 64> block{};
    for (std::size_t bi = 0; bi < blocks; ++bi) {
        const std::size_t row0 = bi * kWordBits;
        const std::size_t rows = std::min(kWordBits, vertex_count_ - row0);
        for (std::size_t bj = bi; bj < blocks; ++bj) {
            block.fill(0);
            for (std::size_t r = 0; r < rows; ++r) {
                Word w = bits_[(row0 + r) * words_per_row_ + bj];
                if (bj == bi) w &= bits_above(r);
                block[r] = w;
            }
            if (bj == bi) {
                const auto upper = block;
                transpose64(block);
                for (std::size_t r = 0; r < rows; ++r) {
                    bits_[(row0 + r) * words_per_row_ + bi] =
                        upper[r] | block[r] | (Word{1} << r);
                }
                continue;
            }
            transpose64(block);
            const std::size_t col0 = bj * kWordBits;
            const std::size_t cols = std::min(kWordBits, vertex_count_ - col0);
            for (std::size_t c = 0; c < cols; ++c) {
                bits_[(col0 + c) * words_per_row_ + bi] = block[c];
            }
        }
    }
}

FiniteGraph GraphBuilder::build() && {
    for (Vertex v = 0; v < vertex_count_; ++v) {
        set_bit(row(v), v);
        row(v)[words_per_row_ - 1] &= tail_mask(vertex_count_);
    }
    return FiniteGraph(vertex_count_, std::move(bits_));
}

}  // namespace satgraph
