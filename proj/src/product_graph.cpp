#include "satgraph/product_graph.hpp"

#include <string>

#include "satgraph/errors.hpp"
#include "satgraph/seeded_stream.hpp"

namespace satgraph {

namespace {

/// Generates the above-diagonal words of H_m's rows, one base fiber at a time.
class UpperRowSource {
public:
    UpperRowSource(const FiniteGraph& base, std::uint32_t m, std::uint64_t key)
        : base_(base),
          enc_(base.vertex_count(), m),
          stream_(key),
          words_(words_for(enc_.vertex_count())),
          tail_(tail_mask(enc_.vertex_count())),
          eligible_(words_),
          copy_zero_(words_) {
        for (std::size_t j = 0; j < enc_.base_count(); ++j) {
            set_bit(copy_zero_, j * enc_.copies());
        }
    }

    std::size_t vertex_count() const noexcept { return enc_.vertex_count(); }
    std::size_t words() const noexcept { return words_; }
    const ProductEncoding& encoding() const noexcept { return enc_; }

    /// Must be called before rows over base vertex i are requested.
    void select_base(Vertex i) {
        std::fill(eligible_.begin(), eligible_.end(), 0);
        const auto r = base_.row(i);
        for (std::size_t w = 0; w < r.size(); ++w) {
            Word bits = r[w];
            while (bits != 0) {
                const std::size_t j = w * kWordBits + std::countr_zero(bits);
                set_range(eligible_, j * enc_.copies(), enc_.copies());
                bits &= bits - 1;
            }
        }
    }

    /// Word w (>= u / 64) of row u, restricted to positions above u.
    Word upper_word(Vertex u, std::size_t w) const noexcept {
        const Word random = stream_.word(static_cast<std::uint64_t>(u) * words_ + w);
        const Word e = eligible_[w];
        Word value = enc_.decode(u).copy == 0
                         ? (random & e & ~copy_zero_[w]) | (e & copy_zero_[w])
                         : random & e;
        if (w == u / kWordBits) value &= bits_above(u);
        if (w + 1 == words_) value &= tail_;
        return value;
    }

private:
    const FiniteGraph& base_;
    ProductEncoding enc_;
    CounterStream stream_;
    std::size_t words_;
    Word tail_;
    std::vector<Word> eligible_;
    std::vector<Word> copy_zero_;
};

}  // namespace

GraphMap product_projection(const GraphPtr& product, const GraphPtr& base, std::uint32_t m) {
    const ProductEncoding enc(base->vertex_count(), m);
    if (product->vertex_count() != enc.vertex_count()) {
        throw ContractViolation("product graph has " + std::to_string(product->vertex_count()) +
                                " vertices, expected " + std::to_string(enc.vertex_count()));
    }
    std::vector<Vertex> image(enc.vertex_count());
    for (Vertex v = 0; v < image.size(); ++v) image[v] = enc.decode(v).base;
    return GraphMap(product, base, std::move(image));
}

ProductSample sample_product_graph(const GraphPtr& base, std::uint32_t m, std::uint64_t key) {
    if (m == 0) throw ContractViolation("product construction needs m >= 1");
    UpperRowSource source(*base, m, key);
    const auto& enc = source.encoding();
    GraphBuilder builder(source.vertex_count());
    for (Vertex i = 0; i < enc.base_count(); ++i) {
        source.select_base(i);
        for (std::uint32_t s = 0; s <= m; ++s) {
            const Vertex u = enc.flatten({i, s});
            auto row = builder.row(u);
            for (std::size_t w = u / kWordBits; w < source.words(); ++w) {
                row[w] = source.upper_word(u, w);
            }
        }
    }
    builder.mirror_upper_triangle();
    auto graph = std::make_shared<const FiniteGraph>(std::move(builder).build());
    auto projection = product_projection(graph, base, m);
    return {std::move(graph), std::move(projection)};
}

bool matches_product_sample(const FiniteGraph& base, std::uint32_t m, std::uint64_t key,
                            const FiniteGraph& g) {
    if (m == 0) return false;
    UpperRowSource source(base, m, key);
    if (g.vertex_count() != source.vertex_count()) return false;
    const auto& enc = source.encoding();
    for (Vertex i = 0; i < enc.base_count(); ++i) {
        source.select_base(i);
        for (std::uint32_t s = 0; s <= m; ++s) {
            const Vertex u = enc.flatten({i, s});
            const auto row = g.row(u);
            for (std::size_t w = u / kWordBits; w < source.words(); ++w) {
                Word stored = row[w];
                if (w == u / kWordBits) stored &= bits_above(u);
                if (stored != source.upper_word(u, w)) return false;
            }
        }
    }
    return true;
}

namespace {

class CopyMaskScan {
public:
    CopyMaskScan(const FiniteGraph& g, const FiniteGraph& base, std::uint32_t m, std::size_t n,
                 TupleMode mode)
        : g_(g), base_(base), enc_(base.vertex_count(), m), max_size_(n - 1), mode_(mode),
          words_(words_for(enc_.copies())) {}

    std::optional<ConditionBReport::Counterexample> run(Vertex i) {
        targets_.clear();
        for (Vertex j = 0; j < enc_.base_count(); ++j) {
            if (!base_.adjacent_unchecked(i, j)) continue;
            for (std::uint32_t s = 0; s <= enc_.m(); ++s) targets_.push_back(enc_.flatten({j, s}));
        }
        masks_.assign(targets_.size() * words_, 0);
        const std::size_t lo = enc_.flatten({i, 0});
        for (std::size_t t = 0; t < targets_.size(); ++t) {
            extract_bits(g_.row(targets_[t]), lo, enc_.copies(),
                         std::span<Word>(masks_.data() + t * words_, words_));
        }
        acc_.assign((max_size_ + 1) * words_, 0);
        set_range(std::span<Word>(acc_.data(), words_), 0, enc_.copies());
        for (std::size_t p = 1; p <= max_size_; ++p) {
            size_ = p;
            picks_.clear();
            if (descend(0, 0)) {
                ConditionBReport::Counterexample cx;
                cx.base_vertex = i;
                for (std::size_t t : picks_) cx.targets.push_back(targets_[t]);
                return cx;
            }
        }
        return std::nullopt;
    }

private:
    bool descend(std::size_t depth, std::size_t first) {
        const Word* in = acc_.data() + depth * words_;
        Word* out = acc_.data() + (depth + 1) * words_;
        for (std::size_t t = first; t + (size_ - depth) <= targets_.size(); ++t) {
            if (mode_ == TupleMode::kDistinctBases && !picks_.empty() &&
                enc_.decode(targets_[picks_.back()]).base == enc_.decode(targets_[t]).base) {
                continue;
            }
            const Word* m = masks_.data() + t * words_;
            Word any = 0;
            for (std::size_t j = 0; j < words_; ++j) {
                out[j] = in[j] & m[j];
                any |= out[j];
            }
            picks_.push_back(t);
            if (depth + 1 == size_) {
                if (any == 0) return true;
            } else if (descend(depth + 1, t + 1)) {
                return true;
            }
            picks_.pop_back();
        }
        return false;
    }

    const FiniteGraph& g_;
    const FiniteGraph& base_;
    ProductEncoding enc_;
    std::size_t max_size_;
    TupleMode mode_;
    std::size_t words_;
    std::size_t size_ = 0;
    std::vector<Vertex> targets_;
    std::vector<Word> masks_;
    std::vector<Word> acc_;
    std::vector<std::size_t> picks_;
};

}  // namespace

ConditionBReport check_condition_b(const FiniteGraph& g, const FiniteGraph& base, std::uint32_t m,
                                   std::size_t n, TupleMode mode) {
    if (n == 0) throw ContractViolation("saturation order must be at least 1");
    const ProductEncoding enc(base.vertex_count(), m);
    if (g.vertex_count() != enc.vertex_count()) {
        throw ContractViolation("graph has " + std::to_string(g.vertex_count()) +
                                " vertices but the product encoding needs " +
                                std::to_string(enc.vertex_count()));
    }
    ConditionBReport report;
    if (n == 1) return report;
    CopyMaskScan scan(g, base, m, n, mode);
    for (Vertex i = 0; i < base.vertex_count(); ++i) {
        if (auto cx = scan.run(i)) {
            report.holds = false;
            report.counterexample = std::move(cx);
            return report;
        }
    }
    return report;
}

}  // namespace satgraph
