#include "satgraph/graph_map.hpp"

#include <algorithm>
#include <string>

#include "satgraph/errors.hpp"

namespace satgraph {

GraphMap::GraphMap(GraphPtr source, GraphPtr target, std::vector<Vertex> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    if (!source_ || !target_) throw ContractViolation("graph map needs a source and a target");
    if (image_.size() != source_->vertex_count()) {
        throw ContractViolation("graph map image has " + std::to_string(image_.size()) +
                                " entries for " + std::to_string(source_->vertex_count()) +
                                " source vertices");
    }
    const std::size_t targets = target_->vertex_count();
    fiber_offsets_.assign(targets + 1, 0);
    for (Vertex v = 0; v < image_.size(); ++v) {
        if (image_[v] >= targets) {
            throw ContractViolation("graph map sends vertex " + std::to_string(v) + " to " +
                                    std::to_string(image_[v]) + ", outside the target");
        }
        ++fiber_offsets_[image_[v] + 1];
    }
    for (std::size_t t = 0; t < targets; ++t) fiber_offsets_[t + 1] += fiber_offsets_[t];
    fiber_members_.resize(image_.size());
    auto cursor = fiber_offsets_;
    for (Vertex v = 0; v < image_.size(); ++v) fiber_members_[cursor[image_[v]]++] = v;
    contiguous_.assign(targets, 0);
    for (Vertex t = 0; t < targets; ++t) {
        const auto f = fiber(t);
        contiguous_[t] = !f.empty() && f.back() - f.front() + 1 == f.size();
    }
}

GraphMap GraphMap::identity(GraphPtr g) {
    std::vector<Vertex> image(g->vertex_count());
    for (Vertex v = 0; v < image.size(); ++v) image[v] = v;
    return GraphMap(g, g, std::move(image));
}

void GraphMap::fiber_adjacency(Vertex w, Vertex t, std::span<Word> out) const {
    const auto f = fiber(t);
    if (f.empty()) {
        std::fill(out.begin(), out.end(), 0);
        return;
    }
    const auto row = source_->row(w);
    if (fiber_is_contiguous(t)) {
        extract_bits(row, f.front(), f.size(), out);
        return;
    }
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t l = 0; l < f.size(); ++l) {
        if (test_bit(row, f[l])) set_bit(out, l);
    }
}

namespace {

template <typename Fn>
void for_each_neighbor(const FiniteGraph& g, Vertex v, Fn&& fn) {
    const auto r = g.row(v);
    for (std::size_t j = 0; j < r.size(); ++j) {
        Word bits = r[j];
        while (bits != 0) {
            fn(static_cast<Vertex>(j * kWordBits + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
}

}  // namespace

bool is_homomorphism(const GraphMap& h) {
    const FiniteGraph& src = h.source();
    const FiniteGraph& tgt = h.target();
    std::vector<Word> allowed(src.words_per_row());
    for (Vertex t = 0; t < tgt.vertex_count(); ++t) {
        const auto members = h.fiber(t);
        if (members.empty()) continue;
        std::fill(allowed.begin(), allowed.end(), 0);
        for_each_neighbor(tgt, t, [&](Vertex nb) {
            const auto f = h.fiber(nb);
            if (f.empty()) return;
            if (h.fiber_is_contiguous(nb)) {
                set_range(allowed, f.front(), f.size());
            } else {
                for (Vertex w : f) set_bit(allowed, w);
            }
        });
        for (Vertex u : members) {
            const auto r = src.row(u);
            for (std::size_t j = 0; j < r.size(); ++j) {
                if ((r[j] & ~allowed[j]) != 0) return false;
            }
        }
    }
    return true;
}

bool is_strict(const GraphMap& h) {
    const FiniteGraph& src = h.source();
    const FiniteGraph& tgt = h.target();
    std::vector<Word> reach(src.words_per_row());
    std::vector<Word> slice;
    for (Vertex t = 0; t < tgt.vertex_count(); ++t) {
        const auto members = h.fiber(t);
        if (members.empty()) continue;
        std::fill(reach.begin(), reach.end(), 0);
        for (Vertex u : members) {
            const auto r = src.row(u);
            for (std::size_t j = 0; j < r.size(); ++j) reach[j] |= r[j];
        }
        bool ok = true;
        for_each_neighbor(tgt, t, [&](Vertex nb) {
            if (!ok) return;
            const auto f = h.fiber(nb);
            if (f.empty()) return;
            if (h.fiber_is_contiguous(nb)) {
                slice.assign(words_for(f.size()), 0);
                extract_bits(reach, f.front(), f.size(), slice);
                ok = any_bit(slice);
                return;
            }
            ok = std::any_of(f.begin(), f.end(), [&](Vertex w) { return test_bit(reach, w); });
        });
        if (!ok) return false;
    }
    return true;
}

bool is_surjective(const GraphMap& h) {
    for (Vertex t = 0; t < h.target().vertex_count(); ++t) {
        if (h.fiber(t).empty()) return false;
    }
    return true;
}

bool is_quotient_map(const GraphMap& h) {
    return is_surjective(h) && is_homomorphism(h) && is_strict(h);
}

GraphMap compose(const GraphMap& outer, const GraphMap& inner) {
    if (inner.target_ptr() != outer.source_ptr() && !(inner.target() == outer.source())) {
        throw ContractViolation("cannot compose: inner target differs from outer source");
    }
    std::vector<Vertex> image(inner.source().vertex_count());
    for (Vertex v = 0; v < image.size(); ++v) image[v] = outer(inner(v));
    return GraphMap(inner.source_ptr(), outer.target_ptr(), std::move(image));
}

namespace {

/// Per downstairs vertex v: masks over fiber(v) for every preimage of every
/// neighbor of v, enumerated by increasing neighbor then preimage.
class LiftingScan {
public:
    LiftingScan(const GraphMap& h, std::size_t max_targets) : h_(h), max_targets_(max_targets) {}

    std::optional<ConditionBReport::Counterexample> run_vertex(Vertex v) {
        v_ = v;
        const auto over = h_.fiber(v);
        words_ = std::max<std::size_t>(1, words_for(over.size()));
        neighbors_.clear();
        for_each_neighbor(h_.target(), v, [&](Vertex nb) { neighbors_.push_back(nb); });

        offsets_.assign(neighbors_.size() + 1, 0);
        for (std::size_t c = 0; c < neighbors_.size(); ++c) {
            offsets_[c + 1] = offsets_[c] + h_.fiber(neighbors_[c]).size();
        }
        masks_.assign(offsets_.back() * words_, 0);
        for (std::size_t c = 0; c < neighbors_.size(); ++c) {
            const auto members = h_.fiber(neighbors_[c]);
            for (std::size_t i = 0; i < members.size(); ++i) {
                std::span<Word> out(masks_.data() + (offsets_[c] + i) * words_, words_);
                if (!over.empty()) h_.fiber_adjacency(members[i], v, out);
            }
        }

        acc_.assign((max_targets_ + 1) * words_, 0);
        if (!over.empty()) {
            set_range(std::span<Word>(acc_.data(), words_), 0, over.size());
        }
        for (std::size_t p = 1; p <= max_targets_; ++p) {
            size_ = p;
            picks_.clear();
            if (descend(0, 0)) {
                ConditionBReport::Counterexample cx;
                cx.base_vertex = v_;
                cx.targets = picks_;
                return cx;
            }
        }
        return std::nullopt;
    }

private:
    bool descend(std::size_t depth, std::size_t first_neighbor) {
        const Word* in = acc_.data() + depth * words_;
        Word* out = acc_.data() + (depth + 1) * words_;
        for (std::size_t c = first_neighbor; c + (size_ - depth) <= neighbors_.size(); ++c) {
            const auto members = h_.fiber(neighbors_[c]);
            for (std::size_t i = 0; i < members.size(); ++i) {
                const Word* m = masks_.data() + (offsets_[c] + i) * words_;
                bool any = false;
                for (std::size_t j = 0; j < words_; ++j) {
                    out[j] = in[j] & m[j];
                    any = any || out[j] != 0;
                }
                picks_.push_back(members[i]);
                if (depth + 1 == size_) {
                    if (!any) return true;
                } else if (descend(depth + 1, c + 1)) {
                    return true;
                }
                picks_.pop_back();
            }
        }
        return false;
    }

    const GraphMap& h_;
    std::size_t max_targets_;
    Vertex v_ = 0;
    std::size_t words_ = 1;
    std::size_t size_ = 0;
    std::vector<Vertex> neighbors_;
    std::vector<std::size_t> offsets_;
    std::vector<Word> masks_;
    std::vector<Word> acc_;
    std::vector<Vertex> picks_;
};

}  // namespace

ConditionBReport check_lifting_property(const GraphMap& h, std::size_t n) {
    if (n == 0) throw ContractViolation("lifting order must be at least 1");
    ConditionBReport report;
    if (n == 1) return report;
    LiftingScan scan(h, n - 1);
    for (Vertex v = 0; v < h.target().vertex_count(); ++v) {
        if (auto cx = scan.run_vertex(v)) {
            report.holds = false;
            report.counterexample = std::move(cx);
            return report;
        }
    }
    return report;
}

}  // namespace satgraph
