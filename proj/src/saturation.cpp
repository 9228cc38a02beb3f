#include "satgraph/saturation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "satgraph/errors.hpp"

namespace satgraph {

TypeSpec::TypeSpec(std::vector<std::pair<Vertex, bool>> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].first == entries_[i - 1].first) {
            throw ContractViolation("type assigns vertex " + std::to_string(entries_[i].first) +
                                    " twice");
        }
    }
}

TypeSpec TypeSpec::constant(std::span<const Vertex> domain, bool value) {
    std::vector<std::pair<Vertex, bool>> entries;
    entries.reserve(domain.size());
    for (Vertex v : domain) entries.emplace_back(v, value);
    return TypeSpec(std::move(entries));
}

std::vector<Vertex> TypeSpec::domain() const {
    std::vector<Vertex> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
}

bool TypeSpec::contains(Vertex v) const noexcept {
    return std::binary_search(entries_.begin(), entries_.end(), std::pair<Vertex, bool>{v, false},
                              [](const auto& a, const auto& b) { return a.first < b.first; });
}

namespace {

void require_domain_in_graph(const FiniteGraph& g, const TypeSpec& f) {
    for (const auto& [a, bit] : f.entries()) {
        if (a >= g.vertex_count()) {
            throw std::out_of_range("type domain vertex " + std::to_string(a) +
                                    " is not a vertex of the graph");
        }
    }
}

/// Candidate set of f: vertices realizing f, with dom(f) removed.
std::vector<Word> candidate_mask(const FiniteGraph& g, const TypeSpec& f) {
    const std::size_t words = g.words_per_row();
    std::vector<Word> mask(words, ~Word{0});
    mask.back() &= tail_mask(g.vertex_count());
    for (const auto& [a, bit] : f.entries()) {
        const auto r = g.row(a);
        for (std::size_t j = 0; j < words; ++j) {
            mask[j] &= bit ? r[j] : ~r[j];
        }
    }
    for (const auto& [a, bit] : f.entries()) clear_bit(mask, a);
    return mask;
}

/**
 * Enumerates vertex sets of a fixed size r in lexicographic order and, for
 * each, every type (or only the all-ones type in weak mode), stopping at the
 * first type without a realizer outside the set.
 *
 * masks_[d] holds 2^d candidate sets, one per sign pattern over the first d
 * chosen vertices, with the first chosen vertex as the most significant bit.
 */
class FixedSizeScan {
public:
    FixedSizeScan(const FiniteGraph& g, std::size_t r, bool weak)
        : g_(g), r_(r), weak_(weak), words_(g.words_per_row()), tail_(tail_mask(g.vertex_count())) {
        masks_.resize(r_);
        for (std::size_t d = 0; d < r_; ++d) {
            masks_[d].assign(patterns_at(d) * words_, 0);
        }
        std::fill(masks_[0].begin(), masks_[0].end(), ~Word{0});
        masks_[0][words_ - 1] &= tail_;
    }

    std::optional<TypeSpec> run() {
        chosen_.clear();
        if (descend(0, 0)) return failure_;
        return std::nullopt;
    }

private:
    std::size_t patterns_at(std::size_t d) const { return weak_ ? 1 : std::size_t{1} << d; }

    bool descend(std::size_t depth, Vertex start) {
        const std::size_t n = g_.vertex_count();
        for (Vertex c = start; c + (r_ - depth) <= n; ++c) {
            if (depth + 1 == r_) {
                if (leaf(c)) return true;
                continue;
            }
            extend(depth, c);
            chosen_.push_back(c);
            if (descend(depth + 1, c + 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    void extend(std::size_t depth, Vertex c) {
        const auto row = g_.row(c);
        const Word* src = masks_[depth].data();
        Word* dst = masks_[depth + 1].data();
        if (weak_) {
            for (std::size_t j = 0; j < words_; ++j) dst[j] = src[j] & row[j];
            return;
        }
        for (std::size_t p = 0; p < patterns_at(depth); ++p) {
            const Word* s = src + p * words_;
            Word* neg = dst + (2 * p) * words_;
            Word* pos = dst + (2 * p + 1) * words_;
            for (std::size_t j = 0; j < words_; ++j) {
                neg[j] = s[j] & ~row[j];
                pos[j] = s[j] & row[j];
            }
        }
    }

    bool realizable(const Word* base, bool positive, const std::span<const Word> row,
                    Vertex last) const {
        for (std::size_t j = 0; j < words_; ++j) {
            Word x = base[j] & (positive ? row[j] : ~row[j]);
            if (j + 1 == words_) x &= tail_;
            if (x == 0) continue;
            for (Vertex a : chosen_) {
                if (a / kWordBits == j) x &= ~(Word{1} << (a % kWordBits));
            }
            if (last / kWordBits == j) x &= ~(Word{1} << (last % kWordBits));
            if (x != 0) return true;
        }
        return false;
    }

    bool leaf(Vertex c) {
        const auto row = g_.row(c);
        const Word* parents = masks_[r_ - 1].data();
        if (weak_) {
            if (realizable(parents, true, row, c)) return false;
            std::vector<Vertex> domain = chosen_;
            domain.push_back(c);
            failure_ = TypeSpec::constant(domain, true);
            return true;
        }
        const std::size_t patterns = std::size_t{1} << r_;
        for (std::size_t q = 0; q < patterns; ++q) {
            if (realizable(parents + (q >> 1) * words_, (q & 1) != 0, row, c)) continue;
            std::vector<std::pair<Vertex, bool>> entries;
            for (std::size_t t = 0; t < r_; ++t) {
                const Vertex a = t < chosen_.size() ? chosen_[t] : c;
                entries.emplace_back(a, ((q >> (r_ - 1 - t)) & 1) != 0);
            }
            failure_ = TypeSpec(std::move(entries));
            return true;
        }
        return false;
    }

    const FiniteGraph& g_;
    std::size_t r_;
    bool weak_;
    std::size_t words_;
    Word tail_;
    std::vector<std::vector<Word>> masks_;
    std::vector<Vertex> chosen_;
    std::optional<TypeSpec> failure_;
};

/// Prefix-order walk over every subset of the vertex set, for graphs too
/// small for the fixed-size reduction.
bool small_graph_scan(const FiniteGraph& g, bool weak, std::vector<Vertex>& chosen,
                      Vertex start, std::optional<TypeSpec>& failure) {
    const std::size_t size = chosen.size();
    const std::size_t patterns = weak ? 1 : std::size_t{1} << size;
    for (std::size_t q = 0; q < patterns; ++q) {
        std::vector<std::pair<Vertex, bool>> entries;
        for (std::size_t t = 0; t < size; ++t) {
            const bool bit = weak || ((q >> (size - 1 - t)) & 1) != 0;
            entries.emplace_back(chosen[t], bit);
        }
        TypeSpec f(std::move(entries));
        if (!find_realizer(g, f)) {
            failure = std::move(f);
            return true;
        }
    }
    for (Vertex c = start; c < g.vertex_count(); ++c) {
        chosen.push_back(c);
        if (small_graph_scan(g, weak, chosen, c + 1, failure)) return true;
        chosen.pop_back();
    }
    return false;
}

SaturationReport scan(const FiniteGraph& g, std::size_t n, bool weak) {
    if (n == 0) throw ContractViolation("saturation order must be at least 1");
    const std::size_t r = n - 1;
    SaturationReport report;
    if (r == 0) return report;  // only the empty type, realized by any vertex
    std::optional<TypeSpec> failure;
    if (g.vertex_count() >= r) {
        failure = FixedSizeScan(g, r, weak).run();
    } else {
        std::vector<Vertex> chosen;
        small_graph_scan(g, weak, chosen, 0, failure);
    }
    if (failure) {
        report.holds = false;
        report.counterexample = std::move(failure);
    }
    return report;
}

}  // namespace

bool realizes(const FiniteGraph& g, Vertex v, const TypeSpec& f) {
    require_domain_in_graph(g, f);
    if (v >= g.vertex_count()) throw std::out_of_range("candidate vertex out of range");
    if (f.contains(v)) {
        throw ContractViolation("vertex " + std::to_string(v) +
                                " lies in the type's domain and cannot realize it");
    }
    return std::all_of(f.entries().begin(), f.entries().end(), [&](const auto& e) {
        return g.adjacent_unchecked(v, e.first) == e.second;
    });
}

std::optional<Vertex> find_realizer(const FiniteGraph& g, const TypeSpec& f) {
    require_domain_in_graph(g, f);
    const auto mask = candidate_mask(g, f);
    for (std::size_t j = 0; j < mask.size(); ++j) {
        if (mask[j] != 0) {
            return static_cast<Vertex>(j * kWordBits + std::countr_zero(mask[j]));
        }
    }
    return std::nullopt;
}

SaturationReport is_n_saturated(const FiniteGraph& g, std::size_t n) {
    return scan(g, n, false);
}

SaturationReport is_weakly_n_saturated(const FiniteGraph& g, std::size_t n) {
    return scan(g, n, true);
}

}  // namespace satgraph
