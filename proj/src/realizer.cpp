#include "satgraph/realizer.hpp"

#include <algorithm>
#include <string>

#include "satgraph/errors.hpp"
#include "satgraph/saturation.hpp"

namespace satgraph {

namespace {

bool pairwise_distinct(const std::vector<ThreadPrefix>& threads, std::size_t level) {
    std::vector<Vertex> entries;
    for (const auto& th : threads) entries.push_back(th.entries[level]);
    std::sort(entries.begin(), entries.end());
    return std::adjacent_find(entries.begin(), entries.end()) == entries.end();
}

TypeSpec type_at(const std::vector<ThreadPrefix>& threads, const std::vector<ThreadConstraint>& cs,
                 std::size_t level) {
    std::vector<std::pair<Vertex, bool>> entries;
    for (std::size_t i = 0; i < threads.size(); ++i) {
        entries.emplace_back(threads[i].entries[level], cs[i].bit);
    }
    return TypeSpec(std::move(entries));
}

ThreadPrefix truncate_or_extend(const Tower& t, const ThreadPrefix& p, std::size_t depth) {
    if (p.depth() >= depth) {
        ThreadPrefix out;
        out.entries.assign(p.entries.begin(), p.entries.begin() + static_cast<long>(depth) + 1);
        return out;
    }
    return canonical_extension(t, p, depth);
}

RealizerHandle realize_impl(Tower& t, const std::vector<ThreadConstraint>& constraints,
                            bool auto_extend) {
    if (constraints.size() >= t.n()) {
        throw TooManyConstraints(std::to_string(constraints.size()) +
                                 " constraints given; at most " + std::to_string(t.n() - 1) +
                                 " are allowed");
    }
    std::size_t needed = 0;
    for (const auto& c : constraints) {
        if (c.thread.entries.empty()) throw ContractViolation("constraint thread is empty");
        needed = std::max(needed, c.thread.depth());
    }
    while (t.depth() < needed) {
        if (!auto_extend) {
            throw ContractViolation("constraint thread is deeper than the tower");
        }
        t = extend_tower(t);
    }
    for (const auto& c : constraints) {
        if (!is_bond_consistent(t, c.thread)) {
            throw ContractViolation("constraint thread is not consistent with the tower's bonds");
        }
    }

    std::vector<ThreadPrefix> threads;
    for (const auto& c : constraints) threads.push_back(canonical_extension(t, c.thread, t.depth()));

    std::size_t level = 0;
    while (level <= t.depth() && !pairwise_distinct(threads, level)) ++level;
    if (level > t.depth()) {
        throw NotSeparated("constraint threads coincide at every level up to " +
                           std::to_string(t.depth()));
    }

    std::optional<Vertex> anchor;
    for (;;) {
        while (level <= t.depth()) {
            anchor = find_realizer(t.level(level), type_at(threads, constraints, level));
            if (anchor) break;
            ++level;
        }
        if (anchor) break;
        if (!auto_extend) {
            throw NotSeparated("type has no realizer at any level up to " +
                               std::to_string(t.depth()));
        }
        if (t.depth() >= 1) {
            throw InternalConsistencyError("an n-saturated level failed to realize a type");
        }
        t = extend_tower(t);
        for (auto& th : threads) th = canonical_extension(t, th, t.depth());
    }

    RealizerHandle h;
    h.separation_level = level;
    h.prefix.entries.assign(level + 1, 0);
    h.prefix.entries[level] = *anchor;
    for (std::size_t d = level; d > 0; --d) {
        h.prefix.entries[d - 1] = t.bond(d - 1)(h.prefix.entries[d]);
    }
    for (std::size_t i = 0; i < threads.size(); ++i) {
        auto at_level = truncate_or_extend(t, threads[i], level);
        (constraints[i].bit ? h.positive_set : h.negative_set).push_back(std::move(at_level));
    }
    while (h.prefix.depth() < t.depth()) h = extend_realizer(t, h);
    return h;
}

}  // namespace

RealizerHandle realize_type(Tower& t, const std::vector<ThreadConstraint>& constraints,
                            bool auto_extend) {
    return realize_impl(t, constraints, auto_extend);
}

RealizerHandle realize_type(const Tower& t, const std::vector<ThreadConstraint>& constraints) {
    Tower copy = t;
    return realize_impl(copy, constraints, false);
}

RealizerHandle extend_realizer(const Tower& t, const RealizerHandle& h) {
    const std::size_t d = h.prefix.depth();
    if (d >= t.depth()) {
        throw ContractViolation("tower has no level above the realizer's depth " +
                                std::to_string(d));
    }
    RealizerHandle out = h;
    for (auto& th : out.positive_set) th = truncate_or_extend(t, th, d + 1);
    for (auto& th : out.negative_set) th = truncate_or_extend(t, th, d + 1);

    const FiniteGraph& upper = t.level(d + 1);
    for (Vertex w : t.bond(d).fiber(h.prefix.entries[d])) {
        const bool ok = std::all_of(out.positive_set.begin(), out.positive_set.end(),
                                    [&](const ThreadPrefix& x) {
                                        return upper.adjacent_unchecked(w, x.entries[d + 1]);
                                    });
        if (ok) {
            out.prefix.entries.push_back(w);
            return out;
        }
    }
    throw InternalConsistencyError("no preimage of the realizer entry at level " +
                                   std::to_string(d) + " is adjacent to every positive thread");
}

RealizationReport verify_realization(const Tower& t, const RealizerHandle& h) {
    auto fail = [](std::string why) { return RealizationReport{false, std::move(why)}; };
    if (!is_bond_consistent(t, h.prefix)) return fail("realizer prefix is not bond-consistent");
    const std::size_t depth = h.prefix.depth();
    const std::size_t sep = h.separation_level;
    if (sep > depth) return fail("separation level lies above the prefix");

    std::vector<ThreadPrefix> pos;
    std::vector<ThreadPrefix> neg;
    for (const auto& x : h.positive_set) {
        if (!is_bond_consistent(t, x)) return fail("positive thread is not bond-consistent");
        pos.push_back(truncate_or_extend(t, x, depth));
    }
    for (const auto& x : h.negative_set) {
        if (!is_bond_consistent(t, x)) return fail("negative thread is not bond-consistent");
        neg.push_back(truncate_or_extend(t, x, depth));
    }

    std::vector<Vertex> at_sep;
    for (const auto& x : pos) at_sep.push_back(x.entries[sep]);
    for (const auto& x : neg) at_sep.push_back(x.entries[sep]);
    auto sorted = at_sep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return fail("constraint threads are not distinct at the separation level");
    }
    const Vertex v = h.prefix.entries[sep];
    if (std::find(at_sep.begin(), at_sep.end(), v) != at_sep.end()) {
        return fail("realizer coincides with a constraint thread at the separation level");
    }
    for (std::size_t d = 0; d <= depth; ++d) {
        for (const auto& x : pos) {
            if (!t.level(d).adjacent(h.prefix.entries[d], x.entries[d])) {
                return fail("positive thread not adjacent at level " + std::to_string(d));
            }
        }
    }
    for (const auto& x : neg) {
        if (t.level(sep).adjacent(v, x.entries[sep])) {
            return fail("negative thread adjacent at the separation level");
        }
    }
    return {};
}

}  // namespace satgraph
