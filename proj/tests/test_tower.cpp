#include <gtest/gtest.h>

#include "satgraph/errors.hpp"
#include "satgraph/product_graph.hpp"
#include "satgraph/saturation.hpp"
#include "satgraph/tower.hpp"
#include "test_support.hpp"

namespace satgraph {
namespace {

using testing::share;

const Tower& two_level_tower() {
    static const Tower t = extend_tower(extend_tower(new_tower(2, 42)));
    return t;
}

Tower with_level_replaced(const Tower& t, std::size_t d, FiniteGraph g) {
    auto levels = t.levels();
    auto bonds = t.bonds();
    levels[d] = share(std::move(g));
    const auto& old = t.bond(d - 1);
    bonds[d - 1] = GraphMap(levels[d], levels[d - 1],
                            std::vector<Vertex>(old.image().begin(), old.image().end()));
    if (d < t.depth()) {
        const auto& above = t.bond(d);
        bonds[d] = GraphMap(levels[d + 1], levels[d],
                            std::vector<Vertex>(above.image().begin(), above.image().end()));
    }
    return Tower(t.n(), t.seed(), levels, bonds, t.per_level_m());
}

TEST(NewTower, RootIsComplete) {
    for (std::size_t n : {1U, 3U, 4U}) {
        const auto t = new_tower(n, 0);
        EXPECT_EQ(t.depth(), 0U);
        EXPECT_EQ(t.level(0), FiniteGraph::complete(n));
        EXPECT_TRUE(verify_tower(t).ok);
    }
    EXPECT_EQ(new_tower(4, 0).level(0).cross_edge_count(), 6U);
    EXPECT_THROW(new_tower(0, 0), ContractViolation);
}

TEST(ExtendTower, SizesFollowProductEncoding) {
    const auto& t = two_level_tower();
    EXPECT_EQ(t.per_level_m()[0], 6U);
    EXPECT_EQ(t.level(1).vertex_count(), 14U);
    EXPECT_EQ(t.level(2).vertex_count(), 14U * (t.per_level_m()[1] + 1));
    const auto one = extend_tower(new_tower(1, 9));
    EXPECT_EQ(one.level(1).vertex_count(), 2U);
}

TEST(ExtendTower, SharesLowerLevelsAndIsDeterministic) {
    const auto& t = two_level_tower();
    const auto again = extend_tower(extend_tower(new_tower(2, 42)));
    EXPECT_EQ(t.level(2), again.level(2));
    const auto more = extend_tower(t);
    EXPECT_EQ(more.level_ptr(2), t.level_ptr(2));
    EXPECT_EQ(t.depth(), 2U);
    const auto other = extend_tower(new_tower(2, 43));
    EXPECT_FALSE(other.level(1) == t.level(1));
}

TEST(ExtendTower, EmpiricalOverride) {
    ExtendOptions opts;
    opts.mode = BuildMode::kEmpirical;
    opts.m_override = 1;
    opts.max_attempts = 3;
    EXPECT_THROW(extend_tower(new_tower(4, 0), opts), AttemptsExhausted);
}

TEST(VerifyTower, FreshTowerPasses) {
    const auto r = verify_tower(two_level_tower());
    EXPECT_TRUE(r.ok) << r.invariant << ": " << r.detail;
    EXPECT_TRUE(verify_tower(extend_tower(new_tower(3, 1))).ok);
}

TEST(VerifyTower, DeletedEdgeIsCaughtAtItsLevel) {
    const auto& t = two_level_tower();
    const auto [a, b] = t.level(1).edges().back();
    const auto broken = with_level_replaced(t, 1, t.level(1).with_edge_toggled(a, b));
    const auto r = verify_tower(broken);
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(r.level, 1U);
    EXPECT_FALSE(r.invariant.empty());
}

TEST(VerifyTower, EverySingleToggleOfTopLevelIsCaught) {
    const auto t = extend_tower(new_tower(2, 8));
    const auto& top = t.level(1);
    for (Vertex a = 0; a < top.vertex_count(); ++a) {
        for (Vertex b = a + 1; b < top.vertex_count(); ++b) {
            const auto r = verify_tower(with_level_replaced(t, 1, top.with_edge_toggled(a, b)));
            ASSERT_FALSE(r.ok) << a << "-" << b;
        }
    }
}

TEST(VerifyTower, StructuralChecksWithoutProvenance) {
    const auto& t = two_level_tower();
    // Keeping only the copy-0 edges leaves a quotient map but kills saturation.
    const ProductEncoding enc(2, t.per_level_m()[0]);
    std::vector<Edge> sparse;
    for (const auto& [a, b] : t.level(1).edges()) {
        if (enc.decode(a).copy == 0 && enc.decode(b).copy == 0) sparse.emplace_back(a, b);
    }
    const auto broken = with_level_replaced(
        t, 1, FiniteGraph::from_edges(t.level(1).vertex_count(), sparse));
    VerifyOptions opts;
    opts.check_provenance = false;
    const auto r = verify_tower(broken, opts);
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(r.level, 1U);
    EXPECT_EQ(r.invariant, "level_saturation");
}

TEST(VerifyTower, WrongRootDetected) {
    const Tower bad(3, 0, {share(testing::path_graph(3))}, {}, {});
    const auto r = verify_tower(bad);
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(r.invariant, "root_complete");
    EXPECT_EQ(r.level, 0U);
}

TEST(Threads, CanonicalExtensionTakesCopyZero) {
    const auto& t = two_level_tower();
    const auto a = canonical_extension(t, ThreadPrefix{{1}}, 2);
    ASSERT_EQ(a.entries.size(), 3U);
    EXPECT_EQ(a.entries[1], ProductEncoding(2, t.per_level_m()[0]).flatten({1, 0}));
    EXPECT_EQ(a.entries[2], ProductEncoding(14, t.per_level_m()[1]).flatten({a.entries[1], 0}));
    EXPECT_TRUE(is_bond_consistent(t, a));
    EXPECT_THROW(canonical_extension(t, ThreadPrefix{{1}}, 3), ContractViolation);
    EXPECT_FALSE(is_bond_consistent(t, ThreadPrefix{{0, 13}}));
}

TEST(Threads, CanonicalThreadProjectsDown) {
    const auto& t = two_level_tower();
    const auto a = canonical_thread(t, 1, 9, 2);
    EXPECT_EQ(a.entries[1], 9U);
    EXPECT_EQ(a.entries[0], t.bond(0)(9));
    EXPECT_TRUE(is_bond_consistent(t, a));
}

TEST(AdjacencyStatus, Examples) {
    const auto& t = two_level_tower();
    const auto a = canonical_thread(t, 0, 0, 2);
    const auto b = canonical_thread(t, 0, 1, 2);
    // Copy-0 lifts keep the root edge at every level.
    const auto s = adjacency_status(t, a, b, 2);
    EXPECT_FALSE(s.separated());
    EXPECT_EQ(s.level, 2U);
    EXPECT_EQ(adjacency_status(t, a, a, 2).kind, AdjacencyStatus::Kind::kAdjacentThroughDepth);

    // Some vertex over 1 is non-adjacent to the copy-0 lift of 0 at level 1.
    std::optional<Vertex> far;
    for (Vertex w : t.bond(0).fiber(1)) {
        if (!t.level(1).adjacent(a.entries[1], w)) far = w;
    }
    ASSERT_TRUE(far.has_value());
    const auto c = canonical_thread(t, 1, *far, 2);
    const auto sc = adjacency_status(t, a, c, 2);
    EXPECT_TRUE(sc.separated());
    EXPECT_EQ(sc.level, 1U);
}

// Property: once separated, threads stay non-adjacent at every higher level.
TEST(AdjacencyStatus, SeparationPersistsUpward) {
    const auto& t = two_level_tower();
    const auto& top = t.level(2);
    for (Vertex u = 0; u < top.vertex_count(); u += 3) {
        const auto a = canonical_thread(t, 2, u, 2);
        for (Vertex v = 0; v < top.vertex_count(); v += 5) {
            const auto b = canonical_thread(t, 2, v, 2);
            const auto s = adjacency_status(t, a, b, 2);
            if (s.separated()) {
                for (std::size_t d = s.level; d <= 2; ++d) {
                    ASSERT_FALSE(t.level(d).adjacent(a.entries[d], b.entries[d]));
                }
            }
        }
    }
}

// Property: every vertex below the top splits into at least two preimages,
// so distinct threads through one vertex exist.
TEST(Threads, OneStepSplitting) {
    const auto& t = two_level_tower();
    for (std::size_t d = 0; d < t.depth(); ++d) {
        for (Vertex v = 0; v < t.level(d).vertex_count(); ++v) {
            EXPECT_GE(t.bond(d).fiber(v).size(), 2U);
        }
    }
}

TEST(Tower, LevelsAreSaturated) {
    const auto& t = two_level_tower();
    for (std::size_t d = 1; d <= t.depth(); ++d) EXPECT_TRUE(is_n_saturated(t.level(d), 2).holds);
}

}  // namespace
}  // namespace satgraph
