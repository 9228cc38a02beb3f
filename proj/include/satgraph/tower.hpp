#ifndef SATGRAPH_TOWER_HPP
#define SATGRAPH_TOWER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satgraph/builder.hpp"
#include "satgraph/graph_map.hpp"

namespace satgraph {

/**
 * Finite initial segment G_0 <- G_1 <- ... <- G_D of an inverse system.
 *
 * bonds[d] maps levels[d + 1] onto levels[d]; per_level_m[d] is the copy
 * parameter used to build levels[d + 1] over levels[d]. Values are immutable;
 * extending shares the lower levels with the original.
 */
class Tower {
public:
    /// Checks only shape (counts and bond endpoints), not the tower invariants.
    Tower(std::size_t n, std::uint64_t seed, std::vector<GraphPtr> levels,
          std::vector<GraphMap> bonds, std::vector<std::uint32_t> per_level_m);

    std::size_t n() const noexcept { return n_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t depth() const noexcept { return levels_.size() - 1; }
    const FiniteGraph& level(std::size_t d) const { return *levels_.at(d); }
    const GraphPtr& level_ptr(std::size_t d) const { return levels_.at(d); }
    const std::vector<GraphPtr>& levels() const noexcept { return levels_; }
    const GraphMap& bond(std::size_t d) const { return bonds_.at(d); }
    const std::vector<GraphMap>& bonds() const noexcept { return bonds_; }
    const std::vector<std::uint32_t>& per_level_m() const noexcept { return per_level_m_; }

private:
    std::size_t n_;
    std::uint64_t seed_;
    std::vector<GraphPtr> levels_;
    std::vector<GraphMap> bonds_;
    std::vector<std::uint32_t> per_level_m_;
};

/// Consistent prefix a(0..d) of an inverse-limit thread.
struct ThreadPrefix {
    std::vector<Vertex> entries;

    std::size_t depth() const { return entries.size() - 1; }
    friend bool operator==(const ThreadPrefix&, const ThreadPrefix&) = default;
};

/// Depth-0 tower holding the complete graph K_n.
Tower new_tower(std::size_t n, std::uint64_t seed);

/// Seed of the construction step that builds level d + 1.
std::uint64_t level_seed(std::uint64_t tower_seed, std::size_t d);

struct ExtendOptions {
    BuildMode mode = BuildMode::kCertified;
    std::optional<std::uint32_t> m_override;
    std::size_t max_attempts = 1000;
};

/// Appends one level built over the current top. Propagates AttemptsExhausted.
Tower extend_tower(const Tower& t, const ExtendOptions& options = {});

struct TowerReport {
    bool ok = true;
    std::string invariant;  // empty when ok
    std::optional<std::size_t> level;
    std::string detail;
};

struct VerifyOptions {
    /// Also require every level to be the seeded sample the builder would draw.
    bool check_provenance = true;
    std::size_t provenance_attempts = 1000;
};

/**
 * Re-checks, from the raw levels and bonds:
 *   root_complete        level 0 is K_n
 *   product_encoding     |G_{d+1}| = |G_d| * (m_d + 1) with m_d >= 1
 *   bond_surjective / bond_homomorphism / bond_strict   (quotient map)
 *   level_saturation     every level d >= 1 is n-saturated
 *   bond_lifting         lifting property of every bond
 *   one_step_splitting   every vertex below the top has two or more preimages
 *   seeded_provenance    every level and bond is the seeded product sample
 * and reports the first failure in level order.
 */
TowerReport verify_tower(const Tower& t, const VerifyOptions& options = {});

/// a(k) = bonds[k](a(k + 1)) for all k, with every entry a vertex of its level.
bool is_bond_consistent(const Tower& t, const ThreadPrefix& a);

/// Extends with the copy-0 lift (i, 0) at each new level.
/// Throws ContractViolation when target_depth exceeds the tower.
ThreadPrefix canonical_extension(const Tower& t, const ThreadPrefix& prefix,
                                 std::size_t target_depth);

/// Thread through `vertex` at `level`: projected below, copy-0 lifts above, up to `depth`.
ThreadPrefix canonical_thread(const Tower& t, std::size_t level, Vertex vertex, std::size_t depth);

struct AdjacencyStatus {
    enum class Kind { kSeparatedNonAdjacent, kAdjacentThroughDepth };
    Kind kind = Kind::kAdjacentThroughDepth;
    std::size_t level = 0;  // certificate level when separated, else the depth checked

    bool separated() const noexcept { return kind == Kind::kSeparatedNonAdjacent; }
};

/// First level <= depth where the entries are non-adjacent. Limit adjacency
/// itself is never asserted, only "adjacent through depth".
AdjacencyStatus adjacency_status(const Tower& t, const ThreadPrefix& a, const ThreadPrefix& b,
                                 std::size_t depth);

}  // namespace satgraph

#endif  // SATGRAPH_TOWER_HPP
