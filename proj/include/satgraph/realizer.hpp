#ifndef SATGRAPH_REALIZER_HPP
#define SATGRAPH_REALIZER_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "satgraph/tower.hpp"

namespace satgraph {

/// A thread that must be adjacent (bit = true) or non-adjacent (bit = false) to the realizer.
struct ThreadConstraint {
    ThreadPrefix thread;
    bool bit = true;
};

/**
 * Finite prefix of a limit vertex realizing a type over a set of threads.
 *
 * separation_level is the level where the realizer's entry was chosen: the
 * constraint threads are pairwise distinct there and the entry realizes the
 * type in that level's graph. Below it the prefix is the projection of that
 * entry; above it each entry is the smallest preimage adjacent to every
 * positive constraint's entry.
 */
struct RealizerHandle {
    ThreadPrefix prefix;
    std::size_t separation_level = 0;
    std::vector<ThreadPrefix> positive_set;
    std::vector<ThreadPrefix> negative_set;
};

/**
 * Builds a realizer for the type given by `constraints` (at most n - 1).
 *
 * Constraint prefixes shorter than the tower are extended canonically. When
 * `auto_extend` is set and the tower is too shallow (for a constraint prefix
 * or for a level where the type is realized) the tower is extended in
 * certified mode and `t` is replaced by the grown tower.
 *
 * Throws TooManyConstraints for n or more constraints and NotSeparated when
 * the threads collide, or the type has no realizer, at every available level.
 */
RealizerHandle realize_type(Tower& t, const std::vector<ThreadConstraint>& constraints,
                            bool auto_extend);

/// Const overload; never grows the tower.
RealizerHandle realize_type(const Tower& t, const std::vector<ThreadConstraint>& constraints);

/// Extends the handle by one level (the tower must be deeper than the handle).
/// Throws InternalConsistencyError when no admissible lift exists.
RealizerHandle extend_realizer(const Tower& t, const RealizerHandle& h);

struct RealizationReport {
    bool ok = true;
    std::string detail;
};

/// Level-wise check of the realization contract, independent of how the handle was built.
RealizationReport verify_realization(const Tower& t, const RealizerHandle& h);

}  // namespace satgraph

#endif  // SATGRAPH_REALIZER_HPP
