#ifndef SATGRAPH_BUILDER_HPP
#define SATGRAPH_BUILDER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "satgraph/graph_map.hpp"

namespace satgraph {

enum class BuildMode {
    kCertified,  // m chosen so the exact failure bounds sum below 1
    kEmpirical,  // caller-supplied m, correctness still verified per sample
};

struct BuildParams {
    std::size_t n = 1;
    GraphPtr base;
    /// Required in empirical mode. In certified mode it may raise m above the
    /// certified minimum, provided the combined bound at that m stays below 1.
    std::optional<std::uint32_t> m;
    std::uint64_t seed = 0;
    BuildMode mode = BuildMode::kCertified;
    std::size_t max_attempts = 1000;
};

struct Extension {
    GraphPtr graph;
    GraphMap projection;
    std::uint32_t m = 0;
    std::size_t attempts = 0;
};

/// Substream key for rejection attempt `attempt` under `seed`.
std::uint64_t attempt_key(std::uint64_t seed, std::size_t attempt);

/// The m build_extension would use for these parameters.
std::uint32_t resolve_m(const BuildParams& params);

/**
 * Rejection-samples H_m over params.base until a sample is n-saturated and
 * satisfies the lifting event, each attempt drawing from its own substream.
 * Throws ContractViolation when the base is not weakly n-saturated and
 * AttemptsExhausted after max_attempts rejections.
 */
Extension build_extension(const BuildParams& params);

}  // namespace satgraph

#endif  // SATGRAPH_BUILDER_HPP
