#include "satgraph/builder.hpp"

#include <limits>
#include <string>

#include "satgraph/bounds.hpp"
#include "satgraph/errors.hpp"
#include "satgraph/product_graph.hpp"
#include "satgraph/saturation.hpp"
#include "satgraph/seeded_stream.hpp"

namespace satgraph {

std::uint64_t attempt_key(std::uint64_t seed, std::size_t attempt) {
    return derive_seed(seed, attempt);
}

std::uint32_t resolve_m(const BuildParams& params) {
    if (!params.base) throw ContractViolation("build needs a base graph");
    const std::uint64_t k = params.base->vertex_count();
    if (params.mode == BuildMode::kEmpirical) {
        if (!params.m || *params.m == 0) {
            throw ContractViolation("empirical mode needs an explicit m >= 1");
        }
        return *params.m;
    }
    if (params.m) {
        if (*params.m == 0 ||
            failure_bound_a(params.n, k, *params.m) + failure_bound_b(params.n, k, *params.m) >= 1) {
            throw ContractViolation("m = " + std::to_string(*params.m) +
                                    " is not certified: combined failure bound is not below 1");
        }
        return *params.m;
    }
    const std::uint64_t m = minimal_certified_m(params.n, k);
    if (m > std::numeric_limits<std::uint32_t>::max()) {
        throw ContractViolation("certified m does not fit in 32 bits");
    }
    return static_cast<std::uint32_t>(m);
}

Extension build_extension(const BuildParams& params) {
    if (params.n == 0) throw ContractViolation("saturation order must be at least 1");
    if (!params.base) throw ContractViolation("build needs a base graph");
    if (params.max_attempts == 0) throw ContractViolation("max_attempts must be positive");
    if (!is_weakly_n_saturated(*params.base, params.n).holds) {
        throw ContractViolation("base graph is not weakly " + std::to_string(params.n) +
                                "-saturated");
    }
    const std::uint32_t m = resolve_m(params);
    for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
        auto sample = sample_product_graph(params.base, m, attempt_key(params.seed, attempt));
        if (!is_n_saturated(*sample.graph, params.n).holds) continue;
        if (!check_condition_b(*sample.graph, *params.base, m, params.n).holds) continue;
        return {std::move(sample.graph), std::move(sample.projection), m, attempt + 1};
    }
    throw AttemptsExhausted("no acceptable sample in " + std::to_string(params.max_attempts) +
                            " attempts (n = " + std::to_string(params.n) +
                            ", m = " + std::to_string(m) + ")");
}

}  // namespace satgraph
