#ifndef SATGRAPH_SATURATION_HPP
#define SATGRAPH_SATURATION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "satgraph/finite_graph.hpp"

namespace satgraph {

/**
 * A 0/1 assignment over a finite vertex set A (a "type over A").
 *
 * Entries are kept sorted by vertex; the domain never has duplicates.
 */
class TypeSpec {
public:
    TypeSpec() = default;

    /// Throws ContractViolation on a repeated vertex.
    explicit TypeSpec(std::vector<std::pair<Vertex, bool>> entries);

    /// Type over `domain` with every value equal to `value`.
    static TypeSpec constant(std::span<const Vertex> domain, bool value);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::vector<std::pair<Vertex, bool>>& entries() const noexcept { return entries_; }
    std::vector<Vertex> domain() const;
    bool contains(Vertex v) const noexcept;

    friend bool operator==(const TypeSpec&, const TypeSpec&) = default;

private:
    std::vector<std::pair<Vertex, bool>> entries_;
};

/// Outcome of a saturation check. The counterexample's domain is the set A.
struct SaturationReport {
    bool holds = true;
    std::optional<TypeSpec> counterexample;
};

/// True iff v is adjacent to exactly the vertices a with f(a) = 1.
/// Throws ContractViolation when v lies in the domain of f.
bool realizes(const FiniteGraph& g, Vertex v, const TypeSpec& f);

/// Smallest vertex outside dom(f) realizing f.
std::optional<Vertex> find_realizer(const FiniteGraph& g, const TypeSpec& f);

/// Every type over every A with |A| < n has a realizer outside A.
/// The reported counterexample is the lexicographically smallest (A, f).
SaturationReport is_n_saturated(const FiniteGraph& g, std::size_t n);

/// Every A with |A| < n has a common neighbor outside A.
SaturationReport is_weakly_n_saturated(const FiniteGraph& g, std::size_t n);

/// Literal enumeration of every subset of size < n, every type and every
/// candidate vertex through `adjacent` alone. Slow; meant for cross-checking.
bool oracle_is_n_saturated(const FiniteGraph& g, std::size_t n);

}  // namespace satgraph

#endif  // SATGRAPH_SATURATION_HPP
