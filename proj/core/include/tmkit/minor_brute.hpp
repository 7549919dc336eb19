#pragma once

#include <tmkit/config.hpp>
#include <tmkit/graph.hpp>
#include <tmkit/witness.hpp>

#include <optional>

namespace tmkit
{
    /// Exhaustive minor test: h is a minor of g iff it is a subgraph of some
    /// graph obtained from g by contracting edges. Contractions are explored
    /// depth first, failed quotients are memoised up to isomorphism.
    auto minor_model_brute(const Graph & g, const Graph & h, const Ceilings & ceilings = {}) -> std::optional<MinorModel>;

    /// An injective map from the vertices of h to those of g sending edges to
    /// edges, or nullopt.
    auto find_subgraph(const Graph & g, const Graph & h) -> std::optional<std::vector<Vertex>>;
}
