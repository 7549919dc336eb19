#pragma once

#include <tmkit/config.hpp>
#include <tmkit/graph.hpp>

#include <string>
#include <vector>

namespace tmkit
{
    /// Printable string, equal for two rooted graphs iff they are isomorphic
    /// by a map preserving root labels. Format: "<n>|<labels>|<hex adjacency>".
    auto canonical_form(const RootedGraph & g, const Ceilings & ceilings = {}) -> std::string;

    auto canonical_form(const Graph & g, const Ceilings & ceilings = {}) -> std::string;

    /// A vertex order realising the canonical form: order[i] is the vertex
    /// placed at position i.
    auto canonical_order(const RootedGraph & g, const Ceilings & ceilings = {}) -> std::vector<Vertex>;

    /// Inverse of canonical_form: rebuilds the rooted graph in canonical
    /// vertex order.
    auto decode_canonical(const std::string & form) -> RootedGraph;
}
