#pragma once

#include <tmkit/config.hpp>
#include <tmkit/graph.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tmkit
{
    /// A delta-folio, as the set of canonical forms of its members.
    struct Folio
    {
        int delta = 0;
        std::set<std::string> patterns;

        auto contains(const RootedGraph & h) const -> bool;
        auto operator== (const Folio &) const -> bool = default;
    };

    /// All unordered pairs of the given sorted labels, in lexicographic order.
    /// Bit i of an extension mask selects pair i.
    auto label_pairs(const std::vector<int> & labels) -> std::vector<std::pair<int, int>>;

    /// g with the root edges selected by mask added.
    auto extend_by_mask(const RootedGraph & g, std::uint64_t mask) -> RootedGraph;

    /// For every graph X on the roots (encoded as a mask over label_pairs of
    /// the root labels) the delta-folio of g together with X.
    struct ExtendedFolio
    {
        int delta = 0;
        std::vector<int> labels;
        std::map<std::uint64_t, Folio> entries;

        auto operator== (const ExtendedFolio &) const -> bool = default;
    };

    /// Members of enumerate_patterns(root labels of g, delta) that are
    /// topological minors of g, checked one by one with tmc_brute.
    auto folio_brute(const RootedGraph & g, int delta, const Ceilings & ceilings = {}) -> Folio;

    auto extended_folio_brute(const RootedGraph & g, int delta, const Ceilings & ceilings = {}) -> ExtendedFolio;

    /// Compares the extended folios of g - S and g - S - v for every S of at
    /// most k vertices other than v. Throws PreconditionFailed if v is a root.
    auto is_dk_irrelevant_brute(const RootedGraph & g, Vertex v, int delta, int k, const Ceilings & ceilings = {}) -> bool;

    /// Checks |R(g)| against alpha(delta) and the folio_roots ceiling.
    auto check_folio_roots(const RootedGraph & g, int delta, const Ceilings & ceilings) -> void;
}
