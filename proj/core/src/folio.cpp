#include <tmkit/folio.hpp>
#include <tmkit/canonical.hpp>
#include <tmkit/error.hpp>
#include <tmkit/pattern.hpp>
#include <tmkit/tmc_brute.hpp>

namespace tmkit
{
    auto Folio::contains(const RootedGraph & h) const -> bool
    {
        return patterns.contains(canonical_form(h));
    }

    auto label_pairs(const std::vector<int> & labels) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0 ; i < labels.size() ; ++i)
            for (std::size_t j = i + 1 ; j < labels.size() ; ++j)
                pairs.emplace_back(labels[i], labels[j]);
        return pairs;
    }

    auto extend_by_mask(const RootedGraph & g, std::uint64_t mask) -> RootedGraph
    {
        auto pairs = label_pairs(g.root_labels());
        std::vector<std::pair<int, int>> chosen;
        for (std::size_t i = 0 ; i < pairs.size() ; ++i)
            if (mask >> i & 1)
                chosen.push_back(pairs[i]);
        return with_root_edges(g, chosen);
    }

    auto check_folio_roots(const RootedGraph & g, int delta, const Ceilings & ceilings) -> void
    {
        if (g.root_count() > alpha(delta))
            throw PreconditionFailed("more than 16 delta^2 roots");
        check_ceiling("folio_roots", ceilings.folio_roots, g.root_count());
    }

    auto folio_brute(const RootedGraph & g, int delta, const Ceilings & ceilings) -> Folio
    {
        if (delta < 1)
            throw InvalidInput("delta must be positive");
        auto labels = g.root_labels();
        Folio folio;
        folio.delta = delta;
        for (auto & h : enumerate_patterns(labels, delta, ceilings)) {
            if (h.vertex_count() > g.vertex_count())
                continue;
            if (tmc_brute(g, h, ceilings))
                folio.patterns.insert(canonical_form(h, ceilings));
        }
        return folio;
    }

    auto extended_folio_brute(const RootedGraph & g, int delta, const Ceilings & ceilings) -> ExtendedFolio
    {
        check_folio_roots(g, delta, ceilings);
        ExtendedFolio result;
        result.delta = delta;
        result.labels = g.root_labels();
        auto pair_count = label_pairs(result.labels).size();
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t(1) << pair_count) ; ++mask)
            result.entries.emplace(mask, folio_brute(extend_by_mask(g, mask), delta, ceilings));
        return result;
    }

    auto is_dk_irrelevant_brute(const RootedGraph & g, Vertex v, int delta, int k, const Ceilings & ceilings) -> bool
    {
        if (! g.graph().has_vertex(v))
            throw InvalidInput("vertex out of range");
        if (g.is_root(v))
            throw PreconditionFailed("root vertices are never irrelevant candidates");
        if (k < 0)
            throw InvalidInput("k must be non-negative");
        check_ceiling("irrelevance_vertices", ceilings.irrelevance_vertices, g.vertex_count());
        check_ceiling("irrelevance_budget", ceilings.irrelevance_budget, k);
        check_ceiling("irrelevance_detail", ceilings.irrelevance_detail, delta);
        check_folio_roots(g, delta, ceilings);

        std::vector<Vertex> others;
        for (Vertex u = 0 ; u < g.vertex_count() ; ++u)
            if (u != v)
                others.push_back(u);
        int m = static_cast<int>(others.size());

        std::vector<Vertex> s;
        auto check = [&] () {
            auto without_s = delete_vertices(g, s);
            std::vector<Vertex> gone{ without_s.old_to_new[v] };
            auto without_v = delete_vertices(without_s.graph, gone);
            return extended_folio_brute(without_s.graph, delta, ceilings) == extended_folio_brute(without_v.graph, delta, ceilings);
        };
        // subsets by increasing size, lexicographic within a size
        auto rec = [&] (auto & self, int from, int size) -> bool {
            if (static_cast<int>(s.size()) == size)
                return check();
            for (int i = from ; i < m ; ++i) {
                s.push_back(others[i]);
                bool ok = self(self, i + 1, size);
                s.pop_back();
                if (! ok)
                    return false;
            }
            return true;
        };
        for (int size = 0 ; size <= std::min(k, m) ; ++size)
            if (! rec(rec, 0, size))
                return false;
        return true;
    }
}
