#include <bicover/gadget.hpp>

#include <bicover/checked.hpp>
#include <bicover/errors.hpp>

#include <string>

using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace bicover
{
    auto PartSizes::total() const -> long long
    {
        long long n = 0;
        for (long long x : p)
            n = checked_add(n, x);
        return n;
    }

    namespace
    {
        auto validate_shape(const PartSizes & sizes) -> void
        {
            if (sizes.p.size() != sizes.q.size())
                throw InputError("part size vectors have different lengths");
            if (sizes.p.empty())
                throw InputError("part size vectors are empty");
            for (long long x : sizes.p)
                if (x < 1)
                    throw InputError("part sizes must be positive, got " + to_string(x));
            for (long long x : sizes.q)
                if (x < 1)
                    throw InputError("part sizes must be positive, got " + to_string(x));
        }

        auto sum(const vector<long long> & v) -> long long
        {
            long long s = 0;
            for (long long x : v)
                s = checked_add(s, x);
            return s;
        }
    }

    auto validate_part_sizes(const PartSizes & sizes) -> void
    {
        validate_shape(sizes);
        const long long totp = sum(sizes.p);
        const long long totq = sum(sizes.q);
        if (totp != totq)
            throw InputError("side totals differ: " + to_string(totp) + " vs " + to_string(totq));
    }

    auto build_gadgets(const PartSizes & sizes) -> GadgetEdges
    {
        validate_part_sizes(sizes);

        GadgetEdges g;
        const int n = sizes.parts();
        for (int side = 0; side <= 1; ++side) {
            const auto & counts = side == 0 ? sizes.p : sizes.q;
            for (int part = 1; part <= n; ++part)
                for (long long copy = 1; copy <= counts[part - 1]; ++copy)
                    g.vertices.push_back({ side, part, static_cast<int>(copy) });
        }

        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
                const auto & u = g.vertices[i];
                const auto & v = g.vertices[j];
                if (u.part == v.part)
                    continue;
                if (u.side == v.side)
                    g.h_edges.insert(make_gadget_edge(u, v));
                else
                    g.h_prime_edges.insert(make_gadget_edge(u, v));
            }
        }
        return g;
    }

    auto edge_counts(const PartSizes & sizes) -> EdgeCounts
    {
        validate_part_sizes(sizes);

        const long long n_total = sum(sizes.p);
        const long long nn = checked_mul(n_total, n_total);

        long long pp = 0, qq = 0, pq = 0;
        for (std::size_t i = 0; i < sizes.p.size(); ++i) {
            pp = checked_add(pp, checked_mul(sizes.p[i], sizes.p[i]));
            qq = checked_add(qq, checked_mul(sizes.q[i], sizes.q[i]));
            pq = checked_add(pq, checked_mul(sizes.p[i], sizes.q[i]));
        }

        EdgeCounts counts;
        counts.h = (nn - pp) / 2 + (nn - qq) / 2;
        counts.h_prime = checked_sub(nn, pq);
        return counts;
    }

    auto edge_gap(const PartSizes & sizes) -> long long
    {
        const auto counts = edge_counts(sizes);
        return checked_sub(counts.h_prime, counts.h);
    }

    auto complement_components(const PartSizes & sizes) -> ComplementComponents
    {
        validate_part_sizes(sizes);

        ComplementComponents result;
        result.clique_edges = 0;
        result.biclique_edges = 0;
        for (long long x : sizes.p) {
            result.cliques.push_back(x);
            result.clique_edges = checked_add(result.clique_edges, checked_mul(x, x - 1) / 2);
        }
        for (long long x : sizes.q) {
            result.cliques.push_back(x);
            result.clique_edges = checked_add(result.clique_edges, checked_mul(x, x - 1) / 2);
        }
        for (std::size_t i = 0; i < sizes.p.size(); ++i) {
            result.bicliques.push_back({ sizes.p[i], sizes.q[i] });
            result.biclique_edges = checked_add(result.biclique_edges,
                    checked_mul(sizes.p[i], sizes.q[i]));
        }
        return result;
    }

    auto clique_union_bijection(int p, int q) -> BijectionMap
    {
        if (p < 1 || q < 1)
            throw InputError("p and q must be positive");
        if (p > q)
            throw InputError("requires p <= q; use the normalising wrapper for either order");

        BijectionMap map;
        map.p = p;
        map.q = q;
        for (int i = 1; i <= p; ++i) {
            for (int j = 1; j <= q; ++j) {
                if (i == j)
                    continue;
                if (i < j && j <= p)
                    map.entries[{ i, j }] = TaggedEdge{ false, i, j };
                else
                    map.entries[{ i, j }] = TaggedEdge{ true, std::min(i, j), std::max(i, j) };
            }
        }
        for (int a = p + 1; a <= q; ++a)
            for (int b = a + 1; b <= q; ++b)
                map.unhit.push_back({ a, b });
        return map;
    }

    auto clique_union_bijection_normalized(int a, int b) -> BijectionMap
    {
        if (a <= b)
            return clique_union_bijection(a, b);
        auto map = clique_union_bijection(b, a);
        map.swapped = true;
        return map;
    }

    auto cover_induced_gadget(const CoverSpec & cover, const Labeling & sigma1,
            const Labeling & sigma2) -> PartSizes
    {
        validate_cover(cover);
        if (! (pattern_of(sigma1, cover) == pattern_of(sigma2, cover)))
            throw InputError("labelings do not have equal patterns under this cover");

        PartSizes sizes;
        for (int x : sigma1.values)
            sizes.p.push_back(x);
        for (int x : sigma2.values)
            sizes.q.push_back(x);
        validate_part_sizes(sizes);
        return sizes;
    }

    namespace
    {
        struct SideSums
        {
            long long left_p, left_q, right_p, right_q;
        };

        auto side_sums(const CoverSpec & cover, const PartSizes & sizes, int index) -> SideSums
        {
            if (index < 0 || index >= static_cast<int>(cover.bicliques.size()))
                throw InputError("biclique index " + to_string(index) + " out of range");
            validate_shape(sizes);
            if (sizes.parts() != cover.n)
                throw InputError("part size vectors have length " + to_string(sizes.parts()) +
                        ", expected " + to_string(cover.n));

            const auto & b = cover.bicliques[index];
            SideSums s{ 0, 0, 0, 0 };
            for (VertexId v : b.left) {
                s.left_p = checked_add(s.left_p, sizes.p[v - 1]);
                s.left_q = checked_add(s.left_q, sizes.q[v - 1]);
            }
            for (VertexId v : b.right) {
                s.right_p = checked_add(s.right_p, sizes.p[v - 1]);
                s.right_q = checked_add(s.right_q, sizes.q[v - 1]);
            }
            return s;
        }
    }

    auto biclique_balance(const CoverSpec & cover, const PartSizes & sizes, int index)
            -> BalanceCount
    {
        const auto s = side_sums(cover, sizes, index);
        BalanceCount balance;
        balance.top = checked_add(checked_mul(s.left_p, s.right_p),
                checked_mul(s.left_q, s.right_q));
        balance.bottom = checked_add(checked_mul(s.left_p, s.right_q),
                checked_mul(s.left_q, s.right_p));
        return balance;
    }

    auto coverage_blocks(const CoverSpec & cover, const PartSizes & sizes, int index)
            -> CoverageBlocks
    {
        side_sums(cover, sizes, index);  // shared validation

        const auto & b = cover.bicliques[index];
        auto expand = [&](const set<VertexId> & parts, int side) {
            vector<GadgetVertex> out;
            const auto & counts = side == 0 ? sizes.p : sizes.q;
            for (VertexId v : parts)
                for (long long copy = 1; copy <= counts[v - 1]; ++copy)
                    out.push_back({ side, v, static_cast<int>(copy) });
            return out;
        };
        auto block = [](const vector<GadgetVertex> & a, const vector<GadgetVertex> & b_) {
            set<GadgetEdge> edges;
            for (const auto & u : a)
                for (const auto & v : b_)
                    edges.insert(make_gadget_edge(u, v));
            return edges;
        };

        const auto left_unprimed = expand(b.left, 0);
        const auto left_primed = expand(b.left, 1);
        const auto right_unprimed = expand(b.right, 0);
        const auto right_primed = expand(b.right, 1);

        CoverageBlocks blocks;
        blocks.h_top_unprimed = block(left_unprimed, right_unprimed);
        blocks.h_top_primed = block(left_primed, right_primed);
        blocks.hp_bottom_unprimed_primed = block(left_unprimed, right_primed);
        blocks.hp_bottom_primed_unprimed = block(left_primed, right_unprimed);
        return blocks;
    }
}
