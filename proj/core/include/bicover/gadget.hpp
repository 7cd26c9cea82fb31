#ifndef BICOVER_GADGET_HPP
#define BICOVER_GADGET_HPP

#include <bicover/cover.hpp>
#include <bicover/witness.hpp>

#include <compare>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace bicover
{
    // Part sizes for the two gadget graphs: p[i] = |V_{i+1}|, q[i] = |V'_{i+1}|.
    // All parts nonempty; both sides total N.
    struct PartSizes
    {
        std::vector<long long> p;
        std::vector<long long> q;

        int parts() const { return static_cast<int>(p.size()); }
        long long total() const;  // N
    };

    // Positivity, equal lengths, equal totals. Throws InputError.
    auto validate_part_sizes(const PartSizes & sizes) -> void;

    // A labelled gadget vertex: copy number `copy` (1-based) of part `part`
    // (1-based) on the unprimed (side 0) or primed (side 1) side.
    struct GadgetVertex
    {
        int side;
        int part;
        int copy;

        friend auto operator<=> (const GadgetVertex &, const GadgetVertex &) = default;
    };

    using GadgetEdge = std::pair<GadgetVertex, GadgetVertex>;  // first < second

    inline GadgetEdge make_gadget_edge(GadgetVertex a, GadgetVertex b)
    {
        return a < b ? GadgetEdge{ a, b } : GadgetEdge{ b, a };
    }

    // H: all within-side pairs across distinct parts (two disjoint complete
    // multipartite graphs). H': all cross-side pairs across distinct parts
    // (bipartite). Materialised as explicit edge sets so counts are never
    // assumed from formulas.
    struct GadgetEdges
    {
        std::vector<GadgetVertex> vertices;  // the 2N-vertex universe
        std::set<GadgetEdge> h_edges;
        std::set<GadgetEdge> h_prime_edges;
    };

    auto build_gadgets(const PartSizes & sizes) -> GadgetEdges;

    struct EdgeCounts
    {
        long long h;        // (N^2 - sum p^2)/2 + (N^2 - sum q^2)/2
        long long h_prime;  // N^2 - sum p*q
    };

    // Closed forms; cross-checked against build_gadgets cardinalities by the
    // test suites rather than trusted.
    auto edge_counts(const PartSizes & sizes) -> EdgeCounts;

    // E(H') - E(H) = sum (p_i - q_i)^2 / 2 >= 0, zero iff p == q.
    auto edge_gap(const PartSizes & sizes) -> long long;

    // Complements: each component of H against K_N gives disjoint cliques of
    // sizes p_1..p_n, q_1..q_n; H' against K_{N,N} gives the bicliques
    // (p_i, q_i). Edge totals included so callers can do the accounting.
    struct ComplementComponents
    {
        std::vector<long long> cliques;
        std::vector<std::pair<long long, long long>> bicliques;
        long long clique_edges;    // sum C(size,2) = 2*C(N,2) - E(H)
        long long biclique_edges;  // sum p_i*q_i   = N^2 - E(H')
    };

    auto complement_components(const PartSizes & sizes) -> ComplementComponents;

    // One edge of K_p or of K_q, endpoints a < b.
    struct TaggedEdge
    {
        bool in_kq;
        int a;
        int b;

        friend bool operator== (const TaggedEdge &, const TaggedEdge &) = default;
        friend auto operator<=> (const TaggedEdge &, const TaggedEdge &) = default;
    };

    // The injection behind the counting lemma: domain pairs (i,j) with
    // i in 1..p, j in 1..q, i != j; (i,j) goes to {i,j} in K_p when
    // i < j <= p and to {i,j} in K_q otherwise. Exactly the K_q edges with
    // both endpoints above p are missed, C(q-p,2) of them.
    struct BijectionMap
    {
        int p;
        int q;
        bool swapped = false;  // caller passed (q,p); set by the normalising wrapper
        std::map<std::pair<int, int>, TaggedEdge> entries;
        std::vector<std::pair<int, int>> unhit;  // K_q edges untouched, ascending
    };

    // Requires 1 <= p <= q.
    auto clique_union_bijection(int p, int q) -> BijectionMap;

    // Accepts either order, swaps to p <= q and records the swap.
    auto clique_union_bijection_normalized(int a, int b) -> BijectionMap;

    // p_i = sigma1(i), q_i = sigma2(i). Requires positive labelings of equal
    // length with equal patterns under the cover; equal totals follow from
    // the equal final pattern entry.
    auto cover_induced_gadget(const CoverSpec & cover, const Labeling & sigma1,
            const Labeling & sigma2) -> PartSizes;

    struct BalanceCount
    {
        long long top;     // L*R + L'*R'   (the two blocks covering H)
        long long bottom;  // L*R' + L'*R   (the two blocks covering H')
    };

    // Closed-form block sizes for biclique `index` (0-based): L, R, L', R'
    // are the p/q totals over its two sides. top - bottom = (L-L')(R-R')
    // identically, so equal patterns force balance. Accepts arbitrary
    // positive size vectors of length n; equal totals are not needed here.
    auto biclique_balance(const CoverSpec & cover, const PartSizes & sizes, int index)
            -> BalanceCount;

    // The same four blocks as explicit edge sets over the gadget universe:
    // top two inside H, bottom two inside H'.
    struct CoverageBlocks
    {
        std::set<GadgetEdge> h_top_unprimed;
        std::set<GadgetEdge> h_top_primed;
        std::set<GadgetEdge> hp_bottom_unprimed_primed;
        std::set<GadgetEdge> hp_bottom_primed_unprimed;
    };

    auto coverage_blocks(const CoverSpec & cover, const PartSizes & sizes, int index)
            -> CoverageBlocks;
}

#endif
