#ifndef BICOVER_COVER_HPP
#define BICOVER_COVER_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace bicover
{
    // Vertices of K_n are 1-based: valid ids are 1..n.
    using VertexId = int;

    // Unordered vertex pair, stored normalised with first < second.
    using VertexPair = std::pair<VertexId, VertexId>;

    inline VertexPair make_pair_sorted(VertexId u, VertexId v)
    {
        return u < v ? VertexPair{ u, v } : VertexPair{ v, u };
    }

    // A complete bipartite graph on two disjoint, nonempty vertex sets.
    struct Biclique
    {
        std::set<VertexId> left;
        std::set<VertexId> right;

        friend bool operator== (const Biclique &, const Biclique &) = default;
    };

    // A claimed edge-disjoint biclique cover of K_n. The list is ordered and
    // may be under- or oversized; nothing ties its length to n. Duplicate
    // bicliques are legal input and simply produce multiplicity >= 2.
    struct CoverSpec
    {
        int n = 0;
        std::vector<Biclique> bicliques;

        friend bool operator== (const CoverSpec &, const CoverSpec &) = default;
    };

    struct Overcovered
    {
        VertexPair edge;
        int multiplicity;  // >= 2

        friend bool operator== (const Overcovered &, const Overcovered &) = default;
    };

    struct VerificationReport
    {
        bool is_exact_cover = false;
        std::vector<VertexPair> uncovered;     // lexicographic
        std::vector<Overcovered> overcovered;  // lexicographic
        long long total_biclique_edges = 0;    // sum over i of |L_i| * |R_i|
    };

    // Throws InputError naming the offending (1-based) biclique index when a
    // side is empty, the sides overlap, or a vertex lies outside 1..n.
    // Accepts n >= 2; smaller complete graphs have no edges to cover.
    auto validate_cover(const CoverSpec & cover) -> void;

    // For each unordered pair {u,v} counts the bicliques whose sides separate
    // u from v. Pairs with count zero are omitted; absence means 0.
    auto edge_multiplicities(const CoverSpec & cover) -> std::map<VertexPair, int>;

    // Decides exactness: every pair of K_n covered exactly once.
    auto verify_cover(const CoverSpec & cover) -> VerificationReport;

    // The n-1 stars ({i}, {i+1..n}); the standard optimal cover.
    auto star_decomposition(int n) -> CoverSpec;

    // Splits 1..n into halves (lower half gets the ceiling), emits the
    // biclique (lower, upper), recurses into both halves. Root first, then
    // left subtree, then right. Also n-1 bicliques, also exact.
    auto recursive_decomposition(int n) -> CoverSpec;
}

#endif
