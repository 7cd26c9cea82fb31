#include <bicover/cover.hpp>

#include <bicover/checked.hpp>
#include <bicover/errors.hpp>

#include <algorithm>
#include <string>

using std::map;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace bicover
{
    auto validate_cover(const CoverSpec & cover) -> void
    {
        if (cover.n < 2)
            throw InputError("n must be at least 2, got " + to_string(cover.n));

        for (std::size_t i = 0; i < cover.bicliques.size(); ++i) {
            const auto & b = cover.bicliques[i];
            const string where = "biclique " + to_string(i + 1);

            if (b.left.empty())
                throw InputError("empty left side in " + where);
            if (b.right.empty())
                throw InputError("empty right side in " + where);

            for (VertexId v : b.left)
                if (v < 1 || v > cover.n)
                    throw InputError("vertex " + to_string(v) + " out of range 1.." +
                            to_string(cover.n) + " in " + where);
            for (VertexId v : b.right)
                if (v < 1 || v > cover.n)
                    throw InputError("vertex " + to_string(v) + " out of range 1.." +
                            to_string(cover.n) + " in " + where);

            vector<VertexId> common;
            std::set_intersection(b.left.begin(), b.left.end(),
                    b.right.begin(), b.right.end(), std::back_inserter(common));
            if (! common.empty())
                throw InputError("left/right overlap in " + where);
        }
    }

    auto edge_multiplicities(const CoverSpec & cover) -> map<VertexPair, int>
    {
        validate_cover(cover);

        map<VertexPair, int> counts;
        for (const auto & b : cover.bicliques)
            for (VertexId u : b.left)
                for (VertexId v : b.right)
                    ++counts[make_pair_sorted(u, v)];
        return counts;
    }

    auto verify_cover(const CoverSpec & cover) -> VerificationReport
    {
        const auto counts = edge_multiplicities(cover);

        VerificationReport report;
        for (VertexId u = 1; u <= cover.n; ++u) {
            for (VertexId v = u + 1; v <= cover.n; ++v) {
                auto it = counts.find({ u, v });
                int c = it == counts.end() ? 0 : it->second;
                if (c == 0)
                    report.uncovered.push_back({ u, v });
                else if (c >= 2)
                    report.overcovered.push_back({ { u, v }, c });
            }
        }
        report.is_exact_cover = report.uncovered.empty() && report.overcovered.empty();

        report.total_biclique_edges = 0;
        for (const auto & b : cover.bicliques)
            report.total_biclique_edges = checked_add(report.total_biclique_edges,
                    checked_mul(static_cast<long long>(b.left.size()),
                            static_cast<long long>(b.right.size())));
        return report;
    }

    auto star_decomposition(int n) -> CoverSpec
    {
        if (n < 2)
            throw InputError("n must be at least 2, got " + to_string(n));

        CoverSpec cover;
        cover.n = n;
        for (VertexId i = 1; i <= n - 1; ++i) {
            Biclique b;
            b.left.insert(i);
            for (VertexId j = i + 1; j <= n; ++j)
                b.right.insert(j);
            cover.bicliques.push_back(std::move(b));
        }
        return cover;
    }

    namespace
    {
        auto split_recursively(VertexId lo, VertexId hi, vector<Biclique> & out) -> void
        {
            const int len = hi - lo + 1;
            if (len < 2)
                return;

            // lower half takes the ceiling
            const VertexId mid = lo + (len + 1) / 2 - 1;

            Biclique b;
            for (VertexId v = lo; v <= mid; ++v)
                b.left.insert(v);
            for (VertexId v = mid + 1; v <= hi; ++v)
                b.right.insert(v);
            out.push_back(std::move(b));

            split_recursively(lo, mid, out);
            split_recursively(mid + 1, hi, out);
        }
    }

    auto recursive_decomposition(int n) -> CoverSpec
    {
        if (n < 2)
            throw InputError("n must be at least 2, got " + to_string(n));

        CoverSpec cover;
        cover.n = n;
        split_recursively(1, n, cover.bicliques);
        return cover;
    }
}
