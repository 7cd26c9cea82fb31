#ifndef BICOVER_DEMO_HPP
#define BICOVER_DEMO_HPP

#include <bicover/cover.hpp>
#include <bicover/gadget.hpp>
#include <bicover/witness.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bicover
{
    struct DemoOptions
    {
        SearchStrategy strategy = SearchStrategy::exhaustive;
        std::uint64_t seed = 0;
        int k = 0;  // 0: auto, as in refute
        long long budget = 200000;
    };

    struct BalanceRow
    {
        int biclique;      // 1-based
        long long top;     // explicit H-block edge count
        long long bottom;  // explicit H'-block edge count
    };

    // Walkthrough of why an undersized cover cannot be exact. Every number
    // is recomputed from explicit edge sets; the closed forms appear only as
    // cross-checks.
    struct DemoReport
    {
        int n = 0;
        int m = 0;
        Labeling sigma1;
        Labeling sigma2;
        std::vector<long long> tau;
        PartSizes sizes;                 // p = sigma1, q = sigma2; p != q
        std::vector<BalanceRow> balance; // top == bottom per biclique
        long long h_edges = 0;           // |E(H)|, enumerated
        long long h_prime_edges = 0;     // |E(H')|, enumerated
        long long gap = 0;               // h_prime_edges - h_edges, > 0
        long long gap_closed_form = 0;   // sum (p_i - q_i)^2 / 2
        long long defect = 0;            // quadratic defect of tau
        Culprit culprit;                 // an edge covered != 1 times
    };

    struct DemoResult
    {
        std::optional<DemoReport> report;
        std::string rejection;  // set iff m >= n-1

        bool demonstrated() const { return report.has_value(); }
    };

    // Needs a genuine collision, so the witness is always collision-sourced;
    // running out of budget throws ResourceError.
    auto contradiction_demo(const CoverSpec & cover, const DemoOptions & options = {})
            -> DemoResult;

    auto demo_to_json(const DemoReport & report) -> std::string;
    auto demo_to_text(const DemoReport & report) -> std::string;
}

#endif
