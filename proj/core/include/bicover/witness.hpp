#ifndef BICOVER_WITNESS_HPP
#define BICOVER_WITNESS_HPP

#include <bicover/cover.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bicover
{
    using BigInt = boost::multiprecision::cpp_int;

    // A vertex labeling sigma : 1..n -> 1..k. values[i] labels vertex i+1.
    struct Labeling
    {
        std::vector<int> values;
        int k = 1;

        friend bool operator== (const Labeling &, const Labeling &) = default;
    };

    // The per-cover fingerprint of a labeling: one left-side label sum per
    // biclique, then the total label sum. Two labelings with equal patterns
    // are a collision.
    struct Pattern
    {
        std::vector<long long> entries;  // length m+1

        friend bool operator== (const Pattern &, const Pattern &) = default;
    };

    // Integer vertex vector with zero sum on every left side and zero total
    // sum, nonzero somewhere. Its existence is incompatible with the cover
    // being exact.
    struct Witness
    {
        std::vector<long long> tau;

        friend bool operator== (const Witness &, const Witness &) = default;
    };

    enum class SearchStrategy { exhaustive, birthday };

    // How the witness inside a certificate was obtained.
    enum class WitnessSource { collision, kernel };

    struct Culprit
    {
        VertexPair edge;
        int multiplicity;  // != 1

        friend bool operator== (const Culprit &, const Culprit &) = default;
    };

    // Self-contained refutation of a claimed cover: re-checkable with
    // validate_witness + quadratic_defect alone.
    struct RefutationCertificate
    {
        Witness witness;
        long long defect = 0;  // (sum tau^2)/2 for a valid witness, > 0
        std::optional<Culprit> culprit;
        WitnessSource strategy = WitnessSource::collision;
        std::optional<std::uint64_t> seed;  // set when birthday sampling produced the witness
    };

    struct PigeonholeReport
    {
        BigInt labelings;       // k^n
        BigInt pattern_bound;   // (k*n)^(m+1)
        bool collision_guaranteed = false;  // labelings > pattern_bound
    };

    struct CollisionPair
    {
        Labeling sigma1;  // found earlier in the search order
        Labeling sigma2;
    };

    // Left sums then total sum. Throws InputError on length mismatch or
    // labels outside 1..k.
    auto pattern_of(const Labeling & sigma, const CoverSpec & cover) -> Pattern;

    // Counts k^n labelings against the (k*n)^(m+1) pattern bound. The bound
    // counts every entry as at most k*n, which is slack for small left
    // sides, so collision_guaranteed = false never means collisions are
    // absent. Exact big-integer arithmetic.
    auto pigeonhole_threshold(int n, int m, long long k) -> PigeonholeReport;

    // Searches for two distinct labelings with equal patterns.
    //   exhaustive: lexicographic scan of 1..k^n, first collision, seed unused.
    //   birthday:   uniform samples driven by seed, first collision in sample order.
    // Budget caps the number of labelings examined; running out returns
    // nullopt, which is never a claim of non-existence. examined_out, when
    // given, receives the number of labelings examined.
    auto find_pattern_collision(const CoverSpec & cover, int k, SearchStrategy strategy,
            std::uint64_t seed, long long budget,
            long long * examined_out = nullptr) -> std::optional<CollisionPair>;

    // tau = sigma1 - sigma2. Throws InputError if the labelings are equal or
    // their patterns differ: that is a caller bug, not a search outcome.
    auto witness_from_collision(const Labeling & sigma1, const Labeling & sigma2,
            const CoverSpec & cover) -> Witness;

    // Counting-only oracle for the same object: iterative deepening over the
    // coordinate bound B = 1..max_bound, lexicographic enumeration of
    // [-B,B]^n, first valid vector wins. No elimination, no field ops.
    auto witness_by_kernel_search(const CoverSpec & cover, long long max_bound)
            -> std::optional<Witness>;

    // True iff tau is nonzero, sums to zero on every left side, and sums to
    // zero overall. Throws InputError on length mismatch.
    auto validate_witness(const Witness & w, const CoverSpec & cover) -> bool;

    // D = sum_i (left sum)*(right sum) - sum_{u<v} tau_u tau_v.
    // Identically sum_{u<v} (c_uv - 1) tau_u tau_v for the cover's edge
    // multiplicities c, so D = 0 on every exact cover, and D = (sum tau^2)/2 > 0
    // whenever tau is a valid witness.
    auto quadratic_defect(const std::vector<long long> & tau, const CoverSpec & cover)
            -> long long;

    struct RefuteOptions
    {
        SearchStrategy strategy = SearchStrategy::exhaustive;
        std::uint64_t seed = 0;
        int k = 0;                          // 0: auto (exhaustive ascends from 2, birthday uses max(2,n))
        long long collision_budget = 200000;
        long long kernel_bound = 4;
    };

    struct RefuteResult
    {
        std::optional<RefutationCertificate> certificate;  // set iff refuted
        std::string rejection;                              // set iff m >= n-1

        bool refuted() const { return certificate.has_value(); }
    };

    // Collision search first, kernel search as fallback. Covers with
    // m >= n-1 bicliques are rejected, not refuted. Exhausting both budgets
    // throws ResourceError: a witness exists whenever m+1 < n, so that only
    // ever means the budgets were too small.
    auto refute(const CoverSpec & cover, const RefuteOptions & options = {}) -> RefuteResult;

    // Certificate wire format, bit-exact:
    //   {"tau":[...],"defect":<int>,"culprit":{"edge":[u,v],"multiplicity":<int>}|null,
    //    "strategy":"collision"|"kernel","seed":<int>|null}
    auto serialize_certificate(const RefutationCertificate & cert) -> std::string;
    auto parse_certificate(std::string_view text) -> RefutationCertificate;
}

#endif
