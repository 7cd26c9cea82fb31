#ifndef BICOVER_MATRIX_HPP
#define BICOVER_MATRIX_HPP

#include <bicover/witness.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace bicover
{
    // Row-major integer matrix, arbitrary entries.
    struct IntegerMatrix
    {
        int rows = 0;
        int cols = 0;
        std::vector<long long> entries;

        long long at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
    };

    // Exact A*x with overflow checking.
    auto mat_vec(const IntegerMatrix & a, const std::vector<int> & x) -> std::vector<long long>;

    struct VectorCollision
    {
        std::vector<int> x1;  // found earlier in the search order
        std::vector<int> x2;
    };

    // Two distinct positive vectors with equal images: candidates range over
    // [1,k]^cols, pattern = A*x, same exhaustive/birthday mechanics as the
    // labeling search. Requires rows < cols. nullopt = budget exhausted.
    auto matrix_collision(const IntegerMatrix & a, int k, SearchStrategy strategy,
            std::uint64_t seed, long long budget) -> std::optional<VectorCollision>;
}

#endif
