#include <bicover/matrix.hpp>

#include <bicover/checked.hpp>
#include <bicover/errors.hpp>

#include <random>
#include <string>
#include <unordered_map>
#include <utility>

using std::optional;
using std::to_string;
using std::vector;

namespace bicover
{
    namespace
    {
        struct TupleHash
        {
            std::size_t operator() (const vector<long long> & t) const
            {
                std::size_t h = t.size();
                for (long long x : t)
                    h ^= std::hash<long long>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                return h;
            }
        };

        auto next_lex(vector<int> & values, int lo, int hi) -> bool
        {
            for (int pos = static_cast<int>(values.size()) - 1; pos >= 0; --pos) {
                if (values[pos] < hi) {
                    ++values[pos];
                    for (std::size_t j = pos + 1; j < values.size(); ++j)
                        values[j] = lo;
                    return true;
                }
            }
            return false;
        }

        auto uniform_below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
        {
            std::uint64_t mask = bound - 1;
            mask |= mask >> 1;
            mask |= mask >> 2;
            mask |= mask >> 4;
            mask |= mask >> 8;
            mask |= mask >> 16;
            mask |= mask >> 32;
            std::uint64_t x;
            do {
                x = rng() & mask;
            } while (x >= bound);
            return x;
        }
    }

    auto mat_vec(const IntegerMatrix & a, const vector<int> & x) -> vector<long long>
    {
        if (static_cast<int>(x.size()) != a.cols)
            throw InputError("vector has length " + to_string(x.size()) +
                    ", expected " + to_string(a.cols));

        vector<long long> image(a.rows, 0);
        for (int r = 0; r < a.rows; ++r)
            for (int c = 0; c < a.cols; ++c)
                image[r] = checked_add(image[r], checked_mul(a.at(r, c), x[c]));
        return image;
    }

    auto matrix_collision(const IntegerMatrix & a, int k, SearchStrategy strategy,
            std::uint64_t seed, long long budget) -> optional<VectorCollision>
    {
        if (a.rows < 0 || a.cols < 1 ||
                static_cast<std::size_t>(a.rows) * a.cols != a.entries.size())
            throw InputError("matrix shape does not match its entries");
        if (a.rows >= a.cols)
            throw InputError("matrix_collision requires rows < cols, got " +
                    to_string(a.rows) + "x" + to_string(a.cols));
        if (k < 2)
            throw InputError("k must be at least 2");
        if (budget < 1)
            throw InputError("budget must be at least 1");

        std::unordered_map<vector<long long>, vector<int>, TupleHash> seen;
        long long examined = 0;

        if (strategy == SearchStrategy::exhaustive) {
            vector<int> x(a.cols, 1);
            while (true) {
                ++examined;
                auto image = mat_vec(a, x);
                auto [it, inserted] = seen.try_emplace(std::move(image), x);
                if (! inserted)
                    return VectorCollision{ it->second, x };
                if (examined >= budget)
                    return std::nullopt;
                if (! next_lex(x, 1, k))
                    return std::nullopt;
            }
        }

        std::mt19937_64 rng(seed);
        vector<int> x(a.cols);
        while (examined < budget) {
            ++examined;
            for (int i = 0; i < a.cols; ++i)
                x[i] = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
            auto image = mat_vec(a, x);
            auto [it, inserted] = seen.try_emplace(std::move(image), x);
            if (! inserted && it->second != x)
                return VectorCollision{ it->second, x };
        }
        return std::nullopt;
    }
}
