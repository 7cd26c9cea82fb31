#ifndef BICOVER_TESTS_SUPPORT_HPP
#define BICOVER_TESTS_SUPPORT_HPP

// Shared test fixtures, deterministic generators, and the brute-force
// oracles the suites check the library against. Oracles here recompute
// everything from first principles and must stay independent of the
// library's own code paths.

#include <bicover/cover.hpp>
#include <bicover/witness.hpp>

#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace support
{
    inline std::uint64_t uniform_below(std::mt19937_64 & rng, std::uint64_t bound)
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

    // Valid biclique on [n]: both sides nonempty, disjoint.
    inline bicover::Biclique random_biclique(int n, std::mt19937_64 & rng)
    {
        while (true) {
            bicover::Biclique b;
            for (int v = 1; v <= n; ++v) {
                switch (uniform_below(rng, 3)) {
                    case 0: b.left.insert(v); break;
                    case 1: b.right.insert(v); break;
                    default: break;
                }
            }
            if (! b.left.empty() && ! b.right.empty())
                return b;
        }
    }

    inline bicover::CoverSpec random_cover(int n, int m, std::mt19937_64 & rng)
    {
        bicover::CoverSpec cover;
        cover.n = n;
        for (int i = 0; i < m; ++i)
            cover.bicliques.push_back(random_biclique(n, rng));
        return cover;
    }

    inline std::vector<long long> random_tau(int n, long long bound, std::mt19937_64 & rng)
    {
        std::vector<long long> tau;
        for (int i = 0; i < n; ++i)
            tau.push_back(static_cast<long long>(uniform_below(rng, 2 * bound + 1)) - bound);
        return tau;
    }

    // Kernel search needs coordinates of size 2 here: the unique solution ray
    // is (2t,-t,-t,-t,t). Also the fixture for forcing budget exhaustion.
    inline bicover::CoverSpec hard_kernel_cover()
    {
        bicover::CoverSpec cover;
        cover.n = 5;
        cover.bicliques.push_back({ { 2, 5 }, { 1 } });
        cover.bicliques.push_back({ { 3, 5 }, { 1 } });
        cover.bicliques.push_back({ { 4, 5 }, { 1 } });
        return cover;
    }

    // ---- oracles ----

    // Multiplicity by per-pair membership testing, not by walking products.
    inline int pair_multiplicity_oracle(const bicover::CoverSpec & cover, int u, int v)
    {
        int count = 0;
        for (const auto & b : cover.bicliques) {
            const bool ul = b.left.count(u) > 0, ur = b.right.count(u) > 0;
            const bool vl = b.left.count(v) > 0, vr = b.right.count(v) > 0;
            if ((ul && vr) || (vl && ur))
                ++count;
        }
        return count;
    }

    // sum_{u<v} (c_uv - 1) tau_u tau_v, the multiplicity route to the defect.
    inline long long defect_oracle(const std::vector<long long> & tau,
            const bicover::CoverSpec & cover)
    {
        long long d = 0;
        for (int u = 1; u <= cover.n; ++u)
            for (int v = u + 1; v <= cover.n; ++v)
                d += (pair_multiplicity_oracle(cover, u, v) - 1) * tau[u - 1] * tau[v - 1];
        return d;
    }

    // Recursive lexicographic enumeration over [lo,hi]^n; visit returns false
    // to stop. Deliberately not the library's odometer.
    inline bool enumerate_vectors(int n, long long lo, long long hi,
            std::vector<long long> & prefix,
            const std::function<bool(const std::vector<long long> &)> & visit)
    {
        if (static_cast<int>(prefix.size()) == n)
            return visit(prefix);
        for (long long x = lo; x <= hi; ++x) {
            prefix.push_back(x);
            if (! enumerate_vectors(n, lo, hi, prefix, visit))
                return false;
            prefix.pop_back();
        }
        return true;
    }

    inline bool witness_conditions_oracle(const std::vector<long long> & tau,
            const bicover::CoverSpec & cover)
    {
        bool nonzero = false;
        long long total = 0;
        for (long long t : tau) {
            nonzero = nonzero || t != 0;
            total += t;
        }
        if (! nonzero || total != 0)
            return false;
        for (const auto & b : cover.bicliques) {
            long long s = 0;
            for (int v : b.left)
                s += tau[v - 1];
            if (s != 0)
                return false;
        }
        return true;
    }

    // First valid witness by iterative deepening, recomputed independently.
    inline std::optional<std::vector<long long>> kernel_first_oracle(
            const bicover::CoverSpec & cover, long long max_bound)
    {
        for (long long bound = 1; bound <= max_bound; ++bound) {
            std::optional<std::vector<long long>> found;
            std::vector<long long> prefix;
            enumerate_vectors(cover.n, -bound, bound, prefix,
                    [&](const std::vector<long long> & tau) {
                        if (witness_conditions_oracle(tau, cover)) {
                            found = tau;
                            return false;
                        }
                        return true;
                    });
            if (found)
                return found;
        }
        return std::nullopt;
    }

    // All labelings [1,k]^n in lexicographic order. Small spaces only.
    inline std::vector<std::vector<int>> all_labelings(int n, int k)
    {
        std::vector<std::vector<int>> out;
        std::vector<long long> prefix;
        enumerate_vectors(n, 1, k, prefix, [&](const std::vector<long long> & v) {
            out.emplace_back(v.begin(), v.end());
            return true;
        });
        return out;
    }

    // ---- subprocess driving for the CLI suites ----

    struct RunResult
    {
        int exit_code;
        std::string output;  // stdout
    };

    inline RunResult run_command(const std::string & command)
    {
        RunResult result{ -1, "" };
        FILE * pipe = popen(command.c_str(), "r");
        if (! pipe)
            return result;
        char buffer[4096];
        std::size_t got;
        while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
            result.output.append(buffer, got);
        const int status = pclose(pipe);
        if (WIFEXITED(status))
            result.exit_code = WEXITSTATUS(status);
        return result;
    }
}

#endif
