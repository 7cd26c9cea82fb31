#include <bicover/witness.hpp>

#include <bicover/checked.hpp>
#include <bicover/errors.hpp>

#include <random>
#include <string>
#include <unordered_map>
#include <utility>

#include <json.hpp>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace bicover
{
    namespace
    {
        // 0-based side lists per biclique, for tight sum loops.
        struct CoverIndex
        {
            int n;
            vector<vector<int>> lefts;
            vector<vector<int>> rights;
        };

        auto index_cover(const CoverSpec & cover) -> CoverIndex
        {
            CoverIndex idx;
            idx.n = cover.n;
            for (const auto & b : cover.bicliques) {
                vector<int> l, r;
                for (VertexId v : b.left)
                    l.push_back(v - 1);
                for (VertexId v : b.right)
                    r.push_back(v - 1);
                idx.lefts.push_back(std::move(l));
                idx.rights.push_back(std::move(r));
            }
            return idx;
        }

        template <typename T>
        auto pattern_entries(const CoverIndex & idx, const vector<T> & values) -> vector<long long>
        {
            vector<long long> entries;
            entries.reserve(idx.lefts.size() + 1);
            for (const auto & left : idx.lefts) {
                long long s = 0;
                for (int v : left)
                    s = checked_add(s, values[v]);
                entries.push_back(s);
            }
            long long total = 0;
            for (T x : values)
                total = checked_add(total, x);
            entries.push_back(total);
            return entries;
        }

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

        // Next tuple in lexicographic order over [lo,hi]^n; false when exhausted.
        template <typename T>
        auto next_lex(vector<T> & values, T lo, T hi) -> bool
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

        // Unbiased draw from [0, bound), deterministic for a given engine state.
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

        auto validate_labeling(const Labeling & sigma, int n) -> void
        {
            if (static_cast<int>(sigma.values.size()) != n)
                throw InputError("labeling has length " + to_string(sigma.values.size()) +
                        ", expected " + to_string(n));
            if (sigma.k < 1)
                throw InputError("label range k must be at least 1");
            for (int x : sigma.values)
                if (x < 1 || x > sigma.k)
                    throw InputError("label " + to_string(x) + " outside 1.." + to_string(sigma.k));
        }

        auto witness_ok(const CoverIndex & idx, const vector<long long> & tau) -> bool
        {
            bool nonzero = false;
            long long total = 0;
            for (long long t : tau) {
                if (t != 0)
                    nonzero = true;
                total = checked_add(total, t);
            }
            if (! nonzero || total != 0)
                return false;
            for (const auto & left : idx.lefts) {
                long long s = 0;
                for (int v : left)
                    s = checked_add(s, tau[v]);
                if (s != 0)
                    return false;
            }
            return true;
        }
    }

    auto pattern_of(const Labeling & sigma, const CoverSpec & cover) -> Pattern
    {
        validate_cover(cover);
        validate_labeling(sigma, cover.n);
        return Pattern{ pattern_entries(index_cover(cover), sigma.values) };
    }

    auto pigeonhole_threshold(int n, int m, long long k) -> PigeonholeReport
    {
        if (n < 1)
            throw InputError("n must be at least 1");
        if (m < 0)
            throw InputError("m must be nonnegative");
        if (k < 1)
            throw InputError("k must be at least 1");

        PigeonholeReport report;
        report.labelings = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(n));
        report.pattern_bound = boost::multiprecision::pow(BigInt(k) * n, static_cast<unsigned>(m + 1));
        report.collision_guaranteed = report.labelings > report.pattern_bound;
        return report;
    }

    auto find_pattern_collision(const CoverSpec & cover, int k, SearchStrategy strategy,
            std::uint64_t seed, long long budget,
            long long * examined_out) -> optional<CollisionPair>
    {
        if (k < 2)
            throw InputError("k must be at least 2");
        if (budget < 1)
            throw InputError("budget must be at least 1");
        validate_cover(cover);

        const CoverIndex idx = index_cover(cover);
        const int n = cover.n;

        // Keys are full pattern tuples; equality on the whole tuple, so a
        // hash clash can never fake a collision.
        std::unordered_map<vector<long long>, vector<int>, TupleHash> seen;

        long long examined = 0;
        optional<CollisionPair> found;

        if (strategy == SearchStrategy::exhaustive) {
            vector<int> values(n, 1);
            while (true) {
                ++examined;
                auto pattern = pattern_entries(idx, values);
                auto [it, inserted] = seen.try_emplace(std::move(pattern), values);
                if (! inserted) {
                    found = CollisionPair{ Labeling{ it->second, k }, Labeling{ values, k } };
                    break;
                }
                if (examined >= budget)
                    break;
                if (! next_lex(values, 1, k))
                    break;
            }
        }
        else {
            std::mt19937_64 rng(seed);
            vector<int> values(n);
            while (examined < budget) {
                ++examined;
                for (int i = 0; i < n; ++i)
                    values[i] = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
                auto pattern = pattern_entries(idx, values);
                auto [it, inserted] = seen.try_emplace(std::move(pattern), values);
                if (! inserted && it->second != values) {
                    found = CollisionPair{ Labeling{ it->second, k }, Labeling{ values, k } };
                    break;
                }
            }
        }

        if (examined_out)
            *examined_out = examined;
        return found;
    }

    auto witness_from_collision(const Labeling & sigma1, const Labeling & sigma2,
            const CoverSpec & cover) -> Witness
    {
        validate_cover(cover);
        validate_labeling(sigma1, cover.n);
        validate_labeling(sigma2, cover.n);

        if (sigma1.values == sigma2.values)
            throw InputError("labelings are equal; a collision needs two distinct labelings");
        if (! (pattern_of(sigma1, cover) == pattern_of(sigma2, cover)))
            throw InputError("labelings do not have equal patterns under this cover");

        Witness w;
        w.tau.reserve(cover.n);
        for (int i = 0; i < cover.n; ++i)
            w.tau.push_back(static_cast<long long>(sigma1.values[i]) - sigma2.values[i]);
        return w;
    }

    auto witness_by_kernel_search(const CoverSpec & cover, long long max_bound)
            -> optional<Witness>
    {
        if (max_bound < 1)
            throw InputError("max_bound must be at least 1");
        validate_cover(cover);

        const CoverIndex idx = index_cover(cover);
        const int n = cover.n;

        for (long long bound = 1; bound <= max_bound; ++bound) {
            vector<long long> tau(n, -bound);
            while (true) {
                if (witness_ok(idx, tau))
                    return Witness{ tau };
                if (! next_lex(tau, -bound, bound))
                    break;
            }
        }
        return std::nullopt;
    }

    auto validate_witness(const Witness & w, const CoverSpec & cover) -> bool
    {
        validate_cover(cover);
        if (static_cast<int>(w.tau.size()) != cover.n)
            throw InputError("witness has length " + to_string(w.tau.size()) +
                    ", expected " + to_string(cover.n));
        return witness_ok(index_cover(cover), w.tau);
    }

    auto quadratic_defect(const vector<long long> & tau, const CoverSpec & cover) -> long long
    {
        validate_cover(cover);
        if (static_cast<int>(tau.size()) != cover.n)
            throw InputError("tau has length " + to_string(tau.size()) +
                    ", expected " + to_string(cover.n));

        const CoverIndex idx = index_cover(cover);

        long long biclique_side = 0;
        for (std::size_t i = 0; i < idx.lefts.size(); ++i) {
            long long sl = 0, sr = 0;
            for (int v : idx.lefts[i])
                sl = checked_add(sl, tau[v]);
            for (int v : idx.rights[i])
                sr = checked_add(sr, tau[v]);
            biclique_side = checked_add(biclique_side, checked_mul(sl, sr));
        }

        long long cross_side = 0;
        for (int u = 0; u < cover.n; ++u)
            for (int v = u + 1; v < cover.n; ++v)
                cross_side = checked_add(cross_side, checked_mul(tau[u], tau[v]));

        return checked_sub(biclique_side, cross_side);
    }

    namespace
    {
        auto first_culprit(const CoverSpec & cover) -> optional<Culprit>
        {
            const auto counts = edge_multiplicities(cover);
            for (VertexId u = 1; u <= cover.n; ++u) {
                for (VertexId v = u + 1; v <= cover.n; ++v) {
                    auto it = counts.find({ u, v });
                    int c = it == counts.end() ? 0 : it->second;
                    if (c != 1)
                        return Culprit{ { u, v }, c };
                }
            }
            return std::nullopt;
        }
    }

    auto refute(const CoverSpec & cover, const RefuteOptions & options) -> RefuteResult
    {
        validate_cover(cover);

        const int n = cover.n;
        const int m = static_cast<int>(cover.bicliques.size());
        if (m >= n - 1)
            return RefuteResult{ std::nullopt,
                    "no refutation attempted: m >= n-1 (m=" + to_string(m) + ", n=" + to_string(n) + ")" };

        optional<Witness> witness;
        WitnessSource source = WitnessSource::collision;
        optional<std::uint64_t> used_seed;

        if (options.strategy == SearchStrategy::exhaustive) {
            long long remaining = options.collision_budget;
            int k = options.k > 0 ? options.k : 2;
            while (remaining > 0 && k <= 1000000) {
                long long examined = 0;
                auto collision = find_pattern_collision(cover, k, SearchStrategy::exhaustive,
                        0, remaining, &examined);
                remaining -= examined;
                if (collision) {
                    witness = witness_from_collision(collision->sigma1, collision->sigma2, cover);
                    break;
                }
                if (options.k > 0)
                    break;
                ++k;
            }
        }
        else {
            const int k = options.k > 0 ? options.k : std::max(2, n);
            auto collision = find_pattern_collision(cover, k, SearchStrategy::birthday,
                    options.seed, options.collision_budget);
            if (collision) {
                witness = witness_from_collision(collision->sigma1, collision->sigma2, cover);
                used_seed = options.seed;
            }
        }

        if (! witness) {
            if (auto w = witness_by_kernel_search(cover, options.kernel_bound)) {
                witness = w;
                source = WitnessSource::kernel;
                used_seed.reset();
            }
        }

        if (! witness)
            throw ResourceError("collision and kernel searches exhausted their budgets; "
                    "a witness exists whenever m+1 < n, so the budgets are too small");

        RefutationCertificate cert;
        cert.witness = *witness;
        cert.defect = quadratic_defect(witness->tau, cover);
        cert.culprit = first_culprit(cover);
        cert.strategy = source;
        cert.seed = used_seed;
        return RefuteResult{ std::move(cert), "" };
    }

    auto serialize_certificate(const RefutationCertificate & cert) -> string
    {
        string out = "{\"tau\":[";
        bool first = true;
        for (long long t : cert.witness.tau) {
            if (! first)
                out += ',';
            first = false;
            out += to_string(t);
        }
        out += "],\"defect\":" + to_string(cert.defect) + ",\"culprit\":";
        if (cert.culprit)
            out += "{\"edge\":[" + to_string(cert.culprit->edge.first) + ',' +
                    to_string(cert.culprit->edge.second) + "],\"multiplicity\":" +
                    to_string(cert.culprit->multiplicity) + '}';
        else
            out += "null";
        out += ",\"strategy\":\"";
        out += cert.strategy == WitnessSource::collision ? "collision" : "kernel";
        out += "\",\"seed\":";
        out += cert.seed ? to_string(*cert.seed) : "null";
        out += '}';
        return out;
    }

    auto parse_certificate(std::string_view text) -> RefutationCertificate
    {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw InputError(string("malformed JSON: ") + e.what());
        }

        if (! j.is_object() || ! j.contains("tau") || ! j.contains("defect") ||
                ! j.contains("strategy"))
            throw InputError("certificate must contain tau, defect and strategy");

        RefutationCertificate cert;
        if (! j.at("tau").is_array())
            throw InputError("field tau is not an array");
        for (const auto & e : j.at("tau")) {
            if (! e.is_number_integer())
                throw InputError("non-integer entry in tau");
            cert.witness.tau.push_back(e.get<long long>());
        }
        if (! j.at("defect").is_number_integer())
            throw InputError("field defect is not an integer");
        cert.defect = j.at("defect").get<long long>();

        if (j.contains("culprit") && ! j.at("culprit").is_null()) {
            const auto & c = j.at("culprit");
            if (! c.is_object() || ! c.contains("edge") || ! c.contains("multiplicity") ||
                    ! c.at("edge").is_array() || c.at("edge").size() != 2)
                throw InputError("culprit must be {edge:[u,v], multiplicity:int}");
            Culprit culprit;
            culprit.edge = make_pair_sorted(c.at("edge")[0].get<int>(), c.at("edge")[1].get<int>());
            culprit.multiplicity = c.at("multiplicity").get<int>();
            cert.culprit = culprit;
        }

        const string strategy = j.at("strategy").get<string>();
        if (strategy == "collision")
            cert.strategy = WitnessSource::collision;
        else if (strategy == "kernel")
            cert.strategy = WitnessSource::kernel;
        else
            throw InputError("unknown strategy \"" + strategy + "\"");

        if (j.contains("seed") && ! j.at("seed").is_null())
            cert.seed = j.at("seed").get<std::uint64_t>();

        return cert;
    }
}
