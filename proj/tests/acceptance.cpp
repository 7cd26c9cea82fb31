// Acceptance suite: every release-gating property in one binary, one
// pass/fail line per criterion. All tolerances are exact integer equalities;
// all randomness is fixed-seed. Criterion 9 drives the CLI binary, whose
// path arrives as argv[1].

#include <bicover/cover.hpp>
#include <bicover/cover_io.hpp>
#include <bicover/gadget.hpp>
#include <bicover/matrix.hpp>
#include <bicover/witness.hpp>

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace bicover;
namespace fs = std::filesystem;

namespace
{
    std::string cli_path;

    void expect(bool condition, const std::string & message)
    {
        if (! condition)
            throw std::runtime_error(message);
    }

    std::string slurp(const fs::path & path)
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    // ---- criterion 1: no family of <= 2 bicliques covers K_4 exactly ----

    std::string lower_bound_instance_n4()
    {
        // every valid biclique on [4]: each vertex to left/right/neither
        std::vector<Biclique> bicliques;
        for (int code = 0; code < 81; ++code) {
            Biclique b;
            int c = code;
            for (int v = 1; v <= 4; ++v, c /= 3) {
                if (c % 3 == 0)
                    b.left.insert(v);
                else if (c % 3 == 1)
                    b.right.insert(v);
            }
            if (! b.left.empty() && ! b.right.empty())
                bicliques.push_back(std::move(b));
        }
        expect(bicliques.size() == 50, "expected 50 valid bicliques on [4]");

        long long families = 0;
        auto exact = [&](const CoverSpec & cover) {
            return verify_cover(cover).is_exact_cover;
        };

        expect(! exact(CoverSpec{ 4, {} }), "the empty family cannot cover K_4");
        ++families;
        for (std::size_t i = 0; i < bicliques.size(); ++i) {
            expect(! exact(CoverSpec{ 4, { bicliques[i] } }),
                    "a single biclique cannot cover K_4");
            ++families;
            for (std::size_t j = i; j < bicliques.size(); ++j) {
                expect(! exact(CoverSpec{ 4, { bicliques[i], bicliques[j] } }),
                        "two bicliques cannot cover K_4");
                ++families;
            }
        }
        return "all " + std::to_string(families) + " families of <= 2 bicliques fail";
    }

    // ---- criterion 2: refute always certifies undersized covers ----

    std::string refuter_totality()
    {
        int certificates = 0;
        for (int n = 4; n <= 7; ++n) {
            std::mt19937_64 rng(1000 + n);
            for (int trial = 0; trial < 200; ++trial) {
                const auto cover = support::random_cover(n, n - 2, rng);
                const auto result = refute(cover);
                expect(result.refuted(), "refute returned no certificate");

                const auto & cert = *result.certificate;
                expect(validate_witness(cert.witness, cover), "witness failed validation");
                long long squares = 0;
                for (long long t : cert.witness.tau)
                    squares += t * t;
                expect(cert.defect == squares / 2, "defect != (sum tau^2)/2");
                expect(cert.defect > 0, "defect not positive");
                ++certificates;
            }
        }
        return std::to_string(certificates) + " certificates, all exact";
    }

    // ---- criterion 3: defect equals the multiplicity decomposition ----

    std::string defect_decomposition()
    {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 2 + static_cast<int>(support::uniform_below(rng, 7));
            const int m = static_cast<int>(support::uniform_below(rng, n + 2));
            const auto cover = support::random_cover(n, m, rng);
            const auto tau = support::random_tau(n, 5, rng);
            expect(quadratic_defect(tau, cover) == support::defect_oracle(tau, cover),
                    "two-sided formula disagrees with brute-force multiplicities");
        }
        return "1000 random (cover, tau) pairs agree";
    }

    // ---- criterion 4: defect vanishes on exact covers ----

    std::string exact_cover_nullity()
    {
        std::mt19937_64 rng(4096);
        int checks = 0;
        for (int n = 2; n <= 32; ++n) {
            for (const auto & cover : { star_decomposition(n), recursive_decomposition(n) }) {
                for (int trial = 0; trial < 100; ++trial) {
                    const auto tau = support::random_tau(n, 8, rng);
                    expect(quadratic_defect(tau, cover) == 0, "nonzero defect on an exact cover");
                    ++checks;
                }
            }
        }
        return std::to_string(checks) + " defects, all zero";
    }

    // ---- criterion 5: gadget closed forms vs explicit construction ----

    void compositions(long long total, int parts, std::vector<long long> & prefix,
            const std::function<void(const std::vector<long long> &)> & visit)
    {
        if (parts == 1) {
            prefix.push_back(total);
            visit(prefix);
            prefix.pop_back();
            return;
        }
        for (long long x = 1; x + (parts - 1) <= total; ++x) {
            prefix.push_back(x);
            compositions(total - x, parts - 1, prefix, visit);
            prefix.pop_back();
        }
    }

    std::string gadget_closed_forms()
    {
        int cases = 0;
        for (int parts = 1; parts <= 3; ++parts) {
            for (long long total = parts; total <= 8; ++total) {
                std::vector<std::vector<long long>> sides;
                std::vector<long long> prefix;
                compositions(total, parts, prefix,
                        [&](const std::vector<long long> & c) { sides.push_back(c); });
                for (const auto & p : sides) {
                    for (const auto & q : sides) {
                        const PartSizes sizes{ p, q };
                        const auto g = build_gadgets(sizes);
                        const auto counts = edge_counts(sizes);
                        expect(static_cast<long long>(g.h_edges.size()) == counts.h,
                                "H count mismatch");
                        expect(static_cast<long long>(g.h_prime_edges.size()) == counts.h_prime,
                                "H' count mismatch");

                        long long squares = 0;
                        for (std::size_t i = 0; i < p.size(); ++i)
                            squares += (p[i] - q[i]) * (p[i] - q[i]);
                        expect(edge_gap(sizes) == squares / 2, "gap closed form mismatch");
                        expect((edge_gap(sizes) == 0) == (p == q), "gap zero iff p == q");
                        ++cases;
                    }
                }
            }
        }
        return std::to_string(cases) + " part-size vectors, exhaustive";
    }

    // ---- criterion 6: bijection suite ----

    std::string bijection_suite()
    {
        auto binom2 = [](long long x) { return x * (x - 1) / 2; };
        int cases = 0;
        for (int p = 1; p <= 15; ++p) {
            for (int q = p; q <= 15; ++q) {
                const auto map = clique_union_bijection(p, q);

                std::set<TaggedEdge> image;
                for (const auto & [pair, edge] : map.entries)
                    expect(image.insert(edge).second, "bijection not injective");

                expect(static_cast<long long>(map.unhit.size()) == binom2(q - p),
                        "unhit count != C(q-p,2)");
                expect(static_cast<long long>(map.entries.size() + map.unhit.size()) ==
                        binom2(p) + binom2(q), "|domain| + |unhit| != E(K_p) + E(K_q)");

                const bool equality =
                        static_cast<long long>(p) * q == binom2(p) + binom2(q) + p;
                expect(equality == (q - p <= 1), "equality case mismatch");
                ++cases;
            }
        }
        return std::to_string(cases) + " (p,q) pairs";
    }

    // ---- criterion 7: matrix collisions found and re-verified ----

    std::string matrix_collisions()
    {
        // wide shapes (m <= (n+2)/3): narrow kernels routinely have no
        // vector within [-5,5], which no search can fix, so the family that
        // makes the lemma runnable stays clear of them
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + static_cast<int>(support::uniform_below(rng, 7));
            const int m_max = (n + 2) / 3;
            const int m = 1 + static_cast<int>(support::uniform_below(rng, m_max));

            IntegerMatrix a{ m, n, {} };
            for (int i = 0; i < m * n; ++i)
                a.entries.push_back(static_cast<long long>(support::uniform_below(rng, 11)) - 5);

            long long budget = 1;
            for (int i = 0; i < n; ++i)
                budget *= 6;
            const auto c = matrix_collision(a, 6, SearchStrategy::exhaustive, 0, budget);
            expect(c.has_value(), "no collision for a " + std::to_string(m) + "x" +
                    std::to_string(n) + " matrix");
            expect(c->x1 != c->x2, "collision vectors equal");

            for (int r = 0; r < m; ++r) {
                long long lhs = 0, rhs = 0;
                for (int col = 0; col < n; ++col) {
                    lhs += a.at(r, col) * c->x1[col];
                    rhs += a.at(r, col) * c->x2[col];
                }
                expect(lhs == rhs, "re-multiplication mismatch");
            }
        }
        return "100 matrices, all collide and re-verify";
    }

    // ---- criterion 8: the k > n^n threshold guarantees collisions ----

    std::string pigeonhole_guarantee()
    {
        for (int n = 2; n <= 5; ++n) {
            long long k = 1;
            for (int i = 0; i < n; ++i)
                k *= n;
            ++k;  // k = n^n + 1
            const auto report = pigeonhole_threshold(n, n - 2, k);
            expect(report.collision_guaranteed,
                    "no guarantee at n=" + std::to_string(n) + ", k=n^n+1");
            expect(report.labelings > report.pattern_bound, "count comparison inconsistent");
        }
        return "guaranteed for n in {2,3,4,5} at k = n^n + 1";
    }

    // ---- criterion 9: byte-identical reruns ----

    std::string reproducibility()
    {
        expect(! cli_path.empty(), "CLI path required as argv[1]");

        const fs::path tmp = fs::current_path() / "acceptance_tmp";
        fs::create_directories(tmp);

        auto cover = star_decomposition(6);
        cover.bicliques.resize(4);
        const auto cover_path = tmp / "four_stars.json";
        std::ofstream(cover_path) << serialize_cover(cover);

        auto run = [&](const std::string & args) {
            const int code = std::system((cli_path + " " + args + " >/dev/null 2>&1").c_str());
            expect(code != -1, "failed to launch CLI");
        };

        run("refute " + cover_path.string() + " --strategy birthday --seed 7 -o " +
                (tmp / "cert_a.json").string());
        run("refute " + cover_path.string() + " --strategy birthday --seed 7 -o " +
                (tmp / "cert_b.json").string());
        const auto cert_a = slurp(tmp / "cert_a.json");
        expect(! cert_a.empty() && cert_a == slurp(tmp / "cert_b.json"),
                "refute outputs differ across identical runs");

        run("experiment --n-range 2..5 --random-covers 2 --seed 3 -o " +
                (tmp / "exp_a.csv").string());
        run("experiment --n-range 2..5 --random-covers 2 --seed 3 -o " +
                (tmp / "exp_b.csv").string());
        const auto exp_a = slurp(tmp / "exp_a.csv");
        expect(! exp_a.empty() && exp_a == slurp(tmp / "exp_b.csv"),
                "experiment outputs differ across identical runs");

        return "refute and experiment outputs byte-identical";
    }
}

int main(int argc, char ** argv)
{
    if (argc > 1)
        cli_path = argv[1];

    struct Criterion
    {
        int number;
        const char * name;
        std::function<std::string()> run;
    };

    const std::vector<Criterion> criteria = {
        { 1, "exhaustive n=4: no family of <= 2 bicliques covers K_4", lower_bound_instance_n4 },
        { 2, "refuter totality on random undersized covers", refuter_totality },
        { 3, "defect decomposition vs brute-force multiplicities", defect_decomposition },
        { 4, "defect vanishes on exact covers up to n=32", exact_cover_nullity },
        { 5, "gadget closed forms vs explicit edge sets", gadget_closed_forms },
        { 6, "bijection counting for all p <= q <= 15", bijection_suite },
        { 7, "matrix collisions found and re-multiplied", matrix_collisions },
        { 8, "pigeonhole guarantee at k = n^n + 1", pigeonhole_guarantee },
        { 9, "byte-identical refute and experiment reruns", reproducibility },
    };

    int failures = 0;
    for (const auto & criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string verdict, detail;
        try {
            detail = criterion.run();
            verdict = "PASS";
        }
        catch (const std::exception & e) {
            detail = e.what();
            verdict = "FAIL";
            ++failures;
        }
        const double seconds = std::chrono::duration<double>(
                std::chrono::steady_clock::now() - start).count();
        std::printf("%s  criterion %d: %s (%.2fs) -- %s\n", verdict.c_str(),
                criterion.number, criterion.name, seconds, detail.c_str());
        std::fflush(stdout);
    }

    if (failures == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
