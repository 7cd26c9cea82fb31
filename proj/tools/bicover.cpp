// bicover: build, verify, and refute edge-disjoint biclique covers of K_n,
// plus the gadget-graph and bijection counting behind the m >= n-1 bound.
//
// Exit codes are a contract shared by all subcommands:
//   0  exact cover / success
//   1  cover refuted or not exact
//   2  input error
//   3  refutation rejected (m >= n-1)
//   4  search budgets exhausted

#include <bicover/cover.hpp>
#include <bicover/cover_io.hpp>
#include <bicover/demo.hpp>
#include <bicover/errors.hpp>
#include <bicover/gadget.hpp>
#include <bicover/witness.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

using namespace bicover;

using std::string;
using std::to_string;

namespace
{
    constexpr int exit_success = 0;
    constexpr int exit_not_exact = 1;
    constexpr int exit_input_error = 2;
    constexpr int exit_rejected = 3;
    constexpr int exit_exhausted = 4;

    struct GlobalOptions
    {
        std::uint64_t seed = 0;
        string output;
        string format = "text";
    };

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InputError("cannot open " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_file(const string & path, const string & bytes) -> void
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (! out)
            throw InputError("cannot write " + path);
        out << bytes;
    }

    // Artifacts go to the -o file when given, otherwise to stdout; the
    // resolved configuration is echoed to stderr so every run is
    // reproducible from its own transcript.
    auto emit_artifact(const GlobalOptions & global, const string & bytes) -> bool
    {
        if (global.output.empty()) {
            std::cout << bytes << "\n";
            return false;
        }
        write_file(global.output, bytes);
        return true;
    }

    auto echo_config(const string & command, const string & details) -> void
    {
        std::cerr << "config: command=" << command << " " << details << "\n";
    }

    auto report_to_json(const VerificationReport & report) -> string
    {
        string out = "{\"is_exact_cover\":";
        out += report.is_exact_cover ? "true" : "false";
        out += ",\"uncovered\":[";
        bool first = true;
        for (const auto & [u, v] : report.uncovered) {
            if (! first)
                out += ',';
            first = false;
            out += '[' + to_string(u) + ',' + to_string(v) + ']';
        }
        out += "],\"overcovered\":[";
        first = true;
        for (const auto & over : report.overcovered) {
            if (! first)
                out += ',';
            first = false;
            out += "{\"edge\":[" + to_string(over.edge.first) + ',' +
                    to_string(over.edge.second) + "],\"multiplicity\":" +
                    to_string(over.multiplicity) + '}';
        }
        out += "],\"total_biclique_edges\":" + to_string(report.total_biclique_edges) + '}';
        return out;
    }

    auto report_to_text(const VerificationReport & report) -> string
    {
        std::ostringstream out;
        out << "exact cover: " << (report.is_exact_cover ? "true" : "false") << "\n";
        out << "total biclique edges: " << report.total_biclique_edges << "\n";
        if (! report.uncovered.empty()) {
            out << "uncovered:";
            for (const auto & [u, v] : report.uncovered)
                out << " {" << u << "," << v << "}";
            out << "\n";
        }
        if (! report.overcovered.empty()) {
            out << "overcovered:";
            for (const auto & over : report.overcovered)
                out << " {" << over.edge.first << "," << over.edge.second << "}x"
                    << over.multiplicity;
            out << "\n";
        }
        return out.str();
    }

    auto parse_size_list(const string & text) -> std::vector<long long>
    {
        std::vector<long long> out;
        std::stringstream in(text);
        string item;
        while (std::getline(in, item, ',')) {
            try {
                out.push_back(std::stoll(item));
            }
            catch (const std::exception &) {
                throw InputError("cannot parse size list entry \"" + item + "\"");
            }
        }
        if (out.empty())
            throw InputError("empty size list");
        return out;
    }

    auto parse_strategy(const string & name) -> SearchStrategy
    {
        if (name == "exhaustive")
            return SearchStrategy::exhaustive;
        if (name == "birthday")
            return SearchStrategy::birthday;
        throw InputError("unknown strategy \"" + name + "\"");
    }

    // ---- subcommands ----

    auto cmd_construct(const GlobalOptions & global, int n, const string & method) -> int
    {
        const auto cover = method == "star" ? star_decomposition(n) : recursive_decomposition(n);
        const auto report = verify_cover(cover);

        echo_config("construct", "n=" + to_string(n) + " method=" + method +
                " output=" + (global.output.empty() ? "-" : global.output));
        const bool to_file = emit_artifact(global, serialize_cover(cover));

        std::ostream & summary = to_file ? std::cout : std::cerr;
        summary << "n: " << n << "\n";
        summary << "m: " << cover.bicliques.size() << "\n";
        summary << "exact cover: " << (report.is_exact_cover ? "true" : "false") << "\n";
        if (to_file)
            summary << "wrote: " << global.output << "\n";
        return exit_success;
    }

    auto cmd_verify(const GlobalOptions & global, const string & cover_path) -> int
    {
        const auto cover = parse_cover(read_file(cover_path));
        const auto report = verify_cover(cover);

        echo_config("verify", "cover=" + cover_path + " format=" + global.format);
        if (global.format == "json")
            std::cout << report_to_json(report) << "\n";
        else
            std::cout << report_to_text(report);
        return report.is_exact_cover ? exit_success : exit_not_exact;
    }

    auto cmd_refute(const GlobalOptions & global, const string & cover_path,
            const string & strategy, int k, long long budget, long long kernel_bound) -> int
    {
        const auto cover = parse_cover(read_file(cover_path));

        RefuteOptions options;
        options.strategy = parse_strategy(strategy);
        options.seed = global.seed;
        options.k = k;
        options.collision_budget = budget;
        options.kernel_bound = kernel_bound;

        echo_config("refute", "cover=" + cover_path + " strategy=" + strategy +
                " seed=" + to_string(global.seed) + " k=" + to_string(k) +
                " budget=" + to_string(budget) + " kernel-bound=" + to_string(kernel_bound) +
                " output=" + (global.output.empty() ? "-" : global.output));

        const auto result = refute(cover, options);
        if (! result.refuted()) {
            std::cout << result.rejection << "\n";
            return exit_rejected;
        }

        const auto & cert = *result.certificate;
        const bool to_file = emit_artifact(global, serialize_certificate(cert));
        std::ostream & summary = to_file ? std::cout : std::cerr;
        summary << "refuted: defect " << cert.defect;
        if (cert.culprit)
            summary << ", edge {" << cert.culprit->edge.first << ","
                    << cert.culprit->edge.second << "} covered "
                    << cert.culprit->multiplicity << " times";
        summary << "\n";
        if (to_file)
            summary << "wrote: " << global.output << "\n";
        return exit_not_exact;
    }

    auto cmd_gadget(const GlobalOptions & global, const string & p_list, const string & q_list,
            const string & demo_path, const string & strategy, long long budget) -> int
    {
        if (! demo_path.empty()) {
            const auto cover = parse_cover(read_file(demo_path));
            DemoOptions options;
            options.strategy = parse_strategy(strategy);
            options.seed = global.seed;
            options.budget = budget;

            echo_config("gadget", "demo=" + demo_path + " strategy=" + strategy +
                    " seed=" + to_string(global.seed) + " budget=" + to_string(budget));

            const auto result = contradiction_demo(cover, options);
            if (! result.demonstrated()) {
                std::cout << result.rejection << "\n";
                return exit_rejected;
            }
            if (global.format == "json")
                std::cout << demo_to_json(*result.report) << "\n";
            else
                std::cout << demo_to_text(*result.report);
            return exit_not_exact;
        }

        if (p_list.empty() || q_list.empty())
            throw InputError("need either --demo or both --p and --q");

        PartSizes sizes{ parse_size_list(p_list), parse_size_list(q_list) };
        validate_part_sizes(sizes);

        echo_config("gadget", "p=" + p_list + " q=" + q_list);

        const auto counts = edge_counts(sizes);
        const auto gadgets = build_gadgets(sizes);
        const auto comp = complement_components(sizes);
        const long long n_total = sizes.total();

        std::cout << "E_H = " << counts.h << " (enumerated " << gadgets.h_edges.size() << ")\n";
        std::cout << "E_H' = " << counts.h_prime << " (enumerated "
                << gadgets.h_prime_edges.size() << ")\n";
        std::cout << "gap = " << edge_gap(sizes) << "\n";
        std::cout << "complement cliques:";
        for (long long c : comp.cliques)
            std::cout << " " << c;
        std::cout << " (edges " << comp.clique_edges << " = 2*C(" << n_total << ",2) - E_H)\n";
        std::cout << "complement bicliques:";
        for (const auto & [a, b] : comp.bicliques)
            std::cout << " (" << a << "," << b << ")";
        std::cout << " (edges " << comp.biclique_edges << " = " << n_total << "^2 - E_H')\n";
        return exit_success;
    }

    auto cmd_bijection(const GlobalOptions &, int p, int q, bool list_unhit, bool list_map) -> int
    {
        if (p < 1 || q < 1)
            throw InputError("p and q must be positive");

        echo_config("bijection", "p=" + to_string(p) + " q=" + to_string(q));

        const auto map = clique_union_bijection_normalized(p, q);
        if (map.swapped)
            std::cout << "note: swapped to p=" << map.p << ", q=" << map.q << "\n";

        const long long pp = map.p, qq = map.q;
        const long long kp_edges = pp * (pp - 1) / 2;
        const long long kq_edges = qq * (qq - 1) / 2;

        std::cout << "domain size: " << map.entries.size() << "\n";
        std::cout << "image size: " << map.entries.size() << " (injective)\n";
        std::cout << "unhit edges: " << map.unhit.size() << " = C(" << (qq - pp) << ",2)\n";
        if (pp * qq == kp_edges + kq_edges + pp) {
            std::cout << "equality holds (" << (pp == qq ? "p=q" : "q=p+1") << "): "
                    << pp * qq << " = " << kp_edges << " + " << kq_edges << " + " << pp << "\n";
        }
        else {
            std::cout << "strict inequality: " << pp * qq << " < "
                    << kp_edges + kq_edges + pp << "\n";
        }

        if (list_unhit)
            for (const auto & [a, b] : map.unhit)
                std::cout << "unhit {" << a << "," << b << "}\n";
        if (list_map)
            for (const auto & [pair, edge] : map.entries)
                std::cout << "(" << pair.first << "," << pair.second << ") -> {"
                        << edge.a << "," << edge.b << "} in K_" << (edge.in_kq ? "q" : "p") << "\n";
        return exit_success;
    }

    // Smallest k whose full labeling space contains a pattern collision for
    // each cover in the family; purely empirical output.
    auto cmd_experiment(const GlobalOptions & global, const string & range,
            int random_covers, long long cap) -> int
    {
        const auto dots = range.find("..");
        if (dots == string::npos)
            throw InputError("range must look like a..b");
        int lo, hi;
        try {
            lo = std::stoi(range.substr(0, dots));
            hi = std::stoi(range.substr(dots + 2));
        }
        catch (const std::exception &) {
            throw InputError("range must look like a..b");
        }
        if (lo < 2 || hi < lo)
            throw InputError("range must satisfy 2 <= a <= b");

        echo_config("experiment", "n-range=" + range + " random-covers=" +
                to_string(random_covers) + " cap=" + to_string(cap) +
                " seed=" + to_string(global.seed) +
                " output=" + (global.output.empty() ? "-" : global.output));

        string csv = "n,cover_id,k_min,labelings_examined\n";
        std::mt19937_64 rng(global.seed);

        for (int n = lo; n <= hi; ++n) {
            std::vector<std::pair<string, CoverSpec>> family;

            // default family: the star cover with its last biclique removed,
            // the deterministic m = n-2 boundary case
            auto truncated = star_decomposition(n);
            truncated.bicliques.pop_back();
            family.push_back({ "star_minus_last", truncated });

            for (int r = 0; r < random_covers; ++r) {
                CoverSpec cover;
                cover.n = n;
                for (int i = 0; i < n - 2; ++i) {
                    while (true) {
                        Biclique b;
                        for (int v = 1; v <= n; ++v) {
                            const auto roll = rng() % 3;
                            if (roll == 0)
                                b.left.insert(v);
                            else if (roll == 1)
                                b.right.insert(v);
                        }
                        if (! b.left.empty() && ! b.right.empty()) {
                            cover.bicliques.push_back(std::move(b));
                            break;
                        }
                    }
                }
                family.push_back({ "random_" + to_string(r), cover });
            }

            for (const auto & [cover_id, cover] : family) {
                long long examined_total = 0;
                long long k_min = 0;
                for (long long k = 2;; ++k) {
                    // guard: stay exhaustive, so k^n labelings must fit the cap
                    BigInt space = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(n));
                    if (space > cap)
                        break;
                    long long examined = 0;
                    const auto collision = find_pattern_collision(cover, static_cast<int>(k),
                            SearchStrategy::exhaustive, 0, cap, &examined);
                    examined_total += examined;
                    if (collision) {
                        k_min = k;
                        break;
                    }
                }
                csv += to_string(n) + "," + cover_id + ",";
                csv += k_min > 0 ? to_string(k_min) : string("capped");
                csv += "," + to_string(examined_total) + "\n";
            }
        }

        if (global.output.empty())
            std::cout << csv;
        else
            write_file(global.output, csv);
        return exit_success;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{ "edge-disjoint biclique covers of K_n: construction, verification, "
            "refutation certificates, gadget counting" };
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "seed for all randomness (default 0, never wall-clock)");
    app.add_option("-o,--output", global.output, "artifact output path (default stdout)");
    app.add_option("--format", global.format, "text|json")
            ->check(CLI::IsMember({ "text", "json" }));

    auto * construct = app.add_subcommand("construct", "build an optimal cover");
    int construct_n = 0;
    string construct_method = "star";
    construct->add_option("--n", construct_n, "number of vertices")->required();
    construct->add_option("--method", construct_method, "star|recursive")
            ->check(CLI::IsMember({ "star", "recursive" }));

    auto * verify = app.add_subcommand("verify", "check a claimed cover for exactness");
    string verify_path;
    verify->add_option("cover", verify_path, "cover JSON file")->required();

    auto * refute = app.add_subcommand("refute", "produce a refutation certificate");
    string refute_path, refute_strategy = "exhaustive";
    int refute_k = 0;
    long long refute_budget = 200000, refute_kernel_bound = 4;
    refute->add_option("cover", refute_path, "cover JSON file")->required();
    refute->add_option("--strategy", refute_strategy, "exhaustive|birthday")
            ->check(CLI::IsMember({ "exhaustive", "birthday" }));
    refute->add_option("--k", refute_k, "label range (0 = auto)");
    refute->add_option("--budget", refute_budget, "max labelings examined");
    refute->add_option("--kernel-bound", refute_kernel_bound, "fallback coordinate bound");

    auto * gadget = app.add_subcommand("gadget", "gadget-graph edge counting");
    string gadget_p, gadget_q, gadget_demo, gadget_strategy = "exhaustive";
    long long gadget_budget = 200000;
    gadget->add_option("--p", gadget_p, "comma-separated part sizes |V_i|");
    gadget->add_option("--q", gadget_q, "comma-separated part sizes |V_i'|");
    gadget->add_option("--demo", gadget_demo, "cover JSON file: run the full contradiction walkthrough");
    gadget->add_option("--strategy", gadget_strategy, "exhaustive|birthday")
            ->check(CLI::IsMember({ "exhaustive", "birthday" }));
    gadget->add_option("--budget", gadget_budget, "collision budget for --demo");

    auto * bijection = app.add_subcommand("bijection", "clique-union edge injection");
    int bijection_p = 0, bijection_q = 0;
    bool bijection_unhit = false, bijection_map = false;
    bijection->add_option("--p", bijection_p, "clique size p")->required();
    bijection->add_option("--q", bijection_q, "clique size q")->required();
    bijection->add_flag("--list-unhit", bijection_unhit, "list the missed K_q edges");
    bijection->add_flag("--list-map", bijection_map, "dump the full map");

    auto * experiment = app.add_subcommand("experiment",
            "smallest label range admitting a collision, per cover");
    string experiment_range;
    int experiment_random = 0;
    long long experiment_cap = 2000000;
    experiment->add_option("--n-range", experiment_range, "a..b")->required();
    experiment->add_option("--random-covers", experiment_random, "extra random covers per n");
    experiment->add_option("--cap", experiment_cap, "max labelings per exhaustive k-search");

    // global flags may follow the subcommand
    for (auto * sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    try {
        if (construct->parsed())
            return cmd_construct(global, construct_n, construct_method);
        if (verify->parsed())
            return cmd_verify(global, verify_path);
        if (refute->parsed())
            return cmd_refute(global, refute_path, refute_strategy, refute_k,
                    refute_budget, refute_kernel_bound);
        if (gadget->parsed())
            return cmd_gadget(global, gadget_p, gadget_q, gadget_demo,
                    gadget_strategy, gadget_budget);
        if (bijection->parsed())
            return cmd_bijection(global, bijection_p, bijection_q,
                    bijection_unhit, bijection_map);
        if (experiment->parsed())
            return cmd_experiment(global, experiment_range, experiment_random, experiment_cap);
    }
    catch (const ResourceError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_exhausted;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
