// Command line front end: token graph construction, reconstruction,
// ladder/star/factorization inspection, and the brute-force sweeps.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "tokengraph/cartesian.hpp"
#include "tokengraph/corpus.hpp"
#include "tokengraph/iso.hpp"
#include "tokengraph/ladders.hpp"
#include "tokengraph/reconstruct.hpp"
#include "tokengraph/star.hpp"
#include "tokengraph/token_graph.hpp"

using json = nlohmann::ordered_json;
using namespace tokengraph;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitUsage = 64;

int size_guard() {
    if (const char* env = std::getenv("TOKENGRAPH_SIZE_GUARD")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = slurp(path);
    if (format == "adj") return parse_adjacency_list(text);
    // first non-empty line of a graph6 file
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) return parse_graph6(line);
    throw ParseError("empty graph6 input", 0);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open " + path + " for writing");
    out << content;
}

json graph_to_json(const Graph& g) {
    json j;
    j["graph6"] = emit_graph6(g);
    j["order"] = g.order();
    j["edges"] = g.num_edges();
    return j;
}

// deterministic parallel map over [0, n)
template <typename Fn>
void parallel_for(long n, int jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (long i = next++; i < n; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

int cmd_token(const std::string& input, const std::string& format, int k, const std::string& out,
              const std::string& labels) {
    Graph g = load_graph(input, format);
    TokenGraph tg = build_token_graph(g, k);
    write_file(out, emit_graph6(tg.graph) + "\n");
    if (!labels.empty()) {
        std::ostringstream ss;
        for (std::size_t i = 0; i < tg.subsets.size(); ++i) {
            json j;
            j["index"] = i;
            j["subset"] = tg.subset_vertices(static_cast<int>(i));
            ss << j.dump() << "\n";
        }
        write_file(labels, ss.str());
    }
    std::cout << "wrote F_" << k << " with " << tg.graph.order() << " vertices and " << tg.graph.num_edges()
              << " edges\n";
    return 0;
}

int cmd_reconstruct(const std::string& input, const std::string& format, const std::string& expect,
                    std::optional<int> k, const std::string& audit, const std::string& out) {
    Graph f = load_graph(input, format);
    ReconstructionResult res = reconstruct(f);
    if (!out.empty()) write_file(out, emit_graph6(res.j_forward) + "\n");
    if (!audit.empty()) {
        json j;
        j["schema"] = "1";
        j["input"] = graph_to_json(f);
        j["j_forward"] = graph_to_json(res.j_forward);
        j["j_backward"] = graph_to_json(res.j_backward);
        j["token_count"] = res.token_count;
        j["r"] = res.decomposition.r;
        j["h_order"] = res.decomposition.h_vertices.size();
        json factors = json::array();
        for (std::size_t i = 0; i < res.factors.size(); ++i) {
            const FactorInfo& fi = res.factors[i];
            json fj;
            fj["index"] = i;
            fj["class"] = factor_class_name(fi.cls);
            fj["h"] = graph_to_json(fi.h);
            fj["j"] = graph_to_json(fi.j);
            fj["l"] = fi.l;
            fj["l_bar"] = fi.l_bar;
            if (fi.star) {
                fj["star_m"] = fi.star->n;
                fj["star_l"] = fi.star->k;
            }
            factors.push_back(std::move(fj));
        }
        j["factors"] = std::move(factors);
        json cross = json::array();
        for (const CrossEdgeRecord& ce : res.cross_edges) {
            json cj;
            cj["edge"] = {ce.e.u, ce.e.v};
            cj["idx"] = {ce.fi, ce.fj};
            if (ce.endpoint_i) cj["endpoint_i"] = *ce.endpoint_i;
            if (ce.endpoint_j) cj["endpoint_j"] = *ce.endpoint_j;
            cj["forward"] = ce.forward;
            cross.push_back(std::move(cj));
        }
        j["cross_edges"] = std::move(cross);
        write_file(audit, j.dump(2) + "\n");
    }
    std::cout << "reconstructed " << emit_graph6(res.j_forward) << " (token count " << res.token_count << ")\n";
    if (k) {
        if (!verify_reconstruction(f, res.j_forward, *k)) {
            std::cout << "verification failed for k=" << *k << "\n";
            return kExitVerification;
        }
        std::cout << "verified: F_" << *k << "(J) is isomorphic to the input\n";
    }
    if (!expect.empty()) {
        Graph want = load_graph(expect, format);
        if (!isomorphic(res.j_forward, want)) {
            std::cout << "output differs from the expected graph\n";
            return kExitVerification;
        }
        std::cout << "output matches the expected graph\n";
    }
    return 0;
}

int cmd_reconstruct_disconnected(const std::string& input, const std::string& format, int n, int k,
                                 const std::string& out, const std::string& report) {
    Graph f = load_graph(input, format);
    DisconnectedReconstruction rec = reconstruct_disconnected(f, n, k);
    std::ostringstream lines;
    for (const Graph& c : rec.nontrivial_components) lines << emit_graph6(c) << "\n";
    if (!out.empty()) write_file(out, lines.str());
    if (!report.empty()) {
        json j;
        j["schema"] = "1";
        j["n"] = n;
        j["k"] = k;
        j["isolated"] = rec.isolated_count;
        json comps = json::array();
        for (const Graph& c : rec.nontrivial_components) comps.push_back(graph_to_json(c));
        j["components"] = std::move(comps);
        write_file(report, j.dump(2) + "\n");
    }
    std::cout << rec.nontrivial_components.size() << " nontrivial components, " << rec.isolated_count
              << " isolated vertices\n";
    for (const Graph& c : rec.nontrivial_components) std::cout << "  " << emit_graph6(c) << "\n";
    return 0;
}

int cmd_star_check(const std::string& input, const std::string& format) {
    Graph f = load_graph(input, format);
    auto rec = recognize_star_token(f);
    if (!rec) {
        std::cout << "rejected: not a star token graph\n";
        return kExitVerification;
    }
    std::cout << "accepted: isomorphic to F_" << rec->first.k << "(K_{1," << rec->first.n << "})\n";
    return 0;
}

int cmd_ladders(const std::string& input, const std::string& format, const std::string& out) {
    Graph f = load_graph(input, format);
    LadderClasses lc = ladder_classes(f);
    json j;
    j["schema"] = "1";
    j["classes"] = json::array();
    for (const auto& cls : lc.classes) {
        json edges = json::array();
        for (int eid : cls) edges.push_back({lc.edges[eid].u, lc.edges[eid].v});
        j["classes"].push_back(std::move(edges));
    }
    if (!out.empty()) write_file(out, j.dump(2) + "\n");
    std::cout << lc.classes.size() << " ladder classes over " << lc.edges.size() << " edges\n";
    return 0;
}

int cmd_factorize(const std::string& input, const std::string& format, const std::string& out) {
    Graph g = load_graph(input, format);
    CartesianFactorization cf = cartesian_factorize(g);
    if (!out.empty()) {
        json j;
        j["schema"] = "1";
        j["prime"] = cf.factors.size() == 1;
        json factors = json::array();
        for (const Graph& f : cf.factors) factors.push_back(graph_to_json(f));
        j["factors"] = std::move(factors);
        j["coordinates"] = cf.coordinates;
        write_file(out, j.dump(2) + "\n");
    }
    std::cout << (cf.factors.size() == 1 ? "prime" : "composite") << ": " << cf.factors.size() << " factor(s)\n";
    for (const Graph& f : cf.factors) std::cout << "  " << emit_graph6(f) << "\n";
    return 0;
}

int cmd_sweep(int max_n, const std::string& checks_csv, const std::string& report_path, int jobs) {
    std::set<std::string> checks;
    {
        std::stringstream ss(checks_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) checks.insert(item);
    }
    for (const auto& c : checks)
        if (c != "roundtrip" && c != "aut" && c != "p1" && c != "prime")
            throw DomainError("unknown check: " + c);
    if (checks.empty()) checks = {"roundtrip", "aut", "p1", "prime"};
    int guard = size_guard();

    struct Item {
        std::string g6;
        int n, k;
    };
    std::vector<Item> items;
    for (int n = 2; n <= max_n; ++n)
        for (const Graph& g : generate_corpus(n, true))
            for (int k = 1; k <= n - 1; ++k) items.push_back({emit_graph6(g), n, k});

    std::vector<json> rows(items.size());
    std::vector<char> ok(items.size(), 1);
    parallel_for(static_cast<long>(items.size()), jobs, [&](long idx) {
        const Item& it = items[idx];
        Graph g = parse_graph6(it.g6);
        TokenGraph f = build_token_graph(g, it.k);
        json row;
        row["graph6"] = it.g6;
        row["n"] = it.n;
        row["k"] = it.k;
        bool all_ok = true;
        if (checks.count("roundtrip") && it.k >= 2 && 2 * it.k <= it.n && it.n >= 4) {
            bool pass = false;
            try {
                ReconstructionResult res = reconstruct(f.graph);
                pass = isomorphic(res.j_forward, g);
            } catch (const StructureError&) {
                pass = false;
            }
            row["roundtrip"] = pass;
            all_ok = all_ok && pass;
        }
        if (checks.count("aut") && it.n >= 3) {
            bool pass = false;
            try {
                pass = verify_unique_reconstructibility(g, it.k, guard);
            } catch (const SizeError&) {
                pass = false;
            }
            row["aut"] = pass;
            all_ok = all_ok && pass;
        }
        if (checks.count("p1")) {
            bool pass = verify_p1_property(f);
            row["p1"] = pass;
            all_ok = all_ok && pass;
        }
        if (checks.count("prime")) {
            bool pass = cartesian_factorize(f.graph).factors.size() == 1;
            row["prime"] = pass;
            all_ok = all_ok && pass;
        }
        rows[idx] = std::move(row);
        ok[idx] = all_ok ? 1 : 0;
    });

    long failures = 0;
    for (char c : ok)
        if (!c) ++failures;
    if (!report_path.empty()) {
        json j;
        j["schema"] = "1";
        j["max_n"] = max_n;
        j["checks"] = std::vector<std::string>(checks.begin(), checks.end());
        j["cases"] = rows.size();
        j["failures"] = failures;
        j["results"] = rows;
        write_file(report_path, j.dump(2) + "\n");
    }
    std::cout << rows.size() << " cases, " << failures << " failures\n";
    return failures == 0 ? 0 : kExitVerification;
}

int cmd_collision_search(int max_n, const std::string& out, int jobs) {
    auto pairs = search_distinct_k_collision(max_n, jobs);
    json j;
    j["schema"] = "1";
    j["max_n"] = max_n;
    j["pairs"] = json::array();
    for (const CollisionPair& p : pairs) {
        json pj;
        pj["g1"] = emit_graph6(p.g1);
        pj["k1"] = p.k1;
        pj["g2"] = emit_graph6(p.g2);
        pj["k2"] = p.k2;
        j["pairs"].push_back(std::move(pj));
    }
    if (!out.empty()) write_file(out, j.dump(2) + "\n");
    std::cout << pairs.size() << " collision pair(s) up to n=" << max_n << "\n";
    for (const CollisionPair& p : pairs)
        std::cout << "  F_" << p.k1 << "(" << emit_graph6(p.g1) << ") ~ F_" << p.k2 << "(" << emit_graph6(p.g2)
                  << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"token graph construction and reconstruction"};
    app.require_subcommand(1);

    std::string input, format = "graph6", out, labels, expect, audit, report, checks = "roundtrip,aut,p1,prime";
    int k = 0, n = 0, max_n = 6, jobs = 1;
    std::optional<int> opt_k;

    auto* tok = app.add_subcommand("token", "build F_k of a graph");
    tok->add_option("--input", input)->required();
    tok->add_option("--format", format)->check(CLI::IsMember({"graph6", "adj"}));
    tok->add_option("--k", k)->required();
    tok->add_option("--out", out)->required();
    tok->add_option("--labels", labels);

    auto* rec = app.add_subcommand("reconstruct", "recover a base graph from a token graph");
    rec->add_option("--input", input)->required();
    rec->add_option("--format", format)->check(CLI::IsMember({"graph6", "adj"}));
    rec->add_option("--expect", expect);
    rec->add_option("--k", opt_k);
    rec->add_option("--audit", audit);
    rec->add_option("--out", out);

    auto* recd = app.add_subcommand("reconstruct-disconnected", "recover a disconnected base");
    recd->add_option("--input", input)->required();
    recd->add_option("--format", format)->check(CLI::IsMember({"graph6", "adj"}));
    recd->add_option("--n", n)->required();
    recd->add_option("--k", k)->required();
    recd->add_option("--out", out);
    recd->add_option("--json", report);

    auto* star = app.add_subcommand("star-check", "decide star token graph membership");
    star->add_option("--input", input)->required();
    star->add_option("--format", format)->check(CLI::IsMember({"graph6", "adj"}));

    auto* lad = app.add_subcommand("ladders", "ladder classes of a graph");
    lad->add_option("--input", input)->required();
    lad->add_option("--format", format)->check(CLI::IsMember({"graph6", "adj"}));
    lad->add_option("--out", out);

    auto* fac = app.add_subcommand("factorize", "Cartesian prime factorization");
    fac->add_option("--input", input)->required();
    fac->add_option("--format", format)->check(CLI::IsMember({"graph6", "adj"}));
    fac->add_option("--json", out);

    auto* sw = app.add_subcommand("sweep", "run the oracle checks over the small-graph corpus");
    sw->add_option("--max-n", max_n)->check(CLI::Range(2, 8));
    sw->add_option("--checks", checks);
    sw->add_option("--report", report);
    sw->add_option("--jobs", jobs)->check(CLI::Range(1, 64));

    auto* col = app.add_subcommand("collision-search", "find cross-k token graph collisions");
    col->add_option("--max-n", max_n)->check(CLI::Range(2, 7));
    col->add_option("--out", out);
    col->add_option("--jobs", jobs)->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (tok->parsed()) return cmd_token(input, format, k, out, labels);
        if (rec->parsed()) return cmd_reconstruct(input, format, expect, opt_k, audit, out);
        if (recd->parsed()) return cmd_reconstruct_disconnected(input, format, n, k, out, report);
        if (star->parsed()) return cmd_star_check(input, format);
        if (lad->parsed()) return cmd_ladders(input, format, out);
        if (fac->parsed()) return cmd_factorize(input, format, out);
        if (sw->parsed()) return cmd_sweep(max_n, checks, report, jobs);
        if (col->parsed()) return cmd_collision_search(max_n, out, jobs);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const StructureError& e) {
        std::cerr << "structure error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SizeError& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
