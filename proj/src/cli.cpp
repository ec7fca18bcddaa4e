#include "domcolor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "domcolor/classify.hpp"
#include "domcolor/enumerate.hpp"
#include "domcolor/families.hpp"
#include "domcolor/formats.hpp"
#include "domcolor/json_io.hpp"
#include "domcolor/oracle.hpp"
#include "domcolor/survey.hpp"
#include "domcolor/theory.hpp"

namespace domcolor::cli {
namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GraphInput {
    std::string family;
    int n = -1;
    int p = -1;
    int q = -1;
    std::string parts;
    std::string leaf_counts;
    std::string graph6;
    std::string file;
    std::string input_format;
};

struct Common {
    std::string format = "json";
    std::uint64_t max_nodes = kDefaultMaxNodes;
    unsigned jobs = 1;
};

struct LabeledGraph {
    std::string label;
    Graph graph;
};

int parse_int(std::string_view text, const std::string& field) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw UsageError(field + ": expected an integer, got '" + std::string(text) + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

int need(int value, const char* field, const std::string& family) {
    if (value < 0) throw UsageError(std::string(field) + ": required for family " + family);
    return value;
}

FamilySpec family_spec(const GraphInput& in) {
    const std::string& f = in.family;
    if (f == "path") return Path{need(in.n, "n", f)};
    if (f == "cycle") return Cycle{need(in.n, "n", f)};
    if (f == "complete") return Complete{need(in.n, "n", f)};
    if (f == "star") return Star{need(in.n, "n", f)};
    if (f == "wheel") return Wheel{need(in.n, "n", f)};
    if (f == "petersen") return Petersen{};
    if (f == "c3-leaves") return C3WithLeaves{need(in.n, "n", f)};
    if (f == "bistar") return BiStar{need(in.p, "p", f), need(in.q, "q", f)};
    if (f == "multipartite") {
        if (in.parts.empty()) throw UsageError("parts: required for family multipartite");
        CompleteMultipartite spec;
        for (const auto& s : split(in.parts, ',')) spec.parts.push_back(parse_int(s, "parts"));
        return spec;
    }
    if (f == "kn-leaves") {
        if (in.leaf_counts.empty()) throw UsageError("leaf-counts: required for family kn-leaves");
        KnWithLeaves spec{need(in.n, "n", f), {}};
        for (const auto& item : split(in.leaf_counts, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw UsageError("leaf-counts: expected idx:count, got '" + item + "'");
            const int hub = parse_int(item.substr(0, colon), "leaf-counts");
            if (!spec.leaf_counts.emplace(hub, parse_int(item.substr(colon + 1), "leaf-counts")).second)
                throw UsageError("leaf-counts: hub " + std::to_string(hub) + " listed twice");
        }
        return spec;
    }
    throw UsageError("family: unknown family '" + f + "'");
}

Format guess_format(const std::string& path, const std::string& explicit_format) {
    if (!explicit_format.empty()) return parse_format(explicit_format);
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "col" || ext == "dimacs") return Format::dimacs;
    if (ext == "edges" || ext == "edgelist" || ext == "txt") return Format::edgelist;
    return Format::graph6;
}

std::vector<LabeledGraph> load_graphs(const GraphInput& in) {
    const int sources = !in.family.empty() + !in.graph6.empty() + !in.file.empty();
    if (sources != 1) throw UsageError("input: give exactly one of --family, --graph6, --file");
    if (!in.family.empty()) {
        const FamilySpec spec = family_spec(in);
        return {{describe(spec), generate(spec)}};
    }
    if (!in.graph6.empty()) {
        Graph g = parse(in.graph6, Format::graph6);
        return {{in.graph6, std::move(g)}};
    }
    std::ifstream file(in.file, std::ios::binary);
    if (!file) throw UsageError("file: cannot open '" + in.file + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    const Format format = guess_format(in.file, in.input_format);
    std::vector<LabeledGraph> out;
    if (format == Format::graph6) {
        for (Graph& g : parse_graph6_lines(buffer.str()))
            out.push_back({write(g, Format::graph6), std::move(g)});
    } else {
        out.push_back({in.file, parse(buffer.str(), format)});
    }
    if (out.empty()) throw UsageError("file: no graphs in '" + in.file + "'");
    return out;
}

Json header(const LabeledGraph& lg) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["input"] = lg.label;
    j["graph6"] = write(lg.graph, Format::graph6);
    j["n"] = lg.graph.order();
    j["m"] = lg.graph.size();
    return j;
}

void merge(Json& into, const Json& from) {
    for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void print_table(const Json& j, std::ostream& out, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix + it.key();
        const Json& v = it.value();
        if (v.is_object()) {
            print_table(v, out, key + ".");
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << key << ":\n";
            std::vector<std::string> cols;
            for (auto c = v.front().begin(); c != v.front().end(); ++c) cols.push_back(c.key());
            std::vector<std::size_t> width(cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                width[c] = cols[c].size();
                for (const Json& row : v)
                    width[c] = std::max(width[c], scalar_text(row.value(cols[c], Json())).size());
            }
            out << ' ';
            for (std::size_t c = 0; c < cols.size(); ++c)
                out << ' ' << std::left << std::setw(static_cast<int>(width[c])) << cols[c];
            out << '\n';
            for (const Json& row : v) {
                out << ' ';
                for (std::size_t c = 0; c < cols.size(); ++c)
                    out << ' ' << std::left << std::setw(static_cast<int>(width[c]))
                        << scalar_text(row.value(cols[c], Json()));
                out << '\n';
            }
        } else {
            out << std::left << std::setw(24) << key << ' ' << scalar_text(v) << '\n';
        }
    }
}

void emit(const Json& j, const Common& common, std::ostream& out) {
    if (common.format == "table") {
        print_table(j, out);
        out << '\n';
    } else {
        out << j.dump() << '\n';
    }
}

SolveOptions solve_options(const Common& c) {
    SolveOptions o;
    o.max_nodes = c.max_nodes;
    return o;
}

// Maps each input to a JSON line with bounded parallelism; output order
// follows input order.
template <class Fn>
std::vector<Json> batch(const std::vector<LabeledGraph>& inputs, unsigned jobs, Fn fn) {
    std::vector<Json> results(inputs.size());
    std::vector<std::exception_ptr> errors(inputs.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(jobs, inputs.size()));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < inputs.size(); i += workers) {
            try {
                results[i] = fn(inputs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

Json invariant_json(const std::string& invariant, const Graph& g, const SolveOptions& opts,
                    bool& inconclusive) {
    Json j;
    auto put = [&](const char* key, const ColoringResult& r) {
        j["invariant"] = key;
        j["status"] = to_string(r.status);
        j[key] = r.optimal() ? Json(r.value) : Json(nullptr);
        if (!r.optimal()) j["undecided_at"] = r.value;
        j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
        j["nodes"] = r.nodes;
        inconclusive |= !r.optimal();
    };
    if (invariant == "chi") {
        put("chi", chromatic_number(g, opts));
    } else if (invariant == "gamma") {
        require_solvable(g, 1);
        const auto r = domination_number(g);
        j["invariant"] = "gamma";
        j["status"] = "optimal";
        j["gamma"] = r.size;
        j["witness"] = vertex_set_json(r.witness);
    } else if (invariant == "chi-d") {
        put("chi_d", dominator_chromatic(g, opts));
    } else if (invariant == "chi-dom") {
        put("chi_dom", dominated_chromatic(g, opts));
    } else if (invariant == "chi-dd") {
        put("chi_dd", domination_chromatic(g, opts));
    } else {
        const InvariantReport r = full_report(g, opts);
        inconclusive |= r.status != SolveStatus::optimal;
        j["invariant"] = "all";
        merge(j, to_json(r));
    }
    return j;
}

Coloring parse_coloring(const std::string& text) {
    if (!text.empty() && text.front() == '[') {
        Json arr;
        try {
            arr = Json::parse(text);
        } catch (const Json::exception& e) {
            throw UsageError(std::string("coloring: ") + e.what());
        }
        if (!arr.is_array()) throw UsageError("coloring: expected a JSON array");
        std::vector<int> assignment;
        for (const Json& v : arr) {
            if (!v.is_number_integer()) throw UsageError("coloring: array entries must be integers");
            assignment.push_back(v.get<int>());
        }
        return Coloring(std::move(assignment));
    }
    return Coloring::from_line(text);
}

void add_graph_input(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--family", in.family,
                    "path|cycle|complete|multipartite|star|bistar|wheel|petersen|kn-leaves|c3-leaves");
    cmd->add_option("--n", in.n, "family size (path/cycle/complete order, star/c3-leaves leaves, wheel rim, kn-leaves core)");
    cmd->add_option("--p", in.p, "bi-star degree of centre u");
    cmd->add_option("--q", in.q, "bi-star degree of centre v");
    cmd->add_option("--parts", in.parts, "multipartite part sizes a,b,c");
    cmd->add_option("--leaf-counts", in.leaf_counts, "kn-leaves hub:count,...");
    cmd->add_option("--graph6", in.graph6, "inline graph6 code");
    cmd->add_option("--file", in.file, "graph file (graph6 lines, DIMACS .col, or edge list)");
    cmd->add_option("--input-format", in.input_format, "graph6|dimacs|edgelist (default by extension)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact domination colouring toolkit", "domcolor"};
    app.require_subcommand(1);
    Common common;
    GraphInput in;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "json|table")
            ->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--max-nodes", common.max_nodes, "branch-and-bound node ceiling")
            ->envname("DOMCOLOR_MAX_NODES");
        cmd->add_option("--jobs", common.jobs, "worker threads for batch work")
            ->check(CLI::Range(1U, 256U));
    };

    auto* gen = app.add_subcommand("gen", "generate a family instance or enumerate graphs");
    add_graph_input(gen, in);
    add_common(gen);
    std::string write_format;
    int connected = -1;
    int random_n = -1;
    bool dedup = false;
    std::uint64_t seed = 1;
    int count = 1;
    double density = 0.4;
    gen->add_option("--write", write_format, "emit raw graph6|dimacs|edgelist instead of JSON");
    gen->add_option("--connected", connected, "enumerate connected graphs on this many vertices");
    gen->add_flag("--dedup", dedup, "one graph per isomorphism class");
    gen->add_option("--random", random_n, "sample random connected graphs on this many vertices");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--count", count, "number of random graphs")->check(CLI::PositiveNumber);
    gen->add_option("--density", density, "edge probability")->check(CLI::Range(0.0, 1.0));

    auto* solve = app.add_subcommand("solve", "compute invariants exactly");
    add_graph_input(solve, in);
    add_common(solve);
    std::string invariant = "all";
    bool with_oracle = false;
    solve->add_option("--invariant", invariant, "chi|gamma|chi-d|chi-dom|chi-dd|all")
        ->transform(CLI::IsMember({"chi", "gamma", "chi-d", "chi-dom", "chi-dd", "all"},
                              [](std::string s) {
                                  std::replace(s.begin(), s.end(), '_', '-');
                                  return s;
                              }));
    solve->add_flag("--oracle", with_oracle, "also run the exhaustive partition oracle (n <= 10)");

    auto* verify = app.add_subcommand("verify", "check a colouring against the definitions");
    add_graph_input(verify, in);
    add_common(verify);
    std::string coloring_text;
    verify->add_option("--coloring", coloring_text, "digits (0-9a-z) per vertex, or a JSON array")
        ->required();

    auto* bounds = app.add_subcommand("bounds", "evaluate the inequality chain");
    add_graph_input(bounds, in);
    add_common(bounds);
    bool assert_planar = false;
    bounds->add_flag("--assert-planar", assert_planar, "caller vouches the graph is planar");

    auto* reduce = app.add_subcommand("reduce", "universal-vertex reduction and its equivalence");
    add_graph_input(reduce, in);
    add_common(reduce);
    int reduce_k = -1;
    reduce->add_option("--k", reduce_k, "check only this colour count");

    auto* survey_cmd = app.add_subcommand("survey", "check the published relations on all small graphs");
    add_common(survey_cmd);
    int n_max = 6;
    std::string checks_text;
    bool long_run = false;
    bool unicyclic = false;
    int n_min = 1;
    survey_cmd->add_option("--n-min", n_min, "smallest order enumerated");
    survey_cmd->add_option("--n-max", n_max, "largest order enumerated");
    survey_cmd->add_option("--checks", checks_text, "comma-separated checks (default all)");
    survey_cmd->add_flag("--long-run", long_run, "allow n-max = 7");
    survey_cmd->add_flag("--unicyclic", unicyclic, "survey connected unicyclic graphs 3..n-max (<= 10)");

    auto* family_cmd = app.add_subcommand("family-check", "closed forms against the solver");
    add_common(family_cmd);
    std::string family_name;
    int family_n_max = 12;
    family_cmd->add_option("--family", family_name, "family keyword")->required();
    family_cmd->add_option("--n-max", family_n_max, "largest instance order");

    std::vector<std::string> argv_store{"domcolor"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "domcolor: " << e.what() << '\n';
        return kUsage;
    }

    try {
        const SolveOptions opts = solve_options(common);

        if (gen->parsed()) {
            std::vector<LabeledGraph> graphs;
            if (connected > 0) {
                for (Graph& g : connected_graphs(connected, dedup))
                    graphs.push_back({"connected", std::move(g)});
            } else if (random_n > 0) {
                std::mt19937_64 rng(seed);
                for (int i = 0; i < count; ++i)
                    graphs.push_back({"random", random_connected_graph(random_n, density, rng)});
            } else {
                graphs = load_graphs(in);
            }
            for (const auto& lg : graphs) {
                if (!write_format.empty()) {
                    const Format f = parse_format(write_format);
                    out << write(lg.graph, f) << (f == Format::graph6 ? "\n" : "");
                    continue;
                }
                Json j = header(lg);
                Json edges = Json::array();
                for (auto [u, v] : lg.graph.edges()) edges.push_back({u, v});
                j["edges"] = std::move(edges);
                j["degrees"] = lg.graph.degree_sequence();
                emit(j, common, out);
            }
            return kOk;
        }

        if (solve->parsed()) {
            bool inconclusive = false;
            std::mutex flag_mutex;
            const auto rows = batch(load_graphs(in), common.jobs, [&](const LabeledGraph& lg) {
                bool local = false;
                Json j = header(lg);
                merge(j, invariant_json(invariant, lg.graph, opts, local));
                if (with_oracle) {
                    const auto o = oracle_chi_dd(lg.graph);
                    j["oracle_chi_dd"] = o.value;
                }
                std::lock_guard lock(flag_mutex);
                inconclusive |= local;
                return j;
            });
            for (const auto& j : rows) emit(j, common, out);
            return inconclusive ? kInconclusive : kOk;
        }

        if (verify->parsed()) {
            const Coloring c = parse_coloring(coloring_text);
            for (const auto& lg : load_graphs(in)) {
                const ViolationReport report = check_domination_coloring(lg.graph, c);
                Json j = header(lg);
                j["coloring"] = c.to_line();
                j["colors"] = c.color_count();
                j["proper"] = is_proper(lg.graph, c);
                j["dominator"] = is_dominator(lg.graph, c);
                j["dominated"] = is_dominated(lg.graph, c);
                merge(j, to_json(report));
                emit(j, common, out);
            }
            return kOk;
        }

        if (bounds->parsed()) {
            int code = kOk;
            for (const auto& lg : load_graphs(in)) {
                const BoundsReport report = bounds_report(lg.graph, assert_planar, opts);
                Json j = header(lg);
                merge(j, to_json(report));
                emit(j, common, out);
                if (!report.consistent()) code = kCounterexample;
            }
            return code;
        }

        if (reduce->parsed()) {
            int code = kOk;
            for (const auto& lg : load_graphs(in)) {
                const Graph ext = add_universal_vertex(lg.graph);
                Json j = header(lg);
                j["extension_graph6"] = write(ext, Format::graph6);
                Json checks = Json::array();
                bool all = true;
                const int lo = reduce_k > 0 ? reduce_k : 1;
                const int hi = reduce_k > 0 ? reduce_k : lg.graph.order();
                for (int k = lo; k <= hi; ++k) {
                    const ReductionCheck r = check_reduction(lg.graph, k, opts);
                    Json row;
                    row["k"] = k;
                    row["colorable"] = r.colorable;
                    row["extension_colorable"] = r.extension_colorable;
                    row["holds"] = r.holds();
                    checks.push_back(std::move(row));
                    all &= r.holds();
                }
                j["checks"] = std::move(checks);
                j["holds"] = all;
                emit(j, common, out);
                if (!all) code = kCounterexample;
            }
            return code;
        }

        if (survey_cmd->parsed()) {
            std::vector<SurveyCheck> checks;
            for (const auto& name : split(checks_text, ',')) checks.push_back(parse_check(name));
            if (checks.empty()) checks = all_checks();
            SurveyOptions sopts;
            sopts.long_run = long_run;
            sopts.n_min = n_min;
            sopts.solve = opts;
            sopts.jobs = common.jobs;
            SurveyReport report;
            if (unicyclic) {
                if (n_max < 3 || n_max > kMaxCanonicalOrder)
                    throw UsageError("n-max: unicyclic survey supports 3..10");
                std::vector<Graph> graphs;
                for (int n = 3; n <= n_max; ++n) {
                    auto level = unicyclic_graphs(n);
                    graphs.insert(graphs.end(), level.begin(), level.end());
                }
                report = survey_graphs(graphs, checks, sopts);
            } else {
                report = survey(n_max, checks, sopts);
            }
            Json j;
            j["schema"] = kSchemaVersion;
            merge(j, to_json(report));
            emit(j, common, out);
            if (!report.clean()) return kCounterexample;
            return report.complete ? kOk : kInconclusive;
        }

        if (family_cmd->parsed()) {
            SurveyOptions sopts;
            sopts.solve = opts;
            const FamilyCheckReport report = family_check(family_name, family_n_max, sopts);
            Json j;
            j["schema"] = kSchemaVersion;
            merge(j, to_json(report));
            emit(j, common, out);
            if (report.disagreements() > 0) return kCounterexample;
            return report.inconclusive > 0 ? kInconclusive : kOk;
        }
    } catch (const SearchExhausted& e) {
        err << "domcolor: inconclusive: " << e.what() << '\n';
        return kInconclusive;
    } catch (const std::exception& e) {
        err << "domcolor: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace domcolor::cli
