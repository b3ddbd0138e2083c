// Command-line front end: bounds, exact Zagreb index, closed-form family
// bounds, oracle verification and graphicality checks, with text or JSON
// output.
//
// Exit codes: 0 success, 1 domain error (out-of-class, non-graphical,
// infeasible), 2 parse error (bad flags, malformed input files).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mz/mz.hpp"

namespace {

using nlohmann::json;

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string degrees;
    std::string degree_file;
    std::string edges_file;
    std::string format = "text";
    std::string family;
    std::vector<long long> params;
    std::uint64_t seed = 20240901;
    std::size_t max_enum = 6;
};

std::vector<int> parse_degree_tokens(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned) {
        if (c == ',') c = ' ';
    }
    std::istringstream in(cleaned);
    std::vector<int> degrees;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size() || value <= 0) {
                throw ParseFailure("invalid degree token '" + token + "' (positive integers required)");
            }
            degrees.push_back(value);
        } catch (const ParseFailure&) {
            throw;
        } catch (const std::exception&) {
            throw ParseFailure("invalid degree token '" + token + "' (positive integers required)");
        }
    }
    if (degrees.empty()) throw ParseFailure("no degrees given");
    return degrees;
}

std::vector<int> read_degrees(const Options& opt) {
    if (!opt.degrees.empty() && !opt.degree_file.empty()) {
        throw ParseFailure("give exactly one of --degrees and --degree-file");
    }
    std::string text = opt.degrees;
    if (!opt.degree_file.empty()) {
        std::ifstream in(opt.degree_file);
        if (!in) throw ParseFailure("cannot open degree file '" + opt.degree_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    if (text.empty()) throw ParseFailure("no degree input; use --degrees or --degree-file");

    std::vector<int> degrees = parse_degree_tokens(text);
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != degrees) {
        std::cerr << "note: degrees were reordered into nonincreasing order\n";
    }
    return sorted;
}

mz::SimpleGraph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open edge file '" + path + "'");
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        std::string trailing;
        if (!(ls >> v) || (ls >> trailing)) {
            throw ParseFailure("edge file line " + std::to_string(line_no) +
                               ": expected two vertex indices");
        }
        if (u < 0 || v < 0) {
            throw ParseFailure("edge file line " + std::to_string(line_no) +
                               ": vertex indices must be nonnegative");
        }
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        max_vertex = std::max<long long>(max_vertex, std::max(u, v));
    }
    if (edges.empty()) throw ParseFailure("edge file '" + path + "' contains no edges");
    return mz::SimpleGraph(static_cast<std::size_t>(max_vertex) + 1, std::move(edges));
}

json number_or_double(double v) {
    if (mz::is_near_integer(v)) return json(static_cast<long long>(std::llround(v)));
    return json(v);
}

json vector_to_json(const mz::OrderedVector& x) {
    json arr = json::array();
    for (double v : x) arr.push_back(number_or_double(v));
    return arr;
}

json trace_to_json(const mz::ExtremalTrace& t) {
    json j;
    j["branch"] = t.branch;
    j["k"] = t.k;
    j["d"] = t.d;
    if (t.theta) j["theta"] = number_or_double(*t.theta);
    if (t.rho) j["rho"] = number_or_double(*t.rho);
    j["vector"] = vector_to_json(t.vector);
    return j;
}

std::string trace_summary(const mz::ExtremalTrace& t) {
    std::ostringstream os;
    os << t.branch << " (k=" << t.k << ", d=" << t.d;
    if (t.theta) os << ", theta=" << *t.theta;
    if (t.rho) os << ", rho=" << *t.rho;
    os << ")";
    return os.str();
}

void print_bounds_text(const mz::PendantClassSpec& spec, const mz::BoundsReport& report) {
    std::cout << "n=" << spec.sequence.n() << " m=" << spec.edge_count
              << " h=" << spec.pendant_count << " a=" << spec.total << "\n";
    std::cout << "blocks: internal=[" << spec.m1 << "," << spec.M1 << "]x"
              << (spec.edge_count - static_cast<long long>(spec.pendant_count))
              << " pendant=[" << spec.m2 << "," << spec.M2 << "]x" << spec.pendant_count << "\n";
    std::cout << "lower=" << report.lower << " upper=" << report.upper << "\n";
    if (report.das_gutman) std::cout << "das_gutman=" << *report.das_gutman << "\n";
    std::cout << "upper vector: " << mz::to_string(report.upper_vector) << "  "
              << trace_summary(report.upper_trace) << "\n";
    std::cout << "lower vector: " << mz::to_string(report.lower_vector)
              << "  integerized from " << mz::to_string(report.lower_trace.vector) << "  "
              << trace_summary(report.lower_trace) << "\n";
}

json bounds_json(const mz::PendantClassSpec& spec, const mz::BoundsReport& report) {
    json j;
    j["n"] = spec.sequence.n();
    j["m"] = spec.edge_count;
    j["a"] = spec.total;
    j["h"] = spec.pendant_count;
    j["m1"] = spec.m1;
    j["m2"] = spec.m2;
    j["M1"] = spec.M1;
    j["M2"] = spec.M2;
    j["lower"] = report.lower;
    j["upper"] = report.upper;
    j["lower_vector"] = vector_to_json(report.lower_vector);
    j["upper_vector"] = vector_to_json(report.upper_vector);
    if (report.das_gutman) j["das_gutman"] = *report.das_gutman;
    j["branches"] = {{"upper", trace_to_json(report.upper_trace)},
                     {"lower", trace_to_json(report.lower_trace)}};
    return j;
}

int run_bounds(const Options& opt) {
    const mz::DegreeSequence seq(read_degrees(opt));
    const mz::PendantClassSpec spec = mz::build_constraint_set(seq);
    const mz::BoundsReport report = mz::zagreb_bounds(seq);
    if (opt.format == "json") {
        std::cout << bounds_json(spec, report).dump(2) << "\n";
    } else {
        print_bounds_text(spec, report);
    }
    return 0;
}

int run_exact(const Options& opt) {
    if (opt.edges_file.empty()) throw ParseFailure("exact requires --edges <path>");
    const mz::SimpleGraph g = read_edge_list(opt.edges_file);
    const long long s = mz::zagreb_exact(g);
    if (opt.format == "json") {
        json j;
        j["n"] = g.n();
        j["m"] = g.edge_count();
        j["S"] = s;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n=" << g.n() << " m=" << g.edge_count() << "\n";
        std::cout << "S(G)=" << s << "\n";
    }
    return 0;
}

int run_closed_form(const Options& opt) {
    if (opt.family.empty()) throw ParseFailure("closed-form requires --family <name>");
    const mz::GraphFamily family = [&] {
        try {
            return mz::family_from_name(opt.family);
        } catch (const mz::PreconditionError& e) {
            throw ParseFailure(e.what());
        }
    }();
    const mz::DegreeSequence seq = mz::family_degree_sequence(family, opt.params);
    const mz::BoundsReport report = mz::closed_form_family(family, opt.params);
    if (opt.format == "json") {
        json j;
        j["family"] = mz::family_name(family);
        j["params"] = opt.params;
        j["n"] = seq.n();
        j["m"] = seq.edge_count();
        j["lower"] = report.lower;
        j["upper"] = report.upper;
        j["lower_vector"] = vector_to_json(report.lower_vector);
        j["upper_vector"] = vector_to_json(report.upper_vector);
        if (report.das_gutman) j["das_gutman"] = *report.das_gutman;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "family=" << mz::family_name(family) << " n=" << seq.n()
                  << " m=" << seq.edge_count() << "\n";
        std::cout << "lower=" << report.lower << " upper=" << report.upper << "\n";
        if (report.das_gutman) std::cout << "das_gutman=" << *report.das_gutman << "\n";
        std::cout << "upper vector: " << mz::to_string(report.upper_vector) << "\n";
        std::cout << "lower vector: " << mz::to_string(report.lower_vector) << "\n";
    }
    return 0;
}

int run_verify(const Options& opt) {
    const mz::DegreeSequence seq(read_degrees(opt));
    const mz::PendantClassSpec spec = mz::build_constraint_set(seq);
    const mz::ExtremalTrace max_trace = mz::maximal_element_two_block(spec.edge_sum_set);
    const mz::ExtremalTrace min_trace = mz::minimal_element_two_block(spec.edge_sum_set);
    mz::ExtremalCandidates candidates{max_trace.vector, min_trace.vector,
                                      mz::integerize_minimal(spec.edge_sum_set, min_trace)};
    const mz::VerificationReport report =
        mz::verify_extremal(spec.edge_sum_set, candidates, 1000, opt.seed, opt.max_enum);

    if (opt.format == "json") {
        json j;
        j["checked"] = report.checked;
        j["mode"] = report.used_enumeration ? "enumeration" : "sampling";
        j["seed"] = opt.seed;
        j["passed"] = report.passed();
        j["failures"] = report.failures;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "mode: " << (report.used_enumeration ? "enumeration" : "sampling")
                  << " checked=" << report.checked << " seed=" << opt.seed << "\n";
        for (const std::string& f : report.failures) std::cout << "counterexample: " << f << "\n";
        std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    return 0;
}

int run_graphical(const Options& opt) {
    std::vector<int> degrees = read_degrees(opt);
    const bool ok = mz::is_graphical(degrees);
    if (opt.format == "json") {
        json j;
        j["degrees"] = degrees;
        j["graphical"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (ok ? "graphical" : "not graphical") << "\n";
    }
    return ok ? 0 : 1;
}

void add_degree_options(CLI::App* cmd, Options& opt) {
    auto* inline_opt = cmd->add_option("--degrees", opt.degrees,
                                       "comma- or whitespace-separated positive degrees");
    auto* file_opt = cmd->add_option("--degree-file", opt.degree_file,
                                     "file containing the degree list");
    inline_opt->excludes(file_opt);
}

void add_format_option(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majorization extremal vectors and second Zagreb index bounds"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* bounds = app.add_subcommand("bounds", "Zagreb bounds from a degree sequence");
    add_degree_options(bounds, opt);
    add_format_option(bounds, opt);

    CLI::App* exact = app.add_subcommand("exact", "exact Zagreb index of an edge list");
    exact->add_option("--edges", opt.edges_file, "edge-list file (one 'u v' pair per line)");
    add_format_option(exact, opt);

    CLI::App* closed = app.add_subcommand("closed-form", "closed-form family bounds");
    closed->add_option("--family", opt.family,
                       "tree_i|tree_ii|tree_iii|uniform_core_tree|regular_plus_pendants");
    closed->add_option("--params", opt.params, "family parameters (comma separated)")
        ->delimiter(',');
    add_format_option(closed, opt);

    CLI::App* verify = app.add_subcommand("verify", "brute-force check of the extremal vectors");
    add_degree_options(verify, opt);
    add_format_option(verify, opt);
    verify->add_option("--seed", opt.seed, "sampling seed")->capture_default_str();
    verify->add_option("--max-enum", opt.max_enum, "enumeration size cap")->capture_default_str();

    CLI::App* graphical = app.add_subcommand("graphical", "Erdos-Gallai graphicality verdict");
    add_degree_options(graphical, opt);
    add_format_option(graphical, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bounds->parsed()) return run_bounds(opt);
        if (exact->parsed()) return run_exact(opt);
        if (closed->parsed()) return run_closed_form(opt);
        if (verify->parsed()) return run_verify(opt);
        if (graphical->parsed()) return run_graphical(opt);
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
