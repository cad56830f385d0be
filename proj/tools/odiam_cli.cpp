// Command-line front end: construct, measure, analyze, search and export orientations.

#include "odiam/analysis.hpp"
#include "odiam/claims.hpp"
#include "odiam/cnf.hpp"
#include "odiam/constructions.hpp"
#include "odiam/error.hpp"
#include "odiam/io.hpp"
#include "odiam/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

using namespace odiam;

namespace {

enum class Format { Json, Dot, Text };

struct Globals {
    std::string format = "text";
    unsigned seed = 0; // accepted for interface stability; every procedure is deterministic
    int threads = 1;

    Format fmt() const {
        if (format == "json")
            return Format::Json;
        if (format == "dot")
            return Format::Dot;
        return Format::Text;
    }
};

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

std::string parts_text(const std::vector<int> &parts) {
    std::string s;
    for (int p : parts)
        s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
}

Construction construct_for(const std::vector<int> &parts, const std::string &scheme) {
    const bool all_ones = std::ranges::all_of(parts, [](int p) { return p == 1; });
    if (scheme == "tournament" || (scheme == "paper" && all_ones && parts.size() >= 3)) {
        if (!all_ones)
            throw Error(ErrorKind::BadFamily, "tournaments need every part of size 1");
        return complete_graph_orientation(static_cast<int>(parts.size()));
    }
    if (scheme == "middle-layer" || (scheme == "paper" && parts.size() == 2)) {
        if (parts.size() != 2)
            throw Error(ErrorKind::BadFamily, "middle-layer orientations need two parts");
        return middle_layer_bipartite(parts[0], parts[1]);
    }
    if (scheme == "paper" && parts.size() == 3 && parts[0] == 3 && parts[1] == 3)
        return construct_33q(parts[2]);
    if (scheme == "paper" && parts.size() == 3 && parts[0] == 3 && parts[1] == 4)
        return construct_34q(parts[2]);
    throw Error(ErrorKind::BadFamily,
                "no " + scheme + " construction for parts " + parts_text(parts));
}

std::string outcome_text(const SearchOutcome &o, const std::vector<int> &parts, Format fmt) {
    ordered_json j;
    j["parts"] = parts;
    j["verdict"] = to_string(o.verdict);
    j["witness"] = o.witness ? orientation_to_json(*o.witness) : ordered_json(nullptr);
    ordered_json cases = ordered_json::array();
    for (const auto &c : o.stats.cases_enumerated)
        cases.push_back(c);
    j["stats"] = {{"nodes", o.stats.nodes},
                  {"max_depth", o.stats.max_depth},
                  {"wall_seconds", o.stats.wall_seconds},
                  {"cases_enumerated", cases}};
    if (fmt == Format::Json)
        return j.dump(2) + "\n";
    std::ostringstream out;
    out << "K(" << parts_text(parts) << "): " << to_string(o.verdict) << "\n"
        << "nodes " << o.stats.nodes << ", max depth " << o.stats.max_depth << ", "
        << o.stats.wall_seconds << " s, " << o.stats.cases_enumerated.size() << " case classes\n";
    if (o.witness)
        out << "witness: " << orientation_json_text(*o.witness);
    return out.str();
}

std::string analysis_text(const Orientation &d, int anchor, Format fmt) {
    const Topology &t = d.topology();
    ordered_json j;
    std::ostringstream out;
    auto partitions = sign_partition(d, anchor);
    ordered_json pj = ordered_json::array();
    out << "sign partition (anchor V" << anchor + 1 << ")\n";
    out << "class";
    for (const auto &sp : partitions)
        out << "\tV" << sp.part_index + 1;
    out << "\n";
    for (SignVector s : sign_vectors_in_display_order()) {
        out << s.to_string();
        for (const auto &sp : partitions) {
            out << "\t" << sp.size(s);
            if (sp.size(s) > 0) {
                out << " {";
                for (std::size_t i = 0; i < sp[s].size(); ++i)
                    out << (i ? "," : "") << vertex_name(t, sp[s][i]);
                out << "}";
            }
        }
        out << "\n";
    }
    for (const auto &sp : partitions) {
        ordered_json classes;
        for (SignVector s : sign_vectors_in_display_order())
            classes[s.to_string()] = sp[s];
        pj.push_back({{"part", sp.part_index}, {"classes", classes}});
    }
    j["sign_partition"] = pj;

    try {
        auto violations = lemma21_check(d, anchor);
        ordered_json vj = ordered_json::array();
        for (const auto &v : violations)
            vj.push_back({{"clause", v.clause}, {"detail", v.detail}});
        j["lemma"] = {{"applicable", true}, {"violations", vj}};
        out << "+++/--- class lemma: " << (violations.empty() ? "holds" : "VIOLATED") << "\n";
        for (const auto &v : violations)
            out << "  [" << v.clause << "] " << v.detail << "\n";
    } catch (const Error &e) {
        j["lemma"] = {{"applicable", false}, {"reason", e.what()}};
        out << "+++/--- class lemma: not applicable (" << e.what() << ")\n";
    }

    if (t.n_parts() >= 2 && t.part_size(0) == 3) {
        CaseSignature sig = case_signature(d);
        j["case_signature"] = {{"raw", sig.raw}, {"canonical", sig.canonical}, {"p", sig.p}};
        out << "case signature: raw (" << sig.raw[0] << "," << sig.raw[1] << "," << sig.raw[2]
            << "), canonical (" << sig.canonical[0] << "," << sig.canonical[1] << ","
            << sig.canonical[2] << ")\n";
    }
    if (fmt == Format::Json)
        return j.dump(2) + "\n";
    return out.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Oriented diameter toolkit for complete multipartite graphs"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Reserved; all procedures are deterministic");
    app.add_option("--threads", g.threads, "Worker threads for search")->check(CLI::PositiveNumber);

    std::string parts_arg, file_arg, out_arg, scheme = "paper", family_arg;
    int anchor = 0;
    std::size_t limit = 0;
    double budget_seconds = 600.0;
    std::uint64_t budget_nodes = 1'000'000'000;
    bool no_symmetry = false, no_case_split = false;
    int q_min = -1, q_max = -1;
    std::string cnf_dir;
    bool no_timing = false;

    auto *construct = app.add_subcommand("construct", "Build an explicit orientation");
    construct->add_option("--parts", parts_arg, "Part sizes, e.g. 3,3,6")->required();
    construct->add_option("--scheme", scheme, "paper | middle-layer | tournament")
        ->check(CLI::IsMember({"paper", "middle-layer", "tournament"}));
    construct->add_option("--out", out_arg, "Write to a file instead of stdout");

    auto *diam = app.add_subcommand("diameter", "Diameter of an orientation JSON file");
    diam->add_option("--file", file_arg)->required();

    auto *normalize = app.add_subcommand("normalize", "Re-read an orientation JSON and emit it canonically");
    normalize->add_option("--file", file_arg)->required();
    normalize->add_option("--out", out_arg, "Write to a file instead of stdout");

    auto *analyze = app.add_subcommand("analyze", "Sign partition, class lemma and case signature");
    analyze->add_option("--file", file_arg)->required();
    analyze->add_option("--anchor", anchor, "Index of the size-3 anchor part");

    auto *decide = app.add_subcommand("decide", "Decide whether a diameter-2 orientation exists");
    decide->add_option("--parts", parts_arg)->required();
    decide->add_option("--budget-seconds", budget_seconds);
    decide->add_option("--budget-nodes", budget_nodes);
    decide->add_flag("--no-symmetry", no_symmetry);
    decide->add_flag("--no-case-split", no_case_split);
    decide->add_option("--out", out_arg, "Write the witness orientation JSON here");

    auto *enumerate = app.add_subcommand("enumerate", "List diameter-2 orientations");
    enumerate->add_option("--parts", parts_arg)->required();
    enumerate->add_option("--limit", limit, "0 = all");

    auto *brute = app.add_subcommand("brute-force", "Exact oriented diameter by full enumeration");
    brute->add_option("--parts", parts_arg)->required();

    auto *cnf = app.add_subcommand("export-cnf", "Write the diameter-2 DIMACS encoding");
    cnf->add_option("--parts", parts_arg)->required();
    cnf->add_option("--out", out_arg)->required();
    cnf->add_flag("--no-symmetry", no_symmetry);

    auto *verify = app.add_subcommand("verify-claims", "Reproduce the oriented diameter tables");
    verify->add_option("--family", family_arg, "33q | 34q | baselines")->required();
    verify->add_option("--q-min", q_min);
    verify->add_option("--q-max", q_max);
    verify->add_option("--budget-seconds", budget_seconds);
    verify->add_option("--budget-nodes", budget_nodes);
    verify->add_option("--cnf-dir", cnf_dir, "Write CNF files for Unknown rows here");
    verify->add_flag("--no-timing", no_timing, "Omit the timing column");

    CLI11_PARSE(app, argc, argv);

    SearchConfig cfg;
    cfg.time_budget_seconds = budget_seconds;
    cfg.node_budget = budget_nodes;
    cfg.symmetry_breaking = !no_symmetry;
    cfg.use_case_split = !no_case_split;
    cfg.thread_count = g.threads;
    const Format fmt = g.fmt();

    try {
        if (*construct) {
            Construction c = construct_for(parse_parts(parts_arg), scheme);
            std::string text;
            if (fmt == Format::Dot) {
                text = orientation_to_dot(c.orientation);
            } else if (fmt == Format::Json || !out_arg.empty()) {
                ordered_json j = orientation_to_json(c.orientation);
                j["completion_log"] = c.completion_log;
                text = j.dump() + "\n";
            } else {
                std::ostringstream out;
                out << to_string(c.family) << " q=" << c.q << " diameter "
                    << diameter(c.orientation).to_string() << "\n";
                for (const auto &line : c.completion_log)
                    out << "completion: " << line << "\n";
                for (const Arc &a : c.orientation.arcs())
                    out << vertex_name(c.orientation.topology(), a.from) << " -> "
                        << vertex_name(c.orientation.topology(), a.to) << "\n";
                text = out.str();
            }
            emit(text, out_arg);
            return 0;
        }
        if (*diam) {
            Orientation d = read_orientation_file(file_arg);
            Distance dd = diameter(d);
            if (fmt == Format::Json) {
                ordered_json j;
                j["diameter"] = dd.is_finite() ? ordered_json(dd.value()) : ordered_json("inf");
                j["strong"] = dd.is_finite();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << dd.to_string() << "\n";
            }
            return 0;
        }
        if (*normalize) {
            const std::string raw = read_text_file(file_arg);
            ordered_json j = orientation_to_json(orientation_from_json_text(raw));
            // Keep a completion log if the file carries one.
            ordered_json in = ordered_json::parse(raw);
            if (in.contains("completion_log"))
                j["completion_log"] = in["completion_log"].get<std::vector<std::string>>();
            emit(j.dump() + "\n", out_arg);
            return 0;
        }
        if (*analyze) {
            std::cout << analysis_text(read_orientation_file(file_arg), anchor, fmt);
            return 0;
        }
        if (*decide) {
            auto parts = parse_parts(parts_arg);
            SearchOutcome o = decide_diameter2(parts, cfg);
            std::cout << outcome_text(o, parts, fmt);
            if (!out_arg.empty() && o.witness)
                write_text_file(out_arg, orientation_json_text(*o.witness));
            return o.verdict == Verdict::Unknown ? 3 : 0;
        }
        if (*enumerate) {
            auto found = enumerate_diameter2(make_complete_multipartite(parse_parts(parts_arg)), limit);
            if (fmt == Format::Json) {
                ordered_json all = ordered_json::array();
                for (const auto &d : found)
                    all.push_back(orientation_to_json(d));
                std::cout << all.dump() << "\n";
            } else {
                std::cout << found.size() << " orientations of diameter 2\n";
                for (const auto &d : found)
                    std::cout << orientation_json_text(d);
            }
            return 0;
        }
        if (*brute) {
            Distance f = brute_force_min_diameter(make_complete_multipartite(parse_parts(parts_arg)));
            if (fmt == Format::Json)
                std::cout << ordered_json{{"parts", parse_parts(parts_arg)},
                                          {"oriented_diameter", f.to_string()}}
                                 .dump()
                          << "\n";
            else
                std::cout << f.to_string() << "\n";
            return 0;
        }
        if (*cnf) {
            CnfStats s = export_cnf(parse_parts(parts_arg), out_arg, !no_symmetry);
            if (fmt == Format::Json)
                std::cout << ordered_json{{"variables", s.variables},
                                          {"clauses", s.clauses},
                                          {"edge_variables", s.edge_variables}}
                                 .dump()
                          << "\n";
            else
                std::cout << "wrote " << out_arg << ": " << s.variables << " variables ("
                          << s.edge_variables << " edge), " << s.clauses << " clauses\n";
            return 0;
        }
        if (*verify) {
            ClaimOptions opts;
            if (q_min >= 0)
                opts.q_min = q_min;
            if (q_max >= 0)
                opts.q_max = q_max;
            opts.search = cfg;
            if (!cnf_dir.empty())
                opts.cnf_dir = cnf_dir;
            ClaimReport report = verify_claims(parse_claim_family(family_arg), opts);
            if (fmt == Format::Json)
                std::cout << claim_report_json(report).dump(2) << "\n";
            else
                std::cout << format_claim_table(report, !no_timing);
            return report.exit_code();
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
