#include "odiam/analysis.hpp"
#include "odiam/claims.hpp"
#include "odiam/cnf.hpp"
#include "odiam/constructions.hpp"
#include "odiam/error.hpp"
#include "odiam/io.hpp"
#include "odiam/search.hpp"

#include <pybind11/gil_safe_call_once.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace odiam;

namespace {

// Infinite distances come back as None.
py::object distance_value(Distance d) {
    if (d.is_infinite())
        return py::none();
    return py::int_(d.value());
}

std::vector<Arc> to_arcs(const std::vector<std::pair<int, int>> &pairs) {
    std::vector<Arc> arcs;
    arcs.reserve(pairs.size());
    for (auto [u, v] : pairs)
        arcs.push_back({u, v});
    return arcs;
}

std::vector<std::pair<int, int>> arc_pairs(const Orientation &d) {
    std::vector<std::pair<int, int>> out;
    for (const Arc &a : d.arcs())
        out.emplace_back(a.from, a.to);
    return out;
}

SearchConfig make_config(std::uint64_t node_budget, double time_budget_seconds, bool symmetry_breaking,
                         bool use_case_split, int threads) {
    SearchConfig cfg;
    cfg.node_budget = node_budget;
    cfg.time_budget_seconds = time_budget_seconds;
    cfg.symmetry_breaking = symmetry_breaking;
    cfg.use_case_split = use_case_split;
    cfg.thread_count = threads;
    return cfg;
}

py::dict sign_partition_dict(const SignPartition &sp) {
    py::dict classes;
    for (SignVector s : sign_vectors_in_display_order())
        classes[py::str(s.to_string())] = sp[s];
    py::dict out;
    out["part"] = sp.part_index;
    out["classes"] = classes;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Oriented diameter of complete multipartite graphs";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&]() { return py::exception<Error>(m, "OdiamError", PyExc_ValueError); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error &e) {
            py::object type = error_type.get_stored();
            py::object inst = type(e.what());
            inst.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(type.ptr(), inst.ptr());
        }
    });

    py::class_<Orientation>(m, "Orientation")
        .def_property_readonly("parts", [](const Orientation &d) { return d.topology().parts(); })
        .def_property_readonly("n_vertices", &Orientation::n_vertices)
        .def_property_readonly("arcs", &arc_pairs)
        .def("has_arc", &Orientation::has_arc, py::arg("u"), py::arg("v"))
        .def("out_neighbors", [](const Orientation &d, int v) { return members(d.out(v)); })
        .def("in_neighbors", [](const Orientation &d, int v) { return members(d.in(v)); })
        .def("vertex_name", [](const Orientation &d, int v) { return vertex_name(d.topology(), v); })
        .def("diameter", [](const Orientation &d) { return distance_value(diameter(d)); })
        .def("distance", [](const Orientation &d, int u, int v) { return distance_value(distance(d, u, v)); })
        .def("is_strong", [](const Orientation &d) { return is_strong(d); })
        .def("reverse", [](const Orientation &d) { return reverse(d); })
        .def("to_json", &orientation_json_text)
        .def("to_dot", &orientation_to_dot)
        .def_static("from_json", [](const std::string &text) { return orientation_from_json_text(text); })
        .def("__eq__", [](const Orientation &a, const Orientation &b) { return a == b; })
        .def("__repr__", [](const Orientation &d) {
            std::string parts;
            for (int p : d.topology().parts())
                parts += (parts.empty() ? "" : ",") + std::to_string(p);
            return "<Orientation of K(" + parts + ")>";
        });

    m.def("orient", [](const std::vector<int> &parts, const std::vector<std::pair<int, int>> &arcs) {
        return orient(make_complete_multipartite(parts), to_arcs(arcs));
    }, py::arg("parts"), py::arg("arcs"));
    m.def("read_orientation", [](const std::filesystem::path &p) { return read_orientation_file(p); });

    py::class_<Construction>(m, "Construction")
        .def_property_readonly("family", [](const Construction &c) { return std::string(to_string(c.family)); })
        .def_readonly("q", &Construction::q)
        .def_readonly("orientation", &Construction::orientation)
        .def_readonly("promised_diameter", &Construction::promised_diameter)
        .def_readonly("completion_log", &Construction::completion_log);

    m.def("construct_33q", &construct_33q, py::arg("q"));
    m.def("construct_34q", &construct_34q, py::arg("q"));
    m.def("middle_layer_bipartite", &middle_layer_bipartite, py::arg("p"), py::arg("q"));
    m.def("complete_graph_orientation", &complete_graph_orientation, py::arg("n"));

    py::class_<SearchOutcome>(m, "SearchOutcome")
        .def_property_readonly("verdict", [](const SearchOutcome &o) { return std::string(to_string(o.verdict)); })
        .def_readonly("witness", &SearchOutcome::witness)
        .def_property_readonly("nodes", [](const SearchOutcome &o) { return o.stats.nodes; })
        .def_property_readonly("max_depth", [](const SearchOutcome &o) { return o.stats.max_depth; })
        .def_property_readonly("wall_seconds", [](const SearchOutcome &o) { return o.stats.wall_seconds; })
        .def_property_readonly("cases_enumerated", [](const SearchOutcome &o) { return o.stats.cases_enumerated; });

    m.def("decide_diameter2",
          [](const std::vector<int> &parts, std::uint64_t node_budget, double time_budget_seconds,
             bool symmetry_breaking, bool use_case_split, int threads) {
              py::gil_scoped_release release;
              return decide_diameter2(parts, make_config(node_budget, time_budget_seconds, symmetry_breaking,
                                                         use_case_split, threads));
          },
          py::arg("parts"), py::arg("node_budget") = SearchConfig{}.node_budget,
          py::arg("time_budget_seconds") = SearchConfig{}.time_budget_seconds,
          py::arg("symmetry_breaking") = true, py::arg("use_case_split") = true, py::arg("threads") = 1);
    m.def("brute_force_min_diameter", [](const std::vector<int> &parts) {
        return distance_value(brute_force_min_diameter(make_complete_multipartite(parts)));
    }, py::arg("parts"));
    m.def("enumerate_diameter2", [](const std::vector<int> &parts, std::size_t limit) {
        return enumerate_diameter2(make_complete_multipartite(parts), limit);
    }, py::arg("parts"), py::arg("limit") = 0);

    m.def("encode_diameter2", [](const std::vector<int> &parts, bool symmetry_breaking) {
        Cnf cnf = encode_diameter2(make_complete_multipartite(parts), symmetry_breaking);
        py::dict out;
        out["variables"] = cnf.variables;
        out["edge_variables"] = cnf.edge_variables;
        out["path_variables"] = cnf.path_variables;
        out["order_variables"] = cnf.order_variables;
        out["clauses"] = std::move(cnf.clauses);
        return out;
    }, py::arg("parts"), py::arg("symmetry_breaking") = true);
    m.def("decode_model", [](const std::vector<int> &parts, const std::vector<int> &model) {
        // Accepts a solver model: signed literals, variable i at position i - 1.
        std::vector<bool> values(model.size());
        for (std::size_t i = 0; i < model.size(); ++i)
            values[i] = model[i] > 0;
        return decode_model(make_complete_multipartite(parts), values);
    }, py::arg("parts"), py::arg("model"));
    m.def("export_cnf", [](const std::vector<int> &parts, const std::filesystem::path &out, bool sym) {
        CnfStats s = export_cnf(parts, out, sym);
        py::dict d;
        d["variables"] = s.variables;
        d["clauses"] = s.clauses;
        d["edge_variables"] = s.edge_variables;
        return d;
    }, py::arg("parts"), py::arg("out"), py::arg("symmetry_breaking") = true);

    m.def("sign_partition", [](const Orientation &d, int anchor) {
        py::list out;
        for (const auto &sp : sign_partition(d, anchor))
            out.append(sign_partition_dict(sp));
        return out;
    }, py::arg("orientation"), py::arg("anchor_part") = 0);
    m.def("lemma21_check", [](const Orientation &d, int anchor) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto &v : lemma21_check(d, anchor))
            out.emplace_back(v.clause, v.detail);
        return out;
    }, py::arg("orientation"), py::arg("anchor_part") = 0);
    m.def("case_signature", [](const Orientation &d) {
        CaseSignature s = case_signature(d);
        py::dict out;
        out["raw"] = py::make_tuple(s.raw[0], s.raw[1], s.raw[2]);
        out["canonical"] = py::make_tuple(s.canonical[0], s.canonical[1], s.canonical[2]);
        out["p"] = s.p;
        return out;
    }, py::arg("orientation"));
    m.def("canonical_case_classes", &canonical_case_classes, py::arg("m"), py::arg("p"));
    m.def("max_antichain", [](int p) {
        MaxAntichain a = max_antichain(p);
        py::dict out;
        out["size"] = a.size;
        out["witness"] = a.witness;
        out["maximum_count"] = a.maximum_count;
        out["antichains_enumerated"] = a.antichains_enumerated;
        return out;
    }, py::arg("p"));

    m.def("_verify_claims_json",
          [](const std::string &family, std::optional<int> q_min, std::optional<int> q_max,
             std::uint64_t node_budget, double time_budget_seconds) {
              ClaimOptions opts;
              opts.q_min = q_min;
              opts.q_max = q_max;
              opts.search = make_config(node_budget, time_budget_seconds, true, true, 1);
              ClaimFamily f = parse_claim_family(family);
              ClaimReport report;
              {
                  py::gil_scoped_release release;
                  report = verify_claims(f, opts);
              }
              return claim_report_json(report).dump();
          },
          py::arg("family"), py::arg("q_min") = py::none(), py::arg("q_max") = py::none(),
          py::arg("node_budget") = SearchConfig{}.node_budget,
          py::arg("time_budget_seconds") = SearchConfig{}.time_budget_seconds);
}
