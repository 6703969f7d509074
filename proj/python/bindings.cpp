#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isotree/contour_tree.hpp"
#include "isotree/errors.hpp"
#include "isotree/io.hpp"
#include "isotree/mono.hpp"
#include "isotree/oracle.hpp"

namespace py = pybind11;
using namespace isotree;

namespace {

using Names = std::vector<std::string>;

Names names_of(const Graph& g, const Region& r) {
    Names out;
    for (SiteId s : r) out.push_back(g.name(s));
    return out;
}

Region region_of(const Graph& g, const Names& names) {
    std::vector<SiteId> sites;
    for (const auto& n : names) {
        auto s = g.find(n);
        if (!s) throw InvalidRegionError("unknown site id '" + n + "'");
        sites.push_back(*s);
    }
    return Region(std::move(sites));
}

ScalarGraph make_graph(Names sites, std::vector<double> values, const std::vector<std::pair<std::string, std::string>>& adjacency,
                       std::optional<std::string> reference) {
    if (values.size() != sites.size()) throw PreconditionError("need one value per site");
    Graph probe(sites, {});
    std::vector<std::pair<SiteId, SiteId>> pairs;
    for (const auto& [a, b] : adjacency) {
        auto sa = probe.find(a), sb = probe.find(b);
        if (!sa || !sb) throw InvalidRegionError("adjacency names an unknown site");
        pairs.emplace_back(*sa, *sb);
    }
    std::optional<SiteId> ref;
    if (reference) {
        ref = probe.find(*reference);
        if (!ref) throw MissingReferenceError("unknown reference site '" + *reference + "'");
    }
    return ScalarGraph(Graph(std::move(sites), std::move(pairs)), std::move(values), ref);
}

ValuePolicy policy_of(std::optional<std::vector<double>> values, std::optional<std::uint64_t> seed, std::int64_t lo,
                      std::int64_t hi) {
    if (values) return values::Explicit{*values};
    if (seed) return values::SeededRandom{*seed, lo, hi};
    return values::Ramp{};
}

// A tree together with the graph whose site names it refers to.
struct Tree {
    Graph graph;
    IsoTree tree;
};

py::list zones_of(const Tree& t) {
    py::list out;
    for (const auto& z : t.tree.zones()) {
        py::dict d;
        d["id"] = t.graph.name(z.representative());
        d["sites"] = names_of(t.graph, z.sites);
        d["value"] = z.value;
        out.append(d);
    }
    return out;
}

py::list edges_of(const Tree& t) {
    py::list out;
    for (std::size_t e = 0; e < t.tree.edges().size(); ++e) {
        const auto& edge = t.tree.edges()[e];
        py::dict d;
        d["low"] = t.graph.name(t.tree.zones()[edge.low].representative());
        d["up"] = t.graph.name(t.tree.zones()[edge.up].representative());
        d["gap"] = edge.gap;
        d["cut"] = names_of(t.graph, edge_to_jcut(t.tree, e).low());
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Iso-trees (discrete contour trees) of scalar graphs";

    auto base = py::register_exception<Error>(m, "IsoTreeError", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<ScalarGraph>(m, "ScalarGraph")
        .def(py::init(&make_graph), py::arg("sites"), py::arg("values"), py::arg("adjacency"),
             py::arg("reference") = std::nullopt)
        .def_property_readonly("sites",
                               [](const ScalarGraph& sg) { return names_of(sg.graph, sg.graph.all_sites()); })
        .def_property_readonly("values", [](const ScalarGraph& sg) { return sg.values; })
        .def_property_readonly("adjacency",
                               [](const ScalarGraph& sg) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (auto [a, b] : sg.graph.pairs()) out.emplace_back(sg.graph.name(a), sg.graph.name(b));
                                   return out;
                               })
        .def_property_readonly("reference", [](const ScalarGraph& sg) { return sg.graph.name(sg.reference_site()); })
        .def("__len__", [](const ScalarGraph& sg) { return sg.graph.site_count(); })
        .def("__eq__", [](const ScalarGraph& a, const ScalarGraph& b) { return a == b; })
        .def("to_json", &io::graph_to_json)
        .def("__repr__", [](const ScalarGraph& sg) {
            return "<ScalarGraph " + std::to_string(sg.graph.site_count()) + " sites, " +
                   std::to_string(sg.graph.pairs().size()) + " pairs>";
        });

    py::class_<Tree>(m, "IsoTree")
        .def_property_readonly("zones", &zones_of)
        .def_property_readonly("edges", &edges_of)
        .def_property_readonly("reference", [](const Tree& t) { return t.graph.name(t.tree.reference()); })
        .def_property_readonly("reference_value", [](const Tree& t) { return t.tree.reference_value(); })
        .def("zone_of", [](const Tree& t, const std::string& site) {
            return t.graph.name(t.tree.zones()[t.tree.zone_of(*region_of(t.graph, {site}).begin())].representative());
        })
        .def("reconstruct", [](const Tree& t) { return reconstruct_rt(t.graph, t.tree).values; },
             "Site values recovered from the reference value and the edge gaps.")
        .def("to_json", [](const Tree& t) { return io::export_tree_json(t.graph, t.tree); })
        .def("to_dot", [](const Tree& t) { return io::export_dot(t.graph, t.tree); })
        .def("__eq__", [](const Tree& a, const Tree& b) { return a.graph == b.graph && a.tree == b.tree; })
        .def("__repr__", [](const Tree& t) {
            return "<IsoTree " + std::to_string(t.tree.zones().size()) + " zones, " +
                   std::to_string(t.tree.edges().size()) + " edges>";
        });

    m.def("load_graph_json", &io::load_graph_json, py::arg("text"));
    m.def("load_pgm", [](py::bytes data) { return io::load_pgm(std::string(data)); }, py::arg("data"));
    m.def("load_tree_json", [](const ScalarGraph& sg, const std::string& text) {
        return Tree{sg.graph, io::parse_tree_json(sg.graph, text)};
    }, py::arg("graph"), py::arg("text"));

    m.def("gen_tri_grid",
          [](std::size_t w, std::size_t h, std::optional<std::vector<double>> values, std::optional<std::uint64_t> seed,
             std::int64_t lo, std::int64_t hi) { return gen_tri_grid(w, h, policy_of(std::move(values), seed, lo, hi)); },
          py::arg("width"), py::arg("height"), py::arg("values") = std::nullopt, py::arg("seed") = std::nullopt,
          py::arg("lo") = 0, py::arg("hi") = 5);
    m.def("gen_path",
          [](std::size_t n, std::optional<std::vector<double>> values, std::optional<std::uint64_t> seed, std::int64_t lo,
             std::int64_t hi) { return gen_path(n, policy_of(std::move(values), seed, lo, hi)); },
          py::arg("n"), py::arg("values") = std::nullopt, py::arg("seed") = std::nullopt, py::arg("lo") = 0,
          py::arg("hi") = 5);

    m.def("build_iso_tree",
          [](const ScalarGraph& sg, const std::string& engine, bool reduce, std::size_t max_sites) {
              const ScalarGraph* input = &sg;
              std::optional<ScalarGraph> ranked;
              if (engine == "oracle") {
                  if (!reduce) input = &ranked.emplace(perturbed_graph(sg, perturb_rank(sg)));
                  return Tree{sg.graph, brute_force_iso_tree(*input, {max_sites, false})};
              }
              if (engine != "pipeline") throw PreconditionError("engine must be 'pipeline' or 'oracle'");
              auto trace = run_pipeline(sg);
              return Tree{sg.graph, reduce ? std::move(trace.tree) : std::move(trace.perturbed_tree)};
          },
          py::arg("graph"), py::arg("engine") = "pipeline", py::arg("reduce") = true, py::arg("max_sites") = 14);

    m.def("is_mono_connected",
          [](const ScalarGraph& sg, std::size_t max_sites) -> py::tuple {
              const auto w = is_mono_connected(sg.graph, max_sites);
              if (w.verdict) return py::make_tuple(true, py::none());
              return py::make_tuple(false, py::make_tuple(names_of(sg.graph, w.counterexample->low()),
                                                          names_of(sg.graph, w.counterexample->up())));
          },
          py::arg("graph"), py::arg("max_sites") = kDefaultEnumerationCap,
          "(verdict, counterexample) where the counterexample is a (low, up) pair of site lists.");

    m.def("level_cuts",
          [](const ScalarGraph& sg, std::size_t max_sites) {
              std::vector<std::pair<Names, double>> out;
              for (const auto& c : brute_force_lcuts(sg, {max_sites, false}))
                  out.emplace_back(names_of(sg.graph, c.cut.low()), c.value_gap);
              return out;
          },
          py::arg("graph"), py::arg("max_sites") = 14, "Every level cut by exhaustive search, as (low side, gap).");

    m.def("validate_division",
          [](const ScalarGraph& sg, const std::string& text) {
              const auto d = io::parse_division_json(sg.graph, text);
              std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
              for (const auto& v : validate_regular_division(sg.graph, d).violations)
                  out.emplace_back(v.axiom == Axiom::nesting ? "nesting" : "tangent", v.first, v.second);
              return out;
          },
          py::arg("graph"), py::arg("text"),
          "Axiom violations of a tree or division document, as (axiom, first, second) cut indices.");
}
