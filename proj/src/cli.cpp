#include "isotree/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "isotree/contour_tree.hpp"
#include "isotree/errors.hpp"
#include "isotree/io.hpp"
#include "isotree/mono.hpp"
#include "isotree/oracle.hpp"

namespace isotree::cli {

namespace {

struct InputOptions {
    std::string path;
    std::string format = "auto";

    void add_to(CLI::App* sub) {
        sub->add_option("--input,-i", path, "Input graph (JSON document or PGM image)")->required();
        sub->add_option("--format", format, "Input format; auto picks pgm for .pgm/.pnm files")
            ->check(CLI::IsMember({"auto", "json", "pgm"}));
    }

    ScalarGraph load() const {
        std::string fmt = format;
        if (fmt == "auto") {
            auto ext = std::filesystem::path(path).extension().string();
            fmt = (ext == ".pgm" || ext == ".pnm") ? "pgm" : "json";
        }
        const auto bytes = io::read_file(path);
        return fmt == "pgm" ? io::load_pgm(bytes) : io::load_graph_json(bytes);
    }
};

IsoTree build_tree(const ScalarGraph& sg, const std::string& engine, bool reduce, std::size_t max_sites) {
    if (engine == "oracle") {
        OracleOptions opts{max_sites, false};
        if (reduce) return brute_force_iso_tree(sg, opts);
        return brute_force_iso_tree(perturbed_graph(sg, perturb_rank(sg)), opts);
    }
    auto trace = run_pipeline(sg);
    return reduce ? trace.tree : trace.perturbed_tree;
}

const char* axiom_name(Axiom a) { return a == Axiom::nesting ? "nesting" : "tangent"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete contour trees (iso-trees) on mono-connected scalar graphs", "isotree"};
    app.require_subcommand(1);

    // build
    InputOptions build_in;
    std::string engine = "pipeline";
    bool reduce = true;
    std::string build_output, dot_output;
    bool show_intermediate = false;
    std::size_t build_cap = 14;
    auto* build = app.add_subcommand("build", "Compute the iso-tree of a scalar graph");
    build_in.add_to(build);
    build->add_option("--engine", engine, "pipeline (merge trees) or oracle (brute force)")
        ->check(CLI::IsMember({"pipeline", "oracle"}));
    build->add_flag("--reduce,!--no-reduce", reduce, "Reduce to the tree of the original values (default)");
    build->add_option("--output,-o", build_output, "Write the tree document here instead of standard output");
    build->add_option("--dot", dot_output, "Also write a Graphviz rendering");
    build->add_flag("--show-intermediate", show_intermediate,
                    "Dump rank, merge trees, contour tree and unreduced tree to standard error");
    build->add_option("--max-sites", build_cap, "Oracle size cap");

    // check-mono
    InputOptions mono_in;
    std::size_t mono_cap = kDefaultEnumerationCap;
    auto* check_mono = app.add_subcommand("check-mono", "Exhaustively decide mono-connectivity");
    mono_in.add_to(check_mono);
    check_mono->add_option("--max-sites", mono_cap, "Enumeration size cap");

    // roundtrip
    InputOptions rt_in;
    std::string rt_engine = "pipeline";
    std::size_t rt_cap = 14;
    auto* roundtrip = app.add_subcommand("roundtrip", "Build the tree, reconstruct values, compare");
    rt_in.add_to(roundtrip);
    roundtrip->add_option("--engine", rt_engine)->check(CLI::IsMember({"pipeline", "oracle"}));
    roundtrip->add_option("--max-sites", rt_cap, "Oracle size cap");

    // oracle-diff
    InputOptions diff_in;
    std::size_t diff_cap = 14;
    bool diff_reduce = true;
    auto* oracle_diff = app.add_subcommand("oracle-diff", "Compare the pipeline tree with the brute-force tree");
    diff_in.add_to(oracle_diff);
    oracle_diff->add_option("--max-sites", diff_cap, "Oracle size cap");
    oracle_diff->add_flag("--reduce,!--no-reduce", diff_reduce, "Compare reduced trees (default)");

    // validate
    std::string validate_graph, validate_doc;
    auto* validate = app.add_subcommand("validate", "Check a tree or division document against the axioms");
    validate->add_option("--graph,-g", validate_graph, "Graph JSON document the cuts refer to")->required();
    validate->add_option("--input,-i", validate_doc, "Tree or division JSON document")->required();

    // gen
    std::string kind = "tri-grid", value_kind = "ramp", gen_output;
    std::size_t width = 3, height = 3;
    std::uint64_t seed = 0;
    std::int64_t lo = 0, hi = 5;
    double constant = 0;
    auto* gen = app.add_subcommand("gen", "Generate a mono-connected scalar graph");
    gen->add_option("--kind", kind)->check(CLI::IsMember({"tri-grid", "path"}));
    gen->add_option("--width", width, "Grid width, or path length for --kind path")->check(CLI::PositiveNumber);
    gen->add_option("--height", height, "Grid height")->check(CLI::PositiveNumber);
    gen->add_option("--values", value_kind)->check(CLI::IsMember({"ramp", "constant", "random"}));
    gen->add_option("--seed", seed, "Seed for --values random");
    gen->add_option("--min", lo, "Lowest random value");
    gen->add_option("--max", hi, "Highest random value");
    gen->add_option("--value", constant, "Value for --values constant");
    gen->add_option("--output,-o", gen_output, "Write here instead of standard output");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kIoError;
    }

    try {
        if (*build) {
            const auto sg = build_in.load();
            if (show_intermediate && engine == "pipeline") err << io::intermediate_json(sg.graph, run_pipeline(sg));
            const auto tree = build_tree(sg, engine, reduce, build_cap);
            const auto doc = io::export_tree_json(sg.graph, tree);
            if (!build_output.empty()) {
                io::write_file(build_output, doc);
                out << "wrote " << build_output << ": " << tree.zones().size() << " zones, " << tree.edges().size()
                    << " edges\n";
            } else {
                out << doc;
            }
            if (!dot_output.empty()) io::write_file(dot_output, io::export_dot(sg.graph, tree));
            return kOk;
        }
        if (*check_mono) {
            const auto sg = mono_in.load();
            const auto w = is_mono_connected(sg.graph, mono_cap);
            if (w.verdict) {
                out << "mono-connected: yes\n";
                return kOk;
            }
            const JCut& cut = *w.counterexample;
            const Region& side = *w.failing_side == CutSide::low ? cut.low() : cut.up();
            out << "mono-connected: no\n";
            out << "counterexample: " << format_cut(sg.graph, cut) << "\n";
            out << "failing side: " << (*w.failing_side == CutSide::low ? "low" : "up") << ", immediate interior "
                << format_region(sg.graph, immediate_interior(sg.graph, side)) << " is disconnected\n";
            return kVerdictFalse;
        }
        if (*roundtrip) {
            const auto sg = rt_in.load();
            const auto tree = build_tree(sg, rt_engine, true, rt_cap);
            const auto recovered = reconstruct_rt(sg.graph, tree);
            for (std::uint32_t s = 0; s < sg.graph.site_count(); ++s) {
                if (recovered.values[s] != sg.values[s]) {
                    out << "FAIL: RT∘ITT identity broken at site " << sg.graph.name(SiteId{s}) << ": expected "
                        << io::format_number(sg.values[s]) << ", recovered " << io::format_number(recovered.values[s])
                        << "\n";
                    return kVerdictFalse;
                }
            }
            out << "PASS: RT∘ITT identity\n";
            return kOk;
        }
        if (*oracle_diff) {
            const auto sg = diff_in.load();
            const auto pipeline = build_tree(sg, "pipeline", diff_reduce, diff_cap);
            const auto oracle = build_tree(sg, "oracle", diff_reduce, diff_cap);
            if (auto diff = first_difference(sg.graph, pipeline, oracle)) {
                out << "DIVERGENCE: " << *diff << "\n";
                return kVerdictFalse;
            }
            out << "MATCH: pipeline and oracle agree (" << pipeline.zones().size() << " zones, "
                << pipeline.edges().size() << " edges)\n";
            return kOk;
        }
        if (*validate) {
            const auto sg = io::load_graph_json(io::read_file(validate_graph));
            const auto division = io::parse_division_json(sg.graph, io::read_file(validate_doc));
            const auto report = validate_regular_division(sg.graph, division);
            if (report.valid) {
                out << "valid: regular J-division of " << division.cuts.size() << " cuts\n";
                return kOk;
            }
            out << "invalid: " << report.violations.size() << " violation(s)\n";
            for (const auto& v : report.violations)
                out << "  " << axiom_name(v.axiom) << ": " << format_cut(sg.graph, division.cuts[v.first].cut) << " vs "
                    << format_cut(sg.graph, division.cuts[v.second].cut) << "\n";
            return kVerdictFalse;
        }
        if (*gen) {
            ValuePolicy policy = values::Ramp{};
            if (value_kind == "constant") policy = values::Constant{constant};
            if (value_kind == "random") policy = values::SeededRandom{seed, lo, hi};
            const auto sg = kind == "path" ? gen_path(width, policy) : gen_tri_grid(width, height, policy);
            const auto doc = io::graph_to_json(sg);
            if (gen_output.empty())
                out << doc;
            else
                io::write_file(gen_output, doc);
            return kOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kVerdictFalse;
    }
    return kOk;
}

}  // namespace isotree::cli
