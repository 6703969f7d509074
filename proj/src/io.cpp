#include "isotree/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "isotree/errors.hpp"
#include "isotree/mono.hpp"
#include "json.hpp"

namespace isotree::io {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        // Translate the byte offset into line and column.
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + e.what());
    }
}

Json number_json(double v) {
    if (std::isfinite(v) && v == std::trunc(v) && std::abs(v) < 9007199254740992.0)
        return Json(static_cast<std::int64_t>(v));
    return Json(v);
}

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
    throw ValidationError(where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) invalid(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) invalid(where, std::string("missing \"") + key + "\"");
    return *it;
}

double number_at(const Json& j, const std::string& where) {
    if (!j.is_number()) invalid(where, "expected a number");
    return j.get<double>();
}

std::string string_at(const Json& j, const std::string& where) {
    if (!j.is_string()) invalid(where, "expected a string");
    return j.get<std::string>();
}

SiteId site_at(const Graph& g, const Json& j, const std::string& where) {
    auto name = string_at(j, where);
    auto s = g.find(name);
    if (!s) invalid(where, "unknown site id '" + name + "'");
    return *s;
}

Region region_at(const Graph& g, const Json& j, const std::string& where) {
    if (!j.is_array()) invalid(where, "expected an array of site ids");
    std::vector<SiteId> sites;
    for (std::size_t i = 0; i < j.size(); ++i) sites.push_back(site_at(g, j[i], where + "[" + std::to_string(i) + "]"));
    const auto count = sites.size();
    Region r(std::move(sites));
    if (r.size() != count) invalid(where, "repeated site id");
    return r;
}

Json region_json(const Graph& g, const Region& r) {
    Json out = Json::array();
    for (SiteId s : r) out.push_back(g.name(s));
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_number(double v) {
    if (std::isfinite(v) && v == std::trunc(v) && std::abs(v) < 9007199254740992.0)
        return std::to_string(static_cast<std::int64_t>(v));
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

ScalarGraph load_graph_json(std::string_view text) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) invalid("document", "expected an object");
    const Json& sites = field(doc, "sites", "document");
    if (!sites.is_array()) invalid("sites", "expected an array");
    if (sites.empty()) invalid("sites", "graph has no sites");

    std::vector<std::string> names;
    std::vector<double> values;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const std::string where = "sites[" + std::to_string(i) + "]";
        auto id = string_at(field(sites[i], "id", where), where + ".id");
        if (!seen.insert(id).second) invalid(where + ".id", "duplicate id '" + id + "'");
        names.push_back(id);
        values.push_back(number_at(field(sites[i], "value", where), where + ".value"));
    }

    std::vector<std::pair<SiteId, SiteId>> pairs;
    std::set<std::pair<SiteId, SiteId>> seen_pairs;
    auto adj_it = doc.find("adjacency");
    if (adj_it != doc.end()) {
        if (!adj_it->is_array()) invalid("adjacency", "expected an array");
        std::unordered_map<std::string, std::uint32_t> by_name;
        for (std::uint32_t i = 0; i < names.size(); ++i) by_name.emplace(names[i], i);
        auto index_of = [&](const Json& j, const std::string& where) {
            auto name = string_at(j, where);
            auto it = by_name.find(name);
            if (it == by_name.end()) invalid(where, "unknown site id '" + name + "'");
            return SiteId{it->second};
        };
        for (std::size_t i = 0; i < adj_it->size(); ++i) {
            const std::string where = "adjacency[" + std::to_string(i) + "]";
            const Json& pair = (*adj_it)[i];
            if (!pair.is_array() || pair.size() != 2) invalid(where, "expected a pair of site ids");
            SiteId a = index_of(pair[0], where + "[0]");
            SiteId b = index_of(pair[1], where + "[1]");
            if (a == b) invalid(where, "self-loop on '" + names[a.index] + "'");
            auto key = std::minmax(a, b);
            if (!seen_pairs.insert(key).second)
                invalid(where, "duplicate pair ['" + names[a.index] + "', '" + names[b.index] + "']");
            pairs.emplace_back(a, b);
        }
    }

    std::optional<SiteId> reference;
    if (auto it = doc.find("reference"); it != doc.end() && !it->is_null()) {
        auto name = string_at(*it, "reference");
        auto pos = std::find(names.begin(), names.end(), name);
        if (pos == names.end()) invalid("reference", "unknown site id '" + name + "'");
        reference = SiteId{static_cast<std::uint32_t>(pos - names.begin())};
    }
    return ScalarGraph(Graph(std::move(names), std::move(pairs)), std::move(values), reference);
}

std::string graph_to_json(const ScalarGraph& sg) {
    const Graph& g = sg.graph;
    Json doc;
    Json sites = Json::array();
    for (std::uint32_t s = 0; s < g.site_count(); ++s) {
        Json site;
        site["id"] = g.name(SiteId{s});
        site["value"] = number_json(sg.values[s]);
        sites.push_back(std::move(site));
    }
    doc["sites"] = std::move(sites);
    Json adjacency = Json::array();
    for (auto [a, b] : g.pairs()) adjacency.push_back(Json::array({g.name(a), g.name(b)}));
    doc["adjacency"] = std::move(adjacency);
    if (sg.reference) doc["reference"] = g.name(*sg.reference);
    return doc.dump(2) + "\n";
}

ScalarGraph load_pgm(std::string_view bytes) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError("PGM parse error at byte offset " + std::to_string(pos) + ": " + what);
    };
    auto skip_space_and_comments = [&] {
        while (pos < bytes.size()) {
            const char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n' && bytes[pos] != '\r') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_uint = [&](const char* what) -> std::uint64_t {
        skip_space_and_comments();
        if (pos >= bytes.size()) fail(std::string("unexpected end of data reading ") + what);
        if (!std::isdigit(static_cast<unsigned char>(bytes[pos]))) fail(std::string("expected ") + what);
        std::uint64_t v = 0;
        while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(bytes[pos] - '0');
            if (v > 0xFFFFFFFFull) fail(std::string(what) + " is too large");
            ++pos;
        }
        return v;
    };

    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) fail("expected magic P2 or P5");
    const bool plain = bytes[1] == '2';
    pos = 2;
    if (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos])) && bytes[pos] != '#')
        fail("expected whitespace after magic number");
    const auto width = read_uint("width");
    const auto height = read_uint("height");
    const auto maxval = read_uint("maxval");
    if (width == 0 || height == 0) fail("image dimensions must be positive");
    if (maxval == 0 || maxval > 65535) fail("maxval must be in 1..65535");
    const std::uint64_t count = width * height;
    if (count > (std::uint64_t{1} << 31)) fail("image is too large");

    std::vector<double> pixels;
    pixels.reserve(count);
    if (plain) {
        for (std::uint64_t i = 0; i < count; ++i) {
            const auto v = read_uint("pixel value");
            if (v > maxval) fail("pixel value " + std::to_string(v) + " exceeds maxval");
            pixels.push_back(static_cast<double>(v));
        }
    } else {
        if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos])))
            fail("expected a single whitespace byte after maxval");
        ++pos;
        const std::size_t sample_bytes = maxval < 256 ? 1 : 2;
        const std::uint64_t need = count * sample_bytes;
        if (bytes.size() - pos < need)
            fail("truncated raster: need " + std::to_string(need) + " bytes, have " + std::to_string(bytes.size() - pos));
        for (std::uint64_t i = 0; i < count; ++i) {
            std::uint32_t v = static_cast<unsigned char>(bytes[pos]);
            if (sample_bytes == 2) v = (v << 8) | static_cast<unsigned char>(bytes[pos + 1]);
            if (v > maxval) fail("pixel value " + std::to_string(v) + " exceeds maxval");
            pixels.push_back(static_cast<double>(v));
            pos += sample_bytes;
        }
    }
    return gen_tri_grid(width, height, values::Explicit{std::move(pixels)});
}

std::string export_tree_json(const Graph& g, const IsoTree& tree) {
    auto zone_id = [&](std::size_t z) { return g.name(tree.zones()[z].representative()); };
    Json doc;
    doc["reference"] = g.name(tree.reference());
    doc["referenceValue"] = number_json(tree.reference_value());
    Json zones = Json::array();
    for (std::size_t z = 0; z < tree.zones().size(); ++z) {
        Json zone;
        zone["id"] = zone_id(z);
        zone["sites"] = region_json(g, tree.zones()[z].sites);
        zone["value"] = number_json(tree.zones()[z].value);
        zones.push_back(std::move(zone));
    }
    doc["zones"] = std::move(zones);
    Json edges = Json::array();
    for (std::size_t i = 0; i < tree.edges().size(); ++i) {
        const IsoEdge& e = tree.edges()[i];
        Json edge;
        edge["low"] = zone_id(e.low);
        edge["up"] = zone_id(e.up);
        edge["gap"] = number_json(e.gap);
        edge["cut"] = region_json(g, edge_to_jcut(tree, i).low());
        edges.push_back(std::move(edge));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

IsoTree parse_tree_json(const Graph& g, std::string_view text) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) invalid("document", "expected an object");
    const SiteId reference = site_at(g, field(doc, "reference", "document"), "reference");
    const double reference_value = number_at(field(doc, "referenceValue", "document"), "referenceValue");

    const Json& zones_json = field(doc, "zones", "document");
    if (!zones_json.is_array()) invalid("zones", "expected an array");
    std::vector<IsoZone> zones;
    std::vector<std::string> zone_ids;
    for (std::size_t i = 0; i < zones_json.size(); ++i) {
        const std::string where = "zones[" + std::to_string(i) + "]";
        auto id = string_at(field(zones_json[i], "id", where), where + ".id");
        if (std::find(zone_ids.begin(), zone_ids.end(), id) != zone_ids.end())
            invalid(where + ".id", "duplicate zone id '" + id + "'");
        Region sites = region_at(g, field(zones_json[i], "sites", where), where + ".sites");
        if (sites.empty()) invalid(where + ".sites", "zone is empty");
        zones.push_back({std::move(sites), number_at(field(zones_json[i], "value", where), where + ".value")});
        zone_ids.push_back(std::move(id));
    }

    const Json& edges_json = field(doc, "edges", "document");
    if (!edges_json.is_array()) invalid("edges", "expected an array");
    std::vector<IsoEdge> edges;
    std::vector<std::optional<Region>> declared_cuts;
    auto zone_index = [&](const Json& j, const std::string& where) {
        auto id = string_at(j, where);
        auto it = std::find(zone_ids.begin(), zone_ids.end(), id);
        if (it == zone_ids.end()) invalid(where, "unknown zone id '" + id + "'");
        return static_cast<std::size_t>(it - zone_ids.begin());
    };
    for (std::size_t i = 0; i < edges_json.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const Json& e = edges_json[i];
        IsoEdge edge{zone_index(field(e, "low", where), where + ".low"), zone_index(field(e, "up", where), where + ".up"),
                     number_at(field(e, "gap", where), where + ".gap")};
        edges.push_back(edge);
        if (e.contains("cut"))
            declared_cuts.emplace_back(region_at(g, e["cut"], where + ".cut"));
        else
            declared_cuts.emplace_back();
    }

    // Remember each edge's zone sites so declared cuts can be checked after reordering.
    std::vector<std::pair<Region, Region>> edge_zones;
    for (const auto& e : edges) edge_zones.emplace_back(zones[e.low].sites, zones[e.up].sites);

    try {
        IsoTree tree(g.site_count(), std::move(zones), std::move(edges), reference, reference_value);
        for (std::size_t i = 0; i < declared_cuts.size(); ++i) {
            if (!declared_cuts[i]) continue;
            auto it = std::find_if(tree.edges().begin(), tree.edges().end(), [&](const IsoEdge& e) {
                return tree.zones()[e.low].sites == edge_zones[i].first && tree.zones()[e.up].sites == edge_zones[i].second;
            });
            const auto idx = static_cast<std::size_t>(it - tree.edges().begin());
            if (edge_to_jcut(tree, idx).low() != *declared_cuts[i])
                invalid("edges[" + std::to_string(i) + "].cut", "does not match the split induced by the edge");
        }
        return tree;
    } catch (const NotATreeError& e) {
        throw ValidationError(std::string("tree document: ") + e.what());
    } catch (const MissingReferenceError& e) {
        throw ValidationError(std::string("tree document: ") + e.what());
    }
}

ValuedJDivision parse_division_json(const Graph& g, std::string_view text) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) invalid("document", "expected an object");
    ValuedJDivision d;
    if (doc.contains("zones")) {
        const Json& edges = field(doc, "edges", "document");
        if (!edges.is_array()) invalid("edges", "expected an array");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string where = "edges[" + std::to_string(i) + "]";
            Region low = region_at(g, field(edges[i], "cut", where), where + ".cut");
            if (!is_jcut(g, low)) invalid(where + ".cut", "not a J-cut");
            d.cuts.push_back({JCut(g, std::move(low)), number_at(field(edges[i], "gap", where), where + ".gap")});
        }
        return d;
    }
    const Json& cuts = field(doc, "cuts", "document");
    if (!cuts.is_array()) invalid("cuts", "expected an array");
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        const std::string where = "cuts[" + std::to_string(i) + "]";
        Region low = region_at(g, field(cuts[i], "low", where), where + ".low");
        if (!is_jcut(g, low)) invalid(where + ".low", "not a J-cut");
        const double gap = number_at(field(cuts[i], "gap", where), where + ".gap");
        if (!(gap > 0)) invalid(where + ".gap", "value gap must be positive");
        d.cuts.push_back({JCut(g, std::move(low)), gap});
    }
    return d;
}

std::string division_to_json(const Graph& g, const ValuedJDivision& d) {
    Json cuts = Json::array();
    for (const auto& e : d.cuts) {
        Json c;
        c["low"] = region_json(g, e.cut.low());
        c["gap"] = number_json(e.gap);
        cuts.push_back(std::move(c));
    }
    Json doc;
    doc["cuts"] = std::move(cuts);
    return doc.dump(2) + "\n";
}

std::string export_dot(const Graph& g, const IsoTree& tree) {
    std::ostringstream os;
    auto zone_id = [&](std::size_t z) { return dot_quote(g.name(tree.zones()[z].representative())); };
    os << "digraph isotree {\n";
    os << "  node [shape=box];\n";
    for (std::size_t z = 0; z < tree.zones().size(); ++z) {
        const auto& zone = tree.zones()[z];
        os << "  " << zone_id(z) << " [label=\"value=" << format_number(zone.value) << " |sites|=" << zone.sites.size()
           << "\"];\n";
    }
    for (const auto& e : tree.edges())
        os << "  " << zone_id(e.low) << " -> " << zone_id(e.up) << " [label=\"" << format_number(e.gap) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string intermediate_json(const Graph& g, const PipelineTrace& trace) {
    auto arcs_json = [&](const MergeTree& t) {
        Json arcs = Json::array();
        for (auto [child, parent] : t.arcs()) arcs.push_back(Json::array({g.name(child), g.name(parent)}));
        return arcs;
    };
    Json doc;
    Json rank = Json::object();
    for (std::uint32_t s = 0; s < g.site_count(); ++s) rank[g.name(SiteId{s})] = trace.rank.rank[s];
    doc["rank"] = std::move(rank);
    doc["sublevelMergeTree"] = arcs_json(trace.sublevel);
    doc["superlevelMergeTree"] = arcs_json(trace.superlevel);
    Json ct = Json::array();
    for (auto [low, up] : trace.contour_tree.edges) ct.push_back(Json::array({g.name(low), g.name(up)}));
    doc["augmentedContourTree"] = std::move(ct);
    doc["perturbedTree"] = Json::parse(export_tree_json(g, trace.perturbed_tree));
    return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("error writing " + path.string());
}

}  // namespace isotree::io
