#include "torelli/io.hpp"

#include "torelli/errors.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace torelli {

using nlohmann::json;

namespace {

void only_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& where)
{
    if (!j.is_object()) throw InputError(where + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw InputError(where + ": unknown field: " + key);
    }
}

const json& field(const json& j, const char* name, const std::string& where)
{
    auto it = j.find(name);
    if (it == j.end()) throw InputError(where + ": missing field: " + name);
    return *it;
}

std::string str(const json& j, const std::string& where)
{
    if (!j.is_string()) throw InputError(where + ": expected a string");
    return j.get<std::string>();
}

int integer(const json& j, const std::string& where)
{
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    return j.get<int>();
}

const json& array(const json& j, const std::string& where)
{
    if (!j.is_array()) throw InputError(where + ": expected an array");
    return j;
}

std::vector<std::string> strings(const json& j, const std::string& where)
{
    std::vector<std::string> out;
    for (const auto& s : array(j, where)) out.push_back(str(s, where));
    return out;
}

}  // namespace

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw InputError(path + ": malformed JSON: " + e.what());
    }
}

GraphSpec parse_graph_spec(const json& j)
{
    only_fields(j, {"vertices", "edges"}, "graph");
    GraphSpec spec;
    for (const auto& v : array(field(j, "vertices", "graph"), "vertices")) {
        only_fields(v, {"id", "genus"}, "vertex");
        spec.vertices.push_back({str(field(v, "id", "vertex"), "vertex id"),
                                 integer(field(v, "genus", "vertex"), "vertex genus")});
    }
    for (const auto& e : array(field(j, "edges", "graph"), "edges")) {
        only_fields(e, {"id", "ends"}, "edge");
        const auto id = str(field(e, "id", "edge"), "edge id");
        const auto ends = strings(field(e, "ends", "edge " + id), "edge " + id);
        if (ends.size() != 2) throw InputError("edge " + id + ": ends must name two vertices");
        spec.edges.push_back({id, ends[0], ends[1]});
    }
    return spec;
}

DecGraph parse_graph(const json& j)
{
    return build_graph(parse_graph_spec(j));
}

CurveSpec parse_curve_spec(const json& j)
{
    only_fields(j, {"components", "nodes"}, "curve");
    CurveSpec spec;
    for (const auto& c : array(field(j, "components", "curve"), "components")) {
        only_fields(c, {"id", "genus", "iso_label", "points", "symmetries"}, "component");
        CurveSpec::ComponentSpec cs;
        cs.id = str(field(c, "id", "component"), "component id");
        const std::string where = "component " + cs.id;
        cs.genus = integer(field(c, "genus", where.c_str()), where);
        if (c.contains("iso_label")) cs.iso_label = str(c["iso_label"], where);
        cs.points = strings(field(c, "points", where), where);
        if (c.contains("symmetries"))
            for (const auto& s : array(c["symmetries"], where)) cs.symmetries.push_back(strings(s, where));
        spec.components.push_back(std::move(cs));
    }
    for (const auto& n : array(field(j, "nodes", "curve"), "nodes")) {
        const auto pts = strings(n, "node");
        if (pts.size() != 2) throw InputError("node must name two points");
        spec.nodes.push_back({pts[0], pts[1]});
    }
    return spec;
}

CombCurve parse_curve(const json& j)
{
    return build_curve(parse_curve_spec(j));
}

bool is_curve_document(const json& j)
{
    return j.is_object() && j.contains("components");
}

DecGraph load_graph(const std::string& path)
{
    const auto j = load_json_file(path);
    return is_curve_document(j) ? dual_graph(parse_curve(j)) : parse_graph(j);
}

CombCurve load_curve(const std::string& path)
{
    const auto j = load_json_file(path);
    if (!is_curve_document(j)) throw InputError(path + ": not a curve file");
    return parse_curve(j);
}

json graph_to_json(const DecGraph& g)
{
    json out;
    out["vertices"] = json::array();
    for (const auto& v : g.vertices()) out["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
    out["edges"] = json::array();
    for (const auto& e : g.edges())
        out["edges"].push_back({{"id", e.id}, {"ends", {g.vertices()[e.u].id, g.vertices()[e.v].id}}});
    return out;
}

json curve_to_json(const CombCurve& x)
{
    json out;
    out["components"] = json::array();
    for (const auto& c : x.components()) {
        json jc{{"id", c.id}, {"genus", c.genus}, {"iso_label", c.iso_label}, {"points", c.points}};
        json syms = json::array();
        const int n = static_cast<int>(c.points.size());
        auto images = [&](const std::vector<int>& perm) {
            json img = json::array();
            for (int k : perm) img.push_back(c.points[k]);
            return img;
        };
        if (c.genus >= 2 && n >= 2) {
            if (c.group->is_full()) {
                std::vector<int> swap(n);
                std::vector<int> rot(n);
                for (int k = 0; k < n; ++k) {
                    swap[k] = k;
                    rot[k] = (k + 1) % n;
                }
                std::swap(swap[0], swap[1]);
                syms.push_back(images(swap));
                if (n > 2) syms.push_back(images(rot));
            } else {
                for (const auto& g : c.group->elements()) {
                    bool identity = true;
                    for (int k = 0; k < n; ++k) identity = identity && g[k] == k;
                    if (!identity) syms.push_back(images(g));
                }
            }
        }
        if (!syms.empty()) jc["symmetries"] = syms;
        out["components"].push_back(std::move(jc));
    }
    out["nodes"] = json::array();
    for (int k = 0; k < x.num_nodes(); ++k)
        out["nodes"].push_back({x.point_id(x.node(k)[0]), x.point_id(x.node(k)[1])});
    return out;
}

}  // namespace torelli
