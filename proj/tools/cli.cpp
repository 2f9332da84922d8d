#include "cli.hpp"

#include "torelli/c1.hpp"
#include "torelli/curve.hpp"
#include "torelli/cyceq.hpp"
#include "torelli/homology.hpp"
#include "torelli/io.hpp"
#include "torelli/orientation.hpp"
#include "torelli/strata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace torelli::cli {

namespace {

using Report = nlohmann::ordered_json;

struct Options {
    std::string format = "human";
    Limits limits;

    std::string file;
    std::string file2;
    std::string kind = "st";
    std::string dot;
    std::string support;
    std::string check;
    bool size = false;
    bool enumerate = false;
    bool bounds = false;
    bool dimension = false;
    bool torelli_check = false;
    bool cyclic = false;
    bool strong = false;
    bool c1 = false;
    bool t = false;
    std::string orientation = "default";
};

struct Outcome {
    Report report;
    int code = Ok;
    std::string raw;  // printed verbatim in human format when set
};

std::string scalar_text(const Report& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_human(const Report& r, std::ostream& out)
{
    if (r.size() == 1) {
        const auto& v = r.begin().value();
        if (v.is_primitive()) {
            out << scalar_text(v) << '\n';
            return;
        }
    }
    for (auto it = r.begin(); it != r.end(); ++it) {
        const auto& v = it.value();
        if (v.is_primitive()) {
            out << it.key() << ": " << scalar_text(v) << '\n';
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Report& e) { return e.is_primitive(); })) {
            out << it.key() << ":";
            for (const auto& e : v) out << ' ' << scalar_text(e);
            out << '\n';
        } else if (v.is_array()) {
            out << it.key() << ":\n";
            for (const auto& e : v) out << "  " << (e.is_primitive() ? scalar_text(e) : e.dump()) << '\n';
        } else {
            out << it.key() << ": " << v.dump() << '\n';
        }
    }
}

std::vector<std::string> set_list(const DecGraph& g, const std::vector<EdgeSet>& sets)
{
    std::vector<std::string> out;
    for (auto s : sets) out.push_back(format_edge_set(g, s));
    return out;
}

EdgeSet parse_edge_list(const DecGraph& g, const std::string& csv)
{
    std::vector<std::string> ids;
    std::stringstream ss(csv);
    for (std::string id; std::getline(ss, id, ',');)
        if (!id.empty()) ids.push_back(id);
    return g.edge_set(ids);
}

Multidegree parse_multidegree(const DecGraph& g, const std::string& text)
{
    Multidegree d(g.num_vertices(), 0);
    std::vector<bool> seen(g.num_vertices(), false);
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto colon = item.rfind(':');
        if (colon == std::string::npos) throw InputError("multidegree entries must read id:value");
        const int v = g.vertex_index(item.substr(0, colon));
        try {
            d[v] = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("bad multidegree value: " + item);
        }
        seen[v] = true;
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!seen[v]) throw InputError("multidegree misses vertex: " + g.vertices()[v].id);
    return d;
}

std::string orientation_text(const DecGraph& g, const Orientation& o)
{
    std::string s;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (o.deleted.contains(e)) continue;
        if (!s.empty()) s += ',';
        s += g.edges()[e].id + ":" + g.vertices()[o.tail(g, e)].id + ">" + g.vertices()[o.head(g, e)].id;
    }
    return s;
}

Outcome do_analyze(const Options& opt)
{
    const auto g = load_graph(opt.file);
    Outcome o;
    auto& r = o.report;
    r["genus"] = curve_genus(g);
    r["b1"] = first_betti(g);
    r["components"] = num_components(g, g.all_edges());
    r["separating_edges"] = g.edge_ids(separating_edges(g));
    const bool connected = is_connected(g);
    r["connected"] = connected;
    if (connected) {
        r["stable"] = is_stable(g);
        r["three_edge_connected"] = is_three_edge_connected(g);
        if (!has_separating_edge(g)) r["c1_sets"] = set_list(g, c1_partition(g));
    }
    return o;
}

Outcome do_c1_sets(const Options& opt)
{
    const auto g = load_graph(opt.file);
    Outcome o;
    o.report["c1_sets"] = set_list(g, c1_partition(g));
    return o;
}

Outcome do_poset(const Options& opt)
{
    const auto g = load_graph(opt.file);
    Poset p;
    if (opt.kind == "sp") {
        p = sp_poset(g, opt.limits);
    } else if (opt.kind == "op") {
        p = op_poset(g, opt.limits).poset;
    } else if (opt.kind == "opbar") {
        p = opbar_poset(g, opt.limits).poset;
    } else if (opt.kind == "st") {
        p = st_poset(g, opt.limits).poset;
    } else {
        throw InputError("unknown poset kind: " + opt.kind);
    }
    Outcome o;
    auto& r = o.report;
    r["kind"] = opt.kind;
    r["size"] = p.size();
    r["elements"] = Report::array();
    for (int i = 0; i < p.size(); ++i) r["elements"].push_back({{"id", p.id(i)}, {"label", p.label(i)}});
    r["covers"] = Report::array();
    for (auto [up, low] : p.covers()) r["covers"].push_back({p.id(up), p.id(low)});
    if (!opt.dot.empty()) {
        std::ofstream f(opt.dot);
        if (!f) throw InputError("cannot write file: " + opt.dot);
        f << export_dot(p, opt.kind);
        r["dot"] = opt.dot;
    }
    return o;
}

Outcome do_orientations(const Options& opt)
{
    const auto g = load_graph(opt.file);
    const EdgeSet s = parse_edge_list(g, opt.support);
    Outcome o;
    auto& r = o.report;
    r["support"] = format_edge_set(g, s);
    const auto list = totally_cyclic_orientations(g, s, opt.limits);
    r["count"] = list.size();
    r["orientations"] = Report::array();
    for (const auto& ori : list)
        r["orientations"].push_back(
            {{"orientation", orientation_text(g, ori)}, {"multidegree", format_multidegree(g, multidegree_of(g, ori))}});
    return o;
}

Outcome do_multidegrees(const Options& opt)
{
    const auto g = load_graph(opt.file);
    Outcome o;
    auto& r = o.report;
    if (!opt.check.empty()) {
        const auto d = parse_multidegree(g, opt.check);
        r["multidegree"] = format_multidegree(g, d);
        r["semistable"] = is_semistable(g, d);
        r["stable"] = is_stable(g, d);
        o.code = r["stable"].get<bool>() ? Ok : Negative;
        return o;
    }
    r["stable_multidegrees"] = Report::array();
    for (const auto& d : stable_multidegrees(g, opt.limits)) r["stable_multidegrees"].push_back(format_multidegree(g, d));
    return o;
}

Outcome do_strata(const Options& opt)
{
    const auto g = load_graph(opt.file);
    const auto st = st_poset(g, opt.limits);
    Outcome o;
    auto& r = o.report;
    r["count"] = st.strata.size();
    r["strata"] = Report::array();
    for (const auto& s : st.strata)
        r["strata"].push_back({{"id", stratum_id(g, s)},
                               {"support", format_edge_set(g, s.support)},
                               {"multidegree", format_multidegree(g, s.degree)},
                               {"dim", stratum_dim(g, s)},
                               {"theta_components", theta_components(g, s)}});
    const auto bottom = smallest_stratum(g, opt.limits);
    r["smallest"] = stratum_id(g, bottom);
    const auto sm = support_map(g, opt.limits);
    r["support_map_surjective"] = sm.surjective;
    r["support_map_quotient"] = sm.quotient;
    return o;
}

Report nodes_of(const CombCurve& x)
{
    Report nodes = Report::array();
    for (int k = 0; k < x.num_nodes(); ++k) nodes.push_back(x.node_id(k));
    return nodes;
}

Outcome do_fiber(const Options& opt)
{
    const int modes = opt.size + opt.enumerate + opt.bounds + opt.dimension;
    if (modes != 1) throw InputError("fiber needs exactly one of --size, --enumerate, --bounds, --dimension");
    const auto x = load_curve(opt.file);
    Outcome o;
    auto& r = o.report;
    if (opt.size) {
        r["fiber_size"] = enumerate_fiber(x, opt.limits).size();
    } else if (opt.enumerate) {
        const auto fiber = enumerate_fiber(x, opt.limits);
        r["fiber_size"] = fiber.size();
        r["curves"] = Report::array();
        for (const auto& y : fiber) r["curves"].push_back(Report::parse(curve_to_json(y).dump()));
        if (opt.format != "json") {
            std::ostringstream s;
            s << "fiber_size: " << fiber.size() << '\n';
            for (std::size_t i = 0; i < fiber.size(); ++i) {
                s << "curve " << i + 1 << ":";
                for (int k = 0; k < fiber[i].num_nodes(); ++k) s << ' ' << fiber[i].node_id(k);
                s << '\n';
            }
            o.raw = s.str();
        }
    } else if (opt.bounds) {
        r["fiber_bound"] = fiber_bound(x);
        r["fiber_bound_global"] = fiber_bound_global(x);
    } else {
        const auto t = tilde_profile(x);
        r["fiber_dimension"] = fiber_dimension(x);
        r["topotype_dimension"] = topotype_dimension(x);
        r["separating_nodes"] = t.separating;
        r["gamma"] = t.gamma;
        r["gamma0"] = t.gamma0;
        r["gamma1"] = t.gamma1;
        r["gamma_plus"] = t.gamma_plus;
        r["exceptional"] = t.exceptional;
        r["piece_genera"] = t.genera;
    }
    return o;
}

Outcome do_torelli(const Options& opt)
{
    const auto x = load_curve(opt.file);
    Outcome o;
    const bool yes = is_torelli_curve(x, opt.limits);
    o.report["torelli_curve"] = yes;
    o.code = yes ? Ok : Negative;
    return o;
}

Outcome do_torelli_image(const Options& opt)
{
    const auto x = load_curve(opt.file);
    const auto y = load_curve(opt.file2);
    Outcome o;
    const bool yes = torelli_image_equivalent(x, y, opt.limits);
    o.report["same_image"] = yes;
    o.code = yes ? Ok : Negative;
    return o;
}

Outcome do_equiv(const Options& opt)
{
    const int modes = opt.cyclic + opt.strong + opt.c1 + opt.t;
    if (modes != 1) throw InputError("equiv needs exactly one of --cyclic, --strong, --c1, --t");
    Outcome o;
    auto& r = o.report;
    bool yes = false;
    if (opt.cyclic || opt.strong) {
        const auto g = load_graph(opt.file);
        const auto h = load_graph(opt.file2);
        if (opt.cyclic) {
            const auto eps = cyclically_equivalent(g, h, opt.limits);
            yes = eps.has_value();
            r["cyclically_equivalent"] = yes;
            if (yes) {
                r["witness"] = Report::array();
                for (int e = 0; e < g.num_edges(); ++e)
                    r["witness"].push_back(g.edges()[e].id + " -> " + h.edges()[(*eps)[e]].id);
            }
        } else {
            yes = strongly_cyclically_equivalent(g, h, opt.limits);
            r["strongly_cyclically_equivalent"] = yes;
        }
    } else {
        const auto x = load_curve(opt.file);
        const auto y = load_curve(opt.file2);
        if (opt.c1) {
            const auto w = c1_equivalence_witness(x, y, opt.limits);
            yes = w.has_value();
            r["c1_equivalent"] = yes;
            if (yes) {
                r["witness"] = Report::array();
                for (int p = 0; p < x.num_points(); ++p)
                    r["witness"].push_back(x.point_id(p) + " -> " + y.point_id((*w)[p]));
            }
        } else {
            yes = is_t_equivalent(x, y, opt.limits);
            r["t_equivalent"] = yes;
        }
    }
    o.code = yes ? Ok : Negative;
    return o;
}

Outcome do_stabilize(const Options& opt)
{
    const auto x = load_curve(opt.file);
    Outcome o;
    o.report["curve"] = Report::parse(curve_to_json(stabilize(x)).dump());
    if (opt.format != "json") o.raw = curve_to_json(stabilize(x)).dump(2) + "\n";
    return o;
}

Outcome do_eta(const Options& opt)
{
    const auto x = load_curve(opt.file);
    const auto g = dual_graph(x);
    Orientation ori;
    if (opt.orientation != "default") ori.reversed = parse_edge_list(g, opt.orientation).bits();
    const auto m = eta_matrix(x, ori);
    Outcome o;
    auto& r = o.report;
    r["columns"] = m.columns;
    r["rows"] = m.rows;
    std::ostringstream s;
    s << "cycle";
    for (const auto& c : m.columns) s << '\t' << c;
    s << '\n';
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        s << 'z' << i + 1;
        for (int v : m.rows[i]) s << '\t' << v;
        s << '\n';
    }
    o.raw = s.str();
    return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Combinatorics of the compactified Torelli map", "torelli"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "json"}));
    app.add_option("--max-edges", opt.limits.max_edges, "Edge cap for exponential searches");
    app.add_option("--max-orbit", opt.limits.max_orbit, "Cap on twist-orbit size");
    app.add_option("--max-fiber", opt.limits.max_fiber, "Cap on fiber bound");

    auto* analyze = app.add_subcommand("analyze", "Genus, Betti number, bridges, stability, C1-sets");
    analyze->add_option("file", opt.file)->required();
    auto* c1sets = app.add_subcommand("c1-sets", "C1-partition of the edges");
    c1sets->add_option("file", opt.file)->required();
    auto* poset = app.add_subcommand("poset", "SP, OP, OPbar or ST poset");
    poset->add_option("file", opt.file)->required();
    poset->add_option("--kind", opt.kind)->check(CLI::IsMember({"sp", "op", "opbar", "st"}));
    poset->add_option("--dot", opt.dot, "Write the covering relation as DOT");
    auto* orient = app.add_subcommand("orientations", "Totally cyclic orientations");
    orient->add_option("file", opt.file)->required();
    orient->add_option("--support", opt.support, "Comma-separated edges to delete");
    auto* multi = app.add_subcommand("multidegrees", "Stable multidegrees");
    multi->add_option("file", opt.file)->required();
    multi->add_option("--check", opt.check, "Test one multidegree, e.g. u:1,v:0");
    auto* strata = app.add_subcommand("strata", "Strata of the compactified Picard variety");
    strata->add_option("file", opt.file)->required();
    auto* fiber = app.add_subcommand("fiber", "Torelli fiber of a curve");
    fiber->add_option("file", opt.file)->required();
    fiber->add_flag("--size", opt.size);
    fiber->add_flag("--enumerate", opt.enumerate);
    fiber->add_flag("--bounds", opt.bounds);
    fiber->add_flag("--dimension", opt.dimension);
    auto* torelli = app.add_subcommand("torelli", "Torelli-curve test");
    torelli->add_option("file", opt.file)->required();
    torelli->add_flag("--check", opt.torelli_check)->required();
    auto* image = app.add_subcommand("torelli-image", "Same image under the Torelli map");
    image->add_option("curve1", opt.file)->required();
    image->add_option("curve2", opt.file2)->required();
    auto* equiv = app.add_subcommand("equiv", "Equivalence tests");
    equiv->add_option("a", opt.file)->required();
    equiv->add_option("b", opt.file2)->required();
    equiv->add_flag("--cyclic", opt.cyclic);
    equiv->add_flag("--strong", opt.strong);
    equiv->add_flag("--c1", opt.c1);
    equiv->add_flag("--t", opt.t);
    auto* stab = app.add_subcommand("stabilize", "Contract exceptional components");
    stab->add_option("file", opt.file)->required();
    auto* eta = app.add_subcommand("eta", "Eta matrix as TSV");
    eta->add_option("file", opt.file)->required();
    eta->add_option("--orientation", opt.orientation, "\"default\" or comma-separated nodes to reverse");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    }

    try {
        Outcome o;
        if (analyze->parsed()) o = do_analyze(opt);
        else if (c1sets->parsed()) o = do_c1_sets(opt);
        else if (poset->parsed()) o = do_poset(opt);
        else if (orient->parsed()) o = do_orientations(opt);
        else if (multi->parsed()) o = do_multidegrees(opt);
        else if (strata->parsed()) o = do_strata(opt);
        else if (fiber->parsed()) o = do_fiber(opt);
        else if (torelli->parsed()) o = do_torelli(opt);
        else if (image->parsed()) o = do_torelli_image(opt);
        else if (equiv->parsed()) o = do_equiv(opt);
        else if (stab->parsed()) o = do_stabilize(opt);
        else o = do_eta(opt);

        if (opt.format == "json") out << o.report.dump(2) << '\n';
        else if (!o.raw.empty()) out << o.raw;
        else render_human(o.report, out);
        return o.code;
    } catch (const CapExceeded& e) {
        err << "error: cap exceeded: " << e.what() << '\n';
        return Capped;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    }
}

}  // namespace torelli::cli
