#include "bqc/diagram.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bqc {

using json = nlohmann::json;
using K = DiagramError::Kind;

namespace {

std::string req_string(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_string())
        throw DiagramError(K::Schema, where + ": missing string field '" + key + "'");
    return j[key].get<std::string>();
}

}  // namespace

int Diagram::arc_index(const std::string& id) const {
    for (size_t i = 0; i < arcs.size(); ++i)
        if (arcs[i].id == id) return int(i);
    throw DiagramError(K::DanglingReference, "unknown semi-arc '" + id + "'");
}

int Diagram::region_index(const std::string& id) const {
    for (size_t i = 0; i < regions.size(); ++i)
        if (regions[i] == id) return int(i);
    throw DiagramError(K::DanglingReference, "unknown region '" + id + "'");
}

Diagram Diagram::parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DiagramError(K::Schema, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DiagramError(K::Schema, "diagram must be a JSON object");
    for (const char* key : {"semiarcs", "crossings", "vertices", "regions"})
        if (!j.contains(key) || !j[key].is_array()) throw DiagramError(K::Schema, std::string("missing array '") + key + "'");
    Diagram D;
    D.name = j.value("name", std::string());
    std::set<std::string> seen;
    for (auto& r : j["regions"]) {
        if (!r.is_string()) throw DiagramError(K::Schema, "region ids must be strings");
        if (!seen.insert(r.get<std::string>()).second) throw DiagramError(K::Schema, "duplicate region id " + r.dump());
        D.regions.push_back(r.get<std::string>());
    }
    seen.clear();
    std::set<std::string> closed;
    if (j.contains("closed")) {
        if (!j["closed"].is_array()) throw DiagramError(K::Schema, "'closed' must be an array");
        for (auto& c : j["closed"]) {
            if (!c.is_string()) throw DiagramError(K::Schema, "closed ids must be strings");
            closed.insert(c.get<std::string>());
        }
    }
    for (auto& s : j["semiarcs"]) {
        SemiArc a;
        a.id = req_string(s, "id", "semiarc");
        if (!seen.insert(a.id).second) throw DiagramError(K::Schema, "duplicate semi-arc id " + a.id);
        a.source = D.region_index(req_string(s, "region_source", "semiarc " + a.id));
        a.target = D.region_index(req_string(s, "region_target", "semiarc " + a.id));
        a.closed = closed.count(a.id) > 0;
        D.arcs.push_back(a);
    }
    for (auto& c : closed) D.arc_index(c);
    seen.clear();
    for (auto& x : j["crossings"]) {
        Crossing c;
        c.id = req_string(x, "id", "crossing");
        if (!seen.insert(c.id).second) throw DiagramError(K::Schema, "duplicate crossing id " + c.id);
        if (!x.contains("sign") || !x["sign"].is_number_integer()) throw DiagramError(K::Schema, "crossing " + c.id + ": missing sign");
        c.sign = x["sign"].get<int>();
        if (c.sign != 1 && c.sign != -1) throw DiagramError(K::Schema, "crossing " + c.id + ": sign must be +1 or -1");
        c.under_in = D.arc_index(req_string(x, "under_in", "crossing " + c.id));
        c.under_out = D.arc_index(req_string(x, "under_out", "crossing " + c.id));
        c.over_in = D.arc_index(req_string(x, "over_in", "crossing " + c.id));
        c.over_out = D.arc_index(req_string(x, "over_out", "crossing " + c.id));
        c.weight_region = D.region_index(req_string(x, "weight_region", "crossing " + c.id));
        D.crossings.push_back(c);
    }
    for (auto& x : j["vertices"]) {
        Vertex v;
        v.id = req_string(x, "id", "vertex");
        if (!seen.insert(v.id).second) throw DiagramError(K::Schema, "duplicate site id " + v.id);
        std::string kind = req_string(x, "kind", "vertex " + v.id);
        if (kind == "two_in_one_out")
            v.kind = VertexKind::TwoInOneOut;
        else if (kind == "one_in_two_out")
            v.kind = VertexKind::OneInTwoOut;
        else
            throw DiagramError(K::Schema, "vertex " + v.id + ": unknown kind " + kind);
        v.a = D.arc_index(req_string(x, "a_leg", "vertex " + v.id));
        v.b = D.arc_index(req_string(x, "b_leg", "vertex " + v.id));
        v.c = D.arc_index(req_string(x, "c_leg", "vertex " + v.id));
        v.weight_region = D.region_index(req_string(x, "weight_region", "vertex " + v.id));
        D.vertices.push_back(v);
    }
    D.validate();
    return D;
}

Diagram Diagram::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DiagramError(K::Schema, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string Diagram::serialize() const {
    json j;
    if (!name.empty()) j["name"] = name;
    j["regions"] = regions;
    j["semiarcs"] = json::array();
    j["closed"] = json::array();
    for (auto& a : arcs) {
        j["semiarcs"].push_back({{"id", a.id}, {"region_source", regions[a.source]}, {"region_target", regions[a.target]}});
        if (a.closed) j["closed"].push_back(a.id);
    }
    j["crossings"] = json::array();
    for (auto& c : crossings)
        j["crossings"].push_back({{"id", c.id},
                                  {"sign", c.sign},
                                  {"under_in", arcs[c.under_in].id},
                                  {"under_out", arcs[c.under_out].id},
                                  {"over_in", arcs[c.over_in].id},
                                  {"over_out", arcs[c.over_out].id},
                                  {"weight_region", regions[c.weight_region]}});
    j["vertices"] = json::array();
    for (auto& v : vertices)
        j["vertices"].push_back({{"id", v.id},
                                 {"kind", v.kind == VertexKind::TwoInOneOut ? "two_in_one_out" : "one_in_two_out"},
                                 {"a_leg", arcs[v.a].id},
                                 {"b_leg", arcs[v.b].id},
                                 {"c_leg", arcs[v.c].id},
                                 {"weight_region", regions[v.weight_region]}});
    return j.dump(2);
}

int crossing_weight_region(const Diagram& D, const Crossing& c) { return D.arcs[c.left_under()].source; }

int vertex_weight_region(const Diagram& D, const Vertex& v) { return D.arcs[v.b].source; }

void Diagram::validate() const {
    const int na = int(arcs.size()), nr = int(regions.size());
    if (nr == 0) throw DiagramError(K::Schema, "a diagram has at least one region");
    std::vector<int> ins(na, 0), outs(na, 0);
    auto in_slot = [&](int a) { ins[a]++; };
    auto out_slot = [&](int a) { outs[a]++; };
    for (auto& c : crossings) {
        in_slot(c.under_in);
        in_slot(c.over_in);
        out_slot(c.under_out);
        out_slot(c.over_out);
        if (c.under_in == c.over_in || c.under_out == c.over_out)
            throw DiagramError(K::Slot, "crossing " + c.id + " uses one semi-arc for both strands at one side");
    }
    for (auto& v : vertices) {
        if (v.a == v.b || v.a == v.c || v.b == v.c) throw DiagramError(K::Slot, "vertex " + v.id + " repeats a leg");
        if (v.kind == VertexKind::TwoInOneOut) {
            in_slot(v.a);
            in_slot(v.c);
            out_slot(v.b);
        } else {
            out_slot(v.a);
            out_slot(v.c);
            in_slot(v.b);
        }
    }
    for (int i = 0; i < na; ++i) {
        const auto& a = arcs[i];
        if (a.closed) {
            if (ins[i] || outs[i]) throw DiagramError(K::Slot, "closed loop " + a.id + " touches a crossing or vertex");
        } else if (ins[i] != 1 || outs[i] != 1) {
            throw DiagramError(K::Slot, "semi-arc " + a.id + " has " + std::to_string(outs[i]) + " start and " +
                                            std::to_string(ins[i]) + " end endpoints");
        }
        if (a.source == a.target && nr > 1)
            throw DiagramError(K::RegionInconsistency, "semi-arc " + a.id + " has the same region on both sides");
    }
    auto src = [&](int a) { return arcs[a].source; };
    auto tgt = [&](int a) { return arcs[a].target; };
    for (auto& c : crossings) {
        int lu = c.left_under(), lo = c.left_over(), ru = c.right_under(), ro = c.right_over();
        if (src(lu) != src(lo) || tgt(lu) != src(ro) || tgt(lo) != src(ru) || tgt(ro) != tgt(ru))
            throw DiagramError(K::RegionInconsistency, "regions around crossing " + c.id + " do not fit together");
        if (c.weight_region != crossing_weight_region(*this, c))
            throw DiagramError(K::WeightRegion, "weight region of crossing " + c.id + " is not the region both normals leave");
    }
    for (auto& v : vertices) {
        if (src(v.a) != src(v.b) || tgt(v.a) != src(v.c) || tgt(v.c) != tgt(v.b))
            throw DiagramError(K::RegionInconsistency, "regions around vertex " + v.id + " do not fit together");
        if (v.weight_region != vertex_weight_region(*this, v))
            throw DiagramError(K::WeightRegion, "weight region of vertex " + v.id + " is not the source side of its b leg");
    }
    std::vector<char> used(nr, 0);
    for (auto& a : arcs) used[a.source] = used[a.target] = 1;
    for (int r = 0; r < nr; ++r)
        if (!used[r] && !(arcs.empty() && nr == 1)) throw DiagramError(K::RegionInconsistency, "region " + regions[r] + " borders no semi-arc");

    // planarity: V - E + F = 1 + components, closed loops counted as one vertex and one edge
    int nodes = int(crossings.size() + vertices.size());
    std::vector<int> parent(nodes + na);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    std::vector<int> end_node(na, -1), start_node(na, -1);
    for (size_t i = 0; i < crossings.size(); ++i) {
        auto& c = crossings[i];
        for (int a : {c.under_in, c.over_in}) end_node[a] = int(i);
        for (int a : {c.under_out, c.over_out}) start_node[a] = int(i);
    }
    for (size_t i = 0; i < vertices.size(); ++i) {
        auto& v = vertices[i];
        int id = int(crossings.size() + i);
        if (v.kind == VertexKind::TwoInOneOut) {
            end_node[v.a] = end_node[v.c] = id;
            start_node[v.b] = id;
        } else {
            start_node[v.a] = start_node[v.c] = id;
            end_node[v.b] = id;
        }
    }
    int V = nodes, E = 0, components = 0;
    for (int i = 0; i < na; ++i) {
        E++;
        if (arcs[i].closed) {
            V++;
            components++;
        } else {
            unite(start_node[i], end_node[i]);
        }
    }
    for (int i = 0; i < nodes; ++i)
        if (find(i) == i) components++;
    if (components == 0) components = 1;
    if (V - E + nr != 1 + components)
        throw DiagramError(K::Euler, "Euler check failed: V - E + F = " + std::to_string(V - E + nr) + ", expected " +
                                         std::to_string(1 + components));
}

DiagramStats Diagram::stats() const {
    DiagramStats s;
    s.semiarcs = int(arcs.size());
    for (auto& a : arcs) s.closed += a.closed;
    for (auto& c : crossings) (c.sign > 0 ? s.positive : s.negative)++;
    for (auto& v : vertices) (v.kind == VertexKind::TwoInOneOut ? s.two_in_one_out : s.one_in_two_out)++;
    s.regions = int(regions.size());
    return s;
}

Diagram Diagram::mirror() const {
    // exchange over and under everywhere and reverse every strand;
    // reversal turns each normal around, so region sides swap
    Diagram M = *this;
    M.name = name.empty() ? std::string("mirror") : "-" + name + "*";
    for (auto& a : M.arcs) std::swap(a.source, a.target);
    for (auto& c : M.crossings) {
        Crossing o = c;
        c.under_in = o.over_out;
        c.under_out = o.over_in;
        c.over_in = o.under_out;
        c.over_out = o.under_in;
        c.sign = -o.sign;
    }
    for (auto& v : M.vertices) {
        v.kind = v.kind == VertexKind::TwoInOneOut ? VertexKind::OneInTwoOut : VertexKind::TwoInOneOut;
        std::swap(v.a, v.c);
    }
    for (auto& c : M.crossings) c.weight_region = crossing_weight_region(M, c);
    for (auto& v : M.vertices) v.weight_region = vertex_weight_region(M, v);
    M.validate();
    return M;
}

}  // namespace bqc
