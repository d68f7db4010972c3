#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "bqc/diagram.hpp"

using namespace bqc;
using json = nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(BQC_FIXTURES) + "/" + name; }

json load_json(const std::string& name) {
    std::ifstream f(fixture(name));
    return json::parse(f);
}

DiagramError::Kind error_kind(const json& j) {
    try {
        Diagram::parse(j.dump());
    } catch (const DiagramError& e) {
        return e.kind;
    }
    FAIL("diagram was accepted");
    return DiagramError::Kind::Schema;
}

bool same_structure(const Diagram& a, const Diagram& b) {
    if (a.arcs.size() != b.arcs.size() || a.crossings.size() != b.crossings.size() ||
        a.vertices.size() != b.vertices.size() || a.regions != b.regions)
        return false;
    for (size_t i = 0; i < a.arcs.size(); ++i)
        if (a.arcs[i].id != b.arcs[i].id || a.arcs[i].source != b.arcs[i].source || a.arcs[i].target != b.arcs[i].target ||
            a.arcs[i].closed != b.arcs[i].closed)
            return false;
    for (size_t i = 0; i < a.crossings.size(); ++i) {
        auto &x = a.crossings[i], &y = b.crossings[i];
        if (x.sign != y.sign || x.under_in != y.under_in || x.under_out != y.under_out || x.over_in != y.over_in ||
            x.over_out != y.over_out || x.weight_region != y.weight_region)
            return false;
    }
    for (size_t i = 0; i < a.vertices.size(); ++i) {
        auto &x = a.vertices[i], &y = b.vertices[i];
        if (x.kind != y.kind || x.a != y.a || x.b != y.b || x.c != y.c || x.weight_region != y.weight_region) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("the 5_2 fixture") {
    Diagram D = Diagram::load(fixture("5_2.json"));
    DiagramStats s = D.stats();
    CHECK(s.semiarcs == 13);
    CHECK(s.closed == 0);
    CHECK(s.positive == 3);
    CHECK(s.negative == 2);
    CHECK(s.two_in_one_out == 1);
    CHECK(s.one_in_two_out == 1);
    CHECK(s.regions == 8);
    CHECK(D.vertices.size() == 2);
    // every semi-arc of a trivalent graph diagram meets a crossing or vertex at both ends
    CHECK(2 * D.arcs.size() == 4 * D.crossings.size() + 3 * D.vertices.size());
}

TEST_CASE("the R1/R2 variant") {
    Diagram D = Diagram::load(fixture("5_2_r1r2.json"));
    DiagramStats s = D.stats();
    CHECK(s.semiarcs == 19);
    CHECK(s.positive + s.negative == 8);
    CHECK(s.regions == 11);
    // writhe changes by the kink only; the R2 pair contributes one of each sign
    DiagramStats b = Diagram::load(fixture("5_2.json")).stats();
    CHECK(std::abs((s.positive - s.negative) - (b.positive - b.negative)) == 1);
}

TEST_CASE("circle and theta") {
    DiagramStats c = Diagram::load(fixture("circle.json")).stats();
    CHECK(c.semiarcs == 1);
    CHECK(c.closed == 1);
    CHECK(c.positive + c.negative == 0);
    CHECK(c.regions == 2);
    DiagramStats t = Diagram::load(fixture("theta.json")).stats();
    CHECK(t.semiarcs == 3);
    CHECK(t.positive + t.negative == 0);
    CHECK(t.two_in_one_out + t.one_in_two_out == 2);
    CHECK(t.regions == 3);
    CHECK_NOTHROW(Diagram::load(fixture("theta_kink.json")));
}

TEST_CASE("weight regions are derived from incidences") {
    for (auto name : {"5_2.json", "5_2_r1r2.json", "theta_kink.json"}) {
        Diagram D = Diagram::load(fixture(name));
        for (auto& c : D.crossings) {
            // the region both normals point away from
            CHECK(c.weight_region == D.arcs[c.left_under()].source);
            CHECK(c.weight_region == D.arcs[c.left_over()].source);
        }
        for (auto& v : D.vertices) CHECK(v.weight_region == D.arcs[v.a].source);
    }
}

TEST_CASE("a swapped region id is rejected") {
    json j = load_json("5_2.json");
    auto& a = j["semiarcs"][4];
    std::swap(a["region_source"], a["region_target"]);
    CHECK(error_kind(j) == DiagramError::Kind::RegionInconsistency);
}

TEST_CASE("wrong weight region, dangling ids, slots and schema") {
    json j = load_json("5_2.json");
    j["crossings"][0]["weight_region"] = j["regions"][0] == j["crossings"][0]["weight_region"] ? j["regions"][1] : j["regions"][0];
    CHECK(error_kind(j) == DiagramError::Kind::WeightRegion);

    j = load_json("5_2.json");
    j["crossings"][1]["over_in"] = "nowhere";
    CHECK(error_kind(j) == DiagramError::Kind::DanglingReference);

    j = load_json("5_2.json");
    j["crossings"][1]["over_in"] = j["crossings"][1]["under_in"];
    CHECK(error_kind(j) == DiagramError::Kind::Slot);

    j = load_json("5_2.json");
    j.erase("semiarcs");
    CHECK(error_kind(j) == DiagramError::Kind::Schema);

    CHECK_THROWS_AS(Diagram::parse("{not json"), StructuralError);
}

TEST_CASE("an extra face fails the Euler check") {
    json j = load_json("circle.json");
    j["regions"] = {"outside", "inside", "a", "b"};
    j["semiarcs"].push_back({{"id", "s2"}, {"region_source", "a"}, {"region_target", "b"}});
    j["closed"].push_back("s2");
    CHECK(error_kind(j) == DiagramError::Kind::Euler);
    j["regions"] = {"outside", "inside", "inside2"};
    j["semiarcs"][1]["region_source"] = "outside";
    j["semiarcs"][1]["region_target"] = "inside2";
    CHECK_NOTHROW(Diagram::parse(j.dump()));
}

TEST_CASE("serialization round trip") {
    for (auto name : {"5_2.json", "5_2_r1r2.json", "circle.json", "theta.json"}) {
        Diagram D = Diagram::load(fixture(name));
        CHECK(same_structure(D, Diagram::parse(D.serialize())));
    }
}

TEST_CASE("mirror") {
    for (auto name : {"5_2.json", "5_2_r1r2.json", "circle.json", "theta.json", "theta_kink.json"}) {
        Diagram D = Diagram::load(fixture(name));
        Diagram M = D.mirror();
        CHECK_NOTHROW(M.validate());
        DiagramStats a = D.stats(), b = M.stats();
        CHECK(a.positive == b.negative);
        CHECK(a.negative == b.positive);
        CHECK(a.two_in_one_out == b.one_in_two_out);
        CHECK(a.regions == b.regions);
        CHECK(same_structure(D, M.mirror()));
    }
}

}  // TEST_SUITE
