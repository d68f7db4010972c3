#pragma once
#include <string>
#include <vector>

#include "bqc/error.hpp"

namespace bqc {

struct DiagramError : StructuralError {
    enum class Kind { Schema, DanglingReference, Slot, RegionInconsistency, WeightRegion, Euler };
    Kind kind;
    DiagramError(Kind k, const std::string& what) : StructuralError(what), kind(k) {}
};

struct SemiArc {
    std::string id;
    // tail and head of the normal direction (travel direction turned counterclockwise)
    int source = -1, target = -1;
    bool closed = false;
};

struct Crossing {
    std::string id;
    int sign = 1;
    int under_in = -1, under_out = -1, over_in = -1, over_out = -1;
    int weight_region = -1;

    // the under and over arcs on the side the normals point away from, and their continuations
    int left_under() const { return sign > 0 ? under_in : under_out; }
    int left_over() const { return sign > 0 ? over_out : over_in; }
    int right_under() const { return sign > 0 ? under_out : under_in; }
    int right_over() const { return sign > 0 ? over_in : over_out; }
};

enum class VertexKind { TwoInOneOut, OneInTwoOut };

struct Vertex {
    std::string id;
    VertexKind kind = VertexKind::TwoInOneOut;
    // c is colored a^-1 b over* a; b is the single leg whose direction differs from the other two
    int a = -1, b = -1, c = -1;
    int weight_region = -1;
};

struct DiagramStats {
    int semiarcs = 0, closed = 0;
    int positive = 0, negative = 0;
    int two_in_one_out = 0, one_in_two_out = 0;
    int regions = 0;
};

struct Diagram {
    std::string name;
    std::vector<std::string> regions;
    std::vector<SemiArc> arcs;
    std::vector<Crossing> crossings;
    std::vector<Vertex> vertices;

    static Diagram parse(const std::string& text);
    static Diagram load(const std::string& path);
    std::string serialize() const;

    // throws DiagramError on the first violated invariant
    void validate() const;
    DiagramStats stats() const;
    // the diagram of the mirror image with reversed orientation
    Diagram mirror() const;

    int arc_index(const std::string& id) const;
    int region_index(const std::string& id) const;
};

// weight regions follow from the incidence data
int crossing_weight_region(const Diagram& D, const Crossing& c);
int vertex_weight_region(const Diagram& D, const Vertex& v);

}  // namespace bqc
