#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcc/components.hpp"
#include "mcc/necklace.hpp"
#include "mcc/types.hpp"

namespace mcc {

struct Vertex {
    int id = 0;
    std::string label;  // canonical necklace word
};

struct Edge {
    int id = 0;
    HyperbolicComponent component;
    std::uint64_t label = 0;      // display label within the complex's family
    std::array<int, 2> endpoints{};  // vertex at the low angle, vertex at the high angle
};

/// One boundary slot of a face. dir = +1 runs from endpoints[0] to endpoints[1].
struct Side {
    int edge = 0;
    int dir = 1;

    friend bool operator==(const Side&, const Side&) = default;
    friend auto operator<=>(const Side&, const Side&) = default;
};

struct Face {
    int id = 0;
    CycleClass cls;
    std::vector<Side> boundary;  // cyclic
    int local_degree = 0;
    /// Vertices of a face with empty boundary (an edgeless sheet).
    std::vector<int> attached_vertices;
};

struct CellComplex {
    Family family = Family::Per1;
    int period = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::map<std::string, std::string> metadata;
};

/// Tail and head vertex of a boundary slot.
int side_tail(const CellComplex& c, const Side& s);
int side_head(const CellComplex& c, const Side& s);

/// Edge label convention per family: Per1 uses display_label, Per2 the low numerator.
std::uint64_t edge_label(Family m, const HyperbolicComponent& h);

/// Vertex necklace of one characteristic angle: its binary cycle (Per1) or basilica label (Per2).
std::string angle_vertex_label(Family m, const RationalAngle& theta);

struct FaceDiagnostic {
    int face = 0;
    int size = 0;
    int local_degree = 0;
    int winding = 0;
    int median_count = 0;
    std::vector<std::string> problems;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<FaceDiagnostic> faces;

    bool ok() const { return errors.empty(); }
};

ValidationReport validate(const CellComplex& c);

Int euler(const CellComplex& c);

struct ComponentStats {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    Int euler = 0;
    Int genus = 0;
};

/// Connected components of the complex; ordered by least vertex id.
std::vector<ComponentStats> component_stats(const CellComplex& c);
int components(const CellComplex& c);
std::vector<Int> genus_per_component(const CellComplex& c);

/// Boundary lengths sorted ascending; a doubled edge counts twice.
std::vector<int> face_sizes(const CellComplex& c);
/// Faces bounded by exactly two distinct edges.
int bigon_count(const CellComplex& c);
bool has_bigon(const CellComplex& c);

struct FaceSizeStats {
    int smallest = 0;
    int largest = 0;
    int largest_count = 0;
    int smallest_count = 0;
};
FaceSizeStats face_size_stats(const CellComplex& c);

/// Number of times the boundary passes angle 0 when swept counterclockwise.
int face_winding(const CellComplex& c, const Face& f);
/// Boundary vertices whose incoming and outgoing angles enclose 1/2 counterclockwise.
std::vector<int> median_vertices(const CellComplex& c, const Face& f);
/// Per1: duo size. Per2: median vertex count (class size for an edgeless face).
int face_local_degree(const CellComplex& c, const Face& f);

/// Complex conjugation on vertex words: bit complement (Per1), digit swap 0 <-> 2 (Per2).
std::string conjugate_word(Family m, const std::string& word);

/// Image face of each face under complex conjugation: the face of the conjugate class whose
/// edge multiset (attached vertices, if edgeless) is the conjugate one; -1 when none matches.
std::vector<int> conjugate_faces(const CellComplex& c);

/// Problems with conjugation acting as a face permutation. Per1 additionally requires every
/// face to be fixed.
std::vector<std::string> conjugation_violations(const CellComplex& c);

struct CanonicalOptions {
    /// Compare faces with a singleton class by boundary multiset instead of cyclic word.
    bool relax_singleton_faces = false;
};

/// Label-rigid canonical string; faces are compared up to cyclic rotation.
std::string canonical_form(const CellComplex& c, CanonicalOptions opts = {});
bool isomorphic(const CellComplex& a, const CellComplex& b, CanonicalOptions opts = {});

}  // namespace mcc
