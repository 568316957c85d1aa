#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagcat/fg_ab_group.hpp"
#include "diagcat/representation.hpp"

namespace diagcat {

// Finite 1-dimensional CW complexes; loops and multi-edges allowed.
struct GraphEdge {
    std::string id, a, b;
};

struct Graph {
    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;

    bool has_vertex(const std::string& v) const;
    const GraphEdge* find_edge(const std::string& id) const;
    std::vector<std::string> validate() const;
};

// A subcomplex, by reference into the ambient graph.
struct Subcomplex {
    std::vector<std::string> vertices;
    std::vector<std::string> edges;

    bool has_vertex(const std::string& v) const;
    bool has_edge(const std::string& id) const;
    bool contains(const Subcomplex& other) const;
};

// Materialize the subcomplex as a graph of its own.
Graph subgraph(const Graph& g, const Subcomplex& s);

// (X, Y, degree) with degree in {0, 1}: graphs have no higher homology.
struct GraphPair {
    Graph x;
    Subcomplex y;
    int degree = 1;

    std::vector<std::string> validate() const;
};

// Z ⊆ Y ⊆ X.
struct GraphTriple {
    Graph x;
    Subcomplex y, z;

    std::vector<std::string> validate() const;
};

// Image of one edge: another edge (traversed forward or backward relative to
// canonical orientations; 'reversed' only matters when the image is a loop,
// otherwise the endpoint images decide) or absent = collapse to a vertex.
struct EdgeImage {
    std::string edge;
    bool reversed = false;
};

struct CellularMap {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::optional<EdgeImage>> edge_map;  // absent value = collapse

    std::vector<std::string> validate(const GraphPair& src, const GraphPair& dst) const;

    static CellularMap identity(const GraphPair& p);
    // src and mid graphs are needed to track orientation signs through edges
    // that become loops along the way.
    static CellularMap compose(const CellularMap& g, const CellularMap& f, const Graph& src,
                               const Graph& mid);
};

// Chain-level data of the relative complex C_*(X)/C_*(Y): canonical edge
// orientation is lexicographic min -> max endpoint; loops contribute zero
// boundary.  Both homology groups are free; bases are deterministic.
struct HomologyData {
    GraphPair pair;
    std::vector<std::string> c1_basis;  // non-Y edges, in X edge order
    std::vector<std::string> c0_basis;  // non-Y vertices, in X vertex order
    IntMat boundary;                    // c0 x c1 relative boundary
    IntMat h1_basis;                    // cycle basis, columns in C1 coordinates
    IntMat h0_coords;                   // C0 -> H0 coordinate rows
    IntMat h0_reps;                     // H0 representatives, columns in C0
    FgAbGroup h1, h0;

    const FgAbGroup& group_in_degree() const { return pair.degree == 1 ? h1 : h0; }
    std::size_t rank_in_degree() const { return group_in_degree().free_rank; }
};

HomologyData relative_homology(const GraphPair& p);

// Chain maps of f on the relative complexes, in the stored bases.
IntMat chain_map_c1(const CellularMap& f, const HomologyData& src, const HomologyData& dst);
IntMat chain_map_c0(const CellularMap& f, const HomologyData& src, const HomologyData& dst);

// f_* on the homology bases, in the degree shared by the two pairs.
IntMat induced_map(const CellularMap& f, const HomologyData& src, const HomologyData& dst);

// Snake-lemma boundary H1(X,Y) -> H0(Y,Z) of the triple.
IntMat boundary_map(const GraphTriple& t);

// The six-term sequence of the triple, with exactness verdicts.
struct LesReport {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<IntMat> maps;  // the five matrices, left to right
};

LesReport les_check(const GraphTriple& t);

// Diagram assembly.
struct NamedPair {
    std::string name;
    GraphPair pair;
};

struct NamedMap {
    std::string id, src, dst;  // pair names, equal degree
    CellularMap map;
};

// A δ-arrow: from (X,Y,1) to (Y,Z,0); the destination pair's graph must be
// the materialized Y of the source pair.
struct NamedTriple {
    std::string id, src, dst;
};

struct GraphDiagramResult {
    RepZ rep;
    std::map<std::string, HomologyData> homology;
};

// Build a Diagram + RepZ; each requested coproduct of equal-degree pairs is
// realized as a disjoint union object with its two inclusion arrows.
GraphDiagramResult build_diagram(const std::vector<NamedPair>& pairs,
                                 const std::vector<NamedMap>& maps,
                                 const std::vector<NamedTriple>& triples,
                                 const std::vector<std::pair<std::string, std::string>>&
                                     coproduct_requests = {});

// Degree-0 representation from connected components: the carrier of (X,Y,0)
// is free on the components of X missing Y.  Independent of the chain-level
// route.
RepZ pi0_representation(const std::vector<NamedPair>& pairs, const std::vector<NamedMap>& maps);

// Graph rewriting helpers, each returning the new pair and the comparison map.
struct RewriteResult {
    GraphPair pair;
    CellularMap map;
};

// Collapse a non-loop edge; map goes original -> collapsed.
RewriteResult collapse_edge(const GraphPair& p, const std::string& edge_id);

// Split an edge at a new midpoint vertex; map goes subdivided -> original.
RewriteResult subdivide_edge(const GraphPair& p, const std::string& edge_id,
                             const std::string& mid, const std::string& id1,
                             const std::string& id2);

// Disjoint union with "L:" / "R:" prefixes, plus the two inclusions.
struct DisjointUnionResult {
    GraphPair pair;
    CellularMap left, right;
};

DisjointUnionResult disjoint_union(const GraphPair& a, const GraphPair& b);

}  // namespace diagcat
