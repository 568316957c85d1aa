#pragma once

#include <map>
#include <string>
#include <vector>

#include "diagcat/criterion.hpp"
#include "diagcat/galois.hpp"
#include "diagcat/graph.hpp"
#include "diagcat/snf.hpp"

// JSON readers and writers for the file formats consumed and produced by the
// command-line tool.  Readers throw std::runtime_error with a position
// diagnostic on malformed JSON and std::invalid_argument on schema errors.
// Writers emit deterministic text: sorted keys, fixed indentation, entries as
// numbers when they fit in 64 bits and decimal strings otherwise (rationals as
// "p/q" strings when not integral).

namespace diagcat::io {

// {"rows": r, "cols": c, "entries": [[...], ...]}
IntMat read_matrix_z(const std::string& text);
RatMat read_matrix_q(const std::string& text);
std::string write_matrix(const IntMat& m);
std::string write_matrix(const RatMat& m);

// {"objects": [...], "arrows": [{"id","src","dst"}], "ring": "Z"|"Q",
//  "values": {obj: rank}, "matrices": {arrowId: matrix},
//  "coproducts": [{"p","q","sum","i","iPrime"}],
//  "stages": {name: {"objects": [...], "arrows": [arrowId, ...]}}}   (optional)
struct RepFile {
    Ring ring = Ring::Z;
    RepZ z;                                 // filled when ring == Z
    RepQ q;                                 // filled when ring == Q
    std::map<std::string, Diagram> stages;  // named subdiagrams, if declared
};
RepFile read_representation(const std::string& text);

// {"vertices": [...], "edges": [{"id","a","b"}],
//  "Y": {"vertices": [...], "edges": [...]}, "degree": 0|1}
GraphPair read_graph_pair(const std::string& text);

// Same with an additional "Z" subcomplex; degree is ignored.
GraphTriple read_graph_triple(const std::string& text);

// {"order": n, "table": [[...]], "sets": [{"size": m, "action": [[...]]}]}
struct GroupFile {
    FiniteGroup group;
    std::vector<GSet> sets;
};
GroupFile read_group(const std::string& text);

// {"stages": [{"objects": [...], "arrows": [arrowId, ...]}, ...]};
// arrow endpoints are resolved against the ambient diagram.
SubdiagramChain read_chain(const std::string& text, const Diagram& ambient);

// {"algebra": {"dim": d, "structure": [[i,j,k,c], ...], "unit": [...]},
//  "objects": [{"gens": n, "relations": matrix, "action": [matrix, ...]}],
//  "S": {obj: index}, "generators": [index, ...]}
TargetPresentation<Int> read_target_z(const std::string& text);
TargetPresentation<Rat> read_target_q(const std::string& text);

// {"maps": [{"p": obj, "f": matrix, "targetRel": matrix}]}; targetRel optional.
std::vector<TestMap<Int>> read_test_maps_z(const std::string& text);
std::vector<TestMap<Rat>> read_test_maps_q(const std::string& text);

std::string write_smith(const SmithDecomposition& s);
std::string write_group(const FgAbGroup& g);

// {"stage": {...}, "dim": d, "basis": [[matrix, ...], ...],
//  "structure": [[i,j,k,c], ...], "unit": [...]}
std::string write_end_algebra(const EndAlgebra<Int>& a);
std::string write_end_algebra(const EndAlgebra<Rat>& a);

// {"rows", "cols", "dim", "group"} of a hom computation.
std::string write_hom(const HomResult<Int>& h);
std::string write_hom(const HomResult<Rat>& h);

std::string write_homology(const HomologyData& h);
std::string write_les(const LesReport& r);

// Entries carry {"condition": "a"|"b"|"c", "status": ...} plus certificates.
std::string write_criterion(const CriterionReport<Int>& r);
std::string write_criterion(const CriterionReport<Rat>& r);

std::string write_tower(const EndTower<Int>& t);
std::string write_tower(const EndTower<Rat>& t);

}  // namespace diagcat::io
