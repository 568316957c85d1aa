#include "diagcat/json_io.hpp"

#include <limits>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace diagcat::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void schema_error(const std::string& what) {
    throw std::invalid_argument("schema: " + what);
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field ") + key);
    return j.at(key);
}

std::size_t as_size(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        schema_error(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::string as_string(const json& j, const char* what) {
    if (!j.is_string()) schema_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Int int_of(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    schema_error("entry must be an integer or a decimal string");
}

Rat rat_of(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return Rat(j.get<std::string>());
    schema_error("entry must be an integer or a \"p/q\" string");
}

json to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return json(v.convert_to<long long>());
    return json(v.str());
}

json to_json(const Rat& v) {
    if (is_integral(v)) return to_json(to_int(v));
    return json(v.str());
}

template <typename T>
json vector_json(const std::vector<T>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

template <typename T>
json matrix_json(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <typename T, typename Entry>
Matrix<T> matrix_of(const json& j, Entry entry_of) {
    std::size_t r = as_size(field(j, "rows"), "rows");
    std::size_t c = as_size(field(j, "cols"), "cols");
    const json& e = field(j, "entries");
    if (!e.is_array() || e.size() != r) schema_error("entries must have one row per matrix row");
    Matrix<T> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!e[i].is_array() || e[i].size() != c) schema_error("ragged entries row");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = entry_of(e[i][k]);
    }
    return m;
}

IntMat int_matrix_of(const json& j) { return matrix_of<Int>(j, int_of); }
RatMat rat_matrix_of(const json& j) { return matrix_of<Rat>(j, rat_of); }

std::vector<std::string> string_list_of(const json& j, const char* what) {
    if (!j.is_array()) schema_error(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(as_string(x, what));
    return out;
}

json diagram_json(const Diagram& d) {
    json arrows = json::array();
    for (const auto& a : d.arrows)
        arrows.push_back(json{{"id", a.id}, {"src", a.src}, {"dst", a.dst}});
    return json{{"objects", d.objects}, {"arrows", std::move(arrows)}};
}

json group_json(const FgAbGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion) torsion.push_back(to_json(d));
    return json{{"freeRank", g.free_rank}, {"torsion", std::move(torsion)}};
}

template <typename T>
Representation<T> representation_of(const json& j) {
    Representation<T> t;
    t.diagram.objects = string_list_of(field(j, "objects"), "objects");
    const json& arrows = field(j, "arrows");
    if (!arrows.is_array()) schema_error("arrows must be an array");
    for (const auto& a : arrows)
        t.diagram.arrows.push_back(Arrow{as_string(field(a, "id"), "arrow id"),
                                         as_string(field(a, "src"), "arrow src"),
                                         as_string(field(a, "dst"), "arrow dst")});
    const json& values = field(j, "values");
    if (!values.is_object()) schema_error("values must be an object");
    for (const auto& [k, v] : values.items()) t.values[k] = as_size(v, "value");
    const json& matrices = field(j, "matrices");
    if (!matrices.is_object()) schema_error("matrices must be an object");
    for (const auto& [k, v] : matrices.items()) {
        if constexpr (std::is_same_v<T, Int>) t.matrices[k] = int_matrix_of(v);
        else t.matrices[k] = rat_matrix_of(v);
    }
    if (j.contains("coproducts")) {
        for (const auto& c : j.at("coproducts"))
            t.diagram.coproducts.push_back(
                CoproductWitness{as_string(field(c, "p"), "coproduct p"),
                                 as_string(field(c, "q"), "coproduct q"),
                                 as_string(field(c, "sum"), "coproduct sum"),
                                 as_string(field(c, "i"), "coproduct i"),
                                 as_string(field(c, "iPrime"), "coproduct iPrime")});
    }
    auto errs = t.validate();
    if (!errs.empty()) schema_error(errs.front());
    return t;
}

Diagram stage_of(const json& j, const Diagram& ambient) {
    Diagram e;
    e.objects = string_list_of(field(j, "objects"), "stage objects");
    for (const auto& id : string_list_of(field(j, "arrows"), "stage arrows")) {
        const Arrow* a = ambient.find_arrow(id);
        if (!a) schema_error("stage arrow " + id + " not in the diagram");
        e.arrows.push_back(*a);
    }
    return e;
}

Subcomplex subcomplex_of(const json& j) {
    Subcomplex s;
    s.vertices = string_list_of(field(j, "vertices"), "subcomplex vertices");
    s.edges = string_list_of(field(j, "edges"), "subcomplex edges");
    return s;
}

Graph graph_of(const json& j) {
    Graph g;
    g.vertices = string_list_of(field(j, "vertices"), "vertices");
    const json& edges = field(j, "edges");
    if (!edges.is_array()) schema_error("edges must be an array");
    for (const auto& e : edges)
        g.edges.push_back(GraphEdge{as_string(field(e, "id"), "edge id"),
                                    as_string(field(e, "a"), "edge a"),
                                    as_string(field(e, "b"), "edge b")});
    return g;
}

template <typename T>
TargetPresentation<T> target_of(const json& j) {
    auto entry_of = [](const json& e) {
        if constexpr (std::is_same_v<T, Int>) return int_of(e);
        else return rat_of(e);
    };
    TargetPresentation<T> tp;
    const json& alg = field(j, "algebra");
    tp.algebra.dim = as_size(field(alg, "dim"), "algebra dim");
    tp.algebra.structure.assign(
        tp.algebra.dim, std::vector<std::vector<T>>(
                            tp.algebra.dim, std::vector<T>(tp.algebra.dim, T(0))));
    for (const auto& triple : field(alg, "structure")) {
        if (!triple.is_array() || triple.size() != 4)
            schema_error("structure entries must be [i,j,k,c]");
        std::size_t i = as_size(triple[0], "structure i");
        std::size_t jj = as_size(triple[1], "structure j");
        std::size_t k = as_size(triple[2], "structure k");
        if (i >= tp.algebra.dim || jj >= tp.algebra.dim || k >= tp.algebra.dim)
            schema_error("structure index out of range");
        tp.algebra.structure[i][jj][k] = entry_of(triple[3]);
    }
    const json& unit = field(alg, "unit");
    if (!unit.is_array() || unit.size() != tp.algebra.dim)
        schema_error("unit must have dim coordinates");
    for (const auto& c : unit) tp.algebra.unit_coords.push_back(entry_of(c));
    for (const auto& o : field(j, "objects")) {
        Module<T> m;
        m.gens = as_size(field(o, "gens"), "module gens");
        if (o.contains("relations")) {
            if constexpr (std::is_same_v<T, Int>) m.relations = int_matrix_of(o.at("relations"));
            else m.relations = rat_matrix_of(o.at("relations"));
        } else {
            m.relations = Matrix<T>(m.gens, 0);
        }
        for (const auto& a : field(o, "action")) {
            if constexpr (std::is_same_v<T, Int>) m.action.push_back(int_matrix_of(a));
            else m.action.push_back(rat_matrix_of(a));
        }
        tp.objects.push_back(std::move(m));
    }
    const json& s = field(j, "S");
    if (!s.is_object()) schema_error("S must be an object");
    for (const auto& [k, v] : s.items()) {
        std::size_t idx = as_size(v, "S index");
        if (idx >= tp.objects.size()) schema_error("S index out of range");
        tp.S[k] = idx;
    }
    for (const auto& g : field(j, "generators")) {
        std::size_t idx = as_size(g, "generator index");
        if (idx >= tp.objects.size()) schema_error("generator index out of range");
        tp.declared_generators.push_back(idx);
    }
    return tp;
}

template <typename T>
std::vector<TestMap<T>> test_maps_of(const json& j) {
    std::vector<TestMap<T>> out;
    for (const auto& m : field(j, "maps")) {
        TestMap<T> tm;
        tm.p = as_string(field(m, "p"), "map p");
        if constexpr (std::is_same_v<T, Int>) tm.f = int_matrix_of(field(m, "f"));
        else tm.f = rat_matrix_of(field(m, "f"));
        if (m.contains("targetRel")) {
            if constexpr (std::is_same_v<T, Int>) tm.target_rel = int_matrix_of(m.at("targetRel"));
            else tm.target_rel = rat_matrix_of(m.at("targetRel"));
        } else {
            tm.target_rel = Matrix<T>(tm.f.rows(), 0);
        }
        out.push_back(std::move(tm));
    }
    return out;
}

template <typename T>
json end_algebra_json(const EndAlgebra<T>& a) {
    json basis = json::array();
    for (const auto& tuple : a.basis) {
        json t = json::array();
        for (const auto& m : tuple) t.push_back(matrix_json(m));
        basis.push_back(std::move(t));
    }
    json structure = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (a.algebra.structure[i][j][k] != 0)
                    structure.push_back(json::array(
                        {i, j, k, to_json(a.algebra.structure[i][j][k])}));
    return json{{"stage", diagram_json(a.stage)},
                {"dim", a.dim()},
                {"basis", std::move(basis)},
                {"structure", std::move(structure)},
                {"unit", vector_json(a.algebra.unit_coords)}};
}

template <typename T>
json hom_json(const HomResult<T>& h) {
    return json{{"rows", h.rows}, {"cols", h.cols}, {"dim", h.basis.cols()},
                {"group", group_json(h.group)}};
}

template <typename T>
json criterion_json(const CriterionReport<T>& r) {
    json checks = json::array();
    for (const auto& a : r.condition_a) {
        checks.push_back(json{{"condition", "a"},
                              {"p", a.witness.p},
                              {"pPrime", a.witness.p_prime},
                              {"sum", a.witness.sum},
                              {"status", to_string(a.status)},
                              {"determinant", to_json(a.determinant)}});
    }
    for (std::size_t i = 0; i < r.condition_b.size(); ++i) {
        json e{{"condition", "b"}, {"generator", i}, {"status", to_string(r.condition_b[i])}};
        if (r.b_witnesses[i]) e["witness"] = matrix_json(*r.b_witnesses[i]);
        checks.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < r.condition_c.size(); ++i) {
        const auto& c = r.condition_c[i];
        json e{{"condition", "c"}, {"map", i}, {"status", to_string(c.status)},
               {"kernel", matrix_json(c.kernel)}};
        if (c.certificate) {
            e["basisIndex"] = c.certificate->basis_index;
            e["kernelGen"] = vector_json(c.certificate->kernel_vector);
            e["image"] = vector_json(c.certificate->image);
        }
        checks.push_back(std::move(e));
    }
    return json{{"overall", to_string(r.overall)}, {"checks", std::move(checks)}};
}

template <typename T>
json tower_json(const EndTower<T>& t) {
    json dims = json::array();
    for (const auto& a : t.algebras) dims.push_back(a.dim());
    json ranks = json::array();
    for (const auto& row : t.image_ranks) ranks.push_back(row);
    json flags = json::array();
    for (bool b : t.stabilized) flags.push_back(b);
    // first stage from which every later stage's flag holds (1-based)
    json at = nullptr;
    for (std::size_t i = 0; i < t.stabilized.size(); ++i) {
        bool all = true;
        for (std::size_t k = i; k < t.stabilized.size(); ++k) all = all && t.stabilized[k];
        if (all) {
            at = i + 1;
            break;
        }
    }
    return json{{"stages", t.algebras.size()},
                {"dims", std::move(dims)},
                {"imageRanks", std::move(ranks)},
                {"stabilized", std::move(flags)},
                {"stabilizedAtStage", at}};
}

}  // namespace

IntMat read_matrix_z(const std::string& text) { return int_matrix_of(parse(text)); }
RatMat read_matrix_q(const std::string& text) { return rat_matrix_of(parse(text)); }

std::string write_matrix(const IntMat& m) { return dump(matrix_json(m)); }
std::string write_matrix(const RatMat& m) { return dump(matrix_json(m)); }

RepFile read_representation(const std::string& text) {
    json j = parse(text);
    RepFile f;
    std::string ring = j.contains("ring") ? as_string(j.at("ring"), "ring") : "Z";
    if (ring == "Z") {
        f.ring = Ring::Z;
        f.z = representation_of<Int>(j);
    } else if (ring == "Q") {
        f.ring = Ring::Q;
        f.q = representation_of<Rat>(j);
    } else {
        schema_error("ring must be \"Z\" or \"Q\"");
    }
    const Diagram& ambient = f.ring == Ring::Z ? f.z.diagram : f.q.diagram;
    if (j.contains("stages")) {
        if (!j.at("stages").is_object()) schema_error("stages must be an object");
        for (const auto& [name, s] : j.at("stages").items()) {
            Diagram e = stage_of(s, ambient);
            if (!e.is_subdiagram_of(ambient))
                schema_error("stage " + name + " is not a subdiagram");
            f.stages[name] = std::move(e);
        }
    }
    return f;
}

GraphPair read_graph_pair(const std::string& text) {
    json j = parse(text);
    GraphPair p;
    p.x = graph_of(j);
    p.y = j.contains("Y") ? subcomplex_of(j.at("Y")) : Subcomplex{};
    p.degree = j.contains("degree") ? static_cast<int>(as_size(j.at("degree"), "degree")) : 1;
    if (p.degree != 0 && p.degree != 1) schema_error("degree must be 0 or 1");
    auto errs = p.validate();
    if (!errs.empty()) schema_error(errs.front());
    return p;
}

GraphTriple read_graph_triple(const std::string& text) {
    json j = parse(text);
    GraphTriple t;
    t.x = graph_of(j);
    t.y = subcomplex_of(field(j, "Y"));
    t.z = subcomplex_of(field(j, "Z"));
    auto errs = t.validate();
    if (!errs.empty()) schema_error(errs.front());
    return t;
}

GroupFile read_group(const std::string& text) {
    json j = parse(text);
    GroupFile f;
    std::size_t n = as_size(field(j, "order"), "order");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : field(j, "table")) {
        std::vector<std::size_t> r;
        for (const auto& v : row) r.push_back(as_size(v, "table entry"));
        table.push_back(std::move(r));
    }
    f.group = FiniteGroup::from_table(std::move(table));
    if (f.group.order != n) schema_error("order does not match the table");
    if (j.contains("sets")) {
        for (const auto& s : j.at("sets")) {
            GSet g;
            g.size = as_size(field(s, "size"), "set size");
            for (const auto& row : field(s, "action")) {
                std::vector<std::size_t> r;
                for (const auto& v : row) r.push_back(as_size(v, "action entry"));
                g.action.push_back(std::move(r));
            }
            auto errs = g.validate(f.group);
            if (!errs.empty()) schema_error("set: " + errs.front());
            f.sets.push_back(std::move(g));
        }
    }
    return f;
}

SubdiagramChain read_chain(const std::string& text, const Diagram& ambient) {
    json j = parse(text);
    SubdiagramChain c;
    for (const auto& s : field(j, "stages")) c.stages.push_back(stage_of(s, ambient));
    auto errs = c.validate(ambient);
    if (!errs.empty()) schema_error(errs.front());
    return c;
}

TargetPresentation<Int> read_target_z(const std::string& text) {
    return target_of<Int>(parse(text));
}
TargetPresentation<Rat> read_target_q(const std::string& text) {
    return target_of<Rat>(parse(text));
}

std::vector<TestMap<Int>> read_test_maps_z(const std::string& text) {
    return test_maps_of<Int>(parse(text));
}
std::vector<TestMap<Rat>> read_test_maps_q(const std::string& text) {
    return test_maps_of<Rat>(parse(text));
}

std::string write_smith(const SmithDecomposition& s) {
    json diag = json::array();
    for (const auto& d : s.diagonal()) diag.push_back(to_json(d));
    return dump(json{{"U", matrix_json(s.U)},
                     {"S", matrix_json(s.S)},
                     {"V", matrix_json(s.V)},
                     {"rank", s.rank},
                     {"diagonal", std::move(diag)}});
}

std::string write_group(const FgAbGroup& g) { return dump(group_json(g)); }

std::string write_end_algebra(const EndAlgebra<Int>& a) { return dump(end_algebra_json(a)); }
std::string write_end_algebra(const EndAlgebra<Rat>& a) { return dump(end_algebra_json(a)); }

std::string write_hom(const HomResult<Int>& h) { return dump(hom_json(h)); }
std::string write_hom(const HomResult<Rat>& h) { return dump(hom_json(h)); }

std::string write_homology(const HomologyData& h) {
    return dump(json{{"degree", h.pair.degree},
                     {"H0", group_json(h.h0)},
                     {"H1", group_json(h.h1)},
                     {"boundary", matrix_json(h.boundary)},
                     {"c0Basis", h.c0_basis},
                     {"c1Basis", h.c1_basis}});
}

std::string write_les(const LesReport& r) {
    json maps = json::array();
    for (const auto& m : r.maps) maps.push_back(matrix_json(m));
    return dump(json{{"pass", r.pass}, {"failures", r.failures}, {"maps", std::move(maps)}});
}

std::string write_criterion(const CriterionReport<Int>& r) { return dump(criterion_json(r)); }
std::string write_criterion(const CriterionReport<Rat>& r) { return dump(criterion_json(r)); }

std::string write_tower(const EndTower<Int>& t) { return dump(tower_json(t)); }
std::string write_tower(const EndTower<Rat>& t) { return dump(tower_json(t)); }

}  // namespace diagcat::io
