#include "diagcat/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "diagcat/snf.hpp"

namespace diagcat {

namespace {

bool in_list(const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

// canonical orientation: lexicographic min -> max; loops keep their vertex
std::pair<std::string, std::string> oriented(const GraphEdge& e) {
    return e.a <= e.b ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a);
}

template <typename V>
std::map<std::string, std::size_t> index_of(const std::vector<V>& names) {
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < names.size(); ++i) m[names[i]] = i;
    return m;
}

void require_valid(const std::vector<std::string>& errs, const std::string& what) {
    if (!errs.empty()) throw std::invalid_argument(what + ": " + errs.front());
}

// sign of an edge image relative to canonical orientations; +1/-1, with the
// reversed flag deciding for loop images
int image_sign(const CellularMap& f, const GraphEdge& src_edge, const GraphEdge& img_edge,
               bool reversed) {
    if (img_edge.a == img_edge.b) return reversed ? -1 : 1;
    auto [u, v] = oriented(src_edge);
    (void)v;
    return f.vertex_map.at(u) == oriented(img_edge).first ? 1 : -1;
}

}  // namespace

bool Graph::has_vertex(const std::string& v) const { return in_list(vertices, v); }

const GraphEdge* Graph::find_edge(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

std::vector<std::string> Graph::validate() const {
    std::vector<std::string> errs;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j]) errs.push_back("duplicate vertex " + vertices[i]);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i].id == edges[j].id) errs.push_back("duplicate edge id " + edges[i].id);
    for (const auto& e : edges) {
        if (!has_vertex(e.a)) errs.push_back("edge " + e.id + ": unknown endpoint " + e.a);
        if (!has_vertex(e.b)) errs.push_back("edge " + e.id + ": unknown endpoint " + e.b);
    }
    return errs;
}

bool Subcomplex::has_vertex(const std::string& v) const { return in_list(vertices, v); }
bool Subcomplex::has_edge(const std::string& id) const { return in_list(edges, id); }

bool Subcomplex::contains(const Subcomplex& other) const {
    for (const auto& v : other.vertices)
        if (!has_vertex(v)) return false;
    for (const auto& e : other.edges)
        if (!has_edge(e)) return false;
    return true;
}

Graph subgraph(const Graph& g, const Subcomplex& s) {
    Graph out;
    for (const auto& v : g.vertices)
        if (s.has_vertex(v)) out.vertices.push_back(v);
    for (const auto& e : g.edges)
        if (s.has_edge(e.id)) out.edges.push_back(e);
    return out;
}

std::vector<std::string> GraphPair::validate() const {
    std::vector<std::string> errs = x.validate();
    if (degree != 0 && degree != 1) errs.push_back("degree must be 0 or 1");
    for (const auto& v : y.vertices)
        if (!x.has_vertex(v)) errs.push_back("Y vertex " + v + " not in X");
    for (const auto& id : y.edges) {
        const GraphEdge* e = x.find_edge(id);
        if (!e) {
            errs.push_back("Y edge " + id + " not in X");
            continue;
        }
        if (!y.has_vertex(e->a) || !y.has_vertex(e->b))
            errs.push_back("Y not closed under incidence at edge " + id);
    }
    return errs;
}

std::vector<std::string> GraphTriple::validate() const {
    GraphPair xy{x, y, 1};
    std::vector<std::string> errs = xy.validate();
    if (!y.contains(z)) errs.push_back("Z is not contained in Y");
    for (const auto& id : z.edges) {
        const GraphEdge* e = x.find_edge(id);
        if (e && (!z.has_vertex(e->a) || !z.has_vertex(e->b)))
            errs.push_back("Z not closed under incidence at edge " + id);
    }
    return errs;
}

std::vector<std::string> CellularMap::validate(const GraphPair& src, const GraphPair& dst) const {
    std::vector<std::string> errs;
    if (src.degree != dst.degree) errs.push_back("degree mismatch");
    for (const auto& v : src.x.vertices) {
        auto it = vertex_map.find(v);
        if (it == vertex_map.end()) {
            errs.push_back("vertex " + v + " has no image");
            continue;
        }
        if (!dst.x.has_vertex(it->second))
            errs.push_back("vertex " + v + " maps outside the target");
        else if (src.y.has_vertex(v) && !dst.y.has_vertex(it->second))
            errs.push_back("vertex " + v + " leaves Y");
    }
    if (!errs.empty()) return errs;
    for (const auto& e : src.x.edges) {
        auto it = edge_map.find(e.id);
        if (it == edge_map.end()) {
            errs.push_back("edge " + e.id + " has no assignment");
            continue;
        }
        const std::string fa = vertex_map.at(e.a), fb = vertex_map.at(e.b);
        if (!it->second.has_value()) {
            if (fa != fb) errs.push_back("edge " + e.id + " collapses with distinct endpoints");
            continue;
        }
        const GraphEdge* img = dst.x.find_edge(it->second->edge);
        if (!img) {
            errs.push_back("edge " + e.id + " maps to unknown edge " + it->second->edge);
            continue;
        }
        bool compatible = (fa == img->a && fb == img->b) || (fa == img->b && fb == img->a);
        if (!compatible) errs.push_back("edge " + e.id + " breaks incidence");
        if (src.y.has_edge(e.id) && !dst.y.has_edge(img->id))
            errs.push_back("edge " + e.id + " leaves Y");
    }
    return errs;
}

CellularMap CellularMap::identity(const GraphPair& p) {
    CellularMap f;
    for (const auto& v : p.x.vertices) f.vertex_map[v] = v;
    for (const auto& e : p.x.edges) f.edge_map[e.id] = EdgeImage{e.id, false};
    return f;
}

CellularMap CellularMap::compose(const CellularMap& g, const CellularMap& f, const Graph& src,
                                 const Graph& mid) {
    CellularMap h;
    for (const auto& [v, w] : f.vertex_map) h.vertex_map[v] = g.vertex_map.at(w);
    for (const auto& [id, img] : f.edge_map) {
        if (!img) {
            h.edge_map[id] = std::nullopt;
            continue;
        }
        const auto& img2 = g.edge_map.at(img->edge);
        if (!img2) {
            h.edge_map[id] = std::nullopt;
            continue;
        }
        // combined sign; only consulted when the final image is a loop, but
        // always computed so orientation survives edges turning into loops
        int s1 = image_sign(f, *src.find_edge(id), *mid.find_edge(img->edge), img->reversed);
        int s2 = img2->reversed ? -1 : 1;
        h.edge_map[id] = EdgeImage{img2->edge, s1 * s2 < 0};
    }
    return h;
}

HomologyData relative_homology(const GraphPair& p) {
    require_valid(p.validate(), "relative_homology");
    HomologyData h;
    h.pair = p;
    for (const auto& v : p.x.vertices)
        if (!p.y.has_vertex(v)) h.c0_basis.push_back(v);
    for (const auto& e : p.x.edges)
        if (!p.y.has_edge(e.id)) h.c1_basis.push_back(e.id);
    auto vidx = index_of(h.c0_basis);
    h.boundary = IntMat(h.c0_basis.size(), h.c1_basis.size());
    for (std::size_t j = 0; j < h.c1_basis.size(); ++j) {
        const GraphEdge& e = *p.x.find_edge(h.c1_basis[j]);
        if (e.a == e.b) continue;  // loops have zero boundary
        auto [tail, head] = oriented(e);
        if (auto it = vidx.find(head); it != vidx.end()) h.boundary(it->second, j) += 1;
        if (auto it = vidx.find(tail); it != vidx.end()) h.boundary(it->second, j) -= 1;
    }
    h.h1_basis = kernel_lattice(h.boundary);
    h.h1 = FgAbGroup::free(h.h1_basis.cols());
    auto d = smith_normal_form(h.boundary);
    for (std::size_t i = 0; i < d.rank; ++i)
        if (d.S(i, i) != 1)
            throw std::logic_error("relative_homology: unexpected torsion in H0");
    const std::size_t m = h.c0_basis.size();
    IntMat uinv = inverse_unimodular(d.U);
    h.h0_coords = IntMat(m - d.rank, m);
    h.h0_reps = IntMat(m, m - d.rank);
    for (std::size_t i = 0; i < m - d.rank; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            h.h0_coords(i, j) = d.U(d.rank + i, j);
            h.h0_reps(j, i) = uinv(j, d.rank + i);
        }
    h.h0 = FgAbGroup::free(m - d.rank);
    return h;
}

IntMat chain_map_c1(const CellularMap& f, const HomologyData& src, const HomologyData& dst) {
    auto didx = index_of(dst.c1_basis);
    IntMat m(dst.c1_basis.size(), src.c1_basis.size());
    for (std::size_t j = 0; j < src.c1_basis.size(); ++j) {
        const GraphEdge& e = *src.pair.x.find_edge(src.c1_basis[j]);
        const auto& img = f.edge_map.at(e.id);
        if (!img) continue;
        auto it = didx.find(img->edge);
        if (it == didx.end()) continue;  // lands in Y'
        const GraphEdge& ie = *dst.pair.x.find_edge(img->edge);
        m(it->second, j) = image_sign(f, e, ie, img->reversed);
    }
    return m;
}

IntMat chain_map_c0(const CellularMap& f, const HomologyData& src, const HomologyData& dst) {
    auto didx = index_of(dst.c0_basis);
    IntMat m(dst.c0_basis.size(), src.c0_basis.size());
    for (std::size_t j = 0; j < src.c0_basis.size(); ++j) {
        auto it = didx.find(f.vertex_map.at(src.c0_basis[j]));
        if (it != didx.end()) m(it->second, j) = 1;
    }
    return m;
}

IntMat induced_map(const CellularMap& f, const HomologyData& src, const HomologyData& dst) {
    if (src.pair.degree != dst.pair.degree)
        throw std::invalid_argument("induced_map: degree mismatch");
    require_valid(f.validate(src.pair, dst.pair), "induced_map");
    if (src.pair.degree == 0)
        return dst.h0_coords * chain_map_c0(f, src, dst) * src.h0_reps;
    IntMat img = chain_map_c1(f, src, dst) * src.h1_basis;
    if (dst.h1_basis.cols() == 0) {
        if (!img.is_zero()) throw std::logic_error("induced_map: image cycle missed the basis");
        return IntMat(0, src.h1_basis.cols());
    }
    auto sol = solve_many_int(dst.h1_basis, img);
    if (!sol) throw std::logic_error("induced_map: image cycle missed the basis");
    return *sol;
}

IntMat boundary_map(const GraphTriple& t) {
    require_valid(t.validate(), "boundary_map");
    HomologyData top = relative_homology(GraphPair{t.x, t.y, 1});
    HomologyData bot = relative_homology(GraphPair{subgraph(t.x, t.y), t.z, 0});
    auto all_v = index_of(t.x.vertices);
    auto c1idx = index_of(top.c1_basis);
    IntMat out(bot.h0_coords.rows(), top.h1_basis.cols());
    for (std::size_t j = 0; j < top.h1_basis.cols(); ++j) {
        // lift the relative cycle to C1(X) (zero on Y edges), apply the full
        // boundary, land in C0(Y), read off H0(Y,Z) coordinates
        std::vector<Int> d0(t.x.vertices.size(), Int(0));
        for (const auto& e : t.x.edges) {
            auto it = c1idx.find(e.id);
            if (it == c1idx.end() || e.a == e.b) continue;
            const Int& c = top.h1_basis(it->second, j);
            if (c == 0) continue;
            auto [tail, head] = oriented(e);
            d0[all_v.at(head)] += c;
            d0[all_v.at(tail)] -= c;
        }
        std::vector<Int> proj(bot.c0_basis.size());
        for (std::size_t i = 0; i < t.x.vertices.size(); ++i) {
            const std::string& v = t.x.vertices[i];
            bool in_y = t.y.has_vertex(v);
            if (!in_y && d0[i] != 0)
                throw std::logic_error("boundary_map: lift boundary escapes Y");
            if (d0[i] == 0) continue;
            for (std::size_t k = 0; k < bot.c0_basis.size(); ++k)
                if (bot.c0_basis[k] == v) proj[k] = d0[i];
        }
        auto coords = bot.h0_coords.apply(proj);
        for (std::size_t i = 0; i < coords.size(); ++i) out(i, j) = coords[i];
    }
    return out;
}

LesReport les_check(const GraphTriple& t) {
    require_valid(t.validate(), "les_check");
    Graph yg = subgraph(t.x, t.y);
    HomologyData yz1 = relative_homology(GraphPair{yg, t.z, 1});
    HomologyData xz1 = relative_homology(GraphPair{t.x, t.z, 1});
    HomologyData xy1 = relative_homology(GraphPair{t.x, t.y, 1});
    HomologyData yz0 = relative_homology(GraphPair{yg, t.z, 0});
    HomologyData xz0 = relative_homology(GraphPair{t.x, t.z, 0});
    HomologyData xy0 = relative_homology(GraphPair{t.x, t.y, 0});

    CellularMap incl;
    for (const auto& v : yg.vertices) incl.vertex_map[v] = v;
    for (const auto& e : yg.edges) incl.edge_map[e.id] = EdgeImage{e.id, false};
    CellularMap idx = CellularMap::identity(GraphPair{t.x, t.z, 1});

    LesReport r;
    r.maps.push_back(induced_map(incl, yz1, xz1));
    r.maps.push_back(induced_map(idx, xz1, xy1));
    r.maps.push_back(boundary_map(t));
    r.maps.push_back(induced_map(incl, yz0, xz0));
    r.maps.push_back(induced_map(idx, xz0, xy0));

    static const char* nodes[] = {"H1(X,Z)", "H1(X,Y)", "H0(Y,Z)", "H0(X,Z)"};
    for (std::size_t i = 0; i + 1 < r.maps.size(); ++i) {
        if (hnf_columns(r.maps[i]) != kernel_lattice(r.maps[i + 1])) {
            r.pass = false;
            r.failures.push_back(std::string("not exact at ") + nodes[i]);
        }
    }
    if (!cokernel(r.maps.back()).is_trivial()) {
        r.pass = false;
        r.failures.push_back("H0(X,Z) -> H0(X,Y) not surjective");
    }
    return r;
}

DisjointUnionResult disjoint_union(const GraphPair& a, const GraphPair& b) {
    if (a.degree != b.degree) throw std::invalid_argument("disjoint_union: degree mismatch");
    DisjointUnionResult r;
    r.pair.degree = a.degree;
    auto add = [&](const GraphPair& p, const std::string& pre, CellularMap& inc) {
        for (const auto& v : p.x.vertices) {
            r.pair.x.vertices.push_back(pre + v);
            inc.vertex_map[v] = pre + v;
        }
        for (const auto& e : p.x.edges) {
            r.pair.x.edges.push_back(GraphEdge{pre + e.id, pre + e.a, pre + e.b});
            inc.edge_map[e.id] = EdgeImage{pre + e.id, false};
        }
        for (const auto& v : p.y.vertices) r.pair.y.vertices.push_back(pre + v);
        for (const auto& e : p.y.edges) r.pair.y.edges.push_back(pre + e);
    };
    add(a, "L:", r.left);
    add(b, "R:", r.right);
    return r;
}

RewriteResult collapse_edge(const GraphPair& p, const std::string& edge_id) {
    const GraphEdge* e = p.x.find_edge(edge_id);
    if (!e) throw std::invalid_argument("collapse_edge: unknown edge");
    if (e->a == e->b) throw std::invalid_argument("collapse_edge: cannot collapse a loop");
    const std::string keep = std::min(e->a, e->b), gone = std::max(e->a, e->b);
    auto move = [&](const std::string& v) { return v == gone ? keep : v; };
    RewriteResult r;
    r.pair.degree = p.degree;
    for (const auto& v : p.x.vertices)
        if (v != gone) r.pair.x.vertices.push_back(v);
    for (const auto& ed : p.x.edges)
        if (ed.id != edge_id)
            r.pair.x.edges.push_back(GraphEdge{ed.id, move(ed.a), move(ed.b)});
    for (const auto& v : p.y.vertices)
        if (!in_list(r.pair.y.vertices, move(v))) r.pair.y.vertices.push_back(move(v));
    for (const auto& id : p.y.edges)
        if (id != edge_id) r.pair.y.edges.push_back(id);
    for (const auto& v : p.x.vertices) r.map.vertex_map[v] = move(v);
    for (const auto& ed : p.x.edges)
        r.map.edge_map[ed.id] =
            ed.id == edge_id ? std::optional<EdgeImage>() : EdgeImage{ed.id, false};
    return r;
}

RewriteResult subdivide_edge(const GraphPair& p, const std::string& edge_id,
                             const std::string& mid, const std::string& id1,
                             const std::string& id2) {
    const GraphEdge* e = p.x.find_edge(edge_id);
    if (!e) throw std::invalid_argument("subdivide_edge: unknown edge");
    if (p.x.has_vertex(mid) || p.x.find_edge(id1) || p.x.find_edge(id2))
        throw std::invalid_argument("subdivide_edge: name clash");
    RewriteResult r;
    r.pair.degree = p.degree;
    r.pair.x.vertices = p.x.vertices;
    r.pair.x.vertices.push_back(mid);
    for (const auto& ed : p.x.edges) {
        if (ed.id != edge_id) {
            r.pair.x.edges.push_back(ed);
        } else {
            r.pair.x.edges.push_back(GraphEdge{id1, ed.a, mid});
            r.pair.x.edges.push_back(GraphEdge{id2, mid, ed.b});
        }
    }
    r.pair.y = p.y;
    if (p.y.has_edge(edge_id)) {
        r.pair.y.vertices.push_back(mid);
        r.pair.y.edges.erase(
            std::find(r.pair.y.edges.begin(), r.pair.y.edges.end(), edge_id));
        r.pair.y.edges.push_back(id1);
        r.pair.y.edges.push_back(id2);
    }
    // comparison map: subdivided -> original, first half onto the edge,
    // second half collapsed at b
    for (const auto& v : p.x.vertices) r.map.vertex_map[v] = v;
    r.map.vertex_map[mid] = e->b;
    for (const auto& ed : p.x.edges)
        if (ed.id != edge_id) r.map.edge_map[ed.id] = EdgeImage{ed.id, false};
    r.map.edge_map[id1] = EdgeImage{edge_id, false};
    r.map.edge_map[id2] = std::nullopt;
    return r;
}

GraphDiagramResult build_diagram(const std::vector<NamedPair>& pairs,
                                 const std::vector<NamedMap>& maps,
                                 const std::vector<NamedTriple>& triples,
                                 const std::vector<std::pair<std::string, std::string>>&
                                     coproduct_requests) {
    std::vector<NamedPair> all = pairs;
    auto find_pair = [&](const std::string& name) -> const NamedPair& {
        for (const auto& np : all)
            if (np.name == name) return np;
        throw std::invalid_argument("build_diagram: unknown pair " + name);
    };

    GraphDiagramResult out;
    std::vector<std::tuple<std::string, std::string, std::string, CellularMap, CellularMap>>
        incls;
    for (const auto& [pa, pb] : coproduct_requests) {
        const NamedPair& a = find_pair(pa);
        const NamedPair& b = find_pair(pb);
        auto du = disjoint_union(a.pair, b.pair);
        std::string name = pa + "+" + pb;
        all.push_back(NamedPair{name, du.pair});
        incls.emplace_back(pa, pb, name, du.left, du.right);
        out.rep.diagram.coproducts.push_back(
            CoproductWitness{pa, pb, name, "i1:" + name, "i2:" + name});
    }

    for (const auto& np : all) {
        require_valid(np.pair.validate(), "build_diagram: pair " + np.name);
        out.homology.emplace(np.name, relative_homology(np.pair));
        out.rep.diagram.objects.push_back(np.name);
        out.rep.values[np.name] = out.homology.at(np.name).rank_in_degree();
    }

    auto add_arrow = [&](const std::string& id, const std::string& src, const std::string& dst,
                         IntMat m) {
        out.rep.diagram.arrows.push_back(Arrow{id, src, dst});
        out.rep.matrices[id] = std::move(m);
    };
    for (const auto& [pa, pb, name, li, ri] : incls) {
        add_arrow("i1:" + name, pa, name,
                  induced_map(li, out.homology.at(pa), out.homology.at(name)));
        add_arrow("i2:" + name, pb, name,
                  induced_map(ri, out.homology.at(pb), out.homology.at(name)));
    }
    for (const auto& nm : maps) {
        const HomologyData& s = out.homology.at(find_pair(nm.src).name);
        const HomologyData& d = out.homology.at(find_pair(nm.dst).name);
        add_arrow(nm.id, nm.src, nm.dst, induced_map(nm.map, s, d));
    }
    for (const auto& nt : triples) {
        const NamedPair& s = find_pair(nt.src);
        const NamedPair& d = find_pair(nt.dst);
        if (s.pair.degree != 1 || d.pair.degree != 0)
            throw std::invalid_argument("build_diagram: triple " + nt.id +
                                        " must go from degree 1 to degree 0");
        Graph yg = subgraph(s.pair.x, s.pair.y);
        const Graph& dg = d.pair.x;
        bool same = yg.vertices == dg.vertices && yg.edges.size() == dg.edges.size();
        for (std::size_t i = 0; same && i < yg.edges.size(); ++i)
            same = yg.edges[i].id == dg.edges[i].id && yg.edges[i].a == dg.edges[i].a &&
                   yg.edges[i].b == dg.edges[i].b;
        if (!same)
            throw std::invalid_argument("build_diagram: triple " + nt.id +
                                        " target is not the source's Y");
        GraphTriple tr{s.pair.x, s.pair.y, d.pair.y};
        require_valid(tr.validate(), "build_diagram: triple " + nt.id);
        add_arrow(nt.id, nt.src, nt.dst, boundary_map(tr));
    }
    require_valid(out.rep.validate(), "build_diagram");
    return out;
}

namespace {

// components of a graph, each the sorted list of member vertex indices
std::vector<std::size_t> component_ids(const Graph& g) {
    std::vector<std::size_t> parent(g.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    auto vidx = index_of(g.vertices);
    for (const auto& e : g.edges) parent[find(vidx.at(e.a))] = find(vidx.at(e.b));
    std::vector<std::size_t> id(g.vertices.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = find(i);
    return id;
}

}  // namespace

RepZ pi0_representation(const std::vector<NamedPair>& pairs, const std::vector<NamedMap>& maps) {
    RepZ rep;
    struct Pi0Data {
        GraphPair pair;
        std::vector<std::size_t> comp;          // vertex -> component root
        std::vector<std::size_t> free_roots;    // roots missing Y, in vertex order
        std::map<std::size_t, std::size_t> col; // root -> basis index
    };
    std::map<std::string, Pi0Data> data;
    for (const auto& np : pairs) {
        if (np.pair.degree != 0)
            throw std::invalid_argument("pi0_representation: pair " + np.name +
                                        " has degree 1");
        require_valid(np.pair.validate(), "pi0_representation: pair " + np.name);
        Pi0Data d;
        d.pair = np.pair;
        d.comp = component_ids(np.pair.x);
        std::vector<bool> meets_y(d.comp.size(), false);
        for (std::size_t i = 0; i < np.pair.x.vertices.size(); ++i)
            if (np.pair.y.has_vertex(np.pair.x.vertices[i])) meets_y[d.comp[i]] = true;
        for (std::size_t i = 0; i < d.comp.size(); ++i)
            if (d.comp[i] == i && !meets_y[i]) {
                d.col[i] = d.free_roots.size();
                d.free_roots.push_back(i);
            }
        rep.diagram.objects.push_back(np.name);
        rep.values[np.name] = d.free_roots.size();
        data.emplace(np.name, std::move(d));
    }
    for (const auto& nm : maps) {
        const Pi0Data& s = data.at(nm.src);
        const Pi0Data& d = data.at(nm.dst);
        require_valid(nm.map.validate(s.pair, d.pair), "pi0_representation: map " + nm.id);
        auto didx = index_of(d.pair.x.vertices);
        IntMat m(d.free_roots.size(), s.free_roots.size());
        for (std::size_t j = 0; j < s.free_roots.size(); ++j) {
            const std::string& v = s.pair.x.vertices[s.free_roots[j]];
            std::size_t root = d.comp[didx.at(nm.map.vertex_map.at(v))];
            if (auto it = d.col.find(root); it != d.col.end()) m(it->second, j) = 1;
        }
        rep.diagram.arrows.push_back(Arrow{nm.id, nm.src, nm.dst});
        rep.matrices[nm.id] = std::move(m);
    }
    require_valid(rep.validate(), "pi0_representation");
    return rep;
}

}  // namespace diagcat
