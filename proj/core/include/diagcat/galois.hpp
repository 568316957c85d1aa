#pragma once

#include <string>
#include <vector>

#include "diagcat/commutant.hpp"

namespace diagcat {

// A finite group as an explicit multiplication table; table[g][h] = g*h.
struct FiniteGroup {
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;

    std::vector<std::string> validate() const;
    std::size_t inverse(std::size_t g) const;

    // Validates, locates the identity, throws on a non-group table.
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> t);
};

// A left G-set: action[g][x] = g.x.
struct GSet {
    std::size_t size = 0;
    std::vector<std::vector<std::size_t>> action;

    std::vector<std::string> validate(const FiniteGroup& g) const;

    static GSet regular(const FiniteGroup& g);
    static GSet trivial(const FiniteGroup& g, std::size_t m);
};

// R[G]: basis indexed by group elements, structure constants from the table.
template <typename T>
AbstractAlgebra<T> group_algebra(const FiniteGroup& g) {
    AbstractAlgebra<T> a;
    a.dim = g.order;
    a.structure.assign(g.order, std::vector<std::vector<T>>(g.order));
    for (std::size_t i = 0; i < g.order; ++i)
        for (std::size_t j = 0; j < g.order; ++j) {
            std::vector<T> c(g.order, T(0));
            c[g.table[i][j]] = 1;
            a.structure[i][j] = std::move(c);
        }
    a.unit_coords.assign(g.order, T(0));
    a.unit_coords[g.identity] = 1;
    return a;
}

// Permutation matrix of g acting on the set.
template <typename T>
Matrix<T> permutation_matrix(const GSet& s, std::size_t g) {
    Matrix<T> m(s.size, s.size);
    for (std::size_t x = 0; x < s.size; ++x) m(s.action[g][x], x) = 1;
    return m;
}

// The permutation module of a G-set over R[G].
template <typename T>
Module<T> permutation_module(const FiniteGroup& g, const GSet& s) {
    Module<T> m;
    m.gens = s.size;
    m.relations = Matrix<T>(s.size, 0);
    for (std::size_t i = 0; i < g.order; ++i) m.action.push_back(permutation_matrix<T>(s, i));
    return m;
}

// The two-object Galois stage: p_l carries the regular carrier with one loop
// per group element acting by RIGHT multiplication (so the commutant is the
// left action), p_b carries B, and each equivariant map regular -> B becomes
// an arrow.  Optionally a coproduct witness p_sum = p_l ⊔ p_b with its two
// inclusions (and no loops; the summand constraints determine its component).
template <typename T>
Representation<T> build_galois_diagram(const FiniteGroup& g, const GSet& b,
                                       const std::vector<std::vector<std::size_t>>& maps,
                                       bool with_coproduct = false) {
    auto errs = g.validate();
    auto berrs = b.validate(g);
    errs.insert(errs.end(), berrs.begin(), berrs.end());
    if (!errs.empty())
        throw std::invalid_argument("build_galois_diagram: " + errs.front());
    const std::size_t n = g.order, m = b.size;
    for (const auto& phi : maps) {
        if (phi.size() != n) throw std::invalid_argument("build_galois_diagram: map size");
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t a = 0; a < n; ++a)
                if (phi[g.table[h][a]] != b.action[h][phi[a]])
                    throw std::invalid_argument("build_galois_diagram: map not equivariant");
    }
    Representation<T> t;
    t.diagram.objects = {"pl", "pb"};
    t.values["pl"] = n;
    t.values["pb"] = m;
    for (std::size_t i = 0; i < n; ++i) {
        std::string id = "g" + std::to_string(i);
        t.diagram.arrows.push_back(Arrow{id, "pl", "pl"});
        Matrix<T> r(n, n);  // right multiplication: e_h -> e_{h*g_i}
        for (std::size_t h = 0; h < n; ++h) r(g.table[h][i], h) = 1;
        t.matrices[id] = std::move(r);
    }
    for (std::size_t k = 0; k < maps.size(); ++k) {
        std::string id = "f" + std::to_string(k);
        t.diagram.arrows.push_back(Arrow{id, "pl", "pb"});
        Matrix<T> f(m, n);
        for (std::size_t a = 0; a < n; ++a) f(maps[k][a], a) = 1;
        t.matrices[id] = std::move(f);
    }
    if (with_coproduct) {
        t.diagram.objects.push_back("psum");
        t.values["psum"] = n + m;
        Matrix<T> i1(n + m, n), i2(n + m, m);
        for (std::size_t r = 0; r < n; ++r) i1(r, r) = 1;
        for (std::size_t r = 0; r < m; ++r) i2(n + r, r) = 1;
        t.diagram.arrows.push_back(Arrow{"incl1", "pl", "psum"});
        t.diagram.arrows.push_back(Arrow{"incl2", "pb", "psum"});
        t.matrices["incl1"] = std::move(i1);
        t.matrices["incl2"] = std::move(i2);
        t.diagram.coproducts.push_back(CoproductWitness{"pl", "pb", "psum", "incl1", "incl2"});
    }
    t.require_valid();
    return t;
}

// The comparison R[G] -> End(T|_E): g goes to its permutation tuple (the
// supplied G-sets on p_l and p_b, block-diagonal on the witness object).  For
// the stage built from the regular set this is left multiplication on p_l.
template <typename T>
struct GroupAlgebraComparison {
    std::size_t group_order = 0, commutant_dim = 0, image_rank = 0;
    bool injective = false, surjective = false, algebra_hom = false;
    Matrix<T> coords;  // column g: coordinates of g's tuple in the commutant basis
};

template <typename T>
GroupAlgebraComparison<T> compare_with_group_algebra(const EndAlgebra<T>& alg,
                                                     const FiniteGroup& g, const GSet& a,
                                                     const GSet& b) {
    GroupAlgebraComparison<T> r;
    r.group_order = g.order;
    r.commutant_dim = alg.dim();
    std::vector<std::vector<T>> cols;
    for (std::size_t i = 0; i < g.order; ++i) {
        std::vector<Matrix<T>> tuple;
        for (const auto& p : alg.stage.objects) {
            if (p == "pl") {
                tuple.push_back(permutation_matrix<T>(a, i));
            } else if (p == "pb") {
                tuple.push_back(permutation_matrix<T>(b, i));
            } else if (p == "psum") {
                tuple.push_back(Matrix<T>::block_diag(permutation_matrix<T>(a, i),
                                                      permutation_matrix<T>(b, i)));
            } else {
                throw std::invalid_argument("compare_with_group_algebra: foreign stage object " +
                                            p);
            }
        }
        cols.push_back(alg.vectorize_tuple(tuple));
    }
    auto sol = solve_many(alg.basis_matrix(), Matrix<T>::from_columns(alg.tuple_length(), cols));
    if (!sol)
        throw std::logic_error("compare_with_group_algebra: group tuple not in the commutant");
    r.coords = *sol;
    r.image_rank = rank_of(r.coords);
    r.injective = r.image_rank == g.order;
    r.surjective = r.image_rank == alg.dim();
    r.algebra_hom = true;
    for (std::size_t i = 0; i < g.order && r.algebra_hom; ++i)
        for (std::size_t j = 0; j < g.order; ++j)
            if (alg.algebra.multiply(r.coords.column(i), r.coords.column(j)) !=
                r.coords.column(g.table[i][j])) {
                r.algebra_hom = false;
                break;
            }
    return r;
}

}  // namespace diagcat
