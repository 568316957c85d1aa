#pragma once

#include <string>
#include <vector>

#include "diagcat/algebra.hpp"
#include "diagcat/representation.hpp"

namespace diagcat {

// End(T|_E): the algebra of endomorphism tuples (a_p), one square matrix per
// object of the stage, commuting with every arrow matrix.  Over Z the basis
// spans the saturated solution lattice of the commutation system.
template <typename T>
struct EndAlgebra {
    Diagram stage;
    std::vector<std::size_t> ranks;                 // per stage object, in stage order
    std::vector<std::vector<Matrix<T>>> basis;      // basis[i][obj] tuple components
    AbstractAlgebra<T> algebra;                     // structure constants + unit

    std::size_t dim() const { return basis.size(); }

    std::size_t tuple_length() const {
        std::size_t n = 0;
        for (auto r : ranks) n += r * r;
        return n;
    }

    std::vector<T> vectorize_tuple(const std::vector<Matrix<T>>& tuple) const {
        std::vector<T> v;
        v.reserve(tuple_length());
        for (const auto& m : tuple)
            for (const auto& x : m.entries()) v.push_back(x);
        return v;
    }

    // Columns are the vectorized basis tuples.
    Matrix<T> basis_matrix() const {
        std::vector<std::vector<T>> cols;
        for (const auto& b : basis) cols.push_back(vectorize_tuple(b));
        return Matrix<T>::from_columns(tuple_length(), cols);
    }

    std::vector<Matrix<T>> identity_tuple() const {
        std::vector<Matrix<T>> t;
        for (auto r : ranks) t.push_back(Matrix<T>::identity(r));
        return t;
    }

    // Tuple realized by coordinates in the basis.
    std::vector<Matrix<T>> realize(const std::vector<T>& coords) const {
        std::vector<Matrix<T>> t;
        for (std::size_t o = 0; o < ranks.size(); ++o) {
            Matrix<T> m(ranks[o], ranks[o]);
            for (std::size_t i = 0; i < dim(); ++i)
                if (coords[i] != 0) m = m + basis[i][o].scaled(coords[i]);
            t.push_back(std::move(m));
        }
        return t;
    }
};

// T̃(p): the carrier T(p) with the tautological stage action, or any
// End-module carrier arising downstream (then possibly with torsion).
template <typename T>
struct StageModule {
    Diagram stage;
    Module<T> module;
};

namespace detail {

// Rows of the commutation system T(a) a_p - a_q T(a) = 0 in the tuple
// variables, laid out object-by-object in stage order, row-major per object.
template <typename T>
Matrix<T> commutation_system(const Representation<T>& t, const Diagram& e) {
    std::vector<std::size_t> offset(e.objects.size() + 1, 0);
    for (std::size_t o = 0; o < e.objects.size(); ++o) {
        std::size_t r = t.value(e.objects[o]);
        offset[o + 1] = offset[o] + r * r;
    }
    const std::size_t nvars = offset.back();
    std::vector<std::vector<T>> rows;
    for (const auto& a : e.arrows) {
        const Matrix<T>& m = t.matrix(a.id);
        std::size_t po = e.object_index(a.src), qo = e.object_index(a.dst);
        std::size_t np = t.value(a.src), nq = t.value(a.dst);
        for (std::size_t i = 0; i < nq; ++i)
            for (std::size_t j = 0; j < np; ++j) {
                std::vector<T> row(nvars, T(0));
                // (M a_p)(i,j) = sum_k M(i,k) a_p(k,j)
                for (std::size_t k = 0; k < np; ++k)
                    row[offset[po] + k * np + j] += m(i, k);
                // (a_q M)(i,j) = sum_k a_q(i,k) M(k,j)
                for (std::size_t k = 0; k < nq; ++k)
                    row[offset[qo] + i * nq + k] -= m(k, j);
                rows.push_back(std::move(row));
            }
    }
    Matrix<T> sys(rows.size(), nvars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < nvars; ++j) sys(i, j) = rows[i][j];
    return sys;
}

}  // namespace detail

template <typename T>
EndAlgebra<T> compute_end(const Representation<T>& t, const Diagram& e) {
    if (!e.is_subdiagram_of(t.diagram))
        throw std::invalid_argument("compute_end: stage is not a subdiagram");
    EndAlgebra<T> alg;
    alg.stage = e;
    for (const auto& p : e.objects) alg.ranks.push_back(t.value(p));

    Matrix<T> sys = detail::commutation_system(t, e);
    Matrix<T> k = canonical_span(kernel_cols(sys));

    for (std::size_t j = 0; j < k.cols(); ++j) {
        std::vector<T> col = k.column(j);
        std::vector<Matrix<T>> tuple;
        std::size_t at = 0;
        for (auto r : alg.ranks) {
            std::vector<T> block(col.begin() + at, col.begin() + at + r * r);
            tuple.push_back(Matrix<T>(r, r, std::move(block)));
            at += r * r;
        }
        alg.basis.push_back(std::move(tuple));
    }

    // Structure constants and the unit, by exact coordinate solves in the
    // basis; both exist because the lattice is the full (saturated over Z)
    // solution set and is closed under tuple products.  One decomposition of
    // the basis matrix serves all right-hand sides.
    alg.algebra.dim = alg.dim();
    alg.algebra.structure.assign(alg.dim(), std::vector<std::vector<T>>(alg.dim()));
    if (alg.dim()) {
        std::vector<std::vector<T>> rhs;
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                std::vector<Matrix<T>> prod;
                for (std::size_t o = 0; o < alg.ranks.size(); ++o)
                    prod.push_back(alg.basis[i][o] * alg.basis[j][o]);
                rhs.push_back(alg.vectorize_tuple(prod));
            }
        rhs.push_back(alg.vectorize_tuple(alg.identity_tuple()));
        auto sol = solve_many(alg.basis_matrix(),
                              Matrix<T>::from_columns(alg.tuple_length(), rhs));
        if (!sol) throw std::logic_error("compute_end: tuple outside the solution span");
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j)
                alg.algebra.structure[i][j] = sol->column(i * alg.dim() + j);
        alg.algebra.unit_coords = sol->column(alg.dim() * alg.dim());
    }
    return alg;
}

// T̃(p): tautological module of the stage algebra on T(p).
template <typename T>
StageModule<T> module_structure(const Representation<T>& t, const EndAlgebra<T>& alg,
                                const std::string& p) {
    std::size_t o = alg.stage.object_index(p);
    StageModule<T> m;
    m.stage = alg.stage;
    m.module.gens = t.value(p);
    m.module.relations = Matrix<T>(m.module.gens, 0);
    for (const auto& b : alg.basis) m.module.action.push_back(b[o]);
    return m;
}

template <typename T>
StageModule<T> module_structure(const Representation<T>& t, const Diagram& e,
                                const std::string& p) {
    if (!e.has_object(p)) throw std::invalid_argument("module_structure: object not in stage");
    return module_structure(t, compute_end(t, e), p);
}

// The restriction End(T|_E') -> End(T|_E) for E ⊆ E', as a matrix in the two
// bases: drop the tuple components outside E and re-express.
template <typename T>
Matrix<T> restriction_map(const EndAlgebra<T>& sup, const EndAlgebra<T>& sub) {
    if (!sub.stage.is_subdiagram_of(sup.stage))
        throw std::invalid_argument("restriction_map: stages not nested");
    std::vector<std::vector<T>> rhs;
    for (const auto& b : sup.basis) {
        std::vector<Matrix<T>> dropped;
        for (const auto& p : sub.stage.objects) dropped.push_back(b[sup.stage.object_index(p)]);
        rhs.push_back(sub.vectorize_tuple(dropped));
    }
    auto sol = solve_many(sub.basis_matrix(),
                          Matrix<T>::from_columns(sub.tuple_length(), rhs));
    if (!sol) throw std::logic_error("restriction_map: dropped tuple outside the sub-stage span");
    return *sol;
}

// Does every basis action map the span of L (mod carrier relations) into itself?
template <typename T>
bool is_invariant_subspace(const Module<T>& m, const Matrix<T>& l) {
    if (l.cols() != 0 && l.rows() != m.gens)
        throw std::invalid_argument("is_invariant_subspace: generator dimension mismatch");
    Matrix<T> span = l.hstack(m.rel_or_empty());
    for (const auto& a : m.action)
        for (std::size_t j = 0; j < l.cols(); ++j) {
            if (span.cols() == 0) {
                if (a.apply(l.column(j)) != std::vector<T>(m.gens, T(0))) return false;
            } else if (!in_column_span(span, a.apply(l.column(j)))) {
                return false;
            }
        }
    return true;
}

// Same check, reporting an offending (basis index, generator index) pair.
template <typename T>
std::optional<std::pair<std::size_t, std::size_t>> invariance_violation(const Module<T>& m,
                                                                        const Matrix<T>& l) {
    Matrix<T> span = l.hstack(m.rel_or_empty());
    for (std::size_t b = 0; b < m.action.size(); ++b)
        for (std::size_t j = 0; j < l.cols(); ++j) {
            auto img = m.action[b].apply(l.column(j));
            bool ok = span.cols() ? in_column_span(span, img)
                                  : img == std::vector<T>(m.gens, T(0));
            if (!ok) return std::make_pair(b, j);
        }
    return std::nullopt;
}

}  // namespace diagcat
