#pragma once

#include <vector>

#include "diagcat/matrix.hpp"
#include "diagcat/snf.hpp"

namespace diagcat {

// A finite-dimensional associative unital algebra given by structure
// constants: b_i * b_j = sum_k c[i][j][k] b_k.
template <typename T>
struct AbstractAlgebra {
    std::size_t dim = 0;
    std::vector<std::vector<std::vector<T>>> structure;  // [i][j] -> coords
    std::vector<T> unit_coords;

    std::vector<T> multiply(const std::vector<T>& x, const std::vector<T>& y) const {
        std::vector<T> r(dim, T(0));
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (y[j] == 0) continue;
                const T xy = x[i] * y[j];
                for (std::size_t k = 0; k < dim; ++k) r[k] += xy * structure[i][j][k];
            }
        }
        return r;
    }

    bool is_associative() const {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) {
                    std::vector<T> ei(dim, T(0)), ej(dim, T(0)), ek(dim, T(0));
                    ei[i] = 1;
                    ej[j] = 1;
                    ek[k] = 1;
                    if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek)))
                        return false;
                }
        return true;
    }

    bool is_unital() const {
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<T> ei(dim, T(0));
            ei[i] = 1;
            if (multiply(unit_coords, ei) != ei || multiply(ei, unit_coords) != ei) return false;
        }
        return true;
    }
};

// A module over an AbstractAlgebra, on a presented carrier
// R^gens / column-span(relations); relations empty means a free carrier.
// action[i] is the matrix of basis element b_i on generators.
template <typename T>
struct Module {
    std::size_t gens = 0;
    Matrix<T> relations;  // gens x k
    std::vector<Matrix<T>> action;

    Matrix<T> rel_or_empty() const {
        return relations.cols() ? relations : Matrix<T>(gens, 0);
    }

    // Congruence modulo the relation span, columnwise.
    bool congruent(const Matrix<T>& a, const Matrix<T>& b) const {
        Matrix<T> d = a - b;
        if (relations.cols() == 0) return d.is_zero();
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!in_column_span(relations, d.column(j))) return false;
        return true;
    }

    // action matrices map the relation lattice into itself and realize the
    // structure constants on the carrier.
    std::vector<std::string> verify(const AbstractAlgebra<T>& alg) const {
        std::vector<std::string> errs;
        if (action.size() != alg.dim) {
            errs.push_back("module: action count != algebra dim");
            return errs;
        }
        for (std::size_t i = 0; i < action.size(); ++i) {
            if (action[i].rows() != gens || action[i].cols() != gens) {
                errs.push_back("module: action " + std::to_string(i) + " has wrong shape");
                return errs;
            }
            if (relations.cols() && !congruent(action[i] * relations, Matrix<T>(gens, relations.cols())))
                errs.push_back("module: action " + std::to_string(i) + " breaks relations");
        }
        Matrix<T> unit(gens, gens);
        for (std::size_t k = 0; k < alg.dim; ++k)
            if (alg.unit_coords[k] != 0) unit = unit + action[k].scaled(alg.unit_coords[k]);
        if (!congruent(unit, Matrix<T>::identity(gens)))
            errs.push_back("module: unit does not act as identity");
        for (std::size_t i = 0; i < alg.dim; ++i)
            for (std::size_t j = 0; j < alg.dim; ++j) {
                Matrix<T> lhs = action[i] * action[j];
                Matrix<T> rhs(gens, gens);
                for (std::size_t k = 0; k < alg.dim; ++k)
                    if (alg.structure[i][j][k] != 0)
                        rhs = rhs + action[k].scaled(alg.structure[i][j][k]);
                if (!congruent(lhs, rhs)) {
                    errs.push_back("module: action is not an algebra map at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
                    return errs;
                }
            }
        return errs;
    }

    static Module direct_sum(const Module& a, const Module& b) {
        Module s;
        s.gens = a.gens + b.gens;
        s.relations = Matrix<T>::block_diag(a.rel_or_empty(), b.rel_or_empty());
        for (std::size_t i = 0; i < a.action.size(); ++i)
            s.action.push_back(Matrix<T>::block_diag(a.action[i], b.action[i]));
        return s;
    }
};

// Solve for all algebra-linear maps between two modules over the same
// algebra: matrices h with h*act_src(b_k) ≡ act_tgt(b_k)*h and
// h*rel_src ⊆ span(rel_tgt).  Returns a canonical generating set of the
// solution set, as vectorized matrices (columns), together with the shape.
template <typename T>
Matrix<T> linear_map_space(const Module<T>& src, const Module<T>& tgt) {
    const std::size_t n = src.gens, m = tgt.gens;
    const std::size_t hvars = m * n;
    const std::size_t dim = src.action.size();
    // Unknowns: h (row-major m x n), then one auxiliary coefficient block per
    // congruence column expressing membership in span(rel_tgt).
    const std::size_t kt = tgt.relations.cols();
    const std::size_t cong_cols = dim * n + src.relations.cols();
    std::vector<std::vector<T>> rows;
    std::size_t aux_total = kt * cong_cols;
    std::size_t aux_base = hvars;
    std::size_t cong_idx = 0;
    auto h_at = [&](std::size_t i, std::size_t j) { return i * n + j; };
    // act_tgt(b)*h - h*act_src(b) ≡ 0 (mod rel_tgt), per basis element b and
    // source generator column j.
    for (std::size_t b = 0; b < dim; ++b) {
        const Matrix<T>& as = src.action[b];
        const Matrix<T>& at = tgt.action[b];
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<T> row(hvars + aux_total, T(0));
                // (at*h)(i,j) = sum_k at(i,k) h(k,j)
                for (std::size_t k = 0; k < m; ++k) row[h_at(k, j)] += at(i, k);
                // (h*as)(i,j) = sum_k h(i,k) as(k,j)
                for (std::size_t k = 0; k < n; ++k) row[h_at(i, k)] -= as(k, j);
                for (std::size_t r = 0; r < kt; ++r)
                    row[aux_base + cong_idx * kt + r] = -tgt.relations(i, r);
                rows.push_back(std::move(row));
            }
            ++cong_idx;
        }
    }
    // h*rel_src columns land in span(rel_tgt).
    for (std::size_t c = 0; c < src.relations.cols(); ++c) {
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<T> row(hvars + aux_total, T(0));
            for (std::size_t k = 0; k < n; ++k) row[h_at(i, k)] += src.relations(k, c);
            for (std::size_t r = 0; r < kt; ++r)
                row[aux_base + cong_idx * kt + r] = -tgt.relations(i, r);
            rows.push_back(std::move(row));
        }
        ++cong_idx;
    }
    Matrix<T> sys(rows.size(), hvars + aux_total);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) sys(i, j) = rows[i][j];
    Matrix<T> k = kernel_cols(sys);
    // Project away the auxiliary block; the projection generates the
    // solution set exactly (every h extends to some auxiliary choice).
    Matrix<T> proj(hvars, k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < hvars; ++i) proj(i, j) = k(i, j);
    return canonical_span(proj);
}

// Kernel of the map (R^cols / ...) -> (R^rows / span rel) induced by f:
// generators of the preimage of span(rel), canonical.  Saturated over Z when
// rel is empty.
template <typename T>
Matrix<T> kernel_mod_relations(const Matrix<T>& f, const Matrix<T>& rel) {
    Matrix<T> big = f.hstack(rel);
    Matrix<T> k = kernel_cols(big);
    Matrix<T> pre(f.cols(), k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < f.cols(); ++i) pre(i, j) = k(i, j);
    return canonical_span(pre);
}

template <typename T>
Matrix<T> unvectorize(const std::vector<T>& v, std::size_t rows, std::size_t cols) {
    std::vector<T> e(v.begin(), v.end());
    return Matrix<T>(rows, cols, std::move(e));
}

}  // namespace diagcat
