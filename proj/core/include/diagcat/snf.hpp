#pragma once

#include <optional>
#include <vector>

#include "diagcat/fg_ab_group.hpp"
#include "diagcat/matrix.hpp"

namespace diagcat {

// U * A * V = S with U, V unimodular and S diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
    IntMat U, S, V;
    std::size_t rank = 0;  // number of nonzero diagonal entries

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        std::size_t n = std::min(S.rows(), S.cols());
        for (std::size_t i = 0; i < n; ++i) d.push_back(S(i, i));
        return d;
    }
};

SmithDecomposition smith_normal_form(const IntMat& a);

// Exact determinants. det_int uses Bareiss fraction-free elimination.
Int det_int(const IntMat& a);
Rat det_rat(const RatMat& a);

bool is_unimodular(const IntMat& a);

// Inverse of a unimodular integer matrix (exact, integer).
IntMat inverse_unimodular(const IntMat& u);
RatMat inverse_rat(const RatMat& a);

// Canonical column Hermite form of the column span (zero columns dropped).
// Two matrices span the same lattice iff their forms are equal.
IntMat hnf_columns(const IntMat& a);

// Canonical reduced row echelon form over Q (zero rows dropped).
RatMat rref(const RatMat& a);

std::size_t rank_int(const IntMat& a);
std::size_t rank_rat(const RatMat& a);

// Basis of the saturated lattice {x in Z^cols : A x = 0}, HNF-canonical.
IntMat kernel_lattice(const IntMat& a);

// Canonical basis of the nullspace over Q.
RatMat kernel_rat(const RatMat& a);

// (Q-span of columns of L) intersected with Z^rows; requires the columns
// independent over Q.  Result is HNF-canonical and contains L with finite index.
IntMat saturate(const IntMat& l);

// Normal form of Z^rows / column-span(A).
FgAbGroup cokernel(const IntMat& a);

template <typename T>
struct LinearSolution {
    std::vector<T> particular;
    Matrix<T> kernel;  // basis of the homogeneous solution set
};

// Exact solution of A x = b over Z (std::nullopt when inconsistent over Z).
std::optional<LinearSolution<Int>> solve_int(const IntMat& a, const std::vector<Int>& b);
std::optional<LinearSolution<Rat>> solve_rat(const RatMat& a, const std::vector<Rat>& b);

// Solve A X = B for all columns of B with one decomposition of A.
// std::nullopt if any column is inconsistent over the ring.
std::optional<IntMat> solve_many_int(const IntMat& a, const IntMat& b);
std::optional<RatMat> solve_many_rat(const RatMat& a, const RatMat& b);

template <typename T>
std::optional<Matrix<T>> solve_many(const Matrix<T>& a, const Matrix<T>& b);
template <>
inline std::optional<IntMat> solve_many<Int>(const IntMat& a, const IntMat& b) {
    return solve_many_int(a, b);
}
template <>
inline std::optional<RatMat> solve_many<Rat>(const RatMat& a, const RatMat& b) {
    return solve_many_rat(a, b);
}

// Membership of b in the column span (lattice over Z, subspace over Q).
bool in_column_span(const IntMat& a, const std::vector<Int>& b);
bool in_column_span(const RatMat& a, const std::vector<Rat>& b);

// Lattice inclusion / subspace inclusion of column spans.
bool span_contained(const IntMat& sub, const IntMat& super);
bool span_contained(const RatMat& sub, const RatMat& super);

// Ring-generic aliases used by the templated module layer.
template <typename T>
Matrix<T> kernel_cols(const Matrix<T>& a);
template <>
inline IntMat kernel_cols<Int>(const IntMat& a) { return kernel_lattice(a); }
template <>
inline RatMat kernel_cols<Rat>(const RatMat& a) { return kernel_rat(a); }

template <typename T>
std::optional<LinearSolution<T>> solve_linear(const Matrix<T>& a, const std::vector<T>& b);
template <>
inline std::optional<LinearSolution<Int>> solve_linear<Int>(const IntMat& a,
                                                            const std::vector<Int>& b) {
    return solve_int(a, b);
}
template <>
inline std::optional<LinearSolution<Rat>> solve_linear<Rat>(const RatMat& a,
                                                            const std::vector<Rat>& b) {
    return solve_rat(a, b);
}

// Canonical form for column spans: Hermite over Z, RREF of the transpose over Q.
template <typename T>
Matrix<T> canonical_span(const Matrix<T>& a);
template <>
inline IntMat canonical_span<Int>(const IntMat& a) { return hnf_columns(a); }
template <>
inline RatMat canonical_span<Rat>(const RatMat& a) { return rref(a.transposed()).transposed(); }

template <typename T>
std::size_t rank_of(const Matrix<T>& a);
template <>
inline std::size_t rank_of<Int>(const IntMat& a) { return rank_int(a); }
template <>
inline std::size_t rank_of<Rat>(const RatMat& a) { return rank_rat(a); }

}  // namespace diagcat
