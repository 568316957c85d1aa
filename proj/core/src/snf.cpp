#include "diagcat/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace diagcat {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division (cpp_int's operator/ truncates toward zero).
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMat S = a;
    IntMat U = IntMat::identity(m);
    IntMat V = IntMat::identity(n);

    auto row_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(S(i, k), S(j, k));
        for (std::size_t k = 0; k < m; ++k) std::swap(U(i, k), U(j, k));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < m; ++k) std::swap(S(k, i), S(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(V(k, i), V(k, j));
    };
    auto row_addmul = [&](std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t k = 0; k < n; ++k) S(i, k) += c * S(j, k);
        for (std::size_t k = 0; k < m; ++k) U(i, k) += c * U(j, k);
    };
    auto col_addmul = [&](std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t k = 0; k < m; ++k) S(k, i) += c * S(k, j);
        for (std::size_t k = 0; k < n; ++k) V(k, i) += c * V(k, j);
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) S(i, k) = -S(i, k);
        for (std::size_t k = 0; k < m; ++k) U(i, k) = -U(i, k);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // Smallest nonzero pivot in the remaining block limits growth.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (S(i, j) != 0 &&
                    (!found || abs_int(S(i, j)) < abs_int(S(pi, pj)))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);

        for (;;) {
            // Euclid steps until row t and column t are clear off the pivot.
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    while (S(i, t) != 0) {
                        Int q = S(i, t) / S(t, t);
                        row_addmul(i, t, -q);
                        if (S(i, t) != 0) {
                            row_swap(i, t);
                            dirty = true;
                        }
                    }
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    while (S(t, j) != 0) {
                        Int q = S(t, j) / S(t, t);
                        col_addmul(j, t, -q);
                        if (S(t, j) != 0) {
                            col_swap(j, t);
                            dirty = true;
                        }
                    }
                }
            }
            // Enforce d_t | every remaining entry.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        row_addmul(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (S(t, t) < 0) row_negate(t);
        ++t;
    }

    SmithDecomposition d{std::move(U), std::move(S), std::move(V), 0};
    std::size_t nn = std::min(m, n);
    while (d.rank < nn && d.S(d.rank, d.rank) != 0) ++d.rank;
    return d;
}

Int det_int(const IntMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det_int: not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMat M = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign > 0 ? M(n - 1, n - 1) : Int(-M(n - 1, n - 1));
}

Rat det_rat(const RatMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det_rat: not square");
    const std::size_t n = a.rows();
    RatMat M = a;
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && M(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
            det = -det;
        }
        det *= M(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (M(i, k) == 0) continue;
            Rat c = M(i, k) / M(k, k);
            for (std::size_t j = k; j < n; ++j) M(i, j) -= c * M(k, j);
        }
    }
    return det;
}

bool is_unimodular(const IntMat& a) {
    if (a.rows() != a.cols()) return false;
    Int d = det_int(a);
    return d == 1 || d == -1;
}

RatMat inverse_rat(const RatMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse_rat: not square");
    const std::size_t n = a.rows();
    RatMat M = a;
    RatMat R = RatMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && M(p, k) == 0) ++p;
        if (p == n) throw std::invalid_argument("inverse_rat: singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(M(k, j), M(p, j));
                std::swap(R(k, j), R(p, j));
            }
        Rat piv = M(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            M(k, j) /= piv;
            R(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || M(i, k) == 0) continue;
            Rat c = M(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                M(i, j) -= c * M(k, j);
                R(i, j) -= c * R(k, j);
            }
        }
    }
    return R;
}

IntMat inverse_unimodular(const IntMat& u) {
    if (!is_unimodular(u)) throw std::invalid_argument("inverse_unimodular: not unimodular");
    return to_integral(inverse_rat(to_rational(u)));
}

IntMat hnf_columns(const IntMat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMat H = a;
    std::size_t c = 0;
    for (std::size_t r = 0; r < m && c < n; ++r) {
        std::size_t j0 = c;
        while (j0 < n && H(r, j0) == 0) ++j0;
        if (j0 == n) continue;
        if (j0 != c)
            for (std::size_t i = 0; i < m; ++i) std::swap(H(i, c), H(i, j0));
        for (std::size_t j = c + 1; j < n; ++j) {
            while (H(r, j) != 0) {
                Int q = H(r, c) / H(r, j);
                for (std::size_t i = 0; i < m; ++i) {
                    H(i, c) -= q * H(i, j);
                    std::swap(H(i, c), H(i, j));
                }
            }
        }
        if (H(r, c) < 0)
            for (std::size_t i = 0; i < m; ++i) H(i, c) = -H(i, c);
        // Reduce earlier columns' entries in this pivot row into [0, pivot).
        for (std::size_t j = 0; j < c; ++j) {
            Int q = fdiv(H(r, j), H(r, c));
            if (q != 0)
                for (std::size_t i = 0; i < m; ++i) H(i, j) -= q * H(i, c);
        }
        ++c;
    }
    return H.columns_slice(0, c);
}

RatMat rref(const RatMat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    RatMat M = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && M(p, c) == 0) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(M(r, j), M(p, j));
        Rat piv = M(r, c);
        for (std::size_t j = 0; j < n; ++j) M(r, j) /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || M(i, c) == 0) continue;
            Rat f = M(i, c);
            for (std::size_t j = 0; j < n; ++j) M(i, j) -= f * M(r, j);
        }
        ++r;
    }
    RatMat R(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) R(i, j) = M(i, j);
    return R;
}

std::size_t rank_rat(const RatMat& a) { return rref(a).rows(); }

std::size_t rank_int(const IntMat& a) { return rank_rat(to_rational(a)); }

IntMat kernel_lattice(const IntMat& a) {
    SmithDecomposition d = smith_normal_form(a);
    // S y = 0 forces y_i = 0 for i < rank; x = V y, so the kernel is spanned
    // by the trailing columns of V.  V unimodular makes it saturated.
    return hnf_columns(d.V.columns_slice(d.rank, a.cols() - d.rank));
}

RatMat kernel_rat(const RatMat& a) {
    RatMat R = rref(a);
    const std::size_t n = a.cols();
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < R.rows(); ++i) {
        std::size_t c = 0;
        while (c < n && R(i, c) == 0) ++c;
        pivots.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < R.rows(); ++i) v[pivots[i]] = -R(i, f);
        basis.push_back(std::move(v));
    }
    return RatMat::from_columns(n, basis);
}

IntMat saturate(const IntMat& l) {
    const std::size_t c = l.cols();
    if (rank_int(l) != c) throw std::invalid_argument("saturate: columns dependent over Q");
    SmithDecomposition d = smith_normal_form(l);
    IntMat uinv = inverse_unimodular(d.U);
    // U L V = S with all c diagonal entries nonzero; the rational span of L
    // meets Z^rows in the span of the first c columns of U^{-1}.
    return hnf_columns(uinv.columns_slice(0, c));
}

FgAbGroup cokernel(const IntMat& a) {
    SmithDecomposition d = smith_normal_form(a);
    FgAbGroup g;
    g.free_rank = a.rows() - d.rank;
    for (const auto& di : d.diagonal())
        if (di >= 2) g.torsion.push_back(di);
    g.presentation = a;
    return g;
}

std::optional<LinearSolution<Int>> solve_int(const IntMat& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_int: dimension mismatch");
    SmithDecomposition d = smith_normal_form(a);
    std::vector<Int> ub = d.U.apply(b);
    std::vector<Int> y(a.cols(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < d.rank) {
            if (ub[i] % d.S(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / d.S(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    LinearSolution<Int> s;
    s.particular = d.V.apply(y);
    s.kernel = hnf_columns(d.V.columns_slice(d.rank, a.cols() - d.rank));
    return s;
}

std::optional<LinearSolution<Rat>> solve_rat(const RatMat& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_rat: dimension mismatch");
    RatMat aug = a.hstack(RatMat::from_columns(a.rows(), {b}));
    RatMat R = rref(aug);
    const std::size_t n = a.cols();
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < R.rows(); ++i) {
        std::size_t c = 0;
        while (c <= n && R(i, c) == 0) ++c;
        if (c == n) return std::nullopt;  // pivot in the b column
        x[c] = R(i, n);
    }
    LinearSolution<Rat> s;
    s.particular = std::move(x);
    s.kernel = kernel_rat(a);
    return s;
}

std::optional<IntMat> solve_many_int(const IntMat& a, const IntMat& b) {
    if (b.rows() != a.rows()) throw std::invalid_argument("solve_many_int: dimension mismatch");
    SmithDecomposition d = smith_normal_form(a);
    IntMat ub = d.U * b;
    IntMat y(a.cols(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c)
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < d.rank) {
                if (ub(i, c) % d.S(i, i) != 0) return std::nullopt;
                y(i, c) = ub(i, c) / d.S(i, i);
            } else if (ub(i, c) != 0) {
                return std::nullopt;
            }
        }
    return d.V * y;
}

std::optional<RatMat> solve_many_rat(const RatMat& a, const RatMat& b) {
    if (b.rows() != a.rows()) throw std::invalid_argument("solve_many_rat: dimension mismatch");
    const std::size_t m = a.rows(), n = a.cols(), w = b.cols();
    RatMat M = a.hstack(b);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && M(p, c) == 0) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(r, j), M(p, j));
        Rat piv = M(r, c);
        for (std::size_t j = c; j < M.cols(); ++j) M(r, j) /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || M(i, c) == 0) continue;
            Rat f = M(i, c);
            for (std::size_t j = c; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t c = 0; c < w; ++c)
            if (M(i, n + c) != 0) return std::nullopt;
    RatMat x(n, w);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < w; ++c) x(pivot_col[i], c) = M(i, n + c);
    return x;
}

bool in_column_span(const IntMat& a, const std::vector<Int>& b) {
    return solve_int(a, b).has_value();
}
bool in_column_span(const RatMat& a, const std::vector<Rat>& b) {
    return solve_rat(a, b).has_value();
}

bool span_contained(const IntMat& sub, const IntMat& super) {
    for (std::size_t j = 0; j < sub.cols(); ++j)
        if (!in_column_span(super, sub.column(j))) return false;
    return true;
}
bool span_contained(const RatMat& sub, const RatMat& super) {
    for (std::size_t j = 0; j < sub.cols(); ++j)
        if (!in_column_span(super, sub.column(j))) return false;
    return true;
}

}  // namespace diagcat
