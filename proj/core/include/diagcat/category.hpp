#pragma once

#include <optional>
#include <utility>

#include "diagcat/commutant.hpp"
#include "diagcat/fg_ab_group.hpp"

namespace diagcat {

// An object of the stage-wise universal category: a module over the stage
// commutant, presented at a finite subdiagram.
template <typename T>
struct CObject {
    Diagram stage;
    Module<T> module;
};

// A morphism presented at a common refinement of the two stages: a carrier
// map commuting with the refined actions and respecting presentations.
template <typename T>
struct CMorphism {
    CObject<T> source, target;
    Diagram stage;
    Matrix<T> matrix;  // target.gens x source.gens
};

template <typename T>
CObject<T> tilde_object(const Representation<T>& t, const EndAlgebra<T>& alg,
                        const std::string& p) {
    auto sm = module_structure(t, alg, p);
    return CObject<T>{sm.stage, sm.module};
}

template <typename T>
CObject<T> tilde_object(const Representation<T>& t, const Diagram& e, const std::string& p) {
    if (!e.has_object(p)) throw std::invalid_argument("tilde_object: object not in stage");
    return tilde_object(t, compute_end(t, e), p);
}

// The forgetful functor: the carrier with the action forgotten.  Over Q the
// "group" is the dimension of the presented vector space.
template <typename T>
FgAbGroup forgetful(const CObject<T>& x) {
    if constexpr (std::is_same_v<T, Int>) {
        return presented_group(x.module.gens, x.module.rel_or_empty());
    } else {
        return FgAbGroup::free(x.module.gens - rank_rat(x.module.relations));
    }
}

// Pull the action back along End(T|_E') -> End(T|_E) for E ⊆ E'.
template <typename T>
CObject<T> refine(const Representation<T>& t, const CObject<T>& x, const Diagram& e_prime) {
    if (!x.stage.is_subdiagram_of(e_prime))
        throw std::invalid_argument("refine: target stage does not refine the object stage");
    auto sup = compute_end(t, e_prime);
    auto sub = compute_end(t, x.stage);
    Matrix<T> r = restriction_map(sup, sub);
    CObject<T> y;
    y.stage = e_prime;
    y.module.gens = x.module.gens;
    y.module.relations = x.module.relations;
    for (std::size_t b = 0; b < sup.dim(); ++b) {
        Matrix<T> act(x.module.gens, x.module.gens);
        for (std::size_t i = 0; i < sub.dim(); ++i)
            if (r(i, b) != 0) act = act + x.module.action[i].scaled(r(i, b));
        y.module.action.push_back(std::move(act));
    }
    return y;
}

// Hom(X, Y) computed at a common refinement E''.
template <typename T>
struct HomResult {
    std::size_t rows = 0, cols = 0;   // shape of a member map
    Matrix<T> basis;                  // vectorized maps as columns, canonical
    FgAbGroup group;                  // basis span modulo null-homotopic maps

    Matrix<T> member(std::size_t j) const {
        return unvectorize(basis.column(j), rows, cols);
    }
};

template <typename T>
HomResult<T> hom_at_stage(const Representation<T>& t, const CObject<T>& x, const CObject<T>& y,
                          const Diagram& e_common) {
    if (!x.stage.is_subdiagram_of(e_common) || !y.stage.is_subdiagram_of(e_common))
        throw std::invalid_argument("hom_at_stage: not a common refinement");
    CObject<T> xr = refine(t, x, e_common);
    CObject<T> yr = refine(t, y, e_common);
    HomResult<T> h;
    h.rows = yr.module.gens;
    h.cols = xr.module.gens;
    h.basis = linear_map_space(xr.module, yr.module);
    // Null maps: generators with a single column equal to a target relation.
    std::vector<std::vector<T>> null_gens;
    const Matrix<T>& rel = yr.module.relations;
    for (std::size_t j = 0; j < h.cols; ++j)
        for (std::size_t r = 0; r < rel.cols(); ++r) {
            Matrix<T> m(h.rows, h.cols);
            for (std::size_t i = 0; i < h.rows; ++i) m(i, j) = rel(i, r);
            null_gens.push_back(m.vectorized());
        }
    if (h.basis.cols() == 0) {
        h.group = FgAbGroup{};
    } else {
        Matrix<T> coords(h.basis.cols(), 0);
        if (!null_gens.empty()) {
            auto sol = solve_many(h.basis, Matrix<T>::from_columns(h.rows * h.cols, null_gens));
            if (!sol) throw std::logic_error("hom_at_stage: null map outside the solution span");
            coords = *sol;
        }
        if constexpr (std::is_same_v<T, Int>) {
            h.group = presented_group(h.basis.cols(), coords);
        } else {
            h.group = FgAbGroup::free(h.basis.cols() - rank_rat(coords));
        }
    }
    return h;
}

// Is f a morphism: does its matrix commute with the refined actions and send
// source relations into target relations?
template <typename T>
bool is_valid_morphism(const Representation<T>& t, const CMorphism<T>& f) {
    if (!f.source.stage.is_subdiagram_of(f.stage) || !f.target.stage.is_subdiagram_of(f.stage))
        return false;
    if (f.matrix.rows() != f.target.module.gens || f.matrix.cols() != f.source.module.gens)
        return false;
    CObject<T> s = refine(t, f.source, f.stage);
    CObject<T> y = refine(t, f.target, f.stage);
    for (std::size_t b = 0; b < s.module.action.size(); ++b)
        if (!y.module.congruent(y.module.action[b] * f.matrix, f.matrix * s.module.action[b]))
            return false;
    if (f.source.module.relations.cols())
        if (!y.module.congruent(f.matrix * f.source.module.relations,
                                Matrix<T>(y.module.gens, f.source.module.relations.cols())))
            return false;
    return true;
}

template <typename T>
CMorphism<T> make_morphism(const Representation<T>& t, const CObject<T>& x, const CObject<T>& y,
                           const Matrix<T>& m) {
    Diagram common = Diagram::merged(x.stage, y.stage);
    CMorphism<T> f{x, y, common, m};
    if (!is_valid_morphism(t, f))
        throw std::invalid_argument("make_morphism: matrix is not action-commuting");
    return f;
}

// Kernel of f, with the induced action; the carrier is the saturated
// preimage of the target relation span, presented on its own generators.
template <typename T>
CObject<T> kernel(const Representation<T>& t, const CMorphism<T>& f) {
    CObject<T> src = refine(t, f.source, f.stage);
    const Matrix<T>& rel_t = f.target.module.rel_or_empty();
    const Matrix<T>& rel_s = src.module.rel_or_empty();
    Matrix<T> gens = kernel_mod_relations(f.matrix, rel_t);

    CObject<T> ker;
    ker.stage = f.stage;
    ker.module.gens = gens.cols();
    // Relations: source relations expressed in the generator basis.
    if (rel_s.cols()) {
        auto sol = solve_many(gens, rel_s);
        if (!sol) throw std::logic_error("kernel: source relations escape the kernel lattice");
        ker.module.relations = *sol;
    } else {
        ker.module.relations = Matrix<T>(gens.cols(), 0);
    }
    // Induced action: a * gens = gens * X (mod source relations).
    for (const auto& a : src.module.action) {
        Matrix<T> span = gens.hstack(rel_s);
        auto sol = solve_many(span, a * gens);
        if (!sol) throw std::logic_error("kernel: action does not preserve the kernel");
        Matrix<T> x(gens.cols(), gens.cols());
        for (std::size_t j = 0; j < gens.cols(); ++j)
            for (std::size_t i = 0; i < gens.cols(); ++i) x(i, j) = (*sol)(i, j);
        ker.module.action.push_back(std::move(x));
    }
    return ker;
}

// Cokernel of f: the target presented with the image columns adjoined to
// its relations; the target action descends.
template <typename T>
CObject<T> cokernel(const Representation<T>& t, const CMorphism<T>& f) {
    CObject<T> tgt = refine(t, f.target, f.stage);
    CObject<T> coker;
    coker.stage = f.stage;
    coker.module.gens = tgt.module.gens;
    coker.module.relations = f.matrix.hstack(tgt.module.rel_or_empty());
    coker.module.action = tgt.module.action;
    return coker;
}

template <typename T>
CObject<T> direct_sum(const Representation<T>& t, const CObject<T>& x, const CObject<T>& y) {
    Diagram common = Diagram::merged(x.stage, y.stage);
    CObject<T> xr = refine(t, x, common);
    CObject<T> yr = refine(t, y, common);
    return CObject<T>{common, Module<T>::direct_sum(xr.module, yr.module)};
}

// Bounded isomorphism search: enumerate small integer combinations of the
// hom basis X -> Y and solve linearly for a two-sided inverse.  Returns the
// certificate pair or std::nullopt (an honest UNKNOWN, never a NO).
template <typename T>
std::optional<std::pair<Matrix<T>, Matrix<T>>> find_isomorphism(const Representation<T>& t,
                                                                const CObject<T>& x,
                                                                const CObject<T>& y,
                                                                const Diagram& e_common,
                                                                int coeff_bound = 2) {
    HomResult<T> fwd = hom_at_stage(t, x, y, e_common);
    HomResult<T> bwd = hom_at_stage(t, y, x, e_common);
    if (fwd.basis.cols() == 0 || bwd.basis.cols() == 0) {
        if (x.module.gens == 0 && y.module.gens == 0)
            return std::make_pair(Matrix<T>(0, 0), Matrix<T>(0, 0));
        return std::nullopt;
    }
    CObject<T> xr = refine(t, x, e_common);
    CObject<T> yr = refine(t, y, e_common);

    // Try g f = id (mod rel_x) and f g = id (mod rel_y) for g in the span of
    // the backward basis; both conditions are linear in g's coordinates.
    auto try_candidate = [&](const Matrix<T>& f) -> std::optional<Matrix<T>> {
        const std::size_t nb = bwd.basis.cols();
        const Matrix<T>& rel_x = xr.module.rel_or_empty();
        const Matrix<T>& rel_y = yr.module.rel_or_empty();
        std::vector<std::vector<T>> rows;
        std::vector<T> rhs;
        const std::size_t kx = rel_x.cols(), ky = rel_y.cols();
        const std::size_t nvars = nb + kx * xr.module.gens + ky * yr.module.gens;
        // g f - id = rel_x * C, per column j of the identity
        for (std::size_t j = 0; j < xr.module.gens; ++j)
            for (std::size_t i = 0; i < xr.module.gens; ++i) {
                std::vector<T> row(nvars, T(0));
                for (std::size_t b = 0; b < nb; ++b) {
                    Matrix<T> gb = bwd.member(b);
                    T v(0);
                    for (std::size_t k = 0; k < yr.module.gens; ++k) v += gb(i, k) * f(k, j);
                    row[b] = v;
                }
                for (std::size_t r = 0; r < kx; ++r) row[nb + j * kx + r] = -rel_x(i, r);
                rhs.push_back(i == j ? T(1) : T(0));
                rows.push_back(std::move(row));
            }
        // f g - id = rel_y * C'
        for (std::size_t j = 0; j < yr.module.gens; ++j)
            for (std::size_t i = 0; i < yr.module.gens; ++i) {
                std::vector<T> row(nvars, T(0));
                for (std::size_t b = 0; b < nb; ++b) {
                    Matrix<T> gb = bwd.member(b);
                    T v(0);
                    for (std::size_t k = 0; k < xr.module.gens; ++k) v += f(i, k) * gb(k, j);
                    row[b] = v;
                }
                for (std::size_t r = 0; r < ky; ++r)
                    row[nb + kx * xr.module.gens + j * ky + r] = -rel_y(i, r);
                rhs.push_back(i == j ? T(1) : T(0));
                rows.push_back(std::move(row));
            }
        Matrix<T> sys(rows.size(), nvars);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < nvars; ++j) sys(i, j) = rows[i][j];
        auto s = solve_linear(sys, rhs);
        if (!s) return std::nullopt;
        Matrix<T> g(xr.module.gens, yr.module.gens);
        for (std::size_t b = 0; b < nb; ++b)
            if (s->particular[b] != 0) g = g + bwd.member(b).scaled(s->particular[b]);
        return g;
    };

    // Enumerate coefficient vectors in [-bound, bound]^n, capped.
    const std::size_t n = fwd.basis.cols();
    const long budget = 20000;
    long total = 1;
    for (std::size_t i = 0; i < n && total <= budget; ++i) total *= (2 * coeff_bound + 1);
    std::vector<int> coeffs(n, -coeff_bound);
    auto advance = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            if (coeffs[i] < coeff_bound) {
                ++coeffs[i];
                return true;
            }
            coeffs[i] = -coeff_bound;
        }
        return false;
    };
    if (total <= budget) {
        do {
            Matrix<T> f(fwd.rows, fwd.cols);
            bool nonzero = false;
            for (std::size_t b = 0; b < n; ++b)
                if (coeffs[b] != 0) {
                    f = f + fwd.member(b).scaled(T(coeffs[b]));
                    nonzero = true;
                }
            if (!nonzero) continue;
            if (auto g = try_candidate(f)) return std::make_pair(f, *g);
        } while (advance());
    } else {
        // fall back to single basis members and pairwise sums/differences
        for (std::size_t b = 0; b < n; ++b)
            if (auto g = try_candidate(fwd.member(b))) return std::make_pair(fwd.member(b), *g);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                Matrix<T> s = fwd.member(b) + fwd.member(c);
                if (auto g = try_candidate(s)) return std::make_pair(s, *g);
                Matrix<T> d = fwd.member(b) - fwd.member(c);
                if (auto g = try_candidate(d)) return std::make_pair(d, *g);
            }
    }
    return std::nullopt;
}

// The pro-algebra tower over a chain of stages, with image-rank traces
// toward every fixed stage and a stabilization flag per stage.  The flag
// reports the supplied chain only, never the infinite limit.
template <typename T>
struct EndTower {
    SubdiagramChain chain;
    std::vector<EndAlgebra<T>> algebras;
    std::vector<Matrix<T>> maps;  // maps[i] : algebras[i+1] -> algebras[i]
    std::vector<std::vector<std::size_t>> image_ranks;  // [i][j-i] = rank at stage i of stage j
    std::vector<bool> stabilized;
};

template <typename T>
EndTower<T> tower(const Representation<T>& t, const SubdiagramChain& chain) {
    auto errs = chain.validate(t.diagram);
    if (!errs.empty()) throw std::invalid_argument("tower: " + errs.front());
    EndTower<T> tw;
    tw.chain = chain;
    for (const auto& e : chain.stages) tw.algebras.push_back(compute_end(t, e));
    for (std::size_t i = 0; i + 1 < chain.stages.size(); ++i)
        tw.maps.push_back(restriction_map(tw.algebras[i + 1], tw.algebras[i]));
    for (std::size_t i = 0; i < chain.stages.size(); ++i) {
        std::vector<std::size_t> ranks;
        Matrix<T> acc = Matrix<T>::identity(tw.algebras[i].dim());
        ranks.push_back(tw.algebras[i].dim());
        for (std::size_t j = i; j + 1 < chain.stages.size(); ++j) {
            acc = acc * tw.maps[j];
            ranks.push_back(rank_of(acc));
        }
        bool stab = ranks.size() >= 2
                        ? ranks[ranks.size() - 1] == ranks[ranks.size() - 2]
                        : true;
        tw.image_ranks.push_back(std::move(ranks));
        tw.stabilized.push_back(stab);
    }
    return tw;
}

}  // namespace diagcat
