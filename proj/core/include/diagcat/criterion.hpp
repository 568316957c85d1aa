#pragma once

#include <map>
#include <string>

#include "diagcat/category.hpp"
#include "diagcat/commutant.hpp"

namespace diagcat {

enum class CheckStatus { PASS, FAIL, NOT_CHECKED, NOT_FOUND };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::PASS: return "PASS";
        case CheckStatus::FAIL: return "FAIL";
        case CheckStatus::NOT_CHECKED: return "NOT-CHECKED";
        default: return "NOT-FOUND";
    }
}

// A finite counterexample to sub-module invariance: algebra basis element
// basis_index sends kernel generator kernel_gen to a vector outside the
// kernel span.
template <typename T>
struct InvarianceCertificate {
    std::size_t basis_index = 0;
    std::size_t kernel_gen = 0;
    std::vector<T> kernel_vector;
    std::vector<T> image;
};

// The target data of the comparison: an abstract algebra A, its modules, the
// assignment S from diagram objects, and the modules declared to generate.
template <typename T>
struct TargetPresentation {
    AbstractAlgebra<T> algebra;
    std::vector<Module<T>> objects;
    std::map<std::string, std::size_t> S;
    std::vector<std::size_t> declared_generators;
};

// G∘S = T on the nose: carriers free of matching rank, arrow matrices
// A-linear between the assigned modules.
template <typename T>
std::vector<std::string> verify_target(const Representation<T>& t,
                                       const TargetPresentation<T>& tp) {
    std::vector<std::string> errs;
    for (const auto& m : tp.objects) {
        auto e = m.verify(tp.algebra);
        errs.insert(errs.end(), e.begin(), e.end());
    }
    for (const auto& p : t.diagram.objects) {
        auto it = tp.S.find(p);
        if (it == tp.S.end()) {
            errs.push_back("target: no module assigned to " + p);
            continue;
        }
        const Module<T>& m = tp.objects.at(it->second);
        if (m.relations.cols() != 0) errs.push_back("target: S(" + p + ") carrier not free");
        if (m.gens != t.value(p)) errs.push_back("target: S(" + p + ") carrier rank mismatch");
    }
    if (!errs.empty()) return errs;
    for (const auto& a : t.diagram.arrows) {
        const Module<T>& src = tp.objects.at(tp.S.at(a.src));
        const Module<T>& dst = tp.objects.at(tp.S.at(a.dst));
        const Matrix<T>& m = t.matrix(a.id);
        for (std::size_t i = 0; i < tp.algebra.dim; ++i)
            if (m * src.action[i] != dst.action[i] * m)
                errs.push_back("target: arrow " + a.id + " is not A-linear at basis " +
                               std::to_string(i));
    }
    return errs;
}

// Condition (a): each declared coproduct's block map [T(i) | T(i')] is an
// isomorphism over the ring.
template <typename T>
struct ConditionAResult {
    CoproductWitness witness;
    CheckStatus status = CheckStatus::NOT_CHECKED;
    T determinant = T(0);  // certificate either way (square case)
};

template <typename T>
std::vector<ConditionAResult<T>> check_condition_a(const Representation<T>& t) {
    std::vector<ConditionAResult<T>> out;
    for (const auto& w : t.diagram.coproducts) {
        ConditionAResult<T> r;
        r.witness = w;
        const Arrow* i = t.diagram.find_arrow(w.i);
        const Arrow* ip = t.diagram.find_arrow(w.i_prime);
        if (!i || !ip) {
            r.status = CheckStatus::NOT_CHECKED;
            out.push_back(r);
            continue;
        }
        Matrix<T> block = t.matrix(w.i).hstack(t.matrix(w.i_prime));
        if (block.rows() != block.cols()) {
            r.status = CheckStatus::FAIL;
        } else {
            if constexpr (std::is_same_v<T, Int>) {
                r.determinant = det_int(block);
                r.status = (r.determinant == 1 || r.determinant == -1) ? CheckStatus::PASS
                                                                       : CheckStatus::FAIL;
            } else {
                r.determinant = det_rat(block);
                r.status = r.determinant != 0 ? CheckStatus::PASS : CheckStatus::FAIL;
            }
        }
        out.push_back(r);
    }
    return out;
}

// Condition (c): the kernel of f (saturated over Z, modulo target relations
// when supplied) is invariant under every stage algebra basis element.
template <typename T>
struct ConditionCResult {
    CheckStatus status = CheckStatus::PASS;
    Matrix<T> kernel;
    std::optional<InvarianceCertificate<T>> certificate;
};

namespace detail {

template <typename T>
ConditionCResult<T> invariance_of(const Module<T>& m, const Matrix<T>& kernel) {
    ConditionCResult<T> r;
    r.kernel = kernel;
    if (auto v = invariance_violation(m, kernel)) {
        r.status = CheckStatus::FAIL;
        InvarianceCertificate<T> c;
        c.basis_index = v->first;
        c.kernel_gen = v->second;
        c.kernel_vector = kernel.column(v->second);
        c.image = m.action[v->first].apply(c.kernel_vector);
        r.certificate = std::move(c);
    }
    return r;
}

}  // namespace detail

template <typename T>
ConditionCResult<T> check_condition_c(const Representation<T>& t, const EndAlgebra<T>& alg,
                                      const std::string& p, const Matrix<T>& f,
                                      const Matrix<T>& target_rel) {
    if (f.cols() != t.value(p))
        throw std::invalid_argument("check_condition_c: map domain mismatch");
    Module<T> m = module_structure(t, alg, p).module;
    return detail::invariance_of(m, kernel_mod_relations(f, target_rel));
}

template <typename T>
ConditionCResult<T> check_condition_c(const Representation<T>& t, const Diagram& e,
                                      const std::string& p, const Matrix<T>& f) {
    return check_condition_c(t, compute_end(t, e), p, f, Matrix<T>(f.rows(), 0));
}

// Lemma 2.8 check: f: T(p) -> T(p') commutes with the stage action.  Both the
// direct commutation check and the kernel-invariance route through
// g = f - id on T(p) + T(p') are computed; they must agree.
template <typename T>
struct MorphismCheckResult {
    CheckStatus status = CheckStatus::PASS;
    std::optional<std::size_t> offending_basis;  // direct-route certificate
    ConditionCResult<T> graph_route;             // g-kernel invariance details
};

template <typename T>
MorphismCheckResult<T> check_module_morphism(const Representation<T>& t, const EndAlgebra<T>& alg,
                                             const std::string& p, const std::string& p_prime,
                                             const Matrix<T>& f) {
    if (f.cols() != t.value(p) || f.rows() != t.value(p_prime))
        throw std::invalid_argument("check_module_morphism: shape mismatch");
    std::size_t op = alg.stage.object_index(p), oq = alg.stage.object_index(p_prime);
    MorphismCheckResult<T> r;
    for (std::size_t b = 0; b < alg.dim(); ++b)
        if (alg.basis[b][oq] * f != f * alg.basis[b][op]) {
            r.status = CheckStatus::FAIL;
            r.offending_basis = b;
            break;
        }
    // graph route: ker(g) with g = [f | -id] is the graph of f; it is a
    // sub-module of T(p) + T(p') iff f commutes
    Module<T> sum;
    sum.gens = t.value(p) + t.value(p_prime);
    sum.relations = Matrix<T>(sum.gens, 0);
    for (std::size_t b = 0; b < alg.dim(); ++b)
        sum.action.push_back(Matrix<T>::block_diag(alg.basis[b][op], alg.basis[b][oq]));
    Matrix<T> g = f.hstack(Matrix<T>::identity(t.value(p_prime)).scaled(T(-1)));
    r.graph_route = detail::invariance_of(sum, kernel_cols(g));
    if ((r.status == CheckStatus::PASS) != (r.graph_route.status == CheckStatus::PASS))
        throw std::logic_error("check_module_morphism: routes disagree");
    return r;
}

template <typename T>
MorphismCheckResult<T> check_module_morphism(const Representation<T>& t, const Diagram& e,
                                             const std::string& p, const std::string& p_prime,
                                             const Matrix<T>& f) {
    return check_module_morphism(t, compute_end(t, e), p, p_prime, f);
}

// Descent of the stage action through an epimorphism alpha: T(p) ->> N.
template <typename T>
struct BuildVResult {
    CheckStatus status = CheckStatus::PASS;
    std::string error;                                   // non-certificate failures
    std::optional<InvarianceCertificate<T>> certificate;  // kernel not invariant
    std::optional<StageModule<T>> module;
};

template <typename T>
BuildVResult<T> build_V(const Representation<T>& t, const EndAlgebra<T>& alg,
                        const std::string& p, const Module<T>& n, const Matrix<T>& alpha) {
    BuildVResult<T> r;
    if (alpha.cols() != t.value(p) || alpha.rows() != n.gens)
        throw std::invalid_argument("build_V: alpha shape mismatch");
    // surjectivity onto the presented carrier
    bool onto;
    Matrix<T> im = alpha.hstack(n.rel_or_empty());
    if constexpr (std::is_same_v<T, Int>) {
        onto = presented_group(n.gens, im).is_trivial();
    } else {
        onto = rank_rat(im) == n.gens;
    }
    if (!onto) {
        r.status = CheckStatus::FAIL;
        r.error = "alpha is not surjective";
        return r;
    }
    // kernel invariance first
    Module<T> taut = module_structure(t, alg, p).module;
    auto inv = detail::invariance_of(taut, kernel_mod_relations(alpha, n.rel_or_empty()));
    if (inv.status != CheckStatus::PASS) {
        r.status = CheckStatus::FAIL;
        r.error = "kernel of alpha is not invariant";
        r.certificate = inv.certificate;
        return r;
    }
    // descend each basis action: b * alpha ≡ alpha * a_p (mod relations of N),
    // solved columnwise with auxiliary relation coefficients
    const std::size_t m = n.gens, k = t.value(p);
    const Matrix<T>& rel = n.rel_or_empty();
    const std::size_t kr = rel.cols();
    std::size_t o = alg.stage.object_index(p);
    StageModule<T> out;
    out.stage = alg.stage;
    out.module.gens = m;
    out.module.relations = n.relations;
    const std::size_t nvars = m * m + kr * k;
    Matrix<T> sys(m * k, nvars);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t row = j * m + i;
            for (std::size_t c = 0; c < m; ++c) sys(row, i * m + c) += alpha(c, j);
            for (std::size_t rr = 0; rr < kr; ++rr)
                sys(row, m * m + j * kr + rr) = -rel(i, rr);
        }
    // uniqueness: homogeneous solutions must have trivial b-block mod relations
    Matrix<T> hom = kernel_cols(sys);
    for (std::size_t j = 0; j < hom.cols(); ++j) {
        std::vector<T> col = hom.column(j);
        Matrix<T> b = unvectorize(std::vector<T>(col.begin(), col.begin() + m * m), m, m);
        if (!out.module.congruent(b, Matrix<T>(m, m))) {
            r.status = CheckStatus::FAIL;
            r.error = "descended action is not unique";
            return r;
        }
    }
    for (std::size_t bi = 0; bi < alg.dim(); ++bi) {
        Matrix<T> rhs = alpha * alg.basis[bi][o];
        std::vector<T> v(m * k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < m; ++i) v[j * m + i] = rhs(i, j);
        auto sol = solve_linear(sys, v);
        if (!sol) {
            r.status = CheckStatus::FAIL;
            r.error = "action of basis " + std::to_string(bi) + " does not descend";
            return r;
        }
        out.module.action.push_back(unvectorize(
            std::vector<T>(sol->particular.begin(), sol->particular.begin() + m * m), m, m));
    }
    auto errs = out.module.verify(alg.algebra);
    if (!errs.empty()) {
        r.status = CheckStatus::FAIL;
        r.error = "descended action failed verification: " + errs.front();
        return r;
    }
    r.module = std::move(out);
    return r;
}

template <typename T>
BuildVResult<T> build_V(const Representation<T>& t, const Diagram& e, const std::string& p,
                        const Module<T>& n, const Matrix<T>& alpha) {
    return build_V(t, compute_end(t, e), p, n, alpha);
}

// Refined condition (c'): invariance of the rational kernel under the
// base-changed stage algebra, plus the lattice identity
// ker_Z(f) = T(p) ∩ ker_Q(f), which holds exactly for torsion-free targets.
struct RefinedCResult {
    CheckStatus invariance = CheckStatus::PASS;
    std::optional<InvarianceCertificate<Rat>> certificate;
    bool identity_holds = false;
    IntMat ker_z;              // integral kernel, canonical
    IntMat lattice_cap_ker_q;  // saturation of the rational kernel, canonical
};

inline RefinedCResult check_refined_c_prime(const RepZ& t, const Diagram& e, const std::string& p,
                                            const IntMat& f, const IntMat& target_rel) {
    if (f.cols() != t.value(p))
        throw std::invalid_argument("check_refined_c_prime: map domain mismatch");
    RepQ tq = base_change_Q(t);
    RatMat fq = to_rational(f);
    RatMat relq = to_rational(target_rel);
    Module<Rat> taut = module_structure(tq, e, p).module;
    RatMat ker_q = kernel_mod_relations(fq, relq);
    RefinedCResult r;
    auto inv = detail::invariance_of(taut, ker_q);
    r.invariance = inv.status;
    r.certificate = inv.certificate;
    r.ker_z = kernel_mod_relations(f, target_rel);
    r.lattice_cap_ker_q = ker_q.cols() ? saturate(clear_denominators(ker_q))
                                       : IntMat(f.cols(), 0);
    r.identity_holds = hnf_columns(r.ker_z) == r.lattice_cap_ker_q;
    return r;
}

inline RefinedCResult check_refined_c_prime(const RepZ& t, const Diagram& e, const std::string& p,
                                            const IntMat& f) {
    return check_refined_c_prime(t, e, p, f, IntMat(f.rows(), 0));
}

// A condition-(c) test instance: a carrier map out of T(p).
template <typename T>
struct TestMap {
    std::string p;
    Matrix<T> f;
    Matrix<T> target_rel;  // empty for a free target
};

template <typename T>
struct CriterionReport {
    std::vector<ConditionAResult<T>> condition_a;
    std::vector<CheckStatus> condition_b;               // per declared generator
    std::vector<std::optional<Matrix<T>>> b_witnesses;  // the found surjection
    std::vector<ConditionCResult<T>> condition_c;       // per test map
    CheckStatus overall = CheckStatus::PASS;
};

namespace detail {

// Bounded search for a surjective A-linear map src -> n: enumerate small
// integer combinations of the solution basis.
template <typename T>
std::optional<Matrix<T>> find_surjection(const Module<T>& src, const Module<T>& n,
                                         int coeff_bound = 2) {
    Matrix<T> basis = linear_map_space(src, n);
    const std::size_t nb = basis.cols();
    if (nb == 0) {
        if (n.gens == 0) return Matrix<T>(0, src.gens);
        return std::nullopt;
    }
    auto surjective = [&](const Matrix<T>& h) {
        Matrix<T> im = h.hstack(n.rel_or_empty());
        if constexpr (std::is_same_v<T, Int>) {
            return presented_group(n.gens, im).is_trivial();
        } else {
            return rank_rat(im) == n.gens;
        }
    };
    const long budget = 20000;
    long total = 1;
    for (std::size_t i = 0; i < nb && total <= budget; ++i) total *= (2 * coeff_bound + 1);
    auto member = [&](std::size_t j) { return unvectorize(basis.column(j), n.gens, src.gens); };
    if (total <= budget) {
        std::vector<int> coeffs(nb, -coeff_bound);
        auto advance = [&]() {
            for (std::size_t i = 0; i < nb; ++i) {
                if (coeffs[i] < coeff_bound) {
                    ++coeffs[i];
                    return true;
                }
                coeffs[i] = -coeff_bound;
            }
            return false;
        };
        do {
            Matrix<T> h(n.gens, src.gens);
            for (std::size_t b = 0; b < nb; ++b)
                if (coeffs[b] != 0) h = h + member(b).scaled(T(coeffs[b]));
            if (surjective(h)) return h;
        } while (advance());
    } else {
        for (std::size_t b = 0; b < nb; ++b)
            if (surjective(member(b))) return member(b);
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t c = b + 1; c < nb; ++c) {
                Matrix<T> s = member(b) + member(c);
                if (surjective(s)) return s;
                Matrix<T> d = member(b) - member(c);
                if (surjective(d)) return d;
            }
    }
    return std::nullopt;
}

}  // namespace detail

template <typename T>
CriterionReport<T> full_criterion(const Representation<T>& t, const TargetPresentation<T>& tp,
                                  const std::vector<TestMap<T>>& test_maps) {
    auto errs = verify_target(t, tp);
    if (!errs.empty())
        throw std::invalid_argument("full_criterion: " + errs.front());
    CriterionReport<T> rep;
    rep.condition_a = check_condition_a(t);
    auto alg = compute_end(t, t.diagram);
    for (std::size_t gi : tp.declared_generators) {
        const Module<T>& n = tp.objects.at(gi);
        std::optional<Matrix<T>> found;
        for (const auto& p : t.diagram.objects) {
            found = detail::find_surjection(tp.objects.at(tp.S.at(p)), n);
            if (found) break;
        }
        rep.condition_b.push_back(found ? CheckStatus::PASS : CheckStatus::NOT_FOUND);
        rep.b_witnesses.push_back(found);
    }
    for (const auto& tm : test_maps) {
        Matrix<T> rel = tm.target_rel.cols() ? tm.target_rel : Matrix<T>(tm.f.rows(), 0);
        rep.condition_c.push_back(check_condition_c(t, alg, tm.p, tm.f, rel));
    }
    bool any_fail = false, any_open = false;
    auto fold = [&](CheckStatus s) {
        if (s == CheckStatus::FAIL) any_fail = true;
        else if (s != CheckStatus::PASS) any_open = true;
    };
    for (const auto& a : rep.condition_a) fold(a.status);
    for (auto s : rep.condition_b) fold(s);
    for (const auto& c : rep.condition_c) fold(c.status);
    rep.overall = any_fail ? CheckStatus::FAIL
                           : (any_open ? CheckStatus::NOT_CHECKED : CheckStatus::PASS);
    return rep;
}

}  // namespace diagcat
