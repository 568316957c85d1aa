#include "diagcat/fg_ab_group.hpp"

#include <sstream>

#include "diagcat/snf.hpp"

namespace diagcat {

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    // Renormalize the merged torsion list through a diagonal presentation.
    std::size_t g = a.torsion.size() + b.torsion.size();
    IntMat rel(g, g);
    std::size_t i = 0;
    for (const auto& d : a.torsion) rel(i, i) = d, ++i;
    for (const auto& d : b.torsion) rel(i, i) = d, ++i;
    FgAbGroup s = presented_group(g, rel);
    s.free_rank += a.free_rank + b.free_rank;
    s.presentation.reset();
    return s;
}

FgAbGroup presented_group(std::size_t gens, const IntMat& relations) {
    if (relations.cols() != 0 && relations.rows() != gens)
        throw std::invalid_argument("presented_group: relation rows != generators");
    if (relations.cols() == 0) return FgAbGroup::free(gens);
    return cokernel(relations);
}

FgAbGroup abgroup_hom_kernel(const IntMat& f, const IntMat& rel_src, const IntMat& rel_tgt) {
    if (rel_src.cols() != 0 && rel_src.rows() != f.cols())
        throw std::invalid_argument("abgroup_hom_kernel: source relation shape");
    if (rel_tgt.cols() != 0 && rel_tgt.rows() != f.rows())
        throw std::invalid_argument("abgroup_hom_kernel: target relation shape");
    // Preimage of the target relation span: project ker[f | rel_tgt] to the
    // first block of coordinates.
    IntMat big = f.hstack(rel_tgt.cols() ? rel_tgt : IntMat(f.rows(), 0));
    IntMat k = kernel_lattice(big);
    IntMat pre(f.cols(), k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < f.cols(); ++i) pre(i, j) = k(i, j);
    IntMat p = hnf_columns(pre);
    // Kernel group = preimage / source relations, in the preimage basis.
    std::vector<std::vector<Int>> coords;
    for (std::size_t j = 0; j < rel_src.cols(); ++j) {
        auto s = solve_int(p, rel_src.column(j));
        if (!s) throw std::invalid_argument("abgroup_hom_kernel: f does not respect relations");
        coords.push_back(s->particular);
    }
    return presented_group(p.cols(), IntMat::from_columns(p.cols(), coords));
}

FgAbGroup abgroup_hom_cokernel(const IntMat& f, const IntMat& rel_tgt) {
    return presented_group(f.rows(), f.hstack(rel_tgt));
}

}  // namespace diagcat
