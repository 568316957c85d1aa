#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagcat/matrix.hpp"

namespace diagcat {

// Finitely generated abelian group in invariant-factor normal form:
// Z^free_rank + Z/d_1 + ... + Z/d_k with d_i >= 2 and d_i | d_{i+1}.
// Normal form is unique, so operator== decides isomorphism.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // divisibility chain, factors of 1 dropped
    std::optional<IntMat> presentation;  // relation matrix it came from, if any

    bool operator==(const FgAbGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    // Product of torsion orders; meaningful when free_rank == 0.
    Int torsion_order() const {
        Int n = 1;
        for (const auto& d : torsion) n *= d;
        return n;
    }

    std::string to_string() const;

    static FgAbGroup free(std::size_t rank) { return FgAbGroup{rank, {}, std::nullopt}; }
    static FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
};

// Normal form of Z^gens / column-span(relations).
FgAbGroup presented_group(std::size_t gens, const IntMat& relations);

// Kernel of the homomorphism between presented groups induced by f on
// generators: (Z^n / rel_src) -> (Z^m / rel_tgt).  Requires
// f * rel_src to land in the column span of rel_tgt.
FgAbGroup abgroup_hom_kernel(const IntMat& f, const IntMat& rel_src, const IntMat& rel_tgt);

// Cokernel of the same homomorphism: Z^m / (im f + rel_tgt).
FgAbGroup abgroup_hom_cokernel(const IntMat& f, const IntMat& rel_tgt);

}  // namespace diagcat
