#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "diagcat/matrix.hpp"

namespace diagcat {

struct Arrow {
    std::string id, src, dst;
    bool operator==(const Arrow& o) const = default;
};

// Declares q as a disjoint-union witness p ⊔ p' with inclusion arrows i, i'.
struct CoproductWitness {
    std::string p, p_prime, sum;
    std::string i, i_prime;
    bool operator==(const CoproductWitness& o) const = default;
};

// A quiver: objects and arrows, no composition law.  Also used for (full or
// non-full) subdiagrams: a subset of objects plus a subset of arrows.
struct Diagram {
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::vector<CoproductWitness> coproducts;

    bool has_object(const std::string& p) const {
        return std::find(objects.begin(), objects.end(), p) != objects.end();
    }
    const Arrow* find_arrow(const std::string& id) const {
        for (const auto& a : arrows)
            if (a.id == id) return &a;
        return nullptr;
    }
    std::size_t object_index(const std::string& p) const {
        auto it = std::find(objects.begin(), objects.end(), p);
        if (it == objects.end()) throw std::invalid_argument("unknown object: " + p);
        return static_cast<std::size_t>(it - objects.begin());
    }

    // Structural well-formedness: arrow endpoints and coproduct entries
    // reference declared objects/arrows with the stated sources and targets.
    std::vector<std::string> validate() const {
        std::vector<std::string> errs;
        for (const auto& a : arrows) {
            if (!has_object(a.src)) errs.push_back("arrow " + a.id + ": unknown source " + a.src);
            if (!has_object(a.dst)) errs.push_back("arrow " + a.id + ": unknown target " + a.dst);
        }
        for (const auto& c : coproducts) {
            const Arrow* i = find_arrow(c.i);
            const Arrow* ip = find_arrow(c.i_prime);
            if (!i || i->src != c.p || i->dst != c.sum)
                errs.push_back("coproduct (" + c.p + "," + c.p_prime + "): bad arrow " + c.i);
            if (!ip || ip->src != c.p_prime || ip->dst != c.sum)
                errs.push_back("coproduct (" + c.p + "," + c.p_prime + "): bad arrow " + c.i_prime);
        }
        return errs;
    }

    bool is_subdiagram_of(const Diagram& d) const {
        for (const auto& p : objects)
            if (!d.has_object(p)) return false;
        for (const auto& a : arrows) {
            const Arrow* b = d.find_arrow(a.id);
            if (!b || !(*b == a)) return false;
        }
        return true;
    }

    bool operator==(const Diagram& o) const {
        return objects == o.objects && arrows == o.arrows;
    }

    static Diagram merged(const Diagram& a, const Diagram& b) {
        Diagram u = a;
        for (const auto& p : b.objects)
            if (!u.has_object(p)) u.objects.push_back(p);
        for (const auto& ar : b.arrows)
            if (!u.find_arrow(ar.id)) u.arrows.push_back(ar);
        return u;
    }
};

// Increasing chain E_1 ⊆ E_2 ⊆ ... of subdiagrams of one ambient diagram.
struct SubdiagramChain {
    std::vector<Diagram> stages;

    std::vector<std::string> validate(const Diagram& ambient) const {
        std::vector<std::string> errs;
        for (std::size_t i = 0; i < stages.size(); ++i) {
            for (const auto& e : stages[i].validate())
                errs.push_back("stage " + std::to_string(i) + ": " + e);
            if (!stages[i].is_subdiagram_of(ambient))
                errs.push_back("stage " + std::to_string(i) + " is not a subdiagram of the ambient diagram");
            if (i > 0 && !stages[i - 1].is_subdiagram_of(stages[i]))
                errs.push_back("stage " + std::to_string(i - 1) + " not contained in stage " +
                               std::to_string(i));
        }
        return errs;
    }
};

}  // namespace diagcat
