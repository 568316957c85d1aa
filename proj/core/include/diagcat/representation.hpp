#pragma once

#include <map>
#include <string>
#include <vector>

#include "diagcat/diagram.hpp"
#include "diagcat/matrix.hpp"

namespace diagcat {

// A representation of a diagram: a free module rank per object and a matrix
// per arrow, all over one ring (T = Int for Z, T = Rat for Q).
template <typename T>
struct Representation {
    Diagram diagram;
    std::map<std::string, std::size_t> values;        // object -> free rank
    std::map<std::string, Matrix<T>> matrices;        // arrow id -> matrix

    Ring ring() const { return ring_of<T>(); }

    std::size_t value(const std::string& p) const {
        auto it = values.find(p);
        if (it == values.end()) throw std::invalid_argument("no value for object " + p);
        return it->second;
    }
    const Matrix<T>& matrix(const std::string& arrow_id) const {
        auto it = matrices.find(arrow_id);
        if (it == matrices.end()) throw std::invalid_argument("no matrix for arrow " + arrow_id);
        return it->second;
    }

    // Shape report; empty iff the representation is well-formed.
    std::vector<std::string> validate() const {
        std::vector<std::string> errs = diagram.validate();
        for (const auto& p : diagram.objects)
            if (!values.count(p)) errs.push_back("object " + p + ": missing value");
        for (const auto& a : diagram.arrows) {
            auto it = matrices.find(a.id);
            if (it == matrices.end()) {
                errs.push_back("arrow " + a.id + ": missing matrix");
                continue;
            }
            if (!values.count(a.src) || !values.count(a.dst)) continue;
            if (it->second.rows() != value(a.dst) || it->second.cols() != value(a.src))
                errs.push_back("arrow " + a.id + ": matrix shape " +
                               std::to_string(it->second.rows()) + "x" +
                               std::to_string(it->second.cols()) + ", expected " +
                               std::to_string(value(a.dst)) + "x" + std::to_string(value(a.src)));
        }
        return errs;
    }

    void require_valid() const {
        auto errs = validate();
        if (!errs.empty()) throw std::invalid_argument("invalid representation: " + errs.front());
    }

    // T|_E for a subdiagram E.
    Representation restricted(const Diagram& e) const {
        if (!e.is_subdiagram_of(diagram))
            throw std::invalid_argument("restrict: not a subdiagram");
        Representation r;
        r.diagram = e;
        for (const auto& p : e.objects) r.values[p] = value(p);
        for (const auto& a : e.arrows) r.matrices[a.id] = matrix(a.id);
        return r;
    }
};

using RepZ = Representation<Int>;
using RepQ = Representation<Rat>;

// T_K with T_K(-) = T(-) ⊗ Q.
inline RepQ base_change_Q(const RepZ& t) {
    RepQ r;
    r.diagram = t.diagram;
    r.values = t.values;
    for (const auto& [id, m] : t.matrices) r.matrices[id] = to_rational(m);
    return r;
}

}  // namespace diagcat
