#include "diagcat/galois.hpp"

#include <stdexcept>

namespace diagcat {

std::vector<std::string> FiniteGroup::validate() const {
    std::vector<std::string> errs;
    if (order == 0 || table.size() != order) {
        errs.push_back("table size does not match order");
        return errs;
    }
    for (const auto& row : table) {
        if (row.size() != order) {
            errs.push_back("ragged table row");
            return errs;
        }
        for (auto v : row)
            if (v >= order) {
                errs.push_back("table entry out of range");
                return errs;
            }
    }
    if (identity >= order || table[identity].empty()) {
        errs.push_back("identity index out of range");
        return errs;
    }
    for (std::size_t g = 0; g < order; ++g)
        if (table[identity][g] != g || table[g][identity] != g) {
            errs.push_back("identity does not act trivially");
            return errs;
        }
    for (std::size_t g = 0; g < order; ++g) {
        bool has_inverse = false;
        for (std::size_t h = 0; h < order; ++h)
            if (table[g][h] == identity && table[h][g] == identity) has_inverse = true;
        if (!has_inverse) errs.push_back("element " + std::to_string(g) + " has no inverse");
    }
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            for (std::size_t c = 0; c < order; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) {
                    errs.push_back("table is not associative");
                    return errs;
                }
    return errs;
}

std::size_t FiniteGroup::inverse(std::size_t g) const {
    for (std::size_t h = 0; h < order; ++h)
        if (table[g][h] == identity) return h;
    throw std::logic_error("inverse: not a group");
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> t) {
    FiniteGroup g;
    g.order = t.size();
    g.table = std::move(t);
    bool found = false;
    for (std::size_t e = 0; e < g.order && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < g.order; ++x)
            if (g.table[e][x] != x || g.table[x][e] != x) ok = false;
        if (ok) {
            g.identity = e;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("from_table: no identity element");
    auto errs = g.validate();
    if (!errs.empty()) throw std::invalid_argument("from_table: " + errs.front());
    return g;
}

std::vector<std::string> GSet::validate(const FiniteGroup& g) const {
    std::vector<std::string> errs;
    if (action.size() != g.order) {
        errs.push_back("action table has wrong number of rows");
        return errs;
    }
    for (const auto& row : action) {
        if (row.size() != size) {
            errs.push_back("ragged action row");
            return errs;
        }
        for (auto v : row)
            if (v >= size) {
                errs.push_back("action entry out of range");
                return errs;
            }
    }
    for (std::size_t x = 0; x < size; ++x)
        if (action[g.identity][x] != x) {
            errs.push_back("identity does not act trivially");
            return errs;
        }
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t b = 0; b < g.order; ++b)
            for (std::size_t x = 0; x < size; ++x)
                if (action[g.table[a][b]][x] != action[a][action[b][x]]) {
                    errs.push_back("action is not compatible with multiplication");
                    return errs;
                }
    return errs;
}

GSet GSet::regular(const FiniteGroup& g) {
    GSet s;
    s.size = g.order;
    s.action = g.table;
    return s;
}

GSet GSet::trivial(const FiniteGroup& g, std::size_t m) {
    GSet s;
    s.size = m;
    s.action.assign(g.order, std::vector<std::size_t>(m));
    for (auto& row : s.action)
        for (std::size_t x = 0; x < m; ++x) row[x] = x;
    return s;
}

}  // namespace diagcat
