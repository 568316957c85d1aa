#pragma once

#include <array>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "diagcat/representation.hpp"
#include "diagcat/snf.hpp"

namespace diagcat::testsupport {

#ifdef DIAGCAT_DATA_DIR
inline std::string read_file(const std::string& name) {
    std::ifstream in(std::string(DIAGCAT_DATA_DIR) + "/" + name, std::ios::binary);
    if (!in) throw std::runtime_error("missing data file " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// The shared fixture: the regular C2 representation with a named stage.
inline std::string read_rep_text() { return read_file("rep_c2.json"); }
#endif

inline IntMat random_int_mat(std::mt19937& rng, std::size_t rows, std::size_t cols,
                             int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

inline RepZ random_representation(std::mt19937& rng, std::size_t max_objects = 4,
                                  std::size_t max_arrows = 5, std::size_t max_rank = 4,
                                  int bound = 3) {
    std::uniform_int_distribution<std::size_t> nobj(1, max_objects);
    std::uniform_int_distribution<std::size_t> narr(0, max_arrows);
    std::uniform_int_distribution<std::size_t> rank(0, max_rank);
    RepZ t;
    std::size_t n = nobj(rng);
    for (std::size_t i = 0; i < n; ++i) {
        std::string p = "p" + std::to_string(i);
        t.diagram.objects.push_back(p);
        t.values[p] = rank(rng);
    }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::size_t m = narr(rng);
    for (std::size_t i = 0; i < m; ++i) {
        Arrow a;
        a.id = "a" + std::to_string(i);
        a.src = t.diagram.objects[pick(rng)];
        a.dst = t.diagram.objects[pick(rng)];
        t.diagram.arrows.push_back(a);
        t.matrices[a.id] = random_int_mat(rng, t.values[a.dst], t.values[a.src], -bound, bound);
    }
    return t;
}

// Independent oracle: assemble the commutation system with its own variable
// layout (objects reversed, entries column-major) and return the rational
// nullity.  Shares nothing with compute_end's assembly.
inline std::size_t brute_force_commutant_nullity(const RepZ& t, const Diagram& e) {
    std::vector<std::string> objs(e.objects.rbegin(), e.objects.rend());
    std::vector<std::size_t> offset(objs.size() + 1, 0);
    for (std::size_t o = 0; o < objs.size(); ++o)
        offset[o + 1] = offset[o] + t.value(objs[o]) * t.value(objs[o]);
    auto var = [&](const std::string& p, std::size_t i, std::size_t j) {
        std::size_t o = 0;
        while (objs[o] != p) ++o;
        std::size_t n = t.value(p);
        return offset[o] + j * n + i;  // column-major
    };
    std::size_t nvars = offset.back();
    std::vector<std::vector<Rat>> rows;
    for (const auto& a : e.arrows) {
        const IntMat& m = t.matrix(a.id);
        std::size_t np = t.value(a.src), nq = t.value(a.dst);
        for (std::size_t i = 0; i < nq; ++i)
            for (std::size_t j = 0; j < np; ++j) {
                std::vector<Rat> row(nvars, Rat(0));
                for (std::size_t k = 0; k < np; ++k)
                    row[var(a.src, k, j)] += Rat(m(i, k));
                for (std::size_t k = 0; k < nq; ++k)
                    row[var(a.dst, i, k)] -= Rat(m(k, j));
                rows.push_back(std::move(row));
            }
    }
    RatMat sys(rows.size(), nvars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < nvars; ++j) sys(i, j) = rows[i][j];
    return nvars - rank_rat(sys);
}

// Small explicit groups as multiplication tables (row g, column h -> g*h).
inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

inline std::vector<std::vector<std::size_t>> s3_table() {
    // elements: permutations of {0,1,2} in lexicographic one-line order
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto compose = [&](int a, int b) {  // (a*b)(x) = a(b(x))
        std::array<int, 3> c{};
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (std::size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == c) return static_cast<std::size_t>(k);
        return std::size_t(0);
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) t[i][j] = compose(int(i), int(j));
    return t;
}

// One loop per group element acting by left multiplication on the free
// module over the group.
inline RepZ regular_representation_rep(const std::vector<std::vector<std::size_t>>& table) {
    std::size_t n = table.size();
    RepZ t;
    t.diagram.objects = {"p"};
    t.values["p"] = n;
    for (std::size_t g = 0; g < n; ++g) {
        Arrow a{"g" + std::to_string(g), "p", "p"};
        t.diagram.arrows.push_back(a);
        IntMat m(n, n);
        for (std::size_t h = 0; h < n; ++h) m(table[g][h], h) = 1;
        t.matrices[a.id] = m;
    }
    return t;
}

}  // namespace diagcat::testsupport
