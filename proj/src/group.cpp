#include "gral/group.hpp"

#include <algorithm>

namespace gral {

FiniteGroup FiniteGroup::validate(std::vector<std::vector<int32_t>> table, int32_t identity,
                                  std::vector<std::string> labels) {
    const int32_t n = int32_t(table.size());
    if (n == 0) throw Error("NoIdentity", "empty multiplication table");
    for (const auto& row : table) {
        if (int32_t(row.size()) != n) throw dimension_error("multiplication table is not square");
        for (int32_t v : row)
            if (v < 0 || v >= n) throw Error("NotPermutation", "table entry out of range");
    }
    if (identity < 0 || identity >= n) throw Error("NoIdentity", "identity index out of range");
    for (int32_t t = 0; t < n; ++t)
        if (table[identity][t] != t || table[t][identity] != t)
            throw Error("NoIdentity", "identity row/column does not act trivially");

    // Every row and column is a permutation.
    for (int32_t s = 0; s < n; ++s) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int32_t t = 0; t < n; ++t) {
            if (seen_row[table[s][t]]) throw Error("NotPermutation", "repeated entry in row " + std::to_string(s));
            seen_row[table[s][t]] = true;
            if (seen_col[table[t][s]]) throw Error("NotPermutation", "repeated entry in column " + std::to_string(s));
            seen_col[table[t][s]] = true;
        }
    }

    std::vector<int32_t> inv(n, -1);
    for (int32_t t = 0; t < n; ++t) {
        for (int32_t s = 0; s < n; ++s)
            if (table[s][t] == identity && table[t][s] == identity) {
                inv[t] = s;
                break;
            }
        if (inv[t] < 0) throw Error("NoInverse", "element " + std::to_string(t) + " has no inverse");
    }

    for (int32_t a = 0; a < n; ++a)
        for (int32_t b = 0; b < n; ++b)
            for (int32_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error("NonAssociative", "triple (" + std::to_string(a) + "," + std::to_string(b) +
                                                      "," + std::to_string(c) + ") violates associativity");

    FiniteGroup g;
    g.n_ = n;
    g.id_ = identity;
    g.table_ = std::move(table);
    g.inv_ = std::move(inv);
    if (labels.empty())
        for (int32_t t = 0; t < n; ++t) labels.push_back("g" + std::to_string(t));
    g.labels_ = std::move(labels);
    return g;
}

int32_t FiniteGroup::mul(int32_t s, int32_t t) const {
    if (s < 0 || s >= n_ || t < 0 || t >= n_) throw Error("IndexError", "group element index out of range");
    return table_[s][t];
}

int32_t FiniteGroup::inv(int32_t t) const {
    if (t < 0 || t >= n_) throw Error("IndexError", "group element index out of range");
    return inv_[t];
}

FiniteGroup FiniteGroup::cyclic(int32_t n) {
    if (n < 1) throw Error("BadPreset", "cyclic group order must be >= 1");
    std::vector<std::vector<int32_t>> t(n, std::vector<int32_t>(n));
    for (int32_t i = 0; i < n; ++i)
        for (int32_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    std::vector<std::string> labels;
    for (int32_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
    return validate(std::move(t), 0, std::move(labels));
}

FiniteGroup FiniteGroup::klein4() {
    std::vector<std::vector<int32_t>> t(4, std::vector<int32_t>(4));
    for (int32_t i = 0; i < 4; ++i)
        for (int32_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return validate(std::move(t), 0, {"1", "a", "b", "ab"});
}

FiniteGroup FiniteGroup::sym3() {
    // Permutations of {0,1,2} in lexicographic one-line order.
    const int32_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int32_t p[3]) {
        for (int32_t k = 0; k < 6; ++k)
            if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2]) return k;
        return -1;
    };
    std::vector<std::vector<int32_t>> t(6, std::vector<int32_t>(6));
    for (int32_t i = 0; i < 6; ++i)
        for (int32_t j = 0; j < 6; ++j) {
            int32_t comp[3];
            for (int32_t x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(comp);
        }
    return validate(std::move(t), 0, {"e", "(12)", "(01)", "(012)", "(021)", "(02)"});
}

FiniteGroup FiniteGroup::preset(const std::string& name) {
    if (name == "klein4") return klein4();
    if (name == "sym3") return sym3();
    if (name.rfind("cyclic(", 0) == 0 && name.back() == ')') {
        int32_t n = std::stoi(name.substr(7, name.size() - 8));
        return cyclic(n);
    }
    throw Error("BadPreset", "unknown group preset: " + name);
}

}  // namespace gral
