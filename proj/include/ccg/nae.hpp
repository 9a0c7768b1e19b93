#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccg/io.hpp"

namespace ccg {

// Monotone NAE3SAT: three distinct positive literals per clause; satisfying
// means every clause sees both truth values. Variables are 1-based.
struct NAEClause {
    std::array<int, 3> vars;
    bool operator==(const NAEClause& o) const { return vars == o.vars; }
};

struct NAEInstance {
    int variable_count = 0;
    std::vector<NAEClause> clauses;
};

// values[i] is the value of variable i+1
struct Assignment {
    std::vector<uint8_t> values;

    std::string to_string() const {
        std::string s;
        for (auto v : values) s += v ? '1' : '0';
        return s;
    }

    static Assignment from_string(const std::string& bits) {
        Assignment a;
        for (char c : bits) {
            if (c != '0' && c != '1') throw std::invalid_argument("assignment: expected a bitstring of 0s and 1s");
            a.values.push_back(c == '1');
        }
        return a;
    }

    bool operator==(const Assignment& o) const { return values == o.values; }
};

// the standing assumption: no partition of the variables induces a partition
// of the clauses (equivalently, the variable/clause incidence structure is
// connected and every variable occurs)
inline bool nae_incidence_connected(const NAEInstance& y) {
    if (y.variable_count <= 0 || y.clauses.empty()) return false;
    std::vector<int> parent(y.variable_count + 1);
    for (int i = 0; i <= y.variable_count; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<char> used(y.variable_count + 1, 0);
    for (const NAEClause& c : y.clauses) {
        for (int v : c.vars) used[v] = 1;
        parent[find(c.vars[1])] = find(c.vars[0]);
        parent[find(c.vars[2])] = find(c.vars[0]);
    }
    for (int v = 1; v <= y.variable_count; ++v)
        if (!used[v]) return false;
    int root = find(1);
    for (int v = 2; v <= y.variable_count; ++v)
        if (find(v) != root) return false;
    return true;
}

inline void validate_nae(const NAEInstance& y) {
    if (y.variable_count <= 0) throw std::invalid_argument("nae: no variables");
    if (y.clauses.empty()) throw std::invalid_argument("nae: no clauses");
    for (const NAEClause& c : y.clauses) {
        for (int v : c.vars)
            if (v < 1 || v > y.variable_count)
                throw std::invalid_argument("nae: variable " + std::to_string(v) + " out of range");
        if (c.vars[0] == c.vars[1] || c.vars[0] == c.vars[2] || c.vars[1] == c.vars[2])
            throw std::invalid_argument("nae: repeated variable in a clause");
    }
    if (!nae_incidence_connected(y))
        throw std::invalid_argument("nae: disconnected instance (a variable partition induces a clause partition)");
}

// header "p nae <vars> <clauses>", then "<a> <b> <c> 0" per clause;
// 'c' lines are comments
inline NAEInstance parse_nae(const std::string& text) {
    NAEInstance y;
    bool have_header = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto toks = detail::split_ws(raw);
        if (toks.empty() || toks[0] == "c" || toks[0][0] == '#') continue;
        if (!have_header) {
            if (toks.size() != 4 || toks[0] != "p" || toks[1] != "nae")
                throw ParseError(lineno, "expected 'p nae <vars> <clauses>'");
            y.variable_count = detail::parse_int(toks[2], lineno, "variable count");
            int declared = detail::parse_int(toks[3], lineno, "clause count");
            y.clauses.reserve(size_t(std::max(declared, 0)));
            have_header = true;
            continue;
        }
        if (toks.size() != 4 || toks[3] != "0") throw ParseError(lineno, "expected '<a> <b> <c> 0'");
        NAEClause c{{detail::parse_int(toks[0], lineno, "variable"), detail::parse_int(toks[1], lineno, "variable"),
                     detail::parse_int(toks[2], lineno, "variable")}};
        y.clauses.push_back(c);
    }
    if (!have_header) throw ParseError(lineno, "missing 'p nae' header");
    try {
        validate_nae(y);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
    return y;
}

inline std::string serialize_nae(const NAEInstance& y) {
    std::string s = "p nae " + std::to_string(y.variable_count) + " " + std::to_string(y.clauses.size()) + "\n";
    for (const NAEClause& c : y.clauses)
        s += std::to_string(c.vars[0]) + " " + std::to_string(c.vars[1]) + " " + std::to_string(c.vars[2]) + " 0\n";
    return s;
}

inline bool nae_satisfies(const NAEInstance& y, const Assignment& a) {
    if (int(a.values.size()) != y.variable_count)
        throw std::invalid_argument("nae_satisfies: assignment length mismatch");
    for (const NAEClause& c : y.clauses) {
        int sum = a.values[c.vars[0] - 1] + a.values[c.vars[1] - 1] + a.values[c.vars[2] - 1];
        if (sum == 0 || sum == 3) return false;
    }
    return true;
}

constexpr int kNaeSolveLimit = 24;

// Brute force over assignments. The complement of a satisfying assignment is
// satisfying, so variable 1 is pinned to 0 and only half the space is
// scanned.
inline std::optional<Assignment> nae_solve(const NAEInstance& y, int limit = kNaeSolveLimit) {
    validate_nae(y);
    if (y.variable_count > limit) throw std::invalid_argument("nae_solve: variable limit exceeded");
    const int free_vars = y.variable_count - 1;
    Assignment a;
    a.values.assign(y.variable_count, 0);
    for (uint64_t mask = 0; mask < (uint64_t(1) << free_vars); ++mask) {
        for (int i = 0; i < free_vars; ++i) a.values[i + 1] = (mask >> i) & 1;
        if (nae_satisfies(y, a)) return a;
    }
    return std::nullopt;
}

// every satisfying assignment, for desk-scale instances
inline std::vector<Assignment> nae_solve_all(const NAEInstance& y, int limit = 16) {
    validate_nae(y);
    if (y.variable_count > limit) throw std::invalid_argument("nae_solve_all: variable limit exceeded");
    std::vector<Assignment> out;
    Assignment a;
    a.values.assign(y.variable_count, 0);
    for (uint64_t mask = 0; mask < (uint64_t(1) << y.variable_count); ++mask) {
        for (int i = 0; i < y.variable_count; ++i) a.values[i] = (mask >> i) & 1;
        if (nae_satisfies(y, a)) out.push_back(a);
    }
    return out;
}

// Random connected instance: each clause after the first reuses at least one
// earlier variable, and leftover variable indices are trimmed.
inline NAEInstance random_nae_instance(std::mt19937_64& rng, int max_clauses = 5, int max_vars = 12) {
    const int clause_count = 1 + int(rng() % uint64_t(max_clauses));
    std::vector<NAEClause> clauses;
    int used_vars = 0;
    for (int i = 0; i < clause_count; ++i) {
        NAEClause c{};
        if (i == 0) {
            c.vars = {1, 2, 3};
            used_vars = 3;
        } else {
            // one variable seen before, others possibly fresh
            c.vars[0] = 1 + int(rng() % uint64_t(used_vars));
            for (int j = 1; j < 3; ++j) {
                for (;;) {
                    int cap = std::min(used_vars + 1, max_vars);
                    int v = 1 + int(rng() % uint64_t(cap));
                    if (v != c.vars[0] && (j < 2 || v != c.vars[1])) {
                        c.vars[j] = v;
                        used_vars = std::max(used_vars, v);
                        break;
                    }
                }
            }
        }
        clauses.push_back(c);
    }
    NAEInstance y{used_vars, clauses};
    validate_nae(y);
    return y;
}

}  // namespace ccg
