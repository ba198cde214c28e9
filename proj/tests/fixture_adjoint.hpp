#pragma once

// Reference data for the two basis maps on the adjoint square
// V(1,1) (x) V(1,1) -> V(1,1): hand-checked 8x8 tables in the split basis
// q12..q33, plus a tiny parser for linear-combination strings.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cg3/linalg.hpp"
#include "cg3/rational.hpp"
#include "cg3/tensorpoly.hpp"

namespace fixture {

using cg3::MultiDegree;
using cg3::Rational;
using cg3::SlotKind;
using cg3::TensorPoly;

using QPoly = TensorPoly<Rational>;

/// q12, q13, q21, q23, q31, q32, q22, q33 (in this order).
inline std::vector<QPoly> adjoint_q_basis() {
    const MultiDegree md{{SlotKind::S, 1}, {SlotKind::D, 1}};
    auto unit = [&](int ei, int xi) {
        cg3::TensorMonomial m;
        m.set_exp(0, static_cast<std::size_t>(ei - 1), 1);
        m.set_exp(1, static_cast<std::size_t>(xi - 1), 1);
        return QPoly::monomial(md, m, Rational(1));
    };
    std::vector<QPoly> q;
    q.push_back(unit(1, 2));
    q.push_back(unit(1, 3));
    q.push_back(unit(2, 1));
    q.push_back(unit(2, 3));
    q.push_back(unit(3, 1));
    q.push_back(unit(3, 2));
    q.push_back(unit(1, 1) - unit(2, 2));
    q.push_back(unit(1, 1) - unit(3, 3));
    return q;
}

inline std::size_t q_index(int r, int c) {
    static const std::map<int, std::size_t> table{
        {12, 0}, {13, 1}, {21, 2}, {23, 3}, {31, 4}, {32, 5}, {22, 6}, {33, 7}};
    const auto it = table.find(r * 10 + c);
    if (it == table.end()) throw std::runtime_error("q_index: unknown basis vector");
    return it->second;
}

/// Parses "0", "q12", "-q21", "(1/3)q22+(1/3)q33", "-(2/3)q22+(1/3)q33" into
/// coordinates with respect to the q basis.
inline cg3::Row<Rational> parse_q_combo(const std::string& text) {
    cg3::Row<Rational> out(8, Rational());
    if (text == "0") return out;
    std::size_t i = 0;
    while (i < text.size()) {
        long long sign = 1;
        if (text[i] == '+') {
            ++i;
        } else if (text[i] == '-') {
            sign = -1;
            ++i;
        }
        Rational coef(1);
        if (text[i] == '(') {
            const std::size_t close = text.find(')', i);
            if (close == std::string::npos) throw std::runtime_error("parse_q_combo: " + text);
            coef = Rational::from_string(text.substr(i + 1, close - i - 1));
            i = close + 1;
        }
        if (i + 2 >= text.size() || text[i] != 'q')
            throw std::runtime_error("parse_q_combo: " + text);
        const int r = text[i + 1] - '0';
        const int c = text[i + 2] - '0';
        i += 3;
        out[q_index(r, c)] += coef * sign;
    }
    return out;
}

/// Row i, column k holds the image of q_i (x) q_k under the first basis map
/// (outer contraction followed by projection).
inline const std::array<std::array<const char*, 8>, 8>& alpha_table() {
    static const std::array<std::array<const char*, 8>, 8> t{{
        {"0", "0", "-(2/3)q22+(1/3)q33", "0", "q32", "0", "q12", "q12"},
        {"0", "0", "q23", "0", "(1/3)q22-(2/3)q33", "0", "q13", "q13"},
        {"(1/3)q22+(1/3)q33", "0", "0", "0", "0", "q31", "-q21", "0"},
        {"q13", "0", "0", "0", "0", "(1/3)q22-(2/3)q33", "-q23", "0"},
        {"0", "(1/3)q22+(1/3)q33", "0", "q21", "0", "0", "0", "-q31"},
        {"0", "q12", "0", "-(2/3)q22+(1/3)q33", "0", "0", "0", "-q32"},
        {"-q12", "0", "q21", "0", "q31", "-q32", "-(1/3)q22+(2/3)q33",
         "(1/3)q22+(1/3)q33"},
        {"0", "-q13", "q21", "-q23", "q31", "0", "(1/3)q22+(1/3)q33",
         "(2/3)q22-(1/3)q33"},
    }};
    return t;
}

/// Same layout for the second basis map (inner contraction); the transpose
/// of the first table.
inline const std::array<std::array<const char*, 8>, 8>& beta_table() {
    static const std::array<std::array<const char*, 8>, 8> t{{
        {"0", "0", "(1/3)q22+(1/3)q33", "q13", "0", "0", "-q12", "0"},
        {"0", "0", "0", "0", "(1/3)q22+(1/3)q33", "q12", "0", "-q13"},
        {"-(2/3)q22+(1/3)q33", "q23", "0", "0", "0", "0", "q21", "q21"},
        {"0", "0", "0", "0", "q21", "-(2/3)q22+(1/3)q33", "0", "-q23"},
        {"q32", "(1/3)q22-(2/3)q33", "0", "0", "0", "0", "q31", "q31"},
        {"0", "0", "q31", "(1/3)q22-(2/3)q33", "0", "0", "-q32", "0"},
        {"q12", "q13", "-q21", "-q23", "0", "0", "-(1/3)q22+(2/3)q33",
         "(1/3)q22+(1/3)q33"},
        {"q12", "q13", "0", "0", "-q31", "-q32", "(1/3)q22+(1/3)q33",
         "(2/3)q22-(1/3)q33"},
    }};
    return t;
}

}  // namespace fixture
