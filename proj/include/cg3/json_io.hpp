#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cg3/lr3.hpp"
#include "cg3/prime_field.hpp"
#include "cg3/ratverify.hpp"
#include "cg3/rational.hpp"
#include "cg3/sparse_matrix.hpp"
#include "cg3/tensorpoly.hpp"

namespace cg3 {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational: expected a string");
    return Rational::from_string(j.get<std::string>());
}

inline Json json_of(const Fp& x) {
    return Json{{"residue", x.residue()}, {"p", x.modulus()}};
}

inline Fp fp_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("residue") || !j.contains("p"))
        throw std::invalid_argument("field element: expected {residue, p}");
    const PrimeField field(j.at("p").get<std::uint64_t>());
    return field.element(j.at("residue").get<long long>());
}

inline Json json_of(const Weight& w) { return Json::array({w.a, w.b}); }

inline Weight weight_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("weight: expected [a, b]");
    const Weight w{j.at(0).get<long long>(), j.at(1).get<long long>()};
    require_valid(w);
    return w;
}

inline Json json_of(const MultiDegree& md) {
    Json out = Json::array();
    for (std::size_t i = 0; i < md.size(); ++i)
        out.push_back(Json::array({md[i].kind == SlotKind::S ? "S" : "D", md[i].degree}));
    return out;
}

inline MultiDegree multidegree_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("slots: expected an array");
    MultiDegree md;
    for (const auto& s : j) {
        if (!s.is_array() || s.size() != 2)
            throw std::invalid_argument("slots: expected [kind, degree] pairs");
        const std::string kind = s.at(0).get<std::string>();
        if (kind != "S" && kind != "D") throw std::invalid_argument("slots: kind must be S or D");
        md.push_back({kind == "S" ? SlotKind::S : SlotKind::D, s.at(1).get<int>()});
    }
    return md;
}

template <class R>
Json json_of(const TensorPoly<R>& u) {
    Json terms = Json::array();
    for (const auto& [m, c] : u.terms()) {
        Json exps = Json::array();
        for (std::size_t s = 0; s < u.multidegree().size(); ++s)
            exps.push_back(Json::array({m.exp(s, 0), m.exp(s, 1), m.exp(s, 2)}));
        terms.push_back(Json{{"exps", exps}, {"coeff", json_of(c)}});
    }
    return Json{{"slots", json_of(u.multidegree())}, {"terms", terms}};
}

namespace detail {

template <class R, class CoeffParse>
TensorPoly<R> poly_from_json(const Json& j, CoeffParse&& parse_coeff) {
    if (!j.is_object() || !j.contains("slots") || !j.contains("terms"))
        throw std::invalid_argument("polynomial: expected {slots, terms}");
    const MultiDegree md = multidegree_from_json(j.at("slots"));
    std::vector<typename TensorPoly<R>::Term> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("exps") || !t.contains("coeff"))
            throw std::invalid_argument("polynomial: expected {exps, coeff} terms");
        const auto& exps = t.at("exps");
        if (!exps.is_array() || exps.size() != md.size())
            throw std::invalid_argument("polynomial: one exponent triple per slot");
        TensorMonomial m;
        for (std::size_t s = 0; s < md.size(); ++s) {
            const auto& triple = exps.at(s);
            if (!triple.is_array() || triple.size() != 3)
                throw std::invalid_argument("polynomial: exponent triples have three entries");
            for (std::size_t v = 0; v < 3; ++v) {
                const long long e = triple.at(v).get<long long>();
                if (e < 0) throw std::invalid_argument("polynomial: negative exponent");
                m.set_exp(s, v, static_cast<std::uint16_t>(e));
            }
        }
        terms.emplace_back(m, parse_coeff(t.at("coeff")));
    }
    return TensorPoly<R>::from_unsorted(md, std::move(terms));
}

}  // namespace detail

inline TensorPoly<Rational> rational_poly_from_json(const Json& j) {
    return detail::poly_from_json<Rational>(j, rational_from_json);
}

inline TensorPoly<Fp> fp_poly_from_json(const Json& j) {
    return detail::poly_from_json<Fp>(j, fp_from_json);
}

template <class R>
Json json_of(const SparseMatrix<R>& m) {
    Json entries = Json::array();
    for (const auto& [i, k, c] : m.entries) entries.push_back(Json::array({i, k, json_of(c)}));
    return Json{{"rows", m.rows},
                {"cols", m.cols},
                {"basisRows", m.row_labels},
                {"basisCols", m.col_labels},
                {"entries", entries}};
}

namespace detail {

template <class R, class CoeffParse>
SparseMatrix<R> sparse_from_json(const Json& j, CoeffParse&& parse_coeff) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix: expected {rows, cols, entries}");
    SparseMatrix<R> out;
    out.rows = j.at("rows").get<std::size_t>();
    out.cols = j.at("cols").get<std::size_t>();
    if (j.contains("basisRows")) out.row_labels = j.at("basisRows").get<std::vector<std::string>>();
    if (j.contains("basisCols")) out.col_labels = j.at("basisCols").get<std::vector<std::string>>();
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("matrix: entries are [row, col, coeff]");
        const auto r = e.at(0).get<std::size_t>();
        const auto c = e.at(1).get<std::size_t>();
        if (r >= out.rows || c >= out.cols)
            throw std::invalid_argument("matrix: entry outside the declared shape");
        out.entries.emplace_back(r, c, parse_coeff(e.at(2)));
    }
    out.sort_entries();
    return out;
}

}  // namespace detail

inline SparseMatrix<Rational> rational_sparse_from_json(const Json& j) {
    return detail::sparse_from_json<Rational>(j, rational_from_json);
}

inline SparseMatrix<Fp> fp_sparse_from_json(const Json& j) {
    return detail::sparse_from_json<Fp>(j, fp_from_json);
}

inline Json json_of_decomposition(const std::map<Weight, long long>& table) {
    Json summands = Json::array();
    for (const auto& [w, mult] : table)
        summands.push_back(Json{{"e", w.a}, {"f", w.b}, {"mult", mult}});
    return Json{{"summands", summands}};
}

inline Json json_of(const HomSpaceSpec& hs) {
    return Json{{"s", hs.s}, {"t", hs.t}, {"J", hs.J}, {"mult", hs.multiplicity()}};
}

inline Json json_of(const BundleReport& r) {
    return Json{{"src", json_of(r.src)},
                {"mid", json_of(r.mid)},
                {"dst", json_of(r.dst)},
                {"s", r.s},
                {"t", r.t},
                {"j", r.j_used},
                {"k", r.k},
                {"dimSrc", r.dim_src},
                {"dimMid", r.dim_mid},
                {"dimDst", r.dim_dst},
                {"prime", r.prime},
                {"seed", r.seed},
                {"firstRank", r.first_rank},
                {"firstExpected", r.first_expected},
                {"kernelFound", r.kernel_found},
                {"stackedRank", r.stacked_rank},
                {"stackedExpected", r.stacked_expected},
                {"pass", r.pass},
                {"failure", r.failure},
                {"failureDetail", r.failure_detail},
                {"seconds", r.seconds},
                {"note", "the rank over F_p never exceeds the rank in characteristic zero, "
                         "so full rank mod p certifies the rational statement"}};
}

inline Json json_of(const Candidate& c) {
    Json summands = Json::array();
    for (const auto& s : c.summands)
        summands.push_back(Json{{"w", json_of(s.w)}, {"dim", dim_irrep(s.w)}, {"mult", s.mult}});
    return Json{{"mid", json_of(c.mid)},
                {"dimMid", c.dim_mid},
                {"summands", summands},
                {"dimSum", c.dim_sum},
                {"nondegenerate", c.nondegenerate}};
}

inline Json json_of(const std::vector<Candidate>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(json_of(c));
    return out;
}

}  // namespace cg3
