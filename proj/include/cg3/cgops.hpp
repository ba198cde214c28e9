#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cg3/lr3.hpp"
#include "cg3/prime_field.hpp"
#include "cg3/rational.hpp"
#include "cg3/tensorpoly.hpp"

namespace cg3 {

namespace detail {

inline void expect_kinds(const MultiDegree& md, std::initializer_list<SlotKind> kinds,
                         const char* op) {
    if (md.size() != kinds.size())
        throw std::invalid_argument(std::string(op) + ": wrong slot count");
    std::size_t i = 0;
    for (const SlotKind k : kinds)
        if (md[i++].kind != k) throw std::invalid_argument(std::string(op) + ": wrong slot kinds");
}

// signed permutations of {0,1,2}
struct SignedPerm {
    std::size_t a, b, c;
    long long sign;
};
inline constexpr std::array<SignedPerm, 6> kPerms{{{0, 1, 2, 1},
                                                   {1, 2, 0, 1},
                                                   {2, 0, 1, 1},
                                                   {0, 2, 1, -1},
                                                   {2, 1, 0, -1},
                                                   {1, 0, 2, -1}}};

}  // namespace detail

/// Mixed Laplacian pairing an S slot against a D slot:
/// sum_i d/de_i (x) d/dx_i. Lowers both degrees by one.
template <class R>
TensorPoly<R> laplacian(const TensorPoly<R>& u, std::size_t s_slot = 0, std::size_t d_slot = 1) {
    TensorPoly<R> out = partial_derivative(partial_derivative(u, s_slot, 0), d_slot, 0);
    for (std::size_t i = 1; i < 3; ++i)
        out = out + partial_derivative(partial_derivative(u, s_slot, i), d_slot, i);
    return out;
}

/// Multiplication by the invariant pairing element sum_i e_i (x) x_i.
template <class R>
TensorPoly<R> trace_mult(const TensorPoly<R>& u, std::size_t s_slot = 0, std::size_t d_slot = 1) {
    TensorPoly<R> out = multiply_into_slot(multiply_into_slot(u, s_slot, 0), d_slot, 0);
    for (std::size_t i = 1; i < 3; ++i)
        out = out + multiply_into_slot(multiply_into_slot(u, s_slot, i), d_slot, i);
    return out;
}

/// Contraction of the outer slots of [S, D, S, D]: sum_i d/de_i on slot 0
/// and d/dx_i on slot 3.
template <class R>
TensorPoly<R> contract_outer(const TensorPoly<R>& u) {
    detail::expect_kinds(u.multidegree(), {SlotKind::S, SlotKind::D, SlotKind::S, SlotKind::D},
                         "contract_outer");
    TensorPoly<R> out = partial_derivative(partial_derivative(u, 0, 0), 3, 0);
    for (std::size_t i = 1; i < 3; ++i)
        out = out + partial_derivative(partial_derivative(u, 0, i), 3, i);
    return out;
}

/// Contraction of the inner slots of [S, D, S, D]: sum_i d/dx_i on slot 1
/// and d/de_i on slot 2.
template <class R>
TensorPoly<R> contract_inner(const TensorPoly<R>& u) {
    detail::expect_kinds(u.multidegree(), {SlotKind::S, SlotKind::D, SlotKind::S, SlotKind::D},
                         "contract_inner");
    TensorPoly<R> out = partial_derivative(partial_derivative(u, 1, 0), 2, 0);
    for (std::size_t i = 1; i < 3; ++i)
        out = out + partial_derivative(partial_derivative(u, 1, i), 2, i);
    return out;
}

/// Alternating contraction on [S, S, D]: the signed sum over permutations of
/// d/de on the two S slots and multiplication by x on the D slot. Trades two
/// vector degrees for one covector degree.
template <class R>
TensorPoly<R> wedge_dual(const TensorPoly<R>& u) {
    detail::expect_kinds(u.multidegree(), {SlotKind::S, SlotKind::S, SlotKind::D}, "wedge_dual");
    TensorPoly<R> out(u.multidegree().shifted(0, -1).shifted(1, -1).shifted(2, +1));
    for (const auto& p : detail::kPerms) {
        TensorPoly<R> t = multiply_into_slot(
            partial_derivative(partial_derivative(u, 0, p.a), 1, p.b), 2, p.c);
        out = out + t.scaled_int(p.sign);
    }
    return out;
}

/// Alternating contraction on [S, D, D]: multiplication by e on the S slot
/// and d/dx on the two D slots, signed over permutations. Trades two
/// covector degrees for one vector degree.
template <class R>
TensorPoly<R> wedge_vec(const TensorPoly<R>& u) {
    detail::expect_kinds(u.multidegree(), {SlotKind::S, SlotKind::D, SlotKind::D}, "wedge_vec");
    TensorPoly<R> out(u.multidegree().shifted(0, +1).shifted(1, -1).shifted(2, -1));
    for (const auto& p : detail::kPerms) {
        TensorPoly<R> t = multiply_into_slot(
            partial_derivative(partial_derivative(u, 1, p.b), 2, p.c), 0, p.a);
        out = out + t.scaled_int(p.sign);
    }
    return out;
}

/// Coefficients of the equivariant projection onto ker(laplacian) inside
/// S^a (x) D^b, written as sum_j mu[j] * trace_mult^j o laplacian^j.
/// lambda[i] (i >= 1) are the Schur scalars used by the recursion.
struct ProjectorCoefficients {
    Weight w;
    std::vector<Rational> lambda;
    std::vector<Rational> mu;
};

namespace detail {

inline const ProjectorCoefficients& projector_coefficients_locked(const Weight& w);

inline ProjectorCoefficients compute_projector_coefficients(const Weight& w) {
    const long long m = std::min(w.a, w.b);
    ProjectorCoefficients out;
    out.w = w;
    out.lambda.assign(static_cast<std::size_t>(m) + 1, Rational());
    out.mu.assign(static_cast<std::size_t>(m) + 1, Rational());
    out.mu[0] = Rational(1);

    for (long long i = 1; i <= m; ++i) {
        // scalar of laplacian^i o trace_mult^i on e1^(a-i) (x) x3^(b-i)
        const MultiDegree md{{SlotKind::S, static_cast<int>(w.a - i)},
                             {SlotKind::D, static_cast<int>(w.b - i)}};
        TensorMonomial mono;
        mono.set_exp(0, 0, static_cast<std::uint16_t>(w.a - i));
        mono.set_exp(1, 2, static_cast<std::uint16_t>(w.b - i));
        TensorPoly<Rational> cur = TensorPoly<Rational>::monomial(md, mono, Rational(1));
        for (long long k = 0; k < i; ++k) cur = trace_mult(cur);
        for (long long k = 0; k < i; ++k) cur = laplacian(cur);
        if (cur.term_count() != 1 || !(cur.terms().front().first == mono))
            throw std::logic_error("projector: scalar read-off failed");
        const Rational c = cur.terms().front().second;
        if (c.is_zero()) throw std::logic_error("projector: vanishing Schur scalar");
        out.lambda[static_cast<std::size_t>(i)] = c.inverse();
    }

    for (long long j = 1; j <= m; ++j) {
        Rational acc;
        for (long long i = 1; i <= std::min(m, j); ++i) {
            const auto& sub = projector_coefficients_locked({w.a - i, w.b - i});
            acc += out.lambda[static_cast<std::size_t>(i)] * sub.mu[static_cast<std::size_t>(j - i)];
        }
        out.mu[static_cast<std::size_t>(j)] = -acc;
    }
    return out;
}

inline std::recursive_mutex& projector_mutex() {
    static std::recursive_mutex mu;
    return mu;
}

inline const ProjectorCoefficients& projector_coefficients_locked(const Weight& w) {
    static std::map<std::pair<long long, long long>, ProjectorCoefficients> cache;
    const auto key = std::make_pair(w.a, w.b);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ProjectorCoefficients fresh = compute_projector_coefficients(w);
    return cache.emplace(key, std::move(fresh)).first->second;
}

}  // namespace detail

inline const ProjectorCoefficients& projector_coefficients(const Weight& w) {
    require_valid(w);
    std::lock_guard<std::recursive_mutex> lock(detail::projector_mutex());
    return detail::projector_coefficients_locked(w);
}

/// Equivariant projection of S^a (x) D^b onto ker(laplacian). Coefficients
/// are exact rationals, converted into the coefficient ring of u; over a
/// prime field this can raise DenominatorDivisibleByP.
template <class R>
TensorPoly<R> project(const Weight& w, const TensorPoly<R>& u) {
    detail::expect_kinds(u.multidegree(), {SlotKind::S, SlotKind::D}, "project");
    if (u.multidegree()[0].degree != w.a || u.multidegree()[1].degree != w.b)
        throw std::invalid_argument("project: multidegree does not match the weight");
    if (u.is_zero()) return u;

    ProjectorCoefficients coeffs = projector_coefficients(w);
    const R exemplar = u.terms().front().second;

    TensorPoly<R> acc = u.scaled(ring_cast(coeffs.mu[0], exemplar));
    TensorPoly<R> cur = u;
    for (std::size_t j = 1; j < coeffs.mu.size(); ++j) {
        cur = laplacian(cur);
        if (cur.is_zero()) break;
        if (coeffs.mu[j].is_zero()) continue;
        TensorPoly<R> up = cur;
        for (std::size_t k = 0; k < j; ++k) up = trace_mult(up);
        acc = acc + up.scaled(ring_cast(coeffs.mu[j], exemplar));
    }
    return acc;
}

}  // namespace cg3
