#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cg3/cgops.hpp"
#include "cg3/linalg.hpp"
#include "cg3/lr3.hpp"
#include "cg3/prime_field.hpp"
#include "cg3/sparse_matrix.hpp"
#include "cg3/tensorpoly.hpp"

namespace cg3 {

/// Ordered basis of the irreducible V(a,b) = ker(laplacian) in S^a (x) D^b.
struct KernelBasis {
    Weight w;
    MultiDegree md;
    std::vector<TensorPoly<Rational>> vectors;

    std::size_t dim() const { return vectors.size(); }
};

/// Coordinates of a polynomial with respect to the ambient monomial basis
/// (ascending canonical order).
template <class R>
Row<R> ambient_coords(const TensorPoly<R>& u, const std::vector<TensorMonomial>& basis,
                      const R& ring) {
    Row<R> out(basis.size(), ring.zero_like());
    std::size_t b = 0;
    for (const auto& [m, c] : u.terms()) {
        while (b < basis.size() && basis[b] < m) ++b;
        if (b == basis.size() || !(basis[b] == m))
            throw std::invalid_argument("ambient_coords: monomial outside basis");
        out[b] = c;
    }
    return out;
}

/// Deterministic basis of ker(laplacian) on S^a (x) D^b, computed over the
/// rationals from the reduced echelon form of the operator matrix.
inline KernelBasis kernel_basis(const Weight& w) {
    require_valid(w);
    KernelBasis out;
    out.w = w;
    out.md = MultiDegree{{SlotKind::S, static_cast<int>(w.a)}, {SlotKind::D, static_cast<int>(w.b)}};
    const auto source = monomial_basis(out.md);

    if (w.a == 0 || w.b == 0) {
        // the operator is identically zero: every monomial is in the kernel
        for (const auto& m : source)
            out.vectors.push_back(TensorPoly<Rational>::monomial(out.md, m, Rational(1)));
        return out;
    }

    const MultiDegree target_md{{SlotKind::S, static_cast<int>(w.a - 1)},
                                {SlotKind::D, static_cast<int>(w.b - 1)}};
    const auto target = monomial_basis(target_md);
    const Rational zero;

    Matrix<Rational> m(target.size(), Row<Rational>(source.size(), zero));
    for (std::size_t j = 0; j < source.size(); ++j) {
        const auto img =
            laplacian(TensorPoly<Rational>::monomial(out.md, source[j], Rational(1)));
        const auto col = ambient_coords(img, target, zero);
        for (std::size_t i = 0; i < target.size(); ++i)
            if (!col[i].is_zero()) m[i][j] = col[i];
    }

    for (auto& coords : kernel_of(std::move(m), source.size(), zero)) {
        TensorPoly<Rational> v(out.md);
        for (std::size_t k = 0; k < source.size(); ++k)
            if (!coords[k].is_zero()) v.add_term(source[k], coords[k]);
        out.vectors.push_back(std::move(v));
    }
    return out;
}

/// Termwise reduction of rational coefficients mod p.
inline TensorPoly<Fp> reduce_poly(const TensorPoly<Rational>& u, const PrimeField& field) {
    std::vector<TensorPoly<Fp>::Term> terms;
    terms.reserve(u.term_count());
    for (const auto& [m, c] : u.terms()) terms.push_back({m, field.from_rational(c)});
    return TensorPoly<Fp>::from_unsorted(u.multidegree(), std::move(terms));
}

/// One basis map of Hom(V(a,b) (x) V(c,d), V(e,f)), selected by index j.
struct CGMapSpec {
    HomSpaceSpec hs;
    long long j = 0;
};

inline MultiDegree domain_multidegree(const HomSpaceSpec& hs) {
    return MultiDegree{{SlotKind::S, static_cast<int>(hs.src1.a)},
                       {SlotKind::D, static_cast<int>(hs.src1.b)},
                       {SlotKind::S, static_cast<int>(hs.src2.a)},
                       {SlotKind::D, static_cast<int>(hs.src2.b)}};
}

namespace detail {

inline void check_map_spec(const CGMapSpec& ms, const MultiDegree& umd) {
    bool admissible = false;
    for (const long long k : ms.hs.J) admissible = admissible || (k == ms.j);
    if (!admissible) throw std::invalid_argument("cg_basis_map: j is not admissible");
    if (umd != domain_multidegree(ms.hs))
        throw std::invalid_argument("cg_basis_map: multidegree does not match the sources");
}

}  // namespace detail

/// Image of u under the j-th basis map before the final projection; lands in
/// the ambient space S^e (x) D^f. The two branches share the contraction
/// stage and differ in which alternating operator consumes |t| degrees.
template <class R>
TensorPoly<R> cg_basis_map_pre_projection(const CGMapSpec& ms, const TensorPoly<R>& u) {
    detail::check_map_spec(ms, u.multidegree());
    const long long s = ms.hs.s, t = ms.hs.t, j = ms.j;

    TensorPoly<R> v = u;
    if (t >= 0) {
        for (long long k = 0; k < s - j; ++k) v = contract_outer(v);
        for (long long k = 0; k < j; ++k) v = contract_inner(v);
        v = merge_slots(v, 1, 3);      // [S, D, S]
        v = permute_slots(v, {0, 2, 1});  // [S, S, D]
        for (long long k = 0; k < t; ++k) v = wedge_dual(v);
        v = merge_slots(v, 0, 1);      // [S, D]
    } else {
        for (long long k = 0; k < s + t - j; ++k) v = contract_outer(v);
        for (long long k = 0; k < j; ++k) v = contract_inner(v);
        v = merge_slots(v, 0, 2);      // [S, D, D]
        for (long long k = 0; k < -t; ++k) v = wedge_vec(v);
        v = merge_slots(v, 1, 2);      // [S, D]
    }
    return v;
}

template <class R>
TensorPoly<R> cg_basis_map(const CGMapSpec& ms, const TensorPoly<R>& u) {
    return project(ms.hs.dst, cg_basis_map_pre_projection(ms, u));
}

/// The split monomial e1^a x3^b (x) e3^c x1^d whose images under the basis
/// maps stay independent before projection.
template <class R>
TensorPoly<R> test_monomial(const HomSpaceSpec& hs, const R& one) {
    const MultiDegree md = domain_multidegree(hs);
    TensorMonomial m;
    m.set_exp(0, 0, static_cast<std::uint16_t>(hs.src1.a));
    m.set_exp(1, 2, static_cast<std::uint16_t>(hs.src1.b));
    m.set_exp(2, 2, static_cast<std::uint16_t>(hs.src2.a));
    m.set_exp(3, 0, static_cast<std::uint16_t>(hs.src2.b));
    return TensorPoly<R>::monomial(md, m, one);
}

/// Raised if the claimed basis fails its internal independence certificate.
class IndependenceFailure : public std::logic_error {
public:
    explicit IndependenceFailure(const std::string& what) : std::logic_error(what) {}
};

struct IndependenceReport {
    long long map_count = 0;
    bool independent = false;
    bool free_of_mixed_divisor = false;  // no image monomial divisible by e2 (x) x2
    std::vector<long long> e1_degrees;   // one representative degree per map
};

/// Evaluates every basis map on the split test monomial, replaces the final
/// projection by reduction modulo the image of trace multiplication, and
/// certifies linear independence of the results.
inline IndependenceReport verify_basis_independence(const HomSpaceSpec& hs) {
    IndependenceReport report;
    report.map_count = hs.multiplicity();
    if (hs.J.empty()) {
        report.independent = true;
        report.free_of_mixed_divisor = true;
        return report;
    }

    const Rational zero, one(1);
    const MultiDegree target_md{{SlotKind::S, static_cast<int>(hs.dst.a)},
                                {SlotKind::D, static_cast<int>(hs.dst.b)}};
    const auto target = monomial_basis(target_md);

    Matrix<Rational> trace_image;
    if (hs.dst.a >= 1 && hs.dst.b >= 1) {
        const MultiDegree below{{SlotKind::S, static_cast<int>(hs.dst.a - 1)},
                                {SlotKind::D, static_cast<int>(hs.dst.b - 1)}};
        for (const auto& m : monomial_basis(below)) {
            const auto gen = trace_mult(TensorPoly<Rational>::monomial(below, m, one));
            trace_image.push_back(ambient_coords(gen, target, zero));
        }
    }
    const RowSpace<Rational> modulus(std::move(trace_image), target.size(), zero);

    const auto m0 = test_monomial(hs, one);
    report.free_of_mixed_divisor = true;
    Matrix<Rational> reduced;
    for (const long long j : hs.J) {
        const auto img = cg_basis_map_pre_projection(CGMapSpec{hs, j}, m0);
        if (img.is_zero())
            throw IndependenceFailure("basis map vanished on the split test monomial");
        long long e1 = -1;
        for (const auto& [m, c] : img.terms()) {
            if (m.exp(0, 1) > 0 && m.exp(1, 1) > 0) report.free_of_mixed_divisor = false;
            e1 = m.exp(0, 0);
        }
        report.e1_degrees.push_back(e1);
        reduced.push_back(modulus.reduce(ambient_coords(img, target, zero)));
    }

    report.independent = rank_of(reduced) == hs.J.size();
    if (!report.independent)
        throw IndependenceFailure("claimed basis maps are linearly dependent");
    return report;
}

/// Dense matrix of the curried map v -> map(x0 (x) v) with columns indexed
/// by the supplied second-factor basis and rows by the ambient monomials of
/// the target space.
template <class R>
Matrix<R> curried_matrix(const CGMapSpec& ms, const TensorPoly<R>& x0,
                         const std::vector<TensorPoly<R>>& second_basis, const R& ring) {
    const MultiDegree target_md{{SlotKind::S, static_cast<int>(ms.hs.dst.a)},
                                {SlotKind::D, static_cast<int>(ms.hs.dst.b)}};
    const auto target = monomial_basis(target_md);
    Matrix<R> out(target.size(), Row<R>(second_basis.size(), ring.zero_like()));
    for (std::size_t k = 0; k < second_basis.size(); ++k) {
        const auto img = cg_basis_map(ms, tensor_product(x0, second_basis[k]));
        const auto col = ambient_coords(img, target, ring);
        for (std::size_t i = 0; i < target.size(); ++i)
            if (!col[i].is_zero()) out[i][k] = col[i];
    }
    return out;
}

/// Table form: entry (i, k) is the image of basis1[i] (x) basis2[k] written
/// in coordinates of the target kernel basis.
template <class R>
struct MapTable {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<Row<R>>> entry;  // entry[i][k], length = target dim
};

template <class R>
MapTable<R> table_rep(const CGMapSpec& ms, const std::vector<TensorPoly<R>>& basis1,
                      const std::vector<TensorPoly<R>>& basis2,
                      const std::vector<TensorPoly<R>>& target_basis, const R& ring) {
    const MultiDegree target_md{{SlotKind::S, static_cast<int>(ms.hs.dst.a)},
                                {SlotKind::D, static_cast<int>(ms.hs.dst.b)}};
    const auto target = monomial_basis(target_md);

    Matrix<R> columns(target.size(), Row<R>(target_basis.size(), ring.zero_like()));
    for (std::size_t k = 0; k < target_basis.size(); ++k) {
        const auto col = ambient_coords(target_basis[k], target, ring);
        for (std::size_t i = 0; i < target.size(); ++i) columns[i][k] = col[i];
    }
    const LinearSolver<R> solver(columns, ring);

    MapTable<R> out;
    out.rows = basis1.size();
    out.cols = basis2.size();
    out.entry.resize(out.rows);
    for (std::size_t i = 0; i < basis1.size(); ++i) {
        out.entry[i].reserve(basis2.size());
        for (std::size_t k = 0; k < basis2.size(); ++k) {
            const auto img = cg_basis_map(ms, tensor_product(basis1[i], basis2[k]));
            const auto sol = solver.solve(ambient_coords(img, target, ring));
            if (!sol)
                throw std::logic_error("table_rep: image not in the span of the target basis");
            out.entry[i].push_back(*sol);
        }
    }
    return out;
}

}  // namespace cg3
