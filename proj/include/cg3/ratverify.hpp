#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cg3/cgmaps.hpp"
#include "cg3/lr3.hpp"
#include "cg3/parallel.hpp"
#include "cg3/prime_field.hpp"

namespace cg3 {

/// Input of a dominance certificate: the bilinear map V(src) (x) V(mid) -> V(dst)
/// singled out by the expansion index j, evaluated over F_prime at a seeded
/// random point. k, when given, must equal dim mid - dim dst.
struct BundleInstance {
    Weight src;
    Weight mid;
    Weight dst;
    std::optional<long long> j;
    std::optional<long long> k;
    std::uint64_t prime = 32003;
    std::uint64_t seed = 42;
};

/// Outcome of one certificate run. Full rank modulo p only ever underestimates
/// the rank in characteristic zero, so pass == true certifies the rational
/// statement. failure is empty on pass, "RankDeficient" when a rank fell short
/// (a fresh seed may help), or "TargetAbsent" when the map is identically zero
/// because V(dst) does not occur in the product (no retry can help).
struct BundleReport {
    Weight src;
    Weight mid;
    Weight dst;
    long long s = 0;
    long long t = 0;
    long long j_used = -1;  // -1 when no admissible index exists
    std::size_t k = 0;      // dim mid - dim dst, the number of kernel directions
    long long dim_src = 0;
    long long dim_mid = 0;
    long long dim_dst = 0;
    std::size_t first_rank = 0;
    std::size_t first_expected = 0;
    std::size_t kernel_found = 0;
    std::size_t stacked_rank = 0;
    std::size_t stacked_expected = 0;
    bool pass = false;
    std::string failure;
    std::string failure_detail;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    double seconds = 0.0;
};

/// Kernel basis vectors of V(w) with coefficients reduced into the field.
inline std::vector<TensorPoly<Fp>> reduce_basis(const KernelBasis& kb, const PrimeField& field) {
    std::vector<TensorPoly<Fp>> out;
    out.reserve(kb.vectors.size());
    for (const auto& v : kb.vectors) out.push_back(reduce_poly(v, field));
    return out;
}

/// Linear combination of the given vectors with coefficients drawn as
/// engine() % p in basis order.
inline TensorPoly<Fp> random_combination(const std::vector<TensorPoly<Fp>>& basis,
                                         const MultiDegree& md, const PrimeField& field,
                                         std::mt19937_64& rng) {
    TensorPoly<Fp> acc(md);
    for (const auto& v : basis) {
        const Fp c = field.element(static_cast<long long>(rng() % field.modulus()));
        acc = acc + v.scaled(c);
    }
    return acc;
}

/// Seeded random element of V(w) over the given prime field.
inline TensorPoly<Fp> random_element(const Weight& w, const PrimeField& field,
                                     std::uint64_t seed) {
    const KernelBasis kb = kernel_basis(w);
    const auto reduced = reduce_basis(kb, field);
    std::mt19937_64 rng(seed);
    return random_combination(reduced, kb.md, field, rng);
}

namespace detail {

inline long long resolve_index_j(const HomSpaceSpec& hs, const std::optional<long long>& j) {
    if (!j) {
        if (hs.J.size() != 1)
            throw std::invalid_argument("verify: several admissible indices, pass j explicitly");
        return hs.J.front();
    }
    for (const long long cand : hs.J)
        if (cand == *j) return cand;
    throw std::invalid_argument("verify: index j is not admissible for this triple");
}

/// Shared certificate: rank of x0 (x) . against dim dst, then the stacked
/// matrix of . (x) y_i over the kernel directions y_i against k * dim dst.
/// x0_override, when given, replaces the seeded random point.
inline BundleReport verify_bundle(const BundleInstance& inst, bool require_single_kernel,
                                  const TensorPoly<Fp>* x0_override) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto elapsed = [&t0]() {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    BundleReport rep;
    rep.src = inst.src;
    rep.mid = inst.mid;
    rep.dst = inst.dst;
    rep.prime = inst.prime;
    rep.seed = inst.seed;
    rep.dim_src = dim_irrep(inst.src);
    rep.dim_mid = dim_irrep(inst.mid);
    rep.dim_dst = dim_irrep(inst.dst);
    rep.k = static_cast<std::size_t>(std::max<long long>(rep.dim_mid - rep.dim_dst, 0));
    rep.first_expected = static_cast<std::size_t>(rep.dim_dst);
    rep.stacked_expected = rep.k * static_cast<std::size_t>(rep.dim_dst);

    const PrimeField field(inst.prime);  // validates the modulus up front

    const auto hs = hom_space(inst.src, inst.mid, inst.dst);
    if (!hs || hs->J.empty()) {
        // the map is identically zero; reseeding cannot change that
        rep.j_used = inst.j.value_or(-1);
        rep.pass = false;
        rep.failure = "TargetAbsent";
        rep.failure_detail = "target does not occur in the tensor product, the map is zero";
        rep.seconds = elapsed();
        return rep;
    }

    rep.s = hs->s;
    rep.t = hs->t;
    rep.j_used = resolve_index_j(*hs, inst.j);

    if (rep.dim_mid <= rep.dim_dst)
        throw std::invalid_argument("verify: dim mid must exceed dim dst");
    if (inst.k && *inst.k != static_cast<long long>(rep.k))
        throw std::invalid_argument("verify: stated k does not match dim mid - dim dst");
    if (require_single_kernel && rep.k != 1)
        throw std::invalid_argument("verify: double bundle requires dim mid == dim dst + 1");
    if (!require_single_kernel && rep.k < 2)
        throw std::invalid_argument("verify: Grassmannian bundle requires k >= 2");

    const Fp zero = field.element(0);
    const CGMapSpec ms{*hs, rep.j_used};

    const auto src_basis = reduce_basis(kernel_basis(inst.src), field);
    const auto mid_basis = reduce_basis(kernel_basis(inst.mid), field);
    const MultiDegree src_md{{SlotKind::S, static_cast<int>(inst.src.a)},
                             {SlotKind::D, static_cast<int>(inst.src.b)}};
    const MultiDegree dst_md{{SlotKind::S, static_cast<int>(inst.dst.a)},
                             {SlotKind::D, static_cast<int>(inst.dst.b)}};
    const auto target = monomial_basis(dst_md);

    TensorPoly<Fp> x0(src_md);
    if (x0_override) {
        if (!(x0_override->multidegree() == src_md))
            throw std::invalid_argument("verify: supplied point has the wrong shape");
        x0 = *x0_override;
    } else {
        std::mt19937_64 rng(inst.seed);
        x0 = random_combination(src_basis, src_md, field, rng);
    }

    // Stage one: x0 paired with the mid basis must already hit all of V(dst).
    Matrix<Fp> first(target.size(), Row<Fp>(mid_basis.size(), zero));
    parallel_for(mid_basis.size(), [&](std::size_t col) {
        const auto img = cg_basis_map(ms, tensor_product(x0, mid_basis[col]));
        const auto coords = ambient_coords(img, target, zero);
        for (std::size_t r = 0; r < target.size(); ++r) first[r][col] = coords[r];
    });
    const Matrix<Fp> kernel = kernel_of(first, mid_basis.size(), zero);
    rep.first_rank = mid_basis.size() - kernel.size();
    rep.kernel_found = kernel.size();

    const auto finish = [&](bool ok, const std::string& detail) {
        rep.pass = ok;
        if (!ok) {
            rep.failure = "RankDeficient";
            rep.failure_detail = detail;
        }
        rep.seconds = elapsed();
        return rep;
    };

    if (rep.first_rank != rep.first_expected)
        return finish(false, "first map rank " + std::to_string(rep.first_rank) + " of " +
                                 std::to_string(rep.first_expected));

    // Kernel directions y_1..y_k at x0, in kernel_of order.
    std::vector<TensorPoly<Fp>> ys;
    ys.reserve(kernel.size());
    for (const auto& coords : kernel) {
        TensorPoly<Fp> y(mid_basis.front().multidegree());
        for (std::size_t b = 0; b < coords.size(); ++b)
            if (!coords[b].is_zero()) y = y + mid_basis[b].scaled(coords[b]);
        ys.push_back(std::move(y));
    }

    // Stage two: the k maps . (x) y_i stacked as one matrix must have
    // independent images, rank k * dim dst.
    Matrix<Fp> stacked(rep.k * target.size(), Row<Fp>(src_basis.size(), zero));
    parallel_for(src_basis.size(), [&](std::size_t col) {
        for (std::size_t i = 0; i < ys.size(); ++i) {
            const auto img = cg_basis_map(ms, tensor_product(src_basis[col], ys[i]));
            const auto coords = ambient_coords(img, target, zero);
            for (std::size_t r = 0; r < target.size(); ++r)
                stacked[i * target.size() + r][col] = coords[r];
        }
    });
    rep.stacked_rank = rank_of(std::move(stacked));
    if (rep.stacked_rank != rep.stacked_expected)
        return finish(false, "stacked rank " + std::to_string(rep.stacked_rank) + " of " +
                                 std::to_string(rep.stacked_expected));
    return finish(true, "");
}

}  // namespace detail

/// Certificate for a projective-space base: exactly one kernel direction.
inline BundleReport verify_double_bundle(const BundleInstance& inst) {
    return detail::verify_bundle(inst, true, nullptr);
}

/// Same certificate evaluated at a caller-chosen point instead of a seeded
/// random one.
inline BundleReport verify_double_bundle_at(const BundleInstance& inst,
                                            const TensorPoly<Fp>& x0) {
    return detail::verify_bundle(inst, true, &x0);
}

/// Certificate for a Grassmannian base: k = dim mid - dim dst >= 2 kernel
/// directions, checked jointly through the stacked matrix.
inline BundleReport verify_grassmannian_bundle(const BundleInstance& inst) {
    return detail::verify_bundle(inst, false, nullptr);
}

inline BundleReport verify_grassmannian_bundle_at(const BundleInstance& inst,
                                                  const TensorPoly<Fp>& x0) {
    return detail::verify_bundle(inst, false, &x0);
}

/// One middle weight together with target summands whose dimensions sum to
/// dim mid - 1, each tagged with its multiplicity in Hom(V(mid), V(summand)).
struct CandidateSummand {
    Weight w;
    long long mult = 0;
};

struct Candidate {
    Weight mid;
    std::vector<CandidateSummand> summands;
    long long dim_mid = 0;
    long long dim_sum = 0;    // total dimension of the summands
    bool nondegenerate = false;  // every summand receives the source
};

/// Multiplicity of `source` inside Hom(V(mid), V(w)) = V(mid)^dual (x) V(w).
inline long long hom_occurrence(const Weight& source, const Weight& mid, const Weight& w) {
    const Weight dual{mid.b, mid.a};
    return static_cast<long long>(admissible_j(dual, w, source).size());
}

/// Searches for middle weights mid and sums W of at most max_summands
/// irreducibles, labels bounded by max_label, such that
///   dim V(mid) = dim W + 1,
///   dim P(source) > dim P(V(mid)),
///   source occurs in Hom(V(mid), W), i.e. in at least one summand.
/// Candidates where every summand receives the source are flagged
/// nondegenerate: only those support a kernel bundle of rank one.
/// Results are ordered by mid, then by summand count, then by the summands.
inline std::vector<Candidate> candidate_search(const Weight& source, long long max_label,
                                               int max_summands) {
    require_valid(source);
    if (max_label < 0) throw std::invalid_argument("candidate_search: negative label bound");
    if (max_summands < 1 || max_summands > 2)
        throw std::invalid_argument("candidate_search: summand count must be 1 or 2");

    std::vector<std::pair<Weight, long long>> all;
    std::map<long long, std::vector<Weight>> by_dim;
    for (long long a = 0; a <= max_label; ++a)
        for (long long b = 0; b <= max_label; ++b) {
            const Weight w{a, b};
            const long long d = dim_irrep(w);
            all.emplace_back(w, d);
            by_dim[d].push_back(w);
        }

    const long long dim_source = dim_irrep(source);
    std::vector<Candidate> out;
    const auto emit = [&out](const Weight& mid, long long dim_mid,
                             std::vector<CandidateSummand> summands) {
        long long total = 0;
        bool all_hit = true;
        for (const auto& s : summands) {
            total += s.mult;
            all_hit = all_hit && s.mult >= 1;
        }
        if (total < 1) return;
        out.push_back({mid, std::move(summands), dim_mid, dim_mid - 1, all_hit});
    };

    for (const auto& [mid, dim_mid] : all) {
        if (dim_mid >= dim_source) continue;  // need dim P(source) > dim P(mid)
        const long long want = dim_mid - 1;
        if (want < 1) continue;

        if (const auto it = by_dim.find(want); it != by_dim.end())
            for (const Weight& w1 : it->second)
                emit(mid, dim_mid, {{w1, hom_occurrence(source, mid, w1)}});

        if (max_summands < 2) continue;
        for (const auto& [w1, d1] : all) {
            const long long need = want - d1;
            if (need < d1) continue;  // enforce w1 <= w2 by dimension
            const auto it = by_dim.find(need);
            if (it == by_dim.end()) continue;
            for (const Weight& w2 : it->second) {
                if (need == d1 && w2 < w1) continue;
                emit(mid, dim_mid,
                     {{w1, hom_occurrence(source, mid, w1)},
                      {w2, hom_occurrence(source, mid, w2)}});
            }
        }
    }
    return out;
}

}  // namespace cg3
