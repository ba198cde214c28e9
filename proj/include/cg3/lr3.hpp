#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cg3 {

/// Dominant weight (a, b) of an irreducible SL(3) representation V(a, b):
/// a counts vector factors, b covector factors.
struct Weight {
    long long a = 0;
    long long b = 0;

    friend bool operator==(const Weight& x, const Weight& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }
    friend bool operator<(const Weight& x, const Weight& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

inline void require_valid(const Weight& w) {
    if (w.a < 0 || w.b < 0) throw std::invalid_argument("Weight: labels must be non-negative");
}

/// dim V(a, b) = (a+1)(b+1)(a+b+2)/2 (Weyl dimension formula for SL(3)).
inline long long dim_irrep(const Weight& w) {
    require_valid(w);
    return (w.a + 1) * (w.b + 1) * (w.a + w.b + 2) / 2;
}

/// Three-row Young diagram (highest weight written as a partition).
struct YoungDiagram3 {
    long long r1 = 0, r2 = 0, r3 = 0;

    static YoungDiagram3 from_weight(const Weight& w) {
        require_valid(w);
        return {w.a + w.b, w.b, 0};
    }

    bool is_partition() const { return r1 >= r2 && r2 >= r3 && r3 >= 0; }

    /// Weight after stripping full columns: (r1 - r2, r2 - r3).
    Weight weight() const { return {r1 - r2, r2 - r3}; }
};

/// Distribution of the second factor's boxes over the three rows: p[i] boxes
/// of the first kind and q[i] of the second kind land in row i+1.
struct Expansion {
    std::array<long long, 3> p{};
    std::array<long long, 3> q{};
};

/// Admissibility of an expansion of V(c, d) against V(a, b). The ten rules
/// below are exactly the constraints under which the combined diagram is a
/// valid summand shape; each rule is independent, so this doubles as the
/// brute-force oracle for multiplicities.
inline bool is_valid_expansion(const Weight& ab, const Weight& cd, const Expansion& x) {
    const long long a = ab.a, b = ab.b, c = cd.a, d = cd.b;
    const auto& p = x.p;
    const auto& q = x.q;
    for (int i = 0; i < 3; ++i)
        if (p[i] < 0 || q[i] < 0) return false;
    if (q[0] != 0) return false;
    if (p[1] > a) return false;
    if (p[2] > b) return false;
    if (p[1] + q[1] - a > p[0]) return false;
    if (p[2] + q[2] - b > p[1]) return false;
    if (q[1] > p[0]) return false;
    if (q[1] + q[2] > p[0] + p[1]) return false;
    if (p[0] + p[1] + p[2] != c + d) return false;
    if (q[0] + q[1] + q[2] != d) return false;
    return true;
}

/// Shape of the summand cut out by an admissible expansion.
inline YoungDiagram3 expansion_shape(const Weight& ab, const Expansion& x) {
    return {ab.a + ab.b + x.p[0], ab.b + x.p[1] + x.q[1], x.p[2] + x.q[2]};
}

/// Full decomposition of V(a,b) (x) V(c,d) as a multiset of weights,
/// obtained by enumerating all admissible expansions.
inline std::map<Weight, long long> decompose(const Weight& ab, const Weight& cd) {
    require_valid(ab);
    require_valid(cd);
    const long long c = cd.a, d = cd.b;
    std::map<Weight, long long> out;
    Expansion x;
    for (long long p1 = 0; p1 <= c + d; ++p1)
        for (long long p2 = 0; p1 + p2 <= c + d; ++p2) {
            const long long p3 = c + d - p1 - p2;
            for (long long q2 = 0; q2 <= d; ++q2) {
                x.p = {p1, p2, p3};
                x.q = {0, q2, d - q2};
                if (!is_valid_expansion(ab, cd, x)) continue;
                const YoungDiagram3 nu = expansion_shape(ab, x);
                ++out[nu.weight()];
            }
        }
    return out;
}

/// Parameters (s, t) attached to a triple of weights; absent when the
/// defining linear system has no integer solution (multiplicity is then 0).
inline std::optional<std::pair<long long, long long>> st_parameters(const Weight& src1,
                                                                    const Weight& src2,
                                                                    const Weight& dst) {
    require_valid(src1);
    require_valid(src2);
    require_valid(dst);
    const long long x = src1.a + src2.a - dst.a;
    const long long y = src1.b + src2.b - dst.b;
    const long long s_num = x + 2 * y;
    const long long t_num = x - y;
    auto divisible = [](long long n) { return n % 3 == 0; };
    if (!divisible(s_num) || !divisible(t_num)) return std::nullopt;
    return std::make_pair(s_num / 3, t_num / 3);
}

/// Index set J of the equivariant basis maps for the triple
/// (V(a,b) (x) V(c,d) -> V(e,f)); empty when the target does not occur.
inline std::vector<long long> admissible_j(const Weight& src1, const Weight& src2,
                                           const Weight& dst) {
    const auto st = st_parameters(src1, src2, dst);
    if (!st) return {};
    const auto [s, t] = *st;
    const long long a = src1.a, b = src1.b, c = src2.a, d = src2.b;
    if (s + t > c + d) return {};
    long long lo = 0;
    lo = std::max(lo, s - d);
    lo = std::max(lo, s + t - a);
    long long hi = s;
    hi = std::min(hi, s + t);
    hi = std::min(hi, b);
    hi = std::min(hi, b + t);
    hi = std::min(hi, c);
    hi = std::min(hi, c - t);
    std::vector<long long> J;
    for (long long j = lo; j <= hi; ++j) J.push_back(j);
    return J;
}

/// Everything needed to enumerate Hom(V(src1) (x) V(src2), V(dst)).
struct HomSpaceSpec {
    Weight src1, src2, dst;
    long long s = 0;
    long long t = 0;
    std::vector<long long> J;

    long long multiplicity() const { return static_cast<long long>(J.size()); }
};

/// Absent only when (s, t) fail to be integers; a present spec may still
/// carry an empty J (multiplicity 0).
inline std::optional<HomSpaceSpec> hom_space(const Weight& src1, const Weight& src2,
                                             const Weight& dst) {
    const auto st = st_parameters(src1, src2, dst);
    if (!st) return std::nullopt;
    HomSpaceSpec hs;
    hs.src1 = src1;
    hs.src2 = src2;
    hs.dst = dst;
    hs.s = st->first;
    hs.t = st->second;
    hs.J = admissible_j(src1, src2, dst);
    return hs;
}

/// The unique admissible expansion attached to index j in J.
inline Expansion expansion_from_j(long long j, const HomSpaceSpec& hs) {
    bool found = false;
    for (const long long k : hs.J) found = found || (k == j);
    if (!found) throw std::invalid_argument("expansion_from_j: j is not admissible");
    const long long d = hs.src2.b, c = hs.src2.a, s = hs.s, t = hs.t;
    Expansion x;
    x.p = {c + d - (s + t), s + t - j, j};
    x.q = {0, d - s + j, s - j};
    return x;
}

}  // namespace cg3
