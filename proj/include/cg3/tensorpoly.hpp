#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cg3/rational.hpp"

namespace cg3 {

/// Slot kinds: S holds polynomial degrees in the vector variables e1,e2,e3;
/// D holds degrees in the covector variables x1,x2,x3.
enum class SlotKind : std::uint8_t { S, D };

struct Slot {
    SlotKind kind = SlotKind::S;
    int degree = 0;

    friend bool operator==(const Slot& a, const Slot& b) {
        return a.kind == b.kind && a.degree == b.degree;
    }
};

/// Ordered list of at most four slots; the shape of a tensor-product space.
class MultiDegree {
public:
    static constexpr std::size_t kMaxSlots = 4;

    MultiDegree() = default;
    MultiDegree(std::initializer_list<Slot> slots) {
        if (slots.size() > kMaxSlots) throw std::invalid_argument("MultiDegree: too many slots");
        for (const Slot& s : slots) push_back(s);
    }

    void push_back(const Slot& s) {
        if (count_ == kMaxSlots) throw std::invalid_argument("MultiDegree: too many slots");
        if (s.degree < 0) throw std::invalid_argument("MultiDegree: negative degree");
        slots_[count_++] = s;
    }

    std::size_t size() const { return count_; }
    const Slot& operator[](std::size_t i) const { return slots_[i]; }

    friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
        if (a.count_ != b.count_) return false;
        for (std::size_t i = 0; i < a.count_; ++i)
            if (!(a.slots_[i] == b.slots_[i])) return false;
        return true;
    }
    friend bool operator!=(const MultiDegree& a, const MultiDegree& b) { return !(a == b); }

    /// Same shape with one slot's degree changed by delta, clamped at zero.
    MultiDegree shifted(std::size_t slot, int delta) const {
        MultiDegree out(*this);
        out.slots_[slot].degree = std::max(0, out.slots_[slot].degree + delta);
        return out;
    }

    /// Slot j removed, its degree added onto slot i. Kinds must match.
    MultiDegree merged(std::size_t i, std::size_t j) const {
        if (i == j || i >= count_ || j >= count_)
            throw std::invalid_argument("MultiDegree: bad merge indices");
        if (slots_[i].kind != slots_[j].kind)
            throw std::invalid_argument("MultiDegree: cannot merge slots of different kind");
        MultiDegree out;
        for (std::size_t k = 0; k < count_; ++k) {
            if (k == j) continue;
            Slot s = slots_[k];
            if (k == i) s.degree += slots_[j].degree;
            out.push_back(s);
        }
        return out;
    }

    /// Output slot k is input slot perm[k].
    MultiDegree permuted(const std::vector<std::size_t>& perm) const {
        if (perm.size() != count_) throw std::invalid_argument("MultiDegree: bad permutation");
        MultiDegree out;
        for (const std::size_t src : perm) {
            if (src >= count_) throw std::invalid_argument("MultiDegree: bad permutation");
            out.push_back(slots_[src]);
        }
        return out;
    }

    MultiDegree concat(const MultiDegree& o) const {
        MultiDegree out(*this);
        for (std::size_t k = 0; k < o.count_; ++k) out.push_back(o.slots_[k]);
        return out;
    }

private:
    std::array<Slot, kMaxSlots> slots_{};
    std::size_t count_ = 0;
};

/// Exponent vector over up to four slots, three variables each; unused
/// positions stay zero so lexicographic order on the raw array is canonical.
struct TensorMonomial {
    std::array<std::uint16_t, 12> e{};

    std::uint16_t exp(std::size_t slot, std::size_t var) const { return e[slot * 3 + var]; }
    void set_exp(std::size_t slot, std::size_t var, std::uint16_t v) { e[slot * 3 + var] = v; }
    void inc(std::size_t slot, std::size_t var) { ++e[slot * 3 + var]; }
    void dec(std::size_t slot, std::size_t var) { --e[slot * 3 + var]; }

    int slot_sum(std::size_t slot) const {
        return int(e[slot * 3]) + int(e[slot * 3 + 1]) + int(e[slot * 3 + 2]);
    }

    auto operator<=>(const TensorMonomial&) const = default;
};

/// Monomial from per-slot exponent triples.
inline TensorMonomial make_monomial(std::initializer_list<std::array<int, 3>> per_slot) {
    if (per_slot.size() > MultiDegree::kMaxSlots)
        throw std::invalid_argument("make_monomial: too many slots");
    TensorMonomial m;
    std::size_t s = 0;
    for (const auto& t : per_slot) {
        for (std::size_t v = 0; v < 3; ++v) {
            if (t[v] < 0) throw std::invalid_argument("make_monomial: negative exponent");
            m.set_exp(s, v, static_cast<std::uint16_t>(t[v]));
        }
        ++s;
    }
    return m;
}

/// Bihomogeneous polynomial on a fixed multidegree. Terms are kept sorted by
/// monomial with no zero coefficients, so equality is termwise.
template <class R>
class TensorPoly {
public:
    using Term = std::pair<TensorMonomial, R>;

    TensorPoly() = default;
    explicit TensorPoly(MultiDegree md) : md_(std::move(md)) {}

    static TensorPoly monomial(const MultiDegree& md, const TensorMonomial& m, R coeff) {
        TensorPoly out(md);
        out.add_term(m, std::move(coeff));
        return out;
    }

    /// Takes an arbitrary term list, sorts, combines and strips zeros.
    /// Every monomial must match the multidegree.
    static TensorPoly from_unsorted(MultiDegree md, std::vector<Term> terms) {
        TensorPoly out(std::move(md));
        for (const Term& t : terms) out.validate_monomial(t.first);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        for (Term& t : terms) {
            if (!out.terms_.empty() && out.terms_.back().first == t.first)
                out.terms_.back().second += t.second;
            else
                out.terms_.push_back(std::move(t));
            if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
        }
        return out;
    }

    const MultiDegree& multidegree() const { return md_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const TensorMonomial& m, R coeff) {
        validate_monomial(m);
        if (coeff.is_zero()) return;
        const auto it = std::lower_bound(
            terms_.begin(), terms_.end(), m,
            [](const Term& t, const TensorMonomial& key) { return t.first < key; });
        if (it != terms_.end() && it->first == m) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            terms_.insert(it, Term{m, std::move(coeff)});
        }
    }

    TensorPoly operator+(const TensorPoly& o) const { return merged_with(o, false); }
    TensorPoly operator-(const TensorPoly& o) const { return merged_with(o, true); }

    TensorPoly scaled(const R& k) const {
        TensorPoly out(md_);
        if (k.is_zero()) return out;
        out.terms_.reserve(terms_.size());
        for (const Term& t : terms_) {
            R c = t.second * k;
            if (!c.is_zero()) out.terms_.push_back({t.first, std::move(c)});
        }
        return out;
    }

    TensorPoly scaled_int(long long k) const {
        TensorPoly out(md_);
        if (k == 0) return out;
        out.terms_.reserve(terms_.size());
        for (const Term& t : terms_) {
            R c = t.second * k;
            if (!c.is_zero()) out.terms_.push_back({t.first, std::move(c)});
        }
        return out;
    }

    friend bool operator==(const TensorPoly& x, const TensorPoly& y) {
        return x.md_ == y.md_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const TensorPoly& x, const TensorPoly& y) { return !(x == y); }

private:
    void validate_monomial(const TensorMonomial& m) const {
        for (std::size_t s = 0; s < md_.size(); ++s)
            if (m.slot_sum(s) != md_[s].degree)
                throw std::invalid_argument("TensorPoly: monomial degree mismatch");
        for (std::size_t k = md_.size() * 3; k < m.e.size(); ++k)
            if (m.e[k] != 0)
                throw std::invalid_argument("TensorPoly: exponent outside declared slots");
    }

    TensorPoly merged_with(const TensorPoly& o, bool subtract) const {
        if (md_ != o.md_) throw std::invalid_argument("TensorPoly: multidegree mismatch in sum");
        TensorPoly out(md_);
        out.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            bool take_left;
            if (i == terms_.size())
                take_left = false;
            else if (j == o.terms_.size())
                take_left = true;
            else if (terms_[i].first == o.terms_[j].first) {
                R c = subtract ? terms_[i].second - o.terms_[j].second
                               : terms_[i].second + o.terms_[j].second;
                if (!c.is_zero()) out.terms_.push_back({terms_[i].first, std::move(c)});
                ++i;
                ++j;
                continue;
            } else
                take_left = terms_[i].first < o.terms_[j].first;
            if (take_left) {
                out.terms_.push_back(terms_[i]);
                ++i;
            } else {
                const auto& t = o.terms_[j];
                out.terms_.push_back({t.first, subtract ? -t.second : t.second});
                ++j;
            }
        }
        return out;
    }

    MultiDegree md_;
    std::vector<Term> terms_;
};

/// d/d(var) applied inside one slot; sorted order is preserved because the
/// exponent map is strictly monotone on the surviving terms.
template <class R>
TensorPoly<R> partial_derivative(const TensorPoly<R>& u, std::size_t slot, std::size_t var) {
    const MultiDegree md = u.multidegree().shifted(slot, -1);
    std::vector<typename TensorPoly<R>::Term> terms;
    terms.reserve(u.terms().size());
    for (const auto& [m, c] : u.terms()) {
        const int n = m.exp(slot, var);
        if (n == 0) continue;
        TensorMonomial m2 = m;
        m2.dec(slot, var);
        R c2 = c * static_cast<long long>(n);
        if (!c2.is_zero()) terms.push_back({m2, std::move(c2)});
    }
    return TensorPoly<R>::from_unsorted(md, std::move(terms));
}

/// Multiplication by one variable inside one slot; order-preserving.
template <class R>
TensorPoly<R> multiply_into_slot(const TensorPoly<R>& u, std::size_t slot, std::size_t var) {
    const MultiDegree md = u.multidegree().shifted(slot, +1);
    std::vector<typename TensorPoly<R>::Term> terms;
    terms.reserve(u.terms().size());
    for (const auto& [m, c] : u.terms()) {
        TensorMonomial m2 = m;
        m2.inc(slot, var);
        terms.push_back({m2, c});
    }
    return TensorPoly<R>::from_unsorted(md, std::move(terms));
}

/// Multiplies slot j into slot i (same kind), dropping slot j.
template <class R>
TensorPoly<R> merge_slots(const TensorPoly<R>& u, std::size_t i, std::size_t j) {
    const MultiDegree md = u.multidegree().merged(i, j);
    std::vector<typename TensorPoly<R>::Term> terms;
    terms.reserve(u.terms().size());
    for (const auto& [m, c] : u.terms()) {
        TensorMonomial m2;
        std::size_t out_slot = 0;
        for (std::size_t k = 0; k < u.multidegree().size(); ++k) {
            if (k == j) continue;
            for (std::size_t v = 0; v < 3; ++v) {
                std::uint16_t ev = m.exp(k, v);
                if (k == i) ev = static_cast<std::uint16_t>(ev + m.exp(j, v));
                m2.set_exp(out_slot, v, ev);
            }
            ++out_slot;
        }
        terms.push_back({m2, c});
    }
    return TensorPoly<R>::from_unsorted(md, std::move(terms));
}

/// Reorders slots: output slot k is input slot perm[k].
template <class R>
TensorPoly<R> permute_slots(const TensorPoly<R>& u, const std::vector<std::size_t>& perm) {
    const MultiDegree md = u.multidegree().permuted(perm);
    std::vector<typename TensorPoly<R>::Term> terms;
    terms.reserve(u.terms().size());
    for (const auto& [m, c] : u.terms()) {
        TensorMonomial m2;
        for (std::size_t k = 0; k < perm.size(); ++k)
            for (std::size_t v = 0; v < 3; ++v) m2.set_exp(k, v, m.exp(perm[k], v));
        terms.push_back({m2, c});
    }
    return TensorPoly<R>::from_unsorted(md, std::move(terms));
}

/// Tensor product: slots of u followed by slots of v.
template <class R>
TensorPoly<R> tensor_product(const TensorPoly<R>& u, const TensorPoly<R>& v) {
    const MultiDegree md = u.multidegree().concat(v.multidegree());
    const std::size_t nu = u.multidegree().size();
    std::vector<typename TensorPoly<R>::Term> terms;
    terms.reserve(u.terms().size() * v.terms().size());
    for (const auto& [mu_, cu] : u.terms())
        for (const auto& [mv, cv] : v.terms()) {
            TensorMonomial m = mu_;
            for (std::size_t k = 0; k < v.multidegree().size(); ++k)
                for (std::size_t var = 0; var < 3; ++var) m.set_exp(nu + k, var, mv.exp(k, var));
            R c = cu * cv;
            if (!c.is_zero()) terms.push_back({m, std::move(c)});
        }
    return TensorPoly<R>::from_unsorted(md, std::move(terms));
}

/// All monomials of the given multidegree in ascending canonical order.
inline std::vector<TensorMonomial> monomial_basis(const MultiDegree& md) {
    std::vector<TensorMonomial> out;
    TensorMonomial cur;
    auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == md.size()) {
            out.push_back(cur);
            return;
        }
        const int d = md[slot].degree;
        for (int n0 = 0; n0 <= d; ++n0)
            for (int n1 = 0; n0 + n1 <= d; ++n1) {
                cur.set_exp(slot, 0, static_cast<std::uint16_t>(n0));
                cur.set_exp(slot, 1, static_cast<std::uint16_t>(n1));
                cur.set_exp(slot, 2, static_cast<std::uint16_t>(d - n0 - n1));
                self(self, slot + 1);
            }
        cur.set_exp(slot, 0, 0);
        cur.set_exp(slot, 1, 0);
        cur.set_exp(slot, 2, 0);
    };
    rec(rec, 0);
    return out;
}

inline long long ambient_dimension(const MultiDegree& md) {
    long long n = 1;
    for (std::size_t s = 0; s < md.size(); ++s) {
        const long long d = md[s].degree;
        n *= (d + 1) * (d + 2) / 2;
    }
    return n;
}

/// Human-readable label such as "e1^2*e3|x2" (slots separated by '|').
inline std::string monomial_label(const TensorMonomial& m, const MultiDegree& md) {
    std::string out;
    for (std::size_t s = 0; s < md.size(); ++s) {
        if (s) out += "|";
        const char letter = md[s].kind == SlotKind::S ? 'e' : 'x';
        bool any = false;
        for (std::size_t v = 0; v < 3; ++v) {
            const int n = m.exp(s, v);
            if (n == 0) continue;
            if (any) out += "*";
            out += letter;
            out += static_cast<char>('1' + v);
            if (n > 1) out += "^" + std::to_string(n);
            any = true;
        }
        if (!any) out += "1";
    }
    return out;
}

/// Invertible 3x3 matrix over the coefficient ring.
template <class R>
struct Mat3 {
    std::array<std::array<R, 3>, 3> m;

    static Mat3 identity(const R& exemplar) {
        const R zero = exemplar.zero_like(), one = exemplar.one_like();
        return Mat3{{{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}}};
    }

    /// I + lambda * E_{ij}, the elementary transvection (unit determinant).
    static Mat3 elementary(std::size_t i, std::size_t j, long long lambda, const R& exemplar) {
        if (i == j || i > 2 || j > 2) throw std::invalid_argument("Mat3: bad elementary indices");
        Mat3 g = identity(exemplar);
        g.m[i][j] = exemplar.one_like() * lambda;
        return g;
    }

    R det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    Mat3 inverse() const {
        const R d = det();
        if (d.is_zero()) throw std::domain_error("Mat3: singular matrix");
        const R inv_d = d.inverse();
        Mat3 out = *this;
        auto minor2 = [&](int r0, int r1, int c0, int c1) {
            return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        };
        // adjugate transpose divided by the determinant
        out.m[0][0] = minor2(1, 2, 1, 2) * inv_d;
        out.m[0][1] = -minor2(0, 2, 1, 2) * inv_d;
        out.m[0][2] = minor2(0, 1, 1, 2) * inv_d;
        out.m[1][0] = -minor2(1, 2, 0, 2) * inv_d;
        out.m[1][1] = minor2(0, 2, 0, 2) * inv_d;
        out.m[1][2] = -minor2(0, 1, 0, 2) * inv_d;
        out.m[2][0] = minor2(1, 2, 0, 1) * inv_d;
        out.m[2][1] = -minor2(0, 2, 0, 1) * inv_d;
        out.m[2][2] = minor2(0, 1, 0, 1) * inv_d;
        return out;
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 out = *this;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                R acc = m[i][0] * o.m[0][j];
                acc += m[i][1] * o.m[1][j];
                acc += m[i][2] * o.m[2][j];
                out.m[i][j] = std::move(acc);
            }
        return out;
    }
};

namespace detail {

// One slot's exponent triple expanded after substitution: the product over
// variables of (image linear form)^exponent, combined termwise.
template <class R>
std::vector<std::pair<std::array<std::uint16_t, 3>, R>> expand_slot_image(
    const TensorMonomial& m, std::size_t slot, const std::array<std::array<R, 3>, 3>& forms,
    const R& coeff_one) {
    using SlotTerm = std::pair<std::array<std::uint16_t, 3>, R>;
    std::vector<SlotTerm> acc{{{0, 0, 0}, coeff_one}};
    for (std::size_t v = 0; v < 3; ++v) {
        for (int rep = 0; rep < m.exp(slot, v); ++rep) {
            std::vector<SlotTerm> next;
            next.reserve(acc.size() * 3);
            for (const auto& [ex, c] : acc)
                for (std::size_t j = 0; j < 3; ++j) {
                    if (forms[v][j].is_zero()) continue;
                    auto ex2 = ex;
                    ++ex2[j];
                    next.push_back({ex2, c * forms[v][j]});
                }
            std::sort(next.begin(), next.end(),
                      [](const SlotTerm& a, const SlotTerm& b) { return a.first < b.first; });
            acc.clear();
            for (SlotTerm& t : next) {
                if (!acc.empty() && acc.back().first == t.first)
                    acc.back().second += t.second;
                else
                    acc.push_back(std::move(t));
                if (!acc.empty() && acc.back().second.is_zero()) acc.pop_back();
            }
        }
    }
    return acc;
}

}  // namespace detail

/// Action of g: vector variables transform by the columns of g, covector
/// variables by the rows of g^{-1}, so the pairing sum(e_i x_i) is fixed.
template <class R>
TensorPoly<R> act_group_element(const TensorPoly<R>& u, const Mat3<R>& g) {
    if (u.is_zero()) return u;
    const Mat3<R> ginv = g.inverse();
    const R one = g.m[0][0].one_like();

    const MultiDegree& md = u.multidegree();
    // forms[kind][v][j] = coefficient of variable j in the image of variable v
    std::array<std::array<R, 3>, 3> s_forms = g.m, d_forms = g.m;
    for (std::size_t v = 0; v < 3; ++v)
        for (std::size_t j = 0; j < 3; ++j) {
            s_forms[v][j] = g.m[j][v];
            d_forms[v][j] = ginv.m[v][j];
        }

    std::vector<typename TensorPoly<R>::Term> out;
    for (const auto& [m, c] : u.terms()) {
        std::array<std::vector<std::pair<std::array<std::uint16_t, 3>, R>>, MultiDegree::kMaxSlots>
            per_slot;
        for (std::size_t s = 0; s < md.size(); ++s)
            per_slot[s] = detail::expand_slot_image(
                m, s, md[s].kind == SlotKind::S ? s_forms : d_forms, one);

        // outer product over slots
        std::vector<typename TensorPoly<R>::Term> partial{{TensorMonomial{}, c}};
        for (std::size_t s = 0; s < md.size(); ++s) {
            std::vector<typename TensorPoly<R>::Term> next;
            next.reserve(partial.size() * per_slot[s].size());
            for (const auto& [pm, pc] : partial)
                for (const auto& [ex, sc] : per_slot[s]) {
                    TensorMonomial m2 = pm;
                    for (std::size_t v = 0; v < 3; ++v) m2.set_exp(s, v, ex[v]);
                    next.push_back({m2, pc * sc});
                }
            partial = std::move(next);
        }
        out.insert(out.end(), partial.begin(), partial.end());
    }
    return TensorPoly<R>::from_unsorted(md, std::move(out));
}

}  // namespace cg3
