#pragma once

// The 52-dimensional simple Lie algebra of type F4 in a fixed basis
// {e_a, f_a : a > 0} + {h_1..h_4}, where h_j is the coroot of the j-th simple
// root of the B4 subsystem e1-e2, e2-e3, e3-e4, e4.
//
// Construction happens in two passes. First a canonical algebra is built from
// the F4 Cartan data alone: E_x = [e_k, E_{x-a_k}] for the smallest usable
// simple root a_k, F_x its image under e_i <-> f_i, and every bracket
// [e_j, E_y], [f_k, E_x] is derived by induction on height. Then the working
// basis is defined on top of it by evaluating an iterated-bracket table, with
// f_{a+b} = -c [f_a, f_b] whenever e_{a+b} = c [e_a, e_b].

#include "voakit/exact.hpp"
#include "voakit/rootsys.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace voakit {

enum class Kind : std::uint8_t { F = 0, H = 1, E = 2 };

struct BasisElement {
    Kind kind;
    Weight root;     ///< positive root for E/F, zero for H
    int cartan = 0;  ///< 1..4 for H

    std::string name() const
    {
        switch (kind) {
        case Kind::E: return "e" + root.tag();
        case Kind::F: return "f" + root.tag();
        case Kind::H: return "h[" + std::to_string(cartan) + "]";
        }
        return "?";
    }
};

/// Sparse linear combination of basis indices.
class LieElement {
public:
    LieElement() = default;
    LieElement(int index, const Scalar& c) { add(index, c); }

    const std::map<int, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(int index) const
    {
        auto it = terms_.find(index);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add(int index, const Scalar& c)
    {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(index, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    void add(const LieElement& o, const Scalar& c = 1)
    {
        if (sgn(c) == 0) return;
        for (const auto& [i, v] : o.terms_) add(i, v * c);
    }

    LieElement& operator+=(const LieElement& o)
    {
        add(o);
        return *this;
    }
    LieElement& operator-=(const LieElement& o)
    {
        add(o, -1);
        return *this;
    }
    LieElement& operator*=(const Scalar& s)
    {
        if (sgn(s) == 0) terms_.clear();
        for (auto& [i, v] : terms_) v *= s;
        return *this;
    }
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Scalar& s, LieElement a) { return a *= s; }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

private:
    std::map<int, Scalar> terms_;
};

inline constexpr int kPositiveRoots = 24;
inline constexpr int kLieDim = 52;

/// Index layout shared by the canonical and working bases: F block mirrors the
/// E block (f_theta first), then h_1..h_4, then E by height.
inline constexpr int e_index(int root_pos) { return 28 + root_pos; }
inline constexpr int f_index(int root_pos) { return 23 - root_pos; }
inline constexpr int h_index(int j) { return 24 + j; }  // j = 0..3

namespace detail {

using Operator = std::vector<LieElement>;  // column images on the 52 basis vectors

inline LieElement apply(const Operator& op, const LieElement& x)
{
    LieElement r;
    for (const auto& [b, c] : x.terms()) r.add(op[static_cast<std::size_t>(b)], c);
    return r;
}

inline Operator commutator(const Operator& a, const Operator& b)
{
    Operator out(kLieDim);
    for (std::size_t i = 0; i < kLieDim; ++i) out[i] = apply(a, b[i]) - apply(b, a[i]);
    return out;
}

/// Canonical F4 algebra; Cartan basis = coroots of the F4 simple roots.
class CanonicalF4 {
public:
    CanonicalF4() : rs_(root_system(Label::F4))
    {
        const auto& pos = rs_.positive_roots;
        for (int i = 0; i < kPositiveRoots; ++i) pos_index_[pos[static_cast<std::size_t>(i)]] = i;
        for (int k = 0; k < 4; ++k) simple_pos_[k] = pos_index_.at(rs_.simple_roots[static_cast<std::size_t>(k)]);
        for (int i = 0; i < kPositiveRoots; ++i) {
            const Weight& x = pos[static_cast<std::size_t>(i)];
            decomp_[i] = {-1, -1};
            if (is_simple(i)) continue;
            for (int k = 0; k < 4; ++k) {
                auto it = pos_index_.find(x - alpha(k));
                if (it != pos_index_.end()) {
                    decomp_[i] = {k, it->second};
                    break;
                }
            }
            if (decomp_[i].first < 0) throw std::logic_error("canonical F4: no decomposition");
        }
        adf_.resize(4);
        ade_.resize(4);
        build_table();
    }

    const RootSystem& roots() const { return rs_; }
    int pos(const Weight& w) const { return pos_index_.at(w); }
    std::optional<int> find_pos(const Weight& w) const
    {
        auto it = pos_index_.find(w);
        if (it == pos_index_.end()) return std::nullopt;
        return it->second;
    }
    int simple_pos(int k) const { return simple_pos_[static_cast<std::size_t>(k)]; }

    /// Coroot of the k-th F4 simple root, as an epsilon-vector.
    Weight cartan_vector(int k) const { return coroot(alpha(k)); }

    LieElement bracket(const LieElement& x, const LieElement& y) const
    {
        LieElement r;
        for (const auto& [a, ca] : x.terms())
            for (const auto& [b, cb] : y.terms()) r.add(table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], ca * cb);
        return r;
    }

private:
    const Weight& alpha(int k) const { return rs_.simple_roots[static_cast<std::size_t>(k)]; }
    const Weight& root(int p) const { return rs_.positive_roots[static_cast<std::size_t>(p)]; }
    bool is_simple(int p) const
    {
        for (int k = 0; k < 4; ++k)
            if (simple_pos_[static_cast<std::size_t>(k)] == p) return true;
        return false;
    }
    int simple_number(int p) const
    {
        for (int k = 0; k < 4; ++k)
            if (simple_pos_[static_cast<std::size_t>(k)] == p) return k;
        return -1;
    }
    Scalar cartan_pairing(const Weight& w, int k) const { return pairing(w, alpha(k)); }

    Weight weight_of(int idx) const
    {
        if (idx >= 28) return root(idx - 28);
        if (idx < 24) return -root(23 - idx);
        return Weight{};
    }

    /// [e_j, X] for X in n+ + h.
    LieElement apply_e(int j, const LieElement& x)
    {
        LieElement r;
        for (const auto& [idx, c] : x.terms()) {
            if (idx >= 28) {
                int y = idx - 28;
                Scalar s = ad_e(j, y);
                if (sgn(s) != 0) r.add(e_index(pos(root(y) + alpha(j))), c * s);
            } else if (idx >= 24) {
                r.add(e_index(simple_pos(j)), -c * pairing(alpha(j), alpha(idx - 24)));
            } else {
                throw std::logic_error("apply_e: argument outside n+ + h");
            }
        }
        return r;
    }

    /// [f_k, E_x], an element of n+ + h.
    const LieElement& ad_f(int k, int x)
    {
        auto& memo = adf_[static_cast<std::size_t>(k)];
        if (auto it = memo.find(x); it != memo.end()) return it->second;
        LieElement r;
        if (is_simple(x)) {
            if (simple_number(x) == k) r.add(h_index(k), -1);
        } else {
            auto [j, w] = decomp_[static_cast<std::size_t>(x)];
            if (j == k) r.add(e_index(w), -cartan_pairing(root(w), j));
            r += apply_e(j, LieElement(ad_f(k, w)));
        }
        return memo.emplace(x, std::move(r)).first->second;
    }

    /// c with [e_j, E_y] = c E_{y + a_j}.
    Scalar ad_e(int j, int y)
    {
        auto& memo = ade_[static_cast<std::size_t>(j)];
        if (auto it = memo.find(y); it != memo.end()) return it->second;
        Scalar c = 0;
        if (auto xi = find_pos(root(y) + alpha(j))) {
            auto [k, w] = decomp_[static_cast<std::size_t>(*xi)];
            if (k == j) {
                c = 1;
            } else {
                // [f_k, [e_j, E_y]] = [e_j, [f_k, E_y]] and [f_k, E_xi] are both
                // multiples of E_w; the second is nonzero.
                LieElement lhs = apply_e(j, LieElement(ad_f(k, y)));
                LieElement rhs = ad_f(k, *xi);
                Scalar den = rhs.coeff(e_index(w));
                if (sgn(den) == 0 || rhs.terms().size() != 1 || lhs.terms().size() > 1)
                    throw std::logic_error("canonical F4: inconsistent root string");
                c = lhs.coeff(e_index(w)) / den;
            }
        }
        memo.emplace(y, c);
        return c;
    }

    static LieElement swap_ef(const LieElement& x)
    {
        LieElement r;
        for (const auto& [idx, c] : x.terms()) {
            if (idx >= 28) r.add(23 - (idx - 28), c);
            else if (idx < 24) r.add(28 + (23 - idx), c);
            else r.add(idx, -c);
        }
        return r;
    }

    void build_table()
    {
        std::vector<Operator> ad(kLieDim);
        for (int j = 0; j < 4; ++j) {
            Operator ade_op(kLieDim), adf_op(kLieDim);
            for (int b = 0; b < kLieDim; ++b) {
                auto& eb = ade_op[static_cast<std::size_t>(b)];
                auto& fb = adf_op[static_cast<std::size_t>(b)];
                if (b >= 28) {
                    int y = b - 28;
                    Scalar s = ad_e(j, y);
                    if (sgn(s) != 0) eb.add(e_index(pos(root(y) + alpha(j))), s);
                    fb = ad_f(j, y);
                } else if (b >= 24) {
                    Scalar a = pairing(alpha(j), alpha(b - 24));
                    eb.add(e_index(simple_pos(j)), -a);
                    fb.add(f_index(simple_pos(j)), a);
                } else {
                    int y = 23 - b;
                    eb = swap_ef(ad_f(j, y));
                    Scalar s = ad_e(j, y);
                    if (sgn(s) != 0) fb.add(f_index(pos(root(y) + alpha(j))), s);
                }
            }
            ad[static_cast<std::size_t>(e_index(simple_pos(j)))] = std::move(ade_op);
            ad[static_cast<std::size_t>(f_index(simple_pos(j)))] = std::move(adf_op);
        }
        for (int k = 0; k < 4; ++k) {
            Operator h(kLieDim);
            for (int b = 0; b < kLieDim; ++b) {
                Scalar s = cartan_pairing(weight_of(b), k);
                if (sgn(s) != 0) h[static_cast<std::size_t>(b)].add(b, s);
            }
            ad[static_cast<std::size_t>(h_index(k))] = std::move(h);
        }
        for (int x = 0; x < kPositiveRoots; ++x) {  // increasing height
            if (is_simple(x)) continue;
            auto [k, w] = decomp_[static_cast<std::size_t>(x)];
            ad[static_cast<std::size_t>(e_index(x))] = commutator(ad[static_cast<std::size_t>(e_index(simple_pos(k)))], ad[static_cast<std::size_t>(e_index(w))]);
            ad[static_cast<std::size_t>(f_index(x))] = commutator(ad[static_cast<std::size_t>(f_index(simple_pos(k)))], ad[static_cast<std::size_t>(f_index(w))]);
        }
        table_ = std::move(ad);
    }

    const RootSystem& rs_;
    std::map<Weight, int> pos_index_;
    std::array<int, 4> simple_pos_{};
    std::array<std::pair<int, int>, kPositiveRoots> decomp_{};
    std::vector<std::map<int, LieElement>> adf_;
    std::vector<std::map<int, Scalar>> ade_;
    std::vector<Operator> table_;
};

/// One line of the iterated-bracket table: e_target = coeff [e_left, e_right].
struct RootVectorRule {
    Weight target;
    Scalar coeff;
    Weight left, right;
};

/// Root vectors for the 20 non-simple positive roots, in evaluation order.
/// Two entries of the printed table are not weight-homogeneous and are read as:
///   e_{(e1-e2+e3-e4)/2} = [e_{e3}, e_4]   (equal to [e_2, e_{(e1-e2-e3+e4)/2}])
///   e_{(e1-e2+e3+e4)/2} = [e_{(e1-e2+e3-e4)/2}, e_3]
/// The second choice is the one for which the B4 embeddings send root vectors
/// to root vectors.
inline std::vector<RootVectorRule> root_vector_rules()
{
    const Weight e1 = Weight::unit(0), e2 = Weight::unit(1), e3 = Weight::unit(2), e4 = Weight::unit(3);
    const Weight a1 = e2 - e3, a2 = e3 - e4, a3 = e4, a4 = Weight::half(1, -1, -1, -1);
    const Scalar one = 1, half(1, 2);
    const Weight h_mmp = Weight::half(1, -1, -1, 1), h_mpm = Weight::half(1, -1, 1, -1);
    const Weight h_pmm = Weight::half(1, 1, -1, -1), h_mpp = Weight::half(1, -1, 1, 1);
    const Weight h_pmp = Weight::half(1, 1, -1, 1), h_ppm = Weight::half(1, 1, 1, -1);
    const Weight h_ppp = Weight::half(1, 1, 1, 1);
    return {
        {h_mmp, one, a3, a4},
        {e2 - e4, one, a2, a1},
        {e3, one, a2, a3},
        {h_mpm, one, e3, a4},
        {e2, one, e2 - e4, a3},
        {e3 + e4, half, e3, a3},
        {h_pmm, one, h_mpm, a1},
        {h_mpp, one, h_mpm, a3},
        {e2 + e4, half, e2, a3},
        {h_pmp, one, h_pmm, a3},
        {e1 - e2, half, h_mpm, h_mmp},
        {e2 + e3, half, e3, e2},
        {h_ppm, one, h_pmp, a2},
        {e1 - e3, one, e1 - e2, a1},
        {h_ppp, one, a3, h_ppm},
        {e1 - e4, one, e1 - e3, a2},
        {e1, one, e1 - e4, a3},
        {e1 + e4, half, e1, a3},
        {e1 + e3, half, e1, e3},
        {e1 + e2, half, e2, e1},
    };
}

}  // namespace detail

/// The Lie algebra g_F with structure constants in the working basis.
class LieAlgebra {
public:
    LieAlgebra()
    {
        const RootSystem& rs = root_system(Label::F4);
        detail::CanonicalF4 can;

        for (int p = 0; p < kPositiveRoots; ++p) root_pos_[rs.positive_roots[static_cast<std::size_t>(p)]] = p;

        basis_.resize(kLieDim);
        for (int p = 0; p < kPositiveRoots; ++p) {
            const Weight& r = rs.positive_roots[static_cast<std::size_t>(p)];
            basis_[static_cast<std::size_t>(e_index(p))] = {Kind::E, r, 0};
            basis_[static_cast<std::size_t>(f_index(p))] = {Kind::F, r, 0};
        }
        const auto& b4 = root_system(Label::B4).simple_roots;
        for (int j = 0; j < 4; ++j) {
            basis_[static_cast<std::size_t>(h_index(j))] = {Kind::H, Weight{}, j + 1};
            h_vectors_[static_cast<std::size_t>(j)] = coroot(b4[static_cast<std::size_t>(j)]);
        }
        // epsilon -> coordinates in the h_j basis
        ExactMatrix hm(4, 4);
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t i = 0; i < 4; ++i) hm(i, j) = h_vectors_[j][i];
        to_h_coords_ = inverse(hm);

        // Canonical-coordinate images of the working basis vectors.
        std::vector<LieElement> e_can(kPositiveRoots), f_can(kPositiveRoots);
        std::vector<bool> defined(kPositiveRoots, false);
        for (int k = 0; k < 4; ++k) {
            int p = can.simple_pos(k);
            e_can[static_cast<std::size_t>(p)] = LieElement(e_index(p), 1);
            f_can[static_cast<std::size_t>(p)] = LieElement(f_index(p), 1);
            defined[static_cast<std::size_t>(p)] = true;
        }
        for (const auto& rule : detail::root_vector_rules()) {
            if (rule.left + rule.right != rule.target)
                throw std::logic_error("root vector rule with inconsistent weights: " + rule.target.to_string());
            int t = can.pos(rule.target), l = can.pos(rule.left), r = can.pos(rule.right);
            if (!defined[static_cast<std::size_t>(l)] || !defined[static_cast<std::size_t>(r)] || defined[static_cast<std::size_t>(t)])
                throw std::logic_error("root vector rule out of order: " + rule.target.to_string());
            e_can[static_cast<std::size_t>(t)] = rule.coeff * can.bracket(e_can[static_cast<std::size_t>(l)], e_can[static_cast<std::size_t>(r)]);
            f_can[static_cast<std::size_t>(t)] = (-rule.coeff) * can.bracket(f_can[static_cast<std::size_t>(l)], f_can[static_cast<std::size_t>(r)]);
            if (e_can[static_cast<std::size_t>(t)].is_zero() || f_can[static_cast<std::size_t>(t)].is_zero())
                throw std::logic_error("root vector rule evaluates to zero: " + rule.target.to_string());
            defined[static_cast<std::size_t>(t)] = true;
        }

        // Working-basis vector -> canonical coordinates, and the inverse map.
        std::vector<LieElement> to_can(kLieDim);
        std::array<Scalar, kPositiveRoots> e_scale, f_scale;
        for (int p = 0; p < kPositiveRoots; ++p) {
            to_can[static_cast<std::size_t>(e_index(p))] = e_can[static_cast<std::size_t>(p)];
            to_can[static_cast<std::size_t>(f_index(p))] = f_can[static_cast<std::size_t>(p)];
            e_scale[static_cast<std::size_t>(p)] = e_can[static_cast<std::size_t>(p)].coeff(e_index(p));
            f_scale[static_cast<std::size_t>(p)] = f_can[static_cast<std::size_t>(p)].coeff(f_index(p));
        }
        // canonical Cartan basis (F4 simple coroots) in epsilon coordinates
        ExactMatrix cm(4, 4);
        for (std::size_t k = 0; k < 4; ++k) {
            Weight v = can.cartan_vector(static_cast<int>(k));
            for (std::size_t i = 0; i < 4; ++i) cm(i, k) = v[i];
        }
        ExactMatrix cm_inv = inverse(cm);
        for (std::size_t j = 0; j < 4; ++j) {
            LieElement h;
            for (std::size_t k = 0; k < 4; ++k) {
                Scalar c = 0;
                for (std::size_t i = 0; i < 4; ++i) c += cm_inv(k, i) * h_vectors_[j][i];
                h.add(h_index(static_cast<int>(k)), c);
            }
            to_can[static_cast<std::size_t>(h_index(static_cast<int>(j)))] = h;
        }
        auto from_can = [&](const LieElement& x) {
            LieElement r;
            Weight hv;
            for (const auto& [idx, c] : x.terms()) {
                if (idx >= 28) r.add(idx, c / e_scale[static_cast<std::size_t>(idx - 28)]);
                else if (idx < 24) r.add(idx, c / f_scale[static_cast<std::size_t>(23 - idx)]);
                else hv += c * can.cartan_vector(idx - 24);
            }
            r += cartan_element(hv);
            return r;
        };

        table_.assign(kLieDim, std::vector<LieElement>(kLieDim));
        for (std::size_t a = 0; a < kLieDim; ++a)
            for (std::size_t b = 0; b < kLieDim; ++b) {
                if (b < a) {
                    table_[a][b] = Scalar(-1) * table_[b][a];
                    continue;
                }
                table_[a][b] = from_can(can.bracket(to_can[a], to_can[b]));
            }

        for (int p = 0; p < kPositiveRoots; ++p) {
            const Weight& r = rs.positive_roots[static_cast<std::size_t>(p)];
            Weight h = cartan_vector(table_[static_cast<std::size_t>(e_index(p))][static_cast<std::size_t>(f_index(p))]);
            ef_form_[static_cast<std::size_t>(p)] = dot(h, r) / dot(r, r);
        }
    }

    int dim() const { return kLieDim; }
    const BasisElement& basis(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
    std::string name(int i) const { return basis(i).name(); }

    int e(const Weight& root) const { return e_index(root_pos_.at(root)); }
    int f(const Weight& root) const { return f_index(root_pos_.at(root)); }
    int h(int j) const { return h_index(j - 1); }  ///< j = 1..4
    bool has_root(const Weight& w) const { return root_pos_.count(w) != 0; }

    /// Weight of a basis vector under the Cartan subalgebra.
    Weight weight(int i) const
    {
        const auto& b = basis(i);
        if (b.kind == Kind::E) return b.root;
        if (b.kind == Kind::F) return -b.root;
        return Weight{};
    }

    const LieElement& bracket(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

    LieElement bracket(const LieElement& x, const LieElement& y) const
    {
        LieElement r;
        for (const auto& [a, ca] : x.terms())
            for (const auto& [b, cb] : y.terms()) r.add(bracket(a, b), ca * cb);
        return r;
    }

    /// Normalized invariant form, (theta, theta) = 2.
    Scalar form(int a, int b) const
    {
        const auto& x = basis(a);
        const auto& y = basis(b);
        if (x.kind == Kind::H && y.kind == Kind::H) return dot(h_vectors_[static_cast<std::size_t>(x.cartan - 1)], h_vectors_[static_cast<std::size_t>(y.cartan - 1)]);
        if ((x.kind == Kind::E && y.kind == Kind::F) || (x.kind == Kind::F && y.kind == Kind::E))
            return x.root == y.root ? ef_form_[static_cast<std::size_t>(root_pos_.at(x.root))] : Scalar(0);
        return 0;
    }

    Scalar form(const LieElement& x, const LieElement& y) const
    {
        Scalar s = 0;
        for (const auto& [a, ca] : x.terms())
            for (const auto& [b, cb] : y.terms()) {
                Scalar v = form(a, b);
                if (sgn(v) != 0) s += ca * cb * v;
            }
        return s;
    }

    /// Epsilon-vector of the Cartan part of x.
    Weight cartan_vector(const LieElement& x) const
    {
        Weight v;
        for (const auto& [idx, c] : x.terms())
            if (basis(idx).kind == Kind::H) v += c * h_vectors_[static_cast<std::size_t>(basis(idx).cartan - 1)];
        return v;
    }

    /// Epsilon-vector of h_j (j = 1..4).
    const Weight& h_vector(int j) const { return h_vectors_.at(static_cast<std::size_t>(j - 1)); }

    /// Cartan element with the given epsilon-vector.
    LieElement cartan_element(const Weight& v) const
    {
        LieElement r;
        for (std::size_t j = 0; j < 4; ++j) {
            Scalar c = 0;
            for (std::size_t i = 0; i < 4; ++i) c += to_h_coords_(j, i) * v[i];
            r.add(h_index(static_cast<int>(j)), c);
        }
        return r;
    }

    /// h_a = [e_a, f_a].
    LieElement h_of(const Weight& root) const { return bracket(e(root), f(root)); }

    /// Basis indices spanning the subalgebra attached to a root system.
    std::vector<int> subalgebra(Label label) const
    {
        std::vector<int> out;
        const auto& rs = root_system(label);
        for (const auto& r : rs.positive_roots) out.push_back(f(r));
        for (int j = 1; j <= 4; ++j) out.push_back(h(j));
        for (const auto& r : rs.positive_roots) out.push_back(e(r));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// (e_i, f_i) for the four simple roots of the given system.
    std::vector<std::pair<int, int>> chevalley_generators(Label label) const
    {
        std::vector<std::pair<int, int>> out;
        for (const auto& r : root_system(label).simple_roots) out.emplace_back(e(r), f(r));
        return out;
    }

private:
    std::vector<BasisElement> basis_;
    std::map<Weight, int> root_pos_;
    std::array<Weight, 4> h_vectors_;
    ExactMatrix to_h_coords_;
    std::vector<std::vector<LieElement>> table_;
    std::array<Scalar, kPositiveRoots> ef_form_;
};

/// Shared immutable instance.
inline const LieAlgebra& gF()
{
    static const LieAlgebra g;
    return g;
}

inline const LieAlgebra& build_gF() { return gF(); }

inline Scalar invariant_form(const LieElement& x, const LieElement& y) { return gF().form(x, y); }

inline LieElement basis_element(int i) { return LieElement(i, 1); }

// ---------------------------------------------------------------------------
// Embeddings g_B -> g_B', g_B''.

enum class Embedding { Prime, DoublePrime };

/// Images of the g_B basis under the Lie homomorphism sending e_{b_i}, f_{b_i}
/// to e_{b_i'}, f_{b_i'} (resp. b_i'').
inline std::map<int, LieElement> embedding_table(Embedding variant)
{
    const LieAlgebra& g = gF();
    const RootSystem& b = root_system(Label::B4);
    const RootSystem& t = root_system(variant == Embedding::Prime ? Label::B4prime : Label::B4doubleprime);

    std::map<int, LieElement> image;
    for (std::size_t i = 0; i < 4; ++i) {
        image[g.e(b.simple_roots[i])] = basis_element(g.e(t.simple_roots[i]));
        image[g.f(b.simple_roots[i])] = basis_element(g.f(t.simple_roots[i]));
    }
    for (const auto& r : b.positive_roots) {  // increasing height
        if (image.count(g.e(r))) continue;
        for (const auto& s : b.simple_roots) {
            Weight rest = r - s;
            if (!b.is_positive_root(rest)) continue;
            // e_r = c [e_s, e_rest] and f_r = d [f_s, f_rest]
            Scalar c = 1 / g.bracket(g.e(s), g.e(rest)).coeff(g.e(r));
            Scalar d = 1 / g.bracket(g.f(s), g.f(rest)).coeff(g.f(r));
            image[g.e(r)] = c * g.bracket(image.at(g.e(s)), image.at(g.e(rest)));
            image[g.f(r)] = d * g.bracket(image.at(g.f(s)), image.at(g.f(rest)));
            break;
        }
        if (!image.count(g.e(r))) throw std::logic_error("embedding: no decomposition for " + r.to_string());
    }
    // Cartan: h_j is a combination of the [e_{b_i}, f_{b_i}]
    ExactMatrix hb(4, 4);
    std::array<Weight, 4> hs;
    for (std::size_t i = 0; i < 4; ++i) {
        hs[i] = g.cartan_vector(g.bracket(g.e(b.simple_roots[i]), g.f(b.simple_roots[i])));
        for (std::size_t k = 0; k < 4; ++k) hb(k, i) = hs[i][k];
    }
    ExactMatrix hb_inv = inverse(hb);
    for (int j = 1; j <= 4; ++j) {
        const Weight& v = g.h_vector(j);
        LieElement img;
        for (std::size_t i = 0; i < 4; ++i) {
            Scalar c = 0;
            for (std::size_t k = 0; k < 4; ++k) c += hb_inv(i, k) * v[k];
            img.add(g.bracket(image.at(g.e(b.simple_roots[i])), image.at(g.f(b.simple_roots[i]))), c);
        }
        image[g.h(j)] = img;
    }
    return image;
}

/// Root-level map b_i -> b_i' (resp. b_i'').
inline Weight embed_root(Embedding variant, const Weight& w)
{
    const RootSystem& b = root_system(Label::B4);
    const RootSystem& t = root_system(variant == Embedding::Prime ? Label::B4prime : Label::B4doubleprime);
    auto c = b.simple_coords(w);
    Weight r;
    for (std::size_t i = 0; i < 4; ++i) r += c[i] * t.simple_roots[i];
    return r;
}

inline const std::map<int, LieElement>& embedding(Embedding variant)
{
    static const std::map<int, LieElement> prime = embedding_table(Embedding::Prime);
    static const std::map<int, LieElement> dprime = embedding_table(Embedding::DoublePrime);
    return variant == Embedding::Prime ? prime : dprime;
}

inline LieElement embed_pi(Embedding variant, const LieElement& x)
{
    const auto& table = embedding(variant);
    LieElement r;
    for (const auto& [idx, c] : x.terms()) {
        auto it = table.find(idx);
        if (it == table.end()) throw std::invalid_argument("embed_pi: element not in g_B: " + gF().name(idx));
        r.add(it->second, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Branching g_F = g_B (+) V_B(w4).

struct BranchComponent {
    Weight highest_weight;
    LieElement highest_vector;
    int dimension;
};

/// Span of the orbit of the given vectors under repeated ad of the listed basis elements.
inline std::vector<LieElement> adjoint_orbit(const std::vector<LieElement>& seeds, const std::vector<int>& ops)
{
    const LieAlgebra& g = gF();
    auto dense = [](const LieElement& x) {
        SparseVec v;
        for (const auto& [i, c] : x.terms()) v.emplace_back(static_cast<std::size_t>(i), c);
        return v;
    };
    EchelonBasis span;
    std::vector<LieElement> basis, frontier;
    for (const auto& s : seeds)
        if (span.insert(dense(s))) frontier.push_back(s);
    while (!frontier.empty()) {
        std::vector<LieElement> next;
        for (const auto& x : frontier) {
            basis.push_back(x);
            for (int op : ops) {
                LieElement y = g.bracket(basis_element(op), x);
                if (!y.is_zero() && span.insert(dense(y))) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    return basis;
}

inline std::vector<BranchComponent> branch_gF_over_gB()
{
    const LieAlgebra& g = gF();
    auto gens = g.chevalley_generators(Label::B4);
    ExactMatrix m(4 * kLieDim, kLieDim);
    for (std::size_t k = 0; k < 4; ++k)
        for (int col = 0; col < kLieDim; ++col)
            for (const auto& [row, c] : g.bracket(gens[k].first, col).terms())
                m(k * kLieDim + static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = c;
    // The kernel is graded by weight; split each kernel vector into weight pieces.
    std::map<Weight, EchelonBasis> by_weight;
    std::map<Weight, std::vector<LieElement>> vectors;
    for (const auto& v : nullspace(m)) {
        std::map<Weight, LieElement> pieces;
        for (int i = 0; i < kLieDim; ++i)
            if (sgn(v[static_cast<std::size_t>(i)]) != 0) pieces[g.weight(i)].add(i, v[static_cast<std::size_t>(i)]);
        for (auto& [w, x] : pieces) {
            SparseVec sv;
            for (const auto& [i, c] : x.terms()) sv.emplace_back(static_cast<std::size_t>(i), c);
            if (by_weight[w].insert(sv)) vectors[w].push_back(x);
        }
    }
    std::vector<int> ops;
    for (const auto& [e, f] : gens) {
        ops.push_back(e);
        ops.push_back(f);
    }
    std::vector<BranchComponent> out;
    for (const auto& [w, xs] : vectors)
        for (const auto& x : xs) out.push_back({w, x, static_cast<int>(adjoint_orbit({x}, ops).size())});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return b.dimension < a.dimension; });
    return out;
}

}  // namespace voakit
