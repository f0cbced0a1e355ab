#pragma once

// PBW arithmetic in U(g_F): monomials are nondecreasing sequences of basis
// indices (F block, then H, then E), so every E sits to the right.

#include "voakit/exact.hpp"
#include "voakit/liealg.hpp"
#include "voakit/rootsys.hpp"
#include "voakit/verma.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace voakit {

using PBWMonomial = std::vector<std::uint8_t>;

class UEAElement {
public:
    using Terms = std::map<PBWMonomial, Scalar>;

    UEAElement() = default;
    UEAElement(PBWMonomial m, const Scalar& c) { add(m, c); }

    static UEAElement one() { return UEAElement(PBWMonomial{}, 1); }
    static UEAElement generator(int x) { return UEAElement(PBWMonomial{static_cast<std::uint8_t>(x)}, 1); }
    static UEAElement from_lie(const LieElement& x)
    {
        UEAElement u;
        for (const auto& [i, c] : x.terms()) u.add(PBWMonomial{static_cast<std::uint8_t>(i)}, c);
        return u;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coeff(const PBWMonomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add(const PBWMonomial& m, const Scalar& c)
    {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    void add(const UEAElement& o, const Scalar& c = 1)
    {
        if (sgn(c) == 0) return;
        for (const auto& [m, v] : o.terms_) add(m, v * c);
    }

    UEAElement& operator+=(const UEAElement& o)
    {
        add(o);
        return *this;
    }
    UEAElement& operator-=(const UEAElement& o)
    {
        add(o, -1);
        return *this;
    }
    UEAElement& operator*=(const Scalar& s)
    {
        if (sgn(s) == 0) terms_.clear();
        for (auto& [m, v] : terms_) v *= s;
        return *this;
    }
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(const Scalar& s, UEAElement a) { return a *= s; }
    friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

inline Weight weight(const PBWMonomial& m)
{
    Weight w;
    for (auto x : m) w += gF().weight(x);
    return w;
}

/// Weight of a homogeneous element; throws otherwise.
inline Weight weight(const UEAElement& u)
{
    if (u.is_zero()) throw std::invalid_argument("weight of zero element");
    Weight w = weight(u.terms().begin()->first);
    for (const auto& [m, c] : u.terms())
        if (weight(m) != w) throw std::invalid_argument("element is not weight-homogeneous");
    return w;
}

inline std::string to_string(const UEAElement& u)
{
    if (u.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : u.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")";
        if (m.empty()) s += "*1";
        for (auto x : m) s += "*" + gF().name(x);
    }
    return s;
}

namespace detail {

class PBWCache {
public:
    static PBWCache& instance()
    {
        static PBWCache c;
        return c;
    }

    /// x_j * m in normal order.
    UEAElement left_mul(int j, const PBWMonomial& m)
    {
        if (m.empty() || j <= m.front()) {
            PBWMonomial r;
            r.reserve(m.size() + 1);
            r.push_back(static_cast<std::uint8_t>(j));
            r.insert(r.end(), m.begin(), m.end());
            return UEAElement(std::move(r), 1);
        }
        auto key = std::make_pair(j, m);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        // x_j x_a rest = x_a (x_j rest) + [x_j, x_a] rest
        const int a = m.front();
        const PBWMonomial rest(m.begin() + 1, m.end());
        UEAElement out;
        const UEAElement moved = left_mul(j, rest);
        for (const auto& [mm, c] : moved.terms()) out.add(left_mul(a, mm), c);
        for (const auto& [z, c] : gF().bracket(j, a).terms()) out.add(left_mul(z, rest), c);
        std::lock_guard<std::mutex> lock(mutex_);
        return cache_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, PBWMonomial>, UEAElement> cache_;
};

}  // namespace detail

inline UEAElement left_mul(int j, const UEAElement& u)
{
    UEAElement out;
    for (const auto& [m, c] : u.terms()) out.add(detail::PBWCache::instance().left_mul(j, m), c);
    return out;
}

inline UEAElement multiply(const UEAElement& a, const UEAElement& b)
{
    UEAElement out;
    for (const auto& [m, c] : a.terms()) {
        UEAElement t = b;
        for (auto it = m.rbegin(); it != m.rend(); ++it) t = left_mul(*it, t);
        out.add(t, c);
    }
    return out;
}

inline UEAElement power(const UEAElement& a, int n)
{
    UEAElement r = UEAElement::one();
    for (int i = 0; i < n; ++i) r = multiply(r, a);
    return r;
}

/// ad(x) u = x u - u x
inline UEAElement adjoint(const LieElement& x, const UEAElement& u)
{
    UEAElement xu;
    for (const auto& [i, c] : x.terms()) xu.add(left_mul(i, u), c);
    return xu - multiply(u, UEAElement::from_lie(x));
}

inline UEAElement adjoint(int x, const UEAElement& u) { return adjoint(basis_element(x), u); }

/// Lie homomorphism g_B -> g_F applied factor by factor.
inline UEAElement embed_pi(Embedding variant, const UEAElement& u)
{
    UEAElement out;
    for (const auto& [m, c] : u.terms()) {
        UEAElement t = UEAElement::one();
        for (auto x : m) t = multiply(t, UEAElement::from_lie(embed_pi(variant, basis_element(x))));
        out.add(t, c);
    }
    return out;
}

/// (sum c e_a e_b)^n, the image of the singular vector under the Zhu map.
inline UEAElement build_ideal_generator(Family family, int n)
{
    const LieAlgebra& g = gF();
    UEAElement q;
    for (const auto& [c, a, b] : singular_quadratic(family))
        q.add(multiply(UEAElement::generator(g.e(a)), UEAElement::generator(g.e(b))), c);
    return power(q, n);
}

// ---------------------------------------------------------------------------
// The module R generated by u under the adjoint action.

class WeightGradedSpan {
public:
    bool insert(const UEAElement& u)
    {
        Weight w = weight(u);
        auto& piece = pieces_[w];
        if (!piece.span.insert(piece.to_vec(u, true))) return false;
        piece.basis.push_back(u);
        ++dim_;
        return true;
    }

    bool contains(const UEAElement& u) const
    {
        if (u.is_zero()) return true;
        auto it = pieces_.find(weight(u));
        if (it == pieces_.end()) return false;
        for (const auto& [m, c] : u.terms())
            if (!it->second.index.find(m)) return false;
        return it->second.span.contains(it->second.to_vec(u, false));
    }

    std::size_t dim() const { return dim_; }

    const std::vector<UEAElement>& weight_space(const Weight& w) const
    {
        static const std::vector<UEAElement> empty;
        auto it = pieces_.find(w);
        return it == pieces_.end() ? empty : it->second.basis;
    }

    std::map<Weight, std::size_t> multiplicities() const
    {
        std::map<Weight, std::size_t> out;
        for (const auto& [w, p] : pieces_) out[w] = p.basis.size();
        return out;
    }

private:
    struct Piece {
        mutable Indexer<PBWMonomial> index;
        EchelonBasis span;
        std::vector<UEAElement> basis;

        SparseVec to_vec(const UEAElement& u, bool grow) const
        {
            SparseVec out;
            for (const auto& [m, c] : u.terms()) out.emplace_back(grow ? index.index(m) : *index.find(m), c);
            std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            return out;
        }
    };

    std::map<Weight, Piece> pieces_;
    std::size_t dim_ = 0;
};

/// Closure of {u} under ad of the Chevalley generators of g_X.
inline WeightGradedSpan generate_R(const UEAElement& u, Label algebra, std::size_t cap = 20000)
{
    const LieAlgebra& g = gF();
    std::vector<int> ops;
    for (const auto& [e, f] : g.chevalley_generators(algebra)) {
        ops.push_back(e);
        ops.push_back(f);
    }
    WeightGradedSpan r;
    std::vector<UEAElement> frontier;
    if (!u.is_zero() && r.insert(u)) frontier.push_back(u);
    while (!frontier.empty()) {
        std::vector<UEAElement> next;
        for (const auto& x : frontier)
            for (int op : ops) {
                UEAElement y = adjoint(op, x);
                if (!y.is_zero() && r.insert(y)) {
                    next.push_back(std::move(y));
                    if (r.dim() > cap) throw std::runtime_error("generate_R: iteration cap exceeded");
                }
            }
        frontier = std::move(next);
    }
    return r;
}

/// Linear form mu -> <mu, h> for a Cartan element with the given epsilon-vector.
inline SparsePoly cartan_form(const Weight& h, const Scalar& shift = 0)
{
    return SparsePoly::linear({h[0], h[1], h[2], h[3]}, shift);
}

/// p with r v_mu = p(mu) v_mu for a highest-weight vector v_mu.
inline SparsePoly hw_polynomial(const UEAElement& r)
{
    const LieAlgebra& g = gF();
    SparsePoly p;
    for (const auto& [m, c] : r.terms()) {
        if (weight(m) != Weight{}) throw std::invalid_argument("hw_polynomial: element is not of weight zero");
        bool annihilates = false;
        for (auto x : m)
            if (g.basis(x).kind == Kind::E) annihilates = true;
        if (annihilates) continue;
        SparsePoly t(c);
        for (auto x : m) t = t * cartan_form(g.h_vector(g.basis(x).cartan));
        p += t;
    }
    return p;
}

/// Zhu map: x1(-n1-1) ... xm(-nm-1) 1 -> (-1)^(n1+...+nm) xm ... x1.
inline UEAElement zhu_image(const StateVector& v)
{
    UEAElement out;
    for (const auto& [m, c] : v.terms()) {
        UEAElement t = UEAElement::one();
        int sign_exp = 0;
        for (auto f : m) {
            int mode = factor_mode(f);
            if (mode >= 0) throw std::invalid_argument("zhu_image: nonnegative mode");
            sign_exp += -mode - 1;
            t = multiply(UEAElement::generator(factor_basis(f)), t);
        }
        out.add(t, sign_exp % 2 == 0 ? c : Scalar(-c));
    }
    return out;
}

/// Highest-weight polynomials of the zero-weight space of R, reduced to an
/// echelon basis with leading coefficient 1.
inline std::vector<SparsePoly> zero_weight_polynomials(const WeightGradedSpan& r)
{
    std::vector<SparsePoly> polys;
    for (const auto& u : r.weight_space(Weight{})) polys.push_back(hw_polynomial(u));
    return polys;
}

/// Echelon form of a family of polynomials over their monomials.
inline std::vector<SparsePoly> poly_echelon(const std::vector<SparsePoly>& ps)
{
    Indexer<Exponent> idx;
    // index monomials in descending graded-lex order so pivots are leading terms
    std::vector<Exponent> all;
    for (const auto& p : ps)
        for (const auto& [e, c] : p.terms()) all.push_back(e);
    std::sort(all.begin(), all.end(), [](const Exponent& a, const Exponent& b) { return GradedLex{}(b, a); });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const auto& e : all) idx.index(e);
    EchelonBasis basis;
    for (const auto& p : ps) {
        SparseVec v;
        for (const auto& [e, c] : p.terms()) v.emplace_back(*idx.find(e), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.insert(v);
    }
    std::vector<SparsePoly> out;
    for (const auto& row : basis.rows()) {
        SparsePoly p;
        for (const auto& [i, c] : row) p.add_term(idx.key(i), c);
        out.push_back(p.monic());
    }
    return out;
}

/// Whether two families of polynomials span the same space.
inline bool same_span(const std::vector<SparsePoly>& a, const std::vector<SparsePoly>& b)
{
    auto ea = poly_echelon(a);
    auto eb = poly_echelon(b);
    if (ea.size() != eb.size()) return false;
    std::vector<SparsePoly> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return poly_echelon(both).size() == ea.size();
}

}  // namespace voakit
