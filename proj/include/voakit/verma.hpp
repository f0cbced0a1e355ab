#pragma once

// The generalized Verma module N(k,0) for the affine algebra of g_F (and its
// B4 subalgebras): states are normal-ordered products of negative modes
// x(n), n < 0, applied to the vacuum.

#include "voakit/exact.hpp"
#include "voakit/liealg.hpp"
#include "voakit/rootsys.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace voakit {

/// One factor x(n), packed so that integer order is (mode ascending, basis index).
using ModeFactor = std::uint16_t;

inline constexpr int kModeOffset = 128;

inline ModeFactor make_factor(int basis, int mode)
{
    if (mode < -kModeOffset || mode >= kModeOffset || basis < 0 || basis >= 256)
        throw std::out_of_range("make_factor: mode or basis index out of range");
    return static_cast<ModeFactor>(((mode + kModeOffset) << 8) | basis);
}
inline int factor_basis(ModeFactor f) { return f & 0xff; }
inline int factor_mode(ModeFactor f) { return (f >> 8) - kModeOffset; }

/// Sorted product x1(n1) x2(n2) ... applied to the vacuum.
using ModeMonomial = std::vector<ModeFactor>;

class StateVector {
public:
    using Terms = std::map<ModeMonomial, Scalar>;

    StateVector() = default;
    StateVector(ModeMonomial m, const Scalar& c) { add(m, c); }

    static StateVector vacuum() { return StateVector(ModeMonomial{}, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coeff(const ModeMonomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add(const ModeMonomial& m, const Scalar& c)
    {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    void add(const StateVector& o, const Scalar& c = 1)
    {
        if (sgn(c) == 0) return;
        for (const auto& [m, v] : o.terms_) add(m, v * c);
    }

    StateVector& operator+=(const StateVector& o)
    {
        add(o);
        return *this;
    }
    StateVector& operator-=(const StateVector& o)
    {
        add(o, -1);
        return *this;
    }
    StateVector& operator*=(const Scalar& s)
    {
        if (sgn(s) == 0) terms_.clear();
        for (auto& [m, v] : terms_) v *= s;
        return *this;
    }
    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
    friend StateVector operator*(const Scalar& s, StateVector a) { return a *= s; }
    friend bool operator==(const StateVector& a, const StateVector& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

inline int degree(const ModeMonomial& m)
{
    int d = 0;
    for (auto f : m) d -= factor_mode(f);
    return d;
}

inline Weight weight(const ModeMonomial& m)
{
    Weight w;
    for (auto f : m) w += gF().weight(factor_basis(f));
    return w;
}

/// Degree of a homogeneous state; throws if v is zero or not homogeneous.
inline int degree(const StateVector& v)
{
    if (v.is_zero()) throw std::invalid_argument("degree of zero state");
    int d = degree(v.terms().begin()->first);
    for (const auto& [m, c] : v.terms())
        if (degree(m) != d) throw std::invalid_argument("state is not homogeneous in degree");
    return d;
}

inline Weight weight(const StateVector& v)
{
    if (v.is_zero()) throw std::invalid_argument("weight of zero state");
    Weight w = weight(v.terms().begin()->first);
    for (const auto& [m, c] : v.terms())
        if (weight(m) != w) throw std::invalid_argument("state is not homogeneous in weight");
    return w;
}

/// x1(n1) ... xr(nr) 1 with the factors taken in the given order.
inline ModeMonomial mode_monomial(std::vector<std::pair<int, int>> factors)
{
    ModeMonomial m;
    for (const auto& [x, n] : factors) m.push_back(make_factor(x, n));
    std::sort(m.begin(), m.end());
    return m;
}

inline std::string to_string(const ModeMonomial& m)
{
    if (m.empty()) return "1";
    std::string s;
    for (auto f : m) s += gF().name(factor_basis(f)) + "(" + std::to_string(factor_mode(f)) + ")";
    return s;
}

inline std::string to_string(const StateVector& v)
{
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : v.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*" + to_string(m);
    }
    return s;
}

/// N(k,0) at a fixed level. Mode actions are memoized per monomial.
class VermaModule {
public:
    explicit VermaModule(Scalar level) : level_(std::move(level)) {}

    const Scalar& level() const { return level_; }

    StateVector act(int x, int n, const StateVector& v) const
    {
        StateVector out;
        for (const auto& [m, c] : v.terms()) out.add(act_monomial(x, n, m), c);
        return out;
    }

    StateVector act(const LieElement& x, int n, const StateVector& v) const
    {
        StateVector out;
        for (const auto& [i, c] : x.terms()) out.add(act(i, n, v), c);
        return out;
    }

    /// x(n) applied to a single monomial.
    StateVector act_monomial(int x, int n, const ModeMonomial& m) const
    {
        auto key = std::make_tuple(x, n, m);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        StateVector out = compute(x, n, m);
        std::lock_guard<std::mutex> lock(mutex_);
        return cache_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    // x(n) y(p) rest = y(p) x(n) rest + [x,y](n+p) rest + n delta_{n+p,0} (x,y) k rest
    StateVector compute(int x, int n, const ModeMonomial& m) const
    {
        if (m.empty()) {
            if (n >= 0) return {};
            return StateVector(ModeMonomial{make_factor(x, n)}, 1);
        }
        const ModeFactor mine = make_factor(x, n);
        if (n < 0 && mine <= m.front()) {
            ModeMonomial r;
            r.reserve(m.size() + 1);
            r.push_back(mine);
            r.insert(r.end(), m.begin(), m.end());
            return StateVector(std::move(r), 1);
        }
        const int y = factor_basis(m.front());
        const int p = factor_mode(m.front());
        const ModeMonomial rest(m.begin() + 1, m.end());
        const LieAlgebra& g = gF();

        StateVector out;
        StateVector moved = act_monomial(x, n, rest);
        for (const auto& [mm, c] : moved.terms()) out.add(act_monomial(y, p, mm), c);
        for (const auto& [z, c] : g.bracket(x, y).terms()) out.add(act_monomial(z, n + p, rest), c);
        if (n + p == 0) {
            Scalar f = g.form(x, y);
            if (sgn(f) != 0) out.add(rest, n * f * level_);
        }
        return out;
    }

    Scalar level_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<int, int, ModeMonomial>, StateVector> cache_;
};

// ---------------------------------------------------------------------------
// Singular vectors.

enum class Family { B, Bprime, Bdoubleprime, F };

inline std::string to_string(Family f)
{
    switch (f) {
    case Family::B: return "B";
    case Family::Bprime: return "Bprime";
    case Family::Bdoubleprime: return "Bdoubleprime";
    case Family::F: return "F";
    }
    return "?";
}

/// The degree-2 quadratic whose n-th power gives the singular vector, as
/// (coefficient, root, root) triples: c e_a(-1) e_b(-1).
inline std::vector<std::tuple<Scalar, Weight, Weight>> singular_quadratic(Family family)
{
    const Weight e1 = Weight::unit(0), e2 = Weight::unit(1), e3 = Weight::unit(2), e4 = Weight::unit(3);
    const Scalar q(-1, 4);
    switch (family) {
    case Family::B:
    case Family::F:
        return {{q, e1, e1}, {1, e1 - e2, e1 + e2}, {1, e1 - e3, e1 + e3}, {1, e1 - e4, e1 + e4}};
    case Family::Bprime: {
        Weight s = Weight::half(1, 1, 1, -1);
        return {{q, s, s}, {1, e2 + e3, e1 - e4}, {1, e2 - e4, e1 + e3}, {1, e3 - e4, e1 + e2}};
    }
    case Family::Bdoubleprime: {
        Weight s = Weight::half(1, 1, 1, 1);
        return {{q, s, s}, {1, e2 + e3, e1 + e4}, {1, e2 + e4, e1 + e3}, {1, e3 + e4, e1 + e2}};
    }
    }
    throw std::invalid_argument("bad family");
}

/// (sum c e_a(-1) e_b(-1))^n 1, expanded in N(k,0).
inline StateVector build_singular(const VermaModule& vm, Family family, int n)
{
    if (n < 1) throw std::invalid_argument("build_singular: n must be positive");
    const LieAlgebra& g = gF();
    const auto quad = singular_quadratic(family);
    StateVector v = StateVector::vacuum();
    for (int i = 0; i < n; ++i) {
        StateVector next;
        for (const auto& [c, a, b] : quad) next.add(vm.act(g.e(a), -1, vm.act(g.e(b), -1, v)), c);
        v = std::move(next);
    }
    return v;
}

inline Label family_label(Family f)
{
    switch (f) {
    case Family::B: return Label::B4;
    case Family::Bprime: return Label::B4prime;
    case Family::Bdoubleprime: return Label::B4doubleprime;
    case Family::F: return Label::F4;
    }
    throw std::invalid_argument("bad family");
}

/// e_i(0) v = 0 for the four simple roots of the subalgebra and f_theta(1) v = 0.
inline bool is_singular(const VermaModule& vm, const StateVector& v, Label subalgebra, const Weight& theta)
{
    const LieAlgebra& g = gF();
    for (const auto& r : root_system(subalgebra).simple_roots)
        if (!vm.act(g.e(r), 0, v).is_zero()) return false;
    return vm.act(g.f(theta), 1, v).is_zero();
}

inline bool is_singular(const VermaModule& vm, const StateVector& v, Label subalgebra)
{
    return is_singular(vm, v, subalgebra, root_system(subalgebra).highest_root);
}

// ---------------------------------------------------------------------------
// Spans of states.

/// Echelon basis of states, with monomials indexed on the fly.
class StateSpan {
public:
    bool insert(const StateVector& v) { return basis_.insert(to_vec(v, true)); }
    bool contains(const StateVector& v) const
    {
        for (const auto& [m, c] : v.terms())
            if (!index_.find(m)) return false;
        return basis_.contains(to_vec(v, false));
    }
    std::size_t dim() const { return basis_.dim(); }

private:
    SparseVec to_vec(const StateVector& v, bool grow) const
    {
        SparseVec out;
        for (const auto& [m, c] : v.terms()) {
            std::size_t i = grow ? index_.index(m) : *index_.find(m);
            out.emplace_back(i, c);
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    mutable Indexer<ModeMonomial> index_;
    EchelonBasis basis_;
};

struct Orbit {
    std::vector<StateVector> basis;
    StateSpan span;
};

/// Span of U(g_X) v inside the degree of v, grown by the zero modes of the
/// Chevalley generators of g_X (they generate the same span as all of g_X).
inline Orbit zero_mode_orbit(const VermaModule& vm, const StateVector& v, Label subalgebra, std::size_t cap = 100000)
{
    const LieAlgebra& g = gF();
    std::vector<int> ops;
    for (const auto& [e, f] : g.chevalley_generators(subalgebra)) {
        ops.push_back(e);
        ops.push_back(f);
    }
    Orbit orbit;
    std::vector<StateVector> frontier;
    if (!v.is_zero() && orbit.span.insert(v)) frontier.push_back(v);
    while (!frontier.empty()) {
        std::vector<StateVector> next;
        for (auto& x : frontier) {
            for (int op : ops) {
                StateVector y = vm.act(op, 0, x);
                if (!y.is_zero() && orbit.span.insert(y)) {
                    next.push_back(std::move(y));
                    if (orbit.span.dim() > cap) throw std::runtime_error("zero_mode_orbit: iteration cap exceeded");
                }
            }
            orbit.basis.push_back(std::move(x));
        }
        frontier = std::move(next);
    }
    return orbit;
}

/// a == b modulo the degree-d component U(g_X) ideal_gen of the ideal.
inline bool equals_mod_ideal(const VermaModule& vm, const StateVector& a, const StateVector& b,
                             const StateVector& ideal_gen, Label subalgebra)
{
    int d = degree(ideal_gen);
    StateVector diff = a - b;
    if (diff.is_zero()) return true;
    if (degree(diff) != d) throw std::invalid_argument("equals_mod_ideal: degree mismatch");
    Orbit orbit = zero_mode_orbit(vm, ideal_gen, subalgebra);
    return orbit.span.contains(diff);
}

// ---------------------------------------------------------------------------
// Conformal vectors.

/// 1/(2(k+h)) sum_i x_i(-1) x^i(-1) 1 over the basis of g_X and its dual basis.
inline StateVector conformal_vector(const VermaModule& vm, Label subalgebra)
{
    const LieAlgebra& g = gF();
    const RootSystem& rs = root_system(subalgebra);
    Scalar denom = 2 * (vm.level() + dual_coxeter(rs));
    if (sgn(denom) == 0) throw std::domain_error("conformal_vector: critical level");

    StateVector sum;
    auto pair_term = [&](int a, int b, const Scalar& c) {
        sum.add(vm.act(a, -1, vm.act(b, -1, StateVector::vacuum())), c);
    };
    for (const auto& r : rs.positive_roots) {
        int e = g.e(r), f = g.f(r);
        Scalar inv = 1 / g.form(e, f);
        pair_term(e, f, inv);
        pair_term(f, e, inv);
    }
    ExactMatrix gram(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) gram(i, j) = g.form(g.h(static_cast<int>(i) + 1), g.h(static_cast<int>(j) + 1));
    ExactMatrix dual = inverse(gram);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) pair_term(g.h(static_cast<int>(i) + 1), g.h(static_cast<int>(j) + 1), dual(i, j));
    return (1 / denom) * sum;
}

// ---------------------------------------------------------------------------
// Low-degree singular vectors for a subalgebra inside L_F(k,0).

struct SingularSearch {
    std::vector<StateVector> raising_kernel;  ///< killed by the e_i(0) only
    std::vector<StateVector> singular;        ///< also killed by f_theta(1)
};

/// Degree 0 or 1 of L_F(k,0). The maximal submodule is generated in degree
/// 2 by a singular vector, so these pieces coincide with those of N(k,0).
inline SingularSearch find_subalgebra_singular(const VermaModule& vm, int degree_, Label subalgebra)
{
    const LieAlgebra& g = gF();
    std::vector<StateVector> space;
    if (degree_ == 0) {
        space.push_back(StateVector::vacuum());
    } else if (degree_ == 1) {
        for (int x = 0; x < kLieDim; ++x) space.push_back(vm.act(x, -1, StateVector::vacuum()));
    } else {
        throw std::invalid_argument("find_subalgebra_singular: unsupported degree " + std::to_string(degree_));
    }
    const RootSystem& rs = root_system(subalgebra);

    auto kernel = [&](const std::vector<std::pair<int, int>>& ops) {
        Indexer<ModeMonomial> rows;
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(space.size());
        for (std::size_t j = 0; j < space.size(); ++j)
            for (std::size_t k = 0; k < ops.size(); ++k) {
                StateVector img = vm.act(ops[k].first, ops[k].second, space[j]);
                for (const auto& [m, c] : img.terms()) {
                    ModeMonomial tagged = m;
                    tagged.insert(tagged.begin(), static_cast<ModeFactor>(k));  // separate operators
                    cols[j].emplace_back(rows.index(tagged), c);
                }
            }
        ExactMatrix mat(std::max<std::size_t>(rows.size(), 1), space.size());
        for (std::size_t j = 0; j < space.size(); ++j)
            for (const auto& [i, c] : cols[j]) mat(i, j) += c;
        std::vector<StateVector> out;
        for (const auto& vec : nullspace(mat)) {
            StateVector s;
            for (std::size_t j = 0; j < space.size(); ++j) s.add(space[j], vec[j]);
            out.push_back(std::move(s));
        }
        return out;
    };

    std::vector<std::pair<int, int>> ops;
    for (const auto& r : rs.simple_roots) ops.emplace_back(g.e(r), 0);
    SingularSearch result;
    result.raising_kernel = kernel(ops);
    ops.emplace_back(g.f(rs.highest_root), 1);
    result.singular = kernel(ops);
    return result;
}

}  // namespace voakit
