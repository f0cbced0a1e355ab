#pragma once

// Root systems F4, B4 and the two further B4 subsystems of F4, all living in
// the same four-dimensional epsilon-space with (e_i, e_j) = delta_ij, which
// gives (theta, theta) = 2 for the highest root theta = e1 + e2.

#include "voakit/exact.hpp"

#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace voakit {

/// A vector in epsilon-coordinates.
struct Weight {
    std::array<Scalar, 4> eps{};

    Weight() = default;
    Weight(Scalar a, Scalar b, Scalar c, Scalar d) : eps{std::move(a), std::move(b), std::move(c), std::move(d)} {}
    explicit Weight(const std::array<Scalar, 4>& e) : eps(e) {}

    static Weight unit(int i)
    {
        Weight w;
        w.eps.at(static_cast<std::size_t>(i)) = 1;
        return w;
    }
    /// (a e1 + b e2 + c e3 + d e4) / 2
    static Weight half(int a, int b, int c, int d)
    {
        return Weight(rational(a, 2), rational(b, 2), rational(c, 2), rational(d, 2));
    }

    const Scalar& operator[](std::size_t i) const { return eps[i]; }
    Scalar& operator[](std::size_t i) { return eps[i]; }

    bool is_zero() const
    {
        for (const auto& x : eps)
            if (sgn(x) != 0) return false;
        return true;
    }

    Weight& operator+=(const Weight& o)
    {
        for (std::size_t i = 0; i < 4; ++i) eps[i] += o.eps[i];
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        for (std::size_t i = 0; i < 4; ++i) eps[i] -= o.eps[i];
        return *this;
    }
    Weight& operator*=(const Scalar& s)
    {
        for (auto& x : eps) x *= s;
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a) { return a *= Scalar(-1); }
    friend Weight operator*(const Scalar& s, Weight a) { return a *= s; }
    friend bool operator==(const Weight& a, const Weight& b) { return a.eps == b.eps; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.eps < b.eps; }

    std::string to_string() const
    {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < 4; ++i) os << (i ? ", " : "") << voakit::to_string(eps[i]);
        os << ")";
        return os.str();
    }

    /// Report tag such as "[1,-1,0,0]" or "[1/2,1/2,1/2,1/2]".
    std::string tag() const
    {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << voakit::to_string(eps[i]);
        os << "]";
        return os.str();
    }
};

/// The normalized invariant form; the Gram matrix is the identity.
inline Scalar dot(const Weight& a, const Weight& b)
{
    Scalar s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += a.eps[i] * b.eps[i];
    return s;
}

/// <lambda, a^vee> = 2 (lambda, a) / (a, a)
inline Scalar pairing(const Weight& lambda, const Weight& a) { return 2 * dot(lambda, a) / dot(a, a); }

enum class Label { F4, B4, B4prime, B4doubleprime };

inline std::string to_string(Label l)
{
    switch (l) {
    case Label::F4: return "F4";
    case Label::B4: return "B4";
    case Label::B4prime: return "B4prime";
    case Label::B4doubleprime: return "B4doubleprime";
    }
    return "?";
}

inline Label parse_label(const std::string& s)
{
    if (s == "F4") return Label::F4;
    if (s == "B4") return Label::B4;
    if (s == "B4prime" || s == "B4'") return Label::B4prime;
    if (s == "B4doubleprime" || s == "B4''") return Label::B4doubleprime;
    throw std::invalid_argument("unknown root system label: " + s);
}

struct RootSystem {
    Label label;
    std::array<Weight, 4> simple_roots;
    std::vector<Weight> roots;           ///< sorted, closed under negation
    std::vector<Weight> positive_roots;  ///< by height, then lexicographically
    Weight highest_root;
    ExactMatrix to_simple;  ///< epsilon -> simple-root coordinates

    bool is_root(const Weight& w) const { return std::binary_search(roots.begin(), roots.end(), w); }
    bool is_positive_root(const Weight& w) const
    {
        return std::find(positive_roots.begin(), positive_roots.end(), w) != positive_roots.end();
    }

    std::array<Scalar, 4> simple_coords(const Weight& w) const
    {
        std::array<Scalar, 4> c;
        for (std::size_t i = 0; i < 4; ++i) {
            Scalar s = 0;
            for (std::size_t j = 0; j < 4; ++j) s += to_simple(i, j) * w[j];
            c[i] = s;
        }
        return c;
    }

    Scalar height(const Weight& w) const
    {
        auto c = simple_coords(w);
        return c[0] + c[1] + c[2] + c[3];
    }

    bool is_short(const Weight& root) const { return dot(root, root) == 1; }
};

inline std::array<Weight, 4> simple_roots_of(Label label)
{
    const Weight e1 = Weight::unit(0), e2 = Weight::unit(1), e3 = Weight::unit(2), e4 = Weight::unit(3);
    switch (label) {
    case Label::F4: return {e2 - e3, e3 - e4, e4, Weight::half(1, -1, -1, -1)};
    case Label::B4: return {e1 - e2, e2 - e3, e3 - e4, e4};
    case Label::B4prime: return {e3 - e4, e2 - e3, e3 + e4, Weight::half(1, -1, -1, -1)};
    case Label::B4doubleprime: return {e3 + e4, e2 - e3, e3 - e4, Weight::half(1, -1, -1, 1)};
    }
    throw std::invalid_argument("bad label");
}

/// Reflection of b in the hyperplane orthogonal to a.
inline Weight reflect(const Weight& a, const Weight& b) { return b - pairing(b, a) * a; }

/// Root system generated from the simple roots by closure under reflections.
inline RootSystem build(Label label)
{
    RootSystem rs{label, simple_roots_of(label), {}, {}, {}, {}};

    std::set<Weight> found;
    std::vector<Weight> frontier;
    for (const auto& s : rs.simple_roots) {
        if (found.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& b : frontier)
            for (const auto& s : rs.simple_roots) {
                Weight r = reflect(s, b);
                if (found.insert(r).second) next.push_back(r);
            }
        frontier = std::move(next);
    }
    rs.roots.assign(found.begin(), found.end());

    ExactMatrix m(4, 4);  // columns are simple roots
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) m(i, j) = rs.simple_roots[j][i];
    rs.to_simple = inverse(m);

    for (const auto& r : rs.roots) {
        auto c = rs.simple_coords(r);
        if (sgn(c[0]) >= 0 && sgn(c[1]) >= 0 && sgn(c[2]) >= 0 && sgn(c[3]) >= 0) rs.positive_roots.push_back(r);
    }
    std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const Weight& a, const Weight& b) {
        Scalar ha = rs.height(a), hb = rs.height(b);
        if (ha != hb) return ha < hb;
        return b < a;
    });
    rs.highest_root = rs.positive_roots.back();
    return rs;
}

/// Cached immutable instances.
inline const RootSystem& root_system(Label label)
{
    static const std::array<RootSystem, 4> all{build(Label::F4), build(Label::B4), build(Label::B4prime),
                                               build(Label::B4doubleprime)};
    return all.at(static_cast<std::size_t>(label));
}

/// 2a / (a, a); every root of the four systems is a root of F4.
inline Weight coroot(const Weight& a)
{
    if (!root_system(Label::F4).is_root(a)) throw std::invalid_argument("coroot: not a root: " + a.to_string());
    return (Scalar(2) / dot(a, a)) * a;
}

/// Fundamental weights, defined by <w_i, alpha_j^vee> = delta_ij.
inline std::array<Weight, 4> fundamental_weights(const RootSystem& rs)
{
    ExactMatrix a(4, 4);  // rows: simple coroots
    for (std::size_t j = 0; j < 4; ++j) {
        Weight c = (Scalar(2) / dot(rs.simple_roots[j], rs.simple_roots[j])) * rs.simple_roots[j];
        for (std::size_t i = 0; i < 4; ++i) a(j, i) = c[i];
    }
    ExactMatrix inv = inverse(a);
    std::array<Weight, 4> w;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) w[i][k] = inv(k, i);
    return w;
}

/// Sum of the fundamental weights.
inline Weight rho_bar(const RootSystem& rs)
{
    Weight r;
    for (const auto& w : fundamental_weights(rs)) r += w;
    return r;
}

/// Coordinates <mu, alpha_i^vee> in the fundamental-weight basis.
inline std::array<Scalar, 4> fund_coords(const RootSystem& rs, const Weight& mu)
{
    std::array<Scalar, 4> c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = pairing(mu, rs.simple_roots[i]);
    return c;
}

inline Weight from_fund(const RootSystem& rs, const std::array<Scalar, 4>& coeffs)
{
    auto w = fundamental_weights(rs);
    Weight mu;
    for (std::size_t i = 0; i < 4; ++i) mu += coeffs[i] * w[i];
    return mu;
}

inline bool is_dominant_integral(const RootSystem& rs, const Weight& mu)
{
    for (const auto& c : fund_coords(rs, mu))
        if (!is_integer(c) || sgn(c) < 0) return false;
    return true;
}

/// Weyl dimension formula.
inline mpz_class weyl_dim(const RootSystem& rs, const Weight& mu)
{
    if (!is_dominant_integral(rs, mu))
        throw std::invalid_argument("weyl_dim: weight is not dominant integral: " + mu.to_string());
    Weight rho = rho_bar(rs);
    Weight shifted = mu + rho;
    Scalar d = 1;
    for (const auto& a : rs.positive_roots) d *= dot(shifted, a) / dot(rho, a);
    if (!is_integer(d)) throw std::logic_error("weyl_dim: non-integral result");
    return d.get_num();
}

/// Whether v is a nonempty sum of positive roots. Simple roots are positive,
/// so this is exactly: v != 0 with nonnegative integral simple-root coordinates.
inline bool is_positive_root_sum(const RootSystem& rs, const Weight& v)
{
    if (v.is_zero()) return false;
    for (const auto& c : rs.simple_coords(v))
        if (!is_integer(c) || sgn(c) < 0) return false;
    return true;
}

inline int dual_coxeter(const RootSystem& rs)
{
    Scalar h = 1 + pairing(rho_bar(rs), rs.highest_root);
    if (!is_integer(h)) throw std::logic_error("dual Coxeter number not integral");
    return static_cast<int>(h.get_num().get_si());
}

inline int lie_dim(const RootSystem& rs) { return static_cast<int>(rs.roots.size()) + 4; }

/// c = k dim g / (k + h^vee)
inline Scalar central_charge(const RootSystem& rs, const Scalar& k)
{
    Scalar denom = k + dual_coxeter(rs);
    if (sgn(denom) == 0) throw std::domain_error("central_charge: critical level");
    return k * lie_dim(rs) / denom;
}

/// Substitutes the epsilon-coordinates of mu.
inline Scalar evaluate(const SparsePoly& p, const Weight& mu) { return p.evaluate(mu.eps); }

}  // namespace voakit
