#pragma once

// Weights of the untwisted affine algebras over g_B and g_F, real coroots,
// the shifted Weyl action and the Kac-Wakimoto admissibility test.

#include "voakit/exact.hpp"
#include "voakit/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace voakit {

/// level * Lambda_0 + finite + delta_coeff * delta
struct AffineWeight {
    Scalar level;
    Weight finite;
    Scalar delta;

    AffineWeight& operator+=(const AffineWeight& o)
    {
        level += o.level;
        finite += o.finite;
        delta += o.delta;
        return *this;
    }
    AffineWeight& operator-=(const AffineWeight& o)
    {
        level -= o.level;
        finite -= o.finite;
        delta -= o.delta;
        return *this;
    }
    friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
    friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
    friend AffineWeight operator*(const Scalar& s, const AffineWeight& a) { return {s * a.level, s * a.finite, s * a.delta}; }
    friend bool operator==(const AffineWeight& a, const AffineWeight& b)
    {
        return a.level == b.level && a.finite == b.finite && a.delta == b.delta;
    }

    std::string to_string() const
    {
        return voakit::to_string(level) + " L0 + " + finite.to_string() + " + " + voakit::to_string(delta) + " d";
    }
};

inline AffineWeight level_weight(const Scalar& k, const Weight& mu = {}) { return {k, mu, 0}; }

/// (n - 7/2) Lambda_0
inline AffineWeight lambda_n(int n) { return level_weight(Scalar(2 * n - 7, 2)); }

/// rho = rho_bar + h Lambda_0
inline AffineWeight affine_rho(const RootSystem& rs) { return {dual_coxeter(rs), rho_bar(rs), 0}; }

/// (alpha + layer delta)^vee = alpha^vee + layer (2/(alpha,alpha)) c
struct RealCoroot {
    Weight finite_root;
    int layer = 0;

    Scalar c_coeff() const { return layer * (Scalar(2) / dot(finite_root, finite_root)); }

    bool is_positive(const RootSystem& rs) const
    {
        return layer > 0 || (layer == 0 && rs.is_positive_root(finite_root));
    }

    /// The affine root alpha + layer delta, as a weight of level 0.
    AffineWeight root() const { return {0, finite_root, layer}; }

    friend bool operator==(const RealCoroot& a, const RealCoroot& b)
    {
        return a.layer == b.layer && a.finite_root == b.finite_root;
    }
    friend bool operator<(const RealCoroot& a, const RealCoroot& b)
    {
        if (a.layer != b.layer) return a.layer < b.layer;
        return a.finite_root < b.finite_root;
    }

    std::string to_string() const
    {
        std::string s = "(";
        if (layer != 0) s += (layer == 1 ? std::string() : std::to_string(layer)) + "d + ";
        return s + finite_root.tag() + ")^v";
    }
};

/// alpha_0^vee = (delta - theta)^vee
inline RealCoroot alpha0(const RootSystem& rs) { return {-rs.highest_root, 1}; }

/// <lambda, (alpha + n delta)^vee>; delta pairs to zero with every coroot.
inline Scalar pair(const AffineWeight& lambda, const RealCoroot& c)
{
    return pairing(lambda.finite, c.finite_root) + c.c_coeff() * lambda.level;
}

/// r_a . lambda = lambda - <lambda + rho, a^vee> a
inline AffineWeight shifted_reflect(const RootSystem& rs, const RealCoroot& a, const AffineWeight& lambda)
{
    Scalar p = pair(lambda + affine_rho(rs), a);
    return lambda - p * a.root();
}

/// (mu, mu + 2 rho_bar) / (2 (k + h))
inline Scalar lowest_conformal_weight(const RootSystem& rs, const Scalar& k, const Weight& mu)
{
    Scalar denom = 2 * (k + dual_coxeter(rs));
    if (sgn(denom) == 0) throw std::domain_error("lowest_conformal_weight: critical level");
    return dot(mu, mu + Scalar(2) * rho_bar(rs)) / denom;
}

struct Admissibility {
    bool admissible = false;
    bool regular_dominant = false;  ///< no pairing with a positive real coroot in {0, -1, -2, ...}
    std::size_t rank = 0;           ///< rank of the integral coroots
    std::vector<RealCoroot> simple_coroots;
    std::string reason;
};

/// Kac-Wakimoto admissibility for level + h > 0.
inline Admissibility is_admissible(const AffineWeight& lambda, const RootSystem& rs)
{
    const int h = dual_coxeter(rs);
    const Scalar shifted_level = lambda.level + h;
    if (sgn(shifted_level) <= 0) throw std::domain_error("is_admissible: requires level + h > 0");
    const AffineWeight lr = lambda + affine_rho(rs);

    Admissibility out;
    out.regular_dominant = true;
    // <lambda + rho, (a + n delta)^vee> = c0 + n s with s > 0.
    mpz_class period = 1;
    for (const auto& a : rs.roots) {
        const Scalar s = (Scalar(2) / dot(a, a)) * shifted_level;
        const Scalar c0 = pairing(lr.finite, a);
        mpz_lcm(period.get_mpz_t(), period.get_mpz_t(), s.get_den().get_mpz_t());
        int n_min = rs.is_positive_root(a) ? 0 : 1;
        Scalar q = -c0 / s;
        mpz_class ceil_q;
        mpz_cdiv_q(ceil_q.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
        long n_max = std::max<long>(n_min, ceil_q.get_si() + 1);
        for (long n = n_min; n <= n_max; ++n) {
            Scalar v = c0 + Scalar(n) * s;
            if (is_integer(v) && sgn(v) <= 0) {
                out.regular_dominant = false;
                out.reason = "pairing " + to_string(v) + " with " + RealCoroot{a, static_cast<int>(n)}.to_string();
                break;
            }
        }
        if (!out.regular_dominant) break;
    }

    // Integral positive coroots; summands of a coroot have smaller c-coefficient,
    // hence at most twice its layer.
    const long bound = 2 * period.get_si() * h;
    using Key = std::pair<Weight, Scalar>;  // (alpha^vee, coefficient of c)
    std::map<Key, RealCoroot> integral;
    for (long n = 0; n <= 2 * bound; ++n)
        for (const auto& a : rs.roots) {
            RealCoroot c{a, static_cast<int>(n)};
            if (!c.is_positive(rs)) continue;
            if (!is_integer(pair(lr, c))) continue;
            integral.emplace(Key{coroot(a), c.c_coeff()}, c);
        }
    for (const auto& [key, c] : integral) {
        if (c.layer > bound) continue;
        bool decomposable = false;
        for (const auto& [k1, c1] : integral) {
            if (k1.second > key.second) continue;
            if (k1 == key) continue;
            Key rest{key.first - k1.first, key.second - k1.second};
            if (integral.count(rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.simple_coroots.push_back(c);
    }
    std::sort(out.simple_coroots.begin(), out.simple_coroots.end());

    ExactMatrix m(integral.size(), 5);
    std::size_t row = 0;
    for (const auto& [key, c] : integral) {
        for (std::size_t i = 0; i < 4; ++i) m(row, i) = key.first[i];
        m(row, 4) = key.second;
        ++row;
    }
    out.rank = rank(m);
    out.admissible = out.regular_dominant && out.rank == 5;
    if (out.regular_dominant && out.rank != 5) out.reason = "integral coroots have rank " + std::to_string(out.rank);
    return out;
}

}  // namespace voakit
