#pragma once

// Zero sets of the weight-zero polynomial systems, dominant-integral
// enumeration under the (mu, e1) bound, and the weight bookkeeping behind the
// decompositions of the modules L_F(lambda^i) over the affine B4 subalgebra.

#include "voakit/affine.hpp"
#include "voakit/exact.hpp"
#include "voakit/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace voakit {

/// a . x + c
struct LinearForm {
    std::array<Scalar, 4> coeffs{};
    Scalar constant;

    SparsePoly poly() const { return SparsePoly::linear(coeffs, constant); }
    Scalar operator()(const Weight& mu) const
    {
        Scalar s = constant;
        for (std::size_t i = 0; i < 4; ++i) s += coeffs[i] * mu[i];
        return s;
    }
    friend bool operator==(const LinearForm& a, const LinearForm& b)
    {
        return a.coeffs == b.coeffs && a.constant == b.constant;
    }
    std::string to_string() const { return poly().to_string(); }
};

/// h_alpha + shift, the functional mu -> <mu, alpha^vee> + shift.
inline LinearForm h_form(const Weight& alpha, const Scalar& shift = 0)
{
    Weight c = coroot(alpha);
    return {c.eps, shift};
}

/// Whether a and b differ by a nonzero scalar factor.
inline bool proportional(const LinearForm& a, const LinearForm& b)
{
    std::optional<Scalar> ratio;
    auto match = [&](const Scalar& x, const Scalar& y) {
        if (sgn(x) == 0 || sgn(y) == 0) return sgn(x) == sgn(y);
        Scalar r = x / y;
        if (!ratio) ratio = r;
        return *ratio == r;
    };
    for (std::size_t i = 0; i < 4; ++i)
        if (!match(a.coeffs[i], b.coeffs[i])) return false;
    return match(a.constant, b.constant) && ratio.has_value();
}

struct FactoredPolynomial {
    Scalar scale = 1;
    std::vector<LinearForm> factors;
    SparsePoly expanded;

    std::string to_string() const
    {
        std::string s = scale == 1 ? std::string() : voakit::to_string(scale) + " ";
        for (const auto& f : factors) s += "(" + f.to_string() + ")";
        return s;
    }
};

inline FactoredPolynomial make_factored(std::vector<LinearForm> factors, const Scalar& scale = 1)
{
    SparsePoly p(scale);
    for (const auto& f : factors) p = p * f.poly();
    return {scale, std::move(factors), std::move(p)};
}

namespace detail {

using Vec5 = std::array<Scalar, 5>;  // x1..x4 and the homogenizing variable t
using Sym5 = std::array<Vec5, 5>;

/// First nonzero coefficient scaled to 1; returns the factor removed.
inline Scalar normalize(Vec5& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0) {
            Scalar lead = x;
            for (auto& y : v) y /= lead;
            return lead;
        }
    throw std::logic_error("normalize: zero form");
}

/// Q = scale * l1 * l2 for a quadratic form with a nonzero diagonal entry.
inline std::optional<std::tuple<Scalar, Vec5, Vec5>> split_quadratic(const Sym5& a)
{
    std::size_t i = 5;
    for (std::size_t k = 0; k < 5; ++k)
        if (sgn(a[k][k]) != 0) {
            i = k;
            break;
        }
    if (i == 5) return std::nullopt;
    const Scalar& d = a[i][i];
    // Q = d x_i^2 + x_i L + R; split iff L^2 - 4 d R is the square of a form M.
    Vec5 l{};
    for (std::size_t k = 0; k < 5; ++k)
        if (k != i) l[k] = 2 * a[i][k];
    Sym5 disc{};
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c)
            if (r != i && c != i) disc[r][c] = l[r] * l[c] - 4 * d * a[r][c];
    Vec5 m{};
    std::size_t j = 5;
    for (std::size_t k = 0; k < 5; ++k)
        if (sgn(disc[k][k]) != 0) {
            j = k;
            break;
        }
    if (j != 5) {
        auto root = exact_sqrt(disc[j][j]);
        if (!root) return std::nullopt;
        for (std::size_t k = 0; k < 5; ++k) m[k] = disc[j][k] / *root;
    }
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c)
            if (disc[r][c] != m[r] * m[c]) return std::nullopt;
    Vec5 f1{}, f2{};
    for (std::size_t k = 0; k < 5; ++k) {
        f1[k] = (l[k] + m[k]) / (2 * d);
        f2[k] = (l[k] - m[k]) / (2 * d);
    }
    f1[i] = 1;
    f2[i] = 1;
    return std::tuple{d, f1, f2};
}

inline LinearForm to_form(const Vec5& v) { return {{v[0], v[1], v[2], v[3]}, v[4]}; }

}  // namespace detail

/// Splits a polynomial of degree at most 2 into rational linear factors;
/// throws std::domain_error if it is irreducible over Q.
inline FactoredPolynomial factor_linear(const SparsePoly& p)
{
    using detail::Vec5;
    const int deg = p.degree();
    if (p.is_zero() || deg < 1 || deg > 2) throw std::invalid_argument("factor_linear: expected degree 1 or 2");

    if (deg == 1) {
        Vec5 v{};
        for (const auto& [e, c] : p.terms()) {
            std::size_t k = 4;
            for (std::size_t i = 0; i < 4; ++i)
                if (e[i] == 1) k = i;
            v[k] = c;
        }
        Scalar scale = detail::normalize(v);
        return make_factored({detail::to_form(v)}, scale);
    }

    detail::Sym5 a{};
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < 4; ++i)
            for (int k = 0; k < e[i]; ++k) vars.push_back(i);
        while (vars.size() < 2) vars.push_back(4);
        if (vars[0] == vars[1]) {
            a[vars[0]][vars[0]] += c;
        } else {
            a[vars[0]][vars[1]] += c / 2;
            a[vars[1]][vars[0]] += c / 2;
        }
    }

    auto split = detail::split_quadratic(a);
    if (!split) {
        // No square terms: substitute x_r = y_r + y_s, factor, substitute back.
        bool has_diagonal = false;
        for (std::size_t k = 0; k < 5; ++k) has_diagonal = has_diagonal || sgn(a[k][k]) != 0;
        if (!has_diagonal) {
            std::size_t r = 5, s = 5;
            for (std::size_t x = 0; x < 5 && r == 5; ++x)
                for (std::size_t y = x + 1; y < 5; ++y)
                    if (sgn(a[x][y]) != 0) {
                        r = x;
                        s = y;
                        break;
                    }
            detail::Sym5 b = a;  // T^t A T with T = I + E_rs
            for (std::size_t k = 0; k < 5; ++k) b[k][s] += a[k][r];
            detail::Sym5 bt = b;
            for (std::size_t k = 0; k < 5; ++k) bt[s][k] += b[r][k];
            split = detail::split_quadratic(bt);
            if (split) {
                // y_r = x_r - x_s, y_s = x_s
                auto& [d, f1, f2] = *split;
                for (auto* f : {&f1, &f2}) (*f)[s] -= (*f)[r];
            }
        }
    }
    if (!split) throw std::domain_error("factor_linear: not a product of rational linear forms: " + p.to_string());

    auto [scale, f1, f2] = *split;
    scale *= detail::normalize(f1);
    scale *= detail::normalize(f2);
    FactoredPolynomial out = make_factored({detail::to_form(f1), detail::to_form(f2)}, scale);
    if (!(out.expanded == p)) throw std::logic_error("factor_linear: factorization does not reproduce " + p.to_string());
    return out;
}

/// Solution set { x : A x + c = 0 } stored as reduced rows [A | c].
struct AffineSubspace {
    ExactMatrix equations;

    std::size_t dimension() const { return 4 - equations.rows(); }
    friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) { return a.equations == b.equations; }
};

struct Solution {
    Weight point;
    std::vector<int> selection;  ///< factor index per polynomial, -1 where it vanished without a choice
};

struct ClassificationResult {
    std::vector<Solution> solutions;  ///< lexicographic in epsilon-coordinates
    std::vector<AffineSubspace> components;

    std::vector<Weight> points() const
    {
        std::vector<Weight> out;
        for (const auto& s : solutions) out.push_back(s.point);
        return out;
    }
};

namespace detail {

struct Reduced {
    ExactMatrix rows;
    bool consistent;
};

inline Reduced reduce(const std::vector<LinearForm>& eqs)
{
    ExactMatrix m(eqs.size(), 5);
    for (std::size_t r = 0; r < eqs.size(); ++r) {
        for (std::size_t i = 0; i < 4; ++i) m(r, i) = eqs[r].coeffs[i];
        m(r, 4) = eqs[r].constant;
    }
    RrefResult rr = rref_with_pivots(m);
    ExactMatrix rows(rr.pivots.size(), 5);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        for (std::size_t c = 0; c < 5; ++c) rows(r, c) = rr.reduced(r, c);
    bool consistent = std::find(rr.pivots.begin(), rr.pivots.end(), std::size_t{4}) == rr.pivots.end();
    return {rows, consistent};
}

inline Weight point_of(const ExactMatrix& rows)
{
    Weight w;
    for (std::size_t r = 0; r < 4; ++r) w[r] = -rows(r, 4);
    return w;
}

}  // namespace detail

/// Enumerates one linear factor per polynomial and solves the resulting
/// linear systems exactly.
inline ClassificationResult solve_system(const std::vector<FactoredPolynomial>& ps)
{
    std::map<Weight, std::vector<int>> points;
    std::vector<AffineSubspace> components;
    std::vector<LinearForm> eqs;
    std::vector<int> selection(ps.size(), -1);

    std::function<void(std::size_t)> descend = [&](std::size_t i) {
        detail::Reduced red = detail::reduce(eqs);
        if (!red.consistent) return;
        if (red.rows.rows() == 4) {
            Weight w = detail::point_of(red.rows);
            for (std::size_t k = i; k < ps.size(); ++k)
                if (sgn(evaluate(ps[k].expanded, w)) != 0) return;
            points.try_emplace(w, selection);
            return;
        }
        if (i == ps.size()) {
            AffineSubspace c{red.rows};
            if (std::find(components.begin(), components.end(), c) == components.end()) components.push_back(c);
            return;
        }
        for (std::size_t f = 0; f < ps[i].factors.size(); ++f) {
            selection[i] = static_cast<int>(f);
            eqs.push_back(ps[i].factors[f]);
            descend(i + 1);
            eqs.pop_back();
        }
        selection[i] = -1;
    };
    descend(0);

    ClassificationResult out;
    for (const auto& [w, sel] : points) {
        for (const auto& p : ps)
            if (sgn(evaluate(p.expanded, w)) != 0)
                throw std::logic_error("solve_system: polynomial does not vanish at " + w.to_string());
        out.solutions.push_back({w, sel});
    }
    out.components = std::move(components);
    return out;
}

/// The factored bases p1..p4 (B4) and p1..p12 (F4) of the weight-zero polynomials at n = 1.
inline std::vector<FactoredPolynomial> factored_basis(Label algebra)
{
    const Weight e1 = Weight::unit(0), e2 = Weight::unit(1), e3 = Weight::unit(2), e4 = Weight::unit(3);
    const Weight mmm = Weight::half(1, -1, -1, -1), mmp = Weight::half(1, -1, -1, 1);
    auto p = [](const Weight& a, const Weight& b, const Scalar& s) { return make_factored({h_form(a), h_form(b, s)}); };
    std::vector<FactoredPolynomial> out{
        p(e1 - e2, e1 + e2, Scalar(5, 2)),
        p(e2 - e3, e2 + e3, Scalar(3, 2)),
        p(e3 - e4, e3 + e4, Scalar(1, 2)),
        p(e4, e4, -1),
    };
    if (algebra == Label::B4) return out;
    if (algebra != Label::F4) throw std::invalid_argument("factored_basis: expected B4 or F4");
    for (auto q : {p(e3 - e4, e1 + e2, Scalar(5, 2)), p(e2 - e3, e1 + e4, Scalar(3, 2)), p(e3 + e4, e1 - e2, Scalar(1, 2)),
                   p(mmm, mmm, -1), p(e3 + e4, e1 + e2, Scalar(5, 2)), p(e2 - e3, e1 - e4, Scalar(3, 2)),
                   p(e3 - e4, e1 - e2, Scalar(1, 2)), p(mmp, mmp, -1)})
        out.push_back(std::move(q));
    return out;
}

/// Dominant integral mu with (mu, e1) <= n - 1/2, lexicographic in epsilon-coordinates.
inline std::vector<Weight> classify_dominant(const RootSystem& rs, int n)
{
    if (n < 1) throw std::invalid_argument("classify_dominant: n must be positive");
    const auto w = fundamental_weights(rs);
    const Scalar bound = Scalar(2 * n - 1, 2);
    std::array<Scalar, 4> step;
    for (std::size_t i = 0; i < 4; ++i) {
        step[i] = w[i][0];
        if (sgn(step[i]) <= 0) throw std::logic_error("classify_dominant: fundamental weight with (w, e1) <= 0");
    }
    std::vector<Weight> out;
    std::array<int, 4> a{};
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t i, Scalar used) {
        if (i == 4) {
            out.push_back(from_fund(rs, {a[0], a[1], a[2], a[3]}));
            return;
        }
        for (a[i] = 0; used + a[i] * step[i] <= bound; ++a[i]) rec(i + 1, used + a[i] * step[i]);
        a[i] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// The same weight in the B4 fundamental basis (the Cartan subalgebra is shared).
inline std::array<Scalar, 4> restrict_weight(const Weight& mu) { return fund_coords(root_system(Label::B4), mu); }

inline std::string fund_string(const std::array<Scalar, 4>& c, const std::string& symbol = "w")
{
    std::string s;
    for (std::size_t i = 0; i < 4; ++i) {
        if (sgn(c[i]) == 0) continue;
        if (!s.empty()) s += sgn(c[i]) < 0 ? " - " : " + ";
        else if (sgn(c[i]) < 0) s += "-";
        Scalar m = abs(c[i]);
        if (m != 1) s += voakit::to_string(m) + "*";
        s += symbol + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

/// The six B4 weights of lowest conformal weight -3/2 at level -5/2.
inline std::vector<std::array<Scalar, 4>> conformal_three_halves_list()
{
    const Scalar h(1, 2), th(3, 2), fh(5, 2);
    return {{0, -th, 0, 0},   {0, -fh, 0, 1},  {-h, -h, -h, 0},
            {-th, h, -th, 1}, {-th, 0, -h, 0}, {-h, 0, -th, 1}};
}

struct BookkeepingSummand {
    std::array<Scalar, 4> fund;  ///< B4 fundamental coordinates
    Weight weight;
    Weight root;  ///< subtracted from lambda; zero for the highest weight vector itself
    Scalar conformal_weight;
    bool conformal_ok = false;
    bool weight_ok = false;
};

struct BookkeepingExclusion {
    std::array<Scalar, 4> fund;
    Weight difference;  ///< lambda - weight
    bool positive_root_sum = true;
};

struct BookkeepingReport {
    int index = 0;  ///< i for lambda^i
    AffineWeight lambda;
    Scalar conformal_weight;
    bool conformal_ok = false;
    std::vector<BookkeepingSummand> summands;
    std::vector<BookkeepingExclusion> excluded;

    bool summands_conformal_ok() const
    {
        return std::all_of(summands.begin(), summands.end(), [](const auto& s) { return s.conformal_ok; });
    }
    bool summand_weights_ok() const
    {
        return std::all_of(summands.begin(), summands.end(), [](const auto& s) { return s.weight_ok; });
    }
    bool exclusions_ok() const
    {
        return excluded.size() == 4 &&
               std::none_of(excluded.begin(), excluded.end(), [](const auto& e) { return e.positive_root_sum; });
    }
    bool passed() const { return conformal_ok && summands_conformal_ok() && summand_weights_ok() && exclusions_ok(); }
};

/// lambda^1 .. lambda^4: the level -5/2 highest weights of the irreducible F4 modules in category O.
inline AffineWeight lambda_upper(int i)
{
    const auto w = fundamental_weights(root_system(Label::F4));
    const Scalar k(-5, 2);
    switch (i) {
    case 1: return level_weight(k);
    case 2: return level_weight(k, Scalar(-3, 2) * w[0]);
    case 3: return level_weight(k, Scalar(-1, 2) * w[0] + Scalar(-1, 2) * w[1]);
    case 4: return level_weight(k, Scalar(-3, 2) * w[1] + w[2]);
    }
    throw std::invalid_argument("lambda_upper: index must be 1..4");
}

inline BookkeepingReport decomposition_bookkeeping(const AffineWeight& lam)
{
    struct Claim {
        std::array<Scalar, 4> fund;
        Weight root;
    };
    const Scalar h(1, 2), th(3, 2), fh(5, 2);
    std::map<int, std::vector<Claim>> claims{
        {2, {{{0, -th, 0, 0}, {}}, {{0, -fh, 0, 1}, Weight::half(1, 1, -1, -1)}}},
        {3, {{{-h, -h, -h, 0}, {}}, {{-th, h, -th, 1}, Weight::half(1, -1, 1, -1)}}},
        {4, {{{-h, 0, -th, 1}, {}}, {{-th, 0, -h, 0}, Weight::half(1, -1, -1, 1)}}},
    };
    int index = 0;
    for (int i = 2; i <= 4; ++i)
        if (lam == lambda_upper(i)) index = i;
    if (index == 0) throw std::invalid_argument("decomposition_bookkeeping: expected lambda^2, lambda^3 or lambda^4");

    const RootSystem& F = root_system(Label::F4);
    const RootSystem& B = root_system(Label::B4);
    const Scalar target(-3, 2);

    BookkeepingReport r;
    r.index = index;
    r.lambda = lam;
    r.conformal_weight = lowest_conformal_weight(F, lam.level, lam.finite);
    r.conformal_ok = r.conformal_weight == target;

    std::set<std::array<Scalar, 4>> claimed;
    for (const auto& c : claims.at(index)) {
        BookkeepingSummand s;
        s.fund = c.fund;
        s.weight = from_fund(B, c.fund);
        s.root = c.root;
        s.conformal_weight = lowest_conformal_weight(B, lam.level, s.weight);
        s.conformal_ok = s.conformal_weight == target;
        bool root_ok = c.root.is_zero() || (F.is_positive_root(c.root) && !B.is_root(c.root));
        s.weight_ok = root_ok && lam.finite - c.root == s.weight;
        r.summands.push_back(s);
        claimed.insert(c.fund);
    }
    for (const auto& f : conformal_three_halves_list()) {
        if (claimed.count(f)) continue;
        BookkeepingExclusion e;
        e.fund = f;
        e.difference = lam.finite - from_fund(B, f);
        e.positive_root_sum = is_positive_root_sum(F, e.difference);
        r.excluded.push_back(e);
    }
    return r;
}

}  // namespace voakit
