#pragma once

// Named verification checks with JSON reports, shared by the command-line tool.

#include "voakit/affine.hpp"
#include "voakit/classify.hpp"
#include "voakit/liealg.hpp"
#include "voakit/rootsys.hpp"
#include "voakit/uea.hpp"
#include "voakit/verma.hpp"

#include "json.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace voakit {

using Json = nlohmann::json;

enum class Status { Pass, Fail, Skip };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
    }
    return "?";
}

struct CheckOptions {
    int n = 1;
    int n_max = 2;
};

struct CheckReport {
    std::string name;
    Status status = Status::Fail;
    Json details = Json::object();
    double elapsed_ms = 0;

    Json to_json() const { return {{"name", name}, {"status", to_string(status)}, {"details", details}}; }
};

namespace checks {

/// Collects named boolean assertions into the details payload.
class Recorder {
public:
    explicit Recorder(Json& details) : details_(details) {}

    bool expect(const std::string& key, bool ok)
    {
        details_["assertions"][key] = ok;
        ok_ = ok_ && ok;
        return ok;
    }
    Json& details() { return details_; }
    Status status() const { return ok_ ? Status::Pass : Status::Fail; }

private:
    Json& details_;
    bool ok_ = true;
};

inline Json scalars(const std::array<Scalar, 4>& a)
{
    Json j = Json::array();
    for (const auto& x : a) j.push_back(to_string(x));
    return j;
}

inline Json weight_json(const Weight& w) { return scalars(w.eps); }

inline LieElement jacobiator(const LieAlgebra& g, int x, int y, int z)
{
    LieElement s = g.bracket(basis_element(x), g.bracket(y, z));
    s += g.bracket(basis_element(y), g.bracket(z, x));
    s += g.bracket(basis_element(z), g.bracket(x, y));
    return s;
}

inline Status jacobi(const CheckOptions&, Json& details)
{
    Recorder r(details);
    const LieAlgebra& g = gF();
    std::size_t failures = 0, antisymmetry = 0;
    for (int x = 0; x < kLieDim; ++x)
        for (int y = 0; y < kLieDim; ++y) {
            if (!(g.bracket(x, y) == Scalar(-1) * g.bracket(y, x))) ++antisymmetry;
            for (int z = 0; z < kLieDim; ++z)
                if (!jacobiator(g, x, y, z).is_zero()) ++failures;
        }
    details["triples"] = kLieDim * kLieDim * kLieDim;
    details["jacobi_failures"] = failures;
    details["antisymmetry_failures"] = antisymmetry;
    r.expect("jacobi", failures == 0);
    r.expect("antisymmetry", antisymmetry == 0);
    return r.status();
}

inline Status embeddings(const CheckOptions&, Json& details)
{
    Recorder r(details);
    const LieAlgebra& g = gF();
    for (Label l : {Label::B4, Label::B4prime, Label::B4doubleprime}) {
        std::size_t d = g.subalgebra(l).size();
        details["dimensions"][to_string(l)] = d;
        r.expect("dim_" + to_string(l), d == 36);
    }
    const auto basis = g.subalgebra(Label::B4);
    for (auto [variant, name] : {std::pair{Embedding::Prime, "prime"}, std::pair{Embedding::DoublePrime, "doubleprime"}}) {
        std::size_t bad = 0;
        for (int a : basis)
            for (int b : basis) {
                LieElement lhs = embed_pi(variant, g.bracket(a, b));
                LieElement rhs = g.bracket(embed_pi(variant, basis_element(a)), embed_pi(variant, basis_element(b)));
                if (!(lhs == rhs)) ++bad;
            }
        std::size_t root_mismatch = 0;
        for (const auto& a : root_system(Label::B4).positive_roots) {
            const Weight t = embed_root(variant, a);
            if (!(embed_pi(variant, basis_element(g.e(a))) == basis_element(g.e(t)))) ++root_mismatch;
            if (!(embed_pi(variant, basis_element(g.f(a))) == basis_element(g.f(t)))) ++root_mismatch;
        }
        details[name]["bracket_failures"] = bad;
        details[name]["root_vector_mismatches"] = root_mismatch;
        r.expect(std::string(name) + "_homomorphism", bad == 0);
        r.expect(std::string(name) + "_root_vectors", root_mismatch == 0);
    }
    return r.status();
}

inline Status branching(const CheckOptions&, Json& details)
{
    Recorder r(details);
    const RootSystem& B = root_system(Label::B4);
    auto comps = branch_gF_over_gB();
    int total = 0;
    Json list = Json::array();
    for (const auto& c : comps) {
        total += c.dimension;
        list.push_back({{"highest_weight", scalars(fund_coords(B, c.highest_weight))},
                        {"dimension", c.dimension},
                        {"weyl_dimension", weyl_dim(B, c.highest_weight).get_str()}});
    }
    details["components"] = list;
    details["total"] = total;
    const auto w = fundamental_weights(B);
    r.expect("two_components", comps.size() == 2);
    if (comps.size() == 2) {
        r.expect("adjoint_w2_dim36", comps[0].highest_weight == w[1] && comps[0].dimension == 36);
        r.expect("spin_w4_dim16", comps[1].highest_weight == w[3] && comps[1].dimension == 16);
    }
    r.expect("total_52", total == kLieDim);
    return r.status();
}

inline Status singular(const CheckOptions& o, Json& details)
{
    Recorder r(details);
    for (int n = 1; n <= o.n_max; ++n) {
        VermaModule vm(Scalar(2 * n - 7, 2));
        for (Family f : {Family::B, Family::Bprime, Family::Bdoubleprime, Family::F}) {
            StateVector v = build_singular(vm, f, n);
            std::string key = to_string(f) + "_n" + std::to_string(n);
            details["terms"][key] = v.size();
            r.expect(key, is_singular(vm, v, family_label(f)));
            if (f == Family::F) r.expect(key + "_over_B4", is_singular(vm, v, Label::B4));
        }
    }
    return r.status();
}

inline Status ulaganje(const CheckOptions& o, Json& details)
{
    Recorder r(details);
    const LieAlgebra& g = gF();
    const std::vector<std::tuple<Family, Embedding, Weight>> cases{
        {Family::Bprime, Embedding::Prime, Weight::half(1, -1, -1, 1)},
        {Family::Bdoubleprime, Embedding::DoublePrime, Weight::half(1, -1, -1, -1)}};
    for (int n = 1; n <= o.n_max; ++n) {
        VermaModule vm(Scalar(2 * n - 7, 2));
        StateVector vf = build_singular(vm, Family::F, n);
        for (const auto& [family, variant, root] : cases) {
            StateVector w = vf;
            for (int i = 0; i < 2 * n; ++i) w = vm.act(g.f(root), 0, w);
            w *= 1 / factorial(static_cast<unsigned>(2 * n));
            std::string key = to_string(family) + "_n" + std::to_string(n);
            r.expect("state_" + key, w == build_singular(vm, family, n));
            if (n == 1) {
                UEAElement u = build_ideal_generator(Family::F, n);
                for (int i = 0; i < 2 * n; ++i) u = adjoint(g.f(root), u);
                u *= 1 / factorial(static_cast<unsigned>(2 * n));
                UEAElement target = build_ideal_generator(family, n);
                r.expect("ideal_" + key, u == target);
                r.expect("embedded_" + key, embed_pi(variant, build_ideal_generator(Family::B, n)) == target);
            }
        }
    }
    return r.status();
}

inline Status zhu_ideal(const CheckOptions&, Json& details)
{
    Recorder r(details);
    VermaModule vm(Scalar(-5, 2));
    StateVector vf = build_singular(vm, Family::F, 1);
    UEAElement uf = zhu_image(vf);
    r.expect("zhu_image_vF", uf == build_ideal_generator(Family::F, 1));
    std::size_t nonzero = 0;
    for (int x = 0; x < kLieDim; ++x)
        if (!vm.act(x, 1, vf).is_zero()) ++nonzero;
    r.expect("positive_modes_kill_vF", nonzero == 0);
    auto rb = generate_R(uf, Label::B4);
    auto rf = generate_R(uf, Label::F4);
    const Weight two_e1(2, 0, 0, 0);
    details["dim_R_B"] = rb.dim();
    details["dim_R_F"] = rf.dim();
    r.expect("dim_R_B_weyl", rb.dim() == weyl_dim(root_system(Label::B4), two_e1));
    r.expect("dim_R_F_weyl", rf.dim() == weyl_dim(root_system(Label::F4), two_e1));
    return r.status();
}

inline std::vector<SparsePoly> expanded(const std::vector<FactoredPolynomial>& ps)
{
    std::vector<SparsePoly> out;
    for (const auto& p : ps) out.push_back(p.expanded);
    return out;
}

inline Status polynomials(const CheckOptions&, Json& details)
{
    Recorder r(details);
    UEAElement uf = build_ideal_generator(Family::F, 1);
    auto rf = generate_R(uf, Label::F4);
    auto rb = generate_R(uf, Label::B4);
    auto pf = zero_weight_polynomials(rf);
    auto pb = zero_weight_polynomials(rb);
    auto basis_f = expanded(factored_basis(Label::F4));
    auto basis_b = expanded(factored_basis(Label::B4));
    details["dim_R0_F"] = rf.weight_space(Weight{}).size();
    details["dim_R0_B"] = rb.weight_space(Weight{}).size();
    details["rank_P0_F"] = poly_echelon(pf).size();
    details["rank_P0_B"] = poly_echelon(pb).size();
    details["rank_basis_F"] = poly_echelon(basis_f).size();
    r.expect("dim_R0_F_12", rf.weight_space(Weight{}).size() == 12);
    r.expect("span_P0_F_basis", same_span(pf, basis_f));
    r.expect("dim_P0_B_4", poly_echelon(pb).size() == 4);
    r.expect("span_P0_B_basis", same_span(pb, basis_b));
    return r.status();
}

inline std::set<Weight> weights_from_fund(const RootSystem& rs, const std::vector<std::array<Scalar, 4>>& list)
{
    std::set<Weight> out;
    for (const auto& f : list) out.insert(from_fund(rs, f));
    return out;
}

/// Category O highest weights at level -5/2.
inline std::vector<std::array<Scalar, 4>> expected_category_o(Label algebra)
{
    const Scalar h(1, 2), th(3, 2), fh(5, 2), sh(7, 2);
    if (algebra == Label::F4) return {{0, 0, 0, 0}, {-th, 0, 0, 0}, {-h, -h, 0, 0}, {0, -th, 1, 0}};
    return {{0, 0, 0, 0},     {0, 0, 0, 1},     {-fh, 0, 0, 0},     {-sh, 0, 0, 1},   {0, -th, 0, 0},  {0, -fh, 0, 1},
            {0, 0, -h, 0},    {0, 0, -th, 1},   {h, -th, 0, 0},     {th, -fh, 0, 1},  {-th, 0, -h, 0}, {-h, 0, -th, 1},
            {0, -h, -h, 0},   {0, h, -th, 1},   {-h, -h, -h, 0},    {-th, h, -th, 1}};
}

inline Json classification_json(const RootSystem& rs, const std::vector<Weight>& ws)
{
    Json list = Json::array();
    for (const auto& w : ws) list.push_back({{"eps", weight_json(w)}, {"fund", scalars(fund_coords(rs, w))}});
    return list;
}

inline Status classify_o(const CheckOptions& o, Json& details)
{
    if (o.n != 1) {
        details["reason"] = "polynomial bases are known for n = 1 only";
        return Status::Skip;
    }
    Recorder r(details);
    std::set<Weight> b_points;
    for (Label l : {Label::B4, Label::F4}) {
        const RootSystem& rs = root_system(l);
        auto result = solve_system(factored_basis(l));
        auto pts = result.points();
        details[to_string(l)]["weights"] = classification_json(rs, pts);
        details[to_string(l)]["count"] = pts.size();
        r.expect(to_string(l) + "_no_components", result.components.empty());
        r.expect(to_string(l) + "_expected_set",
                 std::set<Weight>(pts.begin(), pts.end()) == weights_from_fund(rs, expected_category_o(l)) &&
                     pts.size() == expected_category_o(l).size());
        if (l == Label::B4) {
            b_points.insert(pts.begin(), pts.end());
        } else {
            bool contained = true;
            for (const auto& w : pts) contained = contained && b_points.count(w) != 0;
            r.expect("F_points_among_B_points", contained);
            auto extracted = zero_weight_polynomials(generate_R(build_ideal_generator(Family::F, 1), Label::F4));
            bool vanish = true;
            for (const auto& w : pts)
                for (const auto& p : extracted) vanish = vanish && sgn(evaluate(p, w)) == 0;
            r.expect("extracted_polynomials_vanish", vanish);
        }
    }
    return r.status();
}

/// Dominant integral weights under (mu, e1) <= n - 1/2 by scanning a box.
inline std::set<Weight> dominant_by_box(const RootSystem& rs, int n)
{
    std::set<Weight> out;
    const Scalar bound = Scalar(2 * n - 1, 2);
    const int side = 2 * n;
    for (int a = 0; a <= side; ++a)
        for (int b = 0; b <= side; ++b)
            for (int c = 0; c <= side; ++c)
                for (int d = 0; d <= side; ++d) {
                    Weight w = from_fund(rs, {a, b, c, d});
                    if (w[0] <= bound) out.insert(w);
                }
    return out;
}

inline Status classify_dominant_check(const CheckOptions& o, Json& details)
{
    Recorder r(details);
    const RootSystem& B = root_system(Label::B4);
    const RootSystem& F = root_system(Label::F4);
    const auto wb = fundamental_weights(B);
    auto b1 = classify_dominant(B, 1);
    auto f1 = classify_dominant(F, 1);
    r.expect("B4_n1", b1 == std::vector<Weight>{Weight{}, wb[3]});
    r.expect("F4_n1", f1 == std::vector<Weight>{Weight{}});
    for (int n = 2; n <= std::max(3, o.n); ++n)
        for (const RootSystem* rs : {&B, &F}) {
            auto list = classify_dominant(*rs, n);
            std::string key = to_string(rs->label) + "_n" + std::to_string(n);
            details["counts"][key] = list.size();
            r.expect(key, std::set<Weight>(list.begin(), list.end()) == dominant_by_box(*rs, n));
        }
    return r.status();
}

inline std::vector<RealCoroot> expected_simple_coroots(int which)
{
    const Weight e1 = Weight::unit(0), e2 = Weight::unit(1), e3 = Weight::unit(2), e4 = Weight::unit(3);
    const RootSystem& F = root_system(Label::F4);
    const auto& a = F.simple_roots;
    std::vector<RealCoroot> out;
    switch (which) {
    case 1: out = {{-e1, 1}, {a[0], 0}, {a[1], 0}, {a[2], 0}, {a[3], 0}}; break;
    case 2: out = {{-(e1 + e3), 1}, {a[1], 0}, {a[2], 0}, {a[3], 0}, {e2, 0}}; break;
    case 3: out = {alpha0(F), {e2 - e4, 0}, {a[2], 0}, {a[3], 0}, {e3, 0}}; break;
    case 4: out = {alpha0(F), {a[0], 0}, {e3, 0}, {a[3], 0}, {a[2], 0}}; break;
    default: throw std::invalid_argument("expected_simple_coroots");
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Json coroots_json(const std::vector<RealCoroot>& cs)
{
    Json j = Json::array();
    for (const auto& c : cs) j.push_back(c.to_string());
    return j;
}

inline Status admissible(const CheckOptions& o, Json& details)
{
    Recorder r(details);
    const RootSystem& F = root_system(Label::F4);
    for (int n = 1; n <= std::max(4, o.n); ++n) {
        auto a = is_admissible(lambda_n(n), F);
        std::string key = "lambda_n" + std::to_string(n);
        details[key] = coroots_json(a.simple_coroots);
        r.expect(key, a.admissible && a.simple_coroots == expected_simple_coroots(1));
    }
    for (int i = 2; i <= 4; ++i) {
        auto a = is_admissible(lambda_upper(i), F);
        std::string key = "lambda" + std::to_string(i);
        details[key] = coroots_json(a.simple_coroots);
        r.expect(key, a.admissible && a.simple_coroots == expected_simple_coroots(i));
    }
    r.expect("lambda_n0_not_admissible", !is_admissible(lambda_n(0), F).admissible);
    return r.status();
}

inline Status conformal_weights(const CheckOptions&, Json& details)
{
    Recorder r(details);
    const RootSystem& B = root_system(Label::B4);
    const RootSystem& F = root_system(Label::F4);
    const Scalar k(-5, 2), h(1, 2), th(3, 2), fh(5, 2), sh(7, 2);
    const std::vector<std::pair<Scalar, std::vector<std::array<Scalar, 4>>>> table{
        {Scalar(-5, 4), {{-fh, 0, 0, 0}, {0, 0, -th, 1}, {h, -th, 0, 0}, {0, -h, -h, 0}}},
        {Scalar(-3, 4), {{-sh, 0, 0, 1}, {0, 0, -h, 0}, {th, -fh, 0, 1}, {0, h, -th, 1}}},
        {Scalar(-3, 2), conformal_three_halves_list()},
        {Scalar(0), {{0, 0, 0, 0}}},
        {Scalar(1), {{0, 0, 0, 1}}},
    };
    std::size_t checked = 0, wrong = 0;
    for (const auto& [value, list] : table)
        for (const auto& f : list) {
            ++checked;
            if (lowest_conformal_weight(B, k, from_fund(B, f)) != value) ++wrong;
        }
    details["weights_checked"] = checked;
    details["mismatches"] = wrong;
    r.expect("b4_table", checked == 16 && wrong == 0);
    details["central_charge"] = {{"B4", to_string(central_charge(B, k))}, {"F4", to_string(central_charge(F, k))}};
    r.expect("central_charges", central_charge(B, k) == -20 && central_charge(F, k) == -20);
    r.expect("dual_coxeter", dual_coxeter(B) == 7 && dual_coxeter(F) == 9);
    return r.status();
}

/// sum over the short (or long) positive roots of X of e(-1)f(-1)1 + f(-1)e(-1)1.
inline StateVector casimir_part(const VermaModule& vm, Label label, bool short_roots)
{
    const LieAlgebra& g = gF();
    const RootSystem& rs = root_system(label);
    const StateVector vac = StateVector::vacuum();
    StateVector s;
    for (const auto& a : rs.positive_roots) {
        if (rs.is_short(a) != short_roots) continue;
        s += vm.act(g.e(a), -1, vm.act(g.f(a), -1, vac));
        s += vm.act(g.f(a), -1, vm.act(g.e(a), -1, vac));
    }
    return s;
}

/// sum over the short positive roots of X of h_a(-1)^2 1.
inline StateVector cartan_squares(const VermaModule& vm, Label label)
{
    const LieAlgebra& g = gF();
    const RootSystem& rs = root_system(label);
    StateVector s;
    for (const auto& a : rs.positive_roots)
        if (rs.is_short(a)) {
            LieElement h = g.h_of(a);
            s += vm.act(h, -1, vm.act(h, -1, StateVector::vacuum()));
        }
    return s;
}

inline Status conformal_equality(const CheckOptions& o, Json& details)
{
    if (o.n != 1) {
        details["reason"] = "the conformal vectors agree at level -5/2 only";
        return Status::Skip;
    }
    Recorder r(details);
    VermaModule vm(Scalar(-5, 2));
    StateVector vf = build_singular(vm, Family::F, 1);
    StateVector vb = build_singular(vm, Family::B, 1);
    StateVector wf = conformal_vector(vm, Label::F4);
    StateVector wb = conformal_vector(vm, Label::B4);
    r.expect("omega_F_equals_omega_B", equals_mod_ideal(vm, wf, wb, vf, Label::F4));
    r.expect("omegas_differ_in_verma", !(wf == wb));

    StateVector lhs = Scalar(7) * casimir_part(vm, Label::B4, true);
    StateVector rhs = Scalar(4) * casimir_part(vm, Label::B4, false) + cartan_squares(vm, Label::B4);
    r.expect("short_long_relation", equals_mod_ideal(vm, lhs, rhs, vb, Label::B4));

    StateVector hb = cartan_squares(vm, Label::B4);
    r.expect("orthonormal_bases", hb == cartan_squares(vm, Label::B4prime) && hb == cartan_squares(vm, Label::B4doubleprime));
    return r.status();
}

inline Status extension(const CheckOptions&, Json& details)
{
    Recorder r(details);
    const LieAlgebra& g = gF();
    VermaModule vm(Scalar(-5, 2));
    const StateVector vac = StateVector::vacuum();
    const Weight theta(1, 1, 0, 0), phi = Weight::half(1, 1, 1, 1);
    const StateVector e_theta = vm.act(g.e(theta), -1, vac), e_phi = vm.act(g.e(phi), -1, vac);

    auto spans_exactly = [](const std::vector<StateVector>& got, const std::vector<StateVector>& want) {
        if (got.size() != want.size()) return false;
        StateSpan s;
        for (const auto& v : got) s.insert(v);
        for (const auto& v : want)
            if (!s.contains(v)) return false;
        return true;
    };
    auto d0 = find_subalgebra_singular(vm, 0, Label::B4);
    auto d1 = find_subalgebra_singular(vm, 1, Label::B4);
    details["degree0_singular"] = d0.singular.size();
    details["degree1_raising_kernel"] = d1.raising_kernel.size();
    details["degree1_singular"] = d1.singular.size();
    r.expect("degree0_vacuum", spans_exactly(d0.singular, {vac}));
    r.expect("degree1_raising_kernel", spans_exactly(d1.raising_kernel, {e_theta, e_phi}));
    r.expect("degree1_singular", spans_exactly(d1.singular, {e_phi}));
    StateVector test = vm.act(g.f(theta), 1, e_theta);
    details["f_theta_1_e_theta"] = to_string(test);
    r.expect("e_theta_rejected", test == Scalar(-5, 2) * vac);
    return r.status();
}

inline Status bookkeeping(const CheckOptions&, Json& details)
{
    Recorder r(details);
    for (int i = 2; i <= 4; ++i) {
        auto rep = decomposition_bookkeeping(lambda_upper(i));
        std::string key = "lambda" + std::to_string(i);
        Json summands = Json::array();
        for (const auto& s : rep.summands) summands.push_back(fund_string(s.fund));
        details[key]["summands"] = summands;
        details[key]["conformal_weight"] = to_string(rep.conformal_weight);
        r.expect(key + "_conformal_weight", rep.conformal_ok);
        r.expect(key + "_summand_conformal_weights", rep.summands_conformal_ok());
        r.expect(key + "_singular_weights", rep.summand_weights_ok());
        r.expect(key + "_exclusions", rep.exclusions_ok());
    }
    return r.status();
}

}  // namespace checks

struct NamedCheck {
    std::string name;
    std::function<Status(const CheckOptions&, Json&)> run;
};

/// All checks in report order.
inline const std::vector<NamedCheck>& check_registry()
{
    static const std::vector<NamedCheck> all{
        {"jacobi", checks::jacobi},
        {"embeddings", checks::embeddings},
        {"branching", checks::branching},
        {"singular", checks::singular},
        {"ulaganje", checks::ulaganje},
        {"zhu-ideal", checks::zhu_ideal},
        {"polynomials", checks::polynomials},
        {"classify-O", checks::classify_o},
        {"classify-dominant", checks::classify_dominant_check},
        {"admissible", checks::admissible},
        {"conformal-weights", checks::conformal_weights},
        {"conformal-equality", checks::conformal_equality},
        {"extension", checks::extension},
        {"decomposition-bookkeeping", checks::bookkeeping},
    };
    return all;
}

inline const NamedCheck* find_check(const std::string& name)
{
    for (const auto& c : check_registry())
        if (c.name == name) return &c;
    return nullptr;
}

inline CheckReport run_check(const NamedCheck& check, const CheckOptions& options)
{
    CheckReport rep;
    rep.name = check.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        rep.status = check.run(options, rep.details);
    } catch (const std::exception& e) {
        rep.status = Status::Fail;
        rep.details["error"] = e.what();
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// {"version": 1, "checks": [...], "summary": {...}}; timings go in a separate field.
inline Json report_json(const std::vector<CheckReport>& reports, bool with_timings)
{
    Json out;
    out["version"] = 1;
    out["checks"] = Json::array();
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
        out["checks"].push_back(r.to_json());
        if (r.status == Status::Pass) ++pass;
        else if (r.status == Status::Fail) ++fail;
        else ++skip;
        if (with_timings) out["elapsed_ms"][r.name] = static_cast<long long>(r.elapsed_ms);
    }
    out["summary"] = {{"pass", pass}, {"fail", fail}, {"skip", skip}};
    return out;
}

}  // namespace voakit
