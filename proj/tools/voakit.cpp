#include "voakit/checks.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace voakit;

namespace {

constexpr int kUsageError = 2;

struct Output {
    std::string path;

    int write(const std::string& text) const
    {
        if (path.empty()) {
            std::cout << text;
            return 0;
        }
        std::ofstream f(path);
        if (!f) {
            std::cerr << "voakit: cannot write " << path << "\n";
            return kUsageError;
        }
        f << text;
        return 0;
    }
};

std::array<Scalar, 4> parse_coords(const std::string& text)
{
    std::array<Scalar, 4> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i == 4) throw std::invalid_argument("expected four comma-separated coordinates");
        out[i++] = parse_scalar(item);
    }
    if (i != 4) throw std::invalid_argument("expected four comma-separated coordinates");
    return out;
}

std::string text_report(const std::vector<CheckReport>& reports)
{
    std::ostringstream os;
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
        os << to_string(r.status) << "  " << r.name << "\n";
        if (r.status == Status::Fail) {
            if (r.details.contains("error")) os << "      error: " << r.details["error"].get<std::string>() << "\n";
            if (r.details.contains("assertions"))
                for (const auto& [k, v] : r.details["assertions"].items())
                    if (!v.get<bool>()) os << "      failed: " << k << "\n";
        }
        (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : skip)++;
    }
    os << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    return os.str();
}

int run_verify(const std::vector<std::string>& names, bool all, const CheckOptions& opts, const std::string& format,
               const Output& out)
{
    std::vector<const NamedCheck*> selected;
    if (all || names.empty()) {
        for (const auto& c : check_registry()) selected.push_back(&c);
    } else {
        for (const auto& n : names) {
            const NamedCheck* c = find_check(n);
            if (!c) {
                std::cerr << "voakit: unknown check '" << n << "'\n";
                return kUsageError;
            }
            selected.push_back(c);
        }
    }
    std::vector<CheckReport> reports;
    for (const auto* c : selected) reports.push_back(run_check(*c, opts));
    int rc = format == "json" ? out.write(report_json(reports, true).dump(2) + "\n") : out.write(text_report(reports));
    if (rc != 0) return rc;
    for (const auto& r : reports)
        if (r.status == Status::Fail) return 1;
    return 0;
}

int run_classify(const std::string& algebra, int n, const std::string& category, const std::string& format,
                 const Output& out)
{
    const Label label = parse_label(algebra);
    const RootSystem& rs = root_system(label);
    const Scalar level(2 * n - 7, 2);
    std::vector<Weight> weights;
    if (category == "O") {
        if (n != 1) {
            std::cerr << "voakit: category O classification is available for n = 1 only\n";
            return kUsageError;
        }
        weights = solve_system(factored_basis(label)).points();
    } else {
        weights = classify_dominant(rs, n);
    }

    if (format == "json") {
        Json j;
        j["algebra"] = algebra;
        j["level"] = to_string(level);
        j["category"] = category;
        j["weights"] = checks::classification_json(rs, weights);
        j["count"] = weights.size();
        return out.write(j.dump(2) + "\n");
    }
    std::ostringstream os;
    os << algebra << " level " << to_string(level) << " category " << category << ": " << weights.size()
       << " highest weights\n";
    for (const auto& w : weights) os << "  " << w.tag() << "  " << fund_string(fund_coords(rs, w)) << "\n";
    return out.write(os.str());
}

int run_admissible(const std::string& algebra, const std::string& level_text, const std::string& weight_text,
                   const std::string& format, const Output& out)
{
    const Label label = parse_label(algebra);
    const RootSystem& rs = root_system(label);
    const Scalar level = parse_scalar(level_text);
    Weight mu;
    if (!weight_text.empty()) mu = from_fund(rs, parse_coords(weight_text));
    if (sgn(level + dual_coxeter(rs)) <= 0) {
        std::cerr << "voakit: admissibility needs level + h > 0 (h = " << dual_coxeter(rs) << ")\n";
        return kUsageError;
    }
    auto a = is_admissible(level_weight(level, mu), rs);
    if (format == "json") {
        Json j;
        j["algebra"] = algebra;
        j["level"] = to_string(level);
        j["weight"] = checks::scalars(fund_coords(rs, mu));
        j["admissible"] = a.admissible;
        j["regular_dominant"] = a.regular_dominant;
        j["rank"] = a.rank;
        j["simple_coroots"] = checks::coroots_json(a.simple_coroots);
        if (!a.reason.empty()) j["reason"] = a.reason;
        int rc = out.write(j.dump(2) + "\n");
        return rc != 0 ? rc : (a.admissible ? 0 : 1);
    }
    std::ostringstream os;
    os << to_string(level) << " L0 + " << fund_string(fund_coords(rs, mu)) << " for " << algebra << ": "
       << (a.admissible ? "admissible" : "not admissible") << "\n";
    if (!a.reason.empty()) os << "  " << a.reason << "\n";
    os << "  simple coroots:";
    for (const auto& c : a.simple_coroots) os << " " << c.to_string();
    os << "\n";
    int rc = out.write(os.str());
    return rc != 0 ? rc : (a.admissible ? 0 : 1);
}

int run_report(const CheckOptions& opts, const Output& out)
{
    std::ostringstream os;
    std::vector<CheckReport> reports;
    for (const auto& c : check_registry()) reports.push_back(run_check(c, opts));
    os << "Checks\n" << text_report(reports) << "\n";

    const Scalar k(-5, 2);
    for (Label l : {Label::B4, Label::F4}) {
        const RootSystem& rs = root_system(l);
        auto pts = solve_system(factored_basis(l)).points();
        os << to_string(l) << " category O at level -5/2 (" << pts.size() << ")\n";
        for (const auto& w : pts)
            os << "  " << fund_string(fund_coords(rs, w)) << "  h = " << to_string(lowest_conformal_weight(rs, k, w))
               << "\n";
        os << "\n";
    }
    os << "Decompositions over B4\n";
    for (int i = 2; i <= 4; ++i) {
        auto rep = decomposition_bookkeeping(lambda_upper(i));
        os << "  " << fund_string(fund_coords(root_system(Label::F4), rep.lambda.finite)) << " ->";
        for (std::size_t s = 0; s < rep.summands.size(); ++s)
            os << (s ? " +" : "") << " [" << fund_string(rep.summands[s].fund, "wb") << "]";
        os << (rep.passed() ? "" : "  (bookkeeping failed)") << "\n";
    }
    int rc = out.write(os.str());
    if (rc != 0) return rc;
    for (const auto& r : reports)
        if (r.status == Status::Fail) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for the conformal embedding of affine B4 into affine F4 at level -5/2"};
    app.require_subcommand(1);

    CheckOptions opts;
    std::string format = "text";
    Output out;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", opts.n, "level n - 7/2")->check(CLI::PositiveNumber);
        sub->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out.path, "write the report to a file");
    };

    auto* verify = app.add_subcommand("verify", "run named checks");
    std::vector<std::string> names;
    bool all = false;
    verify->add_option("--check", names, "check name (repeatable)");
    verify->add_flag("--all", all, "run every check");
    verify->add_option("--n-max", opts.n_max, "largest n for singular-vector checks")->check(CLI::Range(1, 4));
    common(verify);

    auto* classify = app.add_subcommand("classify", "list highest weights");
    std::string algebra = "F4", category = "O";
    classify->add_option("--algebra", algebra)->check(CLI::IsMember({"B4", "F4"}));
    classify->add_option("--category", category)->check(CLI::IsMember({"O", "dominant"}));
    common(classify);

    auto* admissible = app.add_subcommand("admissible", "Kac-Wakimoto admissibility of level Lambda0 + weight");
    std::string level = "-5/2", weight;
    admissible->add_option("--algebra", algebra)->check(CLI::IsMember({"B4", "F4"}));
    admissible->add_option("--level", level, "rational level such as -5/2");
    admissible->add_option("--weight", weight, "fundamental coordinates a,b,c,d");
    admissible->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    admissible->add_option("--out", out.path);

    auto* report = app.add_subcommand("report", "all checks plus classification tables");
    report->add_option("--n-max", opts.n_max)->check(CLI::Range(1, 4));
    report->add_option("--out", out.path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "voakit: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    try {
        if (*verify) return run_verify(names, all, opts, format, out);
        if (*classify) return run_classify(algebra, opts.n, category, format, out);
        if (*admissible) return run_admissible(algebra, level, weight, format, out);
        if (*report) return run_report(opts, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "voakit: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "voakit: " << e.what() << "\n";
        return 1;
    }
    return kUsageError;
}
