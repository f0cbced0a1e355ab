#include "voakit/checks.hpp"

#include <gtest/gtest.h>

using namespace voakit;

TEST(Checks, RegistryNames)
{
    const std::vector<std::string> names{"jacobi",          "embeddings",        "branching",  "singular",
                                         "ulaganje",        "zhu-ideal",         "polynomials", "classify-O",
                                         "classify-dominant", "admissible",      "conformal-weights",
                                         "conformal-equality", "extension",      "decomposition-bookkeeping"};
    ASSERT_EQ(check_registry().size(), names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        EXPECT_EQ(check_registry()[i].name, names[i]);
        EXPECT_EQ(find_check(names[i]), &check_registry()[i]);
    }
    EXPECT_EQ(find_check("bogus"), nullptr);
}

TEST(Checks, FastChecksPass)
{
    CheckOptions opts;
    for (const char* name : {"branching", "classify-dominant", "conformal-weights", "extension", "decomposition-bookkeeping"}) {
        auto rep = run_check(*find_check(name), opts);
        EXPECT_EQ(rep.status, Status::Pass) << name << " " << rep.details.dump();
        EXPECT_TRUE(rep.details.contains("assertions"));
    }
}

TEST(Checks, LevelSpecificChecksSkipElsewhere)
{
    CheckOptions opts;
    opts.n = 2;
    EXPECT_EQ(run_check(*find_check("classify-O"), opts).status, Status::Skip);
    EXPECT_EQ(run_check(*find_check("conformal-equality"), opts).status, Status::Skip);
}

TEST(Checks, ExceptionsBecomeFailures)
{
    NamedCheck boom{"boom", [](const CheckOptions&, Json&) -> Status { throw std::runtime_error("broken"); }};
    auto rep = run_check(boom, {});
    EXPECT_EQ(rep.status, Status::Fail);
    EXPECT_EQ(rep.details["error"], "broken");
}

TEST(Checks, ReportJsonIsDeterministic)
{
    CheckOptions opts;
    std::vector<CheckReport> a, b;
    for (const char* name : {"conformal-weights", "classify-dominant"}) {
        a.push_back(run_check(*find_check(name), opts));
        b.push_back(run_check(*find_check(name), opts));
    }
    Json ja = report_json(a, false), jb = report_json(b, false);
    EXPECT_EQ(ja.dump(), jb.dump());
    EXPECT_EQ(ja["version"], 1);
    EXPECT_EQ(ja["summary"]["pass"], 2);
    EXPECT_EQ(ja["summary"]["fail"], 0);
    EXPECT_FALSE(ja.contains("elapsed_ms"));
    Json timed = report_json(a, true);
    EXPECT_TRUE(timed["elapsed_ms"].contains("conformal-weights"));
    EXPECT_EQ(timed["checks"].dump(), ja["checks"].dump());
}
