#include <gtest/gtest.h>

#include "syz/syz.hpp"

using namespace syz;

namespace {

const Field F(32003);

json without_times(const SuiteResult& s)
{
    json j = json::array();
    for (auto c : s.cases) {
        c.seconds = 0;
        j.push_back(c.to_json());
    }
    return j;
}

}  // namespace

TEST(Serialize, BettiRoundTrip)
{
    auto t = betti_table(rational_normal_curve(3).ideal, 3, 2);
    auto back = betti_from_json(json::parse(to_json(t).dump()));
    EXPECT_EQ(back.entries, t.entries);
    EXPECT_EQ(back.characteristic, 32003u);
    EXPECT_THROW(betti_from_json(json{{"char", 5}}), InputError);
}

TEST(Serialize, CocycleRoundTripAndWedgeOrder)
{
    Ideal I = rational_normal_curve(3).ideal;
    for (const auto& a : k_p1_cocycle_basis(I, 2)) {
        auto b = cocycle_from_json(F, json::parse(to_json(a).dump()), 4);
        EXPECT_EQ(b.to_vector(), a.to_vector());
    }
    json swapped{{"p", 2}, {"terms", {{{"wedge", {1, 0}}, {"var", 2}, {"coeff", 1}}}}};
    json sorted{{"p", 2}, {"terms", {{{"wedge", {0, 1}}, {"var", 2}, {"coeff", -1}}}}};
    EXPECT_EQ(cocycle_from_json(F, swapped, 4).to_vector(), cocycle_from_json(F, sorted, 4).to_vector());
}

TEST(Serialize, MalformedCocyclesRejected)
{
    EXPECT_THROW(cocycle_from_json(F, json{{"p", 2}}, 4), InputError);
    EXPECT_THROW(cocycle_from_json(F, json{{"p", 2}, {"nvars", 5}, {"terms", json::array()}}, 4), InputError);
    json dup{{"p", 2}, {"terms", {{{"wedge", {1, 1}}, {"var", 2}, {"coeff", 1}}}}};
    EXPECT_THROW(cocycle_from_json(F, dup, 4), InputError);
    json wrong{{"p", 2}, {"terms", {{{"wedge", {1}}, {"var", 2}, {"coeff", 1}}}}};
    EXPECT_THROW(cocycle_from_json(F, wrong, 4), InputError);
    json var{{"p", 1}, {"terms", {{{"wedge", {1}}, {"var", 9}, {"coeff", 1}}}}};
    EXPECT_THROW(cocycle_from_json(F, var, 4), InputError);
}

TEST(Serialize, FingerprintIsStableHex)
{
    EXPECT_EQ(fingerprint(""), "cbf29ce484222325");
    EXPECT_EQ(fingerprint("a"), "af63dc4c8601ec8c");
    EXPECT_NE(fingerprint("ring x"), fingerprint("ring y"));
}

TEST(Verify, RecipeAliasesCarryTheSeed)
{
    EXPECT_EQ(expand_recipe("genus4-ci", 7), "ci 2 3 seed=7");
    EXPECT_EQ(expand_recipe("trigonal-genus5", 2), "nodal-quintic nodes=1 assign=1 seed=2");
    EXPECT_EQ(expand_recipe("ci 2 3 seed=4", 7), "ci 2 3 seed=4");
    EXPECT_EQ(expand_recipe("rnc 3", 7), "rnc 3");
}

TEST(Verify, UnknownSuiteAndCaseRejected)
{
    EXPECT_THROW(run_suite("nope", {}), InputError);
    VerifyConfig cfg;
    cfg.only_case = "missing";
    EXPECT_THROW(run_suite("scroll-betti", cfg), InputError);
}

TEST(Verify, ResultsIndependentOfJobsAndSelection)
{
    VerifyConfig cfg;
    cfg.samples = 3;
    cfg.varieties = {"rnc 3", "scroll 1 1"};
    auto serial = run_suite("ep", cfg);
    cfg.jobs = 3;
    auto parallel = run_suite("ep", cfg);
    ASSERT_TRUE(serial.pass);
    EXPECT_EQ(serial.cases.size(), 6u);
    EXPECT_EQ(without_times(serial), without_times(parallel));
    for (const auto& c : serial.cases) {
        VerifyConfig one = cfg;
        one.only_case = c.id;
        auto r = run_suite("ep", one);
        ASSERT_EQ(r.cases.size(), 1u);
        CaseResult a = c, b = r.cases[0];
        a.seconds = b.seconds = 0;
        EXPECT_EQ(a.to_json(), b.to_json()) << c.id;
    }
}

TEST(Verify, SeedChangesTheDrawnClasses)
{
    VerifyConfig cfg;
    cfg.samples = 1;
    cfg.varieties = {"rnc 4"};
    auto a = run_suite("ep", cfg);
    cfg.seed = 2;
    auto b = run_suite("ep", cfg);
    EXPECT_NE(a.cases[0].inputs["class"], b.cases[0].inputs["class"]);
}

TEST(Verify, ConfigRoundTripAndReplayCommand)
{
    VerifyConfig cfg;
    cfg.seed = 9;
    cfg.characteristic = 31991;
    cfg.samples = 4;
    cfg.points = 6;
    cfg.varieties = {"rnc 4"};
    auto back = config_from_json(json::parse(config_to_json(cfg).dump()));
    EXPECT_EQ(back.seed, 9u);
    EXPECT_EQ(back.characteristic, 31991u);
    EXPECT_EQ(back.samples, 4);
    EXPECT_EQ(back.points, 6);
    EXPECT_EQ(back.varieties, cfg.varieties);
    auto cmd = replay_command("reconstruct", cfg, "rnc 4#02");
    EXPECT_NE(cmd.find("--case 'rnc 4#02'"), std::string::npos);
    EXPECT_NE(cmd.find("--seed 9"), std::string::npos);
    EXPECT_NE(cmd.find("--field-char 31991"), std::string::npos);
    EXPECT_THROW(config_from_json(json{{"seed", 1}}), InputError);
}

TEST(Verify, FailuresAreReportedNotThrown)
{
    VerifyConfig cfg;
    cfg.varieties = {"rnc 3", "ci 2 2 2"};
    cfg.samples = 1;
    auto s = run_suite("ep", cfg);
    EXPECT_FALSE(s.pass);
    ASSERT_NE(s.first_failure(), nullptr);
    EXPECT_EQ(s.first_failure()->id, "ci 2 2 2#00");
    EXPECT_FALSE(s.first_failure()->error.empty());
    auto j = suite_to_json(s, cfg);
    EXPECT_EQ(j["status"], "FAIL");
    EXPECT_TRUE(j.contains("replay"));
}
