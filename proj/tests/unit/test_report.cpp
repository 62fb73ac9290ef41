#include <gtest/gtest.h>

#include "cbi/cbi.hpp"
#include "cbi/suites.hpp"

using namespace cbi;
using report::Json;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

const ParamSet kP1{q(1), q(1, 2), q(1, 4), q(1, 4)};

}  // namespace

TEST(Serialize, RationalLiterals) {
    EXPECT_EQ(report::to_json(q(-15, 32)), "-15/32");
    EXPECT_EQ(report::to_json(q(4, 2)), "2");
    EXPECT_EQ(report::to_json(Poly()), Json::array({"0"}));
}

TEST(Serialize, PolyTable) {
    Json j = report::to_json(make_table(Family::Complementary, kP1, 2));
    // I_1 = x - rho2, I_2 = (x + rho2)(x - rho2) - tau_1 with tau_1 = -15/32
    Json expected = Json::parse(R"({"family":"cbi","params":{"rho1":"1","rho2":"1/2","r1":"1/4","r2":"1/4"},
                                    "polys":[["1"],["-1/2","1"],["7/32","0","1"]]})");
    EXPECT_EQ(j, expected);
    EXPECT_EQ(j.dump(), expected.dump());  // key order is part of the format

    Json b = report::to_json(make_table(Family::BannaiIto, kP1, 0));
    EXPECT_EQ(b["polys"], Json::parse(R"([["1"]])"));
}

TEST(Serialize, PolyTableCsv) {
    const std::string csv = report::to_csv(make_table(Family::Complementary, kP1, 2));
    EXPECT_EQ(csv, "n,c0,c1,c2\n0,1,0,0\n1,-1/2,1,0\n2,7/32,0,1\n");
}

TEST(Serialize, OperatorDump) {
    EXPECT_EQ(report::to_json(build_K2()),
              Json::parse(R"([{"shift":"0","reflect":false,"num":["0","1"],"den":["1"]}])"));
    // P = (rho2/x) + (1 - rho2/x) R at rho2 = 1/2
    Json p = report::to_json(build_P(kP1));
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[0], Json::parse(R"({"shift":"0","reflect":false,"num":["1/2"],"den":["0","1"]})"));
    EXPECT_EQ(p[1], Json::parse(R"({"shift":"0","reflect":true,"num":["-1/2","1"],"den":["0","1"]})"));
}

TEST(Serialize, OrthoReport) {
    const ParamSet p = positive_even_params(q(1), q(1), q(1), 2);
    OrthoReport rep = compute_orthogonality(classify_truncation(p, 2), p);
    Json j = report::to_json(rep);
    EXPECT_EQ(j["case"], to_string(rep.truncation.tag));
    EXPECT_TRUE(j["pass"].get<bool>());
    ASSERT_EQ(j["gram"].size(), 3u);
    for (std::size_t n = 0; n < 3; ++n) {
        for (std::size_t m = 0; m < 3; ++m) {
            if (n != m) {
                EXPECT_EQ(j["gram"][n][m], "0");
            }
        }
    }
    const std::string csv = report::to_csv(rep);
    EXPECT_EQ(csv.substr(0, 10), "k,x_k,w_k\n");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(Serialize, RelationsAndCasimir) {
    const auto ops = realization(kP1, q(2, 3));
    const auto d = structure_constants(kP1, q(2, 3));
    Json rel = report::to_json(check_relations(ops, d, 8));
    ASSERT_EQ(rel["relations"].size(), 7u);
    for (const auto& r : rel["relations"]) {
        EXPECT_TRUE(r.contains("name"));
        EXPECT_TRUE(r["normal_form_pass"].get<bool>());
        EXPECT_TRUE(r["action_pass"].get<bool>());
    }
    Json cas = report::to_json(compute_casimir(ops, d));
    EXPECT_EQ(cas["value"], "-19/48");
    EXPECT_TRUE(cas["pass"].get<bool>());
}

TEST(Serialize, AwTables) {
    const AWLimitReport rep = verify_aw_limit(kP1, 2);
    Json j = report::to_json(rep);
    ASSERT_EQ(j["tables"].size(), 3u);
    for (const auto& t : j["tables"]) {
        ASSERT_EQ(t["rows"].size(), 3u);
        EXPECT_TRUE(t["rows"][0]["alpha_ratio"].is_null());
        EXPECT_EQ(t["rows"][0]["eps"], 1e-3);
    }
    EXPECT_EQ(j["tables"][1]["alpha_star"], aw_limit_coeffs(kP1, 1).alpha_star.str());
}

TEST(Suites, Shortest) {
    EXPECT_EQ(suites::shortest(1e-3), "0.001");
    EXPECT_EQ(suites::shortest(5e-2), "0.05");
    EXPECT_EQ(suites::param_flags(ParamSet{q(-1, 2), q(0), q(3), q(1, 7)}),
              "--rho1=-1/2 --rho2=0 --r1=3 --r2=1/7");
}

TEST(Suites, DrawsAreDeterministic) {
    auto a = suites::draw_param_alpha(7, 2, 2);
    auto b = suites::draw_param_alpha(7, 2, 2);
    ASSERT_EQ(a.size(), 4u);
    EXPECT_EQ(a[0].params.rho1, a[1].params.rho1);  // two alphas per draw
    const std::string ja = report::dump(suites::eigen_suite(a, 8).to_json());
    const std::string jb = report::dump(suites::eigen_suite(b, 8).to_json());
    EXPECT_EQ(ja, jb);
    EXPECT_NE(ja, report::dump(suites::eigen_suite(suites::draw_param_alpha(8, 2, 2), 8).to_json()));
}

TEST(Suites, EigenAndFiveTermPass) {
    auto cases = suites::draw_param_alpha(3, 2, 1, {default_degree_cap, true});
    EXPECT_TRUE(suites::eigen_suite(cases, 10).passed());
    EXPECT_TRUE(suites::five_term_suite(cases, {6, -4, 4}).passed());
}

TEST(Suites, OrthoSweep) {
    const auto sweep = suites::default_ortho_sweep();
    EXPECT_EQ(sweep.size(), 15u);
    EXPECT_EQ(sweep.front().flags, "--even a=1 b=1 c=1 N=2");
    auto res = suites::ortho_suite(sweep);
    EXPECT_TRUE(res.passed()) << res.witness->detail;
}

TEST(Suites, AlgebraWitness) {
    // beta = 0: the shifted constants coincide with the unshifted ones
    auto ok = suites::algebra_suite({{kP1, q(2, 3), q(0)}}, 8);
    EXPECT_TRUE(ok.passed());
    auto bad = suites::algebra_suite({{kP1, q(2, 3), q(1, 2)}}, 8);
    ASSERT_FALSE(bad.passed());
    EXPECT_NE(bad.witness->detail.find("d1~"), std::string::npos);
    EXPECT_EQ(bad.witness->reproduce,
              "cbi verify algebra --rho1=1 --rho2=1/2 --r1=1/4 --r2=1/4 --alpha=2/3 --beta=1/2");
    Json j = bad.to_json();
    EXPECT_FALSE(j["pass"].get<bool>());
    EXPECT_TRUE(j["cases"][0]["alpha_shift"]["d1_with_beta_squared_matches"].get<bool>());
}

TEST(Suites, AwWitnessNamesEpsRow) {
    auto res = suites::aw_limit_suite({kP1}, 2, {0.1, 0.05});
    ASSERT_FALSE(res.passed());
    EXPECT_NE(res.witness->detail.find("eps="), std::string::npos);
    EXPECT_EQ(res.witness->reproduce, "cbi verify aw-limit --rho1=1 --rho2=1/2 --r1=1/4 --r2=1/4 --n=2 --eps=0.1,0.05");
    EXPECT_TRUE(suites::aw_limit_suite({kP1}, 6, {1e-3, 1e-4, 1e-5}).passed());
}

TEST(Suites, Limits) {
    auto dh = suites::draw_dual_hahn_inputs(5, 1, 6);
    EXPECT_TRUE(suites::dual_hahn_suite(dh, 6, 8).passed());
    EXPECT_TRUE(suites::hahn_suite({{q(1, 3), q(1, 5), 4}}).passed());
    EXPECT_TRUE(suites::para_krawtchouk_suite({{3, q(1, 3)}}).passed());
}
