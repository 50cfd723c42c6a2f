#include <braidchow/cli.hpp>

#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <sstream>

using namespace braidchow;

namespace {

std::string strip_spaces(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(int (*cmd)(const cli::RunConfig&, std::ostream&, std::ostream&), const cli::RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = cmd(cfg, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Json, SeriesRoundTrip) {
    std::mt19937 rng(99);
    for (int i = 0; i < 10; ++i) {
        const auto s = random_series(rng, 6, 0, 6);
        EXPECT_EQ(symseries_from_json(json::parse(to_json(s).dump())), s);
    }
}

TEST(Json, SchurAndNumericRoundTrip) {
    const auto b = solve_b(8);
    const SchurTable row{6, equivariant_table(b, 6)};
    const auto back = schur_table_from_json(json::parse(to_json(row).dump()));
    EXPECT_EQ(back.n, 6);
    EXPECT_EQ(back.coeffs, row.coeffs);
    const auto table = hnum_from_equivariant(b);
    EXPECT_EQ(numeric_table_from_json(json::parse(to_json(table).dump())), table);
}

TEST(Json, RejectsMalformedInput) {
    EXPECT_THROW(parts_from_json(json::parse("[1, 2]")), parse_error);
    EXPECT_THROW(symseries_from_json(json::parse(R"({"n": 2, "terms": [{"partition": [3], "t": 0, "coeff": "1/1"}]})")),
                 parse_error);
    EXPECT_THROW(symseries_from_json(json::parse(R"({"terms": []})")), parse_error);
}

TEST(Latex, ReproducesPublishedRows) {
    const std::map<int, std::string> published{
        {2, "s_2"},
        {3, "s_3(1 + t)"},
        {4, "s_4(1 + 3t + t^2) + s_{31}t+ s_{22}t"},
        {5, "s_5(1 + 5t + 5t^2 + t^3) + s_{41}(4t + 4t^2) + s_{32}(3t + 3t^2) + s_{221}(t + t^2)"},
        {6, "s_6(1+9t+19t^2+9t^3+t^4) + s_{51}(7t+21t^2+7t^3)+ s_{42}(9t+28t^2+9t^3) + s_{411}(t+7t^2+t^3)+ "
            "s_{33}(2t+8t^2+2t^3)+ s_{321}(2t+12t^2+2t^3)+ s_{3111} t^2  + s_{222}(2t+7t^2+2t^3) +s_{2211} t^2"},
    };
    const auto b = solve_b(6);
    for (const auto& [n, row] : published)
        EXPECT_EQ(strip_spaces(latex_basis_sum(equivariant_table(b, n), 's')), strip_spaces(row)) << n;
}

TEST(Latex, PolynomialFormatting) {
    EXPECT_EQ(latex_poly(Poly{1, -3, 0, 1}), "1 - 3t + t^3");
    EXPECT_EQ(latex_poly(Poly(make_rational(-1, 2))), "-\\frac{1}{2}");
    EXPECT_EQ(latex_subscript(Partition{3, 1, 1}), "{311}");
    EXPECT_EQ(latex_multiplier(Poly{0, 0, 1}), "t^2");
    EXPECT_EQ(latex_multiplier(Poly{0, 2}), "(2t)");
}

TEST(Csv, NumericLayout) {
    std::ostringstream os;
    write_csv(os, hnum_stirling(4));
    EXPECT_EQ(os.str(), "n,chi,hnum\n1,1,1/1\n2,1,1/1\n3,2,1/1 1/1\n4,10,1/1 8/1 1/1\n");
}

TEST(Cli, TableJsonMatchesSolver) {
    cli::RunConfig cfg;
    cfg.max_n = 5;
    const auto r = run(cli::cmd_table, cfg);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    ASSERT_EQ(j.size(), 4U);
    EXPECT_EQ(schur_table_from_json(j[3]).coeffs, reference::published_equivariant_table().at(5));
}

TEST(Cli, UsageErrorsExitTwo) {
    cli::RunConfig cfg;
    cfg.max_n = 1;
    EXPECT_EQ(run(cli::cmd_table, cfg).code, 2);
    cfg.max_n = 5;
    cfg.format = "yaml";
    EXPECT_EQ(run(cli::cmd_numeric, cfg).code, 2);
    cfg.format = "json";
    cfg.method = "strata";
    cfg.max_n = 9;
    EXPECT_EQ(run(cli::cmd_numeric, cfg).code, 2);
    cfg.max_n = 8;
    EXPECT_EQ(run(cli::cmd_strata, cfg).code, 2);
}

TEST(Cli, VerifyPassesAndInjectedFaultFails) {
    cli::RunConfig cfg;
    cfg.max_n = 5;
    const auto ok = run(cli::cmd_verify, cfg);
    EXPECT_EQ(ok.code, 0) << ok.out;
    cfg.inject_fault = "stirling-sign";
    const auto bad = run(cli::cmd_verify, cfg);
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("[FAIL] stirling-bell identity"), std::string::npos);
    EXPECT_NE(bad.err.find("first failing check: stirling-bell identity"), std::string::npos);
}

TEST(Cli, NumericAllRoutesAgree) {
    cli::RunConfig cfg;
    cfg.max_n = 7;
    cfg.method = "all";
    cfg.format = "csv";
    const auto r = run(cli::cmd_numeric, cfg);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("6,1108,"), std::string::npos) << r.out;
    EXPECT_NE(r.err.find("agreement across 4 routes"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("strata oracle agrees"), std::string::npos) << r.err;
}

TEST(Cli, StrataReport) {
    cli::RunConfig cfg;
    cfg.max_n = 4;
    const auto r = run(cli::cmd_strata, cfg);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.at("total"), 32);
    EXPECT_EQ(j.at("chain_count"), 32);
    EXPECT_EQ(poly_from_json(j.at("epoly")), (Poly{1, 8, 1}));
}

TEST(Cli, PowerSumBasisForSmallestCase) {
    cli::RunConfig cfg;
    cfg.max_n = 2;
    cfg.basis = "p";
    const auto r = run(cli::cmd_table, cfg);
    ASSERT_EQ(r.code, 0);
    const auto s = symseries_from_json(json::parse(r.out).at(0));
    SymSeries expected(2);
    expected.add_term(Partition{1, 1}, Poly(make_rational(1, 2)));
    expected.add_term(Partition{2}, Poly(make_rational(1, 2)));
    EXPECT_EQ(s, expected);
}

TEST(Cli, OutputIsDeterministic) {
    for (const char* format : {"json", "csv", "latex"}) {
        cli::RunConfig cfg;
        cfg.max_n = 6;
        cfg.format = format;
        EXPECT_EQ(run(cli::cmd_table, cfg).out, run(cli::cmd_table, cfg).out);
        EXPECT_EQ(run(cli::cmd_m_series, cfg).out, run(cli::cmd_m_series, cfg).out);
        cfg.method = "all";
        EXPECT_EQ(run(cli::cmd_numeric, cfg).out, run(cli::cmd_numeric, cfg).out);
    }
}

TEST(Cli, SmallestVerifyIsFast) {
    cli::RunConfig cfg;
    cfg.max_n = 2;
    const auto start = std::chrono::steady_clock::now();
    EXPECT_EQ(run(cli::cmd_verify, cfg).code, 0);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
}
