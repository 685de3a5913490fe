#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "nil2/cli.hpp"
#include "nil2/errors.hpp"
#include "nil2/groupfile.hpp"
#include "oracles.hpp"

using namespace nil2;

namespace {

const std::string kData = NIL2_DATA_DIR;

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("group file parsing") {
    const ClassTwoGroup g = parse_group_file(kData + "/paper-example.grp");
    CHECK(g.name() == "paper-example");
    CHECK(g.dimV() == 4);
    CHECK(g.dimW() == 2);

    const ClassTwoGroup n21 = parse_group_text("group t\ndimV 2\ndimW 1\nbracket w1\n0 1\n-1 0\n");
    CHECK(n21.pencil().coord(0).matrix() == RatMatrix::from_rows({{0, 1}, {-1, 0}}));

    // semicolon separators and comments are accepted
    const ClassTwoGroup semi =
        parse_group_text("group t ; dimV 2 ; dimW 1 ; bracket w1 ; 0 1/2 ; -1/2 0  # done");
    CHECK(semi.pencil().coord(0).matrix()(0, 1) == Rational(1, 2));

    CHECK_THROWS_AS(parse_group_text("group t\ndimV 2\ndimW 1\nbracket w1\n0 1\n1 0\n"),
                    NotAlternating);
    CHECK_THROWS_AS(parse_group_text("group t\ndimV 2\ndimW 1\nbracket w1\n0 x\n-1 0\n"),
                    SyntaxError);
    CHECK_THROWS_AS(parse_group_text("dimV 2"), SyntaxError);
    try {
        parse_group_text("group t\ndimV 2\ndimW 1\nbracket w1\n0 x\n-1 0\n");
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.line == 5);
        CHECK(e.col == 3);
    }
}

TEST_CASE("round trip on the shipped files") {
    for (const std::string name : {"paper-example", "n21", "n41", "product-2x2"}) {
        const ClassTwoGroup g = parse_group_file(kData + "/" + name + ".grp");
        const ClassTwoGroup again = parse_group_text(serialize_group(g));
        CHECK(again.name() == g.name());
        CHECK(again.pencil() == g.pencil());
    }
}

TEST_CASE("round trip on random groups") {
    nil2::testing::Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const ClassTwoGroup g = rng.valid_group(2 + trial % 4, 1 + trial % 3, 9, 7);
        CHECK(parse_group_text(serialize_group(g)).pencil() == g.pencil());
    }
}

TEST_CASE("element expressions") {
    const ClassTwoGroup g = parse_group_file(kData + "/n21.grp");
    const LieElement e = parse_element(g, "x1^(1/2)*x2^(1/3)*c(1,2)^(5)");
    CHECK(e.v() == RatVec{Rational(1, 2), Rational(1, 3)});
    CHECK(e.w() == RatVec{Rational(1, 12) + 5});

    CHECK(parse_element(g, "x1^2") == bch_pow(g.basis_v(0), 2));
    CHECK(parse_element(g, "x1 * x2") == bch_mul(g.basis_v(0), g.basis_v(1)));
    CHECK_THROWS_AS(parse_element(g, "x3"), SyntaxError);
    CHECK_THROWS_AS(parse_element(g, "y1"), SyntaxError);
    CHECK_THROWS_AS(parse_element(g, "x1^"), SyntaxError);
}

TEST_CASE("cli check") {
    CHECK(run({"check", kData + "/paper-example.grp"}).exit_code == 0);
    CHECK(run({"check", kData + "/missing.grp"}).exit_code == 65);

    const std::string bad = "bad-test-input.grp";
    {
        std::ofstream f(bad);
        f << "group bad\ndimV 2\ndimW 1\nbracket w1\n0 1\n1 0\n";
    }
    const CliResult r = run({"check", bad});
    CHECK(r.exit_code == 65);
    CHECK(contains(r.err, "row 1, col 2"));  // NotAlternating names the entry

    const std::string dep = "dep-test-input.grp";
    {
        std::ofstream f(dep);
        f << "group dep\ndimV 2\ndimW 2\nbracket w1\n0 1\n-1 0\nbracket w2\n0 2\n-2 0\n";
    }
    const CliResult d = run({"check", dep});
    CHECK(d.exit_code == 65);
    CHECK(contains(d.err, "direct factor"));  // Decomposable diagnostic
}

TEST_CASE("cli pfaffian prints the form and its roots") {
    const CliResult r = run({"pfaffian", kData + "/paper-example.grp"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "l1^2"));
    CHECK(contains(r.out, "[0 : 1] ×2"));
}

TEST_CASE("cli verdict commands and exit codes") {
    CHECK(run({"embed-standard", kData + "/paper-example.grp", "--k", "2"}).exit_code == 0);
    CHECK(run({"approx-standard", kData + "/paper-example.grp", "--k", "2"}).exit_code == 1);
    CHECK(run({"approx-standard", kData + "/product-2x2.grp", "--k", "2"}).exit_code == 0);
    CHECK(run({"precedes", kData + "/product-2x2.grp", kData + "/n21.grp"}).exit_code == 0);
    CHECK(run({"precedes", kData + "/paper-example.grp", kData + "/n21.grp"}).exit_code == 1);
}

TEST_CASE("cli equiv cites the full-rank obstruction") {
    const CliResult r = run({"equiv", kData + "/paper-example.grp", kData + "/n41.grp"});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "Proposition 5"));

    CHECK(run({"equiv", kData + "/n21.grp", kData + "/n21.grp"}).exit_code == 0);
    CHECK(run({"equiv", kData + "/n21.grp", kData + "/n41.grp"}).exit_code == 1);
}

TEST_CASE("cli paper-example") {
    const CliResult r = run({"paper-example"});
    CHECK(r.exit_code == 1);  // classified distinct from every standard group
    CHECK(contains(r.out, "l1^2"));
    CHECK(contains(r.out, "l1^4"));
    CHECK(contains(r.out, "[0 : 1]"));
    CHECK(contains(r.out, "not geometrically equivalent to any N(k,1)"));
}

TEST_CASE("cli bch") {
    const CliResult r = run({"bch", kData + "/n21.grp", "x1", "x2"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "(1, 1) | (1/2)"));
    CHECK(run({"bch", kData + "/n21.grp", "x1", "x9"}).exit_code == 65);
}

TEST_CASE("cli json output is schema stable") {
    const CliResult r =
        run({"--format", "json", "approx-standard", kData + "/paper-example.grp", "--k", "2"});
    CHECK(r.exit_code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("answer"));
    CHECK(j.contains("certificate"));
    CHECK(j.contains("trace"));
    CHECK(j.contains("citations"));
    CHECK(j["answer"] == "no");
    CHECK(j["certificate"]["type"] == "locus");

    const CliResult e =
        run({"--format", "json", "equiv", kData + "/n21.grp", kData + "/n41.grp"});
    const auto je = nlohmann::json::parse(e.out);
    CHECK(je.contains("classification"));
    CHECK(je.contains("supporting"));
    for (const auto& v : je["supporting"]) {
        CHECK(v.contains("answer"));
        CHECK(v.contains("certificate"));
        CHECK(v.contains("trace"));
        CHECK(v.contains("citations"));
    }

    const CliResult c = run(
        {"--format", "json", "precedes", kData + "/product-2x2.grp", kData + "/n21.grp"});
    CHECK(c.exit_code == 0);
    const auto jc = nlohmann::json::parse(c.out);
    CHECK(jc["certificate"]["type"] == "chain");
    CHECK(jc["certificate"]["k"] == 2);
    CHECK(jc["certificate"]["approx"]["answer"] == "yes");
    CHECK(jc["certificate"]["embed"]["answer"] == "yes");

    const CliResult pe = run({"--format", "json", "paper-example"});
    CHECK(pe.exit_code == 1);
    const auto jp = nlohmann::json::parse(pe.out);
    CHECK(jp["pfaffian_form"] == "l1^2");
    CHECK(jp["det_form"] == "l1^4");
    CHECK(jp["locus_k2"]["points"][0]["point"] == "[0 : 1]");
    CHECK(jp["report"]["classification"] == "distinct");
}

TEST_CASE("cli usage errors") {
    CHECK(run({"frobnicate"}).exit_code == 64);
    CHECK(run({"embed-standard", kData + "/n21.grp"}).exit_code == 64);  // missing --k
    CHECK(run({}).exit_code == 64);
    CHECK(run({"embed-standard", kData + "/n21.grp", "--k", "3"}).exit_code == 65);  // odd k
}
