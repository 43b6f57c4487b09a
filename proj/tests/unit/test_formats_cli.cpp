#include <doctest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "asqf/cli.hpp"
#include "asqf/formats.hpp"
#include "helpers.hpp"

using namespace asqf;
using nlohmann::json;
using test::thrown_kind;

namespace {

struct CliOut {
    int rc = 0;
    std::string out;
    std::string err;
};

CliOut cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliOut r;
    r.rc = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json first_json_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    return json::parse(line);
}

} // namespace

TEST_CASE("field spec parsing") {
    FieldSpec s = parse_field_spec("p=3 s=1 n=4");
    CHECK(s.p == 3);
    CHECK(s.s == 1);
    CHECK(s.n == 4);
    CHECK(!s.base.has_value());
    CHECK(!s.top.has_value());

    FieldSpec s2 = parse_field_spec("p=3 n=2 top=1,0,1");
    CHECK(s2.s == 1); // default
    REQUIRE(s2.top.has_value());
    CHECK(*s2.top == std::vector<uint16_t>{1, 0, 1});

    FieldSpec s3 = parse_field_spec("p=3 s=2 n=2 base=1,0,1");
    REQUIRE(s3.base.has_value());
    CHECK(*s3.base == std::vector<uint16_t>{1, 0, 1});

    CHECK(thrown_kind([] { parse_field_spec("p=3"); }) == ErrorKind::InvalidInput);
    CHECK(thrown_kind([] { parse_field_spec("n=4"); }) == ErrorKind::InvalidInput);
    CHECK(thrown_kind([] { parse_field_spec("p=3 n=4 bogus=1"); }) == ErrorKind::InvalidInput);
    CHECK(thrown_kind([] { parse_field_spec("p=3 p=5 n=2"); }) == ErrorKind::InvalidInput);
    CHECK(thrown_kind([] { parse_field_spec("p=x n=2"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("field spec round trip") {
    for (auto [p, s, n] : std::vector<std::tuple<uint32_t, uint32_t, uint32_t>>{
             {3, 1, 2}, {3, 1, 4}, {3, 2, 2}, {5, 1, 3}}) {
        Ctx K = field_from_spec(FieldSpec{p, s, n, std::nullopt, std::nullopt});
        std::string text = field_spec_text(*K);
        Ctx K2 = field_from_spec(parse_field_spec(text));
        CHECK(K2->p == K->p);
        CHECK(K2->s == K->s);
        CHECK(K2->n == K->n);
        CHECK(K2->top_modulus == K->top_modulus);
        CHECK(K2->fq.modulus == K->fq.modulus);
    }
}

TEST_CASE("linpoly text round trip") {
    Ctx K = make_field(3, 1, 4);
    const FieldCtx& F = *K;

    LinPoly a = parse_linpoly(K, "[1,0]");
    CHECK(a == make_linpoly(K, {F.one()}));
    LinPoly b = parse_linpoly(K, "2");
    CHECK(b == make_linpoly(K, {F.from_fq(2)}));
    LinPoly c = parse_linpoly(K, "[(0,1),(1,0),0,0]");
    CHECK(c.a[0] == F.gen());
    CHECK(c.a[1] == F.one());
    LinPoly z = parse_linpoly(K, "[]");
    CHECK(z.is_zero());

    CHECK(thrown_kind([&] { parse_linpoly(K, "[1,2,3,4,5]"); }) != std::nullopt);
    CHECK(thrown_kind([&] { parse_linpoly(K, "[5]"); }) == ErrorKind::InvalidInput);
    CHECK(thrown_kind([&] { parse_linpoly(K, "[(1,"); }) == ErrorKind::InvalidInput);

    std::mt19937_64 rng(61);
    for (int t = 0; t < 100; ++t) {
        std::vector<FFElem> cs;
        for (uint32_t i = 0; i < 4; ++i) cs.push_back(test::random_elem(F, rng));
        LinPoly L = make_linpoly(K, cs);
        CHECK(parse_linpoly(K, linpoly_text(L)) == L);
    }

    Ctx K9 = make_field(3, 2, 2);
    for (int t = 0; t < 50; ++t) {
        std::mt19937_64 rng9(100 + t);
        std::vector<FFElem> cs;
        for (uint32_t i = 0; i < 2; ++i) cs.push_back(test::random_elem(*K9, rng9));
        LinPoly L = make_linpoly(K9, cs);
        CHECK(parse_linpoly(K9, linpoly_text(L)) == L);
    }
}

TEST_CASE("cli classify") {
    CliOut r = cli({"classify", "--field", "p=3 s=1 n=2", "--ell", "[1]"});
    CHECK(r.rc == 0);
    json j = first_json_line(r.out);
    CHECK(j["command"] == "classify");
    CHECK(j["r"] == 2);
    CHECK(j["epsilon"] == -1);
    CHECK(j["degenerate"] == false);
    CHECK(j["agree"] == true);
    CHECK(j["methods"].contains("diag"));
    CHECK(j["methods"].contains("dickson"));
    CHECK(j["methods"].contains("bruteforce"));
    CHECK(j["methods"].contains("circulant"));
    CHECK(j["methods"]["diag"]["r"] == 2);
    CHECK(j["n_lambda"]["0"] == 5);
    CHECK(j["run"]["budget"] == 200000);

    // zero ell is rejected before any computation
    CliOut rz = cli({"classify", "--field", "p=3 s=1 n=2", "--ell", "[0,0]"});
    CHECK(rz.rc == 2);
    CHECK(rz.err.find("error") != std::string::npos);

    // even characteristic is a hard input error
    CliOut re = cli({"classify", "--field", "p=2 s=1 n=2", "--ell", "[1]"});
    CHECK(re.rc == 2);

    // budget too small for brute force: marker, still exit 0
    CliOut rb = cli({"classify", "--field", "p=3 s=1 n=4", "--ell", "[1]", "--budget", "5"});
    CHECK(rb.rc == 0);
    json jb = first_json_line(rb.out);
    CHECK(jb["bruteforce"] == "skipped (budget)");
    CHECK(!jb["methods"].contains("bruteforce"));
    CHECK(jb["agree"] == true);
}

TEST_CASE("cli curve") {
    CliOut r = cli({"curve", "--field", "p=3 s=1 n=4", "--ell", "[0,2]"});
    CHECK(r.rc == 0);
    json j = first_json_line(r.out);
    CHECK(j["command"] == "curve");
    CHECK(j["N"] == 28);
    CHECK(j["verdict"] == "Minimal");
    CHECK(j["genus"] == 3);
    CHECK(j["hw_lower"] == 28);
    CHECK(j["hw_upper"] == 136);
    CHECK(j["k"] == 1);
    CHECK(j["m"] == 1);
    CHECK(j["class"]["r"] == 2);
    CHECK(j["class"]["epsilon"] == 1);
    CHECK(j["oracle_N"] == 28); // Minimal claims carry the oracle

    CliOut r2 = cli({"curve", "--field", "p=3 s=1 n=2", "--ell", "[1]"});
    json j2 = first_json_line(r2.out);
    CHECK(j2["N"] == 16);
    CHECK(j2["verdict"] == "Maximal");

    CliOut r3 = cli({"curve", "--field", "p=3 s=1 n=3", "--ell", "[1]"});
    CHECK(r3.rc == 0);
    json j3 = first_json_line(r3.out);
    CHECK(j3["verdict"] == "Neither");
    CHECK(!j3.contains("oracle_N"));

    // --oracle forces the cross-check even for Neither
    CliOut r4 = cli({"curve", "--field", "p=3 s=1 n=3", "--ell", "[1]", "--oracle"});
    CHECK(r4.rc == 0);
    CHECK(first_json_line(r4.out).contains("oracle_N"));

    // Maximal claim with a budget below the enumeration: marker instead
    CliOut r5 = cli({"curve", "--field", "p=3 s=1 n=4", "--ell", "[0,2]", "--budget", "5"});
    CHECK(r5.rc == 0);
    json j5 = first_json_line(r5.out);
    CHECK(j5["oracle"] == "skipped (budget)");
    CHECK(!j5.contains("oracle_N"));

    // --oracle with an impossible budget is an input error
    CliOut r6 = cli({"curve", "--field", "p=3 s=1 n=4", "--ell", "[0,2]", "--budget", "5",
                     "--oracle"});
    CHECK(r6.rc == 2);

    // k must divide n
    CliOut r7 = cli({"curve", "--field", "p=3 s=1 n=4", "--ell", "[0,2]", "--k", "3"});
    CHECK(r7.rc == 2);
}

TEST_CASE("cli search") {
    CliOut r = cli({"search", "--field", "p=3 s=1 n=4", "--family", "prop-binomial",
                    "--threads", "2"});
    CHECK(r.rc == 0);
    std::istringstream in(r.out);
    std::string line;
    size_t lines = 0;
    bool first = true;
    while (std::getline(in, line)) {
        json j = json::parse(line);
        if (first) {
            CHECK(j["command"] == "search");
            CHECK(j["family"] == "prop-binomial");
            CHECK(!j.contains("threads"));
            CHECK(!j["run"].contains("threads"));
            first = false;
        } else {
            CHECK(j.contains("params"));
            CHECK(j.contains("oracle_N"));
            CHECK((j["verdict"] == "Maximal" || j["verdict"] == "Minimal"));
        }
        ++lines;
    }
    CHECK(lines >= 2);

    // the trinomial family refuses quartic towers
    CliOut r2 = cli({"search", "--field", "p=3 s=1 n=4", "--family", "trinomial"});
    CHECK(r2.rc == 2);

    CliOut r3 = cli({"search", "--field", "p=3 s=1 n=4", "--family", "nonsense"});
    CHECK(r3.rc == 2);

    // rank2 over odd n: empty sweep, meta line only
    CliOut r4 = cli({"search", "--field", "p=3 s=1 n=3", "--family", "rank2"});
    CHECK(r4.rc == 0);
    std::istringstream in4(r4.out);
    size_t lines4 = 0;
    while (std::getline(in4, line)) ++lines4;
    CHECK(lines4 == 1);

    // thm-binomial needs 0 < l < m < n/2
    CliOut r5 = cli({"search", "--field", "p=3 s=1 n=4", "--family", "thm-binomial", "--m", "2",
                     "--l", "1"});
    CHECK(r5.rc == 2);
}

TEST_CASE("cli field-info and parse errors") {
    CliOut r = cli({"field-info", "--field", "p=3 s=1 n=4"});
    CHECK(r.rc == 0);
    json j = first_json_line(r.out);
    CHECK(j["command"] == "field-info");
    CHECK(j["p"] == 3);
    CHECK(j["q"] == 3);
    CHECK(j["order"] == 81);

    CHECK(cli({"bogus-subcommand"}).rc == 2);
    CHECK(cli({}).rc == 2); // a subcommand is required
    CHECK(cli({"classify", "--ell", "[1]"}).rc == 2); // --field is required
    CHECK(cli({"--help"}).rc == 0);
    CHECK(cli({"classify", "--help"}).rc == 0);

    // --pretty and --json exclude each other
    CHECK(cli({"field-info", "--field", "p=3 n=2", "--pretty", "--json"}).rc == 2);

    // pretty output is still one JSON document
    CliOut rp = cli({"field-info", "--field", "p=3 n=2", "--pretty"});
    CHECK(rp.rc == 0);
    CHECK(json::parse(rp.out)["order"] == 9);
}

TEST_CASE("cli selftest with a tiny cap skips everything") {
    CliOut r = cli({"selftest", "--max-qn", "1"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("SKIPPED") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    std::istringstream in(r.out);
    std::string line;
    size_t lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 11); // ten suites and the final status line
}
