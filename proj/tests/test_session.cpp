#include <string>

#include "chernlab/session.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"

using namespace chernlab;
using nlohmann::json;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_session(text);
  } catch (const ParseError& e) {
    CHECK(e.column() >= 1);
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("session") {
  TEST_CASE("round trip through the canonical printer") {
    std::string text =
        "# worked example\n"
        "field Fp 32003\n"
        "\n"
        "ring Z = poly(x,y,z) / (x*z, y*z, z^2)\n"
        "ring W = poly(a,b) weights 1,2\n"
        "ideal J in Z = (x, y)   # parameters\n"
        "filtration F in Z = adic(J)\n"
        "filtration G in Z = closure(J)\n"
        "coeffs Z F maxn=8\n"
        "hdeg Z rel J\n"
        "koszul Z J\n"
        "bounds Z J buchsbaum\n"
        "conjecture1 Z J domain\n"
        "reductions Z J trials=2 seed=7\n"
        "compare Z F G\n";
    SessionScript s = parse_session(text);
    CHECK(s.statements.size() == 14);
    std::string printed = print_session(s);
    CHECK(parse_session(printed) == s);
    CHECK(print_session(parse_session(printed)) == printed);
    CHECK(print_session(parse_session("ring  R = poly( x , y )\n")) == "ring R = poly(x,y)\n");
  }

  TEST_CASE("parse errors carry positions") {
    CHECK(parse_error_line("ideal J in R = (x)\n") == 1);
    CHECK(parse_error_line("ring R = poly(x)\nring R = poly(y)\n") == 2);
    CHECK(parse_error_line("ring R = poly(x)\nfield QQ\n") == 2);
    CHECK(parse_error_line("bogus R J\n") == 1);
    CHECK(parse_error_line("ring R = poly(x)\nideal J in R = (x)\ncoeffs R J depth=3\n") == 3);
    CHECK(parse_error_line("ring R = poly(x)\nideal J in R = (x)\ncoeffs R J maxn=abc\n") == 3);
    CHECK(parse_error_line("ring R = poly(x)\nideal J in R = (x)\ncompare R J J\n") == 3);
    CHECK(parse_error_line("ring R = poly(x\n") == 1);
    CHECK(parse_error_line("ring R = poly(x)\nhdeg\n") == 2);
    CHECK(parse_error_line("field Fp 1\n") == 1);
    CHECK(parse_error_line("ring R = poly(x,y) weights 1\n") == 1);
    CHECK(parse_error_line("ring R = poly(x)\nideal J in R = (x, )\n") == -1);
    CHECK(parse_session("ring R = poly(x)\nideal J in R = (x,)\n").statements.size() == 2);
  }

  TEST_CASE("z-ring script reproduces the worked values") {
    std::string text =
        "field Fp 32003\n"
        "ring Z = poly(x,y,z) / (x*z, y*z, z^2)\n"
        "ideal J in Z = (x, y)\n"
        "coeffs Z J maxn=6\n"
        "koszul Z J\n";
    RunOptions opts;
    opts.want_tsv = true;
    RunResult res = run_session(parse_session(text), opts);
    CHECK(res.exit_code == 0);

    json j = json::parse(res.json);
    CHECK(j["version"] == "0.1.0");
    CHECK(j["seed"] == "42");
    CHECK(j["field"] == "Fp(32003)");
    REQUIRE(j["instances"].size() == 1);
    const json& inst = j["instances"][0];
    CHECK(inst["name"] == "Z");
    CHECK(inst["ring"] == "poly(x,y,z) / (x*z, y*z, z^2)");
    REQUIRE(inst["results"].size() == 2);

    const json& coeffs = inst["results"][0];
    CHECK(coeffs["kind"] == "coeffs");
    CHECK(coeffs["inputs"]["ring"] == "Z");
    CHECK(coeffs["inputs"]["target"] == "J");
    CHECK(coeffs["inputs"]["filtration"] == "adic");
    CHECK(coeffs["inputs"]["maxn"] == "6");
    CHECK(coeffs["values"]["e"] == json::array({"1", "0", "1"}));
    CHECK(coeffs["values"]["n0"] == "0");
    CHECK(coeffs["values"]["lengths"][0] == "2");
    CHECK(coeffs["values"]["lengths"].size() >= 7);
    CHECK(coeffs["verdict"] == "ok");
    CHECK(coeffs["provenance"] == "derived");

    const json& koszul = inst["results"][1];
    CHECK(koszul["kind"] == "koszul");
    CHECK(koszul["values"]["h"] == json::array({"2", "2", "1"}));
    CHECK(koszul["values"]["colength"] == "2");
    CHECK(koszul["values"]["euler"] == "1");
    CHECK(koszul["values"]["correction"] == "1");
    CHECK(koszul["values"]["e0"] == "1");
    CHECK(koszul["values"]["d_sequence"] == "true");
    CHECK(koszul["values"]["e1_formula"] == "0");
    CHECK(koszul["values"]["e1"] == "0");
    CHECK(koszul["verdict"] == "consistent");

    REQUIRE(res.tsv.count("Z.J.tsv") == 1);
    const std::string& tsv = res.tsv.at("Z.J.tsv");
    CHECK(tsv.rfind("n\tlength\tdiff\n0\t2\t2\n1\t4\t2\n", 0) == 0);

    RunResult again = run_session(parse_session(text), opts);
    CHECK(again.json == res.json);
    CHECK(again.tsv == res.tsv);
  }

  TEST_CASE("field override replaces the script declaration") {
    std::string text =
        "field Fp 32003\n"
        "ring P = poly(x,y)\n"
        "ideal M2 in P = (x^2, x*y, y^2)\n"
        "coeffs P M2\n";
    RunOptions opts;
    FieldStmt qq;
    qq.rational = true;
    opts.field_override = qq;
    RunResult res = run_session(parse_session(text), opts);
    CHECK(res.exit_code == 0);
    json j = json::parse(res.json);
    CHECK(j["field"] == "QQ");
    CHECK(j["instances"][0]["results"][0]["values"]["e"] == json::array({"4", "1", "0"}));
  }

  TEST_CASE("precondition violations are recorded with exit code three") {
    std::string text =
        "ring P = poly(x,y)\n"
        "ideal I in P = (x)\n"
        "coeffs P I\n";
    RunResult res = run_session(parse_session(text));
    CHECK(res.exit_code == 3);
    json j = json::parse(res.json);
    const json& r = j["instances"][0]["results"][0];
    CHECK(r["verdict"] == "error");
    CHECK(r["error"].is_string());
  }

  TEST_CASE("degree budget exhaustion exits with code four") {
    std::string text =
        "ring P = poly(x,y)\n"
        "ideal M2 in P = (x^2, x*y, y^2)\n"
        "coeffs P M2\n";
    RunOptions opts;
    opts.maxdeg = 3;
    RunResult res = run_session(parse_session(text), opts);
    CHECK(res.exit_code == 4);
    json j = json::parse(res.json);
    CHECK(j["instances"][0]["results"][0]["verdict"] == "error");
  }

  TEST_CASE("empty script yields a clean empty report") {
    RunResult res = run_session(parse_session("# nothing to do\n"));
    CHECK(res.exit_code == 0);
    json j = json::parse(res.json);
    CHECK(j["field"] == "Fp(32003)");
    CHECK(j["instances"].empty());
  }

  TEST_CASE("idealization script reproduces the documented coefficients") {
    std::string text =
        "ring A = poly(x,y,z,u,v) / (u^2, u*v, v^2, y*u - x*v)\n"
        "ideal J in A = (x, y, z^2)\n"
        "coeffs A J\n";
    RunResult res = run_session(parse_session(text));
    CHECK(res.exit_code == 0);
    json j = json::parse(res.json);
    const json& e = j["instances"][0]["results"][0]["values"]["e"];
    REQUIRE(e.size() == 4);
    CHECK(e[0] == "4");
    CHECK(e[1] == "-2");
  }

  TEST_CASE("bounds command reports the Northcott equality") {
    std::string text =
        "ring P = poly(x,y)\n"
        "ideal M2 in P = (x^2, x*y, y^2)\n"
        "bounds P M2\n";
    RunResult res = run_session(parse_session(text));
    CHECK(res.exit_code == 0);
    json j = json::parse(res.json);
    bool seen = false;
    for (const json& r : j["instances"][0]["results"]) {
      if (r["kind"] == "bound" && r["inputs"]["bound"] == "northcott") {
        seen = true;
        CHECK(r["verdict"] == "holds");
        CHECK(r["values"]["lhs"] == "1");
        CHECK(r["values"]["rhs"] == "1");
      }
    }
    CHECK(seen);
  }
}
