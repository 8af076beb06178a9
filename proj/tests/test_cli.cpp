#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "nagaolab/cli.hpp"
#include "nagaolab/io.hpp"

using namespace nagaolab;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args, std::string const& stdin_text = "") {
    args.insert(args.begin(), "nagaolab");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int const          code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
  }

  bool contains(std::string const& s, std::string const& needle) {
    return s.find(needle) != std::string::npos;
  }
}  // namespace

TEST_CASE("nf examples") {
  Result const a = run({"nf", "--mod", "2", "[[1,0],[t,1]]", "--format", "json"});
  REQUIRE(a.code == 0);
  json const ja = json::parse(a.out);
  CHECK(ja["length"] == 3);
  CHECK(ja["normal_form"]["tags"] == json::parse("[1,2,1]"));

  Result const b = run({"nf", "--mod", "3", "[[1,t],[0,1]]"});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "length     1"));

  Result const c = run({"nf", "--ring", "e2zt", R"(["W","W"])", "--format", "json"});
  REQUIRE(c.code == 0);
  json const jc = json::parse(c.out);
  CHECK(jc["length"] == 0);
  CHECK(jc["normal_form"]["head"] == to_json(-Mat2::identity(Ring::integers())));
}

TEST_CASE("nf refuses bare matrices over Z[t]") {
  Result const r = run({"nf", "--ring", "e2zt", "[[1,t],[0,1]]"});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "not Euclidean"));
  CHECK(r.out.empty());
}

TEST_CASE("nf reads stdin and reduces words mod p") {
  Result const r = run({"nf", "--ring", "e2zt", "--mod", "2", "-", "--format", "json"}, R"j(["E21(-2)", "E12(-t)"])j");
  REQUIRE(r.code == 0);
  json const j = json::parse(r.out);
  CHECK(j["length"] == 1);
  CHECK(j["matrix"] == to_json(parse_matrix("[[1,t],[0,1]]", Ring::mod(2))));
}

TEST_CASE("nf output re-normalizes to itself") {
  for (std::string const input : {"[[1,0],[t,1]]", "[[1 + t^2, t],[t, 1]]", "[[0,-1],[1,t^3 + 2]]"}) {
    Result const first = run({"nf", "--mod", "3", input, "--format", "json"});
    REQUIRE(first.code == 0);
    std::string const nf_json = json::parse(first.out)["normal_form"].dump();
    Result const second = run({"nf", "--mod", "3", nf_json, "--format", "json"});
    REQUIRE(second.code == 0);
    CHECK(second.out == first.out);
  }
  Result const first = run({"nf", "--ring", "e2zt", R"j(["E21(3)","E12(t^2)","W","E12(5)"])j", "--format", "json"});
  REQUIRE(first.code == 0);
  Result const second = run({"nf", "--ring", "e2zt", json::parse(first.out)["normal_form"].dump(), "--format", "json"});
  CHECK(second.out == first.out);
}

TEST_CASE("nf errors") {
  CHECK(run({"nf", "[[1,0],[0,1]]"}).code == 2);
  CHECK(run({"nf", "--mod", "4", "[[1,0],[0,1]]"}).code == 2);
  CHECK(run({"nf", "--mod", "3", "[[2,0],[0,1]]"}).code == 2);
  CHECK(run({"nf", "--mod", "3", "[[1,0],[0,1"}).code == 2);
  CHECK(run({"nf", "--mod", "3", "--ring", "zt", "W"}).code == 2);
  CHECK(run({"nf", "--ring", "e2zt", R"j([{"factor":1,"matrix":"E12(t)"}])j"}).code == 2);
  CHECK(run({"nf", "--mod", "3", "-"}, "").code == 2);
}

TEST_CASE("hdim examples") {
  Result const a = run({"hdim", "--group", "e2zt", "--mod", "3", "--max-i", "2", "--max-deg", "4", "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "e2zt,3,4,1,5,"));

  Result const b = run({"hdim", "--group", "e2zt", "--mod", "5", "--max-i", "2", "--max-deg", "4", "--format", "json"});
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out)[0]["rows"][2]["dim"] == 10);

  Result const c =
      run({"hdim", "--group", "bfpt", "--mod", "5", "--coinv", "--max-i", "2", "--max-deg", "4", "--format", "csv"});
  REQUIRE(c.code == 0);
  CHECK(contains(c.out, "bfpt,5,4,1,0,coinvariants;basis=t^1..t^d;part=wedge"));
  CHECK(contains(c.out, "bfpt,5,4,2,6,coinvariants;basis=t^1..t^d;part=wedge"));

  Result const d = run({"hdim", "--group", "bz,sl2z", "--mod", "2", "--max-i", "1", "--max-deg", "0"});
  CHECK(d.code == 0);
  CHECK(contains(d.out, "sl2z"));
  CHECK(contains(d.out, "via-Z/12"));
}

TEST_CASE("hdim boundaries") {
  Result const out_of_scope = run({"hdim", "--group", "sl2fpt", "--mod", "5"});
  CHECK(out_of_scope.code == 3);
  CHECK(contains(out_of_scope.err, "out of scope"));
  CHECK(run({"hdim", "--group", "sl2fpt", "--mod", "3"}).code == 0);
  CHECK(run({"hdim", "--group", "nope", "--mod", "3"}).code == 2);
  CHECK(run({"hdim", "--group", "e2zt"}).code == 2);
  CHECK(run({"hdim", "--group", "e2zt", "--mod", "3", "--max-deg", "17"}).code == 2);
  CHECK(run({"hdim", "--group", "e2zt", "--mod", "3", "--coinv"}).code == 2);
  CHECK(run({"hdim", "--group", "e2zt", "--mod", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("degree cap from the environment") {
  ::setenv("NAGAOLAB_MAX_DEG", "3", 1);
  CHECK(cli::max_degree_from_env() == 3);
  CHECK(run({"hdim", "--group", "e2zt", "--mod", "3", "--max-deg", "4"}).code == 2);
  CHECK(run({"hdim", "--group", "e2zt", "--mod", "3", "--max-deg", "3"}).code == 0);
  ::setenv("NAGAOLAB_MAX_DEG", "x", 1);
  CHECK(run({"hdim", "--group", "e2zt", "--mod", "3"}).code == 2);
  ::unsetenv("NAGAOLAB_MAX_DEG");
  CHECK(cli::max_degree_from_env() == 16);
}

TEST_CASE("hdim ledger") {
  Result const r = run({"hdim", "--ledger", "--mod", "7", "--max-i", "8", "--max-deg", "8", "--format", "json"});
  CHECK(r.code == 0);
  json const j = json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["ledger"].size() == 9);
}

TEST_CASE("verify examples") {
  Result const w = run({"verify", "--witness", "2..3", "1..2"});
  CHECK(w.code == 0);
  CHECK(contains(w.out, "0 failed"));

  Result const a = run({"verify", "--sn", "3", "2"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "witness (1, 1)"));

  Result const b = run({"verify", "--sn", "3", "3"});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "none exists"));

  Result const k = run({"verify", "--kernel", "3", "2", "--format", "json"});
  CHECK(k.code == 0);
  CHECK(json::parse(k.out)["ok"] == true);
}

TEST_CASE("verify errors") {
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--witness", "3..2", "1"}).code == 2);
  CHECK(run({"verify", "--witness", "2..3"}).code == 2);
  CHECK(run({"verify", "--witness", "2..200", "1"}).code == 2);
  CHECK(run({"verify", "--witness", "2", "0..1"}).code == 2);
  CHECK(run({"verify", "--sn", "37", "2"}).code == 2);
  CHECK(run({"verify", "--kernel", "5", "1"}).code == 2);
  CHECK(run({"verify", "--sn", "3", "2", "--kernel", "2", "1"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  Result const help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "hdim"));
}

TEST_CASE("identical invocations give identical output") {
  std::vector<std::vector<std::string>> const cases{
      {"nf", "--mod", "5", "[[1 + t^2, t],[t, 1]]", "--format", "json"},
      {"hdim", "--group", "bzt,e2zt", "--mod", "2", "--max-i", "4", "--max-deg", "4", "--format", "json"},
      {"verify", "--witness", "2..5", "1..3", "--format", "json"},
      {"verify", "--sn", "7", "6", "--format", "json"},
  };
  for (auto const& c : cases) {
    Result const x = run(c);
    Result const y = run(c);
    CHECK(x.code == y.code);
    CHECK(x.out == y.out);
  }
}
