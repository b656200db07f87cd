#include <doctest.h>

#include <sstream>

#include "psrecon_cli/commands.hpp"
#include "support.hpp"

using namespace psrecon;
using namespace psrecon::cli;
using namespace psrecon::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Run run(const std::string& input, F&& cmd) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cmd(Streams{in, out, err});
  return {code, out.str(), err.str()};
}

Run compose_cmd(const std::string& input, Options opt = {}) {
  return run(input, [&](Streams io) { return cmd_compose("-", opt, io); });
}

std::string strings_text(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& t : v) s += t + "\n";
  return s;
}

}  // namespace

TEST_CASE("compose") {
  auto r = compose_cmd("011101\n");
  CHECK(r.code == kOk);
  CHECK(r.out ==
        "{\"n\":6,\"h\":1,\"wbar\":4,\"pairs\":[[1,0],[0,1],[1,1],[1,1],[1,2],"
        "[1,2],[1,3],[1,3],[2,3],[1,4],[2,4],[2,4]]}\n");
  CHECK(parse_pairs(r.out).size() == 12);

  r = compose_cmd("1\n1\n");
  CHECK(r.code == kOk);
  const auto m = read_compositions(r.out, {});
  CHECK(m.string_count() == 2);
  CHECK(m.pairs().size() == 4);

  r = compose_cmd("01\n011\n");
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.find("error:") == 0);

  r = compose_cmd("# comment\n\n0110\n");
  CHECK(r.code == kOk);
  CHECK(compose_cmd("01x\n").code == kInvalidInput);
  CHECK(compose_cmd("").code == kInvalidInput);
}

TEST_CASE("text composition format round trips") {
  Options text;
  text.format = Format::Text;
  const auto r = compose_cmd("0110\n1010\n", text);
  CHECK(r.out.rfind("# n=4 h=2 wbar=2\n", 0) == 0);
  const auto m = read_compositions(r.out, {});
  CHECK(m == compose({"0110", "1010"}));
  CHECK(write_compositions(m, Format::Text) == r.out);
  CHECK_THROWS_AS(parse_pairs("1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_pairs("{\"pairs\": [[1]]}"), Error);
  CHECK_THROWS_AS(parse_pairs("{\"pairs\": "), Error);
}

TEST_CASE("reconstruct") {
  const auto json = compose_cmd("011101\n").out;
  auto r = run(json, [](Streams io) { return cmd_reconstruct("-", {}, io); });
  CHECK(r.code == kOk);
  CHECK(r.out == "101110\n");

  r = run(compose_cmd("1111\n").out,
          [](Streams io) { return cmd_reconstruct("-", {}, io); });
  CHECK(r.out == "1111\n");

  const auto pair_json = compose_cmd("010101\n010101\n").out;
  r = run(pair_json, [](Streams io) { return cmd_reconstruct("-", {}, io); });
  CHECK(r.code == kOk);
  CHECK(compose(std::vector<std::string>{r.out.substr(0, 6), r.out.substr(7, 6)}) ==
        compose({"010101", "010101"}));

  r = run("{\"pairs\": [[0,1],[0,1],[1,0],[0,1]]}",
          [](Streams io) { return cmd_reconstruct("-", {}, io); });
  CHECK(r.code == kInvalidInput);

  Options expect;
  expect.expect.h = 2;
  r = run(json, [&](Streams io) { return cmd_reconstruct("-", expect, io); });
  CHECK(r.code == kInvalidInput);

  r = run("{\"n\": 5, \"pairs\": []}",
          [](Streams io) { return cmd_reconstruct("-", {}, io); });
  CHECK(r.code == kInvalidInput);
  r = run(json.substr(0, 9) + "7" + json.substr(10),
          [](Streams io) { return cmd_reconstruct("-", {}, io); });
  CHECK(r.code == kInvalidInput);
}

TEST_CASE("enumerate and oracle listings") {
  const auto json = compose_cmd("010101\n").out;
  const std::string expected = "class 1:\n010101\nclass 2:\n011001\n";
  auto r = run(json, [](Streams io) { return cmd_enumerate("-", {}, io); });
  CHECK(r.code == kOk);
  CHECK(r.out == expected);
  r = run(json, [](Streams io) { return cmd_oracle("-", {}, io); });
  CHECK(r.code == kOk);
  CHECK(r.out == expected);

  Options count;
  count.count_only = true;
  r = run(json, [&](Streams io) { return cmd_enumerate("-", count, io); });
  CHECK(r.out == "2\n");

  Options js;
  js.format = Format::Json;
  js.jobs = 2;
  r = run(json, [&](Streams io) { return cmd_enumerate("-", js, io); });
  CHECK(r.out == "{\"count\":2,\"classes\":[[\"010101\"],[\"011001\"]]}\n");

  r = run(compose_cmd("01010101010\n").out,
          [](Streams io) { return cmd_oracle("-", {}, io); });
  CHECK(r.code == kOverBudget);
}

TEST_CASE("check-unique exit codes") {
  auto r = run(compose_cmd("011101\n").out,
               [](Streams io) { return cmd_check_unique("-", {}, io); });
  CHECK(r.code == kOk);
  CHECK(r.out == "unique\n");

  r = run(compose_cmd("010101\n").out,
          [](Streams io) { return cmd_check_unique("-", {}, io); });
  CHECK(r.code == kNotUnique);
  CHECK(r.out.rfind("not unique\nrows 1 2\nintervals [1,1] [3,3] [5,5]\n", 0) == 0);

  Options js;
  js.format = Format::Json;
  r = run(compose_cmd("010101\n").out,
          [&](Streams io) { return cmd_check_unique("-", js, io); });
  CHECK(r.code == kNotUnique);
  CHECK(r.out.find("\"unique\":false") != std::string::npos);
  CHECK(r.out.find("\"intervals\":[[1,1],[3,3],[5,5]]") != std::string::npos);

  r = run("garbage", [](Streams io) { return cmd_check_unique("-", {}, io); });
  CHECK(r.code == kInvalidInput);
}

TEST_CASE("selftest") {
  auto r = selftest(1, 1);
  CHECK(r.instances == 2);
  CHECK(r.failed == 0);
  r = selftest(6, 1);
  CHECK(r.failed == 0);
  CHECK(r.passed == r.instances);
  r = selftest(8, 2);
  CHECK(r.failed == 0);
  CHECK(r.instances > 1000);

  std::istringstream in;
  std::ostringstream out, err;
  CHECK(cmd_selftest(1, 1, {}, Streams{in, out, err}) == kOk);
  CHECK(out.str().rfind("instances 2\npassed 2\nfailed 0\n", 0) == 0);
  CHECK(cmd_selftest(20, 1, {}, Streams{in, out, err}) == kOverBudget);
}

TEST_CASE("bench is reproducible per seed") {
  std::istringstream in;
  std::ostringstream out, err;
  CHECK(cmd_bench({5, 3}, {}, Streams{in, out, err}) == kOk);
  CHECK(out.str().rfind("seed 5\nn=64 h=4 median_us=", 0) == 0);
}

TEST_CASE("round trip compose -> reconstruct -> compose is byte identical") {
  Gen g(71);
  for (int trial = 0; trial < 300; ++trial) {
    const auto raw = g.instance(40, 6);
    const auto first = compose_cmd(strings_text(raw));
    REQUIRE(first.code == kOk);
    const auto rec =
        run(first.out, [](Streams io) { return cmd_reconstruct("-", {}, io); });
    REQUIRE(rec.code == kOk);
    const auto second = compose_cmd(rec.out);
    REQUIRE(second.out == first.out);
  }
}
