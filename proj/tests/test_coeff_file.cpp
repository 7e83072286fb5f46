#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "gupent/coeff_file.hpp"
#include "gupent/errors.hpp"
#include "test_util.hpp"

using namespace gupent;
using maxent::AnsatzCoeffs;
using maxent::AnsatzKind;

namespace {

CoeffFile parse(const std::string& text) {
  std::istringstream in(text);
  return read_coeff_file(in);
}

}  // namespace

TEST_CASE("write then read is exact") {
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a{1.0};
    for (int j = 1; j <= 2 + trial % 6; ++j) a.push_back(testutil::uniform(-3.0, 3.0));
    const CoeffFile f{AnsatzCoeffs(AnsatzKind::minus, a), testutil::uniform(0.0, 1e-3), "0:0.5:301"};
    std::ostringstream out;
    write_coeff_file(out, f);
    const auto back = parse(out.str());
    CHECK(back.coeffs.kind() == AnsatzKind::minus);
    REQUIRE(back.coeffs.degree() == f.coeffs.degree());
    for (int j = 0; j <= f.coeffs.degree(); ++j) CHECK(back.coeffs.coeff(j) == f.coeffs.coeff(j));
    CHECK(back.residual == f.residual);
    CHECK(back.grid == f.grid);
  }
}

TEST_CASE("tsallis kind keeps q") {
  const CoeffFile f{AnsatzCoeffs(AnsatzKind::tsallis, {1.0, 0.0, -0.05}, 0.9), {}, {}};
  std::ostringstream out;
  write_coeff_file(out, f);
  CHECK(out.str().find("kind = tsallis(0.9)") != std::string::npos);
  const auto back = parse(out.str());
  CHECK(back.coeffs.kind() == AnsatzKind::tsallis);
  CHECK(back.coeffs.q() == 0.9);
  CHECK_FALSE(back.residual.has_value());
  CHECK_FALSE(back.grid.has_value());
}

TEST_CASE("comments, blank lines and spacing") {
  const auto f = parse("# fitted\n\nkind=plus\n  degree =  2\na0 = 1\na1 = 0.5\n# mid\na2=-0.25\n");
  CHECK(f.coeffs.kind() == AnsatzKind::plus);
  CHECK(f.coeffs.coeff(2) == -0.25);
}

TEST_CASE("malformed files are rejected") {
  const std::string ok = "kind = plus\ndegree = 2\na0 = 1\na1 = 0.5\na2 = 0.1\n";
  CHECK_NOTHROW(parse(ok));
  CHECK_THROWS_AS(parse(ok + "colour = red\n"), ArgumentError);
  CHECK_THROWS_AS(parse(ok + "a3 = 0.1\n"), ArgumentError);
  CHECK_THROWS_AS(parse(ok + "a1 = 0.4\n"), ArgumentError);
  CHECK_THROWS_AS(parse("kind = plus\ndegree = 2\na0 = 1\na1 = 0.5\n"), ArgumentError);
  CHECK_THROWS_AS(parse("degree = 1\na0 = 1\na1 = 0.5\n"), ArgumentError);
  CHECK_THROWS_AS(parse("kind = weird\ndegree = 1\na0 = 1\na1 = 0.5\n"), ArgumentError);
  CHECK_THROWS_AS(parse("kind = plus\ndegree = two\na0 = 1\n"), ArgumentError);
  CHECK_THROWS_AS(parse("kind = plus\ndegree = 1\na0 = 1\na1 = 0.5x\n"), ArgumentError);
  CHECK_THROWS_AS(parse("kind = plus\ndegree = 1\na0 = 0.9\na1 = 0.5\n"), ArgumentError);
  CHECK_THROWS_AS(parse("kind plus\n"), ArgumentError);
  CHECK_THROWS_AS(parse("kind = plus\ndegree = 1\na0 = 1\na1 = 0.5\nresidual =\n"), ArgumentError);
  try {
    parse(ok + "\nbogus = 1\n");
    FAIL("expected ArgumentError");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("line 7") != std::string::npos);
  }
}

TEST_CASE("files on disk") {
  const auto path = (std::filesystem::temp_directory_path() / "gupent_coeff_test.txt").string();
  const CoeffFile f{maxent::table1_minus(), 1.5e-5, "0:3:301"};
  save_coeff_file(path, f);
  const auto back = load_coeff_file(path);
  CHECK(back.coeffs.coeff(4) == 0.893692);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_coeff_file(path), ArgumentError);
}
