#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "minrec/text_io.hpp"
#include "test_util.hpp"

using namespace minrec;

TEST_CASE("function records round-trip") {
  FiniteFunction f = testutil::boolean_quadratic();
  std::string text = format_function(f);
  CHECK(parse_function(text) == f);

  // spot-check the exact layout
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "k=2 n=3");
  std::getline(lines, line);
  CHECK(line == "labels: 0 1");
  std::getline(lines, line);
  CHECK(line == "table: 0 0 0 1 0 0 1 0");
}

TEST_CASE("multiple records can share a stream") {
  FiniteFunction f = testutil::boolean_quadratic();
  FiniteFunction g = FiniteFunction::constant(2, 2, {"x", "y"}, 1);
  std::istringstream in(format_function(f) + "\n" + format_function(g));
  auto first = read_function(in);
  auto second = read_function(in);
  auto third = read_function(in);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(!third.has_value());
  CHECK(*first == f);
  CHECK(*second == g);
}

TEST_CASE("parser rejects malformed records") {
  CHECK_THROWS_AS(parse_function("k=2 n=2\nlabels: a b\ntable: a b a\n"),
                  std::invalid_argument);  // wrong length
  CHECK_THROWS_AS(parse_function("k=2 n=1\nlabels: a b\ntable: a c\n"),
                  std::invalid_argument);  // unknown label
  CHECK_THROWS_AS(parse_function("k=2 n=1\nlabels: a a\ntable: a a\n"),
                  std::invalid_argument);  // duplicate label
  CHECK_THROWS_AS(parse_function("n=1\nlabels: a\ntable: a\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_function(""), std::invalid_argument);
}

TEST_CASE("permutation text accepts both notations") {
  CHECK(parse_permutation("(5,1,7,4,2,6,3)", 7) == testutil::perm1({5, 1, 7, 4, 2, 6, 3}));
  CHECK(parse_permutation("(1 5 2)(3 7)", 7) == testutil::perm1({5, 1, 7, 4, 2, 6, 3}));
  CHECK(parse_permutation("", 3) == Permutation::identity(3));
  CHECK_THROWS_AS(parse_permutation("(1,2)", 3), std::invalid_argument);
}
