#include "doctest.h"
#include "mtavg/height.hpp"

using mtavg::Height;

TEST_SUITE_BEGIN("height");

TEST_CASE("parses rationals, integers and decimals exactly") {
  CHECK(Height::parse("3/2") == Height(3, 2));
  CHECK(Height::parse("-4") == Height(-4));
  CHECK(Height::parse("+7") == Height(7));
  CHECK(Height::parse("0.25") == Height(1, 4));
  CHECK(Height::parse("-.5") == Height(-1, 2));
  CHECK(Height::parse("6/4") == Height(3, 2));
  CHECK(Height::parse("010") == Height(10));
  CHECK(Height::parse("12345678901234567890/3").str() == "4115226300411522630");
}

TEST_CASE("rejects anything that is not an exact number") {
  for (const char* bad : {"", "-", "1/0", "1e3", "0x10", "1.", "a", "1/2/3", "1 / 2", "--1", "nan", "1.5/2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Height::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("canonical text form") {
  CHECK(Height(6, 4).str() == "3/2");
  CHECK(Height(-6, 3).str() == "-2");
  CHECK(Height(0).str() == "0");
  CHECK(Height::parse(Height(-7, 9).str()) == Height(-7, 9));
}

TEST_CASE("arithmetic and ordering") {
  const Height a(3, 4);
  const Height b(1, 4);
  CHECK(a + b == Height(1));
  CHECK(a - b == Height(1, 2));
  CHECK(-a == Height(-3, 4));
  CHECK(a * b == Height(3, 16));
  CHECK(a / b == Height(3));
  CHECK(Height(3).half() == Height(3, 2));
  CHECK(Height(-3, 2).abs() == Height(3, 2));
  CHECK(b < a);
  CHECK(Height(2).is_integer());
  CHECK_FALSE(a.is_integer());
  CHECK_THROWS_AS(a / Height(0), std::domain_error);
}

TEST_SUITE_END();
