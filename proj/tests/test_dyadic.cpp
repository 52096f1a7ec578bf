#include <doctest.h>

#include "latcd/dyadic.hpp"
#include "support.hpp"

using namespace latcd;

TEST_CASE("normalisation") {
  Dyadic d(4, 5);
  CHECK(d.mantissa() == 1);
  CHECK(d.exp() == 3);
  CHECK(d == Dyadic::pow2_neg(3));
  CHECK(Dyadic(0, 7) == Dyadic());
  CHECK(Dyadic(0, 7).exp() == 0);
  CHECK(Dyadic(6, 0).str() == "6/2^0");
  CHECK(error_kind([] { return Dyadic(-1, 0); }) == ErrorKind::Domain);
}

TEST_CASE("arithmetic") {
  Dyadic const half = Dyadic::parse("1/2");
  Dyadic const n8   = Dyadic::parse("19/128");
  CHECK(dyadic_mul(half, n8) == Dyadic(19, 8));
  CHECK(n8 * Dyadic::one() == n8);
  CHECK(half + half == Dyadic::one());
  CHECK(Dyadic::pow2_neg(4) + Dyadic(3, 8) == Dyadic(19, 8));
  CHECK(Dyadic::one() - half == half);
  CHECK(error_kind([&] { return half - Dyadic::one(); }) == ErrorKind::Domain);
}

TEST_CASE("ordering") {
  CHECK(Dyadic::parse("5/16") < Dyadic::parse("1/2"));
  CHECK(Dyadic::parse("3/4") > Dyadic::parse("5/8"));
  CHECK(dyadic_cmp(Dyadic(3, 2), Dyadic(6, 3)) == std::strong_ordering::equal);
  CHECK(Dyadic(1, 40) > Dyadic());
}

TEST_CASE("parsing and printing") {
  CHECK(Dyadic::parse("19/2^8") == Dyadic(19, 8));
  CHECK(Dyadic::parse("3/4") == Dyadic(3, 2));
  CHECK(Dyadic::parse("1") == Dyadic::one());
  CHECK(Dyadic::parse("12/16") == Dyadic(3, 2));
  CHECK(Dyadic(19, 7).str() == "19/2^7");
  CHECK(Dyadic::one().str() == "1/2^0");
  CHECK(Dyadic(19, 7).decimal(10) == "0.1484375");
  CHECK(Dyadic(1, 3).decimal(10) == "0.125");
  CHECK(error_kind([] { return Dyadic::parse("1/3"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { return Dyadic::parse("x"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { return Dyadic::parse("1/0"); }) == ErrorKind::Parse);
  CHECK(error_kind([] { return Dyadic::parse(""); }) == ErrorKind::Parse);
}

TEST_CASE("large exponents stay exact") {
  Dyadic a(1, 200);
  Dyadic b = a * a;
  CHECK(b.exp() == 400);
  CHECK(b.mantissa() == 1);
  CHECK(b < a);
  CHECK(a.approx() > 0);
}
