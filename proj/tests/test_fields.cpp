#include "doctest.h"

#include "tautilt/fields.hpp"

using namespace tautilt;

TEST_CASE("field spec validates the modulus") {
  CHECK(FieldSpec::prime(2).p == 2);
  CHECK(FieldSpec::prime(2147483647).describe() == "F_2147483647");
  CHECK(FieldSpec::rational().describe() == "Q");
  CHECK_THROWS_AS(FieldSpec::prime(1), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(4), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(9), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(25), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(std::uint64_t{1} << 62), UsageError);
  CHECK(FieldSpec::prime(7) == FieldSpec::prime(7));
  CHECK(FieldSpec::prime(7) != FieldSpec::prime(5));
  CHECK(FieldSpec::prime(7) != FieldSpec::rational());
}

TEST_CASE("Fp arithmetic and the literal convention") {
  FieldContext<Fp> F7(FieldSpec::prime(7));
  Fp a = F7.from_int(3), b = F7.from_int(5);
  CHECK((a + b).canonical() == 1);
  CHECK((a - b).canonical() == 5);
  CHECK((a * b).canonical() == 1);
  CHECK((a / b).canonical() == 2);  // 3 * 5^-1 = 3 * 3 = 2
  CHECK((-a).canonical() == 4);
  CHECK(F7.from_int(-1).canonical() == 6);

  // literals reduce on contact with a modulus-carrying operand
  Fp lit = Fp(10);
  CHECK(lit.is_literal());
  CHECK((lit + a).canonical() == 6);
  CHECK((lit * a).canonical() == 2);
  CHECK((a / Fp(1)) == a);
  CHECK(Fp(-3) + a == Fp(0));

  FieldContext<Fp> F5(FieldSpec::prime(5));
  CHECK_THROWS_AS(a + F5.from_int(1), std::logic_error);
  CHECK_THROWS_AS(a / F7.from_int(0), std::logic_error);
}

TEST_CASE("Fp large-modulus products stay exact") {
  const std::uint64_t p = 2147483647;
  FieldContext<Fp> F(FieldSpec::prime(p));
  Fp x = F.from_int(2147483646);  // -1
  CHECK((x * x).canonical() == 1);
  Fp y = F.from_int(1234567891);
  Fp z = F.from_int(1987654321);
  auto expect = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(1234567891) * 1987654321 % p);
  CHECK((y * z).canonical() == expect);
  CHECK((y / z) * z == y);
}

TEST_CASE("Fp coefficient parsing") {
  FieldContext<Fp> F7(FieldSpec::prime(7));
  CHECK(F7.parse("2/3").canonical() == 3);  // 2 * 3^-1 = 2 * 5 = 3
  CHECK(F7.parse("-1").canonical() == 6);
  CHECK(F7.parse("14") == F7.from_int(0));
  CHECK_THROWS_AS(F7.parse("1/0"), UsageError);
  CHECK_THROWS_AS(F7.parse("abc"), UsageError);
  CHECK_THROWS_AS(F7.parse("1.5"), UsageError);
}

TEST_CASE("Rat normalization and arithmetic") {
  Rat h = Rat::from_string("2/4");
  CHECK(h.str() == "1/2");
  CHECK(Rat::from_string("-3/6").str() == "-1/2");
  CHECK(Rat::from_string("4/2").str() == "2");
  CHECK((h + h).str() == "1");
  CHECK((h * Rat(4)).str() == "2");
  CHECK((Rat(1) / Rat(3) + Rat(1) / Rat(6)).str() == "1/2");
  CHECK(Rat(0).is_zero());
  CHECK(Rat(2) != Rat(3));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::logic_error);
  CHECK_THROWS_AS(Rat::from_string("1/0"), UsageError);
  CHECK_THROWS_AS(Rat::from_string("x"), UsageError);

  FieldContext<Rat> Q(FieldSpec::rational());
  CHECK(Q.parse("7/21").str() == "1/3");
  CHECK(Q.from_int(-2).str() == "-2");
}

TEST_CASE("field dispatch picks the matching scalar") {
  int hits = dispatch_field(FieldSpec::prime(5), [](auto ctx) {
    using S = decltype(ctx.from_int(0));
    static_assert(std::is_same_v<S, Fp> || std::is_same_v<S, Rat>);
    return std::is_same_v<S, Fp> ? 1 : 2;
  });
  CHECK(hits == 1);
  CHECK(dispatch_field(FieldSpec::rational(), [](auto ctx) {
          return FieldContext<std::decay_t<decltype(ctx.from_int(0))>>::finite ? 1 : 2;
        }) == 2);
}
