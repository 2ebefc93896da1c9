#include <doctest.h>

#include "psifloor/arith.hpp"

using namespace psifloor;

TEST_SUITE("arith") {
  TEST_CASE("sequences keep their base and trim trailing zeros") {
    IntSeq k(SeqBase::Zero, {1, 0, 0, 0, 2, 0, 0});
    CHECK(k.to_vector() == std::vector<int>{1, 0, 0, 0, 2});
    CHECK(k[0] == 1);
    CHECK(k[4] == 2);
    CHECK(k[9] == 0);
    CHECK(k.size() == 3);
    CHECK(k.weight() == 8);
    CHECK(k.end_index() == 5);

    IntSeq beta(SeqBase::One, {2, 1});
    CHECK(beta[1] == 2);
    CHECK(beta[2] == 1);
    CHECK(beta.weight() == 4);
    CHECK(beta.power_product() == 2);
    CHECK(beta.factorial_product() == 2);
    CHECK(beta[0] == 0);
    IntSeq grown(SeqBase::One);
    CHECK_THROWS_AS(grown.set(0, 1), DomainError);
  }

  TEST_CASE("zero sequence") {
    IntSeq z(SeqBase::One);
    CHECK(z.is_zero());
    CHECK(z.size() == 0);
    CHECK(z.weight() == 0);
    CHECK(z.power_product() == 1);
    CHECK(z.factorial_product() == 1);
    CHECK(IntSeq::parse("", SeqBase::One) == z);
    CHECK(IntSeq::parse("0,0", SeqBase::One) == z);
  }

  TEST_CASE("arithmetic rejects mixed bases and negative results") {
    IntSeq a(SeqBase::One, {1});
    IntSeq k(SeqBase::Zero, {1});
    CHECK_THROWS_AS(a + k, DomainError);
    CHECK_THROWS_AS(IntSeq(SeqBase::One) - a, DomainError);
    CHECK((a + a)[1] == 2);
    CHECK(IntSeq(SeqBase::One, {0, 1}).leq(IntSeq(SeqBase::One, {1, 1})));
    CHECK_FALSE(IntSeq(SeqBase::One, {2}).leq(IntSeq(SeqBase::One, {1, 1})));
  }

  TEST_CASE("parse") {
    CHECK(IntSeq::parse("1,0,0,0,2", SeqBase::Zero).to_string() == "1,0,0,0,2");
    CHECK(IntSeq::parse(" 3 , 1 ", SeqBase::One) == IntSeq(SeqBase::One, {3, 1}));
    CHECK_THROWS(IntSeq::parse("1,-2", SeqBase::One));
    CHECK_THROWS(IntSeq::parse("x", SeqBase::One));
  }

  TEST_CASE("factorials and multinomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK_THROWS_AS(factorial(-1), DomainError);

    IntSeq whole(SeqBase::One, {3, 1});
    std::vector<IntSeq> parts = {IntSeq(SeqBase::One, {1}), IntSeq(SeqBase::One, {1, 1})};
    // 3!/(1! 1! 1!) * 1!/(0! 1! 0!) = 6
    CHECK(multinomial(whole, parts) == 6);
    std::vector<IntSeq> too_big = {IntSeq(SeqBase::One, {4})};
    CHECK_THROWS_AS(multinomial(whole, too_big), DomainError);

    std::vector<long> blocks = {2, 1, 1};
    CHECK(linear_ext_multinomial(4, blocks) == 12);
    std::vector<long> bad = {2, 3};
    CHECK_THROWS_AS(linear_ext_multinomial(4, bad), DomainError);
  }

  TEST_CASE("stirling numbers") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(3, 1) == 1);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(4, 5) == 0);
    CHECK(stirling2(4, 0) == 0);
  }

  TEST_CASE("powers") {
    CHECK(int_pow(0, 0) == 1);
    CHECK(int_pow(0, 3) == 0);
    CHECK(int_pow(3, 4) == 81);
    CHECK(int_pow(-2, 3) == -8);
  }

  TEST_CASE("rational text round trip") {
    Rational r(6, 8);
    r.canonicalize();
    CHECK(to_string(r) == "3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational("3/4") == r);
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational("6/8") == r);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
  }
}
