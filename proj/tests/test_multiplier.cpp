#include <catch2/catch_amalgamated.hpp>

#include "jumpnum/corpus.hpp"
#include "jumpnum/multiplier.hpp"

using namespace jumpnum;

namespace {
IntVec iv(std::initializer_list<long long> xs) { return IntVec(xs.begin(), xs.end()); }

std::vector<Rat> rats(std::initializer_list<const char*> xs) {
  std::vector<Rat> out;
  for (const char* s : xs) {
    std::string t(s);
    auto slash = t.find('/');
    if (slash == std::string::npos)
      out.emplace_back(Int(t));
    else
      out.emplace_back(Int(t.substr(0, slash)), Int(t.substr(slash + 1)));
  }
  return out;
}
}  // namespace

TEST_CASE("multiplier ideals of the cusp ideal") {
  SimpleIdeal a(validate_point_basis({2, 1, 1}));
  CHECK(a.valuation() == iv({2, 3, 6}));
  CHECK(a.canonical() == iv({1, 2, 4}));

  CHECK(multiplier_ideal(a, Rat(0)).ideal.valuation == IntVec(3, 0));        // unit ideal
  CHECK(multiplier_ideal(a, Rat(4, 6)).ideal.valuation == IntVec(3, 0));     // below the lct
  CHECK(multiplier_ideal(a, Rat(5, 6)).ideal.valuation == iv({1, 1, 2}));    // drops to m at the lct
  CHECK(multiplier_ideal(a, Rat(5, 6)).ideal.factorization == iv({1, 0, 0}));
  CHECK_THROWS_AS(multiplier_ideal(a, Rat(-1, 2)), error);
}

TEST_CASE("generalized log-canonical thresholds") {
  SimpleIdeal cusp(validate_point_basis({2, 1, 1}));
  IntVec zero3(3, 0);
  CHECK(c_R_direct(cusp, zero3) == Rat(5, 6));
  CHECK(c_R_reduced(cusp, zero3) == Rat(5, 6));
  CHECK(c_R_definitional(cusp, zero3) == Rat(5, 6));

  SimpleIdeal four(validate_point_basis({3, 1, 1, 1}));
  IntVec zero4(4, 0);
  CHECK(c_R_direct(four, zero4) == Rat(7, 12));
  CHECK(c_R_reduced(four, zero4) == Rat(7, 12));
  CHECK(c_R_definitional(four, zero4) == Rat(7, 12));

  SimpleIdeal one(validate_point_basis({1}));
  CHECK(c_R_direct(one, iv({0})) == 2);
  CHECK(c_R_reduced(one, iv({0})) == 2);
  CHECK(c_R_definitional(one, iv({0})) == 2);

  CHECK_THROWS_AS(c_R_direct(cusp, iv({0, 0})), error);
}

TEST_CASE("oracle jumping numbers match the known sets") {
  CHECK(oracle_jumping_numbers(validate_point_basis({2, 1, 1}), Rat(3, 2)) ==
        rats({"5/6", "7/6", "4/3", "3/2"}));
  CHECK(oracle_jumping_numbers(validate_point_basis({1}), Rat(3)) == rats({"2", "3"}));
  CHECK(oracle_jumping_numbers(validate_point_basis({6, 3, 3, 3, 1, 1, 1, 1}), Rat(1, 2)) ==
        rats({"5/18", "25/66", "14/33", "31/66"}));
  CHECK_THROWS_AS(oracle_jumping_numbers(validate_point_basis({1}), Rat(0)), error);
}

TEST_CASE("containment is monotone along the family") {
  for (const PointBasis& b : generate_corpus(7, 20, 12, 808ull)) {
    SimpleIdeal a(b);
    CAPTURE(b.values());
    IntVec prev(b.n(), 0);
    for (int k = 1; k <= 12; ++k) {
      MultiplierIdeal mi = multiplier_ideal(a, Rat(k, 7));
      for (int i = 0; i < b.n(); ++i) CHECK(mi.ideal.valuation[i] >= prev[i]);
      prev = mi.ideal.valuation;
    }
  }
}

TEST_CASE("warm and cold oracle scans agree") {
  for (const PointBasis& b : generate_corpus(6, 14, 10, 909ull)) {
    CAPTURE(b.values());
    SimpleIdeal a(b);
    CHECK(oracle_jumping_numbers(a, Rat(2), true) == oracle_jumping_numbers(a, Rat(2), false));
  }
}

TEST_CASE("periodicity: J(a^c) = a · J(a^{c-1}) for c >= 2") {
  for (const PointBasis& b : generate_corpus(6, 12, 8, 1111ull)) {
    SimpleIdeal a(b);
    CAPTURE(b.values());
    for (const Rat& c : {Rat(2), Rat(9, 4), Rat(8, 3), Rat(3)}) {
      IntVec big = multiplier_ideal(a, c).ideal.valuation;
      IntVec small = multiplier_ideal(a, c - 1).ideal.valuation;
      for (int i = 0; i < b.n(); ++i) CHECK(big[i] == small[i] + a.valuation()[i]);
    }
  }
}

TEST_CASE("jump set equals the c_R value set") {
  Splitmix64 rng(20250102ull);
  for (const PointBasis& b : generate_corpus(6, 12, 10, 2222ull)) {
    SimpleIdeal a(b);
    CAPTURE(b.values());
    std::vector<Rat> jumps = oracle_jumping_numbers(a, Rat(2));

    // every jump is c_R for R = factorization of the previous multiplier ideal
    Rat prev = 0;
    for (const Rat& xi : jumps) {
      IntVec r = multiplier_ideal(a, prev).ideal.factorization;
      CHECK(c_R_direct(a, r) == xi);
      prev = xi;
    }

    // every c_R with small random R lands in the jump set
    for (int k = 0; k < 6; ++k) {
      IntVec r(b.n());
      for (Int& v : r) v = (long long)rng.below(3);
      Rat c = c_R_direct(a, r);
      if (c <= 2) CHECK(std::count(jumps.begin(), jumps.end(), c) == 1);
    }
  }
}

TEST_CASE("three c_R evaluators agree on random inputs") {
  Splitmix64 rng(20250103ull);
  for (const PointBasis& b : generate_corpus(8, 20, 15, 3333ull)) {
    SimpleIdeal a(b);
    CAPTURE(b.values());
    for (int k = 0; k < 5; ++k) {
      IntVec r(b.n());
      for (Int& v : r) v = (long long)rng.below(4);
      CAPTURE(r);
      Rat direct = c_R_direct(a, r);
      CHECK(direct == c_R_reduced(a, r));
      CHECK(direct == c_R_definitional(a, r));
    }
  }
}

TEST_CASE("every multiplier ideal is antinef-representable") {
  for (const PointBasis& b : generate_corpus(6, 10, 6, 4444ull)) {
    SimpleIdeal a(b);
    for (int k = 1; k <= 8; ++k) {
      CompleteIdealVector civ = multiplier_ideal(a, Rat(k, 5)).ideal;
      CHECK(is_antinef(make_divisor(a.prox(), civ.valuation)));
    }
  }
}
