#include <catch2/catch_amalgamated.hpp>

#include "jumpnum/corpus.hpp"
#include "jumpnum/jumping.hpp"

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

std::vector<std::pair<Int, Int>> pv(std::initializer_list<std::pair<long long, long long>> xs) {
  std::vector<std::pair<Int, Int>> out;
  for (auto [a, b] : xs) out.emplace_back(a, b);
  return out;
}

JumpingSetDescription desc_of(const IntVec& a) { return generators(validate_point_basis(a)); }

}  // namespace

TEST_CASE("generator pairs and caps") {
  JumpingSetDescription d8 = desc_of({6, 3, 3, 3, 1, 1, 1, 1});
  CHECK(d8.pairs == pv({{6, 9}, {3, 22}, {1, 67}}));
  CHECK(d8.caps == iv({3, 1}));

  JumpingSetDescription d1 = desc_of({1});
  CHECK(d1.pairs == pv({{1, 1}}));
  CHECK(d1.caps.empty());

  JumpingSetDescription d3 = desc_of({2, 1, 1});
  CHECK(d3.pairs == pv({{2, 3}}));
  CHECK(d3.caps.empty());

  CHECK(desc_of({4, 2, 2, 1, 1}).pairs == pv({{4, 6}, {2, 13}}));
}

TEST_CASE("pair invariants over the corpus") {
  for (const PointBasis& b : generate_corpus(8, 30, 40, 5151ull)) {
    SimpleIdeal a(b);
    JumpingSetDescription d = generators(a);
    CAPTURE(b.values());
    for (int nu = 0; nu < d.blocks(); ++nu) {
      auto& [an, bn] = d.pairs[nu];
      Int next = (nu + 1 < d.blocks()) ? d.pairs[nu + 1].first : Int(1);
      CHECK(boost::multiprecision::gcd(an, bn) == next);  // gcd(a_ν, b_ν) = a_{ν+1}
      CHECK(an <= bn);
      CHECK((an == bn) == (b.n() == 1));
      if (nu + 1 < d.blocks()) {
        CHECK(d.caps[nu] == next);
        CHECK(an % next == 0);  // divisibility chain
        CHECK(an > next);
      }
    }
  }
}

TEST_CASE("enumeration of the known sets") {
  CHECK(jump_values(enumerate_jumps(desc_of({2, 1, 1}), Rat(3, 2))) ==
        rats({"5/6", "7/6", "4/3", "3/2"}));
  CHECK(jump_values(enumerate_jumps(desc_of({3, 1, 1, 1}), Rat(1))) ==
        rats({"7/12", "5/6", "11/12"}));
  CHECK(jump_values(enumerate_jumps(desc_of({6, 3, 3, 3, 1, 1, 1, 1}), Rat(1, 2))) ==
        rats({"5/18", "25/66", "14/33", "31/66"}));
  CHECK(jump_values(enumerate_jumps(desc_of({1}), Rat(3))) == rats({"2", "3"}));
  CHECK_THROWS_AS(enumerate_jumps(desc_of({1}), Rat(-1)), error);
}

TEST_CASE("decompositions are reported for every block containing the value") {
  // 3 = (s+1)/1 + (t+1)/1 has two decompositions for the maximal ideal
  auto js = enumerate_jumps(desc_of({1}), Rat(3));
  REQUIRE(js.size() == 2);
  CHECK(js[1].value == 3);
  CHECK(js[1].decompositions.size() == 2);

  // first jump of the cusp
  auto cusp = enumerate_jumps(desc_of({2, 1, 1}), Rat(1));
  REQUIRE(!cusp.empty());
  CHECK(cusp[0].value == Rat(5, 6));
  REQUIRE(cusp[0].decompositions.size() == 1);
  CHECK(cusp[0].decompositions[0] == JumpDecomposition{0, 0, 0, 0, false});
}

TEST_CASE("membership test") {
  JumpingSetDescription cusp = desc_of({2, 1, 1});
  CHECK_FALSE(is_jumping_number(cusp, Rat(1)).has_value());
  auto dec = is_jumping_number(cusp, Rat(5, 6));
  REQUIRE(dec.has_value());
  CHECK(*dec == JumpDecomposition{0, 0, 0, 0, false});
  CHECK_FALSE(is_jumping_number(cusp, Rat(1, 2)).has_value());
  CHECK_FALSE(is_jumping_number(cusp, Rat(-1)).has_value());

  JumpingSetDescription d8 = desc_of({6, 3, 3, 3, 1, 1, 1, 1});
  for (auto& [a, b] : d8.pairs) CHECK_FALSE(is_jumping_number(d8, Rat(1, a)).has_value());
  CHECK(is_jumping_number(d8, Rat(31, 66)).has_value());

  // membership agrees with enumeration on a dense grid
  for (int num = 1; num <= 2 * 66; ++num) {
    Rat c(num, 66);
    bool member = is_jumping_number(d8, c).has_value();
    auto js = enumerate_jumps(d8, c);
    bool listed = !js.empty() && js.back().value == c;
    CHECK(member == listed);
  }
}

TEST_CASE("xi-prime, lct, multiplicity") {
  JumpingSetDescription d8 = desc_of({6, 3, 3, 3, 1, 1, 1, 1});
  CHECK(xi_prime(d8, 0) == Rat(5, 18));
  CHECK(xi_prime(d8, 1) == Rat(25, 66));
  CHECK(xi_prime(d8, 2) == Rat(68, 67));
  CHECK(lct(d8) == Rat(5, 18));
  CHECK_THROWS_AS(xi_prime(d8, 3), error);

  CHECK(lct(desc_of({1})) == 2);
  CHECK(lct(desc_of({2, 1, 1})) == Rat(5, 6));

  CHECK(hilbert_samuel(validate_point_basis({6, 3, 3, 3, 1, 1, 1, 1})) == 67);
  CHECK(hilbert_samuel(validate_point_basis({1})) == 1);
  CHECK(hilbert_samuel(validate_point_basis({2, 1, 1})) == 6);
}

TEST_CASE("zariski exponents") {
  CHECK(zariski_exponents(validate_point_basis({6, 3, 3, 3, 1, 1, 1, 1})) == iv({6, 9, 22, 67}));
  CHECK(zariski_exponents(validate_point_basis({1})) == iv({1, 1}));
  CHECK(zariski_exponents(validate_point_basis({2, 1, 1})) == iv({2, 3, 6}));
}

TEST_CASE("order from the three smallest jumps") {
  CHECK(order_from_three_smallest(Rat(5, 6), Rat(7, 6), Rat(8, 6)) == 2);
  CHECK(order_from_three_smallest(Rat(7, 12), Rat(10, 12), Rat(11, 12)) == 3);
  CHECK(order_from_three_smallest(Rat(5, 18), Rat(25, 66), Rat(28, 66)) == 6);
  CHECK(order_from_three_smallest(Rat(2), Rat(3), Rat(4)) == 1);  // smooth: ξ > 1
  CHECK_THROWS_AS(order_from_three_smallest(Rat(1, 2), Rat(1, 3), Rat(1, 4)), error);
  CHECK_THROWS_AS(order_from_three_smallest(Rat(1, 5), Rat(2, 5), Rat(3, 5)), error);
}

TEST_CASE("inversion of the special cases") {
  auto jumps_of = [](const IntVec& a) {
    return jump_values(enumerate_jumps(desc_of(a), Rat(2)));
  };
  for (const IntVec& a : {iv({2, 1, 1}), iv({2, 2, 1, 1}), iv({1}), iv({1, 1, 1}),
                          iv({6, 3, 3, 3, 1, 1, 1, 1}), iv({3, 1, 1, 1}), iv({2, 1, 1, 1, 1})}) {
    CAPTURE(a);
    CHECK(invert_jumping_numbers(jumps_of(a)).values() == a);
  }

  CHECK_THROWS_AS(invert_jumping_numbers({}), error);
  CHECK_THROWS_AS(invert_jumping_numbers(rats({"5/6", "2", "3"})), error);   // out of range
  CHECK_THROWS_AS(invert_jumping_numbers(rats({"5/6", "1", "2"})), error);   // 1 never jumps
  CHECK_THROWS_AS(invert_jumping_numbers(rats({"5/6", "7/6"})), error);      // 2 missing
  CHECK_THROWS_AS(invert_jumping_numbers(rats({"1/2", "3/4", "7/8", "2"})), error);
}

TEST_CASE("closed form matches the oracle just past the threshold") {
  for (const PointBasis& b : generate_corpus(7, 16, 15, 62626ull)) {
    CAPTURE(b.values());
    SimpleIdeal a(b);
    JumpingSetDescription d = generators(a);
    Rat bound = lct(d) + 1;
    CHECK(jump_values(enumerate_jumps(d, bound)) == oracle_jumping_numbers(a, bound));
  }
}

TEST_CASE("perturbed jump sets never invert silently wrong") {
  // a perturbed set may happen to be the complete set of some other ideal;
  // the contract is: reject, or return an ideal realizing exactly the input
  auto check_honest = [](const std::vector<Rat>& input, const PointBasis& original) {
    try {
      PointBasis r = invert_jumping_numbers(input);
      std::vector<Rat> sorted = input;
      std::sort(sorted.begin(), sorted.end());
      CHECK(jump_values(enumerate_jumps(generators(r), Rat(2))) == sorted);
      CHECK(!(r == original));
    } catch (const error& e) {
      CHECK(e.code() == errc::malformed_jump_set);
    }
  };
  Splitmix64 rng(818283ull);
  for (const PointBasis& b : generate_corpus(7, 18, 12, 919191ull)) {
    CAPTURE(b.values());
    std::vector<Rat> vals = jump_values(enumerate_jumps(generators(b), Rat(2)));
    if (vals.size() < 2) continue;

    std::vector<Rat> dropped = vals;
    dropped.erase(dropped.begin() + (std::ptrdiff_t)rng.below(dropped.size() - 1));
    check_honest(dropped, b);

    std::vector<Rat> extra = vals;
    Rat mid = (vals[0] + vals[1]) / 2;
    if (!std::count(vals.begin(), vals.end(), mid) && mid != 1) {
      extra.push_back(mid);
      check_honest(extra, b);
    }
  }
}

TEST_CASE("block structure invariants over the corpus") {
  for (const PointBasis& b : generate_corpus(8, 30, 40, 6161ull)) {
    SimpleIdeal a(b);
    JumpingSetDescription d = generators(a);
    CAPTURE(b.values());
    std::vector<Jump> js = enumerate_jumps(d, Rat(2));
    std::vector<Rat> vals = jump_values(js);

    // neither 1 nor any 1/a_{γ_ν} ever jumps
    CHECK(!std::count(vals.begin(), vals.end(), Rat(1)));
    for (auto& [an, bn] : d.pairs) CHECK(!std::count(vals.begin(), vals.end(), Rat(1, an)));

    // min jump above one is 1 + 1/I²; integers >= 2 jump
    const Int& e = a.self_intersection();
    auto above1 = std::upper_bound(vals.begin(), vals.end(), Rat(1));
    REQUIRE(above1 != vals.end());
    CHECK(*above1 == 1 + Rat(1, e));
    CHECK(min_jump_above_one(d) == 1 + Rat(1, e));
    CHECK(std::count(vals.begin(), vals.end(), Rat(2)) == 1);

    // max jump below one is 1 - 1/(I^{<=γ_g})² when satellites exist
    const GammaStructure& gs = a.structure();
    if (gs.g > 0) {
      std::vector<Rat> below;
      for (const Rat& v : vals)
        if (v < 1) below.push_back(v);
      REQUIRE(!below.empty());
      Int trunc = dot_prefix(a.prox(), a.n(), a.n(), gs.gamma.back());
      CHECK(below.back() == 1 - Rat(1, trunc));
    }

    // ξ' interleaving: 1/a_0 < ξ'_0 < 1/a_1 < ξ'_1 < ... and ξ'_ν = min{ξ >= 1/a_ν}
    for (int nu = 0; nu < d.blocks(); ++nu) {
      Rat xp = xi_prime(d, nu);
      CHECK(Rat(1, d.pairs[nu].first) < xp);
      if (nu + 1 < d.blocks()) CHECK(xp < Rat(1, d.pairs[nu + 1].first));
      auto it = std::lower_bound(vals.begin(), vals.end(), Rat(1, d.pairs[nu].first));
      REQUIRE(it != vals.end());
      CHECK(*it == xp);
      // ξ'_ν belongs to block ν only
      auto jt = std::find_if(js.begin(), js.end(), [&](const Jump& j) { return j.value == xp; });
      REQUIRE(jt != js.end());
      for (const JumpDecomposition& dec : jt->decompositions) CHECK(dec.block == nu);
    }

    // the threshold is the generalized threshold at the unit ideal
    CHECK(lct(d) == c_R_direct(a, IntVec(b.n(), 0)));

    // min{ξ ∈ H_μ : ξ >= 1/a_ν} = ξ'_μ + 1/a_ν (μ < ν) or ξ'_μ (μ >= ν)
    for (int mu = 0; mu < d.blocks(); ++mu)
      for (int nu = 0; nu < d.blocks(); ++nu) {
        Rat target(1, d.pairs[nu].first);
        std::optional<Rat> theta;
        for (const Jump& j : js)
          if (j.value >= target)
            for (const JumpDecomposition& dec : j.decompositions)
              if (dec.block == mu && !theta) theta = j.value;
        REQUIRE(theta.has_value());
        CHECK(*theta == (mu < nu ? xi_prime(d, mu) + target : xi_prime(d, mu)));
      }

    // pairs recoverable from the ξ' sequence alone
    std::vector<Rat> xs;
    for (int nu = 0; nu < d.blocks(); ++nu) xs.push_back(xi_prime(d, nu));
    CHECK(pairs_from_xi_sequence(xs) == d.pairs);

    // single-block ideals enumerate exactly like their one generator pair
    if (gs.is_monomial()) {
      REQUIRE(d.blocks() == 1);
      std::vector<Rat> direct;
      auto& [aa, bb] = d.pairs[0];
      for (Int s = 0; Rat(s + 1, aa) + Rat(1, bb) <= 2; ++s)
        for (Int t = 0; Rat(s + 1, aa) + Rat(t + 1, bb) <= 2; ++t)
          direct.push_back(Rat(s + 1, aa) + Rat(t + 1, bb));
      std::sort(direct.begin(), direct.end());
      direct.erase(std::unique(direct.begin(), direct.end()), direct.end());
      CHECK(vals == direct);
    }

    // round trip through inversion
    CHECK(invert_jumping_numbers(vals) == b);
  }
}
