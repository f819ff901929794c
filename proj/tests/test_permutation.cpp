#include "opkit/permutation.hpp"
#include "opkit/rational.hpp"

#include <stdexcept>

#include <doctest.h>

using namespace opkit;

TEST_CASE("lex ranks enumerate S_m in order") {
  for (int m = 1; m <= 6; ++m) {
    const auto all = all_permutations(m);
    REQUIRE(all.size() == factorial(m).get_ui());
    for (std::size_t r = 0; r < all.size(); ++r) {
      CHECK(all[r].rank() == r);
      CHECK(Permutation::unrank(m, r) == all[r]);
    }
  }
}

TEST_CASE("product is composition left to right") {
  const auto all = all_permutations(4);
  for (const auto& s : all)
    for (const auto& t : all) {
      const auto st = s * t;
      for (int i = 1; i <= 4; ++i) CHECK(st(i) == t(s(i)));
      CHECK(st.sign() == s.sign() * t.sign());
    }
}

TEST_CASE("inverse and sign") {
  CHECK(Permutation::transposition(5, 2, 4).sign() == -1);
  CHECK(Permutation({2, 3, 1}).sign() == 1);
  for (const auto& s : all_permutations(5)) CHECK((s * s.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_FALSE(is_permutation_of_range({0, 1}));
  CHECK(lex_rank({3, 2, 1}) == 5);
}
