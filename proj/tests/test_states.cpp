#include "doctest.h"
#include "forkalg/states.hpp"

#include <set>
#include <stdexcept>

using namespace forkalg;

static long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST_CASE("state enumeration counts") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK((long)all_states(n, k, true).size() == binom(n, k));
      CHECK((long)all_states(n, k, false).size() == binom(n + 1, k));
    }
}

TEST_CASE("weights and holes") {
  IState x(4, {0, 3});
  CHECK(x.k() == 2);
  CHECK(x.is_left());
  // v_i = number of elements >= i.
  CHECK(x.weight_v() == std::vector<int>{1, 1, 1, 0});
  // Complement of {0,3} in {0..4}.
  CHECK(x.holes() == std::vector<int>{1, 2, 4});

  IState y(4, {1, 4});
  CHECK_FALSE(y.is_left());
}

TEST_CASE("sequences and b-sequences") {
  // One up: b is all ones.
  CHECK(UpDownSeq::parse("ud").b_seq().b == std::vector<int>{1, 1});
  // b_i counts one plus the ups strictly to the right.
  CHECK(UpDownSeq::parse("du").b_seq().b == std::vector<int>{2, 1});
  CHECK(UpDownSeq::parse("duud").b_seq().b == std::vector<int>{3, 2, 1, 1});
  CHECK(UpDownSeq::parse("uddu").b_seq().b == std::vector<int>{2, 2, 2, 1});

  SUBCASE("parse round trips") {
    for (const char* s : {"", "u", "d", "uudd", "duduud"}) {
      CHECK(UpDownSeq::parse(s).str() == s);
    }
    CHECK_THROWS_AS(UpDownSeq::parse("ux"), std::invalid_argument);
  }

  SUBCASE("state correspondence round trips") {
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& s : all_seqs(n, k)) {
          IState x = s.to_state();
          CHECK(x.k() == k);
          CHECK(x.is_left());
          CHECK(UpDownSeq::from_state(x) == s);
        }
  }

  SUBCASE("b equals state weight plus one") {
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& s : all_seqs(n, k)) {
          auto b = s.b_seq().b;
          auto v = s.to_state().weight_v();
          for (int i = 0; i < n; ++i) CHECK(b[i] == v[i] + 1);
        }
  }
}

TEST_CASE("distance and the too-far condition") {
  IState a(3, {0, 1}), b(3, {1, 2}), c(3, {0, 2});
  CHECK(distance(a, a) == 0);
  CHECK(distance(a, c) == 1);
  CHECK(distance(a, b) == 2);
  CHECK(distance(a, b) == distance(b, a));
  CHECK_FALSE(too_far(a, b));

  // {0} and {2} differ by two in the single coordinate.
  CHECK(too_far(IState(3, {0}), IState(3, {2})));

  SUBCASE("hole characterization agrees with coordinates") {
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) {
        auto states = all_states(n, k, true);
        for (const auto& x : states)
          for (const auto& y : states)
            CHECK(too_far(x, y) == too_far_by_holes(x, y));
      }
  }
}

TEST_CASE("generating intervals") {
  // Worked pair on four lines: {0,3} against {1,2}.
  IState x(4, {0, 3}), y(4, {1, 2});
  auto iv = generating_intervals(x, y);
  REQUIRE(iv.size() == 2);
  CHECK(iv[0].a == 2);
  CHECK(iv[0].b == 2);
  CHECK(iv[1].a == 4);
  CHECK(iv[1].b == 4);
  CHECK(interval_monomial(iv[0], 4) == UMono::var(4, 2));

  SUBCASE("hole form agrees with the region scan") {
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) {
        auto states = all_states(n, k, true);
        for (const auto& x : states)
          for (const auto& y : states) {
            if (too_far(x, y)) {
              CHECK_THROWS_AS(generating_intervals(x, y), std::domain_error);
              continue;
            }
            auto a = generating_intervals(x, y);
            auto b2 = generating_intervals_by_holes(x, y);
            REQUIRE(a.size() == b2.size());
            CHECK((int)a.size() == n - k);
            for (size_t i = 0; i < a.size(); ++i) {
              CHECK(a[i].a == b2[i].a);
              CHECK(a[i].b == b2[i].b);
              CHECK(a[i].length() == a[i].b - a[i].a + 1);
              CHECK(a[i].a >= 1);
              CHECK(a[i].b <= n);
            }
          }
      }
  }

  SUBCASE("intervals of a diagonal pair are the hole gaps") {
    IState z(5, {1, 3});
    auto d = generating_intervals(z, z);
    // Holes 0,2,4,5 give intervals [1,2], [3,4], [5,5].
    REQUIRE(d.size() == 3);
    CHECK((d[0].a == 1 && d[0].b == 2));
    CHECK((d[1].a == 3 && d[1].b == 4));
    CHECK((d[2].a == 5 && d[2].b == 5));
  }
}

TEST_CASE("interval lengths are symmetric in the pair") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      auto states = all_states(n, k, true);
      for (const auto& x : states)
        for (const auto& y : states) {
          if (too_far(x, y)) continue;
          auto xy = generating_intervals(x, y);
          auto yx = generating_intervals(y, x);
          REQUIRE(xy.size() == yx.size());
          for (size_t i = 0; i < xy.size(); ++i) {
            CHECK(xy[i].a == yx[i].a);
            CHECK(xy[i].b == yx[i].b);
          }
        }
    }
}
