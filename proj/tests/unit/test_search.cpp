#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ldio/error.hpp"
#include "ldio/search.hpp"
#include "random_values.hpp"

namespace ldio {
namespace {

SearchConfig planted(Sign sign = Sign::Plus, long bound = 1) {
  SearchConfig c;
  c.f = LaurentPoly({{1, 1}, {0, 2}, {-1, 1}});
  c.g = LaurentPoly({{1, 1}, {0, 1}, {-1, 1}}, 'y');
  c.sign = sign;
  c.bound = bound;
  return c;
}

// Straightforward double loop used as the oracle.
std::vector<SearchHit> naive(const SearchConfig& c) {
  std::vector<SearchHit> out;
  for (long x = -c.bound; x <= c.bound; ++x) {
    for (long y = -c.bound; y <= c.bound; ++y) {
      if (x == 0 || y == 0) continue;
      const Rational fx = c.f(Rational(x)), gy = c.g(Rational(y));
      const Rational rhs = c.sign == Sign::Plus ? fx * fx + gy * gy : fx * fx - gy * gy;
      if (rhs < Rational()) continue;
      const auto z = rat_sqrt_exact(rhs);
      if (!z) continue;
      if (c.require_integer_z && !z->is_integer()) continue;
      const bool nontrivial = !(fx * gy).is_zero() && fx * fx != gy * gy;
      if (c.require_nontrivial && !nontrivial) continue;
      out.push_back(SearchHit{x, y, *z, z->is_integer(), nontrivial});
    }
  }
  return out;
}

std::vector<SearchHit> sorted(std::vector<SearchHit> hits) {
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    return std::pair(a.x, a.y) < std::pair(b.x, b.y);
  });
  return hits;
}

TEST(Search, PlantedHit) {
  const auto hits = search_integer_solutions(planted());
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].x, 1);
  EXPECT_EQ(hits[0].y, 1);
  EXPECT_EQ(hits[0].z, Rational(5));
  EXPECT_TRUE(hits[0].integral_z);
  EXPECT_TRUE(hits[0].nontrivial);
}

TEST(Search, EmptyResults) {
  SearchConfig c = planted();
  c.g = c.f = LaurentPoly({{1, 1}, {0, 1}, {-1, 1}});
  c.bound = 2;
  EXPECT_TRUE(search_integer_solutions(c).empty());
  EXPECT_TRUE(search_integer_solutions(planted(Sign::Minus)).empty());
}

TEST(Search, Errors) {
  try {
    search_integer_solutions(planted(Sign::Plus, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidParams);
  }
  try {
    search_sharded(planted(), 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadShardIndex);
  }
  EXPECT_THROW(search_sharded(planted(), 0, 0), Error);
  EXPECT_THROW(search_sharded(planted(), 2, -1), Error);
}

TEST(Search, RationalZMode) {
  SearchConfig c = planted(Sign::Plus, 3);
  c.require_integer_z = false;
  const auto hits = search_integer_solutions(c);
  EXPECT_EQ(hits, naive(c));
  EXPECT_TRUE(std::any_of(hits.begin(), hits.end(), [](const SearchHit& h) { return !h.integral_z; }));
}

TEST(SearchProperty, MatchesNaiveOracle) {
  testing::Draw draw(71);
  for (int i = 0; i < 20; ++i) {
    SearchConfig c;
    c.f = LaurentPoly({{1, 1}, {0, draw.integer(-5, 5)}, {-1, draw.nonzero(-5, 5)}});
    c.g = LaurentPoly({{static_cast<int>(draw.integer(1, 2)), 1}, {0, draw.integer(-5, 5)}, {-1, draw.integer(-5, 5)}},
                      'y');
    c.sign = draw.coin() ? Sign::Plus : Sign::Minus;
    c.bound = draw.integer(1, 20);
    c.require_integer_z = draw.coin();
    c.require_nontrivial = draw.coin();
    const auto hits = search_integer_solutions(c);
    ASSERT_EQ(sorted(hits), sorted(naive(c))) << "config " << i;
    for (const auto& h : hits) {
      const Rational fx = c.f(Rational(h.x)), gy = c.g(Rational(h.y));
      const Rational rhs = c.sign == Sign::Plus ? fx * fx + gy * gy : fx * fx - gy * gy;
      ASSERT_EQ(h.z * h.z, rhs);
      ASSERT_GE(h.z, Rational());
    }
  }
}

TEST(SearchProperty, ShardUnionEqualsFullRun) {
  testing::Draw draw(72);
  for (int trial = 0; trial < 4; ++trial) {
    SearchConfig c = planted(draw.coin() ? Sign::Plus : Sign::Minus, draw.integer(1, 12));
    c.require_integer_z = false;
    c.require_nontrivial = draw.coin();
    const auto full = sorted(search_integer_solutions(c));
    for (int shards = 1; shards <= 8; ++shards) {
      std::vector<SearchHit> merged;
      for (int idx = 0; idx < shards; ++idx) {
        const auto part = search_sharded(c, shards, idx);
        for (const auto& h : part) ASSERT_NE(std::find(full.begin(), full.end(), h), full.end());
        merged.insert(merged.end(), part.begin(), part.end());
      }
      ASSERT_EQ(sorted(merged), full) << shards << " shards";
      ASSERT_EQ(search_parallel(c, shards), full) << shards << " shards in parallel";
    }
  }
}

}  // namespace
}  // namespace ldio
