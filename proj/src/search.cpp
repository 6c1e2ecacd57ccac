#include "ldio/search.hpp"

#include <algorithm>
#include <future>

#include "ldio/error.hpp"

namespace ldio {

namespace {

void validate(const SearchConfig& config) {
  if (config.bound < 1) throw Error(Errc::InvalidParams, "search bound must be at least 1");
}

// Nonzero integers in [-bound, bound], in increasing order.
std::vector<long> box_axis(long bound) {
  std::vector<long> out;
  out.reserve(2 * bound);
  for (long v = -bound; v <= bound; ++v) {
    if (v != 0) out.push_back(v);
  }
  return out;
}

std::vector<SearchHit> scan(const SearchConfig& config, int shards, int shard_index) {
  const std::vector<long> axis = box_axis(config.bound);
  std::vector<Rational> g_sq;
  std::vector<Rational> g_val;
  g_sq.reserve(axis.size());
  for (long y : axis) {
    g_val.push_back(config.g(Rational(y)));
    g_sq.push_back(g_val.back() * g_val.back());
  }

  std::vector<SearchHit> hits;
  for (std::size_t i = static_cast<std::size_t>(shard_index); i < axis.size(); i += shards) {
    const long x = axis[i];
    const Rational fx = config.f(Rational(x));
    const Rational f_sq = fx * fx;
    for (std::size_t j = 0; j < axis.size(); ++j) {
      const Rational w = config.sign == Sign::Plus ? f_sq + g_sq[j] : f_sq - g_sq[j];
      auto z = rat_sqrt_exact(w);
      if (!z) continue;
      const bool integral = z->is_integer();
      if (config.require_integer_z && !integral) continue;
      const bool nontrivial = !(fx * g_val[j]).is_zero() && f_sq != g_sq[j];
      if (config.require_nontrivial && !nontrivial) continue;
      hits.push_back(SearchHit{x, axis[j], *z, integral, nontrivial});
    }
  }
  return hits;
}

bool by_xy(const SearchHit& lhs, const SearchHit& rhs) {
  return std::pair(lhs.x, lhs.y) < std::pair(rhs.x, rhs.y);
}

}  // namespace

std::vector<SearchHit> search_integer_solutions(const SearchConfig& config) {
  validate(config);
  return scan(config, 1, 0);
}

std::vector<SearchHit> search_sharded(const SearchConfig& config, int shards, int shard_index) {
  validate(config);
  if (shards < 1 || shard_index < 0 || shard_index >= shards) {
    throw Error(Errc::BadShardIndex, "shard index " + std::to_string(shard_index) +
                                         " is outside [0, " + std::to_string(shards) + ")");
  }
  return scan(config, shards, shard_index);
}

std::vector<SearchHit> search_parallel(const SearchConfig& config, int shards) {
  validate(config);
  if (shards < 1) throw Error(Errc::BadShardIndex, "shard count must be positive");
  std::vector<std::future<std::vector<SearchHit>>> parts;
  for (int i = 0; i < shards; ++i) {
    parts.push_back(std::async(std::launch::async, [&config, shards, i] { return scan(config, shards, i); }));
  }
  std::vector<SearchHit> merged;
  for (auto& part : parts) {
    auto hits = part.get();
    merged.insert(merged.end(), hits.begin(), hits.end());
  }
  std::sort(merged.begin(), merged.end(), by_xy);
  return merged;
}

}  // namespace ldio
