#pragma once

#include <vector>

#include "ldio/constructions.hpp"

namespace ldio {

struct SearchConfig {
  LaurentPoly f;
  LaurentPoly g;
  Sign sign = Sign::Plus;
  /// x and y range over the nonzero integers in [-bound, bound].
  long bound = 1;
  bool require_integer_z = true;
  bool require_nontrivial = true;
};

/// (x, y, z) with z >= 0; (x, y, -z) solves the equation too.
struct SearchHit {
  long x = 0;
  long y = 0;
  Rational z;
  bool integral_z = false;
  bool nontrivial = false;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

/// Every hit in the box, sorted by (x, y). Throws Errc::InvalidParams for bound < 1.
std::vector<SearchHit> search_integer_solutions(const SearchConfig& config);

/// The hits whose x lies in residue class shard_index mod shards (x taken
/// in order from -bound upward). Throws Errc::BadShardIndex unless
/// 0 <= shard_index < shards.
std::vector<SearchHit> search_sharded(const SearchConfig& config, int shards, int shard_index);

/// Runs all shards on worker threads and merges them in (x, y) order.
std::vector<SearchHit> search_parallel(const SearchConfig& config, int shards);

}  // namespace ldio
