#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braid/garside.hpp"
#include "braid/word.hpp"

namespace braid {

// Exact word-length table on the radius-L ball of B_n, keyed by canonical
// form. Immutable once built; all queries are read-only.
struct BallTable {
  int strands = 2;
  std::vector<std::vector<std::string>> layers;  // sorted keys per distance
  std::unordered_map<std::string, int> lengths;

  int radius() const { return static_cast<int>(layers.size()) - 1; }
  // -1 when the element lies outside the ball.
  int length_of(const std::string& key) const {
    auto it = lengths.find(key);
    return it == lengths.end() ? -1 : it->second;
  }
  std::vector<long long> layer_counts() const;
};

struct BallOptions {
  int threads = 1;
  std::string cache_dir;        // empty = no disk cache
  std::size_t max_elements = 0; // 0 = unlimited
};

BallTable build_ball(int n, int L, const BallOptions& opts = {});

void save_ball(const BallTable& t, const std::string& path);
BallTable load_ball(const std::string& path);

int length(const BraidWord& w, const BallTable& t);
bool is_geodesic(const BraidWord& w, const BallTable& t);

struct RSet {
  std::vector<Letter> letters;

  bool contains(Letter s) const;
};
// Letters s such that some geodesic word for [b] ends with s.
RSet r_set(const BraidWord& b, const BallTable& t);

bool is_dead_end(const BraidWord& b, const BallTable& t);

// Minimum of l(c^-1 b c) over conjugator words with |c| <= conj_bound.
// exact is set only under the stabilization rule: the last bound increment
// did not improve the value and the value is 0 or 1, or b is central.
std::pair<int, bool> min_conj_length_bounded(const BraidWord& b,
                                             const BallTable& t,
                                             int conj_bound);

// Closed-form geodesic test for B_3 via the forbidden-factor conditions.
bool b3_geodesic(const BraidWord& w);

// A geodesic word representing [w], reconstructed through ball layers.
BraidWord geodesic_witness(const BraidWord& w, const BallTable& t);

// Every geodesic word representing [w].
std::vector<BraidWord> geodesic_representatives(const BraidWord& w,
                                                const BallTable& t);

}  // namespace braid
