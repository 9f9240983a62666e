#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braid/perm.hpp"

namespace braid {

struct Letter {
  std::uint8_t index;  // generator index, 1..n-1
  std::int8_t sign;    // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word in the Artin generators of B_n. Value object; every operation on it
// is pure, so words are safe to share across threads.
struct BraidWord {
  int strands = 1;
  std::vector<Letter> letters;

  int length() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Accepts numeric syntax ("1 -2 3") and alpha syntax ("aBc", lowercase for
// generators, uppercase for inverses).
BraidWord parse_word(const std::string& text, int strands);

// Alpha form when the word fits in a..z, numeric otherwise. Round-trips
// through parse_word.
std::string render(const BraidWord& w);

struct WordStats {
  int p = 0;        // positive letters
  int n = 0;        // negative letters
  int exp = 0;      // p - n
  int length = 0;   // p + n
};
WordStats stats(const BraidWord& w);

// Entry k (0-based slot for generator k+1): +1, -1, or 0 = unconstrained.
struct SignPattern {
  std::vector<std::int8_t> entries;

  int size() const { return static_cast<int>(entries.size()); }
  // Unconstrained entries resolved to +1 (the block_profile convention).
  SignPattern resolved() const;
  // True when every determined entry of both patterns agrees.
  bool compatible_with(const SignPattern& other) const;
  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

struct ClassFlags {
  bool positive = false;
  bool negative = false;
  std::optional<SignPattern> homogeneous;  // maximal pattern, absent if mixed
  bool alternating = false;
  bool reduced = false;
  bool degenerate = false;
};
ClassFlags classify(const BraidWord& w);

struct BraidShadow {
  int strands = 1;
  std::vector<std::uint8_t> crossings;  // generator indices, signs forgotten
  bool connected = false;
};
BraidShadow shadow(const BraidWord& w);

// Top position -> bottom position, 0-based internally.
struct Permutation {
  int n = 1;
  Perm perm;

  bool is_identity() const { return perm.is_identity(); }
  // 1-based images, images[i] = where strand starting at top position i+1 ends.
  std::vector<int> images() const;
  Permutation then(const Permutation& other) const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};
Permutation permutation(const BraidWord& w);

// Cancels adjacent sigma_i sigma_i^{-1} pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

// Deletes all strands except `keep` (1-based top positions). A crossing
// survives iff both its strands are kept; surviving crossings are re-indexed
// by the relative order of kept strands at the crossing.
BraidWord subdiagram(const BraidWord& w, const std::vector<int>& keep);

struct BlockProfile {
  std::vector<std::vector<int>> blocks;  // partition of {1..n-1} into sign runs
  std::vector<int> counts;               // letters per block
};
// Pattern must be compatible with w; unconstrained entries resolve to +1.
BlockProfile block_profile(const BraidWord& w, const SignPattern& pattern);

// Convenience used across modules.
BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& w);

}  // namespace braid
