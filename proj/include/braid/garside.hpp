#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braid/word.hpp"

namespace braid {

// Left-greedy Garside normal form: Delta^k * F_1 ... F_l with simple factors
// F_j strictly between the identity and Delta, and S(F_{j+1}) contained in
// F(F_j) for every consecutive pair. Two words represent the same braid iff
// their forms are structurally equal.
struct CanonicalForm {
  std::uint8_t strands = 1;
  std::int32_t delta_power = 0;
  std::vector<Perm> factors;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  // Deterministic byte serialization: strands byte, zigzag-varint delta
  // power, factor count, then each factor as an n-byte image array. Doubles
  // as the hash key for ball tables.
  std::string key() const;

  // Crossing number of the positive-word expansion: useful as a size proxy.
  int canonical_length() const;
};

CanonicalForm deserialize_form(std::string_view bytes);

CanonicalForm canonical_form(const BraidWord& w);

// Right product by a single Artin letter, renormalized.
CanonicalForm mul(const CanonicalForm& a, Letter s);

// The fundamental element (sigma_1..sigma_{n-1})(sigma_1..sigma_{n-2})...sigma_1.
BraidWord delta(int n);

bool equal(const BraidWord& u, const BraidWord& v);

bool is_positive_braid(const BraidWord& w);

// x > y in the subword order on B_n^+: zy = x for some positive z.
bool right_divisible(const BraidWord& x, const BraidWord& y);

// Reconstructions from the normal form; must agree with the braid-core values.
int exp_of(const CanonicalForm& cf);
Permutation permutation_of(const CanonicalForm& cf);

}  // namespace braid
