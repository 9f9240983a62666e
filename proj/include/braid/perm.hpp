#pragma once

#include <cstdint>

namespace braid {

// Permutation of {0..n-1} for n <= 16, packed four bits per slot.
// Unused high slots hold the identity, so composition does not need n.
class Perm {
 public:
  static constexpr int kMaxStrands = 16;

  constexpr Perm() = default;

  static constexpr Perm identity() { return Perm(); }

  // Swaps i and i+1 (0-based).
  static Perm transposition(int i) {
    Perm p;
    p.set(i, i + 1);
    p.set(i + 1, i);
    return p;
  }

  // i -> n-1-i on the first n slots; the permutation of the half twist.
  static Perm reversal(int n) {
    Perm p;
    for (int i = 0; i < n; ++i) p.set(i, n - 1 - i);
    return p;
  }

  constexpr int operator()(int i) const {
    return static_cast<int>((bits_ >> (4 * i)) & 0xF);
  }

  constexpr void set(int i, int v) {
    bits_ = (bits_ & ~(0xFULL << (4 * i))) |
            (static_cast<std::uint64_t>(v) << (4 * i));
  }

  // Diagram concatenation order: (a.then(b))(i) = b(a(i)).
  Perm then(const Perm& b) const {
    Perm r;
    for (int i = 0; i < kMaxStrands; ++i) r.set(i, b((*this)(i)));
    return r;
  }

  Perm inverse() const {
    Perm r;
    for (int i = 0; i < kMaxStrands; ++i) r.set((*this)(i), i);
    return r;
  }

  // reversal(n) * (*this) * reversal(n); the Garside tau on simple factors.
  Perm conj_by_reversal(int n) const {
    Perm r;
    for (int i = 0; i < n; ++i) r.set(i, n - 1 - (*this)(n - 1 - i));
    return r;
  }

  // Bitmask of i in [0, n-2] with image(i) > image(i+1). Descents of the
  // permutation are the starting set of the corresponding simple braid;
  // descents of the inverse are its finishing set.
  std::uint32_t descents(int n) const {
    std::uint32_t m = 0;
    for (int i = 0; i + 1 < n; ++i)
      if ((*this)(i) > (*this)(i + 1)) m |= 1u << i;
    return m;
  }

  // Crossing count of the simple braid with this permutation.
  int inversions(int n) const {
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((*this)(i) > (*this)(j)) ++c;
    return c;
  }

  bool is_identity() const { return bits_ == kIdentityBits; }

  std::uint64_t bits() const { return bits_; }

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  static constexpr std::uint64_t kIdentityBits = 0xFEDCBA9876543210ULL;
  std::uint64_t bits_ = kIdentityBits;
};

}  // namespace braid
