#include "braid/conway.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "braid/errors.hpp"
#include "braid/parallel.hpp"

namespace braid {

namespace {

constexpr std::int8_t kLeft = 1;
constexpr std::int8_t kRight = 2;

struct StateScan {
  const BraidWord& w;
  const Ordering& ord;
  std::vector<int> col_by_rank;  // traversal order: columns by top label

  explicit StateScan(const OrderedDiagram& d) : w(d.word), ord(d.ordering) {
    col_by_rank.resize(w.strands);
    std::vector<int> cols(w.strands);
    std::iota(cols.begin(), cols.end(), 0);
    std::sort(cols.begin(), cols.end(),
              [&](int a, int b) { return ord.top[a] < ord.top[b]; });
    col_by_rank = cols;
  }

  // Cheap rejection: composes the permutation of unsmoothed crossings and
  // checks the label pairing.
  bool coherent(std::uint64_t mask) const {
    std::array<int, Perm::kMaxStrands> topcol{};
    std::iota(topcol.begin(), topcol.end(), 0);  // topcol[column] = top column here
    for (std::size_t t = 0; t < w.letters.size(); ++t) {
      if ((mask >> t) & 1) continue;
      int i = w.letters[t].index - 1;
      std::swap(topcol[i], topcol[i + 1]);
    }
    for (int q = 0; q < w.strands; ++q)
      if (ord.bottom[q] != ord.top[topcol[q]] + 1) return false;
    return true;
  }

  // Full traversal; assumes coherent. Returns the descending flag and the
  // state sign.
  bool descending(std::uint64_t mask, int* sign) const {
    const std::size_t L = w.letters.size();
    std::array<std::int8_t, 64> first{};
    for (int r = 0; r < w.strands; ++r) {
      int p = col_by_rank[r];
      for (std::size_t t = 0; t < L; ++t) {
        int i = w.letters[t].index - 1;
        if (p != i && p != i + 1) continue;
        if ((mask >> t) & 1) {
          if (!first[t]) first[t] = (p == i) ? kLeft : kRight;
        } else {
          p = (p == i) ? i + 1 : i;
        }
      }
    }
    int sgn = 1;
    for (std::size_t t = 0; t < L; ++t) {
      if (!((mask >> t) & 1)) continue;
      std::int8_t over = w.letters[t].sign > 0 ? kRight : kLeft;
      if (first[t] != over) return false;
      sgn *= w.letters[t].sign;
    }
    *sign = sgn;
    return true;
  }

  void accumulate(std::uint64_t mask, std::vector<BigInt>& coef) const {
    if (!coherent(mask)) return;
    int sgn = 0;
    if (descending(mask, &sgn))
      coef[static_cast<std::size_t>(std::popcount(mask))] += sgn;
  }
};

std::uint64_t next_same_popcount(std::uint64_t v) {
  std::uint64_t c = v & -v;
  std::uint64_t r = v + c;
  return r | (((v ^ r) >> 2) / c);
}

void trim(std::vector<BigInt>& coef) {
  while (!coef.empty() && coef.back() == 0) coef.pop_back();
}

}  // namespace

bool Ordering::valid() const {
  if (strands < 1 || static_cast<int>(top.size()) != strands ||
      static_cast<int>(bottom.size()) != strands)
    return false;
  std::vector<char> seen(2 * strands + 1, 0);
  for (int v : top) {
    if (v < 1 || v > 2 * strands || v % 2 == 0 || seen[v]) return false;
    seen[v] = 1;
  }
  for (int v : bottom) {
    if (v < 1 || v > 2 * strands || v % 2 == 1 || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Ordering standard_ordering(int n) {
  if (n < 1 || n > Perm::kMaxStrands)
    throw parse_error("standard_ordering needs 1 <= n <= 16");
  Ordering o;
  o.strands = n;
  o.top.resize(n);
  o.bottom.resize(n);
  for (int j = 0; j < n; ++j) {
    o.top[j] = 2 * (n - 1 - j) + 1;
    o.bottom[j] = 2 * (n - 1 - j) + 2;
  }
  return o;
}

std::string ConwayPolynomial::text() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (m) out << " + ";
    out << coeffs[m];
    if (m == 1) out << "*z";
    if (m > 1) out << "*z^" << m;
  }
  return out.str();
}

ConwayPolynomial conway(const OrderedDiagram& d, int budget, int threads) {
  if (d.ordering.strands != d.word.strands || !d.ordering.valid())
    throw parse_error("ordering does not fit the diagram");
  const int L = d.word.length();
  if (L > budget)
    throw budget_exceeded("state enumeration budget " + std::to_string(budget) +
                          " exceeded by " + std::to_string(L) + " crossings");
  StateScan scan(d);
  std::vector<BigInt> coef(L + 1, BigInt(0));

  if (threads > 1 && L >= 12) {
    std::uint64_t total = 1ULL << L;
    coef = parallel_reduce<std::vector<BigInt>>(
        total, threads,
        [&](std::uint64_t b, std::uint64_t e) {
          std::vector<BigInt> local(L + 1, BigInt(0));
          for (std::uint64_t mask = b; mask < e; ++mask)
            scan.accumulate(mask, local);
          return local;
        },
        [&](std::vector<BigInt>& acc, std::vector<BigInt>&& part) {
          for (int m = 0; m <= L; ++m) acc[m] += part[m];
        });
  } else {
    // Subsets by increasing size, bitmask order within each size.
    for (int m = 0; m <= L; ++m) {
      std::uint64_t mask = (m == 0) ? 0 : (1ULL << m) - 1;
      std::uint64_t end = 1ULL << L;
      while (mask < end) {
        scan.accumulate(mask, coef);
        if (m == 0) break;
        mask = next_same_popcount(mask);
      }
    }
  }
  trim(coef);
  return ConwayPolynomial{std::move(coef)};
}

bool is_homogeneous_ordering(const OrderedDiagram& d) {
  if (d.ordering.strands != d.word.strands || !d.ordering.valid())
    throw parse_error("ordering does not fit the diagram");
  StateScan scan(d);
  std::uint64_t full =
      d.word.length() == 64 ? ~0ULL : (1ULL << d.word.length()) - 1;
  if (!scan.coherent(full)) return false;
  int sgn = 0;
  return scan.descending(full, &sgn);
}

std::optional<Ordering> find_homogeneous_ordering(const BraidWord& w) {
  const int n = w.strands;
  ClassFlags flags = classify(w);
  if (!flags.homogeneous) return std::nullopt;
  const SignPattern& pat = *flags.homogeneous;

  // Descending forces, per used column k (0-based), rank(k+1) < rank(k) for
  // positive columns and rank(k) < rank(k+1) for negative ones. The chain
  // poset always admits a linear extension; Kahn with smallest-column ties
  // keeps the result deterministic.
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (int k = 0; k + 1 < n; ++k) {
    if (pat.entries[k] == 0) continue;
    int before = pat.entries[k] > 0 ? k + 1 : k;
    int after = pat.entries[k] > 0 ? k : k + 1;
    succ[before].push_back(after);
    indeg[after]++;
  }
  std::vector<int> rank(n, 0);
  std::vector<char> ready(n, 0);
  for (int r = 1; r <= n; ++r) {
    int pick = -1;
    for (int c = 0; c < n; ++c)
      if (!ready[c] && indeg[c] == 0) {
        pick = c;
        break;
      }
    if (pick < 0) throw invariant_violation("cycle in ordering constraints");
    ready[pick] = 1;
    rank[pick] = r;
    for (int nx : succ[pick]) indeg[nx]--;
  }
  Ordering o;
  o.strands = n;
  o.top.resize(n);
  o.bottom.resize(n);
  for (int j = 0; j < n; ++j) {
    o.top[j] = 2 * rank[j] - 1;
    o.bottom[j] = 2 * rank[j];
  }
  return o;
}

CertifyResult certify_minimal_homogeneous(const BraidWord& w) {
  ClassFlags flags = classify(w);
  if (!flags.homogeneous) {
    std::string mixed;
    std::vector<int> pos(w.strands, 0), neg(w.strands, 0);
    for (const Letter& l : w.letters) (l.sign > 0 ? pos : neg)[l.index - 1]++;
    for (int k = 0; k + 1 < w.strands; ++k)
      if (pos[k] && neg[k]) mixed += (mixed.empty() ? "" : ",") + std::to_string(k + 1);
    return CertifyResult{std::nullopt,
                         "not homogeneous: columns {" + mixed +
                             "} carry both crossing signs"};
  }
  auto ord = find_homogeneous_ordering(w);
  if (!ord)
    throw invariant_violation("homogeneous word without homogeneous ordering");
  OrderedDiagram d{w, *ord};
  bool top_coeff = is_homogeneous_ordering(d);
  if (!top_coeff)
    throw invariant_violation("constructed ordering fails the full-state check");
  return CertifyResult{
      HomogeneityCertificate{*ord, *flags.homogeneous, top_coeff}, ""};
}

bool homogeneous_geodesic_converse(const BraidWord& w, const BallTable& t) {
  std::vector<BraidWord> reps = geodesic_representatives(w, t);
  bool any_homogeneous = false;
  SignPattern merged;
  merged.entries.assign(w.strands - 1, 0);
  for (const BraidWord& rep : reps) {
    ClassFlags f = classify(rep);
    if (!f.homogeneous) return false;  // theorem violation or bad precondition
    any_homogeneous = true;
    if (!merged.compatible_with(*f.homogeneous)) return false;
    for (int k = 0; k + 1 < w.strands; ++k)
      if (f.homogeneous->entries[k] != 0)
        merged.entries[k] = f.homogeneous->entries[k];
  }
  if (!any_homogeneous)
    throw parse_error("braid has no homogeneous representative");
  bool geo = is_geodesic(w, t);
  bool hom = classify(w).homogeneous.has_value();
  return geo == hom;
}

}  // namespace braid
