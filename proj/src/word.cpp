#include "braid/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "braid/errors.hpp"

namespace braid {

namespace {

void check_strands(int strands) {
  if (strands < 1 || strands > Perm::kMaxStrands)
    throw parse_error("strand count must be in 1.." +
                      std::to_string(Perm::kMaxStrands));
}

void check_index(int index, int strands) {
  if (index < 1)
    throw parse_error("generator index must be >= 1");
  if (index > strands - 1)
    throw parse_error("strands too small for generator index " +
                      std::to_string(index));
}

}  // namespace

BraidWord parse_word(const std::string& text, int strands) {
  check_strands(strands);
  BraidWord w{strands, {}};

  bool has_alpha = false, has_numeric = false;
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) has_alpha = true;
    else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') has_numeric = true;
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw parse_error(std::string("malformed character '") + c + "' in word");
  }
  if (has_alpha && has_numeric)
    throw parse_error("word mixes alpha and numeric syntax");

  if (has_alpha) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)))
        throw parse_error("alpha words take no separators");
      int index;
      int sign;
      if (c >= 'a' && c <= 'z') {
        index = c - 'a' + 1;
        sign = 1;
      } else {
        index = c - 'A' + 1;
        sign = -1;
      }
      check_index(index, strands);
      w.letters.push_back({static_cast<std::uint8_t>(index),
                           static_cast<std::int8_t>(sign)});
    }
    return w;
  }

  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw parse_error("malformed token '" + tok + "'");
    }
    if (pos != tok.size())
      throw parse_error("malformed token '" + tok + "'");
    if (v == 0) throw parse_error("generator index 0 is invalid");
    check_index(std::abs(v), strands);
    w.letters.push_back({static_cast<std::uint8_t>(std::abs(v)),
                         static_cast<std::int8_t>(v > 0 ? 1 : -1)});
  }
  return w;
}

std::string render(const BraidWord& w) {
  if (w.strands <= 27) {
    std::string s;
    s.reserve(w.letters.size());
    for (const Letter& l : w.letters)
      s.push_back(static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.index - 1));
    return s;
  }
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(static_cast<int>(w.letters[i].index) *
                        static_cast<int>(w.letters[i].sign));
  }
  return s;
}

WordStats stats(const BraidWord& w) {
  WordStats st;
  for (const Letter& l : w.letters)
    (l.sign > 0 ? st.p : st.n)++;
  st.exp = st.p - st.n;
  st.length = st.p + st.n;
  return st;
}

SignPattern SignPattern::resolved() const {
  SignPattern r = *this;
  for (auto& e : r.entries)
    if (e == 0) e = 1;
  return r;
}

bool SignPattern::compatible_with(const SignPattern& other) const {
  if (entries.size() != other.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != 0 && other.entries[i] != 0 &&
        entries[i] != other.entries[i])
      return false;
  return true;
}

ClassFlags classify(const BraidWord& w) {
  const int cols = w.strands - 1;
  std::vector<int> pos_count(cols + 1, 0), neg_count(cols + 1, 0);
  for (const Letter& l : w.letters)
    (l.sign > 0 ? pos_count : neg_count)[l.index]++;

  ClassFlags f;
  f.positive = true;
  f.negative = true;
  f.reduced = true;
  f.degenerate = false;
  bool mixed = false;
  SignPattern pat;
  pat.entries.resize(cols, 0);
  for (int k = 1; k <= cols; ++k) {
    int p = pos_count[k], n = neg_count[k];
    if (n > 0) f.positive = false;
    if (p > 0) f.negative = false;
    if (p > 0 && n > 0) mixed = true;
    if (p + n == 0) f.degenerate = true;
    if (p + n == 1) f.reduced = false;
    pat.entries[k - 1] = static_cast<std::int8_t>(p > 0 ? 1 : (n > 0 ? -1 : 0));
  }
  if (!mixed) f.homogeneous = pat;

  // Alternation is read per strand in vertical crossing order. At a positive
  // crossing the strand entering from the right passes over (the convention
  // pinned by the ordered-tangle tests in the conway module).
  std::vector<int> pos_strand(w.strands + 1);
  std::iota(pos_strand.begin(), pos_strand.end(), 0);
  std::vector<std::int8_t> last_pass(w.strands + 1, 0);  // 0 none, +1 over, -1 under
  bool alternating = true;
  for (const Letter& l : w.letters) {
    int i = l.index;
    int left = pos_strand[i], right = pos_strand[i + 1];
    int over = l.sign > 0 ? right : left;
    int under = l.sign > 0 ? left : right;
    if (last_pass[over] == 1 || last_pass[under] == -1) alternating = false;
    last_pass[over] = 1;
    last_pass[under] = -1;
    std::swap(pos_strand[i], pos_strand[i + 1]);
  }
  f.alternating = alternating;
  return f;
}

BraidShadow shadow(const BraidWord& w) {
  BraidShadow s;
  s.strands = w.strands;
  std::vector<char> used(w.strands, 0);
  for (const Letter& l : w.letters) {
    s.crossings.push_back(l.index);
    used[l.index] = 1;
  }
  s.connected = true;
  for (int k = 1; k <= w.strands - 1; ++k)
    if (!used[k]) s.connected = false;
  return s;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = perm(i) + 1;
  return out;
}

Permutation Permutation::then(const Permutation& other) const {
  return Permutation{n, perm.then(other.perm)};
}

Permutation permutation(const BraidWord& w) {
  Perm p;
  for (const Letter& l : w.letters)
    p = p.then(Perm::transposition(l.index - 1));
  return Permutation{w.strands, p};
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  for (const Letter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().index == l.index &&
        out.letters.back().sign == -l.sign)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

BraidWord subdiagram(const BraidWord& w, const std::vector<int>& keep) {
  if (keep.empty()) throw parse_error("empty strand subset");
  std::vector<char> kept(w.strands + 1, 0);
  for (int id : keep) {
    if (id < 1 || id > w.strands)
      throw parse_error("strand id out of range");
    if (kept[id]) throw parse_error("duplicate strand id in subset");
    kept[id] = 1;
  }
  BraidWord out{static_cast<int>(keep.size()), {}};
  std::vector<int> pos_strand(w.strands + 1);
  std::iota(pos_strand.begin(), pos_strand.end(), 0);
  for (const Letter& l : w.letters) {
    int i = l.index;
    if (kept[pos_strand[i]] && kept[pos_strand[i + 1]]) {
      int r = 0;
      for (int q = 1; q <= i; ++q) r += kept[pos_strand[q]];
      out.letters.push_back({static_cast<std::uint8_t>(r), l.sign});
    }
    std::swap(pos_strand[i], pos_strand[i + 1]);
  }
  return out;
}

BlockProfile block_profile(const BraidWord& w, const SignPattern& pattern) {
  const int cols = w.strands - 1;
  if (pattern.size() != cols)
    throw parse_error("pattern size does not match strand count");
  SignPattern full = pattern.resolved();
  for (const Letter& l : w.letters)
    if (full.entries[l.index - 1] != l.sign)
      throw parse_error("word not compatible with sign pattern");

  BlockProfile bp;
  int k = 1;
  while (k <= cols) {
    std::vector<int> block{k};
    while (k + 1 <= cols && full.entries[k] == full.entries[k - 1]) {
      block.push_back(++k);
    }
    bp.blocks.push_back(std::move(block));
    ++k;
  }
  bp.counts.assign(bp.blocks.size(), 0);
  std::vector<int> block_of(cols + 1, 0);
  for (std::size_t b = 0; b < bp.blocks.size(); ++b)
    for (int idx : bp.blocks[b]) block_of[idx] = static_cast<int>(b);
  for (const Letter& l : w.letters) bp.counts[block_of[l.index]]++;
  return bp;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw parse_error("strand count mismatch");
  BraidWord out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->index, static_cast<std::int8_t>(-it->sign)});
  return out;
}

}  // namespace braid
