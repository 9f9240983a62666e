#include "braid/garside.hpp"

#include <bit>

#include "braid/errors.hpp"

namespace braid {

namespace {

void put_varint(std::string& s, std::uint64_t v) {
  while (v >= 0x80) {
    s.push_back(static_cast<char>(v | 0x80));
    v >>= 7;
  }
  s.push_back(static_cast<char>(v));
}

std::uint64_t get_varint(std::string_view bytes, std::size_t& pos) {
  std::uint64_t v = 0;
  int shift = 0;
  while (true) {
    if (pos >= bytes.size()) throw parse_error("truncated canonical form");
    std::uint8_t b = static_cast<std::uint8_t>(bytes[pos++]);
    v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
    if (!(b & 0x80)) return v;
    shift += 7;
  }
}

std::uint64_t zigzag(std::int64_t v) {
  return (static_cast<std::uint64_t>(v) << 1) ^
         static_cast<std::uint64_t>(v >> 63);
}

std::int64_t unzigzag(std::uint64_t v) {
  return static_cast<std::int64_t>(v >> 1) ^ -static_cast<std::int64_t>(v & 1);
}

// Moves head letters of b into a until S(b) is contained in F(a). Legal while
// i is in S(b) \ F(a): a*sigma_i stays simple and sigma_i^{-1}*b stays positive.
bool left_weight_pair(int n, Perm& a, Perm& b) {
  bool moved = false;
  while (true) {
    std::uint32_t todo = b.descents(n) & ~a.inverse().descents(n);
    if (!todo) return moved;
    int i = std::countr_zero(todo);
    a = a.then(Perm::transposition(i));
    b = Perm::transposition(i).then(b);
    moved = true;
  }
}

void normalize(int n, std::int32_t& delta_power, std::vector<Perm>& fs) {
  const Perm id = Perm::identity();
  const Perm dlt = Perm::reversal(n);
  std::erase(fs, id);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j + 1 < static_cast<int>(fs.size()); ++j) {
      if (left_weight_pair(n, fs[j], fs[j + 1])) changed = true;
      if (fs[j + 1] == id) {
        fs.erase(fs.begin() + j + 1);
        changed = true;
        --j;
      }
    }
  }
  // Left-weighted sequences keep their Delta factors as a prefix.
  std::size_t lead = 0;
  while (lead < fs.size() && fs[lead] == dlt) ++lead;
  delta_power += static_cast<std::int32_t>(lead);
  fs.erase(fs.begin(), fs.begin() + lead);
}

void append_letter(int n, std::int32_t& delta_power, std::vector<Perm>& fs,
                   Letter s) {
  int i = s.index - 1;
  if (s.sign > 0) {
    fs.push_back(Perm::transposition(i));
  } else {
    // sigma_i^{-1} = Delta^{-1} * (Delta sigma_i^{-1}); pushing Delta^{-1}
    // left conjugates every existing factor by the reversal.
    delta_power -= 1;
    for (Perm& f : fs) f = f.conj_by_reversal(n);
    fs.push_back(Perm::reversal(n).then(Perm::transposition(i)));
  }
}

}  // namespace

std::string CanonicalForm::key() const {
  std::string s;
  s.push_back(static_cast<char>(strands));
  put_varint(s, zigzag(delta_power));
  put_varint(s, factors.size());
  for (const Perm& f : factors)
    for (int i = 0; i < strands; ++i)
      s.push_back(static_cast<char>(f(i)));
  return s;
}

int CanonicalForm::canonical_length() const {
  int n = strands;
  int len = std::abs(delta_power) * n * (n - 1) / 2;
  for (const Perm& f : factors) len += f.inversions(n);
  return len;
}

CanonicalForm deserialize_form(std::string_view bytes) {
  std::size_t pos = 0;
  if (bytes.empty()) throw parse_error("empty canonical form");
  CanonicalForm cf;
  cf.strands = static_cast<std::uint8_t>(bytes[pos++]);
  if (cf.strands < 1 || cf.strands > Perm::kMaxStrands)
    throw parse_error("bad strand count in canonical form");
  cf.delta_power = static_cast<std::int32_t>(unzigzag(get_varint(bytes, pos)));
  std::uint64_t count = get_varint(bytes, pos);
  if (bytes.size() - pos != count * cf.strands)
    throw parse_error("truncated canonical form");
  for (std::uint64_t j = 0; j < count; ++j) {
    Perm f;
    for (int i = 0; i < cf.strands; ++i) {
      int v = static_cast<std::uint8_t>(bytes[pos++]);
      if (v >= cf.strands) throw parse_error("bad image in canonical form");
      f.set(i, v);
    }
    cf.factors.push_back(f);
  }
  return cf;
}

CanonicalForm canonical_form(const BraidWord& w) {
  CanonicalForm cf;
  cf.strands = static_cast<std::uint8_t>(w.strands);
  std::vector<Perm> fs;
  fs.reserve(w.letters.size());
  for (const Letter& s : w.letters) append_letter(w.strands, cf.delta_power, fs, s);
  normalize(w.strands, cf.delta_power, fs);
  cf.factors = std::move(fs);
  return cf;
}

CanonicalForm mul(const CanonicalForm& a, Letter s) {
  CanonicalForm cf = a;
  append_letter(cf.strands, cf.delta_power, cf.factors, s);
  normalize(cf.strands, cf.delta_power, cf.factors);
  return cf;
}

BraidWord delta(int n) {
  if (n < 2) throw parse_error("delta needs n >= 2");
  if (n > Perm::kMaxStrands) throw parse_error("strand count above limit");
  BraidWord w{n, {}};
  for (int run = n - 1; run >= 1; --run)
    for (int i = 1; i <= run; ++i)
      w.letters.push_back({static_cast<std::uint8_t>(i), 1});
  return w;
}

bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw parse_error("strand count mismatch");
  return canonical_form(u) == canonical_form(v);
}

bool is_positive_braid(const BraidWord& w) {
  return canonical_form(w).delta_power >= 0;
}

bool right_divisible(const BraidWord& x, const BraidWord& y) {
  if (x.strands != y.strands) throw parse_error("strand count mismatch");
  if (!is_positive_braid(x) || !is_positive_braid(y))
    throw parse_error("right_divisible needs positive braids");
  return canonical_form(concat(x, inverse(y))).delta_power >= 0;
}

int exp_of(const CanonicalForm& cf) {
  int n = cf.strands;
  int e = cf.delta_power * n * (n - 1) / 2;
  for (const Perm& f : cf.factors) e += f.inversions(n);
  return e;
}

Permutation permutation_of(const CanonicalForm& cf) {
  Perm p = (cf.delta_power % 2) ? Perm::reversal(cf.strands) : Perm::identity();
  for (const Perm& f : cf.factors) p = p.then(f);
  return Permutation{cf.strands, p};
}

}  // namespace braid
