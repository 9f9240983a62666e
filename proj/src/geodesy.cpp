#include "braid/geodesy.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "braid/errors.hpp"
#include "braid/parallel.hpp"

namespace braid {

namespace {

std::vector<Letter> alphabet(int n) {
  std::vector<Letter> out;
  for (int i = 1; i < n; ++i) {
    out.push_back({static_cast<std::uint8_t>(i), 1});
    out.push_back({static_cast<std::uint8_t>(i), -1});
  }
  return out;
}

Letter inv(Letter s) { return {s.index, static_cast<std::int8_t>(-s.sign)}; }

std::string cache_path(const std::string& dir, int n) {
  return dir + "/ball_n" + std::to_string(n) + ".bin";
}

constexpr char kBallMagic[4] = {'B', 'R', 'B', 'L'};

void write_layer(std::ofstream& out, const std::vector<std::string>& layer) {
  std::uint64_t count = layer.size();
  out.write(reinterpret_cast<const char*>(&count), sizeof(count));
  for (const std::string& k : layer) {
    std::uint16_t len = static_cast<std::uint16_t>(k.size());
    out.write(reinterpret_cast<const char*>(&len), sizeof(len));
    out.write(k.data(), static_cast<std::streamsize>(k.size()));
  }
  out.flush();
}

}  // namespace

std::vector<long long> BallTable::layer_counts() const {
  std::vector<long long> out;
  for (const auto& layer : layers) out.push_back(static_cast<long long>(layer.size()));
  return out;
}

void save_ball(const BallTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw parse_error("cannot write ball cache " + path);
  out.write(kBallMagic, 4);
  std::uint8_t version = 1, n = static_cast<std::uint8_t>(t.strands);
  out.write(reinterpret_cast<const char*>(&version), 1);
  out.write(reinterpret_cast<const char*>(&n), 1);
  for (const auto& layer : t.layers) write_layer(out, layer);
}

BallTable load_ball(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read ball cache " + path);
  char magic[4];
  std::uint8_t version = 0, n = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), 1);
  in.read(reinterpret_cast<char*>(&n), 1);
  if (!in || std::string_view(magic, 4) != std::string_view(kBallMagic, 4) ||
      version != 1)
    throw parse_error("bad ball cache header in " + path);
  BallTable t;
  t.strands = n;
  while (true) {
    std::uint64_t count = 0;
    in.read(reinterpret_cast<char*>(&count), sizeof(count));
    if (!in) break;
    std::vector<std::string> layer;
    layer.reserve(count);
    bool complete = true;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint16_t len = 0;
      in.read(reinterpret_cast<char*>(&len), sizeof(len));
      std::string k(len, '\0');
      in.read(k.data(), len);
      if (!in) {  // truncated tail from an interrupted run: drop the layer
        complete = false;
        break;
      }
      layer.push_back(std::move(k));
    }
    if (!complete) break;
    int ell = static_cast<int>(t.layers.size());
    for (const std::string& k : layer) t.lengths.emplace(k, ell);
    t.layers.push_back(std::move(layer));
  }
  if (t.layers.empty()) throw parse_error("empty ball cache " + path);
  return t;
}

BallTable build_ball(int n, int L, const BallOptions& opts) {
  if (n < 2 || n > Perm::kMaxStrands)
    throw parse_error("build_ball needs 2 <= n <= 16");
  if (L < 0) throw parse_error("negative radius");

  BallTable t;
  t.strands = n;
  std::string path;
  if (!opts.cache_dir.empty()) {
    std::filesystem::create_directories(opts.cache_dir);
    path = cache_path(opts.cache_dir, n);
    if (std::filesystem::exists(path)) {
      BallTable cached = load_ball(path);
      if (cached.strands == n) t = std::move(cached);
    }
  }
  if (t.layers.empty()) {
    CanonicalForm e;
    e.strands = static_cast<std::uint8_t>(n);
    t.layers.push_back({e.key()});
    t.lengths.emplace(t.layers[0][0], 0);
  }

  const std::vector<Letter> sigma = alphabet(n);
  bool grew = false;
  while (t.radius() < L) {
    const std::vector<std::string>& frontier = t.layers.back();
    auto expand = [&](std::size_t b, std::size_t e) {
      std::vector<std::string> out;
      for (std::size_t idx = b; idx < e; ++idx) {
        CanonicalForm cf = deserialize_form(frontier[idx]);
        for (Letter s : sigma) {
          std::string k = mul(cf, s).key();
          if (!t.lengths.contains(k)) out.push_back(std::move(k));
        }
      }
      return out;
    };
    std::vector<std::string> next = parallel_reduce<std::vector<std::string>>(
        frontier.size(), opts.threads, expand,
        [](std::vector<std::string>& acc, std::vector<std::string>&& part) {
          acc.insert(acc.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
        });
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (opts.max_elements &&
        t.lengths.size() + next.size() > opts.max_elements)
      throw budget_exceeded("ball budget exceeded at layer " +
                            std::to_string(t.radius() + 1) + " of " +
                            std::to_string(L));
    int ell = t.radius() + 1;
    for (const std::string& k : next) t.lengths.emplace(k, ell);
    t.layers.push_back(std::move(next));
    grew = true;
  }
  if (!path.empty() && grew) save_ball(t, path);
  return t;
}

int length(const BraidWord& w, const BallTable& t) {
  if (w.strands != t.strands) throw parse_error("strand count mismatch");
  int l = t.length_of(canonical_form(w).key());
  if (l < 0)
    throw out_of_ball("element outside radius-" + std::to_string(t.radius()) +
                      " ball");
  return l;
}

bool is_geodesic(const BraidWord& w, const BallTable& t) {
  return length(w, t) == w.length();
}

bool RSet::contains(Letter s) const {
  return std::find(letters.begin(), letters.end(), s) != letters.end();
}

RSet r_set(const BraidWord& b, const BallTable& t) {
  int l = length(b, t);
  if (l + 1 > t.radius())
    throw out_of_ball("r_set needs l(b)+1 within the ball radius");
  CanonicalForm base = canonical_form(b);
  RSet r;
  for (Letter s : alphabet(t.strands))
    if (t.length_of(mul(base, inv(s)).key()) == l - 1) r.letters.push_back(s);
  return r;
}

bool is_dead_end(const BraidWord& b, const BallTable& t) {
  int l = length(b, t);
  if (l + 1 > t.radius())
    throw out_of_ball("is_dead_end needs l(b)+1 within the ball radius");
  CanonicalForm base = canonical_form(b);
  for (Letter s : alphabet(t.strands))
    if (t.length_of(mul(base, s).key()) != l - 1) return false;
  return true;
}

namespace {

bool central(const BraidWord& b) {
  for (int i = 1; i < b.strands; ++i) {
    BraidWord g{b.strands, {{static_cast<std::uint8_t>(i), 1}}};
    if (!equal(concat(b, g), concat(g, b))) return false;
  }
  return true;
}

void conjugator_scan(const BraidWord& b, const BallTable& t, int depth,
                     BraidWord& c, std::vector<int>& best_by_len) {
  int l = t.length_of(canonical_form(concat(concat(inverse(c), b), c)).key());
  if (l < 0)
    throw out_of_ball("conjugate left the ball; lower conj_bound or raise radius");
  for (int len = c.length(); len < static_cast<int>(best_by_len.size()); ++len)
    best_by_len[len] = std::min(best_by_len[len], l);
  if (depth == 0) return;
  for (int i = 1; i < b.strands; ++i)
    for (int sg : {1, -1}) {
      c.letters.push_back({static_cast<std::uint8_t>(i),
                           static_cast<std::int8_t>(sg)});
      conjugator_scan(b, t, depth - 1, c, best_by_len);
      c.letters.pop_back();
    }
}

}  // namespace

std::pair<int, bool> min_conj_length_bounded(const BraidWord& b,
                                             const BallTable& t,
                                             int conj_bound) {
  if (conj_bound < 0) throw parse_error("negative conjugator bound");
  std::vector<int> best_by_len(conj_bound + 1, length(b, t));
  BraidWord c{b.strands, {}};
  conjugator_scan(b, t, conj_bound, c, best_by_len);
  int value = best_by_len[conj_bound];
  bool stabilized =
      conj_bound >= 1 && best_by_len[conj_bound] == best_by_len[conj_bound - 1];
  bool exact = (stabilized && value <= 1) || central(b);
  return {value, exact};
}

bool b3_geodesic(const BraidWord& w) {
  if (w.strands != 3) throw parse_error("b3_geodesic needs n = 3");
  const auto& ls = w.letters;
  for (std::size_t i = 0; i + 1 < ls.size(); ++i)
    if (ls[i].index == ls[i + 1].index && ls[i].sign == -ls[i + 1].sign)
      return false;  // not freely reduced, hence not geodesic

  // Letter codes: a=0 b=1 A=2 B=3.
  auto code = [](Letter l) { return (l.index - 1) + (l.sign > 0 ? 0 : 2); };
  bool has[4] = {};
  bool ab = false, ba = false, AB = false, BA = false;
  bool aba = false, bab = false, ABA = false, BAB = false;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    int c0 = code(ls[i]);
    has[c0] = true;
    if (i + 1 < ls.size()) {
      int c1 = code(ls[i + 1]);
      if (c0 == 0 && c1 == 1) ab = true;
      if (c0 == 1 && c1 == 0) ba = true;
      if (c0 == 2 && c1 == 3) AB = true;
      if (c0 == 3 && c1 == 2) BA = true;
      if (i + 2 < ls.size()) {
        int c2 = code(ls[i + 2]);
        if (c0 == 0 && c1 == 1 && c2 == 0) aba = true;
        if (c0 == 1 && c1 == 0 && c2 == 1) bab = true;
        if (c0 == 2 && c1 == 3 && c2 == 2) ABA = true;
        if (c0 == 3 && c1 == 2 && c2 == 3) BAB = true;
      }
    }
  }
  if ((ab || ba) && (AB || BA)) return false;
  if ((aba || bab) && (has[2] || has[3])) return false;
  if ((ABA || BAB) && (has[0] || has[1])) return false;
  return true;
}

BraidWord geodesic_witness(const BraidWord& w, const BallTable& t) {
  int l = length(w, t);
  CanonicalForm cur = canonical_form(w);
  std::vector<Letter> rev;
  const std::vector<Letter> sigma = alphabet(t.strands);
  while (l > 0) {
    bool found = false;
    for (Letter s : sigma) {
      CanonicalForm prev = mul(cur, inv(s));
      if (t.length_of(prev.key()) == l - 1) {
        rev.push_back(s);
        cur = std::move(prev);
        --l;
        found = true;
        break;
      }
    }
    if (!found)
      throw invariant_violation("ball layer without a shorter neighbor");
  }
  BraidWord out{w.strands, {}};
  out.letters.assign(rev.rbegin(), rev.rend());
  return out;
}

namespace {

void collect_geodesics(const CanonicalForm& cur, int l, const BallTable& t,
                       std::vector<Letter>& suffix,
                       std::vector<BraidWord>& out, int strands) {
  if (l == 0) {
    BraidWord w{strands, {}};
    w.letters.assign(suffix.rbegin(), suffix.rend());
    out.push_back(std::move(w));
    return;
  }
  for (int i = 1; i < strands; ++i)
    for (int sg : {1, -1}) {
      Letter s{static_cast<std::uint8_t>(i), static_cast<std::int8_t>(sg)};
      CanonicalForm prev = mul(cur, inv(s));
      if (t.length_of(prev.key()) == l - 1) {
        suffix.push_back(s);
        collect_geodesics(prev, l - 1, t, suffix, out, strands);
        suffix.pop_back();
      }
    }
}

}  // namespace

std::vector<BraidWord> geodesic_representatives(const BraidWord& w,
                                                const BallTable& t) {
  int l = length(w, t);
  std::vector<BraidWord> out;
  std::vector<Letter> suffix;
  collect_geodesics(canonical_form(w), l, t, suffix, out, t.strands);
  return out;
}

}  // namespace braid
