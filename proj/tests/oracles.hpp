#pragma once

// Test-side reference implementations. Deliberately naive and written
// without calling the library algorithms they are compared against.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "veronese/monomial.hpp"

namespace oracle {

using veronese::BlockStructure;
using veronese::Exponent;
using veronese::ExponentVector;
using Vec = std::vector<Exponent>;

inline Vec entries(const ExponentVector& v) { return Vec(v.entries().begin(), v.entries().end()); }

inline std::set<Vec> entrySet(const std::vector<ExponentVector>& gens) {
  std::set<Vec> out;
  for (const auto& g : gens) out.insert(entries(g));
  return out;
}

/// "x11^2x12x21" or "x11^2*x21"; variable names are x<block><position>, 1-based
/// single digits.
inline Vec parseMonomial(const BlockStructure& b, const std::string& text) {
  Vec v(static_cast<std::size_t>(b.variableCount()), 0);
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '*' || text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != 'x' || i + 2 >= text.size()) throw std::invalid_argument("bad monomial " + text);
    const int block = text[i + 1] - '1';
    const int pos = text[i + 2] - '1';
    i += 3;
    unsigned e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) e = e * 10 + (text[i++] - '0');
    }
    v[static_cast<std::size_t>(b.index(block, pos))] += e;
  }
  return v;
}

inline std::set<Vec> parseList(const BlockStructure& b, const std::vector<std::string>& items) {
  std::set<Vec> out;
  for (const auto& s : items) out.insert(parseMonomial(b, s));
  return out;
}

/// Odometer over {0..s}^N keeping degree-t vectors that touch every block.
inline std::set<Vec> lstarByOdometer(const BlockStructure& b, int t, int s) {
  const auto n = static_cast<std::size_t>(b.variableCount());
  std::set<Vec> out;
  Vec v(n, 0);
  while (true) {
    unsigned total = 0;
    for (auto e : v) total += e;
    if (total == static_cast<unsigned>(t)) {
      bool every = true;
      for (int i = 0; i < b.blockCount(); ++i) {
        unsigned d = 0;
        for (int j = 0; j < b.blockSize(i); ++j) d += v[static_cast<std::size_t>(b.index(i, j))];
        every = every && d > 0;
      }
      if (every) out.insert(v);
    }
    std::size_t k = 0;
    while (k < n && v[k] == static_cast<Exponent>(s)) v[k++] = 0;
    if (k == n) break;
    ++v[k];
  }
  return out;
}

/// Coefficient of z^t in prod_i ((1 + z + ... + z^s)^{m_i} - 1).
inline std::uint64_t lstarCount(const BlockStructure& b, int t, int s) {
  using Poly = std::vector<std::uint64_t>;
  auto mul = [](const Poly& a, const Poly& c) {
    Poly r(a.size() + c.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) r[i + j] += a[i] * c[j];
    return r;
  };
  Poly total{1};
  for (int i = 0; i < b.blockCount(); ++i) {
    Poly f(static_cast<std::size_t>(s) + 1, 1), p{1};
    for (int j = 0; j < b.blockSize(i); ++j) p = mul(p, f);
    p[0] -= 1;
    total = mul(total, p);
  }
  return t < static_cast<int>(total.size()) ? total[static_cast<std::size_t>(t)] : 0;
}

inline bool divides(const Vec& a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline bool member(const Vec& f, const std::set<Vec>& gens) {
  for (const auto& g : gens)
    if (divides(g, f)) return true;
  return false;
}

/// Covers as bitmasks, checked minimal by single-element removal.
inline std::set<std::vector<int>> minimalCovers(const std::set<Vec>& gens, int n) {
  auto covers = [&](std::uint32_t mask) {
    for (const auto& g : gens) {
      bool hit = false;
      for (int k = 0; k < n; ++k) hit = hit || (g[static_cast<std::size_t>(k)] > 0 && (mask >> k & 1));
      if (!hit) return false;
    }
    return true;
  };
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!covers(mask)) continue;
    bool minimal = true;
    for (int k = 0; k < n && minimal; ++k)
      if ((mask >> k & 1) && covers(mask & ~(1u << k))) minimal = false;
    if (!minimal) continue;
    std::vector<int> idx;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1) idx.push_back(k);
    out.insert(idx);
  }
  return out;
}

/// P_F is associated iff, after setting the variables outside F to 1, some
/// monomial u in the F-variables lies outside the ideal while u*x_k lies
/// inside for every k in F (nonzero socle of the localization).
inline std::set<std::vector<int>> associatedByLocalization(const std::set<Vec>& gens, int n) {
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> f;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1) f.push_back(k);
    std::set<Vec> local;
    for (auto g : gens) {
      for (int k = 0; k < n; ++k)
        if (!(mask >> k & 1)) g[static_cast<std::size_t>(k)] = 0;
      local.insert(g);
    }
    Vec bound(static_cast<std::size_t>(n), 0);
    for (const auto& g : local)
      for (int k : f) bound[static_cast<std::size_t>(k)] = std::max(bound[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k)]);
    Vec u(static_cast<std::size_t>(n), 0);
    bool found = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (found) return;
      if (i == f.size()) {
        if (member(u, local)) return;
        for (int k : f) {
          ++u[static_cast<std::size_t>(k)];
          const bool in = member(u, local);
          --u[static_cast<std::size_t>(k)];
          if (!in) return;
        }
        found = true;
        return;
      }
      const auto k = static_cast<std::size_t>(f[i]);
      for (Exponent e = 0; e < bound[k]; ++e) {
        u[k] = e;
        rec(i + 1);
      }
      u[k] = 0;
    };
    rec(0);
    if (found) out.insert(f);
  }
  return out;
}

/// sort(u, v) by writing out the merged index sequence explicitly.
inline std::pair<Vec, Vec> sortByMerge(const Vec& u, const Vec& v) {
  std::vector<std::size_t> seq;
  for (std::size_t k = 0; k < u.size(); ++k)
    for (Exponent e = 0; e < u[k] + v[k]; ++e) seq.push_back(k);
  std::sort(seq.begin(), seq.end());
  Vec a(u.size(), 0), b(u.size(), 0);
  for (std::size_t p = 0; p < seq.size(); ++p) ++(p % 2 == 0 ? a : b)[seq[p]];
  return {a, b};
}

inline bool sortableByMerge(const std::set<Vec>& gens) {
  for (const auto& u : gens)
    for (const auto& v : gens) {
      const auto [a, b] = sortByMerge(u, v);
      if (!gens.count(a) || !gens.count(b)) return false;
    }
  return true;
}

/// All vertex sequences of t vertices with consecutive ones adjacent.
/// `adjacent` must already include loops.
inline std::set<Vec> walksByDfs(int n, int t, const std::function<bool(int, int)>& adjacent,
                                const std::function<bool(const Vec&)>& keep) {
  std::set<Vec> out;
  Vec counts(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int last, int placed) {
    if (placed == t) {
      if (keep(counts)) out.insert(counts);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (placed > 0 && !adjacent(last, v)) continue;
      ++counts[static_cast<std::size_t>(v)];
      rec(v, placed + 1);
      --counts[static_cast<std::size_t>(v)];
    }
  };
  rec(-1, 0);
  return out;
}

/// Keeps the elements of `gens` not strictly divisible by another element.
inline std::set<Vec> minimalOnly(const std::set<Vec>& gens) {
  std::set<Vec> out;
  for (const auto& g : gens) {
    bool minimal = true;
    for (const auto& h : gens)
      if (h != g && divides(h, g)) minimal = false;
    if (minimal) out.insert(g);
  }
  return out;
}

/// Rank over GF(p).
inline std::size_t rankModP(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * a % p);
      a = static_cast<std::int64_t>(static_cast<__int128>(a) * a % p);
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const auto iv = inv(m[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const auto f = static_cast<std::int64_t>(static_cast<__int128>(m[r][c]) * iv % p);
      for (std::size_t k = c; k < cols; ++k)
        m[r][k] = ((m[r][k] - static_cast<std::int64_t>(static_cast<__int128>(f) * m[rank][k] % p)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Numerator of the multigraded Hilbert series of T/I by inclusion-exclusion
/// over generator subsets: sum_S (-1)^|S| x^lcm(S).
inline std::map<Vec, std::int64_t> hilbertNumerator(const std::vector<Vec>& gens) {
  std::map<Vec, std::int64_t> out;
  const std::size_t p = gens.size();
  const std::size_t n = p ? gens[0].size() : 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    Vec l(n, 0);
    int bits = 0;
    for (std::size_t i = 0; i < p; ++i)
      if (mask >> i & 1) {
        ++bits;
        for (std::size_t k = 0; k < n; ++k) l[k] = std::max(l[k], gens[i][k]);
      }
    out[l] += bits % 2 ? -1 : 1;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace oracle
