#pragma once

// Test-only reference computations. Nothing here calls the linear algebra or
// expansion code under test.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "operad/free_expansion.hpp"
#include "operad/rational.hpp"

namespace oracle {

using operad::Rational;
using Rows = std::vector<std::vector<Rational>>;

// Plain fraction Gaussian elimination on nested vectors.
inline std::size_t rank(Rows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::vector<Rational> to_row(const operad::Vector& v) {
  std::vector<Rational> out(static_cast<std::size_t>(v.size()));
  for (operad::Index k = 0; k < v.size(); ++k) out[static_cast<std::size_t>(k)] = v(k);
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Catalan number from the closed form binom(2k, k) / (k + 1).
inline std::uint64_t catalan(std::uint64_t k) { return binomial(2 * k, k) / (k + 1); }

// Recursive tree monomial, independent of the pre-order encoding.
struct Tree {
  int label = -1;  // -1 for a leaf
  std::vector<Tree> kids;

  int arity() const { return label < 0 ? 1 : kids[0].arity() + kids[1].arity(); }
  bool operator<(const Tree& o) const {
    if (label != o.label) return label < o.label;
    return kids < o.kids;
  }
};

inline Tree leaf() { return {}; }
inline Tree node(int label, Tree l, Tree r) { return Tree{label, {std::move(l), std::move(r)}}; }

inline std::vector<Tree> all_trees(int n, int gens) {
  if (n == 1) return {leaf()};
  std::vector<Tree> out;
  for (int k = 1; k < n; ++k) {
    for (const auto& l : all_trees(k, gens)) {
      for (const auto& r : all_trees(n - k, gens)) {
        for (int g = 0; g < gens; ++g) out.push_back(node(g, l, r));
      }
    }
  }
  return out;
}

// Replaces leaf number `pos` (left to right) of t with s.
inline Tree substitute(const Tree& t, int& pos, const Tree& s) {
  if (t.label < 0) return pos-- == 0 ? s : t;
  Tree out{t.label, {}};
  out.kids.push_back(substitute(t.kids[0], pos, s));
  out.kids.push_back(substitute(t.kids[1], pos, s));
  return out;
}

using Combination = std::map<Tree, Rational>;

// Arity-3 monomial for coordinate k of 2E(x)E (left block: (x i y) j z).
inline Tree quadratic(int gens, int k) {
  const int n2 = gens * gens;
  if (k < n2) return node(k % gens, node(k / gens, leaf(), leaf()), leaf());
  k -= n2;
  return node(k / gens, leaf(), node(k % gens, leaf(), leaf()));
}

// Calls emit(column_count, row) once for every composite C o_l r(A1, A2, A3)
// of weight n, with contexts C, leaves l, arguments A_i and relations r. The
// rows span the weight-n part of the operadic ideal.
template <class Emit>
void for_each_composite(const std::vector<operad::Vector>& relations, int gens, int n, Emit&& emit) {
  std::map<Tree, std::size_t> column;
  for (const auto& t : all_trees(n, gens)) column.emplace(t, column.size());
  for (int k = 1; k + 2 <= n; ++k) {
    const int rest = n - k + 1;  // total arity of the three arguments
    const auto contexts = all_trees(k, gens);
    for (int a1 = 1; a1 <= rest - 2; ++a1) {
      for (int a2 = 1; a1 + a2 <= rest - 1; ++a2) {
        const int a3 = rest - a1 - a2;
        for (const auto& t1 : all_trees(a1, gens)) {
          for (const auto& t2 : all_trees(a2, gens)) {
            for (const auto& t3 : all_trees(a3, gens)) {
              for (const auto& rel : relations) {
                Combination filled;
                for (operad::Index c = 0; c < rel.size(); ++c) {
                  if (rel(c) == 0) continue;
                  Tree m = quadratic(gens, static_cast<int>(c));
                  int p = 2;
                  m = substitute(m, p, t3);
                  p = 1;
                  m = substitute(m, p, t2);
                  p = 0;
                  m = substitute(m, p, t1);
                  filled[m] += rel(c);
                }
                for (const auto& ctx : contexts) {
                  for (int l = 0; l < k; ++l) {
                    std::map<std::size_t, Rational> row;
                    for (const auto& [m, x] : filled) {
                      int p = l;
                      row[column.at(substitute(ctx, p, m))] += x;
                    }
                    emit(column.size(), row);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
}

// Exact rank of the weight-n ideal, dense elimination.
inline std::size_t ideal_rank(const std::vector<operad::Vector>& relations, int gens, int n) {
  Rows rows;
  for_each_composite(relations, gens, n, [&](std::size_t cols, const std::map<std::size_t, Rational>& r) {
    std::vector<Rational> row(cols, Rational(0));
    for (const auto& [c, x] : r) row[c] = x;
    rows.push_back(std::move(row));
  });
  return rank(std::move(rows));
}

// Same rank modulo the prime 2^61 - 1 with sparse rows. It can only be lower
// than the rational rank, so agreement with an upper bound pins it down.
inline std::size_t ideal_rank_mod_p(const std::vector<operad::Vector>& relations, int gens, int n) {
  using u64 = std::uint64_t;
  constexpr u64 P = (u64{1} << 61) - 1;
  const auto mul = [](u64 a, u64 b) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % P); };
  const auto inverse = [&](u64 a) {
    u64 r = 1;
    for (u64 e = P - 2; e; e >>= 1) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
    }
    return r;
  };
  const auto reduce = [&](const Rational& q) {
    const boost::multiprecision::mpz_int num = boost::multiprecision::numerator(q);
    const boost::multiprecision::mpz_int den = boost::multiprecision::denominator(q);
    const boost::multiprecision::mpz_int pm(P);
    boost::multiprecision::mpz_int a = num % pm;
    if (a < 0) a += pm;
    return mul(a.convert_to<u64>(), inverse((den % pm).convert_to<u64>()));
  };
  std::map<std::size_t, std::map<std::size_t, u64>> pivots;
  for_each_composite(relations, gens, n, [&](std::size_t, const std::map<std::size_t, Rational>& r) {
    std::map<std::size_t, u64> row;
    for (const auto& [c, x] : r) {
      const u64 v = reduce(x);
      if (v) row[c] = v;
    }
    while (!row.empty()) {
      const auto [lead, val] = *row.begin();
      const auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const u64 inv = inverse(val);
        for (auto& e : row) e.second = mul(e.second, inv);
        pivots.emplace(lead, std::move(row));
        return;
      }
      for (const auto& [c, x] : it->second) {
        u64& y = row[c];
        y = (y + P - mul(val, x)) % P;
        if (y == 0) row.erase(c);
      }
    }
  });
  return pivots.size();
}

// Small random integer vector.
inline operad::Vector random_vector(std::mt19937& rng, operad::Index n, int spread = 2, double density = 0.5) {
  std::uniform_int_distribution<int> value(-spread, spread);
  std::bernoulli_distribution keep(density);
  operad::Vector v(n);
  for (operad::Index k = 0; k < n; ++k) v(k) = keep(rng) ? Rational(value(rng)) : Rational(0);
  return v;
}

}  // namespace oracle
