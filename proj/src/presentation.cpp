#include "operad/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace operad {

GeneratorSet::GeneratorSet(std::vector<std::string> names, std::vector<std::string> aliases)
    : names_(std::move(names)), aliases_(std::move(aliases)) {
  if (names_.empty()) throw std::invalid_argument("generator set must be nonempty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("generator names must be nonempty");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
  }
  if (!aliases_.empty() && aliases_.size() != names_.size()) {
    throw std::invalid_argument("alias list must match the generator list");
  }
}

std::optional<std::size_t> GeneratorSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  for (std::size_t i = 0; i < aliases_.size(); ++i) {
    if (!aliases_[i].empty() && aliases_[i] == name) return i;
  }
  return std::nullopt;
}

Presentation::Presentation(std::string name_, GeneratorSet generators_, const std::vector<RelVector>& rels)
    : name(std::move(name_)), generators(std::move(generators_)),
      relations(span(rels, generators.quadratic_dim())) {}

Presentation::Presentation(std::string name_, GeneratorSet generators_, QSubspace rels)
    : name(std::move(name_)), generators(std::move(generators_)), relations(std::move(rels)) {
  if (relations.ambient_dim() != generators.quadratic_dim()) {
    throw dimension_error("relation space does not match 2|E|^2");
  }
}

GeneratorMap::GeneratorMap(GeneratorSet source_, GeneratorSet target_, Matrix matrix_)
    : source(std::move(source_)), target(std::move(target_)), matrix(std::move(matrix_)) {
  if (matrix.rows() != static_cast<Index>(source.size()) || matrix.cols() != static_cast<Index>(target.size())) {
    throw dimension_error("generator map matrix must be |source| x |target|");
  }
}

GeneratorMap GeneratorMap::identity(const GeneratorSet& g) {
  const auto n = static_cast<Index>(g.size());
  return GeneratorMap(g, g, Matrix::Identity(n, n));
}

SignedRelabeling SignedRelabeling::identity(std::size_t n) {
  SignedRelabeling s;
  s.permutation.resize(n);
  std::iota(s.permutation.begin(), s.permutation.end(), std::size_t{0});
  s.signs.assign(n, 1);
  return s;
}

SignedRelabeling SignedRelabeling::swap(std::size_t n, std::size_t a, std::size_t b) {
  auto s = identity(n);
  std::swap(s.permutation.at(a), s.permutation.at(b));
  return s;
}

bool SignedRelabeling::is_valid() const {
  if (permutation.size() != signs.size()) return false;
  std::vector<bool> hit(permutation.size(), false);
  for (std::size_t p : permutation) {
    if (p >= hit.size() || hit[p]) return false;
    hit[p] = true;
  }
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1 || s == -1; });
}

GeneratorMap SignedRelabeling::as_map(const GeneratorSet& source) const {
  if (!is_valid()) throw std::invalid_argument("invalid signed relabeling");
  if (permutation.size() != source.size()) throw dimension_error("relabeling size does not match generators");
  std::vector<std::string> names(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) names[permutation[i]] = source.name(i);
  const auto n = static_cast<Index>(source.size());
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < source.size(); ++i) {
    m(static_cast<Index>(i), static_cast<Index>(permutation[i])) = Rational(signs[i]);
  }
  return GeneratorMap(source, GeneratorSet(std::move(names)), std::move(m));
}

Matrix pairing_form(const GeneratorSet& g) {
  const Index half = g.quadratic_dim() / 2;
  Matrix form = Matrix::Zero(2 * half, 2 * half);
  for (Index k = 0; k < half; ++k) {
    form(k, k) = Rational(1);
    form(half + k, half + k) = Rational(-1);
  }
  return form;
}

Rational pairing(const GeneratorSet& g, const RelVector& a, const RelVector& b) {
  const Index n = g.quadratic_dim();
  if (a.size() != n || b.size() != n) throw dimension_error("pairing: vector length does not match 2|E|^2");
  Rational acc(0);
  for (Index k = 0; k < n / 2; ++k) acc += a(k) * b(k);
  for (Index k = n / 2; k < n; ++k) acc -= a(k) * b(k);
  return acc;
}

Presentation dual(const Presentation& p) {
  std::vector<std::string> names;
  for (const auto& n : p.generators.names()) names.push_back(n + "*");
  std::vector<std::string> aliases;
  for (const auto& a : p.generators.aliases()) aliases.push_back(a.empty() ? a : a + "*");
  return Presentation(p.name + "!", GeneratorSet(std::move(names), std::move(aliases)),
                      complement_under_form(p.relations, pairing_form(p.generators)));
}

RelVector square_relation(const GeneratorSet& p, const RelVector& r, const GeneratorSet& q, const RelVector& s) {
  const std::size_t np = p.size();
  const std::size_t nq = q.size();
  const std::size_t n = np * nq;
  if (r.size() != p.quadratic_dim() || s.size() != q.quadratic_dim()) {
    throw dimension_error("square_relation: relation length mismatch");
  }
  const auto pair = [nq](std::size_t i, std::size_t k) { return i * nq + k; };
  const auto np2 = static_cast<Index>(np * np);
  const auto nq2 = static_cast<Index>(nq * nq);
  const auto n2 = static_cast<Index>(n * n);
  RelVector out = RelVector::Zero(2 * n2);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      const auto pij = static_cast<Index>(i * np + j);
      const Rational& a = r(pij);
      const Rational& b = r(np2 + pij);
      if (a == 0 && b == 0) continue;
      for (std::size_t k = 0; k < nq; ++k) {
        for (std::size_t l = 0; l < nq; ++l) {
          const auto qkl = static_cast<Index>(k * nq + l);
          const auto idx = static_cast<Index>(pair(i, k) * n + pair(j, l));
          out(idx) = a * s(qkl);
          // Right-block entries store -beta; the product of two betas is
          // stored as -(beta * beta').
          out(n2 + idx) = -(b * s(nq2 + qkl));
        }
      }
    }
  }
  return out;
}

Presentation square(const Presentation& p, const Presentation& q) {
  std::vector<std::string> names;
  std::vector<std::string> aliases;
  const bool with_aliases = !p.generators.aliases().empty() || !q.generators.aliases().empty();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    for (std::size_t k = 0; k < q.generators.size(); ++k) {
      names.push_back("(" + p.generators.name(i) + "," + q.generators.name(k) + ")");
      if (with_aliases) {
        const auto pick = [](const GeneratorSet& g, std::size_t x) {
          return g.aliases().empty() || g.aliases()[x].empty() ? g.name(x) : g.aliases()[x];
        };
        aliases.push_back(pick(p.generators, i) + "_" + pick(q.generators, k));
      }
    }
  }
  GeneratorSet gens(std::move(names), std::move(aliases));
  std::vector<RelVector> rels;
  for (Index a = 0; a < p.relations.dim(); ++a) {
    const RelVector r = p.relations.basis().row(a).transpose();
    for (Index b = 0; b < q.relations.dim(); ++b) {
      const RelVector s = q.relations.basis().row(b).transpose();
      rels.push_back(square_relation(p.generators, r, q.generators, s));
    }
  }
  return Presentation(p.name + "[]" + q.name, std::move(gens), rels);
}

Presentation quotient(const Presentation& p, const std::vector<RelVector>& extra) {
  const Index n = p.generators.quadratic_dim();
  std::vector<RelVector> rows;
  for (Index r = 0; r < p.relations.dim(); ++r) rows.push_back(p.relations.basis().row(r).transpose());
  for (const auto& v : extra) {
    if (v.size() != n) throw dimension_error("quotient: relation length does not match 2|E|^2");
    rows.push_back(v);
  }
  return Presentation(p.name, p.generators, span(rows, n));
}

RelVector push_relation(const GeneratorMap& phi, const RelVector& v) {
  const auto ns = static_cast<Index>(phi.source.size());
  const auto nt = static_cast<Index>(phi.target.size());
  if (v.size() != 2 * ns * ns) throw dimension_error("push_relation: vector does not live over the source");
  RelVector out(2 * nt * nt);
  for (Index block = 0; block < 2; ++block) {
    Matrix coeffs(ns, ns);
    for (Index i = 0; i < ns; ++i) {
      for (Index j = 0; j < ns; ++j) coeffs(i, j) = v(block * ns * ns + i * ns + j);
    }
    const Matrix image = phi.matrix.transpose() * coeffs * phi.matrix;
    for (Index a = 0; a < nt; ++a) {
      for (Index b = 0; b < nt; ++b) out(block * nt * nt + a * nt + b) = image(a, b);
    }
  }
  return out;
}

bool is_morphism(const GeneratorMap& phi, const Presentation& from_ops_of, const Presentation& to_ops_of) {
  if (!(phi.source == from_ops_of.generators) || !(phi.target == to_ops_of.generators)) {
    throw std::invalid_argument("is_morphism: generator sets do not match the map");
  }
  for (Index r = 0; r < from_ops_of.relations.dim(); ++r) {
    const RelVector image = push_relation(phi, from_ops_of.relations.basis().row(r).transpose());
    if (!to_ops_of.relations.contains_vector(image)) return false;
  }
  return true;
}

GeneratorMap compose_maps(const GeneratorMap& phi, const GeneratorMap& psi) {
  if (!(phi.target == psi.source)) throw std::invalid_argument("compose_maps: target of the first map is not the source of the second");
  return GeneratorMap(phi.source, psi.target, phi.matrix * psi.matrix);
}

Presentation apply_relabeling(const SignedRelabeling& sigma, const Presentation& p) {
  if (sigma.permutation.size() != p.generators.size()) throw dimension_error("relabeling size does not match generators");
  const GeneratorMap phi = sigma.as_map(p.generators);
  std::vector<RelVector> rows;
  for (Index r = 0; r < p.relations.dim(); ++r) rows.push_back(push_relation(phi, p.relations.basis().row(r).transpose()));
  return Presentation(p.name, phi.target, span(rows, p.generators.quadratic_dim()));
}

namespace {

// Transports the basis rows along a signed permutation without building a map.
QSubspace transport(const QSubspace& rel, std::size_t n, const std::vector<std::size_t>& perm, const std::vector<int>& signs) {
  const auto nn = static_cast<Index>(n * n);
  Matrix moved(rel.dim(), 2 * nn);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto from = static_cast<Index>(i * n + j);
      const auto to = static_cast<Index>(perm[i] * n + perm[j]);
      const int sign = signs[i] * signs[j];
      for (Index r = 0; r < rel.dim(); ++r) {
        moved(r, to) = sign > 0 ? rel.basis()(r, from) : Rational(-rel.basis()(r, from));
        moved(r, nn + to) = sign > 0 ? rel.basis()(r, nn + from) : Rational(-rel.basis()(r, nn + from));
      }
    }
  }
  return QSubspace::row_space(moved);
}

}  // namespace

std::optional<SignedRelabeling> find_relabeling_iso(const Presentation& p, const Presentation& q) {
  const std::size_t n = p.generators.size();
  if (q.generators.size() != n) throw dimension_error("find_relabeling_iso: generator counts differ");
  if (p.relations.dim() != q.relations.dim()) return std::nullopt;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> signs(n);
    for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> (n - 1 - i)) & 1U ? -1 : 1;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      if (transport(p.relations, n, perm, signs) == q.relations) return SignedRelabeling{perm, signs};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

SignedRelabeling square_commutator(std::size_t p_size, std::size_t q_size) {
  SignedRelabeling s = SignedRelabeling::identity(p_size * q_size);
  for (std::size_t i = 0; i < p_size; ++i) {
    for (std::size_t k = 0; k < q_size; ++k) s.permutation[i * q_size + k] = k * p_size + i;
  }
  return s;
}

SignedRelabeling square_associator(std::size_t p_size, std::size_t q_size, std::size_t r_size) {
  return SignedRelabeling::identity(p_size * q_size * r_size);
}

SignedRelabeling square_left_unitor(std::size_t p_size) { return SignedRelabeling::identity(p_size); }

std::size_t binary_ops_dimension(const Presentation& p) { return 2 * p.generators.size(); }

Index monomial_index(const GeneratorSet& g, const Monomial& m) {
  if (m.first >= g.size() || m.second >= g.size()) throw std::out_of_range("monomial uses an unknown generator");
  return m.left ? g.left(m.first, m.second) : g.right(m.first, m.second);
}

}  // namespace operad
