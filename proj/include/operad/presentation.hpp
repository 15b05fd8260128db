#pragma once

// Binary quadratic regular operads given by generators and relations.
//
// The space of quadratic monomials has two blocks of |E|^2 coordinates each:
//   left(i, j)  = (x o_i y) o_j z   at index          i*|E| + j
//   right(i, j) = x o_i (y o_j z)   at index |E|^2 + i*|E| + j
// A relation  sum a_ij (o_i) o_j = sum b_ij o_i (o_j)  is stored as the vector
// with a_ij on the left block and -b_ij on the right block.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "operad/rational.hpp"

namespace operad {

class GeneratorSet {
 public:
  GeneratorSet() = default;
  // Names must be nonempty and pairwise distinct. Aliases, when given, are
  // alternative spellings accepted by lookup (one per name, may be empty).
  explicit GeneratorSet(std::vector<std::string> names, std::vector<std::string> aliases = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& aliases() const { return aliases_; }
  std::optional<std::size_t> find(std::string_view name) const;

  // Quadratic-space dimension 2|E|^2.
  Index quadratic_dim() const { return 2 * static_cast<Index>(size() * size()); }
  Index left(std::size_t inner, std::size_t outer) const {
    return static_cast<Index>(inner * size() + outer);
  }
  Index right(std::size_t outer, std::size_t inner) const {
    return static_cast<Index>(size() * size() + outer * size() + inner);
  }

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::string> aliases_;
};

using RelVector = Vector;

struct Presentation {
  std::string name;
  GeneratorSet generators;
  QSubspace relations;

  Presentation() = default;
  Presentation(std::string name, GeneratorSet generators, const std::vector<RelVector>& relations);
  Presentation(std::string name, GeneratorSet generators, QSubspace relations);

  std::size_t arity_count() const { return generators.size(); }
};

// Linear map sending each source generator to a combination of target ones.
struct GeneratorMap {
  GeneratorSet source;
  GeneratorSet target;
  Matrix matrix;  // |source| x |target|

  GeneratorMap() = default;
  GeneratorMap(GeneratorSet source, GeneratorSet target, Matrix matrix);
  static GeneratorMap identity(const GeneratorSet& g);
};

// Generator i is sent to signs[i] * generator permutation[i].
struct SignedRelabeling {
  std::vector<std::size_t> permutation;
  std::vector<int> signs;

  static SignedRelabeling identity(std::size_t n);
  static SignedRelabeling swap(std::size_t n, std::size_t a, std::size_t b);
  bool is_valid() const;
  GeneratorMap as_map(const GeneratorSet& source) const;
  friend bool operator==(const SignedRelabeling&, const SignedRelabeling&) = default;
};

// diag(+1 on the left block, -1 on the right block).
Matrix pairing_form(const GeneratorSet& g);
Rational pairing(const GeneratorSet& g, const RelVector& a, const RelVector& b);

// Koszul dual: same generators suffixed "*", orthogonal relations.
Presentation dual(const Presentation& p);

// Generators (o_i, *_k) ordered lexicographically by (i, k).
Presentation square(const Presentation& p, const Presentation& q);
// Coefficient-wise product of one relation of each factor.
RelVector square_relation(const GeneratorSet& p, const RelVector& r, const GeneratorSet& q, const RelVector& s);

Presentation quotient(const Presentation& p, const std::vector<RelVector>& extra);

RelVector push_relation(const GeneratorMap& phi, const RelVector& v);

// Every algebra over to_ops_of becomes an algebra over from_ops_of via phi.
bool is_morphism(const GeneratorMap& phi, const Presentation& from_ops_of, const Presentation& to_ops_of);

// phi then psi: the matrix product phi.matrix * psi.matrix.
GeneratorMap compose_maps(const GeneratorMap& phi, const GeneratorMap& psi);

Presentation apply_relabeling(const SignedRelabeling& sigma, const Presentation& p);

// Exhaustive search over the n! * 2^n signed relabelings, all-positive signs
// first and permutations in lexicographic order within each sign pattern.
std::optional<SignedRelabeling> find_relabeling_iso(const Presentation& p, const Presentation& q);

// Reindexing witnesses for the square product.
// (i, k) of P[]Q  ->  (k, i) of Q[]P.
SignedRelabeling square_commutator(std::size_t p_size, std::size_t q_size);
// ((i, k), l) of (P[]Q)[]R  ->  (i, (k, l)) of P[](Q[]R); both flatten to the
// same lexicographic order, so this is the identity on indices.
SignedRelabeling square_associator(std::size_t p_size, std::size_t q_size, std::size_t r_size);
// (unit, g) of As[]P  ->  g.
SignedRelabeling square_left_unitor(std::size_t p_size);

// Binary operations of a regular operad: two variable orders per generator.
std::size_t binary_ops_dimension(const Presentation& p);

// Builds a relation vector from (coefficient, monomial) terms.
struct Monomial {
  bool left;  // (x a y) b z when true, x a (y b z) otherwise
  std::size_t first;
  std::size_t second;
};
Index monomial_index(const GeneratorSet& g, const Monomial& m);

}  // namespace operad
