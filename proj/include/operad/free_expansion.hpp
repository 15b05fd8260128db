#pragma once

// Weight-graded components of a binary quadratic regular operad, computed as
// the free nonsymmetric operad on the generators modulo the operadic ideal of
// the relations.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "operad/presentation.hpp"

namespace operad {

// Planar binary tree in pre-order: true marks an internal node, false a leaf.
struct PlanarTree {
  std::vector<bool> shape;

  static PlanarTree leaf() { return PlanarTree{{false}}; }
  static PlanarTree node(const PlanarTree& left, const PlanarTree& right);

  std::size_t leaves() const;
  std::size_t internal_nodes() const { return shape.size() - leaves(); }

  friend auto operator<=>(const PlanarTree&, const PlanarTree&) = default;
};

// A tree with one generator index per internal node, labels in pre-order.
struct TreeMonomial {
  PlanarTree tree;
  std::vector<std::uint32_t> labels;

  static TreeMonomial identity() { return TreeMonomial{PlanarTree::leaf(), {}}; }
  static TreeMonomial generator(std::uint32_t g);

  std::size_t arity() const { return tree.leaves(); }

  friend auto operator<=>(const TreeMonomial&, const TreeMonomial&) = default;
};

// Catalan-many trees with n leaves. Order: left-subtree leaf count descending,
// then recursively on the left subtree, then on the right subtree.
std::vector<PlanarTree> enumerate_trees(std::size_t n);

// Substitutes inner at leaf `position` (0-based, left to right) of outer.
TreeMonomial graft(const TreeMonomial& outer, std::size_t position, const TreeMonomial& inner);

// All tree monomials of arity n over `generators` generators: trees in
// enumerate_trees order, then labels in lexicographic order.
std::vector<TreeMonomial> weight_basis(std::size_t generators, std::size_t n);

std::uint64_t catalan(std::size_t k);

// Infix rendering with variables x1..xn, e.g. "(x1 a x2) b x3".
std::string format_monomial(const TreeMonomial& m, const GeneratorSet& g);

// The arity-3 monomial corresponding to a coordinate of 2E(x)E.
TreeMonomial quadratic_monomial(const GeneratorSet& g, Index coordinate);

struct WeightComponent {
  std::size_t arity = 0;
  std::vector<TreeMonomial> basis;
  Index ideal_dim = 0;
  // Basis positions that are pivots of the ideal; the rest index a basis of
  // the component.
  std::vector<Index> ideal_pivots;

  std::size_t dimension() const { return basis.size() - static_cast<std::size_t>(ideal_dim); }
  std::vector<TreeMonomial> surviving() const;
};

// The weight-n part of the ideal, generated from R at n = 3 by one-step
// composites with a single generator.
QSubspace ideal_span(const Presentation& p, std::size_t n);

// Same computation without materialising the dense RREF basis.
WeightComponent expand(const Presentation& p, std::size_t n);

std::size_t component_dim(const Presentation& p, std::size_t n);

// component_dim for arities 1..max_n, sharing the ideal between weights.
std::vector<std::size_t> component_dims(const Presentation& p, std::size_t max_n);

}  // namespace operad
