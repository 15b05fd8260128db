#include "operad/free_expansion.hpp"

#include <map>
#include <stdexcept>

namespace operad {

PlanarTree PlanarTree::node(const PlanarTree& left, const PlanarTree& right) {
  PlanarTree t;
  t.shape.reserve(1 + left.shape.size() + right.shape.size());
  t.shape.push_back(true);
  t.shape.insert(t.shape.end(), left.shape.begin(), left.shape.end());
  t.shape.insert(t.shape.end(), right.shape.begin(), right.shape.end());
  return t;
}

std::size_t PlanarTree::leaves() const {
  std::size_t n = 0;
  for (bool b : shape) n += b ? 0 : 1;
  return n;
}

TreeMonomial TreeMonomial::generator(std::uint32_t g) {
  return TreeMonomial{PlanarTree::node(PlanarTree::leaf(), PlanarTree::leaf()), {g}};
}

std::vector<PlanarTree> enumerate_trees(std::size_t n) {
  if (n == 0) throw std::domain_error("enumerate_trees: a tree has at least one leaf");
  if (n == 1) return {PlanarTree::leaf()};
  std::vector<PlanarTree> out;
  for (std::size_t left = n - 1; left >= 1; --left) {
    const auto ls = enumerate_trees(left);
    const auto rs = enumerate_trees(n - left);
    for (const auto& l : ls) {
      for (const auto& r : rs) out.push_back(PlanarTree::node(l, r));
    }
  }
  return out;
}

TreeMonomial graft(const TreeMonomial& outer, std::size_t position, const TreeMonomial& inner) {
  std::size_t leaf = 0;
  std::size_t internal_before = 0;
  for (std::size_t k = 0; k < outer.tree.shape.size(); ++k) {
    if (outer.tree.shape[k]) {
      ++internal_before;
      continue;
    }
    if (leaf++ != position) continue;
    TreeMonomial out;
    auto& s = out.tree.shape;
    s.reserve(outer.tree.shape.size() + inner.tree.shape.size() - 1);
    s.insert(s.end(), outer.tree.shape.begin(), outer.tree.shape.begin() + static_cast<std::ptrdiff_t>(k));
    s.insert(s.end(), inner.tree.shape.begin(), inner.tree.shape.end());
    s.insert(s.end(), outer.tree.shape.begin() + static_cast<std::ptrdiff_t>(k) + 1, outer.tree.shape.end());
    auto& l = out.labels;
    const auto split = outer.labels.begin() + static_cast<std::ptrdiff_t>(internal_before);
    l.insert(l.end(), outer.labels.begin(), split);
    l.insert(l.end(), inner.labels.begin(), inner.labels.end());
    l.insert(l.end(), split, outer.labels.end());
    return out;
  }
  throw std::out_of_range("graft: leaf position out of range");
}

std::uint64_t catalan(std::size_t k) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Bijection between the monomials of one arity and 0..size-1.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t generators, std::size_t n) : generators_(generators), trees_(enumerate_trees(n)) {
    for (std::size_t t = 0; t < trees_.size(); ++t) tree_index_.emplace(trees_[t], t);
    labelings_ = ipow(generators, n - 1);
  }

  std::size_t size() const { return trees_.size() * labelings_; }

  Index operator()(const TreeMonomial& m) const {
    const auto it = tree_index_.find(m.tree);
    if (it == tree_index_.end()) throw std::invalid_argument("monomial has the wrong arity");
    std::uint64_t rank = 0;
    for (auto label : m.labels) rank = rank * generators_ + label;
    return static_cast<Index>(it->second * labelings_ + rank);
  }

  TreeMonomial at(Index k) const {
    const auto pos = static_cast<std::uint64_t>(k);
    TreeMonomial m;
    m.tree = trees_[pos / labelings_];
    std::uint64_t rank = pos % labelings_;
    m.labels.resize(m.tree.internal_nodes());
    for (std::size_t i = m.labels.size(); i-- > 0;) {
      m.labels[i] = static_cast<std::uint32_t>(rank % generators_);
      rank /= generators_;
    }
    return m;
  }

 private:
  std::size_t generators_;
  std::vector<PlanarTree> trees_;
  std::map<PlanarTree, std::size_t> tree_index_;
  std::uint64_t labelings_ = 1;
};

using Builder = SpanBuilder<Rational>;
using SparseRow = Builder::SparseRow;

struct Level {
  std::size_t arity;
  MonomialIndex index;
  Builder builder;
};

Level initial_level(const Presentation& p) {
  const std::size_t e = p.generators.size();
  Level level{3, MonomialIndex(e, 3), Builder(static_cast<Index>(catalan(2) * e * e))};
  for (Index r = 0; r < p.relations.dim(); ++r) {
    SparseRow row;
    for (Index c = 0; c < p.relations.ambient_dim(); ++c) {
      const Rational& x = p.relations.basis()(r, c);
      if (x != 0) row.emplace_back(level.index(quadratic_monomial(p.generators, c)), x);
    }
    level.builder.add(row);
  }
  return level;
}

Level next_level(const Level& prev, std::size_t generators) {
  const std::size_t n = prev.arity + 1;
  MonomialIndex index(generators, n);
  Builder builder(static_cast<Index>(index.size()));
  std::vector<TreeMonomial> gens;
  for (std::size_t g = 0; g < generators; ++g) gens.push_back(TreeMonomial::generator(static_cast<std::uint32_t>(g)));

  SparseRow image;
  const auto emit = [&](const SparseRow& row, auto&& compose) {
    image.clear();
    for (const auto& [c, x] : row) image.emplace_back(index(compose(prev.index.at(c))), x);
    builder.add(image);
  };
  for (const auto& row : prev.builder.rows()) {
    for (const auto& g : gens) {
      for (std::size_t leaf = 0; leaf < prev.arity; ++leaf) {
        emit(row, [&](const TreeMonomial& m) { return graft(m, leaf, g); });
      }
      for (std::size_t slot = 0; slot < 2; ++slot) {
        emit(row, [&](const TreeMonomial& m) { return graft(g, slot, m); });
      }
    }
  }
  return Level{n, std::move(index), std::move(builder)};
}

}  // namespace

std::vector<TreeMonomial> weight_basis(std::size_t generators, std::size_t n) {
  MonomialIndex index(generators, n);
  std::vector<TreeMonomial> out;
  out.reserve(index.size());
  for (std::size_t k = 0; k < index.size(); ++k) out.push_back(index.at(static_cast<Index>(k)));
  return out;
}

namespace {

std::string render(const TreeMonomial& m, const GeneratorSet& g, std::size_t& pos, std::size_t& label, std::size_t& var,
                   bool outermost) {
  if (!m.tree.shape[pos++]) return "x" + std::to_string(++var);
  const std::string op = g.name(m.labels[label++]);
  std::string left = render(m, g, pos, label, var, false);
  std::string right = render(m, g, pos, label, var, false);
  std::string body = left + " " + op + " " + right;
  return outermost ? body : "(" + body + ")";
}

}  // namespace

std::string format_monomial(const TreeMonomial& m, const GeneratorSet& g) {
  std::size_t pos = 0, label = 0, var = 0;
  return render(m, g, pos, label, var, true);
}

TreeMonomial quadratic_monomial(const GeneratorSet& g, Index coordinate) {
  const auto n = static_cast<Index>(g.size());
  if (coordinate < 0 || coordinate >= 2 * n * n) throw std::out_of_range("quadratic_monomial: coordinate out of range");
  const bool left = coordinate < n * n;
  const Index k = left ? coordinate : coordinate - n * n;
  const auto first = static_cast<std::uint32_t>(k / n);
  const auto second = static_cast<std::uint32_t>(k % n);
  if (left) return graft(TreeMonomial::generator(second), 0, TreeMonomial::generator(first));
  return graft(TreeMonomial::generator(first), 1, TreeMonomial::generator(second));
}

std::vector<TreeMonomial> WeightComponent::surviving() const {
  std::vector<bool> pivot(basis.size(), false);
  for (Index p : ideal_pivots) pivot[static_cast<std::size_t>(p)] = true;
  std::vector<TreeMonomial> out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!pivot[k]) out.push_back(basis[k]);
  }
  return out;
}

QSubspace ideal_span(const Presentation& p, std::size_t n) {
  if (n < 3) throw std::domain_error("ideal_span: relations start in arity 3");
  Level level = initial_level(p);
  while (level.arity < n) level = next_level(level, p.generators.size());
  return level.builder.subspace();
}

WeightComponent expand(const Presentation& p, std::size_t n) {
  if (n == 0) throw std::domain_error("expand: arity must be at least 1");
  WeightComponent c;
  c.arity = n;
  c.basis = weight_basis(p.generators.size(), n);
  if (n < 3) return c;
  Level level = initial_level(p);
  while (level.arity < n) level = next_level(level, p.generators.size());
  c.ideal_dim = level.builder.rank();
  c.ideal_pivots = level.builder.pivots();
  return c;
}

std::size_t component_dim(const Presentation& p, std::size_t n) {
  if (n == 0) throw std::domain_error("component_dim: arity must be at least 1");
  if (n == 1) return 1;
  if (n == 2) return p.generators.size();
  return component_dims(p, n).back();
}

std::vector<std::size_t> component_dims(const Presentation& p, std::size_t max_n) {
  std::vector<std::size_t> dims;
  const std::size_t e = p.generators.size();
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 2); ++n) dims.push_back(n == 1 ? 1 : e);
  if (max_n < 3) return dims;
  Level level = initial_level(p);
  while (true) {
    const std::size_t free_dim = level.index.size();
    dims.push_back(free_dim - static_cast<std::size_t>(level.builder.rank()));
    if (level.arity >= max_n) break;
    level = next_level(level, e);
  }
  return dims;
}

}  // namespace operad
