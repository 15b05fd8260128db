#pragma once

// Built-in presentations of the operads around the completed butterfly, kept
// as hand-written relation lists so that single relations can be removed or
// altered in tests.

#include <string>
#include <string_view>
#include <vector>

#include "operad/presentation.hpp"

namespace operad {

struct RelationList {
  std::string name;
  GeneratorSet generators;
  std::vector<RelVector> relations;
  std::vector<std::string> labels;  // one per relation, e.g. "(ii)" or "(4,iii)"

  Presentation presentation() const { return Presentation(name, generators, relations); }
};

// "A>B" names the functor from A-algebras to B-algebras; it is encoded by a
// map from B's generators into combinations of A's generators.
struct NamedMap {
  std::string name;
  std::string from_algebras;  // A
  std::string to_algebras;    // B
  GeneratorMap map;
};

struct Catalog {
  std::vector<RelationList> presentations;
  std::vector<NamedMap> maps;

  // As, Dend, Dias, DendSquareDias, Xplus, Xminus and the butterfly arrows
  // among them.
  static Catalog standard();

  const RelationList& relations(std::string_view name) const;
  RelationList& relations(std::string_view name);
  Presentation presentation(std::string_view name) const { return relations(name).presentation(); }
  const NamedMap& map(std::string_view name) const;
  bool has_presentation(std::string_view name) const;
};

Presentation builtin(std::string_view name);
GeneratorMap builtin_map(std::string_view name);

// Extra relations of the quotient X = Dend[]Dias / (alpha r + beta s), with
// r = (ne)se - (nw)se and s = nw(sw) - nw(se) over generators nw, ne, sw, se.
RelVector sixteenth_r(const GeneratorSet& g);
RelVector sixteenth_s(const GeneratorSet& g);
// (16+) is r = s, (16-) is r = -s.
RelVector sixteenth_relation(const GeneratorSet& g, int sign);

// Relations added to Dend[]Dias to present its dual after exchanging ne and sw:
// (ne)se - (nw)se = 0 and nw(sw) - nw(se) = 0.
std::vector<RelVector> dual_square_extra_relations(const GeneratorSet& g);

// Helpers for writing relations: lhs = rhs as (coefficient, monomial) terms
// with monomials named by generator.
struct NamedTerm {
  long coeff;
  bool left;
  std::string first;
  std::string second;
};
RelVector make_relation(const GeneratorSet& g, const std::vector<NamedTerm>& lhs, const std::vector<NamedTerm>& rhs);
inline NamedTerm L(std::string a, std::string b, long c = 1) { return {c, true, std::move(a), std::move(b)}; }
inline NamedTerm R(std::string a, std::string b, long c = 1) { return {c, false, std::move(a), std::move(b)}; }

}  // namespace operad
