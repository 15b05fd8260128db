#include "operad/catalog.hpp"

#include <stdexcept>

namespace operad {

RelVector make_relation(const GeneratorSet& g, const std::vector<NamedTerm>& lhs, const std::vector<NamedTerm>& rhs) {
  RelVector v = RelVector::Zero(g.quadratic_dim());
  const auto place = [&](const NamedTerm& t, long sign) {
    const auto a = g.find(t.first);
    const auto b = g.find(t.second);
    if (!a || !b) throw std::invalid_argument("make_relation: unknown generator in term");
    v(monomial_index(g, Monomial{t.left, *a, *b})) += Rational(sign * t.coeff);
  };
  for (const auto& t : lhs) place(t, 1);
  for (const auto& t : rhs) place(t, -1);
  return v;
}

namespace {

GeneratorSet as_generators() { return GeneratorSet({"·"}, {"m"}); }
GeneratorSet dend_generators() { return GeneratorSet({"∧", "∨"}, {"wedge", "vee"}); }
GeneratorSet dias_generators() { return GeneratorSet({"⊣", "⊢"}, {"ldash", "rdash"}); }
GeneratorSet x_generators() { return GeneratorSet({"↖", "↗", "↙", "↘"}, {"nw", "ne", "sw", "se"}); }

RelationList as_list() {
  RelationList l{"As", as_generators(), {}, {}};
  l.relations.push_back(make_relation(l.generators, {L("m", "m")}, {R("m", "m")}));
  l.labels.push_back("assoc");
  return l;
}

RelationList dend_list() {
  RelationList l{"Dend", dend_generators(), {}, {}};
  const auto& g = l.generators;
  l.relations = {
      make_relation(g, {L("wedge", "wedge")}, {R("wedge", "wedge"), R("wedge", "vee")}),
      make_relation(g, {L("vee", "wedge")}, {R("vee", "wedge")}),
      make_relation(g, {L("wedge", "vee"), L("vee", "vee")}, {R("vee", "vee")}),
  };
  l.labels = {"(i)", "(ii)", "(iii)"};
  return l;
}

RelationList dias_list() {
  RelationList l{"Dias", dias_generators(), {}, {}};
  const auto& g = l.generators;
  l.relations = {
      make_relation(g, {L("ldash", "ldash")}, {R("ldash", "ldash")}),
      make_relation(g, {L("ldash", "ldash")}, {R("ldash", "rdash")}),
      make_relation(g, {L("rdash", "ldash")}, {R("rdash", "ldash")}),
      make_relation(g, {L("ldash", "rdash")}, {R("rdash", "rdash")}),
      make_relation(g, {L("rdash", "rdash")}, {R("rdash", "rdash")}),
  };
  l.labels = {"(1)", "(2)", "(3)", "(4)", "(5)"};
  return l;
}

// Rows n = 1..5 (one per Dias relation), columns a = i, ii, iii.
RelationList tableau_list() {
  RelationList l{"DendSquareDias", x_generators(), {}, {}};
  const auto& g = l.generators;
  const auto add = [&](std::string label, std::vector<NamedTerm> lhs, std::vector<NamedTerm> rhs) {
    l.relations.push_back(make_relation(g, lhs, rhs));
    l.labels.push_back(std::move(label));
  };
  add("(1,i)", {L("nw", "nw")}, {R("nw", "nw"), R("nw", "sw")});
  add("(1,ii)", {L("sw", "nw")}, {R("sw", "nw")});
  add("(1,iii)", {L("nw", "sw"), L("sw", "sw")}, {R("sw", "sw")});
  add("(2,i)", {L("nw", "nw")}, {R("nw", "se"), R("nw", "ne")});
  add("(2,ii)", {L("sw", "nw")}, {R("sw", "ne")});
  add("(2,iii)", {L("nw", "sw"), L("sw", "sw")}, {R("sw", "se")});
  add("(3,i)", {L("ne", "nw")}, {R("ne", "nw"), R("ne", "sw")});
  add("(3,ii)", {L("se", "nw")}, {R("se", "nw")});
  add("(3,iii)", {L("ne", "sw"), L("se", "sw")}, {R("se", "sw")});
  add("(4,i)", {L("nw", "ne")}, {R("ne", "ne"), R("ne", "se")});
  add("(4,ii)", {L("sw", "ne")}, {R("se", "ne")});
  add("(4,iii)", {L("nw", "se"), L("sw", "se")}, {R("se", "se")});
  add("(5,i)", {L("ne", "ne")}, {R("ne", "ne"), R("ne", "se")});
  add("(5,ii)", {L("se", "ne")}, {R("se", "ne")});
  add("(5,iii)", {L("ne", "se"), L("se", "se")}, {R("se", "se")});
  return l;
}

RelationList x_list(int sign) {
  RelationList l = tableau_list();
  l.name = sign > 0 ? "Xplus" : "Xminus";
  const auto& g = l.generators;
  l.relations.push_back(make_relation(g, {L("ne", "se"), L("nw", "se", -1)}, {R("nw", "sw", sign), R("nw", "se", -sign)}));
  l.labels.push_back(sign > 0 ? "(16+)" : "(16-)");
  return l;
}

Matrix rows(Index r, Index c, std::initializer_list<long> entries) {
  Matrix m(r, c);
  auto it = entries.begin();
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) m(i, j) = Rational(*it++);
  }
  return m;
}

}  // namespace

Catalog Catalog::standard() {
  Catalog c;
  c.presentations = {as_list(), dend_list(), dias_list(), tableau_list(), x_list(+1), x_list(-1)};

  const auto as = as_generators();
  const auto dend = dend_generators();
  const auto dias = dias_generators();
  const auto x = x_generators();
  // Dend -> As:  m = wedge + vee.
  c.maps.push_back({"Dend>As", "Dend", "As", GeneratorMap(as, dend, rows(1, 2, {1, 1}))});
  // As -> Dias:  ldash = rdash = m.
  c.maps.push_back({"As>Dias", "As", "Dias", GeneratorMap(dias, as, rows(2, 1, {1, 1}))});
  for (const char* xname : {"Xplus", "Xminus"}) {
    const std::string xs(xname);
    // Dend -> X:  nw = ne = wedge, sw = se = vee.
    c.maps.push_back({"Dend>" + xs, "Dend", xs, GeneratorMap(x, dend, rows(4, 2, {1, 0, 1, 0, 0, 1, 0, 1}))});
    // X -> Dias:  ldash = nw + sw, rdash = ne + se.
    c.maps.push_back({xs + ">Dias", xs, "Dias", GeneratorMap(dias, x, rows(2, 4, {1, 0, 1, 0, 0, 1, 0, 1}))});
  }
  return c;
}

const RelationList& Catalog::relations(std::string_view name) const {
  for (const auto& l : presentations) {
    if (l.name == name) return l;
  }
  throw std::out_of_range("unknown built-in operad '" + std::string(name) + "'");
}

RelationList& Catalog::relations(std::string_view name) {
  for (auto& l : presentations) {
    if (l.name == name) return l;
  }
  throw std::out_of_range("unknown built-in operad '" + std::string(name) + "'");
}

bool Catalog::has_presentation(std::string_view name) const {
  for (const auto& l : presentations) {
    if (l.name == name) return true;
  }
  return false;
}

const NamedMap& Catalog::map(std::string_view name) const {
  for (const auto& m : maps) {
    if (m.name == name) return m;
  }
  throw std::out_of_range("unknown built-in map '" + std::string(name) + "'");
}

Presentation builtin(std::string_view name) { return Catalog::standard().presentation(name); }

GeneratorMap builtin_map(std::string_view name) { return Catalog::standard().map(name).map; }

RelVector sixteenth_r(const GeneratorSet& g) {
  RelVector v = RelVector::Zero(g.quadratic_dim());
  v(g.left(1, 3)) = 1;
  v(g.left(0, 3)) = -1;
  return v;
}

RelVector sixteenth_s(const GeneratorSet& g) {
  RelVector v = RelVector::Zero(g.quadratic_dim());
  v(g.right(0, 2)) = 1;
  v(g.right(0, 3)) = -1;
  return v;
}

RelVector sixteenth_relation(const GeneratorSet& g, int sign) {
  return sixteenth_r(g) - Rational(sign) * sixteenth_s(g);
}

std::vector<RelVector> dual_square_extra_relations(const GeneratorSet& g) {
  return {sixteenth_r(g), sixteenth_s(g)};
}

}  // namespace operad
