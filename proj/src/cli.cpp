#include "operad/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "operad/catalog.hpp"
#include "operad/dsl.hpp"
#include "operad/free_expansion.hpp"
#include "operad/koszul_series.hpp"
#include "operad/verification.hpp"

namespace operad {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kLargeWeight = 5;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::size_t max_weight = kLargeWeight;
  bool allow_large = false;
};

// Operads come either from the built-in catalog ("builtins") or a DSL file.
class Source {
 public:
  explicit Source(const std::string& file) {
    if (file == "builtins") {
      catalog_ = Catalog::standard();
      return;
    }
    std::ifstream in(file);
    if (!in) throw usage_error("cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    parsed_ = parse(buf.str());
    if (!parsed_.ok()) {
      std::string msg;
      for (const auto& d : parsed_.diagnostics) msg += format_diagnostic(d, file) + "\n";
      if (!msg.empty()) msg.pop_back();
      throw usage_error(msg);
    }
  }

  // NAME or dual:NAME (repeatable).
  Presentation resolve(std::string_view op) const {
    constexpr std::string_view dual_prefix = "dual:";
    if (op.starts_with(dual_prefix)) return dual(resolve(op.substr(dual_prefix.size())));
    if (catalog_) {
      if (!catalog_->has_presentation(op)) throw usage_error("unknown built-in operad '" + std::string(op) + "'");
      return catalog_->presentation(op);
    }
    if (const auto* p = parsed_.find(op)) return *p;
    throw usage_error("no operad named '" + std::string(op) + "' in the input file");
  }

 private:
  std::optional<Catalog> catalog_;
  ParseResult parsed_;
};

ordered_json presentation_json(const Presentation& p) {
  ordered_json j;
  j["name"] = p.name;
  j["generators"] = p.generators.names();
  j["relation_dim"] = p.relations.dim();
  j["relations"] = ordered_json::array();
  for (Index r = 0; r < p.relations.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (Index c = 0; c < p.relations.ambient_dim(); ++c) row.push_back(to_string(p.relations.basis()(r, c)));
    j["relations"].push_back(row);
  }
  j["text"] = print(p);
  return j;
}

void emit_presentation(const Presentation& p, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << presentation_json(p).dump(2) << "\n";
  } else {
    out << print(p);
  }
}

void check_weight(std::size_t n, const Options& o) {
  if (o.max_weight > kLargeWeight && !o.allow_large) {
    throw usage_error("--max-weight above " + std::to_string(kLargeWeight) + " requires --allow-large");
  }
  if (n > o.max_weight) {
    throw usage_error("weight " + std::to_string(n) + " exceeds --max-weight " + std::to_string(o.max_weight));
  }
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + std::to_string(xs[k]);
  return s;
}

std::string describe(const SignedRelabeling& sigma, const GeneratorSet& from, const GeneratorSet& to) {
  std::string s;
  for (std::size_t i = 0; i < sigma.permutation.size(); ++i) {
    s += from.name(i) + " -> " + (sigma.signs[i] < 0 ? "-" : "") + to.name(sigma.permutation[i]) + "\n";
  }
  return s;
}

int cmd_iso(const Source& src, const std::string& a, const std::string& b, const Options& o, std::ostream& out) {
  const auto p = src.resolve(a);
  const auto q = src.resolve(b);
  if (p.generators.size() != q.generators.size()) throw usage_error("operads have different numbers of generators");
  const auto iso = find_relabeling_iso(p, q);
  if (o.format == "json") {
    ordered_json j;
    j["found"] = iso.has_value();
    if (iso) {
      j["permutation"] = iso->permutation;
      j["signs"] = iso->signs;
      ordered_json m = ordered_json::object();
      for (std::size_t i = 0; i < iso->permutation.size(); ++i) {
        m[p.generators.name(i)] = (iso->signs[i] < 0 ? "-" : "") + q.generators.name(iso->permutation[i]);
      }
      j["mapping"] = m;
    }
    out << j.dump(2) << "\n";
  } else {
    out << (iso ? describe(*iso, p.generators, q.generators) : "none\n");
  }
  return 0;
}

int cmd_dims(const Source& src, const std::string& op, std::size_t max_n, const Options& o, std::ostream& out) {
  check_weight(max_n, o);
  const auto p = src.resolve(op);
  const auto dims = component_dims(p, max_n);
  if (o.format == "json") {
    out << ordered_json{{"operad", op}, {"dims", dims}}.dump(2) << "\n";
  } else {
    out << join(dims) << "\n";
  }
  return 0;
}

int cmd_gk(const Source& src, const std::string& op, std::size_t max_n, const Options& o, std::ostream& out) {
  check_weight(max_n, o);
  const auto p = src.resolve(op);
  const DimSeries pd{component_dims(p, max_n)};
  const DimSeries dd{component_dims(dual(p), max_n)};
  const auto defect = gk_defect(pd, dd, max_n);
  if (o.format == "json") {
    ordered_json coeffs = ordered_json::array();
    for (std::size_t k = 1; k <= defect.order(); ++k) coeffs.push_back(to_string(defect[k]));
    out << ordered_json{{"operad", op}, {"dims", pd.dims}, {"dual_dims", dd.dims}, {"defect", coeffs},
                        {"vanishes", defect.is_zero()}}
               .dump(2)
        << "\n";
  } else {
    out << "dims:      " << join(pd.dims) << "\n"
        << "dual dims: " << join(dd.dims) << "\n"
        << "f_dual(f(t)) - t = " << format_series(defect) << "\n"
        << "(vanishing is necessary, not sufficient, for Koszulity)\n";
  }
  return defect.is_zero() ? 0 : 1;
}

int cmd_expand(const Source& src, const std::string& op, std::size_t n, bool basis, const Options& o, std::ostream& out) {
  check_weight(n, o);
  const auto p = src.resolve(op);
  const auto c = expand(p, n);
  const auto survivors = basis ? c.surviving() : std::vector<TreeMonomial>{};
  if (o.format == "json") {
    ordered_json j{{"operad", op}, {"arity", n}, {"free_dim", c.basis.size()}, {"ideal_dim", c.ideal_dim},
                   {"dim", c.dimension()}};
    if (basis) {
      j["basis"] = ordered_json::array();
      for (const auto& m : survivors) j["basis"].push_back(format_monomial(m, p.generators));
    }
    out << j.dump(2) << "\n";
  } else {
    out << "arity " << n << ": free " << c.basis.size() << ", ideal " << c.ideal_dim << ", dim " << c.dimension() << "\n";
    for (const auto& m : survivors) out << "  " << format_monomial(m, p.generators) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& report_path, int grid, std::size_t x_weight, const Options& o, std::ostream& out) {
  check_weight(x_weight, o);
  VerifyOptions vo;
  vo.scan_radius = grid;
  vo.x_max_weight = x_weight;
  const auto report = verify_all(Catalog::standard(), vo);
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) throw usage_error("cannot write " + report_path);
    f << to_json(report).dump(2) << "\n";
  }
  if (o.format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary quadratic regular operads: Koszul duals, square products, dimensions"};
  app.name("operad");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-weight", o.max_weight, "Largest arity computed by dims/gk-check/expand");
  app.add_flag("--allow-large", o.allow_large, "Permit --max-weight above 5");

  std::string file, op1, op2, report_path;
  std::vector<std::string> rels;
  std::size_t max_n = 4, weight = 3, x_weight = 4;
  int grid = 2;
  bool basis = false;

  auto* dual_cmd = app.add_subcommand("dual", "Print the Koszul dual presentation");
  dual_cmd->add_option("FILE", file, "DSL file or 'builtins'")->required();
  dual_cmd->add_option("OP", op1)->required();

  auto* square_cmd = app.add_subcommand("square", "Print the square product");
  square_cmd->add_option("FILE", file)->required();
  square_cmd->add_option("OP1", op1)->required();
  square_cmd->add_option("OP2", op2)->required();

  auto* quotient_cmd = app.add_subcommand("quotient", "Add relations to a presentation");
  quotient_cmd->add_option("FILE", file)->required();
  quotient_cmd->add_option("OP", op1)->required();
  quotient_cmd->add_option("--rel", rels, "Relation in the DSL syntax, e.g. \"(x a y) a z = 0\"")->required();

  auto* iso_cmd = app.add_subcommand("iso", "Search for a signed relabeling OP1 -> OP2");
  iso_cmd->add_option("FILE", file)->required();
  iso_cmd->add_option("OP1", op1)->required();
  iso_cmd->add_option("OP2", op2)->required();

  auto* dims_cmd = app.add_subcommand("dims", "Component dimensions in arities 1..N");
  dims_cmd->add_option("FILE", file)->required();
  dims_cmd->add_option("OP", op1)->required();
  dims_cmd->add_option("--max", max_n)->required();

  auto* gk_cmd = app.add_subcommand("gk-check", "Generating-series defect f_dual(f(t)) - t");
  gk_cmd->add_option("FILE", file)->required();
  gk_cmd->add_option("OP", op1)->required();
  gk_cmd->add_option("--max", max_n)->required();

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the full verification battery on the built-ins");
  verify_cmd->add_option("--report", report_path, "Write the JSON report here");
  verify_cmd->add_option("--scan-grid", grid, "Radius K of the scan grid {-K..K}^2")->check(CLI::Range(1, 10));
  verify_cmd->add_option("--x-weight", x_weight, "Largest arity of Xplus/Xminus computed for the findings")->check(CLI::Range(3, 64));

  auto* expand_cmd = app.add_subcommand("expand", "Dimension of one arity and optionally a monomial basis");
  expand_cmd->add_option("FILE", file)->required();
  expand_cmd->add_option("OP", op1)->required();
  expand_cmd->add_option("--weight", weight)->required()->check(CLI::PositiveNumber);
  expand_cmd->add_flag("--basis", basis, "List the monomials that survive in the quotient");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(report_path, grid, x_weight, o, out);
    const Source src(file);
    if (dual_cmd->parsed()) {
      emit_presentation(dual(src.resolve(op1)), o, out);
    } else if (square_cmd->parsed()) {
      emit_presentation(square(src.resolve(op1), src.resolve(op2)), o, out);
    } else if (quotient_cmd->parsed()) {
      const auto p = src.resolve(op1);
      std::vector<RelVector> extra;
      for (const auto& r : rels) {
        try {
          extra.push_back(parse_relation(r, p.generators));
        } catch (const relation_parse_error& e) {
          throw usage_error(format_diagnostic(e.diagnostic, "--rel"));
        }
      }
      emit_presentation(quotient(p, extra), o, out);
    } else if (iso_cmd->parsed()) {
      return cmd_iso(src, op1, op2, o, out);
    } else if (dims_cmd->parsed()) {
      return cmd_dims(src, op1, max_n, o, out);
    } else if (gk_cmd->parsed()) {
      return cmd_gk(src, op1, max_n, o, out);
    } else if (expand_cmd->parsed()) {
      return cmd_expand(src, op1, weight, basis, o, out);
    }
    return 0;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace operad
