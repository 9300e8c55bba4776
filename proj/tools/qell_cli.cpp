#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qell/group_spec.hpp"
#include "qell/json_io.hpp"
#include "qell/qell.hpp"
#include "qell/verify.hpp"

using namespace qell;

namespace {

constexpr std::size_t kPrintedTableRank = 8;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::precondition, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::precondition, "cannot write " + path);
  out << text;
}

std::string term_string(const LambdaCtx::Term& t) {
  std::string s = t.mult == 1 ? "" : std::to_string(t.mult) + "*";
  if (t.shift != 0) s += "q^" + std::to_string(t.shift) + "*";
  return s + "b" + std::to_string(t.index);
}

// ---- point / table ----

void print_structure(const QEllStructure& s, const std::string& spec) {
  std::cout << "QEll_G(pt) for G = " << spec << " (order " << s.group()->order() << "): " << s.num_classes()
            << (s.num_classes() == 1 ? " component" : " components") << ", total rank " << s.total_rank() << "\n";
  for (std::size_t c = 0; c < s.num_classes(); ++c) {
    const auto& en = s.entry(c);
    const auto& ctx = *s.ctx(c, 0);
    std::cout << "\ncomponent " << c << ": g = " << en.g.to_cycle_string() << ", order " << en.order
              << ", |C_G(g)| = " << en.centralizer->order() << ", rank " << ctx.rank() << "\n";
    std::cout << "  basis (irr: degree, angle):";
    for (std::size_t i = 0; i < ctx.rank(); ++i)
      std::cout << (i ? "," : "") << " b" << i << ": " << ctx.degree(i) << ", " << to_string(ctx.angle(i));
    std::cout << "\n";
    if (ctx.rank() > kPrintedTableRank) {
      std::cout << "  multiplication table omitted (rank > " << kPrintedTableRank << "; see --json)\n";
      continue;
    }
    std::cout << "  products:\n";
    for (std::size_t i = 0; i < ctx.rank(); ++i)
      for (std::size_t j = i; j < ctx.rank(); ++j) {
        std::cout << "    b" << i << "*b" << j << " =";
        const auto& terms = ctx.product(i, j);
        for (std::size_t k = 0; k < terms.size(); ++k) std::cout << (k ? " + " : " ") << term_string(terms[k]);
        if (terms.empty()) std::cout << " 0";
        std::cout << "\n";
      }
  }
}

int cmd_point(const std::string& spec_text, const std::string& json_path) {
  auto spec = parse_group_spec(spec_text);
  auto session = Session::for_groups({spec.group});
  auto s = qe_structure(session, FiniteGSet::point(spec.group));
  if (!json_path.empty()) write_output(json_path, io::dump(io::to_json(io::element_doc(qe_zero(s), spec.canonical, true))));
  if (json_path != "-") print_structure(*s, spec.canonical);
  return 0;
}

int cmd_table(const std::string& spec_text, const std::string& json_path) {
  auto spec = parse_group_spec(spec_text);
  auto session = Session::for_groups({spec.group});
  const auto& g = spec.group;
  auto doc = io::table_doc(g, *session->table(g), spec.canonical);
  if (!json_path.empty()) write_output(json_path, io::dump(io::to_json(doc)));
  if (json_path == "-") return 0;
  std::cout << "G = " << spec.canonical << ", order " << g->order() << ", " << doc.classes.size() << " classes\n";
  std::cout << "classes (rep, size, order):\n";
  for (std::size_t c = 0; c < doc.classes.size(); ++c) {
    const auto& rep = g->class_rep(static_cast<int>(c));
    std::cout << "  " << c << ": " << rep.to_cycle_string() << ", " << doc.classes[c].size << ", " << doc.classes[c].rep_order
              << "\n";
  }
  std::cout << "irreducibles (degree; angle at each central class):\n";
  for (std::size_t i = 0; i < doc.irreducibles.size(); ++i) {
    std::cout << "  " << i << ": " << doc.irreducibles[i].degree << ";";
    for (const auto& a : doc.irreducibles[i].central_angles) std::cout << " [" << a.cls << "] " << to_string(a.c);
    std::cout << "\n";
  }
  return 0;
}

// ---- element documents ----

struct Loaded {
  io::ElementDoc doc;
  ParsedSpec spec;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.doc = io::element_doc(io::parse_json(read_file(path)));
  l.spec = io::document_group(l.doc.group);
  return l;
}

void emit(const QEllElt& e, const std::string& spec, const std::string& out) {
  write_output(out, io::dump(io::to_json(io::element_doc(e, spec))));
}

FiniteGSet named_gset(const GroupPtr& g, const std::string& name) {
  if (name == "pt") return FiniteGSet::point(g);
  if (name == "natural") return FiniteGSet::natural(g);
  if (name == "regular") return FiniteGSet::regular(g);
  fail(ErrorKind::precondition, "unknown G-set " + name);
}

/// `h` as a subgroup of `g`; both act on the same points.
void require_subgroup(const GroupPtr& h, const GroupPtr& g) {
  bool ok = h->degree() == g->degree();
  for (const auto& s : h->generators()) ok = ok && g->contains(s);
  require(ok, ErrorKind::precondition, "not a subgroup: " + h->name() + " is not contained in " + g->name());
}

struct ElementArgs {
  std::string group, gset = "pt", basis, output;
  bool unit = false;
  long long seed = -1;
};

int cmd_element(const ElementArgs& a) {
  auto spec = parse_group_spec(a.group);
  auto session = Session::for_groups({spec.group});
  auto s = qe_structure(session, named_gset(spec.group, a.gset));
  const int chosen = (a.unit ? 1 : 0) + (a.seed >= 0 ? 1 : 0) + (a.basis.empty() ? 0 : 1);
  require(chosen == 1, ErrorKind::precondition, "choose exactly one of --unit, --random, --basis");
  QEllElt e = qe_zero(s);
  if (a.unit) e = qe_unit(s);
  if (a.seed >= 0) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(a.seed));
    e = qe_random(s, rng);
  }
  if (!a.basis.empty()) {
    std::size_t cls = 0, orbit = 0, irr = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(a.basis);
    in >> cls >> c1 >> orbit >> c2 >> irr;
    require(in && c1 == ',' && c2 == ',' && in.peek() == EOF, ErrorKind::precondition, "--basis expects CLASS,ORBIT,IRR");
    require(cls < s->num_classes() && orbit < s->num_orbits(cls) && irr < s->ctx(cls, orbit)->rank(),
            ErrorKind::precondition, "--basis index out of range");
    e = qe_basis(s, cls, orbit, irr);
  }
  emit(e, spec.canonical, a.output);
  return 0;
}

int cmd_mu(int n, const std::string& input, const std::string& output) {
  require(n >= 1, ErrorKind::precondition, "--n must be positive");
  auto in = load(input);
  auto session = Session::for_groups({in.spec.group});
  auto e = io::element_from_doc(in.doc, in.spec.group, session);
  emit(qe_mu(n, e), in.doc.group.spec, output);
  return 0;
}

int cmd_transfer(const std::string& group, const std::string& algorithm, const std::string& input, const std::string& output) {
  auto g = parse_group_spec(group);
  auto in = load(input);
  require(!in.doc.gset, ErrorKind::precondition, "transfer from the command line needs X = pt");
  require_subgroup(in.spec.group, g.group);
  auto session = Session::for_groups({g.group, in.spec.group});
  auto b = io::element_from_doc(in.doc, in.spec.group, session);
  auto pt = qe_structure(session, FiniteGSet::point(g.group));
  emit(algorithm == "A" ? qe_transfer_a(pt, in.spec.group, b) : qe_transfer_b(pt, b), g.canonical, output);
  return 0;
}

int cmd_kunneth(const std::string& left, const std::string& right, const std::string& output) {
  auto l = load(left), r = load(right);
  auto product = direct_product(l.spec.group, r.spec.group).group;
  auto session = Session::for_groups({l.spec.group, r.spec.group, product});
  auto a = io::element_from_doc(l.doc, l.spec.group, session);
  auto b = io::element_from_doc(r.doc, r.spec.group, session);
  Kunneth k(session, l.spec.group, *a.structure->gset(), r.spec.group, *b.structure->gset());
  emit(k(QEllElt{k.left(), a.comps}, QEllElt{k.right(), b.comps}), l.doc.group.spec + "x" + r.doc.group.spec, output);
  return 0;
}

int cmd_cog(const std::string& group, const std::string& input, const std::string& output) {
  auto g = parse_group_spec(group);
  auto in = load(input);
  require_subgroup(in.spec.group, g.group);
  auto session = Session::for_groups({g.group, in.spec.group});
  auto b = io::element_from_doc(in.doc, in.spec.group, session);
  ChangeOfGroup cg(session, g.group, in.spec.group, *b.structure->gset());
  emit(cg.inverse(QEllElt{cg.over_h(), b.comps}), g.canonical, output);
  return 0;
}

int cmd_pullback(const std::string& sub, const std::string& input, const std::string& output) {
  auto h = parse_group_spec(sub);
  auto in = load(input);
  require_subgroup(h.group, in.spec.group);
  auto session = Session::for_groups({in.spec.group, h.group});
  auto a = io::element_from_doc(in.doc, in.spec.group, session);
  emit(qe_pullback_hom(GroupHom::inclusion(h.group, in.spec.group), a), h.canonical, output);
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& json_path) {
  auto report = verify::run_suite(suite, seed);
  if (!json_path.empty()) write_output(json_path, io::dump(io::to_json(report)));
  if (json_path != "-") {
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
      if (c.passed) {
        std::cout << "PASS " << c.name << "\n";
      } else {
        ++failed;
        std::cout << "FAIL " << c.name << " [" << c.anchor << "]: " << c.detail << "\n";
      }
    }
    std::cout << "suite " << suite << ", seed " << seed << ": " << report.checks.size() - failed << "/"
              << report.checks.size() << " passed\n";
  }
  return report.passed ? 0 : exit_code(ErrorKind::verification);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-elliptic cohomology of finite group actions"};
  app.require_subcommand(1);

  std::string group, json_path, input, output, left, right, sub, algorithm = "A", suite = "all";
  int n = 1;
  std::uint64_t seed = 0;
  ElementArgs ea;

  auto* point = app.add_subcommand("point", "QEll_G(pt): components, ranks, angles, products");
  point->add_option("--group", group, "group spec")->required();
  point->add_option("--json", json_path, "write the structure as JSON (- for stdout)");

  auto* table = app.add_subcommand("table", "character table summary");
  table->add_option("--group", group, "group spec")->required();
  table->add_option("--json", json_path, "write the table as JSON (- for stdout)");

  auto* element = app.add_subcommand("element", "write an element as JSON");
  element->add_option("--group", ea.group, "group spec")->required();
  element->add_option("--gset", ea.gset, "pt, natural or regular")->check(CLI::IsMember({"pt", "natural", "regular"}));
  element->add_flag("--unit", ea.unit, "the unit");
  element->add_option("--random", ea.seed, "random element from this seed")->check(CLI::NonNegativeNumber);
  element->add_option("--basis", ea.basis, "basis element CLASS,ORBIT,IRR");
  element->add_option("-o,--output", ea.output, "output path (default stdout)");

  auto* mu = app.add_subcommand("mu", "the operation mu^n");
  mu->add_option("--n", n, "n >= 1")->required();
  mu->add_option("--input", input, "element JSON")->required();
  mu->add_option("-o,--output", output, "output path");

  auto* transfer = app.add_subcommand("transfer", "transfer from H to G (X = pt)");
  transfer->add_option("--group", group, "target group G")->required();
  transfer->add_option("--input", input, "element over H")->required();
  transfer->add_option("--algorithm", algorithm, "A or B")->check(CLI::IsMember({"A", "B"}));
  transfer->add_option("-o,--output", output, "output path");

  auto* kunneth = app.add_subcommand("kunneth", "external product over G x H");
  kunneth->add_option("--left", left, "element over G")->required();
  kunneth->add_option("--right", right, "element over H")->required();
  kunneth->add_option("-o,--output", output, "output path");

  auto* cog = app.add_subcommand("cog", "change of group QEll_H(X) -> QEll_G(G x_H X)");
  cog->add_option("--group", group, "ambient group G")->required();
  cog->add_option("--input", input, "element over H")->required();
  cog->add_option("-o,--output", output, "output path");

  auto* pullback = app.add_subcommand("pullback", "restriction to a subgroup");
  pullback->add_option("--subgroup", sub, "subgroup spec H")->required();
  pullback->add_option("--input", input, "element over G")->required();
  pullback->add_option("-o,--output", output, "output path");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", suite, "paper, props or all")->check(CLI::IsMember({"paper", "props", "all"}));
  verify_cmd->add_option("--seed", seed, "seed for the property suite");
  verify_cmd->add_option("--json", json_path, "write the report as JSON (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code(ErrorKind::parse);
  }

  try {
    if (*point) return cmd_point(group, json_path);
    if (*table) return cmd_table(group, json_path);
    if (*element) return cmd_element(ea);
    if (*mu) return cmd_mu(n, input, output);
    if (*transfer) return cmd_transfer(group, algorithm, input, output);
    if (*kunneth) return cmd_kunneth(left, right, output);
    if (*cog) return cmd_cog(group, input, output);
    if (*pullback) return cmd_pullback(sub, input, output);
    if (*verify_cmd) return cmd_verify(suite, seed, json_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
