#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <cstdint>
#include <optional>

#include "cwf/division.hpp"
#include "cwf/dot.hpp"
#include "cwf/error.hpp"
#include "cwf/fieldroots.hpp"
#include "cwf/forest.hpp"
#include "cwf/generalized.hpp"
#include "cwf/plft.hpp"
#include "cwf/text.hpp"
#include "cwf/treenav.hpp"

namespace cwf::cli {

namespace {

struct Options {
  std::string matrix;
  std::string value;
  std::string root;
  std::size_t n = 0;
  std::size_t depth = 0;
  std::size_t cap = kMaterializeCap;
  std::optional<std::size_t> limit;
  std::optional<std::string> eval_at;
  bool standard = false;
  std::int64_t det = 0;
  std::int64_t height = 0;
  std::int64_t max = 0;
  std::size_t rows = 0;
  long long u = 1;
  long long v = 1;
  std::string gen_action;
};

bool under_limit(const Options& o, std::size_t emitted) { return !o.limit || emitted < *o.limit; }

int cmd_row(const Options& o, std::ostream& out) {
  const Plft root = parse_matrix(o.root);
  std::optional<ReducedRational> at;
  if (o.eval_at) at = parse_rational(*o.eval_at);
  RowStream stream(root, o.n);
  for (std::size_t emitted = 0; under_limit(o, emitted); ++emitted) {
    std::optional<Plft> f = stream.next();
    if (!f) break;
    out << (at ? to_string(eval(*f, *at)) : to_string(*f)) << '\n';
  }
  return kExitOk;
}

int cmd_locate(const Options& o, std::ostream& out) {
  const Located loc = locate(parse_matrix(o.matrix));
  out << "root=" << to_string(loc.root) << " word=" << to_string(loc.word) << " depth=" << loc.word.size()
      << '\n';
  return kExitOk;
}

int cmd_cf(const Options& o, std::ostream& out) {
  const ContinuedFraction cf = euclid_cf(parse_matrix(o.matrix));
  out << (o.standard ? to_string(standard_form(cf)) : to_string(cf)) << '\n';
  return kExitOk;
}

int cmd_depth(const Options& o, std::ostream& out) {
  const std::string_view arg = o.value;
  if (arg.find('[') != std::string_view::npos) {
    out << depth_det1(parse_matrix(arg)) << '\n';
  } else {
    out << rational_depth(parse_rational(arg)) << '\n';
  }
  return kExitOk;
}

int cmd_orphans(const Options& o, std::ostream& out) {
  const OrphanSet set = enumerate_orphans(o.det);
  for (std::size_t i = 0; i < set.orphans.size() && under_limit(o, i); ++i) out << to_string(set.orphans[i]) << '\n';
  return kExitOk;
}

int cmd_hd(const Options& o, std::ostream& out) {
  for (std::int64_t d = 1; d <= o.max; ++d) out << d << '\t' << class_number(d) << '\n' << std::flush;
  return kExitOk;
}

int cmd_factor(const Options& o, std::ostream& out) {
  out << to_string(factor_sl2(parse_matrix(o.matrix))) << '\n';
  return kExitOk;
}

int cmd_verify_partition(const Options& o, std::ostream& out) {
  const PartitionReport report = verify_partition(o.det, o.height);
  nlohmann::ordered_json j;
  j["det"] = report.det;
  j["height"] = report.height;
  j["trees"] = nlohmann::ordered_json::array();
  for (const TreeCount& t : report.trees) j["trees"].push_back({{"root", to_string(t.root)}, {"count", t.count}});
  j["pass"] = report.pass;
  out << j.dump() << '\n';
  return report.pass ? kExitOk : kExitDomainError;
}

int cmd_verify_formulas(const Options& o, std::ostream& out) {
  const FormulaReport r = verify_formulas(o.rows, o.cap);
  auto line = [&out](const char* name, bool ok) { out << name << '\t' << (ok ? "pass" : "FAIL") << '\n'; };
  line("denominator-numerator", r.den_num);
  line("symmetry", r.symmetry);
  line("successor", r.successor_matches_bfs);
  line("depth", r.depth);
  line("rational-bridge", r.rational_bridge);
  return r.pass() ? kExitOk : kExitDomainError;
}

int cmd_field_root(const Options& o, std::ostream& out) {
  const RootVerdict verdict = root_viability(parse_rational(o.value));
  if (verdict.viable) {
    out << "viable\n";
  } else {
    out << "blocked " << to_string(*verdict.witness) << '\n';
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const GenRule rule(o.u, o.v);
  const ReducedRational x = parse_rational(o.value);
  if (o.gen_action == "children") {
    const RationalPair kids = gen_children(rule, x);
    out << to_string(kids.left) << ' ' << to_string(kids.right) << '\n';
  } else if (o.gen_action == "classify") {
    const ChildKind kind = gen_classify(rule, x);
    out << to_string(kind);
    if (kind != ChildKind::Orphan) out << " parent=" << to_string(gen_parent(rule, x));
    out << '\n';
  } else {
    const RationalLocated loc = gen_locate(rule, x);
    out << "root=" << to_string(loc.root) << " word=" << to_string(loc.word) << " depth=" << loc.word.size()
        << '\n';
  }
  return kExitOk;
}

int cmd_dot(const Options& o, std::ostream& out) {
  out << dot_export(parse_matrix(o.root), o.depth, o.cap);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calkin-Wilf trees of rationals and positive linear fractional transformations", "cwf"};
  app.require_subcommand(1);
  Options o;

  auto* row = app.add_subcommand("row", "Stream row n of the tree rooted at a matrix");
  row->add_option("--root", o.root, "Root matrix, e.g. \"[1 0; 0 1]\"")->required();
  row->add_option("--n", o.n, "Row index")->required();
  row->add_option("--limit", o.limit, "Print at most this many vertices");
  row->add_option("--eval-at", o.eval_at, "Print each vertex evaluated at this rational");

  auto* loc = app.add_subcommand("locate", "Find the orphan root and word of a matrix");
  loc->add_option("matrix", o.matrix)->required();

  auto* cf = app.add_subcommand("cf", "Continued fraction with orphan root");
  cf->add_option("matrix", o.matrix)->required();
  cf->add_flag("--standard", o.standard, "Absorb a trailing J root into the tail q+z");

  auto* depth = app.add_subcommand("depth", "Row of a determinant-1 matrix or a positive rational");
  depth->add_option("value", o.value)->required();

  auto* orphans = app.add_subcommand("orphans", "List the orphan matrices of a determinant");
  orphans->add_option("--det", o.det)->required();
  orphans->add_option("--limit", o.limit);

  auto* hd = app.add_subcommand("hd", "Tabulate h(D) for D = 1..max");
  hd->add_option("--max", o.max)->required()->check(CLI::NonNegativeNumber);

  auto* factor = app.add_subcommand("factor", "Factor a determinant-1 matrix over L1, R1");
  factor->add_option("matrix", o.matrix)->required();

  auto* verify = app.add_subcommand("verify", "Brute-force verification suites");
  verify->require_subcommand(1);
  auto* partition = verify->add_subcommand("partition", "Forest partition of F(D) up to a height");
  partition->add_option("--det", o.det)->required();
  partition->add_option("--height", o.height)->required()->check(CLI::PositiveNumber);
  auto* formulas = verify->add_subcommand("formulas", "Row properties of T(z)");
  formulas->add_option("--rows", o.rows)->required();
  formulas->add_option("--cap", o.cap, "Materialization cap");

  auto* field = app.add_subcommand("field-root", "Can a rational root an infinite binary tree?");
  field->add_option("rational", o.value)->required();

  auto* gen = app.add_subcommand("gen", "Generation rule w/(uw+1), w+v on positive rationals");
  gen->add_option("--u", o.u)->check(CLI::PositiveNumber);
  gen->add_option("--v", o.v)->check(CLI::PositiveNumber);
  gen->add_option("action", o.gen_action)->required()->check(CLI::IsMember({"children", "classify", "locate"}));
  gen->add_option("rational", o.value)->required();

  auto* dot = app.add_subcommand("dot", "Graphviz rendering of the first rows of a tree");
  dot->add_option("--root", o.root)->required();
  dot->add_option("--depth", o.depth)->required();
  dot->add_option("--cap", o.cap, "Materialization cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (row->parsed()) return cmd_row(o, out);
    if (loc->parsed()) return cmd_locate(o, out);
    if (cf->parsed()) return cmd_cf(o, out);
    if (depth->parsed()) return cmd_depth(o, out);
    if (orphans->parsed()) return cmd_orphans(o, out);
    if (hd->parsed()) return cmd_hd(o, out);
    if (factor->parsed()) return cmd_factor(o, out);
    if (partition->parsed()) return cmd_verify_partition(o, out);
    if (formulas->parsed()) return cmd_verify_formulas(o, out);
    if (field->parsed()) return cmd_field_root(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (dot->parsed()) return cmd_dot(o, out);
  } catch (const Error& e) {
    err << "error: " << error_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? kExitUsage : kExitDomainError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace cwf::cli
