#include "nilvar/cli.hpp"

#include "nilvar/homalg.hpp"
#include "nilvar/io.hpp"
#include "nilvar/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nilvar {

namespace {

std::string word_or_one(const Word& w) { return w.empty() ? "1" : w.letters(); }

std::string triple_text(const Triple& t) {
  return "(" + word_or_one(t.d) + "," + word_or_one(t.e) + "," + word_or_one(t.f) + ")";
}

// Display width of UTF-8 text; labels of sums contain U+2295.
std::size_t columns(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

void print_rows(std::ostream& os, const std::vector<const ComponentDescriptor*>& rows) {
  std::size_t width = 0;
  for (const auto* c : rows) width = std::max(width, columns(c->label()));
  for (const auto* c : rows) {
    const std::string label = c->label();
    os << "    " << label << std::string(width + 2 - columns(label), ' ') << c->dim << '\n';
  }
}

int cmd_classify(int n, int a, int b, const std::string& format, std::ostream& out) {
  const Classification c = classify(n, a, b);
  if (format == "json") out << classification_to_json(c).dump(2) << '\n';
  else out << render_table(c);
  return exit_ok;
}

int cmd_tables(int a, int b, int max_n, const std::string& format, std::ostream& out) {
  json all = json::array();
  for (int n = 2; n <= max_n; ++n) {
    const Classification c = classify(n, a, b);
    if (format == "json") all.push_back(classification_to_json(c));
    else out << render_table(c) << '\n';
  }
  if (format == "json") out << all.dump(2) << '\n';
  return exit_ok;
}

int cmd_hom(const std::string& c1, const std::string& c2, int a, int b, std::ostream& out) {
  const AlgebraParams params(a, b);
  const Word w1 = Word::parse(c1, params), w2 = Word::parse(c2, params);
  const auto maps = graph_maps(w1, w2);
  out << "dim Hom(M(" << word_or_one(w1) << "), M(" << word_or_one(w2) << ")) = " << maps.size()
      << '\n';
  out << "oracle: " << hom_dim_oracle(string_module(w1), string_module(w2)) << '\n';
  out << "basis:\n";
  for (const auto& g : maps)
    out << "  (" << triple_text(g.pair.first) << "," << triple_text(g.pair.second) << ")\n";
  return exit_ok;
}

int cmd_ext(const std::string& c, const std::string& d, int a, int b, std::ostream& out) {
  const AlgebraParams params(a, b);
  const Word wc = Word::parse(c, params), wd = Word::parse(d, params);
  out << "Ext^1(M(" << word_or_one(wc) << "), M(" << word_or_one(wd)
      << ")) vanishes: " << (ext1_vanishes(wc, wd) ? "true" : "false") << '\n';
  return exit_ok;
}

int cmd_module(const std::string& string_word, const std::string& band_word,
               const std::vector<std::string>& lambdas, int a, int b, std::ostream& out) {
  const AlgebraParams params(a, b);
  MatrixPairModule m;
  if (!band_word.empty()) {
    std::vector<Rational> ls;
    for (const auto& l : lambdas) ls.push_back(parse_rational(l));
    if (ls.empty()) ls.push_back(Rational(1));
    m = band_module(Word::parse(band_word, params), ls);
  } else {
    m = string_module(Word::parse(string_word, params));
  }
  const auto [pa, pb] = jordan_pair(m);
  const ModuleStats s = stats(m);
  json j;
  j["module"] = module_to_json(m);
  j["jordan"] = {{"A", partition_to_json(pa)}, {"B", partition_to_json(pb)}};
  j["stats"] = {{"rank_a", s.rank_a},   {"rank_b", s.rank_b},
                {"top_dim", s.top_dim}, {"soc_dim", s.soc_dim},
                {"regular", s.regular}};
  out << j.dump(2) << '\n';
  return exit_ok;
}

int cmd_verify(const std::string& level, std::uint64_t seed, std::ostream& out) {
  const auto results = run_verify(level == "full" ? VerifyLevel::full : VerifyLevel::quick, seed);
  bool ok = true;
  out << "verify level=" << level << " seed=" << seed << '\n';
  for (const auto& r : results) {
    out << "  " << std::left << std::setw(12) << r.name << r.checks << " checks, "
        << (r.ok ? "ok" : "FAILED");
    if (!r.info.empty()) out << " (" << r.info << ")";
    out << '\n';
    if (!r.ok) {
      out << "    first counterexample: " << r.counterexample << '\n';
      ok = false;
      break;
    }
  }
  out << (ok ? "result: pass" : "result: FAIL") << '\n';
  return ok ? exit_ok : exit_verify_failed;
}

} // namespace

std::string render_table(const Classification& c) {
  std::ostringstream os;
  os << "V(" << c.n << "," << c.params.a << "," << c.params.b << ")";
  if (!(c.requested == c.params))
    os << "  [bounds normalized from a=" << c.requested.a << ", b=" << c.requested.b << "]";
  os << '\n';
  if (c.n == 1) {
    os << "  point (outside n >= 2)\n    0  0\n";
    return os.str();
  }
  std::vector<const ComponentDescriptor*> reg, proj, inj;
  for (const auto& comp : c.components) {
    if (comp.kind == ComponentKind::regular) reg.push_back(&comp);
    else if (comp.side == ComponentSide::semi_projective) proj.push_back(&comp);
    else inj.push_back(&comp);
  }
  os << "  regular:" << (reg.empty() ? " none" : "") << '\n';
  print_rows(os, reg);
  os << "  semi-projective:" << (proj.empty() ? " none" : "") << '\n';
  print_rows(os, proj);
  os << "  semi-injective:" << (inj.empty() ? " none" : "") << '\n';
  print_rows(os, inj);
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducible components of V(n,a,b) = {(A,B) : AB = BA = A^a = B^b = 0}", "nilvar"};
  app.require_subcommand(1);

  int n = 0, a = 3, b = 3, max_n = 12;
  std::string format = "table", level = "quick", c1, c2, string_word, band_word;
  std::vector<std::string> lambdas;
  std::uint64_t seed = 1;
  const auto formats = CLI::IsMember({"json", "table"});
  auto bound = CLI::Range(2, 1000);

  auto* classify_cmd = app.add_subcommand("classify", "List the irreducible components");
  classify_cmd->add_option("--n", n, "Matrix size")->required()->check(CLI::Range(1, 1000));
  classify_cmd->add_option("--a", a, "Bound a with A^a = 0")->check(bound);
  classify_cmd->add_option("--b", b, "Bound b with B^b = 0")->check(bound);
  classify_cmd->add_option("--format", format)->check(formats);

  auto* tables_cmd = app.add_subcommand("tables", "Components for n = 2..max-n");
  tables_cmd->add_option("--a", a)->check(bound);
  tables_cmd->add_option("--b", b)->check(bound);
  tables_cmd->add_option("--max-n", max_n)->check(CLI::Range(2, 1000));
  tables_cmd->add_option("--format", format)->check(formats);

  auto* hom_cmd = app.add_subcommand("hom", "Graph-map basis of Hom(M(c1), M(c2))");
  hom_cmd->add_option("--c1", c1)->required();
  hom_cmd->add_option("--c2", c2)->required();
  hom_cmd->add_option("--a", a)->check(bound);
  hom_cmd->add_option("--b", b)->check(bound);

  auto* ext_cmd = app.add_subcommand("ext", "Whether Ext^1(M(c), M(d)) = 0 (semi-projective c, d)");
  ext_cmd->add_option("--c", c1)->required();
  ext_cmd->add_option("--d", c2)->required();
  ext_cmd->add_option("--a", a)->check(bound);
  ext_cmd->add_option("--b", b)->check(bound);

  auto* module_cmd = app.add_subcommand("module", "Matrices, Jordan pair and ranks of a module");
  auto* string_opt = module_cmd->add_option("--string", string_word, "String word");
  auto* band_opt = module_cmd->add_option("--band", band_word, "Band word");
  module_cmd->add_option("--lambda", lambdas, "Band parameters, comma separated")
      ->delimiter(',')
      ->needs(band_opt);
  string_opt->excludes(band_opt);
  module_cmd->add_option("--a", a)->check(bound);
  module_cmd->add_option("--b", b)->check(bound);

  auto* verify_cmd = app.add_subcommand("verify", "Run the self-verification suites");
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(n, a, b, format, out);
    if (tables_cmd->parsed()) return cmd_tables(a, b, max_n, format, out);
    if (hom_cmd->parsed()) return cmd_hom(c1, c2, a, b, out);
    if (ext_cmd->parsed()) return cmd_ext(c1, c2, a, b, out);
    if (module_cmd->parsed()) {
      if (string_opt->count() == 0 && band_opt->count() == 0) {
        err << "module: one of --string or --band is required\n";
        return exit_usage;
      }
      return cmd_module(string_word, band_word, lambdas, a, b, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(level, seed, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

} // namespace nilvar
