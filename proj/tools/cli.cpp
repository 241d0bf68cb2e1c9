// Command-line surface.  Every subcommand reads and writes envelope documents
// (see hlf/json_io.hpp) so that outputs can be fed back in as inputs; the only
// non-JSON output is `chart dot`.  Exit codes: 0 success, 1 semantic failure
// (invalid chart, failed verification, violated hypothesis), 2 malformed
// input (unreadable file, bad JSON, schema mismatch, usage error).

#include "cli.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hlf/chart.hpp"
#include "hlf/json_io.hpp"
#include "hlf/stabilizer.hpp"

namespace hlf {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Loads a document and insists on one payload kind.  A mismatched kind is a
// schema-level problem, so it shares the ParseError exit class.
template <typename Payload>
Payload load_as(const std::string& path, const std::string& want) {
  const Document doc = parse_document(slurp(path));
  if (const Payload* payload = std::get_if<Payload>(&doc.payload)) return *payload;
  throw ParseError(path + ": expected a " + want + " document, got " +
                   document_kind(doc));
}

HurwitzSystem load_system(const std::string& path) {
  return load_as<HurwitzSystem>(path, "system");
}

MoveCertificate load_certificate(const std::string& path) {
  return load_as<MoveCertificate>(path, "certificate");
}

Chart load_chart(const std::string& path) { return load_as<Chart>(path, "chart"); }

std::string report_text(nlohmann::json body) {
  Document doc;
  doc.payload = ReportPayload{std::move(body)};
  return serialize_document(doc);
}

std::string system_text(const HurwitzSystem& sys) {
  Document doc;
  doc.payload = sys;
  return serialize_document(doc);
}

std::string certificate_text(const MoveCertificate& cert) {
  Document doc;
  doc.payload = cert;
  return serialize_document(doc);
}

std::string chart_text(const Chart& chart) {
  Document doc;
  doc.payload = chart;
  return serialize_document(doc);
}

nlohmann::json counts_body(const FiberCounts& counts) {
  return {{"n0_pos", counts.n0_pos},
          {"n0_neg", counts.n0_neg},
          {"nh_pos", counts.nh_pos},
          {"nh_neg", counts.nh_neg}};
}

const std::vector<MoveKind>& all_move_kinds() {
  static const std::vector<MoveKind> kinds = {
      MoveKind::H1,         MoveKind::H1inv,      MoveKind::H2,
      MoveKind::H2inv,      MoveKind::H3,         MoveKind::H3inv,
      MoveKind::SlideRight, MoveKind::SlideLeft,  MoveKind::CyclicLeft,
      MoveKind::CyclicRight, MoveKind::ExpandSigma, MoveKind::ContractSigma};
  return kinds;
}

MoveKind move_kind_from_name(const std::string& name) {
  for (MoveKind kind : all_move_kinds())
    if (to_string(kind) == name) return kind;
  throw ParseError("unknown move kind: " + name);
}

// ---------------------------------------------------------------------------
// Subcommand bodies.  Each returns the process exit code and appends its
// primary output to `out`; diagnostic text goes to `err`.

int run_counts(const std::string& file, std::string& out) {
  const HurwitzSystem sys = load_system(file);
  nlohmann::json body = counts_body(count_entries(sys));
  body["chiral"] = is_chiral(sys);
  body["irreducible"] = is_irreducible(sys);
  out += report_text(std::move(body));
  return 0;
}

int run_invariant(const std::string& file, std::string& out) {
  const HurwitzSystem sys = load_system(file);
  const long long e = euler_invariant(sys);
  out += report_text({{"E", e}, {"divisible", euler_divisibility_ok(Genus(sys.g), e)}});
  return 0;
}

int run_normalize(const std::string& file, std::string& out) {
  const HurwitzSystem sys = load_system(file);
  const NormalFormResult result = normal_form(Genus(sys.g), count_entries(sys));
  nlohmann::json options = nlohmann::json::array();
  for (const NormalFormOption& option : result.options)
    options.push_back({{"a", option.a}, {"b", option.b}});
  out += report_text({{"E", result.e_invariant},
                      {"b_options", std::move(options)},
                      {"c", result.c},
                      {"d", result.d},
                      {"e", result.e_pairs},
                      {"m0", result.m0 ? nlohmann::json(*result.m0)
                                       : nlohmann::json(nullptr)}});
  return 0;
}

int run_basic(const std::string& name, int g, int h, std::string& out) {
  const Genus genus(g);
  HurwitzSystem sys;
  if (name == "type1") sys = basic_type1(genus);
  else if (name == "type1-big") sys = basic_type1_big(genus);
  else if (name == "type2") sys = basic_type2(genus, h);
  else if (name == "pair-zeta") sys = basic_pair_zeta(genus);
  else if (name == "pair-sigma") sys = basic_pair_sigma(genus, h);
  else sys = basic_type2_expanded(genus, h);
  out += system_text(sys);
  return 0;
}

int run_sum(const std::vector<std::string>& files, std::string& out) {
  HurwitzSystem total = load_system(files.front());
  for (std::size_t i = 1; i < files.size(); ++i)
    total = fiber_sum(total, load_system(files[i]));
  out += system_text(total);
  return 0;
}

int run_move(const std::string& file, const Move& move, std::string& out) {
  out += system_text(apply_move(load_system(file), move));
  return 0;
}

int run_derive(int g, int h, long long budget, std::string& out) {
  out += certificate_text(derive_type2_certificate(Genus(g), h, budget));
  return 0;
}

int run_verify(const std::string& file, std::string& out, std::string& err) {
  const VerifyResult result = verify_certificate(load_certificate(file));
  if (result.ok) {
    out += report_text({{"ok", true}});
    return 0;
  }
  out += report_text({{"ok", false},
                      {"failing_step", result.failing_step},
                      {"message", result.message}});
  err += result.message + "\n";
  return 1;
}

int run_search(const std::string& file_a, const std::string& file_b,
               long long budget, bool cyclic, std::string& out, std::string& err) {
  const SearchOutcome outcome =
      search_equivalence(load_system(file_a), load_system(file_b), budget, cyclic);
  if (!outcome.found) {
    err += "no certificate found (expanded " + std::to_string(outcome.expanded) +
           " states)\n";
    return 1;
  }
  out += certificate_text(outcome.certificate);
  return 0;
}

int run_rep(const std::string& file, const std::string& kind, std::string& out) {
  const HurwitzSystem sys = load_system(file);
  const Genus genus(sys.g);
  if (kind == "perm") {
    const Perm total = perm_total(sys);
    std::vector<int> image;
    for (int p : total.image) image.push_back(p + 1);  // report 1-based points
    std::vector<Perm> entry_images;
    for (const FactorEntry& entry : sys.entries)
      entry_images.push_back(perm_image(genus, entry_word(entry)));
    out += report_text(
        {{"kind", "perm"},
         {"degree", genus.point_count()},
         {"image", image},
         {"is_identity", total.is_identity()},
         {"transitive",
          generates_transitive_action(genus.point_count(), entry_images)}});
    return 0;
  }
  const IntMat total = symp_total(sys);
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < total.n; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < total.n; ++c) row.push_back(total.at(r, c).str());
    rows.push_back(std::move(row));
  }
  out += report_text({{"kind", "symp"},
                      {"size", total.n},
                      {"matrix", std::move(rows)},
                      {"is_identity", total.is_identity()},
                      {"is_negated_identity", total.is_negated_identity()}});
  return 0;
}

int run_relations(int g, std::string& out, std::string& err) {
  const std::vector<RelationCheck> checks = check_relations(Genus(g));
  nlohmann::json rows = nlohmann::json::array();
  for (const RelationCheck& check : checks)
    rows.push_back({{"name", check.name},
                    {"perm_ok", check.perm_ok},
                    {"symp_ok", check.symp_ok}});
  const bool ok = all_relations_hold(checks);
  out += report_text({{"genus", g}, {"relations", std::move(rows)}, {"all_hold", ok}});
  if (!ok) err += "some relations fail\n";
  return ok ? 0 : 1;
}

int run_chart_validate(const std::string& file, std::string& out, std::string& err) {
  const ChartReport report = validate_chart(load_chart(file));
  out += report_text(
      {{"ok", report.ok}, {"problems", report.problems}, {"notes", report.notes}});
  if (!report.ok) {
    err += "chart is not valid (" + std::to_string(report.problems.size()) +
           " problem" + (report.problems.size() == 1 ? "" : "s") + ")\n";
    return 1;
  }
  return 0;
}

int run_chart_census(const std::string& file, std::string& out) {
  out += report_text(counts_body(chart_census(load_chart(file))));
  return 0;
}

int run_chart_compile(const std::string& file, const std::string& capping,
                      std::string& out) {
  const StartCapping mode = capping == "nucleons-at-start"
                                ? StartCapping::NucleonsAtStart
                                : StartCapping::BlackBoth;
  out += chart_text(compile_certificate(load_certificate(file), mode));
  return 0;
}

int run_chart_dot(const std::string& file, std::string& out) {
  out += to_dot(load_chart(file));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
  CLI::App app{"hyperelliptic Lefschetz fibration toolkit: factorization systems, "
               "move certificates, and charts"};
  app.require_subcommand(1);

  std::string counts_file;
  CLI::App* counts_cmd =
      app.add_subcommand("counts", "tally singular-fiber types of a system");
  counts_cmd->add_option("file", counts_file, "system document")->required();

  std::string invariant_file;
  CLI::App* invariant_cmd =
      app.add_subcommand("invariant", "Euler-style invariant E and divisibility");
  invariant_cmd->add_option("file", invariant_file, "system document")->required();

  std::string normalize_file;
  CLI::App* normalize_cmd =
      app.add_subcommand("normalize", "signature normal form of a system's counts");
  normalize_cmd->add_option("file", normalize_file, "system document")->required();

  std::string basic_name;
  int basic_genus = 0;
  int basic_h = 1;
  CLI::App* basic_cmd = app.add_subcommand("basic", "emit a basic system");
  // `--h` is the conventional name for the separating index, so move the help
  // flag out of its way on the subcommands that take it.
  basic_cmd->set_help_flag("--help", "print help and exit");
  basic_cmd
      ->add_option("name", basic_name,
                   "one of type1, type1-big, type2, pair-zeta, pair-sigma, "
                   "type2-expanded")
      ->required()
      ->check(CLI::IsMember({"type1", "type1-big", "type2", "pair-zeta",
                             "pair-sigma", "type2-expanded"}));
  basic_cmd->add_option("--genus", basic_genus, "fiber genus")->required();
  basic_cmd->add_option("--h", basic_h, "separating index (sigma family only)");

  std::vector<std::string> sum_files;
  CLI::App* sum_cmd = app.add_subcommand("sum", "fiber sum of systems");
  sum_cmd->add_option("files", sum_files, "system documents")->expected(2, -1);

  std::string move_file;
  std::string move_kind;
  Move move;
  CLI::App* move_cmd = app.add_subcommand("move", "apply one elementary move");
  move_cmd->set_help_flag("--help", "print help and exit");
  move_cmd->add_option("file", move_file, "system document")->required();
  move_cmd->add_option("--kind", move_kind, "move kind")
      ->required()
      ->check(CLI::IsMember({"H1", "H1inv", "H2", "H2inv", "H3", "H3inv",
                             "SlideRight", "SlideLeft", "CyclicLeft",
                             "CyclicRight", "ExpandSigma", "ContractSigma"}));
  move_cmd->add_option("--pos", move.pos, "position")->required();
  move_cmd->add_option("--i", move.i, "first index parameter");
  move_cmd->add_option("--j", move.j, "second index parameter");
  move_cmd->add_option("--h", move.h, "separating index parameter");

  int derive_genus = 0;
  int derive_h = 0;
  long long derive_budget = kDefaultRewriteBudget;
  CLI::App* derive_cmd = app.add_subcommand(
      "derive-w2h", "certificate from copies of type I to expanded type II");
  derive_cmd->set_help_flag("--help", "print help and exit");
  derive_cmd->add_option("--genus", derive_genus, "fiber genus")->required();
  derive_cmd->add_option("--h", derive_h, "separating index")->required();
  derive_cmd->add_option("--budget", derive_budget, "rewrite step budget");

  std::string verify_file;
  CLI::App* verify_cmd = app.add_subcommand("verify", "replay a move certificate");
  verify_cmd->add_option("file", verify_file, "certificate document")->required();

  std::string search_a;
  std::string search_b;
  long long search_budget = kDefaultSearchBudget;
  bool search_cyclic = false;
  CLI::App* search_cmd =
      app.add_subcommand("search", "search for a move certificate between systems");
  search_cmd->add_option("first", search_a, "system document")->required();
  search_cmd->add_option("second", search_b, "system document")->required();
  search_cmd->add_option("--budget", search_budget, "states to expand");
  search_cmd->add_flag("--cyclic", search_cyclic, "allow cyclic rotations");

  std::string rep_file;
  std::string rep_kind;
  CLI::App* rep_cmd =
      app.add_subcommand("rep", "representation image of the total monodromy");
  rep_cmd->add_option("file", rep_file, "system document")->required();
  rep_cmd->add_option("--kind", rep_kind, "perm or symp")
      ->required()
      ->check(CLI::IsMember({"perm", "symp"}));

  int relations_genus = 0;
  CLI::App* relations_cmd =
      app.add_subcommand("relations", "check the defining relations at a genus");
  relations_cmd->add_option("--genus", relations_genus, "fiber genus")->required();

  CLI::App* chart_cmd = app.add_subcommand("chart", "chart operations");
  chart_cmd->require_subcommand(1);

  std::string chart_validate_file;
  CLI::App* chart_validate_cmd =
      chart_cmd->add_subcommand("validate", "check chart well-formedness");
  chart_validate_cmd->add_option("file", chart_validate_file, "chart document")
      ->required();

  std::string chart_census_file;
  CLI::App* chart_census_cmd =
      chart_cmd->add_subcommand("census", "black-vertex census of a chart");
  chart_census_cmd->add_option("file", chart_census_file, "chart document")
      ->required();

  std::string chart_compile_file;
  std::string chart_capping = "black-both";
  CLI::App* chart_compile_cmd =
      chart_cmd->add_subcommand("compile", "compile a certificate into a chart");
  chart_compile_cmd->add_option("file", chart_compile_file, "certificate document")
      ->required();
  chart_compile_cmd
      ->add_option("--capping", chart_capping, "start capping style")
      ->check(CLI::IsMember({"black-both", "nucleons-at-start"}));

  std::string chart_dot_file;
  CLI::App* chart_dot_cmd = chart_cmd->add_subcommand("dot", "DOT export");
  chart_dot_cmd->add_option("file", chart_dot_file, "chart document")->required();

  std::vector<const char*> argv;
  argv.push_back("hlf");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out += app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out += app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err += std::string(e.what()) + "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(counts_cmd)) return run_counts(counts_file, out);
    if (app.got_subcommand(invariant_cmd)) return run_invariant(invariant_file, out);
    if (app.got_subcommand(normalize_cmd)) return run_normalize(normalize_file, out);
    if (app.got_subcommand(basic_cmd))
      return run_basic(basic_name, basic_genus, basic_h, out);
    if (app.got_subcommand(sum_cmd)) return run_sum(sum_files, out);
    if (app.got_subcommand(move_cmd)) {
      move.kind = move_kind_from_name(move_kind);
      return run_move(move_file, move, out);
    }
    if (app.got_subcommand(derive_cmd))
      return run_derive(derive_genus, derive_h, derive_budget, out);
    if (app.got_subcommand(verify_cmd)) return run_verify(verify_file, out, err);
    if (app.got_subcommand(search_cmd))
      return run_search(search_a, search_b, search_budget, search_cyclic, out, err);
    if (app.got_subcommand(rep_cmd)) return run_rep(rep_file, rep_kind, out);
    if (app.got_subcommand(relations_cmd))
      return run_relations(relations_genus, out, err);
    if (chart_cmd->got_subcommand(chart_validate_cmd))
      return run_chart_validate(chart_validate_file, out, err);
    if (chart_cmd->got_subcommand(chart_census_cmd))
      return run_chart_census(chart_census_file, out);
    if (chart_cmd->got_subcommand(chart_compile_cmd))
      return run_chart_compile(chart_compile_file, chart_capping, out);
    return run_chart_dot(chart_dot_file, out);
  } catch (const ParseError& e) {
    err += std::string(e.what()) + "\n";
    return 2;
  } catch (const std::exception& e) {
    err += std::string(e.what()) + "\n";
    return 1;
  }
}

}  // namespace hlf
