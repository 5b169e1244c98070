// chiro: exact workbench for the 13-point configurations X(s,t,u), their
// chirotopes and the connectivity structure of their realization regions.
// Exit codes: 0 pass, 1 violation found, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chiro/chirotope.hpp"
#include "chiro/classification.hpp"
#include "chiro/configuration.hpp"
#include "chiro/errors.hpp"
#include "chiro/identities.hpp"
#include "chiro/io.hpp"
#include "chiro/render.hpp"
#include "chiro/topology.hpp"

namespace {

using nlohmann::json;
using namespace chiro;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

ParamPoint parse_point(const std::string& s, const std::string& t, const std::string& u) {
  return {Rational::parse(s), Rational::parse(t), Rational::parse(u)};
}

Label parse_target(const std::string& name) {
  if (name == "minus") return Label::minus;
  if (name == "zero") return Label::zero;
  if (name == "plus") return Label::plus;
  if (name == "other") return Label::other;
  throw parse_error("unknown target '" + name + "' (expected minus|zero|plus|other)");
}

json point_json(const ParamPoint& p) {
  return json::array({p.s.str(), p.t.str(), p.u.str()});
}

json triples_json(const std::vector<Triple>& triples) {
  json arr = json::array();
  for (const Triple& t : triples) arr.push_back({t.i, t.j, t.k});
  return arr;
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

int run_axioms(const std::string& which) {
  const ReferenceChirotopes& refs = reference_chirotopes();
  const Chirotope& chi = which == "minus" ? refs.minus : which == "plus" ? refs.plus : refs.zero;

  const bool axiom1 = chi.not_identically_zero();
  const bool axiom2 = alternation_check(chi);
  const auto start = std::chrono::steady_clock::now();
  const Axiom3Report report = axiom3_check(chi);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);

  json first = json::array();
  for (std::size_t i = 0; i < report.violations.size() && i < 5; ++i) {
    const auto& v = report.violations[i];
    first.push_back({v[0], v[1], v[2], v[3], v[4], v[5]});
  }
  const bool pass = axiom1 && axiom2 && report.pass();
  emit({{"chirotope", which},
        {"axiom1", axiom1},
        {"axiom2", axiom2},
        {"axiom3", report.pass()},
        {"axiom3_violations", report.violations.size()},
        {"axiom3_first_violations", first},
        {"axiom3_seconds", elapsed.count()},
        {"pass", pass}});
  return pass ? kPass : kViolation;
}

int run_classify_point(const ParamPoint& p, bool fast) {
  const Label label = classify(p, fast ? ClassifyMode::fast : ClassifyMode::checked);
  const InequalityProfile profile = inequality_profile(p);
  const SheetMembership sheets = region_zero(p);
  emit({{"label", to_string(label)},
        {"D", profile.d.str()},
        {"s", p.s.str()},
        {"t", p.t.str()},
        {"u", p.u.str()},
        {"sheet_s", sheets.sheet_s},
        {"sheet_t", sheets.sheet_t},
        {"profile", json::parse(to_json(profile))}});
  return kPass;
}

int run_classify_batch(const std::string& path, bool fast) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw parse_error("cannot open batch file '" + path + "'");
    in = &file;
  }
  const ClassifyMode mode = fast ? ClassifyMode::fast : ClassifyMode::checked;
  std::cout << "s,t,u,label,D\n";
  std::string line;
  while (std::getline(*in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string s, t, u;
    if (!(ls >> s >> t >> u)) throw parse_error("batch line needs three rationals: '" + line + "'");
    const ParamPoint p = parse_point(s, t, u);
    const Label label = classify(p, mode);
    std::cout << p.s.str() << ',' << p.t.str() << ',' << p.u.str() << ','
              << to_string(label) << ',' << inequality_profile(p).d.str() << "\n";
  }
  return kPass;
}

int run_chirotope(const ParamPoint& p, bool csv) {
  const Chirotope chi = chirotope_of(closed_form(p));
  if (csv)
    std::cout << to_csv(chi);
  else
    std::cout << to_json(chi) << "\n";
  return kPass;
}

int run_identities() {
  json entries = json::array();
  bool pass = true;
  for (const ExpansionIdentity& id : expansion_identities()) {
    entries.push_back({{"name", id.name},
                       {"lhs", id.lhs.str()},
                       {"rhs", id.rhs.str()},
                       {"difference", (id.lhs - id.rhs).str()},
                       {"ok", id.equal()}});
    pass = pass && id.equal();
  }
  emit({{"identities", entries}, {"pass", pass}});
  return pass ? kPass : kViolation;
}

int run_det_table() {
  const DetTableReport report = symbolic_determinant_table();
  json entries = json::array();
  for (const DetTableEntry& e : report.entries) {
    entries.push_back({{"columns", e.columns},
                       {"expected", e.expected_str},
                       {"expected_poly", e.expected.str()},
                       {"computed", e.computed.str()},
                       {"match", e.match()}});
  }
  emit({{"entries", entries}, {"pass", report.pass()}});
  return report.pass() ? kPass : kViolation;
}

int run_agreement(const ParamPoint& p) {
  const AgreementReport report = agreement_check(p);
  json cols = json::array();
  for (const ColumnAgreement& c : report.columns) {
    cols.push_back({{"label", c.label},
                    {"proportional", c.proportional},
                    {"exact", c.exact},
                    {"lambda", c.lambda.str()}});
  }
  emit({{"point", point_json(p)},
        {"columns", cols},
        {"all_proportional", report.all_proportional},
        {"all_positive", report.all_positive},
        {"pass", report.pass()}});
  return report.pass() ? kPass : kViolation;
}

int run_components(const std::string& target, int resolution, bool fast) {
  const SampleGraph g = sample_grid({resolution}, parse_target(target),
                                    fast ? ClassifyMode::fast : ClassifyMode::checked);
  const ComponentSummary summary = connected_components(g);
  json reps = json::array();
  for (const LatticePoint& r : summary.representatives) reps.push_back(point_json(r.param(g.resolution)));
  emit({{"target", target},
        {"resolution", resolution},
        {"node_count", g.nodes.size()},
        {"edge_count", g.edges.size()},
        {"count", summary.count},
        {"sizes", summary.sizes},
        {"representatives", reps}});
  return kPass;
}

int run_separation(const std::string& target, int resolution, bool fast) {
  const SeparationCertificate cert = separation_witness(
      parse_target(target), resolution, fast ? ClassifyMode::fast : ClassifyMode::checked);
  emit({{"target", target},
        {"restricted_determinant", cert.restricted_determinant},
        {"symbolic_zero", cert.symbolic_zero},
        {"slice_resolution", cert.slice_resolution},
        {"slice_points", cert.slice_points},
        {"slice_hits", cert.slice_hits},
        {"low_side", point_json(cert.low_side)},
        {"low_side_label", to_string(cert.low_side_label)},
        {"high_side", point_json(cert.high_side)},
        {"high_side_label", to_string(cert.high_side_label)},
        {"pass", cert.pass()}});
  return cert.pass() ? kPass : kViolation;
}

json path_json(const std::vector<PathVertex>& vertices) {
  json arr = json::array();
  for (const PathVertex& v : vertices) {
    arr.push_back({{"point", point_json(v.p)},
                   {"sheet_s", v.on_sheet_s},
                   {"sheet_t", v.on_sheet_t},
                   {"label", to_string(v.label)}});
  }
  return arr;
}

int run_zero_sheets(int m, bool fast) {
  const ZeroSheetReport report =
      zero_sheet_samples(m, fast ? ClassifyMode::fast : ClassifyMode::checked);
  json sheet_s = json::array(), sheet_t = json::array();
  for (const ParamPoint& p : report.sheet_s_samples) sheet_s.push_back(point_json(p));
  for (const ParamPoint& p : report.sheet_t_samples) sheet_t.push_back(point_json(p));
  emit({{"m", report.m},
        {"sheet_s_count", report.sheet_s_samples.size()},
        {"sheet_t_count", report.sheet_t_samples.size()},
        {"sheet_s_samples", sheet_s},
        {"sheet_t_samples", sheet_t},
        {"samples_all_zero", report.samples_all_zero},
        {"path", path_json(report.path)},
        {"midpoints", path_json(report.midpoints)},
        {"path_all_zero", report.path_all_zero},
        {"midpoints_all_zero", report.midpoints_all_zero},
        {"pass", report.pass()}});
  return report.pass() ? kPass : kViolation;
}

int run_render(const ParamPoint& p, const std::string& out, RenderOptions options) {
  const Configuration<Rational> c = closed_form(p);
  const std::string svg = render_svg(c, options);

  std::ofstream file(out, std::ios::binary);
  if (!file) throw parse_error("cannot write '" + out + "'");
  file << svg;
  file.close();

  auto count = [&svg](const char* needle) {
    std::size_t n = 0;
    for (std::size_t pos = svg.find(needle); pos != std::string::npos;
         pos = svg.find(needle, pos + 1))
      ++n;
    return n;
  };
  emit({{"out", out},
        {"finite_points", count("<circle class=\"pt\"")},
        {"infinity_markers", count("<g class=\"inf\"")},
        {"lines", count("<line class=\"zt\"")},
        {"label", to_string(classify(p))}});
  return kPass;
}

int run_alt_base(const std::string& u_prime_text) {
  const Rational u_prime = Rational::parse(u_prime_text);
  const AltBaseReport report = alt_base_report(u_prime);
  emit({{"u_prime", report.u_prime.str()},
        {"excluded", report.excluded},
        {"equals_base", report.equals_base},
        {"sign_at_9_12_13", report.sign_at_9_12_13.to_int()},
        {"vanished", triples_json(report.vanished)},
        {"appeared", triples_json(report.appeared)},
        {"flipped", triples_json(report.flipped)}});
  if (report.excluded) {
    std::cerr << "error: u'=" << u_prime.str() << " is an excluded base parameter\n";
    return kUsage;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for the 13-point configurations X(s,t,u)"};
  app.require_subcommand(1);
  app.footer("Numeric arguments are exact rationals: 'p/q', 'p', or decimals with <= 12\n"
             "fractional digits. CHIRO_THREADS caps the worker threads of parallel passes.");

  int rc = kPass;

  // axioms
  std::string axioms_which;
  auto* axioms = app.add_subcommand("axioms", "Verify the three chirotope axioms");
  axioms->add_option("chirotope", axioms_which, "minus|zero|plus")
      ->required()
      ->check(CLI::IsMember({"minus", "zero", "plus"}));
  axioms->callback([&] { rc = run_axioms(axioms_which); });

  // classify
  std::vector<std::string> classify_args;
  std::string batch_path;
  bool classify_fast = false;
  auto* classify_cmd = app.add_subcommand("classify", "Label a parameter point (or a batch)");
  classify_cmd->add_option("stu", classify_args, "s t u as exact rationals");
  classify_cmd->add_option("--batch", batch_path,
                           "file of 'p/q p/q p/q' lines ('-' for stdin); writes CSV");
  classify_cmd->add_flag("--fast", classify_fast, "inequality route only");
  classify_cmd->callback([&] {
    if (!batch_path.empty()) {
      if (!classify_args.empty()) throw CLI::ValidationError("classify", "--batch takes no positional point");
      rc = run_classify_batch(batch_path, classify_fast);
    } else {
      if (classify_args.size() != 3) throw CLI::ValidationError("classify", "expected s t u");
      rc = run_classify_point(parse_point(classify_args[0], classify_args[1], classify_args[2]),
                              classify_fast);
    }
  });

  // chirotope
  std::vector<std::string> chirotope_args;
  bool chi_csv = false, chi_json = false;
  auto* chirotope_cmd = app.add_subcommand("chirotope", "All 286 triple signs of X(s,t,u)");
  chirotope_cmd->add_option("stu", chirotope_args, "s t u as exact rationals")
      ->expected(3)
      ->required();
  auto* csv_flag = chirotope_cmd->add_flag("--csv", chi_csv, "CSV rows i,j,k,sign");
  chirotope_cmd->add_flag("--json", chi_json, "JSON (default)")->excludes(csv_flag);
  chirotope_cmd->callback([&] {
    rc = run_chirotope(parse_point(chirotope_args[0], chirotope_args[1], chirotope_args[2]),
                       chi_csv);
  });

  // identities
  app.add_subcommand("identities", "Expand the three product identities over Poly3")
      ->callback([&] { rc = run_identities(); });

  // det-table
  app.add_subcommand("det-table", "Certify the ten symbolic determinant identities")
      ->callback([&] { rc = run_det_table(); });

  // agreement
  std::vector<std::string> agreement_args;
  auto* agreement_cmd =
      app.add_subcommand("agreement", "Compare construction sequence against the closed form");
  agreement_cmd->add_option("stu", agreement_args, "s t u as exact rationals")
      ->expected(3)
      ->required();
  agreement_cmd->callback([&] {
    rc = run_agreement(parse_point(agreement_args[0], agreement_args[1], agreement_args[2]));
  });

  // components
  std::string comp_target;
  int comp_resolution = 16;
  bool comp_fast = false;
  auto* components_cmd =
      app.add_subcommand("components", "Connected components of the sampled region");
  components_cmd->add_option("--target", comp_target, "minus|zero|plus|other")->required();
  components_cmd->add_option("--resolution", comp_resolution, "lattice resolution N")
      ->check(CLI::Range(2, 512));
  components_cmd->add_flag("--fast", comp_fast, "inequality route only");
  components_cmd->callback([&] { rc = run_components(comp_target, comp_resolution, comp_fast); });

  // separation
  std::string sep_target;
  int sep_resolution = 16;
  bool sep_fast = false;
  auto* separation_cmd =
      app.add_subcommand("separation", "Disconnection certificate across the slice s = 1/2");
  separation_cmd->add_option("--target", sep_target, "minus|plus")->required();
  separation_cmd->add_option("--resolution", sep_resolution, "even slice resolution")
      ->check(CLI::Range(2, 512));
  separation_cmd->add_flag("--fast", sep_fast, "inequality route only");
  separation_cmd->callback([&] { rc = run_separation(sep_target, sep_resolution, sep_fast); });

  // zero-sheets
  int sheets_m = 16;
  bool sheets_fast = false;
  auto* sheets_cmd =
      app.add_subcommand("zero-sheets", "Sample the two sheets of the zero region and connect them");
  sheets_cmd->add_option("--m", sheets_m, "sample resolution M")->check(CLI::Range(2, 512));
  sheets_cmd->add_flag("--fast", sheets_fast, "inequality route only");
  sheets_cmd->callback([&] { rc = run_zero_sheets(sheets_m, sheets_fast); });

  // render
  std::vector<std::string> render_args;
  std::string render_out;
  std::vector<std::string> viewport;
  RenderOptions render_options;
  bool no_lines = false, no_labels = false;
  std::string infinity = "arrow";
  auto* render_cmd = app.add_subcommand("render", "Write the affine image of X(s,t,u) as SVG");
  render_cmd->add_option("stu", render_args, "s t u as exact rationals")->expected(3)->required();
  render_cmd->add_option("--out", render_out, "output SVG path")->required();
  render_cmd->add_option("--viewport", viewport, "x_min x_max y_min y_max as rationals")
      ->expected(4);
  render_cmd->add_option("--width", render_options.width)->check(CLI::Range(16, 4096));
  render_cmd->add_option("--height", render_options.height)->check(CLI::Range(16, 4096));
  render_cmd->add_flag("--no-lines", no_lines, "skip collinearity lines");
  render_cmd->add_flag("--no-labels", no_labels, "skip point labels");
  render_cmd->add_option("--infinity", infinity, "arrow|omit")
      ->check(CLI::IsMember({"arrow", "omit"}));
  render_cmd->callback([&] {
    if (!viewport.empty()) {
      render_options.x_min = Rational::parse(viewport[0]);
      render_options.x_max = Rational::parse(viewport[1]);
      render_options.y_min = Rational::parse(viewport[2]);
      render_options.y_max = Rational::parse(viewport[3]);
    }
    render_options.draw_lines = !no_lines;
    render_options.label_points = !no_labels;
    render_options.infinity_style =
        infinity == "omit" ? InfinityStyle::omit : InfinityStyle::arrow_at_margin;
    rc = run_render(parse_point(render_args[0], render_args[1], render_args[2]), render_out,
                    render_options);
  });

  // alt-base
  std::string u_prime;
  auto* alt_cmd = app.add_subcommand("alt-base", "Chirotope of X(1/2,1/2,u') vs the base");
  alt_cmd->add_option("u_prime", u_prime, "u' as an exact rational")->required();
  alt_cmd->callback([&] { rc = run_alt_base(u_prime); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const excluded_parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const empty_viewport_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const internal_inconsistency_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return rc;
}
