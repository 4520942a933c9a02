#include "rootforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rootforge/coxplane.hpp"
#include "rootforge/errors.hpp"
#include "rootforge/induction.hpp"
#include "rootforge/io.hpp"
#include "rootforge/splitting.hpp"
#include "rootforge/verify.hpp"

namespace rootforge {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Caps {
  std::size_t closure = kDefaultClosureCap;
  std::size_t group = kDefaultGroupCap;
};

Caps read_caps() {
  Caps caps;
  const char* env = std::getenv("ROOTFORGE_CLOSURE_CAP");
  if (env == nullptr || *env == '\0') return caps;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0' || v == 0) throw UsageError("ROOTFORGE_CLOSURE_CAP must be a positive integer");
  caps.closure = caps.group = static_cast<std::size_t>(v);
  return caps;
}

std::vector<Multivector> simple_roots_for(const std::string& system) {
  if (system == "H3") return systems::h3_simple_roots();
  if (system == "A3") return systems::a3_simple_roots();
  if (system == "B3") return systems::b3_simple_roots();
  if (system == "A1A1A1") return systems::a1_cubed_simple_roots();
  throw UsageError("unknown system '" + system + "'");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
}

Json identification_json(const RootSystem& rs) {
  const Identification id = identify_unchecked(rs);
  Json j;
  j["name"] = id.name;
  j["root_count"] = rs.size();
  j["cartan"] = to_string(id.cartan);
  return j;
}

// Sub-system labels accepted on the command line.
const std::map<std::string, std::string>& sub_labels() {
  static const std::map<std::string, std::string> m{
      {"H2H2", "H2+H2"}, {"D4", "D4"}, {"A14", "A1^4"}, {"A2A2", "A2+A2"}, {"A4", "A4"}};
  return m;
}

int cmd_group(const std::string& system, const std::string& cover, bool classes, const std::string& format,
              const Caps& caps, std::ostream& out) {
  const auto roots = simple_roots_for(system);
  const VersorGroup g = cover == "pin" ? generate_pin(roots, caps.group) : generate_spin(roots, caps.group);
  std::vector<ConjugacyClass> cls;
  if (classes) cls = conjugacy_classes(g);
  if (format == "json") {
    Json j = to_json(g, cls);
    if (!classes) j.erase("classes");
    out << j.dump(2) << '\n';
    return 0;
  }
  if (classes) {
    out << group_table(g, cls);
  } else {
    out << "Order | Number | Element ×2 | Generator path\n";
    for (const auto& e : g.elements())
      out << element_order(e) << " | " << e.seq + 1 << " | " << to_string_x2(e.value) << " | " << path_string(e) << '\n';
  }
  out << "# " << (cover == "pin" ? "Pin(" : "Spin(") << system << ") has order " << g.order();
  if (classes) out << " and " << cls.size() << " conjugacy classes";
  out << '\n';
  return 0;
}

int cmd_induce(const std::string& system, std::optional<int> n, const std::string& format, const Caps& caps,
               std::ostream& out) {
  Json j;
  RootSystem induced;
  if (system == "A1I2n") {
    if (!n) throw UsageError("induce --system A1I2n requires --n");
    j["source"] = "A1+I2(" + std::to_string(*n) + ")";
    if (*n % 2 == 0) {
      RootSystem src;
      src.simple_roots = systems::a1_plus_i2_simple_roots(*n);
      const InductionResult r = induce(src, caps.group);
      j["method"] = "spin group";
      j["spinor_group_order"] = r.spinor_group.order();
      induced = r.induced;
    } else {
      // The A1 root orthogonal to an odd-n plane is not over the field; the
      // pseudoscalar plays its role and gives the same spinor group.
      const auto s = systems::i2_simple_roots(*n);
      j["method"] = "pseudoscalar doubling";
      induced = double_i2(s[0], s[1], caps.closure);
    }
  } else {
    if (n) throw UsageError("--n is only used with --system A1I2n");
    RootSystem src;
    src.simple_roots = simple_roots_for(system);
    const InductionResult r = induce(src, caps.group);
    j["source"] = system;
    j["method"] = "spin group";
    j["spinor_group_order"] = r.spinor_group.order();
    induced = r.induced;
  }
  if (format == "csv") {
    out << root_system_csv(induced);
    return 0;
  }
  const AxiomReport axioms = verify_axioms(induced);
  j["identification"] = identification_json(induced);
  j["axioms"] = axioms.ok();
  j["root_system"] = to_json(induced);
  out << j.dump(2) << '\n';
  return axioms.ok() ? 0 : 1;
}

int cmd_double(int n, const std::string& format, const Caps& caps, std::ostream& out) {
  const auto s = systems::i2_simple_roots(n);
  RootSystem rs = double_i2(s[0], s[1], caps.closure);
  const Multivector i = Multivector::pseudoscalar();
  rs.simple_roots = {s[0] * s[0], s[0] * s[1], s[0] * i, s[1] * i};
  if (format == "csv") {
    out << root_system_csv(rs);
    return 0;
  }
  Json j;
  j["n"] = n;
  j["identification"] = identification_json(rs);
  j["cartan"] = to_string(cartan_matrix(Ambient::Dim4Spinor, rs.simple_roots));
  j["axioms"] = verify_axioms(rs).ok();
  j["root_system"] = to_json(rs);
  out << j.dump(2) << '\n';
  return j["axioms"].get<bool>() ? 0 : 1;
}

int cmd_split(const std::string& sub_name, const std::string& format, const std::string& edges_path,
              const Caps& caps, std::ostream& out) {
  const RootSystem h4 = h4_root_system(caps.group);
  const RootSystem sub = named_subsystem(sub_labels().at(sub_name), caps.closure);
  auto [inside, outside] = split(h4, sub);
  inside.label = sub_name;
  outside.label = sub_name + " complement";
  const EdgeSet ei = edges(inside);
  const EdgeSet eo = edges(outside);
  const bool invariant = verify_invariance(inside, sub) && verify_invariance(outside, sub);
  if (!edges_path.empty()) {
    std::ostringstream os;
    os << "set,i,j\n";
    for (const auto& [a, b] : ei.edges) os << "sub," << a << ',' << b << '\n';
    for (const auto& [a, b] : eo.edges) os << "complement," << a << ',' << b << '\n';
    emit(os.str(), edges_path, out);
  }
  if (format == "csv") {
    std::ostringstream os;
    os << std::setprecision(17) << "set,index,x1,x2,x3,x4\n";
    for (const auto* vs : {&inside, &outside}) {
      for (std::size_t k = 0; k < vs->size(); ++k) {
        os << (vs == &inside ? "sub" : "complement") << ',' << k;
        for (const auto& c : coordinates(Ambient::Dim4Spinor, vs->vertices[k])) os << ',' << to_float(c);
        os << '\n';
      }
    }
    out << os.str();
  } else {
    Json j;
    j["sub"] = to_json(inside, ei);
    j["complement"] = to_json(outside, eo);
    j["invariance"] = invariant;
    out << j.dump(2) << '\n';
  }
  return invariant ? 0 : 1;
}

int cmd_coxplane(const std::string& set, const std::string& format, const std::string& output, const Caps& caps,
                 std::ostream& out) {
  const RootSystem h4 = h4_root_system(caps.group);
  VertexSet vs{h4.roots, "600-cell"};
  if (set != "600cell") {
    std::string key = set;
    bool complement = false;
    if (set == "GA") {
      key = "H2H2";
      complement = true;
    } else if (set == "snub") {
      key = "D4";
      complement = true;
    } else if (set.size() > 1 && set.back() == 'c') {
      key = set.substr(0, set.size() - 1);
      complement = true;
    }
    const auto it = sub_labels().find(key);
    if (it == sub_labels().end()) throw UsageError("unknown set '" + set + "'");
    auto [inside, outside] = split(h4, named_subsystem(it->second, caps.closure));
    vs = complement ? outside : inside;
  }
  vs.label = set;
  const ProjectionPlane plane = h4_coxeter_plane();
  const auto pts = project(plane, vs.vertices);
  if (format == "svg") {
    emit(render_svg(pts, edges(vs).edges, set + " in the H4 Coxeter plane"), output, out);
  } else {
    emit(render_csv(pts), output, out);
  }
  return 0;
}

int cmd_verify(const std::string& input, std::ostream& out) {
  VerifyReport report;
  if (input.empty()) {
    report = run_verification();
  } else {
    std::ifstream f(input);
    if (!f) throw UsageError("cannot read '" + input + "'");
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    // Accept a bare root system or the output of induce/double.
    report = verify_root_system(root_system_from_json(j.contains("root_system") ? j.at("root_system") : j));
  }
  out << report.text();
  return report.ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clifford-algebra root systems: Pin/Spin groups, induction, splits and Coxeter planes",
               "rootforge"};
  app.require_subcommand(1);

  std::string system, cover = "spin", format, output, sub, set, input, edges_path;
  bool classes = false;
  int n = 0;

  auto* group = app.add_subcommand("group", "Pin or Spin group of a 3D root system");
  group->add_option("--system", system, "Root system")->required()->check(CLI::IsMember({"H3", "A3", "B3", "A1A1A1"}));
  group->add_option("--cover", cover, "Double cover")->check(CLI::IsMember({"pin", "spin"}))->capture_default_str();
  group->add_flag("--classes", classes, "Group the elements by conjugacy class");
  group->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  auto* induce_cmd = app.add_subcommand("induce", "Induce a 4D root system from a 3D one");
  induce_cmd->add_option("--system", system, "Root system")
      ->required()
      ->check(CLI::IsMember({"H3", "A3", "B3", "A1A1A1", "A1I2n"}));
  auto* n_opt = induce_cmd->add_option("--n", n, "n for A1I2n")->check(CLI::IsMember({2, 3, 4, 5}));
  induce_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* double_cmd = app.add_subcommand("double", "I2(n)+I2(n) from I2(n) and the pseudoscalar");
  double_cmd->add_option("--n", n, "n in 2..5")->required()->check(CLI::IsMember({2, 3, 4, 5}));
  double_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* split_cmd = app.add_subcommand("split", "Split the 600-cell into a subsystem and its complement");
  split_cmd->add_option("--sub", sub, "Subsystem")->required()->check(CLI::IsMember({"H2H2", "D4", "A14", "A2A2", "A4"}));
  split_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  split_cmd->add_option("--edges-csv", edges_path, "Also write both edge lists as CSV to this file");

  auto* cox = app.add_subcommand("coxplane", "Project a vertex set into the H4 Coxeter plane");
  cox->add_option("--set", set, "Vertex set")
      ->required()
      ->check(CLI::IsMember({"600cell", "GA", "snub", "H2H2", "D4", "A14", "A14c", "A2A2", "A2A2c", "A4", "A4c"}));
  cox->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "svg"}));
  cox->add_option("--output", output, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite, or check a root system JSON file");
  verify_cmd->add_option("--input", input, "Root system JSON to verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Caps caps = read_caps();
    if (*group) return cmd_group(system, cover, classes, format.empty() ? "table" : format, caps, out);
    if (*induce_cmd)
      return cmd_induce(system, n_opt->count() ? std::optional<int>(n) : std::nullopt, format.empty() ? "json" : format,
                        caps, out);
    if (*double_cmd) return cmd_double(n, format.empty() ? "json" : format, caps, out);
    if (*split_cmd) return cmd_split(sub, format.empty() ? "json" : format, edges_path, caps, out);
    if (*cox) return cmd_coxplane(set, format.empty() ? "csv" : format, output, caps, out);
    if (*verify_cmd) return cmd_verify(input, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace rootforge
