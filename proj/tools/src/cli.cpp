#include "qlcft_cli/cli.hpp"

#include "qlcft/dot.hpp"
#include "qlcft/error.hpp"
#include "qlcft/json_io.hpp"
#include "qlcft/norm.hpp"
#include "qlcft/oracle/verify.hpp"
#include "qlcft/units.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace qlcft::cli {
namespace {

struct Options {
  std::string spec_path;
  std::string in;
  std::string out_path;
  std::string format = "json";
  std::string filter = "all";
  std::string theorem = "all";
  std::string op;
  std::int64_t max_degree = 0;
  std::int64_t pair_degree = 0;
  std::int64_t n = 0;
  std::uint64_t budget = 0;
  bool no_timing = false;
};

// Output of one command: JSON, or preformatted text (DOT).
struct Result {
  Json json;
  std::string text;
  bool raw = false;
  int code = 0;

  Result() = default;
  Result(Json j, int c = 0) : json(std::move(j)), code(c) {}
};

class UsageError : public Error {
public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --in accepts inline JSON or a path.
Json input_json(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required for this command");
  const auto first = o.in.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (o.in[first] == '{' || o.in[first] == '['))
    return parse_json(o.in);
  return parse_json(read_file(o.in));
}

std::pair<Json, Json> input_pair(const Options& o) {
  const Json j = input_json(o);
  if (!j.is_array() || j.size() != 2) throw ValidationError("--in must be a JSON array of two values");
  return {j[0], j[1]};
}

std::int64_t require_positive(std::int64_t v, const char* flag) {
  if (v < 1) throw UsageError(std::string(flag) + " must be given as a positive integer");
  return v;
}

ExtensionFilter parse_filter(const std::string& s) {
  if (s == "all") return ExtensionFilter::All;
  if (s == "class-fields") return ExtensionFilter::ClassFields;
  throw UsageError("unknown filter \"" + s + "\" (expected all or class-fields)");
}

Json galois_json(const GaloisStructure& g) {
  return Json{{"abelian_part", to_json(g.abelian_part)}, {"inversion", g.inversion_extension}};
}

Json brauer_json(const BrauerDescriptor& b) {
  const char* kind = b.kind == BrauerDescriptor::Kind::ExponentAtMostTwo ? "exponent_at_most_two"
                                                                        : "quasicyclic_sum";
  return Json{{"kind", kind}, {"support", b.support}};
}

Result describe(const FieldSpec& spec, const Options& o) {
  if (o.n == 0)
    return {Json{{"pi", spec.pi()}, {"pi1", spec.pi1()}, {"pi2", spec.pi2()}, {"sql", is_strictly_quasilocal(spec)}}};
  const std::int64_t n = require_positive(o.n, "--n");
  const AdmissiblePair pair = greatest_admissible_pair(spec, n);
  return {Json{{"nE", pair.n_e},
               {"nE1", pair.n_e1},
               {"shape", to_json(unit_quotient_shape(spec, n))},
               {"sql", is_strictly_quasilocal(spec)}}};
}

Result ext_command(const FieldSpec& spec, const Options& o) {
  const std::string& op = o.op;
  if (op == "compositum" || op == "intersect" || op == "embeds") {
    const auto [jx, jy] = input_pair(o);
    const FiniteExtension x = extension_from_json(spec, jx), y = extension_from_json(spec, jy);
    if (op == "compositum") return {to_json(compositum(spec, x, y))};
    if (op == "intersect") return {to_json(intersect(x, y))};
    return {Json{{"embeds", embeds(x, y)}}};
  }
  const FiniteExtension x = extension_from_json(spec, input_json(o));
  if (op == "degree") return {Json{{"degree", degree(x)}}};
  if (op == "normal") return {Json{{"normal", is_normal(x)}}};
  if (op == "closure") return {to_json(normal_closure(x))};
  if (op == "odd-part") return {to_json(odd_part(x))};
  if (op == "adjoin-i") return {to_json(adjoin_i(x))};
  if (op == "galois-shape") return {galois_json(galois_shape(x))};
  if (op == "sigma-class") return {Json{{"sigma_class", to_string(sigma_class(spec, x))}}};
  return {brauer_json(brauer_descriptor(spec, x))}; // "brauer"
}

Json correspondence(const FieldSpec& spec, const Json& input, const NormSubgroup& u) {
  return Json{{"input", input},
              {"norm_group", to_json(u)},
              {"index", index(spec, u)},
              {"quotient_shape", to_json(quotient_shape(spec, u))},
              {"class_field", to_json(class_field_of(spec, u))}};
}

Result norm_command(const FieldSpec& spec, const Options& o) {
  const std::string& op = o.op;
  const Json in = input_json(o);
  if (op == "compute") return {correspondence(spec, in, norm_group(spec, extension_from_json(spec, in)))};
  if (op == "cl") return {to_json(cl_of(spec, extension_from_json(spec, in)))};
  const NormSubgroup u = norm_subgroup_from_json(spec, in);
  if (op == "index") return {Json{{"index", index(spec, u)}}};
  if (op == "quotient") return {Json{{"quotient_shape", to_json(quotient_shape(spec, u))}}};
  return {to_json(class_field_of(spec, u))}; // "class-field"
}

Result enumerate_command(const FieldSpec& spec, const Options& o) {
  if (o.op == "extensions") {
    Json out = Json::array();
    for (const auto& x : enumerate_extensions(spec, require_positive(o.max_degree, "--max-degree"),
                                              parse_filter(o.filter)))
      out.push_back(to_json(x));
    return {out};
  }
  const std::int64_t n = require_positive(o.n, "--n");
  const NormGroupsOfIndex found = norm_groups_of_index(spec, n);
  Json groups = Json::array();
  for (const auto& g : found.groups) groups.push_back(to_json(g));
  Json out{{"index", n}, {"groups", groups}};
  if (found.reason) out["reason"] = *found.reason;
  return {out};
}

Result verify_command(const FieldSpec& spec, const Options& o) {
  oracle::VerifyBounds bounds;
  if (o.max_degree) bounds.max_degree = require_positive(o.max_degree, "--max-degree");
  if (o.pair_degree) bounds.pair_degree = require_positive(o.pair_degree, "--pair-degree");
  if (o.n) bounds.n_base = require_positive(o.n, "--n");
  if (o.budget) bounds.budget = o.budget;
  const bool timing = !o.no_timing;
  if (o.theorem == "all") {
    Json reports = Json::array();
    bool pass = true;
    for (const auto& r : oracle::verify_all(spec, bounds)) {
      pass = pass && r.pass;
      reports.push_back(oracle::to_json(r, timing));
    }
    return {Json{{"pass", pass}, {"reports", reports}}, pass ? 0 : 1};
  }
  const auto id = oracle::theorem_from_string(o.theorem);
  if (!id) throw UsageError("unknown theorem id \"" + o.theorem + "\"");
  const auto r = oracle::verify(spec, *id, bounds);
  return {oracle::to_json(r, timing), r.pass ? 0 : 1};
}

Result lattice_command(const FieldSpec& spec, const Options& o) {
  Result r;
  r.raw = true;
  r.text = emit_lattice(spec, require_positive(o.max_degree, "--max-degree"), parse_filter(o.filter));
  return r;
}

// Human-readable rendering: one "key: value" line per object member.
std::string as_text(const Json& j) {
  std::ostringstream out;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  } else if (j.is_array()) {
    for (const auto& v : j) out << v.dump() << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return out.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form Galois lattice and norm-subgroup computations", "qlcft"};
  app.set_version_flag("--version", "qlcft 0.1.0");
  app.require_subcommand(1);
  Options o;

  auto spec_flags = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec_path, "field spec JSON file")->required();
    sub->add_option("--out", o.out_path, "write output to this file");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text", "dot"}));
  };

  CLI::App* describe_cmd = app.add_subcommand("describe", "closed-form invariants of the field");
  spec_flags(describe_cmd);
  describe_cmd->add_option("--n", o.n, "exponent for E*/E*^n");

  CLI::App* ext_cmd = app.add_subcommand("ext", "operations on extension classes");
  spec_flags(ext_cmd);
  ext_cmd->add_option("op", o.op)
      ->required()
      ->check(CLI::IsMember({"degree", "normal", "closure", "odd-part", "galois-shape", "adjoin-i",
                             "sigma-class", "brauer", "compositum", "intersect", "embeds"}));
  ext_cmd->add_option("--in", o.in, "extension JSON (inline or path); binary ops take an array of two");

  CLI::App* norm_cmd = app.add_subcommand("norm", "norm subgroups, indices and class fields");
  spec_flags(norm_cmd);
  norm_cmd->add_option("op", o.op)
      ->required()
      ->check(CLI::IsMember({"compute", "index", "quotient", "class-field", "cl"}));
  norm_cmd->add_option("--in", o.in, "extension or norm subgroup JSON (inline or path)");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list extension classes or norm subgroups");
  spec_flags(enum_cmd);
  enum_cmd->add_option("op", o.op)->required()->check(CLI::IsMember({"extensions", "norm-groups"}));
  enum_cmd->add_option("--max-degree", o.max_degree);
  enum_cmd->add_option("--n", o.n, "index for norm-groups");
  enum_cmd->add_option("--filter", o.filter, "all or class-fields");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run oracle verification sweeps");
  spec_flags(verify_cmd);
  verify_cmd->add_option("--theorem", o.theorem, "theorem id or all");
  verify_cmd->add_option("--max-degree", o.max_degree);
  verify_cmd->add_option("--pair-degree", o.pair_degree);
  verify_cmd->add_option("--n", o.n, "power quotients are checked for every divisor of this");
  verify_cmd->add_option("--budget", o.budget, "subgroup enumeration budget");
  verify_cmd->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0");

  CLI::App* lattice_cmd = app.add_subcommand("lattice", "extension lattice as Graphviz DOT");
  spec_flags(lattice_cmd);
  lattice_cmd->add_option("--max-degree", o.max_degree);
  lattice_cmd->add_option("--filter", o.filter, "all or class-fields");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    // --help and --version
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (o.format == "dot" && name != "lattice") throw UsageError("--format dot is only valid for lattice");
    const FieldSpec spec = field_spec_from_json(parse_json(read_file(o.spec_path)));

    Result r;
    if (name == "describe") r = describe(spec, o);
    else if (name == "ext") r = ext_command(spec, o);
    else if (name == "norm") r = norm_command(spec, o);
    else if (name == "enumerate") r = enumerate_command(spec, o);
    else if (name == "verify") r = verify_command(spec, o);
    else r = lattice_command(spec, o);

    std::string text;
    if (r.raw) text = r.text;
    else if (o.format == "text") text = as_text(r.json);
    else text = r.json.dump() + "\n";

    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path);
      if (!file || !(file << text)) throw UsageError("cannot write " + o.out_path);
    }
    return r.code;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << " (requested " << e.requested() << ", budget " << e.budget() << ")\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

} // namespace qlcft::cli
