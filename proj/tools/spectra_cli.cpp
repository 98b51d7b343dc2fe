#include <spectra/spectra.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;

struct CliError {
  std::string message;
};

struct StructureDeleter {
  void operator()(spectra_structure* s) const { spectra_structure_free(s); }
};
using Handle = std::unique_ptr<spectra_structure, StructureDeleter>;

struct StringDeleter {
  void operator()(char* s) const { spectra_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

void check(spectra_status status) {
  if (status != SPECTRA_OK) throw CliError{spectra_last_error()};
}

std::string take(char* raw) {
  CString owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{"cannot write '" + path + "'"};
  out << text << "\n";
}

struct Source {
  std::string input;
  std::string catalog;

  bool given() const { return !input.empty() || !catalog.empty(); }

  Handle load(const char* what) const {
    if (input.empty() == catalog.empty()) {
      throw CliError{std::string("exactly one of --input/--catalog is required for ") + what};
    }
    spectra_structure* raw = nullptr;
    if (!catalog.empty()) {
      check(spectra_catalog(catalog.c_str(), &raw));
    } else {
      check(spectra_structure_from_json(read_file(input).c_str(), &raw));
    }
    return Handle(raw);
  }
};

struct Poly {
  std::int64_t a = 1;
  std::int64_t b = -1;
};

Poly parse_poly(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CliError{"poly must be 'a,b', got '" + text + "'"};
  try {
    std::size_t pa = 0;
    std::size_t pb = 0;
    const auto a_text = text.substr(0, comma);
    const auto b_text = text.substr(comma + 1);
    Poly p{std::stoll(a_text, &pa), std::stoll(b_text, &pb)};
    if (pa != a_text.size() || pb != b_text.size()) throw std::invalid_argument("trailing");
    return p;
  } catch (const std::exception&) {
    throw CliError{"poly must be two integers 'a,b', got '" + text + "'"};
  }
}

void check_kind(const spectra_structure* s, const std::string& kind) {
  if (kind.empty()) return;
  const bool is_group = spectra_structure_kind(s) == SPECTRA_GROUP;
  if ((kind == "group") != is_group) {
    throw CliError{"input is a " + std::string(is_group ? "group" : "ring") + ", --kind says " + kind};
  }
}

struct Options {
  Source first;
  Source second;
  std::string kind;
  std::string poly;
  std::string method;
  std::string op;
  std::string output;
  std::string suite;
  std::uint64_t seed = 0;
  bool json = false;
  bool bilinear = false;
  bool general = false;
  std::vector<std::int64_t> v_invariants;
  std::vector<std::int64_t> w_invariants;
  bool alternating = true;
  std::vector<std::int64_t> invariants;
  spectra_ring_filter filter{};
  spectra_limits limits{};
  unsigned threads = 0;
};

int cmd_prob(const Options& o) {
  const auto s = o.first.load("prob");
  check_kind(s.get(), o.kind);
  char* out = nullptr;
  if (spectra_structure_kind(s.get()) == SPECTRA_GROUP) {
    if (!o.poly.empty()) {
      const auto p = parse_poly(o.poly);
      if (p.a != 1 || p.b != -1) throw CliError{"groups only support the commuting poly 1,-1"};
    }
    check(spectra_group_pr_c(s.get(), o.method.empty() ? nullptr : o.method.c_str(), &out));
  } else {
    const auto p = o.poly.empty() ? Poly{} : parse_poly(o.poly);
    check(spectra_ring_pr_f(s.get(), p.a, p.b, &out));
  }
  std::cout << take(out) << "\n";
  return kExitOk;
}

int cmd_construct(const Options& o) {
  const auto s = o.first.load("construct");
  check_kind(s.get(), o.kind);
  spectra_structure* raw = nullptr;
  if (o.op == "nring") {
    check(spectra_construct_nring(s.get(), &raw));
  } else if (o.op == "circle") {
    check(spectra_construct_circle(s.get(), &raw));
  } else if (o.op == "commring") {
    check(spectra_construct_commring(s.get(), &raw));
  } else if (o.op == "malcev") {
    check(spectra_construct_malcev(s.get(), &raw));
  } else {
    const auto t = o.second.given() ? o.second.load("product") : o.first.load("product");
    if (spectra_structure_kind(s.get()) != spectra_structure_kind(t.get())) {
      throw CliError{"product operands must both be groups or both rings"};
    }
    check(spectra_construct_product(s.get(), t.get(), &raw));
  }
  Handle result(raw);
  char* out = nullptr;
  check(spectra_structure_to_json(result.get(), &out));
  write_output(o.output, take(out));
  return kExitOk;
}

int cmd_analyze(const Options& o) {
  const auto s = o.first.load("analyze");
  check_kind(s.get(), o.kind);
  char* out = nullptr;
  check(spectra_analyze(s.get(), &out));
  write_output(o.output, take(out));
  return kExitOk;
}

int cmd_verify(const Options& o) {
  char* out = nullptr;
  int passed = 0;
  check(spectra_verify(o.suite.c_str(), o.seed, &out, &passed));
  const auto text = take(out);
  if (!o.output.empty()) write_output(o.output, text);
  if (o.json) {
    std::cout << text << "\n";
  } else {
    const auto report = nlohmann::json::parse(text);
    std::cout << report["suite"].get<std::string>() << ": instances=" << report["instances"]
              << " max_order=" << report["max_order"] << " failures=" << report["failures"].size()
              << " seed=" << report["seed"] << " wall=" << report["wall_seconds"] << "s "
              << (passed ? "PASS" : "FAIL") << "\n";
    for (const auto& note : report["notes"]) std::cout << "  note: " << note.get<std::string>() << "\n";
    for (const auto& f : report["failures"]) {
      std::cout << "  failure: " << f["instance"].get<std::string>() << ": "
                << f["violation"].get<std::string>() << "\n    witness: " << f["witness"].dump() << "\n";
    }
  }
  return passed ? kExitOk : kExitVerifyFailed;
}

int cmd_enumerate(const Options& o) {
  if (o.bilinear == o.general) throw CliError{"exactly one of --bilinear/--general is required"};
  const auto p = o.poly.empty() ? Poly{} : parse_poly(o.poly);
  char* out = nullptr;
  if (o.bilinear) {
    check(spectra_enumerate_bilinear(o.v_invariants.data(), o.v_invariants.size(),
                                     o.w_invariants.data(), o.w_invariants.size(),
                                     o.alternating ? 1 : 0, p.a, p.b, &out));
  } else {
    check(spectra_enumerate_general(o.invariants.data(), o.invariants.size(), &o.filter, p.a, p.b,
                                    &out));
  }
  write_output(o.output, take(out));
  return kExitOk;
}

int cmd_catalog() {
  char* out = nullptr;
  check(spectra_catalog_list(&out));
  std::cout << take(out);
  return kExitOk;
}

void add_source(CLI::App* cmd, Source& first, Source* second) {
  cmd->add_option("--input,-i", first.input, "structure JSON file")->check(CLI::ExistingFile);
  cmd->add_option("--catalog,-c", first.catalog, "catalog name, e.g. heisenberg:3");
  if (second != nullptr) {
    cmd->add_option("--input2", second->input, "second operand JSON file")->check(CLI::ExistingFile);
    cmd->add_option("--catalog2", second->catalog, "second operand catalog name");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting and f-probabilities of finite groups and rings"};
  app.set_version_flag("--version", std::string(spectra_version()));
  app.require_subcommand(1, 1);

  Options o;
  app.add_option("--order-cap", o.limits.order_cap, "maximum structure order");
  app.add_option("--table-threshold", o.limits.table_threshold, "largest ring with a product table");
  app.add_option("--general-cap", o.limits.general_order_cap, "order cap for general enumeration");
  app.add_option("--bilinear-cap", o.limits.bilinear_order_cap, "order cap for bilinear families");
  app.add_option("--budget", o.limits.candidate_budget, "candidate budget for enumeration");
  app.add_option("--threads", o.threads, "worker threads (overrides SPECTRA_THREADS)");

  const std::vector<std::string> kinds{"group", "ring"};

  auto* prob = app.add_subcommand("prob", "print Pr_f as p/q");
  add_source(prob, o.first, nullptr);
  prob->add_option("--kind", o.kind)->check(CLI::IsMember(kinds));
  prob->add_option("--poly", o.poly, "coefficients a,b of f = aXY + bYX");
  prob->add_option("--method", o.method)->check(CLI::IsMember({"brute", "classes"}));

  auto* construct = app.add_subcommand("construct", "apply a construction");
  add_source(construct, o.first, &o.second);
  construct->add_option("--op", o.op)->required()->check(
      CLI::IsMember({"nring", "circle", "commring", "malcev", "product"}));
  construct->add_option("--kind", o.kind)->check(CLI::IsMember(kinds));
  construct->add_option("--output,-o", o.output, "output JSON file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "center, nilpotency, antisymmetry, parity");
  add_source(analyze, o.first, nullptr);
  analyze->add_option("--kind", o.kind)->check(CLI::IsMember(kinds));
  analyze->add_option("--output,-o", o.output);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite)->required();
  verify->add_option("--seed", o.seed);
  verify->add_flag("--json", o.json, "print the full report as JSON");
  verify->add_option("--output,-o", o.output, "also write the JSON report here");

  auto* enumerate = app.add_subcommand("enumerate", "spectrum of an enumerated family");
  enumerate->add_flag("--bilinear", o.bilinear);
  enumerate->add_flag("--general", o.general);
  enumerate->add_option("--V", o.v_invariants)->delimiter(',');
  enumerate->add_option("--W", o.w_invariants)->delimiter(',');
  enumerate->add_flag("--alternating,!--no-alternating", o.alternating);
  enumerate->add_option("--invariants", o.invariants)->delimiter(',');
  enumerate->add_flag("--associative", o.filter.associative);
  enumerate->add_flag("--commutative", o.filter.commutative);
  enumerate->add_flag("--antisymmetric", o.filter.antisymmetric);
  enumerate->add_flag("--nilpotent", o.filter.nilpotent);
  enumerate->add_option("--max-class", o.filter.max_class);
  enumerate->add_option("--poly", o.poly);
  enumerate->add_option("--output,-o", o.output);

  auto* catalog = app.add_subcommand("catalog", "list catalog names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (o.threads > 0) setenv("SPECTRA_THREADS", std::to_string(o.threads).c_str(), 1);

  try {
    check(spectra_set_limits(&o.limits));
    if (*prob) return cmd_prob(o);
    if (*construct) return cmd_construct(o);
    if (*analyze) return cmd_analyze(o);
    if (*verify) return cmd_verify(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*catalog) return cmd_catalog();
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
