#include "torifan/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "torifan/constructions.hpp"
#include "torifan/error.hpp"
#include "torifan/intersection.hpp"
#include "torifan/io.hpp"
#include "torifan/picard.hpp"
#include "torifan/report.hpp"

namespace torifan::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::parse_error:
    case errc::usage_error:
    case errc::invalid_fan:
    case errc::invalid_argument:
    case errc::dimension_mismatch:
      return 2;
    default:
      return 1;
  }
}

std::string verdict(bool b) { return b ? "true" : "false"; }

std::string sorted_cone_list(const Fan& f) {
  std::vector<std::vector<int>> cones;
  for (const Cone& c : f.max_cones) cones.push_back(c.rays);
  std::sort(cones.begin(), cones.end());
  std::string out;
  for (const std::vector<int>& c : cones) {
    if (!out.empty()) out += " ";
    out += str(Cone{c});
  }
  return out;
}

std::string shape(const Fan& f) {
  return "dim " + std::to_string(f.dim) + ", " + std::to_string(f.rays.size()) +
         " rays, " + std::to_string(f.max_cones.size()) + " cones";
}

std::string nef_witness(const NefVerdict& v) {
  if (v.value) return "true";
  return "false (wall " + str(v.min.wall) + " has number " + str(v.min.value) + ")";
}

std::string ample_witness(const AmpleVerdict& v) {
  if (v.value) return "true";
  return "false (wall " + str(v.min.wall) + " has number " + str(v.min.value) + ")";
}

std::string bpf_witness(const Fan& f, const BpfVerdict& v) {
  if (v.value) return "true";
  return "false (covector of " +
         str(f.max_cones[static_cast<std::size_t>(v.witness_cone)]) +
         " violates the inequality of ray " + std::to_string(v.witness_ray) + ")";
}

Report sato_report() {
  Report rep;
  rep.id = "sato";
  Fan delta = sato_blowup_fan();
  rep.check("refined fan is valid, smooth, complete", "definition", "true",
            verdict(validate(delta).empty() && bool(is_smooth(delta)) &&
                    is_complete(delta)));

  // Published list of the twelve maximal cones, as sorted ray-index sets.
  rep.check("maximal cones after the two subdivisions", "reference",
            "{0,1,5} {0,1,7} {0,3,4} {0,3,5} {0,4,6} {0,6,7} "
            "{1,2,5} {1,2,7} {2,3,4} {2,3,5} {2,4,6} {2,6,7}",
            sorted_cone_list(delta));

  // Published support covectors of the anticanonical divisor, per cone.
  const std::map<std::string, std::string> table{
      {"{0,1,5}", "(-2,-1,1)"}, {"{0,1,7}", "(-2,-1,1)"}, {"{0,3,4}", "(0,1,-1)"},
      {"{0,3,5}", "(-2,1,1)"},  {"{0,4,6}", "(0,0,-1)"},  {"{0,6,7}", "(0,0,-1)"},
      {"{1,2,5}", "(-2,-1,1)"}, {"{1,2,7}", "(-2,-1,1)"}, {"{2,3,4}", "(4,1,-1)"},
      {"{2,3,5}", "(4,1,1)"},   {"{2,4,6}", "(1,0,-1)"},  {"{2,6,7}", "(1,0,-1)"}};
  InvariantDivisor dk = anticanonical(delta);
  CartierData cd = cartier_data(dk);
  rep.check("anticanonical divisor is Cartier", "definition", "true",
            verdict(cd.integral));
  for (std::size_t i = 0; i < delta.max_cones.size(); ++i) {
    const std::string key = str(delta.max_cones[i]);
    const auto hit = table.find(key);
    rep.check("anticanonical covector on " + key, "reference",
              hit == table.end() ? "?" : hit->second, str(cd.per_cone[i]));
  }

  rep.check("anticanonical divisor is basepoint free", "reference", "true",
            verdict(bool(is_basepoint_free(dk))));
  NefVerdict nef = is_nef(dk);
  rep.check("anticanonical divisor is nef", "reference", "true", verdict(nef.value));
  rep.check("dimension of the section polytope", "reference", "3",
            std::to_string(kodaira_dimension(dk)));
  rep.check("anticanonical divisor is ample", "derived: minimal wall number is zero",
            "false", verdict(is_ample(dk).value));

  // The threefold is ruled over the twist-3 surface by dropping the last
  // coordinate.
  Fan base = hirzebruch_fan(3);
  IntegerMatrix pr(2, 3);
  pr.at(0, 0) = 1;
  pr.at(1, 1) = 1;
  rep.check("coordinate projection maps the fan onto the base", "reference", "true",
            verdict(bool(check_fan_map(FanMap{pr, delta, base}))));
  NefVerdict base_nef = is_nef(anticanonical(base));
  rep.check("base anticanonical divisor is nef", "reference", "false",
            verdict(base_nef.value));
  rep.check("minimal wall number on the base", "derived: adjunction on the ruled surface",
            "-1", str(base_nef.min.value));
  return rep;
}

Report bundle_report(int r, int s) {
  if (r < 1 || s < 1)
    fail(errc::usage_error, "bundle parameters must be positive");
  if (r + s + 1 > 4)
    fail(errc::usage_error, "total dimension " + std::to_string(r + s + 1) +
                                " exceeds the desk-scale bound of 4");
  Report rep;
  rep.id = "bundle(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";

  std::vector<Int> twists{Int(0)};
  for (int i = 0; i <= r; ++i) twists.emplace_back(1);
  SplitBundleFan b = split_bundle_fan(BundleSpec{s, twists});
  Fan x = blow_up_invariant(b.fan, b.section_cone.rays);

  rep.note("bundle fan", "definition", shape(b.fan));
  rep.note("fan blown up along the section cone", "definition", shape(x));
  rep.check("blown-up fan is smooth", "definition", "true", verdict(bool(is_smooth(x))));
  rep.check("blown-up fan is complete", "definition", "true", verdict(is_complete(x)));

  AmpleVerdict ample = is_ample(anticanonical(x));
  NefVerdict nef = is_nef(anticanonical(b.fan));
  if (r > s) {
    rep.check("anticanonical of the blow-up is ample", "reference", "true",
              verdict(ample.value));
    rep.check("anticanonical of the bundle is nef", "reference", "false",
              verdict(nef.value));
  } else {
    rep.note("anticanonical of the blow-up is ample (no reference value)",
             "definition", ample_witness(ample));
    rep.note("anticanonical of the bundle is nef (no reference value)", "definition",
             nef_witness(nef));
  }
  return rep;
}

Report double_cover_report() {
  Report rep;
  rep.id = "double-cover";
  DoubleCoverLedger led = double_cover_ledger();
  rep.check("canonical square of the quadric", "reference", "8", str(led.k2_initial));
  rep.check("canonical square after sixteen blow-ups", "reference", "-8",
            str(led.k2_final));
  rep.check("branch class has even coordinates", "reference", "true",
            verdict(led.branch_even));
  rep.check("canonical plus half the branch class is zero", "reference", "true",
            verdict(led.k_plus_half_branch_zero));
  rep.check("anticanonical degree of the witness line",
            "derived: intersection form expansion", "-2", str(led.witness_degree));
  rep.check("self-intersection of the witness line",
            "derived: intersection form expansion", "-4", str(led.witness_self));
  auto sig = signature(led.lattice);
  rep.check("signature after sixteen blow-ups",
            "derived: rational congruence diagonalization", "(1,17)",
            "(" + std::to_string(sig.first) + "," + std::to_string(sig.second) + ")");
  return rep;
}

struct CheckFlags {
  bool cartier = false;
  bool bpf = false;
  bool nef = false;
  bool ample = false;
  bool kappa = false;
  bool points = false;

  bool any() const { return cartier || bpf || nef || ample || kappa || points; }
};

Report check_report(const std::string& fan_path, const std::string& divisor_path,
                    const CheckFlags& flags) {
  Report rep;
  rep.id = "check";
  Fan f = fan_from_json(read_text_file(fan_path));
  require_valid(f);
  rep.note("fan " + fan_path, "definition", shape(f));
  if (flags.any() && divisor_path.empty())
    fail(errc::usage_error, "the requested checks need --divisor");
  if (divisor_path.empty()) return rep;

  InvariantDivisor d = divisor_from_json(read_text_file(divisor_path), f);
  rep.note("divisor " + divisor_path, "definition",
           std::to_string(d.coeffs.size()) + " coefficients");
  if (flags.cartier)
    rep.check("divisor is Cartier", "definition", "true",
              verdict(cartier_data(d).integral));
  if (flags.bpf)
    rep.check("divisor is basepoint free", "definition", "true",
              bpf_witness(f, is_basepoint_free(d)));
  if (flags.nef)
    rep.check("divisor is nef", "definition", "true", nef_witness(is_nef(d)));
  if (flags.ample)
    rep.check("divisor is ample", "definition", "true", ample_witness(is_ample(d)));
  if (flags.kappa)
    rep.note("dimension of the section polytope", "definition",
             std::to_string(kodaira_dimension(d)));
  if (flags.points)
    rep.note("lattice points of the section polytope", "definition",
             str(count_lattice_points(polytope(d))));
  return rep;
}

Report selftest_report(std::uint32_t seed) {
  Report rep;
  rep.id = "selftest(seed=" + std::to_string(seed) + ")";
  std::mt19937 engine(seed);
  auto coeff = [&engine]() { return static_cast<long>(engine() % 11) - 5; };
  for (const CatalogEntry& entry : catalog()) {
    rep.check("structure of " + entry.name, "definition", "true",
              verdict(validate(entry.fan).empty() && bool(is_smooth(entry.fan)) &&
                      is_complete(entry.fan)));
    int agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
      InvariantDivisor d;
      d.fan = entry.fan;
      for (std::size_t i = 0; i < entry.fan.rays.size(); ++i)
        d.coeffs.emplace_back(coeff());
      if (bool(is_basepoint_free(d)) == is_nef(d).value) ++agree;
    }
    rep.check("polytope and wall criteria agree on " + entry.name +
                  " for 100 sampled divisors",
              "derived: two independent algorithms", "100/100",
              std::to_string(agree) + "/100");
  }
  return rep;
}

std::uint32_t seed_from_env() {
  const char* raw = std::getenv("TORIFAN_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0')
    fail(errc::usage_error, std::string("TORIFAN_SEED must be a nonnegative integer, got \"") +
                                raw + "\"");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toric geometry workbench", "torifan"};
  app.require_subcommand(1);
  bool pretty = false;

  CLI::App* example = app.add_subcommand("example", "reproduce a built-in construction");
  example->require_subcommand(1);
  CLI::App* sato = example->add_subcommand(
      "sato", "refined ruled threefold: anticanonical verdicts upstairs and down");
  sato->add_flag("--pretty", pretty, "human-readable table");
  int r = 0, s = 0;
  CLI::App* bundle = example->add_subcommand(
      "bundle", "projectivized split bundle, blown up along its section cone");
  bundle->add_option("--r", r, "number of twisted summands minus one")->required();
  bundle->add_option("--s", s, "base dimension")->required();
  bundle->add_flag("--pretty", pretty, "human-readable table");
  CLI::App* double_cover = example->add_subcommand(
      "double-cover", "divisor-class ledger for the branched cover of a blown-up quadric");
  double_cover->add_flag("--pretty", pretty, "human-readable table");

  std::string fan_path, divisor_path;
  CheckFlags flags;
  CLI::App* check = app.add_subcommand("check", "run predicates on a fan and divisor");
  check->add_option("--fan", fan_path, "fan JSON file")->required();
  check->add_option("--divisor", divisor_path, "divisor JSON file");
  check->add_flag("--cartier", flags.cartier, "integral Cartier data");
  check->add_flag("--bpf", flags.bpf, "basepoint freeness");
  check->add_flag("--nef", flags.nef, "nonnegative wall numbers");
  check->add_flag("--ample", flags.ample, "positive wall numbers");
  check->add_flag("--kappa", flags.kappa, "section polytope dimension");
  check->add_flag("--points", flags.points, "section polytope lattice points");
  check->add_flag("--pretty", pretty, "human-readable table");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "seeded random cross-validation over the fan catalog");
  selftest->add_flag("--pretty", pretty, "human-readable table");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Report rep;
    if (sato->parsed())
      rep = sato_report();
    else if (bundle->parsed())
      rep = bundle_report(r, s);
    else if (double_cover->parsed())
      rep = double_cover_report();
    else if (check->parsed())
      rep = check_report(fan_path, divisor_path, flags);
    else if (selftest->parsed())
      rep = selftest_report(seed_from_env());
    out << (pretty ? to_table(rep) : to_json(rep));
    return rep.overall() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace torifan::cli
