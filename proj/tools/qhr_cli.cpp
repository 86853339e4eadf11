// qhr: characters of W-algebras, their identities and modular transforms.

#include "qhr/characters/admissible.hpp"
#include "qhr/cli/verify.hpp"
#include "qhr/liealg/lattice.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace qhr;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kSchemaVersion = 1;

struct Config {
  std::string algebra = "A1";
  long level = -1;
  long p = 0, u = 0, n = 0;
  std::string nilpotent;
  std::string lambda0;
  std::string which = "all";
  std::string format = "plain";
  std::string output;
  std::string N = "6";
  int U = 8;
  double eps = 1e-6;
  int points = 5;
  int seed_direction = 0;
  std::uint64_t weyl_cap = liealg::kDefaultWeylCap;
  std::size_t lattice_cap = liealg::kDefaultLatticeCap;
  bool desk = false, slow = false, literal = false;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational parse_rational(const std::string& s, const char* what) {
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw ConfigError(std::string(what) + " must be a rational like 6 or 7/2");
  r.canonicalize();
  return r;
}

RVec parse_lambda0(const liealg::RootSystem& rs, const std::string& s) {
  std::vector<long> coords;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        coords.push_back(std::stol(item));
      } catch (const std::exception&) {
        throw ConfigError("--lambda0 must be comma-separated integer Dynkin labels");
      }
    }
  } else {
    coords.assign(rs.rank(), 0);
  }
  if (static_cast<int>(coords.size()) != rs.rank())
    throw ConfigError("--lambda0 needs " + std::to_string(rs.rank()) + " labels");
  return rs.from_weight_coords(coords);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

std::ostream& open_output(const Config& c, std::ofstream& file) {
  if (c.output.empty()) return std::cout;
  fs::path path(c.output);
  if (path.is_relative())
    if (const char* dir = std::getenv("QHR_OUTPUT_DIR")) path = fs::path(dir) / path;
  file.open(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file " + path.string());
  return file;
}

json algebra_json(const liealg::RootSystem& rs) {
  return {{"type", std::string(1, rs.type().series)}, {"rank", rs.rank()}};
}

json slice_json(const liealg::NilpotentSlice& s) {
  json dims = json::object();
  for (const auto& j : s.grades()) dims[to_string(j)] = s.dim_graded(j);
  json hf = json::array();
  for (const auto& v : s.hf_basis) hf.push_back(to_string(v));
  return {{"labels", s.labels},
          {"x", to_string(s.x)},
          {"theta_x", to_string(s.theta_x)},
          {"graded_dims", dims},
          {"dim_g0", s.dim_g0()},
          {"dim_g_half", s.dim_g_half()},
          {"hf_available", s.hf_available},
          {"hf_basis", hf},
          {"beta", to_string(s.beta)}};
}

void render_series(std::ostream& out, const Config& c, const json& meta, const QJetSeries& s) {
  if (c.format == "json") {
    json terms = json::array();
    for (const auto& [e, jet] : s.terms()) {
      if (jet[0].is_zero()) continue;
      terms.push_back({{"exponent", to_string(e)}, {"re", to_string(jet[0].re)}, {"im", to_string(jet[0].im)}});
    }
    json doc = meta;
    doc["schema_version"] = kSchemaVersion;
    doc["cutoff"] = to_string(s.cutoff());
    doc["terms"] = terms;
    out << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "exponent_num,exponent_den,coeff_re_num,coeff_re_den,coeff_im_num,coeff_im_den\n";
    for (const auto& [e, jet] : s.terms()) {
      const Gaussian& g = jet[0];
      if (g.is_zero()) continue;
      out << e.get_num().get_str() << ',' << e.get_den().get_str() << ',' << g.re.get_num().get_str() << ','
          << g.re.get_den().get_str() << ',' << g.im.get_num().get_str() << ',' << g.im.get_den().get_str() << '\n';
    }
  } else {
    out << "# " << meta.value("label", std::string()) << "\n";
    if (meta.contains("central_charge")) out << "# c = " << meta["central_charge"].get<std::string>() << "\n";
    out << s.truncated(s.cutoff()).str();
  }
}

int run_character(const std::string& kind, const Config& c) {
  const auto rs = liealg::build_root_system(liealg::CartanType::parse(c.algebra));
  const Rational N = parse_rational(c.N, "--N");
  characters::CharacterResult r;
  json meta{{"command", "character " + kind}, {"algebra", algebra_json(rs)}};
  if (kind == "wmin") {
    const auto W = liealg::weyl_group(rs, c.weyl_cap);
    r = characters::wmin_character(rs, W, c.level, N);
    meta["level"] = c.level;
  } else if (kind == "qhr") {
    require(c.p > 0 && c.u > 0, "character qhr needs --p and --u");
    const auto W = liealg::weyl_group(rs, c.weyl_cap);
    const auto slice = cli::parse_nilpotent(rs, c.nilpotent.empty() ? "principal" : c.nilpotent);
    r = characters::qhr_admissible_character(rs, W, slice, c.p, c.u, parse_lambda0(rs, c.lambda0), N);
    meta.update({{"p", c.p}, {"u", c.u}, {"slice", slice_json(slice)}});
  } else if (kind == "boundary") {
    require(c.u > 0, "character boundary needs --u");
    if (c.nilpotent.empty()) {
      r = characters::boundary_affine_character(rs, c.u, N);
    } else {
      const auto slice = cli::parse_nilpotent(rs, c.nilpotent);
      r = characters::boundary_qhr_character(rs, slice, c.u, N, c.literal);
      meta["slice"] = slice_json(slice);
    }
    meta["u"] = c.u;
  } else if (kind == "principal") {
    require(c.p > 0, "character principal needs --p");
    r = characters::principal_qhr_character(rs, c.p, parse_lambda0(rs, c.lambda0), N);
    meta["p"] = c.p;
  } else {
    require(c.p > 0 && c.u > 0, "character admissible-vacuum needs --p and --u");
    r = characters::admissible_vacuum_character(rs, c.p, c.u, N);
    meta.update({{"p", c.p}, {"u", c.u}});
  }
  meta["label"] = r.label;
  if (r.central_charge) meta["central_charge"] = to_string(*r.central_charge);
  std::ofstream file;
  render_series(open_output(c, file), c, meta, r.limit);
  return 0;
}

cli::VerifyOptions verify_options(const Config& c) {
  cli::VerifyOptions o;
  o.N = parse_rational(c.N, "--N");
  o.U = c.U;
  o.eps = c.eps;
  o.points = c.points;
  o.seed_direction = c.seed_direction;
  o.weyl_cap = c.weyl_cap;
  o.lattice_cap = c.lattice_cap;
  return o;
}

std::vector<cli::CheckResult> desk_suite(const Config& c) {
  auto o = verify_options(c);
  o.N = 4;
  o.U = 6;
  std::vector<cli::CheckResult> out;
  const auto a1 = liealg::build_root_system(liealg::CartanType::parse("A1"));
  const auto d4 = liealg::build_root_system(liealg::CartanType::parse("D4"));
  const auto a2 = liealg::build_root_system(liealg::CartanType::parse("A2"));
  out.push_back(cli::verify_theorem1(a1, -1, o));
  out.push_back(cli::verify_theorem1(d4, -1, o));
  out.push_back(cli::verify_theorem1(d4, -2, o));
  out.push_back(cli::verify_remark4(d4, o));
  for (const auto* rs : {&a1, &d4}) {
    const auto slice = liealg::minimal_slice(*rs);
    out.push_back(cli::verify_theta(*rs, 3, o));
    out.push_back(cli::verify_f(*rs, slice, 3, o));
    out.push_back(cli::verify_denominator(*rs, slice, o));
  }
  out.push_back(cli::verify_theorem2(d4, -2, "all", o));
  out.push_back(cli::verify_theorem2(d4, -1, "all", o));
  out.push_back(cli::verify_theorem4b(a1, liealg::minimal_slice(a1), 4, 3, o));
  out.push_back(cli::verify_theorem4b(a2, liealg::principal_slice(a2), 5, 3, o));
  if (c.slow) {
    auto e = o;
    e.N = 3;
    e.U = 2;
    out.push_back(cli::verify_remark4(liealg::build_root_system(liealg::CartanType::parse("E6")), e));
  }
  return out;
}

int run_verify(const std::string& kind, const Config& c) {
  std::vector<cli::CheckResult> results;
  if (kind == "all") {
    results = desk_suite(c);
  } else {
    const auto rs = liealg::build_root_system(liealg::CartanType::parse(c.algebra));
    const auto o = verify_options(c);
    const auto slice = [&] { return cli::parse_nilpotent(rs, c.nilpotent.empty() ? "minimal" : c.nilpotent); };
    if (kind == "theorem1") {
      results.push_back(cli::verify_theorem1(rs, c.level, o));
    } else if (kind == "remark4") {
      results.push_back(cli::verify_remark4(rs, o, c.literal));
    } else if (kind == "theorem2") {
      results.push_back(cli::verify_theorem2(rs, c.level, c.which, o));
    } else if (kind == "theorem4b") {
      require(c.p > 0 && c.u > 0, "verify theorem4b needs --p and --u");
      results.push_back(cli::verify_theorem4b(rs, slice(), c.p, c.u, o));
    } else if (kind == "theta") {
      require(c.n > 0, "verify theta needs a positive --n");
      results.push_back(cli::verify_theta(rs, c.n, o));
    } else if (kind == "f") {
      require(c.n > 0, "verify f needs a positive --n");
      results.push_back(cli::verify_f(rs, slice(), c.n, o));
    } else {
      results.push_back(cli::verify_denominator(rs, slice(), o));
    }
  }
  bool pass = true;
  std::ofstream file;
  std::ostream& out = open_output(c, file);
  if (c.format == "json") {
    json doc{{"schema_version", kSchemaVersion}, {"command", "verify " + kind}, {"results", json::array()}};
    for (const auto& r : results)
      doc["results"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"reports", r.reports}});
    out << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "name,identity,rel_deviation,tail_bound,pass\n";
    for (const auto& r : results)
      for (const auto& t : r.reports)
        out << r.name << ',' << t["identity"].get<std::string>() << ',' << t["rel_deviation"].get<double>() << ','
            << t["tail_bound"].get<double>() << ',' << (t["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& r : results) {
    pass = pass && r.pass;
    if (c.format == "plain")
      out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " (" << std::fixed
          << std::setprecision(1) << r.seconds << std::defaultfloat << " s)\n";
  }
  return pass ? 0 : 1;
}

int run_info(const std::string& kind, const Config& c) {
  const auto rs = liealg::build_root_system(liealg::CartanType::parse(c.algebra));
  json doc{{"schema_version", kSchemaVersion}, {"algebra", algebra_json(rs)}};
  if (kind == "algebra") {
    doc.update({{"dimension", rs.dimension()},
                {"positive_roots", rs.num_positive()},
                {"coxeter_number", rs.coxeter_number()},
                {"dual_coxeter_number", rs.dual_coxeter_number()},
                {"weyl_order", rs.weyl_order_from_heights().get_str()},
                {"exponents", rs.exponents()},
                {"cartan", rs.cartan()}});
  } else {
    doc["slice"] = slice_json(cli::parse_nilpotent(rs, c.nilpotent.empty() ? "minimal" : c.nilpotent));
  }
  std::ofstream file;
  open_output(c, file) << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters of W-algebras and their modular transforms"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--algebra", c.algebra, "Cartan type, e.g. A1, D4, E6")->capture_default_str();
    sub->add_option("--N", c.N, "q-order cutoff")->capture_default_str();
    sub->add_option("--format", c.format, "plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--output", c.output, "output file; relative paths resolve against $QHR_OUTPUT_DIR");
    sub->add_option("--weyl-cap", c.weyl_cap, "largest Weyl group to enumerate")->capture_default_str();
    sub->add_option("--lattice-cap", c.lattice_cap, "largest |P/nQ^vee| to bin")->capture_default_str();
    sub->add_option("--nilpotent", c.nilpotent, "minimal, principal or Dynkin labels like 2,0,2,2");
    sub->add_option("--level", c.level, "integer level k")->capture_default_str();
    sub->add_option("--p", c.p, "numerator of k + h^vee");
    sub->add_option("--u", c.u, "denominator of k + h^vee");
  };

  std::string kind;
  auto* character = app.add_subcommand("character", "compute a character as a q-expansion");
  character->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"wmin", "qhr", "boundary", "principal", "admissible-vacuum"}));
  common(character);
  character->add_option("--lambda0", c.lambda0, "Dynkin labels of lambda^0");
  character->add_flag("--literal-phase", c.literal, "keep only (-i)^{|Delta_+|} in the boundary phase");

  auto* verify = app.add_subcommand("verify", "check identities and modular transforms");
  verify->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "theorem4b", "remark4", "theta", "f", "denominator", "all"}));
  common(verify);
  verify->add_option("--U", c.U, "jet order in z")->capture_default_str();
  verify->add_option("--eps", c.eps, "relative tolerance")->capture_default_str();
  verify->add_option("--n", c.n, "positive integer level of the theta functions");
  verify->add_option("--which", c.which, "S-plain ... T-star, or all")->capture_default_str();
  verify->add_option("--points", c.points, "sample points per identity")->capture_default_str();
  verify->add_option("--seed-direction", c.seed_direction, "seed for the generic direction z0");
  verify->add_flag("--literal-shift", c.literal, "use the w(theta)/2 lattice shift in remark4");
  verify->add_flag("--desk", c.desk, "run the desk-scale suite (verify all)");
  verify->add_flag("--slow", c.slow, "include the E6 denominator identity in verify all");

  auto* info = app.add_subcommand("info", "describe an algebra or a nilpotent slice");
  info->add_option("kind", kind)->required()->check(CLI::IsMember({"algebra", "slice"}));
  common(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (character->parsed()) return run_character(kind, c);
    if (verify->parsed()) return run_verify(kind, c);
    return run_info(kind, c);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const liealg::WeylCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const liealg::LatticeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
