#include "lieprobe/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lieprobe/entry_polynomial.hpp"
#include "lieprobe/errors.hpp"
#include "lieprobe/serialize.hpp"
#include "lieprobe/verify.hpp"

namespace lieprobe::cli {
namespace {

struct Options {
  std::string group = "su";
  int n = 2;
  std::string angles;
  std::string input;
  std::string poly;
  std::uint64_t seed = 0;
  std::size_t samples = 0;  // 0 selects the per-command default
  unsigned pmax = 4;
  std::string format = "json";
  int digits = 20;
  std::string method = "mc";
  int order = 12;
  std::string suite = "all";
  std::size_t max_terms = Limits{}.max_terms;
  long max_order = Limits{}.max_cyclotomic_order;
  int max_rank = Limits{}.max_rank;
};

Json read_input(const std::string& input) {
  if (input.empty()) throw ValidationError("this command needs --input (a JSON file path or inline JSON)");
  std::string text = input;
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (input[first] != '{' && input[first] != '[')) {
    std::ifstream f(input);
    if (!f) throw ValidationError("cannot read input file '" + input + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("input JSON: ") + e.what());
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string item = text.substr(pos, end - pos);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    double v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size())
      throw ParseError("invalid number '" + item + "' in --angles");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

void check_rank(const Options& o) {
  if (o.n < 2) throw ValidationError("rank must be at least 2");
  if (o.n > Limits::global().max_rank)
    throw ResourceGuardError("rank " + std::to_string(o.n) + " exceeds configured maximum " +
                             std::to_string(Limits::global().max_rank));
}

FiniteTypeFunction function_from_poly(const Options& o, Group g) {
  if (o.poly.empty()) throw ValidationError("this command needs --poly, e.g. --poly \"u11*conj(u11)\"");
  return expand(EntryPolynomial::parse(o.poly), g, o.n);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_param(const Options& o, Group g, std::ostream& out) {
  EulerAngles a = EulerAngles::zeros(g, o.n);
  if (!o.angles.empty()) {
    const auto v = parse_list(o.angles);
    if (v.size() != a.dimension())
      throw ValidationError("expected " + std::to_string(a.dimension()) + " angles (phi..., psi..., omega...), got " +
                            std::to_string(v.size()));
    a = EulerAngles::from_flat(g, o.n, v);
  } else if (!o.input.empty()) {
    a = angles_from_json(read_input(o.input));
    if (a.group != g || a.n != o.n) throw ValidationError("input angles do not match --group/--n");
  }
  const Matrix u = forward(a);
  emit(out, {{"angles", angles_json(a)},
             {"in_nominal_range", in_nominal_range(a)},
             {"matrix", matrix_json(u)},
             {"unitarity_defect", unitarity_defect(u)},
             {"determinant_defect", determinant_defect(u)}});
  return 0;
}

int cmd_invert(const Options& o, Group g, std::ostream& out) {
  const Matrix u = matrix_from_json(read_input(o.input));
  if (u.rows() != o.n) throw ValidationError("input matrix size does not match --n");
  if (unitarity_defect(u) > 1e-9 || determinant_defect(u) > 1e-9)
    throw ValidationError(std::string("input is not a matrix of ") + group_name(g) + "(" + std::to_string(o.n) + ")");
  if (g == Group::SO && u.imag().cwiseAbs().maxCoeff() > 1e-12) throw ValidationError("input matrix is not real");
  const EulerAngles a = g == Group::SU ? su_inverse(u) : so_inverse(u);
  emit(out, {{"angles", angles_json(a)}, {"reconstruction_error", (forward(a) - u).cwiseAbs().maxCoeff()}});
  return 0;
}

int cmd_sample(const Options& o, Group g, std::ostream& out) {
  const std::size_t count = o.samples == 0 ? 10 : o.samples;
  if (count > 10'000'000) throw ResourceGuardError("sample count above 10^7");
  RngStream rng(o.seed);
  EulerAngles a = EulerAngles::zeros(g, o.n);
  if (o.format == "csv") {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a.phi.size(); ++i) names.push_back("phi" + std::to_string(i + 1));
    for (std::size_t i = 0; i < a.psi.size(); ++i) names.push_back("psi" + std::to_string(i + 1));
    for (std::size_t i = 0; i < a.omega.size(); ++i) names.push_back("omega" + std::to_string(i + 1));
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
    out << "\n";
    char buf[32];
    for (std::size_t s = 0; s < count; ++s) {
      sample_into(a, rng);
      const auto v = a.flat();
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", v[i]);
        out << (i ? "," : "") << buf;
      }
      out << "\n";
    }
    return 0;
  }
  Json draws = Json::array();
  for (std::size_t s = 0; s < count; ++s) {
    sample_into(a, rng);
    draws.push_back(angles_json(a));
  }
  emit(out, {{"group", group_name(g)}, {"n", o.n}, {"seed", o.seed}, {"samples", draws}});
  return 0;
}

int cmd_integrate(const Options& o, Group g, std::ostream& out) {
  const EntryPolynomial p = EntryPolynomial::parse(o.poly.empty() ? throw ValidationError("integrate needs --poly")
                                                                  : o.poly);
  if (p.max_index() > o.n) throw ValidationError("entry index exceeds the rank");
  const auto fn = [&](const EulerAngles& a) { return p.eval(forward(a)); };
  Json j = {{"group", group_name(g)}, {"n", o.n}, {"poly", o.poly}, {"method", o.method}};
  if (o.method == "mc") {
    const std::size_t count = o.samples == 0 ? 100000 : o.samples;
    const auto r = mc_integrate(fn, g, o.n, count, o.seed);
    j["seed"] = o.seed;
    j["samples"] = count;
    j["estimate"] = {r.first.real(), r.first.imag()};
    j["stderr"] = r.second;
  } else if (o.method == "quad") {
    const Complex v = quad_integrate(fn, g, o.n, o.order);
    j["order"] = o.order;
    j["estimate"] = {v.real(), v.imag()};
  } else {
    throw ValidationError("unknown method '" + o.method + "' (mc or quad)");
  }
  try {
    j["exact"] = exact_json(integrate(tilde(expand(p, g, o.n))), o.digits);
  } catch (const ResourceGuardError& e) {
    j["exact"] = nullptr;
    j["exact_unavailable"] = e.what();
  }
  emit(out, j);
  return 0;
}

int cmd_tilde(const Options& o, Group g, std::ostream& out) {
  const AdmissibleFunction a = tilde(function_from_poly(o, g));
  std::vector<int> div = z_divisors(g, o.n);
  emit(out, {{"admissible", admissible_json(a, o.digits)},
             {"z_divisors", div},
             {"jacobian", jacobian_json(jacobian(g, o.n), o.digits)}});
  return 0;
}

AdmissibleFunction admissible_input(const Options& o, Group g) {
  if (!o.poly.empty()) return tilde(function_from_poly(o, g));
  return admissible_from_json(read_input(o.input));
}

int cmd_spectrum(const Options& o, Group g, std::ostream& out) {
  const AdmissibleFunction a = admissible_input(o, g);
  const Spectrum s = spectrum(a);
  emit(out, {{"group", group_name(a.group())}, {"n", a.rank()}, {"size", s.size()}, {"spectrum", spectrum_json(s)}});
  return 0;
}

int cmd_hull(const Options& o, Group g, std::ostream& out) {
  std::vector<RationalPoint> pts;
  if (!o.poly.empty()) {
    const Spectrum s = spectrum(tilde(function_from_poly(o, g)));
    pts.assign(s.begin(), s.end());
  } else {
    pts = points_from_json(read_input(o.input));
  }
  Json j = hull_json(hull_contains_zero(pts));
  j["points"] = spectrum_json(Spectrum(pts.begin(), pts.end()));
  emit(out, j);
  return 0;
}

int cmd_probe(const Options& o, Group g, std::ostream& out) {
  Json j = probe_json(conjecture_probe(function_from_poly(o, g), o.pmax), o.digits);
  j["poly"] = o.poly;
  emit(out, j);
  return 0;
}

int cmd_constants(const Options& o, Group g, std::ostream& out) {
  emit(out, {{"normalization", normalization_json(normalization(g, o.n), o.digits)},
             {"abelian_prefactor", jacobian_json(jacobian(g, o.n), o.digits)}});
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo{o.n, o.seed, o.samples == 0 ? 20000 : o.samples};
  const auto results = run_suite(o.suite, vo);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (o.format == "csv") {
    out << "suite,tag,passed,detail\n";
    for (const auto& r : results)
      out << r.suite << "," << r.tag << "," << (r.passed ? "pass" : "FAIL") << ",\"" << r.detail << "\"\n";
  } else {
    Json checks = Json::array();
    std::map<std::string, std::pair<int, int>> per_suite;
    for (const auto& r : results) {
      checks.push_back({{"suite", r.suite}, {"tag", r.tag}, {"passed", r.passed}, {"detail", r.detail}});
      auto& [pass, total] = per_suite[r.suite];
      pass += r.passed ? 1 : 0;
      ++total;
    }
    Json suites = Json::array();
    for (const auto& name : suite_names())
      if (per_suite.count(name))
        suites.push_back({{"suite", name}, {"passed", per_suite[name].first}, {"total", per_suite[name].second}});
    emit(out, {{"n", o.n}, {"seed", o.seed}, {"suites", suites}, {"checks", checks}, {"all_passed", ok}});
  }
  return ok ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler-angle parametrizations, Haar measures and abelian moment tools for SU(N) and SO(N)",
               "lieprobe"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");
  app.require_subcommand(1);
  Options o;
  app.add_option("--group", o.group, "su or so")->capture_default_str()->check(CLI::IsMember({"su", "so", "SU", "SO"}));
  app.add_option("--n", o.n, "rank N")->capture_default_str();
  app.add_option("--angles", o.angles, "comma-separated angles: phi..., psi..., omega...");
  app.add_option("--input", o.input, "JSON file path or inline JSON");
  app.add_option("--poly", o.poly, "polynomial in entries, e.g. \"u11*conj(u11) - 1/2\"");
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--samples", o.samples, "sample count (0 = command default)");
  app.add_option("--pmax", o.pmax, "largest moment order for probe")->capture_default_str();
  app.add_option("--format", o.format, "json or csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--digits", o.digits, "decimal digits of exact values")->capture_default_str();
  app.add_option("--method", o.method, "mc or quad")->capture_default_str();
  app.add_option("--order", o.order, "Gauss-Legendre order for quad")->capture_default_str();
  app.add_option("--suite", o.suite, "verify suite: all, exact, generators, euler, haar, finite-type, abelian")
      ->capture_default_str();
  app.add_option("--max-terms", o.max_terms, "monomial count guard")->capture_default_str();
  app.add_option("--max-order", o.max_order, "cyclotomic order guard")->capture_default_str();
  app.add_option("--max-rank", o.max_rank, "rank guard")->capture_default_str();

  const std::vector<std::pair<const char*, const char*>> commands{
      {"param", "angles to matrix"},
      {"invert", "matrix to angles"},
      {"sample", "Haar-distributed angle draws"},
      {"integrate", "Monte Carlo or quadrature integral of an entry polynomial"},
      {"tilde", "abelian (admissible) form of an entry polynomial"},
      {"spectrum", "exponent spectrum of the admissible form"},
      {"hull", "exact test whether 0 lies in the convex hull of a spectrum"},
      {"probe", "moments, spectrum and hull verdict"},
      {"constants", "Haar normalization constants"},
      {"verify", "run invariant suites"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> argv_store{"lieprobe"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Limits& limits = Limits::global();
  const Limits saved = limits;
  int code = 0;
  try {
    limits.max_terms = o.max_terms;
    limits.max_cyclotomic_order = o.max_order;
    limits.max_rank = o.max_rank;
    if (o.digits < 1 || o.digits > limits.max_digits)
      throw ResourceGuardError("--digits must lie in 1.." + std::to_string(limits.max_digits));
    const std::string cmd = app.get_subcommands().front()->get_name();
    check_rank(o);
    if (cmd == "verify") {
      code = cmd_verify(o, out);
    } else {
      const Group g = parse_group(o.group);
      if (cmd == "param") code = cmd_param(o, g, out);
      else if (cmd == "invert") code = cmd_invert(o, g, out);
      else if (cmd == "sample") code = cmd_sample(o, g, out);
      else if (cmd == "integrate") code = cmd_integrate(o, g, out);
      else if (cmd == "tilde") code = cmd_tilde(o, g, out);
      else if (cmd == "spectrum") code = cmd_spectrum(o, g, out);
      else if (cmd == "hull") code = cmd_hull(o, g, out);
      else if (cmd == "probe") code = cmd_probe(o, g, out);
      else code = cmd_constants(o, g, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    code = 1;
  } catch (const ResourceGuardError& e) {
    err << "resource guard: " << e.what() << "\n";
    code = 3;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  }
  limits = saved;
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace lieprobe::cli
