// Command-line front end; talks to the library only through the C API.
#include <cmoment.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Failure {
  std::string kind;
  std::string message;
  int exit_code;
};

void check(cm_status status) {
  if (status != CM_OK)
    throw Failure{cm_status_name(status), cm_last_error(), status == CM_ERR_PARSE ? 2 : 1};
}

[[noreturn]] void usage_error(const std::string& message) { throw Failure{"parse", message, 2}; }

struct MeasureFree {
  void operator()(cm_measure* p) const { cm_measure_free(p); }
};
struct TableFree {
  void operator()(cm_table* p) const { cm_table_free(p); }
};
struct ExtendedFree {
  void operator()(cm_extended* p) const { cm_extended_free(p); }
};
struct CurveFree {
  void operator()(cm_curve* p) const { cm_curve_free(p); }
};
using Measure = std::unique_ptr<cm_measure, MeasureFree>;
using Table = std::unique_ptr<cm_table, TableFree>;
using Extended = std::unique_ptr<cm_extended, ExtendedFree>;
using CurvePtr = std::unique_ptr<cm_curve, CurveFree>;

json take(char* text) {
  std::string s(text);
  cm_string_free(text);
  return json::parse(s);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) usage_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Failure{"parse", std::string("invalid JSON: ") + e.what(), 2};
  }
}

Measure load_measure(const std::string& text) {
  cm_measure* out = nullptr;
  check(cm_measure_from_json(text.c_str(), &out));
  return Measure(out);
}

Table load_table(const std::string& text) {
  cm_table* out = nullptr;
  check(cm_table_from_json(text.c_str(), &out));
  return Table(out);
}

Extended load_extended(const std::string& text) {
  cm_extended* out = nullptr;
  check(cm_extended_from_json(text.c_str(), &out));
  return Extended(out);
}

json table_json(const cm_table* t) {
  char* out = nullptr;
  check(cm_table_to_json(t, &out));
  return take(out);
}

json extended_json(const cm_extended* t) {
  char* out = nullptr;
  check(cm_extended_to_json(t, &out));
  return take(out);
}

json measure_json(const cm_measure* mu) {
  char* out = nullptr;
  check(cm_measure_to_json(mu, &out));
  return take(out);
}

CurvePtr load_curve(const std::string& name, const std::string& file,
                    const std::vector<std::string>& params) {
  cm_curve* out = nullptr;
  if (!file.empty()) {
    if (!name.empty() || !params.empty()) usage_error("give either --curve-file or --curve");
    check(cm_curve_from_json(read_text(file).c_str(), &out));
    return CurvePtr(out);
  }
  if (name.empty()) usage_error("a curve is required (--curve or --curve-file)");
  json p = json::object();
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) usage_error("curve params are key=value, got '" + kv + "'");
    try {
      std::size_t used = 0;
      const std::string value = kv.substr(eq + 1);
      p[kv.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      usage_error("curve param '" + kv + "' is not numeric");
    }
  }
  check(cm_curve_by_name(name.c_str(), p.empty() ? nullptr : p.dump().c_str(), &out));
  return CurvePtr(out);
}

struct Options {
  unsigned precision = 39;
  bool compact = false;
  std::string output;

  std::string input = "-";
  int degree = 2;
  std::string kind;
  int d = 1;
  bool matrix = false;
  int window = 4;
  std::string nu_file, profile_file, check_file, with_file, support_file;
  std::optional<double> snu2_t;
  int bound = 2;
  std::optional<int> k, l;
  std::string map = "psi";
  double h = 1.0;
  int axis = 1;
  std::string curve, curve_file;
  std::vector<std::string> params;
  int samples = 500;
  bool catalog = false;
  std::optional<int> zariski;
  int nodes = 1;
  double rank_tol = 0.0;
  int n = 0;
  double lambda = 0.0;
  bool perturbation = false;
  std::string s_file, t_file;
  bool complex_form = false;
  std::string demo;
  double t = 0.5;
  int demo_window = 0;
  bool list = false;
};

json cmd_moments(const Options& o) {
  const std::string text = read_text(o.input);
  const json doc = read_json(text);
  char* out = nullptr;
  if (doc.is_object() && doc.contains("preset")) {
    if (!o.kind.empty() && o.kind != "real") usage_error("density inputs only have real moments");
    check(cm_density_moments(text.c_str(), o.degree, &out));
    return take(out);
  }
  Measure mu = load_measure(text);
  const std::string kind = o.kind.empty() ? "complex" : o.kind;
  if (kind == "complex") {
    cm_table* t = nullptr;
    check(cm_discrete_moments(mu.get(), o.degree, &t));
    return table_json(Table(t).get());
  }
  if (kind == "trig") check(cm_trig_moments(mu.get(), o.degree, &out));
  else if (kind == "real") check(cm_real_moments(mu.get(), o.degree, &out));
  else if (kind == "plane") check(cm_plane_moments(mu.get(), o.degree, &out));
  else usage_error("unknown moment kind '" + kind + "'");
  return take(out);
}

json cmd_check_pd(const Options& o) {
  const std::string text = read_text(o.input);
  const json doc = read_json(text);
  std::string kind = o.kind;
  if (kind.empty() || kind == "auto") {
    if (!doc.is_object()) usage_error("expected a JSON object");
    if (doc.contains("window")) kind = "halfplane";
    else if (doc.contains("moments") || doc.contains("moments_exact")) kind = "hankel";
    else if (doc.contains("entries") && doc["entries"].is_array() && !doc["entries"].empty() &&
             doc["entries"][0].is_array() && doc["entries"][0].size() == 3)
      kind = "toeplitz";
    else kind = "quadrant";
  }
  char* out = nullptr;
  if (kind == "quadrant") {
    Table t = load_table(text);
    check(cm_check_pd_quadrant(t.get(), o.d, o.matrix, &out));
  } else if (kind == "halfplane") {
    Extended t = load_extended(text);
    check(cm_check_pd_halfplane(t.get(), o.d, o.matrix, &out));
  } else if (kind == "hankel") {
    check(cm_check_pd_hankel(text.c_str(), o.d, o.matrix, &out));
  } else if (kind == "toeplitz") {
    check(cm_check_pd_toeplitz(text.c_str(), o.d, o.matrix, &out));
  } else {
    usage_error("unknown matrix kind '" + kind + "'");
  }
  json report = take(out);
  report["kind"] = kind;
  return report;
}

json cmd_extend(const Options& o) {
  const int modes = !o.nu_file.empty() + !o.profile_file.empty() + o.snu2_t.has_value();
  if (modes > 1) usage_error("--nu, --profile and --snu2 are mutually exclusive");
  Measure mu = load_measure(read_text(o.input));
  cm_extended* out = nullptr;
  if (!o.nu_file.empty()) {
    Measure nu = load_measure(read_text(o.nu_file));
    check(cm_build_extension(mu.get(), nu.get(), o.window, &out));
  } else if (o.snu2_t) {
    check(cm_snu2_family(mu.get(), *o.snu2_t, o.window, &out));
  } else {
    Measure profile;
    if (!o.profile_file.empty()) {
      profile = load_measure(read_text(o.profile_file));
    } else {
      cm_measure* p = nullptr;
      check(cm_measure_dirac(1.0, 0.0, 1.0, "unit-circle", &p));
      profile.reset(p);
    }
    check(cm_extension_from_measure(mu.get(), profile.get(), o.window, &out));
  }
  return extended_json(Extended(out).get());
}

json cmd_restrict(const Options& o) {
  Extended big = load_extended(read_text(o.input));
  cm_table* t = nullptr;
  check(cm_restrict(big.get(), &t));
  Table small(t);
  if (o.check_file.empty()) return table_json(small.get());
  Table gamma = load_table(read_text(o.check_file));
  char* out = nullptr;
  check(cm_is_extension(big.get(), gamma.get(), &out));
  return {{"table", table_json(small.get())}, {"extension_check", take(out)}};
}

json cmd_flatness(const Options& o) {
  if (o.k.has_value() != o.l.has_value()) usage_error("--k and --l go together");
  Table t = load_table(read_text(o.input));
  char* out = nullptr;
  if (o.k) check(cm_check_flatness(t.get(), *o.k, *o.l, &out));
  else check(cm_detect_flatness(t.get(), o.bound, &out));
  return take(out);
}

json cmd_classify(const Options& o) {
  if (!o.support_file.empty()) {
    if (o.k || o.l) usage_error("give either --support or --k/--l");
    int k = 0, l = 0;
    check(cm_flatness_for_support(read_text(o.support_file).c_str(), &k, &l));
    return {{"flatness", {k, l}}};
  }
  if (!o.k || !o.l) usage_error("classify needs --k and --l (or --support)");
  char* out = nullptr;
  check(cm_classify_flat_support(*o.k, *o.l, &out));
  json cls = take(out);
  int k = 0, l = 0;
  check(cm_flatness_for_support(cls.dump().c_str(), &k, &l));
  return {{"class", cls}, {"flatness_of_class", {k, l}}};
}

json cmd_transport(const Options& o) {
  Measure mu = load_measure(read_text(o.input));
  cm_measure* out = nullptr;
  if (o.map == "phi") {
    check(cm_transport_phi(mu.get(), &out));
  } else if (o.map == "psi") {
    check(cm_transport_psi(mu.get(), &out));
  } else if (o.map == "shift") {
    check(cm_shift_to_horizontal_line(mu.get(), o.h, &out));
  } else if (o.map == "marginal") {
    check(cm_marginal_transport(mu.get(), o.axis, &out));
  } else if (o.map == "product") {
    if (o.with_file.empty()) usage_error("--map product needs --with");
    Measure nu = load_measure(read_text(o.with_file));
    check(cm_product_measure(mu.get(), nu.get(), &out));
  } else {
    usage_error("unknown map '" + o.map + "'");
  }
  return measure_json(Measure(out).get());
}

json injectivity_for(const cm_curve* c, int samples) {
  char* out = nullptr;
  check(cm_injectivity_test(c, samples, &out));
  json verdict = take(out);
  check(cm_curve_to_json(c, &out));
  verdict["curve"] = take(out);
  return verdict;
}

json cmd_injectivity(const Options& o) {
  if (o.catalog) {
    char* out = nullptr;
    check(cm_curve_catalog(&out));
    json results = json::array();
    for (const auto& entry : take(out)) {
      cm_curve* c = nullptr;
      check(cm_curve_from_json(entry.dump().c_str(), &c));
      results.push_back(injectivity_for(CurvePtr(c).get(), o.samples));
    }
    return results;
  }
  const std::string file = o.curve.empty() && o.curve_file.empty() ? o.input : o.curve_file;
  CurvePtr c = load_curve(o.curve, o.curve.empty() ? file : "", o.params);
  return injectivity_for(c.get(), o.samples);
}

json cmd_localize(const Options& o) {
  Measure mu = load_measure(read_text(o.input));
  json result = json::object();
  if (!o.curve.empty() || !o.curve_file.empty()) {
    CurvePtr c = load_curve(o.curve, o.curve_file, o.params);
    double residual = 0.0;
    check(cm_localization_residual(mu.get(), c.get(), &residual));
    char* out = nullptr;
    check(cm_curve_to_json(c.get(), &out));
    result["curve"] = take(out);
    result["residual"] = residual;
  }
  if (o.zariski) {
    char* out = nullptr;
    check(cm_zariski_density_test(mu.get(), *o.zariski, &out));
    result["zariski"] = take(out);
  }
  if (result.empty()) usage_error("localize needs a curve or --zariski");
  return result;
}

json cmd_recover(const Options& o) {
  const std::string text = read_text(o.input);
  const json doc = read_json(text);
  std::string moments = text;
  if (doc.is_object() && doc.contains("atoms")) {
    Measure tau = load_measure(text);
    char* out = nullptr;
    check(cm_real_moments(tau.get(), 2 * o.nodes - 1 < 0 ? 0 : 2 * o.nodes - 1, &out));
    json s = take(out);
    s.erase("moments");
    moments = s.dump();
  }
  char* out = nullptr;
  check(cm_recover_atomic(moments.c_str(), o.nodes, o.rank_tol, &out));
  return take(out);
}

json cmd_stieltjes(const Options& o) {
  char* out = nullptr;
  check(cm_stieltjes_moment(o.n, o.lambda, o.perturbation, &out));
  return take(out);
}

json cmd_tensor(const Options& o) {
  if (o.s_file.empty() || o.t_file.empty()) usage_error("tensor needs --s and --t");
  char* out = nullptr;
  check(cm_tensor_sequence(read_text(o.s_file).c_str(), read_text(o.t_file).c_str(), o.degree,
                           &out));
  json a = take(out);
  if (!o.complex_form) return a;
  cm_table* t = nullptr;
  check(cm_from_real2d(a.dump().c_str(), &t));
  return {{"real", a}, {"complex", table_json(Table(t).get())}};
}

json cmd_demo(const Options& o) {
  char* out = nullptr;
  if (o.list || o.demo.empty()) {
    check(cm_demo_names(&out));
    return take(out);
  }
  check(cm_demo(o.demo.c_str(), o.t, o.demo_window, &out));
  return take(out);
}

void write(const json& doc, const Options& o) {
  const std::string text = (o.compact ? doc.dump() : doc.dump(2)) + "\n";
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw Failure{"io", "cannot write '" + o.output + "'", 1};
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated complex, Hamburger and Herglotz moment problems"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--precision", o.precision, "working precision in decimal digits")
      ->capture_default_str();
  app.add_flag("--json", o.compact, "compact single-line JSON output");
  app.add_option("-o,--output", o.output, "write the result to a file");

  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("-i,--input", o.input, what)->capture_default_str();
  };
  std::map<std::string, std::function<json(const Options&)>> handlers;

  auto* moments = app.add_subcommand("moments", "moments of a measure or density");
  input(moments, "measure or density JSON ('-' for stdin)");
  moments->add_option("--degree", o.degree, "degree or length")->capture_default_str();
  moments->add_option("--kind", o.kind, "complex | trig | real | plane");
  handlers["moments"] = cmd_moments;

  auto* pd = app.add_subcommand("check-pd", "positive semidefiniteness of a moment matrix");
  input(pd, "table, extended table, Hamburger or Herglotz JSON");
  pd->add_option("--d", o.d, "index bound of the moment matrix")->capture_default_str();
  pd->add_option("--kind", o.kind, "auto | quadrant | halfplane | hankel | toeplitz");
  pd->add_flag("--matrix", o.matrix, "include the matrix");
  handlers["check-pd"] = cmd_check_pd;

  auto* extend = app.add_subcommand("extend", "extension to the half-plane lattice");
  input(extend, "measure JSON");
  extend->add_option("--window", o.window, "window W")->capture_default_str();
  extend->add_option("--nu", o.nu_file, "circle measure: treat the input as a representing pair");
  extend->add_option("--profile", o.profile_file, "unit-mass circle profile for the atom at 0");
  extend->add_option("--snu2", o.snu2_t, "convex parameter t of the two-profile family");
  handlers["extend"] = cmd_extend;

  auto* restrict_cmd = app.add_subcommand("restrict", "quadrant part of an extended table");
  input(restrict_cmd, "extended table JSON");
  restrict_cmd->add_option("--check", o.check_file, "table to test the extension against");
  handlers["restrict"] = cmd_restrict;

  auto* flatness = app.add_subcommand("flatness", "(k,l)-flatness on the table window");
  input(flatness, "table JSON");
  flatness->add_option("--bound", o.bound, "search bound K")->capture_default_str();
  flatness->add_option("--k", o.k, "single pair: k");
  flatness->add_option("--l", o.l, "single pair: l");
  handlers["flatness"] = cmd_flatness;

  auto* classify = app.add_subcommand("classify", "support class forced by (k,l)-flatness");
  classify->add_option("--k", o.k, "k >= 0");
  classify->add_option("--l", o.l, "l");
  classify->add_option("--support", o.support_file, "support class JSON to map back to (k,l)");
  handlers["classify"] = cmd_classify;

  auto* transport = app.add_subcommand("transport", "push a measure forward");
  input(transport, "measure JSON");
  transport->add_option("--map", o.map, "phi | psi | shift | marginal | product")
      ->capture_default_str();
  transport->add_option("--height", o.h, "shift height h")->capture_default_str();
  transport->add_option("--axis", o.axis, "marginal axis (1 or 2)")->capture_default_str();
  transport->add_option("--with", o.with_file, "second factor for --map product");
  handlers["transport"] = cmd_transport;

  auto* inj = app.add_subcommand("injectivity", "sampled injectivity of z -> z/conj z on a curve");
  input(inj, "curve JSON");
  inj->add_option("--curve", o.curve, "catalog curve name");
  inj->add_option("--curve-file", o.curve_file, "curve JSON");
  inj->add_option("--param", o.params, "curve parameter key=value");
  inj->add_option("--samples", o.samples, "sample count N")->capture_default_str();
  inj->add_flag("--catalog", o.catalog, "test every catalog curve");
  handlers["injectivity"] = cmd_injectivity;

  auto* localize = app.add_subcommand("localize", "support localization on a curve");
  input(localize, "measure JSON");
  localize->add_option("--curve", o.curve, "catalog curve name");
  localize->add_option("--curve-file", o.curve_file, "curve JSON");
  localize->add_option("--param", o.params, "curve parameter key=value");
  localize->add_option("--zariski", o.zariski, "bounded-degree Zariski density test of the atoms");
  handlers["localize"] = cmd_localize;

  auto* recover = app.add_subcommand("recover", "atomic measure from Hamburger moments");
  input(recover, "Hamburger JSON or real-line measure JSON");
  recover->add_option("--nodes", o.nodes, "number of atoms N")->capture_default_str();
  recover->add_option("--rank-tol", o.rank_tol, "relative pivot tolerance (0: default)");
  handlers["recover"] = cmd_recover;

  auto* stieltjes = app.add_subcommand("stieltjes", "moments of the log-normal family");
  stieltjes->add_option("--n", o.n, "moment order")->capture_default_str();
  stieltjes->add_option("--lambda", o.lambda, "family parameter in [-1, 1]")->capture_default_str();
  stieltjes->add_flag("--perturbation", o.perturbation, "integrate the sin(2 pi ln x) term alone");
  handlers["stieltjes"] = cmd_stieltjes;

  auto* tensor = app.add_subcommand("tensor", "two-dimensional sequence a_{k,l} = s_k t_l");
  tensor->add_option("--s", o.s_file, "Hamburger JSON for s");
  tensor->add_option("--t", o.t_file, "Hamburger JSON for t");
  tensor->add_option("--degree", o.degree, "degree (-1: shorter length)");
  tensor->add_flag("--complex", o.complex_form, "also convert to a complex moment table");
  handlers["tensor"] = [](const Options& opt) {
    return cmd_tensor(opt);
  };

  auto* demo = app.add_subcommand("demo", "scripted scenarios");
  demo->add_option("name", o.demo, "snu2 | null | ham-c | no-atom | dc1 | agnesi | 0notatom");
  demo->add_option("--t", o.t, "convex parameter for snu2")->capture_default_str();
  demo->add_option("--window", o.demo_window, "extension window (0: scenario default)");
  demo->add_flag("--list", o.list, "list scenario names");
  handlers["demo"] = cmd_demo;

  // tensor's --degree means "shorter length" unless given.
  tensor->preparse_callback([&](std::size_t) { o.degree = -1; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cout << json{{"error", {{"kind", "parse"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  }

  try {
    check(cm_set_precision(o.precision));
    const std::string name = app.get_subcommands().front()->get_name();
    write(handlers.at(name)(o), o);
    return 0;
  } catch (const Failure& f) {
    std::cout << json{{"error", {{"kind", f.kind}, {"message", f.message}}}}.dump() << "\n";
    return f.exit_code;
  } catch (const json::exception& e) {
    std::cout << json{{"error", {{"kind", "parse"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
}
