#include "cmoment.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "cmoment/demos.hpp"
#include "cmoment/error.hpp"
#include "cmoment/json_io.hpp"

using namespace cmoment;
using io::json;

struct cm_measure {
  DiscreteMeasure value;
};
struct cm_table {
  MomentTable value;
};
struct cm_extended {
  ExtendedMomentTable value;
};
struct cm_curve {
  Curve value;
};

namespace {

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string& last_error() {
  thread_local std::string message;
  return message;
}

cm_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return CM_ERR_DOMAIN;
    case ErrorKind::range: return CM_ERR_RANGE;
    case ErrorKind::convergence: return CM_ERR_CONVERGENCE;
    case ErrorKind::invariant: return CM_ERR_INVARIANT;
    case ErrorKind::precondition: return CM_ERR_PRECONDITION;
    case ErrorKind::numeric: return CM_ERR_NUMERIC;
    case ErrorKind::rank_deficient: return CM_ERR_RANK_DEFICIENT;
    case ErrorKind::parse: return CM_ERR_PARSE;
  }
  return CM_ERR_INTERNAL;
}

template <class F>
cm_status guard(F&& body) {
  try {
    body();
    return CM_OK;
  } catch (const Error& e) {
    last_error() = e.what();
    return status_for(e.kind());
  } catch (const json::exception& e) {
    last_error() = e.what();
    return CM_ERR_PARSE;
  } catch (const InvalidArgument& e) {
    last_error() = e.what();
    return CM_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error() = "out of memory";
    return CM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error() = e.what();
    return CM_ERR_INTERNAL;
  } catch (...) {
    last_error() = "unknown failure";
    return CM_ERR_INTERNAL;
  }
}

template <class... Ptrs>
void require(const char* what, const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw InvalidArgument(std::string(what) + ": null argument");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) { *out = dup(j.dump()); }

json parse(const char* text) { return io::parse_text(text); }

// Quadrature tolerance tracks the working precision: 1e-28 at 39 digits.
QuadratureSpec working_quadrature() {
  QuadratureSpec spec;
  spec.digits = working_digits();
  spec.rel_tol = std::pow(10.0, -std::floor(0.72 * spec.digits));
  return spec;
}

json with_matrix(const HermitianMatrix& a, int include_matrix) {
  json report = io::to_json(is_psd(a));
  if (include_matrix) report["matrix"] = io::to_json(a);
  return report;
}

DiscreteMeasure circle_or_empty(const cm_measure* nu) {
  return nu ? nu->value : DiscreteMeasure(Domain::unit_circle);
}

}  // namespace

extern "C" {

const char* cm_status_name(cm_status status) {
  switch (status) {
    case CM_OK: return "ok";
    case CM_ERR_DOMAIN: return "domain";
    case CM_ERR_RANGE: return "range";
    case CM_ERR_CONVERGENCE: return "convergence";
    case CM_ERR_INVARIANT: return "invariant";
    case CM_ERR_PRECONDITION: return "precondition";
    case CM_ERR_NUMERIC: return "numeric";
    case CM_ERR_RANK_DEFICIENT: return "rank-deficient";
    case CM_ERR_PARSE: return "parse";
    case CM_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case CM_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* cm_last_error(void) { return last_error().c_str(); }

void cm_string_free(char* s) { std::free(s); }

cm_status cm_set_precision(unsigned digits) {
  return guard([&] {
    if (digits < 10 || digits > 2000)
      throw RangeError("precision must lie between 10 and 2000 digits");
    Real::default_precision(digits);
  });
}

unsigned cm_get_precision(void) { return working_digits(); }

cm_status cm_measure_from_json(const char* text, cm_measure** out) {
  return guard([&] {
    require("cm_measure_from_json", text, out);
    *out = new cm_measure{io::measure_from_json(parse(text))};
  });
}

cm_status cm_measure_to_json(const cm_measure* mu, char** out) {
  return guard([&] {
    require("cm_measure_to_json", mu, out);
    emit(io::to_json(mu->value), out);
  });
}

cm_status cm_measure_dirac(double re, double im, double weight, const char* domain,
                           cm_measure** out) {
  return guard([&] {
    require("cm_measure_dirac", domain, out);
    *out = new cm_measure{
        DiscreteMeasure::dirac(Complex(re, im), domain_from_string(domain), weight)};
  });
}

void cm_measure_free(cm_measure* mu) { delete mu; }

size_t cm_measure_size(const cm_measure* mu) { return mu ? mu->value.size() : 0; }

double cm_measure_total_mass(const cm_measure* mu) { return mu ? mu->value.total_mass() : 0.0; }

cm_status cm_measure_atom(const cm_measure* mu, size_t i, double* re, double* im,
                          double* weight) {
  return guard([&] {
    require("cm_measure_atom", mu, re, im, weight);
    if (i >= mu->value.size()) throw RangeError("atom index out of range");
    const Atom& a = mu->value.atoms()[i];
    *re = a.location.real();
    *im = a.location.imag();
    *weight = a.weight;
  });
}

cm_status cm_transport_phi(const cm_measure* nu, cm_measure** out) {
  return guard([&] {
    require("cm_transport_phi", nu, out);
    *out = new cm_measure{transport_phi(nu->value)};
  });
}

cm_status cm_transport_psi(const cm_measure* mu, cm_measure** out) {
  return guard([&] {
    require("cm_transport_psi", mu, out);
    *out = new cm_measure{transport_psi(mu->value)};
  });
}

cm_status cm_shift_to_horizontal_line(const cm_measure* tau, double h, cm_measure** out) {
  return guard([&] {
    require("cm_shift_to_horizontal_line", tau, out);
    *out = new cm_measure{shift_to_horizontal_line(tau->value, h)};
  });
}

cm_status cm_product_measure(const cm_measure* mu, const cm_measure* nu, cm_measure** out) {
  return guard([&] {
    require("cm_product_measure", mu, nu, out);
    *out = new cm_measure{product_measure(mu->value, nu->value)};
  });
}

cm_status cm_marginal_transport(const cm_measure* rho, int axis, cm_measure** out) {
  return guard([&] {
    require("cm_marginal_transport", rho, out);
    *out = new cm_measure{marginal_transport(rho->value, axis)};
  });
}

cm_status cm_discrete_moments(const cm_measure* mu, int degree, cm_table** out) {
  return guard([&] {
    require("cm_discrete_moments", mu, out);
    *out = new cm_table{discrete_moments(mu->value, degree)};
  });
}

cm_status cm_trig_moments(const cm_measure* nu, int degree, char** out) {
  return guard([&] {
    require("cm_trig_moments", nu, out);
    emit(io::to_json(trig_moments(nu->value, degree)), out);
  });
}

cm_status cm_real_moments(const cm_measure* tau, int length, char** out) {
  return guard([&] {
    require("cm_real_moments", tau, out);
    emit(io::to_json(real_moments(tau->value, length)), out);
  });
}

cm_status cm_plane_moments(const cm_measure* rho, int degree, char** out) {
  return guard([&] {
    require("cm_plane_moments", rho, out);
    emit(io::to_json(plane_moments(rho->value, degree)), out);
  });
}

cm_status cm_density_moments(const char* density_json, int length, char** out) {
  return guard([&] {
    require("cm_density_moments", density_json, out);
    if (length < 0) throw RangeError("moment length must be nonnegative");
    const QuadratureSpec spec = working_quadrature();
    const DensityMeasure1D tau = io::density_from_json(parse(density_json), spec);
    HamburgerTable s;
    json errors = json::array();
    for (int n = 0; n <= length; ++n) {
      const QuadratureResult r = density_moment(tau, n);
      s.s.push_back(r.value);
      errors.push_back(static_cast<double>(r.error_estimate));
    }
    json j = io::to_json(s);
    j["error_estimates"] = errors;
    emit(j, out);
  });
}

cm_status cm_table_from_json(const char* text, cm_table** out) {
  return guard([&] {
    require("cm_table_from_json", text, out);
    *out = new cm_table{io::table_from_json(parse(text))};
  });
}

cm_status cm_table_to_json(const cm_table* t, char** out) {
  return guard([&] {
    require("cm_table_to_json", t, out);
    emit(io::to_json(t->value), out);
  });
}

void cm_table_free(cm_table* t) { delete t; }

int cm_table_degree(const cm_table* t) { return t ? t->value.degree() : -1; }

cm_status cm_table_entry(const cm_table* t, int m, int n, double* re, double* im) {
  return guard([&] {
    require("cm_table_entry", t, re, im);
    const Complex z = t->value(m, n);
    *re = z.real();
    *im = z.imag();
  });
}

cm_status cm_from_hamburger(const char* hamburger_json, int degree, cm_table** out) {
  return guard([&] {
    require("cm_from_hamburger", hamburger_json, out);
    *out = new cm_table{from_hamburger(io::hamburger_from_json(parse(hamburger_json)), degree)};
  });
}

cm_status cm_from_herglotz(const char* herglotz_json, int degree, cm_table** out) {
  return guard([&] {
    require("cm_from_herglotz", herglotz_json, out);
    *out = new cm_table{from_herglotz(io::herglotz_from_json(parse(herglotz_json)), degree)};
  });
}

cm_status cm_to_real2d(const cm_table* t, char** out) {
  return guard([&] {
    require("cm_to_real2d", t, out);
    emit(io::to_json(complex_to_real2d(t->value)), out);
  });
}

cm_status cm_from_real2d(const char* real2d_json, cm_table** out) {
  return guard([&] {
    require("cm_from_real2d", real2d_json, out);
    *out = new cm_table{real2d_to_complex(io::real2d_from_json(parse(real2d_json)))};
  });
}

cm_status cm_extended_from_json(const char* text, cm_extended** out) {
  return guard([&] {
    require("cm_extended_from_json", text, out);
    *out = new cm_extended{io::extended_from_json(parse(text))};
  });
}

cm_status cm_extended_to_json(const cm_extended* t, char** out) {
  return guard([&] {
    require("cm_extended_to_json", t, out);
    emit(io::to_json(t->value), out);
  });
}

void cm_extended_free(cm_extended* t) { delete t; }

int cm_extended_window(const cm_extended* t) { return t ? t->value.window() : -1; }

cm_status cm_extended_entry(const cm_extended* t, int m, int n, double* re, double* im) {
  return guard([&] {
    require("cm_extended_entry", t, re, im);
    const Complex z = t->value(m, n);
    *re = z.real();
    *im = z.imag();
  });
}

cm_status cm_check_pd_quadrant(const cm_table* t, int d, int include_matrix, char** out) {
  return guard([&] {
    require("cm_check_pd_quadrant", t, out);
    emit(with_matrix(moment_matrix_quadrant(t->value, d), include_matrix), out);
  });
}

cm_status cm_check_pd_halfplane(const cm_extended* t, int d, int include_matrix, char** out) {
  return guard([&] {
    require("cm_check_pd_halfplane", t, out);
    emit(with_matrix(moment_matrix_halfplane(t->value, d), include_matrix), out);
  });
}

cm_status cm_check_pd_hankel(const char* hamburger_json, int d, int include_matrix, char** out) {
  return guard([&] {
    require("cm_check_pd_hankel", hamburger_json, out);
    emit(with_matrix(hankel(io::hamburger_from_json(parse(hamburger_json)), d), include_matrix),
         out);
  });
}

cm_status cm_check_pd_toeplitz(const char* herglotz_json, int d, int include_matrix,
                               char** out) {
  return guard([&] {
    require("cm_check_pd_toeplitz", herglotz_json, out);
    emit(with_matrix(toeplitz(io::herglotz_from_json(parse(herglotz_json)), d), include_matrix),
         out);
  });
}

cm_status cm_detect_flatness(const cm_table* t, int bound, char** out) {
  return guard([&] {
    require("cm_detect_flatness", t, out);
    json list = json::array();
    for (const auto& c : detect_flatness(t->value, bound)) list.push_back(io::to_json(c));
    emit(list, out);
  });
}

cm_status cm_check_flatness(const cm_table* t, int k, int l, char** out) {
  return guard([&] {
    require("cm_check_flatness", t, out);
    emit(io::to_json(check_flatness(t->value, k, l)), out);
  });
}

cm_status cm_classify_flat_support(int k, int l, char** out) {
  return guard([&] {
    require("cm_classify_flat_support", out);
    emit(io::to_json(classify_flat_support(k, l)), out);
  });
}

cm_status cm_flatness_for_support(const char* support_json, int* k, int* l) {
  return guard([&] {
    require("cm_flatness_for_support", support_json, k, l);
    const auto [kk, ll] = flatness_for_support(io::support_from_json(parse(support_json)));
    *k = kk;
    *l = ll;
  });
}

cm_status cm_build_extension(const cm_measure* mu, const cm_measure* nu, int window,
                             cm_extended** out) {
  return guard([&] {
    require("cm_build_extension", mu, out);
    *out = new cm_extended{build_extension(RepresentingPair(mu->value, circle_or_empty(nu)), window)};
  });
}

cm_status cm_extension_from_measure(const cm_measure* mu, const cm_measure* profile, int window,
                                    cm_extended** out) {
  return guard([&] {
    require("cm_extension_from_measure", mu, profile, out);
    *out = new cm_extended{build_extension(measure_to_pair(mu->value, profile->value), window)};
  });
}

cm_status cm_pair_to_measure(const cm_measure* mu, const cm_measure* nu, cm_measure** out) {
  return guard([&] {
    require("cm_pair_to_measure", mu, out);
    *out = new cm_measure{pair_to_measure(RepresentingPair(mu->value, circle_or_empty(nu)))};
  });
}

cm_status cm_snu2_family(const cm_measure* mu, double t, int window, cm_extended** out) {
  return guard([&] {
    require("cm_snu2_family", mu, out);
    *out = new cm_extended{snu2_family(mu->value, t, window)};
  });
}

cm_status cm_restrict(const cm_extended* t, cm_table** out) {
  return guard([&] {
    require("cm_restrict", t, out);
    *out = new cm_table{restrict(t->value)};
  });
}

cm_status cm_is_extension(const cm_extended* big, const cm_table* t, char** out) {
  return guard([&] {
    require("cm_is_extension", big, t, out);
    emit(io::to_json(is_extension(big->value, t->value)), out);
  });
}

cm_status cm_quasi_det_residual(const cm_measure* mu1, const cm_measure* nu1,
                                const cm_measure* mu2, const cm_measure* nu2, int degree,
                                char** out) {
  return guard([&] {
    require("cm_quasi_det_residual", mu1, mu2, out);
    const RepresentingPair first(mu1->value, circle_or_empty(nu1));
    const RepresentingPair second(mu2->value, circle_or_empty(nu2));
    emit(io::to_json(quasi_det_residual(first, second, degree)), out);
  });
}

cm_status cm_curve_from_json(const char* text, cm_curve** out) {
  return guard([&] {
    require("cm_curve_from_json", text, out);
    *out = new cm_curve{io::curve_from_json(parse(text))};
  });
}

cm_status cm_curve_by_name(const char* name, const char* params_json, cm_curve** out) {
  return guard([&] {
    require("cm_curve_by_name", name, out);
    if (!params_json) {
      for (auto& c : curve_catalog())
        if (c.name == name) {
          *out = new cm_curve{std::move(c)};
          return;
        }
      throw DomainError("unknown catalog curve '" + std::string(name) + "'");
    }
    std::map<std::string, double> params;
    {
      const json p = parse(params_json);
      if (!p.is_object()) throw ParseError("curve params must be an object");
      for (const auto& [key, v] : p.items()) {
        if (!v.is_number()) throw ParseError("curve param '" + key + "' must be a number");
        params[key] = v.get<double>();
      }
    }
    *out = new cm_curve{curves::from_name(name, params)};
  });
}

cm_status cm_curve_to_json(const cm_curve* c, char** out) {
  return guard([&] {
    require("cm_curve_to_json", c, out);
    emit(io::to_json(c->value), out);
  });
}

void cm_curve_free(cm_curve* c) { delete c; }

cm_status cm_curve_catalog(char** out) {
  return guard([&] {
    require("cm_curve_catalog", out);
    json list = json::array();
    for (const auto& c : curve_catalog()) list.push_back(io::to_json(c));
    emit(list, out);
  });
}

cm_status cm_localization_residual(const cm_measure* mu, const cm_curve* c, double* residual) {
  return guard([&] {
    require("cm_localization_residual", mu, c, residual);
    *residual = localization_residual(mu->value, c->value);
  });
}

cm_status cm_injectivity_test(const cm_curve* c, int samples, char** out) {
  return guard([&] {
    require("cm_injectivity_test", c, out);
    emit(io::to_json(psi_injectivity_sample_test(c->value, samples)), out);
  });
}

cm_status cm_collinear_through_origin(double re1, double im1, double re2, double im2,
                                      int* result) {
  return guard([&] {
    require("cm_collinear_through_origin", result);
    *result = collinear_through_origin(Complex(re1, im1), Complex(re2, im2)) ? 1 : 0;
  });
}

cm_status cm_agnesi_fiber(double a, double b, double y, char** out) {
  return guard([&] {
    require("cm_agnesi_fiber", out);
    json pts = json::array();
    for (Complex z : agnesi_fiber(a, b, y)) pts.push_back(io::point_json(z));
    emit(pts, out);
  });
}

cm_status cm_zariski_density_test(const cm_measure* points, int d, char** out) {
  return guard([&] {
    require("cm_zariski_density_test", points, out);
    std::vector<Complex> pts;
    for (const auto& a : points->value.atoms()) pts.push_back(a.location);
    emit(io::to_json(zariski_density_test(pts, d)), out);
  });
}

cm_status cm_recover_atomic(const char* hamburger_json, int nodes, double rank_tolerance,
                            char** out) {
  return guard([&] {
    require("cm_recover_atomic", hamburger_json, out);
    if (!(rank_tolerance >= 0.0)) throw DomainError("rank tolerance must be nonnegative");
    RecoveryOptions opts;
    opts.digits = working_digits();
    opts.rank_tolerance = rank_tolerance;
    const HamburgerTable s = io::hamburger_from_json(parse(hamburger_json));
    const JacobiMatrix j = hankel_to_jacobi(s, nodes, opts);
    const DiscreteMeasure mu = recover_atomic(s, nodes, opts);
    emit({{"measure", io::to_json(mu)}, {"jacobi", io::to_json(j)}}, out);
  });
}

cm_status cm_stieltjes_moment(int n, double lambda, int perturbation, char** out) {
  return guard([&] {
    require("cm_stieltjes_moment", out);
    const QuadratureSpec spec = working_quadrature();
    PrecisionScope scope(spec.digits);
    const QuadratureResult r =
        perturbation ? stieltjes_perturbation(n, spec) : stieltjes_moment(n, lambda, spec);
    const Real closed = stieltjes_closed_form(n);
    json j = io::to_json(r);
    j["n"] = n;
    j["closed_form"] = static_cast<double>(closed);
    if (perturbation) {
      j["relative_magnitude"] = static_cast<double>(abs(r.value) / closed);
    } else {
      j["lambda"] = lambda;
      j["relative_error"] = static_cast<double>(abs(r.value - closed) / closed);
    }
    emit(j, out);
  });
}

cm_status cm_tensor_sequence(const char* s_json, const char* t_json, int degree, char** out) {
  return guard([&] {
    require("cm_tensor_sequence", s_json, t_json, out);
    std::optional<int> d;
    if (degree >= 0) d = degree;
    emit(io::to_json(tensor_sequence(io::hamburger_from_json(parse(s_json)),
                                     io::hamburger_from_json(parse(t_json)), d)),
         out);
  });
}

cm_status cm_dc1_example(char** out) {
  return guard([&] {
    require("cm_dc1_example", out);
    emit(demos::run("dc1"), out);
  });
}

cm_status cm_demo(const char* name, double t, int window, char** out) {
  return guard([&] {
    require("cm_demo", name, out);
    demos::DemoOptions opts;
    opts.t = t;
    if (window > 0) opts.window = window;
    emit(demos::run(name, opts), out);
  });
}

cm_status cm_demo_names(char** out) {
  return guard([&] {
    require("cm_demo_names", out);
    emit(demos::names(), out);
  });
}

}  // extern "C"
