#pragma once

#include <json.hpp>

#include "cmoment/extensions.hpp"
#include "cmoment/geometry.hpp"
#include "cmoment/measures.hpp"
#include "cmoment/positivity.hpp"
#include "cmoment/recovery.hpp"
#include "cmoment/sequences.hpp"

// JSON forms of the library's values. Parsers reject unknown keys and throw
// ParseError for malformed input; type invariants are then enforced by the
// constructors (DomainError, InvariantError, ...).
namespace cmoment::io {

using nlohmann::json;

json parse_text(const std::string& text);

// { "domain": "...", "atoms": [ { "re": r, "im": r, "w": r } ] }
json to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const json& j);
bool is_density_json(const json& j);
// { "preset": "uniform", "lower": a, "upper": b } or
// { "preset": "stieltjes", "lambda": l }
DensityMeasure1D density_from_json(const json& j, const QuadratureSpec& spec);

// { "degree": D, "entries": [ [m, n, re, im], ... ] }; a missing entry is
// taken from its Hermitian mirror.
json to_json(const MomentTable& t);
MomentTable table_from_json(const json& j);

// { "window": W, "entries": [ [m, n, re, im], ... ] }
json to_json(const ExtendedMomentTable& t);
ExtendedMomentTable extended_from_json(const json& j);

// { "moments": [ s0, s1, ... ] }; strings keep full precision.
json to_json(const HamburgerTable& s);
HamburgerTable hamburger_from_json(const json& j);

// { "degree": D, "entries": [ [n, re, im], ... ] } for n = -D..D
json to_json(const HerglotzTable& s);
HerglotzTable herglotz_from_json(const json& j);

// { "degree": D, "entries": [ [k, l, value], ... ] } (known entries only)
json to_json(const RealMomentTable2D& a);
RealMomentTable2D real2d_from_json(const json& j);

json to_json(const HermitianMatrix& a);
json to_json(const PsdReport& r);
json to_json(const FlatnessCertificate& c);
json to_json(const ExtensionCheck& c);
json to_json(const SupportClass& c);
SupportClass support_from_json(const json& j);
json to_json(const InjectivityVerdict& v);
json to_json(const ZariskiVerdict& v);
json to_json(const Polynomial2& p);
json to_json(const QuasiDeterminacyResidual& r);
json to_json(const QuadratureResult& r);
json to_json(const Dc1Report& r);
json to_json(const JacobiMatrix& j);

// { "name": ..., "coeffs": [ [i, j, c], ... ], "params": { ... } }. Named
// catalog curves are rebuilt from their params, which restores the
// parameterization.
json to_json(const Curve& c);
Curve curve_from_json(const json& j);

json point_json(Complex z);
std::string real_string(const Real& x);

}  // namespace cmoment::io
