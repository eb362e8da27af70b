#include "funobs/io.hpp"

#include <fstream>
#include <sstream>

#include "funobs/error.hpp"
#include "funobs/rational.hpp"

namespace funobs {

namespace {

// DOM builder that keeps the literal text of every non-integer number, so
// decimals convert to rationals exactly.
class ExactSax : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using json_sax_dom_parser::json_sax_dom_parser;
  bool number_float(double, const std::string& literal) {
    std::string copy = literal;
    return string(copy);
  }
};

Json parse_exact(const std::string& text) {
  Json out;
  ExactSax sax(out);
  try {
    Json::sax_parse(text, &sax);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::parse, e.what());
  }
  return out;
}

[[noreturn]] void field_error(const std::string& field, const std::string& what,
                              ErrorCode code = ErrorCode::parse) {
  fail(code, "field '" + field + "': " + what);
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      field_error(field, e.what());
    }
  }
  field_error(field, "expected a rational literal, got " + j.dump());
}

Json rational_to_json(const Rational& r) { return to_string(r); }

double double_from_json(const Json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(rational_from_json(j, field));
  field_error(field, "expected a number, got " + j.dump());
}

std::size_t size_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    field_error(field, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

// Raw rows of a matrix field; a row may be empty.
using RawMatrix = std::vector<std::vector<Json>>;

RawMatrix raw_matrix(const Json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of rows");
  RawMatrix rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) field_error(field + "[" + std::to_string(i) + "]", "expected an array");
    rows.emplace_back(j[i].begin(), j[i].end());
    if (rows.back().size() != rows.front().size())
      field_error(field, "row " + std::to_string(i + 1) + " has " + std::to_string(rows.back().size()) +
                             " entries, row 1 has " + std::to_string(rows.front().size()),
                  ErrorCode::dimension);
  }
  return rows;
}

std::size_t raw_cols(const RawMatrix& m) { return m.empty() ? 0 : m.front().size(); }

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

std::vector<double> doubles_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(double_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

Eigen::VectorXd vector_from_json(const Json& j, const std::string& field) {
  const std::vector<double> v = doubles_from_json(j, field);
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Real matrix with optional expected shape (-1 means free).
Eigen::MatrixXd real_matrix_from_json(const Json& j, const std::string& field, Eigen::Index rows, Eigen::Index cols) {
  const RawMatrix raw = raw_matrix(j, field);
  const auto r = static_cast<Eigen::Index>(raw.size());
  const auto c = raw.empty() ? (cols < 0 ? 0 : cols) : static_cast<Eigen::Index>(raw.front().size());
  if ((rows >= 0 && r != rows) || (cols >= 0 && c != cols))
    field_error(field, "expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                           std::to_string(r) + "x" + std::to_string(c),
                ErrorCode::dimension);
  Eigen::MatrixXd out(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index k = 0; k < c; ++k)
      out(i, k) = double_from_json(raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                                   field + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  return out;
}

const Json* find(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Rational& v = m(i, k);
      if (v.get_den() == 1 && v.get_num().fits_slong_p()) row.push_back(v.get_num().get_si());
      else row.push_back(to_string(v));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& field) {
  const RawMatrix raw = raw_matrix(j, field);
  const std::size_t c = raw.empty() ? cols : raw.front().size();
  if (raw.size() != rows || c != cols)
    field_error(field, "expected " + dims(rows, cols) + ", got " + dims(raw.size(), raw_cols(raw)),
                ErrorCode::dimension);
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      out(i, k) = rational_from_json(raw[i][k], field + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.coefficients()) coeffs.push_back(rational_to_json(c));
  return Json{{"coefficients", coeffs}, {"text", p.to_string()}};
}

namespace {

Polynomial coefficients_from_json(const Json& j, const std::string& field) {
  if (j.is_number() || j.is_string()) return Polynomial(rational_from_json(j, field));
  if (!j.is_array()) field_error(field, "expected an array of coefficients");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return Polynomial(std::move(c));
}

}  // namespace

Polynomial polynomial_from_json(const Json& j) {
  if (j.is_object()) return coefficients_from_json(j.at("coefficients"), "coefficients");
  return coefficients_from_json(j, "coefficients");
}

// ---------------------------------------------------------------------------
// System files

SystemFile parse_system(const std::string& text) {
  const Json j = parse_exact(text);
  if (!j.is_object()) fail(ErrorCode::parse, "system file: expected a JSON object at top level");
  static const char* const known[] = {"name", "description", "n", "m", "p", "q", "A", "B", "C", "D", "E", "F", "expected"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) field_error(it.key(), "unknown field");
  }

  SystemFile out;
  if (const Json* v = find(j, "name")) {
    if (!v->is_string()) field_error("name", "expected a string");
    out.name = v->get<std::string>();
  }
  if (const Json* v = find(j, "description")) {
    if (!v->is_string()) field_error("description", "expected a string");
    out.description = v->get<std::string>();
  }

  std::map<std::string, RawMatrix> raw;
  for (const char* k : {"A", "B", "C", "D", "E", "F"})
    if (const Json* v = find(j, k)) raw[k] = raw_matrix(*v, k);
  auto has = [&](const char* k) { return raw.count(k) > 0; };
  auto declared = [&](const char* k) -> std::optional<std::size_t> {
    if (const Json* v = find(j, k)) return size_from_json(*v, k);
    return std::nullopt;
  };
  // A column count is only known from a matrix with at least one row.
  auto cols_of = [&](const char* k) -> std::optional<std::size_t> {
    if (has(k) && !raw[k].empty()) return raw_cols(raw[k]);
    return std::nullopt;
  };
  auto rows_of = [&](const char* k) -> std::optional<std::size_t> {
    if (has(k)) return raw[k].size();
    return std::nullopt;
  };

  const std::size_t n = declared("n").value_or(rows_of("A").value_or(0));
  if (!has("A") && n > 0) field_error("A", "missing (required when n > 0)");
  if (!find(j, "n") && !has("A")) field_error("A", "missing; give A or declare \"n\": 0");
  const std::size_t m = declared("m").value_or(cols_of("B").value_or(cols_of("D").value_or(cols_of("F").value_or(0))));
  const std::size_t p = declared("p").value_or(rows_of("C").value_or(rows_of("D").value_or(0)));
  const std::size_t q = declared("q").value_or(rows_of("E").value_or(rows_of("F").value_or(0)));

  auto block = [&](const char* k, std::size_t r, std::size_t c) {
    if (!has(k)) return Matrix(r, c);
    return matrix_from_json(j.at(k), r, c, k);
  };
  out.system = make_system(block("A", n, n), block("B", n, m), block("C", p, n), block("D", p, m), block("E", q, n),
                           block("F", q, m));

  if (const Json* v = find(j, "expected")) {
    if (!v->is_object()) field_error("expected", "expected an object of property: boolean");
    for (auto it = v->begin(); it != v->end(); ++it) {
      if (!property_from_string(it.key())) field_error("expected." + it.key(), "unknown property");
      if (!it->is_boolean()) field_error("expected." + it.key(), "expected a boolean");
      out.expected[it.key()] = it->get<bool>();
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SystemFile load_system(const std::string& path) {
  try {
    return parse_system(read_file(path));
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

std::string serialize_system(const SystemFile& file) {
  const SystemSextuple& s = file.system;
  Json j;
  j["name"] = file.name;
  if (!file.description.empty()) j["description"] = file.description;
  j["n"] = s.n();
  j["m"] = s.m();
  j["p"] = s.p();
  j["q"] = s.q();
  j["A"] = matrix_to_json(s.A);
  j["B"] = matrix_to_json(s.B);
  j["C"] = matrix_to_json(s.C);
  j["D"] = matrix_to_json(s.D);
  j["E"] = matrix_to_json(s.E);
  j["F"] = matrix_to_json(s.F);
  if (!file.expected.empty()) {
    Json e = Json::object();
    for (const auto& [k, v] : file.expected) e[k] = v;
    j["expected"] = e;
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Observer and scenario files

namespace {

RationalFunction ratfunc_entry(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rational_function(j.get<std::string>());
    } catch (const Error& e) {
      field_error(field, e.what());
    }
  }
  if (j.is_number()) return RationalFunction(Polynomial(rational_from_json(j, field)));
  if (j.is_object()) {
    const Json* num = find(j, "num");
    const Json* den = find(j, "den");
    if (!num || !den) field_error(field, "expected {\"num\": [...], \"den\": [...]}");
    Polynomial d = coefficients_from_json(*den, field + ".den");
    if (d.is_zero()) field_error(field + ".den", "zero denominator");
    return RationalFunction(coefficients_from_json(*num, field + ".num"), d);
  }
  field_error(field, "expected a formula string or {num, den}");
}

}  // namespace

StateSpaceRealization parse_observer(const std::string& text) {
  const Json j = parse_exact(text);
  if (!j.is_object()) fail(ErrorCode::parse, "observer file: expected a JSON object");
  if (const Json* nj = find(j, "N")) {
    RationalFunctionMatrix n;
    if (nj->is_string()) {
      try {
        n = parse_rational_function_matrix(nj->get<std::string>());
      } catch (const Error& e) {
        field_error("N", e.what());
      }
    } else {
      const RawMatrix raw = raw_matrix(*nj, "N");
      n = RationalFunctionMatrix(raw.size(), raw_cols(raw));
      for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t k = 0; k < raw[i].size(); ++k)
          n(i, k) = ratfunc_entry(raw[i][k], "N[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return realize(n);
  }
  const Json* rj = find(j, "R");
  if (!rj) field_error("R", "missing (give either N or G, H, Q, R)");
  StateSpaceRealization r;
  r.R = real_matrix_from_json(*rj, "R", -1, -1);
  const Eigen::Index q = r.R.rows(), p = r.R.cols();
  const Json* gj = find(j, "G");
  r.G = gj ? real_matrix_from_json(*gj, "G", -1, -1) : Eigen::MatrixXd(0, 0);
  const Eigen::Index nu = r.G.rows();
  if (r.G.cols() != nu) field_error("G", "must be square");
  const Json* hj = find(j, "H");
  const Json* qj = find(j, "Q");
  r.H = hj ? real_matrix_from_json(*hj, "H", nu, p) : Eigen::MatrixXd::Zero(nu, p);
  r.Q = qj ? real_matrix_from_json(*qj, "Q", q, nu) : Eigen::MatrixXd::Zero(q, nu);
  return r;
}

namespace {

SourceSignal source_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) field_error(field, "expected an object with a \"kind\"");
  const Json* kj = find(j, "kind");
  if (!kj || !kj->is_string()) field_error(field + ".kind", "missing");
  const std::string kind = kj->get<std::string>();
  if (kind == "zero") return ZeroInput{};
  if (kind == "constant") return ConstantInput{vector_from_json(j.at("value"), field + ".value")};
  if (kind == "polynomial") {
    PolynomialInput in;
    const Json& c = j.at("coefficients");
    if (!c.is_array()) field_error(field + ".coefficients", "expected an array of vectors");
    for (std::size_t i = 0; i < c.size(); ++i)
      in.coeffs.push_back(vector_from_json(c[i], field + ".coefficients[" + std::to_string(i) + "]"));
    return in;
  }
  if (kind == "sinusoid") {
    SinusoidBank in;
    const Json& terms = j.at("terms");
    if (!terms.is_array()) field_error(field + ".terms", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string f = field + ".terms[" + std::to_string(i) + "]";
      SinusoidBank::Term t;
      t.amplitude = vector_from_json(terms[i].at("amplitude"), f + ".amplitude");
      t.omega = double_from_json(terms[i].at("omega"), f + ".omega");
      if (const Json* ph = find(terms[i], "phase")) t.phase = double_from_json(*ph, f + ".phase");
      in.terms.push_back(std::move(t));
    }
    return in;
  }
  if (kind == "table") {
    SampledTable in;
    in.t = doubles_from_json(j.at("t"), field + ".t");
    const Json& u = j.at("u");
    if (!u.is_array() || u.size() != in.t.size()) field_error(field + ".u", "expected one vector per time sample");
    for (std::size_t i = 0; i < u.size(); ++i) in.u.push_back(vector_from_json(u[i], field + ".u[" + std::to_string(i) + "]"));
    if (in.t.empty()) field_error(field + ".t", "table is empty");
    for (std::size_t i = 1; i < in.t.size(); ++i)
      if (!(in.t[i] > in.t[i - 1])) field_error(field + ".t", "times must be strictly increasing");
    return in;
  }
  if (kind == "expression") {
    ExpressionInput in;
    const Json& c = j.at("components");
    if (!c.is_array()) field_error(field + ".components", "expected an array of formula strings");
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_string()) field_error(field + ".components[" + std::to_string(i) + "]", "expected a string");
      try {
        in.components.push_back(Expression::parse(c[i].get<std::string>()));
      } catch (const Error& e) {
        field_error(field + ".components[" + std::to_string(i) + "]", e.what());
      }
    }
    return in;
  }
  field_error(field + ".kind", "unknown input kind '" + kind + "'");
}

InputSignal input_from_json(const Json& j, const std::string& field) {
  if (j.is_object() && j.value("kind", std::string()) == "filtered") {
    FilteredInput f;
    const Json* src = find(j, "source");
    if (!src) field_error(field + ".source", "missing");
    f.source = source_from_json(*src, field + ".source");
    f.A = real_matrix_from_json(j.at("A"), field + ".A", -1, -1);
    const Eigen::Index nw = f.A.rows();
    f.B = real_matrix_from_json(j.at("B"), field + ".B", nw, -1);
    f.C = real_matrix_from_json(j.at("C"), field + ".C", -1, nw);
    f.D = real_matrix_from_json(j.at("D"), field + ".D", f.C.rows(), f.B.cols());
    f.w0 = find(j, "w0") ? vector_from_json(j.at("w0"), field + ".w0") : Eigen::VectorXd::Zero(nw);
    if (f.w0.size() != nw) field_error(field + ".w0", "length differs from the filter order");
    return f;
  }
  return std::visit([](auto&& s) -> InputSignal { return s; }, source_from_json(j, field));
}

}  // namespace

ScenarioFile parse_scenario(const std::string& text) {
  const Json j = parse_exact(text);
  if (!j.is_object()) fail(ErrorCode::parse, "scenario file: expected a JSON object");
  ScenarioFile out;
  Scenario& s = out.scenario;
  try {
    if (const Json* v = find(j, "x0")) s.x0 = vector_from_json(*v, "x0");
    if (const Json* v = find(j, "xi0")) s.xi0 = vector_from_json(*v, "xi0");
    if (const Json* v = find(j, "horizon")) {
      s.horizon = double_from_json(*v, "horizon");
      out.horizon_given = true;
    }
    if (const Json* v = find(j, "step")) s.step = double_from_json(*v, "step");
    if (const Json* v = find(j, "threshold")) out.threshold = double_from_json(*v, "threshold");
    if (const Json* v = find(j, "input")) s.input = input_from_json(*v, "input");
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse, std::string("scenario file: ") + e.what());
  }
  if (!(s.step > 0)) field_error("step", "must be positive");
  if (out.horizon_given && !(s.horizon >= s.step)) field_error("horizon", "must be at least one step");
  return out;
}

// ---------------------------------------------------------------------------
// Reports

std::string property_label(Property p) {
  switch (p) {
    case Property::functional_detectable: return "functional";
    case Property::strongly_functional_detectable: return "strong";
    case Property::strong_star_functional_detectable: return "strong-star";
    case Property::hautus_strong_detectable: return "hautus";
    case Property::hautus_strong_star_detectable: return "hautus-star";
    case Property::asympt_strong_left_invertible: return "leftinv";
    case Property::asympt_strong_star_left_invertible: return "leftinv-star";
    case Property::darouach_fixed_order: return "darouach";
  }
  return "unknown";
}

namespace {

Json hurwitz_to_json(const HurwitzReport& h) {
  Json col = Json::array();
  for (const Rational& r : h.routh_first_column) col.push_back(rational_to_json(r));
  return Json{{"is_hurwitz", h.is_hurwitz},
              {"failure_reason", h.failure_reason ? Json(to_string(*h.failure_reason)) : Json()},
              {"routh_first_column", col}};
}

HurwitzReport hurwitz_from_json(const Json& j) {
  HurwitzReport h;
  h.is_hurwitz = j.at("is_hurwitz").get<bool>();
  if (const Json* f = find(j, "failure_reason")) {
    for (HurwitzFailure r : {HurwitzFailure::nonpositive_coefficient, HurwitzFailure::routh_degeneracy,
                             HurwitzFailure::sign_change})
      if (to_string(r) == f->get<std::string>()) h.failure_reason = r;
    if (!h.failure_reason) field_error("failure_reason", "unknown value " + f->dump());
  }
  for (const Json& r : j.at("routh_first_column")) h.routh_first_column.push_back(rational_from_json(r, "routh_first_column"));
  return h;
}

Json vector_to_json(const Matrix& column) {
  Json v = Json::array();
  for (std::size_t i = 0; i < column.rows(); ++i)
    for (std::size_t k = 0; k < column.cols(); ++k) v.push_back(rational_to_json(column(i, k)));
  return v;
}

Matrix column_from_json(const Json& j, const std::string& field) {
  Matrix m(j.size(), 1);
  for (std::size_t i = 0; i < j.size(); ++i) m(i, 0) = rational_from_json(j[i], field);
  return m;
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (std::size_t k = 0; k < s.dim(); ++k) basis.push_back(vector_to_json(s.basis().col(k)));
  return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

Subspace subspace_from_json(const Json& j) {
  const std::size_t d = j.at("ambient_dim").get<std::size_t>();
  const Json& basis = j.at("basis");
  Matrix gens(d, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) gens.set_block(0, k, column_from_json(basis[k], "basis"));
  return basis.empty() ? Subspace::zero(d) : Subspace::span(gens);
}

Json ratfunc_to_json(const RationalFunction& f) {
  Json num = Json::array(), den = Json::array();
  for (const Rational& c : f.num().coefficients()) num.push_back(rational_to_json(c));
  for (const Rational& c : f.den().coefficients()) den.push_back(rational_to_json(c));
  return Json{{"num", num}, {"den", den}, {"text", f.to_string()}};
}

Json classification_to_json(const Classification& c) {
  return Json{{"proper", c.proper},
              {"pole_polynomial", polynomial_to_json(c.pole_polynomial)},
              {"stable", c.stable},
              {"pole_report", hurwitz_to_json(c.pole_report)}};
}

Classification classification_from_json(const Json& j) {
  Classification c;
  c.proper = j.at("proper").get<bool>();
  c.pole_polynomial = polynomial_from_json(j.at("pole_polynomial"));
  c.stable = j.at("stable").get<bool>();
  c.pole_report = hurwitz_from_json(j.at("pole_report"));
  return c;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["ranks"] = Json::object();
  for (const auto& [k, v] : c.ranks) j["ranks"][k] = v;
  j["polynomials"] = Json::object();
  for (const auto& [k, v] : c.polynomials) j["polynomials"][k] = polynomial_to_json(v);
  j["hurwitz"] = Json::object();
  for (const auto& [k, v] : c.hurwitz) j["hurwitz"][k] = hurwitz_to_json(v);
  j["subspaces"] = Json::object();
  for (const auto& [k, v] : c.subspaces) j["subspaces"][k] = subspace_to_json(v);
  j["conditions"] = Json::object();
  for (const auto& [k, v] : c.conditions) j["conditions"][k] = v;
  if (c.toeplitz) {
    const KernelInclusion& t = *c.toeplitz;
    Json tj{{"holds", t.holds},
            {"checked_up_to", t.checked_up_to},
            {"failing_k", t.failing_k ? Json(*t.failing_k) : Json()},
            {"witness", Json()}};
    if (t.witness) {
      Json q = Json::array(), p = Json::array();
      for (const Matrix& v : t.witness->q) q.push_back(vector_to_json(v));
      for (const Matrix& v : t.witness->p) p.push_back(vector_to_json(v));
      tj["witness"] = Json{{"q", q}, {"p", p}, {"violated_block", t.witness->violated_block}};
    }
    j["toeplitz"] = tj;
  } else {
    j["toeplitz"] = Json();
  }
  j["failing_condition"] = c.failing_condition;
  j["notes"] = c.notes;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  for (auto it = j.at("ranks").begin(); it != j.at("ranks").end(); ++it) c.ranks[it.key()] = it->get<std::size_t>();
  for (auto it = j.at("polynomials").begin(); it != j.at("polynomials").end(); ++it)
    c.polynomials[it.key()] = polynomial_from_json(*it);
  for (auto it = j.at("hurwitz").begin(); it != j.at("hurwitz").end(); ++it) c.hurwitz[it.key()] = hurwitz_from_json(*it);
  for (auto it = j.at("subspaces").begin(); it != j.at("subspaces").end(); ++it)
    c.subspaces[it.key()] = subspace_from_json(*it);
  for (auto it = j.at("conditions").begin(); it != j.at("conditions").end(); ++it) c.conditions[it.key()] = it->get<bool>();
  if (const Json* t = find(j, "toeplitz")) {
    KernelInclusion k;
    k.holds = t->at("holds").get<bool>();
    k.checked_up_to = t->at("checked_up_to").get<std::size_t>();
    if (const Json* f = find(*t, "failing_k")) k.failing_k = f->get<std::size_t>();
    if (const Json* w = find(*t, "witness")) {
      KernelWitness kw;
      for (const Json& v : w->at("q")) kw.q.push_back(column_from_json(v, "toeplitz.witness.q"));
      for (const Json& v : w->at("p")) kw.p.push_back(column_from_json(v, "toeplitz.witness.p"));
      kw.violated_block = w->at("violated_block").get<std::size_t>();
      k.witness = std::move(kw);
    }
    c.toeplitz = std::move(k);
  }
  c.failing_condition = j.at("failing_condition").get<std::string>();
  c.notes = j.at("notes").get<std::vector<std::string>>();
  return c;
}

Json witness_to_json(const WitnessReport& w) {
  Json j{{"solvable_over_field", w.solvable_over_field}, {"n", w.n}, {"p", w.p}, {"left_kernel_dim", w.left_kernel_dim}};
  if (!w.MN) {
    j["MN"] = Json();
    return j;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < w.MN->rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < w.MN->cols(); ++k) row.push_back(ratfunc_to_json((*w.MN)(i, k)));
    rows.push_back(std::move(row));
  }
  j["MN"] = Json{{"rows", w.MN->rows()}, {"cols", w.MN->cols()}, {"entries", rows}};
  j["residual_zero"] = w.residual_zero;
  j["is_proper"] = w.is_proper;
  j["pole_denominator"] = polynomial_to_json(w.pole_denominator);
  j["denominator_hurwitz"] = hurwitz_to_json(w.denominator_hurwitz);
  j["n_block"] = w.n_block ? classification_to_json(*w.n_block) : Json();
  return j;
}

WitnessReport witness_from_json(const Json& j) {
  WitnessReport w;
  w.solvable_over_field = j.at("solvable_over_field").get<bool>();
  w.n = j.at("n").get<std::size_t>();
  w.p = j.at("p").get<std::size_t>();
  w.left_kernel_dim = j.at("left_kernel_dim").get<std::size_t>();
  const Json* mn = find(j, "MN");
  if (!mn) return w;
  RationalFunctionMatrix m(mn->at("rows").get<std::size_t>(), mn->at("cols").get<std::size_t>());
  const Json& entries = mn->at("entries");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = ratfunc_entry(entries.at(i).at(k), "MN");
  w.MN = std::move(m);
  w.residual_zero = j.at("residual_zero").get<bool>();
  w.is_proper = j.at("is_proper").get<bool>();
  w.pole_denominator = polynomial_from_json(j.at("pole_denominator"));
  w.denominator_hurwitz = hurwitz_from_json(j.at("denominator_hurwitz"));
  if (const Json* nb = find(j, "n_block")) w.n_block = classification_from_json(*nb);
  return w;
}

}  // namespace

Json report_to_json(const Report& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["system"] = r.system_name;
  j["verdicts"] = Json::array();
  for (const Verdict& v : r.verdicts)
    j["verdicts"].push_back(Json{{"property", to_string(v.property)},
                                 {"label", property_label(v.property)},
                                 {"holds", v.holds},
                                 {"certificate", certificate_to_json(v.certificate)}});
  j["witness"] = r.witness ? witness_to_json(*r.witness) : Json();
  j["timing"] = Json::array();
  for (const auto& [stage, seconds] : r.timing) j["timing"].push_back(Json{{"stage", stage}, {"seconds", seconds}});
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  try {
    r.schema_version = j.at("schema_version").get<std::string>();
    if (r.schema_version != kReportSchema) fail(ErrorCode::parse, "unsupported report schema '" + r.schema_version + "'");
    r.system_name = j.at("system").get<std::string>();
    for (const Json& v : j.at("verdicts")) {
      const auto prop = property_from_string(v.at("property").get<std::string>());
      if (!prop) field_error("verdicts.property", "unknown property");
      r.verdicts.push_back(Verdict{*prop, v.at("holds").get<bool>(), certificate_from_json(v.at("certificate"))});
    }
    if (const Json* w = find(j, "witness")) r.witness = witness_from_json(*w);
    for (const Json& t : j.at("timing")) r.timing.emplace_back(t.at("stage").get<std::string>(), t.at("seconds").get<double>());
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse, std::string("report: ") + e.what());
  }
  return r;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void witness_text(std::ostringstream& os, const WitnessReport& w) {
  if (!w.solvable_over_field) {
    os << "witness: unsolvable over the rational-function field ([E F] V has a nonzero column beyond normrank P; "
          "normrank P_e > normrank P)\n";
    return;
  }
  const RationalFunctionMatrix& mn = *w.MN;
  bool constant = true;
  for (std::size_t i = 0; i < mn.rows(); ++i)
    for (std::size_t k = 0; k < mn.cols(); ++k)
      constant = constant && mn(i, k).num().is_constant() && mn(i, k).den().is_constant();
  os << "witness [M N] is " << mn.rows() << "x" << mn.cols() << " (M: " << mn.rows() << "x" << w.n << ", N: " << mn.rows() << "x" << w.p << ")"
     << (constant ? ": constant solution" : "") << "\n";
  for (std::size_t i = 0; i < mn.rows(); ++i)
    for (std::size_t k = 0; k < mn.cols(); ++k)
      os << "  " << (k < w.n ? "M" : "N") << "(" << i + 1 << "," << (k < w.n ? k + 1 : k - w.n + 1)
         << ") = " << mn(i, k).to_string() << "\n";
  os << "residual [M N] P - [E F] = 0: " << (w.residual_zero ? "confirmed" : "NOT ZERO") << "\n";
  os << "classification: " << (w.is_proper ? "proper" : "not proper") << ", "
     << (w.denominator_hurwitz.is_hurwitz ? "stable" : "not stable") << " (pole polynomial "
     << w.pole_denominator.to_string() << ")\n";
  if (w.n_block)
    os << "N block: " << (w.n_block->proper ? "proper" : "not proper") << ", "
       << (w.n_block->stable ? "stable" : "not stable") << " (pole polynomial " << w.n_block->pole_polynomial.to_string()
       << ")\n";
  os << "left kernel dimension of P: " << w.left_kernel_dim
     << (w.left_kernel_dim ? " (other solutions differ by left-kernel elements)" : " (solution is unique)") << "\n";
  if (w.denominator_hurwitz.is_hurwitz && !w.is_proper)
    os << "note: stable but not proper; an integrating observer would be needed (not simulated)\n";
}

}  // namespace

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  if (!r.system_name.empty()) os << "system: " << r.system_name << "\n";
  for (const Verdict& v : r.verdicts) {
    const Certificate& c = v.certificate;
    os << property_label(v.property) << ": " << yes_no(v.holds) << "\n";
    if (!v.holds && !c.failing_condition.empty()) os << "  failing condition: " << c.failing_condition << "\n";
    for (const auto& [k, val] : c.ranks) os << "  " << k << " = " << val << "\n";
    for (const auto& [k, val] : c.polynomials) os << "  " << k << " = " << val.to_string() << "\n";
    for (const auto& [k, val] : c.conditions) os << "  [" << (val ? "x" : " ") << "] " << k << "\n";
    for (const auto& [k, val] : c.subspaces) os << "  " << k << ": dim " << val.dim() << " in Q^" << val.ambient_dim() << "\n";
    if (c.toeplitz) {
      os << "  toeplitz kernel inclusion up to k = " << c.toeplitz->checked_up_to << ": "
         << (c.toeplitz->holds ? "holds" : "fails at k = " + std::to_string(*c.toeplitz->failing_k)) << "\n";
    }
    for (const std::string& n : c.notes) os << "  note: " << n << "\n";
  }
  if (r.witness) witness_text(os, *r.witness);
  if (!r.timing.empty()) {
    os << "timing:";
    for (const auto& [stage, seconds] : r.timing) os << " " << stage << " " << seconds << " s";
    os << "\n";
  }
  return os.str();
}

}  // namespace funobs
