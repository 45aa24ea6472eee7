#include "graphfb/serialize.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include "graphfb/error.hpp"
#include "graphfb/graph.hpp"

namespace graphfb {

namespace {

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

double number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw Error(ErrorCode::ParseError, std::string("'") + key + "' is not a number");
  return v.get<double>();
}

Index count(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(ErrorCode::ParseError, std::string("'") + key + "' is not a nonnegative integer");
  }
  return static_cast<Index>(v.get<long long>());
}

Vector vector_field(const Json& j, const char* key, Index expected = -1) {
  const Json& arr = field(j, key);
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, std::string("'") + key + "' is not an array");
  Vector v(static_cast<Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      throw Error(ErrorCode::ParseError, std::string("non-numeric entry in '") + key + "'");
    }
    v(static_cast<Index>(i)) = arr[i].get<double>();
  }
  if (expected >= 0 && v.size() != expected) {
    throw Error(ErrorCode::ParseError, std::string("'") + key + "' has length " +
                                           std::to_string(v.size()) + ", expected " +
                                           std::to_string(expected));
  }
  if (!v.allFinite()) throw Error(ErrorCode::ParseError, std::string("non-finite entry in '") + key + "'");
  return v;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string("'") + key + "' is not a string");
  return v.get<std::string>();
}

}  // namespace

Json bank_to_json(const FilterBank& bank) {
  Json j;
  j["kind"] = std::string(to_string(bank.kind));
  j["n"] = bank.n();
  j["strategy"] = std::string(to_string(bank.strategy));
  j["tie_adjusted"] = bank.tie_adjusted;
  j["lipschitz"] = std::isfinite(bank.lipschitz) ? Json(bank.lipschitz) : Json(nullptr);
  j["eigenvalues"] = vector_to_json(bank.eigenvalues);
  j["h0"] = vector_to_json(bank.h0);
  j["h1"] = vector_to_json(bank.h1);
  j["g0"] = vector_to_json(bank.g0);
  j["g1"] = vector_to_json(bank.g1);
  j["y"] = vector_to_json(bank.y);
  return j;
}

FilterBank bank_from_json(const Json& j) {
  FilterBank bank;
  try {
    bank.kind = parse_bank_kind(string_field(j, "kind"));
    bank.strategy = parse_design_strategy(string_field(j, "strategy"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
  const Index n = count(j, "n");
  if (n < 2) throw Error(ErrorCode::ParseError, "bank needs n >= 2");
  bank.eigenvalues = vector_field(j, "eigenvalues", n);
  bank.h0 = vector_field(j, "h0", n);
  bank.h1 = vector_field(j, "h1", n);
  bank.g0 = vector_field(j, "g0", n);
  bank.g1 = vector_field(j, "g1", n);
  bank.y = j.contains("y") ? vector_field(j, "y", n) : Vector(bank.h0.cwiseProduct(bank.g0));
  const Json& lip = field(j, "lipschitz");
  bank.lipschitz = lip.is_null() ? std::numeric_limits<double>::quiet_NaN() : number(j, "lipschitz");
  bank.tie_adjusted = j.value("tie_adjusted", false);
  return bank;
}

Json coarse_map_to_json(const CoarseMap& cm) {
  Json j;
  j["fine_n"] = cm.fine_n;
  j["coarse_n"] = cm.coarse_n;
  j["assignment"] = cm.assignment;
  return j;
}

Json polynomial_to_json(const FilterPolynomial& p) {
  Json j;
  j["degree"] = p.degree;
  j["domain_max"] = p.domain_max;
  j["basis"] = "monomial";
  j["coefficients"] = vector_to_json(p.monomial());
  j["chebyshev"] = vector_to_json(p.chebyshev);
  j["sup_error"] = p.sup_error;
  j["converged"] = p.converged;
  return j;
}

FilterPolynomial polynomial_from_json(const Json& j) {
  const Index degree = count(j, "degree");
  const double domain_max = number(j, "domain_max");
  if (!(domain_max > 0.0)) throw Error(ErrorCode::ParseError, "domain_max must be positive");
  FilterPolynomial p;
  if (j.contains("chebyshev")) {
    p.degree = degree;
    p.domain_max = domain_max;
    p.chebyshev = vector_field(j, "chebyshev", degree + 1);
  } else {
    p = FilterPolynomial::from_monomial(vector_field(j, "coefficients", degree + 1), domain_max);
  }
  p.sup_error = j.contains("sup_error") ? number(j, "sup_error") : 0.0;
  p.converged = j.value("converged", true);
  return p;
}

Json metric_value(double v) {
  if (std::isinf(v)) return v > 0 ? Json("inf") : Json("-inf");
  if (std::isnan(v)) return Json(nullptr);
  return Json(v);
}

void format_metrics_csv(std::ostream& out,
                        const std::vector<std::pair<std::string, double>>& rows) {
  out << "metric,value\n";
  for (const auto& [name, v] : rows) {
    out << name << ',';
    if (std::isinf(v)) {
      out << (v > 0 ? "inf" : "-inf");
    } else {
      out << format_double(v);
    }
    out << '\n';
  }
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_json(const Json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace graphfb
