#include "wedgeops/serialization.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace wedgeops {

namespace {

nlohmann::json pair_of(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("serialization: non-finite value");
  }
  return nlohmann::json::array({z.real(), z.imag()});
}

Complex complex_of(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("serialization: expected [re, im]");
  }
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("serialization: non-finite value");
  }
  return z;
}

int int_field(const nlohmann::json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer()) {
    throw std::invalid_argument(std::string("serialization: missing integer field '") + name + "'");
  }
  return j[name].get<int>();
}

}  // namespace

nlohmann::json to_json(const VecTrigPoly& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = f.kmin(); k <= f.kmax(); ++k) {
    nlohmann::json entry = nlohmann::json::array();
    const Vec c = f.coeff(k);
    for (int i = 0; i < f.valdim(); ++i) entry.push_back(pair_of(c[i]));
    coeffs.push_back(std::move(entry));
  }
  return {{"valdim", f.valdim()}, {"kmin", f.kmin()}, {"coeffs", std::move(coeffs)}};
}

VecTrigPoly series_from_json(const nlohmann::json& j) {
  const int valdim = int_field(j, "valdim");
  const int kmin = int_field(j, "kmin");
  if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty()) {
    throw std::invalid_argument("serialization: missing nonempty 'coeffs' array");
  }
  std::vector<Vec> coeffs;
  for (const auto& entry : j["coeffs"]) {
    if (!entry.is_array() || static_cast<int>(entry.size()) != valdim) {
      throw std::invalid_argument("serialization: coefficient length must equal valdim");
    }
    Vec c(valdim);
    for (int i = 0; i < valdim; ++i) c[i] = complex_of(entry[i]);
    coeffs.push_back(std::move(c));
  }
  return VecTrigPoly(valdim, kmin, std::move(coeffs));
}

nlohmann::json to_json(const MatSymbol& g) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = g.kmin(); k <= g.kmax(); ++k) {
    const Mat c = g.coeff(k);
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < g.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int col = 0; col < g.cols(); ++col) row.push_back(pair_of(c(r, col)));
      rows.push_back(std::move(row));
    }
    coeffs.push_back(std::move(rows));
  }
  return {{"rows", g.rows()}, {"cols", g.cols()}, {"kmin", g.kmin()}, {"coeffs", std::move(coeffs)}};
}

MatSymbol symbol_from_json(const nlohmann::json& j) {
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  const int kmin = int_field(j, "kmin");
  if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty()) {
    throw std::invalid_argument("serialization: missing nonempty 'coeffs' array");
  }
  std::vector<Mat> coeffs;
  for (const auto& entry : j["coeffs"]) {
    if (!entry.is_array() || static_cast<int>(entry.size()) != rows) {
      throw std::invalid_argument("serialization: coefficient row count must equal rows");
    }
    Mat c(rows, cols);
    for (int r = 0; r < rows; ++r) {
      if (!entry[r].is_array() || static_cast<int>(entry[r].size()) != cols) {
        throw std::invalid_argument("serialization: coefficient column count must equal cols");
      }
      for (int col = 0; col < cols; ++col) c(r, col) = complex_of(entry[r][col]);
    }
    coeffs.push_back(std::move(c));
  }
  return MatSymbol(rows, cols, kmin, std::move(coeffs));
}

VecTrigPoly load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_series: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("load_series: malformed JSON in '" + path + "': " + e.what());
  }
  return series_from_json(j);
}

void save_series(const VecTrigPoly& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_series: cannot open '" + path + "'");
  out << to_json(f).dump(2) << "\n";
}

}  // namespace wedgeops
