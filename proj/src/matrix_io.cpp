#include "dilatekit/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dilatekit {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ComplexMatrix parse_matrix_json(const std::string& text, const std::string& context) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MatrixIoError(context + ": malformed JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw MatrixIoError(context + ": expected an object with rows, cols and data");
  }

  Eigen::Index rows = 0, cols = 0;
  try {
    rows = j.at("rows").get<Eigen::Index>();
    cols = j.at("cols").get<Eigen::Index>();
  } catch (const json::exception& e) {
    throw MatrixIoError(context + ": rows/cols must be integers: " + e.what());
  }
  if (rows < 1 || cols < 1) {
    throw MatrixIoError(context + ": rows and cols must be positive");
  }

  const auto& data = j.at("data");
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols) {
    std::ostringstream os;
    os << context << ": data length " << data.size() << " does not match rows*cols = " << rows * cols;
    throw MatrixIoError(os.str());
  }

  ComplexMatrix m(rows, cols);
  for (Eigen::Index k = 0; k < rows * cols; ++k) {
    const auto& e = data.at(static_cast<std::size_t>(k));
    if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number()) {
      std::ostringstream os;
      os << context << ": data[" << k << "] must be a [re, im] pair";
      throw MatrixIoError(os.str());
    }
    const double re = e.at(0).get<double>();
    const double im = e.at(1).get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      std::ostringstream os;
      os << context << ": data[" << k << "] is not finite";
      throw MatrixIoError(os.str());
    }
    m(k / cols, k % cols) = Complex(re, im);
  }
  return m;
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatrixIoError("cannot open matrix file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str(), path);
}

std::string matrix_to_json(const ComplexMatrix& m) {
  std::ostringstream os;
  os << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols() << ", \"data\": [";
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    const Complex z = m(k / m.cols(), k % m.cols());
    if (k) os << ", ";
    os << "[" << format_double(z.real()) << ", " << format_double(z.imag()) << "]";
  }
  os << "]}";
  return os.str();
}

void save_matrix(const ComplexMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw MatrixIoError("cannot open output file: " + path);
  out << matrix_to_json(m) << "\n";
}

}  // namespace dilatekit
