#include "matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace ppt::cli {
namespace {

using nlohmann::json;

double finite_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(where, "value is not finite");
  return x;
}

Scalar parse_entry(const json& v, Field field, const std::string& where) {
  if (field == Field::real) return finite_number(v, where);
  if (v.is_number()) return finite_number(v, where);
  if (!v.is_array() || v.size() != 2) throw ParseError(where, "expected [re, im]");
  return {finite_number(v[0], where + "[0]"), finite_number(v[1], where + "[1]")};
}

std::size_t count(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(key, "missing");
  const json& v = doc[key];
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

json entry_json(Scalar x, Field field) {
  if (field == Field::real) return x.real();
  return json::array({x.real(), x.imag()});
}

}  // namespace

BlockMatrix parse_matrix(const json& doc) {
  if (!doc.is_object()) throw ParseError("document", "expected an object");
  if (!doc.contains("field")) throw ParseError("field", "missing");
  const json& tag = doc["field"];
  Field field;
  if (tag == "real") {
    field = Field::real;
  } else if (tag == "complex") {
    field = Field::complex;
  } else {
    throw ParseError("field", "expected \"real\" or \"complex\"");
  }
  const std::size_t n1 = count(doc, "n1"), n2 = count(doc, "n2");
  if (!doc.contains("entries")) throw ParseError("entries", "missing");
  const json& entries = doc["entries"];
  if (!entries.is_array()) throw ParseError("entries", "expected an array");
  const std::size_t n = n1 + n2;
  if (entries.size() != n * n) {
    throw ParseError("entries", "expected " + std::to_string(n * n) + " values, got " +
                                    std::to_string(entries.size()));
  }
  std::vector<Scalar> values;
  values.reserve(n * n);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    values.push_back(parse_entry(entries[k], field, "entries[" + std::to_string(k) + "]"));
  }
  // A complex file whose imaginary parts are all zero still carries the tag.
  return BlockMatrix(Matrix::from_entries(n, n, std::move(values), field), n1, n2);
}

BlockMatrix parse_matrix_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError("document", e.what());
  }
  return parse_matrix(doc);
}

BlockMatrix read_matrix_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return parse_matrix_text(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.field(), std::string(e.what()).substr(e.field().size() + 2));
  }
}

json entries_to_json(const Matrix& m) {
  json out = json::array();
  for (Scalar x : m.data()) out.push_back(entry_json(x, m.field()));
  return out;
}

json matrix_to_json(const BlockMatrix& m) {
  return {{"field", std::string(field_name(m.field()))},
          {"n1", m.n1()},
          {"n2", m.n2()},
          {"entries", entries_to_json(m.data())}};
}

std::string format_matrix(const BlockMatrix& m) { return matrix_to_json(m).dump(); }

Matrix parse_vector(const std::string& text, const std::string& name) {
  std::string body = text;
  const auto first = body.find_first_not_of(" \t");
  if (first == std::string::npos) {
    body = "[]";
  } else if (body[first] != '[') {
    body = "[" + body + "]";
  }
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::exception&) {
    throw ParseError(name, "expected a list of numbers");
  }
  if (!doc.is_array()) throw ParseError(name, "expected a list of numbers");
  std::vector<Scalar> values;
  bool complex = false;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const Scalar x = parse_entry(doc[k], Field::complex, name + "[" + std::to_string(k) + "]");
    complex = complex || doc[k].is_array();
    values.push_back(x);
  }
  const std::size_t rows = values.size();
  return Matrix::from_entries(rows, 1, std::move(values), complex ? Field::complex : Field::real);
}

}  // namespace ppt::cli
