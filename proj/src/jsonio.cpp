#include "cellres/jsonio.hpp"

#include <fstream>

namespace cellres {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("[E_FILE] cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("[E_JSON] ") + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("[E_FILE] cannot write " + path);
  out << j.dump(2) << "\n";
}

Json int_to_json(const Int& v) { return v.get_str(); }

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw input_error("[E_JSON_INT] expected integer or decimal string");
}

Json rat_to_json(const Rat& v) { return rat_str(v); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw input_error("[E_JSON_RAT] expected rational as \"p/q\" string");
}

Json intvec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

IntVec intvec_from_json(const Json& j) {
  if (!j.is_array()) throw input_error("[E_JSON_VEC] expected array");
  IntVec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

Json ratvec_to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

RatVec ratvec_from_json(const Json& j) {
  if (!j.is_array()) throw input_error("[E_JSON_VEC] expected array");
  RatVec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json mat_to_json(const IntMat& m) {
  Json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) rows.push_back(intvec_to_json(m.row(i)));
  j["entries"] = rows;
  return j;
}

IntMat mat_from_json(const Json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw input_error("[E_JSON_MAT] matrix needs rows/cols/entries");
  int r = j["rows"].get<int>(), c = j["cols"].get<int>();
  IntMat m(r, c);
  const Json& e = j["entries"];
  if (static_cast<int>(e.size()) != r) throw input_error("[E_JSON_MAT] row count mismatch");
  for (int i = 0; i < r; ++i) {
    IntVec row = intvec_from_json(e[i]);
    if (static_cast<int>(row.size()) != c)
      throw input_error("[E_JSON_MAT] column count mismatch");
    for (int k = 0; k < c; ++k) m.at(i, k) = row[k];
  }
  return m;
}

}  // namespace cellres
