#include "report.hpp"

#include <sstream>

namespace nct::cli {

namespace {

const std::string kRawMarker = "@@raw@@";

std::string unmark(std::string text) {
  const std::string open = "\"" + kRawMarker;
  std::size_t pos = 0;
  while ((pos = text.find(open, pos)) != std::string::npos) {
    const std::size_t end = text.find('"', pos + open.size());
    text.erase(end, 1);
    text.erase(pos, open.size());
  }
  return text;
}

std::string list_cell(const std::vector<Integer>& v) {
  std::string out = "\"[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + "]\"";
}

}  // namespace

Json raw_number(const std::string& digits) { return Json(kRawMarker + digits); }

Json number(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return raw_number(v.get_str());
}

Json number(const Real& v) { return raw_number(v.to_string(20)); }

Json numbers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(number(x));
  return a;
}

Json complex_json(const Complex& z) {
  Json j;
  j["re"] = number(z.re);
  j["im"] = number(z.im);
  return j;
}

std::string dump(const Json& j) { return unmark(j.dump(2)) + "\n"; }

std::string dump_text(const Json& j) {
  if (!j.is_object()) return dump(j);
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    std::string v;
    if (value.is_string()) {
      v = value.get<std::string>();
      if (v.rfind(kRawMarker, 0) == 0) v = v.substr(kRawMarker.size());
    } else {
      v = unmark(value.dump());
    }
    os << key << ": " << v << "\n";
  }
  return os.str();
}

Json compare_rows_json(const CompareReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["p"] = r.p;
    row["ap"] = r.ap;
    row["trAp"] = number(r.tr_ap);
    row["curve_factor"] = numbers(r.curve_factor);
    row["torus_factor"] = numbers(r.torus_factor);
    row["excluded"] = r.excluded;
    row["equal"] = r.equal;
    rows.push_back(row);
  }
  return rows;
}

std::string compare_rows_csv(const CompareReport& report) {
  std::ostringstream os;
  os << "p,ap,trAp,curve_factor,torus_factor,excluded,equal\n";
  for (const auto& r : report.rows) {
    os << r.p << ',' << r.ap << ',' << r.tr_ap.get_str() << ',' << list_cell(r.curve_factor) << ','
       << list_cell(r.torus_factor) << ',' << (r.excluded ? "true" : "false") << ',' << (r.equal ? "true" : "false")
       << '\n';
  }
  return os.str();
}

}  // namespace nct::cli
