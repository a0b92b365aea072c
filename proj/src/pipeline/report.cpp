// JSON/CSV emission and parsing for classification reports.
#include "totreal/pipeline/report.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace totreal {

namespace {

using nlohmann::json;

json outcome_to_json(const FieldOutcome& o) {
  json j;
  j["label"] = o.label;
  j["degree"] = o.degree;
  j["disc"] = o.disc.get_str();
  j["poly"] = o.poly.coeff_list();
  j["stage"] = o.stage;
  j["counterexample"] = o.counterexample;
  j["conditional"] = o.conditional;
  j["reps_checked"] = o.reps_checked;
  j["composite"] = o.composite;
  return j;
}

IntPoly poly_from_list(const std::string& s) {
  std::vector<mpz_class> coeffs;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) coeffs.emplace_back(tok);
  return IntPoly(coeffs);
}

FieldOutcome outcome_from_json(const json& j) {
  FieldOutcome o;
  o.label = j.at("label").get<std::string>();
  o.degree = j.at("degree").get<int>();
  o.disc = mpz_class(j.at("disc").get<std::string>());
  o.poly = poly_from_list(j.at("poly").get<std::string>());
  o.stage = j.at("stage").get<std::string>();
  o.counterexample = j.at("counterexample").get<std::vector<std::string>>();
  o.conditional = j.at("conditional").get<bool>();
  o.reps_checked = j.at("reps_checked").get<long>();
  o.composite = j.at("composite").get<bool>();
  return o;
}

void refresh_summary(ClassificationReport& r) {
  r.candidates = static_cast<long>(r.records.size());
  r.sieve_excluded = r.search_excluded = r.passed = 0;
  r.composite_candidates = r.composite_survivors = r.composite_excluded = 0;
  for (const FieldOutcome& o : r.records) {
    if (o.stage == "sieve") ++r.sieve_excluded;
    if (o.stage == "search") ++r.search_excluded;
    if (o.stage == "pass") ++r.passed;
    if (o.composite) {
      ++r.composite_candidates;
      if (o.stage != "sieve") ++r.composite_survivors;
      if (o.stage == "search") ++r.composite_excluded;
    }
  }
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::string outcome_json_line(const FieldOutcome& outcome) {
  return outcome_to_json(outcome).dump();
}

FieldOutcome outcome_from_json_line(const std::string& line) {
  return outcome_from_json(json::parse(line));
}

std::string emit_report(const ClassificationReport& report, const std::string& format) {
  if (format == "json") {
    json j;
    j["degree"] = report.degree;
    j["summary"] = {{"candidates", report.candidates},
                    {"sieve_excluded", report.sieve_excluded},
                    {"search_excluded", report.search_excluded},
                    {"passed", report.passed},
                    {"composite_candidates", report.composite_candidates},
                    {"composite_survivors", report.composite_survivors},
                    {"composite_excluded", report.composite_excluded}};
    j["records"] = json::array();
    for (const FieldOutcome& o : report.records) j["records"].push_back(outcome_to_json(o));
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::ostringstream s;
    s << "label,degree,disc,poly,stage,counterexample,conditional,reps_checked,composite\n";
    for (const FieldOutcome& o : report.records) {
      std::string cx;
      for (size_t i = 0; i < o.counterexample.size(); ++i) {
        if (i) cx += ";";
        cx += o.counterexample[i];
      }
      s << csv_quote(o.label) << "," << o.degree << "," << o.disc.get_str() << ","
        << csv_quote(o.poly.coeff_list()) << "," << o.stage << "," << csv_quote(cx)
        << "," << (o.conditional ? 1 : 0) << "," << o.reps_checked << ","
        << (o.composite ? 1 : 0) << "\n";
    }
    return s.str();
  }
  throw std::invalid_argument("unknown format");
}

ClassificationReport parse_report_json(const std::string& text) {
  json j = json::parse(text);
  ClassificationReport r;
  r.degree = j.value("degree", 0);
  if (j.contains("records"))
    for (const json& rec : j["records"]) r.records.push_back(outcome_from_json(rec));
  refresh_summary(r);
  return r;
}

ClassificationReport parse_report_csv(const std::string& text) {
  ClassificationReport r;
  std::stringstream ss(text);
  std::string line;
  bool header = true;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> f = csv_split(line);
    if (f.size() != 9) throw std::invalid_argument("malformed csv row");
    FieldOutcome o;
    o.label = f[0];
    o.degree = std::stoi(f[1]);
    o.disc = mpz_class(f[2]);
    o.poly = poly_from_list(f[3]);
    o.stage = f[4];
    if (!f[5].empty()) {
      std::stringstream cs(f[5]);
      std::string tok;
      while (std::getline(cs, tok, ';')) o.counterexample.push_back(tok);
    }
    o.conditional = f[6] == "1";
    o.reps_checked = std::stol(f[7]);
    o.composite = f[8] == "1";
    r.records.push_back(std::move(o));
    if (r.degree == 0) r.degree = r.records.back().degree;
  }
  refresh_summary(r);
  return r;
}

}  // namespace totreal
