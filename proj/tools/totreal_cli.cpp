// Command-line driver for the totally real field pipeline: window
// enumeration of defining polynomials, field deduplication, the sum-of-
// squares classification, the quartic trace experiment, and one-off element
// queries (field data, sums of squares, decompositions, universal forms).
//
// Structured output is line-delimited JSON on stdout; human-readable
// progress and summaries go to stderr.  `classify` and `quartic-trend`
// also offer a CSV table via --format csv.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "totreal/exact/roots.hpp"
#include "totreal/indecomp/indecomp.hpp"
#include "totreal/pipeline/classify.hpp"
#include "totreal/pipeline/report.hpp"
#include "totreal/pipeline/robinson.hpp"
#include "totreal/sosrep/sosrep.hpp"

using nlohmann::json;
using namespace totreal;

namespace {

// ---------------------------------------------------------------- config

// Plain key=value configuration: one pair per line, '#' starts a comment,
// whitespace around keys and values is ignored.
std::map<std::string, std::string> parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("malformed config line: " + t);
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

struct Settings {
  long limit = 10000000;
  long checkpoint_every = 1000;
  long unit_bound = 32;
  long prec_bits = 64;
  PythagorasTable table = default_pythagoras_table();

  void apply(const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
      if (key == "limit") limit = std::stol(value);
      else if (key == "checkpoint_every") checkpoint_every = std::stol(value);
      else if (key == "unit_bound") unit_bound = std::stol(value);
      else if (key == "prec_bits") prec_bits = std::stol(value);
      else if (key.rfind("pythagoras.", 0) == 0)
        table.caps[std::stoi(key.substr(11))] = std::stoi(value);
      else throw std::runtime_error("unknown config key: " + key);
    }
  }
};

// ---------------------------------------------------------------- helpers

std::vector<mpz_class> parse_int_list(const std::string& text) {
  std::vector<mpz_class> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty()) throw std::runtime_error("empty entry in list: " + text);
    out.emplace_back(piece);
  }
  if (out.empty()) throw std::runtime_error("empty list");
  return out;
}

json coords_json(const FieldElem& a) {
  json arr = json::array();
  for (const mpq_class& q : a.c) arr.push_back(q.get_str());
  return arr;
}

json poly_json(const IntPoly& f) {
  json arr = json::array();
  for (const mpz_class& c : f.coeffs()) arr.push_back(c.get_str());
  return arr;
}

NumberField field_from_arg(const std::string& coeffs) {
  return maximal_order(IntPoly(parse_int_list(coeffs)));
}

FieldElem elem_from_arg(const NumberField& K, const std::string& coords) {
  std::vector<mpz_class> c = parse_int_list(coords);
  if ((int)c.size() != K.degree)
    throw std::runtime_error("expected " + std::to_string(K.degree) +
                             " coordinates, got " + std::to_string(c.size()));
  return elem_from_int_coords(K, c);
}

// Unit generators for certification: degree 1 needs none, degree 2 gets the
// continued-fraction fundamental unit through a large search radius, higher
// degrees escalate the house bound while independent generators are scarce.
UnitSystem units_for(const NumberField& K, const Settings& s) {
  if (K.degree == 1) return UnitSystem{&K, {}, true};
  if (K.degree == 2)
    return unit_search(K, mpq_class(mpz_class(1) << 62), s.limit);
  UnitSystem best = unit_search(K, s.unit_bound, s.limit);
  for (mpq_class bound = s.unit_bound; (int)best.generators.size() < K.degree - 1 &&
       bound <= 4 * s.unit_bound; bound *= 2)
    best = unit_search(K, bound, s.limit);
  return best;
}

// ------------------------------------------------------------ subcommands

int run_robinson(int degree, bool boundary_variant) {
  RobinsonConfig cfg = default_robinson_config(degree);
  cfg.require_unit_root = boundary_variant;
  std::vector<IntPoly> polys = robinson_enumerate(cfg);
  for (const IntPoly& f : polys) {
    json j;
    j["degree"] = degree;
    j["coeffs"] = poly_json(f);
    std::cout << j.dump() << "\n";
  }
  std::cerr << polys.size() << " polynomials\n";
  return 0;
}

int run_dedup(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open input: " + path);
    in = &file;
  }
  std::vector<IntPoly> polys;
  std::string line;
  while (std::getline(*in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    std::vector<mpz_class> coeffs;
    for (const auto& c : j.at("coeffs"))
      coeffs.emplace_back(c.is_string() ? c.get<std::string>()
                                        : std::to_string(c.get<long>()));
    polys.emplace_back(coeffs);
  }
  std::vector<FieldRecord> fields = dedup_fields(polys);
  for (const FieldRecord& rec : fields) {
    json j;
    j["label"] = field_label(rec.degree, rec.disc, rec.poly);
    j["degree"] = rec.degree;
    j["disc"] = rec.disc.get_str();
    j["poly"] = poly_json(rec.poly);
    j["members"] = rec.members;
    std::cout << j.dump() << "\n";
  }
  std::cerr << fields.size() << " fields from " << polys.size()
            << " polynomials\n";
  return 0;
}

int run_classify(int degree, const std::string& resume,
                 const std::string& format, const Settings& s) {
  ClassifyOptions opt;
  opt.checkpoint_path = resume;
  opt.checkpoint_every = s.checkpoint_every;
  opt.limit = s.limit;
  opt.table = &s.table;
  ClassificationReport report = classify(degree, opt);
  if (format == "csv") {
    std::cout << emit_report(report, "csv");
  } else {
    for (const FieldOutcome& rec : report.records)
      std::cout << outcome_json_line(rec) << "\n";
    json tail;
    tail["degree"] = report.degree;
    tail["summary"] = {{"candidates", report.candidates},
                       {"sieve_excluded", report.sieve_excluded},
                       {"search_excluded", report.search_excluded},
                       {"passed", report.passed},
                       {"composite_candidates", report.composite_candidates},
                       {"composite_survivors", report.composite_survivors},
                       {"composite_excluded", report.composite_excluded}};
    std::cout << tail.dump() << "\n";
  }
  std::cerr << "degree " << report.degree << ": " << report.candidates
            << " candidates, " << report.sieve_excluded << " sieve-excluded, "
            << report.search_excluded << " search-excluded, " << report.passed
            << " passed\n";
  return 0;
}

int run_trend(long d, int count, const std::string& format) {
  std::vector<NumberField> family = quartic_trend_family(d, count);
  TrendTable table = quartic_trend(d, family);
  if (format == "csv") {
    std::cout << "label,disc,t_a,t_b\n";
    for (const TrendRow& row : table.rows)
      std::cout << row.label << "," << row.disc << "," << row.t_a << ","
                << row.t_b << "\n";
  } else {
    for (const TrendRow& row : table.rows) {
      json j;
      j["label"] = row.label;
      j["disc"] = row.disc.get_str();
      j["t_a"] = row.t_a.get_str();
      j["t_b"] = row.t_b.get_str();
      std::cout << j.dump() << "\n";
    }
    json tail;
    tail["slope_ta"] = table.slope_ta;
    tail["slope_tb"] = table.slope_tb;
    std::cout << tail.dump() << "\n";
  }
  std::cerr << "slope t_a " << table.slope_ta << ", slope t_b "
            << table.slope_tb << " over " << table.rows.size() << " fields\n";
  return 0;
}

int run_field(const std::string& coeffs, const Settings& s) {
  IntPoly f(parse_int_list(coeffs));
  NumberField K = maximal_order(f);
  json j;
  j["degree"] = K.degree;
  j["disc"] = K.disc.get_str();
  j["index"] = K.index.get_str();
  j["label"] = field_label(K.degree, K.disc, f);
  json basis = json::array();
  {
    std::stringstream rows(K.basis_str());
    std::string row;
    while (std::getline(rows, row, ';'))
      basis.push_back(row.substr(row.find_first_not_of(' ')));
  }
  j["basis"] = basis;
  json roots = json::array();
  for (DyadicInterval iv : isolate_real_roots(f, s.prec_bits))
    roots.push_back(iv.to_double());
  j["roots"] = roots;
  std::cout << j.dump() << "\n";
  return 0;
}

int run_sos(const std::string& field, const std::string& elem, int max_squares,
            const Settings& s) {
  NumberField K = field_from_arg(field);
  FieldElem tau = elem_from_arg(K, elem);
  int cap = max_squares;
  if (cap == 0) {
    auto it = s.table.caps.find(K.degree);
    if (it == s.table.caps.end())
      throw std::runtime_error("no square cap for degree " +
                               std::to_string(K.degree));
    cap = it->second;
  }
  auto rep = sum_of_squares(tau, cap, s.limit);
  json j;
  j["representable"] = rep.has_value();
  j["cap"] = cap;
  json squares = json::array();
  if (rep)
    for (const FieldElem& x : *rep) squares.push_back(coords_json(x));
  j["squares"] = squares;
  std::cout << j.dump() << "\n";
  return 0;
}

int run_decompose(const std::string& field, const std::string& elem,
                  const Settings& s) {
  NumberField K = field_from_arg(field);
  FieldElem gamma = elem_from_arg(K, elem);
  FullDecomposition d = decompose_full(gamma, s.limit);
  json j;
  j["bounded"] = coords_json(d.bounded);
  j["bounded_norm"] = mpz_class(norm(d.bounded).get_num()).get_str();
  json squares = json::array();
  for (const FieldElem& x : d.squares) squares.push_back(coords_json(x));
  j["squares"] = squares;
  std::cout << j.dump() << "\n";
  return 0;
}

int run_universal(const std::string& field, long spot, const Settings& s) {
  NumberField K = field_from_arg(field);
  UnitSystem units = units_for(K, s);
  DiagonalForm qf = universal_form(K, units, s.table, s.limit);
  json j;
  j["rank"] = qf.rank;
  j["conditional"] = qf.conditional;
  json coeffs = json::array();
  for (const FieldElem& c : qf.coefficients) coeffs.push_back(coords_json(c));
  j["coefficients"] = coeffs;
  if (spot > 0) {
    json failures = json::array();
    for (const FieldElem& x : universality_spot_check(qf, spot, s.limit))
      failures.push_back(coords_json(x));
    j["spot_bound"] = spot;
    j["spot_failures"] = failures;
  }
  std::cout << j.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Totally real fields: enumeration, classification, squares"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "key=value configuration file (limits, caps, precision)");

  int degree = 3;
  bool boundary_variant = false;
  CLI::App* robinson = app.add_subcommand(
      "robinson", "enumerate defining polynomials with conjugates in the window");
  robinson->add_option("--degree", degree, "polynomial degree")
      ->required()
      ->check(CLI::IsMember({2, 3, 4}));
  robinson->add_flag("--boundary-variant", boundary_variant,
                     "also require a root inside the unit interval");

  std::string dedup_path;
  CLI::App* dedup = app.add_subcommand(
      "dedup", "group polynomials into isomorphism classes of fields");
  dedup->add_option("file", dedup_path, "robinson output (JSON lines), - for stdin")
      ->required();

  int cls_degree = 3;
  std::string resume, cls_format = "json";
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "run the sum-of-squares classification for one degree");
  classify_cmd->add_option("--degree", cls_degree, "field degree")
      ->required()
      ->check(CLI::IsMember({2, 3, 4}));
  classify_cmd->add_option("--resume", resume,
                           "checkpoint state file (created if absent)");
  classify_cmd->add_option("--format", cls_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  long trend_d = 2;
  int trend_count = 8;
  std::string trend_format = "json";
  CLI::App* trend = app.add_subcommand(
      "quartic-trend", "minimal traces outside a quadratic subfield");
  trend->add_option("--d", trend_d, "squarefree radicand of the subfield")
      ->required();
  trend->add_option("--count", trend_count, "number of quartic fields")
      ->required();
  trend->add_option("--format", trend_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string field_coeffs;
  CLI::App* field_cmd = app.add_subcommand(
      "field", "maximal order, discriminant and embeddings of a field");
  field_cmd->add_option("coeffs", field_coeffs,
                        "monic defining polynomial, constant first: c0,c1,...,1")
      ->required();

  std::string sos_field, sos_elem;
  int sos_max = 0;
  CLI::App* sos = app.add_subcommand(
      "sos", "write an element as a sum of integral squares");
  sos->add_option("--field", sos_field, "defining polynomial c0,c1,...,1")
      ->required();
  sos->add_option("--elem", sos_elem, "integral-basis coordinates")->required();
  sos->add_option("--max", sos_max,
                  "cap on the number of squares (default: degree cap)");

  std::string dec_field, dec_elem;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "split an element into a bounded part plus squares");
  decompose->add_option("--field", dec_field, "defining polynomial c0,c1,...,1")
      ->required();
  decompose->add_option("--elem", dec_elem, "integral-basis coordinates")
      ->required();

  std::string uni_field;
  long uni_spot = 0;
  CLI::App* universal = app.add_subcommand(
      "universal-form", "diagonal universal form from bounded class representatives");
  universal->add_option("--field", uni_field, "defining polynomial c0,c1,...,1")
      ->required();
  universal->add_option("--spot", uni_spot,
                        "verify representability up to this trace");

  CLI11_PARSE(app, argc, argv);

  try {
    Settings s;
    if (!config_path.empty()) s.apply(parse_config(config_path));
    if (robinson->parsed()) return run_robinson(degree, boundary_variant);
    if (dedup->parsed()) return run_dedup(dedup_path);
    if (classify_cmd->parsed())
      return run_classify(cls_degree, resume, cls_format, s);
    if (trend->parsed()) return run_trend(trend_d, trend_count, trend_format);
    if (field_cmd->parsed()) return run_field(field_coeffs, s);
    if (sos->parsed()) return run_sos(sos_field, sos_elem, sos_max, s);
    if (decompose->parsed()) return run_decompose(dec_field, dec_elem, s);
    if (universal->parsed()) return run_universal(uni_field, uni_spot, s);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
