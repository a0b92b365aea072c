// Candidate construction, the basis-element sieve, and the bounded
// counterexample search with per-field certificates and checkpointing.
#include "totreal/pipeline/classify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "totreal/exact/factor.hpp"
#include "totreal/exact/surd.hpp"
#include "totreal/indecomp/indecomp.hpp"
#include "totreal/pipeline/report.hpp"

namespace totreal {

namespace {

bool coeff_less(const IntPoly& x, const IntPoly& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  for (int i = 0; i <= x.degree(); ++i) {
    int c = cmp(x.coeff(i), y.coeff(i));
    if (c != 0) return c < 0;
  }
  return false;
}

struct Candidate {
  FieldRecord rec;
  bool composite = false;
};

mpz_class quad_radicand(const NumberField& K) {
  return K.disc % 4 == 0 ? mpz_class(K.disc / 4) : K.disc;
}

std::vector<Candidate> build_candidates(int degree, const ClassifyOptions& opt) {
  std::vector<Candidate> cands;
  if (degree == 2) {
    for (const NumberField& K : quadratic_generators_with_small_house())
      cands.push_back({FieldRecord{2, K.disc, K.min_poly, 1}, false});
    return cands;
  }

  std::vector<FieldRecord> base;
  if (opt.fields) {
    base = *opt.fields;
  } else {
    RobinsonConfig cfg = default_robinson_config(degree);
    base = dedup_fields(robinson_enumerate(cfg));
  }
  for (FieldRecord& r : base) cands.push_back({std::move(r), false});

  if (degree == 4) {
    // compositums of the small-house quadratic fields; a biquadratic field
    // is determined by its triple of quadratic subfield radicands
    std::vector<mpz_class> rads;
    for (const NumberField& K : quadratic_generators_with_small_house())
      rads.push_back(quad_radicand(K));
    std::set<std::vector<mpz_class>> seen;
    std::vector<NumberField> comps;
    for (size_t i = 0; i < rads.size(); ++i)
      for (size_t j = i + 1; j < rads.size(); ++j) {
        mpz_class prod = rads[i] * rads[j];
        mpz_class third = prod / (square_part(prod) * square_part(prod));
        std::vector<mpz_class> triple{rads[i], rads[j], third};
        std::sort(triple.begin(), triple.end());
        if (!seen.insert(triple).second) continue;
        comps.push_back(biquadratic_compositum(rads[i], rads[j]));
      }
    for (NumberField& K : comps) {
      bool merged = false;
      for (Candidate& c : cands) {
        if (c.rec.disc != K.disc) continue;
        NumberField existing = record_field(c.rec);
        if (fields_isomorphic(existing, K)) {
          c.composite = true;
          if (coeff_less(K.min_poly, c.rec.poly)) c.rec.poly = K.min_poly;
          merged = true;
          break;
        }
      }
      if (!merged)
        cands.push_back({FieldRecord{4, K.disc, K.min_poly, 1}, true});
    }
  }
  return cands;
}

// Smallest non-negative integer shift making a totally positive.
FieldElem shift_positive(const FieldElem& a) {
  FieldElem x = a;
  FieldElem one = elem_one(*a.K);
  mpq_class guard = house(a, 24).hi().to_mpq() + 2;
  for (mpz_class k = 0; mpq_class(k) <= guard; ++k) {
    if (is_totally_positive(x)) return x;
    x = x + one;
  }
  throw std::logic_error("shift failed to reach the positive cone");
}

int pythagoras_cap(const ClassifyOptions& opt, int degree) {
  const PythagorasTable& t = opt.table ? *opt.table : default_pythagoras_table();
  auto it = t.caps.find(degree);
  if (it == t.caps.end()) throw std::invalid_argument("unsupported degree");
  return it->second;
}

FieldOutcome process_field(const Candidate& cand, const ClassifyOptions& opt) {
  FieldOutcome out;
  out.label = field_label(cand.rec.degree, cand.rec.disc, cand.rec.poly);
  out.degree = cand.rec.degree;
  out.disc = cand.rec.disc;
  out.poly = cand.rec.poly;
  out.composite = cand.composite;

  NumberField K = record_field(cand.rec);
  K.label = out.label;
  int cap = pythagoras_cap(opt, K.degree);

  // Sieve: twice a shifted basis element must be a sum of squares.
  for (int i = 0; i < K.degree; ++i) {
    std::vector<mpz_class> e(K.degree, 0);
    e[i] = 1;
    FieldElem alpha = shift_positive(elem_from_int_coords(K, e));
    if (!sum_of_squares(elem_scale(alpha, 2), cap, opt.limit)) {
      out.stage = "sieve";
      for (const mpq_class& q : alpha.c) out.counterexample.push_back(q.get_str());
      return out;
    }
  }

  // Units, then one representative per class of norm up to the
  // discriminant; a failing representative is a counterexample, and a clean
  // sweep certifies the field.
  UnitSystem units;
  if (K.degree == 2) {
    units = unit_search(K, mpq_class(mpz_class(1) << 62), opt.limit);
  } else {
    for (mpq_class bound = 8; bound <= 128; bound *= 2) {
      units = unit_search(K, bound, opt.limit);
      if (static_cast<int>(units.generators.size()) >= K.degree - 1) break;
    }
  }
  ClassReps reps = class_reps_norm_le(K, K.disc, units, opt.limit);
  for (const FieldElem& rep : reps.reps) {
    if (!sum_of_squares(elem_scale(rep, 2), cap, opt.limit)) {
      out.stage = "search";
      for (const mpq_class& q : rep.c) out.counterexample.push_back(q.get_str());
      return out;
    }
  }
  out.stage = "pass";
  out.conditional = !units.complete;
  out.reps_checked = static_cast<long>(reps.reps.size());
  return out;
}

void save_checkpoint(const std::string& path,
                     const std::map<std::string, FieldOutcome>& done) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp);
    for (const auto& [label, outcome] : done) f << outcome_json_line(outcome) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::map<std::string, FieldOutcome> load_checkpoint(const std::string& path) {
  std::map<std::string, FieldOutcome> done;
  std::ifstream f(path);
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    FieldOutcome o = outcome_from_json_line(line);
    done[o.label] = std::move(o);
  }
  return done;
}

}  // namespace

std::string field_label(int degree, const mpz_class& disc, const IntPoly& poly) {
  std::ostringstream s;
  s << "d" << degree << "-" << disc.get_str() << "-";
  for (int i = 0; i <= poly.degree(); ++i) {
    if (i) s << "_";
    s << poly.coeff(i).get_str();
  }
  return s.str();
}

std::vector<NumberField> quadratic_generators_with_small_house() {
  QuadSurd upper(7, 1, 6);  // 7 + sqrt(6)
  std::set<mpz_class> rads;
  // Quadratic integers x^2 + b x + c with both conjugates inside the window
  // (0, 7+sqrt 6).  Recentring by an integer shift puts every quadratic
  // integer of house below 2+sqrt(6) inside this window, and the window
  // family is what the composite construction downstream consumes.  The
  // root sum lies in (0, 2*(7+sqrt 6)), forcing b in [-18,-1]; the root
  // product lies in (0, (7+sqrt 6)^2) ~ 89.3, forcing c in [1,89]; the
  // vertex -b/2 then sits inside the window automatically, so positivity
  // at the right-hand end pins both roots.
  for (long b = -18; b <= -1; ++b)
    for (long c = 1; c <= 89; ++c) {
      mpz_class disc = mpz_class(b) * b - 4 * c;
      if (disc <= 0) continue;
      mpz_class s = square_part(disc);
      mpz_class rad = disc / (s * s);
      if (rad == 1) continue;  // rational roots
      IntPoly f = IntPoly::from_coeffs({c, b, 1});
      if (sign_at_surd(f, upper) <= 0) continue;
      rads.insert(rad);
    }
  std::vector<NumberField> out;
  for (const mpz_class& d : rads) out.push_back(quadratic_field(d));
  std::sort(out.begin(), out.end(),
            [](const NumberField& a, const NumberField& b) { return a.disc < b.disc; });
  return out;
}

ClassificationReport classify(int degree, const ClassifyOptions& opt) {
  if (degree < 2 || degree > 4) throw std::invalid_argument("unsupported degree");

  std::vector<Candidate> cands = build_candidates(degree, opt);
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    int c = cmp(a.rec.disc, b.rec.disc);
    if (c != 0) return c < 0;
    return coeff_less(a.rec.poly, b.rec.poly);
  });

  std::map<std::string, FieldOutcome> done;
  if (!opt.checkpoint_path.empty() && std::filesystem::exists(opt.checkpoint_path))
    done = load_checkpoint(opt.checkpoint_path);

  ClassificationReport report;
  report.degree = degree;
  long since_save = 0;
  for (const Candidate& cand : cands) {
    std::string label = field_label(cand.rec.degree, cand.rec.disc, cand.rec.poly);
    auto it = done.find(label);
    FieldOutcome outcome;
    if (it != done.end()) {
      outcome = it->second;
    } else {
      try {
        outcome = process_field(cand, opt);
      } catch (const std::runtime_error& e) {
        if (!opt.checkpoint_path.empty()) save_checkpoint(opt.checkpoint_path, done);
        throw std::runtime_error(label + ": " + e.what());
      }
      done[label] = outcome;
      if (!opt.checkpoint_path.empty() && ++since_save >= opt.checkpoint_every) {
        save_checkpoint(opt.checkpoint_path, done);
        since_save = 0;
      }
    }
    report.records.push_back(outcome);
  }
  if (!opt.checkpoint_path.empty()) save_checkpoint(opt.checkpoint_path, done);

  report.candidates = static_cast<long>(report.records.size());
  for (const FieldOutcome& o : report.records) {
    if (o.stage == "sieve") ++report.sieve_excluded;
    if (o.stage == "search") ++report.search_excluded;
    if (o.stage == "pass") ++report.passed;
    if (o.composite) {
      ++report.composite_candidates;
      if (o.stage != "sieve") ++report.composite_survivors;
      if (o.stage == "search") ++report.composite_excluded;
    }
  }
  return report;
}

}  // namespace totreal
