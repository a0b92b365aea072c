// Depth-first representation searches: bounded sums of squares, diagonal
// forms, and the universal form built from class representatives.
#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "totreal/exact/dyadic.hpp"
#include "totreal/latenum/boxes.hpp"
#include "totreal/sosrep/sosrep.hpp"

namespace totreal {

namespace {

double fp_house(const FieldElem& a) {
  double h = 0;
  for (int k = 0; k < a.K->degree; ++k) {
    double v = embedding_double(a, k);
    h = std::max(h, v < 0 ? -v : v);
  }
  return h;
}

// big squares first, deterministic ties
bool house_desc(const FieldElem& a, const FieldElem& b) {
  double ha = fp_house(a), hb = fp_house(b);
  if (ha != hb) return ha > hb;
  for (size_t i = 0; i < a.c.size(); ++i) {
    int c = cmp(a.c[i], b.c[i]);
    if (c != 0) return c > 0;
  }
  return false;
}

// certified positive lower bound of sigma_k(a) for totally positive a
Dyadic positive_lower(const FieldElem& a, int k) {
  for (long bits = 32;; bits *= 2) {
    DyadicInterval iv = embedding_interval(a, k, bits);
    if (iv.lo().sign() > 0) return iv.lo();
  }
}

// sign-normalized elements x of the box |sigma_k(x)| <= radii_k, zero
// excluded, sorted with the largest house first
std::vector<FieldElem> box_candidates(const NumberField& K,
                                      const std::vector<mpq_class>& radii, long limit) {
  std::vector<std::vector<mpz_class>> raw;
  enumerate_coords(K, radii, limit, [&](const std::vector<mpz_class>& a) {
    std::vector<mpz_class> n = a;
    for (const mpz_class& v : n) {
      if (v == 0) continue;
      if (v < 0)
        for (mpz_class& w : n) w = -w;
      break;
    }
    raw.push_back(std::move(n));
    return true;
  });
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<FieldElem> out;
  for (const auto& a : raw) {
    FieldElem x = elem_from_int_coords(K, a);
    if (!x.is_zero()) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), house_desc);
  return out;
}

std::string memo_key(const FieldElem& x, long tag) {
  return std::to_string(tag) + "|" + coords_str(x);
}

}  // namespace

const PythagorasTable& default_pythagoras_table() {
  static const PythagorasTable t{{{1, 4}, {2, 5}, {3, 6}, {4, 7}}};
  return t;
}

std::optional<std::vector<FieldElem>> sum_of_squares(const FieldElem& tau, int m,
                                                     long limit) {
  if (m < 1) throw std::invalid_argument("requires positive cap");
  if (!is_totally_positive(tau)) throw std::domain_error("not totally positive");
  const NumberField& K = *tau.K;
  std::vector<mpq_class> radii(static_cast<size_t>(K.degree));
  for (int k = 0; k < K.degree; ++k)
    radii[static_cast<size_t>(k)] =
        sqrt_upper(embedding_interval(tau, k, 32).hi(), 32).to_mpq();
  std::vector<FieldElem> cand;
  for (FieldElem& x : box_candidates(K, radii, limit)) {
    FieldElem rest = tau - x * x;
    if (rest.is_zero() || is_totally_positive(rest)) cand.push_back(std::move(x));
  }

  // infeasible (budget, remainder) -> smallest candidate index that failed
  std::map<std::string, size_t> dead;
  long ops = 0;
  std::function<std::optional<std::vector<FieldElem>>(const FieldElem&, size_t, int)>
      dfs = [&](const FieldElem& rho, size_t from,
                int budget) -> std::optional<std::vector<FieldElem>> {
    std::string key = memo_key(rho, budget);
    auto it = dead.find(key);
    if (it != dead.end() && from >= it->second) return std::nullopt;
    for (size_t j = from; j < cand.size(); ++j) {
      if (++ops > limit)
        throw std::runtime_error("enumeration limit exceeded: " + std::to_string(limit));
      FieldElem rest = rho - cand[j] * cand[j];
      if (rest.is_zero()) return std::vector<FieldElem>{cand[j]};
      if (budget > 1 && is_totally_positive(rest)) {
        auto sub = dfs(rest, j, budget - 1);
        if (sub) {
          sub->insert(sub->begin(), cand[j]);
          return sub;
        }
      }
    }
    auto [pos, fresh] = dead.emplace(key, from);
    if (!fresh && from < pos->second) pos->second = from;
    return std::nullopt;
  };
  return dfs(tau, 0, m);
}

std::optional<std::vector<FieldElem>> represent_diagonal(const DiagonalForm& qf,
                                                         const FieldElem& tau,
                                                         long limit) {
  if (!is_totally_positive(tau)) throw std::domain_error("not totally positive");
  if (qf.K != tau.K) throw std::invalid_argument("field mismatch");
  const NumberField& K = *tau.K;
  size_t rank = qf.coefficients.size();
  for (const FieldElem& a : qf.coefficients)
    if (!is_totally_positive(a))
      throw std::invalid_argument("coefficients must be totally positive");

  std::map<std::string, bool> dead;  // (slot, remainder) known infeasible
  long ops = 0;
  std::function<bool(size_t, const FieldElem&, std::vector<FieldElem>&)> dfs =
      [&](size_t slot, const FieldElem& rho, std::vector<FieldElem>& out) -> bool {
    if (rho.is_zero()) {
      for (size_t s = slot; s < rank; ++s) out.push_back(elem_zero(K));
      return true;
    }
    if (slot == rank) return false;
    std::string key = memo_key(rho, static_cast<long>(slot));
    if (dead.count(key)) return false;
    const FieldElem& a = qf.coefficients[slot];
    std::vector<mpq_class> radii(static_cast<size_t>(K.degree));
    for (int k = 0; k < K.degree; ++k) {
      mpq_class bound = embedding_interval(rho, k, 32).hi().to_mpq() /
                        positive_lower(a, k).to_mpq();
      radii[static_cast<size_t>(k)] =
          sqrt_upper(Dyadic::upper_of_mpq(bound, 32), 32).to_mpq();
    }
    for (const FieldElem& x : box_candidates(K, radii, limit)) {
      if (++ops > limit)
        throw std::runtime_error("enumeration limit exceeded: " + std::to_string(limit));
      FieldElem rest = rho - a * x * x;
      if (!rest.is_zero() && !is_totally_positive(rest)) continue;
      out.push_back(x);
      if (dfs(slot + 1, rest, out)) return true;
      out.pop_back();
    }
    // the zero assignment passes the whole remainder along
    out.push_back(elem_zero(K));
    if (dfs(slot + 1, rho, out)) return true;
    out.pop_back();
    dead[key] = true;
    return false;
  };
  std::vector<FieldElem> out;
  if (!dfs(0, tau, out)) return std::nullopt;
  return out;
}

DiagonalForm universal_form(const NumberField& K, const UnitSystem& units,
                            const PythagorasTable& table, long limit) {
  auto cap = table.caps.find(K.degree);
  if (cap == table.caps.end()) throw std::invalid_argument("unsupported degree");
  ClassReps reps = class_reps_norm_le(K, K.disc, units, limit);
  DiagonalForm qf;
  qf.K = &K;
  qf.coefficients = reps.reps;
  for (int i = 0; i < cap->second; ++i) qf.coefficients.push_back(elem_one(K));
  qf.rank = static_cast<int>(qf.coefficients.size());
  qf.conditional = reps.conditional;
  return qf;
}

std::vector<FieldElem> universality_spot_check(const DiagonalForm& qf,
                                               long trace_bound, long limit) {
  const NumberField& K = *qf.K;
  std::vector<mpq_class> radii(static_cast<size_t>(K.degree), mpq_class(trace_bound));
  std::vector<FieldElem> targets;
  for (FieldElem& x : enumerate_box(K, symmetric_box(radii), limit)) {
    if (x.is_zero() || !is_totally_positive(x)) continue;
    if (cmp(trace(x), mpq_class(trace_bound)) > 0) continue;
    targets.push_back(std::move(x));
  }
  std::sort(targets.begin(), targets.end(), [](const FieldElem& a, const FieldElem& b) {
    int c = cmp(trace(a), trace(b));
    if (c != 0) return c < 0;
    for (size_t i = 0; i < a.c.size(); ++i) {
      c = cmp(a.c[i], b.c[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  std::vector<FieldElem> failures;
  for (const FieldElem& t : targets)
    if (!represent_diagonal(qf, t, limit)) failures.push_back(t);
  return failures;
}

}  // namespace totreal
