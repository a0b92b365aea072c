// Reduction of a polynomial list to one representative per field
// isomorphism class: bucket by (degree, discriminant), then split buckets
// with explicit isomorphism tests.
#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "totreal/pipeline/robinson.hpp"

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

}  // namespace

NumberField record_field(const FieldRecord& rec) {
  return maximal_order(rec.poly);
}

std::vector<FieldRecord> dedup_fields(const std::vector<IntPoly>& polys) {
  // Pass 1: field discriminant per polynomial, buckets keyed by it.  The
  // field objects are dropped immediately; holding tens of thousands of
  // them at once is needlessly heavy.
  std::map<std::pair<int, mpz_class>, std::vector<size_t>> buckets;
  for (size_t i = 0; i < polys.size(); ++i) {
    NumberField k = maximal_order(polys[i]);
    buckets[{k.degree, k.disc}].push_back(i);
  }

  // Pass 2: inside each bucket, compare against the representatives found
  // so far.  Representative fields live only while their bucket is open.
  std::vector<FieldRecord> out;
  for (auto& [key, members] : buckets) {
    struct Rep {
      NumberField field;
      FieldRecord rec;
    };
    std::vector<Rep> reps;
    for (size_t idx : members) {
      const IntPoly& p = polys[idx];
      if (reps.empty()) {
        NumberField k = maximal_order(p);
        reps.push_back({std::move(k), FieldRecord{key.first, key.second, p, 1}});
        continue;
      }
      NumberField k = maximal_order(p);
      bool placed = false;
      for (Rep& r : reps) {
        if (fields_isomorphic(k, r.field)) {
          ++r.rec.members;
          if (coeff_less(p, r.rec.poly)) r.rec.poly = p;
          placed = true;
          break;
        }
      }
      if (!placed)
        reps.push_back({std::move(k), FieldRecord{key.first, key.second, p, 1}});
    }
    for (Rep& r : reps) out.push_back(std::move(r.rec));
  }

  std::sort(out.begin(), out.end(), [](const FieldRecord& a, const FieldRecord& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = cmp(a.disc, b.disc);
    if (c != 0) return c < 0;
    return coeff_less(a.poly, b.poly);
  });
  return out;
}

}  // namespace totreal
