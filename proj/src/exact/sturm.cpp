#include "totreal/exact/sturm.hpp"

#include <stdexcept>

namespace totreal {

int XRat::cmp(const XRat& o) const {
  if (inf != o.inf) return inf < o.inf ? -1 : 1;
  if (inf != 0) return 0;
  return ::cmp(q, o.q);
}

// Negated remainder scaled by an even (hence positive) power of lc(b), then
// compressed by its content.  Even powers keep Sturm sign semantics intact.
static IntPoly sturm_neg_rem(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  int db = b.degree();
  const mpz_class lb = b.lc();
  int mults = 0;
  while (r.degree() >= db) {
    int k = r.degree() - db;
    std::vector<mpz_class> cs = r.coeffs();
    mpz_class cf = cs.back();
    for (auto& v : cs) v *= lb;
    for (int i = 0; i <= db; ++i) cs[static_cast<size_t>(i + k)] -= cf * b.coeff(i);
    r = IntPoly(std::move(cs));
    ++mults;
  }
  if (mults % 2 == 1) {
    std::vector<mpz_class> cs = r.coeffs();
    for (auto& v : cs) v *= lb;
    r = IntPoly(std::move(cs));
  }
  r = -r;
  return r.primitive_part();
}

SturmChain SturmChain::build(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("sturm chain needs degree >= 1");
  SturmChain c;
  c.seq_.push_back(f);
  c.seq_.push_back(f.derivative());
  while (!c.seq_.back().is_zero() && c.seq_.back().degree() >= 1) {
    IntPoly nxt = sturm_neg_rem(c.seq_[c.seq_.size() - 2], c.seq_.back());
    if (nxt.is_zero()) break;
    c.seq_.push_back(nxt);
  }
  c.squarefree_ = c.seq_.back().degree() == 0;
  return c;
}

static int count_variations(const std::vector<int>& signs) {
  int prev = 0, var = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::variations_at_mpq(const mpq_class& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(p.sign_at_mpq(x));
  return count_variations(signs);
}

int SturmChain::variations_at_dyadic(const Dyadic& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(p.sign_at_dyadic(x));
  return count_variations(signs);
}

int SturmChain::variations_at_surd(const QuadSurd& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(sign_at_surd(p, x));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) {
    int s = sgn(p.lc());
    if (p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(sgn(p.lc()));
  return count_variations(signs);
}

long SturmChain::count(const XRat& a, const XRat& b) const {
  int order = a.cmp(b);
  if (order > 0) throw std::invalid_argument("interval endpoints out of order");
  if (order == 0) return 0;
  int va = a.inf == -1 ? variations_at_neg_inf()
         : a.inf == +1 ? variations_at_pos_inf()
                       : variations_at_mpq(a.q);
  int vb = b.inf == -1 ? variations_at_neg_inf()
         : b.inf == +1 ? variations_at_pos_inf()
                       : variations_at_mpq(b.q);
  return va - vb;
}

long SturmChain::count_dyadic(const Dyadic& a, const Dyadic& b) const {
  if (a > b) throw std::invalid_argument("interval endpoints out of order");
  if (a == b) return 0;
  return variations_at_dyadic(a) - variations_at_dyadic(b);
}

long sturm_count(const IntPoly& f, const XRat& a, const XRat& b) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (f.degree() == 0) return 0;
  SturmChain c = SturmChain::build(f);
  if (!c.squarefree()) throw std::invalid_argument("requires squarefree polynomial");
  return c.count(a, b);
}

}  // namespace totreal
