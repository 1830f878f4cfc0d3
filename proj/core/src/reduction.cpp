#include "conegb/reduction.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace conegb {

namespace {

std::int64_t sugar_of(const TermOrdering& o, const Term& t, SugarDegree sd) {
  return sd == SugarDegree::Weighted ? o.weighted_degree(t) : t.degree();
}

// out = p[head+1..] - c * q * g[1..]; p[head] and c*q*g[0] cancel by construction.
void subtract_multiple(const TermOrdering& o, std::vector<Monomial>& p, std::size_t head,
                       const Coefficient& c, const Term& q, const std::vector<Monomial>& g,
                       std::vector<Monomial>& out) {
  out.clear();
  out.reserve(p.size() - head + g.size());
  std::size_t i = head + 1;
  std::size_t j = 1;
  Coefficient tmp;
  while (i < p.size() && j < g.size()) {
    Term gt = q * g[j].term;
    const auto cmp = o.compare(p[i].term, gt);
    if (cmp > 0) {
      out.push_back(std::move(p[i++]));
    } else if (cmp < 0) {
      tmp = c * g[j].coeff;
      out.push_back(Monomial{std::move(gt), -tmp});
      ++j;
    } else {
      tmp = p[i].coeff - c * g[j].coeff;
      if (sgn(tmp) != 0) out.push_back(Monomial{std::move(gt), tmp});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(std::move(p[i]));
  for (; j < g.size(); ++j) {
    tmp = c * g[j].coeff;
    out.push_back(Monomial{q * g[j].term, -tmp});
  }
}

struct IntMonomial {
  Term term;
  mpz_class coeff;
};

// Integer multiple of `terms`; scale is multiplied by the factor used.
std::vector<IntMonomial> to_integral(const std::vector<Monomial>& terms, mpq_class& scale) {
  mpz_class den = 1;
  for (const auto& m : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.coeff.get_den_mpz_t());
  mpz_class content = 0;
  std::vector<IntMonomial> out;
  out.reserve(terms.size());
  for (const auto& m : terms) {
    mpz_class c = den / m.coeff.get_den() * m.coeff.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    out.push_back(IntMonomial{m.term, std::move(c)});
  }
  if (content > 1)
    for (auto& m : out) mpz_divexact(m.coeff.get_mpz_t(), m.coeff.get_mpz_t(), content.get_mpz_t());
  scale *= mpq_class(den, content == 0 ? mpz_class(1) : content);
  scale.canonicalize();
  return out;
}

void remove_content(std::vector<IntMonomial>& work, std::vector<IntMonomial>& kept, mpq_class& scale) {
  mpz_class content = 0;
  for (const auto* v : {&work, &kept}) {
    for (const auto& m : *v) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m.coeff.get_mpz_t());
      if (content == 1) return;
    }
  }
  if (content <= 1) return;
  for (auto* v : {&work, &kept})
    for (auto& m : *v) mpz_divexact(m.coeff.get_mpz_t(), m.coeff.get_mpz_t(), content.get_mpz_t());
  scale /= content;
}

// out = a * p[head+1..] - b * q * g[1..]; the heads cancel by construction.
void combine(const TermOrdering& o, std::vector<IntMonomial>& p, std::size_t head, const mpz_class& a,
             const mpz_class& b, const Term& q, const std::vector<IntMonomial>& g,
             std::vector<IntMonomial>& out) {
  out.clear();
  out.reserve(p.size() - head + g.size());
  std::size_t i = head + 1;
  std::size_t j = 1;
  const bool unit = a == 1;
  mpz_class tmp;
  while (i < p.size() && j < g.size()) {
    Term gt = q * g[j].term;
    const auto cmp = o.compare(p[i].term, gt);
    if (cmp > 0) {
      if (!unit) p[i].coeff *= a;
      out.push_back(std::move(p[i++]));
    } else if (cmp < 0) {
      tmp = b * g[j].coeff;
      out.push_back(IntMonomial{std::move(gt), -tmp});
      ++j;
    } else {
      if (!unit) p[i].coeff *= a;
      mpz_submul(p[i].coeff.get_mpz_t(), b.get_mpz_t(), g[j].coeff.get_mpz_t());
      if (sgn(p[i].coeff) != 0) out.push_back(IntMonomial{std::move(gt), std::move(p[i].coeff)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) {
    if (!unit) p[i].coeff *= a;
    out.push_back(std::move(p[i]));
  }
  for (; j < g.size(); ++j) {
    tmp = b * g[j].coeff;
    out.push_back(IntMonomial{q * g[j].term, -tmp});
  }
}

}  // namespace

OrderedPolynomial order_by(const TermOrdering& o, const Polynomial& p, std::int64_t sugar) {
  OrderedPolynomial r;
  r.terms.assign(p.monomials().begin(), p.monomials().end());
  r.sugar = sugar;
  reorder(o, r);
  return r;
}

void reorder(const TermOrdering& o, OrderedPolynomial& p) {
  std::sort(p.terms.begin(), p.terms.end(),
            [&o](const Monomial& a, const Monomial& b) { return o.compare(a.term, b.term) > 0; });
}

Polynomial to_polynomial(std::size_t nvars, const OrderedPolynomial& p) {
  return Polynomial(nvars, p.terms);
}

OrderedPolynomial reduce_ordered(const TermOrdering& o, OrderedPolynomial p,
                                 std::span<const OrderedPolynomial> basis, ReductionMode mode,
                                 SugarDegree sugar_degree, std::span<const char> active) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].is_zero()) throw std::invalid_argument("reduce: zero polynomial in basis");
  OrderedPolynomial result;
  result.sugar = p.sugar;
  if (p.is_zero()) return result;

  // Fraction-free: work holds (p - sum) * scale with integer coefficients, so
  // no rational normalization happens inside the loop.
  mpq_class scale = 1;
  std::vector<IntMonomial> work = to_integral(p.terms, scale);
  std::vector<std::optional<std::vector<IntMonomial>>> integral(basis.size());
  std::vector<IntMonomial> scratch;
  std::vector<IntMonomial> kept;
  std::size_t head = 0;
  std::size_t steps = 0;
  mpz_class a, b, d;
  while (head < work.size()) {
    const Term& t = work[head].term;
    std::size_t divisor = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!active.empty() && !active[k]) continue;
      if (basis[k].lead().term.divides(t)) {
        divisor = k;
        break;
      }
    }
    if (divisor == basis.size()) {
      if (mode == ReductionMode::LeadOnly) {
        kept.insert(kept.end(), std::make_move_iterator(work.begin() + head),
                    std::make_move_iterator(work.end()));
        break;
      }
      kept.push_back(std::move(work[head]));
      ++head;
      continue;
    }
    if (!integral[divisor]) {
      mpq_class unused = 1;
      integral[divisor] = to_integral(basis[divisor].terms, unused);
    }
    const auto& g = *integral[divisor];
    const Term q = t / g.front().term;
    mpz_gcd(d.get_mpz_t(), work[head].coeff.get_mpz_t(), g.front().coeff.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), g.front().coeff.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), work[head].coeff.get_mpz_t(), d.get_mpz_t());
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    result.sugar = std::max(result.sugar, sugar_of(o, q, sugar_degree) + basis[divisor].sugar);
    // a * work - b * q * g
    combine(o, work, head, a, b, q, g, scratch);
    std::swap(work, scratch);
    head = 0;
    if (a != 1) {
      for (auto& m : kept) m.coeff *= a;
      scale *= a;
    }
    if (++steps % 16 == 0) remove_content(work, kept, scale);
  }
  remove_content(work, kept, scale);
  result.terms.reserve(kept.size());
  for (auto& m : kept) {
    mpq_class c(m.coeff);
    c /= scale;
    result.terms.push_back(Monomial{std::move(m.term), std::move(c)});
  }
  return result;
}

OrderedPolynomial s_polynomial_ordered(const TermOrdering& o, const OrderedPolynomial& f,
                                       const OrderedPolynomial& g, SugarDegree sugar_degree) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial_ordered: zero input");
  const Term l = f.lead().term.lcm(g.lead().term);
  const Term qf = l / f.lead().term;
  const Term qg = l / g.lead().term;
  // lc(g)*qf*f - lc(f)*qg*g
  std::vector<Monomial> scaled_f;
  scaled_f.reserve(f.terms.size());
  for (const auto& m : f.terms) scaled_f.push_back(Monomial{qf * m.term, m.coeff * g.lead().coeff});
  std::vector<Monomial> out;
  const Coefficient c = f.lead().coeff;
  subtract_multiple(o, scaled_f, 0, c, qg, g.terms, out);
  OrderedPolynomial r;
  r.terms = std::move(out);
  r.sugar = std::max(f.sugar + sugar_of(o, qf, sugar_degree), g.sugar + sugar_of(o, qg, sugar_degree));
  return r;
}

void make_monic(OrderedPolynomial& p) {
  if (p.is_zero()) return;
  const Coefficient lc = p.terms.front().coeff;
  if (lc == 1) return;
  for (auto& m : p.terms) m.coeff /= lc;
}

}  // namespace conegb
