#include "conegb/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace conegb {

namespace {

std::vector<Term> minimalize(std::vector<Term> gens) {
  std::sort(gens.begin(), gens.end(), [](const Term& a, const Term& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a > b;
  });
  std::vector<Term> out;
  for (auto& g : gens) {
    const bool redundant = std::any_of(out.begin(), out.end(), [&](const Term& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

void add_shifted(IntPolynomial& acc, const IntPolynomial& p, std::int64_t shift) {
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntPolynomial one_minus_t_to(std::int64_t e) {
  IntPolynomial p(static_cast<std::size_t>(e) + 1, 0);
  p[0] += 1;
  p[static_cast<std::size_t>(e)] -= 1;
  return p;
}

void trim(IntPolynomial& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(0);
}

IntPolynomial numerator_of(const std::vector<Term>& gens) {
  if (gens.empty()) return {1};
  const std::size_t n = gens.front().size();
  std::vector<std::size_t> occurrences(n, 0);
  for (const auto& g : gens)
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] > 0) ++occurrences[k];
  const auto pivot_var = static_cast<std::size_t>(
      std::max_element(occurrences.begin(), occurrences.end()) - occurrences.begin());
  if (occurrences[pivot_var] <= 1) {
    // Pairwise coprime generators: the series factors.
    IntPolynomial p{1};
    for (const auto& g : gens) p = multiply(p, one_minus_t_to(g.degree()));
    trim(p);
    return p;
  }
  std::int32_t e = 0;
  for (const auto& g : gens)
    if (g[pivot_var] > 0 && (e == 0 || g[pivot_var] < e)) e = g[pivot_var];
  const Term pivot = Term::variable(n, pivot_var, e);

  // H(R/I) = H(R/(I + p)) + t^deg(p) H(R/(I : p)). With e the smallest
  // positive exponent, p divides every generator containing the pivot variable.
  std::vector<Term> sum_gens{pivot};
  std::vector<Term> quotient_gens;
  for (const auto& g : gens) {
    if (g[pivot_var] == 0) sum_gens.push_back(g);
    quotient_gens.push_back(g / g.gcd(pivot));
  }
  IntPolynomial result = numerator_of(minimalize(std::move(sum_gens)));
  add_shifted(result, numerator_of(minimalize(std::move(quotient_gens))), e);
  trim(result);
  return result;
}

mpz_class binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0 || top < bottom) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return r;
}

std::int64_t evaluate_at_one(const IntPolynomial& p) {
  std::int64_t s = 0;
  for (auto c : p) s += c;
  return s;
}

bool is_zero_poly(const IntPolynomial& p) {
  return std::all_of(p.begin(), p.end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::span<const Term> generators) : nvars_(nvars) {
  for (const auto& g : generators)
    if (g.size() != nvars) throw std::invalid_argument("MonomialIdeal: generator has wrong variable count");
  gens_ = minimalize(std::vector<Term>(generators.begin(), generators.end()));
}

bool MonomialIdeal::contains(const Term& t) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Term& g) { return g.divides(t); });
}

void MonomialIdeal::add(const Term& t) {
  if (t.size() != nvars_) throw std::invalid_argument("MonomialIdeal: generator has wrong variable count");
  if (contains(t)) return;
  std::erase_if(gens_, [&](const Term& g) { return t.divides(g); });
  gens_.push_back(t);
}

MonomialIdeal MonomialIdeal::with(const Term& t) const {
  MonomialIdeal copy(*this);
  copy.add(t);
  return copy;
}

IntPolynomial hilbert_numerator(const MonomialIdeal& ideal) {
  return numerator_of(minimalize(ideal.generators()));
}

HilbertData hilbert_data(const MonomialIdeal& ideal) {
  HilbertData h;
  h.nvars = ideal.nvars();
  h.numerator = hilbert_numerator(ideal);
  h.reduced_numerator = h.numerator;
  h.dimension = static_cast<std::int64_t>(ideal.nvars());
  if (is_zero_poly(h.numerator)) {
    // I = R: every graded piece of R/I vanishes.
    h.dimension = 0;
    h.reduced_numerator = {0};
    h.hp_degree = -1;
    h.regularity = 0;
    return h;
  }
  while (h.dimension > 0 && evaluate_at_one(h.reduced_numerator) == 0) {
    // N(t) = (1 - t) Q(t)  <=>  Q_i = N_0 + ... + N_i.
    IntPolynomial q(h.reduced_numerator.size() - 1, 0);
    std::int64_t running = 0;
    for (std::size_t i = 0; i + 1 < h.reduced_numerator.size(); ++i) {
      running += h.reduced_numerator[i];
      q[i] = running;
    }
    trim(q);
    h.reduced_numerator = std::move(q);
    --h.dimension;
  }
  const auto degree_q = static_cast<std::int64_t>(h.reduced_numerator.size()) - 1;
  if (h.dimension == 0) {
    h.hp_degree = -1;
    h.regularity = degree_q + 1;
    return h;
  }
  const std::int64_t D = h.dimension;
  h.hp_degree = D - 1;
  h.regularity = std::max<std::int64_t>(0, degree_q - D + 1);
  // HP(d) = sum_i q_i * prod_{j=1}^{D-1} (d - i + j) / (D-1)!
  mpz_class factorial = 1;
  for (std::int64_t j = 2; j < D; ++j) factorial *= j;
  h.hp_coeffs.assign(static_cast<std::size_t>(D), mpq_class(0));
  for (std::size_t i = 0; i < h.reduced_numerator.size(); ++i) {
    if (h.reduced_numerator[i] == 0) continue;
    std::vector<mpq_class> poly{mpq_class(1)};
    for (std::int64_t j = 1; j < D; ++j) {
      const mpq_class root_shift(j - static_cast<std::int64_t>(i));
      std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] += poly[k];
        next[k] += poly[k] * root_shift;
      }
      poly = std::move(next);
    }
    for (std::size_t k = 0; k < poly.size(); ++k)
      h.hp_coeffs[k] += poly[k] * mpq_class(h.reduced_numerator[i]) / mpq_class(factorial);
  }
  return h;
}

mpz_class HilbertData::series_coefficient(std::int64_t d) const {
  if (d < 0) return 0;
  mpz_class total = 0;
  for (std::size_t i = 0; i < reduced_numerator.size(); ++i) {
    const auto shift = d - static_cast<std::int64_t>(i);
    if (shift < 0) break;
    if (reduced_numerator[i] == 0) continue;
    if (dimension == 0) {
      if (shift == 0) total += mpz_class(static_cast<long>(reduced_numerator[i]));
      continue;
    }
    total += mpz_class(static_cast<long>(reduced_numerator[i])) * binomial(shift + dimension - 1, dimension - 1);
  }
  return total;
}

mpq_class HilbertData::hilbert_polynomial_at(std::int64_t d) const {
  mpq_class value = 0;
  mpq_class power = 1;
  for (const auto& c : hp_coeffs) {
    value += c * power;
    power *= d;
  }
  return value;
}

mpq_class HilbertData::leading_hp_coefficient() const {
  return hp_coeffs.empty() ? mpq_class(0) : hp_coeffs.back();
}

CandidateComparison compare_candidates(const HilbertData& a, const HilbertData& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("compare_candidates: dimension mismatch");
  if (a.hp_degree != b.hp_degree)
    return a.hp_degree < b.hp_degree ? CandidateComparison::ABetter : CandidateComparison::BBetter;
  if (a.hp_degree >= 0) {
    const auto la = a.leading_hp_coefficient();
    const auto lb = b.leading_hp_coefficient();
    if (la != lb) return la < lb ? CandidateComparison::ABetter : CandidateComparison::BBetter;
  }
  // Past max regularity both functions are polynomials of degree <= hp_degree,
  // so hp_degree + 1 further points decide equality.
  const auto last = std::max(a.regularity, b.regularity) + std::max<std::int64_t>(a.hp_degree, 0) + 1;
  for (std::int64_t d = 0; d <= last; ++d) {
    const auto ca = a.series_coefficient(d);
    const auto cb = b.series_coefficient(d);
    if (ca != cb) return ca < cb ? CandidateComparison::ABetter : CandidateComparison::BBetter;
  }
  return CandidateComparison::Tie;
}

std::int64_t standard_monomial_count(const MonomialIdeal& ideal, std::int64_t d) {
  if (d < 0) throw std::invalid_argument("standard_monomial_count: negative degree");
  const std::size_t n = ideal.nvars();
  if (n == 0) return d == 0 ? 1 : 0;
  std::int64_t count = 0;
  std::vector<std::int32_t> e(n, 0);
  std::function<void(std::size_t, std::int64_t)> place = [&](std::size_t k, std::int64_t left) {
    if (k + 1 == n) {
      e[k] = static_cast<std::int32_t>(left);
      if (!ideal.contains(Term(e))) ++count;
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      e[k] = static_cast<std::int32_t>(v);
      place(k + 1, left - v);
    }
  };
  place(0, d);
  return count;
}

}  // namespace conegb
