#include "conegb/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "conegb/reduction.hpp"

namespace conegb {

namespace {

bool storage_greater(const Monomial& a, const Monomial& b) { return a.term > b.term; }

}  // namespace

Polynomial::Polynomial(std::size_t nvars, std::vector<Monomial> monomials) : nvars_(nvars) {
  for (const auto& m : monomials)
    if (m.term.size() != nvars) throw std::invalid_argument("Polynomial: term has wrong variable count");
  std::sort(monomials.begin(), monomials.end(), storage_greater);
  for (auto& m : monomials) {
    if (!terms_.empty() && terms_.back().term == m.term) {
      terms_.back().coeff += m.coeff;
      if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
    } else if (sgn(m.coeff) != 0) {
      terms_.push_back(std::move(m));
    }
  }
}

Polynomial Polynomial::constant(std::size_t nvars, const Coefficient& c) {
  return Polynomial(nvars, {Monomial{Term::one(nvars), c}});
}

Polynomial Polynomial::monomial(const Term& t, const Coefficient& c) {
  return Polynomial(t.size(), {Monomial{t, c}});
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
}

std::vector<Term> Polynomial::support() const {
  std::vector<Term> s;
  s.reserve(terms_.size());
  for (const auto& m : terms_) s.push_back(m.term);
  return s;
}

Coefficient Polynomial::coefficient(const Term& t) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                             [](const Monomial& m, const Term& key) { return m.term > key; });
  if (it != terms_.end() && it->term == t) return it->coeff;
  return Coefficient(0);
}

bool Polynomial::contains(const Term& t) const { return sgn(coefficient(t)) != 0; }

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const auto& m : terms_) d = std::max(d, m.term.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Monomial& m) { return m.term.degree() == terms_.front().term.degree(); });
}

Polynomial Polynomial::operator-() const { return scaled(Coefficient(-1)); }

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    if (terms_[i].term > other.terms_[j].term) {
      out.push_back(terms_[i++]);
    } else if (terms_[i].term < other.terms_[j].term) {
      out.push_back(other.terms_[j++]);
    } else {
      Coefficient c = terms_[i].coeff + other.terms_[j].coeff;
      if (sgn(c) != 0) out.push_back(Monomial{terms_[i].term, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
  return Polynomial(Sorted{}, nvars_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  std::vector<Monomial> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) out.push_back(Monomial{a.term * b.term, a.coeff * b.coeff});
  return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  if (sgn(c) == 0) return Polynomial(nvars_);
  auto out = terms_;
  for (auto& m : out) m.coeff *= c;
  return Polynomial(Sorted{}, nvars_, std::move(out));
}

Polynomial Polynomial::times(const Term& t, const Coefficient& c) const {
  if (t.size() != nvars_) throw std::invalid_argument("Polynomial::times: variable count mismatch");
  if (sgn(c) == 0) return Polynomial(nvars_);
  // Multiplying by a term is monotone for the lexicographic storage order.
  auto out = terms_;
  for (auto& m : out) {
    m.term = m.term * t;
    m.coeff *= c;
  }
  return Polynomial(Sorted{}, nvars_, std::move(out));
}

Monomial leading_monomial(const TermOrdering& o, const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
  if (p.nvars() != o.nvars()) throw std::invalid_argument("leading_term: variable count mismatch");
  const auto ms = p.monomials();
  auto best = ms.begin();
  for (auto it = ms.begin() + 1; it != ms.end(); ++it)
    if (o.compare(it->term, best->term) > 0) best = it;
  return *best;
}

Polynomial s_polynomial(const TermOrdering& o, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("s_polynomial: both inputs are zero");
  if (g.is_zero()) return f;
  if (f.is_zero()) return g;
  auto r = s_polynomial_ordered(o, order_by(o, f), order_by(o, g));
  return to_polynomial(f.nvars(), r);
}

Polynomial reduce(const TermOrdering& o, const Polynomial& p, std::span<const Polynomial> basis,
                  ReductionMode mode) {
  std::vector<OrderedPolynomial> ordered;
  ordered.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("reduce: zero polynomial in basis");
    if (g.nvars() != p.nvars()) throw std::invalid_argument("reduce: variable count mismatch");
    ordered.push_back(order_by(o, g));
  }
  auto r = reduce_ordered(o, order_by(o, p), ordered, mode);
  return to_polynomial(p.nvars(), r);
}

Polynomial make_monic(const TermOrdering& o, const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(Coefficient(1) / leading_monomial(o, p).coeff);
}

Polynomial homogenize(const Polynomial& p) {
  const auto d = std::max<std::int64_t>(p.total_degree(), 0);
  std::vector<Monomial> out;
  out.reserve(p.size());
  for (const auto& m : p.monomials())
    out.push_back(Monomial{m.term.extended(static_cast<std::int32_t>(d - m.term.degree())), m.coeff});
  return Polynomial(p.nvars() + 1, std::move(out));
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < nvars; ++k) names.push_back("x" + std::to_string(k + 1));
  return names;
}

std::string to_string(const Term& t, std::span<const std::string> names) {
  std::vector<std::string> fallback;
  if (names.size() < t.size()) {
    fallback = default_names(t.size());
    names = fallback;
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << names[k];
    if (t[k] > 1) os << '^' << t[k];
  }
  if (first) os << '1';
  return os.str();
}

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : p.monomials()) {
    Coefficient c = m.coeff;
    if (sgn(c) < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (m.term.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << to_string(m.term, names);
    }
  }
  return os.str();
}

}  // namespace conegb
