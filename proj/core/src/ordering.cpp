#include "conegb/ordering.hpp"

#include <sstream>
#include <stdexcept>

namespace conegb {

namespace {

std::strong_ordering revlex(const Term& u, const Term& v) {
  for (std::size_t k = u.size(); k-- > 0;) {
    if (u[k] != v[k]) return v[k] <=> u[k];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lexicographic(const Term& u, const Term& v) {
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != v[k]) return u[k] <=> v[k];
  }
  return std::strong_ordering::equal;
}

std::int64_t dot(std::span<const std::int64_t> row, const Term& t) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * t[k];
  return s;
}

}  // namespace

TermOrdering TermOrdering::grevlex(std::size_t nvars) {
  return weighted(std::vector<std::int64_t>(nvars, 1), Tiebreak::Grevlex);
}

TermOrdering TermOrdering::lex(std::size_t nvars) {
  TermOrdering o;
  o.nvars_ = nvars;
  o.tiebreak_ = Tiebreak::Lex;
  return o;
}

TermOrdering TermOrdering::weighted(std::vector<std::int64_t> weight, Tiebreak tiebreak) {
  if (tiebreak == Tiebreak::Matrix)
    throw std::invalid_argument("TermOrdering::weighted: use matrix() for matrix tie-breaks");
  if (weight.empty()) throw std::invalid_argument("TermOrdering: empty weight vector");
  for (auto w : weight)
    if (w <= 0) throw std::invalid_argument("TermOrdering: weights must be strictly positive");
  TermOrdering o;
  o.nvars_ = weight.size();
  o.weight_ = std::move(weight);
  o.tiebreak_ = tiebreak;
  return o;
}

TermOrdering TermOrdering::matrix(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) throw std::invalid_argument("TermOrdering::matrix: no rows");
  const auto n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("TermOrdering::matrix: ragged rows");
  TermOrdering o = weighted(rows.front(), Tiebreak::Grevlex);
  o.tiebreak_ = Tiebreak::Matrix;
  o.rows_.assign(rows.begin() + 1, rows.end());
  return o;
}

std::int64_t TermOrdering::weighted_degree(const Term& t) const {
  if (t.size() != nvars_) throw std::invalid_argument("TermOrdering: variable count mismatch");
  return weight_.empty() ? t.degree() : dot(weight_, t);
}

std::strong_ordering TermOrdering::compare(const Term& u, const Term& v) const {
  if (u.size() != nvars_ || v.size() != nvars_)
    throw std::invalid_argument("TermOrdering: variable count mismatch");
  if (!weight_.empty()) {
    if (auto c = dot(weight_, u) <=> dot(weight_, v); c != 0) return c;
  }
  switch (tiebreak_) {
    case Tiebreak::Lex:
      return lexicographic(u, v);
    case Tiebreak::Matrix:
      for (const auto& row : rows_) {
        if (auto c = dot(row, u) <=> dot(row, v); c != 0) return c;
      }
      [[fallthrough]];
    case Tiebreak::Grevlex:
      if (auto c = u.degree() <=> v.degree(); c != 0) return c;
      return revlex(u, v);
  }
  return std::strong_ordering::equal;
}

std::string TermOrdering::describe() const {
  std::ostringstream os;
  if (weight_.empty()) {
    os << "lex";
    return os.str();
  }
  os << "weight(";
  for (std::size_t k = 0; k < weight_.size(); ++k) os << (k ? "," : "") << weight_[k];
  os << ")+";
  switch (tiebreak_) {
    case Tiebreak::Grevlex: os << "grevlex"; break;
    case Tiebreak::Lex: os << "lex"; break;
    case Tiebreak::Matrix:
      os << "matrix[";
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        os << (r ? ";" : "");
        for (std::size_t k = 0; k < rows_[r].size(); ++k) os << (k ? "," : "") << rows_[r][k];
      }
      os << "]";
      break;
  }
  return os.str();
}

}  // namespace conegb
