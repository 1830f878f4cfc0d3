#include "conegb/systems.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace conegb {

namespace {

Term product_term(std::size_t n, std::initializer_list<std::size_t> vars) {
  std::vector<std::int32_t> e(n, 0);
  for (auto v : vars) ++e[v];
  return Term(std::move(e));
}

}  // namespace

std::vector<Polynomial> generate_cyclic(std::size_t n) {
  if (n < 2) throw std::invalid_argument("generate_cyclic: n must be at least 2");
  std::vector<Polynomial> out;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Monomial> ms;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int32_t> e(n, 0);
      for (std::size_t j = 0; j < k; ++j) ++e[(i + j) % n];
      ms.push_back(Monomial{Term(std::move(e)), 1});
    }
    out.emplace_back(n, std::move(ms));
  }
  std::vector<std::int32_t> all(n, 1);
  out.emplace_back(n, std::vector<Monomial>{{Term(std::move(all)), 1}, {Term::one(n), -1}});
  return out;
}

std::vector<Polynomial> generate_katsura(std::size_t n) {
  if (n < 1) throw std::invalid_argument("generate_katsura: n must be at least 1");
  const std::size_t nv = n + 1;
  const auto idx = static_cast<std::int64_t>(n);
  std::vector<Polynomial> out;
  for (std::int64_t m = 0; m < idx; ++m) {
    std::vector<Monomial> ms;
    for (std::int64_t i = -idx; i <= idx; ++i) {
      const std::int64_t j = m - i;
      if (j < -idx || j > idx) continue;
      ms.push_back(Monomial{product_term(nv, {static_cast<std::size_t>(std::abs(i)),
                                              static_cast<std::size_t>(std::abs(j))}),
                            1});
    }
    ms.push_back(Monomial{Term::variable(nv, static_cast<std::size_t>(m), 1), -1});
    out.emplace_back(nv, std::move(ms));
  }
  std::vector<Monomial> lin{{Term::variable(nv, 0, 1), 1}, {Term::one(nv), -1}};
  for (std::size_t i = 1; i <= n; ++i) lin.push_back(Monomial{Term::variable(nv, i, 1), 2});
  out.emplace_back(nv, std::move(lin));
  return out;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line, const std::map<std::string, std::size_t, std::less<>>& vars)
      : s_(text), line_(line), vars_(vars) {}

  Polynomial polynomial() {
    std::vector<Monomial> ms;
    skip_ws();
    int sign = 1;
    if (take_sign(sign)) skip_ws();
    ms.push_back(monomial(sign));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (!take_sign(sign)) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
      skip_ws();
      ms.push_back(monomial(sign));
    }
    return Polynomial(vars_.size(), std::move(ms));
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, pos_ + 1, message); }
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool take_sign(int& sign) {
    if (at_end()) return false;
    if (s_[pos_] == '+' || s_[pos_] == '-') {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
      return true;
    }
    if (s_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
      sign = -1;
      pos_ += kUnicodeMinus.size();
      return true;
    }
    return false;
  }
  std::string digits() {
    const auto start = pos_;
    while (!at_end() && digit(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Monomial monomial(int sign) {
    Coefficient coeff = sign;
    std::vector<std::int32_t> exps(vars_.size(), 0);
    bool seen = false;
    if (!at_end() && digit(s_[pos_])) {
      mpq_class c{mpz_class(digits())};
      skip_ws();
      if (!at_end() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        const auto den_start = pos_;
        const auto den = digits();
        if (den.empty()) fail("malformed coefficient");
        const mpz_class d(den);
        if (d == 0) {
          pos_ = den_start;
          fail("zero denominator");
        }
        c /= d;
      }
      coeff *= c;
      seen = true;
    }
    for (;;) {
      const auto save = pos_;
      skip_ws();
      bool star = false;
      if (!at_end() && s_[pos_] == '*') {
        star = true;
        ++pos_;
        skip_ws();
      }
      if (at_end() || !ident_start(s_[pos_])) {
        if (star) fail("expected variable after '*'");
        pos_ = save;
        break;
      }
      const auto start = pos_;
      while (!at_end() && ident_char(s_[pos_])) ++pos_;
      const auto name = s_.substr(start, pos_ - start);
      const auto it = vars_.find(name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable " + std::string(name));
      }
      std::int64_t e = 1;
      skip_ws();
      if (!at_end() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        const auto ds = digits();
        if (ds.empty() || ds.size() > 9) fail("malformed exponent");
        e = std::stoll(ds);
        if (!at_end() && (ident_char(s_[pos_]) || s_[pos_] == '.')) fail("malformed exponent");
      }
      exps[it->second] += static_cast<std::int32_t>(e);
      seen = true;
    }
    if (!seen) fail(at_end() ? "expected monomial" : "unexpected character '" + std::string(1, s_[pos_]) + "'");
    return Monomial{Term(std::move(exps)), std::move(coeff)};
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
  const std::map<std::string, std::size_t, std::less<>>& vars_;
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

SystemFile parse_system(std::string_view text) {
  SystemFile out;
  std::map<std::string, std::size_t, std::less<>> vars;
  bool declared = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (strip(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!declared) {
      const auto lead = line.find_first_not_of(" \t");
      if (line.substr(lead, 5) != "vars:") throw ParseError(line_no, lead + 1, "expected 'vars:' declaration");
      std::size_t pos = lead + 5;
      while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',')) ++pos;
        if (pos >= line.size()) break;
        if (!ident_start(line[pos])) throw ParseError(line_no, pos + 1, "malformed variable name");
        const auto name_start = pos;
        while (pos < line.size() && ident_char(line[pos])) ++pos;
        std::string name(line.substr(name_start, pos - name_start));
        if (vars.count(name)) throw ParseError(line_no, name_start + 1, "duplicate variable " + name);
        vars.emplace(name, out.variables.size());
        out.variables.push_back(std::move(name));
      }
      if (out.variables.empty()) throw ParseError(line_no, lead + 1, "no variables declared");
      declared = true;
    } else {
      out.polynomials.push_back(LineParser(line, line_no, vars).polynomial());
    }
    if (end == text.size()) break;
  }
  if (!declared) throw ParseError(line_no == 0 ? 1 : line_no, 1, "empty system: missing 'vars:' declaration");
  if (out.polynomials.empty()) throw ParseError(line_no, 1, "empty system: no polynomials");
  return out;
}

std::string render_system(const SystemFile& system) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& v : system.variables) os << ' ' << v;
  os << '\n';
  for (const auto& p : system.polynomials) os << to_string(p, system.variables) << '\n';
  return os.str();
}

}  // namespace conegb
