#include "cifano/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cifano {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrevlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff < 0;
  }
  return false;
}

namespace {

void enumerate_monomials(int num_vars, int degree, int var, Exponents& cur,
                         std::vector<Exponents>& out) {
  if (var == num_vars - 1) {
    cur[var] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[var] = e;
    enumerate_monomials(num_vars, degree - e, var + 1, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomial_basis(int num_vars, int degree) {
  if (num_vars < 1) throw std::invalid_argument("monomial_basis: need at least one variable");
  if (degree < 0) throw std::invalid_argument("monomial_basis: negative degree");
  std::vector<Exponents> out;
  Exponents cur(num_vars, 0);
  enumerate_monomials(num_vars, degree, 0, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

MultiPoly::MultiPoly(Field field, int num_vars)
    : field_(field), num_vars_(num_vars), degree_(-1) {
  if (num_vars < 1) throw std::invalid_argument("MultiPoly: need at least one variable");
}

MultiPoly MultiPoly::monomial(Field field, const Exponents& exps, const FieldScalar& coeff) {
  MultiPoly p(field, static_cast<int>(exps.size()));
  p.add_term(exps, coeff);
  return p;
}

FieldScalar MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const FieldScalar& coeff) {
  if (static_cast<int>(exps.size()) != num_vars_) {
    throw std::invalid_argument("MultiPoly::add_term: exponent length mismatch");
  }
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("MultiPoly::add_term: negative exponent");
  }
  if (coeff.is_zero()) return;
  int deg = total_degree(exps);
  if (degree_ >= 0 && deg != degree_) {
    throw std::invalid_argument("MultiPoly::add_term: would break homogeneity");
  }
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
  degree_ = terms_.empty() ? -1 : deg;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (num_vars_ != rhs.num_vars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (num_vars_ != rhs.num_vars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly out(a.field_, a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.num_vars_);
      for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const FieldScalar& c) const {
  MultiPoly out(field_, num_vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
}

FieldScalar MultiPoly::eval(const std::vector<FieldScalar>& pt) const {
  if (static_cast<int>(pt.size()) != num_vars_) {
    throw std::invalid_argument("MultiPoly::eval: point dimension mismatch");
  }
  FieldScalar acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    FieldScalar term = c;
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] != 0) term *= pt[i].pow(e[i]);
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= num_vars_) throw std::invalid_argument("MultiPoly::derivative: bad variable");
  MultiPoly out(field_, num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    FieldScalar nc = c * field_.integer(e[var]);
    if (nc.is_zero()) continue;  // characteristic divides the exponent
    Exponents ne = e;
    --ne[var];
    out.add_term(ne, nc);
  }
  return out;
}

MultiPoly MultiPoly::compose_linear(const ExactMatrix& m) const {
  if (m.rows() != static_cast<std::size_t>(num_vars_)) {
    throw std::invalid_argument("MultiPoly::compose_linear: matrix rows must match variable count");
  }
  int out_vars = static_cast<int>(m.cols());
  if (out_vars < 1) throw std::invalid_argument("MultiPoly::compose_linear: empty target");
  // Linear form for each original variable.
  std::vector<MultiPoly> forms;
  forms.reserve(num_vars_);
  for (int i = 0; i < num_vars_; ++i) {
    MultiPoly f(field_, out_vars);
    for (int j = 0; j < out_vars; ++j) {
      Exponents e(out_vars, 0);
      e[j] = 1;
      f.add_term(e, m.at(i, j));
    }
    forms.push_back(std::move(f));
  }
  MultiPoly out(field_, out_vars);
  for (const auto& [e, c] : terms_) {
    bool dead = false;
    for (int i = 0; i < num_vars_ && !dead; ++i) {
      if (e[i] > 0 && forms[i].is_zero()) dead = true;
    }
    if (dead) continue;
    MultiPoly term(field_, out_vars);
    term.add_term(Exponents(out_vars, 0), c);
    for (int i = 0; i < num_vars_; ++i) {
      for (int k = 0; k < e[i]; ++k) term = term * forms[i];
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::restrict_to_first_vars(int k) const {
  if (k < 1 || k > num_vars_) throw std::invalid_argument("MultiPoly::restrict_to_first_vars: bad count");
  MultiPoly out(field_, k);
  for (const auto& [e, c] : terms_) {
    bool supported = true;
    for (int i = k; i < num_vars_; ++i) {
      if (e[i] != 0) {
        supported = false;
        break;
      }
    }
    if (!supported) continue;
    out.add_term(Exponents(e.begin(), e.begin() + k), c);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    bool negative = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) cs = cs.substr(1);
    first = false;
    bool constant_term = total_degree(e) == 0;
    bool unit = cs == "1";
    if (!unit || constant_term) os << cs;
    bool printed_var = false;
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (printed_var || !unit) os << '*';
      os << 'z' << i;
      if (e[i] > 1) os << '^' << e[i];
      printed_var = true;
    }
  }
  return os.str();
}

namespace {

struct PolyLexer {
  std::string s;
  std::size_t pos = 0;

  explicit PolyLexer(std::string_view text) {
    s.reserve(text.size());
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
  }

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  char take() { return s[pos++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
  }

  std::string take_digits() {
    std::string d;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(take());
    if (d.empty()) fail("expected digits");
    return d;
  }
};

}  // namespace

MultiPoly MultiPoly::parse(Field field, std::string_view text, int num_vars) {
  PolyLexer lx(text);
  if (lx.done()) throw std::invalid_argument("polynomial parse error: empty input");

  struct RawTerm {
    FieldScalar coeff;
    std::map<int, int> exps;  // variable index -> exponent
  };
  std::vector<RawTerm> raw;
  int max_var = -1;

  bool first_term = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.peek() == '+' || lx.peek() == '-') {
      if (lx.take() == '-') sign = -1;
    } else if (!first_term) {
      lx.fail("expected '+' or '-' between terms");
    }
    first_term = false;

    RawTerm term{field.integer(sign), {}};
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      if (lx.done()) {
        if (saw_factor) break;
        lx.fail("unexpected end of input");
      }
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string scalar = lx.take_digits();
        if (!lx.done() && lx.peek() == '/') {
          lx.take();
          scalar += "/" + lx.take_digits();
        }
        term.coeff *= field.parse(scalar);
        saw_factor = true;
      } else if (c == 'z') {
        lx.take();
        int var = std::stoi(lx.take_digits());
        int exp = 1;
        if (!lx.done() && lx.peek() == '^') {
          lx.take();
          exp = std::stoi(lx.take_digits());
        }
        max_var = std::max(max_var, var);
        term.exps[var] += exp;
        saw_factor = true;
      } else {
        lx.fail(std::string("unexpected character '") + c + "'");
      }
      if (!lx.done() && lx.peek() == '*') {
        lx.take();
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) lx.fail("empty term");
    raw.push_back(std::move(term));
  }

  int needed = max_var + 1;
  if (num_vars == 0) num_vars = std::max(needed, 1);
  if (needed > num_vars) {
    throw std::invalid_argument("polynomial parse error: variable z" + std::to_string(max_var) +
                                " exceeds declared variable count " + std::to_string(num_vars));
  }
  MultiPoly out(field, num_vars);
  for (const auto& t : raw) {
    Exponents e(num_vars, 0);
    for (const auto& [var, exp] : t.exps) e[var] = exp;
    out.add_term(e, t.coeff);
  }
  return out;
}

}  // namespace cifano
