#include "levelalg/form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace levelalg {

void Form::add_term(const Exponent& exp, const Rat& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(exp.size()) != num_vars_)
    throw std::invalid_argument("Form::add_term: exponent length mismatch");
  int total = 0;
  for (int e : exp) {
    if (e < 0) throw std::invalid_argument("Form::add_term: negative exponent");
    total += e;
  }
  if (total != degree_) throw std::invalid_argument("Form::add_term: wrong degree");
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator+(const Form& o) const {
  if (num_vars_ != o.num_vars_ || degree_ != o.degree_)
    throw std::invalid_argument("Form::+: mixed degrees or variable counts");
  Form out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Form Form::operator-(const Form& o) const { return *this + o.scaled(-1); }

Form Form::operator*(const Form& o) const {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("Form::*: variable count mismatch");
  Form out(num_vars_, degree_ + o.degree_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e = e1;
      for (int k = 0; k < num_vars_; ++k) e[k] += e2[k];
      out.add_term(e, c1 * c2);
    }
  return out;
}

Form Form::scaled(const Rat& c) const {
  Form out(num_vars_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [e, k] : terms_) out.add_term(e, k * c);
  return out;
}

std::string Form::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print high-lex terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::vector<std::string> factors;
    if (c != 1) factors.push_back(c.str());
    for (int k = 0; k < num_vars_; ++k) {
      int e = it->first[k];
      if (e == 0) continue;
      std::ostringstream f;
      f << var << (k + 1);
      if (e > 1) f << "^" << e;
      factors.push_back(f.str());
    }
    if (factors.empty()) factors.push_back("1");
    for (size_t k = 0; k < factors.size(); ++k) {
      if (k) os << "*";
      os << factors[k];
    }
  }
  return os.str();
}

Form differentiate(const Form& f, int var_index) {
  if (var_index < 1 || var_index > f.num_vars())
    throw std::invalid_argument("differentiate: bad variable index");
  Form out(f.num_vars(), std::max(0, f.degree() - 1));
  if (f.degree() == 0) return out;
  const int k = var_index - 1;
  for (const auto& [e, c] : f.terms()) {
    if (e[k] == 0) continue;
    Exponent d = e;
    --d[k];
    out.add_term(d, c * e[k]);
  }
  return out;
}

Form differentiate_multi(const Form& f, const Exponent& a) {
  if (static_cast<int>(a.size()) != f.num_vars())
    throw std::invalid_argument("differentiate_multi: index length mismatch");
  int order = 0;
  for (int v : a) order += v;
  Form out(f.num_vars(), std::max(0, f.degree() - order));
  if (order > f.degree()) return out;
  for (const auto& [e, c] : f.terms()) {
    Rat factor = c;
    Exponent tgt = e;
    bool alive = true;
    for (int k = 0; k < f.num_vars() && alive; ++k) {
      if (e[k] < a[k]) { alive = false; break; }
      for (int s = 0; s < a[k]; ++s) factor *= (e[k] - s);
      tgt[k] = e[k] - a[k];
    }
    if (alive) out.add_term(tgt, factor);
  }
  return out;
}

Form linear_power(const std::vector<Rat>& coeffs, int power) {
  const int r = static_cast<int>(coeffs.size());
  Form out(r, power);
  for (const auto& exp : monomial_basis(r, power)) {
    Rat c = 1;
    // multinomial coefficient power! / prod(exp!)
    Int multi = 1, rest = power;
    for (int k = 0; k < r; ++k) {
      for (int s = 1; s <= exp[k]; ++s) {
        multi *= rest;
        multi /= s;
        --rest;
      }
    }
    for (int k = 0; k < r; ++k) {
      if (exp[k] == 0) continue;
      if (coeffs[k].is_zero()) { c = 0; break; }
      for (int s = 0; s < exp[k]; ++s) c *= coeffs[k];
    }
    out.add_term(exp, c * Rat(multi));
  }
  return out;
}

namespace {

void basis_rec(int r, int d, Exponent& cur, std::vector<Exponent>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur.push_back(e);
    basis_rec(r, d - e, cur, out);
    cur.pop_back();
  }
}

} // namespace

const std::vector<Exponent>& monomial_basis(int r, int d) {
  static std::map<std::pair<int, int>, std::vector<Exponent>> cache;
  auto key = std::make_pair(r, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Exponent> out;
  Exponent cur;
  basis_rec(r, d, cur, out);
  std::sort(out.begin(), out.end());
  return cache.emplace(key, std::move(out)).first->second;
}

int monomial_index(int r, const Exponent& exp) {
  int d = 0;
  for (int e : exp) d += e;
  const auto& basis = monomial_basis(r, d);
  auto it = std::lower_bound(basis.begin(), basis.end(), exp);
  if (it == basis.end() || *it != exp)
    throw std::logic_error("monomial_index: exponent not found");
  return static_cast<int>(it - basis.begin());
}

std::vector<Rat> coefficient_row(const Form& f) {
  const auto& basis = monomial_basis(f.num_vars(), f.degree());
  std::vector<Rat> row(basis.size(), Rat(0));
  for (const auto& [e, c] : f.terms()) row[monomial_index(f.num_vars(), e)] = c;
  return row;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  explicit Lexer(const std::string& str) : s(str) {}
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  Int integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("form parse: expected integer near '" + s.substr(start) + "'");
    return Int(s.substr(start, i - start));
  }
  int small_integer(const char* what) {
    Int v = integer();
    if (v > 1000000) throw std::invalid_argument(std::string("form parse: ") + what + " too large");
    return static_cast<int>(v);
  }
};

struct RawTerm {
  Rat coeff;
  std::map<int, int> powers; // 1-based variable -> exponent
  char var_letter = 0;
};

RawTerm parse_term(Lexer& lx) {
  RawTerm t;
  t.coeff = 1;
  bool saw_factor = false;
  while (true) {
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = lx.integer();
      Rat v(num);
      if (lx.peek() == '/') {
        ++lx.i;
        Int den = lx.integer();
        if (den == 0) throw std::invalid_argument("form parse: zero denominator");
        v = Rat(num, den);
      }
      t.coeff *= v;
      saw_factor = true;
    } else if (c == 'x' || c == 'y') {
      if (t.var_letter && t.var_letter != c)
        throw std::invalid_argument("form parse: mixed x/y variables");
      t.var_letter = c;
      ++lx.i;
      int idx = lx.small_integer("variable index");
      if (idx < 1) throw std::invalid_argument("form parse: variable index must be >= 1");
      int exp = 1;
      if (lx.peek() == '^') {
        ++lx.i;
        exp = lx.small_integer("exponent");
      }
      t.powers[idx] += exp;
      saw_factor = true;
    } else {
      throw std::invalid_argument(std::string("form parse: unexpected character '") + c + "'");
    }
    if (lx.peek() == '*') {
      ++lx.i;
      continue;
    }
    break;
  }
  if (!saw_factor) throw std::invalid_argument("form parse: empty term");
  return t;
}

} // namespace

Form parse_form(const std::string& text, int num_vars) {
  Lexer lx(text);
  std::vector<std::pair<Rat, std::map<int, int>>> terms;
  int max_var = 0;
  int sign = 1;
  if (lx.peek() == '+' || lx.peek() == '-') {
    sign = lx.peek() == '-' ? -1 : 1;
    ++lx.i;
  }
  while (true) {
    RawTerm t = parse_term(lx);
    for (const auto& [v, _] : t.powers) max_var = std::max(max_var, v);
    terms.emplace_back(t.coeff * sign, t.powers);
    if (lx.done()) break;
    char c = lx.peek();
    if (c == '+') sign = 1;
    else if (c == '-') sign = -1;
    else throw std::invalid_argument("form parse: expected + or -");
    ++lx.i;
  }
  const int r = num_vars > 0 ? num_vars : max_var;
  if (max_var > r) throw std::invalid_argument("form parse: variable index exceeds variable count");
  int degree = -1;
  Form out;
  for (const auto& [c, powers] : terms) {
    Exponent e(r, 0);
    int d = 0;
    for (const auto& [v, p] : powers) {
      e[v - 1] += p;
      d += p;
    }
    if (degree < 0) {
      degree = d;
      out = Form(r, degree);
    } else if (d != degree) {
      throw std::invalid_argument("form parse: inhomogeneous form");
    }
    out.add_term(e, c);
  }
  if (degree < 0) throw std::invalid_argument("form parse: empty form");
  return out;
}

std::vector<Form> parse_form_lines(const std::string& text, int num_vars) {
  std::vector<std::string> lines;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur)) {
    auto hash = cur.find('#');
    if (hash != std::string::npos) cur = cur.substr(0, hash);
    bool blank = true;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) lines.push_back(cur);
  }
  if (num_vars == 0) {
    // two passes so every generator shares the widest variable window
    for (const auto& line : lines) {
      Form f = parse_form(line, 0);
      num_vars = std::max(num_vars, f.num_vars());
    }
  }
  std::vector<Form> out;
  for (const auto& line : lines) out.push_back(parse_form(line, num_vars));
  return out;
}

} // namespace levelalg
