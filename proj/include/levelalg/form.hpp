// Homogeneous multivariate polynomials over exact rationals, sparse
// exponent-map representation, plus the one-line text grammar used by
// module files and the CLI.
#ifndef LEVELALG_FORM_HPP
#define LEVELALG_FORM_HPP

#include "levelalg/ints.hpp"

#include <map>
#include <string>

namespace levelalg {

using Exponent = std::vector<int>;

class Form {
 public:
  Form() : num_vars_(1), degree_(0) {}
  Form(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {}

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rat>& terms() const { return terms_; }

  /// Adds c * y^exp; drops the term if the total cancels.
  void add_term(const Exponent& exp, const Rat& c);

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Form& o) const;
  Form scaled(const Rat& c) const;

  bool operator==(const Form& o) const {
    return num_vars_ == o.num_vars_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

  std::string to_string(char var = 'y') const;

 private:
  int num_vars_;
  int degree_;
  std::map<Exponent, Rat> terms_;
};

/// Formal partial derivative with respect to variable var_index (1-based).
Form differentiate(const Form& f, int var_index);

/// Iterated derivative D^a f for a multi-index a.
Form differentiate_multi(const Form& f, const Exponent& a);

/// (sum_k coeffs[k] * y_{k+1})^power as an explicit Form.
Form linear_power(const std::vector<Rat>& coeffs, int power);

/// All exponent tuples of degree d in r variables, ascending lexicographic.
const std::vector<Exponent>& monomial_basis(int r, int d);

/// Position of exp within monomial_basis(r, |exp|).
int monomial_index(int r, const Exponent& exp);

/// Coefficient row of f over monomial_basis(f.num_vars, f.degree).
std::vector<Rat> coefficient_row(const Form& f);

/// Parses one term line of the grammar  [coeff*]var^exp[*var^exp...] joined
/// by +/-;  variables are y1..yr or x1..xr.  Throws on malformed input.
Form parse_form(const std::string& text, int num_vars);

/// Parses a module file: one generator per line, '#' comments, blank lines
/// skipped; the variable count is the largest index used unless forced.
std::vector<Form> parse_form_lines(const std::string& text, int num_vars = 0);

} // namespace levelalg

#endif
