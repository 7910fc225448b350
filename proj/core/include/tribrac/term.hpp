#pragma once

#include <string>
#include <vector>

#include "tribrac/tribracket.hpp"

namespace tribrac {

// Expression over variables x0, x1, ... built from the horizontal and vertical brackets.
class Term {
 public:
  enum class Op { var, h, v };

  static Term variable(int index);
  static Term h(Term x, Term y, Term z);
  static Term v(Term x, Term y, Term z);

  Op op() const noexcept { return op_; }
  int index() const noexcept { return var_; }
  const std::vector<Term>& args() const noexcept { return args_; }

  // Simultaneous replacement of every occurrence of variable `index` by `by`.
  Term substitute(int index, const Term& by) const;
  Elem evaluate(const Tribracket& t, std::span<const Elem> values) const;
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Op op_ = Op::var;
  int var_ = 0;
  std::vector<Term> args_;
};

// z_i of the phi map in the substitution form, over variables a=x0, b1=x1, ..
Term phi_substitution_term(int i);
// w_i of the psi map in the substitution form, over variables a=x0, a1=x1, ..
Term psi_substitution_term(int i);

}  // namespace tribrac
