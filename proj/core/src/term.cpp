#include "tribrac/term.hpp"

#include "tribrac/error.hpp"

namespace tribrac {

Term Term::variable(int index) {
  Term t;
  t.var_ = index;
  return t;
}

Term Term::h(Term x, Term y, Term z) {
  Term t;
  t.op_ = Op::h;
  t.args_ = {std::move(x), std::move(y), std::move(z)};
  return t;
}

Term Term::v(Term x, Term y, Term z) {
  Term t;
  t.op_ = Op::v;
  t.args_ = {std::move(x), std::move(y), std::move(z)};
  return t;
}

Term Term::substitute(int index, const Term& by) const {
  if (op_ == Op::var) return var_ == index ? by : *this;
  Term t = *this;
  for (auto& a : t.args_) a = a.substitute(index, by);
  return t;
}

Elem Term::evaluate(const Tribracket& t, std::span<const Elem> values) const {
  switch (op_) {
    case Op::var:
      if (var_ < 0 || static_cast<std::size_t>(var_) >= values.size())
        throw Error(Errc::invalid_argument, "term variable without a value");
      return values[var_];
    case Op::h:
      return t.h(args_[0].evaluate(t, values), args_[1].evaluate(t, values), args_[2].evaluate(t, values));
    case Op::v:
      return t.v(args_[0].evaluate(t, values), args_[1].evaluate(t, values), args_[2].evaluate(t, values));
  }
  return 0;
}

std::string Term::to_string() const {
  if (op_ == Op::var) return "x" + std::to_string(var_);
  std::string s = op_ == Op::h ? "[" : "<";
  for (int i = 0; i < 3; ++i) s += (i ? "," : "") + args_[i].to_string();
  return s + (op_ == Op::h ? "]" : ">");
}

Term phi_substitution_term(int i) {
  if (i < 0) throw Error(Errc::invalid_argument, "phi term index must be nonnegative");
  std::vector<Term> z{Term::variable(0)};
  if (i >= 1) z.push_back(Term::variable(1));
  for (int k = 2; k <= i; ++k) z.push_back(Term::h(z[k - 2], z[k - 1], z[k - 1].substitute(k - 1, Term::variable(k))));
  return z[i];
}

Term psi_substitution_term(int i) {
  if (i < 1) throw Error(Errc::invalid_argument, "psi term index must be positive");
  Term w = Term::variable(1);
  for (int k = 2; k <= i; ++k)
    w = w.substitute(k - 1, Term::v(Term::variable(k - 2), Term::variable(k - 1), Term::variable(k)));
  return w;
}

}  // namespace tribrac
