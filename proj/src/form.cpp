#include "sas/form.hpp"

#include <cmath>
#include <sstream>

#include "sas/error.hpp"

namespace sas {

std::vector<Exponent> monomial_basis(int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  out.reserve(static_cast<std::size_t>((d + 1) * (d + 2) / 2));
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

Form Form::from_polynomial(const Polynomial& p) {
  Form f;
  bool first = true;
  for (const auto& [e, c] : p) {
    if (c == 0) continue;
    if (first) {
      f.degree_ = total_degree(e);
      first = false;
    } else if (total_degree(e) != f.degree_) {
      throw Error(ErrorCode::NotHomogeneous,
                  "polynomial " + polynomial_to_string(p) + " mixes degrees " + std::to_string(f.degree_) +
                      " and " + std::to_string(total_degree(e)));
    }
    f.terms_.emplace(e, c);
  }
  return f;
}

Form Form::monomial(const Exponent& e, const Rational& coefficient) {
  Form f;
  f.degree_ = total_degree(e);
  if (coefficient != 0) f.terms_.emplace(e, coefficient);
  return f;
}

Form Form::constant(const Rational& c) { return monomial({0, 0, 0}, c); }

Form Form::variable(int index) {
  Exponent e{0, 0, 0};
  e.at(static_cast<std::size_t>(index)) = 1;
  return monomial(e);
}

Rational Form::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> Form::dense_coefficients() const {
  std::vector<Rational> out(static_cast<std::size_t>(forms_dim(degree_)));
  for (const auto& [e, c] : terms_) out[monomial_index(e)] = c;
  return out;
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Form& Form::operator+=(const Form& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (rhs.degree_ != degree_)
    throw Error(ErrorCode::NotHomogeneous, "adding forms of degrees " + std::to_string(degree_) + " and " +
                                               std::to_string(rhs.degree_));
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Form& Form::operator-=(const Form& rhs) { return *this += -rhs; }

Form& Form::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Form operator*(const Form& lhs, const Form& rhs) {
  Form out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.degree_ = lhs.degree_ + rhs.degree_;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Form pow(const Form& base, unsigned k) {
  Form result = Form::constant(1);
  Form square = base;
  while (k > 0) {
    if (k & 1U) result = result * square;
    k >>= 1U;
    if (k > 0) square = square * square;
  }
  return result;
}

namespace {

template <typename T>
T power(const T& base, int k) {
  T out(1);
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

}  // namespace

Rational Form::evaluate(const Point3& p) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * power(p[0], e[0]) * power(p[1], e[1]) * power(p[2], e[2]);
  return sum;
}

std::complex<double> Form::evaluate(const ComplexPoint3& p) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_)
    sum += c.get_d() * power(p[0], e[0]) * power(p[1], e[1]) * power(p[2], e[2]);
  return sum;
}

Form Form::partial(int var) const {
  Form out;
  out.degree_ = degree_ > 0 ? degree_ - 1 : 0;
  auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent d = e;
    d[v] -= 1;
    out.terms_.emplace(d, c * e[v]);
  }
  return out;
}

std::array<Rational, 3> Form::gradient_at(const Point3& p) const {
  return {partial(0).evaluate(p), partial(1).evaluate(p), partial(2).evaluate(p)};
}

Form Form::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.begin()->second < 0) scale = -scale;
  Form out = *this;
  out *= scale;
  return out;
}

bool Form::proportional_to(const Form& other) const {
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  return primitive() == other.primitive();
}

double Form::coefficient_l1() const {
  double s = 0;
  for (const auto& [e, c] : terms_) s += std::abs(c.get_d());
  return s;
}

std::string polynomial_to_string(const Polynomial& p) {
  if (p.empty()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = total_degree(e) == 0;
    if (mag != 1 || constant) {
      os << mag.get_str();
      if (!constant) os << "*";
    }
    bool first_var = true;
    for (int v = 0; v < 3; ++v) {
      if (e[static_cast<std::size_t>(v)] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << names[v];
      if (e[static_cast<std::size_t>(v)] > 1) os << "^" << e[static_cast<std::size_t>(v)];
    }
  }
  return os.str();
}

std::string Form::to_string() const { return polynomial_to_string(terms_); }

Polynomial to_polynomial(const Form& f) { return f.terms(); }

Polynomial dehomogenize(const Form& f) {
  Polynomial out;
  for (const auto& [e, c] : f.terms()) {
    Exponent d{e[0], e[1], 0};
    auto [it, inserted] = out.try_emplace(d, c);
    if (!inserted) it->second += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Form homogenize(const Polynomial& p) {
  int top = 0;
  for (const auto& [e, c] : p) {
    if (e[2] != 0) throw Error(ErrorCode::SyntaxError, "affine polynomial must not involve the homogenizing variable");
    top = std::max(top, total_degree(e));
  }
  Polynomial h;
  for (const auto& [e, c] : p) h.emplace(Exponent{e[0], e[1], top - total_degree(e)}, c);
  return Form::from_polynomial(h);
}

DivisionResult divide(const Form& dividend, const Form& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero form");
  const auto& [lead_e, lead_c] = *divisor.terms().begin();
  Polynomial rest = dividend.terms();
  Polynomial quotient, remainder;
  while (!rest.empty()) {
    auto top = rest.begin();
    Exponent e = top->first;
    Rational c = top->second;
    if (e[0] >= lead_e[0] && e[1] >= lead_e[1] && e[2] >= lead_e[2]) {
      Exponent q{e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]};
      Rational qc = c / lead_c;
      quotient.emplace(q, qc);
      for (const auto& [de, dc] : divisor.terms()) {
        Exponent t{de[0] + q[0], de[1] + q[1], de[2] + q[2]};
        auto [it, inserted] = rest.try_emplace(t, -qc * dc);
        if (!inserted) {
          it->second -= qc * dc;
          if (it->second == 0) rest.erase(it);
        }
      }
    } else {
      remainder.emplace(e, c);
      rest.erase(top);
    }
  }
  return {Form::from_polynomial(quotient), Form::from_polynomial(remainder)};
}

std::vector<std::pair<Exponent, Integer>> integer_terms(const Form& f) {
  std::vector<std::pair<Exponent, Integer>> out;
  Form p = f.primitive();
  for (const auto& [e, c] : p.terms()) out.emplace_back(e, c.get_num());
  return out;
}

}  // namespace sas
