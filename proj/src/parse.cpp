#include "sas/parse.hpp"

#include <cctype>

#include "sas/error.hpp"

namespace sas {

namespace {

constexpr int kMaxExponent = 4096;

class Parser {
public:
  Parser(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

  Polynomial run() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static void add_into(Polynomial& acc, const Polynomial& rhs, int sign) {
    for (const auto& [e, c] : rhs) {
      auto [it, inserted] = acc.try_emplace(e, sign > 0 ? c : Rational(-c));
      if (!inserted) {
        if (sign > 0) it->second += c;
        else it->second -= c;
        if (it->second == 0) acc.erase(it);
      }
    }
  }

  static Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        auto [it, inserted] = out.try_emplace(e, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) add_into(acc, term(), +1);
      else if (accept('-')) add_into(acc, term(), -1);
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = multiply(acc, unary());
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) {
      Polynomial p = unary();
      for (auto& [e, c] : p) c = -c;
      return p;
    }
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::string digits = read_digits();
    if (digits.empty()) fail("expected a nonnegative integer exponent");
    if (digits.size() > 5 || std::stoi(digits) > kMaxExponent) fail("exponent too large");
    int k = std::stoi(digits);
    Polynomial out{{Exponent{0, 0, 0}, Rational(1)}};
    for (int i = 0; i < k; ++i) out = multiply(out, base);
    return out;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      Integer den = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        std::string d = read_digits();
        if (d.empty()) fail("expected a denominator");
        den = Integer(d);
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      Polynomial p;
      if (q != 0) p.emplace(Exponent{0, 0, 0}, q);
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t v = 0; v < 3; ++v) {
        if (names_[v] == name) {
          Exponent e{0, 0, 0};
          e[v] = 1;
          return Polynomial{{e, Rational(1)}};
        }
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableNames& names) {
  return Parser(text, names).run();
}

Form parse_form(std::string_view text, const VariableNames& names) {
  return Form::from_polynomial(parse_polynomial(text, names));
}

Form parse_affine_and_homogenize(std::string_view text, const std::array<std::string, 2>& affine) {
  // The placeholder cannot be produced by the tokenizer, so the third slot
  // stays empty until homogenization.
  VariableNames names{affine[0], affine[1], "\x01"};
  return homogenize(parse_polynomial(text, names));
}

}  // namespace sas
