#include "etacrit/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>

namespace etacrit {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

namespace {

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed integer: " + std::string(s));
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("malformed integer: " + std::string(s));
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits, 10);
}

Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string exp_text(s.substr(e + 1));
    if (exp_text.empty()) throw std::invalid_argument("malformed number: " + std::string(s));
    std::size_t used = 0;
    exponent = std::stol(exp_text, &used);
    if (used != exp_text.size()) throw std::invalid_argument("malformed number: " + std::string(s));
    if (exponent > 4000 || exponent < -4000) throw std::out_of_range("exponent too large");
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      throw std::invalid_argument("malformed number: " + std::string(s));
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed number: " + std::string(s));

  BigInt num(digits, 10);
  if (negative) num = -num;
  const long scale = exponent - fraction_digits;
  BigInt pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  return scale < 0 ? make_rational(num, pow10) : Rational(num * pow10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(parse_integer(text));
}

BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t floor_int64(const Rational& q) {
  const BigInt f = floor_of(q);
  if (!f.fits_slong_p()) throw std::out_of_range("rational floor exceeds 64-bit range");
  return f.get_si();
}

std::string to_decimal(const Rational& q, int significant_digits) {
  mpf_class f(0, 256);
  f = q;
  char* buffer = nullptr;
  gmp_asprintf(&buffer, "%.*Fg", significant_digits, f.get_mpf_t());
  std::string out(buffer);
  void (*free_fn)(void*, std::size_t);
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(buffer, out.size() + 1);
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational sum_balanced(std::span<const Rational> terms) {
  if (terms.empty()) return Rational(0);
  if (terms.size() == 1) return terms[0];
  if (terms.size() <= 8) {
    Rational acc = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) acc += terms[i];
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return sum_balanced(terms.first(half)) + sum_balanced(terms.subspan(half));
}

}  // namespace etacrit
