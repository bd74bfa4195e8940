#include "piercing/rational.hpp"

#include <cctype>

#include "piercing/error.hpp"

namespace piercing {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty() || !all_digits(digits)) {
    throw Error(ErrorCode::Parse, "not a rational literal: '" + std::string(whole) + "'");
  }
  mpz_class out(std::string(digits), 10);
  return negative ? mpz_class(-out) : out;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (den_text.empty() || !all_digits(den_text)) {
      throw Error(ErrorCode::Parse, "bad denominator in '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    Rat out(num, den);
    out.canonicalize();
    return out;
  }

  if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot_pos);
    std::string_view frac_part = text.substr(dot_pos + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part) || !all_digits(frac_part)) {
      throw Error(ErrorCode::Parse, "not a decimal literal: '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rat out(negative ? mpz_class(-num) : num, den);
    out.canonicalize();
    return out;
  }

  return Rat(parse_integer(text, text));
}

std::string to_string(const Rat& value) { return value.get_str(10); }

int sign(const Rat& value) { return sgn(value); }

RatVec zeros(std::size_t n) { return RatVec(n, Rat(0)); }

Rat dot(const RatVec& a, const RatVec& b) {
  Rat acc = 0;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) acc += a[k] * b[k];
  return acc;
}

Rat lerp_at(const Rat& x0, const Rat& z0, const Rat& x1, const Rat& z1, const Rat& x) {
  Rat t = (x - x0) / (x1 - x0);
  return z0 + t * (z1 - z0);
}

}  // namespace piercing
