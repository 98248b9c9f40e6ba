#include "susy/params.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace susy {

namespace {

using boost::multiprecision::cpp_int;

Rational pow10(long exponent) {
  cpp_int scale = 1;
  for (long i = 0; i < std::labs(exponent); ++i) scale *= 10;
  return exponent >= 0 ? Rational(scale) : Rational(cpp_int(1), scale);
}

// Decimal literal with optional sign, fraction and exponent.
Rational parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  cpp_int digits = 0;
  long fraction_digits = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      any_digit = true;
      if (seen_point) ++fraction_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("not a number: " + std::string(text));
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    const std::string rest(text.substr(i));
    std::size_t used = 0;
    try {
      exponent = std::stol(rest, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent: " + std::string(text));
    }
    if (std::labs(exponent) > 4000) throw std::invalid_argument("exponent out of range: " + std::string(text));
    i += used;
  }
  if (i != text.size()) throw std::invalid_argument("trailing characters: " + std::string(text));
  Rational value = Rational(digits) * pow10(exponent - fraction_digits);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational to_rational(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value has no rational form");
  if (value == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an exact integer for IEEE doubles.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result{cpp_int(scaled)};
  const cpp_int power = cpp_int(1) << std::abs(exponent);
  if (exponent >= 0) {
    result *= power;
  } else {
    result /= power;
  }
  return result;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return num / den;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ModelParams::ModelParams(Rational B, Rational p)
    : B_(std::move(B)),
      p_(std::move(p)),
      B_value_(to_double(B_)),
      p_value_(to_double(p_)),
      A_value_(to_double(A())) {}

ModelParams ModelParams::make(const Rational& B, const Rational& p) {
  using Kind = ParameterError::Kind;
  if (B <= 0) throw ParameterError(Kind::NonPositiveB, "B must be positive (requires 0 < p < B), got B = " + to_string(B));
  if (p <= 0) throw ParameterError(Kind::NonPositiveP, "p must be positive (requires 0 < p < B), got p = " + to_string(p));
  if (p >= B) {
    throw ParameterError(Kind::PNotLessThanB,
                         "p must be strictly less than B (requires 0 < p < B), got B = " + to_string(B) +
                             ", p = " + to_string(p));
  }
  return ModelParams(B, p);
}

Rational ModelParams::asymptote() const {
  const Rational gap = 2 * B_ + 3 * p_;
  return gap * gap;
}

ModelParams make_params(const Rational& B, const Rational& p) { return ModelParams::make(B, p); }

ModelParams make_params(double B, double p) {
  if (!std::isfinite(B) || !std::isfinite(p)) {
    throw ParameterError(ParameterError::Kind::NonFinite, "B and p must be finite");
  }
  return ModelParams::make(to_rational(B), to_rational(p));
}

LadderParams ladder(const ModelParams& params, unsigned k) {
  return LadderParams{k, params.A() - 3 * k * params.p(), params.B() + k * params.p()};
}

LadderParams next_rung(const LadderParams& rung, const Rational& p) {
  return LadderParams{rung.k + 1, rung.A - 3 * p, rung.B + p};
}

Rational ladder_offset(const LadderParams& rung) {
  const Rational gap = rung.gap();
  return -(gap * gap);
}

Rational shift_constant(const ModelParams& params, unsigned k) {
  const Rational here = ladder(params, k).gap();
  const Rational next = ladder(params, k + 1).gap();
  return here * here - next * next;
}

}  // namespace susy
