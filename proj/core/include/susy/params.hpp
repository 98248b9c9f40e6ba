#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "susy/errors.hpp"

namespace susy {

using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double (every double is a dyadic rational).
Rational to_rational(double value);

/// Parses "7", "-0.125", "1/2" or "2.5e-1" exactly. Throws
/// std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

/// "num/den" rendering, or just "num" when the denominator is one.
std::string to_string(const Rational& value);

/// Model inputs (B, p) with A = 3(B + p) derived. Construction enforces
/// 0 < p < B, so every instance is admissible.
class ModelParams {
 public:
  static ModelParams make(const Rational& B, const Rational& p);

  const Rational& B() const noexcept { return B_; }
  const Rational& p() const noexcept { return p_; }
  Rational A() const { return 3 * (B_ + p_); }

  double B_value() const noexcept { return B_value_; }
  double p_value() const noexcept { return p_value_; }
  double A_value() const noexcept { return A_value_; }

  /// Large-x limit of the potential, (2B + 3p)^2.
  Rational asymptote() const;

 private:
  ModelParams(Rational B, Rational p);

  Rational B_;
  Rational p_;
  double B_value_;
  double p_value_;
  double A_value_;
};

ModelParams make_params(const Rational& B, const Rational& p);
ModelParams make_params(double B, double p);

/// The k-th rung (A_k, B_k) = (A_0 - 3kp, B_0 + kp) of the parameter ladder.
struct LadderParams {
  unsigned k = 0;
  Rational A;
  Rational B;

  Rational gap() const { return A - B; }
};

LadderParams ladder(const ModelParams& params, unsigned k);

/// One step of the parameter map (A, B) -> (A - 3p, B + p).
LadderParams next_rung(const LadderParams& rung, const Rational& p);

/// Representative h(a) = -(A - B)^2; only differences of h carry meaning.
Rational ladder_offset(const LadderParams& rung);

/// C(a_k) = (A_k - B_k)^2 - (A_{k+1} - B_{k+1})^2.
Rational shift_constant(const ModelParams& params, unsigned k);

}  // namespace susy
