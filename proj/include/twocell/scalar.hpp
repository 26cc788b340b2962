#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>

namespace twocell {

/// Error with a machine-readable code ("MixedFields", "ParseError", ...).
struct Error : std::runtime_error {
  std::string code;
  Error(std::string code_, const std::string& what_)
      : std::runtime_error(code_ + ": " + what_), code(std::move(code_)) {}
};

using Rat = mpq_class;

std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

enum class FieldKind { Rationals, Quadratic };
enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// Q, or a quadratic extension Q(T) with T^2 = p*T + q.  When the
/// discriminant p^2 + 4q is positive, T denotes the larger real root
/// (p + sqrt(p^2+4q))/2 and elements can be compared with 0.
/// A square discriminant is rejected: the quotient ring would not be a field.
class FieldSpec {
 public:
  static std::shared_ptr<const FieldSpec> rationals();
  static std::shared_ptr<const FieldSpec> quadratic(const Rat& p, const Rat& q);
  /// "Q" or "quad <p> <q>".
  static std::shared_ptr<const FieldSpec> parse(const std::string& text);

  FieldKind kind() const { return kind_; }
  const Rat& p() const { return p_; }
  const Rat& q() const { return q_; }
  bool real_embedding() const { return real_; }
  bool same(const FieldSpec& other) const;
  std::string str() const;

 private:
  FieldSpec(FieldKind kind, Rat p, Rat q, bool real)
      : kind_(kind), p_(std::move(p)), q_(std::move(q)), real_(real) {}
  FieldKind kind_;
  Rat p_, q_;
  bool real_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Exact element a + b*T of a FieldSpec.  Plain rationals live in the
/// rationals field and embed silently into any quadratic extension when
/// combined with its elements; two distinct quadratic fields do not mix.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), spec_(FieldSpec::rationals()) {}
  Scalar(long v) : a_(v), b_(0), spec_(FieldSpec::rationals()) {}
  Scalar(Rat v) : a_(std::move(v)), b_(0), spec_(FieldSpec::rationals()) {}
  Scalar(Rat a, Rat b, FieldPtr spec);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const FieldPtr& spec() const { return spec_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Sign under the designated real embedding; throws NoRealEmbedding.
  Sign sign() const;
  bool is_positive() const { return sign() == Sign::Positive; }
  bool is_negative() const { return sign() == Sign::Negative; }

  double approx() const;
  std::string str() const;

 private:
  Rat a_, b_;
  FieldPtr spec_;
};

/// Parses the textual syntax `a`, `a/b`, `a+b*T`, `a/b-c/d*T`, `T`, `-T`
/// (whitespace insignificant).  A term containing T requires a quadratic
/// `spec`; the result carries `spec` whenever it is quadratic.
Scalar parse_scalar(const std::string& text, const FieldPtr& spec);

}  // namespace twocell
