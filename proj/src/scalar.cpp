#include "twocell/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace twocell {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw Error("ParseError", "empty rational literal");
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool digits = false, slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw Error("ParseError", "bad rational literal '" + s + "'");
    }
  }
  if (!digits) throw Error("ParseError", "bad rational literal '" + s + "'");
  Rat r;
  if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw Error("ParseError", "bad rational literal '" + s + "'");
  if (r.get_den() == 0) throw Error("ParseError", "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

namespace {

bool is_rational_square(const Rat& r, Rat* root) {
  if (r < 0) return false;
  mpz_class num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Rat(rn, rd);
  }
  return true;
}

}  // namespace

std::shared_ptr<const FieldSpec> FieldSpec::rationals() {
  static const std::shared_ptr<const FieldSpec> q(
      new FieldSpec(FieldKind::Rationals, 0, 0, true));
  return q;
}

std::shared_ptr<const FieldSpec> FieldSpec::quadratic(const Rat& p, const Rat& q) {
  Rat disc = p * p + 4 * q;
  if (disc == 0 || is_rational_square(disc, nullptr))
    throw Error("InvalidField",
                "T^2 = " + rat_str(p) + "*T + " + rat_str(q) +
                    " has rational roots; only genuine quadratic extensions are supported");
  return std::shared_ptr<const FieldSpec>(
      new FieldSpec(FieldKind::Quadratic, p, q, disc > 0));
}

std::shared_ptr<const FieldSpec> FieldSpec::parse(const std::string& text) {
  std::istringstream is(text);
  std::string head;
  is >> head;
  if (head == "Q") {
    std::string rest;
    if (is >> rest) throw Error("ParseError", "trailing tokens after field 'Q'");
    return rationals();
  }
  if (head == "quad") {
    std::string ps, qs;
    if (!(is >> ps >> qs)) throw Error("ParseError", "expected 'quad <p> <q>'");
    std::string rest;
    if (is >> rest) throw Error("ParseError", "trailing tokens in field spec");
    return quadratic(rat_parse(ps), rat_parse(qs));
  }
  throw Error("ParseError", "unknown field '" + text + "' (expected 'Q' or 'quad p q')");
}

bool FieldSpec::same(const FieldSpec& o) const {
  if (kind_ != o.kind_) return false;
  return kind_ == FieldKind::Rationals || (p_ == o.p_ && q_ == o.q_);
}

std::string FieldSpec::str() const {
  if (kind_ == FieldKind::Rationals) return "Q";
  return "quad " + rat_str(p_) + " " + rat_str(q_);
}

Scalar::Scalar(Rat a, Rat b, FieldPtr spec)
    : a_(std::move(a)), b_(std::move(b)), spec_(std::move(spec)) {
  if (!spec_) throw Error("InvalidField", "null field spec");
  if (spec_->kind() == FieldKind::Rationals && b_ != 0)
    throw Error("MixedFields", "nonzero T-coefficient in the rationals field");
}

namespace {

// Unifies the fields of two scalars; Q embeds into any quadratic field.
FieldPtr unify(const Scalar& x, const Scalar& y) {
  const FieldPtr& f = x.spec();
  const FieldPtr& g = y.spec();
  if (f->same(*g)) return f;
  if (f->kind() == FieldKind::Rationals) return g;
  if (g->kind() == FieldKind::Rationals) return f;
  throw Error("MixedFields", "cannot combine " + f->str() + " with " + g->str());
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  FieldPtr f = unify(*this, o);
  return Scalar(a_ + o.a_, b_ + o.b_, f);
}

Scalar Scalar::operator-(const Scalar& o) const {
  FieldPtr f = unify(*this, o);
  return Scalar(a_ - o.a_, b_ - o.b_, f);
}

Scalar Scalar::operator*(const Scalar& o) const {
  FieldPtr f = unify(*this, o);
  if (f->kind() == FieldKind::Rationals) return Scalar(a_ * o.a_);
  // (a1 + b1 T)(a2 + b2 T) with T^2 = pT + q
  Rat cross = b_ * o.b_;
  return Scalar(a_ * o.a_ + cross * f->q(),
                a_ * o.b_ + b_ * o.a_ + cross * f->p(), f);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error("DivisionByZero", "scalar division by zero");
  FieldPtr f = unify(*this, o);
  if (f->kind() == FieldKind::Rationals) return Scalar(a_ / o.a_);
  // conjugate of a + bT is (a + bp) - bT; norm = a^2 + abp - b^2 q
  Rat norm = o.a_ * o.a_ + o.a_ * o.b_ * f->p() - o.b_ * o.b_ * f->q();
  Scalar conj(o.a_ + o.b_ * f->p(), -o.b_, f);
  Scalar num = *this * conj;
  return Scalar(num.a_ / norm, num.b_ / norm, f);
}

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, spec_); }

bool Scalar::operator==(const Scalar& o) const {
  if (a_ != o.a_ || b_ != o.b_) return false;
  if (b_ != 0 && !spec_->same(*o.spec_)) return false;
  return true;
}

Sign Scalar::sign() const {
  if (!spec_->real_embedding())
    throw Error("NoRealEmbedding", "field " + spec_->str() + " has no designated real embedding");
  auto rational_sign = [](const Rat& r) {
    return r > 0 ? Sign::Positive : (r < 0 ? Sign::Negative : Sign::Zero);
  };
  if (b_ == 0) return rational_sign(a_);
  // a + bT = (u + v sqrt(D))/2 with u = 2a + bp, v = b, D = p^2 + 4q > 0
  Rat u = 2 * a_ + b_ * spec_->p();
  Rat v = b_;
  Rat d = spec_->p() * spec_->p() + 4 * spec_->q();
  if (v > 0) {
    if (u >= 0) return Sign::Positive;
    return v * v * d > u * u ? Sign::Positive : Sign::Negative;
  }
  if (u <= 0) return Sign::Negative;
  return u * u > v * v * d ? Sign::Positive : Sign::Negative;
}

double Scalar::approx() const {
  double av = a_.get_d();
  if (b_ == 0) return av;
  double d = Rat(spec_->p() * spec_->p() + 4 * spec_->q()).get_d();
  double theta = (spec_->p().get_d() + std::sqrt(d)) / 2.0;
  return av + b_.get_d() * theta;
}

std::string Scalar::str() const {
  if (b_ == 0) return rat_str(a_);
  std::string t = rat_str(b_) + "*T";
  if (a_ == 0) return t;
  return b_ > 0 ? rat_str(a_) + "+" + t : rat_str(a_) + t;
}

namespace {

struct ScalarLexer {
  std::string s;
  size_t i = 0;
  explicit ScalarLexer(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  // [sign] digits [/ digits]
  Rat number() {
    size_t start = i;
    if (peek() == '+' || peek() == '-') ++i;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (!done() && s[i] == '/') {
      ++i;
      while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    return rat_parse(s.substr(start, i - start));
  }
};

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldPtr& spec) {
  ScalarLexer lx(text);
  if (lx.done()) throw Error("ParseError", "empty scalar");
  Rat a = 0, b = 0;
  bool has_t = false;

  auto term = [&](bool first) {
    Rat sgn = 1;
    if (lx.peek() == '+' || lx.peek() == '-') {
      if (!first && lx.i > 0) {
        // operator between terms
      }
      sgn = lx.peek() == '-' ? -1 : 1;
      ++lx.i;
    } else if (!first) {
      throw Error("ParseError", "expected '+' or '-' in scalar '" + text + "'");
    }
    if (lx.peek() == 'T') {
      ++lx.i;
      if (has_t) throw Error("ParseError", "repeated T term in '" + text + "'");
      has_t = true;
      b += sgn;
      return;
    }
    Rat v = sgn * lx.number();
    if (lx.peek() == '*') {
      ++lx.i;
      if (lx.peek() != 'T') throw Error("ParseError", "expected T after '*' in '" + text + "'");
      ++lx.i;
      if (has_t) throw Error("ParseError", "repeated T term in '" + text + "'");
      has_t = true;
      b += v;
    } else {
      a += v;
    }
  };

  term(true);
  if (!lx.done()) term(false);
  if (!lx.done()) throw Error("ParseError", "trailing input in scalar '" + text + "'");

  if (has_t) {
    if (spec->kind() != FieldKind::Quadratic)
      throw Error("ParseError", "scalar '" + text + "' uses T but the field is Q");
    return Scalar(a, b, spec);
  }
  return Scalar(a);
}

}  // namespace twocell
