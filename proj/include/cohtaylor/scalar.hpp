#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

#include "cohtaylor/errors.hpp"

namespace cohtaylor {

// The three coefficient semirings. All arithmetic is exact:
//   Bool    = ({0,1}, or, and)
//   NatInf  = (N u {inf}, +, *) with inf absorbing for + and for * against nonzero
//   RatPos  = (Q>=0 u {inf}, +, *)
// In every semiring, inf * 0 = 0 * inf = 0.
enum class Semiring { Bool, NatInf, RatPos };

inline const char* semiring_name(Semiring s) {
  switch (s) {
    case Semiring::Bool: return "bool";
    case Semiring::NatInf: return "nat-inf";
    case Semiring::RatPos: return "rat-pos";
  }
  return "?";
}

// Invariants: Bool => !inf, q in {0,1}; NatInf => q integral >= 0; RatPos => q >= 0.
// When inf is set, q is ignored (kept at 0 so equality is plain field comparison).
struct Scalar {
  Semiring sr = Semiring::Bool;
  bool inf = false;
  mpq_class q = 0;

  bool operator==(const Scalar& o) const { return sr == o.sr && inf == o.inf && q == o.q; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

inline Scalar scalar_zero(Semiring sr) { return Scalar{sr, false, 0}; }
inline Scalar scalar_one(Semiring sr) { return Scalar{sr, false, 1}; }
inline Scalar scalar_inf(Semiring sr) {
  if (sr == Semiring::Bool) fail(Errc::Type, "bool semiring has no inf");
  return Scalar{sr, true, 0};
}

inline bool scalar_is_zero(const Scalar& a) { return !a.inf && a.q == 0; }

inline void scalar_check_same(const Scalar& a, const Scalar& b) {
  if (a.sr != b.sr) fail(Errc::Type, "semiring mismatch in scalar arithmetic");
}

inline Scalar scalar_from_nat(Semiring sr, const mpz_class& n) {
  if (sgn(n) < 0) fail(Errc::Internal, "negative natural");
  switch (sr) {
    case Semiring::Bool: return Scalar{sr, false, n > 0 ? 1 : 0};
    case Semiring::NatInf:
    case Semiring::RatPos: return Scalar{sr, false, mpq_class(n)};
  }
  fail(Errc::Internal, "bad semiring");
}

inline Scalar scalar_from_nat(Semiring sr, unsigned long n) { return scalar_from_nat(sr, mpz_class(n)); }

// Embeds an exact nonnegative rational computed with big-number arithmetic.
// Coefficients that the theory asserts to be natural numbers go through
// scalar_embed_integer, which rejects non-integral values loudly.
inline Scalar scalar_from_ratio(Semiring sr, const mpq_class& v) {
  if (sgn(v) < 0) fail(Errc::Internal, "negative coefficient");
  switch (sr) {
    case Semiring::Bool: return Scalar{sr, false, v > 0 ? 1 : 0};
    case Semiring::NatInf:
      if (v.get_den() != 1) fail(Errc::NonIntegralCoefficient, "non-integral value in nat-inf: " + v.get_str());
      return Scalar{sr, false, v};
    case Semiring::RatPos: return Scalar{sr, false, v};
  }
  fail(Errc::Internal, "bad semiring");
}

inline Scalar scalar_embed_integer(Semiring sr, const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  if (c.get_den() != 1)
    fail(Errc::NonIntegralCoefficient, "coefficient expected to be a natural number: " + c.get_str());
  return scalar_from_ratio(sr, c);
}

inline Scalar scalar_add(const Scalar& a, const Scalar& b) {
  scalar_check_same(a, b);
  switch (a.sr) {
    case Semiring::Bool: return Scalar{a.sr, false, (a.q != 0 || b.q != 0) ? 1 : 0};
    case Semiring::NatInf:
    case Semiring::RatPos:
      if (a.inf || b.inf) return scalar_inf(a.sr);
      return Scalar{a.sr, false, a.q + b.q};
  }
  fail(Errc::Internal, "bad semiring");
}

inline Scalar scalar_mul(const Scalar& a, const Scalar& b) {
  scalar_check_same(a, b);
  switch (a.sr) {
    case Semiring::Bool: return Scalar{a.sr, false, (a.q != 0 && b.q != 0) ? 1 : 0};
    case Semiring::NatInf:
    case Semiring::RatPos:
      if (scalar_is_zero(a) || scalar_is_zero(b)) return scalar_zero(a.sr);
      if (a.inf || b.inf) return scalar_inf(a.sr);
      return Scalar{a.sr, false, a.q * b.q};
  }
  fail(Errc::Internal, "bad semiring");
}

inline Scalar scalar_pow(const Scalar& a, unsigned long n) {
  Scalar r = scalar_one(a.sr);
  for (unsigned long i = 0; i < n; ++i) r = scalar_mul(r, a);
  return r;
}

inline Scalar scalar_sum(Semiring sr, const std::vector<Scalar>& xs) {
  Scalar r = scalar_zero(sr);
  for (const auto& x : xs) r = scalar_add(r, x);
  return r;
}

// Multiplicative inverse where it exists (used by the analytic layer for 1/m!).
inline Scalar scalar_inv(const Scalar& a) {
  if (scalar_is_zero(a)) fail(Errc::Type, "inverse of zero");
  switch (a.sr) {
    case Semiring::Bool: return scalar_one(a.sr);
    case Semiring::NatInf:
      if (a.inf || a.q != 1) fail(Errc::Type, "nat-inf scalar has no inverse: only 1 is invertible");
      return scalar_one(a.sr);
    case Semiring::RatPos:
      if (a.inf) fail(Errc::Type, "inf has no inverse");
      return Scalar{a.sr, false, 1 / a.q};
  }
  fail(Errc::Internal, "bad semiring");
}

// 1/n! where the semiring admits it: exact in rat-pos, 1 in bool (where n!
// embeds to 1), and defined in nat-inf only for n <= 1.
inline Scalar scalar_inv_factorial(Semiring sr, unsigned long n) {
  mpz_class f = 1;
  for (unsigned long i = 2; i <= n; ++i) f *= i;
  return scalar_inv(scalar_from_nat(sr, f));
}

inline std::string scalar_to_string(const Scalar& a) {
  if (a.inf) return "inf";
  if (a.sr == Semiring::Bool) return a.q == 0 ? "0" : "1";
  mpq_class c = a.q;
  c.canonicalize();
  return c.get_str();
}

inline Scalar scalar_parse(Semiring sr, const std::string& text) {
  if (text == "inf") {
    if (sr == Semiring::Bool) fail(Errc::Parse, "inf is not a bool scalar");
    return scalar_inf(sr);
  }
  if (text.empty()) fail(Errc::Parse, "empty scalar");
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/'))
      fail(Errc::Parse, "bad scalar literal: " + text);
  mpq_class v;
  if (v.set_str(text, 10) != 0) fail(Errc::Parse, "bad scalar literal: " + text);
  if (v.get_den() == 0) fail(Errc::Parse, "zero denominator: " + text);
  v.canonicalize();
  if (sgn(v) < 0) fail(Errc::Parse, "negative scalar: " + text);
  switch (sr) {
    case Semiring::Bool:
      if (v != 0 && v != 1) fail(Errc::Parse, "bool scalar must be 0 or 1: " + text);
      return Scalar{sr, false, v};
    case Semiring::NatInf:
      if (v.get_den() != 1) fail(Errc::Parse, "nat-inf scalar must be integral: " + text);
      return Scalar{sr, false, v};
    case Semiring::RatPos: return Scalar{sr, false, v};
  }
  fail(Errc::Internal, "bad semiring");
}

inline Semiring semiring_parse(const std::string& name) {
  if (name == "bool") return Semiring::Bool;
  if (name == "nat-inf" || name == "natinf") return Semiring::NatInf;
  if (name == "rat-pos" || name == "ratpos") return Semiring::RatPos;
  fail(Errc::Parse, "unknown semiring: " + name);
}

}  // namespace cohtaylor
