#include "cliquedim/rational.hpp"

#include "cliquedim/error.hpp"

namespace cliquedim {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_params: return "InvalidParams";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::resource_limit: return "ResourceLimit";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::not_independent: return "NotIndependent";
    case ErrorKind::degenerate_clique: return "DegenerateClique";
    case ErrorKind::not_clique: return "NotClique";
    case ErrorKind::not_shattered: return "NotShattered";
    case ErrorKind::not_complete: return "NotComplete";
    case ErrorKind::infeasible_model: return "InfeasibleModel";
    case ErrorKind::zero_coloring: return "ZeroColoring";
    case ErrorKind::zero_clique: return "ZeroClique";
    case ErrorKind::no_separation: return "NoSeparation";
    case ErrorKind::length_mismatch: return "LengthMismatch";
    case ErrorKind::even_length: return "EvenLength";
    case ErrorKind::not_realizable_distribution: return "NotRealizableDistribution";
    case ErrorKind::empty_class: return "EmptyClass";
  }
  return "Error";
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s), 1);
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::parse_error, "zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::parse_error, "not a rational: '" + s + "'");
  }
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  r.canonicalize();
  return r;
}

Rational pow2(long exponent) {
  BigInt p = pow(BigInt(2), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(p);
  return Rational(BigInt(1), p);
}

double to_double(const Rational& q) { return q.get_d(); }

Rational round_down_dyadic(const Rational& q, unsigned bits) {
  BigInt scaled = q.get_num() << bits;
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Rational r(f, BigInt(1) << bits);
  r.canonicalize();
  return r;
}

Rational round_up_dyadic(const Rational& q, unsigned bits) {
  BigInt scaled = q.get_num() << bits;
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Rational r(c, BigInt(1) << bits);
  r.canonicalize();
  return r;
}

}  // namespace cliquedim
