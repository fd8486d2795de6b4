#include "cliquedim/numeric_checks.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "cliquedim/error.hpp"

namespace cliquedim {

namespace {

Rational dyadic_unit(unsigned bits) { return pow2(-static_cast<long>(bits)); }

// Partial sum of atanh(z) = sum z^(2j+1)/(2j+1) for 0 <= z < 1, with a bound
// on the remainder (geometric majorant).
Interval atanh_bounds(const Rational& z, unsigned bits) {
  Rational eps = dyadic_unit(bits);
  Rational z2 = z * z;
  Rational power = z;
  Rational sum = 0;
  Rational tail;
  for (unsigned long j = 0;; ++j) {
    sum += power / (2 * j + 1);
    power *= z2;
    tail = power / (Rational(2 * j + 3) * (1 - z2));
    if (tail < eps) break;
  }
  return {sum, Rational(sum + tail)};
}

long floor_log2(const Rational& x) {
  long k = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  if (x < pow2(k)) --k;
  if (x >= pow2(k + 1)) ++k;
  return k;
}

Interval exp_neg_point(const Rational& y, unsigned bits) {
  unsigned s = 0;
  Rational scaled = y;
  while (scaled > 1) {
    scaled /= 2;
    ++s;
  }
  const unsigned p = bits + s + 8;
  Rational eps = dyadic_unit(p);
  // Alternating series with nonincreasing terms: consecutive partial sums
  // bracket the value.
  Rational sum = 1;
  Rational term = 1;
  Rational lo, hi;
  for (unsigned long k = 1;; ++k) {
    term *= -scaled;
    term /= k;
    sum += term;
    if (k % 2 == 1 && abs(term) < eps) {
      lo = sum;
      hi = sum - term;
      break;
    }
  }
  lo = round_down_dyadic(lo, p);
  hi = round_up_dyadic(hi, p);
  if (sgn(lo) < 0) lo = 0;
  if (hi > 1) hi = 1;
  for (unsigned i = 0; i < s; ++i) {
    lo = round_down_dyadic(lo * lo, p);
    hi = round_up_dyadic(hi * hi, p);
  }
  return {round_down_dyadic(lo, bits), round_up_dyadic(hi, bits)};
}

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

}  // namespace

Interval ln_bounds(const Rational& x, unsigned bits) {
  if (sgn(x) <= 0) throw Error(ErrorKind::invalid_params, "ln of a nonpositive number");
  if (x < 1) {
    Interval inv = ln_bounds(1 / x, bits);
    return {-inv.hi, -inv.lo};
  }
  long k = floor_log2(x);
  Rational r = x / pow2(k);
  const unsigned work = bits + 8 + static_cast<unsigned>(std::bit_width(static_cast<unsigned long>(k)));
  Interval ln2 = atanh_bounds(Rational(1, 3), work);
  Interval lr = atanh_bounds(Rational((r - 1) / (r + 1)), work);
  Rational lo = 2 * (k * ln2.lo + lr.lo);
  Rational hi = 2 * (k * ln2.hi + lr.hi);
  return {round_down_dyadic(lo, bits), round_up_dyadic(hi, bits)};
}

Interval sqrt_bounds(const Rational& x, unsigned bits) {
  if (sgn(x) < 0) throw Error(ErrorKind::invalid_params, "sqrt of a negative number");
  BigInt scaled_num = x.get_num() << (2 * bits);
  BigInt fl, cl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
  mpz_cdiv_q(cl.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
  BigInt lo, hi;
  mpz_sqrt(lo.get_mpz_t(), fl.get_mpz_t());
  mpz_sqrt(hi.get_mpz_t(), cl.get_mpz_t());
  if (hi * hi < cl) hi += 1;
  Rational unit = pow2(bits);
  return {Rational(lo) / unit, Rational(hi) / unit};
}

Interval exp_neg_bounds(const Interval& x, unsigned bits) {
  if (sgn(x.lo) < 0 || x.lo > x.hi) throw Error(ErrorKind::invalid_params, "exp_neg_bounds needs 0 <= lo <= hi");
  return {exp_neg_point(x.hi, bits).lo, exp_neg_point(x.lo, bits).hi};
}

bool two_pow_exceeds_poly(std::size_t m, std::size_t d) {
  return (BigInt(1) << m) > pow(BigInt(2 * m + 1), d);
}

std::size_t polynomial_cutoff(std::size_t d) {
  if (d == 0) return 0;
  Rational ln2_lo = ln_bounds(Rational(2)).lo;
  Rational t = Rational(static_cast<unsigned long>(d)) / ln2_lo;
  BigInt start;
  mpz_cdiv_q(start.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  std::size_t m0 = start.get_ui();
  while ((BigInt(1) << m0) < pow(BigInt(2 * m0 + 1), d)) ++m0;
  return m0;
}

CheckReport cutoff_checks(std::size_t d_lo, std::size_t d_hi) {
  CheckReport report;
  for (std::size_t d = d_lo; d <= d_hi; ++d) {
    double m0 = 2.0 * static_cast<double>(d) * std::log2(static_cast<double>(d));
    std::string tag = " d=" + std::to_string(d);
    // m0 >= d/ln 2  <=>  2 ln d >= 1  <=  d^2 >= 3 > e
    report.expect("cutoff_condition_i" + tag, d * d >= 3,
                  "m0=" + fixed(m0, 2) + " d/ln2=" + fixed(static_cast<double>(d) / std::log(2.0), 2));
    // d^(2d) >= (2 m0 + 1)^d  <=>  d^2 - 1 >= 4 d log2 d  <=>  2^(d^2 - 1) >= d^(4d)
    bool ii = (BigInt(1) << (d * d - 1)) >= pow(BigInt(d), 4 * d);
    report.expect("cutoff_condition_ii" + tag, ii,
                  "2^m0 vs (2m0+1)^d: log2 " + fixed(m0, 2) + " vs " +
                      fixed(static_cast<double>(d) * std::log2(2 * m0 + 1), 2));
    // Spot check of the conclusion just past m0.
    std::size_t first = static_cast<std::size_t>(std::floor(m0)) + 1;
    bool all = true;
    for (std::size_t m = first; m < first + 64; ++m) all = all && two_pow_exceeds_poly(m, d);
    report.expect("cutoff_conclusion" + tag, all,
                  "2^m > (2m+1)^d for m in [" + std::to_string(first) + "," + std::to_string(first + 63) + "]");
  }
  return report;
}

CheckReport repetition_checks(std::size_t a_lo, std::size_t a_hi) {
  CheckReport report;
  const Rational ln4_hi = ln_bounds(Rational(4)).hi;
  for (std::size_t a = a_lo; a <= a_hi; ++a) {
    std::string tag = " alpha=" + std::to_string(a);
    std::size_t m = 0;
    for (unsigned bits = 64;; bits *= 2) {
      Interval la = ln_bounds(Rational(static_cast<unsigned long>(a)), bits);
      Rational lo = 20 * static_cast<unsigned long>(a) * la.lo;
      Rational hi = 20 * static_cast<unsigned long>(a) * la.hi;
      BigInt flo, fhi;
      mpz_fdiv_q(flo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
      if (flo == fhi) {
        m = flo.get_ui();
        break;
      }
    }
    BigInt m_pow = pow(BigInt(m), a);
    BigInt k = 4 * m_pow;
    Rational q = Rational(BigInt(1), m_pow) - pow(Rational(3, 4), m);
    Rational kq = k * q;
    report.expect("repetition_step" + tag, 2 * m_pow * pow(BigInt(3), m) <= pow(BigInt(4), m),
                  "(3/4)^m <= 1/(2 m^alpha) at m=" + std::to_string(m));
    report.expect("repetition_bound" + tag, kq >= ln4_hi,
                  "m=" + std::to_string(m) + " k=4*" + std::to_string(m) + "^" + std::to_string(a) +
                      " kq=" + fixed(to_double(kq), 6) + " ln4<=" + fixed(to_double(ln4_hi), 6));
  }
  return report;
}

CheckReport numeric_lemma_checks() {
  CheckReport report;
  report.append(cutoff_checks());
  report.append(repetition_checks());
  return report;
}

}  // namespace cliquedim
