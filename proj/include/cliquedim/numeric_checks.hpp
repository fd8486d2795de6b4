#pragma once

#include <cstddef>
#include <optional>

#include "cliquedim/rational.hpp"
#include "cliquedim/report.hpp"

namespace cliquedim {

/// Closed rational enclosure lo <= value <= hi.
struct Interval {
  Rational lo;
  Rational hi;
};

/// Enclosures of width about 2^-bits, with dyadic endpoints.
/// ln_bounds requires x > 0, sqrt_bounds x >= 0; both throw Error(invalid_params).
Interval ln_bounds(const Rational& x, unsigned bits = 96);
Interval sqrt_bounds(const Rational& x, unsigned bits = 96);
/// exp(-x) over x in [x.lo, x.hi] with x.lo >= 0: [e^{-x.hi}, e^{-x.lo}].
Interval exp_neg_bounds(const Interval& x, unsigned bits = 96);

/// 2^m > (2m+1)^d, exactly.
bool two_pow_exceeds_poly(std::size_t m, std::size_t d);

/// Smallest integer m0 with m0 >= d/ln 2 and 2^m0 >= (2 m0 + 1)^d, checked
/// with big integers. Every m > m0 then satisfies 2^m > (2m+1)^d.
std::size_t polynomial_cutoff(std::size_t d);

/// For d in [d_lo, d_hi], m0 = 2 d log2 d: condition (i) m0 >= d/ln 2 and
/// (ii) 2^m0 >= (2 m0 + 1)^d. With m0 real, (i) reduces to d^2 >= e and (ii)
/// to 2^(d^2 - 1) >= d^(4d); both are decided on integers.
CheckReport cutoff_checks(std::size_t d_lo = 30, std::size_t d_hi = 40);

/// For alpha in [a_lo, a_hi], m = floor(20 alpha ln alpha), k = 4 m^alpha,
/// q = 1/m^alpha - (3/4)^m: checks k q >= ln 4 exactly, plus the
/// intermediate step (3/4)^m <= 1/(2 m^alpha).
CheckReport repetition_checks(std::size_t a_lo = 2, std::size_t a_hi = 12);

CheckReport numeric_lemma_checks();

}  // namespace cliquedim
