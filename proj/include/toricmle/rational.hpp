#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

// Exact rational scalar support for dense Eigen containers.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace toricmle {

// mpq_class is canonical by construction: lowest terms, positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

using Index = Eigen::Index;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VecI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// Sorted set of 0-based column indices.
using IndexSet = std::vector<int>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

/// Parses "num", "num/den" or a plain integer string; throws on junk.
Rational parse_rational(const std::string& text);

/// Canonical "num" or "num/den" form, as GMP prints it.
std::string rational_to_string(const Rational& q);

/// Exact conversion; throws std::overflow_error if the value is not an
/// integer fitting in 64 bits.
std::int64_t to_int64(const Rational& q);
std::int64_t to_int64(const BigInt& z);

inline double to_double(const Rational& q) { return q.get_d(); }

MatQ to_rational(const MatI& m);
VecQ to_rational(const VecI& v);
Eigen::MatrixXd to_double_matrix(const MatI& m);
Eigen::VectorXd to_double_vector(const VecI& v);
Eigen::VectorXd to_double_vector(const VecQ& v);

/// Smallest positive integer L with L*v integral for every entry.
BigInt common_denominator(const std::vector<Rational>& values);

/// Clears denominators and divides by the gcd; all inputs must be > 0.
/// Result is the primitive positive integer vector proportional to `values`.
std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& values);

}  // namespace toricmle
