#include "toricmle/rational.hpp"

namespace toricmle {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1)
    throw std::overflow_error("rational " + q.get_str() + " is not an integer");
  return to_int64(q.get_num());
}

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("integer " + z.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(z.get_si());
}

MatQ to_rational(const MatI& m) {
  MatQ out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = make_rational(m(i, j));
  return out;
}

VecQ to_rational(const VecI& v) {
  VecQ out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = make_rational(v(i));
  return out;
}

Eigen::MatrixXd to_double_matrix(const MatI& m) {
  return m.cast<double>();
}

Eigen::VectorXd to_double_vector(const VecI& v) { return v.cast<double>(); }

Eigen::VectorXd to_double_vector(const VecQ& v) {
  Eigen::VectorXd out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v(i).get_d();
  return out;
}

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const Rational& q : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  return l;
}

std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& values) {
  BigInt l = common_denominator(values);
  std::vector<BigInt> ints;
  ints.reserve(values.size());
  BigInt g = 0;
  for (const Rational& q : values) {
    if (q <= 0) throw std::invalid_argument("primitive_integer_vector needs positive entries");
    BigInt v = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  for (BigInt& v : ints) v /= g;
  return ints;
}

}  // namespace toricmle
