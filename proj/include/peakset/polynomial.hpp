#pragma once

#include <string>
#include <utility>
#include <vector>

#include "peakset/bigint.hpp"
#include "peakset/enumerate.hpp"
#include "peakset/errors.hpp"
#include "peakset/families.hpp"
#include "peakset/vertex_set.hpp"

namespace peakset {

// For a fixed set S of path positions, the number of labelings of the path
// on n vertices with peak set exactly S factors as 2^(n-|S|-1) * p(n) for all
// n > max(S), where p is a polynomial of degree max(S) - 1 with rational
// coefficients.  PeakPolynomial holds such a p exactly.
class PeakPolynomial {
public:
  PeakPolynomial(std::vector<Rational> coefficients, VertexSet positions)
      : coefficients_(std::move(coefficients)), positions_(positions) {
    while (coefficients_.size() > 1 && coefficients_.back() == 0) coefficients_.pop_back();
    if (coefficients_.empty()) coefficients_.push_back(Rational(0));
  }

  // Coefficients in ascending degree order; the leading one is nonzero
  // unless the polynomial is the zero constant.
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  // The path position set this polynomial was built from.
  VertexSet positions() const { return positions_; }

  Rational evaluate(const BigInt& x) const {
    Rational rx(x);
    Rational acc = 0;
    for (std::size_t i = coefficients_.size(); i-- > 0;) acc = acc * rx + coefficients_[i];
    return acc;
  }

  // Full path count 2^(n-|S|-1) * p(n); rejects n <= max(S), where the
  // factorization does not apply.
  BigInt count_at(int n) const {
    if (n <= positions_.last() && !positions_.empty())
      throw InputError("count formula applies only beyond the largest position");
    if (n < 1) throw InputError("path size must be positive");
    Rational value = evaluate(n) * Rational(pow2(n - positions_.size() - 1));
    if (boost::multiprecision::denominator(value) != 1)
      throw Error("path count formula produced a non-integer");
    return boost::multiprecision::numerator(value);
  }

private:
  std::vector<Rational> coefficients_;
  VertexSet positions_;
};

// "x^2/2 - 3*x/2 + 1" style rendering, highest degree first.
inline std::string to_string(const PeakPolynomial& p) {
  const auto& c = p.coefficients();
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    Rational q = c[static_cast<std::size_t>(d)];
    if (q == 0 && !(p.degree() == 0 && d == 0)) continue;
    bool negative = q < 0;
    if (negative) q = -q;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    std::string term;
    if (d == 0) {
      term = num.str();
    } else {
      if (num != 1) term += num.str() + "*";
      term += "x";
      if (d > 1) term += "^" + std::to_string(d);
    }
    if (den != 1) term += "/" + den.str();
    out += term;
  }
  return out.empty() ? "0" : out;
}

namespace detail {

// Newton interpolation through (xs[i], ys[i]), expanded to monomial form.
inline std::vector<Rational> interpolate(const std::vector<Rational>& xs,
                                         const std::vector<Rational>& ys) {
  std::size_t m = xs.size();
  std::vector<Rational> dd = ys;  // divided differences, computed in place
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);

  // Horner-style expansion: poly = poly * (x - xs[i]) + dd[i].
  std::vector<Rational> poly{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    poly.insert(poly.begin(), Rational(0));
    for (std::size_t k = 0; k + 1 < poly.size(); ++k) poly[k] -= xs[i] * poly[k + 1];
    poly[0] += dd[i];
  }
  return poly;
}

}  // namespace detail

// Reconstructs the peak polynomial of a path position set by exact
// interpolation.  Counts are sampled at n = max(S)+1 .. 2*max(S) (the degree
// is max(S)-1, so max(S) samples suffice) and the result is checked against
// two further sample points before being returned.  positions must have
// minimum at least 2 and no two adjacent; the empty set yields the constant
// polynomial 1.
inline PeakPolynomial path_peak_polynomial(VertexSet positions) {
  if (positions.empty()) return PeakPolynomial({Rational(1)}, positions);
  if (positions.first() < 2)
    throw InputError("path position 1 can never be a peak");
  for (int v : positions)
    if (positions.contains(v + 1))
      throw InputError("adjacent path positions " + std::to_string(v) + "," +
                       std::to_string(v + 1) + " cannot both be peaks");
  int top = positions.last();
  if (2 * top + 2 > VertexSet::max_vertices)
    throw ResourceLimitError("positions reach " + std::to_string(top) +
                             "; sampling needs paths of up to " + std::to_string(2 * top + 2) +
                             " vertices, above the vertex limit");

  int s = positions.size();
  auto sample = [&](int n) {
    BigInt count = count_labelings(path_graph(n), positions);
    Rational value(count, pow2(n - s - 1));
    if (boost::multiprecision::denominator(value) != 1)
      throw Error("path count at n = " + std::to_string(n) +
                  " is not divisible by 2^(n-|S|-1)");
    return value;
  };

  std::vector<Rational> xs, ys;
  for (int n = top + 1; n <= 2 * top; ++n) {
    xs.emplace_back(n);
    ys.push_back(sample(n));
  }
  PeakPolynomial p(detail::interpolate(xs, ys), positions);

  if (p.degree() != top - 1)
    throw Error("reconstructed polynomial for " + to_string(positions) + " has degree " +
                std::to_string(p.degree()) + ", expected " + std::to_string(top - 1));
  for (int n = 2 * top + 1; n <= 2 * top + 2; ++n)
    if (p.evaluate(n) != sample(n))
      throw Error("reconstructed polynomial for " + to_string(positions) +
                  " fails at held-out point n = " + std::to_string(n));
  return p;
}

}  // namespace peakset
