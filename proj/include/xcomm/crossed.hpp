#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "xcomm/dynamics.hpp"
#include "xcomm/rational.hpp"

namespace xcomm {

using Degree = std::int64_t;

/// A piecewise constant function, stored as its value on each piece.
struct CoefficientVector {
  std::vector<Rational> values;

  CoefficientVector() = default;
  explicit CoefficientVector(std::size_t pieces) : values(pieces) {}
  explicit CoefficientVector(std::vector<Rational> v) : values(std::move(v)) {}

  /// Characteristic function of a set of pieces.
  static CoefficientVector indicator(std::size_t pieces, std::initializer_list<PieceId> support);
  static CoefficientVector indicator(std::size_t pieces, const std::vector<PieceId>& support);
  static CoefficientVector ones(std::size_t pieces);

  std::size_t size() const noexcept { return values.size(); }
  bool is_zero() const;
  std::vector<PieceId> support() const;

  CoefficientVector& operator+=(const CoefficientVector& other);
  CoefficientVector& operator*=(const CoefficientVector& other);  // pointwise
  CoefficientVector& operator*=(const Rational& scalar);

  friend CoefficientVector operator+(CoefficientVector a, const CoefficientVector& b) { return a += b; }
  friend CoefficientVector operator*(CoefficientVector a, const CoefficientVector& b) { return a *= b; }
  friend CoefficientVector operator*(CoefficientVector a, const Rational& s) { return a *= s; }
  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

/// sigma~^n(f) = f o sigma^{-n}: the value on piece P is f's value on perm^{-n}(P).
CoefficientVector sigma_tilde_pow(const CoefficientVector& f, const PieceMap& map, Degree n);

/// A finite sum  sum_n f_n delta^n  with zero coefficients pruned, so that
/// structural equality is algebraic equality.
class CrossedElement {
 public:
  CrossedElement() = default;
  explicit CrossedElement(std::size_t pieces) : pieces_(pieces) {}

  static CrossedElement monomial(CoefficientVector f, Degree n);

  std::size_t pieces() const noexcept { return pieces_; }
  const std::map<Degree, CoefficientVector>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// f_n, or the zero vector when degree n is absent.
  CoefficientVector coefficient(Degree n) const;
  void add_term(Degree n, const CoefficientVector& f);

  CrossedElement& operator+=(const CrossedElement& other);
  CrossedElement& operator*=(const Rational& scalar);
  friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) { return a += b; }
  friend CrossedElement operator*(CrossedElement a, const Rational& s) { return a *= s; }

  friend bool operator==(const CrossedElement&, const CrossedElement&) = default;

 private:
  std::size_t pieces_ = 0;
  std::map<Degree, CoefficientVector> terms_;
};

/// Twisted convolution: (f_n d^n) * (g_m d^m) = f_n sigma~^n(g_m) d^{n+m}, extended bilinearly.
CrossedElement multiply(const CrossedElement& f, const CrossedElement& g, const PieceMap& map);

std::size_t graded_component_dim(const std::vector<PieceId>& support_mask);

/// Rank of a rational matrix, exact.
std::size_t rank(std::vector<std::vector<Rational>> rows);

class CommutantDescription;

struct GradingVerdict {
  bool strongly_graded = true;
  std::optional<std::pair<Degree, Degree>> witness;
  std::size_t product_rank = 0;   // rank of A'_n * A'_m at the witness
  std::size_t target_dim = 0;     // dim A'_{n+m} at the witness
  Degree window = 0;
};

/// Checks A'_n * A'_m = A'_{n+m} for |n|, |m| <= window, visiting degrees in
/// the order 0, 1, -1, 2, -2, ... and reporting the first failing pair.
GradingVerdict is_strongly_graded(const CommutantDescription& commutant, const PieceMap& map, Degree window);

}  // namespace xcomm
