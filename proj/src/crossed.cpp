#include "xcomm/crossed.hpp"

#include <algorithm>

#include "xcomm/commutant.hpp"
#include "xcomm/error.hpp"

namespace xcomm {
namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::PartitionMismatch,
                "operands live on partitions with " + std::to_string(a) + " and " + std::to_string(b) + " pieces");
  }
}

}  // namespace

CoefficientVector CoefficientVector::indicator(std::size_t pieces, std::initializer_list<PieceId> support) {
  return indicator(pieces, std::vector<PieceId>(support));
}

CoefficientVector CoefficientVector::indicator(std::size_t pieces, const std::vector<PieceId>& support) {
  CoefficientVector v(pieces);
  for (PieceId id : support) v.values.at(id) = 1;
  return v;
}

CoefficientVector CoefficientVector::ones(std::size_t pieces) {
  return CoefficientVector(std::vector<Rational>(pieces, Rational(1)));
}

bool CoefficientVector::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::vector<PieceId> CoefficientVector::support() const {
  std::vector<PieceId> out;
  for (PieceId i = 0; i < values.size(); ++i) {
    if (sgn(values[i]) != 0) out.push_back(i);
  }
  return out;
}

CoefficientVector& CoefficientVector::operator+=(const CoefficientVector& other) {
  require_same_size(size(), other.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
  return *this;
}

CoefficientVector& CoefficientVector::operator*=(const CoefficientVector& other) {
  require_same_size(size(), other.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= other.values[i];
  return *this;
}

CoefficientVector& CoefficientVector::operator*=(const Rational& scalar) {
  for (auto& x : values) x *= scalar;
  return *this;
}

CoefficientVector sigma_tilde_pow(const CoefficientVector& f, const PieceMap& map, Degree n) {
  require_same_size(f.size(), map.size());
  // (f o sigma^{-n})(P) = f(Q) with sigma^n(Q) = P.
  const PieceMap forward = map.power(n);
  CoefficientVector out(f.size());
  for (PieceId q = 0; q < f.size(); ++q) out.values[forward(q)] = f.values[q];
  return out;
}

CrossedElement CrossedElement::monomial(CoefficientVector f, Degree n) {
  CrossedElement e(f.size());
  e.add_term(n, f);
  return e;
}

CoefficientVector CrossedElement::coefficient(Degree n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? CoefficientVector(pieces_) : it->second;
}

void CrossedElement::add_term(Degree n, const CoefficientVector& f) {
  require_same_size(pieces_, f.size());
  auto [it, inserted] = terms_.try_emplace(n, f);
  if (!inserted) it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& other) {
  require_same_size(pieces_, other.pieces_);
  for (const auto& [n, f] : other.terms_) add_term(n, f);
  return *this;
}

CrossedElement& CrossedElement::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [n, f] : terms_) f *= scalar;
  return *this;
}

CrossedElement multiply(const CrossedElement& f, const CrossedElement& g, const PieceMap& map) {
  require_same_size(f.pieces(), g.pieces());
  require_same_size(f.pieces(), map.size());
  CrossedElement out(f.pieces());
  for (const auto& [n, fn] : f.terms()) {
    for (const auto& [m, gm] : g.terms()) {
      out.add_term(n + m, fn * sigma_tilde_pow(gm, map, n));
    }
  }
  return out;
}

std::size_t graded_component_dim(const std::vector<PieceId>& support_mask) {
  return support_mask.size();
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

GradingVerdict is_strongly_graded(const CommutantDescription& commutant, const PieceMap& map, Degree window) {
  if (window < 1) throw Error(ErrorCode::InvalidArgument, "grading window must be at least 1");
  const std::size_t pieces = map.size();
  require_same_size(pieces, commutant.view().ambient.size());

  std::vector<Degree> order{0};
  for (Degree d = 1; d <= window; ++d) {
    order.push_back(d);
    order.push_back(-d);
  }

  GradingVerdict verdict;
  verdict.window = window;
  for (Degree n : order) {
    for (Degree m : order) {
      // Basis of A'_n is chi_P d^n for allowed P; products of basis elements
      // span A'_n * A'_m.
      std::vector<std::vector<Rational>> rows;
      for (PieceId p : commutant.allowed(n)) {
        auto a = CrossedElement::monomial(CoefficientVector::indicator(pieces, {p}), n);
        for (PieceId q : commutant.allowed(m)) {
          auto b = CrossedElement::monomial(CoefficientVector::indicator(pieces, {q}), m);
          auto product = multiply(a, b, map);
          if (!product.is_zero()) rows.push_back(product.coefficient(n + m).values);
        }
      }
      const std::size_t r = rank(std::move(rows));
      const std::size_t target = graded_component_dim(commutant.allowed(n + m));
      if (r < target) {
        verdict.strongly_graded = false;
        verdict.witness = {n, m};
        verdict.product_rank = r;
        verdict.target_dim = target;
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace xcomm
