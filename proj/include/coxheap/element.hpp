#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coxeter_graph.hpp"
#include "errors.hpp"

namespace coxheap {

// Sign test of a root vector. Roots produced by simple reflections acting on
// simple roots are never mixed.
enum class RootSign { kPositive, kNegative };

template <class Scalar>
struct ScalarOps;

template <>
struct ScalarOps<std::int64_t> {
  static constexpr bool kExact = true;

  // x - c * y, throwing on overflow.
  static std::int64_t sub_mul(std::int64_t x, std::int64_t c, std::int64_t y) {
    std::int64_t prod = 0;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(c, y, &prod) || __builtin_sub_overflow(x, prod, &out))
      throw NumericError("root coordinate overflowed 64-bit integer range");
    return out;
  }
  static bool positive(std::int64_t v, double) { return v > 0; }
  static bool negative(std::int64_t v, double) { return v < 0; }
};

template <>
struct ScalarOps<double> {
  static constexpr bool kExact = false;

  static double sub_mul(double x, double c, double y) { return x - c * y; }
  static bool positive(double v, double tol) { return v > tol; }
  static bool negative(double v, double tol) { return v < -tol; }
};

// The standard geometric representation: simple reflection s_a acts on root
// coordinates by v_a <- v_a - sum_j cartan(a, j) v_j.
template <class Scalar>
class Representation {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  explicit Representation(const CoxeterGraph& graph, double tolerance = kDefaultTolerance)
      : rank_(graph.rank()), tolerance_(tolerance), neighbours_(graph.rank()) {
    for (Letter a = 0; a < static_cast<Letter>(rank_); ++a)
      for (Letter j = 0; j < static_cast<Letter>(rank_); ++j) {
        if (j == a || graph.label(a, j) == 2) continue;
        Scalar c{};
        if constexpr (ScalarOps<Scalar>::kExact)
          c = graph.integral_cartan(a, j);
        else
          c = graph.real_cartan(a, j);
        neighbours_[static_cast<std::size_t>(a)].emplace_back(j, c);
      }
  }

  std::size_t rank() const noexcept { return rank_; }
  double tolerance() const noexcept { return tolerance_; }

  // Pairs (j, cartan(a, j)) with j != a and a nonzero entry.
  const std::vector<std::pair<Letter, Scalar>>& neighbours(Letter a) const {
    return neighbours_[static_cast<std::size_t>(a)];
  }

 private:
  std::size_t rank_;
  double tolerance_;
  std::vector<std::vector<std::pair<Letter, Scalar>>> neighbours_;
};

// A group element x, stored as the matrix of x^{-1} (column-major) together
// with its length. Column a is x^{-1}(alpha_a), so a is a left descent of x
// iff that column is a negative root.
template <class Scalar>
class Element {
 public:
  explicit Element(const Representation<Scalar>& rep)
      : rep_(&rep), rank_(rep.rank()), inverse_(rank_ * rank_, Scalar{}) {
    for (std::size_t i = 0; i < rank_; ++i) inverse_[i * rank_ + i] = Scalar{1};
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return rank_; }

  RootSign column_sign(Letter a) const {
    const Scalar* col = column(a);
    const double tol = rep_->tolerance();
    bool pos = false;
    bool neg = false;
    for (std::size_t i = 0; i < rank_; ++i) {
      pos = pos || ScalarOps<Scalar>::positive(col[i], tol);
      neg = neg || ScalarOps<Scalar>::negative(col[i], tol);
    }
    if (pos && neg) throw NumericError("root with mixed-sign coordinates");
    if (!pos && !neg)
      throw NumericError("root sign is ambiguous: every coordinate is within tolerance of zero");
    return pos ? RootSign::kPositive : RootSign::kNegative;
  }

  bool is_left_descent(Letter a) const { return column_sign(a) == RootSign::kNegative; }

  std::vector<Letter> left_descents() const {
    std::vector<Letter> out;
    for (Letter a = 0; a < static_cast<Letter>(rank_); ++a)
      if (is_left_descent(a)) out.push_back(a);
    return out;
  }

  // Bit set of left descents (rank <= 64 only).
  std::uint64_t left_descent_mask() const {
    std::uint64_t mask = 0;
    for (Letter a = 0; a < static_cast<Letter>(rank_); ++a)
      if (is_left_descent(a)) mask |= std::uint64_t{1} << a;
    return mask;
  }

  // x <- a x. Returns true when the length went up.
  bool multiply_left(Letter a) {
    const bool descent = is_left_descent(a);
    apply_reflection(a);
    if (descent)
      --length_;
    else
      ++length_;
    return !descent;
  }

  // Same as multiply_left when the caller already knows the descent status.
  void multiply_left_known(Letter a, bool is_descent) {
    apply_reflection(a);
    if (is_descent)
      --length_;
    else
      ++length_;
  }

  // Lexicographically least reduced word: repeatedly strip the smallest left
  // descent.
  Word canonical_word() const {
    Element copy = *this;
    Word out;
    out.reserve(length_);
    while (copy.length_ > 0) {
      Letter a = 0;
      while (!copy.is_left_descent(a)) ++a;
      out.push_back(a);
      copy.multiply_left_known(a, true);
    }
    return out;
  }

  // The canonical word packed one letter per byte, for hashing.
  std::string canonical_key() const {
    Element copy = *this;
    std::string out;
    out.reserve(length_);
    while (copy.length_ > 0) {
      Letter a = 0;
      while (!copy.is_left_descent(a)) ++a;
      out.push_back(static_cast<char>(a));
      copy.multiply_left_known(a, true);
    }
    return out;
  }

  bool same_matrix(const Element& other) const { return inverse_ == other.inverse_; }

 private:
  const Scalar* column(Letter a) const { return inverse_.data() + static_cast<std::size_t>(a) * rank_; }
  Scalar* column(Letter a) { return inverse_.data() + static_cast<std::size_t>(a) * rank_; }

  // x^{-1} <- x^{-1} s_a: column j gains -cartan(a, j) times column a, and
  // column a is negated.
  void apply_reflection(Letter a) {
    Scalar* col_a = column(a);
    for (const auto& [j, c] : rep_->neighbours(a)) {
      Scalar* col_j = column(j);
      for (std::size_t i = 0; i < rank_; ++i) col_j[i] = ScalarOps<Scalar>::sub_mul(col_j[i], c, col_a[i]);
    }
    for (std::size_t i = 0; i < rank_; ++i) col_a[i] = -col_a[i];
  }

  const Representation<Scalar>* rep_;
  std::size_t rank_;
  std::size_t length_ = 0;
  std::vector<Scalar> inverse_;
};

inline Word key_to_word(const std::string& key) {
  Word w;
  w.reserve(key.size());
  for (char c : key) w.push_back(static_cast<Letter>(static_cast<unsigned char>(c)));
  return w;
}

// Calls `fn(rep)` with the exact representation when every label admits an
// integral Cartan matrix, and the floating point one otherwise.
template <class Fn>
decltype(auto) with_representation(const CoxeterGraph& graph, Fn&& fn) {
  if (graph.is_crystallographic()) {
    const Representation<std::int64_t> rep(graph);
    return fn(rep);
  }
  const Representation<double> rep(graph);
  return fn(rep);
}

}  // namespace coxheap
