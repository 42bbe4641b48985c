#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qm/linear_form.hpp"
#include "qm/matrix.hpp"
#include "qm/polynomial.hpp"
#include "qm/rational.hpp"

namespace qm {

struct Reflection {
  LinearForm alpha;          // covector with matrix^T alpha = -alpha
  Matrix<Rational> matrix;   // acts on coordinate vectors
  std::size_t conjugacy_class = 0;
};

struct InvariantSet {
  std::vector<Polynomial> generators;
  std::vector<unsigned> degrees;  // ascending
};

/// Finite reflection group realized by integer matrices on Q^n.
///
/// The realization preserves the Gram matrix metric() (M^T G M = G); G is the
/// identity except for types built on A_n reduced coordinates, where
/// G = I + J. Elements are enumerated eagerly with the identity first.
class CoxeterGroup {
 public:
  static constexpr std::size_t kDefaultCap = 100000;

  /// Parses labels such as "A2", "B6", "C3", "D4", "G2", "(Z/2)^3", "I2(4)", "B2xA1".
  static CoxeterGroup build(const std::string& label, std::size_t cap = kDefaultCap);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Reflection>& reflections() const { return reflections_; }
  std::size_t num_classes() const { return class_names_.size(); }
  const std::vector<std::string>& class_names() const { return class_names_; }
  /// Number of reflections in each conjugacy class.
  std::vector<std::size_t> class_sizes() const;

  const Matrix<Rational>& metric() const { return metric_; }
  const Matrix<Rational>& metric_inverse() const { return metric_inverse_; }

  Matrix<Rational> element(std::size_t i) const;
  const Matrix<std::int64_t>& element_int(std::size_t i) const { return elements_[i]; }
  std::size_t inverse_index(std::size_t i) const { return inverses_[i]; }

  /// Covector length <alpha, alpha> in the dual metric.
  Rational squared_length(const LinearForm& alpha) const;

 private:
  friend class GroupBuilder;

  std::string name_;
  std::size_t dim_ = 0;
  Matrix<Rational> metric_;
  Matrix<Rational> metric_inverse_;
  std::vector<Reflection> reflections_;
  std::vector<std::string> class_names_;
  std::vector<Matrix<std::int64_t>> elements_;
  std::vector<std::size_t> inverses_;
  InvariantSet invariants_;

  friend InvariantSet invariant_generators(const CoxeterGroup& g);
};

inline CoxeterGroup build_group(const std::string& label, std::size_t cap = CoxeterGroup::kDefaultCap) {
  return CoxeterGroup::build(label, cap);
}

/// Nonnegative integer per conjugacy class of reflections.
class MultiplicityFunction {
 public:
  MultiplicityFunction() = default;
  /// A single value is broadcast to every class; otherwise one value per class.
  MultiplicityFunction(const CoxeterGroup& g, std::vector<unsigned> values);

  static MultiplicityFunction constant(const CoxeterGroup& g, unsigned value) { return {g, {value}}; }

  const std::vector<unsigned>& values() const { return values_; }
  unsigned of_class(std::size_t c) const { return values_[c]; }
  unsigned operator()(const Reflection& s) const { return values_[s.conjugacy_class]; }
  bool is_zero() const;
  bool is_constant() const;

  /// d = sum_s (2 m_s + 1)
  unsigned d(const CoxeterGroup& g) const;
  /// sum_s m_s
  unsigned delta_degree(const CoxeterGroup& g) const;

  std::string to_string() const;

 private:
  std::vector<unsigned> values_;
};

InvariantSet invariant_generators(const CoxeterGroup& g);

/// Rank of the Jacobian of the generators at a random rational point equals n.
bool algebraically_independent(const InvariantSet& inv, std::uint32_t seed = 7);

/// (w f)(x) = f(w^{-1} x).
Polynomial act(const Matrix<Rational>& w, const Polynomial& f);
/// Action of the i-th element of g.
Polynomial act(const CoxeterGroup& g, std::size_t i, const Polynomial& f);

}  // namespace qm
