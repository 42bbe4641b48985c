#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace qm {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of at most kMaxVariables variables, each exponent < 256.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t index) const { return exponents_[index]; }
  void set(std::size_t index, unsigned exponent);

  unsigned degree() const;
  bool is_one() const;

  /// Throws qm::Error when an exponent would overflow.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other) on the divisor side: returns this / other.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  const std::array<std::uint8_t, kMaxVariables>& raw() const { return exponents_; }

 private:
  std::array<std::uint8_t, kMaxVariables> exponents_{};
};

/// Graded lexicographic comparison: true when a precedes b in descending order,
/// i.e. a has larger total degree, or equal degree and is lex-larger (x1 > x2 > ...).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of total degree `degree` in `nvars` variables, in descending grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace qm
