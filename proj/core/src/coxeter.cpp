#include "qm/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <unordered_map>

#include "qm/error.hpp"
#include "qm/linalg.hpp"

namespace qm {

namespace {

struct Factor {
  std::string label;
  std::size_t dim = 0;
  Matrix<Rational> metric;
  std::vector<LinearForm> roots;  // one covector per reflection
  std::vector<Polynomial> invariants;
  Integer order;
  bool named_by_length = false;  // two classes, called short and long
};

LinearForm covector(std::vector<Rational> c) { return LinearForm(std::move(c)); }

std::vector<Rational> unit(std::size_t n, std::size_t i, long scale = 1) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = scale;
  return v;
}

Integer factorial_int(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

// e_i - e_j of Q^{n+1}, restricted to y_k = X_k (k <= n), X_{n+1} = -sum y.
std::vector<Rational> a_root(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<Rational> c(n, Rational(0));
  c[i] += 1;
  if (j < n) {
    c[j] -= 1;
  } else {
    for (auto& v : c) v += 1;
  }
  return c;
}

Matrix<Rational> a_metric(std::size_t n) {
  Matrix<Rational> g(n, n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
  return g;
}

// X_1..X_{n+1} as polynomials in the reduced coordinates.
std::vector<Polynomial> a_coordinates(std::size_t n) {
  std::vector<Polynomial> xs;
  Polynomial last(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(Polynomial::variable(n, i));
    last -= xs.back();
  }
  xs.push_back(last);
  return xs;
}

Polynomial power_sum(const std::vector<Polynomial>& xs, unsigned k) {
  Polynomial p(xs.front().nvars());
  for (const auto& x : xs) p += x.pow(k);
  return p;
}

Factor type_a(unsigned n) {
  Factor f;
  f.label = "A" + std::to_string(n);
  f.order = factorial_int(n + 1);
  if (n == 1) {
    f.dim = 1;
    f.metric = Matrix<Rational>::identity(1);
    f.roots.push_back(covector({Rational(1)}));
    f.invariants.push_back(Polynomial::variable(1, 0).pow(2));
    return f;
  }
  f.dim = n;
  f.metric = a_metric(n);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) f.roots.push_back(covector(a_root(n, i, j)));
  const auto xs = a_coordinates(n);
  for (unsigned k = 2; k <= n + 1; ++k) f.invariants.push_back(power_sum(xs, k));
  return f;
}

std::vector<Polynomial> coordinates(std::size_t n) {
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(Polynomial::variable(n, i));
  return xs;
}

void add_long_roots(Factor& f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto minus = unit(n, i);
      minus[j] = -1;
      f.roots.push_back(covector(minus));
      auto plus = unit(n, i);
      plus[j] = 1;
      f.roots.push_back(covector(plus));
    }
}

Factor type_b(unsigned n, char letter) {
  Factor f;
  f.label = std::string(1, letter) + std::to_string(n);
  f.dim = n;
  f.metric = Matrix<Rational>::identity(n);
  f.order = (Integer(1) << n) * factorial_int(n);
  for (std::size_t i = 0; i < n; ++i) f.roots.push_back(covector(unit(n, i)));
  add_long_roots(f, n);
  const auto xs = coordinates(n);
  for (unsigned k = 1; k <= n; ++k) f.invariants.push_back(power_sum(xs, 2 * k));
  f.named_by_length = n >= 2;
  return f;
}

Factor type_d(unsigned n) {
  if (n < 2) throw UnsupportedType("D_n needs n >= 2");
  Factor f;
  f.label = "D" + std::to_string(n);
  f.dim = n;
  f.metric = Matrix<Rational>::identity(n);
  f.order = (Integer(1) << (n - 1)) * factorial_int(n);
  add_long_roots(f, n);
  const auto xs = coordinates(n);
  for (unsigned k = 1; k < n; ++k) f.invariants.push_back(power_sum(xs, 2 * k));
  Polynomial prod = Polynomial::constant(n, 1);
  for (const auto& x : xs) prod *= x;
  f.invariants.push_back(prod);
  return f;
}

Factor type_g2() {
  Factor f;
  f.label = "G2";
  f.dim = 2;
  f.metric = a_metric(2);
  f.order = 12;
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t j = i + 1; j <= 2; ++j) f.roots.push_back(covector(a_root(2, i, j)));
  // 2X_i - X_j - X_k = 3X_i, scaled to squared length 6.
  f.roots.push_back(covector({Rational(3), Rational(0)}));
  f.roots.push_back(covector({Rational(0), Rational(3)}));
  f.roots.push_back(covector({Rational(3), Rational(3)}));
  const auto xs = a_coordinates(2);
  f.invariants.push_back(power_sum(xs, 2));
  f.invariants.push_back(power_sum(xs, 6));
  f.named_by_length = true;
  return f;
}

Factor type_z2(unsigned n) {
  Factor f;
  f.label = "(Z/2)^" + std::to_string(n);
  f.dim = n;
  f.metric = Matrix<Rational>::identity(n);
  f.order = Integer(1) << n;
  for (std::size_t i = 0; i < n; ++i) {
    f.roots.push_back(covector(unit(n, i)));
    f.invariants.push_back(Polynomial::variable(n, i).pow(2));
  }
  return f;
}

unsigned parse_rank(const std::string& digits) {
  const unsigned long v = std::stoul(digits);
  if (v == 0 || v > kMaxVariables) throw UnsupportedType("rank out of range: " + digits);
  return static_cast<unsigned>(v);
}

Factor parse_factor(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::smatch m;
  static const std::regex classical(R"(([ABCDG])(\d+))");
  static const std::regex z2(R"(\(Z/2\)(?:\^(\d+))?|Z2(?:\^(\d+))?)");
  static const std::regex dihedral(R"(I2\((\d+)\))");
  if (std::regex_match(s, m, classical)) {
    const unsigned n = parse_rank(m[2]);
    switch (s[0]) {
      case 'A':
        return type_a(n);
      case 'B':
      case 'C':
        return type_b(n, s[0]);
      case 'D':
        return type_d(n);
      case 'G':
        if (n == 2) return type_g2();
        break;
    }
    throw UnsupportedType("unsupported group label: " + raw);
  }
  if (std::regex_match(s, m, z2)) {
    const std::string digits = m[1].matched ? m[1].str() : m[2].str();
    return type_z2(digits.empty() ? 1 : parse_rank(digits));
  }
  if (std::regex_match(s, m, dihedral)) {
    const std::string p = m[1];
    if (p == "3") return type_a(2);
    if (p == "4") return type_b(2, 'B');
    if (p == "6") return type_g2();
    throw UnsupportedType("dihedral group " + s + " has no rational realization");
  }
  throw UnsupportedType("unsupported group label: " + raw);
}

std::vector<std::string> split_product(const std::string& label) {
  std::vector<std::string> parts;
  std::string current;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == 'x' || label[i] == '*') {
      parts.push_back(current);
      current.clear();
    } else if (label.compare(i, 2, "\xC3\x97") == 0) {  // multiplication sign
      parts.push_back(current);
      current.clear();
      ++i;
    } else {
      current += label[i];
    }
  }
  parts.push_back(current);
  return parts;
}

Matrix<std::int64_t> to_int(const Matrix<Rational>& m) {
  Matrix<std::int64_t> r(m.rows(), m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& v = m(i, j);
      if (v.get_den() != 1 || !v.get_num().fits_slong_p())
        throw Error("group element is not an integer matrix");
      r(i, j) = v.get_num().get_si();
    }
  return r;
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Matrix<Rational> scalar_matrix(std::size_t n, const Rational& c) {
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix<std::int64_t> multiply(const Matrix<std::int64_t>& a, const Matrix<std::int64_t>& b) { return a * b; }

}  // namespace

class GroupBuilder {
 public:
  static CoxeterGroup build(const std::string& label, std::size_t cap) {
    std::vector<Factor> factors;
    for (const auto& part : split_product(label)) factors.push_back(parse_factor(part));

    CoxeterGroup g;
    g.name_ = label;
    Integer order = 1;
    for (const auto& f : factors) {
      g.dim_ += f.dim;
      order *= f.order;
    }
    if (g.dim_ > kMaxVariables) throw UnsupportedType("ambient dimension above " + std::to_string(kMaxVariables));
    if (order > cap) throw OrderCapExceeded(label + " has order " + order.get_str() + " above the cap " + std::to_string(cap));

    const std::size_t n = g.dim_;
    g.metric_ = Matrix<Rational>(n, n);
    std::vector<std::size_t> factor_of_root;
    std::size_t offset = 0;
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      const auto& f = factors[fi];
      for (std::size_t i = 0; i < f.dim; ++i)
        for (std::size_t j = 0; j < f.dim; ++j) g.metric_(offset + i, offset + j) = f.metric(i, j);
      for (const auto& r : f.roots) {
        std::vector<Rational> c(n, Rational(0));
        for (std::size_t i = 0; i < f.dim; ++i) c[offset + i] = r[i];
        g.reflections_.push_back(Reflection{LinearForm(std::move(c)), {}, 0});
        factor_of_root.push_back(fi);
      }
      for (const auto& p : f.invariants) g.invariants_.generators.push_back(p.embed(n, offset));
      offset += f.dim;
    }
    g.metric_inverse_ = inverse(g.metric_);

    for (auto& s : g.reflections_) s.matrix = reflection_matrix(g, s.alpha);
    assign_classes(g, factors, factor_of_root);
    enumerate(g, order);

    auto& inv = g.invariants_;
    std::vector<std::size_t> idx(inv.generators.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return inv.generators[a].degree() < inv.generators[b].degree();
    });
    std::vector<Polynomial> sorted;
    for (auto i : idx) {
      sorted.push_back(inv.generators[i]);
      inv.degrees.push_back(static_cast<unsigned>(inv.generators[i].degree()));
    }
    inv.generators = std::move(sorted);
    return g;
  }

 private:
  // s(x) = x - alpha(x) v with v = 2 G^{-1} alpha / <alpha, alpha>.
  static Matrix<Rational> reflection_matrix(const CoxeterGroup& g, const LinearForm& alpha) {
    const std::size_t n = g.dim_;
    const Rational len = g.squared_length(alpha);
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) v[i] += g.metric_inverse_(i, k) * alpha[k];
      v[i] = 2 * v[i] / len;
    }
    Matrix<Rational> s = Matrix<Rational>::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) -= v[i] * alpha[j];
    return s;
  }

  static void assign_classes(CoxeterGroup& g, const std::vector<Factor>& factors,
                             const std::vector<std::size_t>& factor_of_root) {
    const std::size_t count = g.reflections_.size();
    std::map<LinearForm, std::size_t> index;
    for (std::size_t i = 0; i < count; ++i) index.emplace(g.reflections_[i].alpha.primitive(), i);

    std::vector<std::size_t> cls(count, count);
    std::size_t next = 0;
    std::vector<std::size_t> class_first;
    for (std::size_t start = 0; start < count; ++start) {
      if (cls[start] != count) continue;
      cls[start] = next;
      class_first.push_back(start);
      std::vector<std::size_t> queue{start};
      while (!queue.empty()) {
        const std::size_t cur = queue.back();
        queue.pop_back();
        for (const auto& r : g.reflections_) {
          const LinearForm image = g.reflections_[cur].alpha.compose(r.matrix).primitive();
          const auto it = index.find(image);
          if (it == index.end()) throw Error("root system not closed under reflections");
          if (cls[it->second] == count) {
            cls[it->second] = next;
            queue.push_back(it->second);
          }
        }
      }
      ++next;
    }
    for (std::size_t i = 0; i < count; ++i) g.reflections_[i].conjugacy_class = cls[i];

    std::vector<std::size_t> per_factor(factors.size(), 0);
    for (std::size_t c = 0; c < next; ++c) {
      const std::size_t fi = factor_of_root[class_first[c]];
      const Factor& f = factors[fi];
      const std::size_t k = per_factor[fi]++;
      std::string base;
      if (f.named_by_length)
        base = k == 0 ? "short" : "long";
      else if (f.label.rfind("(Z/2)", 0) == 0)
        base = "s" + std::to_string(k + 1);
      else
        base = k == 0 ? "all" : "class" + std::to_string(k + 1);
      g.class_names_.push_back(factors.size() == 1 ? base : f.label + ":" + base);
    }
    // D2 splits into two classes; name them apart.
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      if (per_factor[fi] != 2 || factors[fi].named_by_length) continue;
      for (std::size_t c = 0; c < next; ++c) {
        if (factor_of_root[class_first[c]] != fi) continue;
        auto& name = g.class_names_[c];
        const std::string suffix = ":all";
        if (name == "all") name = "class1";
        else if (name.size() > suffix.size() && name.ends_with(suffix))
          name = name.substr(0, name.size() - suffix.size()) + ":class1";
      }
    }
  }

  static void enumerate(CoxeterGroup& g, const Integer& expected) {
    const std::size_t n = g.dim_;
    std::vector<Matrix<std::int64_t>> gens;
    for (const auto& s : g.reflections_) gens.push_back(to_int(s.matrix));

    std::unordered_map<std::vector<std::int64_t>, std::size_t, VectorHash> seen;
    g.elements_.push_back(Matrix<std::int64_t>::identity(n));
    seen.emplace(g.elements_.back().data(), 0);
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
      for (const auto& s : gens) {
        Matrix<std::int64_t> next = multiply(g.elements_[head], s);
        if (seen.emplace(next.data(), g.elements_.size()).second) g.elements_.push_back(std::move(next));
      }
    }
    if (Integer(static_cast<unsigned long>(g.elements_.size())) != expected)
      throw Error("enumerated " + std::to_string(g.elements_.size()) + " elements, expected " + expected.get_str());

    // M^T G M = G gives M^{-1} = G^{-1} M^T G; G^{-1} is scaled to integers.
    Integer den = 1;
    for (const auto& v : g.metric_inverse_.data()) den = lcm(den, Integer(v.get_den()));
    const Matrix<std::int64_t> metric = to_int(g.metric_);
    const Matrix<std::int64_t> scaled_inverse = to_int(g.metric_inverse_ * scalar_matrix(n, Rational(den)));
    const std::int64_t d = den.get_si();
    g.inverses_.assign(g.elements_.size(), 0);
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
      Matrix<std::int64_t> inv = scaled_inverse * g.elements_[i].transpose() * metric;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) inv(a, b) /= d;
      const auto it = seen.find(inv.data());
      if (it == seen.end() || !(multiply(g.elements_[i], inv) == Matrix<std::int64_t>::identity(n)))
        throw Error("group element inverse missing or metric not preserved");
      g.inverses_[i] = it->second;
    }
  }
};

CoxeterGroup CoxeterGroup::build(const std::string& label, std::size_t cap) { return GroupBuilder::build(label, cap); }

std::vector<std::size_t> CoxeterGroup::class_sizes() const {
  std::vector<std::size_t> sizes(num_classes(), 0);
  for (const auto& s : reflections_) ++sizes[s.conjugacy_class];
  return sizes;
}

Matrix<Rational> CoxeterGroup::element(std::size_t i) const {
  const auto& m = elements_[i];
  Matrix<Rational> r(m.rows(), m.cols());
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) r(a, b) = static_cast<long>(m(a, b));
  return r;
}

Rational CoxeterGroup::squared_length(const LinearForm& alpha) const {
  Rational len = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) len += alpha[i] * metric_inverse_(i, j) * alpha[j];
  return len;
}

MultiplicityFunction::MultiplicityFunction(const CoxeterGroup& g, std::vector<unsigned> values)
    : values_(std::move(values)) {
  if (values_.size() == 1 && g.num_classes() != 1) values_.assign(g.num_classes(), values_.front());
  if (values_.size() != g.num_classes())
    throw DimensionMismatch("multiplicity function has " + std::to_string(values_.size()) + " values, group " +
                            g.name() + " has " + std::to_string(g.num_classes()) + " reflection classes");
}

bool MultiplicityFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](unsigned v) { return v == 0; });
}

bool MultiplicityFunction::is_constant() const {
  return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) == values_.end();
}

unsigned MultiplicityFunction::d(const CoxeterGroup& g) const {
  unsigned total = 0;
  for (const auto& s : g.reflections()) total += 2 * (*this)(s) + 1;
  return total;
}

unsigned MultiplicityFunction::delta_degree(const CoxeterGroup& g) const {
  unsigned total = 0;
  for (const auto& s : g.reflections()) total += (*this)(s);
  return total;
}

std::string MultiplicityFunction::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values_[i]);
  }
  return out;
}

InvariantSet invariant_generators(const CoxeterGroup& g) { return g.invariants_; }

bool algebraically_independent(const InvariantSet& inv, std::uint32_t seed) {
  if (inv.generators.empty()) return true;
  const std::size_t n = inv.generators.front().nvars();
  if (inv.generators.size() != n) return false;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> point(n);
  for (auto& v : point) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  RatMatrix jac(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac(i, j) = inv.generators[i].derivative(j).evaluate(point);
  return rank(jac) == n;
}

Polynomial act(const Matrix<Rational>& w, const Polynomial& f) {
  if (w.rows() != f.nvars() || w.cols() != f.nvars())
    throw DimensionMismatch("group element of size " + std::to_string(w.rows()) + " acting on a polynomial in " +
                            std::to_string(f.nvars()) + " variables");
  return f.substitute(inverse(w));
}

Polynomial act(const CoxeterGroup& g, std::size_t i, const Polynomial& f) {
  if (g.dim() != f.nvars()) throw DimensionMismatch("polynomial dimension differs from the group");
  return f.substitute(g.element(g.inverse_index(i)));
}

}  // namespace qm
