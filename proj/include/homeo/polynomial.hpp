#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace homeo {

/// Sparse multivariate polynomial with integer coefficients. Variables are
/// plain integer ids; a monomial is the sorted multiset of its variables.
class Polynomial {
 public:
  using Monomial = std::vector<std::uint32_t>;

  Polynomial() = default;
  static Polynomial constant(long c);
  static Polynomial variable(std::uint32_t id);

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] const std::map<Monomial, mpz_class>& terms() const noexcept { return terms_; }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Terms in monomial order, e.g. "f[s,i]*f[o,s] - f[s,s]*f[o,i]".
  [[nodiscard]] std::string to_string(
      const std::function<std::string(std::uint32_t)>& variable_name) const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  std::map<Monomial, mpz_class> terms_;
};

/// Square matrix whose entries are either zero or a single variable.
struct SymbolicMatrix {
  std::size_t size = 0;
  std::vector<long> entries;  ///< row-major; variable id or -1 for zero

  [[nodiscard]] long at(std::size_t r, std::size_t c) const { return entries[r * size + c]; }
};

/// Laplace expansion along rows, memoised on the set of unused columns.
/// Limited to 30 columns.
[[nodiscard]] Polynomial symbolic_det(const SymbolicMatrix& m);

}  // namespace homeo
