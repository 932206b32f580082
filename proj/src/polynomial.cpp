#include "homeo/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "homeo/errors.hpp"

namespace homeo {

Polynomial Polynomial::constant(long c) {
  Polynomial p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

Polynomial Polynomial::variable(std::uint32_t id) {
  Polynomial p;
  p.terms_[{id}] = 1;
  return p;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial operator-(Polynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

std::string Polynomial::to_string(
    const std::function<std::string(std::uint32_t)>& variable_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const mpz_class mag = negative ? mpz_class(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string body;
    if (mag != 1 || m.empty()) body = mag.get_str();
    for (auto v : m) {
      if (!body.empty()) body += "*";
      body += variable_name(v);
    }
    out += body;
  }
  return out;
}

Polynomial symbolic_det(const SymbolicMatrix& m) {
  const std::size_t n = m.size;
  if (n == 0) return Polynomial::constant(1);
  if (n > 30) throw NetworkError("symbolic determinant limited to 30 columns");

  std::unordered_map<std::uint32_t, Polynomial> memo;
  // det of rows [row, n) against the columns in `mask`.
  std::function<Polynomial(std::uint32_t)> expand = [&](std::uint32_t mask) -> Polynomial {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    if (mask == 0) return Polynomial::constant(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial sum;
    int rank = 0;  // position of c among the remaining columns
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const long var = m.at(row, c);
      if (var >= 0) {
        Polynomial minor = expand(mask & ~(1u << c));
        if (!minor.is_zero()) {
          Polynomial term = Polynomial::variable(static_cast<std::uint32_t>(var)) * minor;
          if (rank % 2 == 0)
            sum += term;
          else
            sum -= term;
        }
      }
      ++rank;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return expand(n == 32 ? 0xFFFFFFFFu : ((1u << n) - 1));
}

}  // namespace homeo
