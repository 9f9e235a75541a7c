#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace coxkit {

// Integer Laurent polynomials in the grading variable v.
class Laurent {
 public:
  Laurent() = default;
  Laurent(std::int64_t c) {
    if (c != 0) c_[0] = c;
  }

  static Laurent v(int exponent, std::int64_t coefficient = 1) {
    Laurent p;
    if (coefficient != 0) p.c_[exponent] = coefficient;
    return p;
  }

  bool zero() const { return c_.empty(); }

  std::int64_t coeff(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? 0 : it->second;
  }

  // Nonzero coefficients keyed by exponent.
  const std::map<int, std::int64_t>& coeffs() const { return c_; }

  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) {
      auto it = c_.find(e);
      if (it == c_.end()) {
        c_[e] = c;
      } else if ((it->second += c) == 0) {
        c_.erase(it);
      }
    }
    return *this;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent& b) {
    a += b;
    return a;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) {
        auto it = p.c_.find(ea + eb);
        if (it == p.c_.end()) {
          p.c_[ea + eb] = ca * cb;
        } else if ((it->second += ca * cb) == 0) {
          p.c_.erase(it);
        }
      }
    return p;
  }

  bool operator==(const Laurent&) const = default;

  // Terms in ascending exponent order: "0", "1", "v", "v^-1+v", "1+v^2".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : c_) {
      std::int64_t a = c;
      if (first) {
        if (a < 0) {
          out += '-';
          a = -a;
        }
      } else {
        out += a < 0 ? '-' : '+';
        if (a < 0) a = -a;
      }
      if (e == 0) {
        out += std::to_string(a);
      } else {
        if (a != 1) out += std::to_string(a);
        out += 'v';
        if (e != 1) out += '^' + std::to_string(e);
      }
      first = false;
    }
    return out;
  }

 private:
  std::map<int, std::int64_t> c_;  // exponent -> nonzero coefficient
};

}  // namespace coxkit
