// Copyright 2026 The cliffdesc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <Eigen/Core>

namespace cliffdesc {

/**
 * Gaussian rational with a power-of-two denominator,
 *
 *     value = (re_num + i * im_num) / 2^log2_den ,
 *
 * stored in reduced form: log2_den == 0 or at least one numerator is odd.
 * Closed under +, -, *, conjugation and halving, so every identity of the
 * gamma-matrix algebra (whose constants are fourth roots of unity and 1/2
 * factors) is decided by exact structural equality. No epsilon anywhere.
 */
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(std::int64_t real_part)  // NOLINT(google-explicit-constructor)
      : re_num_(real_part) {}
  ExactScalar(std::int64_t re_num, std::int64_t im_num, int log2_den = 0)
      : re_num_(re_num), im_num_(im_num), log2_den_(log2_den) {
    reduce();
  }

  /// i^quarter_turns, any integer exponent.
  static ExactScalar i_power(int quarter_turns) {
    switch (((quarter_turns % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
  static ExactScalar unit_im() { return {0, 1}; }
  static ExactScalar half() { return {1, 0, 1}; }

  std::int64_t re_num() const { return re_num_; }
  std::int64_t im_num() const { return im_num_; }
  int log2_den() const { return log2_den_; }

  bool is_zero() const { return re_num_ == 0 && im_num_ == 0; }
  bool is_real() const { return im_num_ == 0; }

  /// Exponent q with value == i^q, if the value is a fourth root of unity.
  std::optional<int> quarter_phase() const {
    if (log2_den_ != 0) return std::nullopt;
    if (re_num_ == 1 && im_num_ == 0) return 0;
    if (re_num_ == 0 && im_num_ == 1) return 1;
    if (re_num_ == -1 && im_num_ == 0) return 2;
    if (re_num_ == 0 && im_num_ == -1) return 3;
    return std::nullopt;
  }

  ExactScalar operator-() const {
    ExactScalar r;
    r.re_num_ = -re_num_;
    r.im_num_ = -im_num_;
    r.log2_den_ = log2_den_;
    return r;
  }

  ExactScalar conjugated() const {
    ExactScalar r;
    r.re_num_ = re_num_;
    r.im_num_ = -im_num_;
    r.log2_den_ = log2_den_;
    return r;
  }

  /// Multiplication by i: (a + bi) * i = -b + ai.
  ExactScalar times_i() const {
    ExactScalar r;
    r.re_num_ = -im_num_;
    r.im_num_ = re_num_;
    r.log2_den_ = log2_den_;
    return r;
  }

  /// Exact division by 2^k.
  ExactScalar div_pow2(int k) const {
    return {re_num_, im_num_, log2_den_ + k};
  }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    const int k = a.log2_den_ > b.log2_den_ ? a.log2_den_ : b.log2_den_;
    const std::int64_t sa = std::int64_t{1} << (k - a.log2_den_);
    const std::int64_t sb = std::int64_t{1} << (k - b.log2_den_);
    return {a.re_num_ * sa + b.re_num_ * sb, a.im_num_ * sa + b.im_num_ * sb,
            k};
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return a + (-b);
  }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    return {a.re_num_ * b.re_num_ - a.im_num_ * b.im_num_,
            a.re_num_ * b.im_num_ + a.im_num_ * b.re_num_,
            a.log2_den_ + b.log2_den_};
  }
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_num_ == b.re_num_ && a.im_num_ == b.im_num_ &&
           a.log2_den_ == b.log2_den_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) {
    return !(a == b);
  }

  std::complex<double> to_complex() const {
    return {std::ldexp(static_cast<double>(re_num_), -log2_den_),
            std::ldexp(static_cast<double>(im_num_), -log2_den_)};
  }

  std::string str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    if (im_num_ == 0) {
      os << re_num_;
    } else if (re_num_ == 0) {
      if (im_num_ == 1) {
        os << "i";
      } else if (im_num_ == -1) {
        os << "-i";
      } else {
        os << im_num_ << "i";
      }
    } else {
      os << "(" << re_num_ << (im_num_ > 0 ? "+" : "-")
         << (std::abs(im_num_) == 1 ? "" : std::to_string(std::abs(im_num_)))
         << "i)";
    }
    if (log2_den_ > 0) os << "/" << (std::int64_t{1} << log2_den_);
    return os.str();
  }

 private:
  void reduce() {
    if (re_num_ == 0 && im_num_ == 0) {
      log2_den_ = 0;
      return;
    }
    while (log2_den_ > 0 && (re_num_ % 2 == 0) && (im_num_ % 2 == 0)) {
      re_num_ /= 2;
      im_num_ /= 2;
      --log2_den_;
    }
  }

  std::int64_t re_num_ = 0;
  std::int64_t im_num_ = 0;
  int log2_den_ = 0;
};

// ADL hooks used by Eigen's conjugation and reduction machinery.
inline ExactScalar conj(const ExactScalar& s) { return s.conjugated(); }
inline ExactScalar real(const ExactScalar& s) {
  return {s.re_num(), 0, s.log2_den()};
}
inline ExactScalar imag(const ExactScalar& s) {
  return {s.im_num(), 0, s.log2_den()};
}
inline ExactScalar abs2(const ExactScalar& s) { return s * s.conjugated(); }

inline std::ostream& operator<<(std::ostream& os, const ExactScalar& s) {
  return os << s.str();
}

inline std::size_t hash_value(const ExactScalar& s) {
  std::size_t h = std::hash<std::int64_t>{}(s.re_num());
  h ^= std::hash<std::int64_t>{}(s.im_num()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
       (h >> 2);
  h ^= std::hash<int>{}(s.log2_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
       (h >> 2);
  return h;
}

}  // namespace cliffdesc

namespace Eigen {

template <>
struct NumTraits<cliffdesc::ExactScalar> {
  typedef cliffdesc::ExactScalar Real;
  typedef cliffdesc::ExactScalar NonInteger;
  typedef cliffdesc::ExactScalar Nested;
  typedef cliffdesc::ExactScalar Literal;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 6
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

// Real == Scalar here, so the generic <T,T> and <T,Real> partial
// specializations would otherwise be ambiguous.
template <typename BinaryOp>
struct ScalarBinaryOpTraits<cliffdesc::ExactScalar, cliffdesc::ExactScalar,
                            BinaryOp> {
  typedef cliffdesc::ExactScalar ReturnType;
};

}  // namespace Eigen
