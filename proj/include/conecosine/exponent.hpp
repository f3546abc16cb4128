#pragma once

#include <complex>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "conecosine/errors.hpp"

namespace conecosine {

// Exponent vector lambda = (lambda_1, ..., lambda_m) in C^m together with the
// operations the composite power calculus needs: the reversal
// lambda_* = (lambda_m, ..., lambda_1), the trace |lambda| = sum lambda_j and
// constant shifts lambda + (alpha, ..., alpha).
class ConeExponent {
 public:
  using value_type = std::complex<double>;

  explicit ConeExponent(std::vector<value_type> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty())
      throw DimensionError("exponent vector must have length >= 1");
  }

  ConeExponent(std::initializer_list<value_type> entries)
      : ConeExponent(std::vector<value_type>(entries)) {}

  // The constant vector (alpha, ..., alpha) of length m.
  static ConeExponent constant(int m, value_type alpha) {
    if (m < 1) throw DimensionError("exponent vector must have length >= 1");
    return ConeExponent(std::vector<value_type>(static_cast<size_t>(m), alpha));
  }

  static ConeExponent zero(int m) { return constant(m, value_type(0.0)); }

  int dim() const { return static_cast<int>(entries_.size()); }

  const value_type& operator[](int j) const {
    return entries_[static_cast<size_t>(j)];
  }

  const std::vector<value_type>& entries() const { return entries_; }

  ConeExponent reversed() const {
    return ConeExponent(std::vector<value_type>(entries_.rbegin(),
                                                entries_.rend()));
  }

  // |lambda| = lambda_1 + ... + lambda_m.
  value_type trace() const {
    return std::accumulate(entries_.begin(), entries_.end(), value_type(0.0));
  }

  ConeExponent shifted(value_type alpha) const {
    std::vector<value_type> out = entries_;
    for (auto& e : out) e += alpha;
    return ConeExponent(std::move(out));
  }

  ConeExponent operator+(const ConeExponent& other) const {
    require_same_dim(other);
    std::vector<value_type> out = entries_;
    for (size_t j = 0; j < out.size(); ++j) out[j] += other.entries_[j];
    return ConeExponent(std::move(out));
  }

  ConeExponent operator-() const {
    std::vector<value_type> out = entries_;
    for (auto& e : out) e = -e;
    return ConeExponent(std::move(out));
  }

  ConeExponent operator-(const ConeExponent& other) const {
    return *this + (-other);
  }

  bool operator==(const ConeExponent& other) const = default;

 private:
  void require_same_dim(const ConeExponent& other) const {
    if (entries_.size() != other.entries_.size())
      throw DimensionError("exponent dimensions differ");
  }

  std::vector<value_type> entries_;
};

}  // namespace conecosine
