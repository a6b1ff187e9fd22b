#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylkit {

// Failed internal invariant. Preconditions of public operations throw
// std::invalid_argument instead.
struct CheckError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void wk_check(bool ok, const char* what) {
  if (!ok) throw CheckError(what);
}

/// Dense square integer matrix. Entries stay small for every matrix this
/// project produces (Weyl actions, adjoint representations), so int64 is
/// exact; products are checked nowhere near overflow range.
class IntMat {
 public:
  IntMat() : n_(0) {}
  explicit IntMat(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}

  static IntMat identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }

  int64_t& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  int64_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  bool operator==(const IntMat& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  IntMat operator*(const IntMat& o) const {
    wk_check(n_ == o.n_, "IntMat: size mismatch");
    IntMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        int64_t v = (*this)(i, k);
        if (v == 0) continue;
        const int64_t* orow = &o.a_[static_cast<size_t>(k) * n_];
        int64_t* rrow = &r.a_[static_cast<size_t>(i) * n_];
        for (int j = 0; j < n_; ++j) rrow[j] += v * orow[j];
      }
    return r;
  }

  IntMat operator+(const IntMat& o) const {
    wk_check(n_ == o.n_, "IntMat: size mismatch");
    IntMat r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  IntMat operator-(const IntMat& o) const {
    wk_check(n_ == o.n_, "IntMat: size mismatch");
    IntMat r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  IntMat scaled(int64_t c) const {
    IntMat r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
  }

  std::vector<int64_t> apply(const std::vector<int64_t>& v) const {
    wk_check(static_cast<int>(v.size()) == n_, "IntMat: vector size mismatch");
    std::vector<int64_t> r(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool isIdentity() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  IntMat transpose() const {
    IntMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  // Multiplicative order; 0 if it exceeds `cap`.
  int order(int cap = 10000) const {
    IntMat p = *this;
    for (int k = 1; k <= cap; ++k) {
      if (p.isIdentity()) return k;
      p = p * (*this);
    }
    return 0;
  }

  IntMat pow(int64_t e) const {
    wk_check(e >= 0, "IntMat::pow: negative exponent");
    IntMat r = identity(n_), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (int64_t v : a_) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }

  const std::vector<int64_t>& data() const { return a_; }

  std::string toText() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (j) s += ' ';
        s += std::to_string((*this)(i, j));
      }
      s += '\n';
    }
    return s;
  }

 private:
  int n_;
  std::vector<int64_t> a_;
};

struct IntMatHash {
  size_t operator()(const IntMat& m) const { return m.hash(); }
};

}  // namespace weylkit
