#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

namespace samop {

// Exact Gaussian rational a + bi with a, b ∈ ℚ. The only scalar domain of the
// engine; |z|² is an exact rational, so circle membership and ranks never
// touch floating point.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational from_ratio(long num_re, long den_re, long num_im = 0,
                                     long den_im = 1) {
    return GaussianRational(mpq_class(num_re, den_re), mpq_class(num_im, den_im));
  }
  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
  }
  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                            a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    mpq_class n2 = b.norm2();
    // z/w = z·conj(w)/|w|²; division by zero surfaces as a GMP error upstream,
    // callers guard on is_zero().
    GaussianRational num = a * b.conj();
    return GaussianRational(num.re_ / n2, num.im_ / n2);
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  GaussianRational pow(long long k) const {
    GaussianRational acc(1);
    GaussianRational base = *this;
    for (long long e = k; e > 0; e >>= 1) {
      if (e & 1) acc *= base;
      if (e > 1) base *= base;
    }
    return acc;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  // Lexicographic order on (re, im); used only for canonical sorting, it has
  // no analytic meaning.
  friend std::strong_ordering operator<=>(const GaussianRational& a,
                                          const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    c = cmp(a.im_, b.im_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // DSL form "a/b+c/di"; reparsed by the parser module.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += rat_str(re_);
    if (im_ != 0) {
      if (im_ > 0 && !out.empty()) out += "+";
      if (im_ == 1) {
        out += "i";
      } else if (im_ == -1) {
        out += "-i";
      } else {
        out += rat_str(im_) + "i";
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
  }

 private:
  static std::string rat_str(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
  }

  mpq_class re_, im_;
};

using GQ = GaussianRational;

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

inline std::string rational_str(const mpq_class& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

}  // namespace samop
