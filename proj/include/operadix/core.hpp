#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace operadix {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class ColourMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LabelOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finitely supported Z-linear combination; zero coefficients are never stored.
template <class B, class R = Int>
class LinComb {
 public:
  using Map = std::map<B, R>;

  LinComb() = default;
  explicit LinComb(const B& b, R c = R(1)) { add(b, std::move(c)); }

  void add(const B& b, const R& c) {
    if (c == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& o, const R& scale = R(1)) {
    for (const auto& [b, c] : o.terms_) add(b, c * scale);
  }

  R coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? R(0) : it->second;
  }

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinComb operator-() const {
    LinComb r;
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
  }
  LinComb& operator+=(const LinComb& o) {
    add(o);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, R(-1));
    return *this;
  }
  LinComb& operator*=(const R& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const R& s, LinComb a) { return a *= s; }
  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

  // Applies a linear map given on basis elements.
  template <class F>
  auto map(F&& f) const {
    using Out = decltype(f(std::declval<const B&>()));
    Out r;
    for (const auto& [b, c] : terms_) r.add(f(b), c);
    return r;
  }

 private:
  Map terms_;
};

// Bilinear extension of a basis-level operation.
template <class A, class B, class F>
auto bilinear(const LinComb<A>& x, const LinComb<B>& y, F&& f) {
  using Out = decltype(f(std::declval<const A&>(), std::declval<const B&>()));
  Out r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add(f(a, b), ca * cb);
  return r;
}

inline int signOf(long long e) { return (e % 2 == 0) ? 1 : -1; }

// Sign of the permutation that sorts the given sequence of distinct keys.
template <class T>
int permutationSign(const std::vector<T>& v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] < v[i]) s = -s;
  return s;
}

}  // namespace operadix
