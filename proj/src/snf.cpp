#include "fintop/snf.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace fintop {

namespace {

struct Overflow {};

// 64-bit integer whose arithmetic throws Overflow instead of wrapping.
struct SafeInt {
  long long v = 0;
  SafeInt() = default;
  SafeInt(long long x) : v(x) {}

  friend SafeInt operator+(SafeInt a, SafeInt b) {
    SafeInt r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend SafeInt operator-(SafeInt a, SafeInt b) {
    SafeInt r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend SafeInt operator*(SafeInt a, SafeInt b) {
    SafeInt r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend SafeInt operator/(SafeInt a, SafeInt b) {
    if (a.v == LLONG_MIN && b.v == -1) throw Overflow{};
    return SafeInt(a.v / b.v);
  }
  friend SafeInt operator%(SafeInt a, SafeInt b) {
    if (a.v == LLONG_MIN && b.v == -1) throw Overflow{};
    return SafeInt(a.v % b.v);
  }
  friend auto operator<=>(SafeInt a, SafeInt b) = default;
};

SafeInt abs(SafeInt a) {
  if (a.v == LLONG_MIN) throw Overflow{};
  return SafeInt(a.v < 0 ? -a.v : a.v);
}

using BigInt = boost::multiprecision::cpp_int;

template <typename T>
T gcd_of(T a, T b) {
  using std::abs;
  a = abs(a);
  b = abs(b);
  while (!(b == T(0))) {
    T r = a % b;
    a = b;
    b = r;
  }
  return a;
}

template <typename T>
std::vector<T> snf_diagonal(std::vector<std::vector<T>> m) {
  using std::abs;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<T> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Minimal-|.| pivot limits coefficient growth.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (!(m[i][j] == T(0)) && (!found || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == T(0)) continue;
        T q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] = m[i][j] - q * m[t][j];
        if (!(m[i][t] == T(0))) {
          std::swap(m[t], m[i]);  // remainder is a smaller pivot
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == T(0)) continue;
        T q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][t];
        if (!(m[t][j] == T(0))) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // Pivot must divide the remaining submatrix before moving on.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (!(m[i][j] % m[t][t] == T(0))) {
              for (std::size_t c = t; c < cols; ++c) m[t][c] = m[t][c] + m[i][c];
              clean = false;
            }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }

  // gcd/lcm sweeps enforce d1 | d2 | ... | dr.
  for (bool sorted = false; !sorted;) {
    sorted = true;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] % diag[i] == T(0)) continue;
      T g = gcd_of(diag[i], diag[i + 1]);
      diag[i + 1] = diag[i] / g * diag[i + 1];
      diag[i] = g;
      sorted = false;
    }
  }
  return diag;
}

template <typename T>
SnfResult run(const IntMatrix& m) {
  std::vector<std::vector<T>> work(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    work[i] = std::vector<T>(m[i].begin(), m[i].end());
  std::vector<T> diag = snf_diagonal(std::move(work));
  SnfResult result;
  result.diagonal.reserve(diag.size());
  for (const T& d : diag) {
    if constexpr (std::is_same_v<T, SafeInt>) {
      result.diagonal.push_back(d.v);
    } else {
      if (d > BigInt(LLONG_MAX)) throw std::overflow_error("elementary divisor exceeds 64-bit range");
      result.diagonal.push_back(static_cast<long long>(d));
    }
  }
  return result;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i].size() != m[0].size()) throw std::invalid_argument("ragged matrix");
  try {
    return run<SafeInt>(m);
  } catch (const Overflow&) {
    return run<BigInt>(m);
  }
}

}  // namespace fintop
