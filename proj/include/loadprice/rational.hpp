#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "loadprice/errors.hpp"

namespace loadprice {

// Exact rational scalar.  mpq_class keeps values canonical (lowest terms,
// positive denominator), which is what every integrality test relies on.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw StructuralError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q".  Throws StructuralError on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw StructuralError("empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw StructuralError("malformed rational literal: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw StructuralError("malformed rational literal: " + s);
  if (r.get_den() == 0) throw StructuralError("zero denominator in literal: " + s);
  r.canonicalize();
  return r;
}

// "p" if integral, else "p/q".
inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline std::string vec_str(const RatVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out + ")";
}

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

inline bool is_integral(const RatVec& v) {
  for (const Rat& x : v)
    if (!is_integral(x)) return false;
  return true;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("add: size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("sub: size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec scale(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline RatVec zeros(int n) { return RatVec(static_cast<size_t>(n), Rat(0)); }

// Strict lexicographic order; used everywhere a deterministic tie-break or
// witness order is required.
inline bool lex_less(const RatVec& a, const RatVec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return true;
    if (c > 0) return false;
  }
  return a.size() < b.size();
}

inline bool leq_componentwise(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("leq: size mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Dense rational matrix, row major.
struct RatMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> data;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

  Rat& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
  }
};

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
  if (static_cast<int>(v.size()) != m.cols) throw DimensionError("mat_vec: size mismatch");
  RatVec r(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

}  // namespace loadprice
