#include "coxeter/linalg.hpp"

#include <sstream>

namespace coxeter {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("vector length mismatch");
}

}  // namespace

IntVector operator+(const IntVector& a, const IntVector& b) {
  require_same_size(a.size(), b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::add(a[i], b[i]);
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  require_same_size(a.size(), b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::sub(a[i], b[i]);
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::neg(a[i]);
  return r;
}

IntVector operator*(Int c, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::mul(c, a[i]);
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  require_same_size(a.size(), b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

Int max_abs(const IntVector& v) {
  Int m = 0;
  for (Int x : v) m = std::max(m, checked::abs(x));
  return m;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size());
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size());
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator*(const Rational& c, const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rational dot(const IntVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  require_same_size(a.size(), b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim) {
  if (dim > kMaxRank) throw std::length_error("matrix dimension exceeds kMaxRank");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("matrix must be square");
    std::size_t c = 0;
    for (Int x : row) (*this)(r, c++) = x;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  IntVector v(dim_);
  for (std::size_t c = 0; c < dim_; ++c) v[c] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool IntMatrix::is_identity() const { return *this == identity(dim_); }

Int IntMatrix::determinant() const {
  const auto& m = *this;
  switch (dim_) {
    case 0:
      return 1;
    case 1:
      return m(0, 0);
    case 2:
      return checked::sub(checked::mul(m(0, 0), m(1, 1)), checked::mul(m(0, 1), m(1, 0)));
    default: {
      Int d = 0;
      for (std::size_t c = 0; c < 3; ++c) {
        Int minor = checked::sub(checked::mul(m(1, (c + 1) % 3), m(2, (c + 2) % 3)),
                                 checked::mul(m(1, (c + 2) % 3), m(2, (c + 1) % 3)));
        d = checked::add(d, checked::mul(m(0, c), minor));
      }
      return d;
    }
  }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t j = 0; j < a.dim_; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < a.dim_; ++k) s = checked::add(s, checked::mul(a(i, k), b(k, j)));
      r(i, j) = s;
    }
  }
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t j = 0; j < a.dim_; ++j) r(i, j) = checked::sub(a(i, j), b(i, j));
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t j = 0; j < a.dim_; ++j) r(i, j) = checked::add(a(i, j), b(i, j));
  return r;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  if (m.dim_ != v.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
  IntVector r(m.dim_);
  for (std::size_t i = 0; i < m.dim_; ++i) {
    Int s = 0;
    for (std::size_t k = 0; k < m.dim_; ++k) s = checked::add(s, checked::mul(m(i, k), v[k]));
    r[i] = s;
  }
  return r;
}

RatVector operator*(const IntMatrix& m, const RatVector& v) {
  if (m.dim_ != v.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
  RatVector r(m.dim_);
  for (std::size_t i = 0; i < m.dim_; ++i) {
    Rational s;
    for (std::size_t k = 0; k < m.dim_; ++k) s += Rational(m(i, k)) * v[k];
    r[i] = s;
  }
  return r;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j);
  }
  os << "]";
  return os.str();
}

}  // namespace coxeter
