#include "tilecount/recurrence.hpp"

#include <sstream>

#include "tilecount/errors.hpp"

namespace tilecount {

namespace {

void check_recurrence(const LinearRecurrence& rec) {
  if (rec.order < 1) throw Error("recurrence order must be >= 1");
  if (rec.coeffs.size() != static_cast<std::size_t>(rec.order)) {
    throw Error("recurrence needs exactly `order` coefficients");
  }
  if (rec.initial.size() < static_cast<std::size_t>(rec.order)) {
    throw Error("recurrence needs at least `order` initial terms");
  }
  if (rec.valid_from !=
      rec.start_index + static_cast<long long>(rec.initial.size())) {
    throw Error("valid_from must equal start_index + #initial terms");
  }
}

void check_index(const LinearRecurrence& rec, long long n) {
  if (n < rec.start_index) {
    std::ostringstream os;
    os << "index " << n << " is before the sequence start " << rec.start_index;
    throw IndexBeforeStart(os.str());
  }
}

// Dense square matrix of exact integers, just big enough for companion
// powers.
class Matrix {
 public:
  explicit Matrix(int d) : d_(d), m_(1LL * d * d) {}

  int dim() const { return d_; }
  BigCount& at(int r, int c) { return m_[r * d_ + c]; }
  const BigCount& at(int r, int c) const { return m_[r * d_ + c]; }

  static Matrix identity(int d) {
    Matrix id(d);
    for (int i = 0; i < d; ++i) id.at(i, i) = 1;
    return id;
  }

  Matrix operator*(const Matrix& other) const {
    Matrix out(d_);
    for (int i = 0; i < d_; ++i) {
      for (int k = 0; k < d_; ++k) {
        const BigCount& aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < d_; ++j) {
          out.at(i, j) += aik * other.at(k, j);
        }
      }
    }
    return out;
  }

 private:
  int d_;
  std::vector<BigCount> m_;
};

Matrix matrix_power(Matrix base, long long e) {
  Matrix result = Matrix::identity(base.dim());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace

BigCount eval_linear_recurrence(const LinearRecurrence& rec, long long n) {
  check_recurrence(rec);
  check_index(rec, n);
  if (n < rec.valid_from) return rec.initial[n - rec.start_index];
  // window[j] = a(i - 1 - j) while computing a(i).
  std::vector<BigCount> window(rec.order);
  for (int j = 0; j < rec.order; ++j) {
    window[j] = rec.initial[rec.initial.size() - 1 - j];
  }
  BigCount value;
  for (long long i = rec.valid_from; i <= n; ++i) {
    value = 0;
    for (int j = 0; j < rec.order; ++j) value += rec.coeffs[j] * window[j];
    for (int j = rec.order - 1; j > 0; --j) window[j] = std::move(window[j - 1]);
    window[0] = value;
  }
  return window[0];
}

std::vector<BigCount> recurrence_prefix(const LinearRecurrence& rec, long long upto) {
  check_recurrence(rec);
  check_index(rec, upto);
  std::vector<BigCount> out;
  out.reserve(upto - rec.start_index + 1);
  for (long long i = rec.start_index; i <= upto && i < rec.valid_from; ++i) {
    out.push_back(rec.initial[i - rec.start_index]);
  }
  for (long long i = rec.valid_from; i <= upto; ++i) {
    BigCount value = 0;
    for (int j = 0; j < rec.order; ++j) {
      value += rec.coeffs[j] * out[out.size() - 1 - j];
    }
    out.push_back(std::move(value));
  }
  return out;
}

BigCount companion_matrix_term(const LinearRecurrence& rec, long long n) {
  check_recurrence(rec);
  check_index(rec, n);
  if (n < rec.valid_from) return rec.initial[n - rec.start_index];
  const int d = rec.order;
  Matrix m(d);
  for (int j = 0; j < d; ++j) m.at(0, j) = rec.coeffs[j];
  for (int i = 1; i < d; ++i) m.at(i, i - 1) = 1;
  const Matrix p = matrix_power(m, n - rec.valid_from + 1);
  // window[j] = a(valid_from - 1 - j), the last `order` known terms.
  BigCount result = 0;
  for (int j = 0; j < d; ++j) {
    result += p.at(0, j) * rec.initial[rec.initial.size() - 1 - j];
  }
  return result;
}

}  // namespace tilecount
