#include "tilecount/closed_form.hpp"

#include <cmath>
#include <numbers>

#include "tilecount/errors.hpp"

namespace tilecount {

namespace {

// x^e for signed e; x must be nonzero when e < 0.
double pow_signed(double x, long long e) {
  if (e < 0) return 1.0 / pow_signed(x, -e);
  double out = 1.0;
  while (e > 0) {
    if (e & 1) out *= x;
    x *= x;
    e >>= 1;
  }
  return out;
}

}  // namespace

std::vector<double> fit_coefficients(
    const std::vector<double>& roots,
    const std::vector<std::pair<long long, double>>& initial) {
  const std::size_t d = roots.size();
  if (initial.size() != d || d == 0) {
    throw Error("fit needs exactly one initial value per root");
  }
  // Row per initial value: sum_j roots[j]^index * coeff[j] = value.
  std::vector<std::vector<double>> a(d, std::vector<double>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a[i][j] = pow_signed(roots[j], initial[i].first);
    }
    a[i][d] = initial[i].second;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < d; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    if (std::fabs(a[pivot][col]) < 1e-12) {
      throw SingularSystem("root system is singular (coincident roots?)");
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= d; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> coeffs(d);
  for (std::size_t i = 0; i < d; ++i) coeffs[i] = a[i][d] / a[i][i];
  return coeffs;
}

ClosedFormSpec closed_form_spec_2xm() {
  const double s5 = std::sqrt(5.0);
  const std::vector<double> roots = {(1 + s5) / 2, (1 - s5) / 2};
  return {FamilySpec{FamilyKind::Domino2xM, 0}, roots,
          fit_coefficients(roots, {{1, 1.0}, {2, 2.0}}), 1};
}

ClosedFormSpec closed_form_spec_3xm() {
  // Over the nonzero subsequence b(j) = count at width 2j.
  const double s3 = std::sqrt(3.0);
  const std::vector<double> roots = {2 + s3, 2 - s3};
  return {FamilySpec{FamilyKind::Domino3xM, 0}, roots,
          fit_coefficients(roots, {{1, 3.0}, {2, 11.0}}), 2};
}

ClosedFormSpec closed_form_spec_4xm() {
  // Quartic roots (1 +- sqrt(29) +- A_or_B) / 4 where A = P + Q and
  // B = P - Q for P = sqrt(7 + 2 sqrt 5), Q = sqrt(7 - 2 sqrt 5). The
  // coefficients are fitted against exact terms rather than transcribed.
  const double s29 = std::sqrt(29.0);
  const double p = std::sqrt(7 + 2 * std::sqrt(5.0));
  const double q = std::sqrt(7 - 2 * std::sqrt(5.0));
  const double big_a = p + q;
  const double big_b = p - q;
  const std::vector<double> roots = {
      (1 + s29 + big_a) / 4,
      (1 + s29 - big_a) / 4,
      (1 - s29 + big_b) / 4,
      (1 - s29 - big_b) / 4,
  };
  return {FamilySpec{FamilyKind::Domino4xM, 0}, roots,
          fit_coefficients(roots, {{-1, 0.0}, {0, 1.0}, {1, 1.0}, {2, 5.0}}), 1};
}

double eval_closed_form(const ClosedFormSpec& spec, long long m) {
  if (m % spec.subsequence_step != 0) return 0.0;
  const long long idx = m / spec.subsequence_step;
  double out = 0.0;
  for (std::size_t i = 0; i < spec.roots.size(); ++i) {
    out += spec.coeffs[i] * pow_signed(spec.roots[i], idx);
  }
  return out;
}

double closed_form_2xm(long long m) {
  if (m < 1) throw Error("width must be >= 1");
  static const ClosedFormSpec spec = closed_form_spec_2xm();
  return eval_closed_form(spec, m);
}

double closed_form_3xm(long long m) {
  if (m < 1) throw Error("width must be >= 1");
  static const ClosedFormSpec spec = closed_form_spec_3xm();
  return eval_closed_form(spec, m);
}

double closed_form_4xm(long long m) {
  if (m < 1) throw Error("width must be >= 1");
  static const ClosedFormSpec spec = closed_form_spec_4xm();
  return eval_closed_form(spec, m);
}

double kasteleyn_count(int m, int n) {
  if (m < 1 || n < 1) throw Error("board sides must be >= 1");
  double product = 1.0;
  for (int j = 1; j <= m; ++j) {
    // cos(pi*j/(m+1)) vanishes exactly at 2j = m+1; forcing it avoids a
    // tiny nonzero residue that would survive the fourth-root product.
    const double cj =
        2 * j == m + 1 ? 0.0 : 2.0 * std::cos(std::numbers::pi * j / (m + 1));
    for (int k = 1; k <= n; ++k) {
      const double ck =
          2 * k == n + 1 ? 0.0 : 2.0 * std::cos(std::numbers::pi * k / (n + 1));
      product *= std::pow(cj * cj + ck * ck, 0.25);
    }
  }
  return product;
}

}  // namespace tilecount
