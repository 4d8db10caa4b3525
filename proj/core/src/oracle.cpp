#include "acsv/oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "acsv/bigfloat.hpp"

namespace acsv {

namespace {

// Mixed-radix index of a box [0, ext_0) x ... x [0, ext_{d-1}).
struct Box {
  std::vector<std::size_t> extent;
  std::vector<std::size_t> stride;

  explicit Box(std::vector<std::size_t> ext) : extent(std::move(ext)), stride(extent.size()) {
    std::size_t s = 1;
    for (std::size_t j = extent.size(); j-- > 0;) {
      stride[j] = s;
      s *= extent[j];
    }
  }
  std::size_t size() const { return extent.empty() ? 1 : stride[0] * extent[0]; }
};

struct Sparse {
  std::vector<std::vector<unsigned>> exps;
  std::vector<Rational> coeffs;
};

Sparse sparse_of(const Polynomial& p, const Box& box, bool drop_constant) {
  Sparse s;
  for (const auto& t : p.terms()) {
    if (drop_constant && t.monomial.is_one()) continue;
    std::vector<unsigned> e(box.extent.size());
    bool inside = true;
    for (std::size_t j = 0; j < e.size(); ++j) {
      e[j] = t.monomial[j];
      if (e[j] >= box.extent[j]) inside = false;
    }
    if (!inside) continue;
    s.exps.push_back(std::move(e));
    s.coeffs.push_back(t.coefficient);
  }
  return s;
}

double log_abs(const Rational& q) {
  BigFloat x(q, 64);
  return log(abs(x)).to_double();
}

}  // namespace

std::vector<Rational> coefficients(const SeriesRequest& req) {
  const auto& r = req.direction.r();
  const std::size_t d = req.denominator.nvars();
  if (req.numerator.nvars() != d || r.size() != d) {
    throw std::invalid_argument("series: arity mismatch");
  }
  if (!req.direction.nonnegative()) {
    throw std::invalid_argument("series: direction must be nonnegative");
  }
  Rational q0 = req.denominator.constant_term();
  if (q0 == 0) throw std::domain_error("series: Q(0) = 0, no power series at the origin");
  long rmax = 0;
  for (long v : r) rmax = std::max(rmax, v);
  if (static_cast<long>(req.count) * rmax > req.degree_cap) {
    throw std::invalid_argument("series: degree cap exceeded");
  }

  std::vector<std::size_t> ext(d);
  for (std::size_t j = 0; j < d; ++j) ext[j] = req.count * static_cast<std::size_t>(r[j]) + 1;
  Box box(ext);
  Sparse num = sparse_of(req.numerator, box, false);
  Sparse den = sparse_of(req.denominator, box, true);

  std::vector<Rational> a(box.size());
  for (std::size_t i = 0; i < num.exps.size(); ++i) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < d; ++j) idx += num.exps[i][j] * box.stride[j];
    a[idx] = num.coeffs[i];
  }

  // Row-major order visits every m - k before m.
  std::vector<std::size_t> m(d, 0);
  Rational inv = 1 / q0;
  Rational acc;
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    acc = a[idx];
    for (std::size_t t = 0; t < den.exps.size(); ++t) {
      const auto& e = den.exps[t];
      std::size_t off = 0;
      bool ok = true;
      for (std::size_t j = 0; j < d; ++j) {
        if (e[j] > m[j]) {
          ok = false;
          break;
        }
        off += e[j] * box.stride[j];
      }
      if (!ok) continue;
      const Rational& prev = a[idx - off];
      if (prev != 0) acc -= den.coeffs[t] * prev;
    }
    a[idx] = acc * inv;
    for (std::size_t j = d; j-- > 0;) {
      if (++m[j] < box.extent[j]) break;
      m[j] = 0;
    }
  }

  std::vector<Rational> out;
  out.reserve(req.count + 1);
  for (std::size_t n = 0; n <= req.count; ++n) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < d; ++j) idx += n * static_cast<std::size_t>(r[j]) * box.stride[j];
    out.push_back(a[idx]);
  }
  return out;
}

GrowthEstimate growth_estimate(std::span<const Rational> values) {
  const std::size_t n = values.size();
  std::vector<std::array<double, 3>> rows;
  std::vector<double> rhs;
  for (std::size_t i = n / 2; i < n; ++i) {
    if (i == 0 || values[i] == 0) continue;
    double x = static_cast<double>(i);
    rows.push_back({1.0, x, std::log(x)});
    rhs.push_back(log_abs(values[i]));
  }
  if (rows.empty()) return {0, 0, true};
  if (rows.size() < 8) throw std::invalid_argument("growth_estimate: need 8 nonzero tail values");

  // Normal equations, solved by Gaussian elimination with partial pivoting.
  std::array<std::array<long double, 4>, 3> m{};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m[i][j] += static_cast<long double>(rows[k][i]) * rows[k][j];
      m[i][3] += static_cast<long double>(rows[k][i]) * rhs[k];
    }
  }
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int i = c + 1; i < 3; ++i) {
      if (std::fabs(m[i][c]) > std::fabs(m[piv][c])) piv = i;
    }
    std::swap(m[c], m[piv]);
    for (int i = 0; i < 3; ++i) {
      if (i == c) continue;
      long double f = m[i][c] / m[c][c];
      for (int j = c; j < 4; ++j) m[i][j] -= f * m[c][j];
    }
  }
  double slope = static_cast<double>(m[1][3] / m[1][1]);
  double order = static_cast<double>(m[2][3] / m[2][2]);
  return {std::exp(slope), order, false};
}

}  // namespace acsv
