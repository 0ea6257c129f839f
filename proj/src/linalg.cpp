#include "superlie/linalg.hpp"

#include <stdexcept>

namespace superlie {

bool is_zero_vec(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec scaled(const Vec& v, const GaussScalar& c) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * c);
  return out;
}

void add_scaled(Vec& dst, const Vec& src, const GaussScalar& c) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k] * c;
}

Mat identity_mat(std::size_t n) {
  Mat out(n, Vec(n));
  for (std::size_t k = 0; k < n; ++k) out[k][k] = GaussScalar(1);
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Mat out(rows, Vec(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < cols; ++c) out[r][c] += a[r][k] * b[k][c];
    }
  return out;
}

Vec mat_vec(const Mat& a, const Vec& v) {
  Vec out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += a[r][c] * v[c];
  return out;
}

Mat kronecker(const Mat& a, const Mat& b) {
  const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  const std::size_t br = b.size(), bc = br ? b[0].size() : 0;
  Mat out(ar * br, Vec(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l)
          out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    }
  return out;
}

GaussScalar mat_trace(const Mat& a) {
  GaussScalar t;
  for (std::size_t k = 0; k < a.size(); ++k) t += a[k][k];
  return t;
}

bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

std::vector<std::size_t> rref(Mat& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const GaussScalar inv = GaussScalar(1) / rows[rank][col];
    rows[rank] = scaled(rows[rank], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      add_scaled(rows[r], rows[rank], -rows[r][col]);
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::optional<Mat> mat_inverse(Mat a) {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r].size() != n) throw std::invalid_argument("inverse of non-square matrix");
    a[r].resize(2 * n);
    a[r][n + r] = GaussScalar(1);
  }
  std::vector<std::size_t> pivots = rref(a);
  if (pivots.size() != n || (n && pivots.back() != n - 1)) return std::nullopt;
  Mat out(n, Vec(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r][c] = a[r][n + c];
  return out;
}

}  // namespace superlie
