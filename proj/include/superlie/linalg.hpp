#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superlie/scalar.hpp"

namespace superlie {

using Vec = std::vector<GaussScalar>;
using Mat = std::vector<Vec>;  // row-major, rectangular

bool is_zero_vec(const Vec& v);
Vec zero_vec(std::size_t n);
Vec scaled(const Vec& v, const GaussScalar& c);
void add_scaled(Vec& dst, const Vec& src, const GaussScalar& c);

Mat identity_mat(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& v);
Mat kronecker(const Mat& a, const Mat& b);
GaussScalar mat_trace(const Mat& a);
bool mat_equal(const Mat& a, const Mat& b);

/// In-place reduced row echelon form; returns the pivot column of each
/// surviving row and drops zero rows. The result is the unique RREF, so two
/// spans are equal iff their reduced rows are.
std::vector<std::size_t> rref(Mat& rows);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<Mat> mat_inverse(Mat a);

}  // namespace superlie
