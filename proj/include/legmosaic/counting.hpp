#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "legmosaic/errors.hpp"

namespace legmosaic {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class CountVariant { legendrian, classical };

/// Dense square matrix of arbitrary-precision integers.
class BigMatrix {
 public:
  explicit BigMatrix(std::size_t n) : n_(n), data_(n * n) {}
  static BigMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  BigMatrix operator*(const BigMatrix& other) const;
  BigMatrix operator+(const BigMatrix& other) const;

  /// Matrix power by repeated squaring; p = 0 yields the identity.
  BigMatrix pow(unsigned p) const;

  /// Sum of all entries.
  BigInt entry_sum() const;

  /// Sum of all entries of (*this)^p, computed by iterated row-vector
  /// products (never materialises the power).
  BigInt power_entry_sum(unsigned p) const;

 private:
  std::size_t n_;
  std::vector<BigInt> data_;
};

/// The recursively defined state matrices. X_0 = O_0 = [1];
/// X_{k+1} = [[X_k, O_k], [O_k, X_k]] and O_{k+1} = [[O_k, X_k], [X_k, w O_k]]
/// with weight w = 3 for the Legendrian tile set and w = 4 for the classical
/// one (the extra crossing tile).
struct StateMatrices {
  BigMatrix x;
  BigMatrix o;
};

StateMatrices state_matrices(int k, CountVariant variant,
                             std::size_t dimension_cap = std::size_t(1) << 16);

struct MosaicCount {
  int m = 0;
  int n = 0;
  CountVariant variant = CountVariant::legendrian;
  BigInt value;
};

/// Number of suitably connected m x n mosaics. 1 when m = 1 or n = 1,
/// otherwise 2 * || (X_{m-2} + O_{m-2})^{n-2} ||. The count is symmetric in
/// (m, n) — flipping every crossing of a transposed mosaic is a bijection —
/// so the smaller dimension is used for the state-matrix index.
/// Throws ResourceLimit when 2^(min(m,n)-2) exceeds the dimension cap.
MosaicCount count(int m, int n, CountVariant variant = CountVariant::legendrian,
                  std::size_t dimension_cap = std::size_t(1) << 16);

/// As count(), but evaluating the formula with m as the matrix index and n as
/// the power, without exploiting symmetry. Used to verify the symmetry.
MosaicCount count_asymmetric(int m, int n, CountVariant variant,
                             std::size_t dimension_cap = std::size_t(1) << 16);

struct DeltaRatio {
  int n = 0;
  BigRational ratio;    // legendrian count / classical count, exact
  std::string ln_text;  // natural log of the ratio, decimal
};

/// delta(n): the fraction of classical n-mosaics that are Legendrian.
/// `digits` controls the precision of the printed logarithm.
DeltaRatio ratio_delta(int n, unsigned digits = 30,
                       std::size_t dimension_cap = std::size_t(1) << 16);

/// Natural log of a positive big integer, printed to `digits` significant
/// digits.
std::string big_ln(const BigInt& value, unsigned digits = 30);

/// Lower-triangular table: every (m, n) with 1 <= n <= m <= max_m and
/// n <= max_n.
std::vector<MosaicCount> count_table(int max_m, int max_n,
                                     CountVariant variant = CountVariant::legendrian,
                                     std::size_t dimension_cap = std::size_t(1) << 16);

}  // namespace legmosaic
