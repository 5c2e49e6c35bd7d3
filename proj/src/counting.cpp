#include "legmosaic/counting.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <iomanip>
#include <sstream>

namespace legmosaic {

namespace {
using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<60>>;
}

BigMatrix BigMatrix::identity(std::size_t n) {
  BigMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::operator*(const BigMatrix& other) const {
  BigMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t k = 0; k < n_; ++k) {
      const BigInt& a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < n_; ++c) out.at(r, c) += a * other.at(k, c);
    }
  }
  return out;
}

BigMatrix BigMatrix::operator+(const BigMatrix& other) const {
  BigMatrix out(n_);
  for (std::size_t i = 0; i < n_ * n_; ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

BigMatrix BigMatrix::pow(unsigned p) const {
  BigMatrix result = identity(n_);
  BigMatrix base = *this;
  while (p > 0) {
    if (p & 1u) result = result * base;
    base = base * base;
    p >>= 1u;
  }
  return result;
}

BigInt BigMatrix::entry_sum() const {
  BigInt s = 0;
  for (const BigInt& v : data_) s += v;
  return s;
}

BigInt BigMatrix::power_entry_sum(unsigned p) const {
  std::vector<BigInt> row(n_, 1);  // all-ones row vector
  for (unsigned step = 0; step < p; ++step) {
    std::vector<BigInt> next(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      const BigInt& a = row[r];
      if (a == 0) continue;
      for (std::size_t c = 0; c < n_; ++c) next[c] += a * at(r, c);
    }
    row = std::move(next);
  }
  BigInt s = 0;
  for (const BigInt& v : row) s += v;
  return s;
}

StateMatrices state_matrices(int k, CountVariant variant,
                             std::size_t dimension_cap) {
  if (k < 0) throw domain_error("DomainError", "state matrix index must be >= 0");
  if (k >= 62 || (std::size_t(1) << k) > dimension_cap)
    throw resource_error("ResourceLimit",
                         "state matrix dimension 2^" + std::to_string(k) +
                             " exceeds the configured cap");
  const int weight = variant == CountVariant::legendrian ? 3 : 4;
  BigMatrix x(1), o(1);
  x.at(0, 0) = 1;
  o.at(0, 0) = 1;
  for (int step = 0; step < k; ++step) {
    std::size_t n = x.size();
    BigMatrix nx(2 * n), no(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        nx.at(r, c) = x.at(r, c);
        nx.at(r, c + n) = o.at(r, c);
        nx.at(r + n, c) = o.at(r, c);
        nx.at(r + n, c + n) = x.at(r, c);
        no.at(r, c) = o.at(r, c);
        no.at(r, c + n) = x.at(r, c);
        no.at(r + n, c) = x.at(r, c);
        no.at(r + n, c + n) = weight * o.at(r, c);
      }
    }
    x = std::move(nx);
    o = std::move(no);
  }
  return {std::move(x), std::move(o)};
}

namespace {

MosaicCount count_impl(int m, int n, int matrix_index_dim, int power_dim,
                       CountVariant variant, std::size_t dimension_cap) {
  MosaicCount out;
  out.m = m;
  out.n = n;
  out.variant = variant;
  if (m < 1 || n < 1)
    throw domain_error("DomainError", "mosaic dimensions must be positive");
  if (m == 1 || n == 1) {
    out.value = 1;  // a suitably connected single row or column is all blank
    return out;
  }
  StateMatrices sm = state_matrices(matrix_index_dim - 2, variant, dimension_cap);
  BigMatrix total = sm.x + sm.o;
  out.value = 2 * total.power_entry_sum(static_cast<unsigned>(power_dim - 2));
  return out;
}

}  // namespace

MosaicCount count(int m, int n, CountVariant variant, std::size_t dimension_cap) {
  int lo = std::min(m, n), hi = std::max(m, n);
  return count_impl(m, n, lo, hi, variant, dimension_cap);
}

MosaicCount count_asymmetric(int m, int n, CountVariant variant,
                             std::size_t dimension_cap) {
  return count_impl(m, n, m, n, variant, dimension_cap);
}

std::string big_ln(const BigInt& value, unsigned digits) {
  if (value <= 0)
    throw domain_error("DomainError", "logarithm of a non-positive count");
  Dec d(value);
  Dec l = log(d);
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(digits)) << l;
  return os.str();
}

DeltaRatio ratio_delta(int n, unsigned digits, std::size_t dimension_cap) {
  DeltaRatio out;
  out.n = n;
  BigInt leg = count(n, n, CountVariant::legendrian, dimension_cap).value;
  BigInt cla = count(n, n, CountVariant::classical, dimension_cap).value;
  out.ratio = BigRational(leg, cla);
  Dec l = log(Dec(leg)) - log(Dec(cla));
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(digits)) << l;
  out.ln_text = os.str();
  return out;
}

std::vector<MosaicCount> count_table(int max_m, int max_n, CountVariant variant,
                                     std::size_t dimension_cap) {
  if (max_m < 1 || max_n < 1)
    throw domain_error("DomainError", "table bounds must be positive");
  std::vector<MosaicCount> table;
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= m && n <= max_n; ++n)
      table.push_back(count(m, n, variant, dimension_cap));
  return table;
}

}  // namespace legmosaic
