#ifndef ISOTORI_LINALG_HPP
#define ISOTORI_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "isotori/rational.hpp"

namespace isotori {

using RatVec = std::vector<Rat>;

// Dense rational matrix. Zero rows and/or zero columns are legal values;
// the 0x0 matrix is its own inverse.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatVec row(std::size_t r) const;
  RatMat transposed() const;

  bool operator==(const RatMat& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

RatMat operator*(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& m, const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);

// Dimension of the row span over Q. For rational rows this coincides with
// the rank of the generated additive group, so it decides integer-rank
// conditions as well. Deterministic first-nonzero pivoting.
std::size_t rank(const RatMat& m);

// Exact solution of A x = b for possibly overdetermined A (n x l, n >= l
// or any shape). Free variables are set to zero, which makes the returned
// solution deterministic. nullopt means the system is inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// Exact inverse via Gauss-Jordan. nullopt on a singular input.
std::optional<RatMat> inverse(const RatMat& m);

}  // namespace isotori

#endif
