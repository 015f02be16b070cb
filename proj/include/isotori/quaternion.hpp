#ifndef ISOTORI_QUATERNION_HPP
#define ISOTORI_QUATERNION_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace isotori {

enum class Axis { I, J, K };

// Hamilton quaternion with double coefficients of 1, i, j, k.
struct Quat {
  double w = 0, x = 0, y = 0, z = 0;

  Quat conj() const { return {w, -x, -y, -z}; }
  double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
};

inline Quat operator+(const Quat& a, const Quat& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Quat operator-(const Quat& a, const Quat& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Quat operator-(const Quat& a) { return {-a.w, -a.x, -a.y, -a.z}; }
inline Quat operator*(double s, const Quat& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}

// Hamilton product: ij = k, jk = i, ki = j.
inline Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quat unit(Axis v) {
  switch (v) {
    case Axis::I: return {0, 1, 0, 0};
    case Axis::J: return {0, 0, 1, 0};
    default: return {0, 0, 0, 1};
  }
}

// cos(theta) + sin(theta) * axis
inline Quat exp_unit(Axis v, double theta) {
  return Quat{std::cos(theta), 0, 0, 0} + std::sin(theta) * unit(v);
}

using QuatVec = std::vector<Quat>;

inline QuatVec operator+(const QuatVec& a, const QuatVec& b) {
  QuatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}
inline QuatVec operator-(const QuatVec& a, const QuatVec& b) {
  QuatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}
inline QuatVec operator*(double s, const QuatVec& a) {
  QuatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

// sum_d x_d * conj(y_d)
inline Quat herm_inner(const QuatVec& x, const QuatVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("herm_inner: length mismatch");
  Quat s;
  for (std::size_t d = 0; d < x.size(); ++d) s = s + x[d] * y[d].conj();
  return s;
}

// I and J act by left multiplication, K by right multiplication.  The two
// phase factors of a torus component r e^{j(e,x)} e^{k(f,y)} sit on opposite
// sides, so the x-derivative is j.psi while the y-derivative is psi.k: only
// this mixed action makes J(H), K(H) and the fibre directions land in the
// tangent distribution (k does not commute past a j-exponential).
inline QuatVec apply_structure(Axis v, const QuatVec& x) {
  const Quat u = unit(v);
  QuatVec out(x.size());
  if (v == Axis::K)
    for (std::size_t d = 0; d < x.size(); ++d) out[d] = x[d] * u;
  else
    for (std::size_t d = 0; d < x.size(); ++d) out[d] = u * x[d];
  return out;
}

// <x,y> = g - wI i - wJ j - wK k, with each w_v = g(v(x), y) for the actions
// above: wI, wJ are the i/j-parts of sum x_d conj(y_d) (left structures), and
// wK is read off the mirror product sum conj(x_d) y_d (right structure).
struct FormValues {
  double g, wI, wJ, wK;
};

inline FormValues form_values(const QuatVec& x, const QuatVec& y) {
  const Quat h = herm_inner(x, y);
  double wK = 0;
  for (std::size_t d = 0; d < x.size(); ++d)
    wK += ((x[d] * unit(Axis::K)) * y[d].conj()).w;
  return {h.w, -h.x, -h.y, wK};
}

inline double real_inner(const QuatVec& x, const QuatVec& y) {
  return form_values(x, y).g;
}

inline double norm(const QuatVec& x) { return std::sqrt(real_inner(x, x)); }

}  // namespace isotori

#endif
