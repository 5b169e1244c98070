#pragma once

namespace chiro {

// Column vector over any exact commutative-ring scalar (Rational, Poly3,
// mpz_class). Sign extraction is only meaningful for ordered scalars and
// lives with the scalar type, not here.
template <typename S>
struct Vec3 {
  S x{};
  S y{};
  S z{};

  bool operator==(const Vec3&) const = default;
};

template <typename S>
bool is_zero(const Vec3<S>& v) {
  return v == Vec3<S>{};
}

template <typename S>
Vec3<S> operator+(const Vec3<S>& a, const Vec3<S>& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

template <typename S>
Vec3<S> operator-(const Vec3<S>& a, const Vec3<S>& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

template <typename S>
Vec3<S> operator-(const Vec3<S>& a) {
  return {-a.x, -a.y, -a.z};
}

template <typename S>
Vec3<S> operator*(const S& c, const Vec3<S>& v) {
  return {c * v.x, c * v.y, c * v.z};
}

template <typename S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <typename S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Determinant of the 3x3 matrix with columns a, b, c.
template <typename S>
S det3(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  return a.x * (b.y * c.z - c.y * b.z) - b.x * (a.y * c.z - c.y * a.z) +
         c.x * (a.y * b.z - b.y * a.z);
}

}  // namespace chiro
