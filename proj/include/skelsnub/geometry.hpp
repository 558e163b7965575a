#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace skelsnub {

struct Vector3 {
  double x = 0, y = 0, z = 0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vector3 operator+(Vector3 a, Vector3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vector3 operator-(Vector3 a, Vector3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vector3 operator-(Vector3 a) { return {-a.x, -a.y, -a.z}; }
inline Vector3 operator*(double s, Vector3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vector3 operator*(Vector3 a, double s) { return s * a; }
inline Vector3 operator/(Vector3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline Vector3& operator+=(Vector3& a, Vector3 b) { return a = a + b; }
inline Vector3& operator-=(Vector3& a, Vector3 b) { return a = a - b; }

inline double dot(Vector3 a, Vector3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vector3 cross(Vector3 a, Vector3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vector3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Vector3 a, Vector3 b) { return norm(a - b); }
inline Vector3 normalized(Vector3 a) { return a / norm(a); }

// global point tolerance; SKELSNUB_TOL overrides the default
inline double& point_tolerance_ref() {
  static double tol = [] {
    if (const char* env = std::getenv("SKELSNUB_TOL")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0) return v;
    }
    return 1e-9;
  }();
  return tol;
}
inline double point_tolerance() { return point_tolerance_ref(); }
inline void set_point_tolerance(double t) { point_tolerance_ref() = t; }

inline bool approx_equal(Vector3 a, Vector3 b, double tol) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}
inline bool approx_equal(Vector3 a, Vector3 b) { return approx_equal(a, b, point_tolerance()); }

inline bool lex_less(Vector3 a, Vector3 b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

using Matrix3 = std::array<std::array<double, 3>, 3>;

inline Matrix3 identity_matrix() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

inline Vector3 operator*(const Matrix3& m, Vector3 v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

inline Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

inline Matrix3 transpose(const Matrix3& m) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

inline double determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline Matrix3 from_columns(Vector3 a, Vector3 b, Vector3 c) {
  return {{{a.x, b.x, c.x}, {a.y, b.y, c.y}, {a.z, b.z, c.z}}};
}

inline std::optional<Matrix3> inverse(const Matrix3& m) {
  double d = determinant(m);
  if (std::abs(d) < 1e-14) return std::nullopt;
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / d;
    }
  return r;
}

struct Isometry {
  Matrix3 linear = identity_matrix();
  Vector3 translation{};

  static Isometry identity() { return {}; }
};

inline Vector3 apply(const Isometry& g, Vector3 p) { return g.linear * p + g.translation; }

// compose(a, b)(p) == a(b(p))
inline Isometry compose(const Isometry& a, const Isometry& b) {
  return {a.linear * b.linear, a.linear * b.translation + a.translation};
}

inline Isometry inverse(const Isometry& g) {
  Matrix3 lt = transpose(g.linear);
  return {lt, -(lt * g.translation)};
}

inline double determinant(const Isometry& g) { return determinant(g.linear); }

inline bool approx_equal(const Isometry& a, const Isometry& b, double tol = 1e-9) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      if (std::abs(a.linear[i][j] - b.linear[i][j]) > tol) return false;
    if (std::abs(a.translation[i] - b.translation[i]) > tol) return false;
  }
  return true;
}

inline bool is_orthogonal(const Isometry& g, double tol = 1e-12) {
  Matrix3 p = transpose(g.linear) * g.linear;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(p[i][j] - (i == j ? 1.0 : 0.0)) > tol) return false;
  return true;
}

inline bool fixes(const Isometry& g, Vector3 p, double tol) { return approx_equal(apply(g, p), p, tol); }
inline bool fixes(const Isometry& g, Vector3 p) { return fixes(g, p, point_tolerance()); }

inline std::optional<int> iso_order(const Isometry& g, int cap = 120) {
  Isometry acc = g;
  for (int k = 1; k <= cap; ++k) {
    if (approx_equal(acc, Isometry::identity())) return k;
    acc = compose(g, acc);
  }
  return std::nullopt;
}

inline Isometry power(const Isometry& g, int k) {
  Isometry acc;
  Isometry base = k < 0 ? inverse(g) : g;
  for (int i = 0; i < std::abs(k); ++i) acc = compose(base, acc);
  return acc;
}

struct FixedSet {
  enum class Kind { All, Plane, Line, Point, Empty };
  Kind kind = Kind::Empty;
  Vector3 anchor{};
  std::vector<Vector3> directions;  // orthonormal basis of the direction space
  bool orientation_reversing = false;
};

inline std::string to_string(FixedSet::Kind k) {
  switch (k) {
    case FixedSet::Kind::All: return "All";
    case FixedSet::Kind::Plane: return "Plane";
    case FixedSet::Kind::Line: return "Line";
    case FixedSet::Kind::Point: return "Point";
    case FixedSet::Kind::Empty: return "Empty";
  }
  return "?";
}

// solves (L - I) p = -t by elimination
inline FixedSet classify_fixed_set(const Isometry& g, double tol = 1e-9) {
  std::array<std::array<double, 4>, 3> a{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a[i][j] = g.linear[i][j] - (i == j ? 1.0 : 0.0);
    a[i][3] = -g.translation[i];
  }
  std::array<int, 3> pivot_col{-1, -1, -1};
  int row = 0;
  for (int col = 0; col < 3 && row < 3; ++col) {
    int best = row;
    for (int r = row + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
    if (std::abs(a[best][col]) <= tol) continue;
    std::swap(a[row], a[best]);
    for (int r = 0; r < 3; ++r) {
      if (r == row) continue;
      double f = a[r][col] / a[row][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col[row] = col;
    ++row;
  }
  const int rank = row;
  FixedSet out;
  out.orientation_reversing = determinant(g) < 0;
  for (int r = rank; r < 3; ++r)
    if (std::abs(a[r][3]) > tol) return out;  // inconsistent: no fixed point

  std::array<bool, 3> is_pivot{};
  Vector3 particular{};
  for (int r = 0; r < rank; ++r) {
    int c = pivot_col[r];
    is_pivot[c] = true;
    particular[c] = a[r][3] / a[r][c];
  }
  std::vector<Vector3> basis;
  for (int free = 0; free < 3; ++free) {
    if (is_pivot[free]) continue;
    Vector3 d{};
    d[free] = 1.0;
    for (int r = 0; r < rank; ++r) d[pivot_col[r]] = -a[r][free] / a[r][pivot_col[r]];
    basis.push_back(d);
  }
  // Gram-Schmidt
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) basis[i] -= dot(basis[i], basis[j]) * basis[j];
    basis[i] = normalized(basis[i]);
  }
  // anchor = point of the fixed set closest to the origin
  Vector3 anchor = particular;
  for (const auto& d : basis) anchor -= dot(anchor, d) * d;
  out.anchor = anchor;
  out.directions = basis;
  switch (rank) {
    case 0: out.kind = FixedSet::Kind::All; break;
    case 1: out.kind = FixedSet::Kind::Plane; break;
    case 2: out.kind = FixedSet::Kind::Line; break;
    default: out.kind = FixedSet::Kind::Point; break;
  }
  return out;
}

inline Vector3 project_onto(const FixedSet& fs, Vector3 p) {
  Vector3 rel = p - fs.anchor;
  Vector3 out = fs.anchor;
  for (const auto& d : fs.directions) out += dot(rel, d) * d;
  return out;
}

struct PointKey {
  std::array<std::int64_t, 3> q{};
  bool operator==(const PointKey& o) const { return q == o.q; }
};

struct PointKeyHash {
  std::size_t operator()(const PointKey& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k.q) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

inline PointKey canonical_key(Vector3 p, double grid = 1e-6) {
  return {{static_cast<std::int64_t>(std::floor(p.x / grid)), static_cast<std::int64_t>(std::floor(p.y / grid)),
           static_cast<std::int64_t>(std::floor(p.z / grid))}};
}

// grid buckets pick candidates; a tolerance test confirms
class PointIndex {
 public:
  explicit PointIndex(double tol = point_tolerance(), double grid = 1e-6)
      : tol_(tol), grid_(grid < 4 * tol ? 4 * tol : grid) {}

  std::optional<std::size_t> find(Vector3 p) const {
    return find_if(p, [&](std::size_t i) { return approx_equal(points_[i], p, tol_); });
  }

  template <class Pred>
  std::optional<std::size_t> find_if(Vector3 p, Pred&& pred) const {
    std::array<std::array<std::int64_t, 2>, 3> cells{};
    std::array<int, 3> counts{};
    for (int i = 0; i < 3; ++i) {
      auto lo = static_cast<std::int64_t>(std::floor((p[i] - tol_) / grid_));
      auto hi = static_cast<std::int64_t>(std::floor((p[i] + tol_) / grid_));
      cells[i][0] = lo;
      cells[i][1] = hi;
      counts[i] = lo == hi ? 1 : 2;
    }
    for (int a = 0; a < counts[0]; ++a)
      for (int b = 0; b < counts[1]; ++b)
        for (int c = 0; c < counts[2]; ++c) {
          PointKey k{{cells[0][a], cells[1][b], cells[2][c]}};
          auto it = buckets_.find(k);
          if (it == buckets_.end()) continue;
          for (auto idx : it->second)
            if (pred(idx)) return idx;
        }
    return std::nullopt;
  }

  // returns the index of p, inserting it if new
  std::size_t insert(Vector3 p) {
    if (auto found = find(p)) return *found;
    return push(p);
  }

  std::size_t push(Vector3 p) {
    points_.push_back(p);
    buckets_[canonical_key(p, grid_)].push_back(points_.size() - 1);
    return points_.size() - 1;
  }

  const std::vector<Vector3>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  double tol_;
  double grid_;
  std::vector<Vector3> points_;
  std::unordered_map<PointKey, std::vector<std::size_t>, PointKeyHash> buckets_;
};

}  // namespace skelsnub
