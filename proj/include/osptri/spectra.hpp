#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "osptri/liedata.hpp"

namespace osptri {

enum class SimpleKind { so_odd, sp };
enum class SingObject { affine, principal_W };

/// Vector in the epsilon coordinates; for sp every root and weight carries
/// an overall factor sqrt(2) (or 1/sqrt(2)), absorbed into the form scale.
struct EpsVec {
  std::vector<BigRat> q;
};

/// Root data of so_{2n+1} or sp_{2n} embedded in R^d, d = max(n, 2).
///
/// The Weyl vector and covector are filled by their index pattern in every
/// slot (rho_i = (2n-2i+1)/2 for so, (n-i+1) / sqrt(2) for sp, and so on),
/// which keeps the inner-product table valid at n = 1 where the highest root
/// formula eps_1 + eps_2 needs a second coordinate.
struct RootSystemData {
  SimpleKind kind = SimpleKind::so_odd;
  long n = 1;
  /// Bilinear form (x, y) = scale * sum x_i y_i in the stored coordinates.
  BigRat scale;
  EpsVec theta, theta_check, theta_s, theta_s_check, rho, rho_check;
  std::vector<EpsVec> simple_roots;
  long lacity = 2;
  long coxeter = 0;
  long dual_coxeter = 0;

  BigRat ip(const EpsVec& a, const EpsVec& b) const {
    BigRat acc(0);
    for (std::size_t i = 0; i < a.q.size(); ++i) acc += a.q[i] * b.q[i];
    return acc * scale;
  }
};

namespace detail {

inline EpsVec eps_vec(std::size_t d, std::initializer_list<std::pair<std::size_t, BigRat>> entries) {
  EpsVec v{std::vector<BigRat>(d, BigRat(0))};
  for (const auto& [i, x] : entries) v.q[i] = x;
  return v;
}

inline EpsVec scaled(const EpsVec& v, const BigRat& s) {
  EpsVec out = v;
  for (auto& x : out.q) x *= s;
  return out;
}

inline EpsVec added(const EpsVec& a, const EpsVec& b) {
  EpsVec out = a;
  for (std::size_t i = 0; i < out.q.size(); ++i) out.q[i] += b.q[i];
  return out;
}

}  // namespace detail

inline RootSystemData root_system(SimpleKind kind, long n) {
  if (n < 1) throw DomainError("root_system needs n >= 1");
  const std::size_t d = static_cast<std::size_t>(std::max<long>(n, 2));
  using detail::eps_vec;
  RootSystemData R;
  R.kind = kind;
  R.n = n;
  R.lacity = 2;
  R.rho.q.assign(d, BigRat(0));
  R.rho_check.q.assign(d, BigRat(0));
  if (kind == SimpleKind::so_odd) {
    R.scale = BigRat(1);
    R.theta = eps_vec(d, {{0, BigRat(1)}, {1, BigRat(1)}});
    R.theta_check = R.theta;
    R.theta_s = eps_vec(d, {{0, BigRat(1)}});
    R.theta_s_check = eps_vec(d, {{0, BigRat(2)}});
    for (std::size_t i = 0; i < d; ++i) {
      long idx = static_cast<long>(i) + 1;
      R.rho.q[i] = BigRat(2 * n - 2 * idx + 1, 2);
      R.rho_check.q[i] = BigRat(n - idx + 1);
    }
    for (long i = 0; i + 1 < n; ++i)
      R.simple_roots.push_back(eps_vec(d, {{static_cast<std::size_t>(i), BigRat(1)}, {static_cast<std::size_t>(i + 1), BigRat(-1)}}));
    R.simple_roots.push_back(eps_vec(d, {{static_cast<std::size_t>(n - 1), BigRat(1)}}));
    R.coxeter = 2 * n;
    R.dual_coxeter = 2 * n - 1;
  } else {
    // Coordinates in units of 1/sqrt(2): a stored vector x means x / sqrt(2),
    // so the form scale is 1/2.
    R.scale = BigRat(1, 2);
    R.theta = eps_vec(d, {{0, BigRat(2)}});
    R.theta_check = R.theta;
    R.theta_s = eps_vec(d, {{0, BigRat(1)}, {1, BigRat(1)}});
    R.theta_s_check = eps_vec(d, {{0, BigRat(2)}, {1, BigRat(2)}});
    for (std::size_t i = 0; i < d; ++i) {
      long idx = static_cast<long>(i) + 1;
      R.rho.q[i] = BigRat(n - idx + 1);
      R.rho_check.q[i] = BigRat(2 * n - 2 * idx + 1);
    }
    for (long i = 0; i + 1 < n; ++i)
      R.simple_roots.push_back(eps_vec(d, {{static_cast<std::size_t>(i), BigRat(1)}, {static_cast<std::size_t>(i + 1), BigRat(-1)}}));
    R.simple_roots.push_back(eps_vec(d, {{static_cast<std::size_t>(n - 1), BigRat(2)}}));
    R.coxeter = 2 * n;
    R.dual_coxeter = n + 1;
  }
  return R;
}

namespace detail {

inline void check_sing_args(long n, long u, long v) {
  if (n < 1) throw DomainError("singular weights need n >= 1");
  if (u < 1 || v < 1) throw DomainError("singular weights need positive u, v");
  if (std::gcd(u, v) != 1) throw DomainError("singular weights need gcd(u, v) = 1");
}

}  // namespace detail

/// Weight of the lowest singular vector from the general formula at level
/// k = -h^vee + u/v: alpha = -theta when gcd(v, r^vee) = 1 and -theta_s when
/// it equals r^vee, lambda = -(u / gcd(v, r^vee)) alpha^vee - (rho, alpha^vee)
/// alpha, Sing V = (v/2u)(lambda, lambda + 2 rho), Sing W = Sing V - (lambda,
/// rho^vee).
inline BigRat sing_weight_general(SimpleKind kind, SingObject obj, long n, long u, long v) {
  detail::check_sing_args(n, u, v);
  RootSystemData R = root_system(kind, n);
  long g = std::gcd(v, R.lacity);
  EpsVec alpha = detail::scaled(g == 1 ? R.theta : R.theta_s, BigRat(-1));
  EpsVec alpha_check = detail::scaled(g == 1 ? R.theta_check : R.theta_s_check, BigRat(-1));
  EpsVec lambda = detail::added(detail::scaled(alpha_check, -BigRat(u, g)), detail::scaled(alpha, -R.ip(R.rho, alpha_check)));
  EpsVec shifted = detail::added(lambda, detail::scaled(R.rho, BigRat(2)));
  BigRat sing = BigRat(v, 2 * u) * R.ip(lambda, shifted);
  if (obj == SingObject::principal_W) sing -= R.ip(lambda, R.rho_check);
  return sing;
}

/// The four closed forms for sp_{2n} and so_{2n+1}, split by the parity of v.
inline BigRat sing_weight_closed(SimpleKind kind, SingObject obj, long n, long u, long v) {
  detail::check_sing_args(n, u, v);
  const bool odd = v % 2 == 1;
  if (kind == SimpleKind::sp && obj == SingObject::affine)
    return odd ? BigRat(v * (u - n)) : BigRat(v, 2) * BigRat(u - 2 * n + 1);
  if (kind == SimpleKind::so_odd && obj == SingObject::affine)
    return odd ? BigRat(v * (u - 2 * n + 2)) : BigRat(v, 2) * BigRat(u - 2 * n + 1);
  if (kind == SimpleKind::sp)
    return odd ? BigRat((v - 2 * n + 1) * (u - n)) : (BigRat(v, 2) - BigRat(2 * n - 2)) * BigRat(u - 2 * n + 1);
  return odd ? BigRat((v - 2 * n + 1) * (u - 2 * n + 2)) : (BigRat(v, 2) - BigRat(n)) * BigRat(u - 2 * n + 1);
}

/// Largest weight 2N in the minimal strong generating type W(2, 4, ..., 2N)
/// of the coset family as a one-parameter vertex algebra.
inline long max_generator_weight(Family f, long n, long m) {
  if (n < 0 || m < 0) throw DomainError("max_generator_weight needs n, m >= 0");
  if (n + m < 1) throw DomainError("max_generator_weight needs n + m >= 1");
  switch (f) {
    case Family::F1C: return 2 * (1 + m) * (1 + n) - 2;
    case Family::F2B: return 4 * (m + 1) * (n + 1) - 2;
    case Family::F2C: return 2 * (1 + n) * (1 + m + n) - 2;
    case Family::F2D: return 2 * (m + 1) * (2 * n + 1) - 2;
    case Family::F1B: return 2 * (1 + n) * (3 + 2 * m + 2 * n) - 2;
    case Family::F1D: return 2 * (1 + m + n) * (1 + 2 * n) - 2;
    case Family::F1O: return 2 * (3 + 2 * m) * (1 + n) - 2;
    case Family::F2O: return 4 * (1 + n) * (1 + m + n) - 2;
  }
  return 0;
}

inline long max_generator_weight(const HookFamily& fam) {
  return max_generator_weight(fam.family(), fam.n_int(), fam.m_int());
}

}  // namespace osptri
