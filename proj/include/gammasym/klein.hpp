#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace gammasym {

/// Klein four-group element. The two-bit encoding makes the group law XOR
/// and the characters sign-of-popcount, so both are branch-free.
enum class Klein : int { e = 0, a = 1, b = 2, c = 3 };

inline constexpr std::array<Klein, 4> kAllLabels{Klein::e, Klein::a, Klein::b,
                                                 Klein::c};
inline constexpr std::array<Klein, 3> kNonIdentityLabels{Klein::a, Klein::b,
                                                         Klein::c};

inline constexpr Klein klein_mul(Klein x, Klein y) {
  return static_cast<Klein>(static_cast<int>(x) ^ static_cast<int>(y));
}

/// Character value chi_gamma(sigma) in {+1, -1}. The table is the standard
/// one for (Z/2)^2: chi_gamma(sigma) = (-1)^(popcount(gamma & sigma)).
inline constexpr int klein_chi(Klein gamma, Klein sigma) {
  int bits = static_cast<int>(gamma) & static_cast<int>(sigma);
  bits = (bits & 1) ^ (bits >> 1);
  return bits ? -1 : 1;
}

inline std::string klein_name(Klein g) {
  switch (g) {
    case Klein::e: return "e";
    case Klein::a: return "a";
    case Klein::b: return "b";
    case Klein::c: return "c";
  }
  throw std::logic_error("invalid Klein label");
}

inline Klein klein_from_name(const std::string& name) {
  if (name == "e") return Klein::e;
  if (name == "a") return Klein::a;
  if (name == "b") return Klein::b;
  if (name == "c") return Klein::c;
  throw std::invalid_argument("invalid Klein label name: '" + name + "'");
}

}  // namespace gammasym
