#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace twkit {

/// A permutation of the vertex labels {0,1,2,3} of a tetrahedron.
class Perm4 {
 public:
  constexpr Perm4() : images_{0, 1, 2, 3} {}
  constexpr Perm4(int a, int b, int c, int d)
      : images_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

  /// Builds from an image array; throws MalformedSpec unless it is a bijection.
  static Perm4 from_images(const std::array<int, 4>& images);

  constexpr int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }

  /// (*this * other)(i) = (*this)(other(i)).
  Perm4 operator*(const Perm4& other) const;
  Perm4 inverse() const;
  /// +1 for even permutations, -1 for odd.
  int sign() const;
  bool is_identity() const { return images_ == std::array<std::uint8_t, 4>{0, 1, 2, 3}; }

  /// The four images written without separators, e.g. "3120".
  std::string str() const;

  friend bool operator==(const Perm4&, const Perm4&) = default;
  friend auto operator<=>(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, 4> images_;
};

/// Transposition swapping a and b.
Perm4 transposition(int a, int b);

}  // namespace twkit
