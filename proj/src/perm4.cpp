#include "twkit/perm4.hpp"

#include "twkit/error.hpp"

namespace twkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AlreadyGlued: return "AlreadyGlued";
    case ErrorKind::PermFacetMismatch: return "PermFacetMismatch";
    case ErrorKind::SelfIdentity: return "SelfIdentity";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::RepeatedLabel: return "RepeatedLabel";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::ClosedManifold: return "ClosedManifold";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotFourRegular: return "NotFourRegular";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::NotBoundaryEdge: return "NotBoundaryEdge";
    case ErrorKind::EdgeOnBoundaryOfSurface: return "EdgeOnBoundaryOfSurface";
    case ErrorKind::BadR: return "BadR";
    case ErrorKind::BadGenus: return "BadGenus";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::SiteExhausted: return "SiteExhausted";
    case ErrorKind::NonSimplicialClosure: return "NonSimplicialClosure";
    case ErrorKind::BadFlipIndex: return "BadFlipIndex";
    case ErrorKind::BadK: return "BadK";
  }
  return "Unknown";
}

Perm4 Perm4::from_images(const std::array<int, 4>& images) {
  int seen = 0;
  for (int v : images) {
    if (v < 0 || v > 3 || (seen & (1 << v)))
      throw Error(ErrorKind::MalformedSpec, "not a permutation of {0,1,2,3}");
    seen |= 1 << v;
  }
  return Perm4(images[0], images[1], images[2], images[3]);
}

Perm4 Perm4::operator*(const Perm4& other) const {
  return Perm4((*this)[other[0]], (*this)[other[1]], (*this)[other[2]], (*this)[other[3]]);
}

Perm4 Perm4::inverse() const {
  std::array<int, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>((*this)[i])] = i;
  return Perm4(inv[0], inv[1], inv[2], inv[3]);
}

int Perm4::sign() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if ((*this)[i] > (*this)[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::string Perm4::str() const {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + (*this)[i]);
  return s;
}

Perm4 transposition(int a, int b) {
  std::array<int, 4> img{0, 1, 2, 3};
  std::swap(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]);
  return Perm4(img[0], img[1], img[2], img[3]);
}

}  // namespace twkit
