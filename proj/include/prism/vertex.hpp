#pragma once

#include <compare>
#include <iosfwd>
#include <string>

namespace prism {

/// A vertex of Z_{n,s} in pair notation: `cycle` in {1,2}, `position` in {1..n}.
///
/// Values are normalized once, at construction: the first coordinate is
/// reduced mod 2 and the second mod n, so (0, j) is (2, j), (3, j) is (1, j)
/// and (i, n + 1) is (i, 1). Downstream code never re-normalizes.
class Vertex {
 public:
  Vertex(long long raw_cycle, long long raw_position, int n);

  int cycle() const noexcept { return cycle_; }
  int position() const noexcept { return position_; }

  // Row-major index into a 2n-vertex table: (cycle - 1) * n + position - 1.
  int index(int n) const noexcept { return (cycle_ - 1) * n + (position_ - 1); }
  static Vertex from_index(int index, int n);

  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  Vertex() = default;
  int cycle_ = 1;
  int position_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);

}  // namespace prism
