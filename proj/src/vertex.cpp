#include "prism/vertex.hpp"

#include <ostream>
#include <stdexcept>

namespace prism {

namespace {

long long wrap(long long raw, long long modulus) {
  long long r = (raw - 1) % modulus;
  if (r < 0) r += modulus;
  return r + 1;
}

}  // namespace

Vertex::Vertex(long long raw_cycle, long long raw_position, int n) {
  if (n < 1) throw std::invalid_argument("Vertex: n must be positive");
  cycle_ = static_cast<int>(wrap(raw_cycle, 2));
  position_ = static_cast<int>(wrap(raw_position, n));
}

Vertex Vertex::from_index(int index, int n) {
  if (n < 1 || index < 0 || index >= 2 * n) {
    throw std::out_of_range("Vertex::from_index: index out of range");
  }
  Vertex v;
  v.cycle_ = index / n + 1;
  v.position_ = index % n + 1;
  return v;
}

std::string Vertex::to_string() const {
  return "(" + std::to_string(cycle_) + "," + std::to_string(position_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Vertex& v) { return os << v.to_string(); }

}  // namespace prism
