#ifndef DOMINIUM_GRAPH6_HPP
#define DOMINIUM_GRAPH6_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "dominium/errors.hpp"
#include "dominium/graph.hpp"

namespace dominium {

/*
 * graph6 codec (McKay's nauty interchange format).
 *
 * Header: one byte n+63 for n <= 62, otherwise byte 126 followed by three
 * bytes holding n in 18 bits. Body: the upper triangle bits x(i,j), i<j,
 * ordered by j then i, packed six to a byte most-significant first,
 * zero-padded, each byte offset by 63.
 */

class Graph6Error : public Error {
 public:
  enum class Kind {
    bad_header,       // header byte outside the printable range or unsupported form
    bad_order,        // order 0 or above kMaxOrder
    bad_body_byte,    // body byte outside 63..126
    nonzero_padding,  // padding bits of the final byte were set
    truncated,        // body shorter than the order requires
    trailing_garbage  // bytes left after the body
  };

  Graph6Error(Kind kind, std::size_t offset, const std::string& what);

  Kind kind() const noexcept { return kind_; }
  /// Byte offset into the input where the problem was detected.
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace dominium

#endif  // DOMINIUM_GRAPH6_HPP
