#include "dominium/graph6.hpp"

namespace dominium {

namespace {

constexpr int kBias = 63;
constexpr unsigned char kLongForm = 126;

bool printable(unsigned char c) { return c >= kBias && c <= kLongForm; }

}  // namespace

Graph6Error::Graph6Error(Kind kind, std::size_t offset, const std::string& what)
    : Error("graph6: " + what + " at byte " + std::to_string(offset)),
      kind_(kind),
      offset_(offset) {}

Graph from_graph6(std::string_view text) {
  using Kind = Graph6Error::Kind;
  if (text.empty()) throw Graph6Error(Kind::bad_header, 0, "empty input");

  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };

  std::size_t pos = 0;
  long n = 0;
  if (!printable(byte(0))) throw Graph6Error(Kind::bad_header, 0, "malformed header byte");
  if (byte(0) < kLongForm) {
    n = byte(0) - kBias;
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error(Kind::truncated, text.size(), "truncated order field");
    if (byte(1) == kLongForm) {
      throw Graph6Error(Kind::bad_header, 1, "eight-byte order form is not supported");
    }
    for (std::size_t i = 1; i <= 3; ++i) {
      if (!printable(byte(i))) throw Graph6Error(Kind::bad_header, i, "malformed order byte");
      n = (n << 6) | (byte(i) - kBias);
    }
    pos = 4;
  }
  if (n < 1 || n > kMaxOrder) {
    throw Graph6Error(Kind::bad_order, 0,
                      "order " + std::to_string(n) + " outside supported range 1.." +
                          std::to_string(kMaxOrder));
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) {
    throw Graph6Error(Kind::truncated, text.size(),
                      "body needs " + std::to_string(body) + " bytes");
  }
  if (text.size() > pos + body) {
    throw Graph6Error(Kind::trailing_garbage, pos + body, "unexpected trailing bytes");
  }

  GraphBuilder builder(order);
  std::size_t k = 0;
  int value = 0;
  int remaining = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i) {
      if (remaining == 0) {
        const std::size_t at = pos + k / 6;
        if (!printable(byte(at))) throw Graph6Error(Kind::bad_body_byte, at, "malformed body byte");
        value = byte(at) - kBias;
        remaining = 6;
      }
      --remaining;
      if ((value >> remaining) & 1) builder.add_edge(i, j);
      ++k;
    }
  }
  if (remaining > 0 && (value & ((1 << remaining) - 1)) != 0) {
    throw Graph6Error(Kind::nonzero_padding, pos + body - 1, "nonzero padding bits");
  }
  return builder.build();
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) throw std::invalid_argument("graph6: order exceeds supported maximum");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kLongForm));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }

  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kBias));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kBias));
  return out;
}

}  // namespace dominium
