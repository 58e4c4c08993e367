// Copyright 2026 The Cubic Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>

#include "cubiclab/error.hpp"
#include "cubiclab/graph.hpp"

// graph6: N(n) followed by the upper triangle of the adjacency matrix read
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per
// printable byte (value + 63), big-endian within each byte, zero-padded.

namespace cubiclab {
namespace {

constexpr int kBias = 63;
constexpr long long kMaxParsedOrder = 1 << 16;

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", 0);

  auto sextet = [&](std::size_t pos) -> int {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw ParseError("graph6: byte outside 63..126", pos);
    return c - kBias;
  };

  long long n = 0;
  std::size_t pos = 0;
  if (sextet(0) < 63) {
    n = sextet(0);
    pos = 1;
  } else {
    const bool wide = text.size() > 1 && sextet(1) == 63;
    const std::size_t digits = wide ? 6 : 3;
    const std::size_t start = wide ? 2 : 1;
    if (text.size() < start + digits) {
      throw ParseError("graph6: truncated length header", text.size());
    }
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | sextet(start + i);
    pos = start + digits;
  }
  if (n > kMaxParsedOrder) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported maximum", 0);
  }

  const long long pairs = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() < pos + body) {
    throw ParseError("graph6: truncated adjacency data", text.size());
  }
  if (text.size() > pos + body) {
    throw ParseError("graph6: trailing garbage", pos + body);
  }

  std::vector<Edge> edges;
  long long bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      if ((sextet(at) >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (pairs % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad_bits = static_cast<int>(6 - pairs % 6);
    if ((sextet(last) & ((1 << pad_bits) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits", last);
    }
  }
  return build_graph(static_cast<int>(n), std::span<const Edge>(edges));
}

}  // namespace cubiclab
