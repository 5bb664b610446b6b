#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sbbc {

enum class Side : uint8_t { LeftU = 0, RightV = 1 };

inline Side opposite(Side s) { return s == Side::LeftU ? Side::RightV : Side::LeftU; }

inline const char* side_name(Side s) { return s == Side::LeftU ? "left" : "right"; }

// Edge label. Parity of a sign multiset = (#Negative) mod 2.
enum class Sign : uint8_t { Positive = 0, Negative = 1 };

inline Sign flipped(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

struct VertexRef {
  Side side;
  uint32_t index;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

struct SignedEdge {
  uint32_t u;  // LeftU index
  uint32_t v;  // RightV index
  Sign sign;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Base for everything this library throws.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DuplicateEdgeError : Error {
  using Error::Error;
};

struct CrossSideComparisonError : Error {
  using Error::Error;
};

struct MissingEdgeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  size_t line;
  ParseError(size_t line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct HeaderMismatchError : Error {
  using Error::Error;
};

struct InfeasibleEdgeCountError : Error {
  using Error::Error;
};

struct SizeGuardError : Error {
  using Error::Error;
};

struct CountOverflowError : Error {
  using Error::Error;
};

struct TimeLimitError : Error {
  using Error::Error;
};

struct InvalidArgumentError : Error {
  using Error::Error;
};

// Counting is restricted to p >= 2 and q >= 2; (1,q) and (p,1) patterns are
// degenerate stars, not cohesive bicliques.
inline void require_pq(uint32_t p, uint32_t q) {
  if (p < 2 || q < 2)
    throw InvalidArgumentError("p and q must both be >= 2 (got p=" + std::to_string(p) +
                               ", q=" + std::to_string(q) +
                               "); size-1 sides degenerate into star patterns");
}

}  // namespace sbbc
