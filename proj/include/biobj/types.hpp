#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace biobj {

using StateId = std::uint32_t;
using ArcId = std::uint32_t;
using PathId = std::uint32_t;

// Edge weights fit in 32 bits; every accumulated path cost uses 64 bits.
using Weight = std::uint32_t;
using Cost = std::uint64_t;

inline constexpr Cost kInfinity = std::numeric_limits<Cost>::max();
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();

/// Saturating addition: anything plus infinity stays infinity.
constexpr Cost sat_add(Cost a, Cost b) noexcept {
  return (a > kInfinity - b) ? kInfinity : a + b;
}

/// Objective index. `kFirst` is c1 (e.g. distance), `kSecond` is c2 (e.g. time).
enum class Objective : std::uint8_t { kFirst = 0, kSecond = 1 };

constexpr int index_of(Objective o) noexcept { return static_cast<int>(o); }
constexpr Objective other(Objective o) noexcept {
  return o == Objective::kFirst ? Objective::kSecond : Objective::kFirst;
}

/// A two-component cost vector (c1, c2). Components are indexable by
/// objective so that search code can be written once for both orders.
struct CostPair {
  Cost c1 = 0;
  Cost c2 = 0;

  constexpr Cost& operator[](Objective o) noexcept { return o == Objective::kFirst ? c1 : c2; }
  constexpr Cost operator[](Objective o) const noexcept {
    return o == Objective::kFirst ? c1 : c2;
  }

  friend constexpr CostPair operator+(CostPair a, CostPair b) noexcept {
    return {sat_add(a.c1, b.c1), sat_add(a.c2, b.c2)};
  }
  friend constexpr bool operator==(const CostPair&, const CostPair&) = default;
  friend constexpr auto operator<=>(const CostPair&, const CostPair&) = default;

  friend std::ostream& operator<<(std::ostream& os, const CostPair& c) {
    return os << '(' << c.c1 << ',' << c.c2 << ')';
  }
};

/// Weak dominance: a is no worse than b in both objectives.
constexpr bool weakly_dominates(const CostPair& a, const CostPair& b) noexcept {
  return a.c1 <= b.c1 && a.c2 <= b.c2;
}

/// Lexicographic "less" with `primary` compared first.
constexpr bool lex_less(const CostPair& a, const CostPair& b, Objective primary) noexcept {
  const Objective secondary = other(primary);
  if (a[primary] != b[primary]) return a[primary] < b[primary];
  return a[secondary] < b[secondary];
}

enum class Direction : std::uint8_t { kForward, kBackward };

// Errors -------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A structurally valid file that violates the format contract (missing
/// problem line, wrong arc count, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An id or key outside its permitted range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two arc files that do not describe the same topology.
class TopologyMismatchError : public Error {
 public:
  using Error::Error;
};

/// Backtracking data that cannot be turned into a path.
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace biobj
