#pragma once

// Reader/writer for the 9th DIMACS challenge `.gr` format:
//   c <comment>
//   p sp <n> <m>
//   a <u> <v> <w>        (1-based ids, non-negative integer weight)

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "biobj/graph.hpp"

namespace biobj {

struct WeightedArc {
  StateId from = 0;  // 0-based
  StateId to = 0;
  Weight weight = 0;

  friend bool operator==(const WeightedArc&, const WeightedArc&) = default;
  friend auto operator<=>(const WeightedArc&, const WeightedArc&) = default;
};

struct DimacsGraph {
  std::size_t num_states = 0;
  std::size_t num_arcs = 0;  // as declared on the problem line
  std::vector<WeightedArc> arcs;
};

namespace detail {

inline std::string_view next_token(std::string_view& rest) {
  const auto begin = rest.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) {
    rest = {};
    return {};
  }
  rest.remove_prefix(begin);
  const auto end = rest.find_first_of(" \t\r");
  std::string_view tok = rest.substr(0, end);
  rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
  return tok;
}

inline std::uint64_t parse_unsigned(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (tok.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

inline DimacsGraph parse_dimacs_gr(std::istream& in) {
  DimacsGraph out;
  bool have_problem = false;
  std::string buf;
  std::size_t line_no = 0;

  while (std::getline(in, buf)) {
    ++line_no;
    std::string_view rest(buf);
    const std::string_view kind = detail::next_token(rest);
    if (kind.empty() || kind == "c") continue;

    if (kind == "p") {
      if (have_problem) throw FormatError("line " + std::to_string(line_no) + ": duplicate problem line");
      if (detail::next_token(rest) != "sp") throw ParseError(line_no, "problem line must be 'p sp <n> <m>'");
      out.num_states = detail::parse_unsigned(detail::next_token(rest), line_no, "n");
      out.num_arcs = detail::parse_unsigned(detail::next_token(rest), line_no, "m");
      if (!detail::next_token(rest).empty()) throw ParseError(line_no, "trailing tokens on problem line");
      if (out.num_states >= kNoState) throw RangeError("state count too large");
      out.arcs.reserve(out.num_arcs);
      have_problem = true;
    } else if (kind == "a") {
      if (!have_problem) throw FormatError("line " + std::to_string(line_no) + ": arc before problem line");
      const auto u = detail::parse_unsigned(detail::next_token(rest), line_no, "tail");
      const auto v = detail::parse_unsigned(detail::next_token(rest), line_no, "head");
      const auto w = detail::parse_unsigned(detail::next_token(rest), line_no, "weight");
      if (!detail::next_token(rest).empty()) throw ParseError(line_no, "trailing tokens on arc line");
      if (u < 1 || u > out.num_states || v < 1 || v > out.num_states) {
        throw RangeError("line " + std::to_string(line_no) + ": arc endpoint outside [1, " +
                         std::to_string(out.num_states) + "]");
      }
      if (w > std::numeric_limits<Weight>::max()) throw ParseError(line_no, "weight does not fit 32 bits");
      out.arcs.push_back({static_cast<StateId>(u - 1), static_cast<StateId>(v - 1), static_cast<Weight>(w)});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
    }
  }

  if (!have_problem) throw FormatError("missing 'p sp <n> <m>' line");
  if (out.arcs.size() != out.num_arcs) {
    throw FormatError("declared " + std::to_string(out.num_arcs) + " arcs, found " +
                      std::to_string(out.arcs.size()));
  }
  return out;
}

inline DimacsGraph read_dimacs_gr(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_dimacs_gr(in);
}

inline void write_dimacs_gr(std::ostream& out, const DimacsGraph& g) {
  out << "p sp " << g.num_states << ' ' << g.arcs.size() << '\n';
  for (const auto& a : g.arcs) out << "a " << a.from + 1 << ' ' << a.to + 1 << ' ' << a.weight << '\n';
}

/// Pairs a c1 arc file and a c2 arc file over the same topology into one
/// bi-objective graph. Both files must list the same (from, to) sequence.
inline BiGraph build_bigraph(const DimacsGraph& first, const DimacsGraph& second) {
  if (first.num_states != second.num_states) {
    throw TopologyMismatchError("state counts differ: " + std::to_string(first.num_states) + " vs " +
                                std::to_string(second.num_states));
  }
  if (first.arcs.size() != second.arcs.size()) {
    throw TopologyMismatchError("arc counts differ: " + std::to_string(first.arcs.size()) + " vs " +
                                std::to_string(second.arcs.size()));
  }
  std::vector<Arc> arcs;
  arcs.reserve(first.arcs.size());
  for (std::size_t i = 0; i < first.arcs.size(); ++i) {
    const auto& a = first.arcs[i];
    const auto& b = second.arcs[i];
    if (a.from != b.from || a.to != b.to) {
      throw TopologyMismatchError("arc " + std::to_string(i + 1) + " endpoints differ");
    }
    arcs.push_back({a.from, a.to, {a.weight, b.weight}});
  }
  return BiGraph(first.num_states, arcs);
}

/// Splits a BiGraph back into its two single-objective arc lists.
inline std::pair<DimacsGraph, DimacsGraph> split_bigraph(const BiGraph& g) {
  DimacsGraph d1{g.num_states(), g.num_arcs(), {}};
  DimacsGraph d2{g.num_states(), g.num_arcs(), {}};
  for (const Arc& a : g.arcs()) {
    d1.arcs.push_back({a.from, a.to, static_cast<Weight>(a.cost.c1)});
    d2.arcs.push_back({a.from, a.to, static_cast<Weight>(a.cost.c2)});
  }
  return {std::move(d1), std::move(d2)};
}

}  // namespace biobj
