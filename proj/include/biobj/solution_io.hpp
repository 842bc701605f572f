#pragma once

// Solution file format:
//   c <k> solutions
//   s <c1> <c2>            one per solution, increasing c1
//   p <v1> ... <vn>        optional, follows its `s` line; 1-based ids

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "biobj/dimacs.hpp"
#include "biobj/front.hpp"

namespace biobj {

inline void write_front(std::ostream& out, const ParetoFront& front, bool with_paths) {
  out << "c " << front.size() << " solutions\n";
  for (const auto& s : front) {
    out << "s " << s.cost.c1 << ' ' << s.cost.c2 << '\n';
    if (with_paths) {
      out << 'p';
      for (StateId v : s.path) out << ' ' << v + 1;
      out << '\n';
    }
  }
}

inline ParetoFront parse_front(std::istream& in) {
  ParetoFront front;
  std::string buf;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared;
  while (std::getline(in, buf)) {
    ++line_no;
    std::string_view rest(buf);
    const auto kind = detail::next_token(rest);
    if (kind.empty()) continue;
    if (kind == "c") {
      const auto count = detail::next_token(rest);
      if (!declared && detail::next_token(rest) == "solutions") {
        declared = detail::parse_unsigned(count, line_no, "solution count");
      }
    } else if (kind == "s") {
      Solution s;
      s.cost.c1 = detail::parse_unsigned(detail::next_token(rest), line_no, "c1");
      s.cost.c2 = detail::parse_unsigned(detail::next_token(rest), line_no, "c2");
      front.push_back(std::move(s));
    } else if (kind == "p") {
      if (front.empty()) throw ParseError(line_no, "path line before any solution line");
      for (auto tok = detail::next_token(rest); !tok.empty(); tok = detail::next_token(rest)) {
        const auto id = detail::parse_unsigned(tok, line_no, "state id");
        if (id == 0) throw ParseError(line_no, "state ids are 1-based");
        front.back().path.push_back(static_cast<StateId>(id - 1));
      }
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
    }
  }
  if (declared && *declared != front.size()) {
    throw FormatError("declared " + std::to_string(*declared) + " solutions, found " +
                      std::to_string(front.size()));
  }
  return front;
}

}  // namespace biobj
