#pragma once

// JSON interchange for maps and amalgam words. Every rational is written as a
// string "p/q" or "p" in lowest terms, never as a JSON number.
//
// Map document:
//   {"version": 1, "lambda": 6, "slopes": [2, 3],
//    "breakpoints": ["0", "1/4"], "images": ["1/2", "0"], "offset": 0}
// "lambda"/"slopes" are optional (both or neither); "offset" is present
// exactly for line maps.
//
// Word document:
//   {"version": 1,
//    "context": {"G1": {"lambda": 2, "slopes": [2]},
//                "G2": {"lambda": 6, "slopes": [2, 3]},
//                "edge": <map document with offset>},
//    "syllables": [{"factor": "G1", "element": <map document with offset>}, ...]}
// A missing context means the default T *_{z = g0bar} T_{2,3}.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "plmonster/amalgam.hpp"
#include "plmonster/pl_map.hpp"
#include "plmonster/stein_thompson.hpp"

namespace plm {

inline constexpr int kDocumentVersion = 1;

// Malformed JSON, a missing or mistyped field, or a violated map invariant.
// The message names the JSON line/column or the offending field.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedMap {
  std::variant<PLCircleMap, PLLineMap> map;
  std::optional<GroupDescriptor> descriptor;

  bool is_line() const { return std::holds_alternative<PLLineMap>(map); }
  const PLLineMap& line() const { return std::get<PLLineMap>(map); }
  const PLCircleMap& circle() const { return std::get<PLCircleMap>(map); }
};

ParsedMap parse_map(std::string_view text);
std::string format_map(const PLCircleMap& f, const std::optional<GroupDescriptor>& d = {});
std::string format_map(const PLLineMap& f, const std::optional<GroupDescriptor>& d = {});
std::string format_map(const ParsedMap& m);

AmalgamWord parse_word(std::string_view text);
std::string format_word(const AmalgamWord& w);

std::string read_file(const std::string& path);

}  // namespace plm
