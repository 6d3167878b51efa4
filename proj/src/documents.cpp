#include "plmonster/documents.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace plm {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw DocumentError("field '" + field + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::vector<Rational> rationals(const json& arr, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected an array of fraction strings");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string here = path + "[" + std::to_string(i) + "]";
    if (!arr[i].is_string()) fail(here, "expected a fraction string such as \"1/4\"");
    try {
      out.push_back(Rational::parse(arr[i].get<std::string>()));
    } catch (const std::exception& e) {
      fail(here, e.what());
    }
  }
  return out;
}

std::int64_t integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

void check_version(const json& obj, const std::string& path) {
  std::int64_t v = integer(require(obj, "version", path), join(path, "version"));
  if (v != kDocumentVersion) fail(join(path, "version"), "unsupported version " + std::to_string(v));
}

GroupDescriptor descriptor_from(const json& obj, const std::string& path) {
  const json& slopes = require(obj, "slopes", path);
  if (!slopes.is_array()) fail(join(path, "slopes"), "expected an array of integers");
  std::vector<std::int64_t> gens;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    gens.push_back(integer(slopes[i], join(path, "slopes") + "[" + std::to_string(i) + "]"));
  }
  std::int64_t lambda = integer(require(obj, "lambda", path), join(path, "lambda"));
  try {
    GroupDescriptor d(gens);
    if (d.lambda() != BigInt(static_cast<long>(lambda))) {
      fail(join(path, "lambda"), "lambda " + std::to_string(lambda) +
                                     " is not the product of the slope generators");
    }
    return d;
  } catch (const std::invalid_argument& e) {
    fail(join(path, "slopes"), e.what());
  }
}

ordered_json descriptor_json(const GroupDescriptor& d) {
  ordered_json out;
  out["lambda"] = to_int64(d.lambda());
  out["slopes"] = d.generators();
  return out;
}

ParsedMap map_from(const json& obj, const std::string& path) {
  if (!obj.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  check_version(obj, path);
  ParsedMap out{PLCircleMap(), std::nullopt};
  bool has_lambda = obj.contains("lambda");
  bool has_slopes = obj.contains("slopes");
  if (has_lambda != has_slopes) fail(join(path, has_lambda ? "slopes" : "lambda"), "missing");
  if (has_lambda) out.descriptor = descriptor_from(obj, path);
  auto xs = rationals(require(obj, "breakpoints", path), join(path, "breakpoints"));
  auto ys = rationals(require(obj, "images", path), join(path, "images"));
  PLCircleMap base;
  try {
    base = PLCircleMap::from_points(std::move(xs), std::move(ys));
  } catch (const std::invalid_argument& e) {
    fail(join(path, "breakpoints"), e.what());
  }
  if (obj.contains("offset")) {
    out.map = PLLineMap(std::move(base), integer(obj["offset"], join(path, "offset")));
  } else {
    out.map = std::move(base);
  }
  return out;
}

ordered_json map_json(const PLCircleMap& f, const std::optional<std::int64_t>& offset,
                      const std::optional<GroupDescriptor>& d) {
  ordered_json out;
  out["version"] = kDocumentVersion;
  if (d) {
    out["lambda"] = to_int64(d->lambda());
    out["slopes"] = d->generators();
  }
  ordered_json breaks = ordered_json::array();
  ordered_json images = ordered_json::array();
  for (const Rational& b : f.breakpoints()) breaks.push_back(b.to_string());
  for (const Rational& y : f.images()) images.push_back(y.to_string());
  out["breakpoints"] = std::move(breaks);
  out["images"] = std::move(images);
  if (offset) out["offset"] = *offset;
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(e.what());
  }
}

PLLineMap line_from(const json& obj, const std::string& path) {
  ParsedMap m = map_from(obj, path);
  if (!m.is_line()) fail(join(path, "offset"), "missing (a line map is required here)");
  return m.line();
}

}  // namespace

ParsedMap parse_map(std::string_view text) { return map_from(parse_json(text), ""); }

std::string format_map(const PLCircleMap& f, const std::optional<GroupDescriptor>& d) {
  return map_json(f, std::nullopt, d).dump(2) + "\n";
}

std::string format_map(const PLLineMap& f, const std::optional<GroupDescriptor>& d) {
  return map_json(f.base(), f.offset(), d).dump(2) + "\n";
}

std::string format_map(const ParsedMap& m) {
  return m.is_line() ? format_map(m.line(), m.descriptor) : format_map(m.circle(), m.descriptor);
}

AmalgamWord parse_word(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) fail("<root>", "expected an object");
  check_version(doc, "");
  std::shared_ptr<const AmalgamContext> ctx;
  if (doc.contains("context")) {
    const json& c = doc["context"];
    GroupDescriptor g1 = descriptor_from(require(c, "G1", "context"), "context.G1");
    GroupDescriptor g2 = descriptor_from(require(c, "G2", "context"), "context.G2");
    PLLineMap edge = line_from(require(c, "edge", "context"), "context.edge");
    try {
      ctx = AmalgamContext::create(std::move(g1), std::move(g2), std::move(edge));
    } catch (const ContextError& e) {
      fail("context.edge", e.what());
    }
  } else {
    ctx = AmalgamContext::monster();
  }
  const json& syl = require(doc, "syllables", "");
  if (!syl.is_array()) fail("syllables", "expected an array");
  std::vector<MonsterSyllable> syllables;
  for (std::size_t i = 0; i < syl.size(); ++i) {
    std::string path = "syllables[" + std::to_string(i) + "]";
    const json& tag = require(syl[i], "factor", path);
    if (!tag.is_string() || (tag != "G1" && tag != "G2")) {
      fail(path + ".factor", "expected \"G1\" or \"G2\"");
    }
    Factor f = tag == "G1" ? Factor::left : Factor::right;
    syllables.push_back({f, line_from(require(syl[i], "element", path), path + ".element")});
  }
  try {
    return word_from_syllables(std::move(syllables), std::move(ctx));
  } catch (const WordError& e) {
    fail("syllables[" + std::to_string(e.index()) + "]", e.what());
  }
}

std::string format_word(const AmalgamWord& w) {
  const AmalgamContext& ctx = *w.context();
  ordered_json doc;
  doc["version"] = kDocumentVersion;
  ordered_json c;
  c["G1"] = descriptor_json(ctx.g1());
  c["G2"] = descriptor_json(ctx.g2());
  c["edge"] = map_json(ctx.edge().base(), ctx.edge().offset(), std::nullopt);
  doc["context"] = std::move(c);
  ordered_json syl = ordered_json::array();
  for (const MonsterSyllable& s : w.syllables()) {
    ordered_json entry;
    entry["factor"] = s.factor == Factor::left ? "G1" : "G2";
    entry["element"] = map_json(s.element.base(), s.element.offset(), std::nullopt);
    syl.push_back(std::move(entry));
  }
  doc["syllables"] = std::move(syl);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace plm
