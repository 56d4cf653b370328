#include "symnc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "symnc/error.hpp"

namespace symnc {

namespace {

using nlohmann::json;

// Quotes the offending line with a caret under `column` (both 1-based).
std::string line_context(const std::string& text, std::size_t line, std::size_t column) {
  std::istringstream in(text);
  std::string row;
  for (std::size_t i = 0; i < line && std::getline(in, row); ++i) {
  }
  std::string out = "line " + std::to_string(line) + ", column " + std::to_string(column) +
                    "\n  " + row + "\n  ";
  out += std::string(column > 0 ? column - 1 : 0, ' ') + "^";
  return out;
}

std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Line of the first occurrence of `"key"`, used to place semantic errors.
std::size_t line_of_key(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return 1;
  return locate(text, pos).first;
}

[[noreturn]] void fail(const std::string& text, const std::string& key, const std::string& what) {
  const std::size_t line = line_of_key(text, key);
  throw Error(ErrorCode::ParseError, what + " (" + line_context(text, line, 1) + ")");
}

int read_int(const json& doc, const std::string& text, const char* key) {
  if (!doc.contains(key)) fail(text, key, std::string("missing field \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) fail(text, key, std::string("field \"") + key + "\" must be an integer");
  const auto value = v.get<long long>();
  if (value < 0 || value > kMaxN) fail(text, key, std::string("field \"") + key + "\" out of range");
  return static_cast<int>(value);
}

template <class J>
bool is_flat(const J& v) {
  return std::none_of(v.begin(), v.end(), [](const J& e) { return e.is_structured(); });
}

template <class J>
void write_pretty(const J& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_array()) {
    if (v.empty() || is_flat(v)) {
      out += v.dump();
      return;
    }
    out += "[";
    bool first = true;
    for (const auto& e : v) {
      out += first ? "\n" : ",\n";
      first = false;
      out += pad;
      write_pretty(e, depth + 1, out);
    }
    out += "\n" + close + "]";
  } else if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      out += first ? "\n" : ",\n";
      first = false;
      out += pad + J(it.key()).dump() + ": ";
      write_pretty(it.value(), depth + 1, out);
    }
    out += "\n" + close + "}";
  } else {
    out += v.dump();
  }
}

}  // namespace

CollectionFile CollectionFile::from_collection(const Collection& c, nlohmann::json metadata) {
  CollectionFile f;
  f.n = c.n();
  f.k = c.k();
  f.sets = c.sets();
  f.metadata = std::move(metadata);
  return f;
}

Collection CollectionFile::collection() const { return Collection(n, k, sets); }

json sets_to_json(const std::vector<IndexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.elements());
  return out;
}

CollectionFile parse_collection(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::ParseError, "malformed JSON at " + line_context(text, line, column));
  }
  if (!doc.is_object()) fail(text, "", "top level must be an object");
  if (!doc.contains("format") || doc["format"] != kFileFormatVersion) {
    fail(text, "format", "unsupported or missing \"format\" (expected 1)");
  }
  CollectionFile f;
  f.n = read_int(doc, text, "n");
  f.k = read_int(doc, text, "k");
  if (f.n < 1 || f.k > f.n) fail(text, "k", "need 0 <= k <= n and n >= 1");
  if (!doc.contains("sets") || !doc["sets"].is_array()) fail(text, "sets", "\"sets\" must be an array");
  for (const auto& entry : doc["sets"]) {
    if (!entry.is_array()) fail(text, "sets", "every set must be an array of integers");
    std::vector<int> elements;
    for (const auto& x : entry) {
      if (!x.is_number_integer()) fail(text, "sets", "set elements must be integers");
      elements.push_back(x.get<int>());
    }
    try {
      f.sets.push_back(IndexSet::from_elements(elements, f.n));
    } catch (const Error& e) {
      fail(text, "sets", "bad set " + entry.dump() + ": " + e.detail());
    }
  }
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) fail(text, "metadata", "\"metadata\" must be an object");
    f.metadata = doc["metadata"];
  }
  return f;
}

CollectionFile load_collection(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_collection(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.detail());
  }
}

std::string pretty_json(const nlohmann::json& value) {
  std::string out;
  write_pretty(value, 0, out);
  return out + "\n";
}

std::string serialize_collection(const CollectionFile& file) {
  std::vector<IndexSet> sets = file.sets;
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // Built as an ordered object so the header fields lead.
  nlohmann::ordered_json doc;
  doc["format"] = kFileFormatVersion;
  doc["n"] = file.n;
  doc["k"] = file.k;
  doc["sets"] = sets_to_json(sets);
  if (!file.metadata.empty()) doc["metadata"] = file.metadata;
  std::string out;
  write_pretty(doc, 0, out);
  return out + "\n";
}

void save_collection(const CollectionFile& file, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_collection(file);
}

}  // namespace symnc
