#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symnc/noncross.hpp"

namespace symnc {

/// On-disk form of a collection:
///   {"format": 1, "n": .., "k": .., "sets": [[..], ..], "metadata": {..}}
/// Sets are ascending 1-based element lists. Members are kept as read (sizes
/// are not checked here, so verify can report them); save() writes them in
/// canonical order.
struct CollectionFile {
  int n = 0;
  int k = 0;
  std::vector<IndexSet> sets;
  nlohmann::json metadata = nlohmann::json::object();

  static CollectionFile from_collection(const Collection& c,
                                        nlohmann::json metadata = nlohmann::json::object());
  /// Throws InvalidRange if a member is not a k-subset of [n].
  Collection collection() const;
};

inline constexpr int kFileFormatVersion = 1;

/// Throws ParseError with line and column context.
CollectionFile parse_collection(const std::string& text);
CollectionFile load_collection(const std::string& path);

std::string serialize_collection(const CollectionFile& file);
void save_collection(const CollectionFile& file, const std::string& path);

/// Indented JSON with arrays of scalars kept on one line; ends in a newline.
std::string pretty_json(const nlohmann::json& value);

/// [[1,2,3],[2,3,4]] in the given order.
nlohmann::json sets_to_json(const std::vector<IndexSet>& sets);

}  // namespace symnc
