#pragma once

#include <string>

#include <json.hpp>

#include "conftree/tree.hpp"

namespace conftree {

// Conference JSON document, one file per conference. Serialization is
// canonical: fixed key order and shortest-round-trip numbers, so
// serialize(parse(serialize(t))) is byte-identical to serialize(t).
nlohmann::ordered_json conference_to_json(const ConferenceTree& tree);
ConferenceTree conference_from_json(const nlohmann::json& doc);

std::string conference_to_string(const ConferenceTree& tree);  // 2-space indent + '\n'
ConferenceTree conference_from_string(const std::string& text);

void save_conference(const ConferenceTree& tree, const std::string& path);
ConferenceTree load_conference(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace conftree
