#pragma once

#include <map>
#include <string>
#include <vector>

#include "conftree/tree.hpp"

namespace conftree {

std::string lowercase(const std::string& s);
std::string trim(const std::string& s);

// lowercased alphanumeric tokens
std::vector<std::string> tokenize(const std::string& text);

// tokenize minus a small stopword list
std::vector<std::string> content_words(const std::string& text);

// keyword lists per topic, used by the rule annotation backend and by the
// synthetic text templates
const std::map<Topic, std::vector<std::string>>& topic_lexicons();

// greetings, thanks and operator boilerplate; configurable in the ingest
// pipeline, this is the built-in default
const std::vector<std::string>& default_procedural_lexicon();

}  // namespace conftree
