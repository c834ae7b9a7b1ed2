#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conftree/emotion.hpp"

namespace conftree {

enum class Role { Executive, Analyst, Operator, Unknown };

// 10-K derived topic taxonomy, fixed order (one-hot features follow it).
enum class Topic {
    Business,
    RiskFactors,
    LegalProceedings,
    MDandA,
    FinancialStatements,
    ControlsAndProcedures,
    Other,
    Unknown,
};
inline constexpr std::size_t kNumTopics = 8;

enum class Coverage { Yes, No, Partially, NotApplicable };
inline constexpr std::size_t kNumCoverage = 4;

enum class NodeKind { Monologue, QAPair };

Role role_from_string(const std::string& s);
Topic topic_from_string(const std::string& s);
Coverage coverage_from_string(const std::string& s);
std::string to_string(Role r);
std::string to_string(Topic t);
std::string to_string(Coverage c);
std::string to_string(NodeKind k);

// One sentence of one speaker turn, with per-modality emotion vectors.
// Text emotions are always present; audio/video only when available.
struct Utterance {
    int index = 0;  // 0-based position within its intervention
    std::string text;
    EmotionVector emotions_text;
    std::optional<EmotionVector> emotions_audio;
    std::optional<EmotionVector> emotions_video;
};

// A contiguous speaker turn.
struct Intervention {
    std::string speaker;
    Role role = Role::Unknown;
    std::vector<Utterance> utterances;
    double duration_s = 0.0;
};

struct NodeMetadata {
    Topic topic = Topic::Unknown;
    Coverage coverage = Coverage::NotApplicable;
    double coherence = 0.5;
    double confidence = 0.0;  // consensus confidence; 1.0 when hand-labeled or synthetic
};

// One discourse unit: a terminal monologue or a question-answer pair.
// `intervention` holds the monologue content, or the question of a pair;
// `answer` is present only for answered pairs.
struct DiscourseNode {
    NodeKind kind = NodeKind::Monologue;
    Intervention intervention;
    std::optional<Intervention> answer;
    NodeMetadata metadata;
    int order_index = 0;

    bool is_monologue() const { return kind == NodeKind::Monologue; }
    const Intervention& question() const { return intervention; }

    // utterances of the node in encoding order (question then answer)
    std::vector<const Utterance*> all_utterances() const;

    // total speaking time of the node
    double duration_s() const;
};

struct ConferenceTree {
    std::string id;
    std::vector<DiscourseNode> nodes;
    std::map<std::string, std::string> source;  // ticker, quarter, date, ...
};

// One entry per violated invariant, each naming the node order_index and
// the rule. Empty means valid. Violations are data, not failures.
std::vector<std::string> validate(const ConferenceTree& tree);

// Nodes in temporal order (order_index ascending). Throws ValidationError
// when the node list is empty or order_index is not a permutation of
// 0..n-1; storage order itself does not have to be sorted.
std::vector<const DiscourseNode*> flatten(const ConferenceTree& tree);

}  // namespace conftree
