#pragma once

#include <optional>
#include <vector>

#include "conftree/tensor.hpp"
#include "conftree/tree.hpp"

namespace conftree {

struct NodeEncoderConfig {
    std::size_t d_model = 64;
    std::size_t heads = 4;
    std::size_t layers = 2;
    std::size_t d_embed = 64;
    std::size_t taxonomy_size = kNumTopics;  // includes Unknown

    // one-hot topic + one-hot coverage + coherence + ln(1+duration) + one-hot kind
    std::size_t metadata_width() const { return taxonomy_size + kNumCoverage + 1 + 1 + 2; }
    void check() const;
};

// One transformer encoder layer: per-head Q/K/V projections, output
// projection, two layer norms and the feedforward block.
struct EncoderLayerParams {
    std::vector<Tensor> wq, bq, wk, bk, wv, bv;  // per head: d x d/h, 1 x d/h
    Tensor wo, bo;                               // d x d, 1 x d
    Tensor ln1_gamma, ln1_beta, ln2_gamma, ln2_beta;
    Tensor ff1_w, ff1_b;  // d x 4d
    Tensor ff2_w, ff2_b;  // 4d x d

    static EncoderLayerParams init(std::size_t d, std::size_t heads, Rng& rng);
    void visit(const std::function<void(const std::string&, Tensor&)>& fn,
               const std::string& prefix);
};

struct NodeEncoderParams {
    Tensor proj_text_w, proj_text_b;    // 7 x d_model
    Tensor proj_audio_w, proj_audio_b;
    Tensor proj_video_w, proj_video_b;
    Tensor modality_embed;              // 3 x d_model, rows text/audio/video
    Tensor cls;                         // 1 x d_model, shared across node kinds
    std::vector<EncoderLayerParams> layers;
    Tensor meta_w, meta_b;              // metadata_width x d_model
    Tensor fusion_w, fusion_b;          // 2 d_model x d_embed

    static NodeEncoderParams init(const NodeEncoderConfig& cfg, Rng& rng);
    void visit(const std::function<void(const std::string&, Tensor&)>& fn);
    std::vector<Tensor> all_tensors();
};

// Structured-metadata features: one-hot topic (K), one-hot coverage (4),
// coherence, ln(1+duration_s), one-hot node kind.
std::vector<double> featurize_metadata(const NodeMetadata& meta, NodeKind kind,
                                       double duration_s, const NodeEncoderConfig& cfg);

// Encode one discourse node into a d_embed vector. The token sequence has
// one token per (utterance, available modality); `view` selects utterance
// positions (into all_utterances() order), empty optional = all. There are
// no positional encodings at this level, so the output is invariant to
// utterance permutations.
Tensor encode_node(Tape& tape, const DiscourseNode& node, NodeEncoderParams& params,
                   const NodeEncoderConfig& cfg,
                   const std::optional<std::vector<std::size_t>>& view = std::nullopt);

// forward through the stack of encoder layers (shared with conf_encoder)
Tensor run_encoder_layers(Tape& tape, Tensor x, std::vector<EncoderLayerParams>& layers,
                          std::size_t heads, std::vector<std::vector<Tensor>>* attn_out = nullptr);

// single layer, exposed for tests; attn_out (optional) receives one s x s
// attention tensor per head
Tensor encoder_layer_forward(Tape& tape, Tensor x, EncoderLayerParams& p, std::size_t heads,
                             std::vector<Tensor>* attn_out = nullptr);

// multi-head self-attention sublayer on its own
Tensor multi_head_self_attention(Tape& tape, Tensor x, EncoderLayerParams& p, std::size_t heads,
                                 std::vector<Tensor>* attn_out = nullptr);

}  // namespace conftree
