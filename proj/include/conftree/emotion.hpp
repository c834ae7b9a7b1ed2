#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace conftree {

inline constexpr std::size_t kNumEmotions = 7;

// Fixed component order shared by every modality and every pipeline stage.
inline constexpr std::array<const char*, kNumEmotions> kEmotionNames = {
    "anger", "disgust", "fear", "joy", "neutral", "sadness", "surprise"};

inline constexpr double kSimplexTolerance = 1e-6;

// 7-dim probability vector over the fixed emotion order.
struct EmotionVector {
    std::array<double, kNumEmotions> values{};

    double sum() const;
    std::size_t argmax() const;  // ties resolve to the lowest index

    // non-negative components summing to 1 within kSimplexTolerance
    bool is_valid() const;

    // uniform 1/7 vector, the neutral-ignorance fallback
    static EmotionVector uniform();

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    bool operator==(const EmotionVector& o) const { return values == o.values; }
};

enum class PoolingStrategy { Mean, Max, Mode };

PoolingStrategy pooling_from_string(const std::string& s);
std::string to_string(PoolingStrategy s);

// Pool frame-level vectors into one sentence-level vector.
// Mean: componentwise average. Max: componentwise maximum renormalized to
// sum 1. Mode: one-hot of the most frequent per-frame argmax, ties broken
// by the fixed emotion order. Throws Error("no frames") on empty input.
EmotionVector aggregate_frame_emotions(const std::vector<EmotionVector>& frames,
                                       PoolingStrategy strategy);

}  // namespace conftree
