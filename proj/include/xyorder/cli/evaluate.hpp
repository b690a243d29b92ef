#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xyorder/geometry.hpp"

namespace xyorder::cli {

struct EvalEntry {
    std::string id;
    std::uint64_t inversions = 0;
    double tau = 1.0;  // Kendall tau-a
    bool exact_match = true;
};

struct EvalReport {
    std::vector<EvalEntry> documents;
    double mean_tau = 1.0;
    std::size_t exact_matches = 0;
};

/// Number of token pairs that `pred` reads in the opposite order from `ref`,
/// counted by merge sort in O(K log K). Both must be permutations of the same
/// length; throws InputError otherwise.
std::uint64_t count_inversions(const ReadingOrder& pred, const ReadingOrder& ref);

/// tau-a = (concordant - discordant) / (K (K - 1) / 2); 1 for K < 2.
EvalEntry evaluate(const ReadingOrder& pred, const ReadingOrder& ref, std::string id = {});

EvalReport summarize(std::vector<EvalEntry> entries);

std::string report_to_json(const EvalReport& report);

}  // namespace xyorder::cli
