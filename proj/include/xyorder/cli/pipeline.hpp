#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xyorder/augment.hpp"
#include "xyorder/geometry.hpp"
#include "xyorder/xycut.hpp"

namespace xyorder::cli {

enum class Strategy { Default, Yx, Xy, Sum, XyCut, AugXyCut, AugYx };

Strategy parse_strategy(std::string_view name);
const char* strategy_name(Strategy s) noexcept;
bool is_augmented(Strategy s) noexcept;

struct StrategySpec {
    Strategy strategy = Strategy::XyCut;
    AugmentParams params;  // params.seed is the base seed for aug strategies
};

struct OrderResult {
    ReadingOrder order;
    std::optional<XYTree> tree;           // xycut strategies only
    std::optional<std::uint64_t> seed;    // base seed, aug strategies only
};

/// Orders one document. Aug strategies seed their generator with
/// derive_seed(spec.params.seed, doc.id). Throws InvariantViolation if the
/// result is not a permutation.
OrderResult run_order(const Document& doc, const StrategySpec& spec);

/// run_order over every document using up to `jobs` threads. Results are in
/// input order and do not depend on `jobs`.
std::vector<OrderResult> run_batch(const std::vector<Document>& docs, const StrategySpec& spec,
                                   std::size_t jobs);

struct BenchStats {
    std::size_t samples = 0;
    double mean_ms = 0.0;
    double stddev_ms = 0.0;  // sample standard deviation, 0 for one sample
    double min_ms = 0.0;
    double max_ms = 0.0;
};

/// Wall-clock timing of run_order on an already parsed document.
BenchStats bench(const Document& doc, const StrategySpec& spec, std::size_t repetitions);

/// Deterministic page of `count` word boxes laid out as two text columns of
/// lines with small per-word jitter, roughly what OCR produces on a form.
Document synthetic_document(std::size_t count, std::uint64_t seed = 1);

}  // namespace xyorder::cli
