#include "xyorder/cli/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "xyorder/heuristics.hpp"

namespace xyorder::cli {

Strategy parse_strategy(std::string_view name) {
    if (name == "default") return Strategy::Default;
    if (name == "yx") return Strategy::Yx;
    if (name == "xy") return Strategy::Xy;
    if (name == "sum") return Strategy::Sum;
    if (name == "xycut") return Strategy::XyCut;
    if (name == "aug-xycut") return Strategy::AugXyCut;
    if (name == "aug-yx") return Strategy::AugYx;
    throw InputError("unknown order strategy '" + std::string(name) + "'");
}

const char* strategy_name(Strategy s) noexcept {
    switch (s) {
        case Strategy::Default: return "default";
        case Strategy::Yx: return "yx";
        case Strategy::Xy: return "xy";
        case Strategy::Sum: return "sum";
        case Strategy::XyCut: return "xycut";
        case Strategy::AugXyCut: return "aug-xycut";
        case Strategy::AugYx: return "aug-yx";
    }
    return "?";
}

bool is_augmented(Strategy s) noexcept {
    return s == Strategy::AugXyCut || s == Strategy::AugYx;
}

OrderResult run_order(const Document& doc, const StrategySpec& spec) {
    OrderResult r;
    SplitMix64 rng(derive_seed(spec.params.seed, doc.id));
    switch (spec.strategy) {
        case Strategy::Default: r.order = sequence_order(doc); break;
        case Strategy::Yx: r.order = order_yx(doc); break;
        case Strategy::Xy: r.order = order_xy(doc); break;
        case Strategy::Sum: r.order = order_sum(doc); break;
        case Strategy::XyCut: {
            auto res = xy_cut(doc);
            r.order = std::move(res.order);
            r.tree = std::move(res.tree);
            break;
        }
        case Strategy::AugXyCut: {
            auto res = augmented_xy_cut(doc, spec.params, rng);
            r.order = std::move(res.order);
            r.tree = std::move(res.tree);
            break;
        }
        case Strategy::AugYx: r.order = order_aug_yx(doc, spec.params, rng); break;
    }
    if (is_augmented(spec.strategy)) {
        r.seed = spec.params.seed;
    }
    require_permutation(r.order, doc.size(), strategy_name(spec.strategy));
    return r;
}

std::vector<OrderResult> run_batch(const std::vector<Document>& docs, const StrategySpec& spec,
                                   std::size_t jobs) {
    std::vector<OrderResult> results(docs.size());
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(docs.size(), 1));
    if (jobs == 1) {
        for (std::size_t i = 0; i < docs.size(); ++i) {
            results[i] = run_order(docs[i], spec);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < docs.size(); i = next++) {
            try {
                results[i] = run_order(docs[i], spec);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();  // joins
    if (error) {
        std::rethrow_exception(error);
    }
    return results;
}

BenchStats bench(const Document& doc, const StrategySpec& spec, std::size_t repetitions) {
    if (repetitions == 0) {
        throw InputError("bench: repetitions must be >= 1");
    }
    std::vector<double> ms;
    ms.reserve(repetitions);
    for (std::size_t i = 0; i < repetitions; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        OrderResult r = run_order(doc, spec);
        const auto t1 = std::chrono::steady_clock::now();
        ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        if (r.order.size() != doc.size()) {
            throw InvariantViolation("bench: truncated order");
        }
    }
    BenchStats s;
    s.samples = ms.size();
    double sum = 0.0;
    for (double v : ms) {
        sum += v;
    }
    s.mean_ms = sum / static_cast<double>(ms.size());
    double sq = 0.0;
    for (double v : ms) {
        sq += (v - s.mean_ms) * (v - s.mean_ms);
    }
    s.stddev_ms = ms.size() > 1 ? std::sqrt(sq / static_cast<double>(ms.size() - 1)) : 0.0;
    s.min_ms = *std::min_element(ms.begin(), ms.end());
    s.max_ms = *std::max_element(ms.begin(), ms.end());
    return s;
}

Document synthetic_document(std::size_t count, std::uint64_t seed) {
    if (count == 0) {
        throw InputError("synthetic_document: count must be >= 1");
    }
    SplitMix64 rng(seed);
    Document doc;
    doc.id = "synthetic-" + std::to_string(count);
    doc.width = 1000.0;

    // Two columns, 8 words per line; lines are 14 px tall with 6 px leading.
    constexpr std::size_t kWordsPerLine = 8;
    constexpr double kColumnWidth = 440.0;
    constexpr double kLineHeight = 14.0;
    constexpr double kLineGap = 6.0;
    const std::size_t lines = (count + kWordsPerLine - 1) / kWordsPerLine;
    const std::size_t lines_per_column = (lines + 1) / 2;

    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t line = i / kWordsPerLine;
        const std::size_t word = i % kWordsPerLine;
        const std::size_t column = line / lines_per_column;
        const std::size_t row = line % lines_per_column;
        const double left = 30.0 + static_cast<double>(column) * (kColumnWidth + 60.0);
        const double top = 40.0 + static_cast<double>(row) * (kLineHeight + kLineGap);
        const double slot = kColumnWidth / kWordsPerLine;
        const double jitter_x = std::floor(rng.uniform01() * 6.0);
        const double jitter_y = std::floor(rng.uniform01() * 3.0);
        TokenBox t;
        t.x1 = left + static_cast<double>(word) * slot + jitter_x;
        t.x2 = t.x1 + slot - 12.0;
        t.y1 = top + jitter_y;
        t.y2 = t.y1 + kLineHeight - 3.0;
        t.text = "w" + std::to_string(i);
        t.source_index = i;
        doc.tokens.push_back(std::move(t));
    }
    doc.height = 80.0 + static_cast<double>(lines_per_column) * (kLineHeight + kLineGap);
    return doc;
}

}  // namespace xyorder::cli
