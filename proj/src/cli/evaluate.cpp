#include "xyorder/cli/evaluate.hpp"

#include "json.hpp"

namespace xyorder::cli {

namespace {

std::uint64_t merge_count(std::vector<std::size_t>& v, std::vector<std::size_t>& scratch,
                          std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) {
        return 0;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = merge_count(v, scratch, lo, mid) + merge_count(v, scratch, mid, hi);
    std::size_t i = lo;
    std::size_t j = mid;
    std::size_t k = lo;
    while (i < mid && j < hi) {
        if (v[i] <= v[j]) {
            scratch[k++] = v[i++];
        } else {
            inv += mid - i;
            scratch[k++] = v[j++];
        }
    }
    while (i < mid) {
        scratch[k++] = v[i++];
    }
    while (j < hi) {
        scratch[k++] = v[j++];
    }
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

}  // namespace

std::uint64_t count_inversions(const ReadingOrder& pred, const ReadingOrder& ref) {
    if (pred.size() != ref.size()) {
        throw InputError("evaluate: predicted order has " + std::to_string(pred.size()) +
                         " entries, reference has " + std::to_string(ref.size()));
    }
    if (!is_permutation(pred, pred.size()) || !is_permutation(ref, ref.size())) {
        throw InputError("evaluate: orders must be permutations");
    }
    // Rank of each token in the reference, read along the prediction.
    std::vector<std::size_t> ref_rank(ref.size());
    for (std::size_t r = 0; r < ref.size(); ++r) {
        ref_rank[ref.order[r]] = r;
    }
    std::vector<std::size_t> seq(pred.size());
    for (std::size_t i = 0; i < pred.size(); ++i) {
        seq[i] = ref_rank[pred.order[i]];
    }
    std::vector<std::size_t> scratch(seq.size());
    return merge_count(seq, scratch, 0, seq.size());
}

EvalEntry evaluate(const ReadingOrder& pred, const ReadingOrder& ref, std::string id) {
    EvalEntry e;
    e.id = std::move(id);
    e.inversions = count_inversions(pred, ref);
    // (concordant - discordant) is an exact integer, so tau carries a single
    // rounding.
    if (pred.size() >= 2) {
        const std::int64_t pairs = static_cast<std::int64_t>(pred.size()) *
                                   static_cast<std::int64_t>(pred.size() - 1) / 2;
        const std::int64_t disc = static_cast<std::int64_t>(e.inversions);
        e.tau = static_cast<double>(pairs - 2 * disc) / static_cast<double>(pairs);
    }
    e.exact_match = e.inversions == 0;
    return e;
}

EvalReport summarize(std::vector<EvalEntry> entries) {
    EvalReport r;
    r.documents = std::move(entries);
    double sum = 0.0;
    for (const EvalEntry& e : r.documents) {
        sum += e.tau;
        r.exact_matches += e.exact_match ? 1 : 0;
    }
    r.mean_tau = r.documents.empty() ? 1.0 : sum / static_cast<double>(r.documents.size());
    return r;
}

std::string report_to_json(const EvalReport& report) {
    nlohmann::json docs = nlohmann::json::array();
    for (const EvalEntry& e : report.documents) {
        docs.push_back({{"id", e.id},
                        {"tau", e.tau},
                        {"inversions", e.inversions},
                        {"exact_match", e.exact_match}});
    }
    nlohmann::json root = {{"documents", docs},
                           {"mean_tau", report.mean_tau},
                           {"exact_matches", report.exact_matches},
                           {"count", report.documents.size()}};
    return root.dump(2) + "\n";
}

}  // namespace xyorder::cli
