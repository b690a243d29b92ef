// xyorder: compute, evaluate and benchmark reading orders of OCR token boxes.
//
//   xyorder --input page.json --order xycut --output page.order.json
//   xyorder --input a.json b.json --order aug-xycut --seed 7 --output out/
//   xyorder --input page.json --order xycut --ref page.ref.json
//   xyorder --synthetic 512 --order xycut --bench 100
//   xyorder dcpe --input tensors.json
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violation.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xyorder/cli/evaluate.hpp"
#include "xyorder/cli/io.hpp"
#include "xyorder/cli/pipeline.hpp"
#include "xyorder/cli/svg.hpp"
#include "xyorder/cli/tensor_io.hpp"
#include "xyorder/dcpe.hpp"

namespace fs = std::filesystem;
using namespace xyorder;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;

struct Options {
    std::vector<std::string> inputs;
    std::string format = "boxes-json";
    std::string order = "xycut";
    double lambda_x = 0.5;
    double lambda_y = 0.5;
    double theta = 5.0;
    std::optional<std::uint64_t> seed;
    std::string distribution = "uniform";
    std::vector<std::string> refs;
    std::string dump_tree;
    std::string profile_svg;
    std::string axis = "h";
    std::size_t bench = 0;
    std::string output;
    std::size_t jobs = 1;
    std::vector<std::size_t> synthetic;
};

struct DcpeOptions {
    std::string input;
    std::string output;
    std::string isa = "auto";
};

// A path with `extension` names a single file; anything else is a directory
// holding one file per document, named <id><suffix>.
fs::path output_path(const std::string& base, const std::string& extension,
                     const std::string& suffix, const Document& doc, std::size_t doc_count) {
    const fs::path p(base);
    if (p.extension() == extension) {
        if (doc_count != 1) {
            throw InputError(base + ": a single " + extension +
                             " file needs exactly one document; pass a directory instead");
        }
        return p;
    }
    fs::create_directories(p);
    return p / (doc.id + suffix);
}

void check_unique_ids(const std::vector<Document>& docs) {
    std::map<std::string, std::size_t> seen;
    for (const Document& d : docs) {
        if (++seen[d.id] > 1) {
            throw InputError("duplicate document id '" + d.id + "'");
        }
    }
}

int run_orders(const Options& opt) {
    const cli::InputFormat format = cli::parse_format(opt.format);
    std::vector<Document> docs;
    for (const std::string& in : opt.inputs) {
        for (Document& d : cli::ingest(in, format)) {
            docs.push_back(std::move(d));
        }
    }
    for (std::size_t k : opt.synthetic) {
        docs.push_back(cli::synthetic_document(k));
    }
    if (docs.empty()) {
        throw InputError("no documents: pass --input or --synthetic");
    }
    check_unique_ids(docs);

    cli::StrategySpec spec;
    spec.strategy = cli::parse_strategy(opt.order);
    spec.params.lambda_x = opt.lambda_x;
    spec.params.lambda_y = opt.lambda_y;
    spec.params.theta = opt.theta;
    if (opt.distribution == "uniform") {
        spec.params.distribution = ShiftDistribution::Uniform;
    } else if (opt.distribution == "clamped-normal") {
        spec.params.distribution = ShiftDistribution::ClampedNormal;
    } else {
        throw InputError("unknown distribution '" + opt.distribution + "'");
    }
    spec.params.validate();
    if (cli::is_augmented(spec.strategy)) {
        if (opt.seed) {
            spec.params.seed = *opt.seed;
        } else {
            std::random_device rd;
            spec.params.seed = (std::uint64_t{rd()} << 32) ^ rd();
            std::cerr << "xyorder: using generated seed " << spec.params.seed << "\n";
        }
    } else if (opt.seed) {
        spec.params.seed = *opt.seed;
    }

    const std::vector<cli::OrderResult> results = cli::run_batch(docs, spec, opt.jobs);

    if (!opt.output.empty()) {
        for (std::size_t i = 0; i < docs.size(); ++i) {
            const fs::path path = output_path(opt.output, ".json", ".order.json", docs[i], docs.size());
            cli::write_file(path, cli::to_order_json(docs[i], results[i].order,
                                                     cli::strategy_name(spec.strategy),
                                                     results[i].seed));
        }
    }
    if (!opt.dump_tree.empty()) {
        for (std::size_t i = 0; i < docs.size(); ++i) {
            if (!results[i].tree) {
                throw InputError("--dump-tree needs an xycut strategy");
            }
            results[i].tree->validate(docs[i].size());
            const fs::path path = output_path(opt.dump_tree, ".json", ".tree.json", docs[i], docs.size());
            cli::write_file(path, cli::tree_to_json(*results[i].tree));
        }
    }
    if (!opt.profile_svg.empty()) {
        Axis axis;
        if (opt.axis == "h") {
            axis = Axis::Horizontal;
        } else if (opt.axis == "v") {
            axis = Axis::Vertical;
        } else {
            throw InputError("--axis must be h or v");
        }
        for (const Document& d : docs) {
            const std::string suffix = std::string(".") + axis_name(axis) + ".svg";
            cli::render_profile(d, axis, output_path(opt.profile_svg, ".svg", suffix, d, docs.size()));
        }
    }

    nlohmann::json summary = nlohmann::json::object();
    if (!opt.refs.empty()) {
        if (opt.refs.size() != docs.size()) {
            throw InputError("--ref needs one reference file per document (" +
                             std::to_string(docs.size()) + ")");
        }
        std::vector<cli::EvalEntry> entries;
        for (std::size_t i = 0; i < docs.size(); ++i) {
            const ReadingOrder ref = cli::read_reference_order(opt.refs[i]);
            entries.push_back(cli::evaluate(results[i].order, ref, docs[i].id));
        }
        summary["evaluation"] = nlohmann::json::parse(cli::report_to_json(cli::summarize(entries)));
    }
    if (opt.bench > 0) {
        nlohmann::json rows = nlohmann::json::array();
        for (const Document& d : docs) {
            const cli::BenchStats s = cli::bench(d, spec, opt.bench);
            rows.push_back({{"id", d.id},
                            {"tokens", d.size()},
                            {"strategy", cli::strategy_name(spec.strategy)},
                            {"samples", s.samples},
                            {"mean_ms", s.mean_ms},
                            {"stddev_ms", s.stddev_ms},
                            {"min_ms", s.min_ms},
                            {"max_ms", s.max_ms}});
        }
        summary["bench"] = rows;
    }

    if (!summary.empty()) {
        std::cout << summary.dump(2) << "\n";
    } else if (opt.output.empty() && opt.dump_tree.empty() && opt.profile_svg.empty()) {
        for (std::size_t i = 0; i < docs.size(); ++i) {
            std::cout << cli::to_order_json(docs[i], results[i].order,
                                            cli::strategy_name(spec.strategy), results[i].seed);
        }
    }
    return 0;
}

int run_dcpe(const DcpeOptions& opt) {
    const cli::DcpeRequest req = cli::parse_dcpe_request(cli::read_file(opt.input), opt.input);
    simd::Isa isa = simd::best_isa();
    if (opt.isa == "scalar") {
        isa = simd::Isa::Scalar;
    } else if (opt.isa == "avx2") {
        if (!simd::isa_supported(simd::Isa::Avx2)) {
            throw InputError("avx2 kernels are not available on this machine");
        }
        isa = simd::Isa::Avx2;
    } else if (opt.isa != "auto") {
        throw InputError("--isa must be auto, scalar or avx2");
    }
    const FeatureSeq out = dcpe_forward(req.text, req.visual, req.model, isa);
    const std::string body = cli::dcpe_output_json(out, req.text.length);
    if (opt.output.empty()) {
        std::cout << body;
    } else {
        cli::write_file(opt.output, body);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reading-order detection for OCR token boxes (XY Cut and baselines)"};
    app.set_version_flag("--version", "xyorder 1.0");

    Options opt;
    app.add_option("--input", opt.inputs, "Annotation files, one document each");
    app.add_option("--format", opt.format, "Input format")
        ->check(CLI::IsMember({"boxes-json", "funsd-annotation"}));
    app.add_option("--order", opt.order, "Ordering strategy")
        ->check(CLI::IsMember({"default", "yx", "xy", "sum", "xycut", "aug-xycut", "aug-yx"}));
    app.add_option("--lambda-x", opt.lambda_x, "Shift threshold on x, in [0,1]");
    app.add_option("--lambda-y", opt.lambda_y, "Shift threshold on y, in [0,1]");
    app.add_option("--theta", opt.theta, "Shift magnitude in pixels");
    app.add_option("--seed", opt.seed, "Base seed for augmented strategies");
    app.add_option("--distribution", opt.distribution, "Shift draw distribution")
        ->check(CLI::IsMember({"uniform", "clamped-normal"}));
    app.add_option("--ref", opt.refs, "Reference order files, one per document");
    app.add_option("--dump-tree", opt.dump_tree, "Write XY trees (file.json or directory)");
    app.add_option("--profile-svg", opt.profile_svg, "Write projection profile plots (file.svg or directory)");
    app.add_option("--axis", opt.axis, "Profile axis for --profile-svg")->check(CLI::IsMember({"h", "v"}));
    app.add_option("--bench", opt.bench, "Time each document over N repetitions");
    app.add_option("--output", opt.output, "Write order files (file.json or directory)");
    app.add_option("--jobs", opt.jobs, "Documents processed in parallel")->check(CLI::PositiveNumber);
    app.add_option("--synthetic", opt.synthetic, "Add a synthetic document with K boxes");

    DcpeOptions dopt;
    CLI::App* dcpe = app.add_subcommand("dcpe", "Run the dilated position-encoding forward pass");
    dcpe->add_option("--input", dopt.input, "Tensor JSON file")->required();
    dcpe->add_option("--output", dopt.output, "Output JSON file (default stdout)");
    dcpe->add_option("--isa", dopt.isa, "Kernel variant")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*dcpe) {
            return run_dcpe(dopt);
        }
        return run_orders(opt);
    } catch (const InputError& e) {
        std::cerr << "xyorder: " << e.what() << "\n";
        return kExitInput;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "xyorder: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvariantViolation& e) {
        std::cerr << "xyorder: internal error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "xyorder: internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
