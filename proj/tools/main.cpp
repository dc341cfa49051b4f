// wordmap: spectral 2-D maps of word distribution and suffix coherence
// scoring for a raw text corpus.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordmap/errors.hpp"
#include "wordmap/pipeline.hpp"

namespace {

struct CliOptions {
    wordmap::PipelineConfig config;
    std::string mode = "left";
    bool transformed = false;
    bool dump_contexts = false;
    std::vector<std::string> suffixes;
    std::vector<std::string> highlights;
    std::uint32_t labels = 100;
    bool label_all = false;
    bool no_labels = false;
};

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    cmd->set_config("--config", "", "key = value configuration file (flags win)");
    cmd->add_option("--corpus", opt.config.corpus_path, "input corpus, plain UTF-8 text");
    cmd->add_option("--out-dir", opt.config.out_dir, "artifact directory")
        ->capture_default_str();
    cmd->add_option("--top-k", opt.config.top_k, "graph vertices: K most frequent words")
        ->capture_default_str();
    cmd->add_option("--neighbors", opt.config.neighbors, "nearest neighbors N per word")
        ->capture_default_str();
    cmd->add_option("--eigenpairs", opt.config.eigenpairs, "embedding columns m")
        ->capture_default_str();
    cmd->add_option("--atomic-k", opt.config.atomic_k,
                    "words kept atomic by the morph transform")
        ->capture_default_str();
    cmd->add_option("--signatures-file", opt.config.signatures_file,
                    "use this stem/signature TSV instead of inducing one");
    cmd->add_option("--cutoff", opt.config.cutoff, "coherence cut-off on the mean scatter")
        ->capture_default_str();
    cmd->add_option("--min-word-len", opt.config.morph.min_word_len,
                    "shortest word the inducer splits")
        ->capture_default_str();
    cmd->add_option("--min-stem-len", opt.config.morph.min_stem_len, "shortest stem")
        ->capture_default_str();
    cmd->add_option("--max-suffix-len", opt.config.morph.max_suffix_len, "longest suffix")
        ->capture_default_str();
    cmd->add_option("--min-stems", opt.config.morph.min_stems,
                    "stems required for a robust signature")
        ->capture_default_str();
    cmd->add_option("--pseudo-floor", opt.config.pseudo_floor,
                    "min pseudo-word frequency for the second-pass graph")
        ->capture_default_str();
    cmd->add_flag_callback(
        "--no-sentence-boundaries",
        [&opt] { opt.config.tokenizer.sentence_boundaries = false; },
        "let bigrams cross sentence-final punctuation");
    cmd->add_flag_callback(
        "--no-lowercase", [&opt] { opt.config.tokenizer.lowercase = false; },
        "keep the original casing");
    cmd->add_flag_callback(
        "--keep-punctuation", [&opt] { opt.config.tokenizer.keep_punctuation = true; },
        "keep punctuation-only chunks as tokens");
}

wordmap::PlotOptions plot_options(const CliOptions& opt) {
    wordmap::PlotOptions plot;
    plot.highlight_suffixes = opt.highlights;
    plot.transformed = opt.transformed;
    plot.label_count = opt.labels;
    if (opt.label_all) plot.label_policy = wordmap::LabelPolicy::All;
    if (opt.no_labels) plot.label_policy = wordmap::LabelPolicy::None;
    return plot;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral word maps and suffix coherence from a raw corpus"};
    app.require_subcommand(1);

    CliOptions opt;

    CLI::App* ingest = app.add_subcommand("ingest", "tokenize; write vocabulary and bigrams");
    add_common_options(ingest, opt);

    CLI::App* embed = app.add_subcommand(
        "embed", "context vectors -> nearest-neighbor graph -> spectral embedding");
    add_common_options(embed, opt);
    embed->add_option("--mode", opt.mode, "graph direction: left or right")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    embed->add_flag("--transformed", opt.transformed,
                    "embed the morph-transformed corpus (atomic words + pseudo-words)");
    embed->add_flag("--dump-contexts", opt.dump_contexts, "also write the context triplets");

    CLI::App* morph = app.add_subcommand(
        "morph", "induce (or load) signatures; write the transformed corpus");
    add_common_options(morph, opt);

    CLI::App* coherence =
        app.add_subcommand("coherence", "score suffix scatter in both transformed embeddings");
    add_common_options(coherence, opt);
    coherence->add_option("--suffixes", opt.suffixes,
                          "suffixes to score (comma separated; NULL for the empty suffix; "
                          "default: all suffixes in the analysis)")
        ->delimiter(',');

    CLI::App* plot = app.add_subcommand("plot", "render an embedding as an SVG scatter plot");
    add_common_options(plot, opt);
    plot->add_option("--mode", opt.mode, "left, right or cross (left c1 vs right c1)")
        ->capture_default_str();
    plot->add_flag("--transformed", opt.transformed, "plot the transformed-corpus embedding");
    plot->add_option("--highlight", opt.highlights,
                     "color all pseudo-words of these suffixes (comma separated)")
        ->delimiter(',');
    plot->add_option("--labels", opt.labels, "label the n most frequent units")
        ->capture_default_str();
    plot->add_flag("--label-all", opt.label_all, "label every point");
    plot->add_flag("--no-labels", opt.no_labels, "draw no labels");

    CLI::App* pipeline = app.add_subcommand("pipeline", "run every stage end to end");
    add_common_options(pipeline, opt);
    pipeline->add_option("--suffixes", opt.suffixes,
                         "suffixes for the coherence report (default: all)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ingest->parsed()) {
            wordmap::IngestStats stats = wordmap::run_ingest(opt.config);
            std::cout << stats.tokens << " tokens (" << stats.boundaries << " boundaries), "
                      << stats.types << " types, " << stats.bigrams << " distinct bigrams\n";
        } else if (embed->parsed()) {
            wordmap::Direction d =
                opt.mode == "left" ? wordmap::Direction::Left : wordmap::Direction::Right;
            wordmap::EmbedStats stats =
                wordmap::run_embed(opt.config, d, opt.transformed, opt.dump_contexts);
            std::cout << stats.vertices << " vertices (" << stats.removed << " isolated removed), "
                      << stats.components << " component(s), " << stats.columns << " columns\n";
        } else if (morph->parsed()) {
            wordmap::MorphStats stats = wordmap::run_morph(opt.config);
            std::cout << stats.signatures << " signatures, " << stats.stems << " stems, "
                      << stats.analyzed_words << " words analyzed\n";
        } else if (coherence->parsed()) {
            wordmap::CoherenceReport report = wordmap::run_coherence(opt.config, opt.suffixes);
            for (const wordmap::SuffixCoherence& row : report.rows) {
                std::printf("%-8s n=%-3u", row.suffix.empty() ? "NULL" : row.suffix.c_str(),
                            row.n_signatures);
                if (row.mean) {
                    std::printf(" left=%.4f right=%.4f mean=%.4f %s\n", row.left->value,
                                row.right->value, *row.mean, verdict_name(row.verdict));
                } else {
                    std::printf(" %s\n", verdict_name(row.verdict));
                }
            }
        } else if (plot->parsed()) {
            wordmap::run_plot(opt.config, wordmap::parse_plot_mode(opt.mode), plot_options(opt));
        } else if (pipeline->parsed()) {
            wordmap::run_pipeline(opt.config, opt.suffixes);
        }
    } catch (const wordmap::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const wordmap::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const wordmap::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
