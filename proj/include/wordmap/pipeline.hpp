#ifndef WORDMAP_PIPELINE_HPP
#define WORDMAP_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wordmap/coherence.hpp"
#include "wordmap/context.hpp"
#include "wordmap/corpus.hpp"
#include "wordmap/morphology.hpp"
#include "wordmap/render.hpp"

namespace wordmap {

struct PipelineConfig {
    std::string corpus_path;
    std::string out_dir = "out";
    std::uint32_t top_k = 1000;     // K: graph vertices, first pass
    std::uint32_t neighbors = 20;   // N
    std::uint32_t eigenpairs = 3;   // m (column 0 is trivial)
    std::uint32_t atomic_k = 1000;  // words kept atomic by the morph transform
    MorphParams morph;
    std::uint32_t pseudo_floor = 5; // min pseudo-word count for the second-pass graph
    double cutoff = 0.10;
    std::string signatures_file;    // optional: external analysis instead of induction
    TokenizeConfig tokenizer;

    /// Throws ArgumentError on inconsistent values (N >= K, zero counts, ...).
    void validate() const;
};

/// Artifact locations inside the output directory.
struct Artifacts {
    std::filesystem::path dir;

    std::filesystem::path vocabulary() const { return dir / "vocabulary.tsv"; }
    std::filesystem::path bigrams() const { return dir / "bigrams.tsv"; }
    std::filesystem::path signatures() const { return dir / "signatures.tsv"; }
    std::filesystem::path transformed_corpus() const { return dir / "transformed.txt"; }
    std::filesystem::path coherence() const { return dir / "coherence.tsv"; }

    std::filesystem::path embedding(Direction d, bool transformed) const {
        return dir / (std::string("embedding.") + (transformed ? "morph." : "") +
                      direction_name(d) + ".tsv");
    }
    std::filesystem::path graph_edges(Direction d, bool transformed) const {
        return dir / (std::string("graph.") + (transformed ? "morph." : "") + direction_name(d) +
                      ".edges.tsv");
    }
    std::filesystem::path graph_removed(Direction d, bool transformed) const {
        return dir / (std::string("graph.") + (transformed ? "morph." : "") + direction_name(d) +
                      ".removed.txt");
    }
    std::filesystem::path plot(const std::string& mode, bool transformed) const {
        return dir / (std::string("plot.") + (transformed ? "morph." : "") + mode + ".svg");
    }
};

enum class PlotMode { Left, Right, Cross };

PlotMode parse_plot_mode(const std::string& mode); // throws ArgumentError
const char* plot_mode_name(PlotMode mode);

struct IngestStats {
    std::uint64_t tokens = 0;     // non-boundary tokens
    std::uint64_t boundaries = 0;
    std::uint64_t types = 0;
    std::uint64_t bigrams = 0;    // distinct pairs
};

struct EmbedStats {
    std::size_t vertices = 0;
    std::size_t removed = 0;
    std::size_t components = 0;
    std::uint32_t columns = 0;
};

struct MorphStats {
    std::size_t signatures = 0;
    std::size_t stems = 0;
    std::size_t analyzed_words = 0;
};

struct PlotOptions {
    std::vector<std::string> highlight_suffixes; // "NULL" names the empty suffix
    bool transformed = false;
    LabelPolicy label_policy = LabelPolicy::TopN;
    std::uint32_t label_count = 100;
};

IngestStats run_ingest(const PipelineConfig& config);
EmbedStats run_embed(const PipelineConfig& config, Direction direction, bool transformed,
                     bool dump_contexts = false);
MorphStats run_morph(const PipelineConfig& config);
CoherenceReport run_coherence(const PipelineConfig& config, std::vector<std::string> suffixes);
void run_plot(const PipelineConfig& config, PlotMode mode, const PlotOptions& options);

/// ingest -> morph -> embeddings (both passes, both directions) -> coherence
/// over all suffixes -> the three first-pass plots.
void run_pipeline(const PipelineConfig& config, const std::vector<std::string>& suffixes);

} // namespace wordmap

#endif
