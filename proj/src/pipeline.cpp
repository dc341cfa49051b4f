#include "wordmap/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>

#include "wordmap/errors.hpp"
#include "wordmap/graph.hpp"
#include "wordmap/spectral.hpp"

namespace wordmap {
namespace {

const char* kHighlightColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#17becf", "#e377c2"};

void require_file(const std::filesystem::path& path, const std::string& producing_stage) {
    if (!std::filesystem::exists(path)) {
        throw IoError("missing " + path.string() + "; run `" + producing_stage + "` first");
    }
}

Artifacts artifacts_for(const PipelineConfig& config) {
    if (config.out_dir.empty()) throw ArgumentError("output directory must not be empty");
    Artifacts art{config.out_dir};
    std::filesystem::create_directories(art.dir);
    return art;
}

std::string suffix_from_cli(const std::string& text) {
    return text == kNullSuffix ? std::string() : text;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("error writing " + path.string());
}

} // namespace

void PipelineConfig::validate() const {
    if (top_k == 0 || neighbors == 0 || eigenpairs == 0 || atomic_k == 0) {
        throw ArgumentError("top-k, neighbors, eigenpairs and atomic-k must be positive");
    }
    if (neighbors >= top_k) {
        throw ArgumentError("neighbors N = " + std::to_string(neighbors) +
                            " must be smaller than top-k K = " + std::to_string(top_k));
    }
    if (morph.min_word_len == 0 || morph.min_stem_len == 0 || morph.min_stems == 0) {
        throw ArgumentError("morphology thresholds must be positive");
    }
    if (!(cutoff > 0.0)) throw ArgumentError("cutoff must be positive");
    if (out_dir.empty()) throw ArgumentError("output directory must not be empty");
}

PlotMode parse_plot_mode(const std::string& mode) {
    if (mode == "left") return PlotMode::Left;
    if (mode == "right") return PlotMode::Right;
    if (mode == "cross") return PlotMode::Cross;
    throw ArgumentError("unknown plot mode '" + mode + "' (expected left, right or cross)");
}

const char* plot_mode_name(PlotMode mode) {
    switch (mode) {
        case PlotMode::Left: return "left";
        case PlotMode::Right: return "right";
        case PlotMode::Cross: return "cross";
    }
    return "?";
}

IngestStats run_ingest(const PipelineConfig& config) {
    config.validate();
    if (config.corpus_path.empty()) throw ArgumentError("no corpus path given");
    Artifacts art = artifacts_for(config);

    std::string text = read_text_file(config.corpus_path);
    std::vector<std::string> tokens = tokenize(text, config.tokenizer);
    Vocabulary vocab = build_vocabulary(tokens);
    BigramTable bigrams = count_bigrams(tokens, vocab);

    if (tokens.empty()) {
        std::cerr << "warning: corpus " << config.corpus_path << " produced no tokens\n";
    }
    write_vocabulary(art.vocabulary(), vocab);
    write_bigrams(art.bigrams(), bigrams, vocab);

    IngestStats stats;
    for (const std::string& tok : tokens) {
        if (is_boundary(tok)) {
            ++stats.boundaries;
        } else {
            ++stats.tokens;
        }
    }
    stats.types = vocab.size();
    stats.bigrams = bigrams.size();
    return stats;
}

namespace {

/// Vertex set for the second-pass graph: atomic words (original rank below
/// atomic_k) plus signature pseudo-words at or above the frequency floor,
/// ordered by transformed-corpus rank.
std::vector<std::uint32_t> second_pass_vertices(const Vocabulary& original,
                                                const Vocabulary& transformed,
                                                const MorphAnalysis& analysis,
                                                const PipelineConfig& config) {
    std::set<std::string> pseudo;
    for (const Signature& sig : analysis.signatures) {
        for (const std::string& suffix : sig.suffixes) {
            pseudo.insert(pseudo_word(sig, suffix));
        }
    }

    std::vector<std::uint32_t> ids;
    std::uint32_t atomic_limit =
        std::min<std::uint32_t>(config.atomic_k, static_cast<std::uint32_t>(original.size()));
    std::set<std::uint32_t> chosen;
    for (std::uint32_t r = 0; r < atomic_limit; ++r) {
        if (auto id = transformed.rank_of(original.word(r))) chosen.insert(*id);
    }
    for (std::uint32_t id = 0; id < transformed.size(); ++id) {
        if (transformed.count(id) < config.pseudo_floor) continue;
        if (pseudo.count(transformed.word(id))) chosen.insert(id);
    }
    ids.assign(chosen.begin(), chosen.end()); // ascending rank = frequency order
    return ids;
}

} // namespace

EmbedStats run_embed(const PipelineConfig& config, Direction direction, bool transformed,
                     bool dump_contexts) {
    config.validate();
    Artifacts art = artifacts_for(config);
    require_file(art.vocabulary(), "ingest");

    Vocabulary vocab = read_vocabulary(art.vocabulary());
    Vocabulary column_vocab; // vocabulary the context columns refer to
    ContextMatrix contexts;
    if (!transformed) {
        require_file(art.bigrams(), "ingest");
        BigramTable bigrams = read_bigrams(art.bigrams(), vocab);
        std::uint32_t k = config.top_k;
        if (k > vocab.size()) {
            k = static_cast<std::uint32_t>(vocab.size());
            std::cerr << "warning: top-k clamped to vocabulary size " << k << "\n";
        }
        if (config.neighbors >= k) {
            throw ArgumentError("neighbors N = " + std::to_string(config.neighbors) +
                                " must be smaller than the vertex count " + std::to_string(k));
        }
        contexts = build_context_matrix(bigrams, vocab, k, direction);
        column_vocab = vocab;
    } else {
        require_file(art.transformed_corpus(), "morph");
        require_file(art.signatures(), "morph");
        MorphAnalysis analysis = load_signatures(art.signatures());
        std::vector<std::string> tokens = read_token_file(art.transformed_corpus());
        Vocabulary t_vocab = build_vocabulary(tokens);
        BigramTable t_bigrams = count_bigrams(tokens, t_vocab);
        std::vector<std::uint32_t> vertices =
            second_pass_vertices(vocab, t_vocab, analysis, config);
        if (config.neighbors >= vertices.size()) {
            throw ArgumentError("neighbors N = " + std::to_string(config.neighbors) +
                                " must be smaller than the second-pass vertex count " +
                                std::to_string(vertices.size()));
        }
        contexts = build_context_matrix(t_bigrams, t_vocab, vertices, direction);
        column_vocab = std::move(t_vocab);
    }
    if (dump_contexts) {
        auto path = art.dir / (std::string("contexts.") + (transformed ? "morph." : "") +
                               direction_name(direction) + ".tsv");
        write_context_matrix(path, contexts, column_vocab);
    }

    NeighborGraph graph = knn_graph(contexts, config.neighbors);
    std::uint32_t m = config.eigenpairs;
    if (m > graph.vertex_count()) {
        m = static_cast<std::uint32_t>(graph.vertex_count());
        std::cerr << "warning: eigenpairs clamped to vertex count " << m << "\n";
    }
    SpectralEmbedding embedding = embed(graph, m);

    write_embedding(art.embedding(direction, transformed), embedding);
    write_edge_list(art.graph_edges(direction, transformed), graph);
    write_removal_list(art.graph_removed(direction, transformed), graph);

    EmbedStats stats;
    stats.vertices = graph.vertex_count();
    stats.removed = graph.removed_ids.size();
    stats.components = graph.components().size();
    stats.columns = m;
    return stats;
}

MorphStats run_morph(const PipelineConfig& config) {
    config.validate();
    if (config.corpus_path.empty()) throw ArgumentError("no corpus path given");
    Artifacts art = artifacts_for(config);
    require_file(art.vocabulary(), "ingest");

    Vocabulary vocab = read_vocabulary(art.vocabulary());
    MorphAnalysis analysis = config.signatures_file.empty()
                                 ? induce_signatures(vocab, config.morph)
                                 : load_signatures(config.signatures_file);

    std::string text = read_text_file(config.corpus_path);
    std::vector<std::string> tokens = tokenize(text, config.tokenizer);
    std::vector<std::string> rewritten =
        transform_corpus(tokens, analysis, vocab, config.atomic_k);

    write_signatures(art.signatures(), analysis);
    write_token_file(art.transformed_corpus(), rewritten);

    MorphStats stats;
    stats.signatures = analysis.signatures.size();
    stats.stems = analysis.stem_to_signature.size();
    stats.analyzed_words = analysis.word_to_split.size();
    return stats;
}

CoherenceReport run_coherence(const PipelineConfig& config, std::vector<std::string> suffixes) {
    config.validate();
    Artifacts art = artifacts_for(config);
    require_file(art.signatures(), "morph");
    require_file(art.embedding(Direction::Left, true), "embed --transformed --mode left");
    require_file(art.embedding(Direction::Right, true), "embed --transformed --mode right");

    MorphAnalysis analysis = load_signatures(art.signatures());
    SpectralEmbedding left = read_embedding(art.embedding(Direction::Left, true));
    SpectralEmbedding right = read_embedding(art.embedding(Direction::Right, true));
    if (left.n_cols < 3 || right.n_cols < 3) {
        throw ArgumentError("coherence needs embeddings with at least 3 columns (columns 1 and "
                            "2 are the plot axes); re-run embed with --eigenpairs >= 3");
    }

    NormalizedCoords left_coords = normalize_coords(left, 1, 2);
    NormalizedCoords right_coords = normalize_coords(right, 1, 2);

    std::vector<std::string> wanted;
    if (suffixes.empty()) {
        wanted = analysis.suffixes();
    } else {
        wanted.reserve(suffixes.size());
        for (const std::string& s : suffixes) wanted.push_back(suffix_from_cli(s));
    }

    CoherenceReport report =
        coherence_report(left_coords, right_coords, wanted, analysis, config.cutoff);
    write_coherence_report(art.coherence(), report);
    return report;
}

namespace {

SpectralEmbedding cross_embedding(const SpectralEmbedding& left, const SpectralEmbedding& right) {
    if (left.n_cols < 2 || right.n_cols < 2) {
        throw ArgumentError("cross plot needs embeddings with at least 2 columns");
    }
    std::map<std::string, std::size_t> right_row;
    for (std::size_t i = 0; i < right.size(); ++i) right_row.emplace(right.words[i], i);

    SpectralEmbedding cross;
    cross.n_cols = 2;
    for (std::size_t i = 0; i < left.size(); ++i) {
        auto it = right_row.find(left.words[i]);
        if (it == right_row.end()) continue; // vertex removed on one side only
        cross.vertex_ids.push_back(static_cast<std::uint32_t>(cross.words.size()));
        cross.words.push_back(left.words[i]);
        cross.coords.push_back(left.at(i, 1));
        cross.coords.push_back(right.at(it->second, 1));
    }
    if (cross.words.empty()) throw ArgumentError("left and right embeddings share no words");
    return cross;
}

} // namespace

void run_plot(const PipelineConfig& config, PlotMode mode, const PlotOptions& options) {
    config.validate();
    Artifacts art = artifacts_for(config);

    auto load = [&](Direction d) {
        const std::filesystem::path path = art.embedding(d, options.transformed);
        require_file(path, options.transformed
                               ? std::string("embed --transformed --mode ") + direction_name(d)
                               : std::string("embed --mode ") + direction_name(d));
        return read_embedding(path);
    };

    NormalizedCoords coords;
    std::vector<std::string> order; // plot points in embedding (frequency) order
    std::string title;
    if (mode == PlotMode::Cross) {
        SpectralEmbedding cross = cross_embedding(load(Direction::Left), load(Direction::Right));
        order = cross.words;
        coords = normalize_coords(cross, 0, 1);
        title = "left c1 x right c1";
    } else {
        Direction d = mode == PlotMode::Left ? Direction::Left : Direction::Right;
        SpectralEmbedding embedding = load(d);
        if (embedding.n_cols < 3) {
            throw ArgumentError("plot needs embeddings with at least 3 columns");
        }
        order = embedding.words;
        coords = normalize_coords(embedding, 1, 2);
        title = std::string(direction_name(d)) + " c1 x c2";
    }

    PlotSpec spec;
    spec.title = title;
    spec.label_policy = options.label_policy;
    spec.label_count = options.label_count;
    spec.points.reserve(order.size());
    for (const std::string& word : order) {
        const Point2* p = coords.find(word);
        spec.points.push_back(PlotPoint{word, p->x, p->y});
    }

    std::size_t color_index = 0;
    for (const std::string& raw : options.highlight_suffixes) {
        std::string suffix = suffix_from_cli(raw);
        std::string marker = "_" + (suffix.empty() ? std::string(kNullSuffix) : suffix);
        HighlightGroup group;
        group.name = (suffix.empty() ? std::string(kNullSuffix) : "-" + suffix);
        group.color = kHighlightColors[color_index++ % std::size(kHighlightColors)];
        for (const std::string& word : order) {
            if (word.size() > marker.size() &&
                word.compare(word.size() - marker.size(), marker.size(), marker) == 0) {
                group.labels.push_back(word);
            }
        }
        if (group.labels.empty()) {
            std::cerr << "warning: no points match highlight suffix '" << raw << "'\n";
        }
        spec.highlight_groups.push_back(std::move(group));
    }

    write_file(art.plot(plot_mode_name(mode), options.transformed), render_svg(spec));
}

void run_pipeline(const PipelineConfig& config, const std::vector<std::string>& suffixes) {
    IngestStats ingest = run_ingest(config);
    std::cout << "ingest: " << ingest.tokens << " tokens, " << ingest.types << " types, "
              << ingest.bigrams << " distinct bigrams\n";

    MorphStats morph = run_morph(config);
    std::cout << "morph: " << morph.signatures << " signatures over " << morph.stems
              << " stems; " << morph.analyzed_words << " words analyzed\n";

    for (bool transformed : {false, true}) {
        for (Direction d : {Direction::Left, Direction::Right}) {
            EmbedStats stats = run_embed(config, d, transformed);
            std::cout << "embed " << (transformed ? "morph " : "") << direction_name(d) << ": "
                      << stats.vertices << " vertices, " << stats.removed << " removed, "
                      << stats.components << " component(s)\n";
        }
    }

    CoherenceReport report = run_coherence(config, suffixes);
    std::cout << "coherence: " << report.rows.size() << " suffixes scored\n";

    for (PlotMode mode : {PlotMode::Left, PlotMode::Right, PlotMode::Cross}) {
        run_plot(config, mode, PlotOptions{});
    }
}

} // namespace wordmap
