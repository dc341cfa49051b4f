#include "wordmap/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "wordmap/errors.hpp"

namespace wordmap {

NormalizedCoords normalize_coords(const SpectralEmbedding& embedding, std::uint32_t x_col,
                                  std::uint32_t y_col) {
    if (embedding.size() == 0) throw ArgumentError("cannot normalize an empty embedding");
    if (x_col >= embedding.n_cols || y_col >= embedding.n_cols) {
        throw ArgumentError("coordinate column out of range (embedding has " +
                            std::to_string(embedding.n_cols) + " columns)");
    }

    auto axis_range = [&](std::uint32_t col) {
        double lo = embedding.at(0, col);
        double hi = lo;
        for (std::size_t i = 1; i < embedding.size(); ++i) {
            lo = std::min(lo, embedding.at(i, col));
            hi = std::max(hi, embedding.at(i, col));
        }
        return std::pair{lo, hi};
    };
    auto [x_lo, x_hi] = axis_range(x_col);
    auto [y_lo, y_hi] = axis_range(y_col);

    auto rescale = [](double value, double lo, double hi) {
        return hi > lo ? (value - lo) / (hi - lo) : 0.5;
    };

    NormalizedCoords coords;
    for (std::size_t i = 0; i < embedding.size(); ++i) {
        coords.points[embedding.words[i]] = Point2{
            rescale(embedding.at(i, x_col), x_lo, x_hi),
            rescale(embedding.at(i, y_col), y_lo, y_hi),
        };
    }
    return coords;
}

std::optional<Scatter> suffix_scatter(const NormalizedCoords& coords,
                                      std::span<const std::string> pseudo_words) {
    std::vector<Point2> hits;
    for (const std::string& name : pseudo_words) {
        if (const Point2* p = coords.find(name)) hits.push_back(*p);
    }
    if (hits.empty()) return std::nullopt;

    Point2 centroid;
    for (const Point2& p : hits) {
        centroid.x += p.x;
        centroid.y += p.y;
    }
    centroid.x /= static_cast<double>(hits.size());
    centroid.y /= static_cast<double>(hits.size());

    double total = 0.0;
    for (const Point2& p : hits) {
        total += std::hypot(p.x - centroid.x, p.y - centroid.y);
    }
    return Scatter{total / static_cast<double>(hits.size()),
                   static_cast<std::uint32_t>(hits.size())};
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Coherent: return "coherent";
        case Verdict::Incoherent: return "incoherent";
        case Verdict::Absent: return "absent";
    }
    return "?";
}

CoherenceReport coherence_report(const NormalizedCoords& left, const NormalizedCoords& right,
                                 std::span<const std::string> suffixes,
                                 const MorphAnalysis& analysis, double cutoff) {
    CoherenceReport report;
    report.cutoff = cutoff;
    for (const std::string& suffix : suffixes) {
        SuffixCoherence row;
        row.suffix = suffix;
        auto pseudo = analysis.pseudo_words_for(suffix);
        row.n_signatures = static_cast<std::uint32_t>(pseudo.size());
        row.left = suffix_scatter(left, pseudo);
        row.right = suffix_scatter(right, pseudo);
        if (row.left && row.right) {
            row.mean = (row.left->value + row.right->value) / 2.0;
            row.verdict = *row.mean < cutoff ? Verdict::Coherent : Verdict::Incoherent;
        } else {
            row.verdict = Verdict::Absent;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

void write_coherence_report(const std::filesystem::path& path, const CoherenceReport& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());

    auto fmt = [](const std::optional<double>& value) -> std::string {
        if (!value) return "NA";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", *value);
        return buf;
    };
    for (const SuffixCoherence& row : report.rows) {
        std::optional<double> l, r;
        if (row.left) l = row.left->value;
        if (row.right) r = row.right->value;
        out << (row.suffix.empty() ? std::string(kNullSuffix) : row.suffix) << '\t'
            << row.n_signatures << '\t' << fmt(l) << '\t' << fmt(r) << '\t' << fmt(row.mean)
            << '\t' << verdict_name(row.verdict) << '\n';
    }
    if (!out) throw IoError("error writing " + path.string());
}

} // namespace wordmap
