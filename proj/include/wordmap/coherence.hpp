#ifndef WORDMAP_COHERENCE_HPP
#define WORDMAP_COHERENCE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordmap/morphology.hpp"
#include "wordmap/spectral.hpp"

namespace wordmap {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Two embedding columns rescaled so each axis spans [0,1] over all plotted
/// units. A degenerate axis (all values equal) maps to 0.5.
struct NormalizedCoords {
    std::map<std::string, Point2> points;

    const Point2* find(const std::string& name) const {
        auto it = points.find(name);
        return it == points.end() ? nullptr : &it->second;
    }
};

/// Throws ArgumentError on an empty embedding or bad column indices.
NormalizedCoords normalize_coords(const SpectralEmbedding& embedding, std::uint32_t x_col,
                                  std::uint32_t y_col);

struct Scatter {
    double value = 0.0;     // mean distance to the centroid, in unit-square units
    std::uint32_t points = 0;
};

/// Average distance to the mean over the pseudo-word points present in the
/// coordinate set. Nullopt when none of them is present ("absent", not 0).
std::optional<Scatter> suffix_scatter(const NormalizedCoords& coords,
                                      std::span<const std::string> pseudo_words);

enum class Verdict { Coherent, Incoherent, Absent };

const char* verdict_name(Verdict v);

struct SuffixCoherence {
    std::string suffix;              // empty = NULL
    std::uint32_t n_signatures = 0;  // signatures containing the suffix
    std::optional<Scatter> left;
    std::optional<Scatter> right;
    std::optional<double> mean;      // (left + right) / 2 when both present
    Verdict verdict = Verdict::Absent;
};

struct CoherenceReport {
    double cutoff = 0.10;
    std::vector<SuffixCoherence> rows;
};

/// Score each suffix in both embeddings; verdict = coherent iff the mean of
/// the two scatters is below the cutoff. Suffixes with no points on one side
/// are flagged Absent.
CoherenceReport coherence_report(const NormalizedCoords& left, const NormalizedCoords& right,
                                 std::span<const std::string> suffixes,
                                 const MorphAnalysis& analysis, double cutoff = 0.10);

/// TSV `suffix<TAB>n_signatures<TAB>left<TAB>right<TAB>mean<TAB>verdict`,
/// scatters with 4 decimal places, NA for absent sides.
void write_coherence_report(const std::filesystem::path& path, const CoherenceReport& report);

} // namespace wordmap

#endif
