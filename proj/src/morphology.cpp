#include "wordmap/morphology.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>

#include "wordmap/errors.hpp"

namespace wordmap {
namespace {

bool has_underscore(std::string_view word) { return word.find('_') != std::string_view::npos; }

std::string render_suffix(std::string_view suffix) {
    return suffix.empty() ? std::string(kNullSuffix) : std::string(suffix);
}

/// Precedence for competing analyses of one word: most stems, then longer
/// suffix, then lexicographically smaller suffix.
bool better_split(std::uint32_t stems_a, std::string_view suffix_a, std::uint32_t stems_b,
                  std::string_view suffix_b) {
    if (stems_a != stems_b) return stems_a > stems_b;
    if (suffix_a.size() != suffix_b.size()) return suffix_a.size() > suffix_b.size();
    return suffix_a < suffix_b;
}

} // namespace

std::string Signature::make_name(std::span<const std::string> sorted_suffixes) {
    std::string name;
    for (const std::string& suffix : sorted_suffixes) {
        if (!name.empty()) name += '.';
        name += render_suffix(suffix);
    }
    return name;
}

std::vector<std::string> MorphAnalysis::suffixes() const {
    std::set<std::string> all;
    for (const Signature& sig : signatures) {
        all.insert(sig.suffixes.begin(), sig.suffixes.end());
    }
    return {all.begin(), all.end()};
}

std::vector<std::string> MorphAnalysis::pseudo_words_for(std::string_view suffix) const {
    std::vector<std::string> result;
    for (const Signature& sig : signatures) {
        if (std::binary_search(sig.suffixes.begin(), sig.suffixes.end(), suffix)) {
            result.push_back(pseudo_word(sig, suffix));
        }
    }
    return result;
}

MorphAnalysis induce_signatures(const Vocabulary& vocab, const MorphParams& params) {
    if (params.min_stem_len == 0 || params.min_word_len == 0 || params.min_stems == 0) {
        throw ArgumentError("morphology thresholds must be positive");
    }

    // Suffix set per stem, over all admissible splits of all words.
    std::map<std::string, std::set<std::string>> stem_suffixes;
    for (const auto& [word, count] : vocab.entries()) {
        if (word.size() < params.min_word_len || word.size() < params.min_stem_len ||
            has_underscore(word)) {
            continue;
        }
        std::size_t max_suffix = std::min<std::size_t>(params.max_suffix_len,
                                                       word.size() - params.min_stem_len);
        for (std::size_t len = 0; len <= max_suffix; ++len) {
            stem_suffixes[word.substr(0, word.size() - len)].insert(word.substr(word.size() - len));
        }
    }
    // A stem that is itself a corpus word appears with the NULL suffix even
    // when the standalone word is too short to be split (e.g. "boy").
    for (auto& [stem, suffixes] : stem_suffixes) {
        if (vocab.rank_of(stem)) suffixes.insert("");
    }

    // Group stems by identical suffix set; keep the robust groups, ordered by name.
    std::map<std::string, std::vector<std::string>> group_stems;   // name -> stems
    std::map<std::string, std::vector<std::string>> group_suffixes; // name -> suffixes
    for (const auto& [stem, suffixes] : stem_suffixes) {
        if (suffixes.size() < 2) continue;
        std::vector<std::string> sorted(suffixes.begin(), suffixes.end());
        std::string name = Signature::make_name(sorted);
        group_stems[name].push_back(stem);
        group_suffixes.try_emplace(name, std::move(sorted));
    }

    MorphAnalysis analysis;
    for (auto& [name, stems] : group_stems) {
        if (stems.size() < params.min_stems) continue;
        Signature sig;
        sig.suffixes = std::move(group_suffixes.at(name));
        sig.name = name;
        sig.stem_count = static_cast<std::uint32_t>(stems.size());
        std::uint32_t index = static_cast<std::uint32_t>(analysis.signatures.size());
        analysis.signatures.push_back(std::move(sig));
        for (std::string& stem : stems) {
            analysis.stem_to_signature.emplace(std::move(stem), index);
        }
    }

    // Pick each word's analysis among its robust splits.
    for (const auto& [word, count] : vocab.entries()) {
        if (word.size() < params.min_word_len || word.size() < params.min_stem_len ||
            has_underscore(word)) {
            continue;
        }
        std::optional<WordSplit> best;
        std::size_t max_suffix = std::min<std::size_t>(params.max_suffix_len,
                                                       word.size() - params.min_stem_len);
        for (std::size_t len = 0; len <= max_suffix; ++len) {
            std::string stem = word.substr(0, word.size() - len);
            auto it = analysis.stem_to_signature.find(stem);
            if (it == analysis.stem_to_signature.end()) continue;
            const Signature& sig = analysis.signatures[it->second];
            std::string suffix = word.substr(word.size() - len);
            if (!std::binary_search(sig.suffixes.begin(), sig.suffixes.end(), suffix)) continue;
            if (!best || better_split(sig.stem_count, suffix,
                                      analysis.signatures[best->signature].stem_count,
                                      best->suffix)) {
                best = WordSplit{std::move(stem), std::move(suffix), it->second};
            }
        }
        if (best) analysis.word_to_split.emplace(word, std::move(*best));
    }
    return analysis;
}

std::string pseudo_word(const Signature& sig, std::string_view suffix) {
    return sig.name + "_" + render_suffix(suffix);
}

std::vector<std::string> transform_corpus(std::span<const std::string> tokens,
                                          const MorphAnalysis& analysis, const Vocabulary& vocab,
                                          std::uint32_t atomic_k) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const std::string& token : tokens) {
        if (is_boundary(token) || has_underscore(token)) {
            out.push_back(token);
            continue;
        }
        auto rank = vocab.rank_of(token);
        if (rank && *rank < atomic_k) {
            out.push_back(token);
            continue;
        }
        auto it = analysis.word_to_split.find(token);
        if (it == analysis.word_to_split.end()) {
            out.push_back(token);
        } else {
            out.push_back(pseudo_word(analysis.signature_of(it->second), it->second.suffix));
        }
    }
    return out;
}

void write_signatures(const std::filesystem::path& path, const MorphAnalysis& analysis) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& [stem, index] : analysis.stem_to_signature) {
        out << stem << '\t' << analysis.signatures[index].name << '\n';
    }
    if (!out) throw IoError("error writing " + path.string());
}

namespace {

bool has_space(std::string_view s) {
    return s.find_first_of(" \t\v\f\r\n") != std::string_view::npos;
}

std::vector<std::string> parse_signature_name(std::string_view name, std::size_t line_no) {
    std::vector<std::string> suffixes;
    std::size_t start = 0;
    while (start <= name.size()) {
        std::size_t dot = name.find('.', start);
        std::string_view piece =
            dot == std::string_view::npos ? name.substr(start) : name.substr(start, dot - start);
        if (piece.empty()) throw ParseError("empty suffix in signature name", line_no);
        if (has_space(piece)) throw ParseError("whitespace in signature name", line_no);
        suffixes.emplace_back(piece == kNullSuffix ? std::string_view() : piece);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    std::sort(suffixes.begin(), suffixes.end());
    if (std::adjacent_find(suffixes.begin(), suffixes.end()) != suffixes.end()) {
        throw ValidationError("duplicate suffix in signature (line " + std::to_string(line_no) +
                              ")");
    }
    if (suffixes.size() < 2) {
        throw ValidationError("signature needs at least two suffixes (line " +
                              std::to_string(line_no) + ")");
    }
    return suffixes;
}

} // namespace

MorphAnalysis load_signatures(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    std::map<std::string, std::vector<std::string>> sig_suffixes; // canonical name -> suffixes
    std::map<std::string, std::vector<std::string>> sig_stems;
    std::map<std::string, std::string> stem_sig;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw ParseError("expected stem<TAB>signature", line_no);
        }
        std::string stem = line.substr(0, tab);
        std::string name = line.substr(tab + 1);
        if (stem.empty() || name.empty()) throw ParseError("empty field", line_no);
        if (has_space(stem)) throw ParseError("whitespace in stem", line_no);

        auto suffixes = parse_signature_name(name, line_no);
        std::string canonical = Signature::make_name(suffixes);
        if (auto it = stem_sig.find(stem); it != stem_sig.end()) {
            if (it->second != canonical) {
                throw ValidationError("stem '" + stem + "' listed with two signatures (line " +
                                      std::to_string(line_no) + ")");
            }
            continue;
        }
        stem_sig.emplace(stem, canonical);
        sig_suffixes.try_emplace(canonical, std::move(suffixes));
        sig_stems[canonical].push_back(stem);
    }

    MorphAnalysis analysis;
    std::map<std::string, std::uint32_t> index_of;
    for (auto& [name, suffixes] : sig_suffixes) {
        Signature sig;
        sig.suffixes = std::move(suffixes);
        sig.name = name;
        sig.stem_count = static_cast<std::uint32_t>(sig_stems.at(name).size());
        index_of.emplace(name, static_cast<std::uint32_t>(analysis.signatures.size()));
        analysis.signatures.push_back(std::move(sig));
    }
    for (const auto& [stem, name] : stem_sig) {
        analysis.stem_to_signature.emplace(stem, index_of.at(name));
    }

    // Derive word analyses from every stem+suffix combination, resolving
    // collisions with the induction precedence.
    for (const auto& [stem, index] : analysis.stem_to_signature) {
        const Signature& sig = analysis.signatures[index];
        for (const std::string& suffix : sig.suffixes) {
            std::string word = stem + suffix;
            WordSplit split{stem, suffix, index};
            auto [it, inserted] = analysis.word_to_split.emplace(word, split);
            if (!inserted) {
                const Signature& held = analysis.signature_of(it->second);
                if (better_split(sig.stem_count, suffix, held.stem_count, it->second.suffix)) {
                    it->second = split;
                }
            }
        }
    }
    return analysis;
}

} // namespace wordmap
