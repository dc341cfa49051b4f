#include "wordmap/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "wordmap/errors.hpp"

namespace wordmap {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_punct(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u < 128 && std::ispunct(u) != 0;
}

bool is_sentence_final(char c) { return c == '.' || c == '!' || c == '?'; }

char lower(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u < 128 ? static_cast<char>(std::tolower(u)) : c;
}

/// Returns the byte offset of the first malformed UTF-8 sequence, or npos.
std::size_t find_invalid_utf8(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char b = static_cast<unsigned char>(text[i]);
        std::size_t len;
        std::uint32_t cp;
        if (b < 0x80) {
            ++i;
            continue;
        } else if ((b & 0xE0) == 0xC0) {
            len = 2;
            cp = b & 0x1F;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
            cp = b & 0x0F;
        } else if ((b & 0xF8) == 0xF0) {
            len = 4;
            cp = b & 0x07;
        } else {
            return i;
        }
        if (i + len > n) return i;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char c = static_cast<unsigned char>(text[i + k]);
            if ((c & 0xC0) != 0x80) return i;
            cp = (cp << 6) | (c & 0x3F);
        }
        // Overlong forms, surrogates and out-of-range code points.
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
            (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
            return i;
        }
        i += len;
    }
    return std::string_view::npos;
}

} // namespace

std::vector<std::string> tokenize(std::string_view text, const TokenizeConfig& config) {
    if (std::size_t bad = find_invalid_utf8(text); bad != std::string_view::npos) {
        throw ParseError("invalid UTF-8 at byte offset " + std::to_string(bad));
    }

    std::vector<std::string> tokens;
    auto emit_boundary = [&] {
        if (!config.sentence_boundaries) return;
        if (tokens.empty() || is_boundary(tokens.back())) return;
        tokens.emplace_back(kBoundary);
    };

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && is_space(text[i])) ++i;
        std::size_t start = i;
        while (i < n && !is_space(text[i])) ++i;
        if (start == i) break;
        std::string_view chunk = text.substr(start, i - start);

        std::size_t lo = 0, hi = chunk.size();
        while (lo < hi && is_punct(chunk[lo])) ++lo;
        while (hi > lo && is_punct(chunk[hi - 1])) --hi;

        bool sentence_end = false;
        for (std::size_t k = hi; k < chunk.size(); ++k) {
            if (is_sentence_final(chunk[k])) sentence_end = true;
        }
        if (lo >= hi) {
            // Punctuation-only chunk: the whole of it counts as trailing.
            for (char c : chunk) {
                if (is_sentence_final(c)) sentence_end = true;
            }
        }

        if (lo < hi) {
            std::string word(chunk.substr(lo, hi - lo));
            if (config.lowercase) {
                std::transform(word.begin(), word.end(), word.begin(), lower);
            }
            tokens.push_back(std::move(word));
        } else if (config.keep_punctuation && !chunk.empty()) {
            tokens.emplace_back(chunk);
        }
        if (sentence_end) emit_boundary();
    }
    return tokens;
}

Vocabulary::Vocabulary(std::vector<Entry> entries) : entries_(std::move(entries)) {
    rank_.reserve(entries_.size());
    for (std::uint32_t i = 0; i < entries_.size(); ++i) {
        rank_.emplace(entries_[i].first, i);
    }
}

std::optional<std::uint32_t> Vocabulary::rank_of(std::string_view word) const {
    auto it = rank_.find(std::string(word));
    if (it == rank_.end()) return std::nullopt;
    return it->second;
}

Vocabulary build_vocabulary(std::span<const std::string> tokens) {
    struct Slot {
        std::uint64_t count = 0;
        std::size_t first_seen = 0;
    };
    std::unordered_map<std::string, Slot> counts;
    std::size_t order = 0;
    for (const std::string& tok : tokens) {
        if (is_boundary(tok)) continue;
        auto [it, inserted] = counts.try_emplace(tok);
        if (inserted) it->second.first_seen = order++;
        ++it->second.count;
    }

    std::vector<std::pair<std::string, Slot>> items(counts.begin(), counts.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second.count != b.second.count) return a.second.count > b.second.count;
        return a.second.first_seen < b.second.first_seen;
    });

    std::vector<Vocabulary::Entry> entries;
    entries.reserve(items.size());
    for (auto& [word, slot] : items) {
        entries.emplace_back(std::move(word), slot.count);
    }
    return Vocabulary(std::move(entries));
}

std::uint64_t BigramTable::count(std::uint32_t left, std::uint32_t right) const {
    auto it = counts_.find(key(left, right));
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t BigramTable::total() const {
    std::uint64_t sum = 0;
    for (const auto& [k, v] : counts_) sum += v;
    return sum;
}

BigramTable count_bigrams(std::span<const std::string> tokens, const Vocabulary& vocab) {
    BigramTable table;
    bool have_prev = false;
    std::uint32_t prev = 0;
    for (const std::string& tok : tokens) {
        if (is_boundary(tok)) {
            have_prev = false;
            continue;
        }
        auto rank = vocab.rank_of(tok);
        if (!rank) {
            have_prev = false;
            continue;
        }
        if (have_prev) table.add(prev, *rank);
        prev = *rank;
        have_prev = true;
    }
    return table;
}

// --- file formats -----------------------------------------------------------

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

std::vector<std::string> read_token_file(const std::filesystem::path& path) {
    std::string text = read_text_file(path);
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

void write_token_file(const std::filesystem::path& path, std::span<const std::string> tokens) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    bool at_line_start = true;
    for (const std::string& tok : tokens) {
        if (!at_line_start) out << ' ';
        out << tok;
        // One sentence per line keeps the file diffable.
        at_line_start = is_boundary(tok);
        if (at_line_start) out << '\n';
    }
    if (!at_line_start) out << '\n';
    if (!out) throw IoError("error writing " + path.string());
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

std::uint64_t parse_count(std::string_view field, std::size_t line_no) {
    std::uint64_t value = 0;
    if (field.empty()) throw ParseError("empty count field", line_no);
    for (char c : field) {
        if (c < '0' || c > '9') throw ParseError("bad count field", line_no);
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

/// Applies `fn(line, line_no)` to each non-empty line of a TSV file.
template <typename Fn>
void for_each_line(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fn(std::string_view(line), line_no);
    }
}

} // namespace

void write_vocabulary(const std::filesystem::path& path, const Vocabulary& vocab) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (std::uint32_t r = 0; r < vocab.size(); ++r) {
        out << r << '\t' << vocab.word(r) << '\t' << vocab.count(r) << '\n';
    }
    if (!out) throw IoError("error writing " + path.string());
}

Vocabulary read_vocabulary(const std::filesystem::path& path) {
    std::vector<Vocabulary::Entry> entries;
    for_each_line(path, [&](std::string_view line, std::size_t line_no) {
        auto fields = split_tabs(line);
        if (fields.size() != 3) throw ParseError("expected rank<TAB>word<TAB>count", line_no);
        std::uint64_t rank = parse_count(fields[0], line_no);
        if (rank != entries.size()) throw ParseError("ranks must ascend from 0", line_no);
        if (fields[1].empty()) throw ParseError("empty word", line_no);
        entries.emplace_back(std::string(fields[1]), parse_count(fields[2], line_no));
    });
    return Vocabulary(std::move(entries));
}

void write_bigrams(const std::filesystem::path& path, const BigramTable& table, const Vocabulary& vocab) {
    std::vector<BigramTable::Key> keys;
    keys.reserve(table.size());
    for (const auto& [k, v] : table.counts()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (BigramTable::Key k : keys) {
        out << vocab.word(BigramTable::left_of(k)) << '\t' << vocab.word(BigramTable::right_of(k))
            << '\t' << table.counts().at(k) << '\n';
    }
    if (!out) throw IoError("error writing " + path.string());
}

BigramTable read_bigrams(const std::filesystem::path& path, const Vocabulary& vocab) {
    BigramTable table;
    for_each_line(path, [&](std::string_view line, std::size_t line_no) {
        auto fields = split_tabs(line);
        if (fields.size() != 3) throw ParseError("expected left<TAB>right<TAB>count", line_no);
        auto l = vocab.rank_of(fields[0]);
        auto r = vocab.rank_of(fields[1]);
        if (!l || !r) throw ParseError("word not in vocabulary", line_no);
        table.add(*l, *r, parse_count(fields[2], line_no));
    });
    return table;
}

} // namespace wordmap
