// Emits a deterministic English-like corpus plus a part-of-speech lexicon,
// for demos and end-to-end tests.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "textgen.hpp"

int main(int argc, char** argv) {
    CLI::App app{"generate a deterministic English-like test corpus"};
    std::uint64_t tokens = 1100000;
    std::uint64_t seed = 42;
    std::string out_path = "corpus.txt";
    std::string lexicon_path;
    app.add_option("--tokens", tokens, "approximate token count")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--out", out_path, "corpus output path")->capture_default_str();
    app.add_option("--lexicon", lexicon_path, "also write form<TAB>category TSV here");
    CLI11_PARSE(app, argc, argv);

    textgen::GeneratedCorpus corpus = textgen::generate_english(tokens, seed);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    out << corpus.text;
    out.close();

    if (!lexicon_path.empty()) {
        std::ofstream lex(lexicon_path, std::ios::binary);
        if (!lex) {
            std::cerr << "cannot write " << lexicon_path << "\n";
            return 2;
        }
        for (const auto& [form, category] : corpus.lexicon) {
            lex << form << '\t' << category << '\n';
        }
    }
    std::cout << "wrote " << out_path << " (" << corpus.text.size() << " bytes, "
              << corpus.lexicon.size() << " lexicon forms)\n";
    return 0;
}
