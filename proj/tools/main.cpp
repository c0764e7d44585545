#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rep11/errors.hpp"
#include "rep11/graph.hpp"
#include "rep11/languages.hpp"
#include "rep11/perm.hpp"
#include "rep11/search.hpp"
#include "rep11/semantics.hpp"

namespace {

using namespace rep11;

// Exit codes: 0 success/true, 1 verification false or not found,
// 2 input error, 3 resource cap exceeded.
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

std::string read_stream_or_file(const std::string& source) {
    if (source == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(source);
    if (!in) throw InputError("cannot open file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// `-` reads stdin; an existing path reads the file; anything else is taken
// as the literal word text.
std::string word_text_from(const std::string& source) {
    if (source == "-" || std::filesystem::exists(source)) return read_stream_or_file(source);
    return source;
}

Graph graph_from(const std::string& source) { return Graph::parse(read_stream_or_file(source)); }

bool all_single_char(const std::vector<std::string>& alphabet) {
    for (const auto& t : alphabet)
        if (t.size() != 1) return false;
    return true;
}

std::string trim(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

// Compact mode is the default whenever every alphabet token is a single
// character and the text carries no interior whitespace; token mode otherwise.
Word parse_word(const std::string& raw, const std::vector<std::string>& alphabet,
                bool force_compact) {
    std::string text = trim(raw);
    if (force_compact) return Word::parse_compact(text, alphabet);
    bool has_ws = text.find_first_of(" \t\r\n") != std::string::npos;
    if (!has_ws && all_single_char(alphabet)) return Word::parse_compact(text, alphabet);
    return Word::parse_tokens(text, alphabet);
}

// Alphabet for `detect` when none is given: tokens in first-occurrence order.
std::vector<std::string> derive_alphabet(const std::string& raw) {
    std::string text = trim(raw);
    std::vector<std::string> tokens;
    bool has_ws = text.find_first_of(" \t\r\n") != std::string::npos;
    if (has_ws) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) tokens.push_back(tok);
    } else {
        for (char c : text) tokens.emplace_back(1, c);
    }
    std::vector<std::string> alphabet;
    for (const auto& t : tokens)
        if (std::find(alphabet.begin(), alphabet.end(), t) == alphabet.end())
            alphabet.push_back(t);
    return alphabet;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write file '" + out_path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rep11 - a toolkit for 1-11-representations of graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "rep11 0.1.0");
    int exit_code = 0;

    // decode
    auto* decode_cmd = app.add_subcommand("decode", "Decode a word into the graph it represents");
    std::string decode_source;
    std::vector<std::string> decode_alphabet;
    bool decode_compact = false;
    decode_cmd->add_option("word", decode_source, "word text, a word file, or - for stdin")->required();
    decode_cmd->add_option("--alphabet", decode_alphabet, "vertex list, in canonical order")
        ->required()
        ->expected(-1);
    decode_cmd->add_flag("--compact", decode_compact, "treat each character as one letter");
    decode_cmd->callback([&] {
        Word w = parse_word(word_text_from(decode_source), decode_alphabet, decode_compact);
        std::cout << decode(w, decode_alphabet).serialize();
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check whether a word represents a graph");
    std::string verify_graph_source, verify_word;
    bool verify_compact = false;
    verify_cmd->add_option("graph", verify_graph_source, "graph file or - for stdin")->required();
    verify_cmd->add_option("word", verify_word, "word text or a word file")->required();
    verify_cmd->add_flag("--compact", verify_compact, "treat each character as one letter");
    verify_cmd->callback([&] {
        Graph g = graph_from(verify_graph_source);
        Word w = parse_word(word_text_from(verify_word), g.vertices(), verify_compact);
        auto outcome = verify_explain(g, w);
        std::cout << (outcome.ok ? "true" : "false") << "\n";
        if (!outcome.ok) {
            std::cout << outcome.reason << "\n";
            for (const auto& m : outcome.mismatches) std::cout << m.describe() << "\n";
            exit_code = kExitFalse;
        }
    });

    // repnum
    auto* repnum_cmd = app.add_subcommand("repnum", "Representation number with a least witness");
    std::string repnum_graph_source;
    bool repnum_perm = false;
    std::size_t repnum_max = 0;
    repnum_cmd->add_option("graph", repnum_graph_source, "graph file or - for stdin")->required();
    repnum_cmd->add_flag("--permutational", repnum_perm, "count permutation blocks instead of letters");
    repnum_cmd->add_option("--max", repnum_max, "search bound (letters, or blocks with --permutational)");
    repnum_cmd->callback([&] {
        Graph g = graph_from(repnum_graph_source);
        if (repnum_perm) {
            std::size_t max_blocks = repnum_max ? repnum_max : g.vertex_count() + 1;
            auto r = perm_rep_number(g, max_blocks);
            if (!r) {
                std::cout << "not found within " << max_blocks << " blocks\n";
                exit_code = kExitFalse;
                return;
            }
            std::cout << r->blocks << "\n" << r->witness.word().display() << "\n";
        } else {
            std::size_t max_len = repnum_max ? repnum_max : 3 * g.vertex_count();
            auto r = rep_number(g, max_len);
            if (!r) {
                std::cout << "not found within length " << max_len << "\n";
                exit_code = kExitFalse;
                return;
            }
            std::cout << r->length << "\n" << r->witness.display() << "\n";
        }
    });

    // cubefree
    auto* cubefree_cmd =
        app.add_subcommand("cubefree", "Remove cubes from a permutational word, step by step");
    std::string cubefree_word;
    std::vector<std::string> cubefree_alphabet;
    bool cubefree_compact = false;
    cubefree_cmd->add_option("word", cubefree_word, "word text or a word file")->required();
    cubefree_cmd->add_option("--alphabet", cubefree_alphabet, "vertex list, in canonical order")
        ->required()
        ->expected(-1);
    cubefree_cmd->add_flag("--compact", cubefree_compact, "treat each character as one letter");
    cubefree_cmd->callback([&] {
        Word w = parse_word(word_text_from(cubefree_word), cubefree_alphabet, cubefree_compact);
        auto trace = cube_free_normalize_trace(PermWord::split(w));
        std::cout << trace.result.word().display() << "\n";
        for (const auto& rep : trace.removed)
            std::cout << "removed cube at start=" << rep.start << " period=" << rep.period << "\n";
        std::cout << "removals: " << trace.removed.size() << "\n";
    });

    // detect
    auto* detect_cmd = app.add_subcommand("detect", "List squares or cubes in a word");
    std::string detect_word;
    std::vector<std::string> detect_alphabet;
    bool detect_squares = false, detect_cubes = false, detect_compact = false;
    detect_cmd->add_option("word", detect_word, "word text or a word file")->required();
    detect_cmd->add_option("--alphabet", detect_alphabet, "vertex list (derived from the word if omitted)")
        ->expected(-1);
    detect_cmd->add_flag("--squares", detect_squares, "report squares");
    detect_cmd->add_flag("--cubes", detect_cubes, "report cubes");
    detect_cmd->add_flag("--compact", detect_compact, "treat each character as one letter");
    detect_cmd->callback([&] {
        if (detect_squares == detect_cubes)
            throw InputError("detect: pass exactly one of --squares or --cubes");
        std::string text = word_text_from(detect_word);
        std::vector<std::string> alphabet =
            detect_alphabet.empty() ? derive_alphabet(text) : detect_alphabet;
        Word w = parse_word(text, alphabet, detect_compact);
        for (const auto& rep : find_repetitions(w, detect_squares ? 2 : 3))
            std::cout << "(" << rep.start << "," << rep.period << ")\n";
    });

    // dfa
    auto* dfa_cmd = app.add_subcommand("dfa", "Compile a graph's representation language to a DFA");
    std::string dfa_graph_source, dfa_emit;
    bool dfa_perm = false, dfa_minimize = false, dfa_no_coverage = false, dfa_figure1 = false;
    std::size_t dfa_cap = 0, dfa_maxlen = 6;
    std::vector<std::string> dfa_alphabet;
    dfa_cmd->add_option("graph", dfa_graph_source, "graph file or - for stdin");
    dfa_cmd->add_flag("--permutational", dfa_perm, "restrict to permutational representations");
    dfa_cmd->add_flag("--minimize", dfa_minimize, "minimize before emitting");
    dfa_cmd->add_option("--emit", dfa_emit, "output format: dot or json");
    dfa_cmd->add_option("--cap", dfa_cap, "product state cap (default REP11_STATE_CAP or 5000000)");
    dfa_cmd->add_flag("--no-coverage", dfa_no_coverage, "drop the every-vertex-occurs requirement");
    dfa_cmd->add_flag("--figure1", dfa_figure1,
                      "diagnostic: compare the definition-derived pair automaton with the "
                      "hand-drawn variant and list disagreeing words");
    dfa_cmd->add_option("--maxlen", dfa_maxlen, "word length bound for --figure1");
    dfa_cmd->add_option("--alphabet", dfa_alphabet, "alphabet for --figure1 (default: a b c)")
        ->expected(-1);
    dfa_cmd->callback([&] {
        if (dfa_figure1) {
            std::vector<std::string> alphabet =
                dfa_alphabet.empty() ? std::vector<std::string>{"a", "b", "c"} : dfa_alphabet;
            if (alphabet.size() < 2) throw InputError("--figure1 needs at least two letters");
            Dfa reference = pair_adjacent_dfa(alphabet[0], alphabet[1], alphabet);
            Dfa figure = figure1_pair_dfa(alphabet[0], alphabet[1], alphabet);
            auto words = figure1_disagreements(alphabet[0], alphabet[1], alphabet, dfa_maxlen);
            std::cout << words.size() << " disagreements up to length " << dfa_maxlen << "\n";
            for (const auto& w : words)
                std::cout << w.display() << "\tdefinition=" << (reference.member(w) ? "accept" : "reject")
                          << " figure1=" << (figure.member(w) ? "accept" : "reject") << "\n";
            return;
        }
        if (dfa_graph_source.empty()) throw InputError("dfa: a graph file is required");
        if (dfa_emit != "dot" && dfa_emit != "json")
            throw InputError("dfa: --emit must be 'dot' or 'json'");
        Graph g = graph_from(dfa_graph_source);
        LanguageOptions options;
        if (dfa_cap) options.state_cap = dfa_cap;
        options.require_coverage = !dfa_no_coverage;
        LazyProduct language =
            dfa_perm ? permutational_language(g, options) : graph_language(g, options);
        Dfa d = language.materialize();
        if (dfa_minimize) d = minimize(d);
        std::cout << (dfa_emit == "dot" ? export_dot(d) : export_json(d));
    });

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "Re-check the toolkit's core claims by exhaustion");
    bool audit_extended = false;
    std::uint64_t audit_seed = 12345;
    std::string audit_out;
    audit_cmd->add_flag("--extended", audit_extended, "add the randomized n=4 cube scan");
    audit_cmd->add_option("--seed", audit_seed, "seed for the randomized scan (recorded)");
    audit_cmd->add_option("--out", audit_out, "write the JSON report to a file");
    audit_cmd->callback([&] {
        AuditReport report = run_audit({audit_extended, audit_seed});
        emit(audit_to_json(report), audit_out);
        if (!report.all_pass) exit_code = kExitFalse;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return exit_code;
}
