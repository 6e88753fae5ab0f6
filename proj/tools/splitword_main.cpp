#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "splitword/classify.hpp"
#include "splitword/construct3.hpp"
#include "splitword/json_io.hpp"
#include "splitword/oracle.hpp"

using namespace splitword;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;     // file / parse / usage errors
constexpr int kExitRejected = 2;  // semantically valid input, negative verdict

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_input(path)); }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_recognize(const std::string& path, bool plain) {
    Graph g = load_graph(path);
    Classification c = representation_number(g);
    if (plain) {
        std::cout << "split: " << (c.is_split ? "yes" : "no") << "\n";
        if (c.is_split) {
            std::cout << "word_representable: " << (*c.word_representable ? "yes" : "no") << "\n";
            if (c.rep_number) std::cout << "rep_number: " << *c.rep_number << "\n";
            if (c.witness)
                std::cout << "witness: " << spec_label(c.witness->spec) << "\n";
            if (c.comparability)
                std::cout << "comparability: " << (*c.comparability ? "yes" : "no") << "\n";
            if (c.word) std::cout << "word: " << word_to_string(*c.word, g) << "\n";
        }
    } else {
        print_json(classification_to_json(c, g));
    }
    return c.is_split ? kExitOk : kExitRejected;
}

int run_represent(const std::string& path, bool trace, bool self_check) {
    Graph g = load_graph(path);
    auto p = find_split_partition(g);
    if (!p) {
        std::cerr << "not a split graph\n";
        return kExitRejected;
    }
    auto lab = find_wr_labelling(g, *p);
    if (!lab) {
        std::cerr << "not a word-representable split graph\n";
        return kExitRejected;
    }
    ConstructionTrace t = build_three_uniform_word(g, *p, *lab);
    if (self_check && !represents(t.w, g)) {
        std::cerr << "internal error: constructed word fails verification\n";
        return kExitError;
    }
    if (trace)
        print_json(trace_to_json(t, g));
    else
        std::cout << word_to_string(t.w, g) << "\n";
    return kExitOk;
}

int run_label(const std::string& path, bool comparability, bool plain) {
    Graph g = load_graph(path);
    auto p = find_split_partition(g);
    if (!p) {
        std::cerr << "not a split graph\n";
        return kExitRejected;
    }
    auto lab = comparability ? find_comparability_labelling(g, *p) : find_wr_labelling(g, *p);
    if (!lab) {
        std::cerr << (comparability ? "no comparability labelling exists\n"
                                    : "no word-representability labelling exists\n");
        return kExitRejected;
    }
    if (plain) {
        for (size_t i = 0; i < p->clique.size(); ++i)
            std::cout << g.name(p->clique[i]) << " " << lab->labels[i] << "\n";
    } else {
        print_json(labelling_to_json(*lab, *p, g));
    }
    return kExitOk;
}

int run_generate(const std::string& family, int k) {
    auto fam = family_from_name(family);
    if (!fam) {
        std::cerr << "unknown family '" << family << "'\n";
        return kExitError;
    }
    FamilyGraph fg = generate({*fam, k});
    std::cout << write_edge_list(fg.graph);
    return kExitOk;
}

int run_oracle(const std::string& path, int k_max, bool plain) {
    Graph g = load_graph(path);
    auto rep = min_uniform_representation(g, k_max);
    if (plain) {
        if (rep)
            std::cout << "k=" << rep->k << " word=" << word_to_string(rep->word, g) << "\n";
        else
            std::cout << "no representation with k <= " << k_max << "\n";
    } else {
        json out;
        out["k"] = rep ? json(rep->k) : json(nullptr);
        out["word"] = rep ? word_to_json(rep->word, g) : json(nullptr);
        print_json(out);
    }
    return rep ? kExitOk : kExitRejected;
}

int run_verify(const std::string& graph_path, const std::string& word_path, bool plain) {
    Graph g = load_graph(graph_path);
    std::istringstream ws(read_input(word_path));
    std::vector<int> letters;
    std::string token;
    while (ws >> token) {
        int id = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.name(v) == token) {
                id = v;
                break;
            }
        if (id < 0) throw std::runtime_error("unknown vertex name '" + token + "' in word");
        letters.push_back(id);
    }
    ConstructionTrace t;
    t.w = Word(std::move(letters));
    VerifyReport report = verify_construction(t, g);
    if (plain) {
        std::cout << (report.ok ? "word represents the graph\n"
                                : "word does not represent the graph\n");
        for (const auto& pc : report.pairs)
            if (pc.edge != pc.alternating)
                std::cout << "  " << g.name(pc.u) << "," << g.name(pc.v)
                          << (pc.edge ? " edge but pattern " : " non-edge but pattern ")
                          << word_to_string(pc.pattern, g) << "\n";
    } else {
        print_json(verify_report_to_json(report, g));
    }
    return report.ok ? kExitOk : kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"word-representability toolkit for split graphs"};
    app.require_subcommand(1);

    std::string path;
    bool plain = false;
    bool trace = false;
    bool no_verify = false;
    bool comparability = false;
    std::string family;
    int k = 0;
    int k_max = 3;
    std::string word_path;

    auto* recognize = app.add_subcommand(
        "recognize", "classify a graph: split? word-representable? representation number");
    recognize->add_option("path", path, "edge-list file, or - for stdin")->required();
    recognize->add_flag("--plain", plain, "plain text instead of JSON");

    auto* repnum = app.add_subcommand("repnum", "alias of recognize");
    repnum->add_option("path", path)->required();
    repnum->add_flag("--plain", plain);

    auto* represent = app.add_subcommand("represent", "emit a 3-uniform representing word");
    represent->add_option("path", path)->required();
    represent->add_flag("--trace", trace, "emit the full construction trace as JSON");
    represent->add_flag("--no-verify", no_verify, "skip the self-check of the output word");

    auto* label = app.add_subcommand("label", "emit a clique labelling as JSON");
    label->add_option("path", path)->required();
    label->add_flag("--comparability", comparability,
                    "search for a comparability labelling instead");
    label->add_flag("--plain", plain);

    auto* gen = app.add_subcommand("generate", "emit a catalog graph as an edge list");
    gen->add_option("family", family,
                    "B1 B2 B3 B4 odd_sun_center K1_join_tent even_sun M2 M3 M4 M5 F0 F1 F2")
        ->required();
    gen->add_option("k", k, "parameter for the parametric families");

    auto* oracle = app.add_subcommand("oracle", "minimal uniform representation by brute force");
    oracle->add_option("path", path)->required();
    oracle->add_option("--kmax", k_max, "uniformity bound (1..3)")->check(CLI::Range(1, 3));
    oracle->add_flag("--plain", plain);

    auto* verify = app.add_subcommand("verify", "check a word against a graph");
    verify->add_option("graph", path, "edge-list file")->required();
    verify->add_option("word", word_path, "file of space-separated vertex names, or -")
        ->required();
    verify->add_flag("--plain", plain);

    CLI11_PARSE(app, argc, argv);

    try {
        if (recognize->parsed() || repnum->parsed()) return run_recognize(path, plain);
        if (represent->parsed()) return run_represent(path, trace, !no_verify);
        if (label->parsed()) return run_label(path, comparability, plain);
        if (gen->parsed()) return run_generate(family, k);
        if (oracle->parsed()) return run_oracle(path, k_max, plain);
        if (verify->parsed()) return run_verify(path, word_path, plain);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
