// jsrforge - certify spectrum maximizing products of 2x2 matrix pairs,
// compute trace polynomials of words, and search trace space for pairs
// whose maximizing products form a chiral pair.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jsrforge/certify.hpp"
#include "jsrforge/fricke.hpp"
#include "jsrforge/io_json.hpp"
#include "jsrforge/mat2.hpp"
#include "jsrforge/reference_data.hpp"
#include "jsrforge/search.hpp"
#include "jsrforge/word.hpp"

namespace {

using namespace jsrforge;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    json j;
    f >> j;
    return j;
}

std::vector<Word> parse_word_list(const std::string& csv) {
    std::vector<Word> words;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) words.push_back(parse_word(item));
    }
    if (words.empty()) throw std::invalid_argument("no words given");
    return words;
}

std::string table_report_text(const TableReport& report) {
    std::string out;
    for (const TableRowResult& r : report.rows) {
        out += "row " + std::to_string(r.row) + ": smp=" + exponent_form(r.smp);
        if (!r.screen_ok) {
            out += " screen=FAIL";
        } else {
            out += " screen=ok";
            out += std::string(" certify=") + to_string(r.verdict);
            if (r.verdict != Verdict::failed) {
                out += " pairs=" + std::to_string(r.vertex_pairs) + "/" +
                       std::to_string(r.expected_pairs);
                out += " margin=" + format_g17(r.min_margin);
            }
        }
        if (!r.reason.empty()) out += " (" + r.reason + ")";
        out += r.pass ? "  PASS" : "  FAIL";
        out += '\n';
    }
    out += report.all_pass ? "all rows reproduced\n" : "some rows failed\n";
    return out;
}

int cmd_paper_example(double perturb_b21, bool compact, const std::string& out_path) {
    const Mat2 A = example_pair_A();
    Mat2 B = example_pair_B();
    const int indent = compact ? -1 : 2;
    if (perturb_b21 == 0.0) {
        const Certificate cert = certify(A, B, example_smp_candidates());
        write_output(out_path, to_json(cert).dump(indent));
        std::cerr << "verdict: " << to_string(cert.verdict)
                  << (cert.reason.empty() ? "" : " (" + cert.reason + ")") << '\n';
        return cert.verdict == Verdict::certified_unique_pair ? 0 : 1;
    }
    B.a21 += perturb_b21;
    const Certificate pair_cert = certify(A, B, example_smp_candidates());
    const Certificate runner_cert = certify(A, B, {example_runner_up()});
    json j;
    j["chiral_pair"] = to_json(pair_cert);
    j["runner_up"] = to_json(runner_cert);
    write_output(out_path, j.dump(indent));
    std::cerr << "chiral pair: " << to_string(pair_cert.verdict)
              << ", runner-up " << exponent_form(example_runner_up()) << ": "
              << to_string(runner_cert.verdict) << '\n';
    return runner_cert.certified() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectrum-maximizing-product certification for 2x2 matrix pairs"};
    app.require_subcommand(1);
    int rc = 0;

    // fricke <word>
    std::string fricke_word;
    bool fricke_reduced = false;
    auto* sc_fricke = app.add_subcommand("fricke", "print the trace polynomial of a word");
    sc_fricke->add_option("word", fricke_word, "word over {a,b}; exponent form accepted")->required();
    sc_fricke->add_flag("--reduced", fricke_reduced, "substitute u = v = 1");
    sc_fricke->callback([&]() {
        const Word w = parse_word(fricke_word);
        const Poly5 p = fricke_reduced ? reduced_fricke(w) : fricke_polynomial(w);
        std::cout << p.to_string() << '\n';
    });

    // words
    int words_lyndon = 0, words_pairs = 0, words_fraction = 0;
    std::string words_info, words_subst;
    auto* sc_words = app.add_subcommand("words", "word combinatorics utilities");
    sc_words->add_option("--lyndon", words_lyndon, "list Lyndon words up to this length");
    sc_words->add_option("--chiral-pairs", words_pairs, "list chiral pairs up to this length");
    sc_words->add_option("--fraction", words_fraction, "fraction of chiral words of this length");
    sc_words->add_option("--info", words_info, "canonical form, mirror, primitivity, chirality");
    sc_words->add_option("--substitute", words_subst, "w,p,q: substitute a->p, b->q in w");
    sc_words->callback([&]() {
        if (words_lyndon > 0) {
            for (const Word& w : lyndon_words(words_lyndon)) std::cout << w.str() << '\n';
        } else if (words_pairs > 0) {
            for (const ChiralPair& p : chiral_pairs(words_pairs))
                std::cout << p.first.str() << ' ' << p.second.str() << '\n';
        } else if (words_fraction > 0) {
            const ChiralFraction f = chiral_fraction(words_fraction);
            std::cout << f.chiral_count << '/' << f.total << " = " << format_g17(f.value())
                      << '\n';
        } else if (!words_info.empty()) {
            const Word w = parse_word(words_info);
            std::cout << "word " << w.str() << '\n'
                      << "canonical " << canonical_rotation(w).str() << '\n'
                      << "mirror " << mirror(w).str() << '\n'
                      << "primitive " << (is_primitive(w) ? "yes" : "no") << '\n'
                      << "chiral " << (is_chiral(w) ? "yes" : "no") << '\n';
        } else if (!words_subst.empty()) {
            const std::vector<Word> parts = parse_word_list(words_subst);
            if (parts.size() != 3) throw std::invalid_argument("--substitute needs w,p,q");
            std::cout << substitute(parts[0], parts[1], parts[2]).str() << '\n';
        } else {
            throw CLI::CallForHelp();
        }
    });

    // realize x y z u v
    std::vector<double> tuple_vals;
    std::string realize_out;
    auto* sc_realize = app.add_subcommand("realize", "construct a pair with given traces and determinants");
    sc_realize->add_option("tuple", tuple_vals, "x y z u v")->expected(5);
    sc_realize->add_option("--out", realize_out, "write pair JSON here instead of stdout");
    sc_realize->callback([&]() {
        const Tuple5 t{tuple_vals[0], tuple_vals[1], tuple_vals[2], tuple_vals[3], tuple_vals[4]};
        auto [A, B] = realize(t);
        write_output(realize_out, to_json(MatrixPair{A, B}).dump(2));
    });

    // bounds --pair pair.json -k 8
    std::string bounds_pair;
    int bounds_k = 8;
    auto* sc_bounds = app.add_subcommand("bounds", "squeeze bounds on the joint spectral radius");
    sc_bounds->add_option("--pair", bounds_pair, "pair JSON file {\"A\":..,\"B\":..}")->required();
    sc_bounds->add_option("-k,--depth", bounds_k, "product length for the bounds");
    sc_bounds->callback([&]() {
        const MatrixPair p = pair_from_json(load_json_file(bounds_pair));
        const JsrBounds b = jsr_bounds(p.A, p.B, bounds_k);
        std::cout << "lower " << format_g17(b.lower) << '\n'
                  << "upper " << format_g17(b.upper) << '\n';
    });

    // certify --pair pair.json --smp a2bab2,b2aba2
    std::string certify_pair, certify_smp, certify_out;
    int certify_budget = kDefaultBudget;
    auto* sc_certify = app.add_subcommand("certify", "invariant-polytope certification of maximizing products");
    sc_certify->add_option("--pair", certify_pair, "pair JSON file")->required();
    sc_certify->add_option("--smp", certify_smp, "comma-separated candidate words")->required();
    sc_certify->add_option("--out", certify_out, "write certificate JSON here");
    sc_certify->add_option("--budget", certify_budget, "polygon vertex-pair budget");
    sc_certify->callback([&]() {
        const MatrixPair p = pair_from_json(load_json_file(certify_pair));
        const Certificate cert =
            certify(p.A, p.B, parse_word_list(certify_smp), CertifyOptions{certify_budget});
        write_output(certify_out, to_json(cert).dump(2));
        rc = cert.certified() ? 0 : 1;
    });

    // search
    SearchConfig cfg;
    std::string search_out;
    auto* sc_search = app.add_subcommand("search", "random trace-space search for chiral maximizing pairs");
    sc_search->add_option("--samples", cfg.n_samples, "number of tuples to draw");
    sc_search->add_option("--seed", cfg.seed, "random seed");
    sc_search->add_option("--max-len", cfg.max_word_len, "screening list covers words up to this length");
    sc_search->add_option("--targets-len", cfg.target_chirals_max_len, "target chiral pairs up to this length");
    sc_search->add_option("--out", search_out, "write CSV here instead of stdout");
    sc_search->callback([&]() {
        const std::vector<Word> targets = default_search_targets(cfg.target_chirals_max_len);
        const std::vector<CandidateRecord> records = run_search(cfg, targets);
        write_output(search_out, to_csv(records));
        std::size_t certified = 0;
        for (const CandidateRecord& r : records) certified += r.status == "certified";
        std::cerr << records.size() << " candidates, " << certified << " certified, of "
                  << cfg.n_samples << " samples\n";
    });

    // reproduce-table
    auto* sc_table = app.add_subcommand("reproduce-table", "re-certify the bundled reference tuples");
    sc_table->callback([&]() {
        const TableReport report = reproduce_table();
        std::cout << table_report_text(report);
        rc = report.all_pass ? 0 : 1;
    });

    // paper-example
    double perturb_b21 = 0.0;
    bool example_json = false;
    std::string example_out;
    auto* sc_example = app.add_subcommand("paper-example", "certify the bundled example pair");
    sc_example->add_option("--perturb-b21", perturb_b21, "shift B's (2,1) entry before certifying");
    sc_example->add_flag("--json", example_json, "compact single-line JSON output");
    sc_example->add_option("--out", example_out, "write JSON here instead of stdout");
    sc_example->callback([&]() { rc = cmd_paper_example(perturb_b21, example_json, example_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
