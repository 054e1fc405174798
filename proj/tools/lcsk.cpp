// Command line front end: sketching, LCS threshold decisions, weighted LCS
// solving, hard-string generation, and the self-verification suite.
//
// Exit codes: 0 on success (and for decide=YES), 1 for decide=NO or a
// failed verification, 2 for usage, parse, or configuration errors.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lcsk/core.hpp>
#include <lcsk/hardgen.hpp>
#include <lcsk/lcs.hpp>
#include <lcsk/sketch.hpp>
#include <lcsk/verify.hpp>
#include <lcsk/wlcs.hpp>

namespace {

constexpr const char* version_string = "lcsk 0.1.0";

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lcsk::error("cannot open input file: " + path);
    return in;
}

// Streams a digit file through a fresh sketcher without buffering the text.
lcsk::RleString sketch_file(const std::string& path, lcsk::Alphabet a, std::uint64_t limit) {
    std::ifstream in = open_input(path);
    lcsk::Sketcher sketcher(a, limit);
    lcsk::for_each_symbol(in, a, [&](lcsk::Symbol c) { sketcher.push(c); });
    return sketcher.finish();
}

lcsk::Text read_text_file(const std::string& path, lcsk::Alphabet a) {
    std::ifstream in = open_input(path);
    lcsk::Text x;
    lcsk::for_each_symbol(in, a, [&](lcsk::Symbol c) { x.push_back(c); });
    return x;
}

int run_sketch(unsigned sigma, std::uint64_t limit, const std::string& input_path, bool binary) {
    const lcsk::Alphabet a(sigma);
    lcsk::Sketcher sketcher(a, limit);
    if (input_path.empty()) {
        lcsk::for_each_symbol(std::cin, a, [&](lcsk::Symbol c) { sketcher.push(c); });
    } else {
        std::ifstream in = open_input(input_path);
        lcsk::for_each_symbol(in, a, [&](lcsk::Symbol c) { sketcher.push(c); });
    }
    const lcsk::RleString sk = sketcher.finish();
    if (binary) {
        lcsk::write_sketch(std::cout, lcsk::SketchRecord{std::uint8_t(sigma), limit, sk});
    } else {
        std::cout << lcsk::rle_to_text(sk) << "\n";
    }
    return 0;
}

int run_decide(unsigned sigma, std::uint64_t limit, const std::string& x_path,
               const std::string& y_path) {
    const lcsk::Alphabet a(sigma);
    // x is consumed fully before y is opened.
    const lcsk::RleString sx = sketch_file(x_path, a, limit);
    const lcsk::RleString sy = sketch_file(y_path, a, limit);
    const lcsk::DecisionReport report = lcsk::decide_from_sketches(sx, sy, a, limit);
    std::cout << (report.answer ? "YES" : "NO") << "\n";
    std::cout << "sketch_x_bits=" << report.sketch_x_bits
              << " sketch_y_bits=" << report.sketch_y_bits << "\n";
    return report.answer ? 0 : 1;
}

int run_wlcs(unsigned sigma, const std::string& weights_path, const std::string& x_path,
             const std::string& y_path, const std::string& algo, bool stats) {
    const lcsk::Alphabet a(sigma);
    std::ifstream weights_in = open_input(weights_path);
    const lcsk::WeightFn w = lcsk::parse_weights(weights_in, a);
    const lcsk::Text x = read_text_file(x_path, a);
    const lcsk::Text y = read_text_file(y_path, a);

    std::uint64_t score = 0;
    std::string path_name;
    std::size_t run_count = 0;
    lcsk::DequeCounters counters;

    if (algo == "dp") {
        score = lcsk::wlcs_dp(x, y, w);
        path_name = "dp";
    } else if (algo == "rle") {
        const lcsk::RleString rle = lcsk::rle_encode(x);
        run_count = rle.size();
        score = lcsk::wlcs_rle(rle, y, w, &counters);
        path_name = "rle";
    } else {
        lcsk::WlcsAutoStats auto_stats;
        score = lcsk::wlcs_auto(x, y, w, &auto_stats);
        path_name = lcsk::to_string(auto_stats.path);
        run_count = auto_stats.compressed_runs;
        counters = auto_stats.deque;
    }

    std::cout << score << "\n";
    if (stats) {
        std::cout << "path=" << path_name << " compressed_runs=" << run_count
                  << " deque_insertions=" << counters.insertions
                  << " deque_removals=" << counters.removals << "\n";
    }
    return 0;
}

std::vector<std::uint32_t> parse_z_list(const std::string& csv) {
    std::vector<std::uint32_t> z;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        const std::string item = csv.substr(pos, comma - pos);
        if (item.empty()) throw lcsk::parse_error("empty entry in z list");
        std::uint64_t v = 0;
        for (char ch : item) {
            if (ch < '0' || ch > '9')
                throw lcsk::parse_error("z entries must be decimal integers, got \"" + item +
                                        "\"");
            v = v * 10 + std::uint64_t(ch - '0');
            if (v > 0xFFFFFFFFull) throw lcsk::parse_error("z entry out of range: " + item);
        }
        z.push_back(std::uint32_t(v));
        pos = comma + 1;
        if (comma == csv.size()) break;
    }
    return z;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subsequence sketching, LCS threshold decisions, and weighted LCS solving "
                 "over small digit alphabets"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    // sketch
    unsigned sketch_sigma = 0;
    std::uint64_t sketch_limit = 0;
    std::string sketch_input;
    bool sketch_binary = false;
    CLI::App* sketch_cmd =
        app.add_subcommand("sketch", "Stream a digit text into its subsequence sketch");
    sketch_cmd->add_option("--sigma", sketch_sigma, "alphabet size (2..10)")->required();
    sketch_cmd->add_option("--limit", sketch_limit, "subsequence length threshold")->required();
    sketch_cmd->add_option("--input", sketch_input, "input file (default: stdin)");
    sketch_cmd->add_flag("--binary", sketch_binary, "emit the binary sketch format");

    // decide
    unsigned decide_sigma = 0;
    std::uint64_t decide_limit = 0;
    std::string decide_x, decide_y;
    CLI::App* decide_cmd =
        app.add_subcommand("decide", "Decide whether LCS(x, y) reaches the threshold");
    decide_cmd->add_option("--sigma", decide_sigma, "alphabet size (2..10)")->required();
    decide_cmd->add_option("--limit", decide_limit, "decision threshold")->required();
    decide_cmd->add_option("x_file", decide_x, "first input text")->required();
    decide_cmd->add_option("y_file", decide_y, "second input text")->required();

    // wlcs
    unsigned wlcs_sigma = 0;
    std::string wlcs_weights, wlcs_x, wlcs_y, wlcs_algo = "auto";
    bool wlcs_stats = false;
    CLI::App* wlcs_cmd = app.add_subcommand("wlcs", "Maximum-weight common subsequence score");
    wlcs_cmd->add_option("--sigma", wlcs_sigma, "alphabet size (2..10)")->required();
    wlcs_cmd->add_option("--weights", wlcs_weights, "weights file, one \"symbol weight\" per line")
        ->required();
    wlcs_cmd->add_option("--algo", wlcs_algo, "solver: auto, dp, or rle")
        ->check(CLI::IsMember({"auto", "dp", "rle"}));
    wlcs_cmd->add_flag("--stats", wlcs_stats, "also print solver statistics");
    wlcs_cmd->add_option("x_file", wlcs_x, "first input text")->required();
    wlcs_cmd->add_option("y_file", wlcs_y, "second input text")->required();

    // gen
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate adversarial strings");
    gen_cmd->require_subcommand(1);

    unsigned ph_sigma = 0;
    std::uint64_t ph_limit = 0;
    CLI::App* perm_cmd = gen_cmd->add_subcommand("perm-hard", "Nested repetition family");
    perm_cmd->add_option("--sigma", ph_sigma, "alphabet size (2..10)")->required();
    perm_cmd->add_option("--limit", ph_limit, "length threshold (at least sigma)")->required();

    unsigned xz_sigma = 0;
    std::uint32_t xz_m = 0;
    std::string xz_list;
    CLI::App* xz_cmd = gen_cmd->add_subcommand("xz", "Indexed-block family x(z)");
    xz_cmd->add_option("--sigma", xz_sigma, "alphabet size (2..10)")->required();
    xz_cmd->add_option("--m", xz_m, "block parameter")->required();
    xz_cmd->add_option("--z", xz_list, "comma-separated entries, m^(sigma-1) of them")->required();

    unsigned pat_sigma = 0;
    std::uint32_t pat_m = 0;
    std::uint64_t pat_i = 0, pat_t = 0;
    CLI::App* pat_cmd = gen_cmd->add_subcommand("pat", "Probe string pat(i, 0^t)");
    pat_cmd->add_option("--sigma", pat_sigma, "alphabet size (2..10)")->required();
    pat_cmd->add_option("--m", pat_m, "block parameter")->required();
    pat_cmd->add_option("--i", pat_i, "probe index, below m^(sigma-1)")->required();
    pat_cmd->add_option("--t", pat_t, "payload length (emits 0^t)")->required();

    // verify
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the desk-scale verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sketch_cmd->parsed())
            return run_sketch(sketch_sigma, sketch_limit, sketch_input, sketch_binary);
        if (decide_cmd->parsed()) return run_decide(decide_sigma, decide_limit, decide_x, decide_y);
        if (wlcs_cmd->parsed())
            return run_wlcs(wlcs_sigma, wlcs_weights, wlcs_x, wlcs_y, wlcs_algo, wlcs_stats);
        if (perm_cmd->parsed()) {
            std::cout << lcsk::text_to_digits(
                             lcsk::gen_perm_hard(ph_limit, lcsk::Alphabet(ph_sigma)))
                      << "\n";
            return 0;
        }
        if (xz_cmd->parsed()) {
            std::cout << lcsk::text_to_digits(
                             lcsk::gen_xz(parse_z_list(xz_list), xz_m, lcsk::Alphabet(xz_sigma)))
                      << "\n";
            return 0;
        }
        if (pat_cmd->parsed()) {
            std::cout << lcsk::text_to_digits(lcsk::gen_pat(pat_i, lcsk::Text(pat_t, 0), pat_m,
                                                            lcsk::Alphabet(pat_sigma)))
                      << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) return lcsk::verify::run_and_report(std::cout) ? 0 : 1;
    } catch (const lcsk::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
