// lk: linkage workbench command line.
//   lk run <script.lk> [--json out.json]     run a script
//   lk gb|res|ext|tor|link|geolink|gorenstein|depth-scan ...   one-shot forms
// Exit codes: 0 all checks passed, 1 some check false, 2 usage/parse error,
// 3 engine error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lk/run.hpp"
#include "lk/version.hpp"

namespace {

struct OneShot {
    std::string ring = "poly(vars x, y)";
    std::string quotient;  // comma-separated relations
    std::string ideal, ideal2, by;
    int i = 1;
    int nmax = 3;
    std::string hdim = "pd";
};

std::string ring_decl(const OneShot& os) {
    std::string s = "ring R = " + os.ring;
    if (!os.quotient.empty()) s += " / ideal(" + os.quotient + ")";
    s += ";\n";
    return s;
}

int run_text(const std::string& text, const lk::RunOptions& opts, const std::string& json_path) {
    lk::dsl::Script script;
    try {
        script = lk::dsl::parse_script(text);
    } catch (const lk::dsl::ScriptError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 2;
    }
    lk::RunReport rep = lk::run_script(script, opts);
    std::cout << lk::report_text(rep);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return 2;
        }
        out << lk::report_json(rep).dump(2) << "\n";
    }
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lk - linkage workbench for graded module linkage computations"};
    app.set_version_flag("--version", LK_VERSION);

    lk::RunOptions opts;
    std::string order = "grevlex";
    app.add_option("--prime", opts.prime, "coefficient prime (odd)");
    app.add_option("--order", order, "monomial order: grevlex | lex");
    app.add_option("--bound", opts.bound, "resolution truncation bound (default dim R + 2)");
    app.add_flag("--fail-fast", opts.fail_fast, "stop after the first failed check");
    app.add_option("--seed", opts.seed, "seed for randomized suites");

    std::string script_path, json_path;
    auto* run = app.add_subcommand("run", "execute a .lk script");
    run->add_option("script", script_path, "script file")->required();
    run->add_option("--json", json_path, "also write the JSON report here");

    OneShot os;
    auto add_ring_opts = [&](CLI::App* cmd) {
        cmd->add_option("--ring", os.ring, "ring spec, e.g. \"poly(vars x, y; p = 32003)\"");
        cmd->add_option("--quotient", os.quotient, "defining relations, comma separated");
    };
    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    add_ring_opts(gb);
    gb->add_option("--ideal", os.ideal, "generators, comma separated")->required();

    auto* res = app.add_subcommand("res", "minimal free resolution and Betti table of R/I");
    add_ring_opts(res);
    res->add_option("--ideal", os.ideal)->required();

    auto* ext = app.add_subcommand("ext", "Ext^i(R/I, R/J) numerics");
    add_ring_opts(ext);
    ext->add_option("--i", os.i);
    ext->add_option("--ideal", os.ideal)->required();
    ext->add_option("--ideal2", os.ideal2)->required();

    auto* tor = app.add_subcommand("tor", "Tor_i(R/I, R/J) numerics");
    add_ring_opts(tor);
    tor->add_option("--i", os.i);
    tor->add_option("--ideal", os.ideal)->required();
    tor->add_option("--ideal2", os.ideal2)->required();

    auto* link = app.add_subcommand("link", "are I and J linked by c?");
    add_ring_opts(link);
    link->add_option("--ideal", os.ideal)->required();
    link->add_option("--ideal2", os.ideal2)->required();
    link->add_option("--by", os.by, "the linking ideal c (default 0)");

    auto* geo = app.add_subcommand("geolink", "geometric linkage condition battery");
    add_ring_opts(geo);
    geo->add_option("--ideal", os.ideal)->required();
    geo->add_option("--ideal2", os.ideal2)->required();

    auto* gor = app.add_subcommand("gorenstein", "Gorenstein ideal test");
    add_ring_opts(gor);
    gor->add_option("--ideal", os.ideal)->required();

    auto* ds = app.add_subcommand("depth-scan", "depth detection via linked syzygies of k");
    add_ring_opts(ds);
    ds->add_option("--hdim", os.hdim, "pd | gdim");
    ds->add_option("--nmax", os.nmax, "largest syzygy index to scan");

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    opts.order = order;

    try {
        if (run->parsed()) {
            std::ifstream in(script_path);
            if (!in) {
                std::cerr << "cannot open " << script_path << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            return run_text(buf.str(), opts, json_path);
        }
        std::string text = ring_decl(os);
        if (gb->parsed()) text += "ideal I = (" + os.ideal + ");\ngb(I);\ndim(I);\n";
        else if (res->parsed())
            text += "ideal I = (" + os.ideal + ");\nbetti(R/I);\nres(R/I);\n";
        else if (ext->parsed())
            text += "ideal I = (" + os.ideal + ");\nideal J = (" + os.ideal2 + ");\next(" +
                    std::to_string(os.i) + ", R/I, R/J);\n";
        else if (tor->parsed())
            text += "ideal I = (" + os.ideal + ");\nideal J = (" + os.ideal2 + ");\ntor(" +
                    std::to_string(os.i) + ", R/I, R/J);\n";
        else if (link->parsed())
            text += "ideal I = (" + os.ideal + ");\nideal J = (" + os.ideal2 + ");\nideal C = (" +
                    (os.by.empty() ? "0" : os.by) + ");\nlinked(I, J, C);\n";
        else if (geo->parsed())
            text += "ideal I = (" + os.ideal + ");\nideal J = (" + os.ideal2 + ");\ngeolink(I, J);\n";
        else if (gor->parsed())
            text += "ideal I = (" + os.ideal + ");\ngorenstein(I);\n";
        else if (ds->parsed())
            text += "depth_scan(k(), " + os.hdim + ", " + std::to_string(os.nmax) + ");\n";
        return run_text(text, opts, json_path);
    } catch (const lk::EngineError& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
