#include "isochron/cli.hpp"

#include "isochron/analysis.hpp"
#include "isochron/correction.hpp"
#include "isochron/fieldfile.hpp"
#include "isochron/mould.hpp"
#include "isochron/selftest.hpp"
#include "isochron/variety.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>

namespace isochron {

namespace {

void write_output(const std::string& text, const std::string& out_file, std::ostream& out) {
    if (out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw std::runtime_error("cannot open output file '" + out_file + "'");
    f << text;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact correction engine for planar polynomial vector fields"};
    app.require_subcommand(1);

    // alphabet <r>
    int alpha_r = 0;
    auto* alpha = app.add_subcommand("alphabet", "Print the letters of a component");
    alpha->add_option("r", alpha_r, "component degree (>= 2)")->required();

    // mould --word W
    std::string mould_word;
    auto* mould = app.add_subcommand("mould", "Evaluate the correction mould on a word");
    mould->add_option("--word", mould_word, "word, e.g. \"(1,0).(0,1)\"")->required();

    // bracket --word W field.vf
    std::string bracket_word, bracket_file;
    auto* bracket = app.add_subcommand("bracket", "Nested-bracket coefficients of a word");
    bracket->add_option("--word", bracket_word, "word over the field's alphabet")->required();
    bracket->add_option("field", bracket_file, "field specification file")->required();

    // correction --depth D field.vf
    int corr_depth = 0;
    std::string corr_file;
    auto* corr = app.add_subcommand("correction", "Correction term of a field at a depth");
    corr->add_option("--depth", corr_depth, "even depth >= 2")->required();
    corr->add_option("field", corr_file, "field specification file")->required();

    // check --max-depth D field.vf
    int check_depth = 0;
    std::string check_file;
    auto* check = app.add_subcommand("check", "Decide nonisochronicity up to a depth");
    check->add_option("--max-depth", check_depth, "largest depth to evaluate")->required();
    check->add_option("field", check_file, "field specification file")->required();

    // variety --degree d --max-depth D [--format ...] [--out FILE] [--real-split]
    int var_degree = 0, var_depth = 0;
    std::string var_format = "text", var_out;
    bool var_real = false;
    auto* var = app.add_subcommand("variety", "Generators of the isochronous-center variety");
    var->add_option("--degree", var_degree, "field degree (>= 2)")->required();
    var->add_option("--max-depth", var_depth, "largest (even) correction depth")->required();
    var->add_option("--format", var_format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    var->add_option("--out", var_out, "output file (default stdout)");
    var->add_flag("--real-split", var_real, "append the real-coordinate view (text format)");

    auto* self = app.add_subcommand("selftest", "Run the built-in golden self-test");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (alpha->parsed()) {
            for (const auto& n : alphabet_of_component(alpha_r)) out << n.str() << "\n";
            return 0;
        }
        if (mould->parsed()) {
            out << carr_value(parse_word(mould_word)).str() << "\n";
            return 0;
        }
        if (bracket->parsed()) {
            FieldSpec spec = load_field_file(bracket_file);
            BracketCoeffs bc = bracket_coeffs(parse_word(bracket_word), operators_for(spec));
            out << "P = " << bc.p.str() << "\n";
            out << "Q = " << bc.q.str() << "\n";
            out << "letter sum = " << bc.total.str() << "\n";
            return 0;
        }
        if (corr->parsed()) {
            FieldSpec spec = load_field_file(corr_file);
            CorrectionTerm term = correction_term(spec, corr_depth);
            out << "depth: " << term.depth << "\n";
            for (const auto& [len, raw] : term.parts) {
                out << "part length " << len << ": " << term.normalized_part(len).str() << "\n";
            }
            out << "total: " << term.total.str() << "\n";
            return 0;
        }
        if (check->parsed()) {
            FieldSpec spec = load_field_file(check_file);
            Verdict v = check_isochronous(spec, check_depth);
            for (const auto& [depth, value] : v.evaluated) {
                out << "depth " << depth << ": " << value.str() << "\n";
            }
            out << "verdict: " << v.str() << "\n";
            return 0;
        }
        if (var->parsed()) {
            GeneratorSet gs = generators(var_degree, var_depth);
            std::string text;
            if (var_format == "structured") {
                text = export_structured(gs).dump(2) + "\n";
            } else {
                text = export_text(gs);
                if (var_real) text += export_real_split(gs);
            }
            write_output(text, var_out, out);
            return 0;
        }
        if (self->parsed()) {
            return run_selftest(out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no command given\n";
    return 2;
}

}  // namespace isochron
