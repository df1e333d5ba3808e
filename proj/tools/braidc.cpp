// braidc: command-line gate compiler for the three-anyon Fibonacci qubit.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "braidc/anyon_symbols.hpp"
#include "braidc/braid_word.hpp"
#include "braidc/diagram.hpp"
#include "braidc/generators.hpp"
#include "braidc/metric.hpp"
#include "braidc/report.hpp"
#include "braidc/search.hpp"
#include "braidc/targets.hpp"
#include "braidc/version.hpp"

namespace {

using namespace braidc;

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("BRAIDC_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

BraidWord parse_word(const std::string& text, const std::string& order) {
    BraidWord w = text_to_word(text);
    if (order == "operator")
        std::reverse(w.factors.begin(), w.factors.end());
    return w;
}

void emit(const nlohmann::json& j, const std::string& text,
          const std::string& output) {
    if (output == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

struct CompileArgs {
    std::string target;
    int max_len = 30;
    std::string method = "brute";
    int threads = 0;
    std::string output = "text";
    bool seedless = false;
};

int run_compile(const CompileArgs& args) {
    const TargetGate gate = target(args.target);
    SearchBudget budget;
    budget.max_exchanges = args.max_len;
    budget.method = args.method == "brute" ? SearchMethod::Brute
                                           : SearchMethod::Bidirectional;
    budget.threads = resolve_threads(args.threads);
    const SearchResult result = search(gate.matrix, budget);
    const CompileReport report{gate, budget, result};
    emit(report.to_json(), report.to_text(), args.output);
    return 0;
}

struct EvaluateArgs {
    std::string word;
    std::string target;
    std::string order = "temporal";
    std::string output = "text";
};

int run_evaluate(const EvaluateArgs& args) {
    const BraidWord w = normalize(parse_word(args.word, args.order));
    EvaluateReport report;
    report.word_text = word_to_text(w);
    report.matrix = evaluate(w);
    if (!args.target.empty()) {
        const TargetGate gate = target(args.target);
        report.target_name = gate.name;
        report.error = distance(report.matrix, gate.matrix);
    }
    emit(report.to_json(), report.to_text(), args.output);
    return 0;
}

struct ModelCheckArgs {
    std::string output = "text";
    double perturb_f = 0.0;
};

int run_model_check(const ModelCheckArgs& args) {
    FSymbolTable f = FSymbolTable::fibonacci();
    if (args.perturb_f != 0.0) {
        const Charge t = Charge::Tau, v = Charge::Vacuum;
        f.set(t, t, t, t, v, v, f.at(t, t, t, t, v, v) + args.perturb_f);
    }
    ModelCheckReport report;
    report.pentagon_residual = verify_pentagon(f);
    report.hexagon_residual = verify_hexagon(f, RSymbolTable::fibonacci());
    const Unitary2 id = Unitary2::identity();
    report.sigma_tenth_power_residual =
        std::max(sigma_power(1, 10).max_abs_diff(id),
                 sigma_power(2, 10).max_abs_diff(id));
    report.braid_relation_residual =
        (sigma(1) * sigma(2) * sigma(1)).max_abs_diff(sigma(2) * sigma(1) * sigma(2));
    emit(report.to_json(), report.to_text(), args.output);
    return report.pass() ? 0 : 1;
}

struct DiagramArgs {
    std::string word;
    std::string order = "temporal";
    std::string format = "ascii";
    std::string out;
};

int run_diagram(const DiagramArgs& args) {
    const BraidWord w = parse_word(args.word, args.order);
    const Diagram d = layout(w);
    const std::string doc = args.format == "svg" ? render_svg(d) : render_ascii(d);
    if (args.out.empty()) {
        std::cout << doc;
        return 0;
    }
    std::ofstream file(args.out);
    if (!file) throw IoError("cannot open output file: " + args.out);
    file << doc;
    file.flush();
    if (!file.good()) throw IoError("failed writing output file: " + args.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidc: compiles single-qubit gates into three-anyon weaves "
                 "of the Fibonacci model"};
    app.set_version_flag("--version", braidc::kVersion);
    app.require_subcommand(1);

    CompileArgs compile_args;
    CLI::App* compile = app.add_subcommand(
        "compile", "search for the weave closest to a target gate");
    compile->add_option("--target", compile_args.target,
                        "gate name or JSON matrix file")->required();
    compile->add_option("--max-len", compile_args.max_len,
                        "max total elementary exchanges");
    compile->add_option("--method", compile_args.method, "search backend")
        ->check(CLI::IsMember({"brute", "bidir", "bidirectional"}));
    compile->add_option("--threads", compile_args.threads,
                        "worker threads (default: BRAIDC_THREADS or all cores)");
    compile->add_option("--output", compile_args.output, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    compile->add_flag("--seedless", compile_args.seedless,
                      "reserved; runs are always deterministic");

    EvaluateArgs evaluate_args;
    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "multiply out a braid word, optionally against a target");
    evaluate->add_option("--word", evaluate_args.word, "braid word text")
        ->required();
    evaluate->add_option("--target", evaluate_args.target,
                         "gate name or JSON matrix file");
    evaluate->add_option("--order", evaluate_args.order,
                         "reading order of the word text")
        ->check(CLI::IsMember({"temporal", "operator"}));
    evaluate->add_option("--output", evaluate_args.output, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    ModelCheckArgs model_args;
    CLI::App* model_check = app.add_subcommand(
        "model-check", "verify the anyon model identities");
    model_check->add_option("--output", model_args.output, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    model_check
        ->add_option("--perturb-f", model_args.perturb_f,
                     "test hook: offset one F entry before checking")
        ->group("");

    DiagramArgs diagram_args;
    CLI::App* diagram = app.add_subcommand(
        "diagram", "draw the world lines of a braid word");
    diagram->add_option("--word", diagram_args.word, "braid word text")
        ->required();
    diagram->add_option("--order", diagram_args.order,
                        "reading order of the word text")
        ->check(CLI::IsMember({"temporal", "operator"}));
    diagram->add_option("--format", diagram_args.format, "output format")
        ->check(CLI::IsMember({"ascii", "svg"}));
    diagram->add_option("--out", diagram_args.out,
                        "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compile) return run_compile(compile_args);
        if (*evaluate) return run_evaluate(evaluate_args);
        if (*model_check) return run_model_check(model_args);
        if (*diagram) return run_diagram(diagram_args);
    } catch (const braidc::UnknownTargetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const braidc::WordParseError& e) {
        std::cerr << "error: " << e.what() << " (token " << e.token_index
                  << ")\n";
        return 2;
    } catch (const braidc::TargetNotUnitaryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const braidc::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
