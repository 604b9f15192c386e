#include <iostream>

#include "CLI11.hpp"
#include "mdr/jobs.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact de Rham calculus for desk-scale motives"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    long window = 16;
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--window", window, "pole-order window for cohomology models");

    mdr::JobSpec spec;

    auto add_files = [&](CLI::App* sub, std::vector<std::string>& sink, int n,
                         const char* what) {
        sub->add_option(what, sink, what)->expected(n)->required();
    };

    auto* cohomology = app.add_subcommand("cohomology", "de Rham cohomology of a scheme or P1 model");
    std::vector<std::string> coh_in;
    add_files(cohomology, coh_in, 1, "input");

    auto* transfer = app.add_subcommand("transfer", "apply the transfer of a correspondence to a form");
    std::vector<std::string> tr_in;
    add_files(transfer, tr_in, 2, "inputs");

    auto* compose = app.add_subcommand("compose", "compose two finite correspondences");
    std::vector<std::string> cp_in;
    add_files(compose, cp_in, 2, "inputs");

    auto* realize = app.add_subcommand("realize", "realize a motive complex");
    std::vector<std::string> re_in;
    add_files(realize, re_in, 1, "input");

    auto* localize = app.add_subcommand("localize", "localized hom classes of a finite category");
    std::vector<std::string> lo_in;
    add_files(localize, lo_in, 4, "inputs");

    auto* godement = app.add_subcommand("godement", "sheaf cohomology via the Godement resolution");
    std::vector<std::string> go_in;
    add_files(godement, go_in, 2, "inputs");

    auto* selftest = app.add_subcommand("selftest", "run the invariant battery");
    std::string filter;
    selftest->add_option("--filter", filter, "run only checks whose name contains this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage faults share the precondition exit
    }

    spec.window = window;
    spec.json_output = format == "json";
    spec.filter = filter;
    if (cohomology->parsed()) {
        spec.command = "cohomology";
        spec.inputs = coh_in;
    } else if (transfer->parsed()) {
        spec.command = "transfer";
        spec.inputs = tr_in;
    } else if (compose->parsed()) {
        spec.command = "compose";
        spec.inputs = cp_in;
    } else if (realize->parsed()) {
        spec.command = "realize";
        spec.inputs = re_in;
    } else if (localize->parsed()) {
        spec.command = "localize";
        spec.inputs = lo_in;
    } else if (godement->parsed()) {
        spec.command = "godement";
        spec.inputs = go_in;
    } else if (selftest->parsed()) {
        spec.command = "selftest";
    }

    mdr::JobResult res = mdr::run_job(spec);
    if (!res.output.empty()) std::cout << res.output;
    if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
    return res.exit_code;
}
