// tcm-entangle: concurrence curves and verification for two atoms in a
// two-mode two-photon cavity.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "tcm/commands.hpp"

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
    return out;
}

void print_files(const tcm::FileList& files) {
    for (const auto& f : files) std::cout << f.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Atom-atom entanglement in the two-mode two-photon Tavis-Cummings model"};
    app.require_subcommand(1);

    std::string fig1_config, fig2_config;
    auto* fig1 = app.add_subcommand("fig1", "PSI-family curves (cos a |eg> + sin a |ge>)");
    fig1->add_option("--config", fig1_config, "config file (key = value)")->check(CLI::ExistingFile);
    auto* fig2 = app.add_subcommand("fig2", "PHI-family curves (cos a |ee> + sin a |gg>) and death windows");
    fig2->add_option("--config", fig2_config, "config file (key = value)")->check(CLI::ExistingFile);

    std::string verify_config;
    bool inject_fault = false, published = false;
    auto* verify = app.add_subcommand("verify", "cross-check closed forms against numerical propagation");
    verify->add_option("--config", verify_config, "config file overriding the alpha/epsilon/T grid")
        ->check(CLI::ExistingFile);
    verify->add_flag("--published", published, "also score the published closed forms");
    verify->add_flag("--inject-hamiltonian-fault", inject_fault)->group("");

    std::string family = "PSI", out_dir = ".", path = "ANALYTIC";
    std::vector<std::string> alphas{"pi/4"}, epsilons{"0"};
    double tmax = 20.0;
    std::size_t points = 2000;
    bool svg = false;
    auto* sweep = app.add_subcommand("sweep", "concurrence curves for arbitrary parameter lists");
    sweep->add_option("--family", family, "PSI or PHI")->check(CLI::IsMember({"PSI", "PHI"}));
    sweep->add_option("--alpha", alphas, "angles, e.g. pi/8,pi/4")->delimiter(',');
    sweep->add_option("--epsilon", epsilons, "dipole couplings Omega/g")->delimiter(',');
    sweep->add_option("--tmax", tmax, "final dimensionless time g t");
    sweep->add_option("--points", points, "grid points");
    sweep->add_option("--out", out_dir, "output directory");
    sweep->add_option("--path", path, "ANALYTIC, ORACLE, BOTH or PUBLISHED");
    sweep->add_flag("--svg", svg, "also write SVG charts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fig1->parsed()) {
            const auto base = tcm::RunConfig::figure_defaults(tcm::Family::Psi);
            print_files(tcm::cmd_fig1(fig1_config.empty() ? base : tcm::load_config(fig1_config, base)));
        } else if (fig2->parsed()) {
            const auto base = tcm::RunConfig::figure_defaults(tcm::Family::Phi);
            print_files(tcm::cmd_fig2(fig2_config.empty() ? base : tcm::load_config(fig2_config, base)));
        } else if (verify->parsed()) {
            tcm::VerifyOptions options;
            if (!verify_config.empty()) options.config = tcm::load_config(verify_config);
            options.inject_hamiltonian_fault = inject_fault;
            options.include_published = published;
            return tcm::cmd_verify(options, std::cout);
        } else if (sweep->parsed()) {
            std::ostringstream text;
            text << "family = " << family << "\nalpha = " << join(alphas) << "\nepsilon = " << join(epsilons)
                 << "\nT_max = " << tmax << "\nn_points = " << points << "\npath = " << path
                 << "\noutput_dir = " << out_dir << "\nemit_svg = " << (svg ? "true" : "false") << '\n';
            print_files(tcm::cmd_sweep(tcm::parse_config(text.str())));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
