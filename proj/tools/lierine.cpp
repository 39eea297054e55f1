#include "lierine/cli.hpp"

#include "CLI11.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Chern characters and cohomology of Lie-Rinehart algebras, in exact arithmetic"};
    app.require_subcommand(1);

    std::string manifest_path;
    bool as_json = false;
    std::string regime;
    std::string module;
    std::vector<std::string> args;

    auto add = [&](const std::string& name, const std::string& help, const std::string& positional) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--manifest", manifest_path, "Manifest JSON file")->required();
        sub->add_flag("--json", as_json, "Print the JSON report instead of text");
        sub->add_option("--regime", regime, "finite or degree:D");
        if (!positional.empty())
            sub->add_option("args", args, positional)->required();
        return sub;
    };
    add("check", "Verify the Lie-Rinehart axioms and report module flatness", "");
    add("curvature", "Curvature of a module's connection", "Module label");
    add("chern", "Chern character of a module and its closedness", "Module label");
    add("cohomology", "Cochain dimensions, differential ranks and Betti numbers", "")
        ->add_option("--module", module, "Coefficient module (default: A)");
    add("compare", "Homotopy identities and primitives for ch differences", "Two module labels");
    add("k0", "Evaluate an expression in K0 and its Chern character", "Expression such as \"(A+B)*C\"");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        const lierine::Manifest manifest = lierine::parse_manifest(manifest_path);
        lierine::RunOptions options;
        options.args = args;
        if (!regime.empty())
            options.regime = regime;
        if (!module.empty())
            options.module = module;
        const lierine::Report report = lierine::run_subcommand(command, manifest, options);
        std::cout << (as_json ? lierine::render_json(report) : lierine::render_text(report));
        return report.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "lierine: error: " << e.what() << "\n";
        return 2;
    }
}
