#include <CLI11.hpp>

#include "cli_common.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "trajlab: representational and latent-trajectory similarity between an "
        "embedding tensor and a multichannel signal"};
    app.require_subcommand(1);

    trajlab::cli::GlobalOptions global;
    app.add_option("-o,--out", global.out_dir,
                   "output directory (default: $TRAJLAB_OUT or '.')")
        ->envname("TRAJLAB_OUT");
    app.add_flag("-v,--verbose", global.verbosity, "verbose progress on stderr");
    app.add_option("-j,--threads", global.threads, "worker threads within a stage")
        ->default_val(1);

    int exit_code = 0;
    trajlab::cli::register_synth(app, global, exit_code);
    trajlab::cli::register_encode(app, global, exit_code);
    trajlab::cli::register_repsim(app, global, exit_code);
    trajlab::cli::register_ltc(app, global, exit_code);
    trajlab::cli::register_report(app, global, exit_code);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return trajlab::cli::kExitUsage;
    }
    return exit_code;
}
