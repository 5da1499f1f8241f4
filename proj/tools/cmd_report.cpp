#include <fstream>
#include <memory>
#include <string>

#include "commands.hpp"
#include "trajlab/errors.hpp"

namespace trajlab::cli {

namespace {

struct ReportFlags {
    std::string dir;
};

nlohmann::json read_json_if_present(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return nullptr;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        throw IoError("cannot parse '" + path.string() + "' as JSON");
    }
    return j;
}

void run_report(const ReportFlags& flags, const GlobalOptions& global) {
    const std::filesystem::path dir =
        flags.dir.empty() ? resolve_out_dir(global.out_dir) : std::filesystem::path(flags.dir);
    nlohmann::json summary;
    summary["encoding"] = read_json_if_present(dir / "encoding_report.json");
    summary["repsim"] = read_json_if_present(dir / "repsim_summary.json");
    summary["ltc"] = {
        {"profile_signal", read_json_if_present(dir / "profile_signal.json")},
        {"profile_model", read_json_if_present(dir / "profile_model.json")},
        {"alignment", read_json_if_present(dir / "alignment.json")},
        {"dra", read_json_if_present(dir / "dra.json")},
    };
    summary["ground_truth"] = read_json_if_present(dir / "ground_truth.json");
    if (summary["encoding"].is_null() && summary["repsim"].is_null() &&
        summary["ltc"]["dra"].is_null()) {
        throw MissingFile("no stage outputs found in '" + dir.string() + "'");
    }
    write_json(dir / "summary.json", summary);
}

}  // namespace

void register_report(CLI::App& app, GlobalOptions& global, int& exit_code) {
    auto flags = std::make_shared<ReportFlags>();
    CLI::App* cmd = app.add_subcommand(
        "report", "concatenate stage outputs in a directory into summary.json");
    cmd->fallthrough();
    cmd->add_option("-d,--dir", flags->dir, "directory holding stage outputs "
                                            "(default: the output directory)");
    cmd->callback([flags, &global, &exit_code]() {
        exit_code = run_command([&]() { run_report(*flags, global); });
    });
}

}  // namespace trajlab::cli
