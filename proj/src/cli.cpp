#include "nadslab/cli.hpp"

#include "nadslab/checkers.hpp"
#include "nadslab/config.hpp"
#include "nadslab/errors.hpp"
#include "nadslab/report.hpp"
#include "nadslab/rotation.hpp"
#include "nadslab/schedule.hpp"
#include "nadslab/word.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace nadslab::cli {

namespace {

struct Options {
    std::string verify_target;
    std::string emit_what;
    std::string point_text;
    unsigned block_index = 3;
    std::uint64_t scale_m = 1;
    std::uint64_t horizon = 50;
    std::uint64_t resolution = 6;
    std::uint64_t length = 0;
    std::size_t cap = default_materialization_cap;
    std::string format = "text";
    std::string out_path;
};

int write_payload(const std::string& payload, const Options& opt, std::ostream& out)
{
    if (opt.out_path.empty()) {
        out << payload;
        return 0;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
        throw Error("cannot open output file " + opt.out_path);
    }
    file << payload;
    return 0;
}

int finish_report(const Report& report, const Options& opt, std::ostream& out)
{
    const Json j = to_json(report);
    validate_report_json(j); // the CLI never emits schema-breaking output
    const std::string payload =
        opt.format == "structured" ? j.dump(2) + "\n" : to_text(report);
    write_payload(payload, opt, out);
    return exit_code_for(report);
}

Report run_verify(const Options& opt)
{
    BanksConfig config;
    config.resolution = opt.resolution;
    config.block_index = opt.block_index;
    config.horizon = opt.horizon;

    if (opt.verify_target == "claim1") {
        return mixing_sweep(opt.resolution);
    }
    if (opt.verify_target == "claim2") {
        if (!opt.point_text.empty()) {
            return verify_claim2(Point::parse(opt.point_text), opt.block_index, opt.horizon)
                .certificate;
        }
        return dense_periodic_points(opt.resolution, opt.block_index, opt.horizon);
    }
    if (opt.verify_target == "claim3") {
        return verify_claim3();
    }
    if (opt.verify_target == "example1") {
        return rotation_system_report(opt.horizon);
    }
    if (opt.verify_target == "banks") {
        return banks_hypotheses_report(config);
    }
    // "all": the consolidated shift-system report plus the rotation model.
    Report top;
    top.claim = "every verifier in the suite";
    top.parameters = {{"resolution", std::to_string(opt.resolution)},
                      {"block_index", std::to_string(opt.block_index)},
                      {"horizon", std::to_string(opt.horizon)}};
    top.sections.push_back(banks_hypotheses_report(config));
    top.sections.push_back(rotation_system_report(opt.horizon));
    top.pass = true;
    for (const Report& s : top.sections) {
        top.checked_items.push_back(
            Json{{"section", s.claim}, {"verdict", s.pass ? "pass" : "fail"}});
        top.pass = top.pass && s.pass;
    }
    return top;
}

std::string run_emit(const Options& opt)
{
    std::ostringstream line;
    if (opt.emit_what == "thue-morse") {
        line << thue_morse_prefix(static_cast<std::size_t>(opt.length)).str();
    } else if (opt.emit_what == "schedule") {
        const Schedule tm = Schedule::thue_morse();
        for (std::uint64_t i = 1; i <= opt.length; ++i) {
            line << (i > 1 ? " " : "") << tm.index_at(i);
        }
    } else if (opt.emit_what == "shift-amounts") {
        for (std::uint64_t i = 1; i <= opt.length; ++i) {
            line << (i > 1 ? " " : "") << shift_amount(i);
        }
    } else {
        for (std::uint64_t i = 1; i <= opt.length; ++i) {
            line << (i > 1 ? " " : "") << quad_exponent_at(i);
        }
    }
    return line.str();
}

int dispatch_emit(const Options& opt, std::ostream& out)
{
    const std::string sequence = run_emit(opt);
    if (opt.format == "structured") {
        Report r;
        r.claim = "emit " + opt.emit_what;
        r.parameters = {{"length", std::to_string(opt.length)}};
        r.witnesses.push_back(Json{{"sequence", sequence}});
        r.pass = true;
        return finish_report(r, opt, out);
    }
    write_payload(sequence + "\n", opt, out);
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"exact verification lab for scheduled shift systems"};
    app.require_subcommand(1);

    app.add_option("--cap", opt.cap, "materialization cap in symbols")
        ->envname("NADSLAB_CAP");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--out", opt.out_path, "write output to this file");

    CLI::App* verify = app.add_subcommand("verify", "run a verifier and report");
    verify->fallthrough();
    verify
        ->add_option("target", opt.verify_target,
                     "claim1 (mixing sweep), claim2 (periodic approximation), claim3 "
                     "(fixed orbits), example1 (rotation model), banks (consolidated "
                     "hypotheses), all")
        ->required()
        ->check(CLI::IsMember({"claim1", "claim2", "claim3", "example1", "banks", "all"}));
    verify->add_option("--point", opt.point_text, "point as \"u(v)\"");
    verify->add_option("--n", opt.block_index, "block index for periodic approximation");
    verify->add_option("--k", opt.horizon, "verification horizon");
    verify->add_option("--resolution", opt.resolution, "cylinder length for sweeps");

    CLI::App* emit = app.add_subcommand("emit", "print a driving sequence");
    emit->fallthrough();
    emit->add_option("what", opt.emit_what, "which sequence")
        ->required()
        ->check(CLI::IsMember({"thue-morse", "schedule", "shift-amounts", "exponents"}));
    emit->add_option("--length", opt.length, "number of elements")->required();

    CLI::App* witness = app.add_subcommand("witness", "construct a sensitivity witness");
    witness->fallthrough();
    witness->add_option("--point", opt.point_text, "point as \"u(v)\"")->required();
    witness->add_option("--m", opt.scale_m, "perturbation scale (radius 2^-m)")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        set_materialization_cap(opt.cap);
        if (verify->parsed()) {
            return finish_report(run_verify(opt), opt, out);
        }
        if (emit->parsed()) {
            return dispatch_emit(opt, out);
        }
        return finish_report(
            sensitivity_report(Point::parse(opt.point_text), opt.scale_m), opt, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const BlockMismatch& e) {
        err << "falsified: " << e.what() << "\n";
        return 1;
    } catch (const NoWitnessFound& e) {
        err << "falsified: " << e.what() << "\n";
        return 1;
    } catch (const OrbitNotClosed& e) {
        err << "unverifiable: " << e.what() << "\n";
        return 1;
    } catch (const TruncationExhausted& e) {
        err << "unverifiable: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace nadslab::cli
