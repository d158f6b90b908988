// pslopes: batch front end for the p-adic slope library.

#include "pslopes/jobs.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace pslopes;

namespace {

std::optional<long> precision_from_env() {
    const char* s = std::getenv("PSLOPES_PRECISION");
    if (!s || !*s) return std::nullopt;
    Rational q = parse_rational(s);
    if (q.get_den() != 1 || q <= 0 || !q.get_num().fits_slong_p())
        throw SpecError("PSLOPES_PRECISION must be a positive integer");
    return q.get_num().get_si();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact p-adic invariants of differential modules on annuli"};
    app.set_help_flag("--help", "print this help");
    std::string command, spec, json_out, csv_out, gamma, beta, mode;
    std::vector<std::string> ts;
    long kmax = 0, q = 0, h = -1;
    app.add_option("command", command, "norms|radius|soluble|slope|newton|irr|index|frobenius|select|selftest")
        ->required()
        ->check(CLI::IsMember(job_commands()));
    app.add_option("--spec", spec, "job spec: JSON file or inline JSON");
    app.add_option("--t", ts, "t-sample as a rational string, repeatable (replaces params.t)");
    app.add_option("--kmax", kmax, "largest k for the Delta^k recursion");
    app.add_option("--q", q, "Frobenius degree");
    app.add_option("--h", h, "level for the L_h construction");
    app.add_option("--gamma", gamma, "gamma for operator norms");
    app.add_option("--beta", beta, "largest slope for the L_h construction");
    app.add_option("--mode", mode, "frobenius mode")->check(CLI::IsMember({"intertwiner", "inequality"}));
    app.add_option("--json", json_out, "write the JSON report here");
    app.add_option("--csv", csv_out, "write (t, rho_val) rows here");
    CLI11_PARSE(app, argc, argv);

    try {
        JobSpec job;
        if (command != "selftest") {
            if (spec.empty()) throw SpecError("--spec is required for " + command);
            job = parse_spec(spec, precision_from_env());
            if (!ts.empty()) {
                job.ts.clear();
                for (const auto& s : ts) {
                    Rational t = parse_rational(s);
                    if (!job.ann.contains(t)) throw SpecError("--t " + s + " is outside the annulus");
                    job.ts.push_back(t);
                }
            }
            if (kmax > 0) job.kmax = kmax;
            if (q > 0) job.q = q;
            if (h >= 0) job.h = h;
            if (!gamma.empty()) job.gamma = parse_rational(gamma);
            if (!beta.empty()) job.beta = parse_rational(beta);
            if (!mode.empty()) job.mode = mode;
        }
        JobOutput out = run_job(command, job);
        std::cout << out.text;
        if (!json_out.empty()) write_file(json_out, out.report.dump(2) + "\n");
        if (!csv_out.empty()) {
            std::string body;
            for (const auto& row : out.csv) {
                for (std::size_t i = 0; i < row.size(); ++i) body += (i ? "," : "") + row[i];
                body += "\n";
            }
            write_file(csv_out, body);
        }
        return out.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "pslopes: " << e.what() << "\n";
        return 2;
    }
}
