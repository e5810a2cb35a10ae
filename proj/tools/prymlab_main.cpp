#include "prymlab/job.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char **argv) {
    CLI::App app{"prymlab: exact Prym representation and cover analysis"};
    app.require_subcommand(1);

    CLI::App *run = app.add_subcommand("run", "run a JSON job file");
    std::string job_path;
    std::string format = "json";
    prymlab::JobOptions opts;
    run->add_option("job", job_path, "path to the job JSON file")->required();
    run->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    run->add_option("--cap", opts.cap, "group enumeration cap");
    run->add_option("--budget", opts.budget, "search budget");
    run->add_option("--seed", opts.seed, "seed for sampled checks");

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(job_path);
    if (!in) {
        std::cerr << "error: cannot open " << job_path << "\n";
        return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();

    try {
        auto start = std::chrono::steady_clock::now();
        std::string report = prymlab::run_job(ss.str(), opts);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (format == "json") {
            std::cout << report;
        } else {
            std::cout << prymlab::report_to_text(report);
            std::cout << "elapsed: " << elapsed << " ms\n";
        }
        return 0;
    } catch (const prymlab::SchemaError &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const prymlab::StageError &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
}
