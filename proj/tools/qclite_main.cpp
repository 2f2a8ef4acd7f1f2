// Copyright 2026 The qclite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qclite/cli/session.hpp"

int main(int argc, char** argv) {
    CLI::App app{"qclite: interpreter for a small quantum computation language"};
    qclite::SessionConfig config;
    std::vector<std::string> scripts;
    bool interactive = false;
    bool no_echo = false;
    bool no_checks = false;
    bool echo_input = false;

    app.add_option("-n,--qubits", config.total_qubits, "Number of machine qubits")
        ->check(CLI::Range(1, qclite::MachineState::kMaxTotalQubits));
    app.add_option("-s,--seed", config.seed, "Measurement RNG seed");
    app.add_option("--sim-limit", config.active_limit, "Most qubits the dense simulator may span")
        ->check(CLI::Range(1, 30));
    app.add_flag("-i", interactive, "Start the interactive loop after running scripts");
    app.add_flag("--no-echo", no_echo, "Do not print the state after each statement");
    app.add_flag("--no-checks", no_checks, "Skip emptiness checks on quvoid, quscratch and local registers");
    app.add_flag("--echo-input", echo_input, "Print each input line after its prompt");
    app.add_option("scripts", scripts, "Script files to run in order");
    CLI11_PARSE(app, argc, argv);

    config.checks = !no_checks;
    config.echo = false;
    try {
        qclite::Session session(config, std::cout);
        for (const auto& path : scripts) {
            const int status = qclite::run_script(session, path, std::cerr);
            if (status != 0)
                return status;
            if (session.exited())
                return 0;
        }
        if (!scripts.empty() && !interactive)
            return 0;
        session.set_echo(!no_echo);
        return qclite::repl_loop(session, std::cin, std::cout, echo_input || !isatty(STDIN_FILENO));
    } catch (const std::exception& e) {
        std::cerr << "qclite: " << e.what() << "\n";
        return 1;
    }
}
