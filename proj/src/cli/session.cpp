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

#include "qclite/cli/session.hpp"

#include <fstream>
#include <sstream>

#include "qclite/syntax/parser.hpp"

namespace qclite {

std::string echo_state(const MachineState& machine) {
    return "[" + std::to_string(machine.allocated_count()) + "/" + std::to_string(machine.total_qubits()) + "] " +
           machine.format_terms(true);
}

Session::Session(const SessionConfig& config, std::ostream& out)
    : out_(out), machine_(config.total_qubits, config.seed, config.active_limit), interp_(machine_, out),
      echo_(config.echo) {
    machine_.set_checks_enabled(config.checks);
    last_mutation_ = machine_.mutation_count();
    interp_.set_statement_hook([this](const ast::Stmt&) {
        const std::uint64_t now = machine_.mutation_count();
        if (echo_ && now != last_mutation_)
            out_ << echo_state(machine_) << "\n";
        last_mutation_ = now;
    });
}

bool Session::run_interactive(const std::string& text) {
    last_mutation_ = machine_.mutation_count();
    try {
        interp_.run_program(parse_interactive(text));
        return true;
    } catch (const Error& e) {
        out_ << "! " << e.what() << "\n";
    }
    last_mutation_ = machine_.mutation_count();
    return false;
}

void Session::run_script_source(const std::string& source) {
    last_mutation_ = machine_.mutation_count();
    interp_.run_program(parse_program(source));
}

namespace {

// Net count of '{' over '}' outside strings and comments.
int brace_balance(const std::string& text) {
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            if (c == '\\')
                ++i;
            else if (c == '"')
                in_string = false;
            continue;
        }
        if (c == '"')
            in_string = true;
        else if (c == '/' && i + 1 < text.size() && text[i + 1] == '/')
            while (i < text.size() && text[i] != '\n')
                ++i;
        else if (c == '{')
            ++depth;
        else if (c == '}')
            --depth;
    }
    return depth;
}

}  // namespace

int repl_loop(Session& session, std::istream& in, std::ostream& out, bool echo_input) {
    std::string buffer;
    std::string line;
    while (!session.exited()) {
        const char* prompt = buffer.empty() ? "qcl> " : "...> ";
        if (!echo_input)
            out << prompt << std::flush;
        if (!std::getline(in, line)) {
            if (!echo_input)
                out << "\n";
            break;
        }
        if (echo_input)
            out << prompt << line << "\n";
        buffer += line;
        buffer += "\n";
        if (brace_balance(buffer) > 0)
            continue;
        session.run_interactive(buffer);
        buffer.clear();
    }
    if (in.bad())
        return 1;
    return 0;
}

int run_script(Session& session, const std::string& path, std::ostream& err) {
    std::ifstream file(path);
    if (!file) {
        err << "qclite: " << Error(ErrorCode::Io, "cannot open '" + path + "'").what() << "\n";
        return 1;
    }
    std::ostringstream text;
    text << file.rdbuf();
    try {
        session.run_script_source(text.str());
    } catch (const Error& e) {
        err << path << (e.pos().valid() ? ":" : ": ") << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qclite
