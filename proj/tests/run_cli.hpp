// Helper for driving the built CLI binary from tests: runs a command line,
// captures stdout (stderr goes to a side file), and reports the exit code.
#ifndef ISING_TESTS_RUN_CLI_HPP
#define ISING_TESTS_RUN_CLI_HPP

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <unistd.h>

namespace clitest {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline RunResult run(const std::string& args)
{
    const std::string err_path
        = "/tmp/ising_cli_stderr." + std::to_string(getpid()) + ".txt";
    const std::string cmd = std::string(ISING_CLI_PATH) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + cmd);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_path);
    std::stringstream ss;
    ss << err.rdbuf();
    r.err = ss.str();
    return r;
}

inline int count_lines(const std::string& s)
{
    int n = 0;
    for (char c : s)
        if (c == '\n')
            ++n;
    return n;
}

} // namespace clitest

#endif
