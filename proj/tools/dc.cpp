#include <cstdio>
#include <string>
#include <vector>

#include "dc/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string out;
    int code = dc::cli::run_cli(args, out);
    std::fwrite(out.data(), 1, out.size(), stdout);
    return code;
}
