#include <iostream>

#include "sgm/cli.hpp"

int main(int argc, char** argv) {
    try {
        const auto config = sgm::cli::parse_args(argc, argv);
        return sgm::cli::run(config);
    } catch (const sgm::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << sgm::cli::usage();
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
