#include <iostream>
#include <thread>

#include "vdw/acceptance.hpp"

int main() {
    vdw::AcceptanceOptions opt;
    opt.workers = std::max(1u, std::thread::hardware_concurrency());
    int failed = 0;
    const auto results = vdw::run_acceptance(opt, [&](const vdw::CriterionResult& r) {
        std::cout << vdw::format_result(r) << std::endl;
        if (!r.pass) ++failed;
    });
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
